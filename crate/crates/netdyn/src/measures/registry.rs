use super::measure::{EdgeModification, NormalizedSum, RelativeSum, SumDistance};
use super::{DistanceMeasure, MeasureError};

/// Name-keyed collection of [`DistanceMeasure`] strategies.
///
/// Iteration preserves registration order, so the built-in registry
/// always reports measures as sum, normalized_sum, relative_sum,
/// edge_modification.
pub struct MeasureRegistry {
    measures: Vec<Box<dyn DistanceMeasure + Send + Sync>>,
}

impl MeasureRegistry {
    /// A registry with nothing in it.
    pub fn empty() -> Self {
        MeasureRegistry { measures: Vec::new() }
    }

    /// The four built-in measures.
    pub fn with_builtin() -> Self {
        let mut registry = MeasureRegistry::empty();
        for measure in [
            Box::new(SumDistance) as Box<dyn DistanceMeasure + Send + Sync>,
            Box::new(NormalizedSum),
            Box::new(RelativeSum),
            Box::new(EdgeModification),
        ] {
            registry.register(measure).expect("built-in names are distinct");
        }
        registry
    }

    pub fn register(
        &mut self,
        measure: Box<dyn DistanceMeasure + Send + Sync>,
    ) -> Result<(), MeasureError> {
        let name = measure.name();
        if self.get(name).is_some() {
            return Err(MeasureError::DuplicateMeasureName(name));
        }
        self.measures.push(measure);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&dyn DistanceMeasure> {
        self.measures.iter().find(|m| m.name() == name).map(|m| &**m as &dyn DistanceMeasure)
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn DistanceMeasure> {
        self.measures.iter().map(|m| &**m as &dyn DistanceMeasure)
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.measures.iter().map(|m| m.name())
    }

    pub fn len(&self) -> usize {
        self.measures.len()
    }

    pub fn is_empty(&self) -> bool {
        self.measures.is_empty()
    }
}

impl Default for MeasureRegistry {
    fn default() -> Self {
        MeasureRegistry::with_builtin()
    }
}
