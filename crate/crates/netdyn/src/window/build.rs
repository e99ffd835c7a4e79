use std::collections::HashMap;

use crate::graph::{GraphSnapshot, NodeId};

use super::Window;

/// Builds the weighted snapshot of one window.
///
/// Everyone who sent or received becomes a node. The edge `x -> y`
/// carries the share of `x`'s messages in this window that went to `y`,
/// so each sender's outgoing weights sum to 1 and a sender with a single
/// correspondent gets one edge of weight 1. Recipients who never sent
/// appear as nodes without outgoing edges.
///
/// Panics if the window contains a self-loop event; ingestion drops
/// those before windows are built.
pub fn build_snapshot(window: &Window<'_>) -> GraphSnapshot {
    let mut sent_total: HashMap<&NodeId, u64> = HashMap::new();
    let mut sent_pair: HashMap<(&NodeId, &NodeId), u64> = HashMap::new();
    let mut snapshot = GraphSnapshot::new();

    for event in window.events {
        *sent_total.entry(&event.sender).or_insert(0) += 1;
        *sent_pair.entry((&event.sender, &event.recipient)).or_insert(0) += 1;
        if !snapshot.contains_node(&event.sender) {
            snapshot.add_node(event.sender.clone());
        }
        if !snapshot.contains_node(&event.recipient) {
            snapshot.add_node(event.recipient.clone());
        }
    }

    for ((from, to), pair_count) in sent_pair {
        let weight = pair_count as f64 / sent_total[from] as f64;
        snapshot
            .add_edge(from.clone(), to.clone(), weight)
            .expect("window events are self-loop-free, so counted weights lie in (0, 1]");
    }
    snapshot
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::window::EventRecord;

    fn n(s: &str) -> NodeId {
        NodeId::new(s).unwrap()
    }

    fn window(events: &[EventRecord]) -> Window<'_> {
        Window { index: 1, start: 0, end: 86_400, events }
    }

    fn ev(from: &str, to: &str, ts: i64) -> EventRecord {
        EventRecord::new(n(from), n(to), ts).unwrap()
    }

    #[test]
    fn weights_are_shares_of_the_senders_messages() {
        // x sends three messages to y and one to z
        let events = [ev("x", "y", 0), ev("x", "y", 10), ev("x", "z", 20), ev("x", "y", 30)];
        let g = build_snapshot(&window(&events));
        assert_eq!(g.weight(&n("x"), &n("y")), Some(0.75));
        assert_eq!(g.weight(&n("x"), &n("z")), Some(0.25));
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn single_message_gives_weight_one() {
        let events = [ev("a", "b", 5)];
        let g = build_snapshot(&window(&events));
        assert_eq!(g.weight(&n("a"), &n("b")), Some(1.0));
    }

    #[test]
    fn recipients_become_nodes_without_outgoing_edges() {
        let events = [ev("a", "b", 0)];
        let g = build_snapshot(&window(&events));
        assert!(g.contains_node(&n("b")));
        assert!(g.edges().all(|(from, _, _)| from == &n("a")));
    }

    #[test]
    fn empty_window_gives_empty_snapshot() {
        let g = build_snapshot(&window(&[]));
        assert!(g.is_empty());
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn each_senders_outgoing_weights_sum_to_one() {
        let events = [
            ev("a", "b", 0),
            ev("a", "c", 1),
            ev("a", "b", 2),
            ev("b", "a", 3),
            ev("b", "c", 4),
            ev("b", "d", 5),
            ev("c", "a", 6),
        ];
        let g = build_snapshot(&window(&events));
        for sender in ["a", "b", "c"] {
            let total: f64 =
                g.edges().filter(|(from, _, _)| from.as_str() == sender).map(|(_, _, w)| w).sum();
            assert!((total - 1.0).abs() <= 1e-9, "sender {sender} sums to {total}");
        }
    }
}
