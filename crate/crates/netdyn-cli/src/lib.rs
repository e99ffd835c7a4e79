//! Library side of the `netdyn` binary: the file-in, files-out pipeline
//! plus the text and SVG renderers it writes with. Lives in a lib so the
//! integration tests can drive the pieces directly.

pub mod pipeline;
pub mod report;
pub mod svg;
