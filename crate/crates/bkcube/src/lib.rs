//! Command-line front end for `bkcube-core`: script runner, the
//! verification battery, and the markdown/JSON trace formats.

pub mod commands;
pub mod markdown;
pub mod battery;
pub mod trace;

pub use commands::{Format, Streams, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
pub use trace::TraceDocument;
