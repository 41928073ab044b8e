//! Batch harness around the `siglat` analyses: group files, partition
//! lists, the built-in corpus, parallel runs and JSON/Markdown reports.

pub mod corpus;
pub mod error;
pub mod input;
pub mod report;
pub mod run;

pub use corpus::{builtin_corpus, GroupSpec};
pub use error::CliError;
pub use report::{AnalysisReport, BatchReport, HuntReport};
pub use run::{analyze_group, run_batch, run_hunt};
