//! The published-table corpus, its verification pipeline and the seeded
//! search.

pub mod corpus;
pub mod search;
pub mod verify;

pub use corpus::{lint, Corpus, Expected, LintIssue, RowKind, TableRow};
pub use search::{corrupt, search, RaMode, SearchConfig, SearchHit, SearchResult};
pub use verify::{verify_all, verify_corpus, verify_row, RowReport, Status, VerificationReport, VerifyOptions};
