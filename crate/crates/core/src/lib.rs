//! Counting, exhaustive enumeration and uniform sampling of closed linear
//! and affine lambda terms in de Bruijn notation.
//!
//! Terms are grown from SwissCheeses, terms with holes indexed by level.
//! Counting by size and characteristic (holes per level) gives exact
//! sequences for three size models, the same decomposition drives
//! enumeration and unranking, and a brute-force [`oracle`] checks all of it.

pub mod characteristic;
pub mod cli;
pub mod count;
pub mod error;
pub mod generate;
pub mod normal;
pub mod oracle;
pub mod refdata;
pub mod sample;
pub mod syntax;
pub mod term;

pub use characteristic::Characteristic;
pub use count::{count, count_closed, count_kind, series, CountKey, Counter};
pub use error::{Error, Result};
pub use generate::{enumerate, enumerate_closed};
pub use normal::{count_neutral, count_nf};
pub use oracle::{oracle_count, oracle_enumerate, oracle_enumerate_closed, OracleBudget};
pub use refdata::{reference, verify, ReferenceTable, Report};
pub use sample::{sample, unrank, unrank_closed, Sampler, SamplerConfig};
pub use syntax::parse_debruijn;
pub use term::{Cheese, Family, Kind, SizeModel, Term, TermClass};
