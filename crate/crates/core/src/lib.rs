//! Exact enumeration of words by their period and border structure, and
//! certified evaluation of the limiting distribution of the longest border.
//!
//! * [`word`]: borders, periods and their canonical sets.
//! * [`oracle`]: brute-force enumeration of all words, used as ground truth.
//! * [`fw`]: the number of letters `c(P, n)` of the maximal word with periods `P`.
//! * [`counting`]: exact counts `F_l(P, n)` and distributions at fixed length.
//! * [`asymptotics`]: limits as `n -> infinity` with rigorous error radii.
//!
//! ```
//! use borderstat::counting::Counter;
//!
//! let counter = Counter::new(2).unwrap();
//! let dist = counter.exact_distribution(4).unwrap();
//! assert_eq!(dist.counts, [6u32, 6, 2, 2].map(Into::into));
//! ```

pub mod asymptotics;
pub mod counting;
pub mod decimal;
pub mod error;
pub mod fw;
pub mod oracle;
pub mod word;

pub use asymptotics::{EvalConfig, Evaluation, Method};
pub use counting::{Counter, ExactDistribution};
pub use decimal::ErrDecimal;
pub use error::{Error, Result};
pub use fw::{c_recursive, fw_word, FwWord};
pub use oracle::{DistributionTable, EnumBudget};
pub use word::{BorderSet, PeriodSet, Word};
