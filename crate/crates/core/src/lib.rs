//! Exact combinatorics of the binary deletion channel.
//!
//! A string `x` of length `m` is observed after `n - m` deletions from an
//! unknown `y` of length `n`. Every `y` containing `x` as a subsequence is a
//! candidate, weighted by its number of embeddings `ω_x(y)`; this crate
//! counts those embeddings, describes the candidate set `Υ_{n,x}` and
//! measures the entropy of the resulting posterior.
//!
//! ```
//! use delseq_core::{superspace, entropy, BitString};
//!
//! let x: BitString = "110".parse().unwrap();
//! let p = superspace::build_posterior(&x, 5).unwrap();
//! assert_eq!(p.len(), 16);
//! assert_eq!(p.mu().to_u64(), Some(40));
//! let h = entropy::entropy(&p, entropy::EntropyMeasure::Shannon);
//! assert!(h > 3.0 && h < 4.0);
//! ```

pub mod bits;
pub mod clustering;
pub mod count;
pub mod embeddings;
pub mod entropy;
mod error;
pub mod hws;
pub mod superspace;

pub use bits::{apply_g, hamming_weight, rle_decode, rle_encode, BitString, Rle};
pub use count::{binomial, BigCount};
pub use error::{Error, Result};
