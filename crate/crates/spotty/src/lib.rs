//! m-spotty weight enumerators of byte-organized linear codes over the chain
//! ring `R = F2[u]/<u^m>`, and the MacWilliams transform that turns a code's
//! weight distribution into its dual's enumerator.
//!
//! The pieces, bottom up:
//!
//! - [`ring`]: arithmetic in `R`, its ideal chain and the character `chi`.
//! - [`code`]: words split into bytes, generator matrices, spans and
//!   brute-force duals.
//! - [`weight`]: Hamming and m-spotty weights, α-vectors and distribution
//!   tables.
//! - [`poly`]: exact sparse polynomials with big-integer coefficients.
//! - [`macwilliams`]: the byte kernels `F_j(z)` and the transform itself.
//! - [`oracle`]: brute-force evaluations of every character sum the transform
//!   relies on, for testing and for `spotty verify`.
//! - [`matrix_file`]: the text format the CLI reads.
//!
//! ```
//! use spotty::{code, macwilliams, matrix_file, weight};
//!
//! let g = matrix_file::parse_matrix("
//!     m=4 b=3 t=2
//!     1 0 0  u+u2 0  0
//!     0 u 0  u2   0  u3
//!     0 0 u2 0    u3 0
//! ")?;
//! let c = code::span(&g, code::DEFAULT_SPAN_BUDGET)?;
//! assert_eq!(c.len(), 512);
//! assert_eq!(weight::enumerator(&c).to_string(), "1 + 10z + 183z^2 + 214z^3 + 104z^4");
//!
//! let dual = macwilliams::transform(&weight::distribution(&c), 512, 4)?;
//! assert_eq!(dual.to_string(), "1 + 85z + 3153z^2 + 9707z^3 + 19822z^4");
//! # Ok::<(), spotty::Error>(())
//! ```

pub mod code;
mod error;
pub mod macwilliams;
pub mod matrix_file;
pub mod oracle;
pub mod poly;
pub mod ring;
pub mod weight;

pub use code::{ByteLayout, GeneratorMatrix, LinearCode, Word};
pub use error::{Error, Result};
pub use poly::Polynomial;
pub use ring::{RingElement, RingParams};
pub use weight::{AlphaVector, DistributionTable};
