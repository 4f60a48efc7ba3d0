//! Generalized algebraic geometry codes over the rational function field
//! `F_q(x)`.
//!
//! The construction evaluates polynomials of degree at most `deg G` at places
//! of arbitrary degree and repacks each residue value into `deg P` symbols
//! over `F_q`. Decoding lifts a received word into `F_{q^m}^n`, runs a
//! Reed-Solomon decoder on the lifted word, checks Frobenius consistency,
//! and projects back.
//!
//! Modules:
//! - [`field`]: the tower `F_p ⊂ F_q ⊂ F_{q^m}`, subfield embeddings,
//!   Frobenius, polynomials.
//! - [`places`]: places of `F_q(x)` and their extensions in the constant
//!   field extension.
//! - [`code`]: the code object, encoder, and residue-basis maps.
//! - [`codespec`]: the text format describing a code.
//! - [`decoder`]: the lifting decoder.
//! - [`bounds`]: designed distance and correctable-error formulas.
//! - [`bch`]: cyclotomic cosets and best-BCH-bound curves for comparison.
//!
//! ```
//! use gagc::{CodeSpec, decoder};
//!
//! let spec = CodeSpec::parse("p = 17\ne = 1\ng = 13\ndegrees = 1:17, 4:1\n")?;
//! let code = spec.build()?;
//! assert_eq!((code.n(), code.k(), code.designed_distance()), (21, 14, 5));
//!
//! let msg = gagc::Message(vec![code.tower().one(1); code.k()]);
//! let sent = code.encode(&msg)?;
//! let outcome = decoder::decode(&code, sent.as_slice());
//! assert!(outcome.is_success());
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod bch;
pub mod bounds;
pub mod code;
pub mod codespec;
pub mod decoder;
pub mod field;
mod linalg;
pub mod places;

pub use bounds::{correctable_errors, designed_distance, min_cover, BreakDegree, DegreeProfile};
pub use code::{Codeword, GagCode, Message};
pub use codespec::CodeSpec;
pub use decoder::{decode, DecodeFailure, DecodeOutcome, LiftedWord};
pub use field::{FieldElem, FieldTower, Poly};
pub use places::{Divisor, Place, PlaceKind};
