//! Young walls, crystals, Fock space actions and global bases for the
//! quantum affine algebra `U_q(C₂⁽¹⁾)` at level one.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised bottom-up:
//!
//! * [`algebra`] — exact Laurent polynomials over ℤ, quantum integers and the
//!   Cartan datum with weight bookkeeping;
//! * [`youngwall`] — Young-wall combinatorics: patterns, properness,
//!   reducedness, orders, ladders, peeling and reduced forms;
//! * [`crystal`] — signatures, Kashiwara operators, crystal graphs and maximal
//!   vectors;
//! * [`fock`] — the Fock space action of `eᵢ`, `fᵢ`, `qʰ` with divided powers
//!   and executable relation checks;
//! * [`globalbasis`] — the monomial basis `A(Y)`, closed-form coefficients and
//!   the triangular correction producing global basis elements `G(Y)`;
//! * [`verify`] — exhaustive relation and property suites.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod crystal;
pub mod error;
pub mod fock;
pub mod globalbasis;
pub mod verify;
pub mod youngwall;

pub use algebra::{Index, LaurentPoly, Weight};
pub use error::Error;
pub use fock::FockVector;
pub use youngwall::{GroundState, YoungWall};
