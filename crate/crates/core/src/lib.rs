//! Slice-regular quaternionic functions: the `*`-product, the
//! `*`-exponential and `*`-logarithms built case by case, with numerical
//! lifts through the covering maps involved.

pub mod cli;
pub mod domain;
pub mod error;
pub mod exp;
pub mod expr;
pub mod lift;
pub mod log;
pub mod parse;
pub mod quaternion;
pub mod special;
pub mod star;
pub mod vectorial;
pub mod verify;

pub use domain::{BasicDomainSpec, DomainKind, Rect};
pub use error::{Error, Result};
pub use expr::{SliceExpr, StemValue};
pub use parse::parse_expr;
pub use quaternion::{ImaginaryUnit, Quaternion};
