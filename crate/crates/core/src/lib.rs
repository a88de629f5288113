pub mod algebra;
pub mod catalog;
pub mod coideal;
pub mod element;
pub mod error;
pub mod expr;
pub mod graded;
pub mod hopf;
pub mod lantern;
pub mod linalg;
mod memo;
pub mod monomial;
pub mod nakayama;
pub mod scalar;
pub mod tensor;

pub use error::{Error, Result};
