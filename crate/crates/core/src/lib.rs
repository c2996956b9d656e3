//! Exact workbench for monomorphism categories of n-cluster tilting
//! subcategories: finite-dimensional algebras over prime fields, their
//! module categories, functor categories, and the functors relating them.

pub mod algebra;
pub mod cli;
pub mod cluster;
pub mod error;
pub mod functcat;
pub mod linalg;
pub mod modcat;
pub mod paperfun;
pub mod theorems;

pub use error::{Error, Result};
