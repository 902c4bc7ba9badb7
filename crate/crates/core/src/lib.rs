pub mod algebra;
pub mod cayley;
pub mod cli;
pub mod covering;
pub mod document;
pub mod error;
pub mod lefteig;
pub mod matrix;
pub mod morse;
pub mod tol;
