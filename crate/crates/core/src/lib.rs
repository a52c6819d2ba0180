pub mod algebra;
pub mod convolution;
pub mod error;
pub mod group;
pub mod groupoid;
pub mod hpar;
pub mod hopf;
pub mod linalg;
pub mod partial_action;
pub mod poly;
pub mod scalar;
pub mod smash;
pub mod suites;

pub use error::{Error, Result};
pub use scalar::Scalar;
