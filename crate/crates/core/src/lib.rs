pub mod analysis;
pub mod error;
pub mod exactalg;
pub mod families;
pub mod operators;
pub mod random;
pub mod report;
pub mod sequence;
pub mod sheffer;
pub mod symfunc;

pub use error::Error;
