pub mod accept;
pub mod dynamics;
pub mod error;
pub mod fp;
pub mod gb;
pub mod gf;
pub mod interval;
pub mod lattice;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod surface;
pub mod tensor;
pub mod upoly;

pub use error::{Error, Result};
