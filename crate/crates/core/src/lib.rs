pub mod catalog;
pub mod dercalc;
pub mod error;
pub mod exactmat;
pub mod freenilp;
pub mod liecore;
pub mod sl2rep;

pub use error::{Error, Result};
