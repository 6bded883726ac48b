pub mod blocked;
pub mod constructions;
pub mod error;
pub mod geom;
pub mod search;
pub mod visibility;

pub use error::{Error, Result};
