pub mod error;
pub mod freealg;
pub mod gsb;
pub mod hnn;
pub mod linalg;
pub mod operads;
pub mod replication;
pub mod table;
pub mod words;

pub use error::{Error, Result};
