pub mod assemble;
pub mod error;
pub mod families;
pub mod oracle;
pub mod sequences;
pub mod windmill;

pub use error::{Error, Result};
