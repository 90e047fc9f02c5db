//! Catalog files, verification against the reference tables, the parallel
//! enumeration driver and the report formatting behind the `eqlines` binary.

pub mod catalog;
pub mod driver;
pub mod error;
pub mod inspect;
pub mod verify;

pub use catalog::{read_catalog, read_level, summary_path, write_catalog, write_summary, Catalog};
pub use driver::enumerate;
pub use error::{AppError, ExitStatus};
pub use inspect::inspect;
pub use verify::{verify_catalog, Check, Report};
