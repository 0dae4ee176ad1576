pub mod catalog;
pub mod fixtures;
pub mod groupfile;
pub mod verify;

pub use catalog::{default_dir, generated, load_catalog, CatalogError};
pub use fixtures::{fixtures, parse_fixtures, FixtureError, FixtureRow};
pub use groupfile::{parse_group_file, Generator, GroupFile, GroupFileError};
pub use verify::{compare_row, verify_tables, Finding, Report, VerifyError};
