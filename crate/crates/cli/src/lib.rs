//! Command-line front end for `lindet`: text formats for forms, points and
//! representations, and the `lindet` command dispatcher.

pub mod app;
pub mod format;

pub use app::{dispatch, Outcome};
