//! Library half of the surplab command-line tool: report schema, JSON
//! serialization with pinned float formatting, and the property
//! verification suites that back `surplab verify`.

pub mod app;
pub mod report;
pub mod suites;
