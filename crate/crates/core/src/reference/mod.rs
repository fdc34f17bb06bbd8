//! Reference values transcribed from printed tables, for comparison with
//! the computed ones.

pub mod displays;
pub mod tables;

pub use tables::{
    abstract_table, abstract_tables, compare_abstract_table, AbstractTable, Erratum, TableComparison, ERRATA,
};
