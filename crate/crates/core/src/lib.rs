pub mod algebra;
pub mod cli;
pub mod construct;
pub mod designs;
pub mod error;
pub mod geometry;
pub mod moments;
