pub mod degree;
pub mod gamma;
pub mod graph;
