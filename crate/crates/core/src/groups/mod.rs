pub mod covers;
pub mod dihedral;
pub mod embed;
pub mod matrix_rep;
pub mod table;
pub mod window;
pub mod zphi;
