pub mod ball;
pub mod eigen;
pub mod formula;
pub mod ops;
pub mod oracle;
pub mod reduce;
pub mod ricci;
