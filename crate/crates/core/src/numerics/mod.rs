//! Small numerical toolbox: bracketing root finder, quadrature rules,
//! scalar minimization and the special functions the models need.

pub mod minimize;
pub mod quadrature;
pub mod roots;
pub mod special;

pub use minimize::golden_section_minimize;
pub use quadrature::{linspace, midpoint, midpoint_nodes};
pub use roots::{bisect, find_roots, scan_sign_changes};
pub use special::{hermite_function, hermite_functions, sinc};
