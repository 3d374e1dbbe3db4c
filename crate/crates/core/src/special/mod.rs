//! The maps `tau`, `xi`, `theta` out of quasi-symmetric functions and the
//! characters `zeta` and `gamma`.

pub mod bjr;
pub mod characters;
pub mod tau;
pub mod theta;

pub use bjr::bjr_f;
pub use characters::{gamma, gamma_char, zeta_mat, CharValue};
pub use tau::{tau, tau_p_vector, tau_product_defect, xi, TauCache};
pub use theta::theta_map;
