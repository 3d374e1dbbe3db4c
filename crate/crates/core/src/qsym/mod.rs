//! Quasi-symmetric functions in the `M`, `P` and `U` bases with their Hopf
//! structure.

pub mod convert;
pub mod hopf;
pub mod qsymfn;
pub mod word;

pub use convert::{m_to_p, p_to_m};
pub use hopf::{
    antipode_convolution, counit_left, counit_right, p_antipode, p_antipode_with, p_coproduct,
    p_product, tensor_product, AntipodeConvention,
};
pub use qsymfn::{unshift, Basis, QSymFn, Tensor};
pub use word::Word;
