//! Exact matrices over `R`, `C`, `H` and the doubled rings `²R`, `²H`.

mod linalg;
mod matrix;
mod scalar;

pub use linalg::{char_poly, charpoly_block, det_block, eval_poly_at, mat_det, mat_inverse, mat_inverse_block};
pub use matrix::{mat_add, mat_mul, mat_sub, real_block, ring_embed_real, Mat, Ring, RingMatrix};
pub use scalar::{Base, RingScalar};
