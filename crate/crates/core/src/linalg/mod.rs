//! Exact linear algebra: sparse integer matrices, Smith normal form, ranks
//! over the rationals and prime fields, and homology of boundary pairs.

mod elim;
pub mod field;
mod homology;
mod int;
mod ring;
mod smith;
mod sparse;

pub use homology::{homology_of_pair, rank, HomologySummary};
pub use int::Int;
pub use ring::{rational_to_int, Coefficients, Field, Integers, PrimeField, Rationals, Ring};
pub use smith::{
    integer_kernel_basis, rational_rank, smith_normal_form, smith_normal_form_with_transforms, SmithForm,
    Transforms,
};
pub use sparse::SparseMatrix;
