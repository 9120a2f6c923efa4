//! Infinite products of rational functions in closed form and by truncation.

mod poly;
mod product;

pub use poly::{poly_roots, root_multiplicities, InverseZPolynomial, MAX_DEGREE};
pub use product::{
    closed_form_from_roots, factorization, integer_root_from_roots, partial_product,
    product_closed_form, product_mathworld_form, product_with_integer_root,
};
