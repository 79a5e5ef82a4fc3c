//! Sparse multivariate series over arbitrary precision integers.
//!
//! A [`GradedSeries`] is a finite set of [`Monomial`]s whose grade under a
//! [`Grading`] lies in `0..=bound`. Variables of weight zero may carry
//! negative exponents, which is how reciprocal arguments such as `1/v` or
//! `1/x` are represented.

mod analogs;
mod grading;
mod monomial;
mod product;
mod series;
mod subst;
mod text;

pub use analogs::{
    gaussian_binomial, gaussian_poly, geom_inverse, multinomial_poly, pochhammer, pochhammer_inverse,
    poly_in, q_multinomial, Length,
};
pub use grading::Grading;
pub use monomial::{Exps, Monomial, Var, NVARS};
pub use product::{eval_sum, Factor, Product};
pub use series::{GradedSeries, RingOp};
pub use subst::Subst;
pub use text::{parse_exps, parse_monomial, parse_series, render_exps};
