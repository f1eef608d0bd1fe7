//! Exact rational arithmetic: polynomials in one and two variables,
//! truncated power series over polynomial coefficients, and Sturm chains.

mod binom;
mod bipoly;
mod interp;
mod series;
mod sturm;
mod unipoly;

pub use binom::{binom_int, binom_poly, factorial, guarded_product};
pub use bipoly::BiPoly;
pub use interp::lagrange_interpolate;
pub use series::{SeriesCoeff, TruncSeries};
pub use sturm::{squarefree_part, sturm_roots_in};
pub use unipoly::UniPoly;

pub type Int = num_bigint::BigInt;
pub type Rat = num_rational::BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub(crate) fn int_to_json(i: &Int) -> serde_json::Value {
    use num_traits::ToPrimitive;
    match i.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(i.to_string()),
    }
}

pub(crate) fn rat_to_json(r: &Rat) -> serde_json::Value {
    serde_json::Value::Array(vec![int_to_json(r.numer()), int_to_json(r.denom())])
}
