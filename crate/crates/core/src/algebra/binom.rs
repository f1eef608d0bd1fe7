use num_traits::{One, Zero};

use super::{Int, Rat, UniPoly};

/// Binomial coefficient for integer arguments, extended the usual way:
/// zero for `k < 0`, and the falling-factorial formula for negative `n`
/// (so `binom(-1, 0) = 1`).
pub fn binom_int(n: i64, k: i64) -> Int {
    if k < 0 {
        return Int::zero();
    }
    let mut c = Int::one();
    for i in 0..k {
        c = c * Int::from(n - i) / Int::from(i + 1);
    }
    c
}

pub fn factorial(n: u32) -> Int {
    let mut f = Int::one();
    for i in 2..=n as i64 {
        f *= Int::from(i);
    }
    f
}

/// `binom(a + l - 1, l)` for a polynomial argument `a`: the product
/// `a (a+1) ... (a+l-1) / l!`. Counts height-`l` points of a simplicial
/// cone when `a` specializes to the number of coordinates.
pub fn binom_poly(a: &UniPoly, l: u32) -> UniPoly {
    let mut p = UniPoly::one();
    for i in 0..l as i64 {
        p = &p * &(a + &UniPoly::constant(super::rat(i)));
    }
    p.scale(&Rat::from_integer(factorial(l)).recip())
}

/// Product `alpha(2) * ... * alpha(l)` with the guarded convention:
/// empty (one) at `l = 1`, and the reciprocal of the skipped leading
/// factors below that, so the value at `l = 0` is `1 / alpha(1)`.
pub fn guarded_product(l: i64, alpha: impl Fn(i64) -> Rat) -> Rat {
    let mut p = Rat::one();
    if l >= 1 {
        for r in 2..=l {
            p *= alpha(r);
        }
    } else {
        for r in (l + 1)..=1 {
            p /= alpha(r);
        }
    }
    p
}
