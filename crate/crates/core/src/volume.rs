//! The slice-volume function of the arbor polytope, computed through its
//! Laplace transform.
//!
//! The transform of the volume function is encoded as a polynomial in two
//! formal symbols: `E` for `exp(-v)` and `V` for `1/v`. A monomial
//! `V^k E^l` is the transform of the piece `(h - l)^(k-1) / (k-1)!`
//! supported on `h > l`, which is what makes the exact inverse transform a
//! monomial-wise rewrite.

use num_traits::{One, Zero};

use crate::algebra::{rat, BiPoly, Rat, UniPoly};
use crate::arbor::Arbor;
use crate::error::{Error, Result};
use crate::invariants;

/// Truncation to the window `[0, n]` on the transform side. Monomials are
/// keyed `(E-exponent, V-exponent)`; every V-exponent must be positive.
pub fn truncate(p: &BiPoly, n: u32) -> Result<BiPoly> {
    let mut out = BiPoly::zero();
    for (e, v, c) in p.terms() {
        if v == 0 {
            return Err(Error::ZeroVExponent);
        }
        if e >= n {
            continue;
        }
        out.add_term(c.clone(), e, v);
        // The tail beyond n re-expands around h = n:
        // subtract sum over j of (n-e)^(v-1-j)/(v-1-j)! V^(j+1) E^n.
        let mut factor = Rat::one();
        for idx in 0..v {
            let j = v - 1 - idx;
            out.add_term(-(c * &factor), n, j + 1);
            factor = factor * rat((n - e) as i64) / rat(idx as i64 + 1);
        }
    }
    Ok(out)
}

/// The Laplace polynomial, by the truncated product over subtrees times
/// the truncated simplex factor `V^r` of the root block.
pub fn laplace_poly(t: &Arbor) -> BiPoly {
    let n = t.size();
    let simplex = BiPoly::term(Rat::one(), 0, t.root_mult());
    let mut prod = truncate(&simplex, n).expect("positive V-exponent");
    for c in t.children() {
        prod = &prod * &laplace_poly(c);
    }
    truncate(&prod, n).expect("positive V-exponents")
}

/// Continuous piecewise-polynomial function on `[0, n]` with integer
/// breakpoints; piece `i` lives on `[i, i+1]`.
#[derive(Clone, PartialEq, Debug)]
pub struct PiecewisePoly {
    pieces: Vec<UniPoly>,
}

impl PiecewisePoly {
    pub fn pieces(&self) -> &[UniPoly] {
        &self.pieces
    }

    pub fn support_end(&self) -> usize {
        self.pieces.len()
    }

    /// Value at a point, zero outside `[0, n]`.
    pub fn eval(&self, h: &Rat) -> Rat {
        let n = rat(self.pieces.len() as i64);
        if h < &Rat::zero() || h > &n {
            return Rat::zero();
        }
        let idx = (h.to_integer().max(0.into()))
            .min((self.pieces.len() as i64 - 1).into());
        let idx: usize = idx.try_into().unwrap_or(0);
        self.pieces[idx].eval(h)
    }

    pub fn is_continuous(&self) -> bool {
        (1..self.pieces.len()).all(|i| {
            let at = rat(i as i64);
            self.pieces[i - 1].eval(&at) == self.pieces[i].eval(&at)
        })
    }

    pub fn integral(&self) -> Rat {
        let mut total = Rat::zero();
        for (i, p) in self.pieces.iter().enumerate() {
            let anti = integrate_poly(p);
            total += anti.eval(&rat(i as i64 + 1)) - anti.eval(&rat(i as i64));
        }
        total
    }
}

fn integrate_poly(p: &UniPoly) -> UniPoly {
    let mut coeffs = vec![Rat::zero()];
    for (k, c) in p.coeffs().iter().enumerate() {
        coeffs.push(c / rat(k as i64 + 1));
    }
    UniPoly::from_coeffs(coeffs)
}

/// `(h - l)^k / k!` as a polynomial in `h`.
fn shifted_power(l: u32, k: u32) -> UniPoly {
    let base = UniPoly::from_ints(&[-(l as i64), 1]);
    let mut p = base.pow(k as usize);
    let mut kfact = Rat::one();
    for i in 2..=k as i64 {
        kfact *= rat(i);
    }
    p = p.scale(&kfact.recip());
    p
}

/// Inverse transform of the Laplace polynomial: the volume of the height-h
/// slice, as one polynomial per unit interval of `[0, n]`.
pub fn volume_function(t: &Arbor) -> PiecewisePoly {
    let l = laplace_poly(t);
    let n = t.size();
    let pieces = (0..n)
        .map(|i| {
            let mut p = UniPoly::zero();
            for (e, v, c) in l.terms() {
                if e <= i {
                    p = &p + &shifted_power(e, v - 1).scale(c);
                }
            }
            p
        })
        .collect();
    PiecewisePoly { pieces }
}

/// The inverse transform summed over all monomials; vanishes identically
/// because the volume function is zero beyond the top height.
pub fn tail_sum(l: &BiPoly) -> UniPoly {
    let mut p = UniPoly::zero();
    for (e, v, c) in l.terms() {
        p = &p + &shifted_power(e, v - 1).scale(c);
    }
    p
}

/// Value of the transform at `v -> 0`: substitute the exponential series
/// for `E` and `1/v` for `V`; all negative powers of `v` must cancel and
/// the constant term is the volume.
pub fn laplace_limit(l: &BiPoly) -> Result<Rat> {
    let max_v = l.deg_b().unwrap_or(0) as usize;
    let order = max_v + 2;
    // Index p holds the coefficient of v^(p - max_v).
    let mut laurent = vec![Rat::zero(); max_v + order + 1];
    for (e, v, c) in l.terms() {
        let mut term = c.clone();
        for i in 0..=(order + v as usize) {
            let power = i as i64 - v as i64;
            if power <= order as i64 {
                laurent[(power + max_v as i64) as usize] += &term;
            }
            term = term * rat(-(e as i64)) / rat(i as i64 + 1);
        }
    }
    if laurent[..max_v].iter().any(|c| !c.is_zero()) {
        return Err(Error::NegativePowerResidue);
    }
    Ok(laurent[max_v].clone())
}

/// Volume of the polytope, by integrating the volume function; the
/// transform limit at `v -> 0` and the leading Ehrhart coefficient are
/// computed as cross-checks and must agree.
pub fn volume(t: &Arbor) -> Rat {
    let by_integration = volume_function(t).integral();
    let by_limit = laplace_limit(&laplace_poly(t)).expect("volume transform has no pole");
    assert_eq!(by_integration, by_limit, "volume routes disagree");
    let by_ehrhart = invariants::ehrhart(t)
        .leading()
        .expect("Ehrhart polynomial is nonzero")
        .clone();
    assert_eq!(by_integration, by_ehrhart, "volume differs from the leading Ehrhart coefficient");
    by_integration
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use crate::arbor::enumerate_arbors;

    fn running_example() -> Arbor {
        Arbor::parse("(2 (2) (1) (1))").unwrap()
    }

    fn lp(terms: &[(i64, u32, u32)]) -> BiPoly {
        // (numerator, E-exponent, V-exponent); denominators handled separately
        let mut p = BiPoly::zero();
        for &(c, e, v) in terms {
            p.add_term(rat(c), e, v);
        }
        p
    }

    #[test]
    fn truncation_kills_high_exponentials() {
        let p = BiPoly::term(Rat::one(), 3, 1); // V E^3
        assert!(truncate(&p, 3).unwrap().is_zero());
        assert!(truncate(&p, 2).unwrap().is_zero());
    }

    #[test]
    fn truncation_of_v_is_a_window() {
        let v = BiPoly::term(Rat::one(), 0, 1);
        let got = truncate(&v, 2).unwrap();
        assert_eq!(got, lp(&[(1, 0, 1), (-1, 2, 1)]));
    }

    #[test]
    fn truncation_of_v_squared() {
        let v2 = BiPoly::term(Rat::one(), 0, 2);
        let got = truncate(&v2, 2).unwrap();
        assert_eq!(got, lp(&[(1, 0, 2), (-1, 2, 2), (-2, 2, 1)]));
    }

    #[test]
    fn truncation_is_idempotent() {
        for n in 1..=5 {
            for t in enumerate_arbors(n) {
                let l = laplace_poly(&t);
                assert_eq!(truncate(&l, n).unwrap(), l, "{t}");
            }
        }
    }

    #[test]
    fn truncation_rejects_zero_v_exponent() {
        let p = BiPoly::term(Rat::one(), 1, 0);
        assert!(matches!(truncate(&p, 3), Err(Error::ZeroVExponent)));
    }

    #[test]
    fn laplace_of_single_vertex() {
        let l = laplace_poly(&Arbor::parse("(1)").unwrap());
        assert_eq!(l, lp(&[(1, 0, 1), (-1, 1, 1)]));
    }

    #[test]
    fn laplace_of_two_chain() {
        let l = laplace_poly(&Arbor::parse("(1 (1))").unwrap());
        assert_eq!(l, lp(&[(1, 0, 2), (-1, 1, 2), (-1, 2, 1)]));
    }

    #[test]
    fn laplace_of_running_example() {
        let mut want = lp(&[
            (-1, 4, 6),
            (2, 3, 6),
            (-2, 4, 5),
            (4, 3, 5),
            (-2, 6, 2),
            (-2, 1, 6),
            (-2, 2, 5),
            (1, 0, 6),
        ]);
        want.add_term(ratio(-22, 3), 6, 1);
        assert_eq!(laplace_poly(&running_example()), want);
    }

    #[test]
    fn volume_function_of_single_vertex() {
        let vf = volume_function(&Arbor::parse("(1)").unwrap());
        assert_eq!(vf.pieces(), &[UniPoly::one()]);
    }

    #[test]
    fn volume_function_of_two_chain() {
        // Slices of the trapezoid: width h up to height 1, then constant 1.
        let vf = volume_function(&Arbor::parse("(1 (1))").unwrap());
        assert_eq!(vf.pieces(), &[UniPoly::from_ints(&[0, 1]), UniPoly::one()]);
        assert_eq!(vf.integral(), ratio(3, 2));
    }

    #[test]
    fn volume_function_of_running_example() {
        let vf = volume_function(&running_example());
        assert_eq!(
            vf.pieces()[0],
            UniPoly::monomial(ratio(1, 120), 5),
        );
        let tail = UniPoly::from_coeffs(vec![ratio(-14, 3), rat(2)]);
        assert_eq!(vf.pieces()[4], tail);
        assert_eq!(vf.pieces()[5], tail);
    }

    #[test]
    fn volume_function_is_continuous_and_vanishes_beyond_the_top() {
        for n in 1..=5 {
            for t in enumerate_arbors(n) {
                assert!(volume_function(&t).is_continuous(), "{t}");
                assert!(tail_sum(&laplace_poly(&t)).is_zero(), "{t}");
            }
        }
    }

    #[test]
    fn volume_examples() {
        assert_eq!(volume(&Arbor::parse("(1)").unwrap()), rat(1));
        assert_eq!(volume(&running_example()), ratio(83, 6));
        assert_eq!(
            volume(&Arbor::parse("(2 (2 (1 (1))))").unwrap()),
            ratio(20167, 720)
        );
        assert_eq!(
            volume(&Arbor::parse("(1 (1 (2 (2))))").unwrap()),
            ratio(21552, 720)
        );
    }

    #[test]
    fn volume_routes_agree_on_a_sweep() {
        // volume() itself asserts the integral, transform-limit and
        // Ehrhart routes coincide.
        for n in 1..=5 {
            for t in enumerate_arbors(n) {
                let v = volume(&t);
                assert!(v > Rat::zero(), "{t}");
            }
        }
    }

    #[test]
    fn laplace_limit_detects_poles() {
        // 1/v^2 alone has no finite limit encoded this way.
        let p = BiPoly::term(Rat::one(), 0, 2);
        assert!(matches!(laplace_limit(&p), Err(Error::NegativePowerResidue)));
    }
}
