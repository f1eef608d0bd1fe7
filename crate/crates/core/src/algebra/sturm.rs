use num_traits::Zero;

use super::{Rat, UniPoly};
use crate::error::{Error, Result};

/// The radical of `p`: `p / gcd(p, p')`, monic. Shares the roots of `p`
/// without multiplicities.
pub fn squarefree_part(p: &UniPoly) -> UniPoly {
    let g = p.gcd(&p.derivative());
    if g.degree() == Some(0) {
        return p.monic();
    }
    let (q, r) = p.div_rem(&g);
    debug_assert!(r.is_zero());
    q.monic()
}

fn sturm_chain(p: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        chain.push(-&r);
    }
}

/// Sign variations of the chain at `x`, zero entries dropped. With the
/// convention of dropping zeros this equals the variation count just to
/// the right of `x`, so `V(a) - V(b)` counts distinct roots in `(a, b]`.
fn variations_at(chain: &[UniPoly], x: &Rat) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None;
    for q in chain {
        let v = q.eval(x);
        if v.is_zero() {
            continue;
        }
        let s = v > Rat::zero();
        if let Some(prev) = last {
            if prev != s {
                count += 1;
            }
        }
        last = Some(s);
    }
    count
}

/// Exact count of distinct real roots of `p` in the interval from `a` to
/// `b`, with each endpoint included or not.
pub fn sturm_roots_in(
    p: &UniPoly,
    a: &Rat,
    b: &Rat,
    include_a: bool,
    include_b: bool,
) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a > b {
        return Err(Error::EmptyInterval);
    }
    let q = squarefree_part(p);
    if a == b {
        let at = q.eval(a).is_zero() && include_a && include_b;
        return Ok(at as usize);
    }
    let chain = sturm_chain(&q);
    // Roots in the half-open interval (a, b].
    let mut count = variations_at(&chain, a) - variations_at(&chain, b);
    if include_a && q.eval(a).is_zero() {
        count += 1;
    }
    if !include_b && q.eval(b).is_zero() {
        count -= 1;
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::super::{rat, ratio};
    use super::*;

    #[test]
    fn double_root_counts_once() {
        // (u + 1)^2 has the single distinct root -1, inside [-1, 0).
        let p = UniPoly::from_ints(&[1, 2, 1]);
        let n = sturm_roots_in(&p, &rat(-1), &rat(0), true, false).unwrap();
        assert_eq!(n, 1);
    }

    #[test]
    fn two_roots_in_unit_interval() {
        // (3u^2 + 5u + 2)/2 = (3u + 2)(u + 1)/2 has roots -1 and -2/3.
        let p = UniPoly::from_coeffs(vec![rat(1), ratio(5, 2), ratio(3, 2)]);
        let n = sturm_roots_in(&p, &rat(-1), &rat(0), true, false).unwrap();
        assert_eq!(n, 2);
    }

    #[test]
    fn no_real_roots() {
        let p = UniPoly::from_ints(&[1, 0, 1]);
        let n = sturm_roots_in(&p, &rat(-1), &rat(0), true, false).unwrap();
        assert_eq!(n, 0);
    }

    #[test]
    fn endpoint_handling() {
        // Roots 0 and 1.
        let p = UniPoly::from_ints(&[0, -1, 1]);
        let count = |ia, ib| sturm_roots_in(&p, &rat(0), &rat(1), ia, ib).unwrap();
        assert_eq!(count(true, true), 2);
        assert_eq!(count(false, true), 1);
        assert_eq!(count(true, false), 1);
        assert_eq!(count(false, false), 0);
    }

    #[test]
    fn zero_polynomial_rejected() {
        let r = sturm_roots_in(&UniPoly::zero(), &rat(0), &rat(1), true, true);
        assert!(matches!(r, Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn random_products_of_linear_factors() {
        // Deterministic pseudo-random integer roots; count those in [0, 20).
        let mut seed = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for _ in 0..40 {
            let mut p = UniPoly::one();
            let mut inside = std::collections::HashSet::new();
            for _ in 0..5 {
                let r = (next() % 41) as i64 - 10;
                p = &p * &UniPoly::from_ints(&[-r, 1]);
                if (0..20).contains(&r) {
                    inside.insert(r);
                }
            }
            let n = sturm_roots_in(&p, &rat(0), &rat(20), true, false).unwrap();
            assert_eq!(n, inside.len());
        }
    }
}
