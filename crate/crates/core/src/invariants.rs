//! Recursive invariants of the arbor polytope and poset: the height-graded
//! point counts of dilates, the Ehrhart polynomial, the refined Zeta
//! polynomial, the K-polynomial with the derived M-triangle, f- and
//! h-vectors, transmutation, and the birational triangle conversions.
//!
//! Every recursion works along the projection that forgets the root-block
//! coordinates: the fiber over a point of total height `h` in the product
//! of subtree polytopes is the simplex of root blocks with sum at most
//! `size - h`, and the empty product makes single-vertex arbors the base
//! case for free.

use num_traits::Zero;

use crate::algebra::{
    binom_int, binom_poly, lagrange_interpolate, rat, squarefree_part, sturm_roots_in, BiPoly,
    Rat, UniPoly,
};
use crate::arbor::Arbor;
use crate::error::{Error, Result};

/// A two-variable polynomial with the size parameter that the birational
/// conversions need.
#[derive(Clone, PartialEq, Debug)]
pub struct Triangle {
    pub poly: BiPoly,
    pub size: usize,
}

impl Triangle {
    pub fn new(poly: BiPoly, size: usize) -> Triangle {
        Triangle { poly, size }
    }

    /// The univariate polynomial collecting the equal-exponent coefficients.
    pub fn diagonal(&self) -> UniPoly {
        let n = self.poly.deg_a().unwrap_or(0).max(self.poly.deg_b().unwrap_or(0));
        UniPoly::from_coeffs((0..=n).map(|k| self.poly.coeff(k, k)).collect())
    }
}

/// Lattice points of the `m`-th dilate counted with weight `X^height`.
pub fn f_height_poly(t: &Arbor, m: u32) -> UniPoly {
    if m == 0 {
        return UniPoly::one();
    }
    let mut w = UniPoly::one();
    for c in t.children() {
        w = &w * &f_height_poly(c, m);
    }
    let n = t.size() as i64;
    let r = t.root_mult() as i64;
    let cap = m as i64 * n;
    let w_deg = w.degree().expect("dilate counts never vanish") as i64;
    let mut coeffs = Vec::with_capacity(cap as usize + 1);
    for j in 0..=cap {
        let mut c = Rat::zero();
        for l in 0.max(j - w_deg)..=j {
            c += Rat::from_integer(binom_int(r + l - 1, l)) * w.coeff((j - l) as usize);
        }
        coeffs.push(c);
    }
    UniPoly::from_coeffs(coeffs)
}

/// Ehrhart polynomial, interpolated from the dilate counts at 0..=size.
pub fn ehrhart(t: &Arbor) -> UniPoly {
    let n = t.size();
    let mut nodes = vec![(rat(0), rat(1))];
    for m in 1..=n {
        nodes.push((rat(m as i64), f_height_poly(t, m).eval(&rat(1))));
    }
    lagrange_interpolate(&nodes).expect("nodes are distinct")
}

/// Refined Zeta polynomial as the list of its coefficients by the height
/// of the top chain element; entry `j` is a polynomial in `u`.
pub fn zeta_refined_by_height(t: &Arbor) -> Vec<UniPoly> {
    let mut w = vec![UniPoly::one()];
    for c in t.children() {
        let cz = zeta_refined_by_height(c);
        let mut next = vec![UniPoly::zero(); w.len() + cz.len() - 1];
        for (i, a) in w.iter().enumerate() {
            for (j, b) in cz.iter().enumerate() {
                next[i + j] = &next[i + j] + &(a * b);
            }
        }
        w = next;
    }
    let n = t.size() as i64;
    let r = t.root_mult() as i64;
    let w_deg = w.len() as i64 - 1;
    // r(u - 1), the polynomial count of root coordinates per chain step.
    let a = UniPoly::from_coeffs(vec![rat(-r), rat(r)]);
    let mut out = Vec::with_capacity(n as usize + 1);
    for j in 0..=n {
        let mut c = UniPoly::zero();
        for l in 0.max(j - w_deg)..=j {
            c = &c + &(&binom_poly(&a, l as u32) * &w[(j - l) as usize]);
        }
        out.push(c);
    }
    out
}

/// Refined Zeta polynomial; keys are `(u-exponent, X-exponent)`.
pub fn zeta_refined(t: &Arbor) -> BiPoly {
    let mut out = BiPoly::zero();
    for (j, p) in zeta_refined_by_height(t).iter().enumerate() {
        for (k, c) in p.coeffs().iter().enumerate() {
            out.add_term(c.clone(), k as u32, j as u32);
        }
    }
    out
}

/// Zeta polynomial: the refined one with the height forgotten.
pub fn zeta(t: &Arbor) -> UniPoly {
    zeta_refined_by_height(t)
        .iter()
        .fold(UniPoly::zero(), |acc, p| &acc + p)
}

/// The generating polynomial of poset elements by (nonzeros, height):
/// coefficient of `X^j Y^k` counts elements with `j` nonzero coordinates
/// and height `k`.
pub fn k_poly(t: &Arbor) -> BiPoly {
    let mut w = BiPoly::one();
    for c in t.children() {
        w = &w * &k_poly(c);
    }
    let n = t.size() as i64;
    let r = t.root_mult() as i64;
    let mut out = BiPoly::zero();
    for j in 0..=n {
        for k in j..=n {
            let mut coeff = Rat::zero();
            for l in 0.max(j - (n - r))..=j.min(r) {
                for m in l.max(k - (n - r))..=(k + l - j) {
                    let wc = w.coeff((j - l) as u32, (k - m) as u32);
                    if wc.is_zero() {
                        continue;
                    }
                    coeff += Rat::from_integer(binom_int(r, l) * binom_int(m - 1, m - l)) * wc;
                }
            }
            out.add_term(coeff, j as u32, k as u32);
        }
    }
    out
}

/// Powers of a fixed polynomial, indexed by exponent.
fn power_table(base: &BiPoly, max: i64) -> Vec<BiPoly> {
    let mut out = vec![BiPoly::one()];
    for _ in 0..max {
        out.push(&out[out.len() - 1] * base);
    }
    out
}

/// Sum over the monomials of `src` of products of fixed bases raised to
/// term-dependent exponents. Negative exponents are cleared by a common
/// power of the base and removed by exact division at the end.
fn substituted_sum(
    src: &BiPoly,
    factors: &[(BiPoly, Box<dyn Fn(i64, i64) -> i64>)],
) -> Result<BiPoly> {
    let terms: Vec<(i64, i64, Rat)> = src
        .terms()
        .map(|(a, b, c)| (a as i64, b as i64, c.clone()))
        .collect();
    let depths: Vec<i64> = factors
        .iter()
        .map(|(_, e)| {
            terms
                .iter()
                .map(|&(a, b, _)| -e(a, b))
                .max()
                .unwrap_or(0)
                .max(0)
        })
        .collect();
    let tables: Vec<Vec<BiPoly>> = factors
        .iter()
        .zip(&depths)
        .map(|((base, e), d)| {
            let max = terms.iter().map(|&(a, b, _)| e(a, b) + d).max().unwrap_or(0);
            power_table(base, max)
        })
        .collect();
    let mut num = BiPoly::zero();
    for (a, b, c) in &terms {
        let mut term = BiPoly::constant(c.clone());
        for (fi, (_, e)) in factors.iter().enumerate() {
            term = &term * &tables[fi][(e(*a, *b) + depths[fi]) as usize];
        }
        num = &num + &term;
    }
    let mut out = num;
    for (fi, (base, _)) in factors.iter().enumerate() {
        for _ in 0..depths[fi] {
            out = out.div_exact(base).ok_or(Error::NonPolynomial)?;
        }
    }
    Ok(out)
}

fn x() -> BiPoly {
    BiPoly::var_a()
}
fn y() -> BiPoly {
    BiPoly::var_b()
}
fn one() -> BiPoly {
    BiPoly::one()
}

/// M-triangle from the K-polynomial: substitute `X -> 1 - 1/X, Y -> XY`.
/// Monomial-wise, `X^j Y^k` becomes `(X-1)^j X^{k-j} Y^k`; `j <= k` holds
/// in every K-monomial, so no denominator survives.
pub fn m_from_k(k: &BiPoly) -> BiPoly {
    for (j, kk, _) in k.terms() {
        assert!(j <= kk, "K-monomial with more nonzero coordinates than height");
    }
    substituted_sum(
        k,
        &[
            (&x() - &one(), Box::new(|a, _| a)),
            (x(), Box::new(|a, b| b - a)),
            (y(), Box::new(|_, b| b)),
        ],
    )
    .expect("clears by the K support condition")
}

/// M-triangle of the arbor poset, computed through the K-polynomial.
pub fn m_triangle(t: &Arbor) -> Triangle {
    Triangle::new(m_from_k(&k_poly(t)), t.size() as usize)
}

/// Transmutation: substitute `X -> (1-Y)/(1-XY), Y -> 1-XY`. An involution
/// on triangles whose monomials satisfy `X-degree <= Y-degree`.
pub fn transmute(tri: &Triangle) -> Result<Triangle> {
    let poly = substituted_sum(
        &tri.poly,
        &[
            (&one() - &y(), Box::new(|a, _| a)),
            (&one() - &(&x() * &y()), Box::new(|a, b| b - a)),
        ],
    )?;
    Ok(Triangle::new(poly, tri.size))
}

/// Transmuted M-triangle straight from the K-polynomial:
/// `X -> Y(X-1)/(1-Y), Y -> 1-Y`, monomial-wise `(Y(X-1))^j (1-Y)^{k-j}`.
pub fn transmuted_m_triangle(t: &Arbor) -> Triangle {
    let k = k_poly(t);
    let poly = substituted_sum(
        &k,
        &[
            (y(), Box::new(|a, _| a)),
            (&x() - &one(), Box::new(|a, _| a)),
            (&one() - &y(), Box::new(|a, b| b - a)),
        ],
    )
    .expect("clears by the K support condition");
    Triangle::new(poly, t.size() as usize)
}

/// h-vector: elements of the poset counted by nonzero coordinates.
pub fn h_vector(t: &Arbor) -> UniPoly {
    k_poly(t).eval_b(&rat(1))
}

/// f-vector of the cubical complex; equals the h-vector at `X + 1`.
pub fn f_vector(t: &Arbor) -> UniPoly {
    h_vector(t).substitute(&UniPoly::from_ints(&[1, 1]))
}

/// The h-vector read off the M-triangle: `X^a Y^b` contributes
/// `(1-X)^{b-a}`.
pub fn h_from_m_vector(m: &BiPoly) -> UniPoly {
    let one_minus_x = UniPoly::from_ints(&[1, -1]);
    let mut acc = UniPoly::zero();
    for (a, b, c) in m.terms() {
        assert!(a <= b, "M-monomial above the diagonal");
        acc = &acc + &one_minus_x.pow((b - a) as usize).scale(c);
    }
    acc
}

/// F-triangle from an M-triangle of the given size:
/// `F(X,Y) = M(Y/(Y-X), (Y-X)/(1+Y)) (1+Y)^n`.
pub fn f_from_m(tri: &Triangle) -> Result<Triangle> {
    let n = tri.size as i64;
    let poly = substituted_sum(
        &tri.poly,
        &[
            (y(), Box::new(|a, _| a)),
            (&y() - &x(), Box::new(|a, b| b - a)),
            (&one() + &y(), Box::new(move |_, b| n - b)),
        ],
    )?;
    Ok(Triangle::new(poly, tri.size))
}

/// M-triangle from an F-triangle of the given size:
/// `M(X,Y) = F(Y(X-1)/(1-XY), XY/(1-XY)) (1-XY)^n`.
pub fn m_from_f(tri: &Triangle) -> Result<Triangle> {
    let n = tri.size as i64;
    let poly = substituted_sum(
        &tri.poly,
        &[
            (&x() - &one(), Box::new(|a, _| a)),
            (y(), Box::new(|a, b| a + b)),
            (x(), Box::new(|_, b| b)),
            (&one() - &(&x() * &y()), Box::new(move |a, b| n - a - b)),
        ],
    )?;
    Ok(Triangle::new(poly, tri.size))
}

/// M-triangle from an H-triangle of the given size:
/// `M(X,Y) = H((X-1)Y/(1-Y), X/(X-1)) (1-Y)^n`.
pub fn m_from_h(tri: &Triangle) -> Result<Triangle> {
    let n = tri.size as i64;
    let poly = substituted_sum(
        &tri.poly,
        &[
            (&x() - &one(), Box::new(|a, b| a - b)),
            (x(), Box::new(|_, b| b)),
            (y(), Box::new(|a, _| a)),
            (&one() - &y(), Box::new(move |a, _| n - a)),
        ],
    )?;
    Ok(Triangle::new(poly, tri.size))
}

/// H-triangle from an M-triangle of the given size:
/// `H(X,Y) = M(Y/(Y-1), (Y-1)X/(1+(Y-1)X)) (1+(Y-1)X)^n`.
pub fn h_from_m(tri: &Triangle) -> Result<Triangle> {
    let n = tri.size as i64;
    let xy_part = &one() + &(&x() * &(&y() - &one()));
    let poly = substituted_sum(
        &tri.poly,
        &[
            (y(), Box::new(|a, _| a)),
            (&y() - &one(), Box::new(|a, b| b - a)),
            (x(), Box::new(|_, b| b)),
            (xy_part, Box::new(move |_, b| n - b)),
        ],
    )?;
    Ok(Triangle::new(poly, tri.size))
}

/// Report of the Ehrhart root location and positivity checks.
#[derive(Clone, Debug)]
pub struct RootCheck {
    pub degree: usize,
    pub distinct_roots: usize,
    pub roots_in_half_open_unit: usize,
    pub all_roots_in_range: bool,
    pub all_coeffs_positive: bool,
}

impl RootCheck {
    pub fn pass(&self) -> bool {
        self.all_roots_in_range && self.all_coeffs_positive
    }
}

/// Locate the Ehrhart roots exactly: all roots (after removing
/// multiplicities) must be real and lie in `[-1, 0)`.
pub fn ehrhart_root_check(t: &Arbor) -> RootCheck {
    let e = ehrhart(t);
    let sf = squarefree_part(&e);
    let distinct = sf.degree().expect("Ehrhart polynomial is nonzero");
    let inside = sturm_roots_in(&e, &rat(-1), &rat(0), true, false)
        .expect("Ehrhart polynomial is nonzero");
    RootCheck {
        degree: e.degree().unwrap(),
        distinct_roots: distinct,
        roots_in_half_open_unit: inside,
        all_roots_in_range: inside == distinct,
        all_coeffs_positive: e.all_coeffs_positive(),
    }
}

/// Verdicts for the reversal conjectures on one linear arbor.
#[derive(Clone, Debug)]
pub struct EzCheck {
    pub encoding: String,
    pub reverse_encoding: String,
    pub ehrhart_equals_shifted_zeta: bool,
    pub h_vectors_equal: bool,
}

impl EzCheck {
    pub fn pass(&self) -> bool {
        self.ehrhart_equals_shifted_zeta && self.h_vectors_equal
    }
}

/// Check, for a linear arbor, that the Ehrhart polynomial equals the Zeta
/// polynomial of the reverse at `u + 1`, and that both share an h-vector.
pub fn ez_check(t: &Arbor) -> Result<EzCheck> {
    let rev = t.reverse_linear()?;
    let shifted = zeta(&rev).substitute(&UniPoly::from_ints(&[1, 1]));
    Ok(EzCheck {
        encoding: t.encode(),
        reverse_encoding: rev.encode(),
        ehrhart_equals_shifted_zeta: ehrhart(t) == shifted,
        h_vectors_equal: h_vector(t) == h_vector(&rev),
    })
}
