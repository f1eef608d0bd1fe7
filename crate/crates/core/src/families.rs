//! Parametrized poset families with closed-form invariants, the
//! noncrossing-partition reference triangles, and the halohedron and
//! Hochschild-polytope identity checks.

use num_traits::Zero;

use crate::algebra::{
    binom_int, binom_poly, factorial, guarded_product, rat, BiPoly, Int, Rat, TruncSeries,
    UniPoly,
};
use crate::arbor;
use crate::arbor::Arbor;
use crate::error::{Error, Result};
use crate::invariants::{self, Triangle};
use crate::polytope;
use crate::poset::{FinitePoset, VectorPoset};

/// Parameters of the lattice-path posets: slope `m`, endpoint `(x, y)`
/// strictly below the line of slope `1/m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FussParams {
    pub m: u32,
    pub x: u32,
    pub y: u32,
}

impl FussParams {
    pub fn new(m: u32, x: u32, y: u32) -> Result<FussParams> {
        if m < 1 || x < 1 {
            return Err(Error::InvalidParameter("need m >= 1 and x >= 1".into()));
        }
        if m * y >= x {
            return Err(Error::InvalidParameter(format!(
                "endpoint must satisfy m*y < x, got m={m} x={x} y={y}"
            )));
        }
        Ok(FussParams { m, x, y })
    }
}

/// Words of vertical-run lengths of the admissible lattice paths, under
/// termwise comparison. A word `(a_1, ..., a_{x-1})` is admissible when
/// every prefix sum stays strictly below `j/m` and the total is at most `y`.
pub fn fuss_elements(p: &FussParams) -> VectorPoset {
    let len = p.x as usize - 1;
    let mut out = Vec::new();
    let mut word = vec![0u32; len];
    fn go(
        j: usize,
        prefix: u32,
        p: &FussParams,
        word: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if j == word.len() {
            out.push(word.clone());
            return;
        }
        let mut a = 0;
        loop {
            let s = prefix + a;
            if p.m * s >= j as u32 + 1 || s > p.y {
                break;
            }
            word[j] = a;
            go(j + 1, s, p, word, out);
            a += 1;
        }
        word[j] = 0;
    }
    go(0, 0, p, &mut word, &mut out);
    VectorPoset::new(out)
}

/// Closed-form Zeta polynomial of the lattice-path poset:
/// `((x - my - 1)(u-1) + 1) / y!` times the product over `j = 2..=y` of
/// `(x-1)(u-1) + j`. At `y = 0` the leading factor of the guarded product
/// cancels the prefactor, leaving 1.
pub fn fuss_zeta(p: &FussParams) -> UniPoly {
    if p.y == 0 {
        return UniPoly::one();
    }
    let u_minus_1 = UniPoly::from_ints(&[-1, 1]);
    let mut z = &u_minus_1.scale(&rat((p.x - p.m * p.y - 1) as i64)) + &UniPoly::one();
    for j in 2..=p.y {
        z = &z * &(&u_minus_1.scale(&rat((p.x - 1) as i64)) + &UniPoly::constant(rat(j as i64)));
    }
    z.scale(&Rat::from_integer(factorial(p.y)).recip())
}

/// Closed-form M-triangle of the lattice-path poset: the coefficient of
/// `(-X)^k (-Y)^l` is `binom(l,k) (x - 1 - ml) / l!` times the guarded
/// product over `r = 2..=l` of `(x - r + k)`.
pub fn fuss_m_triangle(p: &FussParams) -> Triangle {
    let x = p.x as i64;
    let m = p.m as i64;
    let mut poly = BiPoly::one();
    // The l = 0 term is the constant 1: the guarded product cancels the
    // prefactor (x - 1), degenerately so at x = 1.
    for l in 1..=p.y as i64 {
        for k in 0..=l {
            let magnitude = Rat::from_integer(binom_int(l, k) * (x - 1 - m * l))
                * guarded_product(l, |r| rat(x - r + k))
                / Rat::from_integer(factorial(l as u32));
            let signed = if (k + l) % 2 == 0 { magnitude } else { -magnitude };
            poly.add_term(signed, k as u32, l as u32);
        }
    }
    Triangle::new(poly, p.y as usize)
}

/// Tuples in `N^n` with coordinate sum at most `k`, termwise order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TypeBParams {
    pub n: u32,
    pub k: u32,
}

impl TypeBParams {
    pub fn new(n: u32, k: u32) -> Result<TypeBParams> {
        if n < 1 {
            return Err(Error::InvalidParameter("need n >= 1".into()));
        }
        Ok(TypeBParams { n, k })
    }
}

pub fn typeb_elements(p: &TypeBParams) -> VectorPoset {
    VectorPoset::new(polytope::vectors_with_sum_at_most(p.n as usize, p.k))
}

/// Zeta polynomial `binom(n(u-1) + k, k)`.
pub fn typeb_zeta(p: &TypeBParams) -> UniPoly {
    let n = p.n as i64;
    let a = UniPoly::from_coeffs(vec![rat(1 - n), rat(n)]);
    binom_poly(&a, p.k)
}

/// Closed-form M-triangle: sum over `r, l` of
/// `binom(l+n-1, n-1) binom(n, r) (-X)^l (-Y)^{l+r}`.
pub fn typeb_m_triangle(p: &TypeBParams) -> Triangle {
    let n = p.n as i64;
    let mut poly = BiPoly::zero();
    for r in 0..=p.k as i64 {
        for l in 0..=(p.k as i64 - r) {
            let magnitude = binom_int(l + n - 1, n - 1) * binom_int(n, r);
            let signed = if r % 2 == 0 { magnitude } else { -magnitude };
            poly.add_term(Rat::from_integer(signed), l as u32, (l + r) as u32);
        }
    }
    Triangle::new(poly, p.k as usize)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoxeterType {
    A,
    B,
}

/// F-triangle of the cluster complex of the given type and rank.
pub fn cluster_f_triangle(ct: CoxeterType, n: u32) -> Triangle {
    let n = n as i64;
    let mut poly = BiPoly::zero();
    for k in 0..=n {
        for l in 0..=(n - k) {
            let c = match ct {
                CoxeterType::A => {
                    Rat::new(Int::from(l + 1), Int::from(k + l + 1))
                        * Rat::from_integer(binom_int(n, k + l) * binom_int(n + k, n))
                }
                CoxeterType::B => {
                    Rat::from_integer(binom_int(n, k + l) * binom_int(n + k - 1, n - 1))
                }
            };
            poly.add_term(c, k as u32, l as u32);
        }
    }
    Triangle::new(poly, n as usize)
}

/// M-triangle of the noncrossing-partition lattice, obtained from the
/// cluster F-triangle by the birational conversion.
pub fn nc_m_triangle(ct: CoxeterType, n: u32) -> Triangle {
    invariants::m_from_f(&cluster_f_triangle(ct, n)).expect("cluster F-triangles clear")
}

/// Self-duality of an M-triangle: `N(X,Y) = N(1/Y, 1/X) (XY)^n`.
pub fn is_self_dual(tri: &Triangle) -> bool {
    let n = tri.size as i64;
    tri.poly.terms().all(|(a, b, c)| {
        let (ra, rb) = (n - b as i64, n - a as i64);
        ra >= 0 && rb >= 0 && tri.poly.coeff(ra as u32, rb as u32) == *c
    })
}

/// Closed-form M-triangle of the linear arbor with unit multiplicities:
/// coefficient of `(-X)^k (-Y)^l` is
/// `(n+1-l)/(n+k-l+1) binom(n+k, n) binom(n, l-k)`.
pub fn type_a_m_closed(n: u32) -> Triangle {
    let n = n as i64;
    let mut poly = BiPoly::zero();
    for l in 0..=n {
        for k in 0..=l {
            let c = Rat::new(Int::from(n + 1 - l), Int::from(n + k - l + 1))
                * Rat::from_integer(binom_int(n + k, n) * binom_int(n, l - k));
            let signed = if (k + l) % 2 == 0 { c } else { -c };
            poly.add_term(signed, k as u32, l as u32);
        }
    }
    Triangle::new(poly, n as usize)
}

/// Noncrossing set partitions of `points` elements under refinement,
/// graded by `points - number of blocks`. Brute-force reference poset.
pub fn noncrossing_partition_poset(points: u32) -> FinitePoset {
    let partitions: Vec<Vec<u32>> = set_partitions(points)
        .into_iter()
        .filter(|p| is_noncrossing(p))
        .collect();
    let heights: Vec<u32> = partitions
        .iter()
        .map(|p| points - (p.iter().copied().max().unwrap_or(0) + 1))
        .collect();
    let n = partitions.len();
    let mut leq = vec![vec![false; n]; n];
    for (i, fine) in partitions.iter().enumerate() {
        for (j, coarse) in partitions.iter().enumerate() {
            leq[i][j] = refines(fine, coarse);
        }
    }
    FinitePoset::from_relation(heights, leq)
}

/// All set partitions as restricted growth strings: entry `e` is the block
/// index of element `e`.
fn set_partitions(points: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; points as usize];
    fn go(i: usize, max_used: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == current.len() {
            out.push(current.clone());
            return;
        }
        for b in 0..=max_used + 1 {
            current[i] = b;
            go(i + 1, max_used.max(b), current, out);
        }
    }
    if points == 0 {
        return vec![Vec::new()];
    }
    current[0] = 0;
    go(1, 0, &mut current, &mut out);
    out
}

fn is_noncrossing(partition: &[u32]) -> bool {
    let n = partition.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if partition[a] == partition[c]
                        && partition[b] == partition[d]
                        && partition[a] != partition[b]
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn refines(fine: &[u32], coarse: &[u32]) -> bool {
    // Elements sharing a fine block must share a coarse block.
    let blocks = fine.iter().copied().max().unwrap_or(0) + 1;
    let mut image = vec![None; blocks as usize];
    for (e, &b) in fine.iter().enumerate() {
        match image[b as usize] {
            None => image[b as usize] = Some(coarse[e]),
            Some(c) if c == coarse[e] => {}
            Some(_) => return false,
        }
    }
    true
}

/// Number of vertices of the halohedron: `(3n-1)/n * binom(2n-2, n-1)`.
pub fn halo_cardinality(n: u32) -> Int {
    Int::from(3 * n as i64 - 1) * binom_int(2 * n as i64 - 2, n as i64 - 1) / Int::from(n as i64)
}

/// Closed-form h-vector of the arbor with a multiple root and one simple
/// leaf: `sum binom(n-1,j) binom(n,j) X^j + sum binom(n-1,j-1)^2 X^j`.
pub fn halo_h_closed(n: u32) -> UniPoly {
    let n = n as i64;
    let mut coeffs = vec![Rat::zero(); n as usize + 1];
    for j in 0..n {
        coeffs[j as usize] += Rat::from_integer(binom_int(n - 1, j) * binom_int(n, j));
    }
    for j in 1..=n {
        let b = binom_int(n - 1, j - 1);
        coeffs[j as usize] += Rat::from_integer(&b * &b);
    }
    UniPoly::from_coeffs(coeffs)
}

/// Closed-form h-vector of the reversed halo arbor:
/// `sum binom(n-1,j)^2 X^j + sum binom(n-1,j-1) binom(n,j) X^j`.
pub fn halo_rev_h_closed(n: u32) -> UniPoly {
    let n = n as i64;
    let mut coeffs = vec![Rat::zero(); n as usize + 1];
    for j in 0..n {
        let b = binom_int(n - 1, j);
        coeffs[j as usize] += Rat::from_integer(&b * &b);
    }
    for j in 1..=n {
        coeffs[j as usize] +=
            Rat::from_integer(binom_int(n - 1, j - 1) * binom_int(n, j));
    }
    UniPoly::from_coeffs(coeffs)
}

/// Generating series of the second halves of the halo h-vectors:
/// coefficient of `s^n` is `sum_j binom(n-1,j-1)^2 X^j`.
pub fn halo_series_a(order: usize) -> TruncSeries<UniPoly> {
    let mut coeffs = vec![UniPoly::zero()];
    for n in 1..=order as i64 {
        let mut a = vec![Rat::zero(); n as usize + 1];
        for j in 1..=n {
            let b = binom_int(n - 1, j - 1);
            a[j as usize] = Rat::from_integer(&b * &b);
        }
        coeffs.push(UniPoly::from_coeffs(a));
    }
    TruncSeries::from_coeffs(order, coeffs)
}

/// Generating series of the first halves of the halo h-vectors:
/// coefficient of `s^n` is `sum_j binom(n-1,j) binom(n,j) X^j`.
pub fn halo_series_b(order: usize) -> TruncSeries<UniPoly> {
    let mut coeffs = vec![UniPoly::zero()];
    for n in 1..=order as i64 {
        let mut b = vec![Rat::zero(); n as usize];
        for j in 0..n {
            b[j as usize] = Rat::from_integer(binom_int(n - 1, j) * binom_int(n, j));
        }
        coeffs.push(UniPoly::from_coeffs(b));
    }
    TruncSeries::from_coeffs(order, coeffs)
}

/// The quadratic `1 - 2(X+1)s + (X-1)^2 s^2` appearing in the halohedron
/// series equations.
pub fn halo_base_series(order: usize) -> TruncSeries<UniPoly> {
    TruncSeries::from_coeffs(
        order,
        vec![
            UniPoly::one(),
            UniPoly::from_ints(&[-2, -2]),
            UniPoly::from_ints(&[1, -2, 1]),
        ],
    )
}

#[derive(Clone, Debug)]
pub struct HaloEntry {
    pub n: u32,
    pub cardinality_ok: bool,
    pub h_vectors_ok: bool,
}

#[derive(Clone, Debug)]
pub struct HaloChecks {
    pub entries: Vec<HaloEntry>,
    pub order: usize,
    pub equation_a_holds: bool,
    pub equation_b_holds: bool,
    pub equation_sum_holds: bool,
}

impl HaloChecks {
    pub fn pass(&self) -> bool {
        self.entries.iter().all(|e| e.cardinality_ok && e.h_vectors_ok)
            && self.equation_a_holds
            && self.equation_b_holds
            && self.equation_sum_holds
    }
}

/// Per-size cardinality and h-vector identities for the halo arbors plus
/// the algebraic equations of their generating series.
pub fn halo_checks(n_max: u32, order: usize) -> HaloChecks {
    let entries = (2..=n_max)
        .map(|n| {
            let t = arbor::halo(n).expect("n >= 2");
            let tr = arbor::halo_rev(n).expect("n >= 2");
            let card = halo_cardinality(n);
            let count = Int::from(polytope::lattice_points(&t, 1).len());
            let count_rev = Int::from(polytope::lattice_points(&tr, 1).len());
            let h = invariants::h_vector(&t);
            let h_rev = invariants::h_vector(&tr);
            HaloEntry {
                n,
                cardinality_ok: count == card && count_rev == card,
                h_vectors_ok: h == halo_h_closed(n)
                    && h_rev == halo_rev_h_closed(n)
                    && h == h_rev,
            }
        })
        .collect();

    let a = halo_series_a(order);
    let b = halo_series_b(order);
    let p = halo_base_series(order);
    let x = UniPoly::var();
    let x2s2 = TruncSeries::from_coeffs(order, vec![UniPoly::zero(), UniPoly::zero(), &x * &x]);
    let s = TruncSeries::from_coeffs(order, vec![UniPoly::zero(), UniPoly::one()]);
    let sum_rhs = TruncSeries::from_coeffs(
        order,
        vec![UniPoly::zero(), UniPoly::from_ints(&[1, 1]), x.clone()],
    );
    let h = a.add(&b);
    HaloChecks {
        entries,
        order,
        equation_a_holds: p.mul(&a.mul(&a)).sub(&x2s2).is_zero(),
        equation_b_holds: p.mul(&b.add(&b.mul(&b))).sub(&s).is_zero(),
        equation_sum_holds: p.mul(&h.add(&h.mul(&h))).sub(&sum_rhs).is_zero(),
    }
}

/// Number of elements of the corolla poset: `2^{n-2} (n+3)` for `n >= 2`,
/// two for the single-vertex case.
pub fn hochschild_count(n: u32) -> Int {
    if n == 1 {
        return Int::from(2);
    }
    (Int::from(1) << (n - 2)) * Int::from(n as i64 + 3)
}

/// Closed-form h-vector of the corolla arbor:
/// `(X+1)^{n-2} (X^2 + (n+1)X + 1)` for `n >= 2`.
pub fn hochschild_h_closed(n: u32) -> UniPoly {
    if n == 1 {
        return UniPoly::from_ints(&[1, 1]);
    }
    let quad = UniPoly::from_ints(&[1, n as i64 + 1, 1]);
    &UniPoly::from_ints(&[1, 1]).pow(n as usize - 2) * &quad
}

/// One conjectural generating series compared coefficient by coefficient.
#[derive(Clone, Debug)]
pub struct SeriesMatch {
    pub name: &'static str,
    pub mismatched_orders: Vec<usize>,
    pub order: usize,
}

impl SeriesMatch {
    pub fn pass(&self) -> bool {
        self.mismatched_orders.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct HochschildEntry {
    pub n: u32,
    pub count_ok: bool,
    pub h_vector_ok: bool,
}

#[derive(Clone, Debug)]
pub struct HochschildChecks {
    pub entries: Vec<HochschildEntry>,
    pub zeta_series: SeriesMatch,
    pub m_series: SeriesMatch,
    pub ehrhart_series: SeriesMatch,
    pub laplace_series: SeriesMatch,
}

impl HochschildChecks {
    pub fn counts_pass(&self) -> bool {
        self.entries.iter().all(|e| e.count_ok && e.h_vector_ok)
    }
    pub fn series(&self) -> [&SeriesMatch; 4] {
        [
            &self.zeta_series,
            &self.m_series,
            &self.ehrhart_series,
            &self.laplace_series,
        ]
    }
    pub fn pass(&self) -> bool {
        self.counts_pass() && self.series().iter().all(|s| s.pass())
    }
}

/// Vertex counts, h-vectors, and the four guessed generating series for
/// the corolla arbors, compared against the computed invariants up to
/// `n_max`.
pub fn hochschild_checks(n_max: u32) -> HochschildChecks {
    let entries = (2..=n_max)
        .map(|n| {
            let t = arbor::hochschild(n).expect("n >= 1");
            let count = Int::from(polytope::lattice_points(&t, 1).len());
            HochschildEntry {
                n,
                count_ok: count == hochschild_count(n),
                h_vector_ok: invariants::h_vector(&t) == hochschild_h_closed(n),
            }
        })
        .collect();

    let order = n_max as usize;
    let arbors: Vec<Arbor> = (1..=n_max)
        .map(|n| arbor::hochschild(n).expect("n >= 1"))
        .collect();

    let zeta_series = {
        let mut lhs = TruncSeries::<UniPoly>::one(order);
        for (n, t) in arbors.iter().enumerate() {
            lhs.set_coeff(n + 1, invariants::zeta(t));
        }
        compare_series("zeta", &lhs, &hochschild_zeta_series(order))
    };

    let m_series = {
        let mut lhs = TruncSeries::<BiPoly>::one(order);
        for (n, t) in arbors.iter().enumerate() {
            lhs.set_coeff(n + 1, invariants::m_triangle(t).poly);
        }
        compare_series("m-triangle", &lhs, &hochschild_m_series(order))
    };

    let ehrhart_series = {
        let mut lhs = TruncSeries::<UniPoly>::one(order);
        for (n, t) in arbors.iter().enumerate() {
            lhs.set_coeff(n + 1, invariants::ehrhart(t));
        }
        compare_series("ehrhart", &lhs, &hochschild_ehrhart_series(order))
    };

    let laplace_series = {
        let mut lhs = TruncSeries::<BiPoly>::zero(order);
        for (n, t) in arbors.iter().enumerate() {
            lhs.set_coeff(n + 1, crate::volume::laplace_poly(t));
        }
        compare_series("laplace", &lhs, &hochschild_laplace_series(order))
    };

    HochschildChecks {
        entries,
        zeta_series,
        m_series,
        ehrhart_series,
        laplace_series,
    }
}

fn compare_series<C: crate::algebra::SeriesCoeff>(
    name: &'static str,
    lhs: &TruncSeries<C>,
    rhs: &TruncSeries<C>,
) -> SeriesMatch {
    let mismatched = (0..=lhs.order())
        .filter(|&k| lhs.coeff(k) != rhs.coeff(k))
        .collect();
    SeriesMatch {
        name,
        mismatched_orders: mismatched,
        order: lhs.order(),
    }
}

/// Guessed Zeta series: `exp( integral of u / ((1-us)(1+s-us)) ds )`.
pub fn hochschild_zeta_series(order: usize) -> TruncSeries<UniPoly> {
    let u = UniPoly::var();
    let f1 = TruncSeries::from_coeffs(order, vec![UniPoly::one(), -&u]);
    let f2 = TruncSeries::from_coeffs(order, vec![UniPoly::one(), UniPoly::from_ints(&[1, -1])]);
    let integrand = f1
        .invert()
        .and_then(|i1| f2.invert().map(|i2| i1.mul(&i2)))
        .expect("unit constant terms")
        .mul_coeff(&u);
    integrand.integrate().exp().expect("zero constant term")
}

/// Guessed M-triangle series:
/// `(XYs - Ys - 1)(XYs - 1) / ((2XYs - Ys - 1)(XYs - Ys + s - 1))`.
pub fn hochschild_m_series(order: usize) -> TruncSeries<BiPoly> {
    let xy = &BiPoly::var_a() * &BiPoly::var_b();
    let y = BiPoly::var_b();
    let minus_one = BiPoly::constant(rat(-1));
    let n1 = TruncSeries::from_coeffs(order, vec![minus_one.clone(), &xy - &y]);
    let n2 = TruncSeries::from_coeffs(order, vec![minus_one.clone(), xy.clone()]);
    let d1 = TruncSeries::from_coeffs(order, vec![minus_one.clone(), &xy.scale(&rat(2)) - &y]);
    let d2 = TruncSeries::from_coeffs(
        order,
        vec![minus_one, &(&xy - &y) + &BiPoly::one()],
    );
    let den = d1.mul(&d2).invert().expect("unit constant term");
    n1.mul(&n2).mul(&den)
}

/// Guessed Ehrhart series:
/// `(1 - s/(us+s-1) - (s-1)/(us+s-1)^2) / 2`.
pub fn hochschild_ehrhart_series(order: usize) -> TruncSeries<UniPoly> {
    let den = TruncSeries::from_coeffs(
        order,
        vec![UniPoly::from_ints(&[-1]), UniPoly::from_ints(&[1, 1])],
    );
    let inv = den.invert().expect("unit constant term");
    let inv2 = inv.mul(&inv);
    let s = TruncSeries::from_coeffs(order, vec![UniPoly::zero(), UniPoly::one()]);
    let s_minus_1 = TruncSeries::from_coeffs(order, vec![UniPoly::from_ints(&[-1]), UniPoly::one()]);
    TruncSeries::one(order)
        .sub(&s.mul(&inv))
        .sub(&s_minus_1.mul(&inv2))
        .scale(&Rat::new(1.into(), 2.into()))
}

/// Guessed Laplace series: `V (s/(EVs - Vs + 1) + Es/(Es - 1))`, with
/// coefficients keyed `(E-exponent, V-exponent)`.
pub fn hochschild_laplace_series(order: usize) -> TruncSeries<BiPoly> {
    let e = BiPoly::var_a();
    let v = BiPoly::var_b();
    let ev = &e * &v;
    let d1 = TruncSeries::from_coeffs(order, vec![BiPoly::one(), &ev - &v]);
    let term1 = TruncSeries::from_coeffs(order, vec![BiPoly::zero(), BiPoly::one()])
        .mul(&d1.invert().expect("unit constant term"));
    let d2 = TruncSeries::from_coeffs(order, vec![BiPoly::constant(rat(-1)), e.clone()]);
    let term2 = TruncSeries::from_coeffs(order, vec![BiPoly::zero(), e])
        .mul(&d2.invert().expect("unit constant term"));
    term1.add(&term2).mul_coeff(&v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use crate::arbor::{type_a, type_b};
    use crate::invariants::{h_vector, m_triangle, transmute, zeta};
    use crate::poset::build_poset;

    fn fuss(m: u32, x: u32, y: u32) -> FussParams {
        FussParams::new(m, x, y).unwrap()
    }

    fn valid_y(m: u32, x: u32) -> u32 {
        (x - 1) / m
    }

    #[test]
    fn param_validation() {
        assert!(FussParams::new(1, 4, 4).is_err());
        assert!(FussParams::new(2, 7, 3).is_ok());
        assert!(FussParams::new(0, 4, 1).is_err());
        assert!(TypeBParams::new(0, 3).is_err());
    }

    #[test]
    fn fuss_small_example_elements() {
        let p = fuss_elements(&fuss(1, 4, 2));
        assert_eq!(
            p.vectors,
            vec![
                vec![0, 0, 0],
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![0, 0, 2],
                vec![0, 1, 1]
            ]
        );
    }

    #[test]
    fn fuss_unit_slope_counts_are_catalan() {
        let catalan = [1u64, 1, 2, 5, 14, 42, 132, 429];
        for n in 1..=6u32 {
            let p = fuss_elements(&fuss(1, n + 2, n));
            assert_eq!(p.len() as u64, catalan[n as usize + 1], "n={n}");
        }
    }

    #[test]
    fn fuss_unit_slope_recovers_the_linear_arbor_poset() {
        // Drop the forced first letter and reverse: the words become exactly
        // the lattice points of the unit-multiplicity chain.
        for n in 1..=5u32 {
            let words = fuss_elements(&fuss(1, n + 2, n));
            let mapped: std::collections::BTreeSet<Vec<u32>> = words
                .vectors
                .iter()
                .map(|w| {
                    assert_eq!(w[0], 0);
                    let mut v: Vec<u32> = w[1..].to_vec();
                    v.reverse();
                    v
                })
                .collect();
            let points: std::collections::BTreeSet<Vec<u32>> =
                build_poset(&type_a(n).unwrap()).vectors.into_iter().collect();
            assert_eq!(mapped, points, "n={n}");
        }
    }

    #[test]
    fn fuss_last_step_removal_isomorphism() {
        // At x = my + 1 the slope condition already forces the sum below y,
        // so the element sets at y and y - 1 coincide.
        for m in 1..=3u32 {
            for y in 1..=3u32 {
                let x = m * y + 1;
                let a = fuss_elements(&fuss(m, x, y));
                let b = fuss_elements(&fuss(m, x, y - 1));
                assert_eq!(a.vectors, b.vectors, "m={m} y={y}");
            }
        }
    }

    #[test]
    fn fuss_zeta_small_example() {
        let z = fuss_zeta(&fuss(1, 4, 2));
        assert_eq!(z, UniPoly::from_coeffs(vec![rat(0), ratio(-1, 2), ratio(3, 2)]));
    }

    #[test]
    fn fuss_zeta_counts_multichains() {
        for m in 1..=2u32 {
            for x in 1..=6u32 {
                for y in 0..=valid_y(m, x) {
                    let p = fuss(m, x, y);
                    let z = fuss_zeta(&p);
                    let poset = fuss_elements(&p);
                    for q in 2..=4u32 {
                        assert_eq!(
                            z.eval(&rat(q as i64)),
                            Rat::from_integer(poset.poset.chain_count(q)),
                            "m={m} x={x} y={y} q={q}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn fuss_zeta_recursions() {
        // Removal isomorphism at the slope boundary.
        for m in 1..=3u32 {
            for y in 1..=4u32 {
                if m * y + 1 > 8 {
                    continue;
                }
                let x = m * y + 1;
                assert_eq!(
                    fuss_zeta(&fuss(m, x, y)),
                    fuss_zeta(&fuss(m, x, y - 1)),
                    "m={m} y={y}"
                );
            }
        }
        // Last-column split: Z(m,x,y) = sum_j Z(m,x-1,y-j) binom(j+u-2, j).
        let u_minus_1 = UniPoly::from_ints(&[-1, 1]);
        for m in 1..=3u32 {
            for x in 2..=8u32 {
                for y in 0..=valid_y(m, x) {
                    if m * y + 1 > x - 1 && y > 0 {
                        // (x-1, y) must stay a valid endpoint for j = 0.
                        continue;
                    }
                    let lhs = fuss_zeta(&fuss(m, x, y));
                    let mut rhs = UniPoly::zero();
                    for j in 0..=y {
                        rhs = &rhs
                            + &(&fuss_zeta(&fuss(m, x - 1, y - j)) * &binom_poly(&u_minus_1, j));
                    }
                    assert_eq!(lhs, rhs, "m={m} x={x} y={y}");
                }
            }
        }
    }

    #[test]
    fn fuss_m_triangle_of_the_unit_chain() {
        let got = fuss_m_triangle(&fuss(1, 5, 3));
        assert_eq!(got.poly, m_triangle(&type_a(3).unwrap()).poly);
    }

    #[test]
    fn fuss_m_triangle_matches_mobius_oracle() {
        for m in 1..=3u32 {
            for x in 1..=6u32 {
                for y in 0..=valid_y(m, x) {
                    let p = fuss(m, x, y);
                    let closed = fuss_m_triangle(&p);
                    let brute = fuss_elements(&p).poset.mobius_triangle();
                    assert_eq!(closed.poly, brute, "m={m} x={x} y={y}");
                }
            }
        }
    }

    #[test]
    fn fuss_m_triangle_recursion() {
        // M(m,x,y) = M(m,x-1,y) + (1 - 1/X) sum_j (XY)^j M(m,x-1,y-j).
        let x_var = BiPoly::var_a();
        let y_var = BiPoly::var_b();
        for m in 1..=3u32 {
            for x in 3..=8u32 {
                for y in 1..=valid_y(m, x - 1) {
                    let lhs = fuss_m_triangle(&fuss(m, x, y)).poly;
                    let mut rhs = fuss_m_triangle(&fuss(m, x - 1, y)).poly;
                    for j in 1..=y {
                        let shift = &(&x_var - &BiPoly::one())
                            * &(&x_var.pow(j - 1) * &y_var.pow(j));
                        rhs = &rhs + &(&shift * &fuss_m_triangle(&fuss(m, x - 1, y - j)).poly);
                    }
                    assert_eq!(lhs, rhs, "m={m} x={x} y={y}");
                }
            }
        }
    }

    #[test]
    fn closed_m_triangle_of_unit_chains() {
        for n in 1..=6u32 {
            let closed = type_a_m_closed(n);
            assert_eq!(closed.poly, m_triangle(&type_a(n).unwrap()).poly, "n={n}");
            assert_eq!(closed.poly, fuss_m_triangle(&fuss(1, n + 2, n)).poly, "n={n}");
        }
    }

    #[test]
    fn typeb_small_examples() {
        assert_eq!(typeb_zeta(&TypeBParams::new(1, 1).unwrap()), UniPoly::from_ints(&[0, 1]));
        let p22 = TypeBParams::new(2, 2).unwrap();
        assert_eq!(typeb_elements(&p22).len(), 6);
        assert_eq!(typeb_zeta(&p22), UniPoly::from_ints(&[0, -1, 2]));
    }

    #[test]
    fn typeb_zeta_counts_multichains() {
        for n in 1..=3u32 {
            for k in 0..=4u32 {
                let p = TypeBParams::new(n, k).unwrap();
                let z = typeb_zeta(&p);
                let poset = typeb_elements(&p);
                for q in 2..=4u32 {
                    assert_eq!(
                        z.eval(&rat(q as i64)),
                        Rat::from_integer(poset.poset.chain_count(q)),
                        "n={n} k={k} q={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn typeb_m_triangle_matches_mobius_oracle() {
        for n in 1..=4u32 {
            for k in 0..=4u32 {
                let p = TypeBParams::new(n, k).unwrap();
                assert_eq!(
                    typeb_m_triangle(&p).poly,
                    typeb_elements(&p).poset.mobius_triangle(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn typeb_diagonal_case_is_the_single_vertex_arbor() {
        for n in 1..=5u32 {
            let p = TypeBParams::new(n, n).unwrap();
            assert_eq!(
                typeb_elements(&p).vectors,
                build_poset(&type_b(n).unwrap()).vectors,
                "n={n}"
            );
            assert_eq!(
                typeb_m_triangle(&p).poly,
                m_triangle(&type_b(n).unwrap()).poly,
                "n={n}"
            );
            assert_eq!(typeb_zeta(&p), zeta(&type_b(n).unwrap()), "n={n}");
        }
    }

    #[test]
    fn typeb_m_triangle_recursion() {
        let x_var = BiPoly::var_a();
        let y_var = BiPoly::var_b();
        for k in 0..=5u32 {
            // Base: one tuple coordinate.
            let mut base = BiPoly::one();
            for j in 1..=k {
                let shift =
                    &(&x_var - &BiPoly::one()) * &(&x_var.pow(j - 1) * &y_var.pow(j));
                base = &base + &shift;
            }
            assert_eq!(typeb_m_triangle(&TypeBParams::new(1, k).unwrap()).poly, base);
            for n in 2..=5u32 {
                let lhs = typeb_m_triangle(&TypeBParams::new(n, k).unwrap()).poly;
                let prev = |kk: u32| typeb_m_triangle(&TypeBParams::new(n - 1, kk).unwrap()).poly;
                let mut rhs = prev(k);
                for j in 1..=k {
                    let shift =
                        &(&x_var - &BiPoly::one()) * &(&x_var.pow(j - 1) * &y_var.pow(j));
                    rhs = &rhs + &(&shift * &prev(k - j));
                }
                assert_eq!(lhs, rhs, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn typeb_upper_ideals_shift() {
        let p = TypeBParams::new(3, 4).unwrap();
        let poset = typeb_elements(&p);
        for (i, a) in poset.vectors.iter().enumerate() {
            let j: u32 = a.iter().sum();
            let shifted: std::collections::BTreeSet<Vec<u32>> = poset
                .vectors
                .iter()
                .enumerate()
                .filter(|&(b_idx, _)| poset.poset.leq(i, b_idx))
                .map(|(_, b)| b.iter().zip(a).map(|(x, y)| x - y).collect())
                .collect();
            let small: std::collections::BTreeSet<Vec<u32>> =
                typeb_elements(&TypeBParams::new(3, 4 - j).unwrap())
                    .vectors
                    .into_iter()
                    .collect();
            assert_eq!(shifted, small);
        }
    }

    #[test]
    fn nc_m_triangle_type_a3() {
        let n = nc_m_triangle(CoxeterType::A, 3);
        let mut want = BiPoly::zero();
        for (k, row) in [
            vec![1],
            vec![-6, 6],
            vec![10, -16, 6],
            vec![-5, 10, -6, 1],
        ]
        .iter()
        .enumerate()
        {
            for (j, &c) in row.iter().enumerate() {
                want.add_term(rat(c), j as u32, k as u32);
            }
        }
        assert_eq!(n.poly, want);
    }

    #[test]
    fn transmuted_partners() {
        for n in 1..=5u32 {
            let a = nc_m_triangle(CoxeterType::A, n);
            assert_eq!(
                a.poly,
                transmute(&m_triangle(&type_a(n).unwrap())).unwrap().poly,
                "type A n={n}"
            );
            let b = nc_m_triangle(CoxeterType::B, n);
            assert_eq!(
                b.poly,
                transmute(&m_triangle(&type_b(n).unwrap())).unwrap().poly,
                "type B n={n}"
            );
            assert!(is_self_dual(&a), "A n={n}");
            assert!(is_self_dual(&b), "B n={n}");
        }
    }

    #[test]
    fn nc_lattice_oracle() {
        for n in 1..=4u32 {
            let brute = noncrossing_partition_poset(n + 1).mobius_triangle();
            assert_eq!(brute, nc_m_triangle(CoxeterType::A, n).poly, "n={n}");
        }
    }

    #[test]
    fn halo_cardinality_small() {
        assert_eq!(halo_cardinality(2), Int::from(5));
        assert_eq!(halo_cardinality(3), Int::from(16));
    }

    #[test]
    fn halo_h_vectors_small() {
        assert_eq!(halo_h_closed(2), UniPoly::from_ints(&[1, 3, 1]));
        assert_eq!(halo_rev_h_closed(2), UniPoly::from_ints(&[1, 3, 1]));
        assert_eq!(h_vector(&arbor::halo(2).unwrap()), halo_h_closed(2));
    }

    #[test]
    fn halo_checks_pass() {
        let report = halo_checks(6, 10);
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn hochschild_counts_small() {
        assert_eq!(hochschild_count(2), Int::from(5));
        assert_eq!(hochschild_count(4), Int::from(28));
        assert_eq!(hochschild_h_closed(2), UniPoly::from_ints(&[1, 3, 1]));
    }

    #[test]
    fn hochschild_checks_pass() {
        let report = hochschild_checks(5);
        assert!(report.pass(), "{report:?}");
    }
}
