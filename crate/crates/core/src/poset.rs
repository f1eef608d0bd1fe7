//! Finite graded posets and the brute-force oracles: multichain counts,
//! Möbius recursion, maximal chains and the cubical face vector.

use num_traits::{One, Zero};

use crate::algebra::{BiPoly, Int, Rat, UniPoly};
use crate::arbor::Arbor;
use crate::error::{Error, Result};
use crate::polytope;

/// Explicit finite poset with a rank function. The order relation is kept
/// as a dense matrix, so any order can be loaded; construction from integer
/// vectors uses coordinatewise comparison.
#[derive(Clone, Debug)]
pub struct FinitePoset {
    heights: Vec<u32>,
    leq: Vec<Vec<bool>>,
}

impl FinitePoset {
    /// Coordinatewise order on a list of vectors.
    pub fn from_vectors(vectors: &[Vec<u32>]) -> FinitePoset {
        let n = vectors.len();
        let heights = vectors.iter().map(|v| v.iter().sum()).collect();
        let mut leq = vec![vec![false; n]; n];
        for (i, a) in vectors.iter().enumerate() {
            for (j, b) in vectors.iter().enumerate() {
                leq[i][j] = a.iter().zip(b).all(|(x, y)| x <= y);
            }
        }
        FinitePoset { heights, leq }
    }

    /// Load an arbitrary graded order.
    pub fn from_relation(heights: Vec<u32>, leq: Vec<Vec<bool>>) -> FinitePoset {
        debug_assert_eq!(heights.len(), leq.len());
        debug_assert!((0..heights.len()).all(|i| leq[i][i]));
        FinitePoset { heights, leq }
    }

    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn height(&self, i: usize) -> u32 {
        self.heights[i]
    }

    pub fn max_height(&self) -> u32 {
        self.heights.iter().copied().max().unwrap_or(0)
    }

    /// Number of elements of each height.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.max_height() as usize + 1];
        for &h in &self.heights {
            out[h as usize] += 1;
        }
        out
    }

    fn down_lists(&self) -> Vec<Vec<usize>> {
        (0..self.len())
            .map(|j| (0..self.len()).filter(|&i| self.leq[i][j]).collect())
            .collect()
    }

    /// Number of weak chains `e_1 <= ... <= e_{m-1}`.
    pub fn chain_count(&self, m: u32) -> Int {
        self.chain_count_by_top_height(m).iter().sum()
    }

    /// Weak chains of length `m - 1` grouped by the height of the top
    /// element.
    pub fn chain_count_by_top_height(&self, m: u32) -> Vec<Int> {
        assert!(m >= 2, "chains need m >= 2");
        let down = self.down_lists();
        let mut counts = vec![Int::one(); self.len()];
        for _ in 0..m - 2 {
            counts = (0..self.len())
                .map(|i| down[i].iter().map(|&j| &counts[j]).sum())
                .collect();
        }
        let mut by_height = vec![Int::zero(); self.max_height() as usize + 1];
        for (i, c) in counts.iter().enumerate() {
            by_height[self.heights[i] as usize] += c;
        }
        by_height
    }

    /// The Möbius triangle by direct recursion over intervals:
    /// `mu(a, a) = 1` and `mu(a, b) = -sum of mu(a, c) over a <= c < b`.
    pub fn mobius_triangle(&self) -> BiPoly {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| self.heights[i]);
        let mut out = BiPoly::zero();
        let mut mu = vec![Int::zero(); n];
        for &a in &order {
            let up: Vec<usize> = order
                .iter()
                .copied()
                .filter(|&b| self.leq[a][b])
                .collect();
            for (pos, &b) in up.iter().enumerate() {
                let mut m = if a == b { Int::one() } else { Int::zero() };
                for &c in &up[..pos] {
                    if self.leq[c][b] && c != b {
                        m -= &mu[c];
                    }
                }
                mu[b] = m;
            }
            for &b in &up {
                if !mu[b].is_zero() {
                    out.add_term(
                        Rat::from_integer(mu[b].clone()),
                        self.heights[a],
                        self.heights[b],
                    );
                }
            }
        }
        out
    }

    /// Saturated chains from the minimum to a top-height element, walking
    /// one cover at a time. Graded poset: covers are the relations with
    /// height difference one.
    pub fn maximal_chain_count(&self) -> Int {
        let n = self.len();
        let top = self.max_height();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| self.heights[i]);
        let mut ways = vec![Int::zero(); n];
        for &i in &order {
            if self.heights[i] == 0 {
                ways[i] = Int::one();
                continue;
            }
            let h = self.heights[i];
            ways[i] = (0..n)
                .filter(|&j| self.heights[j] + 1 == h && self.leq[j][i])
                .map(|j| &ways[j])
                .sum();
        }
        (0..n)
            .filter(|&i| self.heights[i] == top)
            .map(|i| &ways[i])
            .sum()
    }
}

/// A poset whose elements are integer vectors, keeping the vectors around
/// for the statistics that depend on them.
#[derive(Clone, Debug)]
pub struct VectorPoset {
    pub vectors: Vec<Vec<u32>>,
    pub poset: FinitePoset,
}

impl VectorPoset {
    pub fn new(mut vectors: Vec<Vec<u32>>) -> VectorPoset {
        vectors.sort_by_key(|v| (v.iter().sum::<u32>(), v.clone()));
        let poset = FinitePoset::from_vectors(&vectors);
        VectorPoset { vectors, poset }
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Face vector of the cubical complex on the Hasse diagram:
    /// every element contributes `(1+X)^nz`.
    pub fn cubical_f_vector(&self) -> UniPoly {
        let one_plus_x = UniPoly::from_ints(&[1, 1]);
        let max_nz = self.vectors.iter().map(|v| nonzeros(v)).max().unwrap_or(0);
        let powers: Vec<UniPoly> = (0..=max_nz).map(|k| one_plus_x.pow(k)).collect();
        let mut acc = UniPoly::zero();
        for v in &self.vectors {
            acc = &acc + &powers[nonzeros(v)];
        }
        acc
    }

    /// Generating polynomial of elements by number of nonzero coordinates.
    pub fn nz_polynomial(&self) -> UniPoly {
        let max_nz = self.vectors.iter().map(|v| nonzeros(v)).max().unwrap_or(0);
        let mut coeffs = vec![Rat::zero(); max_nz + 1];
        for v in &self.vectors {
            coeffs[nonzeros(v)] += Rat::one();
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Joint histogram by (nonzeros, height) as a two-variable polynomial.
    pub fn nz_height_polynomial(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for v in &self.vectors {
            out.add_term(Rat::one(), nonzeros(v) as u32, v.iter().sum());
        }
        out
    }
}

fn nonzeros(v: &[u32]) -> usize {
    v.iter().filter(|&&x| x > 0).count()
}

/// The poset of lattice points of the arbor's polytope under coordinatewise
/// comparison.
pub fn build_poset(t: &Arbor) -> VectorPoset {
    VectorPoset::new(polytope::lattice_points(t, 1))
}

/// As `build_poset`, refusing to build past `limit` elements.
pub fn build_poset_guarded(t: &Arbor, limit: u64) -> Result<VectorPoset> {
    let predicted = polytope::dilate_count_estimate(t, 1);
    if predicted > limit as u128 {
        return Err(Error::GuardExceeded {
            what: "poset construction",
            needed: predicted.min(u64::MAX as u128) as u64,
            limit,
        });
    }
    Ok(build_poset(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::arbor::{enumerate_arbors, type_a};

    fn chain2() -> VectorPoset {
        build_poset(&Arbor::parse("(1)").unwrap())
    }

    #[test]
    fn two_chain_basics() {
        let p = chain2();
        assert_eq!(p.len(), 2);
        assert_eq!(p.poset.chain_count(2), Int::from(2));
        assert_eq!(p.poset.chain_count(3), Int::from(3));
        assert_eq!(p.poset.maximal_chain_count(), Int::from(1));
        assert_eq!(p.cubical_f_vector(), UniPoly::from_ints(&[2, 1]));
    }

    #[test]
    fn two_chain_mobius() {
        // 1 - Y + XY
        let m = chain2().poset.mobius_triangle();
        assert_eq!(m.coeff(0, 0), rat(1));
        assert_eq!(m.coeff(0, 1), rat(-1));
        assert_eq!(m.coeff(1, 1), rat(1));
        assert_eq!(m.len(), 3);
    }

    #[test]
    fn element_counts() {
        assert_eq!(build_poset(&Arbor::parse("(2 (2) (1) (1))").unwrap()).len(), 330);
        assert_eq!(build_poset(&type_a(3).unwrap()).len(), 14);
    }

    #[test]
    fn pentagon_chain_counts() {
        let p = build_poset(&Arbor::parse("(1 (1))").unwrap());
        assert_eq!(p.poset.chain_count(2), Int::from(5));
        assert_eq!(p.poset.chain_count(3), Int::from(12));
    }

    #[test]
    fn type_a3_mobius_matrix() {
        let m = build_poset(&type_a(3).unwrap()).poset.mobius_triangle();
        // Rows by Y-degree, X-coefficients in order.
        let expected: [(&[i64], u32); 4] = [
            (&[1], 0),
            (&[-3, 3], 1),
            (&[3, -8, 5], 2),
            (&[-1, 6, -10, 5], 3),
        ];
        for (coeffs, y) in expected {
            for (x, &c) in coeffs.iter().enumerate() {
                assert_eq!(m.coeff(x as u32, y), rat(c), "X^{x} Y^{y}");
            }
        }
    }

    #[test]
    fn maximal_chain_counts_of_the_reverse_pair() {
        let t = Arbor::parse("(2 (2 (1 (1))))").unwrap();
        let r = t.reverse_linear().unwrap();
        assert_eq!(build_poset(&t).poset.maximal_chain_count(), Int::from(21552));
        assert_eq!(build_poset(&r).poset.maximal_chain_count(), Int::from(20167));
    }

    #[test]
    fn running_example_f_vector() {
        let f = build_poset(&Arbor::parse("(2 (2) (1) (1))").unwrap()).cubical_f_vector();
        assert_eq!(f, UniPoly::from_ints(&[330, 990, 1152, 654, 186, 24, 1]));
    }

    #[test]
    fn down_intervals_are_chain_products() {
        for n in 1..=5 {
            for t in enumerate_arbors(n) {
                let p = build_poset(&t);
                for (j, b) in p.vectors.iter().enumerate() {
                    let expected: u64 = b.iter().map(|&x| x as u64 + 1).product();
                    let actual = (0..p.len()).filter(|&i| p.poset.leq(i, j)).count() as u64;
                    assert_eq!(actual, expected, "{t}");
                }
            }
        }
    }

    #[test]
    fn guard_refuses_large_posets() {
        let t = Arbor::parse("(6)").unwrap();
        assert!(build_poset_guarded(&t, 10).is_err());
        assert!(build_poset_guarded(&t, 10_000).is_ok());
    }
}
