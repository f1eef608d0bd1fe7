//! The lattice polytope of an arbor: coordinate layout, defining
//! inequalities, lattice points of dilates, vertices, and the Minkowski
//! and Newton-polynomial cross-checks.
//!
//! Coordinates follow the preorder flattening of the arbor: a vertex's own
//! block comes first, then the blocks of its subtrees. The polytope is cut
//! out by nonnegativity together with one inequality per vertex `v`: the
//! coordinates of the subtree below `v` sum to at most the subtree size.

use std::collections::HashSet;

use num_traits::Zero;

use crate::algebra::Rat;
use crate::arbor::{Arbor, VertexAddress};
use crate::error::{Error, Result};

/// Index data for one arbor vertex inside the flattened coordinate space.
#[derive(Clone, Debug)]
pub struct NodeLayout {
    pub address: VertexAddress,
    pub mult: u32,
    /// The vertex's own coordinates: `own_start .. own_start + mult`.
    pub own_start: usize,
    /// The subtree block (the "down" set): `subtree_start .. subtree_start + subtree_size`.
    pub subtree_start: usize,
    pub subtree_size: usize,
    /// The "up" set: own coordinates of the path from the root down to here.
    pub up_indices: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct CoordinateLayout {
    dim: usize,
    nodes: Vec<NodeLayout>,
}

impl CoordinateLayout {
    pub fn new(t: &Arbor) -> Self {
        let mut nodes = Vec::new();
        let mut next = 0usize;
        let mut path = Vec::new();
        let mut own_stack: Vec<(usize, usize)> = Vec::new();
        walk(t, &mut path, &mut next, &mut own_stack, &mut nodes);
        CoordinateLayout { dim: next, nodes }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nodes(&self) -> &[NodeLayout] {
        &self.nodes
    }

    /// One inequality per arbor vertex: indices of the subtree block and
    /// its bound.
    pub fn inequalities(&self) -> impl Iterator<Item = (std::ops::Range<usize>, u32)> + '_ {
        self.nodes.iter().map(|n| {
            (
                n.subtree_start..n.subtree_start + n.subtree_size,
                n.subtree_size as u32,
            )
        })
    }

    /// Does the point lie in the `m`-th dilate?
    pub fn contains(&self, point: &[u32], m: u32) -> bool {
        debug_assert_eq!(point.len(), self.dim);
        self.inequalities()
            .all(|(range, bound)| point[range].iter().sum::<u32>() <= m * bound)
    }

    /// Slack of the inequality of the given node at a point of the
    /// `m`-th dilate.
    pub fn defect(&self, node: &NodeLayout, point: &[u32], m: u32) -> i64 {
        let s: u32 = point[node.subtree_start..node.subtree_start + node.subtree_size]
            .iter()
            .sum();
        (m as i64) * (node.subtree_size as i64) - s as i64
    }
}

fn walk(
    t: &Arbor,
    path: &mut Vec<usize>,
    next: &mut usize,
    own_stack: &mut Vec<(usize, usize)>,
    nodes: &mut Vec<NodeLayout>,
) {
    let subtree_start = *next;
    let own_start = *next;
    *next += t.root_mult() as usize;
    own_stack.push((own_start, t.root_mult() as usize));
    let up_indices = own_stack.iter().flat_map(|&(s, l)| s..s + l).collect();
    let node_idx = nodes.len();
    nodes.push(NodeLayout {
        address: VertexAddress(path.clone()),
        mult: t.root_mult(),
        own_start,
        subtree_start,
        subtree_size: 0,
        up_indices,
    });
    for (i, c) in t.children().iter().enumerate() {
        path.push(i);
        walk(c, path, next, own_stack, nodes);
        path.pop();
    }
    nodes[node_idx].subtree_size = *next - subtree_start;
    own_stack.pop();
}

/// All vectors in `N^r` with coordinate sum at most `budget`.
pub(crate) fn vectors_with_sum_at_most(r: usize, budget: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; r];
    fn go(i: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == current.len() {
            out.push(current.clone());
            return;
        }
        for v in 0..=left {
            current[i] = v;
            go(i + 1, left - v, current, out);
        }
        current[i] = 0;
    }
    go(0, budget, &mut current, &mut out);
    out
}

/// Lattice points of the `m`-th dilate, enumerated along the projection to
/// the product over subtrees, sorted lexicographically.
pub fn lattice_points(t: &Arbor, m: u32) -> Vec<Vec<u32>> {
    assert!(m >= 1);
    let mut pts = points_rec(t, m);
    pts.sort_unstable();
    pts
}

/// As `lattice_points`, refusing requests whose predicted size exceeds `limit`.
pub fn lattice_points_guarded(t: &Arbor, m: u32, limit: u64) -> Result<Vec<Vec<u32>>> {
    let predicted = dilate_count_estimate(t, m);
    if predicted > limit as u128 {
        return Err(Error::GuardExceeded {
            what: "lattice point enumeration",
            needed: predicted.min(u64::MAX as u128) as u64,
            limit,
        });
    }
    Ok(lattice_points(t, m))
}

/// Predicted number of lattice points in the `m`-th dilate (saturating).
pub fn dilate_count_estimate(t: &Arbor, m: u32) -> u128 {
    dilate_height_histogram(t, m).iter().fold(0u128, |a, &b| a.saturating_add(b))
}

fn dilate_height_histogram(t: &Arbor, m: u32) -> Vec<u128> {
    let mut w: Vec<u128> = vec![1];
    for c in t.children() {
        let ch = dilate_height_histogram(c, m);
        let mut next = vec![0u128; w.len() + ch.len() - 1];
        for (i, a) in w.iter().enumerate() {
            for (j, b) in ch.iter().enumerate() {
                next[i + j] = next[i + j].saturating_add(a.saturating_mul(*b));
            }
        }
        w = next;
    }
    let cap = (m * t.size()) as usize;
    let r = t.root_mult() as u128;
    let mut out = vec![0u128; cap + 1];
    for (j, slot) in out.iter_mut().enumerate() {
        for (l, count) in (0..=j).rev().zip(w.iter()) {
            // Height-l root blocks over each projected point of height j - l.
            let mut ways: u128 = 1;
            for i in 1..r {
                ways = ways.saturating_mul(l as u128 + i) / i;
            }
            *slot = slot.saturating_add(ways.saturating_mul(*count));
        }
    }
    out
}

fn points_rec(t: &Arbor, m: u32) -> Vec<Vec<u32>> {
    let n = t.size();
    let r = t.root_mult() as usize;
    let cap = m * n;
    let mut tails: Vec<(Vec<u32>, u32)> = vec![(Vec::new(), 0)];
    for c in t.children() {
        let child_points = points_rec(c, m);
        let mut next = Vec::with_capacity(tails.len() * child_points.len());
        for (tail, h) in &tails {
            for cp in &child_points {
                let ch: u32 = cp.iter().sum();
                let mut v = Vec::with_capacity(tail.len() + cp.len());
                v.extend_from_slice(tail);
                v.extend_from_slice(cp);
                next.push((v, h + ch));
            }
        }
        tails = next;
    }
    let mut out = Vec::new();
    for (tail, h) in tails {
        for mut head in vectors_with_sum_at_most(r, cap - h) {
            head.extend_from_slice(&tail);
            out.push(head);
        }
    }
    out
}

/// Vertices of the polytope. Over every vertex of the product of subtree
/// polytopes of height `h` the fiber contributes the all-zero root block
/// plus, for each root coordinate, the block with that single coordinate
/// equal to `size - h`.
pub fn vertices(t: &Arbor) -> Vec<Vec<u32>> {
    let mut vs = vertices_rec(t);
    vs.sort_unstable();
    vs
}

fn vertices_rec(t: &Arbor) -> Vec<Vec<u32>> {
    let n = t.size();
    let r = t.root_mult() as usize;
    let mut tails: Vec<(Vec<u32>, u32)> = vec![(Vec::new(), 0)];
    for c in t.children() {
        let child_vertices = vertices_rec(c);
        let mut next = Vec::with_capacity(tails.len() * child_vertices.len());
        for (tail, h) in &tails {
            for cv in &child_vertices {
                let ch: u32 = cv.iter().sum();
                let mut v = Vec::with_capacity(tail.len() + cv.len());
                v.extend_from_slice(tail);
                v.extend_from_slice(cv);
                next.push((v, h + ch));
            }
        }
        tails = next;
    }
    let mut out = Vec::new();
    for (tail, h) in tails {
        let mut zero_head = vec![0u32; r];
        zero_head.extend_from_slice(&tail);
        out.push(zero_head);
        for i in 0..r {
            let mut head = vec![0u32; r];
            head[i] = n - h;
            head.extend_from_slice(&tail);
            out.push(head);
        }
    }
    out
}

/// Independent extremality test: a point of the polytope is a vertex
/// exactly when its active constraints have full rank.
pub fn is_vertex(layout: &CoordinateLayout, point: &[u32]) -> bool {
    if !layout.contains(point, 1) {
        return false;
    }
    let n = layout.dim();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for (i, &x) in point.iter().enumerate() {
        if x == 0 {
            let mut row = vec![Rat::zero(); n];
            row[i] = crate::algebra::rat(1);
            rows.push(row);
        }
    }
    for (range, bound) in layout.inequalities() {
        if point[range.clone()].iter().sum::<u32>() == bound {
            let mut row = vec![Rat::zero(); n];
            for i in range {
                row[i] = crate::algebra::rat(1);
            }
            rows.push(row);
        }
    }
    rank(rows) == n
}

fn rank(mut rows: Vec<Vec<Rat>>) -> usize {
    let mut rank = 0;
    let cols = rows.first().map_or(0, Vec::len);
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] * &inv;
            for c in col..cols {
                let delta = &rows[rank][c] * &factor;
                rows[r][c] = &rows[r][c] - &delta;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// One Minkowski summand per arbor vertex: the simplex spanned by the
/// origin and `scale` times each unit vector of the up set.
#[derive(Clone, Debug)]
pub struct MinkowskiSummand {
    pub address: VertexAddress,
    pub scale: u32,
    pub support: Vec<usize>,
}

pub fn minkowski_summands(t: &Arbor) -> Vec<MinkowskiSummand> {
    CoordinateLayout::new(t)
        .nodes()
        .iter()
        .map(|n| MinkowskiSummand {
            address: n.address.clone(),
            scale: n.mult,
            support: n.up_indices.clone(),
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct MinkowskiCheck {
    pub tuple_sums_inside: bool,
    pub vertices_decomposable: bool,
    pub vertex_count: usize,
    pub tuples_checked: u64,
}

impl MinkowskiCheck {
    pub fn pass(&self) -> bool {
        self.tuple_sums_inside && self.vertices_decomposable
    }
}

/// Verify both inclusions of the Minkowski decomposition: sums of one
/// summand vertex each land in the polytope, and every polytope vertex is
/// such a sum.
pub fn check_minkowski(t: &Arbor) -> MinkowskiCheck {
    let layout = CoordinateLayout::new(t);
    let summands = minkowski_summands(t);
    let dim = layout.dim();

    let mut tuple_sums_inside = true;
    let mut tuples_checked = 0u64;
    let mut stack = vec![(0usize, vec![0u32; dim])];
    while let Some((i, acc)) = stack.pop() {
        if i == summands.len() {
            tuples_checked += 1;
            if !layout.contains(&acc, 1) {
                tuple_sums_inside = false;
                break;
            }
            continue;
        }
        stack.push((i + 1, acc.clone()));
        for &c in &summands[i].support {
            let mut next = acc.clone();
            next[c] += summands[i].scale;
            stack.push((i + 1, next));
        }
    }

    let vs = vertices(t);
    let suffix_scale: Vec<u64> = {
        let mut s = vec![0u64; summands.len() + 1];
        for i in (0..summands.len()).rev() {
            s[i] = s[i + 1] + summands[i].scale as u64;
        }
        s
    };
    let vertices_decomposable = vs.iter().all(|z| {
        let mut need: Vec<i64> = z.iter().map(|&x| x as i64).collect();
        decompose(&summands, &suffix_scale, 0, &mut need)
    });

    MinkowskiCheck {
        tuple_sums_inside,
        vertices_decomposable,
        vertex_count: vs.len(),
        tuples_checked,
    }
}

fn decompose(
    summands: &[MinkowskiSummand],
    suffix_scale: &[u64],
    i: usize,
    need: &mut Vec<i64>,
) -> bool {
    // Entries of `need` stay nonnegative, so a zero sum means all zero:
    // the remaining summands can all take the origin.
    let need_ht: i64 = need.iter().sum();
    if need_ht == 0 {
        return true;
    }
    if i == summands.len() || need_ht > suffix_scale[i] as i64 {
        return false;
    }
    if decompose(summands, suffix_scale, i + 1, need) {
        return true;
    }
    let scale = summands[i].scale as i64;
    for &c in &summands[i].support {
        if need[c] >= scale {
            need[c] -= scale;
            let found = decompose(summands, suffix_scale, i + 1, need);
            need[c] += scale;
            if found {
                return true;
            }
        }
    }
    false
}

#[derive(Clone, Debug)]
pub struct NewtonCheck {
    pub support_size: usize,
    pub support_inside: bool,
    pub vertices_covered: bool,
    pub extremal_match: bool,
}

impl NewtonCheck {
    pub fn pass(&self) -> bool {
        self.support_inside && self.vertices_covered && self.extremal_match
    }
}

/// Expand the product over vertices of `(1 + sum of up-set variables)^mult`
/// and compare its exponent support with the polytope.
pub fn newton_check(t: &Arbor) -> NewtonCheck {
    let layout = CoordinateLayout::new(t);
    let dim = layout.dim();
    let mut support: HashSet<Vec<u32>> = HashSet::new();
    support.insert(vec![0u32; dim]);
    for node in layout.nodes() {
        let mut next = HashSet::new();
        for dist in vectors_with_sum_at_most(node.up_indices.len(), node.mult) {
            for p in &support {
                let mut q = p.clone();
                for (slot, &idx) in node.up_indices.iter().enumerate() {
                    q[idx] += dist[slot];
                }
                next.insert(q);
            }
        }
        support = next;
    }

    let support_inside = support.iter().all(|p| layout.contains(p, 1));
    let vs: HashSet<Vec<u32>> = vertices(t).into_iter().collect();
    let vertices_covered = vs.iter().all(|v| support.contains(v));
    let extremal: HashSet<Vec<u32>> = support
        .iter()
        .filter(|p| is_vertex(&layout, p))
        .cloned()
        .collect();
    NewtonCheck {
        support_size: support.len(),
        support_inside,
        vertices_covered,
        extremal_match: extremal == vs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arbor::{enumerate_arbors, type_a};

    fn running_example() -> Arbor {
        Arbor::parse("(2 (2) (1) (1))").unwrap()
    }

    #[test]
    fn layout_of_single_vertex() {
        let l = CoordinateLayout::new(&Arbor::parse("(1)").unwrap());
        assert_eq!(l.dim(), 1);
        assert_eq!(l.nodes()[0].subtree_size, 1);
    }

    #[test]
    fn layout_of_running_example() {
        let l = CoordinateLayout::new(&running_example());
        assert_eq!(l.dim(), 6);
        let mut down_sizes: Vec<usize> = l.nodes().iter().map(|n| n.subtree_size).collect();
        down_sizes.sort_unstable();
        assert_eq!(down_sizes, vec![1, 1, 2, 6]);
        let mut up_sizes: Vec<usize> = l.nodes().iter().map(|n| n.up_indices.len()).collect();
        up_sizes.sort_unstable();
        assert_eq!(up_sizes, vec![2, 3, 3, 4]);
    }

    #[test]
    fn pentagon_lattice_points() {
        let t = Arbor::parse("(1 (1))").unwrap();
        let pts = lattice_points(&t, 1);
        assert_eq!(
            pts,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![1, 0],
                vec![1, 1],
                vec![2, 0]
            ]
        );
    }

    #[test]
    fn running_example_point_count() {
        assert_eq!(lattice_points(&running_example(), 1).len(), 330);
    }

    #[test]
    fn type_a_point_count() {
        assert_eq!(lattice_points(&type_a(3).unwrap(), 1).len(), 14);
    }

    /// Independent oracle: depth-first scan over coordinate boxes with
    /// inequality pruning, no fiber recursion.
    fn scan_lattice_points(t: &Arbor, m: u32) -> Vec<Vec<u32>> {
        let layout = CoordinateLayout::new(t);
        let ineqs: Vec<(std::ops::Range<usize>, u32)> = layout.inequalities().collect();
        let dim = layout.dim();
        let mut out = Vec::new();
        let mut point = vec![0u32; dim];
        fn go(
            i: usize,
            point: &mut Vec<u32>,
            ineqs: &[(std::ops::Range<usize>, u32)],
            m: u32,
            out: &mut Vec<Vec<u32>>,
        ) {
            if ineqs
                .iter()
                .any(|(r, b)| point[r.clone()].iter().sum::<u32>() > m * b)
            {
                return;
            }
            if i == point.len() {
                out.push(point.clone());
                return;
            }
            let mut v = 0;
            loop {
                point[i] = v;
                let feasible = ineqs
                    .iter()
                    .all(|(r, b)| point[r.clone()].iter().sum::<u32>() <= m * b);
                if !feasible {
                    break;
                }
                go(i + 1, point, ineqs, m, out);
                v += 1;
            }
            point[i] = 0;
        }
        go(0, &mut point, &ineqs, m, &mut out);
        out.sort_unstable();
        out
    }

    #[test]
    fn enumeration_matches_box_scan() {
        for n in 1..=4 {
            for t in enumerate_arbors(n) {
                for m in 1..=2 {
                    assert_eq!(lattice_points(&t, m), scan_lattice_points(&t, m), "{t} m={m}");
                }
            }
        }
    }

    #[test]
    fn segment_vertices() {
        let vs = vertices(&Arbor::parse("(1)").unwrap());
        assert_eq!(vs, vec![vec![0], vec![1]]);
    }

    #[test]
    fn running_example_vertex_count() {
        assert_eq!(vertices(&running_example()).len(), 36);
    }

    #[test]
    fn trapezoid_vertices_are_the_extremal_points() {
        // Five lattice points but only four extremal ones: (1,0) is the
        // midpoint of (0,0) and (2,0).
        let t = Arbor::parse("(1 (1))").unwrap();
        let vs = vertices(&t);
        assert_eq!(
            vs,
            vec![vec![0, 0], vec![0, 1], vec![1, 1], vec![2, 0]]
        );
        let layout = CoordinateLayout::new(&t);
        let extremal: Vec<Vec<u32>> = lattice_points(&t, 1)
            .into_iter()
            .filter(|p| is_vertex(&layout, p))
            .collect();
        assert_eq!(extremal, vs);
    }

    #[test]
    fn vertices_match_rank_oracle() {
        for n in 1..=4 {
            for t in enumerate_arbors(n) {
                let layout = CoordinateLayout::new(&t);
                let from_recursion = vertices(&t);
                let from_rank: Vec<Vec<u32>> = lattice_points(&t, 1)
                    .into_iter()
                    .filter(|p| is_vertex(&layout, p))
                    .collect();
                assert_eq!(from_recursion, from_rank, "{t}");
            }
        }
    }

    #[test]
    fn fiber_cardinality() {
        for n in 1..=5 {
            for t in enumerate_arbors(n) {
                let product: usize = t.children().iter().map(|c| vertices(c).len()).product();
                assert_eq!(
                    vertices(&t).len(),
                    (t.root_mult() as usize + 1) * product,
                    "{t}"
                );
            }
        }
    }

    #[test]
    fn hypercube_containment_and_no_interior_point() {
        for n in 1..=5 {
            for t in enumerate_arbors(n) {
                let layout = CoordinateLayout::new(&t);
                let dim = layout.dim();
                for mask in 0..(1u32 << dim) {
                    let p: Vec<u32> = (0..dim).map(|i| (mask >> i) & 1).collect();
                    assert!(layout.contains(&p, 1));
                }
                for p in lattice_points(&t, 1) {
                    let all_positive = p.iter().all(|&x| x >= 1);
                    let all_strict = layout
                        .inequalities()
                        .all(|(r, b)| p[r].iter().sum::<u32>() < b);
                    assert!(!(all_positive && all_strict), "interior point in {t}");
                }
            }
        }
    }

    #[test]
    fn summands_of_running_example() {
        let s = minkowski_summands(&running_example());
        let mut scales: Vec<u32> = s.iter().map(|x| x.scale).collect();
        scales.sort_unstable();
        assert_eq!(scales, vec![1, 1, 2, 2]);
        let mut supports: Vec<usize> = s.iter().map(|x| x.support.len()).collect();
        supports.sort_unstable();
        assert_eq!(supports, vec![2, 3, 3, 4]);
    }

    #[test]
    fn summands_of_small_arbors() {
        let s = minkowski_summands(&Arbor::parse("(1)").unwrap());
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].scale, 1);
        assert_eq!(s[0].support, vec![0]);
        let s = minkowski_summands(&Arbor::parse("(1 (1))").unwrap());
        assert_eq!(s[0].support, vec![0]);
        assert_eq!(s[1].support, vec![0, 1]);
    }

    #[test]
    fn minkowski_check_examples() {
        assert!(check_minkowski(&Arbor::parse("(1)").unwrap()).pass());
        assert!(check_minkowski(&running_example()).pass());
    }

    #[test]
    fn minkowski_check_sweep() {
        for n in 1..=5 {
            for t in enumerate_arbors(n) {
                assert!(check_minkowski(&t).pass(), "{t}");
            }
        }
    }

    #[test]
    fn newton_support_of_segment() {
        let r = newton_check(&Arbor::parse("(1)").unwrap());
        assert_eq!(r.support_size, 2);
        assert!(r.pass());
    }

    #[test]
    fn newton_support_of_type_a3() {
        let r = newton_check(&type_a(3).unwrap());
        assert_eq!(r.support_size, 14);
        assert!(r.pass());
    }

    #[test]
    fn newton_check_sweep() {
        for n in 1..=5 {
            for t in enumerate_arbors(n) {
                assert!(newton_check(&t).pass(), "{t}");
            }
        }
    }

    #[test]
    fn guarded_enumeration_refuses_large_requests() {
        let t = Arbor::parse("(6)").unwrap();
        assert!(matches!(
            lattice_points_guarded(&t, 7, 1000),
            Err(Error::GuardExceeded { .. })
        ));
        assert!(lattice_points_guarded(&t, 1, 1000).is_ok());
    }
}
