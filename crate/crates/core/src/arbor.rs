//! Arbors: rooted trees whose vertices carry positive multiplicities.
//!
//! Values are kept canonical at all times: children are sorted by their text
//! encoding, so structural equality decides isomorphism and the encoding is
//! a perfect key.

use std::fmt;

use crate::error::{Error, Result};

/// Canonical arbor. The multiplicity of a vertex is the size of its label
/// set; the size of the arbor is the total multiplicity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Arbor {
    mult: u32,
    children: Vec<Arbor>,
}

/// Path of child indices from the root to a vertex.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct VertexAddress(pub Vec<usize>);

impl fmt::Display for VertexAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "root");
        }
        let path: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", path.join("."))
    }
}

impl Arbor {
    /// Canonicalizing constructor: sorts the children by encoding.
    pub fn new(mult: u32, mut children: Vec<Arbor>) -> Result<Arbor> {
        if mult == 0 {
            return Err(Error::EmptyVertex);
        }
        children.sort_by(|a, b| a.encode().cmp(&b.encode()));
        Ok(Arbor { mult, children })
    }

    pub fn leaf(mult: u32) -> Result<Arbor> {
        Arbor::new(mult, Vec::new())
    }

    pub fn root_mult(&self) -> u32 {
        self.mult
    }

    pub fn children(&self) -> &[Arbor] {
        &self.children
    }

    /// Total multiplicity over all vertices.
    pub fn size(&self) -> u32 {
        self.mult + self.children.iter().map(Arbor::size).sum::<u32>()
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.children.iter().map(Arbor::vertex_count).sum::<usize>()
    }

    /// Every vertex has at most one child.
    pub fn is_linear(&self) -> bool {
        match self.children.len() {
            0 => true,
            1 => self.children[0].is_linear(),
            _ => false,
        }
    }

    /// Canonical text form: `"(" mult child* ")"`.
    pub fn encode(&self) -> String {
        let mut s = String::new();
        self.write_encoding(&mut s);
        s
    }

    fn write_encoding(&self, out: &mut String) {
        out.push('(');
        out.push_str(&self.mult.to_string());
        for c in &self.children {
            out.push(' ');
            c.write_encoding(out);
        }
        out.push(')');
    }

    /// Parse the text grammar `arbor := "(" UINT arbor* ")"`; the result is
    /// canonical regardless of the child order in the input.
    pub fn parse(text: &str) -> Result<Arbor> {
        let mut chars = text.chars().peekable();
        let arbor = parse_node(&mut chars)?;
        skip_ws(&mut chars);
        if chars.next().is_some() {
            return Err(Error::Parse("trailing input after arbor".into()));
        }
        Ok(arbor)
    }

    /// Vertex addresses in preorder.
    pub fn addresses(&self) -> Vec<VertexAddress> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        collect_addresses(self, &mut path, &mut out);
        out
    }

    pub fn at(&self, addr: &VertexAddress) -> &Arbor {
        let mut node = self;
        for &i in &addr.0 {
            node = &node.children[i];
        }
        node
    }

    /// Multiplicity sequence from root to leaf of a linear arbor.
    pub fn linear_multiplicities(&self) -> Result<Vec<u32>> {
        let mut out = Vec::new();
        let mut node = self;
        loop {
            out.push(node.mult);
            match node.children.len() {
                0 => return Ok(out),
                1 => node = &node.children[0],
                _ => return Err(Error::NonLinear),
            }
        }
    }

    /// Reverse a linear arbor: the multiplicity sequence read from the leaf.
    pub fn reverse_linear(&self) -> Result<Arbor> {
        let mults = self.linear_multiplicities()?;
        Ok(chain_of(mults.iter().rev().copied()))
    }
}

impl fmt::Display for Arbor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

fn collect_addresses(t: &Arbor, path: &mut Vec<usize>, out: &mut Vec<VertexAddress>) {
    out.push(VertexAddress(path.clone()));
    for (i, c) in t.children.iter().enumerate() {
        path.push(i);
        collect_addresses(c, path, out);
        path.pop();
    }
}

fn skip_ws(chars: &mut std::iter::Peekable<std::str::Chars>) {
    while chars.peek().is_some_and(|c| c.is_whitespace()) {
        chars.next();
    }
}

fn parse_node(chars: &mut std::iter::Peekable<std::str::Chars>) -> Result<Arbor> {
    skip_ws(chars);
    if chars.next() != Some('(') {
        return Err(Error::Parse("expected '('".into()));
    }
    skip_ws(chars);
    let mut digits = String::new();
    while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
        digits.push(chars.next().unwrap());
    }
    if digits.is_empty() {
        return Err(Error::Parse("expected a vertex multiplicity".into()));
    }
    let mult: u32 = digits
        .parse()
        .map_err(|_| Error::Parse(format!("multiplicity '{digits}' out of range")))?;
    let mut children = Vec::new();
    loop {
        skip_ws(chars);
        match chars.peek() {
            Some(')') => {
                chars.next();
                return Arbor::new(mult, children);
            }
            Some('(') => children.push(parse_node(chars)?),
            Some(c) => return Err(Error::Parse(format!("unexpected character '{c}'"))),
            None => return Err(Error::Parse("unbalanced parentheses".into())),
        }
    }
}

fn chain_of(mults: impl IntoIterator<Item = u32>) -> Arbor {
    let mut rev: Vec<u32> = mults.into_iter().collect();
    rev.reverse();
    let mut node = Arbor::leaf(rev[0]).expect("positive multiplicity");
    for &m in &rev[1..] {
        node = Arbor::new(m, vec![node]).expect("positive multiplicity");
    }
    node
}

/// Linear arbor with `n` single-element vertices.
pub fn type_a(n: u32) -> Result<Arbor> {
    if n == 0 {
        return Err(Error::InvalidParameter("type-A arbor needs n >= 1".into()));
    }
    Ok(chain_of(std::iter::repeat(1).take(n as usize)))
}

/// Single vertex with `n` elements.
pub fn type_b(n: u32) -> Result<Arbor> {
    if n == 0 {
        return Err(Error::InvalidParameter("type-B arbor needs n >= 1".into()));
    }
    Arbor::leaf(n)
}

/// Root with `n - 1` elements plus one single-element leaf.
pub fn halo(n: u32) -> Result<Arbor> {
    if n < 2 {
        return Err(Error::InvalidParameter("halo arbor needs n >= 2".into()));
    }
    Arbor::new(n - 1, vec![Arbor::leaf(1)?])
}

/// Single-element root with one leaf of `n - 1` elements; the reverse of
/// the halo arbor. At `n = 1` the would-be empty leaf is omitted.
pub fn halo_rev(n: u32) -> Result<Arbor> {
    match n {
        0 => Err(Error::InvalidParameter("reversed halo arbor needs n >= 1".into())),
        1 => Arbor::leaf(1),
        _ => Arbor::new(1, vec![Arbor::leaf(n - 1)?]),
    }
}

/// Corolla: single-element root carrying `n - 1` single-element leaves.
pub fn hochschild(n: u32) -> Result<Arbor> {
    if n == 0 {
        return Err(Error::InvalidParameter("corolla arbor needs n >= 1".into()));
    }
    Arbor::new(1, vec![Arbor::leaf(1)?; n as usize - 1])
}

/// All isomorphism classes of arbors of the given size, sorted by encoding.
pub fn enumerate_arbors(n: u32) -> Vec<Arbor> {
    let mut by_size: Vec<Vec<Arbor>> = vec![Vec::new(); n as usize + 1];
    for s in 1..=n {
        let mut level = Vec::new();
        // Pool of all smaller arbors, in a fixed order so that multisets are
        // chosen as non-decreasing index sequences.
        let pool: Vec<Arbor> = by_size[1..s as usize]
            .iter()
            .flatten()
            .cloned()
            .collect();
        for r in 1..=s {
            let mut forest = Vec::new();
            collect_forests(&pool, 0, s - r, &mut forest, &mut |children| {
                level.push(Arbor::new(r, children.to_vec()).expect("positive multiplicity"));
            });
        }
        level.sort_by_key(Arbor::encode);
        by_size[s as usize] = level;
    }
    by_size.pop().unwrap_or_default()
}

fn collect_forests(
    pool: &[Arbor],
    start: usize,
    remaining: u32,
    current: &mut Vec<Arbor>,
    emit: &mut impl FnMut(&[Arbor]),
) {
    if remaining == 0 {
        emit(current);
        return;
    }
    for i in start..pool.len() {
        let s = pool[i].size();
        if s <= remaining {
            current.push(pool[i].clone());
            collect_forests(pool, i, remaining - s, current, emit);
            current.pop();
        }
    }
}

/// All linear arbors of size `n`: one per composition of `n`.
pub fn linear_arbors(n: u32) -> Vec<Arbor> {
    let mut out = Vec::new();
    let mut parts = Vec::new();
    fn go(n: u32, parts: &mut Vec<u32>, out: &mut Vec<Arbor>) {
        if n == 0 {
            out.push(chain_of(parts.iter().copied()));
            return;
        }
        for first in 1..=n {
            parts.push(first);
            go(n - first, parts, out);
            parts.pop();
        }
    }
    go(n, &mut parts, &mut out);
    out.sort_by_key(Arbor::encode);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn parse_base_cases() {
        assert_eq!(Arbor::parse("(1)").unwrap().size(), 1);
        let t = Arbor::parse("(2 (2) (1) (1))").unwrap();
        assert_eq!(t.size(), 6);
        assert_eq!(t.root_mult(), 2);
        assert_eq!(t.children().len(), 3);
    }

    #[test]
    fn parse_is_canonical() {
        let a = Arbor::parse("(1 (1) (1))").unwrap();
        let b = Arbor::parse("(1 (1)(1))").unwrap();
        assert_eq!(a, b);
        let c = Arbor::parse("(1 (2) (1))").unwrap();
        assert_eq!(c.encode(), "(1 (1) (2))");
    }

    #[test]
    fn parse_errors() {
        assert!(Arbor::parse("").is_err());
        assert!(Arbor::parse("(0)").is_err());
        assert!(Arbor::parse("(1").is_err());
        assert!(Arbor::parse("(1) x").is_err());
        assert!(Arbor::parse("(a)").is_err());
    }

    #[test]
    fn encode_parse_round_trip() {
        for t in enumerate_arbors(5) {
            assert_eq!(Arbor::parse(&t.encode()).unwrap(), t);
        }
    }

    #[test]
    fn shuffled_children_reach_the_same_canonical_form() {
        // Deterministic shuffles through rotations of the child list.
        let children = vec![
            Arbor::parse("(2)").unwrap(),
            Arbor::parse("(1 (1))").unwrap(),
            Arbor::parse("(1)").unwrap(),
            Arbor::parse("(1)").unwrap(),
        ];
        let reference = Arbor::new(3, children.clone()).unwrap();
        for rot in 0..children.len() {
            let mut shuffled = children.clone();
            shuffled.rotate_left(rot);
            shuffled.swap(0, children.len() - 1);
            assert_eq!(Arbor::new(3, shuffled).unwrap().encode(), reference.encode());
        }
    }

    #[test]
    fn enumeration_small_counts() {
        assert_eq!(enumerate_arbors(1).len(), 1);
        let two: Vec<String> = enumerate_arbors(2).iter().map(Arbor::encode).collect();
        assert_eq!(two, vec!["(1 (1))", "(2)"]);
        assert_eq!(enumerate_arbors(3).len(), 5);
    }

    /// Independent generator: plane arbors (ordered children) deduplicated
    /// through the canonical form.
    fn plane_arbors(n: u32) -> HashSet<String> {
        fn go(n: u32) -> Vec<Arbor> {
            let mut out = Vec::new();
            for r in 1..=n {
                for forest in plane_forests(n - r) {
                    out.push(Arbor::new(r, forest).unwrap());
                }
            }
            out
        }
        fn plane_forests(n: u32) -> Vec<Vec<Arbor>> {
            if n == 0 {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            for first_size in 1..=n {
                for first in go(first_size) {
                    for mut rest in plane_forests(n - first_size) {
                        rest.insert(0, first.clone());
                        out.push(rest);
                    }
                }
            }
            out
        }
        go(n).into_iter().map(|t| t.encode()).collect()
    }

    #[test]
    fn enumeration_matches_plane_arbor_dedup() {
        for n in 1..=7 {
            let fast: HashSet<String> =
                enumerate_arbors(n).iter().map(Arbor::encode).collect();
            assert_eq!(fast.len(), enumerate_arbors(n).len(), "duplicates at size {n}");
            assert_eq!(fast, plane_arbors(n), "size {n}");
        }
    }

    #[test]
    fn enumeration_contains_the_named_families() {
        for n in 2..=6 {
            let all: HashSet<String> = enumerate_arbors(n).iter().map(Arbor::encode).collect();
            assert!(all.contains(&type_a(n).unwrap().encode()));
            assert!(all.contains(&type_b(n).unwrap().encode()));
            assert!(all.contains(&halo(n).unwrap().encode()));
            assert!(all.contains(&hochschild(n).unwrap().encode()));
        }
    }

    #[test]
    fn reversal_examples() {
        let t = Arbor::parse("(2 (2 (1 (1))))").unwrap();
        assert_eq!(t.reverse_linear().unwrap().encode(), "(1 (1 (2 (2))))");
        let one = Arbor::parse("(1)").unwrap();
        assert_eq!(one.reverse_linear().unwrap(), one);
        assert!(Arbor::parse("(1 (1) (1))").unwrap().reverse_linear().is_err());
    }

    #[test]
    fn reversal_is_an_involution() {
        for n in 1..=8 {
            for t in linear_arbors(n) {
                let r = t.reverse_linear().unwrap();
                assert_eq!(r.size(), t.size());
                assert_eq!(r.reverse_linear().unwrap(), t);
            }
        }
    }

    #[test]
    fn family_constructors() {
        assert_eq!(type_a(3).unwrap().encode(), "(1 (1 (1)))");
        assert_eq!(type_b(4).unwrap().encode(), "(4)");
        assert_eq!(halo(2).unwrap().encode(), "(1 (1))");
        assert_eq!(halo_rev(2).unwrap().encode(), "(1 (1))");
        assert_eq!(halo(4).unwrap().encode(), "(3 (1))");
        assert_eq!(halo_rev(4).unwrap().encode(), "(1 (3))");
        assert_eq!(hochschild(4).unwrap().encode(), "(1 (1) (1) (1))");
        assert_eq!(halo_rev(1).unwrap().encode(), "(1)");
        assert!(halo(1).is_err());
        assert!(type_a(0).is_err());
    }

    #[test]
    fn linear_arbors_are_compositions() {
        assert_eq!(linear_arbors(4).len(), 8);
        assert!(linear_arbors(4).iter().all(Arbor::is_linear));
    }
}
