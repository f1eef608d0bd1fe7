use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rat_to_json, Rat, UniPoly};

/// Sparse bivariate polynomial over the rationals.
///
/// Keys are exponent pairs `(i, j)` for the first and second variable; no
/// explicit zero coefficients are stored. Variables are positional, so the
/// same type carries X,Y triangles, the u,X refined Zeta and the E,V
/// Laplace polynomials.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::term(Rat::one(), 0, 0)
    }

    pub fn constant(c: Rat) -> Self {
        BiPoly::term(c, 0, 0)
    }

    pub fn term(c: Rat, i: u32, j: u32) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(c, i, j);
        p
    }

    /// First variable.
    pub fn var_a() -> Self {
        BiPoly::term(Rat::one(), 1, 0)
    }

    /// Second variable.
    pub fn var_b() -> Self {
        BiPoly::term(Rat::one(), 0, 1)
    }

    pub fn add_term(&mut self, c: Rat, i: u32, j: u32) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((i, j)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rat)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn deg_a(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn deg_b(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn scale(&self, r: &Rat) -> BiPoly {
        if r.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, c * r)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exchange the two variables.
    pub fn swap_vars(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, a: &Rat, b: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&(i, j), c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..i {
                t *= a;
            }
            for _ in 0..j {
                t *= b;
            }
            acc += t;
        }
        acc
    }

    /// Substitute a value for the first variable; the result is univariate
    /// in the second.
    pub fn eval_a(&self, a: &Rat) -> UniPoly {
        let deg = self.deg_b().map_or(0, |d| d as usize);
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for (&(i, j), c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..i {
                t *= a;
            }
            coeffs[j as usize] += t;
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Substitute a value for the second variable; the result is univariate
    /// in the first.
    pub fn eval_b(&self, b: &Rat) -> UniPoly {
        self.swap_vars().eval_a(b)
    }

    /// Polynomial in the first variable whose coefficients are the
    /// univariate polynomials in the second, as a dense list by first-degree.
    pub fn coeffs_by_a(&self) -> Vec<UniPoly> {
        let deg = self.deg_a().map_or(0, |d| d as usize);
        let mut rows = vec![Vec::new(); deg + 1];
        for (&(i, j), c) in &self.terms {
            let row = &mut rows[i as usize];
            if row.len() <= j as usize {
                row.resize(j as usize + 1, Rat::zero());
            }
            row[j as usize] = c.clone();
        }
        rows.into_iter().map(UniPoly::from_coeffs).collect()
    }

    /// Promote a univariate polynomial to the first variable.
    pub fn lift_a(p: &UniPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            out.add_term(c.clone(), k as u32, 0);
        }
        out
    }

    /// Promote a univariate polynomial to the second variable.
    pub fn lift_b(p: &UniPoly) -> BiPoly {
        BiPoly::lift_a(p).swap_vars()
    }

    /// Exact division; returns `None` when the divisor does not divide.
    pub fn div_exact(&self, d: &BiPoly) -> Option<BiPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let (&dk, dc) = d.terms.last_key_value().unwrap();
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        while let Some((&(ri, rj), rc)) = rem.terms.last_key_value() {
            if ri < dk.0 || rj < dk.1 {
                return None;
            }
            let qi = ri - dk.0;
            let qj = rj - dk.1;
            let qc = rc / dc;
            let piece = BiPoly::term(qc, qi, qj);
            rem = &rem - &(&piece * d);
            quot = &quot + &piece;
        }
        Some(quot)
    }

    pub fn to_json(&self, var_a: &str, var_b: &str) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| {
                let r = rat_to_json(c);
                serde_json::json!([i, j, r[0], r[1]])
            })
            .collect();
        serde_json::json!({ "vars": [var_a, var_b], "terms": terms })
    }

    pub fn pretty(&self, var_a: &str, var_b: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (&(i, j), c) in self.terms.iter().rev() {
            let mag = c.abs();
            let mut body = String::new();
            for (v, e) in [(var_a, i), (var_b, j)] {
                match e {
                    0 => {}
                    1 => body.push_str(&format!("{v}*")),
                    _ => body.push_str(&format!("{v}^{e}*")),
                }
            }
            if body.is_empty() || !mag.is_one() {
                body.push_str(&format!("{mag}"));
            } else {
                body.pop();
            }
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{body}")
                } else {
                    body
                });
            } else {
                parts.push(format!("{} {body}", if c.is_negative() { "-" } else { "+" }));
            }
        }
        parts.join(" ")
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(c.clone(), i, j);
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(-c, i, j);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(c1 * c2, i1 + i2, j1 + j2);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    fn x() -> BiPoly {
        BiPoly::var_a()
    }
    fn y() -> BiPoly {
        BiPoly::var_b()
    }

    #[test]
    fn substitute_one_minus_xy_into_square() {
        // Y^2 with Y := 1 - XY gives 1 - 2XY + X^2 Y^2.
        let sub = &BiPoly::one() - &(&x() * &y());
        let got = sub.pow(2);
        let mut want = BiPoly::one();
        want.add_term(rat(-2), 1, 1);
        want.add_term(rat(1), 2, 2);
        assert_eq!(got, want);
    }

    #[test]
    fn exact_division() {
        let p = &(&x() + &y()) * &(&x() - &y());
        let q = p.div_exact(&(&x() + &y())).unwrap();
        assert_eq!(q, &x() - &y());
        assert!(p.div_exact(&(&x() + &BiPoly::one())).is_none());
    }

    #[test]
    fn eval_splits() {
        let p = &(&x() * &y()) + &x();
        let in_y = p.eval_a(&rat(2));
        assert_eq!(in_y, UniPoly::from_ints(&[2, 2]));
        assert_eq!(p.eval(&rat(2), &rat(3)), rat(8));
    }
}
