use num_traits::{One, Zero};

use super::{BiPoly, Rat, UniPoly};
use crate::error::{Error, Result};

/// Coefficient ring for truncated power series.
pub trait SeriesCoeff: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, r: &Rat) -> Self;
    /// The value as a scalar, if the coefficient is a constant.
    fn as_constant(&self) -> Option<Rat>;
}

impl SeriesCoeff for UniPoly {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn one() -> Self {
        UniPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &Rat) -> Self {
        self.scale(r)
    }
    fn as_constant(&self) -> Option<Rat> {
        match self.degree() {
            None => Some(Rat::zero()),
            Some(0) => Some(self.coeff(0)),
            _ => None,
        }
    }
}

impl SeriesCoeff for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn one() -> Self {
        BiPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &Rat) -> Self {
        self.scale(r)
    }
    fn as_constant(&self) -> Option<Rat> {
        match (self.deg_a(), self.deg_b()) {
            (None, None) => Some(Rat::zero()),
            (Some(0), Some(0)) => Some(self.coeff(0, 0)),
            _ => None,
        }
    }
}

/// Power series in one formal variable, truncated at a fixed order, with
/// polynomial coefficients. All arithmetic stays at the common order;
/// mixing orders is a programming error and panics.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncSeries<C: SeriesCoeff> {
    coeffs: Vec<C>,
}

impl<C: SeriesCoeff> TruncSeries<C> {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        TruncSeries::from_coeffs(order, vec![C::one()])
    }

    /// Build from low-order coefficients, padding with zeros up to `order`.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<C>) -> Self {
        assert!(
            coeffs.len() <= order + 1,
            "more coefficients than the order allows"
        );
        coeffs.resize(order + 1, C::zero());
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn set_coeff(&mut self, k: usize, c: C) {
        self.coeffs[k] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order(), "series order mismatch");
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order(), "series order mismatch");
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order(), "series order mismatch");
        let n = self.order();
        let mut out: TruncSeries<C> = TruncSeries::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > n {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = out.coeffs[i + j].add(&a.mul(b));
            }
        }
        out
    }

    pub fn mul_coeff(&self, c: &C) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a.scale(r)).collect(),
        }
    }

    /// Multiplicative inverse; the constant term must be a nonzero scalar.
    pub fn invert(&self) -> Result<Self> {
        let c0 = self.coeffs[0]
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or(Error::NonInvertibleSeries)?;
        let inv0 = c0.recip();
        let n = self.order();
        let mut out = TruncSeries::zero(n);
        out.coeffs[0] = C::one().scale(&inv0);
        for k in 1..=n {
            let mut acc = C::zero();
            for i in 1..=k {
                if self.coeffs[i].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[i].mul(&out.coeffs[k - i]));
            }
            out.coeffs[k] = acc.scale(&-inv0.clone());
        }
        Ok(out)
    }

    /// Antiderivative in the series variable with zero constant term. The
    /// top input coefficient falls off the truncation.
    pub fn integrate(&self) -> Self {
        let n = self.order();
        let mut out = TruncSeries::zero(n);
        for k in 1..=n {
            out.coeffs[k] = self.coeffs[k - 1].scale(&Rat::new(1.into(), (k as i64).into()));
        }
        out
    }

    /// Exponential of a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonInvertibleSeries);
        }
        let n = self.order();
        let mut acc = TruncSeries::one(n);
        let mut term = TruncSeries::one(n);
        let mut factorial = Rat::one();
        for k in 1..=n {
            term = term.mul(self);
            factorial *= Rat::from_integer((k as i64).into());
            acc = acc.add(&term.scale(&factorial.recip()));
        }
        Ok(acc)
    }
}
