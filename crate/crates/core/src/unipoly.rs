//! Dense univariate polynomials in `n` with exact integer coefficients.
//!
//! Small degrees only (closed-form factors and recurrence coefficients),
//! so the arithmetic is the straightforward schoolbook kind. The gcd runs
//! over the rationals and returns the primitive integer representative.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients stored low degree to high, always trimmed of trailing zeros;
/// the zero polynomial is the empty list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            UniPoly::zero()
        } else {
            UniPoly { coeffs: vec![c] }
        }
    }

    /// a*n + b
    pub fn linear(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        UniPoly::from_coeffs(vec![b.into(), a.into()])
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0 for convenience.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, n: i64) -> BigInt {
        let x = BigInt::from(n);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Exact division with an integer-coefficient quotient; panics when
    /// either fails (callers divide only by known factors).
    pub fn div_exact(&self, divisor: &UniPoly) -> UniPoly {
        self.try_div(divisor).expect("non-exact polynomial division")
    }

    /// Quotient when the division is exact and the quotient has integer
    /// coefficients; None otherwise.
    pub fn try_div(&self, divisor: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem_rational(divisor);
        if !r.is_zero() || q.iter().any(|c| !c.is_integer()) {
            return None;
        }
        Some(UniPoly::from_coeffs(q.iter().map(|c| c.to_integer()).collect()))
    }

    /// Divides every coefficient by `c`; panics if not exact.
    pub fn div_int_exact(&self, c: &BigInt) -> UniPoly {
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|a| {
                    let (q, r) = a.div_rem(c);
                    assert!(r.is_zero(), "non-exact content division");
                    q
                })
                .collect(),
        )
    }

    /// Quotient and remainder over the rationals.
    fn div_rem_rational(&self, divisor: &UniPoly) -> (Vec<BigRational>, UniPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let dlead = BigRational::from_integer(divisor.leading());
        let dd = divisor.degree();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd || (rem.len() == dd + 1 && dd == 0 && !rem.is_empty()) {
            while matches!(rem.last(), Some(c) if c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
            let shift = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &dlead;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                let delta = &factor * BigRational::from_integer(c.clone());
                rem[shift + j] -= delta;
            }
            quot[shift] = factor;
            while matches!(rem.last(), Some(c) if c.is_zero()) {
                rem.pop();
            }
        }
        let rem_int_den = rem
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let rem_poly = UniPoly::from_coeffs(
            rem.iter()
                .map(|c| (c * BigRational::from_integer(rem_int_den.clone())).to_integer())
                .collect(),
        );
        (quot, rem_poly)
    }

    /// Primitive gcd over the rationals (leading coefficient positive);
    /// gcd with zero is the primitive part of the other argument.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let mut a = self.primitive();
        let mut b = other.primitive();
        while !b.is_zero() {
            let (_, r) = a.div_rem_rational(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive()
    }

    /// True iff `n0` is a root.
    pub fn has_root_at(&self, n0: i64) -> bool {
        self.eval(n0).is_zero()
    }
}

impl fmt::Display for UniPoly {
    /// Expanded form, terms in decreasing degree: `4*n^3 - 4*n^2 - 5*n + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let unit_coeff = mag.is_one() && k > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            if k > 0 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                write!(f, "n")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}
