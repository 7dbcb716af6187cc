//! Symbolic derivation of closed forms for the hook and two-row square
//! sums: a rational function of n times a central binomial coefficient.
//!
//! Two-row route: the character column is a signed combination of shifted
//! binomials; squaring, extending the sum over all integers (licensed by an
//! antisymmetry of the combination, checked structurally below) and
//! convolving pairwise collapses everything to multiples of C(2n,n).
//!
//! Hook route: the square sum is the constant term of F(x) F(1/x) for the
//! hook generating function F; expanding the symmetric Laurent factor Q(x)
//! leaves a combination of central-binomial shifts of C(2n-2,n-1).
//!
//! Every derived formula is certified against brute force on a window long
//! enough that agreement proves the underlying rational-function identity
//! (two distinct rational functions within the construction's degree
//! bounds cannot agree on that many integer points). A formula that fails
//! certification is never returned.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::charsums::{phi2, psi2};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::polyengine::LaurentPoly;
use crate::unipoly::UniPoly;

/// Binomial coefficient with the vanishing convention: zero when the lower
/// index is negative or exceeds the upper index.
pub fn binomial_int(upper: i64, lower: i64) -> BigInt {
    if lower < 0 || lower > upper {
        return BigInt::zero();
    }
    let lower = lower.min(upper - lower);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..lower {
        num *= upper - t;
        den *= t + 1;
    }
    num / den
}

/// The central-binomial base a closed form multiplies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormBase {
    /// C(2n, n)
    Central2n,
    /// C(2n-2, n-1)
    Central2nMinus2,
}

impl ClosedFormBase {
    pub fn eval(&self, n: i64) -> BigInt {
        match self {
            ClosedFormBase::Central2n => binomial_int(2 * n, n),
            ClosedFormBase::Central2nMinus2 => binomial_int(2 * n - 2, n - 1),
        }
    }
}

impl fmt::Display for ClosedFormBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedFormBase::Central2n => write!(f, "C(2n,n)"),
            ClosedFormBase::Central2nMinus2 => write!(f, "C(2n-2,n-1)"),
        }
    }
}

/// A univariate rational function of n in canonical form: numerator and
/// denominator are integer polynomials with trivial polynomial gcd, the
/// gcd of the two contents is 1, and the denominator's leading coefficient
/// is positive. Equal functions have identical field values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut rf = RationalFunction { num, den };
        rf.normalize();
        rf
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    pub fn one() -> Self {
        RationalFunction {
            num: UniPoly::one(),
            den: UniPoly::one(),
        }
    }

    pub fn from_integer(c: impl Into<BigInt>) -> Self {
        RationalFunction {
            num: UniPoly::constant(c),
            den: UniPoly::one(),
        }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = UniPoly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree() > 0 || !g.leading().is_one() {
            self.num = self.num.div_exact(&g);
            self.den = self.den.div_exact(&g);
        }
        let c = self.num.content().gcd(&self.den.content());
        if !c.is_one() {
            self.num = self.num.div_int_exact(&c);
            self.den = self.den.div_int_exact(&c);
        }
        if self.den.leading().is_negative() {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
    }

    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RationalFunction::new(num, den)
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        RationalFunction::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn scale(&self, c: &BigInt) -> RationalFunction {
        RationalFunction::new(self.num.scale(c), self.den.clone())
    }

    pub fn div_int(&self, c: impl Into<BigInt>) -> RationalFunction {
        RationalFunction::new(self.num.clone(), self.den.scale(&c.into()))
    }

    /// Exact value at an integer point; the denominator must not vanish.
    pub fn eval(&self, n: i64) -> BigRational {
        let d = self.den.eval(n);
        assert!(!d.is_zero(), "denominator vanishes at n = {n}");
        BigRational::new(self.num.eval(n), d)
    }

    /// Denominator as a product of the linear factors (2n-t) and (n-t)
    /// when it fully splits that way, e.g. `4*(2n-3)*(2n-5)`; None when a
    /// non-constant part resists the candidate factors. Display helper for
    /// comparing against formula tables.
    pub fn den_factored(&self) -> Option<String> {
        let mut rest = self.den.clone();
        let mut factors: Vec<String> = Vec::new();
        for t in -64i64..=128 {
            let f = UniPoly::linear(2, -t);
            while !rest.is_zero() && rest.degree() >= 1 && rest.try_div(&f).is_some() {
                rest = rest.try_div(&f).unwrap();
                factors.push(format!("(2n{})", signed_suffix(-t)));
            }
        }
        for t in -64i64..=128 {
            let f = UniPoly::linear(1, -t);
            while rest.degree() >= 1 && rest.try_div(&f).is_some() {
                rest = rest.try_div(&f).unwrap();
                factors.push(format!("(n{})", signed_suffix(-t)));
            }
        }
        if rest.degree() > 0 {
            return None;
        }
        let c = rest.leading();
        let mut out = String::new();
        if !c.is_one() || factors.is_empty() {
            out.push_str(&c.to_string());
            if !factors.is_empty() {
                out.push('*');
            }
        }
        out.push_str(&factors.join("*"));
        Some(out)
    }
}

fn signed_suffix(c: i64) -> String {
    match c.cmp(&0) {
        std::cmp::Ordering::Less => format!("-{}", -c),
        std::cmp::Ordering::Equal => String::new(),
        std::cmp::Ordering::Greater => format!("+{c}"),
    }
}

impl fmt::Display for RationalFunction {
    /// `(<num>)/(<den>)` in expanded form, or just `<num>` over 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == UniPoly::one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

/// A certified closed form: factor(n) * base(n), asserted for
/// n >= valid_from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub base: ClosedFormBase,
    pub factor: RationalFunction,
    pub valid_from: i64,
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "R(n) = {}/({}); base = {}; valid_from = {}",
            par(&self.factor.num().to_string()),
            self.factor.den(),
            self.base,
            self.valid_from
        )
    }
}

fn par(s: &str) -> String {
    format!("({s})")
}

/// Exact evaluation of a closed form at an integer point.
pub fn eval_closed_form(cf: &ClosedForm, n: i64) -> Result<BigRational> {
    if n < cf.valid_from {
        return Err(Error::BelowValidFrom {
            n,
            valid_from: cf.valid_from,
        });
    }
    let base = BigRational::from_integer(cf.base.eval(n));
    Ok(cf.factor.eval(n) * base)
}

/// One summand `coeff * C(n - alpha, j - beta)` of a character column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialTerm {
    pub coeff: BigInt,
    pub alpha: i64,
    pub beta: i64,
}

impl BinomialTerm {
    pub fn eval(&self, n: i64, j: i64) -> BigInt {
        &self.coeff * binomial_int(n - self.alpha, j - self.beta)
    }
}

/// Value of a full combination at integer (n, j).
pub fn eval_binomial_combination(terms: &[BinomialTerm], n: i64, j: i64) -> BigInt {
    terms.iter().map(|t| t.eval(n, j)).sum()
}

/// Closed right-hand side of a bilateral binomial convolution:
/// `coeff * C(2n - a, n - b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialShift {
    pub a: i64,
    pub b: i64,
}

/// Bilateral convolution of two shifted binomial columns:
/// the sum over all integers j of
/// `C(n - alpha, j - beta) * C(n - alpha', j - beta')` collapses to
/// `C(2n - alpha - alpha', n + beta' - alpha' - beta)`.
pub fn vc_sum(t1: &BinomialTerm, t2: &BinomialTerm) -> (BigInt, BinomialShift) {
    (
        &t1.coeff * &t2.coeff,
        BinomialShift {
            a: t1.alpha + t2.alpha,
            b: t2.alpha + t1.beta - t2.beta,
        },
    )
}

/// u!/v! as a (numerator, denominator) pair of polynomials, where u and v
/// are the linear polynomials `u_poly` and `u_poly - k`.
fn falling_ratio(u_lead: i64, u_const: i64, k: i64) -> (UniPoly, UniPoly) {
    // u = u_lead*n + u_const, v = u - k
    let mut num = UniPoly::one();
    let mut den = UniPoly::one();
    if k >= 0 {
        // u!/v! = (v+1)(v+2)...(v+k)
        for t in 1..=k {
            num = num.mul(&UniPoly::linear(u_lead, u_const - k + t));
        }
    } else {
        // u!/v! = 1 / [(u+1)...(u-k)]
        for t in 1..=(-k) {
            den = den.mul(&UniPoly::linear(u_lead, u_const + t));
        }
    }
    (num, den)
}

/// The exact rational function rho with
/// `C(2n - a, n - b) = rho(n) * base(n)`, built by telescoping the three
/// factorial quotients; an identity wherever both sides' factorials are
/// defined, and consistent with the vanishing convention at integer points
/// past the base's starting index.
pub fn binomial_ratio(a: i64, b: i64, base: ClosedFormBase) -> RationalFunction {
    assert!(a >= 0, "upper shift must be non-negative");
    let (a0, b0) = match base {
        ClosedFormBase::Central2n => (0, 0),
        ClosedFormBase::Central2nMinus2 => (2, 1),
    };
    let c = a - b;
    let c0 = a0 - b0;
    let mut num = UniPoly::one();
    let mut den = UniPoly::one();
    // (2n-a)! / (2n-a0)!
    let (n1, d1) = falling_ratio(2, -a, a0 - a);
    // (n-b0)! / (n-b)!
    let (n2, d2) = falling_ratio(1, -b0, b - b0);
    // (n-c0)! / (n-c)!
    let (n3, d3) = falling_ratio(1, -c0, c - c0);
    num = num.mul(&n1).mul(&n2).mul(&n3);
    den = den.mul(&d1).mul(&d2).mul(&d3);
    RationalFunction::new(num, den)
}

/// Expands `(1 - x2/x1) * prod_i (x1^{a_i} + x2^{a_i})` and reads each
/// monomial as one shifted binomial: the two-row character column
/// `chi^{(n-j,j)}` at `mu0 1^{n-|mu0|}` equals
/// `sum coeff * C(n - |mu0|, j - beta)` with beta the x2-exponent.
/// Terms with equal beta are merged; returned sorted by beta.
pub fn two_row_expansion(mu0: &Partition) -> Result<Vec<BinomialTerm>> {
    if mu0.parts().iter().any(|&p| p < 2) {
        return Err(Error::InvalidRequest(
            "class prefix must have all parts >= 2".into(),
        ));
    }
    let alpha = mu0.weight() as i64;
    let mut g = LaurentPoly::monomial(2, vec![0, 0], BigInt::one())
        .add(&LaurentPoly::monomial(2, vec![-1, 1], BigInt::from(-1)))?;
    for &a in mu0.parts() {
        let factor = LaurentPoly::monomial(2, vec![a as i64, 0], BigInt::one())
            .add(&LaurentPoly::monomial(2, vec![0, a as i64], BigInt::one()))?;
        g = g.mul(&factor)?;
    }
    let mut merged: BTreeMap<i64, BigInt> = BTreeMap::new();
    for (e, c) in g.terms() {
        let entry = merged.entry(e[1]).or_insert_with(BigInt::zero);
        *entry += c;
    }
    Ok(merged
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(beta, coeff)| BinomialTerm { coeff, alpha, beta })
        .collect())
}

/// The symmetric Laurent polynomial
/// `Q(x) = prod_i (x^{a_i} - (-1)^{a_i}) (x^{-a_i} - (-1)^{a_i})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymLaurent {
    coeffs: BTreeMap<i64, BigInt>,
}

impl SymLaurent {
    pub fn coeffs(&self) -> &BTreeMap<i64, BigInt> {
        &self.coeffs
    }

    pub fn coeff(&self, j: i64) -> BigInt {
        self.coeffs.get(&j).cloned().unwrap_or_else(BigInt::zero)
    }
}

pub fn hook_q_poly(mu0: &Partition) -> SymLaurent {
    let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
    coeffs.insert(0, BigInt::one());
    for &a in mu0.parts() {
        let sign = BigInt::from(if a % 2 == 0 { 1 } else { -1 });
        for delta in [a as i64, -(a as i64)] {
            let mut next: BTreeMap<i64, BigInt> = BTreeMap::new();
            for (&j, c) in &coeffs {
                *next.entry(j + delta).or_insert_with(BigInt::zero) += c;
                *next.entry(j).or_insert_with(BigInt::zero) -= c * &sign;
            }
            next.retain(|_, c| !c.is_zero());
            coeffs = next;
        }
    }
    let q = SymLaurent { coeffs };
    debug_assert!(q.coeffs.iter().all(|(&j, c)| q.coeff(-j) == *c));
    q
}

/// Certification window length: every convolution term contributes factor
/// degrees at most 2|mu0| + 2, so two distinct candidate rational functions
/// can agree on at most 4|mu0| + 4 integer points; agreement on the longer
/// window proves the identity.
fn window_len(mu0: &Partition) -> i64 {
    4 * mu0.weight() as i64 + 10
}

fn bump_past_den_roots(factor: &RationalFunction, mut n0: i64, window: i64) -> i64 {
    // All denominators built here split into (2n-t) and (n+t) factors, so
    // every integer root is at most n0 + window and the scan is exhaustive.
    let scan_hi = n0 + window + factor.den().degree() as i64 + 4;
    let mut n = n0;
    while n <= scan_hi {
        if factor.den().has_root_at(n) {
            n0 = n + 1;
        }
        n += 1;
    }
    n0
}

fn certify(
    kind: &str,
    cf: &ClosedForm,
    window: i64,
    brute: impl Fn(u64) -> Result<BigInt>,
) -> Result<()> {
    for n in cf.valid_from..=(cf.valid_from + window) {
        let value = eval_closed_form(cf, n)?;
        let expected = brute(n as u64)?;
        if !value.is_integer() || value.to_integer() != expected {
            return Err(Error::CertificationFailed {
                kind: kind.into(),
                n,
                formula: value.to_string(),
                brute: expected.to_string(),
            });
        }
    }
    Ok(())
}

/// Derives the closed form of the two-row square sum at `mu0 1^(n-|mu0|)`:
/// squares the binomial combination, extends the sum over all integers j
/// (the combination is antisymmetric about (n+1)/2, so the bilateral sum
/// double-counts exactly), collapses each pair by the convolution identity
/// and halves. Certified against brute force before returning.
pub fn derive_psi2(mu0: &Partition) -> Result<ClosedForm> {
    let terms = two_row_expansion(mu0)?;
    let alpha = mu0.weight() as i64;

    // Structural antisymmetry check: the term multiset must map onto itself
    // under beta -> alpha + 1 - beta with the sign flipped. This is what
    // licenses the bilateral extension and fixes the halving constant.
    for t in &terms {
        let mirror_beta = alpha + 1 - t.beta;
        let found = terms
            .iter()
            .find(|u| u.beta == mirror_beta && u.coeff == -t.coeff.clone());
        if found.is_none() {
            return Err(Error::CertificationFailed {
                kind: format!("psi2 expansion antisymmetry for prefix {mu0}"),
                n: t.beta,
                formula: "unpaired term".into(),
                brute: "mirror term".into(),
            });
        }
    }

    let mut total = RationalFunction::zero();
    for t1 in &terms {
        for t2 in &terms {
            let (coeff, shift) = vc_sum(t1, t2);
            let rho = binomial_ratio(shift.a, shift.b, ClosedFormBase::Central2n);
            total = total.add(&rho.scale(&coeff));
        }
    }
    let factor = total.div_int(2);

    let window = window_len(mu0);
    let n0 = mu0.weight() as i64; // smallest n with all upper indices >= 0
    let valid_from = bump_past_den_roots(&factor, n0, window);
    let cf = ClosedForm {
        base: ClosedFormBase::Central2n,
        factor,
        valid_from,
    };
    certify("psi2", &cf, window, |n| psi2(mu0, n))?;
    Ok(cf)
}

/// Derives the closed form of the hook square sum at `mu0 1^(n-|mu0|)`:
/// the constant term of F(x) F(1/x) is a Q(x)-weighted combination of
/// central binomial coefficients, each a rational multiple of C(2n-2,n-1).
/// Certified against brute force before returning.
pub fn derive_phi2(mu0: &Partition) -> Result<ClosedForm> {
    if mu0.parts().iter().any(|&p| p < 2) {
        return Err(Error::InvalidRequest(
            "class prefix must have all parts >= 2".into(),
        ));
    }
    let q = hook_q_poly(mu0);
    let w = mu0.weight() as i64;
    let mut total = RationalFunction::zero();
    for (&j, c) in q.coeffs() {
        // q_j * C(2(n-1-|mu0|), n-1-|mu0|-j) relative to C(2n-2, n-1)
        let rho = binomial_ratio(2 + 2 * w, 1 + w + j, ClosedFormBase::Central2nMinus2);
        total = total.add(&rho.scale(c));
    }

    let window = window_len(mu0);
    let n0 = w + 1; // upper index 2(n-1-|mu0|) must be non-negative
    let valid_from = bump_past_den_roots(&total, n0, window);
    let cf = ClosedForm {
        base: ClosedFormBase::Central2nMinus2,
        factor: total,
        valid_from,
    };
    certify("phi2", &cf, window, |n| phi2(mu0, n))?;
    Ok(cf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyengine::character_padded;

    fn p(text: &str) -> Partition {
        Partition::parse(text).unwrap()
    }

    fn rf(num: &[i64], den_factors: &[(i64, i64)], den_scale: i64) -> RationalFunction {
        let num = UniPoly::from_coeffs(num.iter().map(|&c| BigInt::from(c)).collect());
        let mut den = UniPoly::constant(den_scale);
        for &(a, b) in den_factors {
            den = den.mul(&UniPoly::linear(a, b));
        }
        RationalFunction::new(num, den)
    }

    #[test]
    fn binomial_int_conventions() {
        assert_eq!(binomial_int(4, 2), BigInt::from(6));
        assert_eq!(binomial_int(4, -1), BigInt::zero());
        assert_eq!(binomial_int(4, 5), BigInt::zero());
        assert_eq!(binomial_int(-2, -1), BigInt::zero());
        assert_eq!(binomial_int(0, 0), BigInt::one());
    }

    #[test]
    fn ratio_examples() {
        assert_eq!(
            binomial_ratio(0, 0, ClosedFormBase::Central2n),
            RationalFunction::one()
        );
        // C(2n-2, n-1) / C(2n, n) = n / (2(2n-1))
        assert_eq!(
            binomial_ratio(2, 1, ClosedFormBase::Central2n),
            rf(&[0, 1], &[(2, -1)], 2)
        );
        // C(2n-2, n) / C(2n-2, n-1) = (n-1)/n
        assert_eq!(
            binomial_ratio(2, 0, ClosedFormBase::Central2nMinus2),
            rf(&[-1, 1], &[(1, 0)], 1)
        );
    }

    #[test]
    fn ratio_matches_pointwise_quotients() {
        for a in 0..=6i64 {
            for b in -2..=(a + 2) {
                for base in [ClosedFormBase::Central2n, ClosedFormBase::Central2nMinus2] {
                    let rho = binomial_ratio(a, b, base);
                    for n in 8..=16i64 {
                        let lhs = BigRational::from_integer(binomial_int(2 * n - a, n - b));
                        let rhs = rho.eval(n) * BigRational::from_integer(base.eval(n));
                        assert_eq!(lhs, rhs, "a={a} b={b} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn convolution_examples() {
        let t = |coeff: i64, alpha: i64, beta: i64| BinomialTerm {
            coeff: BigInt::from(coeff),
            alpha,
            beta,
        };
        let (c, s) = vc_sum(&t(1, 0, 0), &t(1, 0, 0));
        assert_eq!((c, s.a, s.b), (BigInt::one(), 0, 0)); // C(2n, n)
        let (c, s) = vc_sum(&t(1, 2, 0), &t(1, 2, 1));
        assert_eq!((c, s.a, s.b), (BigInt::one(), 4, 1)); // C(2n-4, n-1)
    }

    #[test]
    fn convolution_is_symmetric_in_its_arguments() {
        let t1 = BinomialTerm {
            coeff: BigInt::from(3),
            alpha: 2,
            beta: 1,
        };
        let t2 = BinomialTerm {
            coeff: BigInt::from(-2),
            alpha: 3,
            beta: 0,
        };
        let (c1, s1) = vc_sum(&t1, &t2);
        let (c2, s2) = vc_sum(&t2, &t1);
        assert_eq!(c1, c2);
        for n in 5..=15i64 {
            assert_eq!(
                binomial_int(2 * n - s1.a, n - s1.b),
                binomial_int(2 * n - s2.a, n - s2.b),
                "n = {n}"
            );
        }
    }

    #[test]
    fn two_row_expansion_examples() {
        let terms = two_row_expansion(&Partition::empty()).unwrap();
        assert_eq!(
            terms,
            vec![
                BinomialTerm {
                    coeff: BigInt::one(),
                    alpha: 0,
                    beta: 0
                },
                BinomialTerm {
                    coeff: BigInt::from(-1),
                    alpha: 0,
                    beta: 1
                },
            ]
        );
        // every returned combination vanishes at j < 0
        for mu0 in [p(""), p("2"), p("3,2")] {
            let terms = two_row_expansion(&mu0).unwrap();
            for n in 6..=12 {
                for j in -4..0 {
                    assert_eq!(eval_binomial_combination(&terms, n, j), BigInt::zero());
                }
            }
        }
        assert!(two_row_expansion(&p("2,1")).is_err());
    }

    #[test]
    fn two_row_expansion_matches_padded_characters() {
        for mu0 in [p(""), p("2"), p("3"), p("2,2"), p("4,3")] {
            let terms = two_row_expansion(&mu0).unwrap();
            let lo = mu0.weight().max(4);
            for n in lo..=(lo + 6) {
                for j in 0..=(n / 2) {
                    let shape = if j == 0 {
                        Partition::from_parts(vec![n as u32]).unwrap()
                    } else {
                        Partition::from_parts(vec![(n - j) as u32, j as u32]).unwrap()
                    };
                    assert_eq!(
                        eval_binomial_combination(&terms, n as i64, j as i64),
                        character_padded(&shape, &mu0).unwrap(),
                        "prefix {mu0}, n={n}, j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn expansion_is_antisymmetric_and_bilateral_sum_halves() {
        for w in 0..=8u64 {
            for mu0 in crate::partitions::partitions_of(w, None) {
                if mu0.parts().iter().any(|&x| x < 2) {
                    continue;
                }
                let terms = two_row_expansion(&mu0).unwrap();
                let alpha = w as i64;
                for n in (alpha + 2)..=(alpha + 12) {
                    for j in -2..=(n + 3) {
                        assert_eq!(
                            eval_binomial_combination(&terms, n, n + 1 - j),
                            -eval_binomial_combination(&terms, n, j),
                            "prefix {mu0}, n={n}, j={j}"
                        );
                    }
                    let bilateral: BigInt = (-2..=(n + 3))
                        .map(|j| {
                            let v = eval_binomial_combination(&terms, n, j);
                            &v * &v
                        })
                        .sum();
                    assert_eq!(
                        bilateral,
                        psi2(&mu0, n as u64).unwrap() * BigInt::from(2),
                        "prefix {mu0}, n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn derived_two_row_forms_match_the_table() {
        let cf = derive_psi2(&Partition::empty()).unwrap();
        assert_eq!(cf.base, ClosedFormBase::Central2n);
        assert_eq!(cf.factor, rf(&[1], &[(1, 1)], 1)); // 1/(n+1)

        let cf = derive_psi2(&p("2")).unwrap();
        assert_eq!(cf.factor, rf(&[9, -5, 1], &[(2, -1), (2, -3), (1, 1)], 1));

        let cf = derive_psi2(&p("2,2")).unwrap();
        assert_eq!(
            cf.factor,
            rf(
                &[525, -316, 89, -14, 1],
                &[(2, -1), (2, -3), (2, -5), (2, -7), (1, 1)],
                1
            )
        );
    }

    #[test]
    fn derived_hook_forms_match_the_table() {
        let cf = derive_phi2(&Partition::empty()).unwrap();
        assert_eq!(cf.base, ClosedFormBase::Central2nMinus2);
        assert_eq!(cf.factor, RationalFunction::one());
        assert_eq!(cf.valid_from, 1);

        let cf = derive_phi2(&p("2")).unwrap();
        assert_eq!(cf.factor, rf(&[1], &[(2, -3)], 1));

        let cf = derive_phi2(&p("2,2")).unwrap();
        assert_eq!(cf.factor, rf(&[3], &[(2, -3), (2, -5)], 1));
    }

    #[test]
    fn closed_form_evaluation() {
        let phi_empty = derive_phi2(&Partition::empty()).unwrap();
        assert_eq!(
            eval_closed_form(&phi_empty, 3).unwrap(),
            BigRational::from_integer(BigInt::from(6))
        );
        assert!(eval_closed_form(&phi_empty, 0).is_err());

        let psi_two = derive_psi2(&p("2")).unwrap();
        assert_eq!(
            eval_closed_form(&psi_two, 4).unwrap(),
            BigRational::from_integer(BigInt::from(2))
        );

        let psi_empty = derive_psi2(&Partition::empty()).unwrap();
        assert_eq!(psi_empty.valid_from, 0);
        assert_eq!(
            eval_closed_form(&psi_empty, 0).unwrap(),
            BigRational::from_integer(BigInt::one())
        );
    }

    #[test]
    fn q_poly_is_symmetric() {
        for mu0 in [p("2"), p("3"), p("3,2"), p("4,2,2")] {
            let q = hook_q_poly(&mu0);
            for (&j, c) in q.coeffs() {
                assert_eq!(q.coeff(-j), *c, "prefix {mu0}, exponent {j}");
            }
        }
        // Q for (2): (x^2-1)(x^-2-1) = 2 - x^2 - x^-2
        let q = hook_q_poly(&p("2"));
        assert_eq!(q.coeff(0), BigInt::from(2));
        assert_eq!(q.coeff(2), BigInt::from(-1));
        assert_eq!(q.coeff(-2), BigInt::from(-1));
    }

    #[test]
    fn normalization_is_idempotent_and_canonical() {
        let a = rf(&[0, 2, 2], &[(2, 2), (1, 1)], 1); // (2n^2+2n)/((2n+2)(n+1))
        assert_eq!(a, rf(&[0, 1], &[(1, 1)], 1)); // n/(n+1)
        let again = RationalFunction::new(a.num().clone(), a.den().clone());
        assert_eq!(a, again);
        // sign normalization
        let b = RationalFunction::new(UniPoly::constant(1), UniPoly::linear(-1, 0));
        assert_eq!(b, rf(&[-1], &[(1, 0)], 1));
    }

    #[test]
    fn serialization_format() {
        let cf = derive_psi2(&p("2")).unwrap();
        assert_eq!(
            cf.to_string(),
            "R(n) = (n^2 - 5*n + 9)/(4*n^3 - 4*n^2 - 5*n + 3); base = C(2n,n); valid_from = 2"
        );
        assert_eq!(
            cf.factor.den_factored().unwrap(),
            "(2n-1)*(2n-3)*(n+1)"
        );
        let cf = derive_phi2(&p("3")).unwrap();
        assert_eq!(cf.factor.den_factored().unwrap(), "4*(2n-3)*(2n-5)");
    }
}
