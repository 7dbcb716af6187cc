//! Guessing and checking of homogeneous linear recurrences with polynomial
//! coefficients from exact sequence prefixes.
//!
//! The guess is by undetermined coefficients: for each candidate order and
//! degree, the annihilation conditions form a homogeneous linear system
//! over the rationals, solved exactly; a kernel vector is accepted only if
//! it also annihilates a trailing holdout that took no part in the fit.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::unipoly::UniPoly;

/// `sum_i p_i(n) a(n+i) = 0` with integer polynomial coefficients.
/// Canonical: the p_i share no polynomial factor and no integer content,
/// p_L is not identically zero and has positive leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recurrence {
    coeffs: Vec<UniPoly>,
}

impl Recurrence {
    pub fn new(coeffs: Vec<UniPoly>) -> Result<Self> {
        if coeffs.len() < 2 || coeffs.last().unwrap().is_zero() {
            return Err(Error::InvalidRequest(
                "recurrence needs order >= 1 and nonzero leading coefficient".into(),
            ));
        }
        Ok(Self::normalized(coeffs))
    }

    fn normalized(mut coeffs: Vec<UniPoly>) -> Self {
        let mut g = UniPoly::zero();
        for p in &coeffs {
            g = g.gcd(p);
        }
        if g.degree() > 0 {
            for p in &mut coeffs {
                *p = p.div_exact(&g);
            }
        }
        let mut content = BigInt::zero();
        for p in &coeffs {
            content = content.gcd(&p.content());
        }
        if coeffs.last().unwrap().leading().is_negative() {
            content = -content;
        }
        if !content.is_one() && !content.is_zero() {
            for p in &mut coeffs {
                *p = p.div_int_exact(&content);
            }
        }
        Recurrence { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Largest coefficient degree.
    pub fn degree(&self) -> usize {
        self.coeffs.iter().map(|p| p.degree()).max().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    /// `sum_i p_i(n) window[i]` for one window starting at index n.
    fn residual(&self, n: i64, window: &[BigInt]) -> BigInt {
        self.coeffs
            .iter()
            .zip(window)
            .map(|(p, a)| p.eval(n) * a)
            .sum()
    }
}

impl fmt::Display for Recurrence {
    /// `(p_0)*a(n) + (p_1)*a(n+1) + ... = 0`, zero coefficients omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "({p})*a(n)")?;
            } else {
                write!(f, "({p})*a(n+{i})")?;
            }
        }
        write!(f, " = 0")
    }
}

fn check_consecutive(terms: &[(i64, BigInt)]) -> Result<()> {
    for w in terms.windows(2) {
        if w[1].0 != w[0].0 + 1 {
            return Err(Error::InvalidRequest(format!(
                "terms must be consecutive, got n = {} after n = {}",
                w[1].0, w[0].0
            )));
        }
    }
    Ok(())
}

/// Smallest number of terms that admits even the (order 1, degree 0)
/// attempt: unknowns + order + holdout.
fn min_terms_needed() -> usize {
    2 + 1 + holdout_len(1, 0)
}

fn holdout_len(order: usize, degree: usize) -> usize {
    (order + degree + 5).max(8)
}

/// Scans (order, degree) pairs in lexicographic order and returns the first
/// recurrence that fits the leading terms and annihilates the holdout
/// suffix, or None when nothing within the bounds works. The returned
/// recurrence is canonical, so equal inputs give identical output.
pub fn guess_recurrence(
    terms: &[(i64, BigInt)],
    max_order: usize,
    max_degree: usize,
) -> Result<Option<Recurrence>> {
    check_consecutive(terms)?;
    if terms.len() < min_terms_needed() {
        return Err(Error::InsufficientTerms {
            got: terms.len(),
            need: min_terms_needed(),
        });
    }
    for order in 1..=max_order {
        for degree in 0..=max_degree {
            let unknowns = (order + 1) * (degree + 1);
            let holdout = holdout_len(order, degree);
            if terms.len() < unknowns + order + holdout {
                continue;
            }
            let fit_len = terms.len() - holdout;
            if let Some(rec) = try_fit(terms, fit_len, order, degree) {
                if verify_recurrence(&rec, terms) {
                    return Ok(Some(rec));
                }
            }
        }
    }
    Ok(None)
}

fn try_fit(
    terms: &[(i64, BigInt)],
    fit_len: usize,
    order: usize,
    degree: usize,
) -> Option<Recurrence> {
    let unknowns = (order + 1) * (degree + 1);
    let window_count = fit_len - order;
    let mut matrix: Vec<Vec<BigRational>> = Vec::with_capacity(window_count);
    for w in 0..window_count {
        let n = terms[w].0;
        let mut row = Vec::with_capacity(unknowns);
        for i in 0..=order {
            let a = &terms[w + i].1;
            let mut power = BigInt::one();
            for _ in 0..=degree {
                row.push(BigRational::from_integer(&power * a));
                power *= n;
            }
        }
        matrix.push(row);
    }
    for basis_vector in nullspace(matrix, unknowns) {
        let rec = vector_to_recurrence(&basis_vector, order, degree);
        if let Some(rec) = rec {
            return Some(rec);
        }
    }
    None
}

fn vector_to_recurrence(v: &[BigRational], order: usize, degree: usize) -> Option<Recurrence> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let coeffs: Vec<UniPoly> = (0..=order)
        .map(|i| {
            UniPoly::from_coeffs(ints[i * (degree + 1)..(i + 1) * (degree + 1)].to_vec())
        })
        .collect();
    if coeffs.last().unwrap().is_zero() {
        return None;
    }
    Some(Recurrence::normalized(coeffs))
}

/// Kernel basis of the homogeneous system, one vector per free column of
/// the reduced row echelon form, in ascending column order.
fn nullspace(mut m: Vec<Vec<BigRational>>, cols: usize) -> Vec<Vec<BigRational>> {
    let rows = m.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].clone();
        for x in &mut m[r] {
            *x = &*x / &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, pv) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    let t = pv * &f;
                    *x = &*x - &t;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
        if r == rows {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for f in 0..cols {
        if pivot_cols.contains(&f) {
            continue;
        }
        let mut v = vec![BigRational::zero(); cols];
        v[f] = BigRational::one();
        for &(pr, pc) in &pivots {
            v[pc] = -m[pr][f].clone();
        }
        basis.push(v);
    }
    basis
}

/// True iff the recurrence annihilates every applicable window; vacuously
/// true when there are fewer than order+1 terms.
pub fn verify_recurrence(rec: &Recurrence, terms: &[(i64, BigInt)]) -> bool {
    if check_consecutive(terms).is_err() {
        return false;
    }
    let order = rec.order();
    if terms.len() <= order {
        return true;
    }
    for w in 0..(terms.len() - order) {
        let n = terms[w].0;
        let window: Vec<BigInt> = terms[w..=w + order].iter().map(|(_, a)| a.clone()).collect();
        if !rec.residual(n, &window).is_zero() {
            return false;
        }
    }
    true
}

/// Computes `count` further terms from the recurrence. The division by the
/// leading coefficient must be exact; a vanishing leading coefficient at an
/// extension point or a non-exact division is an error.
pub fn extend_sequence(
    rec: &Recurrence,
    seed: &[(i64, BigInt)],
    count: usize,
) -> Result<Vec<(i64, BigInt)>> {
    check_consecutive(seed)?;
    let order = rec.order();
    if seed.len() < order {
        return Err(Error::InvalidRequest(format!(
            "seed must cover at least {} consecutive terms",
            order
        )));
    }
    let mut window: Vec<(i64, BigInt)> = seed[seed.len() - order..].to_vec();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let n = window[0].0;
        let lead = rec.coeffs.last().unwrap().eval(n);
        if lead.is_zero() {
            return Err(Error::SingularPoint { n });
        }
        let mut acc = BigInt::zero();
        for (i, p) in rec.coeffs.iter().take(order).enumerate() {
            acc += p.eval(n) * &window[i].1;
        }
        let (q, r) = (-acc).div_rem(&lead);
        if !r.is_zero() {
            return Err(Error::InexactDivision { n });
        }
        let next = (n + order as i64, q);
        out.push(next.clone());
        window.remove(0);
        window.push(next);
    }
    Ok(out)
}
