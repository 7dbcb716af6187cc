//! Restricted sums of character powers over shape families: bounded row
//! count, hooks, two-row shapes, meta-hooks, and all shapes, each at a
//! class of the form `mu0 1^(n-|mu0|)`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::polyengine::character_padded;

/// The shape family a sum ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumFamily {
    /// Shapes with at most `max_rows` rows.
    RowsBounded { max_rows: usize },
    /// Hooks (j, 1, ..., 1), j = 1..n.
    Hook,
    /// Two-row shapes (n-j, j), j = 0..floor(n/2); j = 0 is the single row.
    TwoRow,
    /// Shapes with no cell in row k+1, column l+1.
    MetaHook { rows: usize, cols: u32 },
    /// Every shape of weight n.
    AllShapes,
}

/// A fully specified sum: family, power, class prefix and weight.
#[derive(Debug, Clone)]
pub struct SumRequest {
    pub family: SumFamily,
    pub power: u32,
    pub mu0: Partition,
    pub n: u64,
}

impl SumRequest {
    pub fn validate(&self) -> Result<()> {
        if self.power == 0 {
            return Err(Error::InvalidRequest("power must be positive".into()));
        }
        if self.mu0.parts().iter().any(|&p| p < 2) {
            return Err(Error::InvalidRequest(
                "class prefix must have all parts >= 2".into(),
            ));
        }
        if self.n < self.mu0.weight() {
            return Err(Error::InvalidRequest(format!(
                "weight {} is below the class prefix weight {}",
                self.n,
                self.mu0.weight()
            )));
        }
        if let SumFamily::RowsBounded { max_rows } = self.family {
            if max_rows == 0 {
                return Err(Error::InvalidRequest("row bound must be positive".into()));
            }
        }
        Ok(())
    }
}

/// Sum of `character^power` over the requested family at the class
/// `mu0 1^(n-|mu0|)`.
pub fn power_sum(req: &SumRequest) -> Result<BigInt> {
    req.validate()?;
    let n = req.n;
    match req.family {
        SumFamily::RowsBounded { max_rows } => {
            sum_over(partitions_of(n, Some(max_rows)), req)
        }
        SumFamily::AllShapes => sum_over(partitions_of(n, None), req),
        SumFamily::MetaHook { rows, cols } => sum_over(
            partitions_of(n, None).filter(|shape| shape.in_meta_hook(rows, cols)),
            req,
        ),
        SumFamily::TwoRow => sum_over(two_row_shapes(n), req),
        SumFamily::Hook => {
            // The hook column is read off the closed product form of its
            // generating function; expanding the constant-term product for
            // an n-row hook would cost exponentially more. At n = |mu0|
            // exactly the product form degenerates (no padding ones), so
            // that boundary goes through the direct engine.
            if n == 0 {
                return Err(Error::InvalidRequest(
                    "hook sums need weight at least 1".into(),
                ));
            }
            if n > req.mu0.weight() {
                let coeffs = hook_gf_coeffs(&req.mu0, n)?;
                Ok(coeffs.iter().map(|(_, c)| c.pow(req.power)).sum())
            } else {
                sum_over(hook_shapes(n), req)
            }
        }
    }
}

fn sum_over(shapes: impl Iterator<Item = Partition>, req: &SumRequest) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for shape in shapes {
        let chi = character_padded(&shape, &req.mu0)?;
        total += chi.pow(req.power);
    }
    Ok(total)
}

fn hook_shapes(n: u64) -> impl Iterator<Item = Partition> {
    (1..=n).map(move |j| {
        let mut parts = vec![j as u32];
        parts.extend(std::iter::repeat_n(1, (n - j) as usize));
        Partition::from_parts(parts).unwrap()
    })
}

fn two_row_shapes(n: u64) -> impl Iterator<Item = Partition> {
    (0..=n / 2).map(move |j| {
        if j == 0 {
            if n == 0 {
                Partition::empty()
            } else {
                Partition::from_parts(vec![n as u32]).unwrap()
            }
        } else {
            Partition::from_parts(vec![(n - j) as u32, j as u32]).unwrap()
        }
    })
}

/// Sum of squared hook characters at `mu0 1^(n-|mu0|)`.
pub fn phi2(mu0: &Partition, n: u64) -> Result<BigInt> {
    power_sum(&SumRequest {
        family: SumFamily::Hook,
        power: 2,
        mu0: mu0.clone(),
        n,
    })
}

/// Sum of squared two-row characters at `mu0 1^(n-|mu0|)`.
pub fn psi2(mu0: &Partition, n: u64) -> Result<BigInt> {
    power_sum(&SumRequest {
        family: SumFamily::TwoRow,
        power: 2,
        mu0: mu0.clone(),
        n,
    })
}

/// Coefficients of the hook generating function
///
/// ```text
/// F(x) = x (1+x)^(n-1-|mu0|) prod_i (x^{a_i} - (-1)^{a_i})
/// ```
///
/// whose coefficient of x^j is the hook character
/// `chi^{(j, 1^{n-j})}(mu0 1^{n-|mu0|})`. Returns the nonzero (j, coeff)
/// pairs in increasing j.
pub fn hook_gf_coeffs(mu0: &Partition, n: u64) -> Result<Vec<(u64, BigInt)>> {
    if mu0.parts().iter().any(|&p| p < 2) {
        return Err(Error::InvalidRequest(
            "class prefix must have all parts >= 2".into(),
        ));
    }
    if n < mu0.weight() + 1 {
        return Err(Error::InvalidRequest(format!(
            "hook generating function needs n >= {}",
            mu0.weight() + 1
        )));
    }
    let ones = (n - 1 - mu0.weight()) as usize;
    // (1+x)^ones by Pascal extension
    let mut coeffs: Vec<BigInt> = vec![BigInt::from(1)];
    for _ in 0..ones {
        let mut next = vec![BigInt::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k] += c;
            next[k + 1] += c;
        }
        coeffs = next;
    }
    for &a in mu0.parts() {
        let sign = if a % 2 == 0 { 1 } else { -1 };
        let mut next = vec![BigInt::zero(); coeffs.len() + a as usize];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + a as usize] += c;
            next[k] -= c * sign; // subtract (-1)^a
        }
        coeffs = next;
    }
    // leading factor x shifts everything by one
    Ok(coeffs
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k as u64 + 1, c))
        .collect())
}
