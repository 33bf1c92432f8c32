//! Generalized Reed-Solomon codes and their extended (one point at infinity)
//! variant.
//!
//! A code of dimension `k` evaluates polynomials `f` of degree `< k` at
//! points `a_0, ..., a_{n-1}` and scales coordinate `i` by `v_i`. The extended
//! variant appends the coefficient of `x^(k-1)` as a last coordinate.
//! Indices are 0-based throughout.

use crate::gf::{Fe, FieldContext};
use crate::{Error, Result};

/// Pairwise-distinct evaluation points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalPoints(Vec<Fe>);

impl EvalPoints {
    pub fn new(ctx: &FieldContext, points: Vec<Fe>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::TooFewPoints { needed: 1, got: 0 });
        }
        if let Some(&bad) = points.iter().find(|x| x.code() as u64 >= ctx.q()) {
            return Err(Error::ElementOutOfRange { code: bad.code() as u64, q: ctx.q() });
        }
        if let Some(i) = first_repeat(&points) {
            return Err(Error::RepeatedPoint(i));
        }
        Ok(EvalPoints(points))
    }

    pub fn as_slice(&self) -> &[Fe] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<Fe> {
        self.0
    }
}

/// Index of the first entry equal to an earlier one.
pub(crate) fn first_repeat(points: &[Fe]) -> Option<usize> {
    let mut seen = std::collections::HashSet::with_capacity(points.len());
    points.iter().position(|x| !seen.insert(*x))
}

/// A (possibly extended) GRS code.
///
/// Fields are public so that codes read from files can be represented even
/// when they violate the invariants; [`CodeSpec::new`] checks everything and
/// [`CodeSpec::validate`] reports the first violation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSpec {
    pub k: usize,
    pub points: Vec<Fe>,
    pub multipliers: Vec<Fe>,
    pub extended: bool,
}

impl CodeSpec {
    pub fn new(ctx: &FieldContext, k: usize, points: EvalPoints, multipliers: Vec<Fe>, extended: bool) -> Result<Self> {
        let code = CodeSpec { k, points: points.into_inner(), multipliers, extended };
        code.validate(ctx)?;
        Ok(code)
    }

    /// Code length, counting the point at infinity.
    pub fn len(&self) -> usize {
        self.points.len() + usize::from(self.extended)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Checks the shape invariants needed to build a generator matrix.
    pub(crate) fn check_shape(&self) -> Result<()> {
        if self.multipliers.len() != self.points.len() {
            return Err(Error::InvalidCode(format!(
                "{} multipliers for {} points",
                self.multipliers.len(),
                self.points.len()
            )));
        }
        if self.k > self.len() {
            return Err(Error::InvalidCode(format!("dimension {} exceeds length {}", self.k, self.len())));
        }
        Ok(())
    }

    pub fn validate(&self, ctx: &FieldContext) -> Result<()> {
        self.check_shape()?;
        if self.points.is_empty() {
            return Err(Error::TooFewPoints { needed: 1, got: 0 });
        }
        for x in self.points.iter().chain(&self.multipliers) {
            if x.code() as u64 >= ctx.q() {
                return Err(Error::ElementOutOfRange { code: x.code() as u64, q: ctx.q() });
            }
        }
        if let Some(i) = first_repeat(&self.points) {
            return Err(Error::RepeatedPoint(i));
        }
        if let Some(i) = self.multipliers.iter().position(|v| v.is_zero()) {
            return Err(Error::InvalidCode(format!("multiplier {i} is zero")));
        }
        Ok(())
    }
}

/// `k x n` generator matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMatrix {
    rows: Vec<Vec<Fe>>,
    cols: usize,
}

impl GeneratorMatrix {
    pub fn from_rows(rows: Vec<Vec<Fe>>, cols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        GeneratorMatrix { rows, cols }
    }

    pub fn rows(&self) -> &[Vec<Fe>] {
        &self.rows
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<Fe> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    /// `self * other^T`.
    pub fn mul_transpose(&self, ctx: &FieldContext, other: &GeneratorMatrix) -> Vec<Vec<Fe>> {
        self.rows.iter().map(|a| other.rows.iter().map(|b| dot(ctx, a, b)).collect()).collect()
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self, ctx: &FieldContext) -> usize {
        rank(ctx, self.rows.clone())
    }
}

pub(crate) fn dot(ctx: &FieldContext, a: &[Fe], b: &[Fe]) -> Fe {
    a.iter().zip(b).fold(Fe::ZERO, |acc, (&x, &y)| ctx.add(acc, ctx.mul(x, y)))
}

/// Row-reduces in place and returns the rank.
pub(crate) fn rank(ctx: &FieldContext, mut m: Vec<Vec<Fe>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = ctx.inv(m[r][c]).expect("pivot is nonzero");
        for i in r + 1..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let factor = ctx.mul(m[i][c], inv);
            for j in c..cols {
                let t = ctx.mul(factor, m[r][j]);
                m[i][j] = ctx.sub(m[i][j], t);
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Product of `a_i - a_j` over all `j != i`; the empty product is 1.
pub(crate) fn l_product(ctx: &FieldContext, points: &[Fe], i: usize) -> Fe {
    let ai = points[i];
    points.iter().enumerate().filter(|&(j, _)| j != i).fold(Fe::ONE, |acc, (_, &aj)| ctx.mul(acc, ctx.sub(ai, aj)))
}

/// `L_a(a_i) = prod_{j != i} (a_i - a_j)`.
pub fn l_value(ctx: &FieldContext, points: &EvalPoints, i: usize) -> Result<Fe> {
    if points.len() < 2 {
        return Err(Error::TooFewPoints { needed: 2, got: points.len() });
    }
    if i >= points.len() {
        return Err(Error::IndexOutOfRange { index: i, len: points.len() });
    }
    Ok(l_product(ctx, points.as_slice(), i))
}

/// Multipliers `u_i = L_a(a_i)^{-1}` of the dual of `GRS_k(a, 1)`.
pub fn dual_multipliers(ctx: &FieldContext, points: &EvalPoints) -> Result<Vec<Fe>> {
    (0..points.len()).map(|i| l_value(ctx, points, i).and_then(|l| ctx.inv(l))).collect()
}

pub fn generator_matrix(ctx: &FieldContext, code: &CodeSpec) -> Result<GeneratorMatrix> {
    code.check_shape()?;
    let n = code.len();
    let mut rows = Vec::with_capacity(code.k);
    let mut current = code.multipliers.clone();
    for i in 0..code.k {
        let mut row = current.clone();
        if code.extended {
            row.push(if i + 1 == code.k { Fe::ONE } else { Fe::ZERO });
        }
        rows.push(row);
        for (c, &a) in current.iter_mut().zip(&code.points) {
            *c = ctx.mul(*c, a);
        }
    }
    Ok(GeneratorMatrix { rows, cols: n })
}

/// Horner evaluation of a coefficient list (constant term first).
pub(crate) fn eval_poly(ctx: &FieldContext, coeffs: &[Fe], x: Fe) -> Fe {
    coeffs.iter().rev().fold(Fe::ZERO, |acc, &c| ctx.add(ctx.mul(acc, x), c))
}

/// Codeword of the message polynomial `msg[0] + msg[1] x + ...`.
pub fn encode(ctx: &FieldContext, code: &CodeSpec, msg: &[Fe]) -> Result<Vec<Fe>> {
    code.check_shape()?;
    if msg.len() != code.k {
        return Err(Error::MessageLength { got: msg.len(), expected: code.k });
    }
    let mut word: Vec<Fe> =
        code.points.iter().zip(&code.multipliers).map(|(&a, &v)| ctx.mul(v, eval_poly(ctx, msg, a))).collect();
    if code.extended {
        word.push(msg.last().copied().unwrap_or(Fe::ZERO));
    }
    Ok(word)
}
