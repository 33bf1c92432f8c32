//! Self-duality criteria for (extended) GRS codes and independent checks of
//! the resulting codes.
//!
//! A GRS code of even length `n` and dimension `n/2` is self-dual when
//! `lambda * L_a(a_i)` is a nonzero square `w_i^2` for one fixed nonzero
//! `lambda` and every `i`, taking `v_i = w_i^{-1}`. For the extended code the
//! condition is the same with `lambda = -1` forced.
//!
//! The checks here do not rely on those criteria: [`verify_self_dual`] tests
//! `G G^T = 0` directly and [`verify_mds`] looks at codeword weights or
//! `k x k` column minors.

use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;

use crate::arith::binomial;
use crate::gf::{Fe, FieldContext};
use crate::grs::{self, first_repeat, generator_matrix, l_product, CodeSpec, EvalPoints};
use crate::{Error, Result};

/// Largest message space searched by [`min_distance_exhaustive`].
pub const EXHAUSTIVE_LIMIT: u64 = 1_000_000;
pub const DEFAULT_MINOR_BUDGET: u64 = 100_000;
pub const DEFAULT_RANDOM_MINORS: usize = 1_000;

/// Outcome of a self-duality criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Criterion {
    /// `lambda * L_a(a_i) = v_i^{-2}` for every finite point. For the
    /// extended criterion `lambda` is always `-1`.
    Satisfied { lambda: Fe, multipliers: Vec<Fe> },
    /// The first point whose character disagrees.
    Failed { witness_index: usize },
}

impl Criterion {
    pub fn is_satisfied(&self) -> bool {
        matches!(self, Criterion::Satisfied { .. })
    }

    pub fn multipliers(&self) -> Option<&[Fe]> {
        match self {
            Criterion::Satisfied { multipliers, .. } => Some(multipliers),
            Criterion::Failed { .. } => None,
        }
    }
}

fn synthesize(ctx: &FieldContext, lambda: Fe, l_values: &[Fe]) -> Vec<Fe> {
    l_values
        .iter()
        .map(|&l| {
            let w = ctx.sqrt(ctx.mul(lambda, l)).expect("criterion guarantees a square");
            ctx.inv(w).expect("square root of a nonzero element")
        })
        .collect()
}

/// Criterion for the plain GRS code of even length `n = len(points)`.
///
/// Succeeds iff all `L_a(a_i)` share one quadratic character. `lambda` is 1
/// when they are squares and the canonical nonsquare otherwise; each `w_i` is
/// the canonical square root.
pub fn criterion_grs(ctx: &FieldContext, points: &EvalPoints) -> Result<Criterion> {
    let n = points.len();
    if n % 2 != 0 {
        return Err(Error::InvalidParameters(format!("GRS criterion needs an even number of points, got {n}")));
    }
    let l_values: Vec<Fe> = (0..n).map(|i| grs::l_value(ctx, points, i)).collect::<Result<_>>()?;
    let first = ctx.quadratic_char(l_values[0]);
    if let Some(i) = l_values.iter().position(|&l| ctx.quadratic_char(l) != first) {
        return Ok(Criterion::Failed { witness_index: i });
    }
    let lambda = if first == 1 { Fe::ONE } else { ctx.nonsquare() };
    let multipliers = synthesize(ctx, lambda, &l_values);
    Ok(Criterion::Satisfied { lambda, multipliers })
}

/// Criterion for the extended GRS code over an odd number of finite points
/// (total length `len(points) + 1`). Succeeds iff every `-L_a(a_i)` is a
/// nonzero square; a single point uses the empty product `L = 1`.
pub fn criterion_extended(ctx: &FieldContext, points: &EvalPoints) -> Result<Criterion> {
    let n = points.len();
    if n % 2 == 0 {
        return Err(Error::InvalidParameters(format!(
            "extended criterion needs an odd number of finite points, got {n}"
        )));
    }
    let minus_one = ctx.neg(Fe::ONE);
    let l_values: Vec<Fe> = (0..n).map(|i| l_product(ctx, points.as_slice(), i)).collect();
    if let Some(i) = l_values.iter().position(|&l| ctx.quadratic_char(ctx.mul(minus_one, l)) != 1) {
        return Ok(Criterion::Failed { witness_index: i });
    }
    let multipliers = synthesize(ctx, minus_one, &l_values);
    Ok(Criterion::Satisfied { lambda: minus_one, multipliers })
}

/// `true` iff `n` is even, `k = n/2` and every pair of generator rows is
/// orthogonal.
pub fn verify_self_dual(ctx: &FieldContext, code: &CodeSpec) -> bool {
    let n = code.len();
    if n % 2 != 0 || code.k * 2 != n {
        return false;
    }
    let Ok(g) = generator_matrix(ctx, code) else {
        return false;
    };
    let rows = g.rows();
    (0..rows.len()).into_par_iter().all(|i| (i..rows.len()).all(|j| grs::dot(ctx, &rows[i], &rows[j]).is_zero()))
}

fn exhaustive_feasible(q: u64, k: usize) -> bool {
    (q as u128).checked_pow(k as u32).is_some_and(|s| s <= EXHAUSTIVE_LIMIT as u128)
}

/// Minimum weight over codewords whose message has leading coefficient 1 at
/// row `lead`, with the message for rows after `lead` fixed at `next` (if any).
fn min_weight_branch(ctx: &FieldContext, rows: &[Vec<Fe>], lead: usize, next: Option<Fe>) -> (usize, Vec<Fe>) {
    let n = rows[0].len();
    let mut start = rows[lead].clone();
    let mut depth = lead + 1;
    if let Some(c) = next {
        for (s, &g) in start.iter_mut().zip(&rows[depth]) {
            *s = ctx.add(*s, ctx.mul(c, g));
        }
        depth += 1;
    }
    let mut best = (usize::MAX, Vec::new());
    let mut stack: Vec<Vec<Fe>> = vec![start];
    let mut scratch = vec![Fe::ZERO; n];
    dfs(ctx, rows, depth, &mut stack, &mut scratch, &mut best);
    best
}

fn dfs(
    ctx: &FieldContext,
    rows: &[Vec<Fe>],
    depth: usize,
    stack: &mut Vec<Vec<Fe>>,
    scratch: &mut [Fe],
    best: &mut (usize, Vec<Fe>),
) {
    let partial = stack.last().unwrap();
    if depth == rows.len() {
        let w = partial.iter().filter(|x| !x.is_zero()).count();
        if w < best.0 {
            *best = (w, partial.clone());
        }
        return;
    }
    for c in ctx.elements() {
        let partial = stack.last().unwrap();
        for ((s, &p), &g) in scratch.iter_mut().zip(partial).zip(&rows[depth]) {
            *s = ctx.add(p, ctx.mul(c, g));
        }
        stack.push(scratch.to_vec());
        dfs(ctx, rows, depth + 1, stack, scratch, best);
        stack.pop();
    }
}

/// Minimum distance and one minimum-weight codeword, by enumerating the
/// nonzero messages up to scaling.
pub fn min_distance_with_witness(ctx: &FieldContext, code: &CodeSpec) -> Result<(usize, Vec<Fe>)> {
    if !exhaustive_feasible(ctx.q(), code.k) {
        return Err(Error::SearchTooLarge { q: ctx.q(), k: code.k, limit: EXHAUSTIVE_LIMIT });
    }
    if code.k == 0 {
        return Err(Error::InvalidCode("the zero code has no minimum distance".into()));
    }
    let g = generator_matrix(ctx, code)?;
    let rows = g.rows();
    let k = rows.len();
    let branches: Vec<(usize, Option<Fe>)> = (0..k)
        .flat_map(|lead| -> Vec<(usize, Option<Fe>)> {
            if lead + 1 < k {
                ctx.elements().map(|c| (lead, Some(c))).collect()
            } else {
                vec![(lead, None)]
            }
        })
        .collect();
    let (_, weight, word) = branches
        .par_iter()
        .enumerate()
        .map(|(idx, &(lead, next))| {
            let (w, word) = min_weight_branch(ctx, rows, lead, next);
            (idx, w, word)
        })
        .min_by_key(|&(idx, w, _)| (w, idx))
        .expect("at least one branch");
    Ok((weight, word))
}

/// Minimum Hamming weight of a nonzero codeword, found exhaustively.
/// Requires `q^k <= 10^6`.
pub fn min_distance_exhaustive(ctx: &FieldContext, code: &CodeSpec) -> Result<usize> {
    min_distance_with_witness(ctx, code).map(|(d, _)| d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MdsMode {
    /// Exhaustive when feasible, else all minors within budget, else structural.
    Auto,
    Exhaustive,
    Minors,
    Structural,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MdsOptions {
    pub mode: MdsMode,
    /// Lexicographic column subsets examined before falling back to sampling.
    pub budget: u64,
    pub random_minors: usize,
    pub seed: u64,
}

impl Default for MdsOptions {
    fn default() -> Self {
        MdsOptions {
            mode: MdsMode::Auto,
            budget: DEFAULT_MINOR_BUDGET,
            random_minors: DEFAULT_RANDOM_MINORS,
            seed: 0x5e1f_d0a1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MdsVerdict {
    ProvedExhaustive,
    ProvedMinors,
    StructuralOnly,
    Refuted,
}

impl MdsVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            MdsVerdict::ProvedExhaustive => "proved_exhaustive",
            MdsVerdict::ProvedMinors => "proved_minors",
            MdsVerdict::StructuralOnly => "structural_only",
            MdsVerdict::Refuted => "refuted",
        }
    }
}

/// Evidence for a refuted MDS claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// The code is not a valid GRS code.
    Structure(String),
    /// A nonzero codeword lighter than `n - k + 1`.
    Codeword(Vec<Fe>),
    /// Column indices of a singular `k x k` minor.
    Minor(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MdsReport {
    pub verdict: MdsVerdict,
    pub min_distance: Option<usize>,
    /// Minors examined, lexicographic and random together.
    pub checked_minors: u64,
    pub random_minors: u64,
    pub witness: Option<Witness>,
}

impl MdsReport {
    fn refuted(witness: Witness) -> Self {
        MdsReport {
            verdict: MdsVerdict::Refuted,
            min_distance: None,
            checked_minors: 0,
            random_minors: 0,
            witness: Some(witness),
        }
    }
}

fn structural_problem(ctx: &FieldContext, code: &CodeSpec) -> Option<String> {
    if let Err(e) = code.check_shape() {
        return Some(e.to_string());
    }
    if let Some(i) = first_repeat(&code.points) {
        return Some(format!("point {i} repeats an earlier point"));
    }
    if let Some(i) = code.multipliers.iter().position(|v| v.is_zero()) {
        return Some(format!("multiplier {i} is zero"));
    }
    code.points
        .iter()
        .chain(&code.multipliers)
        .find(|x| x.code() as u64 >= ctx.q())
        .map(|x| format!("element code {x} out of range"))
}

fn minor_is_singular(ctx: &FieldContext, rows: &[Vec<Fe>], cols: &[usize]) -> bool {
    let sub: Vec<Vec<Fe>> = rows.iter().map(|r| cols.iter().map(|&c| r[c]).collect()).collect();
    grs::rank(ctx, sub) < rows.len()
}

/// Advances `comb` to the next `k`-subset of `0..n` in lexicographic order.
#[cfg(test)]
fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    let Some(i) = (0..k).rev().find(|&i| comb[i] < n - k + i) else {
        return false;
    };
    comb[i] += 1;
    for j in i + 1..k {
        comb[j] = comb[j - 1] + 1;
    }
    true
}

/// Walks `k`-subsets of columns in lexicographic order, stopping after
/// `budget` of them. Every column is kept reduced against the chosen prefix,
/// so testing a candidate is a zero check rather than a rank computation.
struct LexScan<'a> {
    ctx: &'a FieldContext,
    k: usize,
    budget: u64,
    visited: u64,
    chosen: Vec<usize>,
    /// `levels[d][c]`: column `c` minus its part in the span of the first `d`
    /// chosen columns; zero in their pivot rows.
    levels: Vec<Vec<Vec<Fe>>>,
}

impl<'a> LexScan<'a> {
    fn new(ctx: &'a FieldContext, columns: Vec<Vec<Fe>>, k: usize, budget: u64) -> Self {
        // Later levels are overwritten before use; cloning just sizes them.
        let levels = vec![columns; k.max(1)];
        LexScan { ctx, k, budget, visited: 0, chosen: Vec::new(), levels }
    }

    /// Returns the first singular subset, if any within budget.
    fn descend(&mut self, start: usize) -> Option<Vec<usize>> {
        let depth = self.chosen.len();
        if depth == self.k {
            self.visited += 1;
            return None;
        }
        let n = self.levels[0].len();
        for c in start..=n - (self.k - depth) {
            if self.visited >= self.budget {
                return None;
            }
            let Some(pivot) = self.levels[depth][c].iter().position(|x| !x.is_zero()) else {
                // Every completion of this prefix is singular; the first one
                // in order takes the next columns.
                self.visited += 1;
                let mut cols = self.chosen.clone();
                cols.extend(c..c + self.k - depth);
                return Some(cols);
            };
            if depth + 1 < self.k {
                let (done, rest) = self.levels.split_at_mut(depth + 1);
                let (cur, next) = (&done[depth], &mut rest[0]);
                let v = &cur[c];
                let inv = self.ctx.inv(v[pivot]).expect("pivot is nonzero");
                for j in c + 1..n {
                    let f = self.ctx.mul(cur[j][pivot], inv);
                    for ((out, &w), &x) in next[j].iter_mut().zip(&cur[j]).zip(v) {
                        *out = self.ctx.sub(w, self.ctx.mul(f, x));
                    }
                }
            }
            self.chosen.push(c);
            let found = self.descend(c + 1);
            self.chosen.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// Checks the MDS property of `code`.
///
/// Verdicts: `proved_exhaustive` when the full weight enumeration finds
/// `d = n - k + 1`; `proved_minors` when every `k x k` column minor is
/// nonzero; `structural_only` when the code is a well-formed GRS code (which
/// is MDS) and all sampled minors are nonzero; `refuted` with a witness
/// otherwise.
pub fn verify_mds(ctx: &FieldContext, code: &CodeSpec, opts: &MdsOptions) -> Result<MdsReport> {
    if let Some(problem) = structural_problem(ctx, code) {
        return Ok(MdsReport::refuted(Witness::Structure(problem)));
    }
    let n = code.len();
    let k = code.k;
    let singleton = n - k + 1;
    let exhaustive_ok = k > 0 && exhaustive_feasible(ctx.q(), k);

    let use_exhaustive = match opts.mode {
        MdsMode::Exhaustive => {
            if !exhaustive_ok {
                return Err(Error::SearchTooLarge { q: ctx.q(), k, limit: EXHAUSTIVE_LIMIT });
            }
            true
        }
        MdsMode::Auto => exhaustive_ok,
        MdsMode::Minors | MdsMode::Structural => false,
    };
    if use_exhaustive {
        let (d, word) = min_distance_with_witness(ctx, code)?;
        return Ok(if d == singleton {
            MdsReport {
                verdict: MdsVerdict::ProvedExhaustive,
                min_distance: Some(d),
                checked_minors: 0,
                random_minors: 0,
                witness: None,
            }
        } else {
            MdsReport { min_distance: Some(d), ..MdsReport::refuted(Witness::Codeword(word)) }
        });
    }

    if k == 0 {
        return Ok(MdsReport {
            verdict: MdsVerdict::StructuralOnly,
            min_distance: None,
            checked_minors: 0,
            random_minors: 0,
            witness: None,
        });
    }

    let g = generator_matrix(ctx, code)?;
    let rows = g.rows();
    let total = binomial(n as u64, k as u64);
    let lex_count = match opts.mode {
        MdsMode::Structural => 0,
        _ => (opts.budget as u128).min(total) as usize,
    };

    let columns: Vec<Vec<Fe>> = (0..n).map(|j| g.column(j)).collect();
    let mut scan = LexScan::new(ctx, columns, k, lex_count as u64);
    if let Some(bad) = scan.descend(0) {
        let mut report = MdsReport::refuted(Witness::Minor(bad));
        report.checked_minors = scan.visited;
        return Ok(report);
    }
    let lex_visited = scan.visited;
    if lex_visited as u128 == total {
        return Ok(MdsReport {
            verdict: MdsVerdict::ProvedMinors,
            min_distance: Some(singleton),
            checked_minors: lex_visited,
            random_minors: 0,
            witness: None,
        });
    }

    let mut rng = StdRng::seed_from_u64(opts.seed);
    let sampled: Vec<Vec<usize>> = (0..opts.random_minors)
        .map(|_| {
            let mut cols = rand::seq::index::sample(&mut rng, n, k).into_vec();
            cols.sort_unstable();
            cols
        })
        .collect();
    let checked = lex_visited + sampled.len() as u64;
    if let Some(bad) = sampled.par_iter().find_first(|cols| minor_is_singular(ctx, rows, cols)) {
        let mut report = MdsReport::refuted(Witness::Minor(bad.clone()));
        report.checked_minors = checked;
        report.random_minors = sampled.len() as u64;
        return Ok(report);
    }
    Ok(MdsReport {
        verdict: MdsVerdict::StructuralOnly,
        min_distance: None,
        checked_minors: checked,
        random_minors: sampled.len() as u64,
        witness: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub self_dual: bool,
    pub mds: MdsReport,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.self_dual && self.mds.verdict != MdsVerdict::Refuted
    }
}

pub fn verify(ctx: &FieldContext, code: &CodeSpec, opts: &MdsOptions) -> Result<VerificationReport> {
    let self_dual = structural_problem(ctx, code).is_none() && verify_self_dual(ctx, code);
    let mds = verify_mds(ctx, code, opts)?;
    Ok(VerificationReport { self_dual, mds })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f13() -> FieldContext {
        FieldContext::create(13, 1, None).unwrap()
    }

    fn pts(ctx: &FieldContext, codes: &[u32]) -> EvalPoints {
        EvalPoints::new(ctx, codes.iter().map(|&c| Fe::from(c)).collect()).unwrap()
    }

    fn demo_code(v: [u32; 2]) -> CodeSpec {
        CodeSpec { k: 1, points: vec![Fe::ZERO, Fe::ONE], multipliers: v.map(Fe::from).to_vec(), extended: false }
    }

    #[test]
    fn grs_criterion_two_points() {
        let f = f13();
        let c = criterion_grs(&f, &pts(&f, &[0, 1])).unwrap();
        assert_eq!(c, Criterion::Satisfied { lambda: Fe::ONE, multipliers: vec![Fe::from(8), Fe::ONE] });
        assert!(criterion_grs(&f, &pts(&f, &[0, 1, 2])).is_err());
    }

    #[test]
    fn grs_criterion_mixed_characters_fail() {
        let f = f13();
        // L(0) = (0-1)(0-2)(0-3) = -6 = 7 (nonsquare), L(1) = 1*(-1)*(-2) = 2 (nonsquare),
        // L(2) = 2*1*(-1) = -2 = 11 (nonsquare), L(3) = 3*2*1 = 6 (nonsquare)
        let c = criterion_grs(&f, &pts(&f, &[0, 1, 2, 3])).unwrap();
        assert!(c.is_satisfied());
        // L(0) = (0-1)(0-2)(0-4) = -8 = 5 (nonsquare), L(1) = 1*(-1)*(-3) = 3 (square)
        let c = criterion_grs(&f, &pts(&f, &[0, 1, 2, 4])).unwrap();
        assert_eq!(c, Criterion::Failed { witness_index: 1 });
    }

    #[test]
    fn extended_single_point() {
        let f13 = f13();
        assert!(criterion_extended(&f13, &pts(&f13, &[5])).unwrap().is_satisfied());
        let f7 = FieldContext::create(7, 1, None).unwrap();
        assert_eq!(criterion_extended(&f7, &pts(&f7, &[5])).unwrap(), Criterion::Failed { witness_index: 0 });
        assert!(criterion_extended(&f13, &pts(&f13, &[1, 2])).is_err());
    }

    #[test]
    fn self_dual_demo() {
        let f = f13();
        assert!(verify_self_dual(&f, &demo_code([8, 1])));
        assert!(!verify_self_dual(&f, &demo_code([1, 1])));
        let odd = CodeSpec { k: 1, points: vec![Fe::ZERO], multipliers: vec![Fe::ONE], extended: false };
        assert!(!verify_self_dual(&f, &odd));
    }

    #[test]
    fn min_distance_small() {
        let f = f13();
        assert_eq!(min_distance_exhaustive(&f, &demo_code([8, 1])).unwrap(), 2);
        let rep = CodeSpec {
            k: 1,
            points: vec![Fe::from(2), Fe::from(3), Fe::from(4)],
            multipliers: vec![Fe::from(5), Fe::ONE, Fe::from(7)],
            extended: false,
        };
        assert_eq!(min_distance_exhaustive(&f, &rep).unwrap(), 3);
        let big =
            CodeSpec { k: 6, points: (0..12).map(Fe::from).collect(), multipliers: vec![Fe::ONE; 12], extended: false };
        assert!(matches!(min_distance_exhaustive(&f, &big), Err(Error::SearchTooLarge { .. })));
    }

    #[test]
    fn lex_combinations() {
        let mut c = vec![0, 1];
        let mut all = vec![c.clone()];
        while next_combination(&mut c, 4) {
            all.push(c.clone());
        }
        assert_eq!(all.len(), 6);
        assert_eq!(all.last().unwrap(), &vec![2, 3]);
    }

    #[test]
    fn mds_verdicts() {
        let f = f13();
        let r = verify_mds(&f, &demo_code([8, 1]), &MdsOptions::default()).unwrap();
        assert_eq!(r.verdict, MdsVerdict::ProvedExhaustive);
        assert_eq!(r.min_distance, Some(2));

        let minors = MdsOptions { mode: MdsMode::Minors, ..MdsOptions::default() };
        let r = verify_mds(&f, &demo_code([8, 1]), &minors).unwrap();
        assert_eq!((r.verdict, r.checked_minors), (MdsVerdict::ProvedMinors, 2));

        let mut dup = demo_code([8, 1]);
        dup.points[1] = Fe::ZERO;
        let r = verify_mds(&f, &dup, &MdsOptions::default()).unwrap();
        assert_eq!(r.verdict, MdsVerdict::Refuted);
        assert!(matches!(r.witness, Some(Witness::Structure(_))));
    }

    #[test]
    fn singular_minor_is_found() {
        let f = f13();
        // Not a GRS code: a zero column in the second row makes minors singular,
        // so feed the minor checker a matrix directly.
        let rows = vec![vec![Fe::ONE, Fe::ONE, Fe::ONE], vec![Fe::ONE, Fe::ONE, Fe::from(2)]];
        assert!(minor_is_singular(&f, &rows, &[0, 1]));
        assert!(!minor_is_singular(&f, &rows, &[0, 2]));
    }

    #[test]
    fn incremental_scan_matches_full_rank_checks() {
        use rand::Rng;
        let f = FieldContext::create(5, 1, None).unwrap();
        let mut rng = StdRng::seed_from_u64(1);
        for _ in 0..1000 {
            let k = rng.gen_range(1..=5);
            let n = rng.gen_range(k..=9);
            let rows: Vec<Vec<Fe>> = (0..k).map(|_| (0..n).map(|_| Fe::from(rng.gen_range(0..5))).collect()).collect();
            let columns: Vec<Vec<Fe>> = (0..n).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
            let budget = rng.gen_range(0..150);

            let mut expected = (0u64, None);
            let mut comb: Vec<usize> = (0..k).collect();
            while expected.0 < budget {
                expected.0 += 1;
                if minor_is_singular(&f, &rows, &comb) {
                    expected.1 = Some(comb.clone());
                    break;
                }
                if !next_combination(&mut comb, n) {
                    break;
                }
            }

            let mut scan = LexScan::new(&f, columns, k, budget);
            let found = scan.descend(0);
            assert_eq!((scan.visited, found), expected, "rows={rows:?} budget={budget}");
        }
    }
}
