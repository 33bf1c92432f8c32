//! Census of even lengths `n` for which an MDS self-dual code over `F_q` is
//! known to exist.
//!
//! Two groups of rules are evaluated: the four constructions of this crate
//! (`Source::New`) and previously published existence conditions
//! (`Source::Known`). Only parameter existence is checked; no codes are
//! built. Each rule is evaluated for every factorization of `q` it mentions,
//! and integer arguments of the quadratic character are mapped into the
//! prime subfield of `F_q` first.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::arith::{divides, divisors, exact_sqrt, factorize, prime_power};
use crate::construct::{ConstructionParams, CosetParams, Family, SubspaceParams};
use crate::gf::FieldContext;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Source {
    New,
    Known,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::New => "new",
            Source::Known => "known",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusRule {
    pub id: &'static str,
    pub source: Source,
    pub description: &'static str,
}

/// Upper bound on reported lengths.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum LengthCap {
    /// `n <= q + 1`: at most `q` points plus the point at infinity.
    #[default]
    QPlusOne,
    /// `n < q`.
    BelowQ,
    /// `n < q - 1`.
    BelowQMinusOne,
}

impl LengthCap {
    pub fn as_str(self) -> &'static str {
        match self {
            LengthCap::QPlusOne => "q+1",
            LengthCap::BelowQ => "q-1",
            LengthCap::BelowQMinusOne => "q-2",
        }
    }

    /// Largest admissible length for field size `q`.
    pub fn max_len(self, q: u64) -> u64 {
        match self {
            LengthCap::QPlusOne => q + 1,
            LengthCap::BelowQ => q - 1,
            LengthCap::BelowQMinusOne => q - 2,
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [LengthCap::QPlusOne, LengthCap::BelowQ, LengthCap::BelowQMinusOne].into_iter().find(|c| c.as_str() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CensusOptions {
    /// Let the subspace construction use the zero subspace (`n = 2t`).
    pub include_e0: bool,
    /// Count `n = 2`.
    pub include_n2: bool,
    pub cap: LengthCap,
    pub parallel: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions { include_e0: false, include_n2: true, cap: LengthCap::QPlusOne, parallel: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleLengths {
    pub rule: CensusRule,
    pub lengths: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub q: u64,
    pub options: CensusOptions,
    pub rules: Vec<RuleLengths>,
    pub union_new: Vec<u64>,
    pub union_known: Vec<u64>,
    /// Lengths only the new rules reach.
    pub new_only: Vec<u64>,
    /// Lengths only the known rules reach.
    pub known_only: Vec<u64>,
}

impl CensusReport {
    pub fn count_new(&self) -> usize {
        self.union_new.len()
    }

    pub fn count_known(&self) -> usize {
        self.union_known.len()
    }

    pub fn rule(&self, id: &str) -> Option<&RuleLengths> {
        self.rules.iter().find(|r| r.rule.id == id)
    }
}

struct Env<'a> {
    ctx: &'a FieldContext,
    q: u64,
    p: u64,
    k: u32,
    /// `r` with `q = r^2`, if any.
    sqrt_q: Option<u64>,
    /// Every `(r, s)` with `q = r^s`, `s >= 1`.
    decompositions: Vec<(u64, u32)>,
    opts: CensusOptions,
}

impl Env<'_> {
    /// Quadratic character of the integer `a` viewed in `F_q`.
    fn eta(&self, a: i64) -> i8 {
        self.ctx.quadratic_char(self.ctx.from_int(a))
    }

    /// Prime powers `l^a` dividing `q - 1`.
    fn prime_power_divisors(&self) -> Vec<(u64, u32, u64)> {
        let mut out = Vec::new();
        for (l, max) in factorize(self.q - 1) {
            for a in 1..=max {
                out.push((l, a, l.pow(a)));
            }
        }
        out
    }
}

type RuleFn = fn(&Env) -> Vec<u64>;

const NEW_RULES: &[(CensusRule, RuleFn)] = &[
    (
        CensusRule {
            id: "roots_of_unity",
            source: Source::New,
            description: "q = r^2: n = tm, m | q-1, (q-1)/m even, 2 <= t <= (r-1)/gcd(r-1,m)",
        },
        |env| coset_lengths(env, Family::RootsOfUnity),
    ),
    (
        CensusRule {
            id: "roots_of_unity_inf",
            source: Source::New,
            description: "q = r^2: n = tm + 1, tm odd, m | q-1, 2 <= t <= (r-1)/gcd(r-1,m)",
        },
        |env| coset_lengths(env, Family::RootsOfUnityExtended),
    ),
    (
        CensusRule {
            id: "roots_of_unity_zero_inf",
            source: Source::New,
            description: "q = r^2: n = tm + 2, tm even, m | q-1, 2 <= t <= (r-1)/gcd(r-1,m)",
        },
        |env| coset_lengths(env, Family::RootsOfUnityWithZero),
    ),
    (
        CensusRule {
            id: "subspace_translates",
            source: Source::New,
            description: "q = p^m: n = 2tp^e, 2t | p-1, 1 <= e < m, (q-1)/2t even",
        },
        |env| SubspaceParams::admissible(env.p, env.k, env.opts.include_e0).iter().map(SubspaceParams::len).collect(),
    ),
];

fn coset_lengths(env: &Env, family: Family) -> Vec<u64> {
    match env.sqrt_q {
        Some(r) => CosetParams::admissible(r).into_iter().filter(|c| c.family == family).map(|c| c.len()).collect(),
        None => Vec::new(),
    }
}

/// `n = l r` or `n = l r + 1` rows over every `q = r^s` with `s >= 2`.
fn over_powers(env: &Env, f: impl Fn(u64) -> Vec<u64>) -> Vec<u64> {
    env.decompositions.iter().filter(|&&(_, s)| s >= 2).flat_map(|&(r, _)| f(r)).collect()
}

const KNOWN_RULES: &[(CensusRule, RuleFn)] = &[
    (CensusRule { id: "q_plus_1", source: Source::Known, description: "q odd: n = q + 1" }, |env| vec![env.q + 1]),
    (
        CensusRule { id: "n1_divides", source: Source::Known, description: "q odd: (n-1) | (q-1), eta(1-n) = 1" },
        |env| divisors(env.q - 1).into_iter().map(|d| d + 1).filter(|&n| env.eta(1 - n as i64) == 1).collect(),
    ),
    (
        CensusRule { id: "n2_divides", source: Source::Known, description: "q odd: (n-2) | (q-1), eta(2-n) = 1" },
        |env| divisors(env.q - 1).into_iter().map(|d| d + 2).filter(|&n| env.eta(2 - n as i64) == 1).collect(),
    ),
    (
        CensusRule {
            id: "prime_power_n1_q3mod4",
            source: Source::Known,
            description: "q = 3 mod 4: n - 1 = l^a | q-1, prime l = 3 mod 4, a odd",
        },
        |env| {
            if env.q % 4 != 3 {
                return Vec::new();
            }
            env.prime_power_divisors()
                .into_iter()
                .filter(|&(l, a, _)| l % 4 == 3 && a % 2 == 1)
                .map(|(_, _, pw)| pw + 1)
                .collect()
        },
    ),
    (
        CensusRule {
            id: "prime_power_n1_r1mod4",
            source: Source::Known,
            description: "q = r^s, r = 1 mod 4, s odd: n - 1 = l^a | q-1, prime l = 1 mod 4, a odd",
        },
        |env| {
            if !env.decompositions.iter().any(|&(r, s)| r % 4 == 1 && s % 2 == 1) {
                return Vec::new();
            }
            env.prime_power_divisors()
                .into_iter()
                .filter(|&(l, a, _)| l % 4 == 1 && a % 2 == 1)
                .map(|(_, _, pw)| pw + 1)
                .collect()
        },
    ),
    (
        CensusRule { id: "lr_2l", source: Source::Known, description: "q = r^s, s >= 2: n = lr, l even, 2l | (r-1)" },
        |env| over_powers(env, |r| (2..r).step_by(2).filter(|&l| divides(2 * l, r - 1)).map(|l| l * r).collect()),
    ),
    (
        CensusRule {
            id: "lr_l1",
            source: Source::Known,
            description: "q = r^s, s >= 2: n = lr, l even, (l-1) | (r-1), eta(1-l) = 1",
        },
        |env| {
            over_powers(env, |r| {
                (2..=r)
                    .step_by(2)
                    .filter(|&l| divides(l - 1, r - 1) && env.eta(1 - l as i64) == 1)
                    .map(|l| l * r)
                    .collect()
            })
        },
    ),
    (
        CensusRule {
            id: "lr1_l",
            source: Source::Known,
            description: "q = r^s, s >= 2: n = lr + 1, l odd, l | (r-1), eta(l) = 1",
        },
        |env| {
            over_powers(env, |r| {
                (1..r).step_by(2).filter(|&l| divides(l, r - 1) && env.eta(l as i64) == 1).map(|l| l * r + 1).collect()
            })
        },
    ),
    (
        CensusRule {
            id: "lr1_l1",
            source: Source::Known,
            description: "q = r^s, s >= 2: n = lr + 1, l odd, (l-1) | (r-1), eta(l-1) = eta(-1) = 1",
        },
        |env| {
            if env.eta(-1) != 1 {
                return Vec::new();
            }
            over_powers(env, |r| {
                (3..=r)
                    .step_by(2)
                    .filter(|&l| divides(l - 1, r - 1) && env.eta(l as i64 - 1) == 1)
                    .map(|l| l * r + 1)
                    .collect()
            })
        },
    ),
    (CensusRule { id: "n_le_r", source: Source::Known, description: "q = r^2: n <= r" }, |env| {
        env.sqrt_q.map_or_else(Vec::new, |r| (2..=r).step_by(2).collect())
    }),
    (
        CensusRule {
            id: "two_tr",
            source: Source::Known,
            description: "q = r^2, r = 3 mod 4: n = 2tr, 1 <= t <= (r-1)/2",
        },
        |env| match env.sqrt_q {
            Some(r) if r % 4 == 3 => (1..=(r - 1) / 2).map(|t| 2 * t * r).collect(),
            _ => Vec::new(),
        },
    ),
    (
        CensusRule { id: "tr_even", source: Source::Known, description: "q = r^2, r odd: n = tr, t even, 1 <= t <= r" },
        |env| env.sqrt_q.map_or_else(Vec::new, |r| (2..=r).step_by(2).map(|t| t * r).collect()),
    ),
    (
        CensusRule {
            id: "tr1_odd",
            source: Source::Known,
            description: "q = r^2, r odd: n = tr + 1, t odd, 1 <= t <= r",
        },
        |env| env.sqrt_q.map_or_else(Vec::new, |r| (1..=r).step_by(2).map(|t| t * r + 1).collect()),
    ),
    (CensusRule { id: "n_divides", source: Source::Known, description: "q = 1 mod 4: n | (q-1), n < q-1" }, |env| {
        if env.q % 4 != 1 {
            return Vec::new();
        }
        divisors(env.q - 1).into_iter().filter(|&n| n < env.q - 1).collect()
    }),
    (CensusRule { id: "small_n", source: Source::Known, description: "q = 1 mod 4: 4^n n^2 <= q" }, |env| {
        if env.q % 4 != 1 {
            return Vec::new();
        }
        (1u32..32).take_while(|&n| 4u128.pow(n) * (n as u128).pow(2) <= env.q as u128).map(u64::from).collect()
    }),
    (CensusRule { id: "pa_plus_1", source: Source::Known, description: "q = p^k: n = p^a + 1, a | k" }, |env| {
        (1..=env.k).filter(|a| env.k % a == 0).map(|a| env.p.pow(a) + 1).collect()
    }),
    (
        CensusRule { id: "two_pe", source: Source::Known, description: "q = p^k: n = 2p^e, 1 <= e < k, eta(-1) = 1" },
        |env| {
            if env.eta(-1) != 1 {
                return Vec::new();
            }
            (1..env.k).map(|e| 2 * env.p.pow(e)).collect()
        },
    ),
];

pub fn rules(source: Source) -> Vec<CensusRule> {
    let table = match source {
        Source::New => NEW_RULES,
        Source::Known => KNOWN_RULES,
    };
    table.iter().map(|(r, _)| *r).collect()
}

fn env<'a>(ctx: &'a FieldContext, opts: CensusOptions) -> Result<Env<'a>> {
    let q = ctx.q();
    let (p, k) = prime_power(q).ok_or(Error::NotOddPrimePower(q))?;
    let decompositions = (1..=k).filter(|d| k % d == 0).map(|d| (p.pow(d), k / d)).collect();
    Ok(Env { ctx, q, p, k, sqrt_q: exact_sqrt(q).filter(|_| k % 2 == 0), decompositions, opts })
}

fn evaluate(env: &Env, table: &[(CensusRule, RuleFn)]) -> Vec<RuleLengths> {
    let max = env.opts.cap.max_len(env.q);
    let min = if env.opts.include_n2 { 2 } else { 4 };
    let run = |(rule, f): &(CensusRule, RuleFn)| {
        let lengths: BTreeSet<u64> = f(env).into_iter().filter(|&n| n % 2 == 0 && n >= min && n <= max).collect();
        RuleLengths { rule: *rule, lengths: lengths.into_iter().collect() }
    };
    if env.opts.parallel {
        table.par_iter().map(run).collect()
    } else {
        table.iter().map(run).collect()
    }
}

/// Lengths from the four constructions, per rule.
pub fn enumerate_new(ctx: &FieldContext, opts: CensusOptions) -> Result<Vec<RuleLengths>> {
    Ok(evaluate(&env(ctx, opts)?, NEW_RULES))
}

/// Lengths from the previously known existence conditions, per rule.
pub fn enumerate_known(ctx: &FieldContext, opts: CensusOptions) -> Result<Vec<RuleLengths>> {
    Ok(evaluate(&env(ctx, opts)?, KNOWN_RULES))
}

fn union(rules: &[RuleLengths]) -> BTreeSet<u64> {
    rules.iter().flat_map(|r| r.lengths.iter().copied()).collect()
}

/// Evaluates the requested rule groups and compares their unions. A group
/// that is not requested contributes no rules and an empty union.
pub fn census(ctx: &FieldContext, opts: CensusOptions, new: bool, known: bool) -> Result<CensusReport> {
    let new_rules = if new { enumerate_new(ctx, opts)? } else { Vec::new() };
    let known_rules = if known { enumerate_known(ctx, opts)? } else { Vec::new() };
    let union_new = union(&new_rules);
    let union_known = union(&known_rules);
    Ok(CensusReport {
        q: ctx.q(),
        options: opts,
        new_only: union_new.difference(&union_known).copied().collect(),
        known_only: union_known.difference(&union_new).copied().collect(),
        union_new: union_new.into_iter().collect(),
        union_known: union_known.into_iter().collect(),
        rules: new_rules.into_iter().chain(known_rules).collect(),
    })
}

/// Both rule groups.
pub fn compare(ctx: &FieldContext, opts: CensusOptions) -> Result<CensusReport> {
    census(ctx, opts, true, true)
}

/// One parameter set per length reached by the new rules (the first in
/// family, then parameter order).
pub fn witnesses_new(ctx: &FieldContext, opts: CensusOptions) -> Result<BTreeMap<u64, ConstructionParams>> {
    let env = env(ctx, opts)?;
    let max = opts.cap.max_len(env.q);
    let min = if opts.include_n2 { 2 } else { 4 };
    let mut out = BTreeMap::new();
    let cosets = env.sqrt_q.map(CosetParams::admissible).unwrap_or_default();
    let params = cosets
        .into_iter()
        .map(ConstructionParams::Coset)
        .chain(SubspaceParams::admissible(env.p, env.k, opts.include_e0).into_iter().map(ConstructionParams::Subspace));
    for p in params {
        let n = p.len();
        if n >= min && n <= max {
            out.entry(n).or_insert(p);
        }
    }
    Ok(out)
}
