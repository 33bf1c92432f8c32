//! Explicit MDS self-dual constructions.
//!
//! Families 1-3 live over `F_q` with `q = r^2`. They take the `m`-th roots
//! of unity `alpha^1, ..., alpha^m` and scale them by `t` representatives
//! `beta_z = h^z` of distinct cosets, where `h` generates `F_r^*`:
//!
//! | family | condition                    | points                | length   |
//! |--------|------------------------------|-----------------------|----------|
//! | 1      | `(q-1)/m` even, `tm` even    | `beta_z alpha^i`      | `tm`     |
//! | 2      | `tm` odd                     | same, extended        | `tm + 1` |
//! | 3      | `tm` even                    | `0` then same, ext.   | `tm + 2` |
//!
//! with `m | q - 1` and `2 <= t <= (r-1)/gcd(r-1, m)` in every case.
//!
//! Family 4 lives over `q = p^mdeg`: with `omega` of order `2t` in `F_p` and
//! `V` an `e`-dimensional `F_p`-subspace meeting `F_p` only in 0, the points
//! are the translates `omega^j + V`, giving length `2t p^e`.

use crate::arith::gcd;
use crate::duality::{criterion_extended, criterion_grs, Criterion};
use crate::gf::{Fe, FieldContext};
use crate::grs::{CodeSpec, EvalPoints};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Plain GRS, `n = tm`.
    RootsOfUnity,
    /// Extended GRS, `n = tm + 1`.
    RootsOfUnityExtended,
    /// Extended GRS with 0 added, `n = tm + 2`.
    RootsOfUnityWithZero,
}

impl Family {
    pub fn theorem(self) -> u8 {
        match self {
            Family::RootsOfUnity => 1,
            Family::RootsOfUnityExtended => 2,
            Family::RootsOfUnityWithZero => 3,
        }
    }

    pub fn from_theorem(id: u8) -> Option<Self> {
        match id {
            1 => Some(Family::RootsOfUnity),
            2 => Some(Family::RootsOfUnityExtended),
            3 => Some(Family::RootsOfUnityWithZero),
            _ => None,
        }
    }
}

/// Parameters of families 1-3 over `F_{r^2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetParams {
    pub r: u64,
    pub m: u64,
    pub t: u64,
    pub family: Family,
}

impl CosetParams {
    pub fn q(&self) -> u64 {
        self.r * self.r
    }

    pub fn t_max(r: u64, m: u64) -> u64 {
        (r - 1) / gcd(r - 1, m)
    }

    pub fn len(&self) -> u64 {
        let tm = self.t * self.m;
        match self.family {
            Family::RootsOfUnity => tm,
            Family::RootsOfUnityExtended => tm + 1,
            Family::RootsOfUnityWithZero => tm + 2,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameters(msg));
        let r = self.r;
        match crate::arith::prime_power(r) {
            Some((p, _)) if p != 2 => {}
            _ => return bad(format!("r = {r} is not an odd prime power")),
        }
        let q = self
            .r
            .checked_mul(self.r)
            .filter(|&q| q <= 1 << 31)
            .ok_or_else(|| Error::FieldTooLarge(r.saturating_mul(r)))?;
        let m = self.m;
        if m == 0 || (q - 1) % m != 0 {
            return bad(format!("m = {m} does not divide q - 1 = {}", q - 1));
        }
        let t_max = Self::t_max(r, m);
        if self.t < 2 || self.t > t_max {
            return bad(format!("t = {} outside 2 <= t <= (r-1)/gcd(r-1,m) = {t_max}", self.t));
        }
        let tm = self.t * m;
        match self.family {
            Family::RootsOfUnity => {
                if ((q - 1) / m) % 2 != 0 {
                    return bad(format!("(q-1)/m = {} is odd", (q - 1) / m));
                }
                if tm % 2 != 0 {
                    return bad(format!("n = tm = {tm} is odd"));
                }
            }
            Family::RootsOfUnityExtended if tm % 2 == 0 => return bad(format!("tm = {tm} is even")),
            Family::RootsOfUnityWithZero if tm % 2 != 0 => return bad(format!("tm = {tm} is odd")),
            _ => {}
        }
        Ok(())
    }

    /// Every valid parameter set over `F_{r^2}`, ordered by family, `m`, `t`.
    pub fn admissible(r: u64) -> Vec<CosetParams> {
        let q = r * r;
        let mut out = Vec::new();
        for family in [Family::RootsOfUnity, Family::RootsOfUnityExtended, Family::RootsOfUnityWithZero] {
            for m in crate::arith::divisors(q - 1) {
                for t in 2..=Self::t_max(r, m) {
                    let params = CosetParams { r, m, t, family };
                    if params.validate().is_ok() {
                        out.push(params);
                    }
                }
            }
        }
        out
    }
}

/// Parameters of family 4 over `F_{p^mdeg}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubspaceParams {
    pub p: u64,
    pub mdeg: u32,
    pub t: u64,
    pub e: u32,
}

impl SubspaceParams {
    pub fn q(&self) -> u64 {
        self.p.pow(self.mdeg)
    }

    pub fn len(&self) -> u64 {
        2 * self.t * self.p.pow(self.e)
    }

    /// Checks the conditions, allowing `e = 0` only when asked to.
    pub fn validate_with(&self, allow_trivial_subspace: bool) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameters(msg));
        let (p, mdeg, t, e) = (self.p, self.mdeg, self.t, self.e);
        if !crate::arith::is_prime(p) || p == 2 {
            return bad(format!("p = {p} is not an odd prime"));
        }
        if mdeg == 0 {
            return bad("mdeg must be at least 1".into());
        }
        let q = p
            .checked_pow(mdeg)
            .filter(|&q| q <= 1 << 31)
            .ok_or_else(|| Error::FieldTooLarge(p.saturating_pow(mdeg)))?;
        if t == 0 || (p - 1) % (2 * t) != 0 {
            return bad(format!("2t = {} does not divide p - 1 = {}", 2 * t, p - 1));
        }
        let min_e = if allow_trivial_subspace { 0 } else { 1 };
        if e < min_e || e >= mdeg {
            return bad(format!("e = {e} outside {min_e} <= e < mdeg = {mdeg}"));
        }
        if ((q - 1) / (2 * t)) % 2 != 0 {
            return bad(format!("(q-1)/2t = {} is odd", (q - 1) / (2 * t)));
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        self.validate_with(false)
    }

    /// Every valid parameter set over `F_{p^mdeg}`, ordered by `t`, `e`.
    pub fn admissible(p: u64, mdeg: u32, allow_trivial_subspace: bool) -> Vec<SubspaceParams> {
        let mut out = Vec::new();
        for t in 1..p {
            for e in 0..mdeg {
                let params = SubspaceParams { p, mdeg, t, e };
                if params.validate_with(allow_trivial_subspace).is_ok() {
                    out.push(params);
                }
            }
        }
        out
    }
}

/// A parameter set for any of the four families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstructionParams {
    Coset(CosetParams),
    Subspace(SubspaceParams),
}

impl ConstructionParams {
    pub fn theorem(&self) -> u8 {
        match self {
            ConstructionParams::Coset(c) => c.family.theorem(),
            ConstructionParams::Subspace(_) => 4,
        }
    }

    pub fn q(&self) -> u64 {
        match self {
            ConstructionParams::Coset(c) => c.q(),
            ConstructionParams::Subspace(s) => s.q(),
        }
    }

    pub fn len(&self) -> u64 {
        match self {
            ConstructionParams::Coset(c) => c.len(),
            ConstructionParams::Subspace(s) => s.len(),
        }
    }
}

/// A constructed self-dual code and the constant used by the criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub params: ConstructionParams,
    pub code: CodeSpec,
    /// `lambda` with `lambda * L_a(a_i) = v_i^{-2}`; `-1` for extended codes.
    pub lambda: Fe,
}

/// `m * alpha^{-i}` for `alpha` the primitive `m`-th root of unity. This is
/// the product of `alpha^i - alpha^j` over `j != i` in `1..=m`.
pub fn lemma_ha(ctx: &FieldContext, m: u64, i: u64) -> Result<Fe> {
    let alpha = ctx.root_of_unity(m)?;
    let alpha_inv_i = ctx.pow(ctx.inv(alpha)?, i);
    Ok(ctx.mul(ctx.from_int((m % ctx.p()) as i64), alpha_inv_i))
}

/// `beta_z = h^z` for `z < t`, with `h` the generator of `F_r^*`.
pub fn coset_representatives(ctx: &FieldContext, r: u64, m: u64, t: u64) -> Result<Vec<Fe>> {
    let h = ctx.subfield_generator(r)?;
    let t_max = CosetParams::t_max(r, m.max(1));
    if t == 0 || t > t_max {
        return Err(Error::InvalidParameters(format!("t = {t} outside 1 <= t <= {t_max}")));
    }
    Ok((0..t).map(|z| ctx.pow(h, z)).collect())
}

/// `beta_z alpha^i` for `z = 0..t`, `i = 1..=m`, in block order.
fn coset_points(ctx: &FieldContext, params: &CosetParams) -> Result<Vec<Fe>> {
    let alpha = ctx.root_of_unity(params.m)?;
    let betas = coset_representatives(ctx, params.r, params.m, params.t)?;
    let mut points = Vec::with_capacity((params.t * params.m) as usize + 1);
    for beta in betas {
        let mut x = beta;
        for _ in 0..params.m {
            x = ctx.mul(x, alpha);
            points.push(x);
        }
    }
    Ok(points)
}

fn check_field(ctx: &FieldContext, q: u64) -> Result<()> {
    if ctx.q() != q {
        return Err(Error::InvalidParameters(format!("parameters need q = {q}, field has q = {}", ctx.q())));
    }
    Ok(())
}

fn finish(
    ctx: &FieldContext,
    params: ConstructionParams,
    points: EvalPoints,
    criterion: Criterion,
    extended: bool,
) -> Result<Construction> {
    match criterion {
        Criterion::Satisfied { lambda, multipliers } => {
            let n = points.len() + usize::from(extended);
            let code = CodeSpec::new(ctx, n / 2, points, multipliers, extended)?;
            Ok(Construction { params, code, lambda })
        }
        Criterion::Failed { witness_index } => Err(Error::CriterionFailed { index: witness_index }),
    }
}

fn build_coset(ctx: &FieldContext, params: &CosetParams, family: Family) -> Result<Construction> {
    if params.family != family {
        return Err(Error::InvalidParameters(format!(
            "parameters are for theorem {}, not {}",
            params.family.theorem(),
            family.theorem()
        )));
    }
    params.validate()?;
    check_field(ctx, params.q())?;
    let mut points = coset_points(ctx, params)?;
    if family == Family::RootsOfUnityWithZero {
        points.insert(0, Fe::ZERO);
    }
    let points = EvalPoints::new(ctx, points)?;
    let (criterion, extended) = match family {
        Family::RootsOfUnity => (criterion_grs(ctx, &points)?, false),
        _ => (criterion_extended(ctx, &points)?, true),
    };
    finish(ctx, ConstructionParams::Coset(*params), points, criterion, extended)
}

/// Length `tm` plain GRS code.
pub fn build_theorem1(ctx: &FieldContext, params: &CosetParams) -> Result<Construction> {
    build_coset(ctx, params, Family::RootsOfUnity)
}

/// Length `tm + 1` extended GRS code.
pub fn build_theorem2(ctx: &FieldContext, params: &CosetParams) -> Result<Construction> {
    build_coset(ctx, params, Family::RootsOfUnityExtended)
}

/// Length `tm + 2` extended GRS code with 0 among the points.
pub fn build_theorem3(ctx: &FieldContext, params: &CosetParams) -> Result<Construction> {
    build_coset(ctx, params, Family::RootsOfUnityWithZero)
}

/// The `F_p`-span of `x, x^2, ..., x^e`, in increasing code order.
pub fn subspace_v(ctx: &FieldContext, e: u32) -> Result<Vec<Fe>> {
    if e >= ctx.degree() {
        return Err(Error::InvalidParameters(format!("e = {e} must be below the degree {}", ctx.degree())));
    }
    let p = ctx.p();
    // codes sum_{i=1..e} c_i p^i, i.e. multiples of p below p^(e+1)
    (0..p.pow(e)).map(|c| ctx.element(c * p)).collect()
}

fn build_subspace(ctx: &FieldContext, params: &SubspaceParams, allow_trivial: bool) -> Result<Construction> {
    params.validate_with(allow_trivial)?;
    check_field(ctx, params.q())?;
    let two_t = 2 * params.t;
    let prime_gen = ctx.subfield_generator(params.p)?;
    let omega = ctx.pow(prime_gen, (params.p - 1) / two_t);
    let v = subspace_v(ctx, params.e)?;
    let mut points = Vec::with_capacity(two_t as usize * v.len());
    let mut shift = Fe::ONE;
    for _ in 0..two_t {
        points.extend(v.iter().map(|&x| ctx.add(shift, x)));
        shift = ctx.mul(shift, omega);
    }
    let points = EvalPoints::new(ctx, points)?;
    let criterion = criterion_grs(ctx, &points)?;
    finish(ctx, ConstructionParams::Subspace(*params), points, criterion, false)
}

/// Length `2t p^e` GRS code on translates of a subspace.
pub fn build_theorem4(ctx: &FieldContext, params: &SubspaceParams) -> Result<Construction> {
    build_subspace(ctx, params, false)
}

/// As [`build_theorem4`] but also accepting `e = 0` (`V = {0}`, `n = 2t`).
pub fn build_theorem4_allow_trivial(ctx: &FieldContext, params: &SubspaceParams) -> Result<Construction> {
    build_subspace(ctx, params, true)
}

pub fn build(ctx: &FieldContext, params: &ConstructionParams) -> Result<Construction> {
    match params {
        ConstructionParams::Coset(c) => build_coset(ctx, c, c.family),
        ConstructionParams::Subspace(s) => build_theorem4_allow_trivial(ctx, s),
    }
}

/// The canonical field a parameter set lives in.
pub fn field_for(params: &ConstructionParams) -> Result<FieldContext> {
    FieldContext::of_order(params.q())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::verify_self_dual;

    fn coset(r: u64, m: u64, t: u64, family: Family) -> CosetParams {
        CosetParams { r, m, t, family }
    }

    #[test]
    fn lemma_ha_values() {
        let f = FieldContext::create(13, 1, None).unwrap();
        assert_eq!(lemma_ha(&f, 1, 1).unwrap(), Fe::ONE);
        assert_eq!(lemma_ha(&f, 4, 1).unwrap(), Fe::from(7));
        // 4 * 12^{-1} = 4 * 12 = 48 = 9
        assert_eq!(lemma_ha(&f, 4, 2).unwrap(), Fe::from(9));
        assert!(lemma_ha(&f, 5, 1).is_err());
    }

    #[test]
    fn representatives() {
        let f25 = FieldContext::create(5, 2, None).unwrap();
        assert_eq!(coset_representatives(&f25, 5, 3, 1).unwrap(), vec![Fe::ONE]);
        let b = coset_representatives(&f25, 5, 3, 2).unwrap();
        assert_eq!(b[0], Fe::ONE);
        assert_eq!(f25.element_order(b[1]).unwrap(), 4);
        assert_ne!(f25.pow(b[0], 3), f25.pow(b[1], 3));
        assert!(coset_representatives(&f25, 5, 3, 5).is_err());

        let f81 = FieldContext::create(3, 4, None).unwrap();
        let b = coset_representatives(&f81, 9, 5, 6).unwrap();
        let fifth: std::collections::HashSet<Fe> = b.iter().map(|&x| f81.pow(x, 5)).collect();
        assert_eq!(fifth.len(), 6);
    }

    #[test]
    fn parameter_validation() {
        assert!(coset(3, 1, 2, Family::RootsOfUnity).validate().is_ok());
        assert!(coset(5, 3, 2, Family::RootsOfUnityExtended).validate().is_err());
        assert!(coset(5, 3, 3, Family::RootsOfUnityWithZero).validate().is_err());
        assert!(coset(9, 5, 9, Family::RootsOfUnity).validate().is_err());
        assert!(coset(9, 5, 8, Family::RootsOfUnity).validate().is_ok());
        assert!(coset(6, 5, 2, Family::RootsOfUnity).validate().is_err());
        assert!(SubspaceParams { p: 5, mdeg: 2, t: 2, e: 2 }.validate().is_err());
        assert!(SubspaceParams { p: 5, mdeg: 2, t: 2, e: 0 }.validate().is_err());
        assert!(SubspaceParams { p: 5, mdeg: 2, t: 2, e: 0 }.validate_with(true).is_ok());
        assert!(SubspaceParams { p: 5, mdeg: 2, t: 3, e: 1 }.validate().is_err());
    }

    #[test]
    fn only_t1_tuple_at_q9() {
        let t1: Vec<_> = CosetParams::admissible(3).into_iter().filter(|c| c.family == Family::RootsOfUnity).collect();
        assert_eq!(t1, vec![coset(3, 1, 2, Family::RootsOfUnity)]);
    }

    #[test]
    fn subspace_elements() {
        let f25 = FieldContext::create(5, 2, None).unwrap();
        let v = subspace_v(&f25, 1).unwrap();
        assert_eq!(v.iter().map(|x| x.code()).collect::<Vec<_>>(), vec![0, 5, 10, 15, 20]);
        assert!(subspace_v(&f25, 2).is_err());
        let f81 = FieldContext::create(3, 4, None).unwrap();
        let v = subspace_v(&f81, 2).unwrap();
        assert_eq!(v.len(), 9);
        assert_eq!(v.iter().filter(|x| x.code() < 3).count(), 1);
    }

    #[test]
    fn small_constructions_are_self_dual() {
        let f9 = FieldContext::create(3, 2, None).unwrap();
        let c = build_theorem1(&f9, &coset(3, 1, 2, Family::RootsOfUnity)).unwrap();
        assert_eq!(c.code.len(), 2);
        assert!(verify_self_dual(&f9, &c.code));

        let f25 = FieldContext::create(5, 2, None).unwrap();
        let c = build_theorem1(&f25, &coset(5, 3, 2, Family::RootsOfUnity)).unwrap();
        assert_eq!((c.code.len(), c.lambda), (6, Fe::ONE));
        assert!(verify_self_dual(&f25, &c.code));
        let c = build_theorem2(&f25, &coset(5, 3, 3, Family::RootsOfUnityExtended)).unwrap();
        assert_eq!(c.code.len(), 10);
        assert!(verify_self_dual(&f25, &c.code));
        let c = build_theorem3(&f25, &coset(5, 3, 2, Family::RootsOfUnityWithZero)).unwrap();
        assert_eq!(c.code.len(), 8);
        assert_eq!(c.code.points[0], Fe::ZERO);
        assert!(verify_self_dual(&f25, &c.code));
        let c = build_theorem4(&f25, &SubspaceParams { p: 5, mdeg: 2, t: 2, e: 1 }).unwrap();
        assert_eq!(c.code.len(), 20);
        assert!(verify_self_dual(&f25, &c.code));
    }

    #[test]
    fn mismatched_inputs() {
        let f25 = FieldContext::create(5, 2, None).unwrap();
        let p = coset(5, 3, 2, Family::RootsOfUnity);
        assert!(build_theorem2(&f25, &p).is_err());
        let f49 = FieldContext::create(7, 2, None).unwrap();
        assert!(build_theorem1(&f49, &p).is_err());
    }
}
