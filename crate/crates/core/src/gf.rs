//! Exact arithmetic in `F_q`, `q = p^m` with `p` an odd prime.
//!
//! Elements are stored by their integer code: the residue polynomial
//! `c_0 + c_1 x + ... + c_{m-1} x^{m-1}` modulo the field's defining
//! polynomial is encoded as `sum c_i p^i`. The prime subfield is exactly the
//! set of codes below `p`.
//!
//! Unless an explicit modulus is supplied, a field is defined by the monic
//! irreducible polynomial of degree `m` whose lower coefficients have the
//! smallest code, and its generator is the primitive element with the
//! smallest code. Both choices are therefore reproducible without tables.

use std::fmt;

use crate::arith::{factorize, is_prime};
use crate::poly;
use crate::{Error, Result};

/// Fields up to this size get discrete log/exp tables.
const TABLE_LIMIT: u64 = 1 << 22;
const MAX_ORDER: u64 = 1 << 31;

/// A field element, identified by its integer code.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fe(u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    pub const fn code(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Characteristic, degree and defining polynomial of a field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    /// `m + 1` coefficients, constant term first, leading coefficient 1.
    pub modulus: Vec<u32>,
}

impl FieldSpec {
    pub fn q(&self) -> u64 {
        (self.p as u64).pow(self.m)
    }
}

struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// An immutable, shareable description of `F_q` together with its
/// canonical primitive element.
pub struct FieldContext {
    spec: FieldSpec,
    p: u64,
    q: u64,
    modulus: Vec<u64>,
    generator: Fe,
    nonsquare: Fe,
    /// Distinct primes dividing `q - 1`.
    group_primes: Vec<u64>,
    two_adicity: u32,
    odd_part: u64,
    tables: Option<LogTables>,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldContext")
            .field("spec", &self.spec)
            .field("q", &self.q)
            .field("generator", &self.generator)
            .finish()
    }
}

fn check_characteristic(p: u64, m: u32) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Err(Error::EvenCharacteristic(p));
    }
    if m == 0 {
        return Err(Error::ZeroDegree);
    }
    let q = p.checked_pow(m).filter(|&q| q <= MAX_ORDER).ok_or(Error::FieldTooLarge(p.saturating_pow(m)))?;
    Ok(q)
}

/// Scans monic degree-`m` polynomials in order of their lower-coefficient code.
fn canonical_modulus(p: u64, m: u32) -> Vec<u64> {
    if m == 1 {
        return vec![0, 1];
    }
    let count = p.pow(m);
    (0..count)
        .map(|code| {
            let mut f: Vec<u64> = (0..m).map(|i| code / p.pow(i) % p).collect();
            f.push(1);
            f
        })
        .find(|f| f[0] != 0 && poly::is_irreducible(f, p))
        .expect("an irreducible polynomial exists in every degree")
}

impl FieldContext {
    /// Builds `F_{p^m}`, using `modulus_override` as the defining polynomial
    /// when given, otherwise the canonical one.
    pub fn create(p: u64, m: u32, modulus_override: Option<&[u32]>) -> Result<Self> {
        let q = check_characteristic(p, m)?;
        let modulus: Vec<u64> = match modulus_override {
            None => canonical_modulus(p, m),
            Some(coeffs) => {
                if coeffs.len() != m as usize + 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected {} coefficients, got {}",
                        m + 1,
                        coeffs.len()
                    )));
                }
                if let Some(c) = coeffs.iter().find(|&&c| c as u64 >= p) {
                    return Err(Error::InvalidModulus(format!("coefficient {c} not reduced mod {p}")));
                }
                if *coeffs.last().unwrap() != 1 {
                    return Err(Error::InvalidModulus("polynomial is not monic".into()));
                }
                let f: Vec<u64> = coeffs.iter().map(|&c| c as u64).collect();
                if !poly::is_irreducible(&f, p) {
                    return Err(Error::InvalidModulus("polynomial is reducible".into()));
                }
                f
            }
        };

        let group_primes: Vec<u64> = factorize(q - 1).into_iter().map(|(l, _)| l).collect();
        let two_adicity = (q - 1).trailing_zeros();
        let mut ctx = FieldContext {
            spec: FieldSpec { p: p as u32, m, modulus: modulus.iter().map(|&c| c as u32).collect() },
            p,
            q,
            modulus,
            generator: Fe::ONE,
            nonsquare: Fe::ONE,
            group_primes,
            two_adicity,
            odd_part: (q - 1) >> two_adicity,
            tables: None,
        };
        ctx.generator = (1..q)
            .map(|c| Fe(c as u32))
            .find(|&x| ctx.order_unchecked(x) == q - 1)
            .expect("multiplicative group is cyclic");
        if q <= TABLE_LIMIT {
            ctx.tables = Some(ctx.build_tables());
        }
        ctx.nonsquare =
            (1..q).map(|c| Fe(c as u32)).find(|&x| ctx.quadratic_char(x) == -1).expect("odd q has nonsquares");
        Ok(ctx)
    }

    /// The canonical field of order `q`.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, m) = crate::arith::prime_power(q).ok_or(Error::NotOddPrimePower(q))?;
        if p == 2 {
            return Err(Error::NotOddPrimePower(q));
        }
        Self::create(p, m, None)
    }

    fn build_tables(&self) -> LogTables {
        let n = (self.q - 1) as usize;
        let mut exp = Vec::with_capacity(n);
        let mut log = vec![0u32; self.q as usize];
        let mut x = Fe::ONE;
        for i in 0..n {
            exp.push(x.0);
            log[x.0 as usize] = i as u32;
            x = self.mul_direct(x, self.generator);
        }
        LogTables { exp, log }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Extension degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.spec.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn generator(&self) -> Fe {
        self.generator
    }

    /// The nonsquare with the smallest code.
    pub fn nonsquare(&self) -> Fe {
        self.nonsquare
    }

    pub fn element(&self, code: u64) -> Result<Fe> {
        if code < self.q {
            Ok(Fe(code as u32))
        } else {
            Err(Error::ElementOutOfRange { code, q: self.q })
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Fe {
        Fe(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.q as u32).map(Fe)
    }

    fn digits(&self, x: Fe) -> Vec<u64> {
        let mut c = x.0 as u64;
        let mut out = Vec::with_capacity(self.spec.m as usize);
        for _ in 0..self.spec.m {
            out.push(c % self.p);
            c /= self.p;
        }
        out
    }

    fn pack_digits(&self, digits: &[u64]) -> Fe {
        let code = digits.iter().rev().fold(0u64, |acc, &d| acc * self.p + d);
        Fe(code as u32)
    }

    fn digitwise(&self, a: Fe, b: Fe, op: impl Fn(u64, u64) -> u64) -> Fe {
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        let mut code = 0;
        let mut place = 1;
        for _ in 0..self.spec.m {
            code += op(x % self.p, y % self.p) * place;
            place *= self.p;
            x /= self.p;
            y /= self.p;
        }
        Fe(code as u32)
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let p = self.p;
        if self.spec.m == 1 {
            return Fe(((a.0 as u64 + b.0 as u64) % p) as u32);
        }
        self.digitwise(a, b, |x, y| (x + y) % p)
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        let p = self.p;
        if self.spec.m == 1 {
            return Fe(((a.0 as u64 + p - b.0 as u64) % p) as u32);
        }
        self.digitwise(a, b, |x, y| (x + p - y) % p)
    }

    pub fn neg(&self, a: Fe) -> Fe {
        self.sub(Fe::ZERO, a)
    }

    /// Multiplication without the log tables.
    fn mul_direct(&self, a: Fe, b: Fe) -> Fe {
        if self.spec.m == 1 {
            return Fe((a.0 as u64 * b.0 as u64 % self.p) as u32);
        }
        let prod = poly::mulmod(&self.digits(a), &self.digits(b), &self.modulus, self.p);
        self.pack_digits(&prod)
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.is_zero() || b.is_zero() {
            return Fe::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let s = t.log[a.0 as usize] as u64 + t.log[b.0 as usize] as u64;
                let n = self.q - 1;
                t.exp[(if s >= n { s - n } else { s }) as usize].into()
            }
            None => self.mul_direct(a, b),
        }
    }

    fn pow_direct(&self, a: Fe, mut e: u64) -> Fe {
        let mut acc = Fe::ONE;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_direct(acc, base);
            }
            base = self.mul_direct(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^e` for a non-negative exponent; `0^0 = 1`.
    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if a.is_zero() {
            return if e == 0 { Fe::ONE } else { Fe::ZERO };
        }
        match &self.tables {
            Some(t) => {
                let n = self.q - 1;
                let idx = (t.log[a.0 as usize] as u128 * (e % n) as u128 % n as u128) as usize;
                t.exp[idx].into()
            }
            None => self.pow_direct(a, e),
        }
    }

    /// `a^e` for any integer exponent; negative exponents go through the inverse.
    pub fn pow_signed(&self, a: Fe, e: i64) -> Result<Fe> {
        if e >= 0 {
            Ok(self.pow(a, e as u64))
        } else {
            Ok(self.pow(self.inv(a)?, e.unsigned_abs()))
        }
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.tables {
            Some(t) => {
                let l = t.log[a.0 as usize] as u64;
                t.exp[((self.q - 1 - l) % (self.q - 1)) as usize].into()
            }
            None => self.pow_direct(a, self.q - 2),
        })
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Quadratic character by Euler's criterion: `0`, `+1` or `-1`.
    pub fn quadratic_char(&self, x: Fe) -> i8 {
        if x.is_zero() {
            0
        } else if self.pow(x, (self.q - 1) / 2) == Fe::ONE {
            1
        } else {
            -1
        }
    }

    pub fn is_square(&self, x: Fe) -> bool {
        self.quadratic_char(x) >= 0
    }

    /// Tonelli-Shanks in the multiplicative group. Returns the root with the
    /// smaller code, or `None` for nonsquares.
    pub fn sqrt(&self, x: Fe) -> Option<Fe> {
        if x.is_zero() {
            return Some(Fe::ZERO);
        }
        if self.quadratic_char(x) != 1 {
            return None;
        }
        let mut m = self.two_adicity;
        let mut c = self.pow(self.nonsquare, self.odd_part);
        let mut t = self.pow(x, self.odd_part);
        let mut r = self.pow(x, self.odd_part.div_ceil(2));
        while t != Fe::ONE {
            let mut i = 0;
            let mut t2 = t;
            while t2 != Fe::ONE {
                t2 = self.mul(t2, t2);
                i += 1;
            }
            let b = self.pow(c, 1u64 << (m - i - 1));
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        let other = self.neg(r);
        Some(r.min(other))
    }

    fn order_unchecked(&self, x: Fe) -> u64 {
        let mut order = self.q - 1;
        for &l in &self.group_primes {
            while order % l == 0 && self.pow_direct(x, order / l) == Fe::ONE {
                order /= l;
            }
        }
        order
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, x: Fe) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut order = self.q - 1;
        for &l in &self.group_primes {
            while order % l == 0 && self.pow(x, order / l) == Fe::ONE {
                order /= l;
            }
        }
        Ok(order)
    }

    /// The primitive `m`-th root of unity `g^((q-1)/m)`.
    pub fn root_of_unity(&self, m: u64) -> Result<Fe> {
        if m == 0 || (self.q - 1) % m != 0 {
            return Err(Error::NotDivisor { m, q_minus_1: self.q - 1 });
        }
        Ok(self.pow(self.generator, (self.q - 1) / m))
    }

    /// A generator `g^((q-1)/(r-1))` of `F_r^*` for a subfield `F_r`.
    pub fn subfield_generator(&self, r: u64) -> Result<Fe> {
        let not_subfield = Error::NotSubfield { r, q: self.q };
        let mut d = 0;
        let mut pw = 1u64;
        while pw < r {
            pw *= self.p;
            d += 1;
        }
        if pw != r || d == 0 || self.spec.m % d != 0 {
            return Err(not_subfield);
        }
        Ok(self.pow(self.generator, (self.q - 1) / (r - 1)))
    }
}

impl From<u32> for Fe {
    fn from(code: u32) -> Self {
        Fe(code)
    }
}
