//! Dense polynomials over a prime field, constant term first.

use crate::arith::factorize;

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Remainder of `a` modulo `f`; `f` must be nonzero.
pub(crate) fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut f = f.to_vec();
    trim(&mut f);
    let df = f.len() - 1;
    let lead_inv = inv_mod(f[df], p);
    while r.len() > df {
        let shift = r.len() - 1 - df;
        let coef = r[r.len() - 1] * lead_inv % p;
        for (i, &fc) in f.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - coef * fc % p) % p;
        }
        trim(&mut r);
    }
    r
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), f, p)
}

fn powmod(base: &[u64], mut exp: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = rem(&[1], f, p);
    let mut b = rem(base, f, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(&acc, &b, f, p);
        }
        b = mulmod(&b, &b, f, p);
        exp >>= 1;
    }
    acc
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + p - y) % p;
    }
    trim(&mut out);
    out
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Rabin's test: a monic `f` of degree `m` is irreducible over `F_p` iff
/// `x^(p^m) = x (mod f)` and `gcd(x^(p^(m/l)) - x, f) = 1` for every prime `l | m`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let mut f = f.to_vec();
    trim(&mut f);
    if f.len() < 2 {
        return false;
    }
    let m = (f.len() - 1) as u64;
    let x = [0u64, 1];
    // frob[i] = x^(p^i) mod f
    let mut frob = vec![rem(&x, &f, p)];
    for i in 1..=m as usize {
        let next = powmod(&frob[i - 1], p, &f, p);
        frob.push(next);
    }
    if !rem(&sub(&frob[m as usize], &x, p), &f, p).is_empty() {
        return false;
    }
    factorize(m).into_iter().all(|(l, _)| {
        let h = sub(&frob[(m / l) as usize], &x, p);
        gcd(&h, &f, p).len() == 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Trial division by every monic polynomial of degree 1..=deg/2.
    fn brute_irreducible(f: &[u64], p: u64) -> bool {
        let m = f.len() - 1;
        for d in 1..=m / 2 {
            let count = p.pow(d as u32);
            for code in 0..count {
                let mut g: Vec<u64> = (0..d).map(|i| code / p.pow(i as u32) % p).collect();
                g.push(1);
                if rem(f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn rabin_matches_trial_division() {
        for &(p, m) in &[(3u64, 2usize), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2), (3, 6)] {
            let count = p.pow(m as u32);
            for code in 0..count {
                let mut f: Vec<u64> = (0..m).map(|i| code / p.pow(i as u32) % p).collect();
                f.push(1);
                assert_eq!(is_irreducible(&f, p), brute_irreducible(&f, p), "p={p} f={f:?}");
            }
        }
    }

    #[test]
    fn linear_is_irreducible() {
        assert!(is_irreducible(&[0, 1], 13));
        assert!(is_irreducible(&[4, 1], 13));
    }

    #[test]
    fn rem_and_mul() {
        // (x + 1)^2 = x^2 + 2x + 1 over F_3; mod x^2 + 1 leaves 2x
        let sq = mul(&[1, 1], &[1, 1], 3);
        assert_eq!(sq, vec![1, 2, 1]);
        assert_eq!(rem(&sq, &[1, 0, 1], 3), vec![0, 2]);
    }
}
