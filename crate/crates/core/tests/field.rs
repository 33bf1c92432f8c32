use mds_selfdual::arith::{is_prime, prime_power};
use mds_selfdual::{Fe, FieldContext};
use proptest::prelude::*;

fn odd_prime_powers(limit: u64) -> Vec<u64> {
    (3..=limit).filter(|&q| matches!(prime_power(q), Some((p, _)) if p != 2)).collect()
}

/// Reference multiplication: schoolbook product of coefficient vectors, then
/// reduction by the monic modulus, entirely on plain integers.
fn reference_mul(p: u64, modulus: &[u32], a: u32, b: u32) -> u32 {
    let m = modulus.len() - 1;
    let digits = |x: u32| -> Vec<u64> { (0..m).map(|i| (x as u64 / p.pow(i as u32)) % p).collect() };
    let (da, db) = (digits(a), digits(b));
    let mut prod = vec![0u64; 2 * m];
    for i in 0..m {
        for j in 0..m {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    for deg in (m..2 * m).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for (i, &f) in modulus[..m].iter().enumerate() {
            let idx = deg - m + i;
            prod[idx] = (prod[idx] + p * p - c * f as u64 % p) % p;
        }
    }
    prod[..m].iter().rev().fold(0u64, |acc, &d| acc * p + d) as u32
}

#[test]
fn canonical_quartic_over_f3_matches_exhaustive_scan() {
    // Oracle: a quartic is reducible iff it has a monic factor of degree 1 or 2.
    let p = 3u64;
    let is_reducible = |f: &[u64]| {
        (1..=2u32).any(|d| {
            (0..p.pow(d)).any(|code| {
                let mut g: Vec<u64> = (0..d).map(|i| code / p.pow(i) % p).collect();
                g.push(1);
                let mut r = f.to_vec();
                for top in (d as usize..r.len()).rev() {
                    let c = r[top];
                    for (i, &gi) in g.iter().enumerate() {
                        let idx = top - d as usize + i;
                        r[idx] = (r[idx] + p * p - c * gi) % p;
                    }
                }
                r.iter().all(|&x| x == 0)
            })
        })
    };
    let expected = (0..p.pow(4))
        .map(|code| {
            let mut f: Vec<u64> = (0..4).map(|i| code / p.pow(i) % p).collect();
            f.push(1);
            f
        })
        .find(|f| !is_reducible(f))
        .unwrap();
    let ctx = FieldContext::create(3, 4, None).unwrap();
    let got: Vec<u64> = ctx.spec().modulus.iter().map(|&c| c as u64).collect();
    assert_eq!(got, expected);
}

#[test]
fn multiplication_matches_reference_in_small_extensions() {
    for (p, m) in [(3u64, 2u32), (3, 3), (5, 2), (7, 2), (3, 4)] {
        let ctx = FieldContext::create(p, m, None).unwrap();
        let modulus = ctx.spec().modulus.clone();
        for a in ctx.elements() {
            for b in ctx.elements() {
                assert_eq!(
                    ctx.mul(a, b).code(),
                    reference_mul(p, &modulus, a.code(), b.code()),
                    "p={p} m={m} a={a} b={b}"
                );
            }
        }
    }
}

#[test]
fn generator_is_smallest_primitive_by_direct_powering() {
    for q in odd_prime_powers(400) {
        let ctx = FieldContext::of_order(q).unwrap();
        let order = |x: Fe| {
            let mut y = x;
            let mut k = 1;
            while y != Fe::ONE {
                y = ctx.mul(y, x);
                k += 1;
            }
            k
        };
        let g = ctx.generator();
        assert_eq!(order(g), q - 1, "q={q}");
        for c in 1..g.code() {
            assert!(order(Fe::from(c)) < q - 1, "q={q}: smaller primitive {c}");
        }
    }
}

#[test]
fn character_matches_discrete_log_parity() {
    // q <= 10^4, every odd prime power; the oracle walks powers of the generator.
    for q in odd_prime_powers(10_000) {
        let ctx = FieldContext::of_order(q).unwrap();
        let mut even_power = vec![None; q as usize];
        let mut x = Fe::ONE;
        for k in 0..q - 1 {
            even_power[x.code() as usize] = Some(k % 2 == 0);
            x = ctx.mul(x, ctx.generator());
        }
        for a in 1..q as u32 {
            let expected = if even_power[a as usize].unwrap() { 1 } else { -1 };
            assert_eq!(ctx.quadratic_char(Fe::from(a)), expected, "q={q} a={a}");
        }
    }
}

#[test]
fn subfield_elements_are_fixed_and_square() {
    for q in odd_prime_powers(6561) {
        let ctx = FieldContext::of_order(q).unwrap();
        let (p, m) = prime_power(q).unwrap();
        for d in (1..=m).filter(|d| m % d == 0) {
            let r = p.pow(d);
            let h = ctx.subfield_generator(r).unwrap();
            assert_eq!(ctx.element_order(h).unwrap(), r - 1);
            let mut x = Fe::ONE;
            for _ in 0..r - 1 {
                assert_eq!(ctx.pow(x, r), x);
                if 2 * d == m {
                    assert_eq!(ctx.quadratic_char(x), 1, "q={q} r={r}: subfield element not a square");
                }
                x = ctx.mul(x, h);
            }
        }
    }
}

#[test]
fn prime_field_codes_are_residues() {
    for p in (3..200).filter(|&p| is_prime(p)) {
        let ctx = FieldContext::create(p, 1, None).unwrap();
        assert_eq!(ctx.spec().modulus, vec![0, 1]);
        for a in 0..p as u32 {
            for b in [0u32, 1, (p / 2) as u32, p as u32 - 1] {
                assert_eq!(ctx.mul(Fe::from(a), Fe::from(b)).code() as u64, a as u64 * b as u64 % p);
                assert_eq!(ctx.add(Fe::from(a), Fe::from(b)).code() as u64, (a + b) as u64 % p);
            }
        }
    }
}

fn field_strategy() -> impl Strategy<Value = (u64, u32)> {
    prop_oneof![
        Just((3u64, 1u32)),
        Just((13, 1)),
        Just((3, 4)),
        Just((5, 2)),
        Just((7, 3)),
        Just((151, 2)),
        Just((3, 7))
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms((p, m) in field_strategy(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let ctx = FieldContext::create(p, m, None).unwrap();
        let q = ctx.q() as u32;
        let (a, b, c) = (Fe::from(a % q), Fe::from(b % q), Fe::from(c % q));
        prop_assert_eq!(ctx.mul(a, ctx.add(b, c)), ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
        prop_assert_eq!(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c)));
        prop_assert_eq!(ctx.add(a, ctx.neg(a)), Fe::ZERO);
        prop_assert_eq!(ctx.sub(ctx.add(a, b), b), a);
        prop_assert_eq!(ctx.mul(a, Fe::ONE), a);
        if !a.is_zero() {
            prop_assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), Fe::ONE);
            prop_assert_eq!(ctx.pow_signed(a, -3).unwrap(), ctx.inv(ctx.pow(a, 3)).unwrap());
            prop_assert_eq!(ctx.pow(a, ctx.q() - 1), Fe::ONE);
        }
    }

    #[test]
    fn sqrt_and_character((p, m) in field_strategy(), a in any::<u32>(), b in any::<u32>()) {
        let ctx = FieldContext::create(p, m, None).unwrap();
        let q = ctx.q() as u32;
        let (a, b) = (Fe::from(a % q), Fe::from(b % q));
        let sq = ctx.mul(a, a);
        let r = ctx.sqrt(sq).unwrap();
        prop_assert_eq!(ctx.mul(r, r), sq);
        prop_assert!(r.code() <= ctx.neg(r).code());
        prop_assert_eq!(
            ctx.quadratic_char(ctx.mul(a, b)),
            ctx.quadratic_char(a) * ctx.quadratic_char(b)
        );
        prop_assert_eq!(ctx.sqrt(a).is_some(), ctx.quadratic_char(a) >= 0);
    }
}
