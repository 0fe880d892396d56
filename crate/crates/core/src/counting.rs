//! Number-theoretic orbit counts and closed-form DT invariants of loop quivers.
//!
//! Every division that is mathematically guaranteed to be exact is checked; a
//! remainder is reported as [`Error::Invariant`](crate::Error::Invariant).

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{invariant, precondition, Result};

/// Prime factorisation by trial division, as `(prime, exponent)` pairs.
pub fn factorize(mut k: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= k {
        if k % p == 0 {
            let mut e = 0;
            while k % p == 0 {
                k /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if k > 1 {
        out.push((k, 1));
    }
    out
}

/// Positive divisors of `k` in increasing order.
pub fn divisors(k: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= k {
        if k % d == 0 {
            small.push(d);
            if d * d != k {
                large.push(k / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Möbius function. `moebius(0)` is treated as 0.
pub fn moebius(k: u64) -> i64 {
    if k == 0 {
        return 0;
    }
    let mut sign = 1;
    for (_, e) in factorize(k) {
        if e > 1 {
            return 0;
        }
        sign = -sign;
    }
    sign
}

/// Euler's totient.
pub fn euler_phi(k: u64) -> u64 {
    if k == 0 {
        return 0;
    }
    factorize(k)
        .into_iter()
        .fold(k, |acc, (p, _)| acc / p * (p - 1))
}

/// Ramanujan sum `C_b(a)` via `μ(b/g)·φ(b)/φ(b/g)` with `g = gcd(a, b)` and `gcd(0, b) = b`.
pub fn ramanujan_sum(b: u64, a: u64) -> Result<i64> {
    if b == 0 {
        return Err(precondition("Ramanujan sum needs b >= 1"));
    }
    let g = a.gcd(&b);
    let q = b / g;
    let (phi_b, phi_q) = (euler_phi(b), euler_phi(q));
    if phi_b % phi_q != 0 {
        return Err(invariant(format!("phi({q}) does not divide phi({b})")));
    }
    Ok(moebius(q) * (phi_b / phi_q) as i64)
}

/// Binomial coefficient over the integers; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn exact_div(num: BigInt, den: &BigInt, what: &str) -> Result<BigInt> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(invariant(format!("{what}: {num} is not divisible by {den}")));
    }
    Ok(q)
}

/// Number of size-`k` multisets from `{0, ..., a-1}` whose sum is `b` mod `a`
/// (von Sterneck's formula).
pub fn von_sterneck(a: u64, k: u64, b: u64) -> Result<BigInt> {
    if a == 0 {
        return Err(precondition("von Sterneck count needs a >= 1"));
    }
    let mut total = BigInt::zero();
    for d in divisors(a.gcd(&k)) {
        let c = ramanujan_sum(d, b)?;
        total += binomial((a + k) / d - 1, k / d) * BigInt::from(c);
    }
    exact_div(total, &BigInt::from(a), "von Sterneck sum")
}

fn sign(exponent: u64) -> BigInt {
    if exponent % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn require_positive(m: u64, n: u64) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(precondition(format!("need m, n >= 1, got m = {m}, n = {n}")));
    }
    Ok(())
}

/// `n · |S_n \ D_{m,n}|` before the final division, shared by the orbit count and DT.
fn signed_moebius_sum(m: u64, n: u64) -> BigInt {
    divisors(n)
        .into_iter()
        .map(|d| {
            sign(m * (n + d))
                * BigInt::from(moebius(n / d))
                * binomial((m + 1) * d - 1, m * d)
        })
        .sum()
}

/// Number of `S_n`-orbits on `D_{m,n}`, from the signed Möbius sum over `d | n`.
pub fn orbit_count_d(m: u64, n: u64) -> Result<BigInt> {
    require_positive(m, n)?;
    exact_div(signed_moebius_sum(m, n), &BigInt::from(n), "orbit count of D")
}

/// The same orbit count as a multiset count with modulus `mn`, size `n`, residue `g`.
pub fn orbit_count_d_von_sterneck(m: u64, n: u64) -> Result<BigInt> {
    require_positive(m, n)?;
    let modulus = m * n;
    let genus = (m * n * (n - 1) / 2 + 1) as i128 - n as i128;
    von_sterneck(modulus, n, genus.rem_euclid(modulus as i128) as u64)
}

/// The same orbit count via the two-case form: when `m` is odd and `n ≡ 2 (mod 4)` the
/// even divisors enter with the opposite sign, otherwise the plain Möbius sum.
pub fn orbit_count_d_split(m: u64, n: u64) -> Result<BigInt> {
    require_positive(m, n)?;
    let flip_even = m % 2 == 1 && n % 4 == 2;
    let mut total = BigInt::zero();
    for d in divisors(n) {
        let term = BigInt::from(moebius(d)) * binomial((m + 1) * n / d - 1, n / d);
        if flip_even && d % 2 == 0 {
            total -= term;
        } else {
            total += term;
        }
    }
    exact_div(total, &BigInt::from(m * n), "split orbit count of D")
}

/// Numerical DT invariant `DT_n^{m+1}` of the `(m+1)`-loop quiver.
pub fn dt_invariant(m: u64, n: u64) -> Result<BigInt> {
    let orbits = orbit_count_d(m, n)?;
    exact_div(orbits, &BigInt::from(n), "DT invariant")
}

/// `binom((m+1)n, n) / (mn + 1)`: number of `(m+1)`-ary trees with `n` nodes.
pub fn fuss_catalan(m: u64, n: u64) -> Result<BigInt> {
    if m == 0 {
        return Err(precondition("Fuss-Catalan numbers need m >= 1"));
    }
    exact_div(
        binomial((m + 1) * n, n),
        &BigInt::from(m * n + 1),
        "Fuss-Catalan number",
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    /// Counts multisets by walking nondecreasing sequences.
    fn multisets_brute_force(a: u64, k: u64, b: u64) -> u64 {
        fn rec(a: u64, left: u64, min: u64, sum: u64, b: u64) -> u64 {
            if left == 0 {
                return u64::from(sum % a == b % a);
            }
            (min..a).map(|v| rec(a, left - 1, v, sum + v, b)).sum()
        }
        rec(a, k, 0, 0, b)
    }

    /// `Σ_{gcd(k,b)=1} cos(2πka/b)`; the imaginary parts cancel.
    fn ramanujan_numeric(b: u64, a: u64) -> f64 {
        (1..=b)
            .filter(|k| k.gcd(&b) == 1)
            .map(|k| {
                let angle = 2.0 * core::f64::consts::PI * (k * a) as f64 / b as f64;
                libm_cos(angle)
            })
            .sum()
    }

    // no_std crate: use the std cos through the test harness
    fn libm_cos(x: f64) -> f64 {
        extern crate std;
        std::primitive::f64::cos(x)
    }

    #[test]
    fn moebius_and_phi() {
        assert_eq!((moebius(1), euler_phi(1)), (1, 1));
        assert_eq!((moebius(6), euler_phi(6)), (1, 2));
        assert_eq!((moebius(4), euler_phi(4)), (0, 2));
        assert_eq!(moebius(30), -1);
        assert_eq!(euler_phi(97), 96);
        assert_eq!(divisors(12), alloc::vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn ramanujan_examples() {
        for a in 0..10 {
            assert_eq!(ramanujan_sum(1, a).unwrap(), 1);
        }
        assert_eq!(ramanujan_sum(2, 0).unwrap(), 1);
        assert_eq!(ramanujan_sum(4, 2).unwrap(), -2);
        assert_eq!(ramanujan_sum(12, 0).unwrap(), 4);
        assert!(ramanujan_sum(0, 3).is_err());
    }

    #[test]
    fn ramanujan_matches_exponential_sum() {
        for b in 1..=30 {
            for a in 0..=30 {
                let exact = ramanujan_sum(b, a).unwrap() as f64;
                assert!((exact - ramanujan_numeric(b, a)).abs() < 1e-6, "C_{b}({a})");
            }
        }
    }

    #[test]
    fn von_sterneck_examples() {
        assert_eq!(von_sterneck(6, 3, 4).unwrap(), big(9));
        assert_eq!(von_sterneck(2, 2, 0).unwrap(), big(2));
        for a in 1..8 {
            for b in 0..a {
                assert_eq!(von_sterneck(a, 1, b).unwrap(), big(1));
            }
        }
    }

    #[test]
    fn von_sterneck_matches_brute_force() {
        for a in 1..=8 {
            for k in 0..=6 {
                for b in 0..a {
                    assert_eq!(
                        von_sterneck(a, k, b).unwrap(),
                        BigInt::from(multisets_brute_force(a, k, b)),
                        "a={a} k={k} b={b}"
                    );
                }
            }
        }
    }

    #[test]
    fn orbit_count_examples() {
        assert_eq!(orbit_count_d(2, 3).unwrap(), big(9));
        assert_eq!(orbit_count_d(1, 2).unwrap(), big(2));
        assert_eq!(orbit_count_d(2, 4).unwrap(), big(40));
    }

    #[test]
    fn orbit_count_routes_agree() {
        for m in 1..=4 {
            for n in 1..=12 {
                let unified = orbit_count_d(m, n).unwrap();
                assert_eq!(unified, orbit_count_d_von_sterneck(m, n).unwrap(), "m={m} n={n}");
                assert_eq!(unified, orbit_count_d_split(m, n).unwrap(), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn dt_examples() {
        assert_eq!(dt_invariant(2, 4).unwrap(), big(10));
        assert_eq!(dt_invariant(2, 3).unwrap(), big(3));
        for m in 1..6 {
            assert_eq!(dt_invariant(m, 1).unwrap(), big(1));
        }
        // m = 1: 1, 1, 1, 2, 5, 13, 35 (2-loop quiver)
        let two_loop: Vec<BigInt> = (1..=7).map(|n| dt_invariant(1, n).unwrap()).collect();
        assert_eq!(two_loop, [1, 1, 1, 2, 5, 13, 35].map(big));
        assert!(dt_invariant(0, 3).is_err());
    }

    #[test]
    fn fuss_catalan_examples() {
        assert_eq!(fuss_catalan(3, 0).unwrap(), big(1));
        assert_eq!(fuss_catalan(1, 3).unwrap(), big(5));
        assert_eq!(fuss_catalan(2, 2).unwrap(), big(3));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(11, 8), big(165));
        assert_eq!(binomial(5, 4), big(5));
        assert_eq!(binomial(3, 5), big(0));
        assert_eq!(binomial(0, 0), big(1));
    }
}
