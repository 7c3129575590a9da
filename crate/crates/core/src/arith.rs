//! Integer sieves, factorization, multiplicative functions, and modular
//! arithmetic used by every other module.

use crate::error::{Error, Result};

/// Hard cap on sieve sizes; anything above this is refused with a size error
/// rather than attempting a multi-gigabyte allocation.
pub const SIEVE_LIMIT: u64 = 1 << 31;

/// Smallest-prime-factor table for 1..=limit, built by a linear (Euler) sieve.
///
/// `spf[1] = 1`, `spf[p] = p` for primes, and for composite n `spf[n]` is its
/// least prime divisor. Immutable after construction; concurrent reads are safe.
pub struct FactorTable {
    limit: u64,
    spf: Vec<u32>,
}

impl FactorTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    #[inline]
    pub fn spf(&self, n: u64) -> u32 {
        self.spf[n as usize]
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && self.spf[n as usize] as u64 == n
    }

    /// Primes up to the limit, in increasing order.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        (2..=self.limit).filter(|&n| self.is_prime(n))
    }
}

/// Build the smallest-prime-factor table for 1..=n in O(n).
pub fn build_factor_table(n: u64) -> Result<FactorTable> {
    if n == 0 {
        return Err(Error::Size("factor table limit must be positive".into()));
    }
    if n > SIEVE_LIMIT {
        return Err(Error::Size(format!(
            "factor table limit {n} exceeds cap {SIEVE_LIMIT}"
        )));
    }
    let len = n as usize + 1;
    let mut spf = vec![0u32; len];
    if n >= 1 {
        spf[1] = 1;
    }
    let mut primes: Vec<u32> = Vec::new();
    for i in 2..=n as usize {
        if spf[i] == 0 {
            spf[i] = i as u32;
            primes.push(i as u32);
        }
        let si = spf[i];
        for &p in &primes {
            if p > si || (p as u64) * (i as u64) > n {
                break;
            }
            spf[p as usize * i] = p;
        }
    }
    Ok(FactorTable { limit: n, spf })
}

/// Factor n into (prime, exponent) pairs with strictly increasing primes.
pub fn factorize(n: u64, table: &FactorTable) -> Result<Vec<(u64, u32)>> {
    if n == 0 || n > table.limit {
        return Err(Error::Range(format!(
            "factorize argument {n} outside 1..={}",
            table.limit
        )));
    }
    let mut out = Vec::new();
    let mut m = n;
    while m > 1 {
        let p = table.spf(m) as u64;
        let mut e = 0u32;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        out.push((p, e));
    }
    Ok(out)
}

/// Which multiplicative function a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MultiplicativeKind {
    /// Triple divisor function d3(n) = #{(a,b,c) : abc = n}.
    D3,
    /// Moebius function.
    Mobius,
    /// Euler totient.
    Phi,
    /// Divisor count d(n).
    D,
}

impl MultiplicativeKind {
    pub fn name(self) -> &'static str {
        match self {
            MultiplicativeKind::D3 => "d3",
            MultiplicativeKind::Mobius => "mobius",
            MultiplicativeKind::Phi => "phi",
            MultiplicativeKind::D => "d",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "d3" => Ok(MultiplicativeKind::D3),
            "mobius" => Ok(MultiplicativeKind::Mobius),
            "phi" => Ok(MultiplicativeKind::Phi),
            "d" => Ok(MultiplicativeKind::D),
            other => Err(Error::Argument(format!(
                "unknown multiplicative kind {other:?} (expected d3, mobius, phi, d)"
            ))),
        }
    }

    /// Value at a prime power p^k, k >= 1.
    fn at_prime_power(self, p: u64, k: u32) -> i64 {
        match self {
            MultiplicativeKind::D3 => ((k as i64 + 1) * (k as i64 + 2)) / 2,
            MultiplicativeKind::Mobius => {
                if k == 1 {
                    -1
                } else {
                    0
                }
            }
            MultiplicativeKind::Phi => {
                let pk = (p as i64).pow(k);
                pk - pk / p as i64
            }
            MultiplicativeKind::D => k as i64 + 1,
        }
    }
}

/// Table of a multiplicative function on 1..=limit, signed 64-bit values.
pub struct MultiplicativeTable {
    pub kind: MultiplicativeKind,
    limit: u64,
    values: Vec<i64>,
}

impl MultiplicativeTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    #[inline]
    pub fn get(&self, n: u64) -> i64 {
        self.values[n as usize]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }
}

/// Sieve a multiplicative table in one pass over a smallest-prime-factor table.
pub fn sieve_multiplicative(kind: MultiplicativeKind, n: u64) -> Result<MultiplicativeTable> {
    let table = build_factor_table(n)?;
    sieve_multiplicative_from(kind, &table)
}

/// Same as [`sieve_multiplicative`] but reusing an existing factor table.
pub fn sieve_multiplicative_from(
    kind: MultiplicativeKind,
    table: &FactorTable,
) -> Result<MultiplicativeTable> {
    let n = table.limit;
    let len = n as usize + 1;
    let mut values = vec![0i64; len];
    // exponent of spf[i] in i, and i with that prime power removed
    let mut exp = vec![0u8; len];
    let mut rest = vec![0u32; len];
    if n >= 1 {
        values[1] = 1;
        exp[1] = 0;
        rest[1] = 1;
    }
    for i in 2..=n as usize {
        let p = table.spf[i] as usize;
        let m = i / p;
        if m % p == 0 {
            exp[i] = exp[m] + 1;
            rest[i] = rest[m];
        } else {
            exp[i] = 1;
            rest[i] = m as u32;
        }
        let r = rest[i] as usize;
        values[i] = if r == 1 {
            kind.at_prime_power(p as u64, exp[i] as u32)
        } else {
            values[r] * kind.at_prime_power(p as u64, exp[i] as u32)
        };
    }
    Ok(MultiplicativeTable {
        kind,
        limit: n,
        values,
    })
}

/// gcd for u64 (Euclid); gcd(0, n) = n.
pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Greatest common divisor and least common multiple; both inputs must be >= 1.
pub fn gcd_lcm(d: u64, dp: u64) -> Result<(u64, u64)> {
    if d == 0 || dp == 0 {
        return Err(Error::Range("gcd_lcm requires positive inputs".into()));
    }
    let g = gcd_u64(d, dp);
    Ok((g, d / g * dp))
}

/// Multiplicative inverse of a modulo q, in 1..q. Requires gcd(a, q) = 1, q >= 2.
/// Negative a is reduced first.
pub fn mod_inverse(a: i64, q: u64) -> Result<u64> {
    if q < 2 {
        return Err(Error::Range(format!("modulus {q} must be at least 2")));
    }
    let aa = a.rem_euclid(q as i64) as u64;
    // extended Euclid on (aa, q)
    let (mut r0, mut r1) = (q as i64, aa as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let quo = r0 / r1;
        (r0, r1) = (r1, r0 - quo * r1);
        (t0, t1) = (t1, t0 - quo * t1);
    }
    if r0 != 1 {
        return Err(Error::NotInvertible { a, q });
    }
    Ok(t0.rem_euclid(q as i64) as u64)
}

/// All divisors of n in increasing order, by trial division. Intended for the
/// small moduli that appear in character sums and Voronoi checks.
pub fn divisors_u64(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors of 0 undefined");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Moebius function of a small n by trial division.
pub fn mobius_u64(n: u64) -> i64 {
    assert!(n >= 1);
    let mut m = n;
    let mut omega = 0u32;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            omega += 1;
        }
        p += 1;
    }
    if m > 1 {
        omega += 1;
    }
    if omega % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Euler totient of a small n by trial division.
pub fn phi_u64(n: u64) -> u64 {
    assert!(n >= 1);
    let mut m = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}
