//! Prime fields `F_p` and the global `(p, r)` configuration.
//!
//! Elements are plain `u64` residues in `[0, p)`. Every prime accepted here is
//! below `2^32`, so products fit in a `u64` without widening.

use std::fmt;

use crate::error::{Error, Result};

/// Environment variable consulted by [`FieldConfig::from_env_or_default`].
pub const PRIME_ENV_VAR: &str = "RSPIN_FIELD_PRIME";

const MAX_PRIME: u64 = 1 << 32;

/// The prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::FieldConfig(format!("{p} is not prime")));
        }
        if p >= MAX_PRIME {
            return Err(Error::FieldConfig(format!("{p} exceeds 2^32")));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduces a signed integer into `[0, p)`.
    #[inline]
    pub fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        if a % self.p == 0 {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }

    /// Smallest generator of the cyclic group `F_p^*`.
    pub fn primitive_root(&self) -> u64 {
        if self.p == 2 {
            return 1;
        }
        let order = self.p - 1;
        let factors = prime_factors(order);
        (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, order / q) != 1))
            .expect("F_p^* is cyclic")
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// Coefficient field together with the global spin level `r`.
///
/// Invariants: `p` is prime, `p ≡ 1 (mod r)` and `p ∤ r`, so `F_p` contains
/// every `r`-th root of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldConfig {
    field: PrimeField,
    r: u32,
}

impl FieldConfig {
    pub fn new(p: u64, r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::FieldConfig("r must be positive".into()));
        }
        let field = PrimeField::new(p)?;
        if (p - 1) % r as u64 != 0 {
            return Err(Error::FieldConfig(format!("{p} is not 1 mod {r}")));
        }
        if r as u64 % p == 0 {
            return Err(Error::FieldConfig(format!("{p} divides r = {r}")));
        }
        Ok(FieldConfig { field, r })
    }

    /// Uses the smallest admissible prime for `r`.
    pub fn with_default_prime(r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::FieldConfig("r must be positive".into()));
        }
        FieldConfig::new(default_prime(r), r)
    }

    /// Reads the prime from [`PRIME_ENV_VAR`] when set, otherwise the default.
    pub fn from_env_or_default(r: u32) -> Result<Self> {
        match std::env::var(PRIME_ENV_VAR) {
            Ok(v) => {
                let p = v.trim().parse::<u64>().map_err(|_| {
                    Error::FieldConfig(format!("{PRIME_ENV_VAR}={v} is not an integer"))
                })?;
                FieldConfig::new(p, r)
            }
            Err(_) => FieldConfig::with_default_prime(r),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u64 {
        self.field.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// All `e`-th roots of unity in `F_p`, sorted ascending.
    pub fn unity_roots(&self, e: u32) -> Result<Vec<u64>> {
        if e == 0 || self.r % e != 0 {
            return Err(Error::NotDivisor(e, self.r));
        }
        let f = self.field;
        let zeta = f.pow(f.primitive_root(), (f.p - 1) / e as u64);
        let mut roots: Vec<u64> = std::iter::successors(Some(1 % f.p), |&z| Some(f.mul(z, zeta)))
            .take(e as usize)
            .collect();
        roots.sort_unstable();
        roots.dedup();
        Ok(roots)
    }
}

/// Smallest prime `p` with `p ≡ 1 (mod r)`.
pub fn default_prime(r: u32) -> u64 {
    let r = r.max(1) as u64;
    (1..)
        .map(|k| k * r + 1)
        .find(|&p| is_prime(p) && r % p != 0)
        .expect("Dirichlet")
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Positive divisors of `n`, ascending.
pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_primes() {
        assert_eq!(default_prime(1), 2);
        assert_eq!(default_prime(2), 3);
        assert_eq!(default_prime(3), 7);
        assert_eq!(default_prime(4), 5);
        assert_eq!(default_prime(6), 7);
        assert_eq!(default_prime(12), 13);
    }

    #[test]
    fn unity_roots_examples() {
        let c5 = FieldConfig::new(5, 2).unwrap();
        assert_eq!(c5.unity_roots(2).unwrap(), vec![1, 4]);
        let c7 = FieldConfig::new(7, 3).unwrap();
        assert_eq!(c7.unity_roots(3).unwrap(), vec![1, 2, 4]);
        assert_eq!(c7.unity_roots(1).unwrap(), vec![1]);
        assert!(matches!(c7.unity_roots(2), Err(Error::NotDivisor(2, 3))));
    }

    #[test]
    fn unity_roots_are_roots() {
        let cfg = FieldConfig::with_default_prime(12).unwrap();
        for e in divisors(12) {
            let roots = cfg.unity_roots(e).unwrap();
            assert_eq!(roots.len(), e as usize);
            for z in roots {
                assert_eq!(cfg.field().pow(z, e as u64), 1);
            }
        }
    }

    #[test]
    fn rejects_bad_configs() {
        assert!(FieldConfig::new(9, 2).is_err());
        assert!(FieldConfig::new(7, 4).is_err());
        assert!(FieldConfig::new(3, 0).is_err());
    }

    #[test]
    fn inverse() {
        let f = PrimeField::new(13).unwrap();
        for a in 1..13 {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
        assert_eq!(f.inv(0), None);
    }
}
