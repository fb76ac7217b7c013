//! Twist arithmetic at markings and nodes, and tier indices of a spin
//! structure.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::gcd;

/// A twist `k ∈ [0, r)` with its local index `l` and branch exponents.
///
/// `l = r / gcd(k, r)`, `k = a·r/l`, `b = l - a`; the untwisted case `k = 0`
/// has `l = 1` and `a = b = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwistData {
    pub r: u32,
    pub k: u32,
    pub l: u32,
    pub a: u32,
    pub b: u32,
}

impl TwistData {
    /// Twist on the other branch of a balanced node: `k + k' ≡ 0 (mod r)`.
    pub fn partner(&self) -> TwistData {
        index_from_twist((self.r - self.k) % self.r, self.r).expect("in range")
    }
}

impl fmt::Display for TwistData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}, {}, {})", self.k, self.l, self.a, self.b)
    }
}

pub fn index_from_twist(k: u32, r: u32) -> Result<TwistData> {
    if r == 0 || k >= r {
        return Err(Error::TwistOutOfRange { k, r });
    }
    if k == 0 {
        return Ok(TwistData {
            r,
            k,
            l: 1,
            a: 0,
            b: 0,
        });
    }
    let l = r / gcd(k as u64, r as u64) as u32;
    let a = k * l / r;
    Ok(TwistData {
        r,
        k,
        l,
        a,
        b: l - a,
    })
}

/// Least `k_i ≥ 0` with `k_i ≡ -i·b·(r/l) (mod r)`.
pub fn marking_twist(i: u32, l: u32, b: u32, r: u32) -> Result<u32> {
    if l == 0 || r == 0 || r % l != 0 {
        return Err(Error::NotDivisor(l, r));
    }
    if gcd(b as u64, l as u64) != 1 {
        return Err(Error::NotAUnit { b, l });
    }
    let r64 = r as i64;
    let k = -(i as i64) * b as i64 * (r / l) as i64;
    Ok(k.rem_euclid(r64) as u32)
}

/// Exponents `(i_d, j_d)` of the tier `F_d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TierIndex {
    pub d: u32,
    pub i: u32,
    pub j: u32,
}

pub(crate) fn check_top(i_r: u32, j_r: u32, l: u32, r: u32) -> Result<()> {
    if l == 0 || r == 0 || r % l != 0 {
        return Err(Error::NotDivisor(l, r));
    }
    if !((i_r == 0 && j_r == 0) || (i_r > 0 && j_r > 0 && i_r + j_r == l)) {
        return Err(Error::InvalidModule {
            i: i_r as i64,
            j: j_r as i64,
            l: l as i64,
        });
    }
    Ok(())
}

/// `i_d = i_r·(r/d) mod l`, `j_d = j_r·(r/d) mod l`.
pub fn tier_twists(i_r: u32, j_r: u32, l: u32, r: u32, d: u32) -> Result<TierIndex> {
    check_top(i_r, j_r, l, r)?;
    if d == 0 || r % d != 0 {
        return Err(Error::NotDivisor(d, r));
    }
    let m = r / d;
    Ok(TierIndex {
        d,
        i: (i_r * m) % l,
        j: (j_r * m) % l,
    })
}
