//! Power maps `c_{d→e}: Sym^{d/e} F_d → F_e` between tiers of a spin
//! structure, and their compatibility along divisor chains.
//!
//! With `n = d/e`, `u = (n·i_d - i_e)/l` and `v = (n·j_d - j_e)/l`:
//!
//! ```text
//! ξ1^{n-k} ξ2^k ↦ x^{u-k} t^{k·j_d} ζ1                 for 0 ≤ k ≤ u
//!              ↦ y^{v-n+k} t^{(n-k)·i_d} ζ2            for u < k ≤ n
//! ```
//!
//! A free source collapses every monomial onto the generator of the (then
//! necessarily free) target.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::maps::{GeneratorMap, Source};
use crate::module::{ModuleElement, ModulePresentation};
use crate::ring::NodeRing;
use crate::spin::product::product_map;
use crate::spin::twist::{check_top, tier_twists};

fn exponent(name: char, numerator: i64, l: u32) -> Result<u32> {
    if numerator < 0 || numerator % l as i64 != 0 {
        return Err(Error::NonIntegralPower { name, numerator, l });
    }
    Ok((numerator / l as i64) as u32)
}

fn power_images(
    source: ModulePresentation,
    target: ModulePresentation,
    n: u32,
) -> Result<Vec<ModuleElement>> {
    let ring = source.ring();
    if source.is_free() {
        if !target.is_free() {
            return Err(Error::InvalidArgument(format!(
                "free source {source} cannot map onto {target}"
            )));
        }
        return Ok(vec![target.xi1(); n as usize + 1]);
    }
    let l = ring.l();
    let (id, jd) = (source.i() as i64, source.j() as i64);
    let u = exponent('u', n as i64 * id - target.i() as i64, l)?;
    let v = exponent('v', n as i64 * jd - target.j() as i64, l)?;
    (0..=n)
        .map(|k| {
            if k <= u {
                let c = ring.monomial(1, k * source.j(), u - k, 0);
                target.xi1().scalar_action(&c)
            } else {
                let y_exp = (v + k).checked_sub(n).ok_or(Error::NonIntegralPower {
                    name: 'v',
                    numerator: (v + k) as i64 - n as i64,
                    l,
                })?;
                let c = ring.monomial(1, (n - k) * source.i(), 0, y_exp);
                target.xi2().scalar_action(&c)
            }
        })
        .collect()
}

/// `Sym^n E_{i,j} → E_{n·i mod l, n·j mod l}`.
pub fn sym_power_map(ring: NodeRing, (i, j): (u32, u32), n: u32) -> Result<GeneratorMap> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "symmetric power must be positive".into(),
        ));
    }
    let l = ring.l();
    let source = ModulePresentation::new(ring, i as i64, j as i64)?;
    let target = ModulePresentation::new(ring, ((n * i) % l) as i64, ((n * j) % l) as i64)?;
    let images = power_images(source, target, n)?;
    GeneratorMap::validated(Source::Sym(source, n), target, images)
}

/// The tier presentation `F_d = E_{i_d, j_d}`.
pub fn tier_presentation(
    ring: NodeRing,
    i_r: u32,
    j_r: u32,
    r: u32,
    d: u32,
) -> Result<ModulePresentation> {
    let t = tier_twists(i_r, j_r, ring.l(), r, d)?;
    ModulePresentation::new(ring, t.i as i64, t.j as i64)
}

/// `c_{d→e}: Sym^{d/e} F_d → F_e` for `e | d | r`.
pub fn power_map(
    ring: NodeRing,
    d: u32,
    e: u32,
    i_r: u32,
    j_r: u32,
    r: u32,
) -> Result<GeneratorMap> {
    check_top(i_r, j_r, ring.l(), r)?;
    if d == 0 || r % d != 0 {
        return Err(Error::NotDivisor(d, r));
    }
    if e == 0 || d % e != 0 {
        return Err(Error::NotDivisor(e, d));
    }
    let source = tier_presentation(ring, i_r, j_r, r, d)?;
    let target = tier_presentation(ring, i_r, j_r, r, e)?;
    let n = d / e;
    let images = power_images(source, target, n)?;
    GeneratorMap::validated(Source::Sym(source, n), target, images)
}

/// Images of `ξ1^{n-k} ξ2^k` computed as `n`-fold binary products
/// (all `ξ1` factors first), for `k = 0..=n`.
pub fn iterated_product(ring: NodeRing, (i, j): (u32, u32), n: u32) -> Result<Vec<ModuleElement>> {
    if n == 0 {
        return Err(Error::InvalidArgument("need at least one factor".into()));
    }
    let base = ModulePresentation::new(ring, i as i64, j as i64)?;
    let mut cache: HashMap<(u32, u32), GeneratorMap> = HashMap::new();
    (0..=n)
        .map(|k| {
            let mut factors = (0..n).map(|s| if s < n - k { base.xi1() } else { base.xi2() });
            let mut acc = factors.next().expect("n ≥ 1");
            for factor in factors {
                let p = acc.presentation();
                let key = (p.i(), p.j());
                if !cache.contains_key(&key) {
                    cache.insert(key, product_map(ring, key, (i, j))?);
                }
                acc = cache[&key].apply_tensor(&acc, &factor)?;
            }
            Ok(acc)
        })
        .collect()
}

fn multisets(parts: u32, max_part: u32, total: u32) -> Vec<Vec<u32>> {
    fn go(parts: u32, cap: u32, total: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 0 {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if total > cap * parts {
            return;
        }
        for v in (0..=cap.min(total)).rev() {
            prefix.push(v);
            go(parts - 1, v, total - v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(parts, max_part, total, &mut Vec::new(), &mut out);
    out
}

/// `c_{d'→d} ∘ c_{d''→d'}^{⊗ d'/d} = c_{d''→d}` for `d | d' | d'' | r`,
/// checked on every generator monomial and every way of distributing its
/// `ξ2` factors over the `d'/d` blocks.
pub fn compatibility_check(
    ring: NodeRing,
    (outer, middle, inner): (u32, u32, u32),
    i_r: u32,
    j_r: u32,
    r: u32,
) -> Result<bool> {
    if outer == 0 || r % outer != 0 {
        return Err(Error::NotDivisor(outer, r));
    }
    if middle == 0 || outer % middle != 0 {
        return Err(Error::NotDivisor(middle, outer));
    }
    if inner == 0 || middle % inner != 0 {
        return Err(Error::NotDivisor(inner, middle));
    }
    let first = power_map(ring, outer, middle, i_r, j_r, r)?;
    let second = power_map(ring, middle, inner, i_r, j_r, r)?;
    let direct = power_map(ring, outer, inner, i_r, j_r, r)?;
    let block = outer / middle;
    let blocks = middle / inner;
    for (k, expected) in direct.images().iter().enumerate() {
        for split in multisets(blocks, block, k as u32) {
            let factors: Vec<ModuleElement> = split
                .iter()
                .map(|&ks| first.images()[ks as usize].clone())
                .collect();
            if second.apply_sym(&factors)? != *expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
