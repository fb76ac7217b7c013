//! A finite window `⊕_{|d| ≤ D} G_d` of the graded spin algebra at a node.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::gcd;
use crate::maps::{GeneratorMap, SourceGen};
use crate::module::{ModuleElement, ModulePresentation};
use crate::ring::NodeRing;
use crate::spin::product::product_map;

#[derive(Clone, Debug)]
pub struct AlgebraWindow {
    i: u32,
    j: u32,
    r: u32,
    radius: i64,
    ring: NodeRing,
    tiers: BTreeMap<i64, ModulePresentation>,
    products: BTreeMap<(i64, i64), GeneratorMap>,
}

fn exponents(i: u32, j: u32, l: u32, d: i64) -> (u32, u32) {
    let l = l as i64;
    (
        (d * i as i64).rem_euclid(l) as u32,
        (d * j as i64).rem_euclid(l) as u32,
    )
}

impl AlgebraWindow {
    /// Builds tiers `G_d = E_{d·i mod l, d·j mod l}` for `|d| ≤ radius` and
    /// every product `G_d ⊗ G_{d'} → G_{d+d'}` staying inside the window.
    pub fn new(ring: NodeRing, i: u32, j: u32, r: u32, radius: u32) -> Result<Self> {
        let l = ring.l();
        let invalid = || Error::InvalidModule {
            i: i as i64,
            j: j as i64,
            l: l as i64,
        };
        if !((i == 0 && j == 0) || (i > 0 && j > 0 && i + j == l)) {
            return Err(invalid());
        }
        if i > 0 && gcd(j as u64, l as u64) != 1 {
            return Err(Error::InvalidArgument(format!(
                "window needs gcd(j, l) = 1, got j = {j}, l = {l}"
            )));
        }
        if r == 0 || r % l != 0 {
            return Err(Error::NotDivisor(l, r));
        }
        if radius < r {
            return Err(Error::InvalidArgument(format!(
                "window radius {radius} is below r = {r}"
            )));
        }
        let radius = radius as i64;
        let mut tiers = BTreeMap::new();
        for d in -radius..=radius {
            let (a, b) = exponents(i, j, l, d);
            tiers.insert(d, ModulePresentation::new(ring, a as i64, b as i64)?);
        }
        let mut products = BTreeMap::new();
        for d in -radius..=radius {
            for e in -radius..=radius {
                if (d + e).abs() > radius {
                    continue;
                }
                let (a, b) = (tiers[&d], tiers[&e]);
                products.insert((d, e), product_map(ring, (a.i(), a.j()), (b.i(), b.j()))?);
            }
        }
        Ok(AlgebraWindow {
            i,
            j,
            r,
            radius,
            ring,
            tiers,
            products,
        })
    }

    pub fn ring(&self) -> NodeRing {
        self.ring
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn exponents(&self) -> (u32, u32) {
        (self.i, self.j)
    }

    pub fn tier(&self, d: i64) -> Option<&ModulePresentation> {
        self.tiers.get(&d)
    }

    pub fn tiers(&self) -> impl Iterator<Item = (&i64, &ModulePresentation)> {
        self.tiers.iter()
    }

    pub fn product(&self, d: i64, e: i64) -> Option<&GeneratorMap> {
        self.products.get(&(d, e))
    }

    pub fn products(&self) -> impl Iterator<Item = (&(i64, i64), &GeneratorMap)> {
        self.products.iter()
    }

    /// Product of `a ∈ G_d` and `b ∈ G_e`.
    pub fn multiply(
        &self,
        d: i64,
        a: &ModuleElement,
        e: i64,
        b: &ModuleElement,
    ) -> Result<ModuleElement> {
        let map = self
            .product(d, e)
            .ok_or_else(|| Error::InvalidArgument(format!("degrees {d} + {e} leave the window")))?;
        map.apply_tensor(a, b)
    }

    /// Multiplying by the generator of `G_0` is the identity on generators.
    pub fn unit_laws_hold(&self) -> bool {
        self.tiers.iter().all(|(&d, pres)| {
            let unit = self.tiers[&0].xi1();
            (1..=2u8).all(|g| {
                let x = pres.generator(g);
                self.multiply(0, &unit, d, &x).ok() == Some(x.clone())
                    && self.multiply(d, &x, 0, &unit).ok() == Some(x)
            })
        })
    }

    /// First degree triple `(a, b, c)` where the two bracketings differ on a
    /// generator triple, or `None` when the window is associative.
    pub fn associativity_failure(&self) -> Result<Option<(i64, i64, i64)>> {
        let inside = |d: i64| d.abs() <= self.radius;
        for a in -self.radius..=self.radius {
            for b in -self.radius..=self.radius {
                for c in -self.radius..=self.radius {
                    if !(inside(a + b) && inside(b + c) && inside(a + b + c)) {
                        continue;
                    }
                    if !self.associative_at(a, b, c)? {
                        return Ok(Some((a, b, c)));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Both bracketings agree on all eight generator triples of degrees
    /// `(a, b, c)`.
    pub fn associative_at(&self, a: i64, b: i64, c: i64) -> Result<bool> {
        let (ta, tc) = (self.tiers[&a], self.tiers[&c]);
        let ab = &self.products[&(a, b)];
        let bc = &self.products[&(b, c)];
        for p in 1..=2u8 {
            for q in 1..=2u8 {
                let left_inner = ab.image(SourceGen::Pair(p, q)).expect("tensor source");
                let right_inner_gen =
                    |s: u8| bc.image(SourceGen::Pair(q, s)).expect("tensor source");
                for s in 1..=2u8 {
                    let left = self.multiply(a + b, left_inner, c, &tc.generator(s))?;
                    let right = self.multiply(a, &ta.generator(p), b + c, right_inner_gen(s))?;
                    if left != right {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn ring(l: u32) -> NodeRing {
        NodeRing::generic(l, PrimeField::new(13).unwrap()).unwrap()
    }

    #[test]
    fn tiers_for_e11() {
        let w = AlgebraWindow::new(ring(2), 1, 1, 2, 2).unwrap();
        let shown: Vec<String> = (-2..=2).map(|d| w.tier(d).unwrap().to_string()).collect();
        assert_eq!(
            shown,
            ["E_{0,0}", "E_{1,1}", "E_{0,0}", "E_{1,1}", "E_{0,0}"]
        );
        assert!(w.tier(2).unwrap().is_free());
        assert!(w.unit_laws_hold());
        assert_eq!(w.associativity_failure().unwrap(), None);
    }

    #[test]
    fn duals_and_top_tier() {
        let w = AlgebraWindow::new(ring(3), 1, 2, 3, 3).unwrap();
        for d in 1..=3 {
            assert_eq!(*w.tier(-d).unwrap(), w.tier(d).unwrap().dual());
        }
        assert!(w.tier(3).unwrap().is_free());
        assert!(w.associative_at(1, 2, -3).unwrap());
        assert_eq!(w.associativity_failure().unwrap(), None);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(AlgebraWindow::new(ring(4), 2, 2, 4, 4).is_err());
        assert!(AlgebraWindow::new(ring(3), 1, 2, 4, 4).is_err());
        assert!(AlgebraWindow::new(ring(3), 1, 2, 3, 2).is_err());
    }
}
