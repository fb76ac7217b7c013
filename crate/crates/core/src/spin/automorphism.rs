//! Automorphisms `(ξ1, ξ2) ↦ (η·ξ1, σ·ξ2)` of `E_{i,j}` compatible with the
//! power map `γ_e: Sym^e E_{i,j} → E_{e·i mod l, e·j mod l}`.

use crate::error::{Error, Result};
use crate::field::FieldConfig;
use crate::maps::{GeneratorMap, Source};
use crate::module::ModulePresentation;
use crate::ring::{NodeRing, TMode};
use crate::spin::power::sym_power_map;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismGroup {
    pub e: u32,
    /// Pairs `(η, σ)` in lexicographic order.
    pub elements: Vec<(u64, u64)>,
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Every element has `η = σ`.
    pub fn is_diagonal(&self) -> bool {
        self.elements.iter().all(|(a, b)| a == b)
    }
}

/// Enumerates pairs in `μ_e × μ_e`. With `disconnected = false` the two
/// branches lie on one component and must be scaled alike.
pub fn automorphisms(
    config: &FieldConfig,
    (i, j, l): (u32, u32, u32),
    e: u32,
    mode: TMode,
    disconnected: bool,
) -> Result<AutomorphismGroup> {
    let roots = config.unity_roots(e)?;
    automorphisms_among(config, (i, j, l), e, mode, disconnected, &roots)
}

/// Same as [`automorphisms`] but searching the given candidate scalars.
pub fn automorphisms_among(
    config: &FieldConfig,
    (i, j, l): (u32, u32, u32),
    e: u32,
    mode: TMode,
    disconnected: bool,
    candidates: &[u64],
) -> Result<AutomorphismGroup> {
    let r = config.r();
    if e == 0 || r % e != 0 {
        return Err(Error::NotDivisor(e, r));
    }
    let ring = NodeRing::new(l, config.field(), mode)?;
    let pres = ModulePresentation::new(ring, i as i64, j as i64)?;
    let gamma = sym_power_map(ring, (i, j), e)?;
    let mut elements = Vec::new();
    for &eta in candidates {
        for &sigma in candidates {
            if eta == 0 || sigma == 0 || (!disconnected && eta != sigma) {
                continue;
            }
            let phi = [pres.xi1().scale(eta), pres.xi2().scale(sigma)];
            let endo = GeneratorMap::new(Source::Module(pres), pres, phi.to_vec())?;
            if !endo.check_well_defined().passed() {
                continue;
            }
            let preserves = (0..=e).all(|k| {
                let factors: Vec<_> = (0..e)
                    .map(|s| phi[if s < e - k { 0 } else { 1 }].clone())
                    .collect();
                gamma.apply_sym(&factors).ok().as_ref() == Some(&gamma.images()[k as usize])
            });
            if preserves {
                elements.push((eta, sigma));
            }
        }
    }
    elements.sort_unstable();
    Ok(AutomorphismGroup { e, elements })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generic_and_nodal_branches() {
        let c = FieldConfig::new(5, 2).unwrap();
        let generic = automorphisms(&c, (1, 1, 2), 2, TMode::Generic, true).unwrap();
        assert_eq!(generic.elements, vec![(1, 1), (4, 4)]);
        let zero = automorphisms(&c, (1, 1, 2), 2, TMode::Specialized(0), true).unwrap();
        assert_eq!(zero.order(), 4);
        assert!(!zero.is_diagonal());
        let connected = automorphisms(&c, (1, 1, 2), 2, TMode::Specialized(0), false).unwrap();
        assert_eq!(connected.order(), 2);
        let trivial = automorphisms(&c, (1, 1, 2), 1, TMode::Specialized(0), true).unwrap();
        assert_eq!(trivial.elements, vec![(1, 1)]);
    }

    #[test]
    fn whole_unit_group_search_lands_in_roots_of_unity() {
        let c = FieldConfig::new(13, 6).unwrap();
        let all: Vec<u64> = (1..13).collect();
        for e in [1, 2, 3, 6] {
            let g =
                automorphisms_among(&c, (1, 2, 3), e, TMode::Specialized(0), true, &all).unwrap();
            assert_eq!(g.order(), (e * e) as usize);
            let roots = c.unity_roots(e).unwrap();
            assert!(g
                .elements
                .iter()
                .all(|(a, b)| roots.contains(a) && roots.contains(b)));
            let h =
                automorphisms_among(&c, (1, 2, 3), e, TMode::Specialized(3), true, &all).unwrap();
            assert_eq!(h.order(), e as usize);
        }
    }

    #[test]
    fn non_divisor_rejected() {
        let c = FieldConfig::new(5, 4).unwrap();
        assert!(matches!(
            automorphisms(&c, (1, 1, 2), 3, TMode::Generic, true),
            Err(Error::NotDivisor(3, 4))
        ));
    }
}
