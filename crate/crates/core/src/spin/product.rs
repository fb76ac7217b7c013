//! Products `E_{i,j} ⊗ E_{i',j'} → E_{(i+i') mod l, (j+j') mod l}`.
//!
//! Generators are `ζ1, ζ2` on the left, `ξ1, ξ2` on the right and `ν1, ν2`
//! (or `σ` when free) on the target. With both factors non-free there are
//! three cases:
//!
//! | case        | ζ1⊗ξ1 | ζ1⊗ξ2      | ζ2⊗ξ1      | ζ2⊗ξ2 |
//! |-------------|-------|------------|------------|-------|
//! | `i+i' > l`  | x·ν1  | t^{j'}·ν1  | t^{j}·ν1   | ν2    |
//! | `i+i' < l`  | ν1    | t^{i}·ν2   | t^{i'}·ν2  | y·ν2  |
//! | `i+i' = l`  | x·σ   | t^{i}·σ    | t^{j}·σ    | y·σ   |
//!
//! A free factor acts by scalar collapse: `σ ⊗ ξ_b ↦ ν_b`.

use crate::error::{Error, Result};
use crate::maps::{GeneratorMap, Source, SourceGen};
use crate::module::{ModuleElement, ModulePresentation};
use crate::ring::{LaurentPoly, LocalVar, NodeRing, RingElement};

fn presentations(
    ring: NodeRing,
    left: (u32, u32),
    right: (u32, u32),
) -> Result<(ModulePresentation, ModulePresentation, ModulePresentation)> {
    let a = ModulePresentation::new(ring, left.0 as i64, left.1 as i64)?;
    let b = ModulePresentation::new(ring, right.0 as i64, right.1 as i64)?;
    let l = ring.l();
    let target = ModulePresentation::new(
        ring,
        ((left.0 + right.0) % l) as i64,
        ((left.1 + right.1) % l) as i64,
    )?;
    Ok((a, b, target))
}

fn at(target: &ModulePresentation, coeff: RingElement, generator: u8) -> ModuleElement {
    target
        .generator(generator)
        .scalar_action(&coeff)
        .expect("coefficient lives in the target ring")
}

/// Images in generator order `ζ1⊗ξ1, ζ1⊗ξ2, ζ2⊗ξ1, ζ2⊗ξ2`.
fn images(
    a: &ModulePresentation,
    b: &ModulePresentation,
    target: &ModulePresentation,
    swapped_mixed: bool,
) -> Vec<ModuleElement> {
    let ring = target.ring();
    let one = ring.one();
    let (i, j, i2, j2, l) = (a.i(), a.j(), b.i(), b.j(), ring.l());
    match (a.is_free(), b.is_free()) {
        (true, true) => vec![target.xi1(); 4],
        (true, false) => vec![target.xi1(), target.xi2(), target.xi1(), target.xi2()],
        (false, true) => vec![target.xi1(), target.xi1(), target.xi2(), target.xi2()],
        (false, false) if i + i2 > l => vec![
            at(target, ring.x(), 1),
            at(target, ring.t_pow(j2), 1),
            at(target, ring.t_pow(j), 1),
            at(target, one, 2),
        ],
        (false, false) if i + i2 < l => {
            let (p, q) = if swapped_mixed { (i2, i) } else { (i, i2) };
            vec![
                at(target, one, 1),
                at(target, ring.t_pow(p), 2),
                at(target, ring.t_pow(q), 2),
                at(target, ring.y(), 2),
            ]
        }
        (false, false) => {
            let q = if swapped_mixed { i } else { j };
            vec![
                at(target, ring.x(), 1),
                at(target, ring.t_pow(i), 1),
                at(target, ring.t_pow(q), 1),
                at(target, ring.y(), 1),
            ]
        }
    }
}

/// The product map, checked for well-definedness.
pub fn product_map(ring: NodeRing, left: (u32, u32), right: (u32, u32)) -> Result<GeneratorMap> {
    let (a, b, target) = presentations(ring, left, right)?;
    let imgs = images(&a, &b, &target, false);
    GeneratorMap::validated(Source::Tensor(a, b), target, imgs)
}

/// Negative control: the product with the mixed `t`-powers exchanged
/// (`t^{i'}` and `t^{i}` when `i+i' < l`, `t^{i}` on both when `i+i' = l`).
/// Returned unchecked; it is a module map only when the exchanged exponents
/// coincide.
pub fn product_map_swapped_mixed(
    ring: NodeRing,
    left: (u32, u32),
    right: (u32, u32),
) -> Result<GeneratorMap> {
    let (a, b, target) = presentations(ring, left, right)?;
    let imgs = images(&a, &b, &target, true);
    GeneratorMap::new(Source::Tensor(a, b), target, imgs)
}

/// `E_{i,j} ⊗ E_{j,i} → E_{0,0}`.
pub fn dual_pairing(ring: NodeRing, i: u32, j: u32) -> Result<GeneratorMap> {
    product_map(ring, (i, j), (j, i))
}

/// Pairing values `⟨ζ_a, ξ_b⟩` as ring elements (coefficients of `σ`).
pub fn pairing_matrix(map: &GeneratorMap) -> Result<[[RingElement; 2]; 2]> {
    if !map.target().is_free() {
        return Err(Error::InvalidArgument(format!(
            "pairing target {} is not free",
            map.target()
        )));
    }
    let v = |a, b| map.image(SourceGen::Pair(a, b)).map(|m| m.f().clone());
    match (v(1, 1), v(1, 2), v(2, 1), v(2, 2)) {
        (Some(a), Some(b), Some(c), Some(d)) => Ok([[a, b], [c, d]]),
        _ => Err(Error::InvalidArgument(
            "pairing needs a tensor source".into(),
        )),
    }
}

/// After inverting `x` (or `y`) every module involved is free of rank one.
/// Checks that the product becomes `c ↦ u·c` on localized coordinates: each
/// image coordinate equals `u · coord(ζ_a) · coord(ξ_b)` for the single
/// value `u` taken at the generator kept by the localization, and that `u`
/// is a unit.
pub fn localized_agreement(map: &GeneratorMap, var: LocalVar) -> Result<bool> {
    let Source::Tensor(a, b) = map.source() else {
        return Err(Error::InvalidArgument(
            "localized agreement needs a tensor source".into(),
        ));
    };
    let base: u8 = match var {
        LocalVar::X => 1,
        LocalVar::Y => 2,
    };
    let img = |p, q| -> Result<LaurentPoly> {
        map.image(SourceGen::Pair(p, q))
            .map(|m| m.localize(var))
            .ok_or_else(|| Error::InvalidArgument("missing image".into()))
    };
    let unit = img(base, base)?;
    if !unit.is_unit() {
        return Ok(false);
    }
    for p in 1..=2u8 {
        for q in 1..=2u8 {
            let lhs = img(p, q)?;
            let rhs = &(&unit * &a.generator(p).localize(var)) * &b.generator(q).localize(var);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The pairing induces `E_{i,j}[v^{-1}] ≅ Hom(E_{j,i}, A)[v^{-1}]`.
pub fn pairing_is_perfect(map: &GeneratorMap, var: LocalVar) -> Result<bool> {
    if !map.target().is_free() {
        return Ok(false);
    }
    localized_agreement(map, var)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::maps::Certificate;

    fn ring(l: u32) -> NodeRing {
        NodeRing::generic(l, PrimeField::new(13).unwrap()).unwrap()
    }

    #[test]
    fn case_one_example() {
        let r = ring(3);
        let m = product_map(r, (2, 1), (2, 1)).unwrap();
        let t = m.target();
        assert_eq!((t.i(), t.j()), (1, 2));
        assert_eq!(
            m.image(SourceGen::Pair(1, 1)).unwrap(),
            &t.xi1().scalar_action(&r.x()).unwrap()
        );
        assert_eq!(
            m.image(SourceGen::Pair(1, 2)).unwrap(),
            &t.xi1().scalar_action(&r.t()).unwrap()
        );
        assert_eq!(m.image(SourceGen::Pair(2, 2)).unwrap(), &t.xi2());
    }

    #[test]
    fn case_three_example() {
        let r = ring(2);
        let m = product_map(r, (1, 1), (1, 1)).unwrap();
        let t = m.target();
        assert!(t.is_free());
        assert_eq!(
            m.image(SourceGen::Pair(2, 2)).unwrap(),
            &t.xi1().scalar_action(&r.y()).unwrap()
        );
        assert_eq!(
            m.image(SourceGen::Pair(1, 2)).unwrap(),
            &t.xi1().scalar_action(&r.t()).unwrap()
        );
    }

    #[test]
    fn case_two_example_and_negative_control() {
        let r = ring(4);
        let m = product_map(r, (1, 3), (2, 2)).unwrap();
        let t = m.target();
        assert_eq!((t.i(), t.j()), (3, 1));
        assert_eq!(
            m.image(SourceGen::Pair(1, 2)).unwrap(),
            &t.xi2().scalar_action(&r.t()).unwrap()
        );

        let swapped = product_map_swapped_mixed(r, (1, 3), (2, 2)).unwrap();
        assert!(matches!(
            swapped.check_well_defined(),
            Certificate::Fail { .. }
        ));
    }

    #[test]
    fn pairing_examples() {
        let r = ring(2);
        let p = dual_pairing(r, 1, 1).unwrap();
        let [[a, b], [c, d]] = pairing_matrix(&p).unwrap();
        assert_eq!((a, b, c, d), (r.x(), r.t(), r.t(), r.y()));

        let r3 = ring(3);
        let p = dual_pairing(r3, 1, 2).unwrap();
        assert_eq!(pairing_matrix(&p).unwrap()[0][0], r3.x());

        let free = dual_pairing(r3, 0, 0).unwrap();
        assert_eq!(pairing_matrix(&free).unwrap()[0][0], r3.one());
        assert!(pairing_is_perfect(&free, LocalVar::X).unwrap());
        assert!(pairing_is_perfect(&p, LocalVar::X).unwrap());
        assert!(pairing_is_perfect(&p, LocalVar::Y).unwrap());
    }

    #[test]
    fn invalid_exponents_rejected() {
        assert!(product_map(ring(4), (1, 2), (2, 2)).is_err());
        assert!(dual_pairing(ring(4), 1, 1).is_err());
    }
}
