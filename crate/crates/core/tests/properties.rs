use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use rspin_core::moduli::{chi, enumerate_assignments, Chi, DualGraph, Vertex};
use rspin_core::ring::{RawPoly, RawTerm};
use rspin_core::spin::twist::{index_from_twist, marking_twist};
use rspin_core::{LocalVar, ModulePresentation, NodeRing, PrimeField, RingElement, TMode};

const P: u64 = 13;

fn field() -> PrimeField {
    PrimeField::new(P).unwrap()
}

fn raw_poly(max_deg: i64) -> impl Strategy<Value = RawPoly> + Clone {
    prop::collection::vec((-20i64..20, 0..=max_deg, 0..=max_deg, 0..=max_deg), 0..6).prop_map(
        |terms| RawPoly {
            terms: terms
                .into_iter()
                .map(|(coeff, t, x, y)| RawTerm { coeff, t, x, y })
                .collect(),
        },
    )
}

fn raw_product(a: &RawPoly, b: &RawPoly) -> RawPoly {
    let mut out = RawPoly::new();
    for s in &a.terms {
        for u in &b.terms {
            out = out.term(s.coeff * u.coeff, s.t + u.t, s.x + u.x, s.y + u.y);
        }
    }
    out
}

fn run_per_l<S, F>(max_l: u32, cases: u32, strategy: S, check: F)
where
    S: Strategy + Clone,
    F: Fn(NodeRing, S::Value) -> Result<(), TestCaseError>,
{
    for l in 1..=max_l {
        let ring = NodeRing::generic(l, field()).unwrap();
        let mut runner = TestRunner::new(Config {
            cases,
            ..Config::default()
        });
        runner
            .run(&strategy.clone(), |v| check(ring, v))
            .unwrap_or_else(|e| panic!("l = {l}: {e}"));
    }
}

#[test]
fn ring_axioms() {
    let triple = (raw_poly(3), raw_poly(3), raw_poly(3));
    run_per_l(8, 1000, triple, |ring, (a, b, c)| {
        let (a, b, c) = (
            ring.normalize(&a).unwrap(),
            ring.normalize(&b).unwrap(),
            ring.normalize(&c).unwrap(),
        );
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &ring.one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        Ok(())
    });
}

#[test]
fn normal_form_is_unique() {
    run_per_l(8, 300, (raw_poly(6), raw_poly(6)), |ring, (a, b)| {
        let direct = ring.normalize(&raw_product(&a, &b)).unwrap();
        let staged = &ring.normalize(&a).unwrap() * &ring.normalize(&b).unwrap();
        prop_assert_eq!(&direct, &staged);
        prop_assert!(direct
            .terms()
            .all(|(m, c)| *c != 0 && (m.x == 0 || m.y == 0)));
        Ok(())
    });
}

#[test]
fn localization_is_a_homomorphism() {
    run_per_l(8, 300, (raw_poly(4), raw_poly(4)), |ring, (a, b)| {
        let (a, b) = (ring.normalize(&a).unwrap(), ring.normalize(&b).unwrap());
        for var in [LocalVar::X, LocalVar::Y] {
            prop_assert_eq!((&a * &b).localize(var), &a.localize(var) * &b.localize(var));
            prop_assert_eq!((&a + &b).localize(var), &a.localize(var) + &b.localize(var));
        }
        Ok(())
    });
}

#[test]
fn localization_is_injective_on_monomials() {
    for l in 1..=8 {
        let ring = NodeRing::generic(l, field()).unwrap();
        let mut seen = std::collections::HashSet::new();
        for t in 0..=6u32 {
            for a in 0..=6u32 {
                for (x, y) in [(a, 0), (0, a)] {
                    if a == 0
                        && y == 0
                        && x == 0
                        && seen.contains(&ring.monomial(1, t, 0, 0).localize(LocalVar::X))
                    {
                        continue;
                    }
                    assert!(
                        seen.insert(ring.monomial(1, t, x, y).localize(LocalVar::X)),
                        "l={l} t={t} x={x} y={y}"
                    );
                }
            }
        }
    }
}

#[test]
fn specialization_commutes_with_arithmetic() {
    run_per_l(
        8,
        200,
        (raw_poly(4), raw_poly(4), 0u64..P),
        |ring, (a, b, c)| {
            let (a, b) = (ring.normalize(&a).unwrap(), ring.normalize(&b).unwrap());
            let mode = TMode::Specialized(c);
            prop_assert_eq!(
                (&a * &b).specialize(mode),
                &a.specialize(mode) * &b.specialize(mode)
            );
            prop_assert_eq!(
                (&a + &b).specialize(mode),
                &a.specialize(mode) + &b.specialize(mode)
            );
            prop_assert_eq!(a.specialize(TMode::Generic), a.clone());
            Ok(())
        },
    );
}

/// Reduces `(f, g)` by applying `x·y → t^l`, `y·ξ1 → t^i ξ2` and
/// `x·ξ2 → t^j ξ1` one step at a time, choosing the next rewrite with
/// `order`.
fn rewrite_in_order(
    pres: &ModulePresentation,
    f: &[(u64, u32, u32, u32)],
    g: &[(u64, u32, u32, u32)],
    order: &[usize],
) -> (RingElement, RingElement) {
    let (l, i, j) = (pres.l(), pres.i(), pres.j());
    // (slot, coeff, t, x, y)
    let mut work: Vec<(u8, u64, u32, u32, u32)> = f
        .iter()
        .map(|&(c, t, x, y)| (1, c, t, x, y))
        .chain(g.iter().map(|&(c, t, x, y)| (2, c, t, x, y)))
        .collect();
    let mut step = 0;
    loop {
        let reducible: Vec<usize> = (0..work.len())
            .filter(|&k| {
                let (s, _, _, x, y) = work[k];
                (x > 0 && y > 0)
                    || (!pres.is_free() && ((s == 1 && y > 0) || (s == 2 && x > 0)))
                    || (pres.is_free() && s == 2)
            })
            .collect();
        if reducible.is_empty() {
            break;
        }
        let pick = reducible[order[step % order.len()] % reducible.len()];
        step += 1;
        let (s, c, t, x, y) = work[pick];
        work[pick] = if x > 0 && y > 0 {
            (s, c, t + l, x - 1, y - 1)
        } else if pres.is_free() {
            (1, c, t, x, y)
        } else if s == 1 {
            (2, c, t + i, x, y - 1)
        } else {
            (1, c, t + j, x - 1, y)
        };
    }
    let ring = pres.ring();
    let mut nf = ring.zero();
    let mut ng = ring.zero();
    for (s, c, t, x, y) in work {
        let m = ring.monomial(c, t, x, y);
        if s == 1 {
            nf = &nf + &m;
        } else {
            ng = &ng + &m;
        }
    }
    (nf, ng)
}

#[test]
fn module_rewriting_is_confluent() {
    let terms = || prop::collection::vec((1u64..P, 0u32..4, 0u32..4, 0u32..4), 0..5);
    let strategy = (
        terms(),
        terms(),
        prop::collection::vec(0usize..16, 1..8),
        0u32..10,
    );
    for l in 1..=10u32 {
        let ring = NodeRing::generic(l, field()).unwrap();
        let mut runner = TestRunner::new(Config {
            cases: 100,
            ..Config::default()
        });
        runner
            .run(&strategy, |(f, g, order, pick)| {
                let i = pick % l;
                let pres = ModulePresentation::new(
                    ring,
                    i as i64,
                    if i == 0 { 0 } else { (l - i) as i64 },
                )
                .unwrap();
                let (nf, ng) = rewrite_in_order(&pres, &f, &g, &order);
                let mut raw_f = ring.zero();
                for &(c, t, x, y) in &f {
                    raw_f = &raw_f + &ring.monomial(c, t, x, y);
                }
                let mut raw_g = ring.zero();
                for &(c, t, x, y) in &g {
                    raw_g = &raw_g + &ring.monomial(c, t, x, y);
                }
                let canonical = pres.element(raw_f, raw_g).unwrap();
                prop_assert_eq!(canonical.f(), &nf);
                prop_assert_eq!(canonical.g(), &ng);
                Ok(())
            })
            .unwrap_or_else(|e| panic!("l = {l}: {e}"));
    }
}

#[test]
fn scalar_action_is_associative() {
    let strategy = (raw_poly(3), raw_poly(3), raw_poly(3), raw_poly(3), 0u32..8);
    run_per_l(8, 150, strategy, |ring, (a, b, f, g, pick)| {
        let l = ring.l();
        let i = pick % l;
        let pres = ModulePresentation::new(ring, i as i64, if i == 0 { 0 } else { (l - i) as i64 })
            .unwrap();
        let (a, b) = (ring.normalize(&a).unwrap(), ring.normalize(&b).unwrap());
        let m = pres
            .element(ring.normalize(&f).unwrap(), ring.normalize(&g).unwrap())
            .unwrap();
        let lhs = m.scalar_action(&b).unwrap().scalar_action(&a).unwrap();
        let rhs = m.scalar_action(&(&a * &b)).unwrap();
        prop_assert_eq!(lhs, rhs);
        let sum = m.scalar_action(&(&a + &b)).unwrap();
        prop_assert_eq!(
            sum,
            m.scalar_action(&a)
                .unwrap()
                .try_add(&m.scalar_action(&b).unwrap())
                .unwrap()
        );
        Ok(())
    });
}

#[test]
fn graded_dimensions_at_the_node() {
    for l in 1..=8u32 {
        let ring = NodeRing::generic(l, field()).unwrap();
        for i in 1..l {
            let e = ModulePresentation::new(ring, i as i64, (l - i) as i64).unwrap();
            assert_eq!(e.graded_dims(TMode::Specialized(0), 5).unwrap(), vec![2; 6]);
        }
        let free = ModulePresentation::new(ring, 0, 0).unwrap();
        assert_eq!(
            free.graded_dims(TMode::Specialized(0), 3).unwrap(),
            vec![1, 2, 2, 2]
        );
        assert!(free.graded_dims(TMode::Generic, 3).is_err());
    }
}

proptest! {
    #[test]
    fn twist_round_trip(r in 1u32..=24, k in 0u32..24) {
        prop_assume!(k < r);
        let t = index_from_twist(k, r).unwrap();
        prop_assert_eq!(t.a * r / t.l, k);
        prop_assert_eq!(r % t.l, 0);
        if k > 0 {
            prop_assert_eq!(t.a + t.b, t.l);
            prop_assert_eq!(marking_twist(1, t.l, t.b, r).unwrap(), k);
        }
        prop_assert_eq!((t.k + t.partner().k) % r, 0);
    }

    #[test]
    fn smooth_enumeration_matches_chi(g in 0u32..4, n in 0u32..4, r in 1u32..7, seed in prop::collection::vec(-1i64..7, 4)) {
        prop_assume!(2 * g + n > 2);
        let m: Vec<i64> = seed[..n as usize].to_vec();
        let legs: Vec<(&str, u32)> = (1..=n).map(|k| ("v", k)).collect();
        let graph = DualGraph::new(vec![Vertex { id: "v".into(), genus: g }], &[], &legs).unwrap();
        let found = enumerate_assignments(&graph, r, &m).unwrap();
        let integral = matches!(chi(g, n, r, &m).unwrap(), Chi::Integral(_));
        prop_assert_eq!(!found.is_empty(), integral);
    }
}
