//! Exhaustive verification suites over small parameters. Cases run in
//! parallel; failures are reported in case order.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::error::Result;
use crate::field::{default_prime, divisors, gcd, FieldConfig, PrimeField};
use crate::maps::SourceGen;
use crate::moduli::{enumerate_assignments, DualGraph, Leg, TwistAssignment, Vertex};
use crate::resolution::check_degree;
use crate::ring::{LocalVar, NodeRing, TMode};
use crate::spin::automorphism::automorphisms;
use crate::spin::oracle::{oracle_power_images, oracle_product_images, oracle_sym_images};
use crate::spin::power::{
    compatibility_check, iterated_product, power_map, sym_power_map, tier_presentation,
};
use crate::spin::product::{
    dual_pairing, localized_agreement, pairing_is_perfect, product_map, product_map_swapped_mixed,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "{}: {status} ({} cases", self.name, self.cases)?;
        if !self.passed() {
            write!(f, ", {} failures", self.failures.len())?;
        }
        write!(f, ")")
    }
}

/// Parameter bounds for [`run_all`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteBounds {
    /// Largest `l` for single products, localization and duality.
    pub max_l: u32,
    /// Largest `l` for commutativity and associativity.
    pub max_l_assoc: u32,
    /// Largest `r` for power maps, cokernels and automorphisms.
    pub max_r: u32,
    /// Largest `r` for the stratum enumeration oracle.
    pub max_r_graphs: u32,
    /// Largest degree for the resolution check.
    pub max_degree: u32,
    /// Field for suites that need no roots of unity.
    pub prime: u64,
}

impl SuiteBounds {
    pub fn full() -> Self {
        SuiteBounds {
            max_l: 10,
            max_l_assoc: 6,
            max_r: 12,
            max_r_graphs: 6,
            max_degree: 8,
            prime: default_prime(12),
        }
    }

    pub fn for_max_r(max_r: u32) -> Self {
        let max_r = max_r.max(1);
        SuiteBounds {
            max_l: max_r.min(10),
            max_l_assoc: max_r.min(6),
            max_r,
            max_r_graphs: max_r.min(6),
            max_degree: 8,
            prime: default_prime(12),
        }
    }
}

/// `(0, 0)` and `(i, l - i)` for `0 < i < l`.
pub fn valid_pairs(l: u32) -> Vec<(u32, u32)> {
    std::iter::once((0, 0))
        .chain((1..l).map(|i| (i, l - i)))
        .collect()
}

/// Top-tier exponents with `gcd(j_r, l) = 1`, and the free pair.
pub fn top_pairs(l: u32) -> Vec<(u32, u32)> {
    valid_pairs(l)
        .into_iter()
        .filter(|&(i, j)| i == 0 || gcd(j as u64, l as u64) == 1)
        .collect()
}

fn run<C, F>(name: &'static str, cases: Vec<C>, check: F) -> SuiteReport
where
    C: Send + Sync,
    F: Fn(&C) -> std::result::Result<(), String> + Send + Sync,
{
    let failures: Vec<String> = cases.par_iter().filter_map(|c| check(c).err()).collect();
    SuiteReport {
        name,
        cases: cases.len(),
        failures,
    }
}

fn ring(l: u32, prime: u64) -> NodeRing {
    NodeRing::generic(l, PrimeField::new(prime).expect("prime")).expect("positive l")
}

fn pair_cases(max_l: u32) -> Vec<(u32, (u32, u32), (u32, u32))> {
    let mut out = Vec::new();
    for l in 1..=max_l {
        let pairs = valid_pairs(l);
        for &a in &pairs {
            for &b in &pairs {
                out.push((l, a, b));
            }
        }
    }
    out
}

fn fail<E: fmt::Display>(context: impl fmt::Display) -> impl FnOnce(E) -> String {
    move |e| format!("{context}: {e}")
}

/// Every product map passes the relation check, perturbing any image
/// coefficient breaks it, and the exchanged mixed exponents fail exactly
/// when they differ.
pub fn well_definedness(max_l: u32, prime: u64) -> SuiteReport {
    run("well-definedness", pair_cases(max_l), |&(l, a, b)| {
        let ctx = format!("l={l} {a:?}⊗{b:?}");
        let r = ring(l, prime);
        let map = product_map(r, a, b).map_err(fail(&ctx))?;
        for (n, g) in map.source().generators().into_iter().enumerate() {
            let img = &map.images()[n];
            for (mono, coeff) in img.f().terms().chain(img.g().terms()).collect::<Vec<_>>() {
                let bump = r.monomial(1, mono.t, mono.x, mono.y);
                let in_f = img.f().coeff(mono) == *coeff && !img.f().is_zero();
                let delta = if in_f || map.target().is_free() {
                    map.target().xi1().scalar_action(&bump)
                } else {
                    map.target().xi2().scalar_action(&bump)
                }
                .map_err(fail(&ctx))?;
                let perturbed = map
                    .with_image(g, img.try_add(&delta).map_err(fail(&ctx))?)
                    .map_err(fail(&ctx))?;
                if perturbed.check_well_defined().passed() {
                    return Err(format!("{ctx}: perturbing {g} still passes"));
                }
            }
        }
        let both_standard = a.0 > 0 && b.0 > 0;
        if both_standard && a.0 + b.0 < l {
            let swapped = product_map_swapped_mixed(r, a, b).map_err(fail(&ctx))?;
            if swapped.check_well_defined().passed() != (a.0 == b.0) {
                return Err(format!("{ctx}: exchanged mixed images misjudged"));
            }
        }
        if both_standard && a.0 + b.0 == l {
            let swapped = product_map_swapped_mixed(r, a, b).map_err(fail(&ctx))?;
            if swapped.check_well_defined().passed() != (a.0 == a.1) {
                return Err(format!("{ctx}: equal mixed images misjudged"));
            }
        }
        Ok(())
    })
}

pub fn commutativity(max_l: u32, prime: u64) -> SuiteReport {
    run("commutativity", pair_cases(max_l), |&(l, a, b)| {
        let ctx = format!("l={l} {a:?}⊗{b:?}");
        let r = ring(l, prime);
        let ab = product_map(r, a, b).map_err(fail(&ctx))?;
        let ba = product_map(r, b, a).map_err(fail(&ctx))?;
        for p in 1..=2u8 {
            for q in 1..=2u8 {
                if ab.image(SourceGen::Pair(p, q)) != ba.image(SourceGen::Pair(q, p)) {
                    return Err(format!("{ctx}: ζ{p}⊗ξ{q} differs from its swap"));
                }
            }
        }
        Ok(())
    })
}

pub fn associativity(max_l: u32, prime: u64) -> SuiteReport {
    let mut cases = Vec::new();
    for l in 1..=max_l {
        let pairs = valid_pairs(l);
        for &a in &pairs {
            for &b in &pairs {
                for &c in &pairs {
                    cases.push((l, a, b, c));
                }
            }
        }
    }
    run("associativity", cases, |&(l, a, b, c)| {
        let ctx = format!("l={l} {a:?}⊗{b:?}⊗{c:?}");
        let r = ring(l, prime);
        let ab = product_map(r, a, b).map_err(fail(&ctx))?;
        let bc = product_map(r, b, c).map_err(fail(&ctx))?;
        let t_ab = ab.target();
        let t_bc = bc.target();
        let ab_c = product_map(r, (t_ab.i(), t_ab.j()), c).map_err(fail(&ctx))?;
        let a_bc = product_map(r, a, (t_bc.i(), t_bc.j())).map_err(fail(&ctx))?;
        let pa = ab.source();
        let (ea, ec) = match (pa, bc.source()) {
            (crate::maps::Source::Tensor(ea, _), crate::maps::Source::Tensor(_, ec)) => (ea, ec),
            _ => unreachable!("products have tensor sources"),
        };
        for p in 1..=2u8 {
            for q in 1..=2u8 {
                for s in 1..=2u8 {
                    let left = ab_c
                        .apply_tensor(
                            ab.image(SourceGen::Pair(p, q)).expect("pair"),
                            &ec.generator(s),
                        )
                        .map_err(fail(&ctx))?;
                    let right = a_bc
                        .apply_tensor(
                            &ea.generator(p),
                            bc.image(SourceGen::Pair(q, s)).expect("pair"),
                        )
                        .map_err(fail(&ctx))?;
                    if left != right {
                        return Err(format!(
                            "{ctx}: bracketings differ on ({p},{q},{s}): {left} vs {right}"
                        ));
                    }
                }
            }
        }
        Ok(())
    })
}

/// `(r, l, i_r, j_r)` for every `l | r ≤ max_r` and top pair.
fn spin_cases(max_r: u32) -> Vec<(u32, u32, u32, u32)> {
    let mut out = Vec::new();
    for r in 1..=max_r {
        for l in divisors(r) {
            for (i, j) in top_pairs(l) {
                out.push((r, l, i, j));
            }
        }
    }
    out
}

/// Iterated binary products reproduce every power map, and every divisor
/// chain is compatible.
pub fn power_coherence(max_r: u32, prime: u64) -> SuiteReport {
    run("power-map coherence", spin_cases(max_r), |&(r, l, i, j)| {
        let ring = ring(l, prime);
        for d in divisors(r) {
            let tier = tier_presentation(ring, i, j, r, d).map_err(fail(format!("r={r} l={l}")))?;
            for e in divisors(d) {
                let ctx = format!("r={r} l={l} top=({i},{j}) c_{d}->{e}");
                let c = power_map(ring, d, e, i, j, r).map_err(fail(&ctx))?;
                let iterated =
                    iterated_product(ring, (tier.i(), tier.j()), d / e).map_err(fail(&ctx))?;
                if iterated != c.images() {
                    return Err(format!("{ctx}: iterated products disagree"));
                }
                for f in divisors(e) {
                    let ctx = format!("r={r} l={l} top=({i},{j}) chain ({d},{e},{f})");
                    if !compatibility_check(ring, (d, e, f), i, j, r).map_err(fail(&ctx))? {
                        return Err(format!("{ctx}: not compatible"));
                    }
                }
            }
        }
        Ok(())
    })
}

/// At `t = 0` the cokernel of `c_{d→e}` has length `d/e - 1` when tier `d`
/// is not free, and `0` when it is.
pub fn cokernel_lengths(max_r: u32, prime: u64) -> SuiteReport {
    run("cokernel lengths", spin_cases(max_r), |&(r, l, i, j)| {
        let ring = ring(l, prime);
        for d in divisors(r) {
            let tier = tier_presentation(ring, i, j, r, d).map_err(fail(format!("r={r} l={l}")))?;
            for e in divisors(d) {
                let ctx = format!("r={r} l={l} top=({i},{j}) c_{d}->{e}");
                let c = power_map(ring, d, e, i, j, r).map_err(fail(&ctx))?;
                let expected = if tier.is_free() {
                    0
                } else {
                    (d / e - 1) as usize
                };
                let got = c.cokernel_length().map_err(fail(&ctx))?;
                if got != expected {
                    return Err(format!("{ctx}: length {got}, expected {expected}"));
                }
            }
        }
        Ok(())
    })
}

pub fn localization(max_l: u32, prime: u64) -> SuiteReport {
    run("localized agreement", pair_cases(max_l), |&(l, a, b)| {
        let ctx = format!("l={l} {a:?}⊗{b:?}");
        let map = product_map(ring(l, prime), a, b).map_err(fail(&ctx))?;
        for var in [LocalVar::X, LocalVar::Y] {
            if !localized_agreement(&map, var).map_err(fail(&ctx))? {
                return Err(format!("{ctx}: disagrees after inverting {var:?}"));
            }
        }
        Ok(())
    })
}

pub fn duality(max_l: u32, prime: u64) -> SuiteReport {
    let cases: Vec<(u32, (u32, u32))> = (1..=max_l)
        .flat_map(|l| valid_pairs(l).into_iter().map(move |p| (l, p)))
        .collect();
    run("duality", cases, |&(l, (i, j))| {
        let ctx = format!("l={l} E_{{{i},{j}}}");
        let pairing = dual_pairing(ring(l, prime), i, j).map_err(fail(&ctx))?;
        for var in [LocalVar::X, LocalVar::Y] {
            if !pairing_is_perfect(&pairing, var).map_err(fail(&ctx))? {
                return Err(format!(
                    "{ctx}: pairing not perfect after inverting {var:?}"
                ));
            }
        }
        Ok(())
    })
}

/// Field used for roots of unity at level `r`: `prime` when it works,
/// otherwise the default.
fn config_for(r: u32, prime: u64) -> Result<FieldConfig> {
    FieldConfig::new(prime, r).or_else(|_| FieldConfig::with_default_prime(r))
}

/// Order `e` when `t` is a unit or the branches are connected, `e²` at
/// `t = 0` with disconnected branches (non-free modules only).
pub fn automorphism_orders(max_r: u32, prime: u64) -> SuiteReport {
    let mut cases = Vec::new();
    for (r, l, i, j) in spin_cases(max_r) {
        for e in divisors(r) {
            cases.push((r, l, i, j, e));
        }
    }
    run("automorphism orders", cases, |&(r, l, i, j, e)| {
        let ctx = format!("r={r} l={l} E_{{{i},{j}}} e={e}");
        let config = config_for(r, prime).map_err(fail(&ctx))?;
        let e2 = (e * e) as usize;
        let free = i == 0;
        let branches = [
            (TMode::Generic, true, e as usize),
            (TMode::Generic, false, e as usize),
            (TMode::Specialized(1), true, e as usize),
            (TMode::Specialized(0), false, e as usize),
            (
                TMode::Specialized(0),
                true,
                if free { e as usize } else { e2 },
            ),
        ];
        for (mode, disconnected, expected) in branches {
            let g = automorphisms(&config, (i, j, l), e, mode, disconnected).map_err(fail(&ctx))?;
            if g.order() != expected {
                return Err(format!(
                    "{ctx} mode={mode} disconnected={disconnected}: order {}, expected {expected}",
                    g.order()
                ));
            }
        }
        Ok(())
    })
}

pub fn resolution(max_degree: u32, prime: u64) -> SuiteReport {
    let field = PrimeField::new(prime).expect("prime");
    run("resolution exactness", (0..=max_degree).collect(), |&d| {
        let rep = check_degree(field, d);
        if rep.exact() {
            Ok(())
        } else {
            Err(format!("degree {d}: {rep:?}"))
        }
    })
}

/// Product, symmetric-power and tier power-map images recomputed in the
/// upstairs monomial model.
pub fn oracle_agreement(max_l: u32, max_r: u32, prime: u64) -> SuiteReport {
    #[derive(Clone, Copy)]
    enum Case {
        Product(u32, (u32, u32), (u32, u32)),
        Sym(u32, (u32, u32), u32),
        Power(u32, u32, u32, u32),
    }
    let mut cases: Vec<Case> = pair_cases(max_l)
        .into_iter()
        .map(|(l, a, b)| Case::Product(l, a, b))
        .collect();
    for l in 1..=max_l.max(max_r) {
        for p in valid_pairs(l) {
            for n in 1..=max_r.max(1) {
                cases.push(Case::Sym(l, p, n));
            }
        }
    }
    for (r, l, i, j) in spin_cases(max_r) {
        if j == l - i || i == 0 {
            cases.push(Case::Power(r, l, i, j));
        }
    }
    run("oracle agreement", cases, |case| match *case {
        Case::Product(l, a, b) => {
            let ctx = format!("product l={l} {a:?}⊗{b:?}");
            let r = ring(l, prime);
            let map = product_map(r, a, b).map_err(fail(&ctx))?;
            let up = oracle_product_images(r, a, b).map_err(fail(&ctx))?;
            (map.images() == up)
                .then_some(())
                .ok_or(format!("{ctx}: oracle disagrees"))
        }
        Case::Sym(l, p, n) => {
            let ctx = format!("Sym^{n} l={l} {p:?}");
            let r = ring(l, prime);
            let map = sym_power_map(r, p, n).map_err(fail(&ctx))?;
            let up = oracle_sym_images(r, p, n).map_err(fail(&ctx))?;
            (map.images() == up)
                .then_some(())
                .ok_or(format!("{ctx}: oracle disagrees"))
        }
        Case::Power(r, l, i, j) => {
            let ring = ring(l, prime);
            for d in divisors(r) {
                for e in divisors(d) {
                    let ctx = format!("r={r} l={l} top=({i},{j}) c_{d}->{e}");
                    let map = power_map(ring, d, e, i, j, r).map_err(fail(&ctx))?;
                    let up = oracle_power_images(ring, d, e, i, j, r).map_err(fail(&ctx))?;
                    if map.images() != up {
                        return Err(format!("{ctx}: oracle disagrees"));
                    }
                }
            }
            Ok(())
        }
    })
}

/// Connected stable graphs with at most `max_vertices` vertices and
/// `max_edges` edges, vertex genus at most `max_genus`, and at most
/// `max_legs` legs placed on vertices in nondecreasing order.
pub fn small_stable_graphs(
    max_vertices: usize,
    max_edges: usize,
    max_genus: u32,
    max_legs: u32,
) -> Vec<DualGraph> {
    fn multisets(
        items: &[(usize, usize)],
        size: usize,
        start: usize,
        prefix: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if prefix.len() == size {
            out.push(prefix.clone());
            return;
        }
        for k in start..items.len() {
            prefix.push(items[k]);
            multisets(items, size, k, prefix, out);
            prefix.pop();
        }
    }
    let mut graphs = Vec::new();
    for nv in 1..=max_vertices {
        let slots: Vec<(usize, usize)> =
            (0..nv).flat_map(|a| (a..nv).map(move |b| (a, b))).collect();
        let mut edge_sets = Vec::new();
        for size in 0..=max_edges {
            multisets(&slots, size, 0, &mut Vec::new(), &mut edge_sets);
        }
        let genus_vectors: Vec<Vec<u32>> = (0..(max_genus + 1).pow(nv as u32))
            .map(|code| {
                (0..nv)
                    .map(|v| (code / (max_genus + 1).pow(v as u32)) % (max_genus + 1))
                    .collect()
            })
            .collect();
        let mut leg_layouts: Vec<Vec<usize>> = vec![vec![]];
        let mut frontier: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..max_legs {
            let next: Vec<Vec<usize>> = frontier
                .iter()
                .flat_map(|p| {
                    let lo = p.last().copied().unwrap_or(0);
                    (lo..nv).map(move |v| {
                        let mut q = p.clone();
                        q.push(v);
                        q
                    })
                })
                .collect();
            leg_layouts.extend(next.iter().cloned());
            frontier = next;
        }
        for edges in &edge_sets {
            for genera in &genus_vectors {
                for layout in &leg_layouts {
                    let vertices = genera
                        .iter()
                        .enumerate()
                        .map(|(n, &g)| Vertex {
                            id: format!("v{n}"),
                            genus: g,
                        })
                        .collect();
                    let legs = layout
                        .iter()
                        .enumerate()
                        .map(|(n, &v)| Leg {
                            vertex: v,
                            marking: n as u32 + 1,
                        })
                        .collect();
                    if let Ok(g) = DualGraph::from_indices(vertices, edges.clone(), legs) {
                        if g.is_stable() {
                            graphs.push(g);
                        }
                    }
                }
            }
        }
    }
    graphs
}

/// Independent filter: walk every balanced edge-twist vector and test each
/// vertex through its list of half-edges.
pub fn brute_force_assignments(graph: &DualGraph, r: u32, m: &[i64]) -> Vec<TwistAssignment> {
    let legs: Vec<u32> = m.iter().map(|x| x.rem_euclid(r as i64) as u32).collect();
    let ne = graph.edges().len();
    let mut half_edges: Vec<Vec<(usize, bool)>> = vec![Vec::new(); graph.vertices().len()];
    for (n, &(a, b)) in graph.edges().iter().enumerate() {
        half_edges[a].push((n, true));
        half_edges[b].push((n, false));
    }
    let mut out = Vec::new();
    let mut ks = vec![0u32; ne];
    loop {
        let pairs: Vec<(u32, u32)> = ks.iter().map(|&k| (k, (r - k) % r)).collect();
        let admissible = graph.vertices().iter().enumerate().all(|(v, vert)| {
            let mut total = 2 * vert.genus as i64 - 2;
            for leg in graph.legs().iter().filter(|l| l.vertex == v) {
                total += 1 - legs[leg.marking as usize - 1] as i64;
            }
            for &(n, first) in &half_edges[v] {
                total += 1 - if first { pairs[n].0 } else { pairs[n].1 } as i64;
            }
            total % r as i64 == 0
        });
        if admissible {
            out.push(TwistAssignment {
                leg_twists: legs.clone(),
                edge_twists: pairs,
            });
        }
        // odometer, last edge fastest
        let mut pos = ne;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            ks[pos] += 1;
            if ks[pos] < r {
                break;
            }
            ks[pos] = 0;
        }
    }
}

/// Enumeration equals the brute-force filter on every small stable graph
/// and type; produced assignments satisfy global divisibility and are
/// closed under edge reversal.
pub fn enumeration_oracle(max_r: u32) -> SuiteReport {
    let graphs = small_stable_graphs(3, 3, 1, 2);
    let cases: Vec<(usize, u32)> = (0..graphs.len())
        .flat_map(|g| (1..=max_r).map(move |r| (g, r)))
        .collect();
    run("enumeration oracle", cases, |&(gi, r)| {
        let graph = &graphs[gi];
        let n = graph.n() as usize;
        let g = graph.genus() as i64;
        for code in 0..(r as usize).pow(n as u32) {
            let m: Vec<i64> = (0..n)
                .map(|s| ((code / (r as usize).pow(s as u32)) % r as usize) as i64)
                .collect();
            let ctx = format!("graph #{gi} r={r} m={m:?}");
            let fast = enumerate_assignments(graph, r, &m).map_err(fail(&ctx))?;
            let slow = brute_force_assignments(graph, r, &m);
            if fast != slow {
                return Err(format!(
                    "{ctx}: {} vs {} assignments",
                    fast.len(),
                    slow.len()
                ));
            }
            let global = 2 * g - 2 + n as i64 - m.iter().sum::<i64>();
            if !fast.is_empty() && global.rem_euclid(r as i64) != 0 {
                return Err(format!("{ctx}: assignments without global divisibility"));
            }
            let reversed: BTreeSet<_> = fast.iter().map(|a| a.reversed()).collect();
            let on_reversed: BTreeSet<_> = enumerate_assignments(&graph.reversed(), r, &m)
                .map_err(fail(&ctx))?
                .into_iter()
                .collect();
            if reversed != on_reversed {
                return Err(format!("{ctx}: not closed under edge reversal"));
            }
        }
        Ok(())
    })
}

pub fn run_all(bounds: SuiteBounds) -> Vec<SuiteReport> {
    let p = bounds.prime;
    vec![
        well_definedness(bounds.max_l, p),
        commutativity(bounds.max_l_assoc, p),
        associativity(bounds.max_l_assoc, p),
        power_coherence(bounds.max_r, p),
        cokernel_lengths(bounds.max_r, p),
        localization(bounds.max_l, p),
        automorphism_orders(bounds.max_r, p),
        duality(bounds.max_l, p),
        resolution(bounds.max_degree, p),
        enumeration_oracle(bounds.max_r_graphs),
        oracle_agreement(bounds.max_l, bounds.max_r, p),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bounds_pass() {
        let reports = run_all(SuiteBounds::for_max_r(4));
        let failed: Vec<String> = reports
            .iter()
            .filter(|r| !r.passed())
            .map(|r| format!("{r}: {:?}", &r.failures[..r.failures.len().min(3)]))
            .collect();
        assert!(failed.is_empty(), "{failed:#?}");
        assert!(reports.iter().all(|r| r.cases > 0));
    }

    #[test]
    fn pair_lists() {
        assert_eq!(valid_pairs(3), vec![(0, 0), (1, 2), (2, 1)]);
        assert_eq!(top_pairs(4), vec![(0, 0), (1, 3), (3, 1)]);
    }

    #[test]
    fn graph_family_contains_loop_example() {
        let graphs = small_stable_graphs(1, 1, 0, 1);
        assert!(graphs.iter().any(|g| g.edges() == [(0, 0)] && g.n() == 1));
        assert!(graphs.iter().all(|g| g.is_stable()));
    }
}
