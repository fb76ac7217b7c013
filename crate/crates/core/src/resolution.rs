//! Exactness of `0 → O --(z,w)--> O ⊕ O --(dw,dz)--> Ω¹ → 0` over the node
//! `K[z, w]/(zw)`, checked degree by degree on monomial bases.
//!
//! `Ω¹` is presented as `(O·dz ⊕ O·dw) / (w·dz + z·dw)`. Gradings: `z, w`,
//! `dz, dw` and the middle generators have degree 1, the source generator
//! degree 2, so both maps are homogeneous.

use std::collections::BTreeMap;

use crate::field::PrimeField;
use crate::linalg;

/// Per-degree outcome of the check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: u32,
    pub composition_zero: bool,
    pub rank_first: usize,
    pub kernel_second: usize,
    pub source_dim: usize,
    pub omega_dim: usize,
    pub rank_second: usize,
}

impl DegreeReport {
    pub fn exact(&self) -> bool {
        self.composition_zero
            && self.rank_first == self.source_dim
            && self.kernel_second == self.rank_first
            && self.rank_second == self.omega_dim
    }
}

/// Monomials of `K[z,w]/(zw)`: `1`, `z^a`, `w^b`; encoded as `(a, b)` with
/// `a·b = 0`.
type Mono = (u32, u32);

fn ring_basis(deg: i64) -> Vec<Mono> {
    match deg {
        d if d < 0 => vec![],
        0 => vec![(0, 0)],
        d => vec![(d as u32, 0), (0, d as u32)],
    }
}

fn times(m: Mono, n: Mono) -> Option<Mono> {
    let (a, b) = (m.0 + n.0, m.1 + n.1);
    if a > 0 && b > 0 {
        None
    } else {
        Some((a, b))
    }
}

const Z: Mono = (1, 0);
const W: Mono = (0, 1);

/// Vector in `O·dz ⊕ O·dw` (or `O·e1 ⊕ O·e2`): `(slot, monomial) → coeff`.
type Vector = BTreeMap<(u8, Mono), u64>;

fn add_term(v: &mut Vector, field: PrimeField, key: (u8, Mono), c: u64) {
    let e = v.entry(key).or_insert(0);
    *e = field.add(*e, c);
    if *e == 0 {
        v.remove(&key);
    }
}

fn to_row(v: &Vector, index: &BTreeMap<(u8, Mono), usize>) -> Vec<u64> {
    let mut row = vec![0; index.len()];
    for (k, c) in v {
        row[index[k]] = *c;
    }
    row
}

/// Checks one degree.
pub fn check_degree(field: PrimeField, deg: u32) -> DegreeReport {
    let d = deg as i64;
    let source = ring_basis(d - 2);
    let middle_monos = ring_basis(d - 1);

    // forms: slot 0 = dz, slot 1 = dw
    let free_keys: Vec<(u8, Mono)> = [0u8, 1]
        .iter()
        .flat_map(|&s| middle_monos.iter().map(move |m| (s, *m)))
        .collect();
    let free_index: BTreeMap<(u8, Mono), usize> =
        free_keys.iter().enumerate().map(|(n, k)| (*k, n)).collect();
    // middle: slot 0 = e1 ↦ dw, slot 1 = e2 ↦ dz
    let middle_index = free_index.clone();

    // relations w·dz + z·dw times monomials of degree d - 2
    let relations: Vec<Vector> = source
        .iter()
        .map(|m| {
            let mut v = Vector::new();
            if let Some(a) = times(*m, W) {
                add_term(&mut v, field, (0, a), 1);
            }
            if let Some(b) = times(*m, Z) {
                add_term(&mut v, field, (1, b), 1);
            }
            v
        })
        .collect();

    let first: Vec<Vector> = source
        .iter()
        .map(|m| {
            let mut v = Vector::new();
            if let Some(a) = times(*m, Z) {
                add_term(&mut v, field, (0, a), 1);
            }
            if let Some(b) = times(*m, W) {
                add_term(&mut v, field, (1, b), 1);
            }
            v
        })
        .collect();

    let second = |v: &Vector| -> Vector {
        let mut out = Vector::new();
        for ((slot, m), c) in v {
            let form_slot = if *slot == 0 { 1 } else { 0 };
            add_term(&mut out, field, (form_slot, *m), *c);
        }
        out
    };

    let rel_rows: Vec<Vec<u64>> = relations.iter().map(|v| to_row(v, &free_index)).collect();
    let rel_rank = linalg::rank(field, rel_rows.clone());
    let omega_dim = free_keys.len() - rel_rank;

    let in_relation_span = |v: &Vector| {
        let mut rows = rel_rows.clone();
        rows.push(to_row(v, &free_index));
        linalg::rank(field, rows) == rel_rank
    };
    let composition_zero = first.iter().all(|v| in_relation_span(&second(v)));

    let rank_first = linalg::rank(
        field,
        first.iter().map(|v| to_row(v, &middle_index)).collect(),
    );

    // rank of d2 modulo the relations
    let mut rows = rel_rows.clone();
    for key in middle_index.keys() {
        let mut v = Vector::new();
        v.insert(*key, 1);
        rows.push(to_row(&second(&v), &free_index));
    }
    let rank_second = linalg::rank(field, rows) - rel_rank;
    let kernel_second = middle_index.len() - rank_second;

    DegreeReport {
        degree: deg,
        composition_zero,
        rank_first,
        kernel_second,
        source_dim: source.len(),
        omega_dim,
        rank_second,
    }
}

/// `true` iff the sequence is exact in every degree `≤ max_degree`.
pub fn resolution_exact_check(field: PrimeField, max_degree: u32) -> bool {
    (0..=max_degree).all(|d| check_degree(field, d).exact())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    #[test]
    fn degree_two_composition() {
        let rep = check_degree(f(), 2);
        assert!(rep.composition_zero);
        assert_eq!(rep.rank_first, 1);
        assert_eq!(rep.kernel_second, 1);
        assert_eq!(rep.omega_dim, 3);
    }

    #[test]
    fn degree_three() {
        let rep = check_degree(f(), 3);
        assert_eq!(rep.source_dim, 2);
        assert_eq!(rep.rank_first, 2);
        assert_eq!(rep.omega_dim, 2);
        assert!(rep.exact());
    }

    #[test]
    fn exact_small_degrees() {
        assert!(resolution_exact_check(f(), 0));
        assert!(resolution_exact_check(f(), 4));
    }
}
