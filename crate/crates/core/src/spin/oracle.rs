//! Upstairs monomial model `K[t][z, w, S^{±1}]/(zw - t)` with a `μ_l`-action
//! of characters `z ↦ +1`, `w ↦ -1`, `S ↦ b`.
//!
//! Downstairs coordinates are `x = z^l`, `y = w^l`. A presentation `E_{i,j}`
//! lifted at `S`-degree `q` has generators `ξ1 = z^i S^q` and `ξ2 = w^j S^q`;
//! products and powers are computed upstairs and pushed back down, which
//! recomputes every product and power image from scratch.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::module::{ModuleElement, ModulePresentation};
use crate::ring::{write_term, NodeRing, RingElement};
use crate::spin::power::tier_presentation;
use crate::spin::twist::check_top;

/// Monomial `t^t z^z w^w S^s` with `min(z, w) = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpMonomial {
    pub t: u32,
    pub z: u32,
    pub w: u32,
    pub s: i64,
}

impl UpMonomial {
    fn normalized(t: u32, z: u32, w: u32, s: i64) -> Self {
        let m = z.min(w);
        UpMonomial {
            t: t + m,
            z: z - m,
            w: w - m,
            s,
        }
    }

    fn times(self, other: UpMonomial) -> Self {
        Self::normalized(
            self.t + other.t,
            self.z + other.z,
            self.w + other.w,
            self.s + other.s,
        )
    }
}

/// The character data of the model: `μ_l` acting with `S ↦ b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleModel {
    l: u32,
    b: u32,
    field: PrimeField,
}

impl OracleModel {
    pub fn new(l: u32, b: i64, field: PrimeField) -> Result<Self> {
        if l == 0 {
            return Err(Error::Oracle("node index must be positive".into()));
        }
        Ok(OracleModel {
            l,
            b: b.rem_euclid(l as i64) as u32,
            field,
        })
    }

    /// Model used for standalone products: `S` has character `-1`, and
    /// `E_{i,j}` lifts at `S`-degree `i`.
    pub fn standalone(l: u32, field: PrimeField) -> Result<Self> {
        Self::new(l, -1, field)
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Character of a monomial in `Z/l`.
    pub fn character(&self, m: &UpMonomial) -> u32 {
        let l = self.l as i64;
        (m.z as i64 - m.w as i64 + self.b as i64 * m.s).rem_euclid(l) as u32
    }

    pub fn zero(&self) -> UpstairsElement {
        UpstairsElement {
            model: *self,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(&self, c: i64, t: u32, z: u32, w: u32, s: i64) -> UpstairsElement {
        let mut e = self.zero();
        e.push(UpMonomial::normalized(t, z, w, s), self.field.reduce(c));
        e
    }

    /// Image of a downstairs ring element under `x ↦ z^l`, `y ↦ w^l`.
    pub fn lift_ring(&self, a: &RingElement) -> Result<UpstairsElement> {
        self.check_ring(&a.ring())?;
        let mut e = self.zero();
        for (m, c) in a.terms() {
            e.push(
                UpMonomial::normalized(m.t, m.x * self.l, m.y * self.l, 0),
                *c,
            );
        }
        Ok(e)
    }

    /// Generators `(z^i S^q, w^j S^q)` of `pres` at `S`-degree `q`; both must
    /// be invariant.
    pub fn lift_generators(
        &self,
        pres: &ModulePresentation,
        q: i64,
    ) -> Result<[UpstairsElement; 2]> {
        self.check_ring(&pres.ring())?;
        let gens = [
            self.monomial(1, 0, pres.i(), 0, q),
            self.monomial(1, 0, 0, pres.j(), q),
        ];
        for g in &gens {
            if !g.is_invariant() {
                return Err(Error::Oracle(format!(
                    "generator {g} of {pres} at S-degree {q} has nontrivial character"
                )));
            }
        }
        Ok(gens)
    }

    /// Lift of `f·ξ1 + g·ξ2`.
    pub fn lift(&self, m: &ModuleElement, q: i64) -> Result<UpstairsElement> {
        let [g1, g2] = self.lift_generators(&m.presentation(), q)?;
        Ok(&(&self.lift_ring(m.f())? * &g1) + &(&self.lift_ring(m.g())? * &g2))
    }

    /// Re-expresses an invariant element of `S`-degree `q` in the target
    /// presentation: `z^{i+la} ↦ x^a ξ1`, `w^{j+lb} ↦ y^b ξ2`.
    pub fn descend(
        &self,
        e: &UpstairsElement,
        target: &ModulePresentation,
        q: i64,
    ) -> Result<ModuleElement> {
        self.check_ring(&target.ring())?;
        self.lift_generators(target, q)?;
        let ring = target.ring();
        let l = self.l;
        let (i, j) = (target.i(), target.j());
        let mut f = ring.zero();
        let mut g = ring.zero();
        for (m, c) in &e.terms {
            if m.s != q {
                return Err(Error::Oracle(format!(
                    "term of S-degree {} where {q} was expected",
                    m.s
                )));
            }
            if self.character(m) != 0 {
                return Err(Error::Oracle(format!(
                    "term {} is not invariant",
                    Shown(*m, *c)
                )));
            }
            if m.w == 0 && m.z >= i && (m.z - i) % l == 0 {
                f = &f + &ring.monomial(*c, m.t, (m.z - i) / l, 0);
            } else if m.z == 0 && m.w >= j && (m.w - j) % l == 0 {
                g = &g + &ring.monomial(*c, m.t, 0, (m.w - j) / l);
            } else {
                return Err(Error::Oracle(format!(
                    "term {} does not lie in the image of {target}",
                    Shown(*m, *c)
                )));
            }
        }
        target.element(f, g)
    }

    fn check_ring(&self, ring: &NodeRing) -> Result<()> {
        if ring.l() != self.l || ring.field() != self.field {
            return Err(Error::RingMismatch {
                left: format!("oracle(l={}, {})", self.l, self.field),
                right: ring.to_string(),
            });
        }
        Ok(())
    }

    /// Parses a polynomial in `t, z, w, S` such as `2*z^3*S^-1 - t*w`.
    pub fn parse(&self, text: &str) -> Result<UpstairsElement> {
        parse_expression(self, text)
    }
}

/// Element of the upstairs algebra in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpstairsElement {
    model: OracleModel,
    terms: BTreeMap<UpMonomial, u64>,
}

impl UpstairsElement {
    fn push(&mut self, m: UpMonomial, c: u64) {
        let f = self.model.field;
        let e = self.terms.entry(m).or_insert(0);
        *e = f.add(*e, c);
        if *e == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn model(&self) -> OracleModel {
        self.model
    }

    pub fn terms(&self) -> impl Iterator<Item = (&UpMonomial, &u64)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_invariant(&self) -> bool {
        self.terms.keys().all(|m| self.model.character(m) == 0)
    }

    /// The sum of the invariant terms.
    pub fn invariant_part(&self) -> UpstairsElement {
        UpstairsElement {
            model: self.model,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| self.model.character(m) == 0)
                .map(|(m, c)| (*m, *c))
                .collect(),
        }
    }

    pub fn scale(&self, c: u64) -> UpstairsElement {
        let mut e = self.model.zero();
        for (m, d) in &self.terms {
            e.push(*m, self.model.field.mul(*d, c));
        }
        e
    }
}

impl Add for &UpstairsElement {
    type Output = UpstairsElement;

    fn add(self, rhs: &UpstairsElement) -> UpstairsElement {
        assert_eq!(self.model, rhs.model, "oracle model mismatch");
        let mut e = self.clone();
        for (m, c) in &rhs.terms {
            e.push(*m, *c);
        }
        e
    }
}

impl Mul for &UpstairsElement {
    type Output = UpstairsElement;

    fn mul(self, rhs: &UpstairsElement) -> UpstairsElement {
        assert_eq!(self.model, rhs.model, "oracle model mismatch");
        let f = self.model.field;
        let mut e = self.model.zero();
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                e.push(m.times(*n), f.mul(*c, *d));
            }
        }
        e
    }
}

/// Product in the upstairs algebra.
pub fn oracle_product(a: &UpstairsElement, b: &UpstairsElement) -> UpstairsElement {
    a * b
}

struct Shown(UpMonomial, u64);

impl fmt::Display for Shown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.0;
        write_term(
            f,
            self.1,
            &[
                ("t", m.t as i64),
                ("z", m.z as i64),
                ("w", m.w as i64),
                ("S", m.s),
            ],
        )
    }
}

impl fmt::Display for UpstairsElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", Shown(*m, *c))?;
        }
        Ok(())
    }
}

/// Product images `ζ_a ⊗ ξ_b` recomputed upstairs, in generator order.
pub fn oracle_product_images(
    ring: NodeRing,
    left: (u32, u32),
    right: (u32, u32),
) -> Result<Vec<ModuleElement>> {
    let model = OracleModel::standalone(ring.l(), ring.field())?;
    let l = ring.l();
    let a = ModulePresentation::new(ring, left.0 as i64, left.1 as i64)?;
    let b = ModulePresentation::new(ring, right.0 as i64, right.1 as i64)?;
    let target = ModulePresentation::new(
        ring,
        ((left.0 + right.0) % l) as i64,
        ((left.1 + right.1) % l) as i64,
    )?;
    let (qa, qb) = (a.i() as i64, b.i() as i64);
    let za = model.lift_generators(&a, qa)?;
    let xb = model.lift_generators(&b, qb)?;
    let mut out = Vec::with_capacity(4);
    for z in &za {
        for x in &xb {
            let up = oracle_product(z, x);
            out.push(model.descend(&up.invariant_part(), &target, qa + qb)?);
        }
    }
    Ok(out)
}

/// Images of `ξ1^{n-k} ξ2^k` for `Sym^n E_{i,j} → E_{ni mod l, nj mod l}`.
pub fn oracle_sym_images(ring: NodeRing, (i, j): (u32, u32), n: u32) -> Result<Vec<ModuleElement>> {
    let model = OracleModel::standalone(ring.l(), ring.field())?;
    let l = ring.l();
    let source = ModulePresentation::new(ring, i as i64, j as i64)?;
    let target = ModulePresentation::new(ring, ((n * i) % l) as i64, ((n * j) % l) as i64)?;
    monomial_images(&model, &source, i as i64, &target, n)
}

/// Power-map images for tiers of a spin structure: tier `d` lifts at
/// `S`-degree `r/d` with `S` of character `-i_r`.
pub fn oracle_power_images(
    ring: NodeRing,
    d: u32,
    e: u32,
    i_r: u32,
    j_r: u32,
    r: u32,
) -> Result<Vec<ModuleElement>> {
    check_top(i_r, j_r, ring.l(), r)?;
    if d == 0 || r % d != 0 {
        return Err(Error::NotDivisor(d, r));
    }
    if e == 0 || d % e != 0 {
        return Err(Error::NotDivisor(e, d));
    }
    let model = OracleModel::new(ring.l(), -(i_r as i64), ring.field())?;
    let source = tier_presentation(ring, i_r, j_r, r, d)?;
    let target = tier_presentation(ring, i_r, j_r, r, e)?;
    monomial_images(&model, &source, (r / d) as i64, &target, d / e)
}

fn monomial_images(
    model: &OracleModel,
    source: &ModulePresentation,
    q: i64,
    target: &ModulePresentation,
    n: u32,
) -> Result<Vec<ModuleElement>> {
    let [g1, g2] = model.lift_generators(source, q)?;
    (0..=n)
        .map(|k| {
            let mut up = model.monomial(1, 0, 0, 0, 0);
            for s in 0..n {
                up = oracle_product(&up, if s < n - k { &g1 } else { &g2 });
            }
            model.descend(&up.invariant_part(), target, q * n as i64)
        })
        .collect()
}

fn parse_expression(model: &OracleModel, text: &str) -> Result<UpstairsElement> {
    let err = |msg: &str| Error::Oracle(format!("cannot parse `{text}`: {msg}"));
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    // split into signed terms; a sign right after '^' or '(' belongs to an exponent
    let mut terms: Vec<(i64, String)> = Vec::new();
    let mut sign = 1;
    let mut current = String::new();
    let mut prev = None;
    for c in compact.chars() {
        let is_operator = (c == '+' || c == '-') && !matches!(prev, Some('^') | Some('('));
        if is_operator {
            if !current.is_empty() {
                terms.push((sign, std::mem::take(&mut current)));
                sign = 1;
            } else if matches!(prev, Some('+') | Some('-')) {
                return Err(err("repeated operator"));
            }
            if c == '-' {
                sign = -sign;
            }
        } else {
            current.push(c);
        }
        prev = Some(c);
    }
    if current.is_empty() {
        return Err(err(if compact.is_empty() {
            "empty expression"
        } else {
            "trailing operator"
        }));
    }
    terms.push((sign, current));
    let mut out = model.zero();
    for (sign, term) in terms {
        out = &out + &parse_term(model, &term, sign).map_err(|m| err(&m))?;
    }
    Ok(out)
}

fn parse_term(
    model: &OracleModel,
    term: &str,
    sign: i64,
) -> std::result::Result<UpstairsElement, String> {
    let mut coeff: i64 = sign;
    let (mut t, mut z, mut w, mut s) = (0i64, 0i64, 0i64, 0i64);
    for factor in term.split('*') {
        if factor.is_empty() {
            return Err("empty factor".into());
        }
        if let Ok(c) = factor.parse::<i64>() {
            coeff = coeff.checked_mul(c).ok_or("coefficient overflow")?;
            continue;
        }
        let (var, exp) = match factor.split_once('^') {
            Some((v, e)) => {
                let e = e.trim_start_matches('(').trim_end_matches(')');
                (
                    v,
                    e.parse::<i64>()
                        .map_err(|_| format!("bad exponent `{e}`"))?,
                )
            }
            None => (factor, 1),
        };
        match var {
            "t" => t += exp,
            "z" => z += exp,
            "w" => w += exp,
            "S" | "s" => s += exp,
            other => return Err(format!("unknown symbol `{other}`")),
        }
    }
    for (name, e) in [('t', t), ('z', z), ('w', w)] {
        if e < 0 {
            return Err(format!("negative exponent {e} on {name}"));
        }
    }
    Ok(model.monomial(coeff, t as u32, z as u32, w as u32, s))
}
