//! The node ring `A_l = K[t][x, y] / (xy - t^l)` over a prime field.
//!
//! Elements are kept in normal form: the rewrite `x·y → t^l` is applied until
//! no monomial carries both `x` and `y`, so every monomial is `t^c`,
//! `t^c x^a` or `t^c y^b`. Two elements are equal iff their term maps agree.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// How the base parameter `t` is treated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TMode {
    /// `t` is a free polynomial variable.
    Generic,
    /// `t ↦ c`; with `c = 0` the relation degenerates to `xy = 0`.
    Specialized(u64),
}

impl fmt::Display for TMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TMode::Generic => write!(f, "t generic"),
            TMode::Specialized(c) => write!(f, "t={c}"),
        }
    }
}

/// The ring `A_l` with a fixed coefficient field and `t`-mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NodeRing {
    l: u32,
    field: PrimeField,
    mode: TMode,
}

impl NodeRing {
    pub fn new(l: u32, field: PrimeField, mode: TMode) -> Result<Self> {
        if l == 0 {
            return Err(Error::InvalidArgument(
                "node index l must be positive".into(),
            ));
        }
        let mode = match mode {
            TMode::Generic => TMode::Generic,
            TMode::Specialized(c) => TMode::Specialized(c % field.modulus()),
        };
        Ok(NodeRing { l, field, mode })
    }

    pub fn generic(l: u32, field: PrimeField) -> Result<Self> {
        NodeRing::new(l, field, TMode::Generic)
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn mode(&self) -> TMode {
        self.mode
    }

    /// Same ring with a different `t`-mode.
    pub fn with_mode(&self, mode: TMode) -> NodeRing {
        NodeRing::new(self.l, self.field, mode).expect("l already validated")
    }

    pub fn zero(&self) -> RingElement {
        RingElement {
            ring: *self,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> RingElement {
        self.constant(1)
    }

    pub fn constant(&self, c: u64) -> RingElement {
        self.monomial(c, 0, 0, 0)
    }

    pub fn t(&self) -> RingElement {
        self.monomial(1, 1, 0, 0)
    }

    pub fn x(&self) -> RingElement {
        self.monomial(1, 0, 1, 0)
    }

    pub fn y(&self) -> RingElement {
        self.monomial(1, 0, 0, 1)
    }

    /// `t^e`, honouring the mode (so `t^0 = 1` even at `t = 0`).
    pub fn t_pow(&self, e: u32) -> RingElement {
        self.monomial(1, e, 0, 0)
    }

    /// `c · t^t x^x y^y`, normalized.
    pub fn monomial(&self, c: u64, t: u32, x: u32, y: u32) -> RingElement {
        let mut out = self.zero();
        out.push_term(c % self.field.modulus(), t, x, y);
        out
    }

    /// Canonicalizes a formal polynomial in `t, x, y`.
    pub fn normalize(&self, raw: &RawPoly) -> Result<RingElement> {
        let mut out = self.zero();
        for term in &raw.terms {
            let [t, x, y] = term.exponents()?;
            out.push_term(self.field.reduce(term.coeff), t, x, y);
        }
        Ok(out)
    }

    fn same(&self, other: &NodeRing) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for NodeRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A_{} over {} ({})", self.l, self.field, self.mode)
    }
}

/// A normal-form monomial. Ordered by `t`, then `x`, then `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub t: u32,
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    /// Total `(x, y)`-degree.
    pub fn degree(&self) -> u32 {
        self.x + self.y
    }
}

/// One term of a formal (unreduced) polynomial. Exponents are signed so that
/// invalid input can be reported rather than silently wrapped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RawTerm {
    pub coeff: i64,
    pub t: i64,
    pub x: i64,
    pub y: i64,
}

impl RawTerm {
    fn exponents(&self) -> Result<[u32; 3]> {
        let mut out = [0u32; 3];
        for (slot, (var, e)) in out
            .iter_mut()
            .zip([('t', self.t), ('x', self.x), ('y', self.y)])
        {
            if e < 0 {
                return Err(Error::NegativeExponent { var, exponent: e });
            }
            *slot = u32::try_from(e).map_err(|_| {
                Error::InvalidArgument(format!("exponent {e} on {var} is too large"))
            })?;
        }
        Ok(out)
    }
}

/// A formal polynomial in `t, x, y` before any rewriting.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawPoly {
    pub terms: Vec<RawTerm>,
}

impl RawPoly {
    pub fn new() -> Self {
        RawPoly::default()
    }

    pub fn term(mut self, coeff: i64, t: i64, x: i64, y: i64) -> Self {
        self.terms.push(RawTerm { coeff, t, x, y });
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Mul,
}

/// An element of `A_l` in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    ring: NodeRing,
    terms: BTreeMap<Monomial, u64>,
}

impl RingElement {
    pub fn ring(&self) -> NodeRing {
        self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &u64)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> u64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<(Monomial, u64)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, *c))
    }

    pub fn contains_x(&self) -> bool {
        self.terms.keys().any(|m| m.x > 0)
    }

    pub fn contains_y(&self) -> bool {
        self.terms.keys().any(|m| m.y > 0)
    }

    /// Largest `(x, y)`-degree among the terms; `None` for zero.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    fn push_term(&mut self, c: u64, t: u32, x: u32, y: u32) {
        if c == 0 {
            return;
        }
        let f = self.ring.field;
        let m = x.min(y);
        let (mut t, x, y) = (t + self.ring.l * m, x - m, y - m);
        let mut c = c;
        if let TMode::Specialized(v) = self.ring.mode {
            c = f.mul(c, f.pow(v, t as u64));
            t = 0;
            if c == 0 {
                return;
            }
        }
        let mono = Monomial { t, x, y };
        let entry = self.terms.entry(mono).or_insert(0);
        *entry = f.add(*entry, c);
        if *entry == 0 {
            self.terms.remove(&mono);
        }
    }

    pub fn try_add(&self, other: &RingElement) -> Result<RingElement> {
        self.ring.same(&other.ring)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.push_term(*c, m.t, m.x, m.y);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &RingElement) -> Result<RingElement> {
        self.ring.same(&other.ring)?;
        let f = self.ring.field;
        let mut out = self.ring.zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.push_term(f.mul(*ca, *cb), a.t + b.t, a.x + b.x, a.y + b.y);
            }
        }
        Ok(out)
    }

    pub fn arith(&self, other: &RingElement, kind: ArithKind) -> Result<RingElement> {
        match kind {
            ArithKind::Add => self.try_add(other),
            ArithKind::Mul => self.try_mul(other),
        }
    }

    pub fn scale(&self, c: u64) -> RingElement {
        let mut out = self.ring.zero();
        let c = c % self.ring.field.modulus();
        for (m, a) in &self.terms {
            out.push_term(self.ring.field.mul(*a, c), m.t, m.x, m.y);
        }
        out
    }

    pub fn pow(&self, n: u32) -> RingElement {
        (0..n).fold(self.ring.one(), |acc, _| &acc * self)
    }

    /// Substitutes `t` according to `mode` and re-normalizes into the ring
    /// carrying that mode. `Generic` is the identity.
    pub fn specialize(&self, mode: TMode) -> RingElement {
        if mode == TMode::Generic {
            return self.clone();
        }
        let ring = self.ring.with_mode(mode);
        let mut out = ring.zero();
        for (m, c) in &self.terms {
            out.push_term(*c, m.t, m.x, m.y);
        }
        out
    }

    /// Image in `A[x^{-1}] ≅ K[t][x, x^{-1}]` (or the `y` analogue).
    pub fn localize(&self, at: LocalVar) -> LaurentPoly {
        let l = self.ring.l;
        let mut out = LaurentPoly::zero(self.ring, at);
        for (m, c) in &self.terms {
            let (kept, inverted) = match at {
                LocalVar::X => (m.x, m.y),
                LocalVar::Y => (m.y, m.x),
            };
            // the other variable becomes t^l · (kept)^{-1}
            out.push_term(*c, m.t + l * inverted, kept as i64 - inverted as i64);
        }
        out
    }
}

impl Add for &RingElement {
    type Output = RingElement;

    /// Panics if the operands live in different rings; see [`RingElement::try_add`].
    fn add(self, rhs: &RingElement) -> RingElement {
        self.try_add(rhs).expect("ring mismatch in addition")
    }
}

impl Sub for &RingElement {
    type Output = RingElement;

    fn sub(self, rhs: &RingElement) -> RingElement {
        self + &(-rhs)
    }
}

impl Mul for &RingElement {
    type Output = RingElement;

    /// Panics if the operands live in different rings; see [`RingElement::try_mul`].
    fn mul(self, rhs: &RingElement) -> RingElement {
        self.try_mul(rhs).expect("ring mismatch in multiplication")
    }
}

impl Neg for &RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        self.scale(self.ring.field.modulus() - 1)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write_term(
                f,
                *c,
                &[("t", m.t as i64), ("x", m.x as i64), ("y", m.y as i64)],
            )?;
        }
        Ok(())
    }
}

pub(crate) fn write_term(f: &mut fmt::Formatter<'_>, c: u64, vars: &[(&str, i64)]) -> fmt::Result {
    let factors: Vec<String> = vars
        .iter()
        .filter(|(_, e)| *e != 0)
        .map(|(v, e)| {
            if *e == 1 {
                v.to_string()
            } else {
                format!("{v}^{e}")
            }
        })
        .collect();
    match (c, factors.is_empty()) {
        (_, true) => write!(f, "{c}"),
        (1, false) => write!(f, "{}", factors.join("*")),
        _ => write!(f, "{c}*{}", factors.join("*")),
    }
}

/// Which variable is inverted by [`RingElement::localize`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LocalVar {
    X,
    Y,
}

/// An element of `K[t][v, v^{-1}]` where `v` is the inverted variable.
///
/// Laurent polynomials have unique term representations, so equality of
/// localized elements is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    ring: NodeRing,
    at: LocalVar,
    /// `(t-exponent, v-exponent) → coefficient`
    terms: BTreeMap<(u32, i64), u64>,
}

impl LaurentPoly {
    pub fn zero(ring: NodeRing, at: LocalVar) -> Self {
        LaurentPoly {
            ring,
            at,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(ring: NodeRing, at: LocalVar, c: u64, t: u32, v: i64) -> Self {
        let mut out = LaurentPoly::zero(ring, at);
        out.push_term(c % ring.field.modulus(), t, v);
        out
    }

    pub fn at(&self) -> LocalVar {
        self.at
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, i64), &u64)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Units of `K[t][v, v^{-1}]` are exactly the nonzero monomials `c·v^k`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().all(|(t, _)| *t == 0)
    }

    fn push_term(&mut self, c: u64, t: u32, v: i64) {
        if c == 0 {
            return;
        }
        let f = self.ring.field;
        let (mut c, mut t) = (c, t);
        if let TMode::Specialized(val) = self.ring.mode {
            c = f.mul(c, f.pow(val, t as u64));
            t = 0;
            if c == 0 {
                return;
            }
        }
        let e = self.terms.entry((t, v)).or_insert(0);
        *e = f.add(*e, c);
        if *e == 0 {
            self.terms.remove(&(t, v));
        }
    }

    fn check(&self, other: &LaurentPoly) {
        assert!(
            self.ring == other.ring && self.at == other.at,
            "Laurent ring mismatch"
        );
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check(rhs);
        let mut out = self.clone();
        for ((t, v), c) in &rhs.terms {
            out.push_term(*c, *t, *v);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check(rhs);
        let f = self.ring.field;
        let mut out = LaurentPoly::zero(self.ring, self.at);
        for ((ta, va), ca) in &self.terms {
            for ((tb, vb), cb) in &rhs.terms {
                out.push_term(f.mul(*ca, *cb), ta + tb, va + vb);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let v = match self.at {
            LocalVar::X => "x",
            LocalVar::Y => "y",
        };
        for (n, ((t, e), c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write_term(f, *c, &[("t", *t as i64), (v, *e)])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(l: u32, p: u64) -> NodeRing {
        NodeRing::generic(l, PrimeField::new(p).unwrap()).unwrap()
    }

    #[test]
    fn normalize_rewrites_xy() {
        let a = ring(2, 5);
        let xy = a.normalize(&RawPoly::new().term(1, 0, 1, 1)).unwrap();
        assert_eq!(xy, a.t_pow(2));

        let b = ring(3, 7);
        let xyy = b.normalize(&RawPoly::new().term(1, 0, 1, 2)).unwrap();
        assert_eq!(xyy, b.monomial(1, 3, 0, 1));

        assert!(a.normalize(&RawPoly::new()).unwrap().is_zero());
    }

    #[test]
    fn normalize_rejects_negative_exponents() {
        let a = ring(2, 5);
        let err = a.normalize(&RawPoly::new().term(1, 0, -1, 0)).unwrap_err();
        assert_eq!(
            err,
            Error::NegativeExponent {
                var: 'x',
                exponent: -1
            }
        );
    }

    #[test]
    fn normalize_is_idempotent() {
        let a = ring(3, 7);
        let raw = RawPoly::new()
            .term(3, 1, 4, 2)
            .term(-2, 0, 0, 5)
            .term(9, 2, 1, 1);
        let once = a.normalize(&raw).unwrap();
        let again: RawPoly = once.terms().fold(RawPoly::new(), |acc, (m, c)| {
            acc.term(*c as i64, m.t as i64, m.x as i64, m.y as i64)
        });
        assert_eq!(a.normalize(&again).unwrap(), once);
    }

    #[test]
    fn arith_examples() {
        let a = ring(2, 5);
        let s = &a.x() + &a.y();
        let sq = &s * &s;
        let expected =
            &(&a.monomial(1, 0, 2, 0) + &a.monomial(2, 2, 0, 0)) + &a.monomial(1, 0, 0, 2);
        assert_eq!(sq, expected);
        assert_eq!(&sq * &a.one(), sq);

        let b = ring(1, 5);
        assert_eq!(&b.x() * &b.y(), b.t());
    }

    #[test]
    fn arith_rejects_mismatch() {
        let a = ring(2, 5);
        let b = ring(3, 5);
        let c = ring(2, 7);
        assert!(matches!(
            a.x().try_mul(&b.x()),
            Err(Error::RingMismatch { .. })
        ));
        assert!(matches!(
            a.x().arith(&c.x(), ArithKind::Add),
            Err(Error::RingMismatch { .. })
        ));
    }

    #[test]
    fn specialize_examples() {
        let a = ring(2, 5);
        let e = &a.t_pow(2) + &a.x();
        assert_eq!(
            e.specialize(TMode::Specialized(0)),
            a.with_mode(TMode::Specialized(0)).x()
        );
        let xy = &a.x() * &a.y();
        assert!(xy.specialize(TMode::Specialized(0)).is_zero());
        let at3 = a.with_mode(TMode::Specialized(3));
        assert_eq!(xy.specialize(TMode::Specialized(3)), at3.constant(4));
        assert_eq!(e.specialize(TMode::Generic), e);
    }

    #[test]
    fn localize_examples() {
        let a = ring(2, 5);
        assert_eq!(
            a.y().localize(LocalVar::X),
            LaurentPoly::monomial(a, LocalVar::X, 1, 2, -1)
        );
        assert_eq!(
            (&a.x() * &a.y()).localize(LocalVar::X),
            LaurentPoly::monomial(a, LocalVar::X, 1, 2, 0)
        );
        let b = ring(3, 7);
        assert_eq!(
            b.y().pow(2).localize(LocalVar::X),
            LaurentPoly::monomial(b, LocalVar::X, 1, 6, -2)
        );
    }

    #[test]
    fn display() {
        let a = ring(2, 5);
        let e = &(&a.monomial(3, 1, 0, 2) + &a.x()) + &a.constant(2);
        assert_eq!(e.to_string(), "2 + x + 3*t*y^2");
        assert_eq!(a.zero().to_string(), "0");
    }
}
