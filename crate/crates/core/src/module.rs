//! The rank-one modules `E_{i,j}` over `A_l` and their elements.
//!
//! `E_{i,j} = <ξ1, ξ2 | t^j ξ1 = x ξ2, t^i ξ2 = y ξ1>` for `i + j = l`,
//! and `E_{0,0} = <ξ1, ξ2 | ξ1 = ξ2>` (free of rank one).
//!
//! An element is stored as a pair `(f, g)` meaning `f·ξ1 + g·ξ2`. The rewrite
//! rules `x·ξ2 → t^j ξ1` and `y·ξ1 → t^i ξ2` are applied until `f` has no
//! `y` and `g` has no `x`; for the free module everything is collected on
//! `ξ1` and `g = 0`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::ring::{LaurentPoly, LocalVar, NodeRing, RingElement, TMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Standard,
    Free,
}

/// Presentation data of `E_{i,j}` over a fixed node ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModulePresentation {
    ring: NodeRing,
    i: u32,
    j: u32,
}

impl ModulePresentation {
    /// Validates `(i, j)` against the ring's `l`.
    pub fn new(ring: NodeRing, i: i64, j: i64) -> Result<Self> {
        let l = ring.l() as i64;
        let bad = || Error::InvalidModule { i, j, l };
        let ok = (i == 0 && j == 0) || (i > 0 && j > 0 && i + j == l);
        if !ok {
            return Err(bad());
        }
        Ok(ModulePresentation {
            ring,
            i: i as u32,
            j: j as u32,
        })
    }

    /// `E_{i,j}` over `A_l` with generic `t`.
    pub fn make(i: i64, j: i64, l: i64, field: PrimeField) -> Result<Self> {
        if l <= 0 {
            return Err(Error::InvalidModule { i, j, l });
        }
        ModulePresentation::new(NodeRing::generic(l as u32, field)?, i, j)
    }

    pub fn ring(&self) -> NodeRing {
        self.ring
    }

    pub fn l(&self) -> u32 {
        self.ring.l()
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn flavor(&self) -> Flavor {
        if self.i == 0 {
            Flavor::Free
        } else {
            Flavor::Standard
        }
    }

    pub fn is_free(&self) -> bool {
        self.flavor() == Flavor::Free
    }

    /// `E_{j,i}`, the presentation of the dual module.
    pub fn dual(&self) -> ModulePresentation {
        ModulePresentation {
            ring: self.ring,
            i: self.j,
            j: self.i,
        }
    }

    pub fn with_mode(&self, mode: TMode) -> ModulePresentation {
        ModulePresentation {
            ring: self.ring.with_mode(mode),
            ..*self
        }
    }

    pub fn zero(&self) -> ModuleElement {
        ModuleElement {
            pres: *self,
            f: self.ring.zero(),
            g: self.ring.zero(),
        }
    }

    pub fn xi1(&self) -> ModuleElement {
        self.element(self.ring.one(), self.ring.zero())
            .expect("same ring")
    }

    pub fn xi2(&self) -> ModuleElement {
        self.element(self.ring.zero(), self.ring.one())
            .expect("same ring")
    }

    /// Generator `ξ_n` for `n ∈ {1, 2}`.
    pub fn generator(&self, n: u8) -> ModuleElement {
        match n {
            1 => self.xi1(),
            2 => self.xi2(),
            _ => panic!("generator index {n} out of range"),
        }
    }

    /// Builds `f·ξ1 + g·ξ2` and reduces it to normal form.
    pub fn element(&self, f: RingElement, g: RingElement) -> Result<ModuleElement> {
        for e in [&f, &g] {
            if e.ring() != self.ring {
                return Err(Error::RingMismatch {
                    left: self.ring.to_string(),
                    right: e.ring().to_string(),
                });
            }
        }
        if self.is_free() {
            return Ok(ModuleElement {
                pres: *self,
                f: &f + &g,
                g: self.ring.zero(),
            });
        }
        let mut nf = self.ring.zero();
        let mut ng = self.ring.zero();
        for (m, c) in f.terms() {
            if m.y > 0 {
                // y·ξ1 → t^i ξ2
                ng = &ng + &self.ring.monomial(*c, m.t + self.i, 0, m.y - 1);
            } else {
                nf = &nf + &self.ring.monomial(*c, m.t, m.x, 0);
            }
        }
        for (m, c) in g.terms() {
            if m.x > 0 {
                // x·ξ2 → t^j ξ1
                nf = &nf + &self.ring.monomial(*c, m.t + self.j, m.x - 1, 0);
            } else {
                ng = &ng + &self.ring.monomial(*c, m.t, 0, m.y);
            }
        }
        Ok(ModuleElement {
            pres: *self,
            f: nf,
            g: ng,
        })
    }

    /// Defining relations as coefficient pairs on `(ξ1, ξ2)`, with labels.
    pub fn relations(&self) -> Vec<(String, [RingElement; 2])> {
        let r = &self.ring;
        if self.is_free() {
            return vec![("ξ1 = ξ2".to_string(), [r.one(), -&r.one()])];
        }
        vec![
            (
                format!("t^{}·ξ1 = x·ξ2", self.j),
                [r.t_pow(self.j), -&r.x()],
            ),
            (
                format!("t^{}·ξ2 = y·ξ1", self.i),
                [-&r.y(), r.t_pow(self.i)],
            ),
        ]
    }

    /// Normal-form monomials of `(x, y)`-degree exactly `deg`, for a ring
    /// with specialized `t`.
    pub fn basis_in_degree(&self, deg: u32) -> Vec<BasisMonomial> {
        match (self.is_free(), deg) {
            (true, 0) => vec![BasisMonomial::X(0)],
            (false, 0) => vec![BasisMonomial::X(0), BasisMonomial::Y(0)],
            (_, d) => vec![BasisMonomial::X(d), BasisMonomial::Y(d)],
        }
    }

    pub fn basis_up_to(&self, deg: u32) -> Vec<BasisMonomial> {
        (0..=deg).flat_map(|d| self.basis_in_degree(d)).collect()
    }

    /// Dimensions over `K` of the normal-form pieces in degrees `0..=max_degree`.
    pub fn graded_dims(&self, mode: TMode, max_degree: u32) -> Result<Vec<usize>> {
        if mode == TMode::Generic {
            return Err(Error::GenericModeRejected);
        }
        Ok((0..=max_degree)
            .map(|d| self.basis_in_degree(d).len())
            .collect())
    }
}

impl fmt::Display for ModulePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E_{{{},{}}}", self.i, self.j)
    }
}

/// A normal-form monomial of a module at specialized `t`: `x^a ξ1` or `y^b ξ2`.
/// For the free module `Y(b)` with `b ≥ 1` stands for `y^b σ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisMonomial {
    X(u32),
    Y(u32),
}

impl BasisMonomial {
    pub fn degree(&self) -> u32 {
        match self {
            BasisMonomial::X(a) | BasisMonomial::Y(a) => *a,
        }
    }
}

/// An element `f·ξ1 + g·ξ2` of a presented module, in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleElement {
    pres: ModulePresentation,
    f: RingElement,
    g: RingElement,
}

impl ModuleElement {
    pub fn presentation(&self) -> ModulePresentation {
        self.pres
    }

    /// Coefficient of `ξ1` (of `σ` for the free module).
    pub fn f(&self) -> &RingElement {
        &self.f
    }

    /// Coefficient of `ξ2`; always zero for the free module.
    pub fn g(&self) -> &RingElement {
        &self.g
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.g.is_zero()
    }

    fn check(&self, other: &ModuleElement) -> Result<()> {
        if self.pres == other.pres {
            Ok(())
        } else {
            Err(Error::PresentationMismatch {
                left: format!("{} over {}", self.pres, self.pres.ring),
                right: format!("{} over {}", other.pres, other.pres.ring),
            })
        }
    }

    pub fn try_add(&self, other: &ModuleElement) -> Result<ModuleElement> {
        self.check(other)?;
        Ok(ModuleElement {
            pres: self.pres,
            f: &self.f + &other.f,
            g: &self.g + &other.g,
        })
    }

    pub fn try_sub(&self, other: &ModuleElement) -> Result<ModuleElement> {
        self.try_add(&other.scale(self.pres.ring.field().modulus() - 1))
    }

    pub fn scale(&self, c: u64) -> ModuleElement {
        ModuleElement {
            pres: self.pres,
            f: self.f.scale(c),
            g: self.g.scale(c),
        }
    }

    /// `a · m`, reduced to normal form.
    pub fn scalar_action(&self, a: &RingElement) -> Result<ModuleElement> {
        if a.ring() != self.pres.ring {
            return Err(Error::PresentationMismatch {
                left: self.pres.ring.to_string(),
                right: a.ring().to_string(),
            });
        }
        self.pres.element(a * &self.f, a * &self.g)
    }

    /// Equality of normal forms; errors if the presentations differ.
    pub fn element_equal(&self, other: &ModuleElement) -> Result<bool> {
        self.check(other)?;
        Ok(self == other)
    }

    /// Substitutes `t` in both coefficients.
    pub fn specialize(&self, mode: TMode) -> ModuleElement {
        let pres = self.pres.with_mode(mode);
        pres.element(self.f.specialize(mode), self.g.specialize(mode))
            .expect("specialized parts live in the specialized ring")
    }

    /// Coordinate in the localization, relative to `ξ1` when `x` is inverted
    /// (`ξ2 = t^j ξ1 / x`) and to `ξ2` when `y` is inverted (`ξ1 = t^i ξ2 / y`).
    /// For the free module the coordinate is relative to `σ`.
    pub fn localize(&self, at: LocalVar) -> LaurentPoly {
        let ring = self.pres.ring;
        let lf = self.f.localize(at);
        let lg = self.g.localize(at);
        if self.pres.is_free() {
            return &lf + &lg;
        }
        match at {
            LocalVar::X => {
                let shift = LaurentPoly::monomial(ring, at, 1, self.pres.j, -1);
                &lf + &(&lg * &shift)
            }
            LocalVar::Y => {
                let shift = LaurentPoly::monomial(ring, at, 1, self.pres.i, -1);
                &(&lf * &shift) + &lg
            }
        }
    }

    /// Coordinates over the normal-form monomial basis. Only meaningful when
    /// `t` is specialized (every term is `t`-free).
    pub fn coordinates(&self) -> Vec<(BasisMonomial, u64)> {
        let mut out = Vec::new();
        for (m, c) in self.f.terms() {
            debug_assert_eq!(m.t, 0);
            if m.y > 0 {
                out.push((BasisMonomial::Y(m.y), *c));
            } else {
                out.push((BasisMonomial::X(m.x), *c));
            }
        }
        for (m, c) in self.g.terms() {
            out.push((BasisMonomial::Y(m.y), *c));
        }
        out
    }

    /// Largest `(x, y)`-degree of any term.
    pub fn max_degree(&self) -> Option<u32> {
        self.f.max_degree().max(self.g.max_degree())
    }

    /// Display using custom generator names.
    pub fn display_with<'a>(&'a self, names: [&'a str; 2]) -> impl fmt::Display + 'a {
        ElementDisplay { elem: self, names }
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = if self.pres.is_free() {
            ["σ", "σ"]
        } else {
            ["ξ1", "ξ2"]
        };
        write!(f, "{}", self.display_with(names))
    }
}

struct ElementDisplay<'a> {
    elem: &'a ModuleElement,
    names: [&'a str; 2],
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [&self.elem.f, &self.elem.g]
            .into_iter()
            .zip(self.names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, n)| {
                if c.num_terms() == 1 {
                    let s = c.to_string();
                    if s == "1" {
                        n.to_string()
                    } else {
                        format!("{s}·{n}")
                    }
                } else {
                    format!("({c})·{n}")
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
