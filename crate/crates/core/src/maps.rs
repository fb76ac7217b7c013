//! Maps out of presented modules, tensor products and symmetric powers,
//! specified by the images of generators.
//!
//! A map is only trusted after [`GeneratorMap::check_well_defined`] has pushed
//! every defining relation of the source through the images and found zero.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg;
use crate::module::{BasisMonomial, ModuleElement, ModulePresentation};
use crate::ring::{RingElement, TMode};

/// Domain of a generator map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Source {
    /// A single module `E`, generators `ξ1, ξ2`.
    Module(ModulePresentation),
    /// `E ⊗ E'`, generators `ζ_a ⊗ ξ_b`.
    Tensor(ModulePresentation, ModulePresentation),
    /// `Sym^m E`, generators `ξ1^{m-k} ξ2^k` for `k = 0..=m`.
    Sym(ModulePresentation, u32),
}

/// A generator of a [`Source`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SourceGen {
    Single(u8),
    Pair(u8, u8),
    /// `ξ1^{m-k} ξ2^k`, stored as `k`.
    Monomial(u32),
}

impl fmt::Display for SourceGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SourceGen::Single(a) => write!(f, "ξ{a}"),
            SourceGen::Pair(a, b) => write!(f, "ζ{a}⊗ξ{b}"),
            SourceGen::Monomial(k) => write!(f, "ξ1^(m-{k})·ξ2^{k}"),
        }
    }
}

/// A relation among source generators: `Σ coeff · gen = 0`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub label: String,
    pub terms: Vec<(usize, RingElement)>,
}

impl Source {
    pub fn generators(&self) -> Vec<SourceGen> {
        match self {
            Source::Module(_) => vec![SourceGen::Single(1), SourceGen::Single(2)],
            Source::Tensor(..) => vec![
                SourceGen::Pair(1, 1),
                SourceGen::Pair(1, 2),
                SourceGen::Pair(2, 1),
                SourceGen::Pair(2, 2),
            ],
            Source::Sym(_, m) => (0..=*m).map(SourceGen::Monomial).collect(),
        }
    }

    pub fn index_of(&self, g: SourceGen) -> Option<usize> {
        self.generators().iter().position(|h| *h == g)
    }

    fn ring_check(&self, target: &ModulePresentation) -> Result<()> {
        let rings = match self {
            Source::Module(a) | Source::Sym(a, _) => vec![a.ring()],
            Source::Tensor(a, b) => vec![a.ring(), b.ring()],
        };
        for r in rings {
            if r != target.ring() {
                return Err(Error::RingMismatch {
                    left: r.to_string(),
                    right: target.ring().to_string(),
                });
            }
        }
        Ok(())
    }

    /// All defining relations of the source in terms of its generators.
    pub fn relations(&self) -> Vec<Relation> {
        match self {
            Source::Module(e) => e
                .relations()
                .into_iter()
                .map(|(label, [c1, c2])| Relation {
                    label,
                    terms: vec![(0, c1), (1, c2)],
                })
                .collect(),
            Source::Tensor(a, b) => {
                let mut out = Vec::new();
                // relation of the first factor tensored with each ξ_b
                for (label, [c1, c2]) in a.relations() {
                    let label = label.replace('ξ', "ζ");
                    for s in 0..2usize {
                        out.push(Relation {
                            label: format!("({label})⊗ξ{}", s + 1),
                            terms: vec![(s, c1.clone()), (2 + s, c2.clone())],
                        });
                    }
                }
                for (label, [c1, c2]) in b.relations() {
                    for s in 0..2usize {
                        out.push(Relation {
                            label: format!("ζ{}⊗({label})", s + 1),
                            terms: vec![(2 * s, c1.clone()), (2 * s + 1, c2.clone())],
                        });
                    }
                }
                out
            }
            Source::Sym(e, m) => {
                let mut out = Vec::new();
                for (label, [c1, c2]) in e.relations() {
                    for k in 0..*m {
                        out.push(Relation {
                            label: format!("({label})·ξ1^{}·ξ2^{k}", m - 1 - k),
                            terms: vec![(k as usize, c1.clone()), (k as usize + 1, c2.clone())],
                        });
                    }
                }
                out
            }
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Module(e) => write!(f, "{e}"),
            Source::Tensor(a, b) => write!(f, "{a} ⊗ {b}"),
            Source::Sym(e, m) => write!(f, "Sym^{m} {e}"),
        }
    }
}

/// Outcome of a well-definedness check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Pass,
    /// The first relation whose image is nonzero, and that image.
    Fail {
        relation: String,
        residual: String,
    },
}

impl Certificate {
    pub fn passed(&self) -> bool {
        matches!(self, Certificate::Pass)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Pass => write!(f, "pass"),
            Certificate::Fail { relation, residual } => {
                write!(f, "fail: relation {relation} maps to {residual}")
            }
        }
    }
}

/// A module map given by generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMap {
    source: Source,
    target: ModulePresentation,
    images: Vec<ModuleElement>,
    valid: bool,
}

impl GeneratorMap {
    /// Builds an unchecked map. `images` must list one image per source
    /// generator, in the order of [`Source::generators`].
    pub fn new(
        source: Source,
        target: ModulePresentation,
        images: Vec<ModuleElement>,
    ) -> Result<Self> {
        source.ring_check(&target)?;
        let expected = source.generators().len();
        if images.len() != expected {
            return Err(Error::InvalidArgument(format!(
                "{} images given for {expected} generators",
                images.len()
            )));
        }
        if let Some(bad) = images.iter().find(|m| m.presentation() != target) {
            return Err(Error::PresentationMismatch {
                left: target.to_string(),
                right: bad.presentation().to_string(),
            });
        }
        Ok(GeneratorMap {
            source,
            target,
            images,
            valid: false,
        })
    }

    /// Builds the map and insists that it is well defined.
    pub fn validated(
        source: Source,
        target: ModulePresentation,
        images: Vec<ModuleElement>,
    ) -> Result<Self> {
        let mut map = GeneratorMap::new(source, target, images)?;
        match map.check_well_defined() {
            Certificate::Pass => {
                map.valid = true;
                Ok(map)
            }
            fail => Err(Error::NotWellDefined(fail.to_string())),
        }
    }

    pub fn source(&self) -> Source {
        self.source
    }

    pub fn target(&self) -> ModulePresentation {
        self.target
    }

    pub fn images(&self) -> &[ModuleElement] {
        &self.images
    }

    pub fn image(&self, g: SourceGen) -> Option<&ModuleElement> {
        self.source.index_of(g).map(|i| &self.images[i])
    }

    /// Whether the map has passed [`GeneratorMap::check_well_defined`].
    pub fn is_valid(&self) -> bool {
        self.valid
    }

    /// Returns a copy with one image replaced; the copy is unchecked.
    pub fn with_image(&self, g: SourceGen, image: ModuleElement) -> Result<Self> {
        let idx = self
            .source
            .index_of(g)
            .ok_or_else(|| Error::InvalidArgument(format!("{g} is not a source generator")))?;
        let mut images = self.images.clone();
        images[idx] = image;
        GeneratorMap::new(self.source, self.target, images)
    }

    /// Pushes each source relation through the images; reports the first one
    /// that does not vanish in the target.
    pub fn check_well_defined(&self) -> Certificate {
        for rel in self.source.relations() {
            let mut acc = self.target.zero();
            for (idx, coeff) in &rel.terms {
                let term = self.images[*idx]
                    .scalar_action(coeff)
                    .expect("rings checked at construction");
                acc = acc.try_add(&term).expect("same target");
            }
            if !acc.is_zero() {
                return Certificate::Fail {
                    relation: rel.label,
                    residual: acc.to_string(),
                };
            }
        }
        Certificate::Pass
    }

    /// Evaluates a map out of a single module.
    pub fn apply(&self, m: &ModuleElement) -> Result<ModuleElement> {
        let Source::Module(src) = self.source else {
            return Err(Error::InvalidArgument(format!(
                "{} is not a module source",
                self.source
            )));
        };
        check_pres(&src, m)?;
        let [c1, c2] = coefficients(m);
        let a = self.images[0].scalar_action(&c1)?;
        let b = self.images[1].scalar_action(&c2)?;
        a.try_add(&b)
    }

    /// Evaluates a map out of a tensor product on `m1 ⊗ m2`.
    pub fn apply_tensor(&self, m1: &ModuleElement, m2: &ModuleElement) -> Result<ModuleElement> {
        let Source::Tensor(a, b) = self.source else {
            return Err(Error::InvalidArgument(format!(
                "{} is not a tensor source",
                self.source
            )));
        };
        check_pres(&a, m1)?;
        check_pres(&b, m2)?;
        let ca = coefficients(m1);
        let cb = coefficients(m2);
        let mut acc = self.target.zero();
        for (sa, fa) in ca.iter().enumerate() {
            for (sb, fb) in cb.iter().enumerate() {
                if fa.is_zero() || fb.is_zero() {
                    continue;
                }
                let term = self.images[2 * sa + sb].scalar_action(&(fa * fb))?;
                acc = acc.try_add(&term)?;
            }
        }
        Ok(acc)
    }

    /// Evaluates a map out of `Sym^m E` on the product of `m` factors.
    pub fn apply_sym(&self, factors: &[ModuleElement]) -> Result<ModuleElement> {
        let Source::Sym(src, m) = self.source else {
            return Err(Error::InvalidArgument(format!(
                "{} is not a symmetric power",
                self.source
            )));
        };
        if factors.len() != m as usize {
            return Err(Error::InvalidArgument(format!(
                "{} factors given for Sym^{m}",
                factors.len()
            )));
        }
        let ring = src.ring();
        // expansion in ξ1^{n-k} ξ2^k: index k → coefficient
        let mut poly: BTreeMap<u32, RingElement> = BTreeMap::from([(0, ring.one())]);
        for factor in factors {
            check_pres(&src, factor)?;
            let [c1, c2] = coefficients(factor);
            let mut next: BTreeMap<u32, RingElement> = BTreeMap::new();
            for (k, c) in &poly {
                for (shift, part) in [(0, &c1), (1, &c2)] {
                    if part.is_zero() {
                        continue;
                    }
                    let entry = next.entry(k + shift).or_insert_with(|| ring.zero());
                    *entry = &*entry + &(c * part);
                }
            }
            poly = next;
        }
        let mut acc = self.target.zero();
        for (k, c) in poly {
            acc = acc.try_add(&self.images[k as usize].scalar_action(&c)?)?;
        }
        Ok(acc)
    }

    /// Same map with `t` specialized in every image and presentation.
    pub fn specialize(&self, mode: TMode) -> GeneratorMap {
        let source = match self.source {
            Source::Module(a) => Source::Module(a.with_mode(mode)),
            Source::Tensor(a, b) => Source::Tensor(a.with_mode(mode), b.with_mode(mode)),
            Source::Sym(a, m) => Source::Sym(a.with_mode(mode), m),
        };
        GeneratorMap {
            source,
            target: self.target.with_mode(mode),
            images: self.images.iter().map(|m| m.specialize(mode)).collect(),
            valid: self.valid,
        }
    }

    /// Length of the cokernel at the origin after `t ↦ 0`.
    ///
    /// Works on the filtration by `(x, y)`-degree: for each bound `D`, the
    /// span of `x^a·img` and `y^b·img` of degree at most `D` is compared with
    /// the normal-form monomials of the target of degree at most `D`. The
    /// computation stops once three consecutive degrees beyond
    /// `max(i, j, l)` add nothing to the cokernel.
    pub fn cokernel_length(&self) -> Result<usize> {
        if !self.valid && !self.check_well_defined().passed() {
            return Err(Error::NotWellDefined(self.check_well_defined().to_string()));
        }
        let at_zero = self.specialize(TMode::Specialized(0));
        let target = at_zero.target;
        let ring = target.ring();
        let field = ring.field();
        let gens: Vec<&ModuleElement> = at_zero.images.iter().filter(|m| !m.is_zero()).collect();

        let threshold = self.exponent_bound();
        let cap = threshold + 64;
        let mut prev = 0usize;
        let mut zero_run = 0;
        for deg in 0..=cap {
            let basis = target.basis_up_to(deg);
            let column: BTreeMap<BasisMonomial, usize> =
                basis.iter().enumerate().map(|(n, b)| (*b, n)).collect();
            let mut rows = Vec::new();
            for g in &gens {
                let gdeg = g.max_degree().unwrap_or(0);
                if gdeg > deg {
                    continue;
                }
                let mut multipliers = vec![ring.one()];
                for a in 1..=(deg - gdeg) {
                    multipliers.push(ring.monomial(1, 0, a, 0));
                    multipliers.push(ring.monomial(1, 0, 0, a));
                }
                for mult in multipliers {
                    let prod = g.scalar_action(&mult)?;
                    if prod.is_zero() {
                        continue;
                    }
                    let mut row = vec![0u64; basis.len()];
                    for (b, c) in prod.coordinates() {
                        row[column[&b]] = c;
                    }
                    rows.push(row);
                }
            }
            let coker = basis.len() - linalg::rank(field, rows);
            let contribution = coker as i64 - prev as i64;
            prev = coker;
            if deg > threshold {
                if contribution == 0 {
                    zero_run += 1;
                } else {
                    zero_run = 0;
                }
                if zero_run == 3 {
                    return Ok(coker);
                }
            }
        }
        Err(Error::NonStabilizing(cap))
    }

    fn exponent_bound(&self) -> u32 {
        let pres = match self.source {
            Source::Module(a) | Source::Sym(a, _) => vec![a, self.target],
            Source::Tensor(a, b) => vec![a, b, self.target],
        };
        pres.iter()
            .map(|p| p.i().max(p.j()).max(p.l()))
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for GeneratorMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} -> {}", self.source, self.target)?;
        let names = if self.target.is_free() {
            ["σ", "σ"]
        } else {
            ["ν1", "ν2"]
        };
        let m = match self.source {
            Source::Sym(_, m) => m,
            _ => 0,
        };
        for (g, img) in self.source.generators().iter().zip(&self.images) {
            let label = match g {
                SourceGen::Monomial(k) => sym_label(m - k, *k),
                other => other.to_string(),
            };
            writeln!(f, "  {label} ↦ {}", img.display_with(names))?;
        }
        Ok(())
    }
}

fn sym_label(a: u32, b: u32) -> String {
    let part = |name: &str, e: u32| match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    };
    let parts: Vec<String> = [part("ξ1", a), part("ξ2", b)]
        .into_iter()
        .flatten()
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("·")
    }
}

/// Coefficients on `(ξ1, ξ2)`; the free module puts everything on `ξ1`.
pub(crate) fn coefficients(m: &ModuleElement) -> [RingElement; 2] {
    [m.f().clone(), m.g().clone()]
}

fn check_pres(expected: &ModulePresentation, m: &ModuleElement) -> Result<()> {
    if m.presentation() == *expected {
        Ok(())
    } else {
        Err(Error::PresentationMismatch {
            left: expected.to_string(),
            right: m.presentation().to_string(),
        })
    }
}

/// Identity map of a presentation.
pub fn identity(e: ModulePresentation) -> Result<GeneratorMap> {
    GeneratorMap::validated(Source::Module(e), e, vec![e.xi1(), e.xi2()])
}
