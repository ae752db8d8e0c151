//! Moment-map images of toric domains and the exact functionals the
//! capacity formulas consume.
//!
//! A toric domain `X_Ω ⊂ C^n` is the preimage of a region `Ω ⊂ R^n_{≥0}`
//! under `μ(z) = π(|z_1|², …, |z_n|²)`. Everything here works on `Ω`:
//!
//! - convex domains are given by generator points; `Ω` is the downward
//!   closure of their convex hull inside the orthant, and the support value
//!   `max_{w∈Ω} ⟨v,w⟩` at `v ≥ 0` is the maximum over generators;
//! - concave domains are given by vertices of the staircase `Σ`, the lower
//!   boundary of `conv(vertices) + R^n_{≥0}`; for `v > 0` the anti-norm
//!   `min_{w∈Σ} ⟨v,w⟩` is the minimum over vertices.

pub mod game;

use std::fmt;

use crate::error::Error;
use crate::rational::{ExtendedRational, Rational};

/// A vector `v ∈ N^n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector(pub Vec<u64>);

impl LatticeVector {
    pub fn new(entries: Vec<u64>) -> Self {
        LatticeVector(entries)
    }

    pub fn ones(n: usize) -> Self {
        LatticeVector(vec![1; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    /// All entries are at least 1.
    pub fn is_strictly_positive(&self) -> bool {
        self.0.iter().all(|&x| x >= 1)
    }

    fn dot(&self, w: &[Rational]) -> Rational {
        self.0
            .iter()
            .zip(w)
            .filter(|(&vi, _)| vi != 0)
            .fold(Rational::zero(), |acc, (&vi, wi)| acc + wi.scale_by(vi))
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn validate_points(points: &[Vec<Rational>], what: &str) -> Result<usize, Error> {
    let first = points
        .first()
        .ok_or_else(|| Error::InvalidDomain(format!("{what}: at least one point required")))?;
    let n = first.len();
    if n == 0 {
        return Err(Error::InvalidDomain(format!(
            "{what}: dimension must be at least 1"
        )));
    }
    for (idx, p) in points.iter().enumerate() {
        if p.len() != n {
            return Err(Error::InvalidDomain(format!(
                "{what}[{idx}]: expected {n} coordinates, got {}",
                p.len()
            )));
        }
        if let Some(c) = p.iter().position(Rational::is_negative) {
            return Err(Error::InvalidDomain(format!(
                "{what}[{idx}][{c}]: negative coordinate {}",
                p[c]
            )));
        }
    }
    Ok(n)
}

fn check_dim(expected: usize, v: &LatticeVector) -> Result<(), Error> {
    if v.len() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: v.len(),
        });
    }
    Ok(())
}

fn scaled_points(points: &[Vec<Rational>], s: &Rational) -> Vec<Vec<Rational>> {
    points
        .iter()
        .map(|p| p.iter().map(|x| x * s).collect())
        .collect()
}

/// Convex toric domain, described by generators of its moment image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexToricDomain {
    n: usize,
    generators: Vec<Vec<Rational>>,
}

impl ConvexToricDomain {
    pub fn new(generators: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let n = validate_points(&generators, "generators")?;
        Ok(ConvexToricDomain { n, generators })
    }

    /// Simplex with vertices `a_i e_i`: the ellipsoid `E(a)`.
    pub fn simplex(axes: &[Rational]) -> Result<Self, Error> {
        let n = axes.len();
        let generators = axes
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let mut p = vec![Rational::zero(); n];
                p[i] = a.clone();
                p
            })
            .collect();
        ConvexToricDomain::new(generators)
    }

    /// Box `∏[0, a_i]`: the polydisk `P(a)`.
    pub fn rectangle(sides: &[Rational]) -> Result<Self, Error> {
        ConvexToricDomain::new(vec![sides.to_vec()])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Vec<Rational>] {
        &self.generators
    }

    /// `‖v‖*_Ω = max_w ⟨v,w⟩` over generators.
    pub fn support_value(&self, v: &LatticeVector) -> Result<Rational, Error> {
        check_dim(self.n, v)?;
        Ok(self
            .generators
            .iter()
            .map(|w| v.dot(w))
            .max()
            .expect("nonempty generators"))
    }

    pub fn scale(&self, s: &Rational) -> Result<Self, Error> {
        check_scale(s)?;
        Ok(ConvexToricDomain {
            n: self.n,
            generators: scaled_points(&self.generators, s),
        })
    }

    /// Largest `t` with `(t,…,t) ∈ Ω`.
    pub fn diagonal_intersection(&self) -> Rational {
        game::solve_max_min(&self.generators).value
    }
}

/// Concave toric domain, described by the vertices of its staircase `Σ`.
///
/// The staircase is the lower boundary of `conv(vertices) + R^n_{≥0}` and
/// `Ω` is the part of the orthant on or below it. A compact `Ω` needs the
/// points where `Σ` meets the coordinate hyperplanes among the vertices;
/// this is not checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcaveToricDomain {
    n: usize,
    vertices: Vec<Vec<Rational>>,
}

impl ConcaveToricDomain {
    pub fn new(vertices: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let n = validate_points(&vertices, "sigma")?;
        Ok(ConcaveToricDomain { n, vertices })
    }

    /// Staircase of the ellipsoid `E(a)`: vertices `a_i e_i`.
    pub fn simplex(axes: &[Rational]) -> Result<Self, Error> {
        Ok(ConcaveToricDomain {
            vertices: ConvexToricDomain::simplex(axes)?.generators,
            n: axes.len(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    /// `[v]_Ω = min_w ⟨v,w⟩` over staircase vertices, for `v > 0`.
    pub fn antinorm_value(&self, v: &LatticeVector) -> Result<Rational, Error> {
        check_dim(self.n, v)?;
        if !v.is_strictly_positive() {
            return Err(Error::NonPositiveEntry(v.0.clone()));
        }
        Ok(self
            .vertices
            .iter()
            .map(|w| v.dot(w))
            .min()
            .expect("nonempty vertices"))
    }

    pub fn scale(&self, s: &Rational) -> Result<Self, Error> {
        check_scale(s)?;
        Ok(ConcaveToricDomain {
            n: self.n,
            vertices: scaled_points(&self.vertices, s),
        })
    }

    /// Largest `t` with `(t,…,t)` on or below `Σ`: the point where the
    /// diagonal enters `conv(vertices) + R^n_{≥0}`.
    pub fn diagonal_intersection(&self) -> Rational {
        let negated: Vec<Vec<Rational>> = self
            .vertices
            .iter()
            .map(|p| p.iter().map(|x| -x.clone()).collect())
            .collect();
        -game::solve_max_min(&negated).value
    }
}

fn check_scale(s: &Rational) -> Result<(), Error> {
    if !s.is_positive() {
        return Err(Error::NonPositiveScale(s.to_string()));
    }
    Ok(())
}

/// Every domain family the calculator understands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ToricDomain {
    /// `E(a_1,…,a_n)`; infinite axes allowed (`E(a,∞)` is the cylinder `Z(a)`).
    Ellipsoid(Vec<ExtendedRational>),
    /// `P(a_1,…,a_n)`.
    Polydisk(Vec<Rational>),
    /// `□_n(δ) = P(δ,…,δ)`.
    Cube {
        n: usize,
        delta: Rational,
    },
    /// `L_n(δ)`: points with `min_i π|z_i|² ≤ δ`.
    CylinderUnion {
        n: usize,
        delta: Rational,
    },
    Convex(ConvexToricDomain),
    Concave(ConcaveToricDomain),
}

impl ToricDomain {
    pub fn ellipsoid(axes: Vec<ExtendedRational>) -> Result<Self, Error> {
        let d = ToricDomain::Ellipsoid(axes);
        d.validate()?;
        Ok(d)
    }

    pub fn finite_ellipsoid(axes: &[Rational]) -> Result<Self, Error> {
        ToricDomain::ellipsoid(axes.iter().cloned().map(ExtendedRational::Finite).collect())
    }

    pub fn polydisk(sides: Vec<Rational>) -> Result<Self, Error> {
        let d = ToricDomain::Polydisk(sides);
        d.validate()?;
        Ok(d)
    }

    pub fn cube(n: usize, delta: Rational) -> Result<Self, Error> {
        let d = ToricDomain::Cube { n, delta };
        d.validate()?;
        Ok(d)
    }

    pub fn cylinder_union(n: usize, delta: Rational) -> Result<Self, Error> {
        let d = ToricDomain::CylinderUnion { n, delta };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<(), Error> {
        let bad = |msg: String| Err(Error::InvalidDomain(msg));
        match self {
            ToricDomain::Ellipsoid(a) => {
                if a.is_empty() {
                    return bad("ellipsoid needs at least one axis".into());
                }
                for (i, ai) in a.iter().enumerate() {
                    if let ExtendedRational::Finite(r) = ai {
                        if !r.is_positive() {
                            return bad(format!("a[{i}]: axis must be positive, got {r}"));
                        }
                    }
                }
                Ok(())
            }
            ToricDomain::Polydisk(a) => {
                if a.is_empty() {
                    return bad("polydisk needs at least one factor".into());
                }
                match a.iter().position(|x| !x.is_positive()) {
                    Some(i) => bad(format!("a[{i}]: side must be positive, got {}", a[i])),
                    None => Ok(()),
                }
            }
            ToricDomain::Cube { n, delta } | ToricDomain::CylinderUnion { n, delta } => {
                if *n == 0 {
                    return bad("n: dimension must be at least 1".into());
                }
                if !delta.is_positive() {
                    return bad(format!("delta: must be positive, got {delta}"));
                }
                Ok(())
            }
            ToricDomain::Convex(c) => validate_points(&c.generators, "generators").map(|_| ()),
            ToricDomain::Concave(c) => validate_points(&c.vertices, "sigma").map(|_| ()),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            ToricDomain::Ellipsoid(a) => a.len(),
            ToricDomain::Polydisk(a) => a.len(),
            ToricDomain::Cube { n, .. } | ToricDomain::CylinderUnion { n, .. } => *n,
            ToricDomain::Convex(c) => c.n(),
            ToricDomain::Concave(c) => c.n(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ToricDomain::Ellipsoid(_) => "ellipsoid",
            ToricDomain::Polydisk(_) => "polydisk",
            ToricDomain::Cube { .. } => "cube",
            ToricDomain::CylinderUnion { .. } => "cylinder_union",
            ToricDomain::Convex(_) => "convex",
            ToricDomain::Concave(_) => "concave",
        }
    }

    /// Finite ellipsoid axes, or `None` if some axis is infinite or `self`
    /// is not an ellipsoid.
    pub fn finite_axes(&self) -> Option<Vec<Rational>> {
        match self {
            ToricDomain::Ellipsoid(a) => a.iter().map(|x| x.finite().cloned()).collect(),
            _ => None,
        }
    }

    /// Generator description of the moment image, when the domain is a
    /// compact convex toric domain.
    pub fn to_convex(&self) -> Option<ConvexToricDomain> {
        match self {
            ToricDomain::Ellipsoid(_) => ConvexToricDomain::simplex(&self.finite_axes()?).ok(),
            ToricDomain::Polydisk(a) => ConvexToricDomain::rectangle(a).ok(),
            ToricDomain::Cube { n, delta } => {
                ConvexToricDomain::rectangle(&vec![delta.clone(); *n]).ok()
            }
            ToricDomain::Convex(c) => Some(c.clone()),
            ToricDomain::CylinderUnion { .. } | ToricDomain::Concave(_) => None,
        }
    }

    /// Staircase description, when the domain is concave. `L_n(δ)` maps to
    /// the single vertex `(δ,…,δ)`, whose staircase region is exactly `L_n(δ)`.
    pub fn to_concave(&self) -> Option<ConcaveToricDomain> {
        match self {
            ToricDomain::Ellipsoid(_) => ConcaveToricDomain::simplex(&self.finite_axes()?).ok(),
            ToricDomain::CylinderUnion { n, delta } => {
                ConcaveToricDomain::new(vec![vec![delta.clone(); *n]]).ok()
            }
            ToricDomain::Concave(c) => Some(c.clone()),
            _ => None,
        }
    }

    /// Multiplies the moment image by `s`, so every capacity scales by `s`.
    pub fn scale(&self, s: &Rational) -> Result<ToricDomain, Error> {
        check_scale(s)?;
        Ok(match self {
            ToricDomain::Ellipsoid(a) => ToricDomain::Ellipsoid(
                a.iter()
                    .map(|x| match x {
                        ExtendedRational::Finite(r) => ExtendedRational::Finite(r * s),
                        ExtendedRational::Infinity => ExtendedRational::Infinity,
                    })
                    .collect(),
            ),
            ToricDomain::Polydisk(a) => ToricDomain::Polydisk(a.iter().map(|x| x * s).collect()),
            ToricDomain::Cube { n, delta } => ToricDomain::Cube {
                n: *n,
                delta: delta * s,
            },
            ToricDomain::CylinderUnion { n, delta } => ToricDomain::CylinderUnion {
                n: *n,
                delta: delta * s,
            },
            ToricDomain::Convex(c) => ToricDomain::Convex(c.scale(s)?),
            ToricDomain::Concave(c) => ToricDomain::Concave(c.scale(s)?),
        })
    }

    /// Largest `δ` with `(δ,…,δ) ∈ Ω`.
    pub fn diagonal_intersection(&self) -> Result<Rational, Error> {
        match self {
            ToricDomain::Ellipsoid(a) => {
                let axes = self.finite_axes().ok_or_else(|| {
                    Error::Unbounded(format!("ellipsoid with infinite axis {}", fmt_axes(a)))
                })?;
                // Σ t / a_i = 1
                let inv_sum = axes
                    .iter()
                    .map(|x| x.recip())
                    .try_fold(Rational::zero(), |s, r| r.map(|r| s + r))?;
                inv_sum.recip()
            }
            ToricDomain::Polydisk(a) => Ok(a.iter().min().cloned().expect("validated nonempty")),
            ToricDomain::Cube { delta, .. } | ToricDomain::CylinderUnion { delta, .. } => {
                Ok(delta.clone())
            }
            ToricDomain::Convex(c) => Ok(c.diagonal_intersection()),
            ToricDomain::Concave(c) => Ok(c.diagonal_intersection()),
        }
    }
}

fn fmt_axes(a: &[ExtendedRational]) -> String {
    let parts: Vec<String> = a.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

impl fmt::Display for ToricDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts = |ps: &[Vec<Rational>]| {
            ps.iter()
                .map(|p| {
                    let c: Vec<String> = p.iter().map(ToString::to_string).collect();
                    format!("({})", c.join(","))
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            ToricDomain::Ellipsoid(a) => write!(f, "E{}", fmt_axes(a)),
            ToricDomain::Polydisk(a) => {
                let c: Vec<String> = a.iter().map(ToString::to_string).collect();
                write!(f, "P({})", c.join(","))
            }
            ToricDomain::Cube { n, delta } => write!(f, "Cube_{n}({delta})"),
            ToricDomain::CylinderUnion { n, delta } => write!(f, "L_{n}({delta})"),
            ToricDomain::Convex(c) => write!(f, "Convex[{}]", pts(&c.generators)),
            ToricDomain::Concave(c) => write!(f, "Concave[{}]", pts(&c.vertices)),
        }
    }
}

/// `‖v‖*_Ω` for a convex domain.
pub fn support_value(d: &ConvexToricDomain, v: &LatticeVector) -> Result<Rational, Error> {
    d.support_value(v)
}

/// `[v]_Ω` for a concave domain; `v` must be strictly positive.
pub fn antinorm_value(d: &ConcaveToricDomain, v: &LatticeVector) -> Result<Rational, Error> {
    d.antinorm_value(v)
}

pub fn diagonal_intersection(d: &ToricDomain) -> Result<Rational, Error> {
    d.diagonal_intersection()
}

pub fn scale_domain(d: &ToricDomain, s: &Rational) -> Result<ToricDomain, Error> {
    d.scale(s)
}
