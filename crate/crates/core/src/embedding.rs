//! Quantities derived from capacity sequences: cube capacity, Gromov width
//! of concave domains, capacity obstructions and asymptotic slope.

use crate::capacity::{capacity_sequence, CapacitySequence};
use crate::error::Error;
use crate::geometry::{ConcaveToricDomain, LatticeVector, ToricDomain};
use crate::rational::{ExtendedRational, Rational};

/// Largest `δ` with `□_n(δ) ⊂ X_Ω`, i.e. the diagonal point `(δ,…,δ) ∈ Ω`.
/// For convex and concave domains, and for `L_n(δ)`, no symplectic embedding
/// of a cube does better.
pub fn cube_capacity(d: &ToricDomain) -> Result<Rational, Error> {
    d.diagonal_intersection()
}

/// Gromov width of a concave domain: `[(1,…,1)]_Ω`, the largest ball
/// `B(a) ⊂ X_Ω`.
pub fn gromov_width_concave(d: &ConcaveToricDomain) -> Rational {
    d.antinorm_value(&LatticeVector::ones(d.n()))
        .expect("all-ones vector is strictly positive")
}

/// Cube capacity, read as a lower bound on the Lagrangian capacity `c_L`.
pub fn lagrangian_lower_bound(d: &ToricDomain) -> Result<Rational, Error> {
    cube_capacity(d)
}

/// One row of an obstruction check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionRow {
    pub k: u64,
    pub source: ExtendedRational,
    pub target: ExtendedRational,
}

impl ObstructionRow {
    pub fn violates(&self) -> bool {
        self.source > self.target
    }
}

/// Comparison of `c_k(source)` against `c_k(target)` for `k ≤ K`.
///
/// A violation at `k` rules out a symplectic embedding of source into
/// target. No violation proves nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub kmax: u64,
    pub first_violation: Option<u64>,
    pub rows: Vec<ObstructionRow>,
}

pub fn obstruct(
    source: &ToricDomain,
    target: &ToricDomain,
    kmax: u64,
) -> Result<ObstructionReport, Error> {
    let cs = capacity_sequence(source, kmax)?;
    let ct = capacity_sequence(target, kmax)?;
    obstruct_sequences(source.n(), target.n(), &cs, &ct)
}

/// [`obstruct`] on precomputed sequences of equal length.
pub fn obstruct_sequences(
    source_dim: usize,
    target_dim: usize,
    source: &CapacitySequence,
    target: &CapacitySequence,
) -> Result<ObstructionReport, Error> {
    if source_dim != target_dim {
        return Err(Error::DimensionMismatch {
            expected: source_dim,
            found: target_dim,
        });
    }
    let rows: Vec<ObstructionRow> = source
        .values
        .iter()
        .zip(&target.values)
        .map(|(s, t)| ObstructionRow {
            k: s.k,
            source: s.value.clone(),
            target: t.value.clone(),
        })
        .collect();
    Ok(ObstructionReport {
        kmax: rows.len() as u64,
        first_violation: rows.iter().find(|r| r.violates()).map(|r| r.k),
        rows,
    })
}

/// `c_K / K` next to its limit, the cube capacity `δ`, with the bracket
/// `δ ≤ c_K/K ≤ δ(K+n−1)/K` that holds whenever `□_n(δ) ⊂ X ⊂ L_n(δ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlopeReport {
    pub kmax: u64,
    pub c_kmax: Rational,
    pub estimate: Rational,
    /// Exact limit of `c_k / k`.
    pub exact: Option<Rational>,
    pub lower: Rational,
    pub upper: Rational,
}

impl SlopeReport {
    pub fn within_bracket(&self) -> bool {
        self.lower <= self.estimate && self.estimate <= self.upper
    }
}

pub fn asymptotic_slope(d: &ToricDomain, kmax: u64) -> Result<SlopeReport, Error> {
    let seq = capacity_sequence(d, kmax)?;
    slope_from_sequence(d, &seq)
}

/// [`asymptotic_slope`] reusing an already computed sequence.
pub fn slope_from_sequence(d: &ToricDomain, seq: &CapacitySequence) -> Result<SlopeReport, Error> {
    let kmax = seq.len() as u64;
    let c_kmax = match seq.get(kmax as usize) {
        Some(ExtendedRational::Finite(r)) => r,
        _ => return Err(Error::Unbounded(format!("c_{kmax} of {d}"))),
    };
    let delta = cube_capacity(d)?;
    let k = Rational::from_integer(kmax);
    let estimate = c_kmax.checked_div(&k)?;
    let upper = delta.scale_by(kmax + d.n() as u64 - 1).checked_div(&k)?;
    Ok(SlopeReport {
        kmax,
        c_kmax,
        estimate,
        exact: Some(delta.clone()),
        lower: delta,
        upper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn pts(rows: &[&[&str]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|s| q(s)).collect())
            .collect()
    }

    #[test]
    fn cube_capacity_examples() {
        let e12 = ToricDomain::finite_ellipsoid(&[q("1"), q("2")]).unwrap();
        assert_eq!(cube_capacity(&e12).unwrap(), q("2/3"));
        assert_eq!(
            cube_capacity(&ToricDomain::cylinder_union(3, q("1")).unwrap()).unwrap(),
            q("1")
        );
        assert_eq!(
            cube_capacity(&ToricDomain::cube(4, q("7/3")).unwrap()).unwrap(),
            q("7/3")
        );
    }

    #[test]
    fn gromov_examples() {
        let e12 = ConcaveToricDomain::new(pts(&[&["1", "0"], &["0", "2"]])).unwrap();
        assert_eq!(gromov_width_concave(&e12), q("1"));
        let point = ConcaveToricDomain::new(pts(&[&["3/2", "3/2", "3/2"]])).unwrap();
        assert_eq!(gromov_width_concave(&point), q("9/2"));
        let ball =
            ConcaveToricDomain::new(pts(&[&["1", "0"], &["1/2", "1/2"], &["0", "1"]])).unwrap();
        assert_eq!(gromov_width_concave(&ball), q("1"));
    }

    #[test]
    fn obstruct_examples() {
        let cube = ToricDomain::cube(2, q("1")).unwrap();
        let l = ToricDomain::cylinder_union(2, q("9/10")).unwrap();
        let r = obstruct(&cube, &l, 12).unwrap();
        assert_eq!(r.first_violation, Some(10));
        assert_eq!(r.rows.len(), 12);
        assert!(!r.rows[8].violates());

        let l1 = ToricDomain::cylinder_union(2, q("1")).unwrap();
        assert_eq!(obstruct(&cube, &l1, 50).unwrap().first_violation, None);
        assert_eq!(obstruct(&l, &l, 20).unwrap().first_violation, None);

        let l3 = ToricDomain::cylinder_union(3, q("1")).unwrap();
        assert!(matches!(
            obstruct(&cube, &l3, 5),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn slope_examples() {
        let e12 = ToricDomain::finite_ellipsoid(&[q("1"), q("2")]).unwrap();
        let r = asymptotic_slope(&e12, 30).unwrap();
        assert_eq!(r.c_kmax, q("20"));
        assert_eq!(r.estimate, q("2/3"));
        assert_eq!(r.exact, Some(q("2/3")));
        assert!(r.within_bracket());

        let cube = ToricDomain::cube(2, q("1")).unwrap();
        for k in [1, 7, 40] {
            let r = asymptotic_slope(&cube, k).unwrap();
            assert_eq!(r.estimate, q("1"));
            assert_eq!(r.exact, Some(q("1")));
        }

        let l2 = ToricDomain::cylinder_union(2, q("1")).unwrap();
        let r = asymptotic_slope(&l2, 9).unwrap();
        assert_eq!(r.estimate, q("10/9"));
        assert_eq!(r.exact, Some(q("1")));
        assert_eq!((r.lower.clone(), r.upper.clone()), (q("1"), q("10/9")));
        assert!(r.within_bracket());
    }

    #[test]
    fn slope_rejects_cylinders() {
        let z = ToricDomain::ellipsoid(vec![
            ExtendedRational::Finite(q("1")),
            ExtendedRational::Infinity,
        ])
        .unwrap();
        assert!(matches!(asymptotic_slope(&z, 5), Err(Error::Unbounded(_))));
    }

    #[test]
    fn lagrangian_examples() {
        let e12 = ToricDomain::finite_ellipsoid(&[q("1"), q("2")]).unwrap();
        assert_eq!(lagrangian_lower_bound(&e12).unwrap(), q("2/3"));
        assert_eq!(
            lagrangian_lower_bound(&ToricDomain::cube(3, q("2")).unwrap()).unwrap(),
            q("2")
        );
        assert_eq!(
            lagrangian_lower_bound(&ToricDomain::cylinder_union(2, q("1")).unwrap()).unwrap(),
            q("1")
        );
    }
}
