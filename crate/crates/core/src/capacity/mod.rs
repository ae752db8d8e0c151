//! The capacity sequence `c_k` of a toric domain.
//!
//! - ellipsoids: `M_k(a)`, the k-th smallest positive multiple of the axes;
//! - polydisks and cubes: `k · min a_i`;
//! - `L_n(δ)`: `δ(k + n − 1)`;
//! - convex domains: `min { ‖v‖*_Ω : v ∈ N^n, Σv = k }`;
//! - concave domains: `max { [v]_Ω : v ∈ N^n_{>0}, Σv = k + n − 1 }`.

mod search;

use std::fmt;

use rayon::prelude::*;

use crate::error::Error;
use crate::geometry::{ConcaveToricDomain, ConvexToricDomain, LatticeVector, ToricDomain};
use crate::rational::{ExtendedRational, Rational};

/// Which formula produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    EllipsoidSpectrum,
    PolydiskClosedForm,
    CylinderUnionClosedForm,
    ConvexSearch,
    ConcaveSearch,
    ProductCombinator,
}

impl Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::EllipsoidSpectrum => "EllipsoidSpectrum",
            Branch::PolydiskClosedForm => "PolydiskClosedForm",
            Branch::CylinderUnionClosedForm => "CylinderUnionClosedForm",
            Branch::ConvexSearch => "ConvexSearch",
            Branch::ConcaveSearch => "ConcaveSearch",
            Branch::ProductCombinator => "ProductCombinator",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Branch {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        [
            Branch::EllipsoidSpectrum,
            Branch::PolydiskClosedForm,
            Branch::CylinderUnionClosedForm,
            Branch::ConvexSearch,
            Branch::ConcaveSearch,
            Branch::ProductCombinator,
        ]
        .into_iter()
        .find(|b| b.as_str() == s)
        .ok_or_else(|| Error::Unsupported(format!("branch {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapacityResult {
    pub k: u64,
    pub value: ExtendedRational,
    /// Optimal lattice vector, for the search branches.
    pub witness: Option<LatticeVector>,
    pub branch: Branch,
}

impl CapacityResult {
    fn closed(k: u64, value: Rational, branch: Branch) -> Self {
        CapacityResult {
            k,
            value: ExtendedRational::Finite(value),
            witness: None,
            branch,
        }
    }
}

/// `c_1, …, c_K` of one domain, in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapacitySequence {
    pub domain: String,
    pub values: Vec<CapacityResult>,
}

impl CapacitySequence {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `c_k` with `c_0 = 0`.
    pub fn get(&self, k: usize) -> Option<ExtendedRational> {
        if k == 0 {
            return Some(ExtendedRational::Finite(Rational::zero()));
        }
        self.values.get(k - 1).map(|r| r.value.clone())
    }

    pub fn values(&self) -> Vec<ExtendedRational> {
        self.values.iter().map(|r| r.value.clone()).collect()
    }

    fn check_increasing(&self) -> Result<(), Error> {
        for w in self.values.windows(2) {
            if w[1].value < w[0].value {
                return Err(Error::NotMonotone(w[1].k));
            }
        }
        Ok(())
    }
}

fn check_index(k: u64) -> Result<(), Error> {
    if k == 0 {
        return Err(Error::InvalidIndex(k));
    }
    Ok(())
}

/// `M_k(a)`: the least `L` with `Σ_{a_i finite} ⌊L / a_i⌋ ≥ k`.
///
/// `M_k` is `m·a_i` for some finite axis and some `m ≤ k`, so for each axis
/// we binary-search the smallest qualifying multiple and keep the least.
/// Infinite axes contribute no multiples.
pub fn ellipsoid_ck(a: &[ExtendedRational], k: u64) -> Result<Rational, Error> {
    check_index(k)?;
    let finite: Vec<&Rational> = a.iter().filter_map(ExtendedRational::finite).collect();
    if finite.is_empty() {
        return Err(Error::Unbounded("every ellipsoid axis is infinite".into()));
    }
    if let Some(bad) = finite.iter().find(|x| !x.is_positive()) {
        return Err(Error::InvalidDomain(format!(
            "axis must be positive, got {bad}"
        )));
    }
    let count_reaches = |level: &Rational| {
        let mut total = num_bigint::BigInt::from(0);
        for ai in &finite {
            total += level.checked_div(ai).expect("positive axis").floor();
        }
        total >= num_bigint::BigInt::from(k)
    };
    let mut best: Option<Rational> = None;
    for ai in &finite {
        let (mut lo, mut hi) = (1u64, k);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if count_reaches(&ai.scale_by(mid)) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        let level = ai.scale_by(lo);
        if best.as_ref().is_none_or(|b| level < *b) {
            best = Some(level);
        }
    }
    Ok(best.expect("at least one finite axis"))
}

/// `k · min a_i`.
pub fn polydisk_ck(a: &[Rational], k: u64) -> Result<Rational, Error> {
    check_index(k)?;
    let min = a
        .iter()
        .min()
        .ok_or_else(|| Error::InvalidDomain("polydisk needs at least one factor".into()))?;
    Ok(min.scale_by(k))
}

/// `δ (k + n − 1)`.
pub fn cylinder_union_ck(n: usize, delta: &Rational, k: u64) -> Result<Rational, Error> {
    check_index(k)?;
    if n == 0 {
        return Err(Error::InvalidDomain(
            "n: dimension must be at least 1".into(),
        ));
    }
    Ok(delta.scale_by(k + n as u64 - 1))
}

/// Minimizes the support value over compositions of `k`.
pub fn convex_ck(d: &ConvexToricDomain, k: u64) -> Result<CapacityResult, Error> {
    check_index(k)?;
    let opt = search::min_max(d.generators(), k);
    Ok(CapacityResult {
        k,
        value: ExtendedRational::Finite(opt.value),
        witness: Some(LatticeVector::new(opt.witness)),
        branch: Branch::ConvexSearch,
    })
}

/// Maximizes the anti-norm over strictly positive compositions of
/// `k + n − 1`.
pub fn concave_ck(d: &ConcaveToricDomain, k: u64) -> Result<CapacityResult, Error> {
    check_index(k)?;
    let total = k + d.n() as u64 - 1;
    let opt = search::max_min(d.vertices(), total);
    Ok(CapacityResult {
        k,
        value: ExtendedRational::Finite(opt.value),
        witness: Some(LatticeVector::new(opt.witness)),
        branch: Branch::ConcaveSearch,
    })
}

/// `c_k` of a single domain.
pub fn capacity_at(d: &ToricDomain, k: u64) -> Result<CapacityResult, Error> {
    check_index(k)?;
    match d {
        ToricDomain::Ellipsoid(a) => Ok(CapacityResult::closed(
            k,
            ellipsoid_ck(a, k)?,
            Branch::EllipsoidSpectrum,
        )),
        ToricDomain::Polydisk(a) => Ok(CapacityResult::closed(
            k,
            polydisk_ck(a, k)?,
            Branch::PolydiskClosedForm,
        )),
        ToricDomain::Cube { n, delta } => Ok(CapacityResult::closed(
            k,
            polydisk_ck(&vec![delta.clone(); *n], k)?,
            Branch::PolydiskClosedForm,
        )),
        ToricDomain::CylinderUnion { n, delta } => Ok(CapacityResult::closed(
            k,
            cylinder_union_ck(*n, delta, k)?,
            Branch::CylinderUnionClosedForm,
        )),
        ToricDomain::Convex(c) => convex_ck(c, k),
        ToricDomain::Concave(c) => concave_ck(c, k),
    }
}

/// `c_1, …, c_K`, checked to be nondecreasing.
pub fn capacity_sequence(d: &ToricDomain, kmax: u64) -> Result<CapacitySequence, Error> {
    check_index(kmax)?;
    d.validate()?;
    let values = (1..=kmax)
        .map(|k| capacity_at(d, k))
        .collect::<Result<Vec<_>, _>>()?;
    finish(d, values)
}

/// Same as [`capacity_sequence`], evaluating the indices on the current
/// rayon pool. Output order is by `k` regardless of completion order.
pub fn capacity_sequence_par(d: &ToricDomain, kmax: u64) -> Result<CapacitySequence, Error> {
    check_index(kmax)?;
    d.validate()?;
    let values = (1..=kmax)
        .into_par_iter()
        .map(|k| capacity_at(d, k))
        .collect::<Result<Vec<_>, _>>()?;
    finish(d, values)
}

fn finish(d: &ToricDomain, values: Vec<CapacityResult>) -> Result<CapacitySequence, Error> {
    let seq = CapacitySequence {
        domain: d.to_string(),
        values,
    };
    seq.check_increasing()?;
    Ok(seq)
}

/// Capacities of a product from those of its factors:
/// `c_k(X × X′) = min_{i+j=k} c_i(X) + c_j(X′)` with `c_0 = 0`.
pub fn product_capacities(
    c: &CapacitySequence,
    c_prime: &CapacitySequence,
    kmax: usize,
) -> Result<CapacitySequence, Error> {
    for s in [c, c_prime] {
        if s.len() < kmax {
            return Err(Error::SequenceTooShort {
                have: s.len(),
                need: kmax,
            });
        }
    }
    let values = (1..=kmax)
        .map(|k| {
            let value = (0..=k)
                .map(|i| &c.get(i).unwrap() + &c_prime.get(k - i).unwrap())
                .min()
                .unwrap();
            CapacityResult {
                k: k as u64,
                value,
                witness: None,
                branch: Branch::ProductCombinator,
            }
        })
        .collect();
    Ok(CapacitySequence {
        domain: format!("{} x {}", c.domain, c_prime.domain),
        values,
    })
}
