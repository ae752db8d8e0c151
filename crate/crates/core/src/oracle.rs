//! Naive references for the capacity formulas: exhaustive composition
//! enumeration and a k-way merge of the axis multiples. No pruning, no
//! integer rescaling; every value goes through the geometry functionals.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::Error;
use crate::geometry::{ConcaveToricDomain, ConvexToricDomain, LatticeVector};
use crate::rational::Rational;

pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

fn binomial(n: u64, r: u64) -> BigUint {
    let r = r.min(n.saturating_sub(r));
    let mut acc = BigUint::one();
    for i in 0..r {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Number of compositions of `total` into `parts` nonnegative parts.
pub fn composition_count(total: u64, parts: usize) -> BigUint {
    if parts == 0 {
        return if total == 0 {
            BigUint::one()
        } else {
            BigUint::from(0u32)
        };
    }
    binomial(total + parts as u64 - 1, parts as u64 - 1)
}

fn check_cap(count: BigUint, cap: u64) -> Result<(), Error> {
    if count > BigUint::from(cap) {
        return Err(Error::EnumerationCap {
            count: count.to_string(),
            cap,
        });
    }
    Ok(())
}

/// Compositions of `total` into `parts` nonnegative parts, in increasing
/// lexicographic order.
pub struct Compositions {
    current: Option<Vec<u64>>,
    total: u64,
}

impl Compositions {
    pub fn new(total: u64, parts: usize) -> Self {
        let current = (parts > 0).then(|| {
            let mut v = vec![0; parts];
            v[parts - 1] = total;
            v
        });
        Compositions { current, total }
    }
}

impl Iterator for Compositions {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let out = self.current.clone()?;
        let n = out.len();
        // bump the rightmost position (other than the last) that still has
        // room, then dump everything after it into the last slot
        let mut next = out.clone();
        let mut advanced = false;
        for i in (0..n.saturating_sub(1)).rev() {
            let prefix: u64 = next[..=i].iter().sum();
            if prefix < self.total {
                next[i] += 1;
                for slot in next.iter_mut().skip(i + 1) {
                    *slot = 0;
                }
                let used: u64 = next[..n - 1].iter().sum();
                next[n - 1] = self.total - used;
                advanced = true;
                break;
            }
        }
        self.current = advanced.then_some(next);
        Some(out)
    }
}

/// `min ‖v‖*_Ω` over every composition of `k`.
pub fn brute_convex_ck(d: &ConvexToricDomain, k: u64, cap: u64) -> Result<Rational, Error> {
    if k == 0 {
        return Err(Error::InvalidIndex(k));
    }
    check_cap(composition_count(k, d.n()), cap)?;
    Compositions::new(k, d.n())
        .map(|v| d.support_value(&LatticeVector::new(v)))
        .try_fold(None::<Rational>, |best, val| {
            let val = val?;
            Ok(Some(match best {
                Some(b) if b <= val => b,
                _ => val,
            }))
        })
        .map(|b| b.expect("at least one composition"))
}

/// `max [v]_Ω` over every strictly positive composition of `k + n − 1`.
pub fn brute_concave_ck(d: &ConcaveToricDomain, k: u64, cap: u64) -> Result<Rational, Error> {
    if k == 0 {
        return Err(Error::InvalidIndex(k));
    }
    let n = d.n();
    // v = 1 + u with u a composition of k − 1
    check_cap(composition_count(k - 1, n), cap)?;
    Compositions::new(k - 1, n)
        .map(|u| d.antinorm_value(&LatticeVector::new(u.into_iter().map(|x| x + 1).collect())))
        .try_fold(None::<Rational>, |best, val| {
            let val = val?;
            Ok(Some(match best {
                Some(b) if b >= val => b,
                _ => val,
            }))
        })
        .map(|b| b.expect("at least one composition"))
}

/// k-th term of the sorted merge of the progressions `a_i, 2a_i, 3a_i, …`.
pub fn brute_mk(a: &[Rational], k: u64) -> Result<Rational, Error> {
    if k == 0 {
        return Err(Error::InvalidIndex(k));
    }
    if a.is_empty() {
        return Err(Error::InvalidDomain("at least one axis required".into()));
    }
    if let Some(bad) = a.iter().find(|x| !x.is_positive()) {
        return Err(Error::InvalidDomain(format!(
            "axis must be positive, got {bad}"
        )));
    }
    let mut heap: BinaryHeap<Reverse<(Rational, usize, u64)>> = a
        .iter()
        .enumerate()
        .map(|(i, ai)| Reverse((ai.clone(), i, 1)))
        .collect();
    let mut taken = 0;
    loop {
        let Reverse((value, axis, m)) = heap.pop().expect("progressions are infinite");
        taken += 1;
        if taken == k {
            return Ok(value);
        }
        if m < k {
            heap.push(Reverse((a[axis].scale_by(m + 1), axis, m + 1)));
        }
    }
}
