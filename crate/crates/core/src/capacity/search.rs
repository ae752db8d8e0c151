//! Branch-and-bound over compositions for the convex (min-max) and concave
//! (max-min) capacity formulas.
//!
//! Points are first cleared of denominators so the inner loop runs on
//! integers: `i128` when the largest possible dot product fits comfortably,
//! `BigInt` otherwise. Compositions are visited in increasing lexicographic
//! order, so the first optimum found is the lexicographically smallest one
//! and ties can be pruned.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::rational::Rational;

pub(crate) trait Weight: Clone + Ord {
    fn zero() -> Self;
    /// `self + w * times`
    fn add_scaled(&self, w: &Self, times: u64) -> Self;
    fn into_bigint(self) -> BigInt;
}

impl Weight for i128 {
    fn zero() -> Self {
        0
    }
    fn add_scaled(&self, w: &Self, times: u64) -> Self {
        self + w * times as i128
    }
    fn into_bigint(self) -> BigInt {
        BigInt::from(self)
    }
}

impl Weight for BigInt {
    fn zero() -> Self {
        BigInt::from(0)
    }
    fn add_scaled(&self, w: &Self, times: u64) -> Self {
        self + w * times
    }
    fn into_bigint(self) -> BigInt {
        self
    }
}

/// Points rescaled by the common denominator `scale`.
pub(crate) struct IntegerPoints {
    pub scale: BigInt,
    pub points: Vec<Vec<BigInt>>,
}

impl IntegerPoints {
    pub fn new(points: &[Vec<Rational>]) -> Self {
        let scale = points
            .iter()
            .flatten()
            .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let points = points
            .iter()
            .map(|p| p.iter().map(|x| x.numer() * (&scale / x.denom())).collect())
            .collect();
        IntegerPoints { scale, points }
    }

    /// Converts to `i128` if no dot product with a vector of total `budget`
    /// can come near overflow.
    fn as_i128(&self, budget: u64) -> Option<Vec<Vec<i128>>> {
        let max = self.points.iter().flatten().max()?.clone();
        let bound = max * BigInt::from(budget) * BigInt::from(4u32);
        bound.to_i128()?;
        Some(
            self.points
                .iter()
                .map(|p| p.iter().map(|x| x.to_i128().unwrap()).collect())
                .collect(),
        )
    }

    fn to_rational(&self, value: BigInt) -> Rational {
        Rational::new(value, self.scale.clone()).expect("positive scale")
    }
}

pub(crate) struct Optimum {
    pub value: Rational,
    pub witness: Vec<u64>,
}

/// `min { max_j ⟨v, p_j⟩ : v ∈ N^n, Σ v = k }`, lexicographically smallest
/// minimizer.
pub(crate) fn min_max(points: &[Vec<Rational>], k: u64) -> Optimum {
    let ints = IntegerPoints::new(points);
    let (value, witness) = match ints.as_i128(k) {
        Some(p) => {
            let (v, w) = MinMax::run(&p, k);
            (v.into_bigint(), w)
        }
        None => {
            let (v, w) = MinMax::run(&ints.points, k);
            (v, w)
        }
    };
    Optimum {
        value: ints.to_rational(value),
        witness,
    }
}

/// `max { min_j ⟨v, p_j⟩ : v ∈ N^n_{>0}, Σ v = total }`, lexicographically
/// smallest maximizer. Requires `total ≥ n`.
pub(crate) fn max_min(points: &[Vec<Rational>], total: u64) -> Optimum {
    let ints = IntegerPoints::new(points);
    let (value, witness) = match ints.as_i128(total) {
        Some(p) => {
            let (v, w) = MaxMin::run(&p, total);
            (v.into_bigint(), w)
        }
        None => MaxMin::run(&ints.points, total),
    };
    Optimum {
        value: ints.to_rational(value),
        witness,
    }
}

/// `tail[j][i]` = `pick` of `points[j][i..]`; one extra empty slot at `n`.
fn tails<T: Weight>(points: &[Vec<T>], pick: fn(&T, &T) -> bool) -> Vec<Vec<T>> {
    points
        .iter()
        .map(|p| {
            let n = p.len();
            let mut t = vec![T::zero(); n + 1];
            for i in (0..n).rev() {
                t[i] = if i == n - 1 || pick(&p[i], &t[i + 1]) {
                    p[i].clone()
                } else {
                    t[i + 1].clone()
                };
            }
            t
        })
        .collect()
}

struct MinMax<'a, T> {
    points: &'a [Vec<T>],
    n: usize,
    min_tail: Vec<Vec<T>>,
    partial: Vec<Vec<T>>,
    current: Vec<u64>,
    best: Option<(T, Vec<u64>)>,
}

impl<'a, T: Weight> MinMax<'a, T> {
    fn run(points: &'a [Vec<T>], k: u64) -> (T, Vec<u64>) {
        let n = points[0].len();
        let m = points.len();
        let mut s = MinMax {
            points,
            n,
            min_tail: tails(points, |a, b| a < b),
            partial: vec![vec![T::zero(); m]; n + 1],
            current: vec![0; n],
            best: None,
        };
        s.visit(0, k);
        s.best.expect("at least one composition")
    }

    fn visit(&mut self, i: usize, remaining: u64) {
        let m = self.points.len();
        if i == self.n - 1 {
            let value = (0..m)
                .map(|j| self.partial[i][j].add_scaled(&self.points[j][i], remaining))
                .max()
                .unwrap();
            if self.best.as_ref().is_none_or(|(b, _)| value < *b) {
                self.current[i] = remaining;
                self.best = Some((value, self.current.clone()));
            }
            return;
        }
        for x in 0..=remaining {
            let rest = remaining - x;
            let mut bound: Option<T> = None;
            for j in 0..m {
                let p = self.partial[i][j].add_scaled(&self.points[j][i], x);
                // remaining mass lands on coordinates > i, each costing at least min_tail
                let lb = p.add_scaled(&self.min_tail[j][i + 1], rest);
                if bound.as_ref().is_none_or(|b| lb > *b) {
                    bound = Some(lb);
                }
                self.partial[i + 1][j] = p;
            }
            if let (Some((best, _)), Some(lb)) = (&self.best, &bound) {
                if lb >= best {
                    continue;
                }
            }
            self.current[i] = x;
            self.visit(i + 1, rest);
        }
    }
}

struct MaxMin<'a, T> {
    points: &'a [Vec<T>],
    n: usize,
    max_tail: Vec<Vec<T>>,
    partial: Vec<Vec<T>>,
    current: Vec<u64>,
    best: Option<(T, Vec<u64>)>,
}

impl<'a, T: Weight> MaxMin<'a, T> {
    fn run(points: &'a [Vec<T>], total: u64) -> (T, Vec<u64>) {
        let n = points[0].len();
        assert!(total >= n as u64, "need at least one unit per coordinate");
        let m = points.len();
        let mut s = MaxMin {
            points,
            n,
            max_tail: tails(points, |a, b| a > b),
            partial: vec![vec![T::zero(); m]; n + 1],
            current: vec![0; n],
            best: None,
        };
        s.visit(0, total);
        s.best.expect("at least one positive composition")
    }

    fn visit(&mut self, i: usize, remaining: u64) {
        let m = self.points.len();
        if i == self.n - 1 {
            let value = (0..m)
                .map(|j| self.partial[i][j].add_scaled(&self.points[j][i], remaining))
                .min()
                .unwrap();
            if self.best.as_ref().is_none_or(|(b, _)| value > *b) {
                self.current[i] = remaining;
                self.best = Some((value, self.current.clone()));
            }
            return;
        }
        let reserved = (self.n - 1 - i) as u64;
        for x in 1..=remaining - reserved {
            let rest = remaining - x;
            let mut bound: Option<T> = None;
            for j in 0..m {
                let p = self.partial[i][j].add_scaled(&self.points[j][i], x);
                let ub = p.add_scaled(&self.max_tail[j][i + 1], rest);
                if bound.as_ref().is_none_or(|b| ub < *b) {
                    bound = Some(ub);
                }
                self.partial[i + 1][j] = p;
            }
            if let (Some((best, _)), Some(ub)) = (&self.best, &bound) {
                if ub <= best {
                    continue;
                }
            }
            self.current[i] = x;
            self.visit(i + 1, rest);
        }
    }
}
