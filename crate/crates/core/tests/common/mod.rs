#![allow(dead_code)]

use rand::Rng;
use toricap::{ConcaveToricDomain, ConvexToricDomain, Rational, ToricDomain};

pub fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

/// Random rational `p/q` with `p ∈ [lo, hi]`, `q ∈ [1, max_den]`.
pub fn rand_rational<R: Rng>(rng: &mut R, lo: i64, hi: i64, max_den: i64) -> Rational {
    Rational::new(rng.gen_range(lo..=hi), rng.gen_range(1..=max_den)).unwrap()
}

pub fn rand_positive<R: Rng>(rng: &mut R) -> Rational {
    rand_rational(rng, 1, 12, 5)
}

pub fn rand_axes<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    (0..n).map(|_| rand_positive(rng)).collect()
}

/// Random generators with nonnegative coordinates and a positive diagonal
/// intersection.
pub fn rand_convex<R: Rng>(rng: &mut R, n: usize, max_points: usize) -> ConvexToricDomain {
    loop {
        let m = rng.gen_range(1..=max_points);
        let gens: Vec<Vec<Rational>> = (0..m)
            .map(|_| (0..n).map(|_| rand_rational(rng, 0, 10, 4)).collect())
            .collect();
        let d = ConvexToricDomain::new(gens).unwrap();
        if d.diagonal_intersection().is_positive() {
            return d;
        }
    }
}

/// Staircase with axis contact points `a_i e_i` (so `Ω` is compact) plus
/// random extra vertices.
pub fn rand_concave<R: Rng>(rng: &mut R, n: usize, max_points: usize) -> ConcaveToricDomain {
    loop {
        let d = rand_staircase(rng, n, max_points);
        if d.diagonal_intersection().is_positive() {
            return d;
        }
    }
}

fn rand_staircase<R: Rng>(rng: &mut R, n: usize, max_points: usize) -> ConcaveToricDomain {
    let mut verts: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut p = vec![Rational::zero(); n];
            p[i] = rand_rational(rng, 2, 12, 3);
            p
        })
        .collect();
    let extra = rng.gen_range(0..=max_points.saturating_sub(n));
    for _ in 0..extra {
        verts.push((0..n).map(|_| rand_rational(rng, 0, 8, 4)).collect());
    }
    ConcaveToricDomain::new(verts).unwrap()
}

/// Any compact domain of dimension `n`.
pub fn rand_domain<R: Rng>(rng: &mut R, n: usize) -> ToricDomain {
    match rng.gen_range(0..5) {
        0 => ToricDomain::finite_ellipsoid(&rand_axes(rng, n)).unwrap(),
        1 => ToricDomain::polydisk(rand_axes(rng, n)).unwrap(),
        2 => ToricDomain::cube(n, rand_positive(rng)).unwrap(),
        3 => ToricDomain::Convex(rand_convex(rng, n, 6)),
        _ => ToricDomain::Concave(rand_concave(rng, n, 6)),
    }
}

/// A pair `(small, big)` of the same class with `Ω_small ⊆ Ω_big`.
pub fn rand_nested_pair<R: Rng>(rng: &mut R, n: usize) -> (ToricDomain, ToricDomain) {
    let bump = |x: &Rational, rng: &mut R| x + &rand_rational(rng, 0, 3, 2);
    match rng.gen_range(0..4) {
        0 => {
            // convex: push generators up and maybe add one
            let small = rand_convex(rng, n, 5);
            let mut gens: Vec<Vec<Rational>> = small
                .generators()
                .iter()
                .map(|p| p.iter().map(|x| bump(x, rng)).collect())
                .collect();
            if rng.gen_bool(0.5) {
                gens.push((0..n).map(|_| rand_rational(rng, 0, 10, 4)).collect());
            }
            (
                ToricDomain::Convex(small),
                ToricDomain::Convex(ConvexToricDomain::new(gens).unwrap()),
            )
        }
        1 => {
            // concave: Ω grows when the staircase vertices move up
            let small = rand_concave(rng, n, 6);
            let verts: Vec<Vec<Rational>> = small
                .vertices()
                .iter()
                .map(|p| p.iter().map(|x| bump(x, rng)).collect())
                .collect();
            (
                ToricDomain::Concave(small),
                ToricDomain::Concave(ConcaveToricDomain::new(verts).unwrap()),
            )
        }
        2 => {
            // concave: dropping vertices shrinks conv(Σ) + orthant
            let big = rand_concave(rng, n, 7);
            let mut verts = big.vertices().to_vec();
            let extra: Vec<Vec<Rational>> = (0..rng.gen_range(1..=3))
                .map(|_| (0..n).map(|_| rand_rational(rng, 0, 8, 4)).collect())
                .collect();
            verts.extend(extra);
            (
                ToricDomain::Concave(ConcaveToricDomain::new(verts).unwrap()),
                ToricDomain::Concave(big),
            )
        }
        _ => {
            let a = rand_axes(rng, n);
            let b: Vec<Rational> = a.iter().map(|x| bump(x, rng)).collect();
            if rng.gen_bool(0.5) {
                (
                    ToricDomain::finite_ellipsoid(&a).unwrap(),
                    ToricDomain::finite_ellipsoid(&b).unwrap(),
                )
            } else {
                (
                    ToricDomain::polydisk(a).unwrap(),
                    ToricDomain::polydisk(b).unwrap(),
                )
            }
        }
    }
}
