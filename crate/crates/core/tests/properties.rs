use proptest::prelude::*;
use toricap::oracle::Compositions;
use toricap::{
    antinorm_value, capacity_sequence, parse_domain, render_domain, scale_domain, support_value,
    ConcaveToricDomain, ConvexToricDomain, ExtendedRational, LatticeVector, Rational, ToricDomain,
};

fn rational(max_num: i64) -> impl Strategy<Value = Rational> {
    (0..=max_num, 1i64..=6).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn positive() -> impl Strategy<Value = Rational> {
    (1i64..=30, 1i64..=6).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn points(n: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec(rational(20), n), 1..=6)
}

fn lattice(n: usize, lo: u64) -> impl Strategy<Value = LatticeVector> {
    prop::collection::vec(lo..=9u64, n).prop_map(LatticeVector::new)
}

fn add(a: &LatticeVector, b: &LatticeVector) -> LatticeVector {
    LatticeVector::new(
        a.entries()
            .iter()
            .zip(b.entries())
            .map(|(x, y)| x + y)
            .collect(),
    )
}

/// Domain with its dimension, plus two lattice vectors of that dimension.
fn with_vectors(
    lo: u64,
) -> impl Strategy<Value = (Vec<Vec<Rational>>, LatticeVector, LatticeVector)> {
    (1usize..=4).prop_flat_map(move |n| (points(n), lattice(n, lo), lattice(n, lo)))
}

fn domain() -> impl Strategy<Value = ToricDomain> {
    (1usize..=3).prop_flat_map(|n| {
        prop_oneof![
            prop::collection::vec(
                prop_oneof![
                    4 => positive().prop_map(ExtendedRational::Finite),
                    1 => Just(ExtendedRational::Infinity),
                ],
                n
            )
            .prop_map(ToricDomain::Ellipsoid),
            prop::collection::vec(positive(), n).prop_map(ToricDomain::Polydisk),
            positive().prop_map(move |delta| ToricDomain::Cube { n, delta }),
            positive().prop_map(move |delta| ToricDomain::CylinderUnion { n, delta }),
            points(n).prop_map(|p| ToricDomain::Convex(ConvexToricDomain::new(p).unwrap())),
            points(n).prop_map(|p| ToricDomain::Concave(ConcaveToricDomain::new(p).unwrap())),
        ]
    })
}

/// Two-dimensional diagonal oracle: minimize the piecewise-linear function
/// `y ↦ max_j ⟨g_j, (y, 1−y)⟩` on `[0,1]` (convex) or maximize the
/// matching min (concave) by checking every breakpoint.
fn diagonal_2d(pts: &[Vec<Rational>], convex: bool) -> Rational {
    let eval = |y: &Rational| {
        let vals = pts
            .iter()
            .map(|p| &(&p[0] * y) + &(&p[1] * &(Rational::one() - y)));
        if convex {
            vals.max().unwrap()
        } else {
            vals.min().unwrap()
        }
    };
    let mut candidates = vec![Rational::zero(), Rational::one()];
    for a in pts {
        for b in pts {
            // (a0 − a1 − b0 + b1) y = b1 − a1
            let slope = &(&a[0] - &a[1]) - &(&b[0] - &b[1]);
            if let Ok(y) = (&b[1] - &a[1]).checked_div(&slope) {
                if !y.is_negative() && y <= Rational::one() {
                    candidates.push(y);
                }
            }
        }
    }
    let values = candidates.iter().map(eval);
    if convex {
        values.min().unwrap()
    } else {
        values.max().unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn support_is_homogeneous_and_subadditive((pts, v, w) in with_vectors(0), s in positive()) {
        let d = ConvexToricDomain::new(pts).unwrap();
        let scaled = d.scale(&s).unwrap();
        prop_assert_eq!(support_value(&scaled, &v).unwrap(), &support_value(&d, &v).unwrap() * &s);
        let sum = support_value(&d, &add(&v, &w)).unwrap();
        prop_assert!(sum <= &support_value(&d, &v).unwrap() + &support_value(&d, &w).unwrap());
    }

    #[test]
    fn antinorm_is_homogeneous_and_superadditive((pts, v, w) in with_vectors(1), s in positive()) {
        let d = ConcaveToricDomain::new(pts).unwrap();
        let scaled = d.scale(&s).unwrap();
        prop_assert_eq!(antinorm_value(&scaled, &v).unwrap(), &antinorm_value(&d, &v).unwrap() * &s);
        let sum = antinorm_value(&d, &add(&v, &w)).unwrap();
        prop_assert!(sum >= &antinorm_value(&d, &v).unwrap() + &antinorm_value(&d, &w).unwrap());
    }

    #[test]
    fn support_monotone_under_generator_domination(
        (pts, v, _) in with_vectors(0),
        extra in rational(5),
    ) {
        let small = ConvexToricDomain::new(pts.clone()).unwrap();
        let mut bigger: Vec<Vec<Rational>> =
            pts.iter().map(|p| p.iter().map(|x| x + &extra).collect()).collect();
        bigger.push(vec![extra.clone(); v.len()]);
        let big = ConvexToricDomain::new(bigger).unwrap();
        prop_assert!(support_value(&small, &v).unwrap() <= support_value(&big, &v).unwrap());
    }

    #[test]
    fn antinorm_monotone_under_staircase_containment(
        (pts, v, _) in with_vectors(1),
        extra in rational(5),
    ) {
        // raising every vertex enlarges Ω
        let small = ConcaveToricDomain::new(pts.clone()).unwrap();
        let raised: Vec<Vec<Rational>> =
            pts.iter().map(|p| p.iter().map(|x| x + &extra).collect()).collect();
        let big = ConcaveToricDomain::new(raised).unwrap();
        prop_assert!(antinorm_value(&small, &v).unwrap() <= antinorm_value(&big, &v).unwrap());
    }

    #[test]
    fn diagonal_matches_planar_oracle(pts in points(2)) {
        let cx = ConvexToricDomain::new(pts.clone()).unwrap();
        prop_assert_eq!(cx.diagonal_intersection(), diagonal_2d(&pts, true));
        let cc = ConcaveToricDomain::new(pts.clone()).unwrap();
        prop_assert_eq!(cc.diagonal_intersection(), diagonal_2d(&pts, false));
    }

    #[test]
    fn diagonal_bracketed_by_grid_strategies(pts in (1usize..=4).prop_flat_map(points)) {
        // any direction y in the simplex gives t* ≤ max_j ⟨g_j, y⟩ and any
        // mix λ of generators gives t* ≥ min_i (Σ λ_j g_j)_i
        let d = ConvexToricDomain::new(pts.clone()).unwrap();
        let t = d.diagonal_intersection();
        let n = d.n();
        let m = pts.len();
        for y in Compositions::new(6, n) {
            let y = LatticeVector::new(y);
            let upper = support_value(&d, &y).unwrap().checked_div(&Rational::from(6)).unwrap();
            prop_assert!(t <= upper);
        }
        for lambda in Compositions::new(4, m) {
            let lower = (0..n)
                .map(|i| {
                    lambda
                        .iter()
                        .zip(&pts)
                        .fold(Rational::zero(), |s, (&l, p)| s + p[i].scale_by(l))
                })
                .min()
                .unwrap()
                .checked_div(&Rational::from(4))
                .unwrap();
            prop_assert!(t >= lower);
        }
    }

    #[test]
    fn capacities_scale_linearly(d in domain(), s in positive()) {
        let base = capacity_sequence(&d, 8);
        let scaled = capacity_sequence(&scale_domain(&d, &s).unwrap(), 8);
        match (base, scaled) {
            (Ok(b), Ok(t)) => {
                for (x, y) in b.values.iter().zip(&t.values) {
                    let want = match &x.value {
                        ExtendedRational::Finite(r) => ExtendedRational::Finite(r * &s),
                        ExtendedRational::Infinity => ExtendedRational::Infinity,
                    };
                    prop_assert_eq!(&y.value, &want);
                }
            }
            (Err(_), Err(_)) => {}
            (b, t) => prop_assert!(false, "mismatched outcomes {:?} / {:?}", b, t),
        }
    }

    #[test]
    fn domain_file_round_trips(d in domain()) {
        let text = render_domain(&d);
        prop_assert_eq!(parse_domain(&text).unwrap(), d);
    }
}
