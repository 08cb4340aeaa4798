//! Core results checked against independent brute-force computations.

mod common;

use common::*;
use fano_obstruct_core::polytope::triangle_interior_lattice_points;
use fano_obstruct_core::singularity::find_adjacent_pairs;
use fano_obstruct_core::{
    convex_hull, smith_normal_form, AdjacentAnPair, Int, IntMatrix, LatticePoint, NormalForm,
};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn polytope_corpus() -> Vec<(String, fano_obstruct_core::LatticePolytope)> {
    let mut out: Vec<_> = fixtures()
        .into_iter()
        .map(|(name, v)| (name.to_string(), convex_hull(&v).unwrap()))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..100 {
        out.push((format!("random {i}"), random_reflexive(&mut rng, true)));
    }
    out
}

fn sorted(mut v: Vec<[i64; 3]>) -> Vec<[i64; 3]> {
    v.sort();
    v
}

fn small(v: &[LatticePoint]) -> Vec<[i64; 3]> {
    sorted(v.iter().map(|p| p.to_i64().unwrap()).collect())
}

#[test]
fn facets_match_brute_planes() {
    for (name, p) in polytope_corpus() {
        let ours: Vec<([i64; 3], i64)> = p
            .facets()
            .iter()
            .map(|f| {
                (
                    f.support.to_i64().unwrap(),
                    i64::try_from(&f.height).unwrap(),
                )
            })
            .collect();
        let mut ours = ours;
        ours.sort();
        let mut brute = brute_planes(&small_vertices(&p));
        brute.sort();
        assert_eq!(ours, brute, "{name}");
    }
}

#[test]
fn lattice_points_match_brute_force() {
    for (name, p) in polytope_corpus() {
        assert_eq!(
            small(&p.lattice_points()),
            sorted(brute_lattice_points(&p)),
            "{name}"
        );
    }
}

#[test]
fn facet_interiors_match_brute_force() {
    for (name, p) in polytope_corpus() {
        let brute = brute_facet_interiors(&p);
        for f in p.facets() {
            let key = (
                f.support.to_i64().unwrap(),
                i64::try_from(&f.height).unwrap(),
            );
            let expected = &brute.iter().find(|(k, _)| *k == key).unwrap().1;
            assert_eq!(
                small(&p.facet_interior_lattice_points(f)),
                sorted(expected.clone()),
                "{name}, facet {key:?}"
            );
        }
    }
}

#[test]
fn triangle_interiors_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 300 {
        let c: Vec<[i64; 3]> = (0..3)
            .map(|_| {
                [
                    rng.gen_range(-4..=4),
                    rng.gen_range(-4..=4),
                    rng.gen_range(-4..=4),
                ]
            })
            .collect();
        let v = pts(&c);
        let e1 = &v[1] - &v[0];
        let e2 = &v[2] - &v[0];
        if e1.cross(&e2).is_zero() {
            continue;
        }
        checked += 1;
        // Barycentric test with exact rationals: q = v0 + s e1 + t e2.
        let n = e1.cross(&e2).to_i64().unwrap();
        let nn = dot(n, n);
        let mut expected = Vec::new();
        for x in -4..=4 {
            for y in -4..=4 {
                for z in -4..=4 {
                    let q = [x, y, z];
                    let d = [x - c[0][0], y - c[0][1], z - c[0][2]];
                    if dot(n, d) != 0 {
                        continue;
                    }
                    let dv = LatticePoint::from(d);
                    let s = dv.cross(&e2).to_i64().unwrap();
                    let t = e1.cross(&dv).to_i64().unwrap();
                    let (s, t) = (dot(s, n), dot(t, n));
                    if s > 0 && t > 0 && s + t < nn {
                        expected.push(q);
                    }
                }
            }
        }
        assert_eq!(
            small(&triangle_interior_lattice_points([&v[0], &v[1], &v[2]])),
            sorted(expected),
            "{c:?}"
        );
    }
}

#[test]
fn det3_matches_leibniz() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let m: Vec<Vec<i64>> = (0..3)
            .map(|_| (0..3).map(|_| rng.gen_range(-9..=9)).collect())
            .collect();
        let im = IntMatrix::from_rows(&m);
        assert_eq!(im.det3().unwrap(), leibniz(&rows_of(&im)));
    }
}

fn minors_gcd(m: &[Vec<Int>], k: usize) -> Int {
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }
    let mut g = Int::zero();
    for rs in subsets(m.len(), k) {
        for cs in subsets(m[0].len(), k) {
            let sub: Vec<Vec<Int>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| m[i][j].clone()).collect())
                .collect();
            g = g.gcd(&leibniz(&sub));
        }
    }
    g
}

#[test]
fn smith_normal_form_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a1f);
    for case in 0..500 {
        let rows = rng.gen_range(1..=4);
        let cols = rng.gen_range(1..=4);
        let bound = if case % 5 == 0 { 1 } else { 6 };
        let a: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
            .collect();
        let a = IntMatrix::from_rows(&a);
        let d = smith_normal_form(&a);

        assert_eq!(
            d.u.checked_mul(&a).unwrap().checked_mul(&d.v).unwrap(),
            d.s,
            "case {case}"
        );
        assert!(
            leibniz(&rows_of(&d.u)).abs().is_one(),
            "case {case}: U not unimodular"
        );
        assert!(
            leibniz(&rows_of(&d.v)).abs().is_one(),
            "case {case}: V not unimodular"
        );
        for i in 0..rows {
            for j in 0..cols {
                if i != j {
                    assert!(d.s[(i, j)].is_zero(), "case {case}: off-diagonal entry");
                }
            }
        }
        let diag = d.diagonal();
        assert!(diag.iter().all(|x| !x.is_negative()));
        for w in diag.windows(2) {
            assert!(
                w[1].is_zero() || (!w[0].is_zero() && w[1].is_multiple_of(&w[0])),
                "case {case}: {diag:?}"
            );
        }
        // Determinantal divisors: d_1 ... d_k is the gcd of the k x k minors.
        let entries = rows_of(&a);
        let mut prod = Int::one();
        for k in 1..=rows.min(cols) {
            prod *= &diag[k - 1];
            assert_eq!(prod, minors_gcd(&entries, k), "case {case}, k = {k}");
        }
    }
}

/// `(a, b)` as the coordinates of `rho0` in the basis `(rho_u, rho_hat, rho1)`
/// by Cramer's rule, where `rho_hat` steps one lattice point along the edge.
fn cramer(pair: &AdjacentAnPair) -> (Int, Int, Int) {
    let step = &pair.rho_v - &pair.rho_u;
    let g = step.content();
    let step = LatticePoint::new(&step[0] / &g, &step[1] / &g, &step[2] / &g);
    let hat = &pair.rho_u + &step;
    let col = |p: &LatticePoint| p.coords.to_vec();
    let det = |a: &LatticePoint, b: &LatticePoint, c: &LatticePoint| {
        let m: Vec<Vec<Int>> = (0..3)
            .map(|i| vec![col(a)[i].clone(), col(b)[i].clone(), col(c)[i].clone()])
            .collect();
        leibniz(&m)
    };
    let base = det(&pair.rho_u, &hat, &pair.rho1);
    assert!(base.abs().is_one());
    let a = det(&pair.rho0, &hat, &pair.rho1) / &base;
    let b = det(&pair.rho_u, &pair.rho0, &pair.rho1) / &base;
    let c = det(&pair.rho_u, &hat, &pair.rho0) / &base;
    (a, b, c)
}

#[test]
fn normal_form_matches_cramer() {
    let mut pairs: Vec<AdjacentAnPair> = find_adjacent_pairs(&hull(&ALMOST_FLAT));
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let n: i64 = rng.gen_range(1..=6);
        let (a, b) = (rng.gen_range(-20..=20), rng.gen_range(-20..=20));
        let u = random_unimodular(&mut rng, 8);
        let v = apply_all(
            &u,
            &pts(&[[a, b, -1], [0, 0, 1], [1, 0, 0], [-n, n + 1, 0]]),
        );
        pairs.push(
            AdjacentAnPair::with_labels(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone())
                .unwrap(),
        );
    }
    for pair in &pairs {
        let nf = NormalForm::of(pair).unwrap();
        let (a, b, c) = cramer(pair);
        assert_eq!((&nf.a, &nf.b), (&a, &b));
        assert_eq!(c, Int::from(-1));
        assert_eq!(nf.pairing(), &a + &b - 1);
        assert_eq!(pair.pairing, &a + &b - 1);
    }
}
