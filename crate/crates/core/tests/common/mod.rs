#![allow(dead_code)]

use fano_obstruct_core::{convex_hull, Int, IntMatrix, LatticePoint, LatticePolytope};
use num_integer::Integer;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn pts(coords: &[[i64; 3]]) -> Vec<LatticePoint> {
    coords.iter().map(|&c| LatticePoint::from(c)).collect()
}

pub const ALMOST_FLAT: [[i64; 3]; 5] = [[0, 0, 1], [0, 1, -1], [0, 1, 0], [-2, -1, 0], [1, 0, 0]];
pub const SIMPLEX: [[i64; 3]; 4] = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]];
pub const OCTAHEDRON: [[i64; 3]; 6] = [
    [1, 0, 0],
    [-1, 0, 0],
    [0, 1, 0],
    [0, -1, 0],
    [0, 0, 1],
    [0, 0, -1],
];
pub const CUBE: [[i64; 3]; 8] = [
    [1, 1, 1],
    [1, 1, -1],
    [1, -1, 1],
    [1, -1, -1],
    [-1, 1, 1],
    [-1, 1, -1],
    [-1, -1, 1],
    [-1, -1, -1],
];
/// Weighted projective space P(1,1,1,3): a single A_2 cone plus smooth ones.
pub const P1113: [[i64; 3]; 4] = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -3]];
/// Not reflexive: the facet through `e1, e2` and the last vertex has height 2.
pub const LOPSIDED: [[i64; 3]; 4] = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -2]];

pub fn fixtures() -> Vec<(&'static str, Vec<LatticePoint>)> {
    vec![
        ("almost_flat", pts(&ALMOST_FLAT)),
        ("simplex", pts(&SIMPLEX)),
        ("octahedron", pts(&OCTAHEDRON)),
        ("cube", pts(&CUBE)),
        ("p1113", pts(&P1113)),
        ("lopsided", pts(&LOPSIDED)),
    ]
}

pub fn hull(coords: &[[i64; 3]]) -> LatticePolytope {
    convex_hull(&pts(coords)).unwrap()
}

/// Product of random elementary matrices, signed permutations included.
pub fn random_unimodular(rng: &mut ChaCha8Rng, steps: usize) -> IntMatrix {
    let mut m = [[1i64, 0, 0], [0, 1, 0], [0, 0, 1]];
    for _ in 0..steps {
        let i = rng.gen_range(0..3);
        let j = (i + rng.gen_range(1..3)) % 3;
        match rng.gen_range(0..3) {
            0 => {
                let k = rng.gen_range(-2..=2);
                let src = m[j];
                for (x, y) in m[i].iter_mut().zip(src) {
                    *x += k * y;
                }
            }
            1 => m.swap(i, j),
            _ => m[i].iter_mut().for_each(|x| *x = -*x),
        }
    }
    IntMatrix::from_rows(&m)
}

pub fn apply_all(m: &IntMatrix, vs: &[LatticePoint]) -> Vec<LatticePoint> {
    vs.iter().map(|v| m.apply(v).unwrap()).collect()
}

/// Random subsets of `{-1,0,1}^3` whose hull is reflexive, optionally moved
/// by a random unimodular map.
pub fn random_reflexive(rng: &mut ChaCha8Rng, transform: bool) -> LatticePolytope {
    let mut cube: Vec<[i64; 3]> = Vec::new();
    for x in -1..=1 {
        for y in -1..=1 {
            for z in -1..=1 {
                if (x, y, z) != (0, 0, 0) {
                    cube.push([x, y, z]);
                }
            }
        }
    }
    loop {
        let k = rng.gen_range(4..=10);
        let chosen: Vec<[i64; 3]> = cube.choose_multiple(rng, k).copied().collect();
        let Ok(p) = convex_hull(&pts(&chosen)) else {
            continue;
        };
        if !p.is_reflexive() {
            continue;
        }
        if !transform {
            return p;
        }
        let u = random_unimodular(rng, 6);
        return p.transform(&u).unwrap();
    }
}

/// Leibniz determinant of a square matrix.
pub fn leibniz(m: &[Vec<Int>]) -> Int {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Int::zero();
    permute(&mut perm, 0, m, &mut total);
    total
}

fn permute(perm: &mut Vec<usize>, k: usize, m: &[Vec<Int>], total: &mut Int) {
    let n = perm.len();
    if k == n {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                inversions += usize::from(perm[i] > perm[j]);
            }
        }
        let mut prod = Int::from(1);
        for (i, &j) in perm.iter().enumerate() {
            prod *= &m[i][j];
        }
        if inversions % 2 == 1 {
            prod = -prod;
        }
        *total += prod;
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute(perm, k + 1, m, total);
        perm.swap(k, i);
    }
}

pub fn rows_of(m: &IntMatrix) -> Vec<Vec<Int>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

/// Supporting planes `(normal, offset)` with `<normal, x> <= offset` on every
/// vertex, found by trying every vertex triple.
pub fn brute_planes(vs: &[[i64; 3]]) -> Vec<Plane> {
    let mut planes = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            for k in j + 1..vs.len() {
                let d1 = sub(vs[j], vs[i]);
                let d2 = sub(vs[k], vs[i]);
                let mut nrm = [
                    d1[1] * d2[2] - d1[2] * d2[1],
                    d1[2] * d2[0] - d1[0] * d2[2],
                    d1[0] * d2[1] - d1[1] * d2[0],
                ];
                if nrm == [0, 0, 0] {
                    continue;
                }
                let g = nrm.iter().fold(0i64, |g, x| g.gcd(x));
                nrm.iter_mut().for_each(|x| *x /= g);
                let h = dot(nrm, vs[i]);
                let values: Vec<i64> = vs.iter().map(|v| dot(nrm, *v)).collect();
                let plane = if values.iter().all(|&x| x <= h) {
                    (nrm, h)
                } else if values.iter().all(|&x| x >= h) {
                    (nrm.map(|x| -x), -h)
                } else {
                    continue;
                };
                if !planes.contains(&plane) {
                    planes.push(plane);
                }
            }
        }
    }
    planes
}

fn sub(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub fn dot(a: [i64; 3], b: [i64; 3]) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn small_vertices(p: &LatticePolytope) -> Vec<[i64; 3]> {
    p.vertices().iter().map(|v| v.to_i64().unwrap()).collect()
}

/// Lattice points of the bounding box satisfying every brute-force plane.
pub fn brute_lattice_points(p: &LatticePolytope) -> Vec<[i64; 3]> {
    let vs = small_vertices(p);
    let planes = brute_planes(&vs);
    let lo: Vec<i64> = (0..3)
        .map(|i| vs.iter().map(|v| v[i]).min().unwrap())
        .collect();
    let hi: Vec<i64> = (0..3)
        .map(|i| vs.iter().map(|v| v[i]).max().unwrap())
        .collect();
    let mut out = Vec::new();
    for x in lo[0]..=hi[0] {
        for y in lo[1]..=hi[1] {
            for z in lo[2]..=hi[2] {
                let q = [x, y, z];
                if planes.iter().all(|(n, h)| dot(*n, q) <= *h) {
                    out.push(q);
                }
            }
        }
    }
    out
}

pub type Plane = ([i64; 3], i64);

/// Points on exactly one supporting plane, grouped by that plane.
pub fn brute_facet_interiors(p: &LatticePolytope) -> Vec<(Plane, Vec<[i64; 3]>)> {
    let vs = small_vertices(p);
    let planes = brute_planes(&vs);
    let inside = brute_lattice_points(p);
    planes
        .iter()
        .map(|&(n, h)| {
            let pts = inside
                .iter()
                .filter(|q| dot(n, **q) == h)
                .filter(|q| planes.iter().filter(|(m, g)| dot(*m, **q) == *g).count() == 1)
                .copied()
                .collect();
            ((n, h), pts)
        })
        .collect()
}
