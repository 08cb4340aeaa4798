//! Smith normal form over the integers.

use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::lattice::Int;
use crate::matrix::IntMatrix;

/// `U * A * V = S` with `U`, `V` unimodular and `S` diagonal with
/// non-negative entries `d_1 | d_2 | ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SnfDecomposition {
    /// Diagonal entries of `S`, `min(rows, cols)` of them.
    pub fn diagonal(&self) -> Vec<Int> {
        let k = self.s.rows().min(self.s.cols());
        (0..k).map(|i| self.s[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }

    /// Cokernel of `A` as `Z^free ⊕ Z/t_1 ⊕ ...`, listing only torsion
    /// factors greater than one.
    pub fn cokernel(&self) -> (usize, Vec<Int>) {
        let free = self.s.rows() - self.rank();
        let torsion = self
            .diagonal()
            .into_iter()
            .filter(|d| !d.is_zero() && d > &Int::from(1))
            .collect();
        (free, torsion)
    }
}

/// Position of the nonzero entry of smallest absolute value in the trailing
/// submatrix starting at `(k, k)`; ties go to the lowest row, then column.
fn find_pivot(s: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), Int)> = None;
    for i in k..s.rows() {
        for j in k..s.cols() {
            let v = &s[(i, j)];
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            if best.as_ref().is_none_or(|(_, b)| &a < b) {
                best = Some(((i, j), a));
            }
        }
    }
    best.map(|(pos, _)| pos)
}

pub fn smith_normal_form(a: &IntMatrix) -> SnfDecomposition {
    let (rows, cols) = a.shape();
    let mut s = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for k in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = find_pivot(&s, k) else {
                return finish(u, s, v);
            };
            s.swap_rows(k, pi);
            u.swap_rows(k, pi);
            s.swap_cols(k, pj);
            v.swap_cols(k, pj);

            let pivot = s[(k, k)].clone();
            let mut clean = true;
            for i in k + 1..rows {
                let q = -s[(i, k)].div_floor(&pivot);
                s.add_row_multiple(i, k, &q);
                u.add_row_multiple(i, k, &q);
                clean &= s[(i, k)].is_zero();
            }
            for j in k + 1..cols {
                let q = -s[(k, j)].div_floor(&pivot);
                s.add_col_multiple(j, k, &q);
                v.add_col_multiple(j, k, &q);
                clean &= s[(k, j)].is_zero();
            }
            if !clean {
                continue;
            }

            // pivot must divide the whole trailing block
            let offender =
                (k + 1..rows).find(|&i| (k + 1..cols).any(|j| !s[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = Int::from(1);
                    s.add_row_multiple(k, i, &one);
                    u.add_row_multiple(k, i, &one);
                }
                None => break,
            }
        }
        if s[(k, k)].is_negative() {
            s.negate_row(k);
            u.negate_row(k);
        }
    }
    finish(u, s, v)
}

fn finish(u: IntMatrix, s: IntMatrix, v: IntMatrix) -> SnfDecomposition {
    SnfDecomposition { u, s, v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::int;
    use num_traits::One;

    fn check(a: &IntMatrix) -> SnfDecomposition {
        let d = smith_normal_form(a);
        assert_eq!(&(&d.u * a) * &d.v, d.s);
        for i in 0..d.s.rows() {
            for j in 0..d.s.cols() {
                if i != j {
                    assert!(d.s[(i, j)].is_zero());
                }
            }
        }
        let diag = d.diagonal();
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        d
    }

    #[test]
    fn diag_2_3() {
        let d = check(&IntMatrix::from_rows(&[[2, 0], [0, 3]]));
        assert_eq!(d.diagonal(), [int(1), int(6)]);
    }

    #[test]
    fn identity_is_fixed() {
        let d = check(&IntMatrix::identity(4));
        assert_eq!(d.s, IntMatrix::identity(4));
    }

    #[test]
    fn ray_map_example() {
        let a = IntMatrix::from_rows(&[[1, 0, 1, -1], [0, 0, 0, 2], [-1, 1, 0, 0]]);
        let d = check(&a);
        assert_eq!(d.diagonal(), [int(1), int(1), int(2)]);
        assert_eq!(d.cokernel(), (0, alloc::vec![int(2)]));
        let dt = check(&a.transpose());
        assert_eq!(dt.cokernel(), (1, alloc::vec![int(2)]));
    }

    #[test]
    fn zero_and_empty() {
        let d = check(&IntMatrix::zeros(2, 3));
        assert_eq!(d.rank(), 0);
        assert!(d.u.det3().is_err() || d.u.det3().unwrap().is_one());
        let d = check(&IntMatrix::zeros(0, 3));
        assert_eq!(d.diagonal().len(), 0);
    }

    #[test]
    fn negative_pivot_made_positive() {
        let d = check(&IntMatrix::from_rows(&[[-4, 6], [2, -8]]));
        // determinantal divisors: d1 = 2, d1*d2 = |32 - 12| = 20
        assert_eq!(d.diagonal(), [int(2), int(10)]);
    }
}
