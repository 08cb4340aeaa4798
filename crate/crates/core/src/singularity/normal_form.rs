//! The `GL_3(Z)` normal form of an adjacent pair and everything derived from
//! it: the ray map of the two-cone fan, its kernel, the class group, the
//! degrees of the line bundles of the `A_n`-bundle over `P^1`, and the
//! splitting type of the pushed-forward `Ext^1` sheaf.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::pair::AdjacentAnPair;
use crate::lattice::{gcd_all, gcd_ext, Int, LatticePoint};
use crate::matrix::IntMatrix;
use crate::snf::smith_normal_form;
use crate::{Error, Result};

/// After the change of basis `u`:
/// `rho1 = (0,0,1)`, `rho_u = (1,0,0)`, `rho_v = (-n, n+1, 0)`, `rho0 = (a, b, -1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub u: IntMatrix,
    pub a: Int,
    pub b: Int,
    pub n: i64,
    /// `gcd(n+1, b)`
    pub r: Int,
    /// `b = r p`
    pub p: Int,
    /// `n + 1 = r q`
    pub q: Int,
    /// `s p + t q = 1`
    pub s: Int,
    pub t: Int,
    pub d_x: Int,
    pub d_y: Int,
    pub d_z: Int,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassGroup {
    pub free_rank: usize,
    /// Invariant factors greater than one.
    pub torsion: Vec<Int>,
}

impl fmt::Display for ClassGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<alloc::string::String> =
            (0..self.free_rank).map(|_| "Z".into()).collect();
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" + "))
    }
}

/// Degrees of the line bundles `O(-j(pairing + 1))`, `j = 2, ..., n+1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtProfile {
    pub degrees: Vec<Int>,
}

impl ExtProfile {
    /// Whether every summand is negative, i.e. the bundle has no sections.
    pub fn all_negative(&self) -> bool {
        self.degrees.iter().all(|d| d < &Int::zero())
    }
}

pub fn ext_profile(n: i64, pairing: &Int) -> Result<ExtProfile> {
    if n < 1 {
        return Err(Error::InvalidN(n));
    }
    let base = pairing + 1u32;
    Ok(ExtProfile {
        degrees: (2..=n + 1).map(|j| -(Int::from(j) * &base)).collect(),
    })
}

fn internal(what: &str) -> Error {
    Error::Internal(format!("normal form: {what}"))
}

impl NormalForm {
    pub fn of(pair: &AdjacentAnPair) -> Result<Self> {
        let step = (&pair.rho_v - &pair.rho_u).primitive()?;
        let rho_hat = &pair.rho_u + &step;
        let basis = IntMatrix::from_columns(&[&pair.rho_u, &rho_hat, &pair.rho1]);
        let u = basis
            .inverse_unimodular()
            .map_err(|_| internal("basis (rho_u, rho_hat, rho1) is not unimodular"))?;

        let image0 = u.apply(&pair.rho0)?;
        let [a, b, c] = image0.coords;
        if c != Int::from(-1) {
            return Err(internal("rho0 is not at third coordinate -1"));
        }
        let n = pair.n;
        let expected_v = LatticePoint::from([-n, n + 1, 0]);
        if u.apply(&pair.rho_v)? != expected_v {
            return Err(internal("rho_v does not map to (-n, n+1, 0)"));
        }
        if u.apply(&pair.rho_u)? != LatticePoint::from([1, 0, 0])
            || u.apply(&pair.rho1)? != LatticePoint::from([0, 0, 1])
        {
            return Err(internal("basis vectors not mapped to the standard basis"));
        }
        let nf = Self::from_coefficients_with(u, a, b, n)?;
        if nf.pairing() != pair.pairing {
            return Err(internal("a + b - 1 differs from the pairing"));
        }
        Ok(nf)
    }

    /// The normal form of the pair already in normal coordinates
    /// (`u` is the identity).
    pub fn from_coefficients(a: Int, b: Int, n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidN(n));
        }
        Self::from_coefficients_with(IntMatrix::identity(3), a, b, n)
    }

    fn from_coefficients_with(u: IntMatrix, a: Int, b: Int, n: i64) -> Result<Self> {
        let n_plus_1 = Int::from(n + 1);
        let r = n_plus_1.gcd(&b);
        let p = &b / &r;
        let q = &n_plus_1 / &r;
        let (g, s, t) = gcd_ext(&p, &q);
        if !g.is_one() {
            return Err(internal("p and q are not coprime"));
        }
        let a_plus_b = &a + &b;
        let d_x = &b - &n_plus_1 * &a_plus_b;
        let d_y = -&b;
        let d_z = -a_plus_b;
        let nf = NormalForm {
            u,
            a,
            b,
            n,
            r,
            p,
            q,
            s,
            t,
            d_x,
            d_y,
            d_z,
        };
        nf.check_invariants()?;
        Ok(nf)
    }

    fn check_invariants(&self) -> Result<()> {
        let n_plus_1 = Int::from(self.n + 1);
        if &self.d_x + &self.d_y != &n_plus_1 * &self.d_z {
            return Err(internal("d_x + d_y != (n+1) d_z"));
        }
        if &self.r * &self.p != self.b || &self.r * &self.q != n_plus_1 {
            return Err(internal("r, p, q do not factor b and n+1"));
        }
        if &self.s * &self.p + &self.t * &self.q != Int::one() {
            return Err(internal("Bezout coefficients"));
        }
        Ok(())
    }

    /// `<w1, rho0> = a + b - 1`, with `w1 = (1,1,1)` in normal coordinates.
    pub fn pairing(&self) -> Int {
        &self.a + &self.b - 1u32
    }

    /// Columns `rho0, rho1, rho_u, rho_v` in normal coordinates.
    pub fn ray_map(&self) -> IntMatrix {
        let n = Int::from(self.n);
        let entries = vec![
            self.a.clone(),
            Int::zero(),
            Int::one(),
            -&n,
            self.b.clone(),
            Int::zero(),
            Int::zero(),
            &n + 1u32,
            Int::from(-1),
            Int::one(),
            Int::zero(),
            Int::zero(),
        ];
        IntMatrix::from_entries(3, 4, entries).expect("3x4")
    }

    /// Primitive generator `(q, q, -np - aq, -p)` of the kernel of the ray map.
    pub fn ray_map_kernel(&self) -> [Int; 4] {
        let n = Int::from(self.n);
        [
            self.q.clone(),
            self.q.clone(),
            -(&n * &self.p) - &self.a * &self.q,
            -self.p.clone(),
        ]
    }

    /// `Z ⊕ Z/r`, cross-checked against the cokernel of the transposed ray map.
    pub fn class_group(&self) -> Result<ClassGroup> {
        let torsion = if self.r.is_one() {
            Vec::new()
        } else {
            vec![self.r.clone()]
        };
        let snf = smith_normal_form(&self.ray_map().transpose());
        let (free_rank, snf_torsion) = snf.cokernel();
        if free_rank != 1 || snf_torsion != torsion {
            return Err(internal("class group disagrees with the Smith normal form"));
        }
        Ok(ClassGroup { free_rank, torsion })
    }

    pub fn bundle_degrees(&self) -> (Int, Int, Int) {
        (self.d_x.clone(), self.d_y.clone(), self.d_z.clone())
    }

    pub fn ext_profile(&self) -> ExtProfile {
        ext_profile(self.n, &self.pairing()).expect("n >= 1")
    }

    /// Checks that the kernel vector is primitive and annihilated by the ray map.
    pub fn kernel_is_valid(&self) -> bool {
        let k = self.ray_map_kernel();
        let image = self.ray_map().mul_vec(&k).expect("4 columns");
        image.iter().all(Zero::is_zero) && gcd_all(&k).is_one()
    }
}
