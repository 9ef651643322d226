//! Exact lattice-point counting in open parallelograms.
//!
//! `Pi(a,b,c,d)` is the open span of `(a,b)` and `(c,d)`; the linear
//! functional `u` takes the value 1 on both spanning vectors, so `0 < u < 2`
//! on the interior.  For an angle `theta` the interior points split into
//! four classes by comparing `u` with `theta` and `theta + 1`; those counts
//! are the whole content of the closed torus-link signature formula.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exact::{Angle, Rational};
use crate::{Error, Result};

/// The open parallelogram spanned by `(a,b)` and `(c,d)`, `ad - bc > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parallelogram {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

/// The four point classes at a given `theta`.
///
/// `n_minus` counts `theta < u < theta + 1`, `n_plus` the complement,
/// `m_plus` the level set `u = theta` and `m_minus` the level set
/// `u = theta + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize)]
pub struct LatticeCounts {
    pub n_minus: u64,
    pub n_plus: u64,
    pub m_minus: u64,
    pub m_plus: u64,
}

impl LatticeCounts {
    pub fn total(&self) -> u64 {
        self.n_minus + self.n_plus + self.m_minus + self.m_plus
    }
}

impl Parallelogram {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::from_bigints(a.into(), b.into(), c.into(), d.into())
    }

    pub fn from_bigints(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        let det = &a * &d - &b * &c;
        if !det.is_positive() {
            return Err(Error::Parse {
                offset: 0,
                message: format!("parallelogram ({a},{b},{c},{d}) has non-positive determinant"),
            });
        }
        Ok(Parallelogram { a, b, c, d })
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    /// The linear functional with `u(a,b) = u(c,d) = 1`.
    pub fn u_value(&self, x: &BigInt, y: &BigInt) -> Rational {
        let num = (&self.d - &self.b) * x + (&self.a - &self.c) * y;
        Rational::new(num, self.det())
    }

    /// Integer points strictly inside the open parallelogram.
    ///
    /// Membership is decided exactly: `(x,y) = s(a,b) + t(c,d)` with
    /// `0 < s < 1` and `0 < t < 1`, solved in rationals.  The bounding-box
    /// scan is O(area), which is all the desk-scale inputs need.
    pub fn interior_points(&self) -> Vec<(BigInt, BigInt)> {
        let corners_x = [
            BigInt::zero(),
            self.a.clone(),
            self.c.clone(),
            &self.a + &self.c,
        ];
        let corners_y = [
            BigInt::zero(),
            self.b.clone(),
            self.d.clone(),
            &self.b + &self.d,
        ];
        let xmin = corners_x.iter().min().unwrap().clone();
        let xmax = corners_x.iter().max().unwrap().clone();
        let ymin = corners_y.iter().min().unwrap().clone();
        let ymax = corners_y.iter().max().unwrap().clone();

        let det = self.det();
        let mut points = Vec::new();
        let mut x = xmin;
        while x <= xmax {
            let mut y = ymin.clone();
            while y <= ymax {
                // s*det = d*x - c*y,  t*det = a*y - b*x
                let s_num = &self.d * &x - &self.c * &y;
                let t_num = &self.a * &y - &self.b * &x;
                if s_num.is_positive() && s_num < det && t_num.is_positive() && t_num < det {
                    points.push((x.clone(), y.clone()));
                }
                y += 1;
            }
            x += 1;
        }
        points
    }

    /// `u`-values of all interior points, ascending.
    pub fn interior_u_values(&self) -> Vec<Rational> {
        let mut v: Vec<Rational> = self
            .interior_points()
            .iter()
            .map(|(x, y)| self.u_value(x, y))
            .collect();
        v.sort();
        v
    }

    /// The four counts at `theta`, which must lie strictly in `(0,1)`.
    pub fn count(&self, theta: &Angle) -> Result<LatticeCounts> {
        if theta.is_zero() {
            return Err(Error::ThetaZero);
        }
        Ok(counts_from_u_values(
            &self.interior_u_values(),
            theta.value(),
        ))
    }

    /// Whether the two intersection points of `{u = level}` with the
    /// boundary are lattice points, for `0 <= level <= 2`.
    pub fn boundary_lattice_endpoints(&self, level: &Rational) -> (bool, bool) {
        // For level <= 1 the segment ends on the edges through the origin:
        // A = level*(a,b), B = level*(c,d).  For level >= 1 it ends on the
        // far edges: A = (a,b) + (level-1)(c,d), B = (c,d) + (level-1)(a,b).
        let lattice = |x: &Rational, y: &Rational| x.is_integer() && y.is_integer();
        let to_r = |n: &BigInt| Rational::from_integer(n.clone());
        if level <= &Rational::one() {
            let ax = level * to_r(&self.a);
            let ay = level * to_r(&self.b);
            let bx = level * to_r(&self.c);
            let by = level * to_r(&self.d);
            (lattice(&ax, &ay), lattice(&bx, &by))
        } else {
            let s = level - Rational::one();
            let ax = to_r(&self.a) + &s * to_r(&self.c);
            let ay = to_r(&self.b) + &s * to_r(&self.d);
            let bx = to_r(&self.c) + &s * to_r(&self.a);
            let by = to_r(&self.d) + &s * to_r(&self.b);
            (lattice(&ax, &ay), lattice(&bx, &by))
        }
    }

    /// The boundary identity behind the nullity formula: the `u = theta`
    /// and `u = theta + 1` sections have equally many lattice endpoints.
    pub fn boundary_balanced(&self, theta: &Angle) -> bool {
        let (a0, b0) = self.boundary_lattice_endpoints(theta.value());
        let (a1, b1) = self.boundary_lattice_endpoints(&(theta.value() + Rational::one()));
        (a0 as u8 + b0 as u8) == (a1 as u8 + b1 as u8)
    }
}

/// Classifies a sorted (or not) list of `u`-values against `theta`.
pub fn counts_from_u_values(u_values: &[Rational], theta: &Rational) -> LatticeCounts {
    let theta1 = theta + BigRational::one();
    let mut counts = LatticeCounts::default();
    for u in u_values {
        if u == theta {
            counts.m_plus += 1;
        } else if u == &theta1 {
            counts.m_minus += 1;
        } else if u > theta && u < &theta1 {
            counts.n_minus += 1;
        } else {
            counts.n_plus += 1;
        }
    }
    counts
}

/// All `theta in (0,1)` at which some interior point has `u = theta` or
/// `u = theta + 1`, i.e. the candidate jump locations of the counts.
pub fn count_breakpoints(par: &Parallelogram) -> Vec<Rational> {
    let mut set = std::collections::BTreeSet::new();
    for u in par.interior_u_values() {
        for cand in [u.clone() - BigRational::one(), u] {
            if cand.is_positive() && cand < BigRational::one() {
                set.insert(cand);
            }
        }
    }
    set.into_iter().collect()
}

/// Least common multiple helper used when assembling exact sweep grids.
pub fn lcm_bigint(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}
