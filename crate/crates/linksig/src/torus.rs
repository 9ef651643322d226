//! Closed-form signatures of cored torus links.
//!
//! `T_{m1,m2}(p,q)` is the `(p,q)` torus link together with `m1` and `m2`
//! copies of the cores of the two solid tori.  Its equivariant signature,
//! Levine-Tristram signature and nullity at `e^{2 pi i theta}` are read
//! off the four lattice counts of the open parallelogram spanned by
//! `(p+m1, m2)` and `(m1, q+m2)`.

use num_bigint::BigInt;

use crate::exact::{Angle, Rational};
use crate::lattice::{counts_from_u_values, LatticeCounts, Parallelogram};
use crate::seifert::SeifertLinkSpec;
use crate::{Error, Result, SignatureTriple};

/// A torus link with `m1`, `m2` core circles.  Full signature output
/// needs `m1, m2 in {0,1}`; the equivariant signature alone is defined
/// for any non-negative multiplicities (multilink case).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoredTorusLink {
    pub p: u64,
    pub q: u64,
    pub m1: u32,
    pub m2: u32,
}

impl CoredTorusLink {
    pub fn new(p: u64, q: u64, m1: u32, m2: u32) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::ZeroWeight);
        }
        Ok(CoredTorusLink { p, q, m1, m2 })
    }

    /// The parallelogram spanned by `(p+m1, m2)` and `(m1, q+m2)`.
    pub fn parallelogram(&self) -> Parallelogram {
        Parallelogram::new(
            self.p as i64 + self.m1 as i64,
            self.m2 as i64,
            self.m1 as i64,
            self.q as i64 + self.m2 as i64,
        )
        .expect("positive p, q give a positive determinant")
    }

    fn counts(&self, theta: &Angle) -> Result<LatticeCounts> {
        self.parallelogram().count(theta)
    }

    /// Signature triple from the lattice counts, `0 < theta < 1`.
    pub fn signature(&self, theta: &Angle) -> Result<SignatureTriple> {
        if self.m1 > 1 || self.m2 > 1 {
            return Err(Error::MultilinkFullSignature {
                m1: self.m1,
                m2: self.m2,
            });
        }
        let c = self.counts(theta)?;
        Ok(triple_from_counts(&c, self.m1, self.m2))
    }

    /// The equivariant signature alone; valid for any `m1, m2 >= 0`.
    pub fn sigma_minus(&self, theta: &Angle) -> Result<i64> {
        let c = self.counts(theta)?;
        Ok(c.m_plus as i64 - c.m_minus as i64)
    }

    /// The equivalent Seifert data: weights `(p/g, q/g, 1 x g)` with the
    /// two exceptional fibers retained according to `m1`, `m2` and all `g`
    /// generic fibers retained.
    pub fn seifert_spec(&self) -> Result<SeifertLinkSpec> {
        if self.m1 > 1 || self.m2 > 1 {
            return Err(Error::MultilinkFullSignature {
                m1: self.m1,
                m2: self.m2,
            });
        }
        let g = gcd(self.p, self.q);
        let a1 = self.p / g;
        let a2 = self.q / g;
        let mut retained = Vec::new();
        if self.m1 == 1 {
            retained.push(a1);
        }
        if self.m2 == 1 {
            retained.push(a2);
        }
        retained.extend(std::iter::repeat(1).take(g as usize));
        let mut unretained = Vec::new();
        if self.m1 == 0 {
            unretained.push(a1);
        }
        if self.m2 == 0 {
            unretained.push(a2);
        }
        SeifertLinkSpec::positive(&retained, &unretained)
    }

    /// All `u`-values of interior lattice points, for sweep-style reuse.
    pub fn u_values(&self) -> Vec<Rational> {
        self.parallelogram().interior_u_values()
    }

    /// Signature triple recomputed from precomputed `u`-values.
    pub fn signature_from_u_values(
        &self,
        u_values: &[Rational],
        theta: &Rational,
    ) -> SignatureTriple {
        let c = counts_from_u_values(u_values, theta);
        triple_from_counts(&c, self.m1, self.m2)
    }
}

fn triple_from_counts(c: &LatticeCounts, m1: u32, m2: u32) -> SignatureTriple {
    SignatureTriple {
        sigma_minus: c.m_plus as i64 - c.m_minus as i64,
        sigma: c.n_plus as i64 - c.n_minus as i64 - m1 as i64 - m2 as i64,
        nullity: (c.m_plus + c.m_minus) as i64,
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::Integer::gcd(&a, &b)
}

/// Closed form for the braid closure of the full-twist power `Delta^n` on
/// `2k+1` strings, i.e. for `T_{0,1}(nk, 2k)`: returns `(sigma, nullity)`
/// at `theta = 1/2`.
pub fn delta_braid_closure(n: u64, k: u64) -> (i64, i64) {
    let n_i = n as i64;
    let k_i = k as i64;
    let mut sigma = -n_i * k_i * (k_i + 1);
    if n % 2 == 1 && k % 2 == 1 {
        sigma += if (n - 1) / 2 % 2 == 0 { 1 } else { -1 };
    }
    let nullity = if n % 4 == 0 { 2 * k_i } else { 0 };
    (sigma, nullity)
}

/// The spectrum denominator of the equivalent Seifert data,
/// `m = m1 a2 + m2 a1 + g a1 a2`.
pub fn spectrum_denominator(link: &CoredTorusLink) -> BigInt {
    let g = gcd(link.p, link.q);
    let a1 = link.p / g;
    let a2 = link.q / g;
    BigInt::from(link.m1 as u64 * a2 + link.m2 as u64 * a1 + g * a1 * a2)
}
