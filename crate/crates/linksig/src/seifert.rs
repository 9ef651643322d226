//! Seifert links and their signature formulas.
//!
//! A Seifert link is a union of fibers in a Seifert fibered homology
//! sphere, described by pairwise coprime positive weights with the first
//! `k` fibers retained as link components.  The equivariant signatures are
//! sawtooth sums over the spectrum `{kappa/m}`, the Levine-Tristram
//! signature accumulates them, the Alexander polynomial comes factored
//! into cyclotomic-type binomials, and the multivariate signature reduces
//! to the diagonal through the weighted-average angle.
//!
//! Orientation data (a reversed component, or the reversed ambient
//! orientation) is stored on the spec and folded away at evaluation time:
//! a reversed component inverts its angle, a reversed ambient negates the
//! signature.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

use crate::alexander::FactoredPoly;
use crate::exact::{sawtooth, Angle, Rational};
use crate::{Error, Result, SignatureTriple};

/// Signed, ordered Seifert weights with a retained/removed split and
/// per-component orientation flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertLinkSpec {
    ambient: i8,
    weights: Vec<BigInt>,
    retained: usize,
    reversed: Vec<bool>,
}

/// The derived quantities entering the sawtooth formula: `a'_j`, the
/// spectrum denominator `m`, the congruence solutions `b_j` and the
/// integers `s_j = (m_j - b_j m)/a_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertDerived {
    pub aprime: Vec<BigInt>,
    pub m: BigInt,
    pub b: Vec<BigInt>,
    pub s: Vec<Rational>,
}

fn check_weights(weights: &[BigInt]) -> Result<()> {
    for w in weights {
        if w.is_zero() {
            return Err(Error::ZeroWeight);
        }
        debug_assert!(w.is_positive());
    }
    for i in 0..weights.len() {
        for j in i + 1..weights.len() {
            if weights[i] > BigInt::one() && weights[j] > BigInt::one() {
                let g = weights[i].gcd(&weights[j]);
                if !g.is_one() {
                    return Err(Error::NonCoprimeWeights(
                        weights[i].to_u64().unwrap_or(u64::MAX),
                        weights[j].to_u64().unwrap_or(u64::MAX),
                    ));
                }
            }
        }
    }
    Ok(())
}

impl SeifertLinkSpec {
    /// Builds a spec from positive weights, explicit orientation marks on
    /// the retained components, and an ambient orientation sign.
    pub fn new(
        ambient_positive: bool,
        retained: Vec<(u64, bool)>,
        unretained: Vec<u64>,
    ) -> Result<Self> {
        if retained.is_empty() {
            return Err(Error::NoRetainedComponents);
        }
        let k = retained.len();
        let mut weights: Vec<BigInt> = Vec::with_capacity(k + unretained.len());
        let mut reversed = Vec::with_capacity(k);
        for (w, rev) in retained {
            weights.push(BigInt::from(w));
            reversed.push(rev);
        }
        for w in unretained {
            weights.push(BigInt::from(w));
        }
        check_weights(&weights)?;
        Ok(SeifertLinkSpec {
            ambient: if ambient_positive { 1 } else { -1 },
            weights,
            retained: k,
            reversed,
        })
    }

    /// Builds from signed weights.  A negative entry flips the ambient
    /// orientation and, if the entry is retained, reverses that component.
    pub fn from_signed(
        ambient_positive: bool,
        retained: &[i64],
        unretained: &[i64],
    ) -> Result<Self> {
        let mut ambient = ambient_positive;
        let ret = retained
            .iter()
            .map(|&w| {
                if w < 0 {
                    ambient = !ambient;
                    (w.unsigned_abs(), true)
                } else {
                    (w as u64, false)
                }
            })
            .collect();
        let unret = unretained
            .iter()
            .map(|&w| {
                if w < 0 {
                    ambient = !ambient;
                }
                w.unsigned_abs()
            })
            .collect();
        SeifertLinkSpec::new(ambient, ret, unret)
    }

    /// Convenience constructor for plain positive data.
    pub fn positive(retained: &[u64], unretained: &[u64]) -> Result<Self> {
        SeifertLinkSpec::new(
            true,
            retained.iter().map(|&w| (w, false)).collect(),
            unretained.to_vec(),
        )
    }

    pub fn k(&self) -> usize {
        self.retained
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[BigInt] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> &BigInt {
        &self.weights[i]
    }

    pub fn is_reversed(&self, i: usize) -> bool {
        self.reversed[i]
    }

    pub fn ambient_sign(&self) -> i64 {
        self.ambient as i64
    }

    /// No reversed components and positively oriented ambient sphere.
    pub fn is_positive(&self) -> bool {
        self.ambient == 1 && self.reversed.iter().all(|r| !r)
    }

    /// Moves retained component `i` to the unretained side (removal).
    pub fn remove_retained(&self, i: usize) -> Result<SeifertLinkSpec> {
        if i >= self.retained {
            return Err(Error::ComponentIndex(i));
        }
        if self.retained == 1 {
            return Err(Error::NoRetainedComponents);
        }
        let mut weights = self.weights.clone();
        let w = weights.remove(i);
        weights.push(w);
        let mut reversed = self.reversed.clone();
        reversed.remove(i);
        Ok(SeifertLinkSpec {
            ambient: self.ambient,
            weights,
            retained: self.retained - 1,
            reversed,
        })
    }

    /// Flips the orientation mark of retained component `i`.
    pub fn reverse_component(&self, i: usize) -> Result<SeifertLinkSpec> {
        if i >= self.retained {
            return Err(Error::ComponentIndex(i));
        }
        let mut out = self.clone();
        out.reversed[i] = !out.reversed[i];
        Ok(out)
    }

    /// Drops unretained weight-1 fibers; they change neither the manifold
    /// nor any invariant computed here.
    pub fn cleaned(&self) -> SeifertLinkSpec {
        let mut weights: Vec<BigInt> = self.weights[..self.retained].to_vec();
        weights.extend(
            self.weights[self.retained..]
                .iter()
                .filter(|w| !w.is_one())
                .cloned(),
        );
        SeifertLinkSpec {
            ambient: self.ambient,
            weights,
            retained: self.retained,
            reversed: self.reversed.clone(),
        }
    }

    /// The `a'_j`, `m`, `b_j`, `s_j` of the sawtooth formula, computed on
    /// the underlying positive fibration (orientation flags play no role).
    pub fn derive(&self) -> SeifertDerived {
        let product: BigInt = self.weights.iter().product();
        let aprime: Vec<BigInt> = self.weights.iter().map(|a| &product / a).collect();
        let m: BigInt = aprime[..self.retained].iter().sum();
        let b: Vec<BigInt> = self
            .weights
            .iter()
            .zip(&aprime)
            .map(|(a, ap)| {
                if a.is_one() {
                    BigInt::zero()
                } else {
                    // least non-negative b with b * a' = 1 mod a
                    let e = ap.extended_gcd(a);
                    debug_assert!(e.gcd.is_one());
                    e.x.mod_floor(a)
                }
            })
            .collect();
        let s: Vec<Rational> = (0..self.n())
            .map(|j| {
                let mj = if j < self.retained {
                    BigInt::one()
                } else {
                    BigInt::zero()
                };
                Rational::new(mj - &b[j] * &m, self.weights[j].clone())
            })
            .collect();
        debug_assert!(s.iter().all(Rational::is_integer));
        SeifertDerived { aprime, m, b, s }
    }

    /// Linking number of retained components `i` and `j`: the product of
    /// the omitted weights, signed by orientation marks and ambient sign.
    pub fn linking_number(&self, i: usize, j: usize) -> Result<BigInt> {
        if i == j || i >= self.retained || j >= self.retained {
            return Err(Error::ComponentIndex(i.max(j)));
        }
        let mut lk: BigInt = self
            .weights
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != i && *l != j)
            .map(|(_, w)| w)
            .product();
        if self.reversed[i] {
            lk = -lk;
        }
        if self.reversed[j] {
            lk = -lk;
        }
        Ok(lk * BigInt::from(self.ambient))
    }

    fn linking_number_ok(&self, i: usize, j: usize) -> BigInt {
        self.linking_number(i, j).expect("valid indices")
    }

    /// Sum of all pairwise linking numbers of retained components.
    pub fn total_linking(&self) -> BigInt {
        let mut total = BigInt::zero();
        for i in 0..self.retained {
            for j in i + 1..self.retained {
                total += self.linking_number_ok(i, j);
            }
        }
        total
    }

    /// The equivariant signature at `e^{2 pi i theta}` for the underlying
    /// positive link: `-2 sum_j ((s_j theta))` on the spectrum, else 0.
    pub fn sigma_minus(&self, theta: &Angle) -> i64 {
        sigma_minus_from(&self.derive(), theta)
    }

    /// Levine-Tristram signature, equivariant signature and nullity at
    /// `e^{2 pi i theta}`, `0 < theta < 1`, for a positive spec.
    pub fn levine_tristram(&self, theta: &Angle) -> Result<SignatureTriple> {
        if theta.is_zero() {
            return Err(Error::ThetaZero);
        }
        if !self.is_positive() {
            return Err(Error::PositiveSpecRequired);
        }
        let derived = self.derive();
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let t = theta.value();
        // sigma(theta) = sigma(1 - theta); the sum form is stated for
        // theta <= 1/2 and extended by conjugation symmetry.
        let t_eff = if t > &half {
            Rational::one() - t
        } else {
            t.clone()
        };
        let mut below = 0i64;
        let mut kappa = BigInt::one();
        let threshold = &t_eff * &derived.m;
        while Rational::from_integer(kappa.clone()) < threshold {
            below += sigma_minus_from(
                &derived,
                &Angle::new(Rational::new(kappa.clone(), derived.m.clone())).unwrap(),
            );
            kappa += 1;
        }
        let boundary = sigma_minus_from(&derived, &Angle::new(t_eff).unwrap());
        let sigma = 1 - self.retained as i64 + boundary + 2 * below;
        let nullity = self.alexander_one_var().multiplicity_at(std::slice::from_ref(theta));
        Ok(SignatureTriple {
            sigma_minus: self.sigma_minus(theta),
            sigma,
            nullity,
        })
    }

    /// All spectrum points `kappa/m` with their signature triples, in one
    /// cumulative pass.  Between consecutive spectrum points the
    /// Levine-Tristram signature is constant.
    pub fn spectrum(&self) -> Vec<SpectrumPoint> {
        let derived = self.derive();
        let m = derived
            .m
            .to_u64()
            .expect("spectrum denominator exceeds u64");
        if m <= 1 {
            return Vec::new();
        }
        let one_var = self.alexander_one_var();
        let sm: Vec<i64> = (1..m)
            .map(|kappa| {
                sigma_minus_from(
                    &derived,
                    &Angle::new(Rational::new(kappa.into(), m.into())).unwrap(),
                )
            })
            .collect();
        let mut sigma_low = vec![0i64; (m / 2 + 1) as usize];
        let mut prefix = 0i64;
        for kappa in 1..=m / 2 {
            sigma_low[kappa as usize] =
                1 - self.retained as i64 + sm[(kappa - 1) as usize] + 2 * prefix;
            prefix += sm[(kappa - 1) as usize];
        }
        (1..m)
            .map(|kappa| {
                let theta = Rational::new(kappa.into(), m.into());
                let sigma = if kappa <= m / 2 {
                    sigma_low[kappa as usize]
                } else {
                    sigma_low[(m - kappa) as usize]
                };
                let nullity = one_var
                    .multiplicity_at(std::slice::from_ref(&Angle::new(theta.clone()).unwrap()));
                SpectrumPoint {
                    theta,
                    triple: SignatureTriple {
                        sigma_minus: sm[(kappa - 1) as usize],
                        sigma,
                        nullity,
                    },
                }
            })
            .collect()
    }

    /// Multivariate Alexander polynomial in the `k` retained variables.
    pub fn alexander(&self) -> FactoredPoly {
        let derived = self.derive();
        let k = self.retained;
        let mut factors = Vec::new();
        let numerator: Vec<BigInt> = derived.aprime[..k].to_vec();
        factors.push((numerator, self.n() as i64 - 2));
        for j in k..self.n() {
            let v: Vec<BigInt> = derived.aprime[..k]
                .iter()
                .map(|ap| ap / &self.weights[j])
                .collect();
            factors.push((v, -1));
        }
        let extra = if k == 1 { 1 } else { 0 };
        FactoredPoly::from_factors(k, factors, extra)
    }

    /// One-variable Alexander polynomial `(t - 1) * Delta(t, ..., t)`.
    pub fn alexander_one_var(&self) -> FactoredPoly {
        let mut p = self.alexander().one_variable();
        if self.retained >= 2 {
            p.extra_tminus1 += 1;
        }
        p
    }

    /// Multivariate signature and nullity at one angle per retained
    /// component.  Angle 0 removes the component; reversed components
    /// invert their angle; a reversed ambient orientation negates the
    /// signature.  The surviving assignment reduces to the diagonal angle
    /// `sum a'_j theta_j / m`.
    pub fn multivariate_eval(&self, u: &[Angle]) -> Result<(i64, i64)> {
        assert_eq!(u.len(), self.retained, "one angle per retained component");
        let effective: Vec<Angle> = u
            .iter()
            .enumerate()
            .map(|(i, a)| if self.reversed[i] { a.conj() } else { a.clone() })
            .collect();
        let survivors: Vec<usize> = (0..self.retained)
            .filter(|&i| !effective[i].is_zero())
            .collect();
        if survivors.is_empty() {
            return Ok((0, 0));
        }
        // Positive sub-spec: surviving weights stay retained, removed ones
        // join the unretained side; orientation already folded in.
        let mut weights: Vec<BigInt> = survivors.iter().map(|&i| self.weights[i].clone()).collect();
        weights.extend(
            (0..self.retained)
                .filter(|i| !survivors.contains(i))
                .map(|i| self.weights[i].clone()),
        );
        weights.extend(self.weights[self.retained..].iter().cloned());
        let sub = SeifertLinkSpec {
            ambient: 1,
            weights,
            retained: survivors.len(),
            reversed: vec![false; survivors.len()],
        };
        let derived = sub.derive();
        let weighted: Rational = survivors
            .iter()
            .enumerate()
            .map(|(pos, &i)| {
                Rational::from_integer(derived.aprime[pos].clone()) * effective[i].value()
            })
            .sum();
        let theta = Angle::new(weighted / Rational::from_integer(derived.m.clone()))
            .expect("weighted average of angles in (0,1) stays in (0,1)");
        let lt = sub.levine_tristram(&theta)?;
        let sigma = (lt.sigma
            + sub
                .total_linking()
                .to_i64()
                .expect("linking sum fits in i64"))
            * self.ambient_sign();
        Ok((sigma, lt.nullity))
    }
}

/// One spectrum point of the Levine-Tristram signature function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumPoint {
    pub theta: Rational,
    pub triple: SignatureTriple,
}

/// The sawtooth sum on already-derived data; exposed so that tests can
/// vary the congruence representatives `b_j`.
pub fn sigma_minus_from(derived: &SeifertDerived, theta: &Angle) -> i64 {
    let on_spectrum = (theta.value() * &derived.m).is_integer();
    if !on_spectrum || theta.is_zero() {
        return 0;
    }
    let total: Rational = derived.s.iter().map(|s| sawtooth(&(s * theta.value()))).sum();
    let doubled = total * Rational::from_integer(BigInt::from(-2));
    assert!(doubled.is_integer(), "equivariant signature must be an integer");
    doubled.to_integer().to_i64().expect("signature fits in i64")
}

impl fmt::Display for SeifertLinkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "seif({}; ", if self.ambient > 0 { "+" } else { "-" })?;
        for i in 0..self.retained {
            if i > 0 {
                write!(f, ",")?;
            }
            if self.reversed[i] {
                write!(f, "-")?;
            }
            write!(f, "{}", self.weights[i])?;
        }
        write!(f, " ; ")?;
        for (i, w) in self.weights[self.retained..].iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn angle(n: i64, d: i64) -> Angle {
        Angle::new(rat(n, d)).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn derive_examples() {
        let s = SeifertLinkSpec::positive(&[3, 1], &[2]).unwrap();
        let d = s.derive();
        assert_eq!(d.aprime, big(&[2, 6, 3]));
        assert_eq!(d.m, BigInt::from(8));
        assert_eq!(d.b, big(&[2, 0, 1]));
        assert_eq!(d.s, vec![rat(-5, 1), rat(1, 1), rat(-4, 1)]);

        let s = SeifertLinkSpec::positive(&[1], &[2, 3]).unwrap();
        let d = s.derive();
        assert_eq!(d.aprime, big(&[6, 3, 2]));
        assert_eq!(d.m, BigInt::from(6));
        assert_eq!(d.b, big(&[0, 1, 2]));
        assert_eq!(d.s, vec![rat(1, 1), rat(-3, 1), rat(-4, 1)]);

        let s = SeifertLinkSpec::positive(&[1], &[1]).unwrap();
        let d = s.derive();
        assert_eq!(d.aprime, big(&[1, 1]));
        assert_eq!(d.m, BigInt::from(1));
        assert_eq!(d.b, big(&[0, 0]));
        assert_eq!(d.s, vec![rat(1, 1), rat(0, 1)]);
    }

    #[test]
    fn rejects_bad_weights() {
        assert_eq!(
            SeifertLinkSpec::positive(&[0, 1], &[]),
            Err(Error::ZeroWeight)
        );
        assert!(matches!(
            SeifertLinkSpec::positive(&[2], &[4]),
            Err(Error::NonCoprimeWeights(_, _))
        ));
        assert_eq!(
            SeifertLinkSpec::positive(&[], &[2]),
            Err(Error::NoRetainedComponents)
        );
    }

    #[test]
    fn signed_weights_normalize() {
        // Seif(-3, 1; 2): ambient flips once, first component reversed.
        let s = SeifertLinkSpec::from_signed(true, &[-3, 1], &[2]).unwrap();
        assert_eq!(s.ambient_sign(), -1);
        assert!(s.is_reversed(0));
        assert!(!s.is_reversed(1));
        assert_eq!(s.weight(0), &BigInt::from(3));
        // double negation is the identity
        let t = SeifertLinkSpec::from_signed(true, &[3, 1], &[2]).unwrap();
        let mut u = SeifertLinkSpec::from_signed(true, &[-3, 1], &[2]).unwrap();
        u.ambient = -u.ambient;
        u.reversed[0] = !u.reversed[0];
        assert_eq!(t, u);
    }

    #[test]
    fn linking_examples() {
        let s = SeifertLinkSpec::positive(&[2, 3], &[]).unwrap();
        assert_eq!(s.linking_number(0, 1).unwrap(), BigInt::one());

        let s = SeifertLinkSpec::positive(&[3, 1], &[2]).unwrap();
        assert_eq!(s.linking_number(0, 1).unwrap(), BigInt::from(2));

        let s = SeifertLinkSpec::positive(&[2, 3, 5], &[]).unwrap();
        assert_eq!(s.linking_number(0, 1).unwrap(), BigInt::from(5));

        let s = SeifertLinkSpec::new(true, vec![(3, true), (1, false)], vec![2]).unwrap();
        assert_eq!(s.linking_number(0, 1).unwrap(), BigInt::from(-2));

        let s = SeifertLinkSpec::positive(&[3, 1], &[2]).unwrap();
        assert!(s.linking_number(0, 0).is_err());
        assert!(s.linking_number(0, 2).is_err());
    }

    #[test]
    fn sigma_minus_examples() {
        let s312 = SeifertLinkSpec::positive(&[3, 1], &[2]).unwrap();
        assert_eq!(s312.sigma_minus(&angle(1, 8)), -1);
        assert_eq!(s312.sigma_minus(&angle(1, 4)), 0);
        let tre = SeifertLinkSpec::positive(&[1], &[2, 3]).unwrap();
        assert_eq!(tre.sigma_minus(&angle(1, 6)), -1);
        // off-spectrum
        assert_eq!(s312.sigma_minus(&angle(1, 7)), 0);
        assert_eq!(tre.sigma_minus(&angle(2, 7)), 0);
    }

    #[test]
    fn levine_tristram_examples() {
        let tre = SeifertLinkSpec::positive(&[1], &[2, 3]).unwrap();
        let t = tre.levine_tristram(&angle(1, 2)).unwrap();
        assert_eq!((t.sigma, t.nullity), (-2, 0));
        let t = tre.levine_tristram(&angle(1, 6)).unwrap();
        assert_eq!((t.sigma, t.nullity), (-1, 1));

        let s312 = SeifertLinkSpec::positive(&[3, 1], &[2]).unwrap();
        let t = s312.levine_tristram(&angle(1, 2)).unwrap();
        assert_eq!((t.sigma, t.nullity), (-5, 0));
    }

    #[test]
    fn sigma_one_plus_bookkeeping() {
        // As theta -> 1^- the accumulated sum vanishes by oddness and the
        // signature returns to 1 - k on both sides of the mirror.
        for (ret, unret) in [(&[3u64, 1][..], &[2u64][..]), (&[1][..], &[2, 3][..]), (&[2, 3, 5][..], &[][..])] {
            let s = SeifertLinkSpec::positive(ret, unret).unwrap();
            let d = s.derive();
            let m = d.m.to_u64().unwrap();
            let all: i64 = (1..m)
                .map(|k| s.sigma_minus(&angle(k as i64, m as i64)))
                .sum();
            assert_eq!(all, 0, "total sigma_minus cancels by oddness");
            let eps = rat(1, 3 * m as i64);
            let lo = s.levine_tristram(&Angle::new(eps.clone()).unwrap()).unwrap();
            let hi = s
                .levine_tristram(&Angle::new(Rational::one() - eps).unwrap())
                .unwrap();
            assert_eq!(lo.sigma, 1 - s.k() as i64);
            assert_eq!(hi.sigma, lo.sigma);
            assert_eq!(hi.nullity, lo.nullity);
        }
    }

    #[test]
    fn alexander_examples() {
        let s312 = SeifertLinkSpec::positive(&[3, 1], &[2]).unwrap();
        let a = s312.alexander();
        assert_eq!(
            a.factors,
            vec![(big(&[1, 3]), -1), (big(&[2, 6]), 1)]
        );
        assert_eq!(a.extra_tminus1, 0);

        let tre = SeifertLinkSpec::positive(&[1], &[2, 3]).unwrap();
        let a = tre.alexander_one_var();
        assert_eq!(
            a.factors,
            vec![(big(&[2]), -1), (big(&[3]), -1), (big(&[6]), 1)]
        );
        assert_eq!(a.extra_tminus1, 1);
        assert_eq!(a.expand().dense_coeffs(), big(&[1, -1, 1]));

        let hopf = SeifertLinkSpec::positive(&[1, 1], &[]).unwrap();
        assert_eq!(hopf.alexander(), FactoredPoly::one(2));
    }

    #[test]
    fn multivariate_examples() {
        let s312 = SeifertLinkSpec::positive(&[3, 1], &[2]).unwrap();
        let (sigma, _) = s312
            .multivariate_eval(&[angle(1, 2), angle(1, 2)])
            .unwrap();
        assert_eq!(sigma, -3);

        // removal of the weight-3 fiber degenerates to the trefoil
        let tre = SeifertLinkSpec::positive(&[1], &[2, 3]).unwrap();
        for th in [angle(1, 2), angle(1, 6), angle(2, 5), angle(5, 7)] {
            let via_removal = s312
                .multivariate_eval(&[Angle::zero(), th.clone()])
                .unwrap();
            let direct = tre.levine_tristram(&th).unwrap();
            assert_eq!(via_removal, (direct.sigma, direct.nullity));
        }

        assert_eq!(
            s312.multivariate_eval(&[Angle::zero(), Angle::zero()]).unwrap(),
            (0, 0)
        );

        // both orderings of the worked pair give the same value
        let (sigma, _) = s312.multivariate_eval(&[angle(1, 2), angle(2, 5)]).unwrap();
        assert_eq!(sigma, -3);
        let (sigma, _) = s312.multivariate_eval(&[angle(2, 5), angle(1, 2)]).unwrap();
        assert_eq!(sigma, -3);
    }

    #[test]
    fn reversal_and_ambient_semantics() {
        let s312 = SeifertLinkSpec::positive(&[3, 1], &[2]).unwrap();
        let rev = s312.reverse_component(0).unwrap();
        for (t1, t2) in [((1, 2), (1, 5)), ((2, 7), (3, 8)), ((1, 3), (1, 3))] {
            let a = angle(t1.0, t1.1);
            let b = angle(t2.0, t2.1);
            let direct = rev.multivariate_eval(&[a.clone(), b.clone()]).unwrap();
            let via = s312.multivariate_eval(&[a.conj(), b.clone()]).unwrap();
            assert_eq!(direct, via);
        }
        let mirror = SeifertLinkSpec::new(false, vec![(3, false), (1, false)], vec![2]).unwrap();
        let (s1, n1) = mirror.multivariate_eval(&[angle(1, 2), angle(1, 2)]).unwrap();
        let (s2, n2) = s312.multivariate_eval(&[angle(1, 2), angle(1, 2)]).unwrap();
        assert_eq!(s1, -s2);
        assert_eq!(n1, n2);
    }

    #[test]
    fn spectrum_matches_pointwise_values() {
        for (ret, unret) in [(&[3u64, 1][..], &[2u64][..]), (&[1][..], &[2, 3][..]), (&[2, 3][..], &[5u64][..])] {
            let s = SeifertLinkSpec::positive(ret, unret).unwrap();
            for p in s.spectrum() {
                let lt = s.levine_tristram(&Angle::new(p.theta.clone()).unwrap()).unwrap();
                assert_eq!(lt, p.triple, "spectrum point {} of {}", p.theta, s);
            }
        }
    }

    #[test]
    fn display_round_trip_text() {
        let s = SeifertLinkSpec::new(true, vec![(3, false), (1, true)], vec![2]).unwrap();
        assert_eq!(s.to_string(), "seif(+; 3,-1 ; 2)");
    }
}
