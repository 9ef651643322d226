//! Alexander polynomials in cyclotomic-factored form.
//!
//! The Seifert-link Alexander polynomial is a unit times a product of
//! factors `(t^v - 1)^e` over integer exponent vectors `v`, with `e`
//! possibly negative.  Root multiplicities at unit-circle points can be
//! read off this form directly, and the factored form expands exactly to
//! a dense polynomial when a coefficient-level comparison is needed.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

use crate::exact::Angle;
use crate::Rational;

/// A product `prod (t^v - 1)^mult` times `(t_1 - 1)^extra_tminus1`.
///
/// All exponent vectors have the same length (the variable count); the
/// `(t_1 - 1)` factor is kept separate because it enters through the
/// one-variable normalization rather than through the fibration data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredPoly {
    pub vars: usize,
    /// Sorted, merged factor list: (exponent vector, multiplicity != 0).
    pub factors: Vec<(Vec<BigInt>, i64)>,
    pub extra_tminus1: i64,
}

impl FactoredPoly {
    pub fn one(vars: usize) -> Self {
        FactoredPoly {
            vars,
            factors: Vec::new(),
            extra_tminus1: 0,
        }
    }

    /// Builds from raw factors, merging duplicates and dropping zeros.
    pub fn from_factors(
        vars: usize,
        raw: impl IntoIterator<Item = (Vec<BigInt>, i64)>,
        extra_tminus1: i64,
    ) -> Self {
        let mut map: BTreeMap<Vec<BigInt>, i64> = BTreeMap::new();
        for (v, e) in raw {
            assert_eq!(v.len(), vars, "exponent vector length mismatch");
            assert!(
                v.iter().any(|x| !x.is_zero()),
                "factor exponent vector must be non-zero"
            );
            *map.entry(v).or_insert(0) += e;
        }
        map.retain(|_, e| *e != 0);
        FactoredPoly {
            vars,
            factors: map.into_iter().collect(),
            extra_tminus1,
        }
    }

    /// Substitutes `t_i = t` for all variables.
    pub fn one_variable(&self) -> FactoredPoly {
        let raw = self.factors.iter().map(|(v, e)| {
            let total: BigInt = v.iter().sum();
            (vec![total], *e)
        });
        FactoredPoly::from_factors(1, raw, self.extra_tminus1)
    }

    /// Root multiplicity at the unit-circle point `(e^{2 pi i a_1}, ...)`.
    ///
    /// Each factor `(t^v - 1)^e` contributes `e` when `<v, a>` is an
    /// integer; the `(t_1 - 1)` factor contributes only at the all-ones
    /// point.  In-scope data never yields a negative total off the
    /// discriminant, and a negative total is a caller bug.
    pub fn multiplicity_at(&self, angles: &[Angle]) -> i64 {
        assert_eq!(angles.len(), self.vars, "angle count mismatch");
        let mut total = 0i64;
        for (v, e) in &self.factors {
            let pairing: Rational = v
                .iter()
                .zip(angles)
                .map(|(c, a)| Rational::from_integer(c.clone()) * a.value())
                .sum();
            if pairing.is_integer() {
                total += e;
            }
        }
        if angles.iter().all(Angle::is_zero) {
            total += self.extra_tminus1;
        }
        assert!(total >= 0, "negative multiplicity: uncancelled denominator factor");
        total
    }

    /// Exact dense expansion (requires every net multiplicity to divide out).
    pub fn expand(&self) -> SparsePoly {
        let mut num = SparsePoly::constant(self.vars, BigInt::from(1));
        let mut den = Vec::new();
        let push = |v: Vec<BigInt>, e: i64, num: &mut SparsePoly, den: &mut Vec<Vec<BigInt>>| {
            for _ in 0..e.abs() {
                if e > 0 {
                    *num = num.mul(&SparsePoly::binomial_tv_minus_1(self.vars, &v));
                } else {
                    den.push(v.clone());
                }
            }
        };
        for (v, e) in &self.factors {
            push(v.clone(), *e, &mut num, &mut den);
        }
        if self.extra_tminus1 != 0 {
            let mut v = vec![BigInt::zero(); self.vars];
            v[0] = BigInt::from(1);
            push(v, self.extra_tminus1, &mut num, &mut den);
        }
        for v in den {
            num = num
                .div_exact(&SparsePoly::binomial_tv_minus_1(self.vars, &v))
                .expect("factored Alexander polynomial must expand to a polynomial");
        }
        num
    }
}

impl fmt::Display for FactoredPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let sep = |f: &mut fmt::Formatter<'_>, first: &mut bool| -> fmt::Result {
            if !*first {
                write!(f, "*")?;
            }
            *first = false;
            Ok(())
        };
        if self.extra_tminus1 != 0 {
            sep(f, &mut first)?;
            let var = if self.vars == 1 { "t".into() } else { "t1".to_string() };
            write!(f, "({var}-1)")?;
            if self.extra_tminus1 != 1 {
                write!(f, "^{}", self.extra_tminus1)?;
            }
        }
        for (v, e) in &self.factors {
            sep(f, &mut first)?;
            write!(f, "(")?;
            let mut any = false;
            for (i, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                any = true;
                if self.vars == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t{}", i + 1)?;
                }
                if c != &BigInt::from(1) {
                    write!(f, "^{c}")?;
                }
            }
            debug_assert!(any);
            write!(f, "-1)")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A sparse multivariate polynomial with big-integer coefficients, used
/// to expand factored forms for exact comparisons.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    pub vars: usize,
    /// monomial exponents -> coefficient, no zero coefficients stored.
    pub terms: BTreeMap<Vec<BigInt>, BigInt>,
}

impl SparsePoly {
    pub fn zero(vars: usize) -> Self {
        SparsePoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: BigInt) -> Self {
        let mut p = SparsePoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![BigInt::zero(); vars], c);
        }
        p
    }

    /// `t^v - 1`.
    pub fn binomial_tv_minus_1(vars: usize, v: &[BigInt]) -> Self {
        let mut p = SparsePoly::zero(vars);
        p.terms.insert(v.to_vec(), BigInt::from(1));
        let zero = vec![BigInt::zero(); vars];
        *p.terms.entry(zero).or_insert_with(BigInt::zero) -= 1;
        p.terms.retain(|_, c| !c.is_zero());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exp: Vec<BigInt>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            // Re-fetch key to remove: easiest is retain afterwards; but we
            // avoid the extra pass by removing inline.
        }
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars);
        let mut out = SparsePoly::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp: Vec<BigInt> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exp, c1 * c2);
            }
        }
        out
    }

    /// Exact division by `t^v - 1`-style binomials (lex leading term `t^v`).
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert_eq!(self.vars, divisor.vars);
        let lead = divisor.terms.iter().next_back()?;
        let (lead_exp, lead_coeff) = (lead.0.clone(), lead.1.clone());
        let mut rem = self.clone();
        let mut quot = SparsePoly::zero(self.vars);
        while !rem.is_zero() {
            let (rexp, rcoeff) = {
                let (e, c) = rem.terms.iter().next_back().unwrap();
                (e.clone(), c.clone())
            };
            // leading term of remainder must be divisible by t^lead_exp
            let qexp: Vec<BigInt> = rexp
                .iter()
                .zip(&lead_exp)
                .map(|(a, b)| a - b)
                .collect();
            if qexp.iter().any(|e| e.is_negative()) {
                return None;
            }
            let (qcoeff, r) = num_integer::div_rem(rcoeff.clone(), lead_coeff.clone());
            if !r.is_zero() {
                return None;
            }
            quot.add_term(qexp.clone(), qcoeff.clone());
            // rem -= q_term * divisor
            for (dexp, dcoeff) in &divisor.terms {
                let exp: Vec<BigInt> = qexp.iter().zip(dexp).map(|(a, b)| a + b).collect();
                rem.add_term(exp, -(&qcoeff * dcoeff));
            }
        }
        Some(quot)
    }

    /// Dense ascending coefficients; one-variable polynomials only.
    pub fn dense_coeffs(&self) -> Vec<BigInt> {
        assert_eq!(self.vars, 1);
        if self.terms.is_empty() {
            return vec![];
        }
        let deg: usize = self
            .terms
            .keys()
            .next_back()
            .and_then(|v| usize::try_from(&v[0]).ok())
            .expect("negative exponent in dense conversion");
        let mut out = vec![BigInt::zero(); deg + 1];
        for (e, c) in &self.terms {
            let i = usize::try_from(&e[0]).expect("negative exponent");
            out[i] = c.clone();
        }
        out
    }
}

/// Compares dense one-variable polynomials up to a unit `±t^k`.
pub fn equal_up_to_unit(p: &[BigInt], q: &[BigInt]) -> bool {
    let trim = |v: &[BigInt]| -> Vec<BigInt> {
        let lo = v.iter().position(|c| !c.is_zero());
        let hi = v.iter().rposition(|c| !c.is_zero());
        match (lo, hi) {
            (Some(l), Some(h)) => v[l..=h].to_vec(),
            _ => vec![],
        }
    };
    let mut a = trim(p);
    let b = trim(q);
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    if a.last().unwrap().sign() != b.last().unwrap().sign() {
        for c in &mut a {
            *c = -c.clone();
        }
    }
    a == b
}
