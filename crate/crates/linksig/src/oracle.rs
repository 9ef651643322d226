//! Independent brute-force verification through Seifert matrices.
//!
//! Positive braid closures carry an explicit Seifert surface (one disk
//! per strand, one twisted band per letter); the Seifert form on its
//! standard cycle basis gives a matrix `V`, the definitional signature
//! `sign((1-z)V + (1-conj z)V^T)` at unit-circle points, and the exact
//! integer polynomial `det(V - t V^T)` to compare against the factored
//! Alexander polynomial.  Nothing here shares code with the closed
//! formulas it is used to check.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};

use crate::exact::Angle;
use crate::{Error, Result};

/// Relative zero threshold for eigenvalue classification.
pub const EIGEN_TOL: f64 = 1e-9;

/// A positive braid word: letters are 1-based generator indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<usize>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<usize>) -> Result<Self> {
        if strands < 1 || letters.iter().any(|&l| l < 1 || l >= strands) {
            return Err(Error::ComponentIndex(strands));
        }
        Ok(BraidWord { strands, letters })
    }

    /// Number of components of the closure (cycles of the permutation).
    pub fn closure_components(&self) -> usize {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            perm.swap(l - 1, l);
        }
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                at = perm[at];
            }
        }
        cycles
    }
}

/// The standard positive-braid word for the torus link `T(p,q)`:
/// `(s_1 ... s_{p-1})^q` on `p` strands.
pub fn torus_braid(p: usize, q: usize) -> BraidWord {
    assert!(p >= 2 && q >= 1, "torus braid needs p >= 2, q >= 1");
    let mut letters = Vec::with_capacity((p - 1) * q);
    for _ in 0..q {
        letters.extend(1..p);
    }
    BraidWord {
        strands: p,
        letters,
    }
}

/// The positive half twist on `strands` strands:
/// `(s_1)(s_2 s_1)(s_3 s_2 s_1) ...`.
pub fn half_twist(strands: usize) -> BraidWord {
    assert!(strands >= 2);
    let mut letters = Vec::with_capacity(strands * (strands - 1) / 2);
    for k in 1..strands {
        for i in (1..=k).rev() {
            letters.push(i);
        }
    }
    BraidWord { strands, letters }
}

/// `Delta^n` on `strands` strands.
pub fn half_twist_power(strands: usize, n: usize) -> BraidWord {
    let delta = half_twist(strands);
    let mut letters = Vec::with_capacity(delta.letters.len() * n);
    for _ in 0..n {
        letters.extend_from_slice(&delta.letters);
    }
    BraidWord { strands, letters }
}

/// Integer Seifert matrix on the standard cycle basis of the braid-closure
/// fiber surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertMatrix {
    entries: Vec<Vec<i64>>,
}

impl SeifertMatrix {
    pub fn from_rows(entries: Vec<Vec<i64>>) -> Self {
        for row in &entries {
            assert_eq!(row.len(), entries.len(), "matrix must be square");
        }
        SeifertMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }
}

/// Seifert matrix of a positive braid closure.
///
/// Basis: for each generator index, one cycle per consecutive pair of
/// occurrences.  Diagonal entries are -1; a shared band between two
/// cycles on the same index contributes 1 above the diagonal; cycles on
/// adjacent indices contribute when their band positions interleave.
/// The sign pattern is pinned by the Alexander cross-check, not by
/// construction fiat.
pub fn seifert_matrix(braid: &BraidWord) -> Result<SeifertMatrix> {
    for g in 1..braid.strands {
        if !braid.letters.contains(&g) {
            return Err(Error::DisconnectedBraid {
                missing_generator: g,
            });
        }
    }
    // cycles: (generator index, first band position, second band position)
    let mut cycles: Vec<(usize, usize, usize)> = Vec::new();
    for g in 1..braid.strands {
        let positions: Vec<usize> = braid
            .letters
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == g)
            .map(|(p, _)| p)
            .collect();
        for w in positions.windows(2) {
            cycles.push((g, w[0], w[1]));
        }
    }
    let n = cycles.len();
    debug_assert_eq!(
        n,
        braid.letters.len() + 1 - braid.strands,
        "first homology rank of the fiber surface"
    );
    let mut v = vec![vec![0i64; n]; n];
    for (a, &(gi, r, rp)) in cycles.iter().enumerate() {
        v[a][a] = -1;
        for (b, &(gj, u, up)) in cycles.iter().enumerate() {
            if a == b {
                continue;
            }
            if gi == gj && rp == u {
                v[a][b] = 1;
            } else if gj == gi + 1 {
                if r < u && u < rp && rp < up {
                    v[a][b] = 1;
                    v[b][a] = 0;
                } else if u < r && r < up && up < rp {
                    v[a][b] = -1;
                    v[b][a] = 0;
                }
            }
        }
    }
    Ok(SeifertMatrix { entries: v })
}

/// Exact dense coefficients of `det(V - t V^T)`, ascending in `t`,
/// computed by modular evaluation-interpolation with CRT reconstruction.
pub fn alexander_from_matrix(v: &SeifertMatrix) -> Vec<BigInt> {
    let n = v.size();
    if n == 0 {
        return vec![BigInt::one()];
    }
    // coefficient bound: n! * 2^n covers the total coefficient mass
    let mut bound_bits = n as u64 + 2;
    for i in 1..=n as u64 {
        bound_bits += 64 - i.leading_zeros() as u64;
    }
    let primes = primes_above_62_bits((bound_bits / 61 + 2) as usize);
    let degree = n;
    let points: Vec<u64> = (0..=degree as u64).collect();
    let mut residues: Vec<Vec<u64>> = Vec::with_capacity(primes.len());
    for &p in &primes {
        let dets: Vec<u64> = points
            .iter()
            .map(|&t| {
                let mut m = vec![vec![0u64; n]; n];
                for (i, row) in m.iter_mut().enumerate() {
                    for (j, slot) in row.iter_mut().enumerate() {
                        let val = v.entry(i, j) as i128 - t as i128 * v.entry(j, i) as i128;
                        *slot = val.rem_euclid(p as i128) as u64;
                    }
                }
                det_mod(m, p)
            })
            .collect();
        residues.push(interpolate_mod(&points, &dets, p));
    }
    // CRT per coefficient, centered lift
    let modulus: BigInt = primes.iter().map(|&p| BigInt::from(p)).product();
    let half = &modulus / 2;
    (0..=degree)
        .map(|c| {
            let mut x = BigInt::zero();
            let mut m_acc = BigInt::one();
            for (pi, &p) in primes.iter().enumerate() {
                let p_big = BigInt::from(p);
                let r = BigInt::from(residues[pi][c]);
                let inv = mod_inverse(&m_acc, &p_big);
                let t = ((&r - &x) * inv).mod_floor(&p_big);
                x += &m_acc * t;
                m_acc *= p_big;
            }
            if x > half {
                x -= &modulus;
            }
            x
        })
        .collect()
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> BigInt {
    let e = a.mod_floor(p).extended_gcd(p);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(p)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn primes_above_62_bits(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate = (1u64 << 62) + 1;
    while out.len() < count {
        if is_prime_u64(candidate) {
            out.push(candidate);
        }
        candidate += 2;
    }
    out
}

fn det_mod(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mut det = 1u64;
    for col in 0..n {
        let Some(pr) = (col..n).find(|&r| m[r][col] != 0) else {
            return 0;
        };
        if pr != col {
            m.swap(pr, col);
            det = (p - det) % p;
        }
        let pivot = m[col][col];
        det = mul_mod(det, pivot, p);
        let inv = pow_mod(pivot, p - 2, p);
        for row in col + 1..n {
            if m[row][col] == 0 {
                continue;
            }
            let factor = mul_mod(m[row][col], inv, p);
            for c in col..n {
                let sub = mul_mod(factor, m[col][c], p);
                m[row][c] = (m[row][c] + p - sub) % p;
            }
        }
    }
    det
}

/// Lagrange interpolation of polynomial coefficients modulo `p`.
fn interpolate_mod(points: &[u64], values: &[u64], p: u64) -> Vec<u64> {
    let n = points.len();
    let mut coeffs = vec![0u64; n];
    // full = prod (x - x_i), built incrementally
    let mut full = vec![0u64; n + 1];
    full[0] = 1;
    let mut deg = 0usize;
    for &x in points {
        let neg_x = (p - x % p) % p;
        let mut next = vec![0u64; n + 1];
        for c in 0..=deg {
            next[c + 1] = (next[c + 1] + full[c]) % p;
            next[c] = (next[c] + mul_mod(full[c], neg_x, p)) % p;
        }
        full = next;
        deg += 1;
    }
    for (i, (&xi, &yi)) in points.iter().zip(values).enumerate() {
        // quotient = full / (x - xi) by synthetic division from the top
        let mut q = vec![0u64; n];
        let mut carry = 0u64;
        for c in (0..n).rev() {
            let coef = (full[c + 1] + carry) % p;
            q[c] = coef;
            carry = mul_mod(coef, xi % p, p);
        }
        let mut denom = 1u64;
        for (j, &xj) in points.iter().enumerate() {
            if j != i {
                let diff = (xi as i128 - xj as i128).rem_euclid(p as i128) as u64;
                denom = mul_mod(denom, diff, p);
            }
        }
        let scale = mul_mod(yi % p, pow_mod(denom, p - 2, p), p);
        for c in 0..n {
            coeffs[c] = (coeffs[c] + mul_mod(q[c], scale, p)) % p;
        }
    }
    coeffs
}

/// Signature and nullity of `(1-z)V + (1-conj z)V^T` at `z = e^{2 pi i
/// theta}` by eigenvalue classification of the real embedding.
///
/// Eigenvalues below `EIGEN_TOL/10` of the matrix norm count as zero;
/// anything inside the band `[EIGEN_TOL/10, EIGEN_TOL]` is refused so a
/// borderline case can never silently decide.  Callers cross-check the
/// nullity against exact Alexander multiplicities.
pub fn lt_from_matrix(v: &SeifertMatrix, theta: &Angle) -> Result<(i64, i64)> {
    if theta.is_zero() {
        return Err(Error::ThetaZero);
    }
    let n = v.size();
    if n == 0 {
        return Ok((0, 0));
    }
    let num = theta.value().numer().to_f64().expect("angle numerator");
    let den = theta.value().denom().to_f64().expect("angle denominator");
    let phi = 2.0 * std::f64::consts::PI * (num / den);
    let (sin, cos) = phi.sin_cos();
    // H = A + iB with A = (1-cos)(V + V^T), B = sin (V^T - V)
    let mut a = DMatrix::<f64>::zeros(n, n);
    let mut b = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let vij = v.entry(i, j) as f64;
            let vji = v.entry(j, i) as f64;
            a[(i, j)] = (1.0 - cos) * (vij + vji);
            b[(i, j)] = sin * (vji - vij);
        }
    }
    let mut norm: f64 = 0.0;
    for i in 0..n {
        let mut row = 0.0;
        for j in 0..n {
            row += (a[(i, j)].powi(2) + b[(i, j)].powi(2)).sqrt();
        }
        norm = norm.max(row);
    }
    if norm == 0.0 {
        return Ok((0, n as i64));
    }
    // real embedding [[A, -B], [B, A]] doubles every eigenvalue
    let mut m = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = a[(i, j)];
            m[(i, j + n)] = -b[(i, j)];
            m[(i + n, j)] = b[(i, j)];
            m[(i + n, j + n)] = a[(i, j)];
        }
    }
    let eigen = m.symmetric_eigen();
    let mut pos = 0i64;
    let mut neg = 0i64;
    let mut zero = 0i64;
    for &lambda in eigen.eigenvalues.iter() {
        let rel = lambda.abs() / norm;
        if rel >= EIGEN_TOL / 10.0 && rel <= EIGEN_TOL {
            return Err(Error::IndeterminateEigenvalue { ratio: rel });
        }
        if rel < EIGEN_TOL {
            zero += 1;
        } else if lambda > 0.0 {
            pos += 1;
        } else {
            neg += 1;
        }
    }
    debug_assert!(pos % 2 == 0 && neg % 2 == 0 && zero % 2 == 0);
    Ok(((pos - neg) / 2, zero / 2))
}
