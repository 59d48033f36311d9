//! Prime-field arithmetic, projective point and hyperplane enumeration,
//! Gaussian binomials and moment-curve arcs.
//!
//! Only prime moduli are supported (no extension fields): every desk-scale
//! verification runs over q in {2,3,5}, and prime gaps at that scale are
//! small enough that the padded construction never needs a proper prime
//! power.

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("gaussian binomial needs 0 <= k <= n and q >= 2, got n={n}, k={k}, q={q}")]
    BadBinomial { n: u32, k: u32, q: u64 },
    #[error("projective dimension parameter must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("moment-curve arc needs q >= d, got q={q}, d={d}")]
    ArcTooTight { d: usize, q: u64 },
}

/// Arithmetic in `F_q` for prime `q`; elements are `0..q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    q: u64,
}

impl PrimeField {
    pub fn new(q: u64) -> Result<Self, GeometryError> {
        if !is_prime(q) {
            return Err(GeometryError::NotPrime(q));
        }
        Ok(PrimeField { q })
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.q
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.q - b % self.q) % self.q
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a % self.q * (b % self.q) % self.q
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        base %= self.q;
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat's little theorem.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.q), "zero has no inverse");
        self.pow(a, self.q - 2)
    }

    pub fn dot(&self, a: &[u64], b: &[u64]) -> u64 {
        assert_eq!(a.len(), b.len());
        a.iter()
            .zip(b)
            .fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }
}

/// A point of `PG(d-1, q)`: a length-d coordinate vector normalized so its
/// first nonzero coordinate is 1 (two scalar multiples normalize alike).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    pub coords: Vec<u64>,
}

impl ProjectivePoint {
    pub fn new(field: &PrimeField, coords: &[u64]) -> Self {
        ProjectivePoint {
            coords: normalize(field, coords),
        }
    }
}

/// A hyperplane of `PG(d-1, q)` given by its normal vector, normalized the
/// same way; a point lies on the hyperplane iff their dot product vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    pub normal: Vec<u64>,
}

impl Hyperplane {
    pub fn new(field: &PrimeField, normal: &[u64]) -> Self {
        Hyperplane {
            normal: normalize(field, normal),
        }
    }
}

fn normalize(field: &PrimeField, coords: &[u64]) -> Vec<u64> {
    let reduced: Vec<u64> = coords.iter().map(|&c| c % field.order()).collect();
    let lead = reduced
        .iter()
        .position(|&c| c != 0)
        .expect("projective coordinates must not all be zero");
    let scale = field.inv(reduced[lead]);
    reduced.iter().map(|&c| field.mul(c, scale)).collect()
}

pub fn incident(field: &PrimeField, point: &ProjectivePoint, plane: &Hyperplane) -> bool {
    field.dot(&point.coords, &plane.normal) == 0
}

/// Exact Gaussian binomial `[n k]_q`: the number of k-dimensional subspaces
/// of an n-dimensional space over `F_q`. Big-integer arithmetic; the
/// division is exact.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> Result<BigUint, GeometryError> {
    if k > n || q < 2 {
        return Err(GeometryError::BadBinomial { n, k, q });
    }
    let q = BigUint::from(q);
    let one = BigUint::from(1u32);
    let mut numerator = one.clone();
    let mut denominator = one;
    for i in 1..=k {
        numerator *= q.pow(n - i + 1) - 1u32;
        denominator *= q.pow(i) - 1u32;
    }
    let quotient = &numerator / &denominator;
    debug_assert!(
        &quotient * &denominator == numerator,
        "gaussian binomial divides exactly"
    );
    Ok(quotient)
}

/// `[n k]_q` as usize, for the desk-scale parameters used by constructions.
pub fn gaussian_binomial_usize(n: u32, k: u32, q: u64) -> Result<usize, GeometryError> {
    let big = gaussian_binomial(n, k, q)?;
    let digits = big.to_u64_digits();
    match digits.as_slice() {
        [] => Ok(0),
        [single] => Ok(usize::try_from(*single).expect("fits in usize")),
        _ => panic!("gaussian binomial exceeds usize at desk scale"),
    }
}

/// All points of `PG(d-1, q)`, without duplicates, in deterministic order:
/// by position of the leading 1, then lexicographically on the remaining
/// coordinates. For d=2, q=2 this yields (1,0), (1,1), (0,1).
pub fn enumerate_points(d: usize, q: u64) -> Result<Vec<ProjectivePoint>, GeometryError> {
    if d < 2 {
        return Err(GeometryError::DimensionTooSmall(d));
    }
    let field = PrimeField::new(q)?;
    let mut out = Vec::new();
    for lead in 0..d {
        let tail = d - lead - 1;
        let mut suffix = vec![0u64; tail];
        loop {
            let mut coords = vec![0u64; d];
            coords[lead] = 1;
            coords[lead + 1..].copy_from_slice(&suffix);
            out.push(ProjectivePoint::new(&field, &coords));
            // Odometer over the suffix, last coordinate fastest.
            let mut pos = tail;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                suffix[pos] += 1;
                if suffix[pos] < q {
                    break;
                }
                suffix[pos] = 0;
            }
            if suffix.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    Ok(out)
}

/// All hyperplanes of `PG(d-1, q)`, as normal vectors in the same order as
/// `enumerate_points`.
pub fn enumerate_hyperplanes(d: usize, q: u64) -> Result<Vec<Hyperplane>, GeometryError> {
    Ok(enumerate_points(d, q)?
        .into_iter()
        .map(|p| Hyperplane { normal: p.coords })
        .collect())
}

/// The normal rational curve arc: `q+1` points `(1, t, t^2, .., t^{d-1})`
/// for `t` in `F_q` plus `(0, .., 0, 1)`. Every `d` of them are linearly
/// independent (Vandermonde), so every hyperplane meets the arc in at most
/// `d-1` points.
pub fn moment_curve_arc(d: usize, q: u64) -> Result<Vec<ProjectivePoint>, GeometryError> {
    if d < 2 {
        return Err(GeometryError::DimensionTooSmall(d));
    }
    let field = PrimeField::new(q)?;
    if q < d as u64 {
        return Err(GeometryError::ArcTooTight { d, q });
    }
    let mut out = Vec::with_capacity(q as usize + 1);
    for t in 0..q {
        let coords: Vec<u64> = (0..d as u64).map(|i| field.pow(t, i)).collect();
        out.push(ProjectivePoint::new(&field, &coords));
    }
    let mut infinity = vec![0u64; d];
    infinity[d - 1] = 1;
    out.push(ProjectivePoint::new(&field, &infinity));
    Ok(out)
}

pub fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    if x.is_multiple_of(2) {
        return x == 2;
    }
    let mut f = 3;
    while f * f <= x {
        if x.is_multiple_of(f) {
            return false;
        }
        f += 2;
    }
    true
}

/// Smallest prime strictly greater than `x`.
pub fn next_prime(x: u64) -> u64 {
    let mut candidate = x + 1;
    while !is_prime(candidate) {
        candidate += 1;
    }
    candidate
}

/// Determinant over `F_q`, used to certify arc independence.
pub fn determinant(field: &PrimeField, matrix: &[Vec<u64>]) -> u64 {
    let n = matrix.len();
    let mut m: Vec<Vec<u64>> = matrix
        .iter()
        .map(|row| {
            assert_eq!(row.len(), n, "determinant needs a square matrix");
            row.iter().map(|&c| c % field.order()).collect()
        })
        .collect();
    let mut det = 1u64;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| m[r][col] != 0) else {
            return 0;
        };
        if pivot != col {
            m.swap(pivot, col);
            det = field.sub(0, det);
        }
        det = field.mul(det, m[col][col]);
        let inv = field.inv(m[col][col]);
        let pivot_row = m[col].clone();
        for row in m.iter_mut().skip(col + 1) {
            let factor = field.mul(row[col], inv);
            for (c, &pc) in pivot_row.iter().enumerate().skip(col) {
                let delta = field.mul(factor, pc);
                row[c] = field.sub(row[c], delta);
            }
        }
    }
    det
}
