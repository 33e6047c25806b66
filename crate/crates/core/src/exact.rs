//! Exact rational scalars, vectors, matrices and univariate polynomials.
//!
//! Scalars are [`Rat`] (arbitrary-precision rationals, always reduced, with
//! positive denominator). Rank and determinant run fraction-free
//! (Bareiss) on denominator-cleared integer matrices so intermediate values
//! stay exact; the characteristic polynomial uses Faddeev-LeVerrier, which
//! only ever divides by integers and therefore works verbatim over the
//! rationals.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Exact rational scalar: reduced fraction with positive denominator.
pub type Rat = num_rational::BigRational;

/// Dense vector of rationals.
pub type RatVec = Vec<Rat>;

/// Shorthand for a rational from machine integers.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// Shorthand for an integer rational.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Standard dot product of two rational vectors.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len(), "dot: dimension mismatch");
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

pub fn vec_add(a: &[Rat], b: &[Rat]) -> RatVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rat], b: &[Rat]) -> RatVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &Rat, a: &[Rat]) -> RatVec {
    a.iter().map(|x| c * x).collect()
}

pub fn vec_neg(a: &[Rat]) -> RatVec {
    a.iter().map(|x| -x).collect()
}

pub fn vec_is_zero(a: &[Rat]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// `b = c * a` for some rational `c`? Returns the multiplier.
///
/// The zero vector is a multiple (c = 0) of any nonzero `a`.
pub fn parallel_multiplier(b: &[Rat], a: &[Rat]) -> Option<Rat> {
    assert_eq!(a.len(), b.len());
    if vec_is_zero(a) {
        return None;
    }
    let k = a.iter().position(|x| !x.is_zero()).unwrap();
    let c = &b[k] / &a[k];
    for i in 0..a.len() {
        if b[i] != &c * &a[i] {
            return None;
        }
    }
    Some(c)
}

/// Errors from exact-arithmetic operations with preconditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactError {
    NonSquare { rows: usize, cols: usize },
    ZeroPolynomial,
    OddPfaffian { size: usize },
    NotAntisymmetric,
    Singular,
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::NonSquare { rows, cols } => {
                write!(f, "matrix is not square ({rows}x{cols})")
            }
            ExactError::ZeroPolynomial => write!(f, "zero polynomial not allowed here"),
            ExactError::OddPfaffian { size } => {
                write!(f, "pfaffian needs even size, got {size}")
            }
            ExactError::NotAntisymmetric => write!(f, "matrix is not antisymmetric"),
            ExactError::Singular => write!(f, "matrix is singular"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ExactError {}

/// Dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{} ", self[(r, c)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        &mut self.data[r * self.cols + c]
    }
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows x cols");
        RatMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: &[RatVec]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().cloned());
        }
        RatMatrix { rows: r, cols: c, data }
    }

    pub fn diagonal(entries: &[Rat]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Rat] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul: dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> RatVec {
        assert_eq!(self.cols, v.len(), "matvec: dimension mismatch");
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        RatMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        RatMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| c * x).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn trace(&self) -> Rat {
        assert!(self.is_square());
        let mut t = Rat::zero();
        for i in 0..self.rows {
            t += &self[(i, i)];
        }
        t
    }

    pub fn is_antisymmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                if self[(i, j)] != -self[(j, i)].clone() {
                    return false;
                }
            }
        }
        true
    }

    /// Row-scale to integers: for each row, multiply by the lcm of the entry
    /// denominators. Rank and kernel are unchanged; the returned scales let
    /// determinants be recovered.
    fn cleared(&self) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        let mut rows = Vec::with_capacity(self.rows);
        let mut scales = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut l = BigInt::one();
            for c in 0..self.cols {
                l = l.lcm(self[(r, c)].denom());
            }
            let row: Vec<BigInt> = (0..self.cols)
                .map(|c| {
                    let e = &self[(r, c)];
                    e.numer() * (&l / e.denom())
                })
                .collect();
            rows.push(row);
            scales.push(l);
        }
        (rows, scales)
    }

    /// Rank over the rationals by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let (mut m, _) = self.cleared();
        bareiss_rank(&mut m, self.rows, self.cols).0
    }

    /// Exact determinant (Bareiss on the cleared matrix, scales divided out).
    pub fn det(&self) -> Rat {
        assert!(self.is_square(), "det: non-square");
        let n = self.rows;
        if n == 0 {
            return Rat::one();
        }
        let (mut m, scales) = self.cleared();
        let (rank, sign, last_pivot) = bareiss_rank(&mut m, n, n);
        if rank < n {
            return Rat::zero();
        }
        let mut denom = BigInt::one();
        for s in &scales {
            denom *= s;
        }
        let num = if sign { -last_pivot } else { last_pivot };
        Rat::new(num, denom)
    }

    /// Basis of the right kernel, computed by rational Gauss-Jordan.
    /// Length is always `cols - rank`.
    pub fn kernel_basis(&self) -> Vec<RatVec> {
        let mut m = self.clone();
        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    let tmp = m[(p, j)].clone();
                    m[(p, j)] = m[(r, j)].clone();
                    m[(r, j)] = tmp;
                }
            }
            let inv = m[(r, c)].recip();
            for j in 0..m.cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in 0..m.cols {
                        let sub = &f * &m[(r, j)];
                        m[(i, j)] = &m[(i, j)] - &sub;
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in 0..m.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); m.cols];
            v[free] = Rat::one();
            for (i, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -m[(i, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `self * x = rhs` exactly; `None` if inconsistent.
    pub fn solve(&self, rhs: &[Rat]) -> Option<RatVec> {
        assert_eq!(self.rows, rhs.len());
        let mut aug = RatMatrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, self.cols)] = rhs[r].clone();
        }
        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            let Some(p) = (r..aug.rows).find(|&i| !aug[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..aug.cols {
                    let tmp = aug[(p, j)].clone();
                    aug[(p, j)] = aug[(r, j)].clone();
                    aug[(r, j)] = tmp;
                }
            }
            let inv = aug[(r, c)].recip();
            for j in 0..aug.cols {
                aug[(r, j)] = &aug[(r, j)] * &inv;
            }
            for i in 0..aug.rows {
                if i != r && !aug[(i, c)].is_zero() {
                    let f = aug[(i, c)].clone();
                    for j in 0..aug.cols {
                        let sub = &f * &aug[(r, j)];
                        aug[(i, j)] = &aug[(i, j)] - &sub;
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
            if r == aug.rows {
                break;
            }
        }
        // inconsistent if a row is (0 ... 0 | nonzero)
        for i in r..aug.rows {
            if !aug[(i, self.cols)].is_zero() {
                return None;
            }
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (i, &pc) in pivot_cols.iter().enumerate() {
            x[pc] = aug[(i, self.cols)].clone();
        }
        Some(x)
    }

    /// Exact inverse; `Err(Singular)` when rank-deficient.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut aug = RatMatrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = Rat::one();
        }
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !aug[(i, c)].is_zero()) else {
                return Err(ExactError::Singular);
            };
            if p != c {
                for j in 0..2 * n {
                    let tmp = aug[(p, j)].clone();
                    aug[(p, j)] = aug[(c, j)].clone();
                    aug[(c, j)] = tmp;
                }
            }
            let inv = aug[(c, c)].recip();
            for j in 0..2 * n {
                aug[(c, j)] = &aug[(c, j)] * &inv;
            }
            for i in 0..n {
                if i != c && !aug[(i, c)].is_zero() {
                    let f = aug[(i, c)].clone();
                    for j in 0..2 * n {
                        let sub = &f * &aug[(c, j)];
                        aug[(i, j)] = &aug[(i, j)] - &sub;
                    }
                }
            }
        }
        let mut out = RatMatrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                out[(r, c)] = aug[(r, n + c)].clone();
            }
        }
        Ok(out)
    }

    /// Exact characteristic polynomial det(M - z id) in z, by
    /// Faddeev-LeVerrier (divides only by integers).
    pub fn char_poly(&self) -> Result<RatPoly, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(RatPoly::one());
        }
        // det(zI - M) = z^n - c_1 z^{n-1} - c_2 z^{n-2} - ... - c_n
        let mut cs: Vec<Rat> = Vec::with_capacity(n);
        let mut mk = self.clone();
        for k in 1..=n {
            let ck = mk.trace() / rint(k as i64);
            cs.push(ck.clone());
            if k < n {
                let mut shifted = mk;
                for i in 0..n {
                    shifted[(i, i)] = &shifted[(i, i)] - &ck;
                }
                mk = self.mul(&shifted);
            }
        }
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        for (k, ck) in cs.iter().enumerate() {
            coeffs[n - 1 - k] = -ck.clone();
        }
        // det(M - zI) = (-1)^n det(zI - M)
        if n % 2 == 1 {
            for c in coeffs.iter_mut() {
                *c = -c.clone();
            }
        }
        Ok(RatPoly::from_coeffs(coeffs))
    }

    /// Exact Pfaffian of an antisymmetric matrix of even size, by recursive
    /// expansion along the first row.
    pub fn pfaffian(&self) -> Result<Rat, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NonSquare { rows: self.rows, cols: self.cols });
        }
        if self.rows % 2 != 0 {
            return Err(ExactError::OddPfaffian { size: self.rows });
        }
        if !self.is_antisymmetric() {
            return Err(ExactError::NotAntisymmetric);
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(self.pf_rec(&idx))
    }

    fn pf_rec(&self, idx: &[usize]) -> Rat {
        if idx.is_empty() {
            return Rat::one();
        }
        let first = idx[0];
        let mut acc = Rat::zero();
        for (pos, &j) in idx.iter().enumerate().skip(1) {
            let a = &self[(first, j)];
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = idx
                .iter()
                .copied()
                .filter(|&k| k != first && k != j)
                .collect();
            let term = a * self.pf_rec(&rest);
            // expansion sign alternates with the position of j in the list
            if pos % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
}

/// Bareiss fraction-free elimination on an integer matrix.
/// Returns (rank, row-swap sign flag, final pivot value).
fn bareiss_rank(m: &mut [Vec<BigInt>], rows: usize, cols: usize) -> (usize, bool, BigInt) {
    let mut prev = BigInt::one();
    let mut r = 0usize;
    let mut swapped = false;
    let mut last_pivot = BigInt::one();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            swapped = !swapped;
        }
        let pivot = m[r][c].clone();
        for i in r + 1..rows {
            for j in 0..cols {
                if j == c {
                    continue;
                }
                let val = (&pivot * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = val;
            }
            m[i][c] = BigInt::zero();
        }
        prev = pivot.clone();
        last_pivot = pivot;
        r += 1;
    }
    (r, swapped, last_pivot)
}

/// Univariate polynomial with exact rational coefficients, ascending order.
/// The leading coefficient is nonzero unless the polynomial is zero (empty
/// coefficient list).
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{k}")?,
            }
        }
        Ok(())
    }
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly { coeffs: vec![Rat::one()] }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c0 + c1 z + c2 z^2 + ...`; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    /// The linear polynomial `a - z`.
    pub fn root_factor(a: Rat) -> Self {
        RatPoly::from_coeffs(vec![a, -Rat::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `z^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let prod = a * b;
                out[i + j] += prod;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| c * x).collect())
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| rint(k as i64) * c)
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Euclidean division: (quotient, remainder) with deg r < deg d.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.clone();
        let mut q = Self::zero();
        let dd = d.degree().unwrap();
        let lead = d.leading().unwrap().clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.leading().unwrap() / &lead;
            let shift = rd - dd;
            let mut term = vec![Rat::zero(); shift + 1];
            term[shift] = c;
            let term = Self::from_coeffs(term);
            q = q.add(&term);
            r = r.sub(&term.mul(d));
        }
        (q, r)
    }

    /// Monic gcd (zero polynomial if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if let Some(l) = a.leading() {
            let inv = l.recip();
            a = a.scale(&inv);
        }
        a
    }

    /// Exact Lagrange interpolation through `(x_i, y_i)` with distinct `x_i`.
    pub fn interpolate(points: &[(Rat, Rat)]) -> Self {
        let mut acc = Self::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut li = Self::constant(yi.clone());
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let denom = xi - xj;
                // (z - xj) / (xi - xj)
                let factor = Self::from_coeffs(vec![-xj / &denom, denom.recip()]);
                li = li.mul(&factor);
            }
            acc = acc.add(&li);
        }
        acc
    }
}

/// Sylvester-determinant resultant of two nonzero polynomials.
pub fn resultant(p: &RatPoly, q: &RatPoly) -> Result<Rat, ExactError> {
    if p.is_zero() || q.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let m = p.degree().unwrap();
    let n = q.degree().unwrap();
    let size = m + n;
    if size == 0 {
        return Ok(Rat::one());
    }
    let mut s = RatMatrix::zeros(size, size);
    // n rows of p coefficients (descending), then m rows of q
    for r in 0..n {
        for k in 0..=m {
            s[(r, r + k)] = p.coeff(m - k);
        }
    }
    for r in 0..m {
        for k in 0..=n {
            s[(n + r, r + k)] = q.coeff(n - k);
        }
    }
    Ok(s.det())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: usize, cols: usize, vals: &[i64]) -> RatMatrix {
        RatMatrix::new(rows, cols, vals.iter().map(|&v| rint(v)).collect())
    }

    #[test]
    fn rank_identity() {
        assert_eq!(RatMatrix::identity(3).rank(), 3);
    }

    #[test]
    fn rank_proportional_rows() {
        assert_eq!(m(2, 2, &[1, 2, 2, 4]).rank(), 1);
    }

    #[test]
    fn rank_sl2_nilpotent_ad() {
        // ad(e) on basis {e, h, f}: ad(e)e = 0, ad(e)h = -2e, ad(e)f = h
        let ad = m(3, 3, &[0, -2, 0, 0, 0, 1, 0, 0, 0]);
        assert_eq!(ad.rank(), 2);
    }

    #[test]
    fn kernel_identity_empty() {
        assert!(RatMatrix::identity(4).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_zero_matrix() {
        assert_eq!(RatMatrix::zeros(2, 2).kernel_basis().len(), 2);
    }

    #[test]
    fn kernel_sl2_ad_y() {
        // ad(f) on basis {e, h, f}: ad(f)e = -h, ad(f)h = 2f, ad(f)f = 0
        let ad = m(3, 3, &[0, 0, 0, -1, 0, 0, 0, 2, 0]);
        let k = ad.kernel_basis();
        assert_eq!(k.len(), 1);
        // kernel direction is the f-axis
        assert!(k[0][0].is_zero() && k[0][1].is_zero() && !k[0][2].is_zero());
    }

    #[test]
    fn char_poly_diag() {
        let p = m(2, 2, &[2, 0, 0, -2]).char_poly().unwrap();
        // (2-z)(-2-z) = z^2 - 4
        assert_eq!(p, RatPoly::from_coeffs(vec![rint(-4), rint(0), rint(1)]));
    }

    #[test]
    fn char_poly_zero() {
        for n in 1..=4 {
            let p = RatMatrix::zeros(n, n).char_poly().unwrap();
            let mut want = vec![rint(0); n + 1];
            want[n] = if n % 2 == 0 { rint(1) } else { rint(-1) };
            assert_eq!(p, RatPoly::from_coeffs(want));
        }
    }

    #[test]
    fn char_poly_companion() {
        // companion of z^3 + 5z + 7; det(M - zI) = -(z^3 + 5z + 7)
        let c = m(3, 3, &[0, 0, -7, 1, 0, -5, 0, 1, 0]);
        let p = c.char_poly().unwrap();
        assert_eq!(
            p,
            RatPoly::from_coeffs(vec![rint(-7), rint(-5), rint(0), rint(-1)])
        );
    }

    #[test]
    fn char_poly_rejects_non_square() {
        assert!(m(2, 3, &[1, 0, 0, 0, 1, 0]).char_poly().is_err());
    }

    #[test]
    fn resultant_linear() {
        // res(z-1, z-2) by the Sylvester determinant: det [[1,-1],[1,-2]] = -1
        let p = RatPoly::from_coeffs(vec![rint(-1), rint(1)]);
        let q = RatPoly::from_coeffs(vec![rint(-2), rint(1)]);
        assert_eq!(resultant(&p, &q).unwrap(), rint(-1));
    }

    #[test]
    fn resultant_self_zero() {
        let p = RatPoly::from_coeffs(vec![rint(3), rint(0), rint(1)]);
        assert_eq!(resultant(&p, &p).unwrap(), rint(0));
    }

    #[test]
    fn resultant_quadratic() {
        // res(z^2 - 1, 2z) = -4 (3x3 Sylvester determinant)
        let p = RatPoly::from_coeffs(vec![rint(-1), rint(0), rint(1)]);
        let q = RatPoly::from_coeffs(vec![rint(0), rint(2)]);
        assert_eq!(resultant(&p, &q).unwrap(), rint(-4));
    }

    #[test]
    fn resultant_rejects_zero() {
        let p = RatPoly::from_coeffs(vec![rint(1), rint(1)]);
        assert!(resultant(&p, &RatPoly::zero()).is_err());
    }

    #[test]
    fn pfaffian_2x2() {
        let a = m(2, 2, &[0, 3, -3, 0]);
        assert_eq!(a.pfaffian().unwrap(), rint(3));
    }

    #[test]
    fn pfaffian_block_diag() {
        let a = m(
            4,
            4,
            &[0, 2, 0, 0, -2, 0, 0, 0, 0, 0, 0, 5, 0, 0, -5, 0],
        );
        assert_eq!(a.pfaffian().unwrap(), rint(10));
    }

    #[test]
    fn pfaffian_rejects_odd_and_nonantisym() {
        assert!(m(3, 3, &[0, 1, 2, -1, 0, 3, -2, -3, 0]).pfaffian().is_err());
        assert!(m(2, 2, &[0, 1, 1, 0]).pfaffian().is_err());
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(2, 2, &[1, 2, 3, 5]);
        let x = a.solve(&[rint(5), rint(13)]).unwrap();
        assert_eq!(x, vec![rint(1), rint(2)]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), RatMatrix::identity(2));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = RatPoly::from_coeffs(vec![rint(1), rint(-3), rint(0), rint(2)]);
        let pts: Vec<(Rat, Rat)> = (0..4).map(|k| (rint(k), p.eval(&rint(k)))).collect();
        assert_eq!(RatPoly::interpolate(&pts), p);
    }

    #[test]
    fn poly_gcd_common_factor() {
        let common = RatPoly::from_coeffs(vec![rint(-2), rint(1)]);
        let a = common.mul(&RatPoly::from_coeffs(vec![rint(1), rint(1)]));
        let b = common.mul(&RatPoly::from_coeffs(vec![rint(4), rint(3)]));
        let g = a.gcd(&b);
        assert_eq!(g, common); // already monic
    }
}
