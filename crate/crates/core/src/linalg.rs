//! Dense exact linear algebra over ℚ and prime fields.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Scalars we can eliminate with.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Modulus or 0, used to embed integers.
    type Ctx: Clone + Copy + Debug;

    fn from_int(x: i64, ctx: Self::Ctx) -> Self;

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Field for BigRational {
    type Ctx = ();

    fn from_int(x: i64, _: ()) -> Self {
        BigRational::from_integer(BigInt::from(x))
    }
}

/// Element of 𝔽_p with the modulus carried along.
///
/// `p == 0` marks a modulus-free integer constant as produced by
/// `Zero::zero()` and `One::one()`; it is reduced as soon as it meets an
/// element with a modulus. Arithmetic between two constants stays in the
/// integers, which commutes with reduction.
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    pub fn new(x: i64, p: u64) -> Fp {
        assert!(p >= 2, "modulus must be at least 2");
        let r = x.rem_euclid(p as i64) as u64;
        Fp { v: r, p }
    }

    pub fn value(&self) -> u64 {
        if self.p == 0 {
            self.v
        } else {
            self.v % self.p
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn common(a: Fp, b: Fp) -> (u64, u64, u64) {
        let p = match (a.p, b.p) {
            (0, q) | (q, 0) => q,
            (p, q) => {
                assert_eq!(p, q, "mixing prime fields");
                p
            }
        };
        if p == 0 {
            (a.v, b.v, 0)
        } else {
            (a.v % p, b.v % p, p)
        }
    }

    fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp { v: 1, p: self.p };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Fp) -> bool {
        let (a, b, _) = Fp::common(*self, *other);
        a == b
    }
}

impl Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, o: Fp) -> Fp {
        let (a, b, p) = Fp::common(self, o);
        if p == 0 {
            Fp { v: a + b, p }
        } else {
            Fp { v: ((a as u128 + b as u128) % p as u128) as u64, p }
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, o: Fp) -> Fp {
        let (a, b, p) = Fp::common(self, o);
        if p == 0 {
            Fp { v: a.checked_sub(b).expect("negative constant without modulus"), p }
        } else {
            Fp { v: ((a as u128 + p as u128 - b as u128) % p as u128) as u64, p }
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, o: Fp) -> Fp {
        let (a, b, p) = Fp::common(self, o);
        if p == 0 {
            Fp { v: a * b, p }
        } else {
            Fp { v: ((a as u128 * b as u128) % p as u128) as u64, p }
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        if self.p == 0 {
            assert_eq!(self.v, 0, "negative constant without modulus");
            self
        } else {
            Fp { v: (self.p - self.v % self.p) % self.p, p: self.p }
        }
    }
}

impl Div for Fp {
    type Output = Fp;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Fp) -> Fp {
        self * o.inv()
    }
}

impl Zero for Fp {
    fn zero() -> Fp {
        Fp { v: 0, p: 0 }
    }
    fn is_zero(&self) -> bool {
        self.value() == 0
    }
}

impl One for Fp {
    fn one() -> Fp {
        Fp { v: 1, p: 0 }
    }
}

impl Field for Fp {
    type Ctx = u64;

    fn from_int(x: i64, p: u64) -> Fp {
        Fp::new(x, p)
    }

    fn inv(&self) -> Fp {
        assert!(!self.is_zero(), "division by zero in prime field");
        if self.p == 0 {
            assert_eq!(self.v, 1, "inverse of a constant without modulus");
            return *self;
        }
        self.pow(self.p - 2)
    }
}

/// Which field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    /// `0` for ℚ.
    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    pub fn from_char(c: u64) -> Result<FieldSpec> {
        if c == 0 {
            Ok(FieldSpec::Rationals)
        } else if is_prime(c) {
            Ok(FieldSpec::Prime(c))
        } else {
            Err(Error::Invalid(format!("characteristic {c} is not 0 or a prime")))
        }
    }

    pub fn name(self) -> String {
        match self {
            FieldSpec::Rationals => "Q".into(),
            FieldSpec::Prime(p) => format!("F{p}"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RationalMatrix = Matrix<BigRational>;
pub type ModpMatrix = Matrix<Fp>;
pub type IntMatrix = Matrix<i64>;

impl<T: Clone> Matrix<T> {
    pub fn from_fn<F: FnMut(usize, usize) -> T>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Invalid("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Clone, F: Fn(&T) -> U>(&self, f: F) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }
}

impl<T: Field> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_int(m: &IntMatrix, ctx: T::Ctx) -> Self {
        m.map(|&x| T::from_int(x, ctx))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Invalid(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out: Self = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).clone() + a.clone() * b.clone();
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Rank by Gaussian elimination on a private copy; the pivot is the
    /// first nonzero entry in column order.
    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.cols);
        for i in 0..self.rows {
            ech.push(self.row(i).to_vec());
            if ech.rank() == self.cols {
                break;
            }
        }
        ech.rank()
    }

    pub fn nullspace_dim(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn is_invertible(&self) -> Result<bool> {
        if self.rows != self.cols {
            return Err(Error::Invalid(format!("{}x{} matrix is not square", self.rows, self.cols)));
        }
        Ok(self.rank() == self.rows)
    }

    pub fn is_permutation_matrix(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let one = T::one();
        let mut col_hits = vec![0usize; self.cols];
        for i in 0..self.rows {
            let mut hits = 0;
            for j in 0..self.cols {
                let x = self.get(i, j);
                if *x == one {
                    hits += 1;
                    col_hits[j] += 1;
                } else if !x.is_zero() {
                    return false;
                }
            }
            if hits != 1 {
                return false;
            }
        }
        col_hits.iter().all(|&h| h == 1)
    }
}

impl<T: Display + Clone> Matrix<T> {
    /// `rows cols` header, then one line per row.
    pub fn dump(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }
}

impl<T: Display + Clone> Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.dump())
    }
}

impl RationalMatrix {
    /// Inverse of [`Matrix::dump`]; entries are integers or `a/b`.
    pub fn parse_dump(s: &str) -> Result<RationalMatrix> {
        let mut tokens = s.split_whitespace();
        let mut next_usize = |what: &str| -> Result<usize> {
            tokens
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("missing {what}")))
        };
        let rows = next_usize("row count")?;
        let cols = next_usize("column count")?;
        let entries: Vec<&str> = s.split_whitespace().skip(2).collect();
        if entries.len() != rows * cols {
            return Err(Error::Parse(format!("expected {} entries, found {}", rows * cols, entries.len())));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for e in entries {
            let q = match e.split_once('/') {
                Some((a, b)) => {
                    let a: BigInt = a.parse().map_err(|_| Error::Parse(format!("bad entry {e}")))?;
                    let b: BigInt = b.parse().map_err(|_| Error::Parse(format!("bad entry {e}")))?;
                    if b.is_zero() {
                        return Err(Error::Parse(format!("zero denominator in {e}")));
                    }
                    BigRational::new(a, b)
                }
                None => BigRational::from_integer(
                    e.parse().map_err(|_| Error::Parse(format!("bad entry {e}")))?,
                ),
            };
            data.push(q);
        }
        Ok(Matrix { rows, cols, data })
    }
}

/// Incrementally maintained row echelon form.
///
/// Each stored row has a leading one at its pivot column and zeros in the
/// pivot columns of all rows stored before it, so a single sequential pass
/// decides membership in the span.
pub struct Echelon<T> {
    cols: usize,
    pivots: Vec<(usize, Vec<T>)>,
}

impl<T: Field> Echelon<T> {
    pub fn new(cols: usize) -> Self {
        Echelon { cols, pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Adds a row; returns true if it was independent of the rows so far.
    pub fn push(&mut self, mut row: Vec<T>) -> bool {
        debug_assert_eq!(row.len(), self.cols);
        for (pc, prow) in &self.pivots {
            let c = row[*pc].clone();
            if c.is_zero() {
                continue;
            }
            for j in *pc..self.cols {
                if !prow[j].is_zero() {
                    row[j] = row[j].clone() - c.clone() * prow[j].clone();
                }
            }
        }
        match row.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(pc) => {
                let inv = row[pc].inv();
                for x in row.iter_mut().skip(pc) {
                    if !x.is_zero() {
                        *x = x.clone() * inv.clone();
                    }
                }
                self.pivots.push((pc, row));
                true
            }
        }
    }
}

/// Rank of an integer matrix over the given field.
pub fn rank_int(m: &IntMatrix, field: FieldSpec) -> usize {
    match field {
        FieldSpec::Rationals => rank_rational_int(m),
        FieldSpec::Prime(p) => ModpMatrix::from_int(m, p).rank(),
    }
}

/// A large prime for the modular shortcut below.
const SCREEN_PRIME: u64 = 2_305_843_009_213_693_951; // 2^61 - 1

/// Rank over ℚ of an integer matrix. The rank modulo a prime never exceeds
/// the rational rank, so a full modular rank settles the question without
/// big-number arithmetic; otherwise we eliminate over ℚ.
pub fn rank_rational_int(m: &IntMatrix) -> usize {
    let full = m.rows().min(m.cols());
    let modular = ModpMatrix::from_int(m, SCREEN_PRIME).rank();
    if modular == full {
        return full;
    }
    RationalMatrix::from_int(m, ()).rank()
}

/// Rank of a system given as sparse integer rows `(column, coefficient)`.
pub fn sparse_rank<I>(cols: usize, rows: I, field: FieldSpec) -> usize
where
    I: Iterator<Item = Vec<(usize, i64)>> + Clone,
{
    fn run<T: Field, I: Iterator<Item = Vec<(usize, i64)>>>(cols: usize, rows: I, ctx: T::Ctx) -> usize {
        let mut ech = Echelon::<T>::new(cols);
        for sparse in rows {
            if sparse.is_empty() {
                continue;
            }
            let mut row = vec![T::zero(); cols];
            for (c, v) in sparse {
                row[c] = row[c].clone() + T::from_int(v, ctx);
            }
            ech.push(row);
            if ech.rank() == cols {
                break;
            }
        }
        ech.rank()
    }
    match field {
        FieldSpec::Prime(p) => run::<Fp, _>(cols, rows, p),
        FieldSpec::Rationals => {
            let modular = run::<Fp, _>(cols, rows.clone(), SCREEN_PRIME);
            if modular == cols {
                cols
            } else {
                run::<BigRational, _>(cols, rows, ())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(RationalMatrix::identity(3).rank(), 3);
        assert_eq!(RationalMatrix::zeros(2, 4).nullspace_dim(), 4);
        assert_eq!(ModpMatrix::identity(4).nullspace_dim(), 0);
    }

    #[test]
    fn all_ones_is_singular() {
        let m = RationalMatrix::from_fn(2, 2, |_, _| q(1, 1));
        assert!(!m.is_invertible().unwrap());
        assert!(RationalMatrix::zeros(2, 3).is_invertible().is_err());
    }

    #[test]
    fn characteristic_matters() {
        // [[1,1],[1,-1]] has determinant -2
        let m = IntMatrix::from_rows(vec![vec![1, 1], vec![1, -1]]).unwrap();
        assert_eq!(rank_int(&m, FieldSpec::Rationals), 2);
        assert_eq!(rank_int(&m, FieldSpec::Prime(2)), 1);
        assert_eq!(rank_int(&m, FieldSpec::Prime(3)), 2);
    }

    #[test]
    fn prime_field_arithmetic() {
        let a = Fp::new(3, 7);
        assert_eq!((a * a.inv()).value(), 1);
        assert_eq!((-a).value(), 4);
        assert_eq!(Fp::one() + Fp::one() + Fp::new(0, 2), Fp::new(0, 2));
        assert!(Fp::new(5, 5).is_zero());
    }

    #[test]
    fn dump_round_trip() {
        let m = RationalMatrix::from_rows(vec![vec![q(1, 2), q(-3, 1)], vec![q(0, 1), q(7, 9)]]).unwrap();
        let s = m.dump();
        assert!(s.starts_with("2 2\n1/2 -3\n"));
        assert_eq!(RationalMatrix::parse_dump(&s).unwrap(), m);
    }

    #[test]
    fn permutation_detection() {
        let p = RationalMatrix::from_fn(3, 3, |i, j| if j == (i + 1) % 3 { q(1, 1) } else { q(0, 1) });
        assert!(p.is_permutation_matrix());
        assert!(p.is_invertible().unwrap());
        assert!(!RationalMatrix::from_fn(2, 2, |_, _| q(1, 1)).is_permutation_matrix());
    }

    #[test]
    fn sparse_system() {
        // x0 - x1 = 0, x1 - x2 = 0, x0 - x2 = 0: rank 2
        let rows = vec![vec![(0, 1), (1, -1)], vec![(1, 1), (2, -1)], vec![(0, 1), (2, -1)]];
        assert_eq!(sparse_rank(3, rows.clone().into_iter(), FieldSpec::Rationals), 2);
        assert_eq!(sparse_rank(3, rows.into_iter(), FieldSpec::Prime(2)), 2);
    }
}
