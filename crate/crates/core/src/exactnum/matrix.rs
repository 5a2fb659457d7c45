use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::{CycNumber, CyclotomicModulus, ExactError};

/// Dense row-major matrix over ℚ(ζ_N).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    order: u32,
    rows: usize,
    cols: usize,
    data: Vec<CycNumber>,
}

impl ExactMatrix {
    pub fn from_fn(
        order: u32,
        rows: usize,
        cols: usize,
        f: impl Fn(usize, usize) -> CycNumber + Sync + Send,
    ) -> Self {
        let data: Vec<CycNumber> = (0..rows * cols)
            .into_par_iter()
            .map(|idx| f(idx / cols, idx % cols))
            .collect();
        for x in &data {
            assert_eq!(x.order(), order, "entry from another cyclotomic field");
        }
        Self {
            order,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(order: u32, rows: Vec<Vec<CycNumber>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::Shape("ragged rows".into()));
        }
        let data: Vec<CycNumber> = rows.into_iter().flatten().collect();
        if let Some(x) = data.iter().find(|x| x.order() != order) {
            return Err(ExactError::OrderMismatch(order, x.order()));
        }
        Ok(Self {
            order,
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn zeros(order: u32, rows: usize, cols: usize) -> Self {
        Self {
            order,
            rows,
            cols,
            data: vec![CycNumber::zero(order); rows * cols],
        }
    }

    pub fn identity(order: u32, n: usize) -> Self {
        Self::scalar(&CycNumber::one(order), n)
    }

    pub fn scalar(c: &CycNumber, n: usize) -> Self {
        let mut m = Self::zeros(c.order(), n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn diagonal(order: u32, diag: &[CycNumber]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(order, n, n);
        for (i, d) in diag.iter().enumerate() {
            m.data[i * n + i] = d.clone();
        }
        m
    }

    pub fn order(&self) -> u32 {
        self.order
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

    pub fn get(&self, i: usize, j: usize) -> &CycNumber {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycNumber) {
        assert_eq!(v.order(), self.order);
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[CycNumber] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[CycNumber] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn diag(&self) -> Vec<CycNumber> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn map(&self, f: impl Fn(&CycNumber) -> CycNumber + Sync + Send) -> Self {
        Self {
            order: self.order,
            rows: self.rows,
            cols: self.cols,
            data: self.data.par_iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.order, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Transpose composed with ζ ↦ ζ⁻¹ entry-wise.
    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.order, self.cols, self.rows, |i, j| self.get(j, i).conj_inv())
    }

    pub fn galois(&self, a: i64) -> Self {
        self.map(|x| x.galois(a))
    }

    pub fn lift(&self, new_order: u32) -> Result<Self, ExactError> {
        let data = self
            .data
            .iter()
            .map(|x| x.lift(new_order))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            order: new_order,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn trace(&self) -> CycNumber {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .fold(CycNumber::zero(self.order), |a, b| a + b)
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_same_shape(other)?;
        Ok(Self {
            order: self.order,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .par_iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_same_shape(other)?;
        Ok(Self {
            order: self.order,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .par_iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &CycNumber) -> Self {
        self.map(|x| x * c)
    }

    /// `diag(d) · self`.
    pub fn scale_rows(&self, d: &[CycNumber]) -> Self {
        assert_eq!(d.len(), self.rows);
        Self::from_fn(self.order, self.rows, self.cols, |i, j| self.get(i, j) * &d[i])
    }

    /// `self · diag(d)`.
    pub fn scale_cols(&self, d: &[CycNumber]) -> Self {
        assert_eq!(d.len(), self.cols);
        Self::from_fn(self.order, self.rows, self.cols, |i, j| self.get(i, j) * &d[j])
    }

    fn check_same_shape(&self, other: &Self) -> Result<(), ExactError> {
        if self.order != other.order {
            return Err(ExactError::OrderMismatch(self.order, other.order));
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(ExactError::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Exact product.
    ///
    /// Rows of `self` and columns of `other` are brought to common
    /// denominators; when every numerator fits in `i64` the accumulation runs
    /// in `i128` without reduction and each entry is reduced once at the end.
    /// Anything that could overflow takes the `BigInt` path.
    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        if self.order != other.order {
            return Err(ExactError::OrderMismatch(self.order, other.order));
        }
        if self.cols != other.rows {
            return Err(ExactError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let modulus = CyclotomicModulus::get(self.order);
        let phi = modulus.phi();
        let (n, m, p) = (self.rows, self.cols, other.cols);

        let row_den: Vec<BigInt> = (0..n)
            .map(|i| common_den((0..m).map(|j| self.get(i, j))))
            .collect();
        let col_den: Vec<BigInt> = (0..p)
            .map(|k| common_den((0..m).map(|j| other.get(j, k))))
            .collect();
        let a_num: Vec<Vec<BigInt>> = (0..n * m)
            .map(|idx| scaled_num(&self.data[idx], &row_den[idx / m]))
            .collect();
        let b_num: Vec<Vec<BigInt>> = (0..m * p)
            .map(|idx| scaled_num(&other.data[idx], &col_den[idx % p]))
            .collect();

        let small = to_i64_block(&a_num, phi).zip(to_i64_block(&b_num, phi));
        let fits = small.as_ref().is_some_and(|(a, b)| {
            let amax = a.iter().map(|x| x.unsigned_abs() as u128).max().unwrap_or(0);
            let bmax = b.iter().map(|x| x.unsigned_abs() as u128).max().unwrap_or(0);
            let terms = (m.max(1) * phi) as u128;
            amax.checked_mul(bmax)
                .and_then(|x| x.checked_mul(terms))
                .is_some_and(|x| x < (1u128 << 126))
        });

        let wide = 2 * phi - 1;
        let rows: Vec<Vec<CycNumber>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let den_i = &row_den[i];
                if fits {
                    let (a, b) = small.as_ref().unwrap();
                    let mut acc = vec![0i128; p * wide];
                    for j in 0..m {
                        let av = &a[(i * m + j) * phi..(i * m + j + 1) * phi];
                        if av.iter().all(|&x| x == 0) {
                            continue;
                        }
                        for k in 0..p {
                            let bv = &b[(j * p + k) * phi..(j * p + k + 1) * phi];
                            let out = &mut acc[k * wide..(k + 1) * wide];
                            for (s, &x) in av.iter().enumerate() {
                                if x == 0 {
                                    continue;
                                }
                                let x = x as i128;
                                for (t, &y) in bv.iter().enumerate() {
                                    out[s + t] += x * y as i128;
                                }
                            }
                        }
                    }
                    (0..p)
                        .map(|k| {
                            let den = den_i * &col_den[k];
                            let mut v = acc[k * wide..(k + 1) * wide].to_vec();
                            if modulus.reduce_i128(&mut v) {
                                let num = v[..phi].iter().map(|&c| BigInt::from(c)).collect();
                                CycNumber::from_parts(self.order, num, den)
                            } else {
                                let num = acc[k * wide..(k + 1) * wide]
                                    .iter()
                                    .map(|&c| BigInt::from(c))
                                    .collect();
                                CycNumber::from_parts(self.order, num, den)
                            }
                        })
                        .collect()
                } else {
                    (0..p)
                        .map(|k| {
                            let mut acc = vec![BigInt::zero(); wide];
                            for j in 0..m {
                                let av = &a_num[i * m + j];
                                let bv = &b_num[j * p + k];
                                for (s, x) in av.iter().enumerate() {
                                    if x.is_zero() {
                                        continue;
                                    }
                                    for (t, y) in bv.iter().enumerate() {
                                        if !y.is_zero() {
                                            acc[s + t] += x * y;
                                        }
                                    }
                                }
                            }
                            CycNumber::from_parts(self.order, acc, den_i * &col_den[k])
                        })
                        .collect()
                }
            })
            .collect();
        Self::from_rows(self.order, rows)
    }

    pub fn pow(&self, e: u32) -> Result<Self, ExactError> {
        if !self.is_square() {
            return Err(ExactError::Shape("power of a non-square matrix".into()));
        }
        let mut acc = Self::identity(self.order, self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// First `(i, j)` where `self` differs from `c·I`, scanning row-major.
    pub fn scalar_mismatch(&self, c: &CycNumber) -> Option<(usize, usize)> {
        let zero = CycNumber::zero(self.order);
        (0..self.rows * self.cols).find_map(|idx| {
            let (i, j) = (idx / self.cols, idx % self.cols);
            let want = if i == j { c } else { &zero };
            (self.get(i, j) != want).then_some((i, j))
        })
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && self.scalar_mismatch(&CycNumber::one(self.order)).is_none()
    }

    /// First `(i, j)` with `self[i][j] != self[j][i]`.
    pub fn symmetry_mismatch(&self) -> Option<(usize, usize)> {
        (0..self.rows).find_map(|i| {
            (i + 1..self.cols).find_map(|j| (self.get(i, j) != self.get(j, i)).then_some((i, j)))
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && self.symmetry_mismatch().is_none()
    }

    pub fn to_complex(&self) -> Vec<Vec<Complex64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(CycNumber::embed).collect())
            .collect()
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, ExactError> {
        if self.order != other.order {
            return Err(ExactError::OrderMismatch(self.order, other.order));
        }
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        let zero = CycNumber::zero(self.order);
        Ok(Self::from_fn(self.order, r, c, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j).clone()
            } else if i >= self.rows && j >= self.cols {
                other.get(i - self.rows, j - self.cols).clone()
            } else {
                zero.clone()
            }
        }))
    }
}

fn common_den<'a>(xs: impl Iterator<Item = &'a CycNumber>) -> BigInt {
    xs.fold(BigInt::one(), |acc, x| {
        if x.denominator().is_one() {
            acc
        } else {
            acc.lcm(x.denominator())
        }
    })
}

fn scaled_num(x: &CycNumber, den: &BigInt) -> Vec<BigInt> {
    if x.denominator() == den {
        return x.numerators().to_vec();
    }
    let f = den / x.denominator();
    x.numerators().iter().map(|c| c * &f).collect()
}

fn to_i64_block(v: &[Vec<BigInt>], phi: usize) -> Option<Vec<i64>> {
    let mut out = Vec::with_capacity(v.len() * phi);
    for x in v {
        for c in x {
            if c.abs().bits() > 62 {
                return None;
            }
            out.push(c.to_i64()?);
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    fn rand_entry(order: u32, seed: u64) -> CycNumber {
        let mut s = seed;
        let mut next = || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((s >> 33) % 19) as i64 - 9
        };
        let phi = CyclotomicModulus::get(order).phi();
        let coeffs: Vec<Rational> = (0..phi)
            .map(|_| Rational::new(next().into(), (next().abs() + 1).into()))
            .collect();
        CycNumber::new(order, &coeffs)
    }

    fn naive_mul(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
        ExactMatrix::from_fn(a.order(), a.rows(), b.cols(), |i, k| {
            (0..a.cols()).fold(CycNumber::zero(a.order()), |acc, j| acc + a.get(i, j) * b.get(j, k))
        })
    }

    #[test]
    fn fast_product_matches_naive() {
        let a = ExactMatrix::from_fn(20, 4, 3, |i, j| rand_entry(20, (i * 7 + j) as u64));
        let b = ExactMatrix::from_fn(20, 3, 5, |i, j| rand_entry(20, (100 + i * 11 + j) as u64));
        assert_eq!(a.mul(&b).unwrap(), naive_mul(&a, &b));
    }

    #[test]
    fn huge_entries_use_the_bigint_path() {
        let big = CycNumber::from_parts(16, vec![BigInt::from(1u64 << 62) * 1000], BigInt::one());
        let a = ExactMatrix::from_fn(16, 2, 2, |i, j| if i == j { big.clone() } else { rand_entry(16, 3) });
        assert_eq!(a.mul(&a).unwrap(), naive_mul(&a, &a));
    }

    #[test]
    fn trace_and_identity() {
        let i3 = ExactMatrix::identity(8, 3);
        assert!(i3.is_identity());
        assert_eq!(i3.trace(), CycNumber::from_i64(8, 3));
        let z = CycNumber::zeta_pow(8, 1);
        let d = ExactMatrix::diagonal(8, &[z.clone(), z.conj_inv()]);
        assert!(d.mul(&d.conj_transpose()).unwrap().is_identity());
    }
}
