//! Exact integer linear algebra: dense matrices over arbitrary-precision
//! integers, Smith normal form with unimodular transforms, Hermite reduction,
//! saturated kernels and primitivity tests.
//!
//! Everything here is total on well-shaped inputs and deterministic: pivot
//! choices are fixed (smallest absolute value, then smallest position), so
//! repeated runs produce identical output.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<BigInt>]) -> Result<Self> {
        let height = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != width {
                return Err(Error::ShapeMismatch(format!(
                    "row {} has length {}, expected {}",
                    i,
                    r.len(),
                    width
                )));
            }
        }
        IntMatrix::new(height, width, rows.concat())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.get(r, k) * other.get(k, c);
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix applied to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -self.get(i, c).clone();
            self.set(i, c, v);
        }
    }

    /// row_i += q * row_j
    fn add_row_multiple(&mut self, i: usize, j: usize, q: &BigInt) {
        for c in 0..self.cols {
            let v = self.get(i, c) + q * self.get(j, c);
            self.set(i, c, v);
        }
    }

    /// col_i += q * col_j
    fn add_col_multiple(&mut self, i: usize, j: usize, q: &BigInt) {
        for r in 0..self.rows {
            let v = self.get(r, i) + q * self.get(r, j);
            self.set(r, i, v);
        }
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "determinant of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut prev = BigInt::one();
        let mut sign = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = &num / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * a[n - 1][n - 1].clone())
    }

    /// Inverse of a matrix with determinant +-1. Returns `None` when the
    /// matrix is not square or not unimodular.
    pub fn inverse_unimodular(&self) -> Option<IntMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let det = self.det().ok()?;
        if !(det == BigInt::one() || det == -BigInt::one()) {
            return None;
        }
        let rows: Vec<Vec<BigRational>> = (0..n)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|e| BigRational::from_integer(e.clone()))
                    .collect()
            })
            .collect();
        let mut inv_cols = Vec::with_capacity(n);
        for c in 0..n {
            let mut rhs = vec![BigRational::zero(); n];
            rhs[c] = BigRational::one();
            let sol = solve_exact(&rows, &rhs)?;
            inv_cols.push(sol);
        }
        let mut out = IntMatrix::zero(n, n);
        for r in 0..n {
            for c in 0..n {
                let v = &inv_cols[c][r];
                if !v.is_integer() {
                    return None;
                }
                out.set(r, c, v.to_integer());
            }
        }
        Some(out)
    }
}

/// Smith normal form `U * A * V = S` with unimodular `U`, `V` and diagonal
/// `S` whose entries are nonnegative and divide their successors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SnfDecomposition {
    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.s.rows().min(self.s.cols());
        (0..n)
            .map(|i| self.s.get(i, i).clone())
            .filter(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn find_pivot(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..s.rows() {
        for j in t..s.cols() {
            let e = s.get(i, j);
            if e.is_zero() {
                continue;
            }
            match &best {
                Some((bi, bj)) if s.get(*bi, *bj).abs() <= e.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Smith normal form of a nonempty matrix.
pub fn smith_normal_form(a: &IntMatrix) -> SnfDecomposition {
    let m = a.rows();
    let n = a.cols();
    let mut s = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = find_pivot(&s, t) else {
            break;
        };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        'reduce: loop {
            // Clear column t with row operations.
            loop {
                let mut clean = true;
                for i in t + 1..m {
                    if s.get(i, t).is_zero() {
                        continue;
                    }
                    let q = -(s.get(i, t) / s.get(t, t));
                    if !q.is_zero() {
                        s.add_row_multiple(i, t, &q);
                        u.add_row_multiple(i, t, &q);
                    }
                    if !s.get(i, t).is_zero() {
                        // remainder became the smaller pivot
                        s.swap_rows(t, i);
                        u.swap_rows(t, i);
                        clean = false;
                    }
                }
                if clean {
                    break;
                }
            }
            // Clear row t with column operations; a column swap here dirties
            // column t, in which case we start over.
            let mut swapped = false;
            loop {
                let mut clean = true;
                for j in t + 1..n {
                    if s.get(t, j).is_zero() {
                        continue;
                    }
                    let q = -(s.get(t, j) / s.get(t, t));
                    if !q.is_zero() {
                        s.add_col_multiple(j, t, &q);
                        v.add_col_multiple(j, t, &q);
                    }
                    if !s.get(t, j).is_zero() {
                        s.swap_cols(t, j);
                        v.swap_cols(t, j);
                        clean = false;
                        swapped = true;
                    }
                }
                if clean {
                    break;
                }
            }
            if swapped {
                continue 'reduce;
            }
            // Divisibility sweep: the pivot must divide the rest of the
            // submatrix before moving on.
            let d = s.get(t, t).clone();
            let mut offender = None;
            'search: for i in t + 1..m {
                for j in t + 1..n {
                    if !(s.get(i, j) % &d).is_zero() {
                        offender = Some(i);
                        break 'search;
                    }
                }
            }
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    s.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    SnfDecomposition { u, s, v }
}

/// Rank of the matrix over the rationals.
pub fn rank(a: &IntMatrix) -> usize {
    if a.rows() == 0 || a.cols() == 0 {
        return 0;
    }
    smith_normal_form(a).rank()
}

/// True when the generators (rows) extend to a basis of the ambient lattice:
/// full rank with every invariant factor equal to one.
pub fn spans_saturated_sublattice(a: &IntMatrix) -> bool {
    if a.rows() == 0 {
        return true;
    }
    let snf = smith_normal_form(a);
    let factors = snf.invariant_factors();
    factors.len() == a.rows() && factors.iter().all(|d| d.is_one())
}

/// Whether the gcd of the entries is one. The zero vector is rejected.
pub fn is_primitive(v: &[BigInt]) -> Result<bool> {
    if v.is_empty() || v.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    let mut g = BigInt::zero();
    for e in v {
        g = g.gcd(e);
    }
    Ok(g.is_one())
}

/// Canonical row-style Hermite normal form of the lattice spanned by `rows`.
/// Row operations only; pivots positive, entries above a pivot reduced into
/// `[0, pivot)`; zero rows dropped. The result depends only on the spanned
/// lattice, which makes it a canonical label for golden tests.
pub fn hermite_normal_form(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut mat: Vec<Vec<BigInt>> = rows.to_vec();
    let k = mat.len();
    if k == 0 {
        return mat;
    }
    let n = mat[0].len();
    let mut pivot_row = 0;
    for col in 0..n {
        if pivot_row == k {
            break;
        }
        // gcd-eliminate the column below pivot_row
        loop {
            let mut best: Option<usize> = None;
            for i in pivot_row..k {
                if mat[i][col].is_zero() {
                    continue;
                }
                match best {
                    Some(b) if mat[b][col].abs() <= mat[i][col].abs() => {}
                    _ => best = Some(i),
                }
            }
            let Some(b) = best else {
                break;
            };
            mat.swap(pivot_row, b);
            let mut clean = true;
            for i in pivot_row + 1..k {
                if mat[i][col].is_zero() {
                    continue;
                }
                let q = &mat[i][col] / &mat[pivot_row][col];
                if !q.is_zero() {
                    for c in 0..n {
                        let v = &mat[i][c] - &q * &mat[pivot_row][c];
                        mat[i][c] = v;
                    }
                }
                if !mat[i][col].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if mat[pivot_row][col].is_zero() {
            continue;
        }
        if mat[pivot_row][col].is_negative() {
            for c in 0..n {
                let v = -mat[pivot_row][c].clone();
                mat[pivot_row][c] = v;
            }
        }
        // reduce entries above the pivot into [0, pivot)
        for i in 0..pivot_row {
            let q = mat[i][col].div_floor(&mat[pivot_row][col]);
            if !q.is_zero() {
                for c in 0..n {
                    let v = &mat[i][c] - &q * &mat[pivot_row][c];
                    mat[i][c] = v;
                }
            }
        }
        pivot_row += 1;
    }
    mat.retain(|r| !r.iter().all(Zero::is_zero));
    mat
}

/// Basis of the saturated integer kernel `{v : A v = 0}`, in canonical
/// Hermite form. Empty when the kernel is trivial.
pub fn kernel_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    if a.cols() == 0 {
        return Vec::new();
    }
    if a.rows() == 0 {
        return hermite_normal_form(&IntMatrix::identity(a.cols()).row_vectors());
    }
    let snf = smith_normal_form(a);
    let r = snf.rank();
    let gens: Vec<Vec<BigInt>> = (r..a.cols()).map(|j| snf.v.column(j)).collect();
    hermite_normal_form(&gens)
}

/// Express `target` as an integer combination of independent `basis` rows.
/// Returns the coefficients, or `None` when no integer combination exists.
pub fn integer_coordinates(basis: &[Vec<BigInt>], target: &[BigInt]) -> Option<Vec<BigInt>> {
    if basis.is_empty() {
        return if target.iter().all(Zero::is_zero) {
            Some(Vec::new())
        } else {
            None
        };
    }
    let n = target.len();
    let rows: Vec<Vec<BigRational>> = (0..n)
        .map(|c| {
            basis
                .iter()
                .map(|b| BigRational::from_integer(b[c].clone()))
                .collect()
        })
        .collect();
    let rhs: Vec<BigRational> = target
        .iter()
        .map(|e| BigRational::from_integer(e.clone()))
        .collect();
    let sol = solve_exact(&rows, &rhs)?;
    // the solve is consistent; demand integrality and exactness
    if !sol.iter().all(BigRational::is_integer) {
        return None;
    }
    let coeffs: Vec<BigInt> = sol.iter().map(BigRational::to_integer).collect();
    for c in 0..n {
        let mut acc = BigInt::zero();
        for (b, q) in basis.iter().zip(&coeffs) {
            acc += &b[c] * q;
        }
        if acc != target[c] {
            return None;
        }
    }
    Some(coeffs)
}

/// Solve `A x = b` exactly over the rationals by Gaussian elimination.
/// Returns `None` when the system is inconsistent; free variables (if any)
/// are pinned to zero so the answer is deterministic.
pub fn solve_exact(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let m = a.len();
    if m != b.len() {
        return None;
    }
    let n = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..m).find(|&i| !aug[i][col].is_zero()) else {
            continue;
        };
        aug.swap(row, p);
        let inv = aug[row][col].recip();
        for c in col..=n {
            let v = &aug[row][c] * &inv;
            aug[row][c] = v;
        }
        for i in 0..m {
            if i != row && !aug[i][col].is_zero() {
                let f = aug[i][col].clone();
                for c in col..=n {
                    let v = &aug[i][c] - &f * &aug[row][c];
                    aug[i][c] = v;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == m {
            break;
        }
    }
    // inconsistent when a zero row has nonzero rhs
    for r in aug.iter().skip(row) {
        if !r[n].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); n];
    for (r, &col) in pivot_cols.iter().enumerate() {
        x[col] = aug[r][n].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        let v: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&e| BigInt::from(e)).collect())
            .collect();
        IntMatrix::from_rows(&v).unwrap()
    }

    fn bigvec(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&e| BigInt::from(e)).collect()
    }

    fn check_snf(a: &IntMatrix) -> SnfDecomposition {
        let snf = smith_normal_form(a);
        // U A V = S
        let uav = snf.u.mul(a).unwrap().mul(&snf.v).unwrap();
        assert_eq!(uav, snf.s);
        // unimodularity
        let du = snf.u.det().unwrap();
        let dv = snf.v.det().unwrap();
        assert!(du.abs().is_one(), "det U = {du}");
        assert!(dv.abs().is_one(), "det V = {dv}");
        // diagonal, nonnegative, divisibility chain
        for r in 0..snf.s.rows() {
            for c in 0..snf.s.cols() {
                if r != c {
                    assert!(snf.s.get(r, c).is_zero());
                }
            }
        }
        let n = snf.s.rows().min(snf.s.cols());
        for i in 0..n {
            assert!(!snf.s.get(i, i).is_negative());
            if i + 1 < n && !snf.s.get(i, i).is_zero() {
                let next = snf.s.get(i + 1, i + 1);
                assert!((next % snf.s.get(i, i)).is_zero());
            }
            if snf.s.get(i, i).is_zero() && i + 1 < n {
                assert!(snf.s.get(i + 1, i + 1).is_zero());
            }
        }
        snf
    }

    #[test]
    fn snf_identity_is_identity() {
        let a = IntMatrix::identity(2);
        let snf = check_snf(&a);
        assert_eq!(snf.u, IntMatrix::identity(2));
        assert_eq!(snf.s, IntMatrix::identity(2));
        assert_eq!(snf.v, IntMatrix::identity(2));
    }

    #[test]
    fn snf_diag_2_3() {
        let a = mat(&[&[2, 0], &[0, 3]]);
        let snf = check_snf(&a);
        assert_eq!(snf.invariant_factors(), bigvec(&[1, 6]));
    }

    #[test]
    fn snf_projective_plane_ray_matrix() {
        let a = mat(&[&[1, 0], &[0, 1], &[-1, -1]]);
        let snf = check_snf(&a);
        assert_eq!(snf.invariant_factors(), bigvec(&[1, 1]));
    }

    #[test]
    fn snf_recomposes_on_random_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
        for _ in 0..40 {
            let rows = rng.gen_range(1..=4);
            let cols = rng.gen_range(1..=4);
            let entries: Vec<BigInt> = (0..rows * cols)
                .map(|_| BigInt::from(rng.gen_range(-9i64..=9)))
                .collect();
            let a = IntMatrix::new(rows, cols, entries).unwrap();
            let snf = check_snf(&a);
            let ui = snf.u.inverse_unimodular().expect("U unimodular");
            let vi = snf.v.inverse_unimodular().expect("V unimodular");
            let back = ui.mul(&snf.s).unwrap().mul(&vi).unwrap();
            assert_eq!(back, a);
        }
    }

    #[test]
    fn kernel_of_hirzebruch_ray_pairing() {
        // columns are the rays (-1,2),(0,1),(1,0),(0,-1)
        let a = mat(&[&[-1, 0, 1, 0], &[2, 1, 0, -1]]);
        let basis = kernel_basis(&a);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(a.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
        // spans the same lattice as {(0,1,0,1),(1,-2,1,0)}
        let expected = hermite_normal_form(&[bigvec(&[0, 1, 0, 1]), bigvec(&[1, -2, 1, 0])]);
        assert_eq!(basis, expected);
        // saturation: the basis extends to a basis of Z^4
        let bmat = IntMatrix::from_rows(&basis).unwrap();
        assert!(spans_saturated_sublattice(&bmat));
    }

    #[test]
    fn kernel_of_zero_map_is_standard_basis() {
        let a = IntMatrix::zero(1, 3);
        let basis = kernel_basis(&a);
        assert_eq!(
            basis,
            vec![bigvec(&[1, 0, 0]), bigvec(&[0, 1, 0]), bigvec(&[0, 0, 1])]
        );
    }

    #[test]
    fn kernel_of_invertible_matrix_is_empty() {
        let a = mat(&[&[2, 1], &[1, 1]]);
        assert!(kernel_basis(&a).is_empty());
    }

    #[test]
    fn kernel_saturation_against_rational_solutions() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..25 {
            let rows = rng.gen_range(1..=3);
            let cols = rng.gen_range(2..=5);
            let entries: Vec<BigInt> = (0..rows * cols)
                .map(|_| BigInt::from(rng.gen_range(-5i64..=5)))
                .collect();
            let a = IntMatrix::new(rows, cols, entries).unwrap();
            let basis = kernel_basis(&a);
            for v in &basis {
                assert!(a.mul_vec(v).unwrap().iter().all(Zero::is_zero));
            }
            // saturation: the basis has full kernel rank and extends to a
            // basis of the ambient lattice, so every integer solution of
            // A w = 0 is an integer combination of it
            assert_eq!(basis.len(), cols - rank(&a));
            if !basis.is_empty() {
                let bmat = IntMatrix::from_rows(&basis).unwrap();
                assert!(spans_saturated_sublattice(&bmat));
            }
            for _ in 0..5 {
                let coeffs: Vec<BigInt> =
                    (0..basis.len()).map(|_| BigInt::from(rng.gen_range(-4i64..=4))).collect();
                let mut w = vec![BigInt::zero(); cols];
                for (b, c) in basis.iter().zip(&coeffs) {
                    for i in 0..cols {
                        w[i] += &b[i] * c;
                    }
                }
                assert!(a.mul_vec(&w).unwrap().iter().all(Zero::is_zero));
                assert_eq!(integer_coordinates(&basis, &w), Some(coeffs));
            }
        }
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive(&bigvec(&[-1, 2])).unwrap());
        assert!(!is_primitive(&bigvec(&[2, 4])).unwrap());
        assert_eq!(is_primitive(&bigvec(&[0, 0])), Err(Error::ZeroVector));
    }

    #[test]
    fn hermite_form_is_canonical_for_a_lattice() {
        // two generating sets of the same lattice reduce to the same form
        let g1 = vec![bigvec(&[2, 1, 0]), bigvec(&[0, 3, 1])];
        let g2 = vec![bigvec(&[2, 4, 1]), bigvec(&[-2, 2, 1]), bigvec(&[0, 3, 1])];
        assert_eq!(hermite_normal_form(&g1), hermite_normal_form(&g2));
    }

    #[test]
    fn solve_exact_handles_inconsistency() {
        let one = BigRational::one;
        let a = vec![vec![one(), one()], vec![one(), one()]];
        let b = vec![one(), one() + one()];
        assert!(solve_exact(&a, &b).is_none());
    }
}
