//! Dense matrices over a [`Field`]: row reduction, nullspaces, inverses and
//! characteristic polynomials, all exact.

use super::{Field, FieldElem, Poly};
use crate::error::{Error, Result};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElem>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{}", self.field.index_of(self[(i, j)])))
                .collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = FieldElem;
    fn index(&self, (i, j): (usize, usize)) -> &FieldElem {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut FieldElem {
        &mut self.entries[i * self.cols + j]
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// Builds a matrix from tagged elements, rejecting entries from a
    /// different field.
    pub fn from_entries(field: &Field, rows: usize, cols: usize, entries: Vec<FieldElem>) -> Result<Matrix> {
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        if entries.iter().any(|&e| !field.owns(e)) {
            return Err(Error::FieldMismatch);
        }
        Ok(Matrix { field: field.clone(), rows, cols, entries })
    }

    pub fn from_ints(field: &Field, data: &[&[i64]]) -> Matrix {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(rows * cols);
        for row in data {
            assert_eq!(row.len(), cols, "ragged rows");
            entries.extend(row.iter().map(|&v| field.from_int(v)));
        }
        Matrix { field: field.clone(), rows, cols, entries }
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<FieldElem>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend_from_slice(row);
        }
        Matrix::from_entries(field, r, c, entries)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| self.field.is_zero(e))
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let f = &self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(Matrix { field: f.clone(), rows: self.rows, cols: self.cols, entries })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.scale(self.field.from_int(-1)))
    }

    pub fn scale(&self, c: FieldElem) -> Matrix {
        let f = &self.field;
        let entries = self.entries.iter().map(|&a| f.mul(a, c)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, entries }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let t = f.mul(a, other[(k, j)]);
                    out[(i, j)] = f.add(out[(i, j)], t);
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    /// Image of a coordinate vector under the matrix (vector written as a row).
    pub fn apply(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = f.zero();
            for j in 0..self.cols {
                acc = f.add(acc, f.mul(self[(i, j)], v[j]));
            }
            out[i] = acc;
        }
        out
    }

    pub fn trace(&self) -> FieldElem {
        assert!(self.is_square(), "trace of a non-square matrix");
        let f = &self.field;
        let mut acc = f.zero();
        for i in 0..self.rows {
            acc = f.add(acc, self[(i, i)]);
        }
        acc
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !f.is_zero(self[(i, c)])) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.entries.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self[(r, c)]);
            for j in c..self.cols {
                self[(r, j)] = f.mul(self[(r, j)], inv);
            }
            for i in 0..self.rows {
                if i == r || f.is_zero(self[(i, c)]) {
                    continue;
                }
                let factor = self[(i, c)];
                for j in c..self.cols {
                    let t = f.mul(factor, self[(r, j)]);
                    self[(i, j)] = f.sub(self[(i, j)], t);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Row-reduced basis of the solution space of Ax = 0, one basis vector
    /// per row, in reduced echelon form.
    pub fn kernel_basis(&self) -> Matrix {
        let f = &self.field;
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(f, free.len(), self.cols);
        for (bi, &fc) in free.iter().enumerate() {
            basis[(bi, fc)] = f.one();
            for (pi, &pc) in pivots.iter().enumerate() {
                basis[(bi, pc)] = f.neg(m[(pi, fc)]);
            }
        }
        basis.rref_in_place();
        basis
    }

    /// Solves Ax = b, returning one solution if the system is consistent.
    pub fn solve(&self, b: &[FieldElem]) -> Option<Vec<FieldElem>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let f = &self.field;
        let mut aug = Matrix::zeros(f, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, self.cols)] = b[i];
        }
        let pivots = aug.rref_in_place();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug[(r, self.cols)];
        }
        Some(x)
    }

    /// Inverse of a square matrix, or `SingularMatrix`.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let f = &self.field;
        let n = self.rows;
        let mut aug = Matrix::zeros(f, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = f.one();
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::SingularMatrix);
        }
        let mut out = Matrix::zeros(f, n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = aug[(i, n + j)];
            }
        }
        Ok(out)
    }

    /// Monic characteristic polynomial det(tI - A), via a similarity
    /// reduction to upper Hessenberg form and the standard recurrence.
    pub fn char_poly(&self) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let f = &self.field;
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::constant(f, f.one()));
        }
        let mut h = self.clone();
        // Hessenberg reduction by simultaneous row and column operations
        for c in 0..n.saturating_sub(2) {
            let Some(pr) = ((c + 1)..n).find(|&i| !f.is_zero(h[(i, c)])) else {
                continue;
            };
            if pr != c + 1 {
                for j in 0..n {
                    h.entries.swap(pr * n + j, (c + 1) * n + j);
                }
                for i in 0..n {
                    h.entries.swap(i * n + pr, i * n + c + 1);
                }
            }
            let pivot_inv = f.inv(h[(c + 1, c)]);
            for i in (c + 2)..n {
                let factor = f.mul(h[(i, c)], pivot_inv);
                if f.is_zero(factor) {
                    continue;
                }
                for j in 0..n {
                    let t = f.mul(factor, h[(c + 1, j)]);
                    h[(i, j)] = f.sub(h[(i, j)], t);
                }
                for i2 in 0..n {
                    let t = f.mul(factor, h[(i2, i)]);
                    h[(i2, c + 1)] = f.add(h[(i2, c + 1)], t);
                }
            }
        }
        // char polys p_m of the leading m x m blocks of a Hessenberg matrix
        let mut ps: Vec<Poly> = vec![Poly::constant(f, f.one())];
        for m in 1..=n {
            let t_minus = Poly::new(f, vec![f.neg(h[(m - 1, m - 1)]), f.one()]);
            let mut pm = t_minus.mul(&ps[m - 1]);
            let mut subdiag = f.one();
            for i in (1..m).rev() {
                subdiag = f.mul(subdiag, h[(i, i - 1)]);
                if f.is_zero(subdiag) {
                    break;
                }
                let coeff = f.mul(h[(i - 1, m - 1)], subdiag);
                pm = pm.sub(&ps[i - 1].scale(coeff));
            }
            ps.push(pm);
        }
        Ok(ps.pop().expect("nonempty"))
    }

    /// Evaluates a polynomial at this matrix.
    pub fn poly_eval(&self, p: &Poly) -> Matrix {
        assert!(self.is_square());
        let f = &self.field;
        let n = self.rows;
        let mut acc = Matrix::zeros(f, n, n);
        if p.is_zero() {
            return acc;
        }
        for i in (0..=p.degree()).rev() {
            acc = acc.mul(self).expect("same field");
            let c = p.coeff(i);
            for d in 0..n {
                acc[(d, d)] = f.add(acc[(d, d)], c);
            }
        }
        acc
    }

    /// Characteristic polynomial factored into irreducibles with
    /// multiplicities.
    pub fn factor_char_poly(&self, rng: &mut ChaCha8Rng) -> Result<Vec<(Poly, usize)>> {
        Ok(self.char_poly()?.factor(rng))
    }

    /// Stacks two matrices with equal column counts.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        assert_eq!(self.cols, other.cols, "column mismatch");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, entries })
    }

    /// Flattens the matrix into a single row vector (row-major).
    pub fn vec_row(&self) -> Vec<FieldElem> {
        self.entries.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn gf(p: u64) -> Field {
        Field::new(p, 1).unwrap()
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let f = gf(7);
        let id = Matrix::identity(&f, 2);
        assert_eq!(id.kernel_basis().rows(), 0);
    }

    #[test]
    fn kernel_of_zero_map() {
        let f = gf(7);
        let z = Matrix::zeros(&f, 1, 1);
        let k = z.kernel_basis();
        assert_eq!(k.rows(), 1);
        assert_eq!(k[(0, 0)], f.one());
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        let f = gf(7);
        let m = Matrix::from_ints(&f, &[&[1, 2], &[2, 4]]);
        let k = m.kernel_basis();
        assert_eq!(k.rows(), 1);
        // hand row-reduction gives x = -2y, so the kernel is spanned by (5, 1)
        let v = k.row(0);
        let expect = [f.from_int(5), f.from_int(1)];
        let ratio = f.mul(expect[0], f.inv(v[0]));
        assert_eq!(f.mul(v[0], ratio), expect[0]);
        assert_eq!(f.mul(v[1], ratio), expect[1]);
        // and A annihilates it
        assert!(m.apply(v).iter().all(|&e| f.is_zero(e)));
    }

    #[test]
    fn rank_nullity_on_seeded_random_matrices() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (p, k) in [(2u64, 1u32), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2)] {
            let field = Field::new(p, k).unwrap();
            for _ in 0..12 {
                let rows = rng.gen_range(1..6);
                let cols = rng.gen_range(1..6);
                let entries: Vec<FieldElem> =
                    (0..rows * cols).map(|_| field.nth(rng.gen_range(0..field.order()))).collect();
                let m = Matrix::from_entries(&field, rows, cols, entries).unwrap();
                let kernel = m.kernel_basis();
                assert_eq!(m.rank() + kernel.rows(), cols);
                for i in 0..kernel.rows() {
                    assert!(m.apply(kernel.row(i)).iter().all(|&e| field.is_zero(e)));
                }
            }
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let f = gf(7);
        let m = Matrix::from_ints(&f, &[&[1, 2], &[3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(&f, 2));
        let singular = Matrix::from_ints(&f, &[&[1, 2], &[2, 4]]);
        assert_eq!(singular.inverse().unwrap_err(), Error::SingularMatrix);
    }

    #[test]
    fn charpoly_of_identity() {
        let f = Field::new(5, 1).unwrap();
        let id = Matrix::identity(&f, 1);
        let cp = id.char_poly().unwrap();
        assert_eq!(cp, Poly::from_ints(&f, &[-1, 1]));
        let factors = id.factor_char_poly(&mut ChaCha8Rng::seed_from_u64(0)).unwrap();
        assert_eq!(factors, vec![(Poly::from_ints(&f, &[-1, 1]), 1)]);
    }

    #[test]
    fn charpoly_of_companion_matrices() {
        // the companion matrix of a monic f has characteristic polynomial f
        let f3 = gf(3);
        let companion = Matrix::from_ints(&f3, &[&[0, -1], &[1, 0]]);
        let cp = companion.char_poly().unwrap();
        assert_eq!(cp, Poly::from_ints(&f3, &[1, 0, 1]));
        let factors = companion.factor_char_poly(&mut ChaCha8Rng::seed_from_u64(0)).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].0, Poly::from_ints(&f3, &[1, 0, 1]));

        let f5 = gf(5);
        let companion = Matrix::from_ints(&f5, &[&[0, -1], &[1, 0]]);
        let factors = companion.factor_char_poly(&mut ChaCha8Rng::seed_from_u64(0)).unwrap();
        assert_eq!(
            factors,
            vec![(Poly::from_ints(&f5, &[2, 1]), 1), (Poly::from_ints(&f5, &[3, 1]), 1)]
        );
    }

    #[test]
    fn charpoly_matches_brute_force_determinant() {
        // oracle: Leibniz expansion of det(tI - A) over the polynomial ring
        use rand::Rng;
        fn brute_charpoly(m: &Matrix) -> Poly {
            let f = m.field();
            let n = m.rows();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut total = Poly::zero(f);
            permute(&mut perm, 0, &mut |perm, sign| {
                let mut term = Poly::constant(f, if sign { f.from_int(-1) } else { f.one() });
                for (i, &j) in perm.iter().enumerate() {
                    let entry = if i == j {
                        Poly::new(f, vec![f.neg(m[(i, j)]), f.one()])
                    } else {
                        Poly::constant(f, f.neg(m[(i, j)]))
                    };
                    term = term.mul(&entry);
                }
                total = total.add(&term);
            });
            total
        }
        fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize], bool)) {
            let n = perm.len();
            if k == n {
                let mut sign = false;
                for i in 0..n {
                    for j in (i + 1)..n {
                        if perm[i] > perm[j] {
                            sign = !sign;
                        }
                    }
                }
                visit(perm, sign);
                return;
            }
            for i in k..n {
                perm.swap(k, i);
                permute(perm, k + 1, visit);
                perm.swap(k, i);
            }
        }

        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (p, k) in [(2u64, 1u32), (3, 1), (5, 1), (2, 2)] {
            let field = Field::new(p, k).unwrap();
            for n in 1..=4usize {
                for _ in 0..6 {
                    let entries: Vec<FieldElem> =
                        (0..n * n).map(|_| field.nth(rng.gen_range(0..field.order()))).collect();
                    let m = Matrix::from_entries(&field, n, n, entries).unwrap();
                    assert_eq!(m.char_poly().unwrap(), brute_charpoly(&m), "n={n} q={}", field.order());
                }
            }
        }
    }

    #[test]
    fn factor_charpoly_requires_square() {
        let f = gf(5);
        let m = Matrix::zeros(&f, 2, 3);
        assert!(matches!(m.char_poly(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn field_mismatch_detected() {
        let f5 = gf(5);
        let f7 = gf(7);
        let a = Matrix::identity(&f5, 2);
        let b = Matrix::identity(&f7, 2);
        assert_eq!(a.mul(&b).unwrap_err(), Error::FieldMismatch);
        assert_eq!(
            Matrix::from_entries(&f5, 1, 1, vec![f7.one()]).unwrap_err(),
            Error::FieldMismatch
        );
    }
}
