//! Dense matrices of Laurent polynomials, unitriangular inversion with
//! respect to a partial order, and the triangular bar-invariant basis solver.

use crate::error::AlgebraError;
use crate::laurent::LaurentPoly;
use num_bigint::BigInt;

/// Row-major dense matrix over Z[q, 1/q]. Rows and columns are addressed by
/// index; callers keep their own label lists alongside.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, data: vec![LaurentPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: LaurentPoly) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &LaurentPoly) {
        let cur = &self.data[r * self.cols + c] + v;
        self.data[r * self.cols + c] = cur;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|p| p.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(c, r, self.get(r, c).clone());
            }
        }
        m
    }

    /// Entrywise bar involution q -> 1/q.
    pub fn conj(&self) -> Self {
        self.map(|p| p.bar())
    }

    pub fn map<F: Fn(&LaurentPoly) -> LaurentPoly>(&self, f: F) -> Self {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> Result<PolyMatrix, AlgebraError> {
        if self.cols != rhs.rows {
            return Err(AlgebraError::ShapeMismatch);
        }
        let mut out = PolyMatrix::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    out.add_to(r, c, &(a * b));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &PolyMatrix) -> Result<PolyMatrix, AlgebraError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(AlgebraError::ShapeMismatch);
        }
        let mut out = self.clone();
        for i in 0..out.data.len() {
            out.data[i] = &out.data[i] + &rhs.data[i];
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &PolyMatrix) -> Result<PolyMatrix, AlgebraError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(AlgebraError::ShapeMismatch);
        }
        let mut out = self.clone();
        for i in 0..out.data.len() {
            out.data[i] = &out.data[i] - &rhs.data[i];
        }
        Ok(out)
    }

    pub fn scale(&self, p: &LaurentPoly) -> PolyMatrix {
        self.map(|e| e * p)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[LaurentPoly]) -> Result<Vec<LaurentPoly>, AlgebraError> {
        if v.len() != self.cols {
            return Err(AlgebraError::ShapeMismatch);
        }
        let mut out = vec![LaurentPoly::zero(); self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.get(r, c);
                if a.is_zero() || v[c].is_zero() {
                    continue;
                }
                out[r] += &(a * &v[c]);
            }
        }
        Ok(out)
    }

    pub fn column(&self, c: usize) -> Vec<LaurentPoly> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// Evaluate every entry at q = 1.
    pub fn eval_one(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).eval_one()).collect())
            .collect()
    }
}

impl std::fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Check that m is unitriangular for `leq`: ones on the diagonal and
/// m[r][c] == 0 whenever r != c and not leq(r, c).
fn check_unitriangular(m: &PolyMatrix, leq: &dyn Fn(usize, usize) -> bool) -> Result<(), AlgebraError> {
    if !m.is_square() {
        return Err(AlgebraError::NotUnitriangular);
    }
    for r in 0..m.rows {
        if !m.get(r, r).is_one() {
            return Err(AlgebraError::NotUnitriangular);
        }
        for c in 0..m.cols {
            if r != c && !m.get(r, c).is_zero() && !leq(r, c) {
                return Err(AlgebraError::NotUnitriangular);
            }
        }
    }
    Ok(())
}

/// Invert a matrix that is unitriangular with respect to the partial order
/// `leq` (nonzero off-diagonal entries only at r < c). Exact; never divides.
pub fn invert_unitriangular(
    m: &PolyMatrix,
    leq: &dyn Fn(usize, usize) -> bool,
) -> Result<PolyMatrix, AlgebraError> {
    check_unitriangular(m, leq)?;
    let n = m.rows;
    // N = I - M is nilpotent; the inverse is the finite Neumann series.
    let ident = PolyMatrix::identity(n);
    let nil = ident.sub(m)?;
    let mut inv = PolyMatrix::identity(n);
    let mut pow = nil.clone();
    while !pow.is_zero() {
        inv = inv.add(&pow)?;
        pow = pow.mul(&nil)?;
    }
    Ok(inv)
}

/// A semilinear map v -> M . bar(v) whose matrix is an involution in the
/// semilinear sense: M . bar(M) = I. Column c of M is the expansion of the
/// image of the c-th basis vector.
#[derive(Clone, Debug)]
pub struct BarSemilinearMap {
    pub matrix: PolyMatrix,
}

impl BarSemilinearMap {
    pub fn new(matrix: PolyMatrix) -> Result<Self, AlgebraError> {
        if !matrix.is_square() {
            return Err(AlgebraError::ShapeMismatch);
        }
        let prod = matrix.mul(&matrix.conj())?;
        if prod != PolyMatrix::identity(matrix.rows) {
            return Err(AlgebraError::NotUnitriangular);
        }
        Ok(BarSemilinearMap { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows
    }

    pub fn apply(&self, v: &[LaurentPoly]) -> Result<Vec<LaurentPoly>, AlgebraError> {
        let conj: Vec<LaurentPoly> = v.iter().map(|p| p.bar()).collect();
        self.matrix.apply(&conj)
    }
}

/// Which side of the two canonical lattices the off-diagonal coefficients of
/// the solved basis must lie in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lattice {
    /// q Z[q]: the dual-canonical normalization.
    Below,
    /// q^{-1} Z[q^{-1}]: the canonical normalization.
    Above,
}

/// Compute a linear extension of the partial order `leq` on 0..n, stably:
/// among minimal remaining elements the smallest index goes first.
pub fn linear_extension(n: usize, leq: &dyn Fn(usize, usize) -> bool) -> Vec<usize> {
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    while !remaining.is_empty() {
        let pos = remaining
            .iter()
            .position(|&a| remaining.iter().all(|&b| b == a || !leq(b, a)))
            .expect("partial order has a minimal element");
        out.push(remaining.remove(pos));
    }
    out
}

/// Triangular construction of the unique bar-invariant basis: for each label
/// A the result column is e_A plus corrections f_B e_B over B < A, with every
/// f_B in the requested lattice, and each column fixed by the bar map.
///
/// `extension` must be a linear extension of `leq`; pass None to use a
/// default one. The result does not depend on the choice.
pub fn lusztig_solve(
    bar: &BarSemilinearMap,
    leq: &dyn Fn(usize, usize) -> bool,
    lattice: Lattice,
    extension: Option<&[usize]>,
) -> Result<PolyMatrix, AlgebraError> {
    check_unitriangular(&bar.matrix, leq)?;
    let n = bar.dim();
    let default_ext;
    let ext: &[usize] = match extension {
        Some(e) => {
            if e.len() != n {
                return Err(AlgebraError::ShapeMismatch);
            }
            e
        }
        None => {
            default_ext = linear_extension(n, leq);
            &default_ext
        }
    };
    // position of each label in the extension
    let mut pos = vec![0usize; n];
    for (i, &a) in ext.iter().enumerate() {
        pos[a] = i;
    }

    let mut out = PolyMatrix::identity(n);
    for a in 0..n {
        let mut col: Vec<LaurentPoly> = vec![LaurentPoly::zero(); n];
        col[a] = LaurentPoly::one();
        // Correct coefficients working down the linear extension from A.
        for idx in (0..pos[a]).rev() {
            let b = ext[idx];
            if !leq(b, a) {
                continue;
            }
            let image = bar.apply(&col)?;
            let r = &image[b] - &col[b];
            if r.is_zero() {
                continue;
            }
            // r must satisfy bar(r) = -r, i.e. r = sum a_k (q^k - q^{-k}).
            if r.bar() != -&r {
                return Err(AlgebraError::NoSolution);
            }
            let mut gamma = LaurentPoly::zero();
            for (e, c) in r.iter() {
                if *e > 0 {
                    match lattice {
                        Lattice::Below => gamma.add_term(*e, c),
                        Lattice::Above => gamma.add_term(-e, &(-c.clone())),
                    }
                }
            }
            debug_assert_eq!(&gamma - &gamma.bar(), r);
            col[b] = &col[b] + &gamma;
        }
        // Final invariance check.
        let image = bar.apply(&col)?;
        if image != col {
            return Err(AlgebraError::NoSolution);
        }
        for (b, v) in col.into_iter().enumerate() {
            out.set(b, a, v);
        }
    }
    Ok(out)
}
