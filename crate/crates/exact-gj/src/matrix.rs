//! Dense matrices, submatrix assembly, bordered minors, and two independent
//! determinant routines.
//!
//! Indexing on the public surface is 1-based, row first. This mirrors the
//! usual a_{i,j} notation of the elimination literature; internal storage is
//! 0-based row-major and never leaks.
//!
//! The bordered minors are computed the transparent way: assemble the
//! explicit submatrix, then take its determinant. This module plays the
//! trusted-oracle role for everything downstream, so clarity wins over
//! speed here.

use crate::error::Error;
use crate::scalar::{ExactInt, Rational, Scalar};
use num_traits::{One, Zero};

/// Dense rectangular matrix over an exact scalar, stored row-major.
///
/// Publicly constructed matrices always have at least one row and column.
/// Intermediate tables produced by the elimination may be empty; those are
/// built through the internal constructor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    /// Builds a matrix from row vectors. All rows must have the same
    /// nonzero length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Matrix<T>, Error> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::dim("matrix must have at least one row and column"));
        }
        let cols = rows[0].len();
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::dim(format!(
                "row length {} differs from first row length {}",
                bad.len(),
                cols
            )));
        }
        let n = rows.len();
        let data = rows.into_iter().flatten().collect();
        Ok(Matrix { rows: n, cols, data })
    }

    pub(crate) fn from_raw(rows: usize, cols: usize, data: Vec<T>) -> Matrix<T> {
        debug_assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
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

    /// Entry at row `i`, column `j`, both 1-based. Panics when out of range.
    pub fn at(&self, i: usize, j: usize) -> &T {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "entry ({i},{j}) outside {}x{} matrix",
            self.rows,
            self.cols
        );
        &self.data[(i - 1) * self.cols + (j - 1)]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, value: T) {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j));
        self.data[(i - 1) * self.cols + (j - 1)] = value;
    }

    /// Row `i` (1-based) as a slice.
    pub fn row(&self, i: usize) -> &[T] {
        assert!((1..=self.rows).contains(&i));
        &self.data[(i - 1) * self.cols..i * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.cols.max(1))
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Clone> Matrix<T> {
    /// Selects `row_idx` x `col_idx` (1-based, strictly increasing) as a new
    /// matrix, order preserved.
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Result<Matrix<T>, Error> {
        check_index_list(row_idx, self.rows)?;
        check_index_list(col_idx, self.cols)?;
        let mut data = Vec::with_capacity(row_idx.len() * col_idx.len());
        for &i in row_idx {
            for &j in col_idx {
                data.push(self.at(i, j).clone());
            }
        }
        Ok(Matrix::from_raw(row_idx.len(), col_idx.len(), data))
    }

    pub fn transpose(&self) -> Matrix<T> {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 1..=self.cols {
            for i in 1..=self.rows {
                data.push(self.at(i, j).clone());
            }
        }
        Matrix::from_raw(self.cols, self.rows, data)
    }

    /// Horizontal concatenation `[self | right]`.
    pub fn augment(&self, right: &Matrix<T>) -> Result<Matrix<T>, Error> {
        if self.rows != right.rows {
            return Err(Error::dim(format!(
                "cannot augment {}x{} with {}x{}",
                self.rows, self.cols, right.rows, right.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * (self.cols + right.cols));
        for i in 1..=self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(right.row(i));
        }
        Ok(Matrix::from_raw(self.rows, self.cols + right.cols, data))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        assert!((1..=self.rows).contains(&a) && (1..=self.rows).contains(&b));
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap((a - 1) * self.cols + j, (b - 1) * self.cols + j);
        }
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        assert!((1..=self.cols).contains(&j));
        (1..=self.rows).map(|i| self.at(i, j).clone()).collect()
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn identity(n: usize) -> Matrix<T> {
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = T::one();
        }
        Matrix::from_raw(n, n, data)
    }

    pub fn zero(rows: usize, cols: usize) -> Matrix<T> {
        Matrix::from_raw(rows, cols, vec![T::zero(); rows * cols])
    }

    pub fn mul(&self, rhs: &Matrix<T>) -> Result<Matrix<T>, Error> {
        if self.cols != rhs.rows {
            return Err(Error::dim(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for i in 1..=self.rows {
            for j in 1..=rhs.cols {
                let mut acc = T::zero();
                for t in 1..=self.cols {
                    acc = acc + self.at(i, t).clone() * rhs.at(t, j).clone();
                }
                data.push(acc);
            }
        }
        Ok(Matrix::from_raw(self.rows, rhs.cols, data))
    }
}

impl Matrix<ExactInt> {
    pub fn to_rational(&self) -> Matrix<Rational> {
        self.map(|v| v.to_rational())
    }
}

fn check_index_list(idx: &[usize], bound: usize) -> Result<(), Error> {
    if idx.is_empty() {
        return Err(Error::dim("index list must not be empty"));
    }
    for pair in idx.windows(2) {
        if pair[0] >= pair[1] {
            return Err(Error::dim(format!(
                "index list must be strictly increasing, got {} before {}",
                pair[0], pair[1]
            )));
        }
    }
    for &i in idx {
        if i == 0 || i > bound {
            return Err(Error::IndexOutOfBounds { index: i, bound });
        }
    }
    Ok(())
}

/// Size cap for [`det_cofactor`]; the expansion is factorial in the size.
pub const COFACTOR_CAP: usize = 10;

/// Determinant by recursive cofactor expansion along the first row.
///
/// Deliberately naive: this is the independent oracle the fast routines are
/// tested against. Refuses matrices larger than [`COFACTOR_CAP`].
pub fn det_cofactor<T: Scalar>(a: &Matrix<T>) -> Result<T, Error> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if a.rows() > COFACTOR_CAP {
        return Err(Error::TooLarge {
            size: a.rows(),
            limit: COFACTOR_CAP,
        });
    }
    Ok(cofactor_rec(a))
}

fn cofactor_rec<T: Scalar>(a: &Matrix<T>) -> T {
    let n = a.rows();
    if n == 0 {
        return T::one();
    }
    if n == 1 {
        return a.at(1, 1).clone();
    }
    let rows: Vec<usize> = (2..=n).collect();
    let mut acc = T::zero();
    for j in 1..=n {
        if a.at(1, j).is_zero() {
            continue;
        }
        let cols: Vec<usize> = (1..=n).filter(|&c| c != j).collect();
        let minor = a.submatrix(&rows, &cols).expect("indices in range");
        let term = a.at(1, j).clone() * cofactor_rec(&minor);
        acc = if j % 2 == 1 { acc + term } else { acc - term };
    }
    acc
}

/// Determinant by fraction-free elimination with row pivoting.
///
/// Works on any square matrix (no nonzero-minor hypothesis): a zero pivot
/// triggers a row swap with sign tracking, and a fully zero pivot column
/// short-circuits to zero. Every internal division is exact.
pub fn det_bareiss<T: Scalar>(a: &Matrix<T>) -> Result<T, Error> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    if n == 0 {
        return Ok(T::one());
    }
    let mut m: Vec<Vec<T>> = (1..=n).map(|i| a.row(i).to_vec()).collect();
    let mut negated = false;
    let mut prev_pivot = T::one();
    for k in 0..n - 1 {
        let Some(r) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return Ok(T::zero());
        };
        if r != k {
            m.swap(r, k);
            negated = !negated;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = m[k][k].clone() * m[i][j].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = cross.exact_div(&prev_pivot)?;
            }
        }
        prev_pivot = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negated { -det } else { det })
}

/// Which side of the diagonal a bordered minor lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorVariant {
    /// Rows 1..k plus row i, columns 1..k plus column j (i > k, j > k).
    BelowDiagonal,
    /// Rows 1..k, columns 1..k with column i removed, plus column j,
    /// taken with a leading minus sign (i < k, j > k).
    AboveDiagonal,
}

/// Names one bordered minor of a matrix: the level `k` together with the
/// border position `(i, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BorderedMinorSpec {
    pub k: usize,
    pub i: usize,
    pub j: usize,
    pub variant: MinorVariant,
}

impl BorderedMinorSpec {
    pub fn below(k: usize, i: usize, j: usize) -> Self {
        BorderedMinorSpec {
            k,
            i,
            j,
            variant: MinorVariant::BelowDiagonal,
        }
    }

    pub fn above(k: usize, i: usize, j: usize) -> Self {
        BorderedMinorSpec {
            k,
            i,
            j,
            variant: MinorVariant::AboveDiagonal,
        }
    }

    fn validate(&self, rows: usize, cols: usize) -> Result<(), Error> {
        let oob = |index: usize, bound: usize| Error::IndexOutOfBounds { index, bound };
        if self.k == 0 || self.k > rows {
            return Err(oob(self.k, rows));
        }
        if self.k > cols {
            return Err(oob(self.k, cols));
        }
        if self.i == 0 || self.i > rows {
            return Err(oob(self.i, rows));
        }
        if self.j == 0 || self.j > cols {
            return Err(oob(self.j, cols));
        }
        match self.variant {
            MinorVariant::BelowDiagonal => {
                if self.i <= self.k || self.j <= self.k {
                    return Err(Error::InvalidCase {
                        detail: format!(
                            "below-diagonal minor needs i > k and j > k, got k={}, i={}, j={}",
                            self.k, self.i, self.j
                        ),
                    });
                }
            }
            MinorVariant::AboveDiagonal => {
                if self.i >= self.k || self.j <= self.k {
                    return Err(Error::InvalidCase {
                        detail: format!(
                            "above-diagonal minor needs i < k and j > k, got k={}, i={}, j={}",
                            self.k, self.i, self.j
                        ),
                    });
                }
            }
        }
        Ok(())
    }
}

/// The level-`k` fraction-free value for a border position below the
/// diagonal: the determinant of rows 1..k plus row `i` over columns 1..k
/// plus column `j` of the source matrix.
pub fn bordered_minor_below<T: Scalar>(
    a: &Matrix<T>,
    spec: &BorderedMinorSpec,
) -> Result<T, Error> {
    if spec.variant != MinorVariant::BelowDiagonal {
        return Err(Error::InvalidCase {
            detail: "expected a below-diagonal spec".into(),
        });
    }
    spec.validate(a.rows(), a.cols())?;
    let mut rows: Vec<usize> = (1..=spec.k).collect();
    rows.push(spec.i);
    let mut cols: Vec<usize> = (1..=spec.k).collect();
    cols.push(spec.j);
    det_bareiss(&a.submatrix(&rows, &cols)?)
}

/// The level-`k` fraction-free value for a border position above the
/// diagonal: minus the determinant of rows 1..k over columns 1..k with
/// column `i` removed and column `j` appended.
pub fn bordered_minor_above<T: Scalar>(
    a: &Matrix<T>,
    spec: &BorderedMinorSpec,
) -> Result<T, Error> {
    if spec.variant != MinorVariant::AboveDiagonal {
        return Err(Error::InvalidCase {
            detail: "expected an above-diagonal spec".into(),
        });
    }
    spec.validate(a.rows(), a.cols())?;
    let rows: Vec<usize> = (1..=spec.k).collect();
    let mut cols: Vec<usize> = (1..=spec.k).filter(|&c| c != spec.i).collect();
    cols.push(spec.j);
    Ok(-det_bareiss(&a.submatrix(&rows, &cols)?)?)
}

/// Determinant of the top-left `k` x `k` block.
pub fn leading_principal_minor<T: Scalar>(a: &Matrix<T>, k: usize) -> Result<T, Error> {
    let bound = a.rows().min(a.cols());
    if k == 0 || k > bound {
        return Err(Error::IndexOutOfBounds { index: k, bound });
    }
    let idx: Vec<usize> = (1..=k).collect();
    det_bareiss(&a.submatrix(&idx, &idx)?)
}

/// Outcome of [`check_sylvester_identity`]: both sides of the two-bordered
/// determinant identity, evaluated independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylvesterCheck<T> {
    pub lhs: T,
    pub rhs: T,
    pub equal: bool,
}

/// Checks the bordered-determinant identity
///
/// ```text
/// |M| * | M U V |   =   | |M U|  |M V| |
///       | R a b |       | |R a|  |R b| |
///       | S c d |       | |M U|  |M V| |
///                       | |S c|  |S d| |
/// ```
///
/// i.e. the determinant of the doubly bordered matrix times `|M|` equals the
/// 2x2 determinant built from the four singly bordered determinants. Both
/// sides are computed numerically and returned.
#[allow(clippy::too_many_arguments)]
pub fn check_sylvester_identity<T: Scalar>(
    m: &Matrix<T>,
    u: &[T],
    v: &[T],
    r: &[T],
    s: &[T],
    a: &T,
    b: &T,
    c: &T,
    d: &T,
) -> Result<SylvesterCheck<T>, Error> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let p = m.rows();
    for (name, len) in [("U", u.len()), ("V", v.len()), ("R", r.len()), ("S", s.len())] {
        if len != p {
            return Err(Error::dim(format!(
                "border {name} has length {len}, expected {p}"
            )));
        }
    }

    // (p+2) x (p+2) doubly bordered matrix
    let mut big = Vec::with_capacity(p + 2);
    for i in 1..=p {
        let mut row = m.row(i).to_vec();
        row.push(u[i - 1].clone());
        row.push(v[i - 1].clone());
        big.push(row);
    }
    let mut row_r = r.to_vec();
    row_r.push(a.clone());
    row_r.push(b.clone());
    big.push(row_r);
    let mut row_s = s.to_vec();
    row_s.push(c.clone());
    row_s.push(d.clone());
    big.push(row_s);
    let big = Matrix::from_rows(big)?;

    let bordered = |col: &[T], row: &[T], corner: &T| -> Result<T, Error> {
        let mut rows = Vec::with_capacity(p + 1);
        for i in 1..=p {
            let mut r = m.row(i).to_vec();
            r.push(col[i - 1].clone());
            rows.push(r);
        }
        let mut last = row.to_vec();
        last.push(corner.clone());
        rows.push(last);
        det_bareiss(&Matrix::from_rows(rows)?)
    };

    let q_ra = bordered(u, r, a)?;
    let q_rb = bordered(v, r, b)?;
    let q_sc = bordered(u, s, c)?;
    let q_sd = bordered(v, s, d)?;

    let lhs = det_bareiss(m)? * det_bareiss(&big)?;
    let rhs = q_ra.clone() * q_sd.clone() - q_rb.clone() * q_sc.clone();
    let equal = lhs == rhs;
    Ok(SylvesterCheck { lhs, rhs, equal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    fn mat(rows: &[&[i64]]) -> Matrix<ExactInt> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn submatrix_of_identity() {
        let id3: Matrix<ExactInt> = Matrix::identity(3);
        let sub = id3.submatrix(&[1, 2], &[1, 2]).unwrap();
        assert_eq!(sub, Matrix::identity(2));
    }

    #[test]
    fn submatrix_full_selection_is_identity_map() {
        let a = mat(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(a.submatrix(&[1, 2], &[1, 2, 3]).unwrap(), a);
    }

    #[test]
    fn submatrix_single_entry() {
        let a = mat(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.submatrix(&[2], &[1]).unwrap(), mat(&[&[3]]));
    }

    #[test]
    fn submatrix_rejects_bad_lists() {
        let a = mat(&[&[1, 2], &[3, 4]]);
        assert!(matches!(
            a.submatrix(&[1, 3], &[1]),
            Err(Error::IndexOutOfBounds { index: 3, bound: 2 })
        ));
        assert!(a.submatrix(&[2, 1], &[1]).is_err());
        assert!(a.submatrix(&[], &[1]).is_err());
    }

    #[test]
    fn cofactor_identity() {
        for n in 1..=6 {
            let id: Matrix<ExactInt> = Matrix::identity(n);
            assert_eq!(det_cofactor(&id).unwrap(), int(1));
        }
    }

    #[test]
    fn cofactor_two_by_two() {
        assert_eq!(det_cofactor(&mat(&[&[2, 1], &[4, 5]])).unwrap(), int(6));
    }

    #[test]
    fn cofactor_equal_rows_vanishes() {
        let a = mat(&[&[1, 2, 3], &[4, 5, 6], &[1, 2, 3]]);
        assert_eq!(det_cofactor(&a).unwrap(), int(0));
    }

    #[test]
    fn cofactor_guards() {
        assert!(matches!(
            det_cofactor(&mat(&[&[1, 2]])),
            Err(Error::NotSquare { rows: 1, cols: 2 })
        ));
        let big: Matrix<ExactInt> = Matrix::identity(11);
        assert!(matches!(
            det_cofactor(&big),
            Err(Error::TooLarge { size: 11, limit: 10 })
        ));
    }

    #[test]
    fn bareiss_identity_and_singular() {
        let id: Matrix<ExactInt> = Matrix::identity(5);
        assert_eq!(det_bareiss(&id).unwrap(), int(1));
        let singular = mat(&[&[1, 2], &[0, 0]]);
        assert_eq!(det_bareiss(&singular).unwrap(), int(0));
    }

    #[test]
    fn bareiss_swap_tracks_sign() {
        assert_eq!(det_bareiss(&mat(&[&[0, 1], &[1, 0]])).unwrap(), int(-1));
    }

    #[test]
    fn bordered_below_examples() {
        let a = mat(&[&[2, 1], &[4, 5]]);
        let spec = BorderedMinorSpec::below(1, 2, 2);
        assert_eq!(bordered_minor_below(&a, &spec).unwrap(), int(6));

        let id: Matrix<ExactInt> = Matrix::identity(2);
        assert_eq!(bordered_minor_below(&id, &spec).unwrap(), int(1));
    }

    #[test]
    fn bordered_above_examples() {
        let a = mat(&[&[1, 0, 5], &[0, 1, 7]]);
        let spec = BorderedMinorSpec::above(2, 1, 3);
        assert_eq!(bordered_minor_above(&a, &spec).unwrap(), int(5));

        let zero_col = mat(&[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(bordered_minor_above(&zero_col, &spec).unwrap(), int(0));
    }

    #[test]
    fn bordered_specs_validate() {
        let a = mat(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert!(bordered_minor_below(&a, &BorderedMinorSpec::below(2, 2, 3)).is_err());
        assert!(bordered_minor_above(&a, &BorderedMinorSpec::above(2, 2, 3)).is_err());
        assert!(bordered_minor_below(&a, &BorderedMinorSpec::below(1, 4, 2)).is_err());
    }

    #[test]
    fn leading_minors() {
        let id: Matrix<ExactInt> = Matrix::identity(4);
        for k in 1..=4 {
            assert_eq!(leading_principal_minor(&id, k).unwrap(), int(1));
        }
        let a = mat(&[&[2, 1], &[4, 5]]);
        assert_eq!(leading_principal_minor(&a, 1).unwrap(), int(2));
        assert_eq!(leading_principal_minor(&a, 2).unwrap(), int(6));
        assert!(leading_principal_minor(&a, 3).is_err());
    }

    #[test]
    fn sylvester_scalar_example() {
        let m = mat(&[&[1]]);
        let zero = [int(0)];
        let check = check_sylvester_identity(
            &m,
            &zero,
            &zero,
            &zero,
            &zero,
            &int(1),
            &int(0),
            &int(0),
            &int(1),
        )
        .unwrap();
        assert_eq!(check.lhs, int(1));
        assert_eq!(check.rhs, int(1));
        assert!(check.equal);
    }

    #[test]
    fn sylvester_zero_borders() {
        for p in 1..=4 {
            let id: Matrix<ExactInt> = Matrix::identity(p);
            let zeros = vec![int(0); p];
            let check = check_sylvester_identity(
                &id,
                &zeros,
                &zeros,
                &zeros,
                &zeros,
                &int(0),
                &int(0),
                &int(0),
                &int(0),
            )
            .unwrap();
            assert_eq!(check.lhs, int(0));
            assert_eq!(check.rhs, int(0));
            assert!(check.equal);
        }
    }

    #[test]
    fn matmul_and_augment() {
        let a = mat(&[&[2, 1], &[1, 3]]);
        let id: Matrix<ExactInt> = Matrix::identity(2);
        assert_eq!(a.mul(&id).unwrap(), a);
        let aug = a.augment(&id).unwrap();
        assert_eq!(aug.cols(), 4);
        assert_eq!(aug.at(2, 3), &int(0));
        assert_eq!(aug.at(2, 4), &int(1));
    }

    fn square_strategy(max_n: usize, span: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1..=max_n).prop_flat_map(move |n| {
            prop::collection::vec(prop::collection::vec(-span..=span, n), n)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn bareiss_matches_cofactor(rows in square_strategy(6, 9)) {
            let a = Matrix::from_rows(
                rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect(),
            ).unwrap();
            prop_assert_eq!(det_bareiss(&a).unwrap(), det_cofactor(&a).unwrap());
        }

        #[test]
        fn det_ignores_transpose(rows in square_strategy(5, 9)) {
            let a = Matrix::from_rows(
                rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect(),
            ).unwrap();
            prop_assert_eq!(det_bareiss(&a.transpose()).unwrap(), det_bareiss(&a).unwrap());
        }

        #[test]
        fn row_swap_negates_det(rows in square_strategy(5, 9)) {
            let a = Matrix::from_rows(
                rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect(),
            ).unwrap();
            if a.rows() >= 2 {
                let mut b = a.clone();
                b.swap_rows(1, a.rows());
                prop_assert_eq!(det_bareiss(&b).unwrap(), -det_bareiss(&a).unwrap());
            }
        }

        #[test]
        fn bordered_minors_match_cofactor_assembly(
            rows in (2usize..=5).prop_flat_map(|n| {
                prop::collection::vec(prop::collection::vec(-9i64..=9, n + 2), n)
            }),
        ) {
            let a = Matrix::from_rows(
                rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect(),
            ).unwrap();
            let (n, m) = (a.rows(), a.cols());
            for k in 1..=n {
                for j in k + 1..=m {
                    for i in k + 1..=n {
                        let spec = BorderedMinorSpec::below(k, i, j);
                        let mut rsel: Vec<usize> = (1..=k).collect();
                        rsel.push(i);
                        let mut csel: Vec<usize> = (1..=k).collect();
                        csel.push(j);
                        let expected = det_cofactor(&a.submatrix(&rsel, &csel).unwrap()).unwrap();
                        prop_assert_eq!(bordered_minor_below(&a, &spec).unwrap(), expected);
                    }
                    for i in 1..k {
                        let spec = BorderedMinorSpec::above(k, i, j);
                        let rsel: Vec<usize> = (1..=k).collect();
                        let mut csel: Vec<usize> = (1..=k).filter(|&c| c != i).collect();
                        csel.push(j);
                        let expected =
                            -det_cofactor(&a.submatrix(&rsel, &csel).unwrap()).unwrap();
                        prop_assert_eq!(bordered_minor_above(&a, &spec).unwrap(), expected);
                    }
                }
            }
        }

        #[test]
        fn sylvester_holds_on_random_inputs(
            p in 1usize..=4,
            seedling in prop::collection::vec(-5i64..=5, 60),
        ) {
            let mut it = seedling.into_iter().cycle();
            let mut next = || int(it.next().unwrap());
            let m = Matrix::from_raw(p, p, (0..p * p).map(|_| next()).collect());
            let u: Vec<ExactInt> = (0..p).map(|_| next()).collect();
            let v: Vec<ExactInt> = (0..p).map(|_| next()).collect();
            let r: Vec<ExactInt> = (0..p).map(|_| next()).collect();
            let s: Vec<ExactInt> = (0..p).map(|_| next()).collect();
            let check = check_sylvester_identity(
                &m, &u, &v, &r, &s, &next(), &next(), &next(), &next(),
            ).unwrap();
            prop_assert!(check.equal, "lhs={} rhs={}", check.lhs, check.rhs);
        }
    }
}
