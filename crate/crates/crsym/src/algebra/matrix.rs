//! Exact rational matrices and null-space computation.
//!
//! The solver's linear systems are sparse and strongly structured: most rows
//! touch only a handful of unknowns. Elimination therefore works on
//! content-stripped integer rows (fraction-free in the Bareiss sense: cross
//! multiplication followed by an exact content division keeps entries
//! integral and bounded), inserting rows one at a time into an incremental
//! [`Eliminator`].
//!
//! Kernel bases are canonicalized to the reduced echelon form of the kernel
//! subspace, with denominators cleared and the first nonzero entry positive,
//! so bases are unique for a given matrix and safe to pin in golden files.

use super::gauss::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Sparse integer row: `(column, value)` pairs sorted by column, values
/// nonzero with no common factor.
type IRow = Vec<(usize, BigInt)>;

/// Exact rational matrix with sparse rows.
#[derive(Clone, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Rat)>>,
}

impl RatMatrix {
    pub fn new(cols: usize) -> Self {
        RatMatrix {
            rows: 0,
            cols,
            data: Vec::new(),
        }
    }

    pub fn from_dense(rows: Vec<Vec<Rat>>) -> Self {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut m = RatMatrix::new(cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix");
            m.push_row(
                row.into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect(),
            );
        }
        m
    }

    /// Append a sparse row of `(column, value)` pairs.
    pub fn push_row(&mut self, mut row: Vec<(usize, Rat)>) {
        row.retain(|(_, v)| !v.is_zero());
        row.sort_by_key(|(c, _)| *c);
        debug_assert!(row.iter().all(|(c, _)| *c < self.cols));
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        self.data.push(row);
        self.rows += 1;
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Rat {
        self.data[i]
            .iter()
            .find(|(c, _)| *c == j)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(Rat::zero)
    }

    /// Exact matrix-vector product.
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| row.iter().map(|(c, x)| x * &v[*c]).sum())
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut elim = Eliminator::new(self.cols);
        for row in &self.data {
            elim.insert(to_integer_row(row));
        }
        elim.rank()
    }

    /// Canonical basis of the right null space.
    ///
    /// The returned vectors are integer-valued rationals, in reduced-echelon
    /// position with respect to the natural column order, denominators
    /// cleared and first nonzero entry positive. `M·v = 0` holds exactly for
    /// each; full-rank matrices yield an empty basis.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let mut elim = Eliminator::new(self.cols);
        for row in &self.data {
            elim.insert(to_integer_row(row));
        }
        elim.kernel_basis()
    }
}

fn to_integer_row(row: &[(usize, Rat)]) -> IRow {
    let mut lcm = BigInt::one();
    for (_, v) in row {
        lcm = lcm.lcm(v.denom());
    }
    let mut out: IRow = row
        .iter()
        .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
        .collect();
    strip_content(&mut out);
    out
}

fn strip_content(row: &mut IRow) {
    row.retain(|(_, v)| !v.is_zero());
    if row.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    for (_, v) in row.iter_mut() {
        *v = &*v / &g;
    }
}

/// Incremental exact row-eliminator over the integers.
///
/// Rows are inserted one at a time and reduced against the pivot rows
/// accumulated so far; a row that survives becomes a new pivot with its
/// leading column as pivot column. Because every inserted row is reduced
/// against all earlier pivots, a pivot row can only contain pivot columns of
/// *later* pivots, which makes back-substitution in reverse insertion order
/// exact.
pub struct Eliminator {
    cols: usize,
    pivots: Vec<IRow>,
    pivot_cols: Vec<usize>,
    col_to_pivot: BTreeMap<usize, usize>,
}

impl Eliminator {
    pub fn new(cols: usize) -> Self {
        Eliminator {
            cols,
            pivots: Vec::new(),
            pivot_cols: Vec::new(),
            col_to_pivot: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Reduce `row` against every pivot; the result contains no pivot column.
    pub fn reduce(&self, mut row: IRow) -> IRow {
        // Eliminating pivot i can only introduce columns of pivots created
        // after i, so a single pass in creation order suffices.
        for i in 0..self.pivots.len() {
            let pc = self.pivot_cols[i];
            let coeff = match row.binary_search_by_key(&pc, |(c, _)| *c) {
                Ok(pos) => row[pos].1.clone(),
                Err(_) => continue,
            };
            row = row_combine(&row, &coeff, &self.pivots[i], pivot_value(&self.pivots[i], pc));
        }
        row
    }

    /// Insert a rational row; returns `true` when it increased the rank.
    pub fn insert_rational(&mut self, row: &[(usize, Rat)]) -> bool {
        self.insert(to_integer_row(row))
    }

    /// Insert a row; returns `true` when it increased the rank.
    pub fn insert(&mut self, row: IRow) -> bool {
        let mut reduced = self.reduce(row);
        strip_content(&mut reduced);
        if reduced.is_empty() {
            return false;
        }
        let pc = reduced[0].0;
        self.col_to_pivot.insert(pc, self.pivots.len());
        self.pivot_cols.push(pc);
        self.pivots.push(reduced);
        true
    }

    /// Whether `row` already lies in the accumulated row space.
    pub fn spans(&self, row: IRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Canonical kernel basis of the accumulated rows (see
    /// [`RatMatrix::kernel_basis`]).
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let free: Vec<usize> = (0..self.cols)
            .filter(|c| !self.col_to_pivot.contains_key(c))
            .collect();
        let mut vectors = Vec::with_capacity(free.len());
        for &f in &free {
            let mut x = vec![Rat::zero(); self.cols];
            x[f] = Rat::one();
            for i in (0..self.pivots.len()).rev() {
                let pc = self.pivot_cols[i];
                let mut s = Rat::zero();
                let mut diag = BigInt::zero();
                for (c, v) in &self.pivots[i] {
                    if *c == pc {
                        diag = v.clone();
                    } else if !x[*c].is_zero() {
                        s += Rat::from(v.clone()) * &x[*c];
                    }
                }
                x[pc] = -s / Rat::from(diag);
            }
            vectors.push(x);
        }
        canonical_basis(vectors)
    }
}

/// `row·pv − pivot·rv`, content-stripped by the caller. Both inputs sorted.
fn row_combine(row: &IRow, rv: &BigInt, pivot: &IRow, pv: BigInt) -> IRow {
    let mut out = IRow::with_capacity(row.len() + pivot.len());
    let (mut a, mut b) = (0, 0);
    while a < row.len() || b < pivot.len() {
        let ca = row.get(a).map(|(c, _)| *c);
        let cb = pivot.get(b).map(|(c, _)| *c);
        match (ca, cb) {
            (Some(x), Some(y)) if x == y => {
                let v = &row[a].1 * &pv - &pivot[b].1 * rv;
                if !v.is_zero() {
                    out.push((x, v));
                }
                a += 1;
                b += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push((x, &row[a].1 * &pv));
                a += 1;
            }
            (Some(_), Some(y)) => {
                out.push((y, -(&pivot[b].1 * rv)));
                b += 1;
            }
            (Some(x), None) => {
                out.push((x, &row[a].1 * &pv));
                a += 1;
            }
            (None, Some(y)) => {
                out.push((y, -(&pivot[b].1 * rv)));
                b += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

fn pivot_value(pivot: &IRow, pc: usize) -> BigInt {
    pivot
        .iter()
        .find(|(c, _)| *c == pc)
        .map(|(_, v)| v.clone())
        .expect("pivot column present in pivot row")
}

/// Reduced echelon form of the span of `vectors`, then denominators cleared
/// and leading entries made positive. Unique for the subspace.
pub fn canonical_basis(mut vectors: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    if vectors.is_empty() {
        return vectors;
    }
    let cols = vectors[0].len();
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..vectors.len()).find(|&i| !vectors[i][col].is_zero()) else {
            continue;
        };
        vectors.swap(r, p);
        let inv = vectors[r][col].recip();
        for v in vectors[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..vectors.len() {
            if i != r && !vectors[i][col].is_zero() {
                let f = vectors[i][col].clone();
                for c in 0..cols {
                    let delta = &vectors[r][c] * &f;
                    vectors[i][c] = &vectors[i][c] - &delta;
                }
            }
        }
        r += 1;
        if r == vectors.len() {
            break;
        }
    }
    vectors.truncate(r);
    for v in &mut vectors {
        let mut lcm = BigInt::one();
        for x in v.iter() {
            lcm = lcm.lcm(x.denom());
        }
        let mut g = BigInt::zero();
        let scaled: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
        for x in &scaled {
            g = g.gcd(x);
        }
        let lead_neg = scaled.iter().find(|x| !x.is_zero()).map_or(false, |x| x.is_negative());
        let g = if lead_neg { -g } else { g };
        for (slot, x) in v.iter_mut().zip(scaled) {
            *slot = Rat::from(x / &g);
        }
    }
    vectors
}

/// Whether `v` lies in the rational span of `basis`.
pub fn in_span(basis: &[Vec<Rat>], v: &[Rat]) -> bool {
    let cols = v.len();
    let mut elim = Eliminator::new(cols);
    for b in basis {
        assert_eq!(b.len(), cols);
        elim.insert(to_integer_row(
            &b.iter()
                .cloned()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .collect::<Vec<_>>(),
        ));
    }
    elim.spans(to_integer_row(
        &v.iter()
            .cloned()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .collect::<Vec<_>>(),
    ))
}

/// Whether two bases span the same subspace (mutual membership).
pub fn same_span(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> bool {
    a.iter().all(|v| in_span(b, v)) && b.iter().all(|v| in_span(a, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gauss::rat_int;

    fn dense(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_dense(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat_int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn single_row_kernel() {
        // [[1, 1]] → basis {(1, −1)}
        let m = dense(&[&[1, 1]]);
        assert_eq!(m.kernel_basis(), vec![vec![rat_int(1), rat_int(-1)]]);
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let m = dense(&[&[1, 0], &[0, 1]]);
        assert!(m.kernel_basis().is_empty());
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = dense(&[&[2, 4, 6, -2], &[1, 2, 3, -1], &[0, 1, 1, 1]]);
        assert_eq!(m.rank(), 2);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn canonical_form_is_scaling_invariant() {
        let m1 = dense(&[&[1, 2, 3]]);
        let m2 = dense(&[&[7, 14, 21]]);
        assert_eq!(m1.kernel_basis(), m2.kernel_basis());
    }

    #[test]
    fn empty_matrix_kernel_is_identity_like() {
        let m = RatMatrix::new(3);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 3);
        assert!(in_span(&basis, &[rat_int(5), rat_int(-2), rat_int(0)]));
    }

    #[test]
    fn span_membership() {
        let basis = vec![
            vec![rat_int(1), rat_int(0), rat_int(1)],
            vec![rat_int(0), rat_int(1), rat_int(1)],
        ];
        assert!(in_span(&basis, &[rat_int(2), rat_int(3), rat_int(5)]));
        assert!(!in_span(&basis, &[rat_int(0), rat_int(0), rat_int(1)]));
    }
}
