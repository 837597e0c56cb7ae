//! 0-1 matrices extracted from two-colored graphs, with the run statistics
//! used by the tameness and wealth detectors.
//!
//! Convention: color 1 is white and maps to entry 0, color 2 is black and
//! maps to entry 1. Rows and columns are 1-based throughout, matching the
//! vertex numbering of colorings.

use crate::coloring::Coloring;
use crate::error::{Error, Result};

/// A dense 0-1 matrix with 1-based indexing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZeroOneMatrix {
    rows: usize,
    cols: usize,
    data: Vec<bool>,
}

impl ZeroOneMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<bool>) -> ZeroOneMatrix {
        assert!(rows > 0 && cols > 0, "dimensions must be positive");
        assert_eq!(data.len(), rows * cols);
        ZeroOneMatrix { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> ZeroOneMatrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                data.push(f(i, j));
            }
        }
        ZeroOneMatrix::new(rows, cols, data)
    }

    /// The identity matrix `I_r`: 1s on the main diagonal.
    pub fn identity(r: usize) -> ZeroOneMatrix {
        ZeroOneMatrix::from_fn(r, r, |i, j| i == j)
    }

    /// The upper triangular matrix `U_r`: 1s on and above the main diagonal.
    pub fn upper_triangular(r: usize) -> ZeroOneMatrix {
        ZeroOneMatrix::from_fn(r, r, |i, j| j >= i)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at `(i, j)`, 1-based.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i >= 1 && i <= self.rows && j >= 1 && j <= self.cols, "index out of bounds");
        self.data[(i - 1) * self.cols + (j - 1)]
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> u8 {
        self.get(i, j) as u8
    }

    /// Vertical mirror image: column order reversed.
    pub fn mirror(&self) -> ZeroOneMatrix {
        ZeroOneMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, self.cols + 1 - j))
    }

    /// 0/1 swap.
    pub fn complement(&self) -> ZeroOneMatrix {
        ZeroOneMatrix::from_fn(self.rows, self.cols, |i, j| !self.get(i, j))
    }
}

impl std::fmt::Debug for ZeroOneMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ZeroOneMatrix {}x{}", self.rows, self.cols)?;
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Builds `M_{I,J}` for vertex sets `I < J` of a two-colored graph:
/// `M(i, j) = 0` iff the edge `{x_i, y_j}` is white (color 1). `I` and `J`
/// must be strictly increasing and every element of `I` below every element
/// of `J`.
pub fn bipartite_matrix(k: &Coloring, i_set: &[usize], j_set: &[usize]) -> Result<ZeroOneMatrix> {
    assert_eq!(k.colors(), 2, "matrix extraction needs a two-colored graph");
    if i_set.is_empty() || j_set.is_empty() {
        return Err(Error::Matrix("index sets must be nonempty".into()));
    }
    let increasing = |s: &[usize]| s.windows(2).all(|w| w[0] < w[1]);
    if !increasing(i_set) || !increasing(j_set) {
        return Err(Error::Matrix("index sets must be strictly increasing".into()));
    }
    if i_set.last().unwrap() >= j_set.first().unwrap() {
        return Err(Error::Matrix("I must lie strictly below J".into()));
    }
    if *i_set.first().unwrap() < 1 || *j_set.last().unwrap() > k.size() {
        return Err(Error::Matrix("index sets out of range".into()));
    }
    Ok(ZeroOneMatrix::from_fn(i_set.len(), j_set.len(), |i, j| {
        k.color(i_set[i - 1], j_set[j - 1]) == 2
    }))
}

/// `M_K` of a two-colored graph on `2r` vertices: the bipartite matrix of
/// the halves `[1, r]` and `[r+1, 2r]`.
pub fn half_matrix(k: &Coloring) -> Result<ZeroOneMatrix> {
    let n = k.size();
    if n < 2 || n % 2 != 0 {
        return Err(Error::Matrix(format!("need an even size >= 2, got {n}")));
    }
    let r = n / 2;
    let left: Vec<usize> = (1..=r).collect();
    let right: Vec<usize> = (r + 1..=2 * r).collect();
    bipartite_matrix(k, &left, &right)
}

fn runs<I: Iterator<Item = u8>>(mut it: I) -> usize {
    let mut count = 1;
    let mut prev = it.next().expect("nonempty line");
    for x in it {
        if x != prev {
            count += 1;
            prev = x;
        }
    }
    count
}

/// `al(M)`: the maximum number of maximal constant runs in a row or column.
pub fn alternations(m: &ZeroOneMatrix) -> usize {
    let row_max = (1..=m.rows())
        .map(|i| runs((1..=m.cols()).map(|j| m.at(i, j))))
        .max()
        .unwrap();
    let col_max = (1..=m.cols())
        .map(|j| runs((1..=m.rows()).map(|i| m.at(i, j))))
        .max()
        .unwrap();
    row_max.max(col_max)
}

/// `C(M, j)` per column (row indices `a < r` with `M(a, j) != M(a+1, j)`)
/// and their union `C(M)`.
pub fn change_rows(m: &ZeroOneMatrix) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut union = vec![false; m.rows()];
    let mut per_column = Vec::with_capacity(m.cols());
    for j in 1..=m.cols() {
        let mut col = Vec::new();
        for a in 1..m.rows() {
            if m.get(a, j) != m.get(a + 1, j) {
                col.push(a);
                union[a - 1] = true;
            }
        }
        per_column.push(col);
    }
    let union = (1..=m.rows()).filter(|&a| union[a - 1]).collect();
    (per_column, union)
}

/// Number of column indices `j` whose column differs from column `j + 1`.
pub fn distinct_adjacent_columns(m: &ZeroOneMatrix) -> usize {
    (1..m.cols())
        .filter(|&j| (1..=m.rows()).any(|i| m.get(i, j) != m.get(i, j + 1)))
        .count()
}

/// Outcome of the alternation bound check `a <= (k-1)(2l+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlternationCheck {
    /// Measured number of adjacent distinct column pairs.
    pub adjacent_changes: usize,
    /// The bound `(k-1)(2l+1)`.
    pub bound: usize,
    pub holds: bool,
    /// Set when the preconditions `al(M) <= k`, `|C(M)| <= l` failed; the
    /// check passes vacuously in that case.
    pub vacuous: bool,
}

/// Checks `a <= (k-1)(2l+1)` where `a` counts adjacent distinct column
/// pairs, given claimed bounds `k >= al(M)` and `l >= |C(M)|`.
pub fn alternation_bound_check(m: &ZeroOneMatrix, k: usize, l: usize) -> AlternationCheck {
    let a = distinct_adjacent_columns(m);
    let bound = k.saturating_sub(1) * (2 * l + 1);
    if alternations(m) > k || change_rows(m).1.len() > l {
        return AlternationCheck {
            adjacent_changes: a,
            bound,
            holds: true,
            vacuous: true,
        };
    }
    AlternationCheck {
        adjacent_changes: a,
        bound,
        holds: a <= bound,
        vacuous: false,
    }
}

/// Searches for increasing injections `f` on rows and `g` on columns with
/// `M(f(i), g(j)) = Mp(i, j)` everywhere; that is, `Mp` as a submatrix of `M`.
pub fn submatrix_embedding(mp: &ZeroOneMatrix, m: &ZeroOneMatrix) -> Option<(Vec<usize>, Vec<usize>)> {
    let (rp, cp) = (mp.rows(), mp.cols());
    let (r, c) = (m.rows(), m.cols());
    if rp > r || cp > c {
        return None;
    }
    fn cols_rec(
        mp: &ZeroOneMatrix,
        m: &ZeroOneMatrix,
        rows: &[usize],
        gsel: &mut Vec<usize>,
        next: usize,
    ) -> bool {
        let jp = gsel.len() + 1;
        if jp > mp.cols() {
            return true;
        }
        for gj in next..=(m.cols() - (mp.cols() - jp)) {
            if (1..=mp.rows()).all(|i| m.get(rows[i - 1], gj) == mp.get(i, jp)) {
                gsel.push(gj);
                if cols_rec(mp, m, rows, gsel, gj + 1) {
                    return true;
                }
                gsel.pop();
            }
        }
        false
    }
    fn rows_rec(
        mp: &ZeroOneMatrix,
        m: &ZeroOneMatrix,
        fsel: &mut Vec<usize>,
        next: usize,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        let ip = fsel.len() + 1;
        if ip > mp.rows() {
            let mut gsel = Vec::new();
            if cols_rec(mp, m, fsel, &mut gsel, 1) {
                return Some((fsel.clone(), gsel));
            }
            return None;
        }
        for fi in next..=(m.rows() - (mp.rows() - ip)) {
            fsel.push(fi);
            if let Some(found) = rows_rec(mp, m, fsel, fi + 1) {
                return Some(found);
            }
            fsel.pop();
        }
        None
    }
    rows_rec(mp, m, &mut Vec::new(), 1)
}

/// The four similarity transforms: identity, vertical mirror image
/// (column reversal), 0/1 swap, and both.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Transform {
    Identity,
    Mirror,
    Swap,
    MirrorSwap,
}

impl Transform {
    /// Check order for [`similarity`]; swap before mirror so that the
    /// reported transform for ambiguous small cases (mirror and swap agree
    /// on `I_2`) is the swap.
    pub const ALL: [Transform; 4] = [
        Transform::Identity,
        Transform::Swap,
        Transform::Mirror,
        Transform::MirrorSwap,
    ];

    pub fn apply(self, m: &ZeroOneMatrix) -> ZeroOneMatrix {
        match self {
            Transform::Identity => m.clone(),
            Transform::Mirror => m.mirror(),
            Transform::Swap => m.complement(),
            Transform::MirrorSwap => m.mirror().complement(),
        }
    }
}

/// Reports the first transform mapping `m` to `mp`, if the matrices are
/// similar. Requires equal dimensions.
pub fn similarity(m: &ZeroOneMatrix, mp: &ZeroOneMatrix) -> Option<Transform> {
    if m.rows() != mp.rows() || m.cols() != mp.cols() {
        return None;
    }
    Transform::ALL.into_iter().find(|t| &t.apply(m) == mp)
}

/// Validates that `cells` (1-based `(row, col)` coordinates) form a
/// southeast path: alternating south and east steps, starting with a south
/// step.
pub fn is_southeast_path(m: &ZeroOneMatrix, cells: &[(usize, usize)]) -> bool {
    if cells.is_empty() {
        return false;
    }
    if cells
        .iter()
        .any(|&(i, j)| i < 1 || i > m.rows() || j < 1 || j > m.cols())
    {
        return false;
    }
    for (t, w) in cells.windows(2).enumerate() {
        let (r0, c0) = w[0];
        let (r1, c1) = w[1];
        if t % 2 == 0 {
            // south step
            if !(r1 > r0 && c1 == c0) {
                return false;
            }
        } else {
            // east step
            if !(r1 == r0 && c1 > c0) {
                return false;
            }
        }
    }
    true
}

/// Entry sequence of a southeast path as a 0-1 string.
pub fn southeast_path_colors(m: &ZeroOneMatrix, cells: &[(usize, usize)]) -> Result<String> {
    if !is_southeast_path(m, cells) {
        return Err(Error::Matrix("cells do not form a southeast path".into()));
    }
    Ok(cells
        .iter()
        .map(|&(i, j)| if m.get(i, j) { '1' } else { '0' })
        .collect())
}

/// The back-and-forth edge list induced by a southeast path of
/// `M_{I,J}`: cell `(i, j)` corresponds to the edge `{x_i, y_j}`.
pub fn back_and_forth_edges(
    cells: &[(usize, usize)],
    i_set: &[usize],
    j_set: &[usize],
) -> Vec<(usize, usize)> {
    cells
        .iter()
        .map(|&(i, j)| (i_set[i - 1], j_set[j - 1]))
        .collect()
}

/// Searches for a southeast path whose entries spell `target` (a 0-1
/// string). Used to realize fib strings inside `I_r` and `U_r`.
pub fn find_southeast_path(m: &ZeroOneMatrix, target: &[u8]) -> Option<Vec<(usize, usize)>> {
    // step t (1-based) is south for odd t, east for even t
    fn go(m: &ZeroOneMatrix, target: &[u8], path: &mut Vec<(usize, usize)>) -> bool {
        let t = path.len();
        if t == target.len() {
            return true;
        }
        let want = target[t] == 1;
        let &(r, c) = path.last().unwrap();
        if t % 2 == 1 {
            for nr in r + 1..=m.rows() {
                if m.get(nr, c) == want {
                    path.push((nr, c));
                    if go(m, target, path) {
                        return true;
                    }
                    path.pop();
                }
            }
        } else {
            for nc in c + 1..=m.cols() {
                if m.get(r, nc) == want {
                    path.push((r, nc));
                    if go(m, target, path) {
                        return true;
                    }
                    path.pop();
                }
            }
        }
        false
    }
    if target.is_empty() {
        return None;
    }
    let want = target[0] == 1;
    for r in 1..=m.rows() {
        for c in 1..=m.cols() {
            if m.get(r, c) == want {
                let mut path = vec![(r, c)];
                if go(m, target, &mut path) {
                    return Some(path);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_matrix_reproduces_block() {
        // single black edge {1, r+1} gives a single 1 at (1,1)
        let r = 3;
        let k = Coloring::from_edges(2 * r, 2, 1, &[(1, r + 1, 2)]);
        let m = half_matrix(&k).unwrap();
        assert_eq!(m, ZeroOneMatrix::from_fn(r, r, |i, j| (i, j) == (1, 1)));
        // all-white block is all zero
        let w = half_matrix(&Coloring::monochromatic(2 * r, 2, 1)).unwrap();
        assert!((1..=r).all(|i| (1..=r).all(|j| !w.get(i, j))));
    }

    #[test]
    fn bipartite_matrix_validates_inputs() {
        let k = Coloring::monochromatic(5, 2, 1);
        assert!(bipartite_matrix(&k, &[1, 2], &[3, 4]).is_ok());
        assert!(bipartite_matrix(&k, &[1, 3], &[2, 4]).is_err()); // interleaved
        assert!(bipartite_matrix(&k, &[2, 1], &[3, 4]).is_err()); // not increasing
        assert!(bipartite_matrix(&k, &[], &[3]).is_err());
        assert!(bipartite_matrix(&k, &[1], &[6]).is_err()); // out of range
    }

    #[test]
    fn alternation_counts() {
        assert_eq!(alternations(&ZeroOneMatrix::from_fn(3, 4, |_, _| true)), 1);
        assert_eq!(alternations(&ZeroOneMatrix::identity(3)), 3); // column 2 runs 0|1|0
        for r in 2..6 {
            assert_eq!(alternations(&ZeroOneMatrix::upper_triangular(r)), 2);
        }
        assert_eq!(alternations(&ZeroOneMatrix::identity(1)), 1);
    }

    #[test]
    fn change_rows_cases() {
        let constant = ZeroOneMatrix::from_fn(3, 3, |_, _| false);
        let (per, union) = change_rows(&constant);
        assert!(per.iter().all(|c| c.is_empty()));
        assert!(union.is_empty());

        let (per, union) = change_rows(&ZeroOneMatrix::identity(3));
        assert_eq!(per[1], vec![1, 2]); // column 2
        assert_eq!(union, vec![1, 2]);

        for r in 3..6 {
            let (per, union) = change_rows(&ZeroOneMatrix::upper_triangular(r));
            for j in 1..r {
                assert_eq!(per[j - 1], vec![j]);
            }
            assert!(per[r - 1].is_empty());
            assert_eq!(union, (1..r).collect::<Vec<_>>());
        }
    }

    #[test]
    fn alternation_bound_examples() {
        let constant = ZeroOneMatrix::from_fn(4, 4, |_, _| true);
        let chk = alternation_bound_check(&constant, 1, 0);
        assert!(chk.holds && !chk.vacuous);
        assert_eq!(chk.adjacent_changes, 0);
        assert_eq!(chk.bound, 0);

        // k=2, l=1 gives bound 3
        let m = ZeroOneMatrix::from_fn(2, 4, |i, j| i == 1 && j % 2 == 0);
        // al = 2? rows: 0101 has 4 runs -> violates k=2, so vacuous
        let chk = alternation_bound_check(&m, 2, 1);
        assert_eq!(chk.bound, 3);
        assert!(chk.vacuous && chk.holds);

        let u = ZeroOneMatrix::upper_triangular(4);
        let chk = alternation_bound_check(&u, 2, 3);
        assert!(!chk.vacuous);
        assert_eq!(chk.adjacent_changes, 3);
        assert!(chk.holds); // 3 <= (2-1)(2*3+1) = 7
    }

    #[test]
    fn submatrix_cases() {
        let i3 = ZeroOneMatrix::identity(3);
        let i2 = ZeroOneMatrix::identity(2);
        let found = submatrix_embedding(&i2, &i3);
        assert!(found.is_some());
        let (f, g) = found.unwrap();
        for (ip, jp) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            assert_eq!(i3.get(f[ip - 1], g[jp - 1]), i2.get(ip, jp));
        }
        let ones = ZeroOneMatrix::from_fn(2, 2, |_, _| true);
        assert_eq!(submatrix_embedding(&ones, &i3), None);
        assert_eq!(
            submatrix_embedding(&i3, &i3),
            Some((vec![1, 2, 3], vec![1, 2, 3]))
        );
    }

    #[test]
    fn similarity_cases() {
        let i2 = ZeroOneMatrix::identity(2);
        assert_eq!(similarity(&i2, &i2), Some(Transform::Identity));
        assert_eq!(similarity(&i2, &i2.complement()), Some(Transform::Swap));
        let i3 = ZeroOneMatrix::identity(3);
        assert_eq!(similarity(&i3, &i3.mirror()), Some(Transform::Mirror));
        let u3 = ZeroOneMatrix::upper_triangular(3);
        assert_eq!(similarity(&i3, &u3), None);
        let one = ZeroOneMatrix::from_fn(1, 2, |_, _| true);
        assert_eq!(similarity(&one, &ZeroOneMatrix::identity(1)), None); // dims differ
    }

    #[test]
    fn southeast_paths() {
        let u = ZeroOneMatrix::upper_triangular(4);
        // south, east, south
        let cells = [(1, 2), (3, 2), (3, 4), (4, 4)];
        assert!(is_southeast_path(&u, &cells));
        assert_eq!(southeast_path_colors(&u, &cells).unwrap(), "1011");
        // a single cell is a path
        assert_eq!(southeast_path_colors(&u, &[(2, 2)]).unwrap(), "1");
        // east first is invalid
        assert!(!is_southeast_path(&u, &[(1, 1), (1, 2)]));
        // induced edges
        let i_set = [2, 4, 6, 8];
        let j_set = [9, 10, 11, 12];
        let edges = back_and_forth_edges(&cells, &i_set, &j_set);
        assert_eq!(edges, vec![(2, 10), (6, 10), (6, 12), (8, 12)]);
    }

    #[test]
    fn fib_strings_realizable_in_identity_and_upper() {
        use crate::certificates::{fib_strings, FibKind};
        for n in 2..=6usize {
            let r = 2 * n;
            let id = ZeroOneMatrix::identity(r);
            for w in fib_strings(n, FibKind::Fib1) {
                let target: Vec<u8> = w.bytes().map(|b| b - b'0').collect();
                let path = find_southeast_path(&id, &target)
                    .unwrap_or_else(|| panic!("no path for fib1 {w} in I_{r}"));
                assert!(is_southeast_path(&id, &path));
                assert_eq!(southeast_path_colors(&id, &path).unwrap(), w);
            }
            let up = ZeroOneMatrix::upper_triangular(r);
            for w in fib_strings(n, FibKind::Fib2) {
                let target: Vec<u8> = w.bytes().map(|b| b - b'0').collect();
                let path = find_southeast_path(&up, &target)
                    .unwrap_or_else(|| panic!("no path for fib2 {w} in U_{r}"));
                assert_eq!(southeast_path_colors(&up, &path).unwrap(), w);
            }
        }
    }
}
