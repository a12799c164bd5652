//! 0/1 matrices, forbidden-submatrix search, and lonesum detection.
//!
//! The counting engine here is the primary enumeration oracle for the
//! sequence formulas: `count_avoiding` generates matrices row by row and
//! prunes any prefix that already contains a forbidden pattern, so a
//! doomed subtree is never expanded.  A naive full filter over all
//! `2^(n*k)` matrices is kept alongside it to validate the pruned search.

use std::collections::HashMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::Int;

/// Default node budget for exhaustive searches (`2^26`).
pub const DEFAULT_BUDGET: u64 = 1 << 26;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixEnumError {
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("matrix is not lonesum")]
    NotLonesum,
}

/// Rectangular 0/1 matrix with bitset rows: bit `j` of `rows[i]` is entry
/// `(i,j)`.  At most 64 columns; bits at and beyond `n_cols` stay zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    n_rows: usize,
    n_cols: usize,
    rows: Vec<u64>,
}

impl BinaryMatrix {
    pub fn zero(n_rows: usize, n_cols: usize) -> Self {
        assert!(n_cols <= 64, "at most 64 columns supported");
        BinaryMatrix {
            n_rows,
            n_cols,
            rows: vec![0; n_rows],
        }
    }

    /// Builds from explicit 0/1 entries, row major.
    pub fn from_rows(entries: &[&[u8]]) -> Self {
        let n_rows = entries.len();
        let n_cols = entries.first().map_or(0, |r| r.len());
        let mut m = Self::zero(n_rows, n_cols);
        for (i, row) in entries.iter().enumerate() {
            assert_eq!(row.len(), n_cols, "ragged rows");
            for (j, &e) in row.iter().enumerate() {
                if e != 0 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn from_bit_rows(rows: Vec<u64>, n_cols: usize) -> Self {
        assert!(n_cols <= 64);
        let mask = col_mask(n_cols);
        assert!(rows.iter().all(|r| r & !mask == 0), "bits beyond n_cols");
        BinaryMatrix {
            n_rows: rows.len(),
            n_cols,
            rows,
        }
    }

    /// Parses rows given as strings of `0`/`1` characters, e.g. `"1101"`.
    pub fn from_row_strings<S: AsRef<str>>(rows: &[S]) -> Result<Self, String> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zero(n_rows, n_cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n_cols {
                return Err(format!(
                    "row {i} has length {}, expected {n_cols}",
                    row.len()
                ));
            }
            for (j, ch) in row.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => m.set(i, j, true),
                    other => return Err(format!("row {i} contains {other:?}")),
                }
            }
        }
        Ok(m)
    }

    /// Rows rendered as `0`/`1` strings; the wire format used in JSON.
    pub fn row_strings(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| {
                (0..self.n_cols)
                    .map(|j| if r >> j & 1 == 1 { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(j < self.n_cols);
        self.rows[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        debug_assert!(j < self.n_cols);
        if v {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    pub fn bit_rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn row_sums(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.count_ones()).collect()
    }

    pub fn col_sums(&self) -> Vec<u32> {
        (0..self.n_cols)
            .map(|j| self.rows.iter().filter(|r| *r >> j & 1 == 1).count() as u32)
            .collect()
    }

    pub fn transpose(&self) -> BinaryMatrix {
        let mut t = BinaryMatrix::zero(self.n_cols, self.n_rows);
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }
}

fn col_mask(n_cols: usize) -> u64 {
    if n_cols == 64 {
        u64::MAX
    } else {
        (1u64 << n_cols) - 1
    }
}

/// One of the forbidden 2x2 sets from the lonesum circle of problems, or a
/// custom set.  All preset patterns are 2x2; custom sets may use any shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternSet {
    name: String,
    patterns: Vec<BinaryMatrix>,
}

impl PatternSet {
    /// Lonesum set `L`: both 2x2 permutation matrices.
    pub fn lonesum() -> Self {
        PatternSet {
            name: "L".into(),
            patterns: vec![
                BinaryMatrix::from_rows(&[&[1, 0], &[0, 1]]),
                BinaryMatrix::from_rows(&[&[0, 1], &[1, 0]]),
            ],
        }
    }

    /// Gamma-free set: `[[1,1],[1,0]]` and `[[1,1],[1,1]]`.
    pub fn gamma() -> Self {
        PatternSet {
            name: "Gamma".into(),
            patterns: vec![
                BinaryMatrix::from_rows(&[&[1, 1], &[1, 0]]),
                BinaryMatrix::from_rows(&[&[1, 1], &[1, 1]]),
            ],
        }
    }

    /// Permutation-tableau set `P`: `[[0,1],[1,0]]` and `[[1,1],[1,0]]`.
    pub fn tableau_p() -> Self {
        PatternSet {
            name: "P".into(),
            patterns: vec![
                BinaryMatrix::from_rows(&[&[0, 1], &[1, 0]]),
                BinaryMatrix::from_rows(&[&[1, 1], &[1, 0]]),
            ],
        }
    }

    /// Set `Q`: `[[1,1],[1,0]]` and `[[1,0],[1,1]]`.
    pub fn q_set() -> Self {
        PatternSet {
            name: "Q".into(),
            patterns: vec![
                BinaryMatrix::from_rows(&[&[1, 1], &[1, 0]]),
                BinaryMatrix::from_rows(&[&[1, 0], &[1, 1]]),
            ],
        }
    }

    pub fn custom(name: impl Into<String>, patterns: Vec<BinaryMatrix>) -> Self {
        assert!(!patterns.is_empty(), "pattern set must be nonempty");
        PatternSet {
            name: name.into(),
            patterns,
        }
    }

    /// Preset lookup by the names used on the command line.
    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "L" => Some(Self::lonesum()),
            "Gamma" | "gamma" => Some(Self::gamma()),
            "P" => Some(Self::tableau_p()),
            "Q" => Some(Self::q_set()),
            _ => None,
        }
    }

    pub fn presets() -> [PatternSet; 4] {
        [
            Self::lonesum(),
            Self::gamma(),
            Self::tableau_p(),
            Self::q_set(),
        ]
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn patterns(&self) -> &[BinaryMatrix] {
        &self.patterns
    }
}

/// Extra all-zero-line restrictions on the counted matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Restriction {
    /// No restriction (the plain class).
    None,
    /// Every column contains at least one 1 (the `c|` class).
    ColsNonzero,
    /// Every column and every row contains at least one 1 (`r|c|`).
    RowsAndColsNonzero,
}

impl Restriction {
    pub const ALL: [Restriction; 3] = [
        Restriction::None,
        Restriction::ColsNonzero,
        Restriction::RowsAndColsNonzero,
    ];
}

/// True iff `p` appears in `m` as a submatrix: some choice of rows and
/// columns of `m`, kept in order, equals `p` entrywise.
pub fn contains_pattern(m: &BinaryMatrix, p: &BinaryMatrix) -> bool {
    if p.n_rows > m.n_rows || p.n_cols > m.n_cols {
        return false;
    }
    select_rows(m, p, 0, 0, &mut Vec::new())
}

fn select_rows(
    m: &BinaryMatrix,
    p: &BinaryMatrix,
    next_pattern_row: usize,
    first_candidate: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if next_pattern_row == p.n_rows {
        return columns_embed(m, p, chosen);
    }
    let still_needed = p.n_rows - next_pattern_row;
    for row in first_candidate..=m.n_rows.saturating_sub(still_needed) {
        chosen.push(row);
        if select_rows(m, p, next_pattern_row + 1, row + 1, chosen) {
            chosen.pop();
            return true;
        }
        chosen.pop();
    }
    false
}

/// Greedy subsequence matching of pattern columns against matrix columns,
/// restricted to the chosen rows.
fn columns_embed(m: &BinaryMatrix, p: &BinaryMatrix, rows: &[usize]) -> bool {
    let mut j = 0;
    for pc in 0..p.n_cols {
        let mut found = false;
        while j < m.n_cols {
            let matches = rows
                .iter()
                .enumerate()
                .all(|(pi, &mi)| m.get(mi, j) == p.get(pi, pc));
            j += 1;
            if matches {
                found = true;
                break;
            }
        }
        if !found {
            return false;
        }
    }
    true
}

/// Counts the n-by-k 0/1 matrices avoiding every pattern in `set` under
/// restriction `r`, with the default search budget.
pub fn count_avoiding(
    n: usize,
    k: usize,
    set: &PatternSet,
    r: Restriction,
) -> Result<Int, MatrixEnumError> {
    count_avoiding_with_budget(n, k, set, r, DEFAULT_BUDGET)
}

/// As [`count_avoiding`], with an explicit node budget.
///
/// The search proceeds row by row in bitmask order.  After each placed row
/// it checks only for pattern occurrences whose last row is the new one
/// (everything above was already clean), so each forbidden prefix is cut at
/// the first row that completes a pattern.  For the 2x2 presets that check
/// is a pair of bitmask tests per earlier row.
pub fn count_avoiding_with_budget(
    n: usize,
    k: usize,
    set: &PatternSet,
    r: Restriction,
    budget: u64,
) -> Result<Int, MatrixEnumError> {
    assert!(k <= 32, "column count too large for exhaustive search");
    let mut state = Search {
        n,
        k,
        set,
        restriction: r,
        budget,
        visited: 0,
        rows: Vec::with_capacity(n),
        count: Int::zero(),
        sink: None,
    };
    state.run(0)?;
    Ok(state.count)
}

/// The avoiding matrices themselves, in row-bitmask order; same search and
/// budget as [`count_avoiding`].
pub fn enumerate_avoiding(
    n: usize,
    k: usize,
    set: &PatternSet,
    r: Restriction,
) -> Result<Vec<BinaryMatrix>, MatrixEnumError> {
    assert!(k <= 32, "column count too large for exhaustive search");
    let mut out = Vec::new();
    let mut state = Search {
        n,
        k,
        set,
        restriction: r,
        budget: DEFAULT_BUDGET,
        visited: 0,
        rows: Vec::with_capacity(n),
        count: Int::zero(),
        sink: Some(&mut out),
    };
    state.run(0)?;
    Ok(out)
}

struct Search<'a> {
    n: usize,
    k: usize,
    set: &'a PatternSet,
    restriction: Restriction,
    budget: u64,
    visited: u64,
    rows: Vec<u64>,
    count: Int,
    sink: Option<&'a mut Vec<BinaryMatrix>>,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) -> Result<(), MatrixEnumError> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(MatrixEnumError::BudgetExceeded {
                budget: self.budget,
            });
        }
        if depth == self.n {
            if self.restriction_satisfied() {
                self.count += Int::one();
                if let Some(out) = self.sink.as_deref_mut() {
                    out.push(BinaryMatrix::from_bit_rows(self.rows.clone(), self.k));
                }
            }
            return Ok(());
        }
        for row in 0..1u64 << self.k {
            if self.restriction == Restriction::RowsAndColsNonzero && row == 0 && self.k > 0 {
                continue;
            }
            self.rows.push(row);
            if !self.last_row_completes_pattern() {
                self.run(depth + 1)?;
            }
            self.rows.pop();
        }
        Ok(())
    }

    fn restriction_satisfied(&self) -> bool {
        match self.restriction {
            Restriction::None => true,
            Restriction::ColsNonzero => self.cols_covered(),
            // a width-0 row is an all-zero row, so n >= 1 rows with k = 0
            // can never satisfy the row restriction
            Restriction::RowsAndColsNonzero => {
                self.cols_covered() && self.rows.iter().all(|&r| r != 0)
            }
        }
    }

    fn cols_covered(&self) -> bool {
        self.rows.iter().fold(0, |acc, r| acc | r) == col_mask(self.k)
    }

    fn last_row_completes_pattern(&self) -> bool {
        let last = self.rows.len() - 1;
        for p in &self.set.patterns {
            if p.n_rows == 2 && p.n_cols == 2 {
                if last >= 1 {
                    let pr0 = (p.get(0, 0), p.get(0, 1));
                    let pr1 = (p.get(1, 0), p.get(1, 1));
                    let bottom = self.rows[last];
                    for &top in &self.rows[..last] {
                        if pair_matches(top, bottom, pr0, pr1, self.k) {
                            return true;
                        }
                    }
                }
            } else if p.n_rows <= self.rows.len() && self.completes_generic(p) {
                return true;
            }
        }
        false
    }

    /// Generic check: does `p` embed using the newest row as its last row?
    fn completes_generic(&self, p: &BinaryMatrix) -> bool {
        let m = BinaryMatrix::from_bit_rows(self.rows.clone(), self.k);
        let last = self.rows.len() - 1;
        // the last pattern row is pinned to the last matrix row
        fn rec(
            m: &BinaryMatrix,
            p: &BinaryMatrix,
            pinned: usize,
            pr: usize,
            from: usize,
            chosen: &mut Vec<usize>,
        ) -> bool {
            if pr + 1 == p.n_rows() {
                chosen.push(pinned);
                let got = columns_embed(m, p, chosen);
                chosen.pop();
                return got;
            }
            for row in from..pinned {
                chosen.push(row);
                if rec(m, p, pinned, pr + 1, row + 1, chosen) {
                    chosen.pop();
                    return true;
                }
                chosen.pop();
            }
            false
        }
        rec(&m, p, last, 0, 0, &mut Vec::new())
    }
}

/// Bit test: do rows `(top, bottom)` contain the 2x2 pattern with rows
/// `pr0`, `pr1` on some column pair `c1 < c2`?
fn pair_matches(top: u64, bottom: u64, pr0: (bool, bool), pr1: (bool, bool), k: usize) -> bool {
    let mask = col_mask(k);
    let pick = |row: u64, want: bool| if want { row } else { !row & mask };
    let left = pick(top, pr0.0) & pick(bottom, pr1.0);
    let right = pick(top, pr0.1) & pick(bottom, pr1.1);
    if left == 0 || right == 0 {
        return false;
    }
    left.trailing_zeros() < 63 - right.leading_zeros()
}

/// Reference implementation: filter all `2^(n*k)` matrices.  Exists to
/// validate the pruned search; unusable beyond tiny shapes.
pub fn count_avoiding_naive(
    n: usize,
    k: usize,
    set: &PatternSet,
    r: Restriction,
) -> Result<Int, MatrixEnumError> {
    let cells = n * k;
    if cells > 25 {
        return Err(MatrixEnumError::BudgetExceeded { budget: 1 << 25 });
    }
    let mut count = Int::zero();
    for code in 0..1u64 << cells {
        let rows: Vec<u64> = (0..n).map(|i| code >> (i * k) & col_mask(k)).collect();
        let m = BinaryMatrix::from_bit_rows(rows, k);
        if set.patterns.iter().any(|p| contains_pattern(&m, p)) {
            continue;
        }
        let cols_ok = m.bit_rows().iter().fold(0, |a, r| a | r) == col_mask(k);
        let ok = match r {
            Restriction::None => true,
            Restriction::ColsNonzero => cols_ok,
            Restriction::RowsAndColsNonzero => cols_ok && m.bit_rows().iter().all(|&x| x != 0),
        };
        if ok {
            count += Int::one();
        }
    }
    Ok(count)
}

/// Decides whether `m` is uniquely reconstructible from its row and column
/// sums, independently of the forbidden-pattern characterization.
///
/// Shapes up to 3x3 are settled by brute force over all matrices with the
/// same margins.  Larger shapes use the staircase test: sort columns by
/// decreasing sum; the matrix is lonesum iff every row is exactly a prefix
/// of that column order of length equal to its row sum (the unique
/// Ferrers-type filling of the margins).
pub fn is_lonesum_reconstruction(m: &BinaryMatrix) -> bool {
    if m.n_rows <= 3 && m.n_cols <= 3 {
        return margin_mates(m) == 1;
    }
    staircase_unique(m)
}

/// Number of matrices sharing `m`'s row and column sums (including `m`).
fn margin_mates(m: &BinaryMatrix) -> u64 {
    let rs = m.row_sums();
    let cs = m.col_sums();
    let (n, k) = (m.n_rows, m.n_cols);
    let mut found = 0;
    let cells = n * k;
    for code in 0..1u64 << cells {
        let rows: Vec<u64> = (0..n).map(|i| code >> (i * k) & col_mask(k)).collect();
        let cand = BinaryMatrix::from_bit_rows(rows, k);
        if cand.row_sums() == rs && cand.col_sums() == cs {
            found += 1;
        }
    }
    found
}

fn staircase_unique(m: &BinaryMatrix) -> bool {
    let col_sums = m.col_sums();
    let mut order: Vec<usize> = (0..m.n_cols).collect();
    order.sort_by(|&a, &b| col_sums[b].cmp(&col_sums[a]).then(a.cmp(&b)));
    for i in 0..m.n_rows {
        let sum = m.bit_rows()[i].count_ones() as usize;
        for (pos, &j) in order.iter().enumerate() {
            if m.get(i, j) != (pos < sum) {
                return false;
            }
        }
    }
    true
}

/// Row/column class structure of a lonesum matrix: indices of equal
/// non-zero rows grouped together, classes ordered by increasing sum, and
/// likewise for columns.  The two class counts always agree; that common
/// count is the `ordinary_class_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LonesumDecomposition {
    pub n_rows: usize,
    pub n_cols: usize,
    pub row_classes: Vec<Vec<usize>>,
    pub col_classes: Vec<Vec<usize>>,
}

impl LonesumDecomposition {
    pub fn ordinary_class_count(&self) -> usize {
        self.row_classes.len()
    }
}

fn line_classes(lines: &[u64]) -> Vec<Vec<usize>> {
    let mut groups: HashMap<u64, Vec<usize>> = HashMap::new();
    for (i, &line) in lines.iter().enumerate() {
        if line != 0 {
            groups.entry(line).or_default().push(i);
        }
    }
    let mut classes: Vec<(u32, Vec<usize>)> = groups
        .into_iter()
        .map(|(line, idx)| (line.count_ones(), idx))
        .collect();
    classes.sort_by_key(|(sum, _)| *sum);
    classes.into_iter().map(|(_, idx)| idx).collect()
}

/// Partitions the rows and columns of a lonesum matrix into ordered classes
/// of equal lines.  Errors on non-lonesum input.  [`lonesum_compose`]
/// rebuilds the matrix exactly.
pub fn lonesum_decompose(m: &BinaryMatrix) -> Result<LonesumDecomposition, MatrixEnumError> {
    if !is_lonesum_reconstruction(m) {
        return Err(MatrixEnumError::NotLonesum);
    }
    let row_classes = line_classes(m.bit_rows());
    let col_classes = line_classes(m.transpose().bit_rows());
    debug_assert_eq!(row_classes.len(), col_classes.len());
    Ok(LonesumDecomposition {
        n_rows: m.n_rows,
        n_cols: m.n_cols,
        row_classes,
        col_classes,
    })
}

/// Inverse of [`lonesum_decompose`]: a row in the p-th class (ascending by
/// sum, 0-based) has 1s exactly in the columns of the p+1 largest column
/// classes.
pub fn lonesum_compose(d: &LonesumDecomposition) -> BinaryMatrix {
    let m = d.ordinary_class_count();
    let mut out = BinaryMatrix::zero(d.n_rows, d.n_cols);
    for (p, rows) in d.row_classes.iter().enumerate() {
        for (q, cols) in d.col_classes.iter().enumerate() {
            if p + q + 1 >= m {
                for &i in rows {
                    for &j in cols {
                        out.set(i, j, true);
                    }
                }
            }
        }
    }
    out
}
