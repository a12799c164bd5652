//! Exhaustive permutation-class oracles: banded permutations, excedance
//! classes, Callan permutations, and Ryser permanents of the band matrices.
//!
//! All enumerations are depth-first in lexicographic order with per-position
//! admissibility pruning, guarded by a node budget.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::Int;
use crate::matrices::BinaryMatrix;

pub use crate::matrices::DEFAULT_BUDGET;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermsError {
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("permanent requires a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
}

/// Permutation of `[N]` in one-line form; `image(i)` is 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn from_one_line(images: Vec<usize>) -> Result<Self, String> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(format!("{images:?} is not a permutation of 1..={n}"));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `pi(i)` for 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    /// Indices `i` with `pi(i) > i`.
    pub fn excedances(&self) -> Vec<usize> {
        (1..=self.degree()).filter(|&i| self.image(i) > i).collect()
    }

    /// Indices `i` with `pi(i) >= i`.
    pub fn weak_excedances(&self) -> Vec<usize> {
        (1..=self.degree())
            .filter(|&i| self.image(i) >= i)
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Displacement window `pi(i) - i` for permutations of `[n+k+r]`.
///
/// Presets (`d` is the displacement):
///
/// * `v`: `-k <= d <= n`, counts `B(n,k)`;
/// * `v_star`: `-k <= d < n`, counts `C(n,k)`;
/// * `v_star_star`: `-k < d < n`, counts `D(n,k)`;
/// * `f_window(r,n,k)`: `-(k+r) < d < n+r` over `[n+k+r]`.
///
/// The `f` family genuinely lives on `n+k+r` symbols: that degree is what
/// makes the direct enumeration agree with the alternating-sum formula
/// `sequences::vesztergombi_f` for every `r` (at `r = 0` it coincides with
/// `v_star_star`, and `f(1,n,k) = C(n+1,k)`, `f(2,n,k) = B(n+1,k+1)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BandSpec {
    pub r: usize,
    pub n: usize,
    pub k: usize,
    pub low_strict: bool,
    pub high_strict: bool,
}

impl BandSpec {
    pub fn v(n: usize, k: usize) -> Self {
        BandSpec {
            r: 0,
            n,
            k,
            low_strict: false,
            high_strict: false,
        }
    }

    pub fn v_star(n: usize, k: usize) -> Self {
        BandSpec {
            r: 0,
            n,
            k,
            low_strict: false,
            high_strict: true,
        }
    }

    pub fn v_star_star(n: usize, k: usize) -> Self {
        BandSpec {
            r: 0,
            n,
            k,
            low_strict: true,
            high_strict: true,
        }
    }

    pub fn f_window(r: usize, n: usize, k: usize) -> Self {
        BandSpec {
            r,
            n,
            k,
            low_strict: true,
            high_strict: true,
        }
    }

    /// Number of symbols the window constrains.
    pub fn degree(&self) -> usize {
        self.n + self.k + self.r
    }

    /// Is value `val` admitted at position `pos` (both 1-based)?
    pub fn admits(&self, pos: usize, val: usize) -> bool {
        let d = val as i64 - pos as i64;
        let low = -((self.k + self.r) as i64);
        let high = (self.n + self.r) as i64;
        let low_ok = if self.low_strict { d > low } else { d >= low };
        let high_ok = if self.high_strict {
            d < high
        } else {
            d <= high
        };
        low_ok && high_ok
    }
}

/// Shared depth-first engine: count permutations of `[n]` with an
/// admissibility predicate on (position, value), optionally collecting them.
fn search_admissible(
    n: usize,
    admits: &dyn Fn(usize, usize) -> bool,
    budget: u64,
    mut sink: Option<&mut Vec<Permutation>>,
) -> Result<Int, PermsError> {
    struct St<'a> {
        n: usize,
        admits: &'a dyn Fn(usize, usize) -> bool,
        budget: u64,
        visited: u64,
        used: Vec<bool>,
        stack: Vec<usize>,
        count: Int,
    }
    fn rec(st: &mut St, sink: &mut Option<&mut Vec<Permutation>>) -> Result<(), PermsError> {
        st.visited += 1;
        if st.visited > st.budget {
            return Err(PermsError::BudgetExceeded { budget: st.budget });
        }
        let pos = st.stack.len() + 1;
        if pos > st.n {
            st.count += Int::one();
            if let Some(out) = sink {
                out.push(Permutation {
                    images: st.stack.clone(),
                });
            }
            return Ok(());
        }
        for val in 1..=st.n {
            if !st.used[val] && (st.admits)(pos, val) {
                st.used[val] = true;
                st.stack.push(val);
                rec(st, sink)?;
                st.stack.pop();
                st.used[val] = false;
            }
        }
        Ok(())
    }
    let mut st = St {
        n,
        admits,
        budget,
        visited: 0,
        used: vec![false; n + 1],
        stack: Vec::with_capacity(n),
        count: Int::zero(),
    };
    rec(&mut st, &mut sink)?;
    Ok(st.count)
}

/// Number of permutations satisfying the band window.
pub fn count_band(spec: &BandSpec) -> Result<Int, PermsError> {
    count_band_with_budget(spec, DEFAULT_BUDGET)
}

pub fn count_band_with_budget(spec: &BandSpec, budget: u64) -> Result<Int, PermsError> {
    search_admissible(spec.degree(), &|p, v| spec.admits(p, v), budget, None)
}

/// All permutations satisfying the band window, in lexicographic order.
pub fn enumerate_band(spec: &BandSpec) -> Result<Vec<Permutation>, PermsError> {
    let mut out = Vec::new();
    search_admissible(
        spec.degree(),
        &|p, v| spec.admits(p, v),
        DEFAULT_BUDGET,
        Some(&mut out),
    )?;
    Ok(out)
}

/// The 0/1 matrix whose permanent counts the band class: entry `(i,j)` is 1
/// iff the window admits value `i` at position `j` (both 1-based).
pub fn band_matrix(spec: &BandSpec) -> BinaryMatrix {
    let n = spec.degree();
    let mut m = BinaryMatrix::zero(n, n);
    for i in 1..=n {
        for j in 1..=n {
            if spec.admits(j, i) {
                m.set(i - 1, j - 1, true);
            }
        }
    }
    m
}

/// Exact permanent by Ryser's inclusion-exclusion over column subsets,
/// iterated in Gray-code order.  Sizes up to ~20 are practical.
pub fn permanent_ryser(m: &BinaryMatrix) -> Result<Int, PermsError> {
    let n = m.n_rows();
    if n != m.n_cols() {
        return Err(PermsError::NotSquare {
            rows: n,
            cols: m.n_cols(),
        });
    }
    if n == 0 {
        return Ok(Int::one()); // empty product over the empty subset
    }
    assert!(n < 26, "Ryser permanent limited to 25x25 here");
    let mut row_sums = vec![0i64; n];
    let mut total = Int::zero();
    let mut gray: u64 = 0;
    for g in 1u64..1 << n {
        let bit = g.trailing_zeros() as usize;
        let newgray = gray ^ (1 << bit);
        let added = newgray & (1 << bit) != 0;
        for (i, rs) in row_sums.iter_mut().enumerate() {
            if m.get(i, bit) {
                *rs += if added { 1 } else { -1 };
            }
        }
        gray = newgray;
        let mut prod = Int::one();
        for &rs in &row_sums {
            if rs == 0 {
                prod = Int::zero();
                break;
            }
            prod *= Int::from(rs);
        }
        if !prod.is_zero() {
            if (n as u32 - gray.count_ones()) % 2 == 0 {
                total += prod;
            } else {
                total -= prod;
            }
        }
    }
    Ok(total)
}

/// Excedance-class selector over permutations of `[n+k]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExcedanceVariant {
    /// The block class from the permanent proof of the `B` count: no strict
    /// excedance may stay inside `[k]`, and no strict deficiency may land
    /// strictly inside the right block.  (The literal class
    /// `{WE(pi) = [k]}` has `C(k,n)` elements, not `B(n,k)`; this is the
    /// class whose permanent matrix actually has permanent `B(n,k)`.)
    E,
    /// Strict excedance set equal to `[k]`: counts `C(n,k)`.
    EStar,
    /// Strict excedance set `[k]` and fixed-point-free: counts `D(n,k)`.
    EStarStar,
}

impl ExcedanceVariant {
    fn admits(&self, k: usize, pos: usize, val: usize) -> bool {
        match self {
            ExcedanceVariant::E => {
                if pos <= k {
                    !(pos < val && val <= k)
                } else {
                    !(k < val && val < pos)
                }
            }
            ExcedanceVariant::EStar => {
                if pos <= k {
                    val > pos
                } else {
                    val <= pos
                }
            }
            ExcedanceVariant::EStarStar => {
                if pos <= k {
                    val > pos
                } else {
                    val < pos
                }
            }
        }
    }
}

/// Counts the chosen excedance class inside the symmetric group on `[n+k]`.
pub fn count_excedance_class(
    n: usize,
    k: usize,
    variant: ExcedanceVariant,
) -> Result<Int, PermsError> {
    search_admissible(n + k, &|p, v| variant.admits(k, p, v), DEFAULT_BUDGET, None)
}

/// All members of the chosen excedance class, in lexicographic order.
pub fn enumerate_excedance_class(
    n: usize,
    k: usize,
    variant: ExcedanceVariant,
) -> Result<Vec<Permutation>, PermsError> {
    let mut out = Vec::new();
    search_admissible(
        n + k,
        &|p, v| variant.admits(k, p, v),
        DEFAULT_BUDGET,
        Some(&mut out),
    )?;
    Ok(out)
}

/// One symbol of a two-sorted alphabet: left values `1..=n` and right
/// values `1..=k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Left(usize),
    Right(usize),
}

impl Symbol {
    pub fn is_left(&self) -> bool {
        matches!(self, Symbol::Left(_))
    }

    pub fn value(&self) -> usize {
        match *self {
            Symbol::Left(v) | Symbol::Right(v) => v,
        }
    }
}

/// Arrangement of the full two-sorted alphabet `Left(1..=n) + Right(1..=k)`,
/// each symbol exactly once.
///
/// Text form: space-separated values, right values marked with an
/// apostrophe, e.g. `2 1' 1` for `Left(2) Right(1) Left(1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TaggedPermutation {
    n: usize,
    k: usize,
    symbols: Vec<Symbol>,
}

impl TaggedPermutation {
    /// Validates that `symbols` uses every symbol of the `(n,k)` alphabet
    /// exactly once.
    pub fn new(n: usize, k: usize, symbols: Vec<Symbol>) -> Result<Self, String> {
        if symbols.len() != n + k {
            return Err(format!("expected {} symbols, got {}", n + k, symbols.len()));
        }
        let mut left = vec![false; n + 1];
        let mut right = vec![false; k + 1];
        for s in &symbols {
            match *s {
                Symbol::Left(v) => {
                    if v == 0 || v > n || left[v] {
                        return Err(format!("bad left value {v}"));
                    }
                    left[v] = true;
                }
                Symbol::Right(v) => {
                    if v == 0 || v > k || right[v] {
                        return Err(format!("bad right value {v}"));
                    }
                    right[v] = true;
                }
            }
        }
        Ok(TaggedPermutation { n, k, symbols })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn first(&self) -> Option<Symbol> {
        self.symbols.first().copied()
    }

    pub fn last(&self) -> Option<Symbol> {
        self.symbols.last().copied()
    }
}

impl fmt::Display for TaggedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .symbols
            .iter()
            .map(|s| match s {
                Symbol::Left(v) => v.to_string(),
                Symbol::Right(v) => format!("{v}'"),
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for TaggedPermutation {
    type Err = String;

    /// Parses the apostrophe text form; the alphabet sizes are inferred
    /// from the largest left and right values present.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut symbols = Vec::new();
        let (mut max_left, mut max_right) = (0usize, 0usize);
        for tok in s.split_whitespace() {
            if let Some(num) = tok.strip_suffix('\'') {
                let v: usize = num.parse().map_err(|_| format!("bad token {tok:?}"))?;
                max_right = max_right.max(v);
                symbols.push(Symbol::Right(v));
            } else {
                let v: usize = tok.parse().map_err(|_| format!("bad token {tok:?}"))?;
                max_left = max_left.max(v);
                symbols.push(Symbol::Left(v));
            }
        }
        TaggedPermutation::new(max_left, max_right, symbols)
    }
}

/// Validity of a tagged permutation: every maximal run of same-sided
/// symbols must be increasing, i.e. every same-sided adjacent pair
/// increases.
pub fn is_callan(p: &TaggedPermutation) -> bool {
    p.symbols.windows(2).all(|w| {
        if w[0].is_left() == w[1].is_left() {
            w[0].value() < w[1].value()
        } else {
            true
        }
    })
}

/// Endpoint constraint for a Callan class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndRule {
    Any,
    Left,
    Right,
}

impl EndRule {
    fn matches(&self, s: Option<Symbol>) -> bool {
        match (self, s) {
            (EndRule::Any, _) => true,
            // the empty permutation satisfies every endpoint rule vacuously
            (_, None) => true,
            (EndRule::Left, Some(sym)) => sym.is_left(),
            (EndRule::Right, Some(sym)) => !sym.is_left(),
        }
    }
}

/// First/last-symbol constraints; `(Any, Left)` is the class ending in a
/// left value, `(Left, Right)` starts left and ends right, and so on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundaryClass {
    pub first: EndRule,
    pub last: EndRule,
}

impl BoundaryClass {
    pub fn new(first: EndRule, last: EndRule) -> Self {
        BoundaryClass { first, last }
    }

    pub fn matches(&self, p: &TaggedPermutation) -> bool {
        self.first.matches(p.first()) && self.last.matches(p.last())
    }
}

struct CallanSearch<'a> {
    n: usize,
    k: usize,
    boundary: BoundaryClass,
    budget: u64,
    visited: u64,
    used_left: Vec<bool>,
    used_right: Vec<bool>,
    stack: Vec<Symbol>,
    count: Int,
    sink: Option<&'a mut Vec<TaggedPermutation>>,
}

impl CallanSearch<'_> {
    fn rec(&mut self) -> Result<(), PermsError> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(PermsError::BudgetExceeded {
                budget: self.budget,
            });
        }
        if self.stack.len() == self.n + self.k {
            let p = TaggedPermutation {
                n: self.n,
                k: self.k,
                symbols: self.stack.clone(),
            };
            if self.boundary.matches(&p) {
                self.count += Int::one();
                if let Some(out) = self.sink.as_deref_mut() {
                    out.push(p);
                }
            }
            return Ok(());
        }
        let prev = self.stack.last().copied();
        for v in 1..=self.n {
            if self.used_left[v] {
                continue;
            }
            if let Some(Symbol::Left(pv)) = prev {
                if v < pv {
                    continue;
                }
            }
            self.used_left[v] = true;
            self.stack.push(Symbol::Left(v));
            self.rec()?;
            self.stack.pop();
            self.used_left[v] = false;
        }
        for v in 1..=self.k {
            if self.used_right[v] {
                continue;
            }
            if let Some(Symbol::Right(pv)) = prev {
                if v < pv {
                    continue;
                }
            }
            self.used_right[v] = true;
            self.stack.push(Symbol::Right(v));
            self.rec()?;
            self.stack.pop();
            self.used_right[v] = false;
        }
        Ok(())
    }
}

fn callan_search(
    n: usize,
    k: usize,
    boundary: BoundaryClass,
    budget: u64,
    sink: Option<&mut Vec<TaggedPermutation>>,
) -> Result<Int, PermsError> {
    let mut st = CallanSearch {
        n,
        k,
        boundary,
        budget,
        visited: 0,
        used_left: vec![false; n + 1],
        used_right: vec![false; k + 1],
        stack: Vec::with_capacity(n + k),
        count: Int::zero(),
        sink,
    };
    st.rec()?;
    Ok(st.count)
}

/// All Callan permutations of the `(n,k)` alphabet, generated in a fixed
/// depth-first order with the run-increasing constraint applied during
/// generation.  Intended for the small exhaustive sizes; panics past the
/// default node budget.
pub fn enumerate_callan(n: usize, k: usize) -> Vec<TaggedPermutation> {
    let mut out = Vec::new();
    callan_search(
        n,
        k,
        BoundaryClass::new(EndRule::Any, EndRule::Any),
        DEFAULT_BUDGET,
        Some(&mut out),
    )
    .expect("callan enumeration exceeded the default budget");
    out
}

/// Number of Callan permutations in the boundary class.
pub fn count_callan(n: usize, k: usize, b: BoundaryClass) -> Result<Int, PermsError> {
    callan_search(n, k, b, DEFAULT_BUDGET, None)
}

/// As [`count_callan`] with an explicit node budget.
pub fn count_callan_with_budget(
    n: usize,
    k: usize,
    b: BoundaryClass,
    budget: u64,
) -> Result<Int, PermsError> {
    callan_search(n, k, b, budget, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::sequences::{value, vesztergombi_f, SequenceId};

    /// Permanent by direct expansion over all permutations; the slow oracle
    /// for `permanent_ryser`.
    fn permanent_naive(m: &BinaryMatrix) -> Int {
        let n = m.n_rows();
        assert_eq!(n, m.n_cols());
        fn rec(m: &BinaryMatrix, row: usize, used: &mut Vec<bool>) -> Int {
            let n = m.n_rows();
            if row == n {
                return Int::from(1);
            }
            let mut acc = Int::from(0);
            for j in 0..n {
                if !used[j] && m.get(row, j) {
                    used[j] = true;
                    acc += rec(m, row + 1, used);
                    used[j] = false;
                }
            }
            acc
        }
        rec(m, 0, &mut vec![false; n])
    }

    #[test]
    fn band_count_examples() {
        assert_eq!(count_band(&BandSpec::v(1, 1)).unwrap(), int(2));
        assert_eq!(count_band(&BandSpec::v_star(2, 2)).unwrap(), int(7));
        assert_eq!(count_band(&BandSpec::v_star_star(2, 2)).unwrap(), int(5));
    }

    #[test]
    fn band_matrix_examples() {
        let all_ones = band_matrix(&BandSpec::v(1, 1));
        assert_eq!(all_ones.row_strings(), vec!["11", "11"]);
        let identity = band_matrix(&BandSpec::v_star_star(1, 1));
        assert_eq!(identity.row_strings(), vec!["10", "01"]);
    }

    #[test]
    fn permanent_examples() {
        let eye = BinaryMatrix::from_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(permanent_ryser(&eye).unwrap(), int(1));
        let ones = BinaryMatrix::from_rows(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        assert_eq!(permanent_ryser(&ones).unwrap(), int(6));
        let tri = BinaryMatrix::from_rows(&[&[1, 1], &[1, 0]]);
        assert_eq!(permanent_ryser(&tri).unwrap(), int(1));
        let rect = BinaryMatrix::zero(2, 3);
        assert!(matches!(
            permanent_ryser(&rect),
            Err(PermsError::NotSquare { .. })
        ));
    }

    #[test]
    fn ryser_matches_naive_permanent() {
        // every 0/1 matrix of size 3, plus a handful of size-4/5 bands
        for code in 0..1u64 << 9 {
            let rows = (0..3).map(|i| code >> (3 * i) & 0b111).collect();
            let m = BinaryMatrix::from_bit_rows(rows, 3);
            assert_eq!(permanent_ryser(&m).unwrap(), permanent_naive(&m));
        }
        for spec in [
            BandSpec::v(2, 2),
            BandSpec::v_star(3, 2),
            BandSpec::v_star_star(3, 2),
        ] {
            let m = band_matrix(&spec);
            assert_eq!(permanent_ryser(&m).unwrap(), permanent_naive(&m));
        }
    }

    #[test]
    fn permanent_equals_band_count() {
        for n in 0..=3 {
            for k in 0..=3 {
                for spec in [
                    BandSpec::v(n, k),
                    BandSpec::v_star(n, k),
                    BandSpec::v_star_star(n, k),
                ] {
                    assert_eq!(
                        permanent_ryser(&band_matrix(&spec)).unwrap(),
                        count_band(&spec).unwrap(),
                        "{spec:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn band_grid_matches_sequences() {
        for n in 0..=3usize {
            for k in 0..=3usize {
                assert_eq!(
                    count_band(&BandSpec::v(n, k)).unwrap(),
                    value(SequenceId::B, n, k)
                );
                assert_eq!(
                    count_band(&BandSpec::v_star(n, k)).unwrap(),
                    value(SequenceId::C, n, k)
                );
                assert_eq!(
                    count_band(&BandSpec::v_star_star(n, k)).unwrap(),
                    value(SequenceId::D, n, k)
                );
            }
        }
    }

    #[test]
    fn f_window_enumeration_matches_alternating_sum() {
        // resolves the indexing of the banded-count formula: the window
        // -(k+r) < pi(i)-i < n+r lives on n+k+r symbols
        for r in 0..=2usize {
            for n in 0..=4usize {
                for k in 0..=4usize {
                    if n + k > 7 - r.min(1) {
                        continue;
                    }
                    assert_eq!(
                        count_band(&BandSpec::f_window(r, n, k)).unwrap(),
                        vesztergombi_f(r, n, k),
                        "f({r},{n},{k})"
                    );
                }
            }
        }
    }

    #[test]
    fn excedance_examples() {
        assert_eq!(
            count_excedance_class(1, 1, ExcedanceVariant::E).unwrap(),
            int(2)
        );
        assert_eq!(
            count_excedance_class(2, 2, ExcedanceVariant::EStar).unwrap(),
            int(7)
        );
        assert_eq!(
            count_excedance_class(2, 2, ExcedanceVariant::EStarStar).unwrap(),
            int(5)
        );
    }

    #[test]
    fn strict_excedance_class_is_literal() {
        // EStar really is {E(pi) = [k]}, EStarStar the fixed-point-free part
        for (n, k) in [(2, 2), (3, 2), (1, 3)] {
            let members = enumerate_excedance_class(n, k, ExcedanceVariant::EStar).unwrap();
            for p in &members {
                assert_eq!(p.excedances(), (1..=k).collect::<Vec<_>>());
            }
            let strict: Vec<_> = members
                .iter()
                .filter(|p| (1..=n + k).all(|i| p.image(i) != i))
                .cloned()
                .collect();
            let fpf = enumerate_excedance_class(n, k, ExcedanceVariant::EStarStar).unwrap();
            assert_eq!(strict, fpf);
        }
    }

    #[test]
    fn excedance_grid_matches_sequences() {
        for n in 0..=3usize {
            for k in 0..=3usize {
                assert_eq!(
                    count_excedance_class(n, k, ExcedanceVariant::E).unwrap(),
                    value(SequenceId::B, n, k),
                    "E({n},{k})"
                );
                assert_eq!(
                    count_excedance_class(n, k, ExcedanceVariant::EStar).unwrap(),
                    value(SequenceId::C, n, k),
                    "E*({n},{k})"
                );
                assert_eq!(
                    count_excedance_class(n, k, ExcedanceVariant::EStarStar).unwrap(),
                    value(SequenceId::D, n, k),
                    "E**({n},{k})"
                );
            }
        }
    }

    #[test]
    fn callan_validity_examples() {
        let t = |s: &str| TaggedPermutation::from_str(s).unwrap();
        assert!(is_callan(&t("1 2 1'")));
        assert!(!is_callan(
            &TaggedPermutation::new(
                2,
                1,
                vec![Symbol::Left(2), Symbol::Left(1), Symbol::Right(1)]
            )
            .unwrap()
        ));
        assert!(is_callan(&t("2 1' 1")));
    }

    #[test]
    fn tagged_permutation_text_round_trip() {
        let p = TaggedPermutation::new(
            2,
            2,
            vec![
                Symbol::Left(2),
                Symbol::Right(1),
                Symbol::Right(2),
                Symbol::Left(1),
            ],
        )
        .unwrap();
        assert_eq!(p.to_string(), "2 1' 2' 1");
        assert_eq!(TaggedPermutation::from_str("2 1' 2' 1").unwrap(), p);
        assert!(TaggedPermutation::from_str("1 1").is_err());
    }

    #[test]
    fn callan_count_examples() {
        let any = BoundaryClass::new(EndRule::Any, EndRule::Any);
        let any_left = BoundaryClass::new(EndRule::Any, EndRule::Left);
        let left_right = BoundaryClass::new(EndRule::Left, EndRule::Right);
        assert_eq!(count_callan(2, 2, any).unwrap(), int(14));
        assert_eq!(count_callan(2, 2, any_left).unwrap(), int(7));
        assert_eq!(count_callan(2, 2, left_right).unwrap(), int(5));
    }

    #[test]
    fn callan_grid_matches_sequences() {
        for n in 0..=3usize {
            for k in 0..=3usize {
                assert_eq!(
                    count_callan(n, k, BoundaryClass::new(EndRule::Any, EndRule::Any)).unwrap(),
                    value(SequenceId::B, n, k)
                );
                assert_eq!(
                    count_callan(n, k, BoundaryClass::new(EndRule::Any, EndRule::Left)).unwrap(),
                    value(SequenceId::C, n, k)
                );
                assert_eq!(
                    count_callan(n, k, BoundaryClass::new(EndRule::Left, EndRule::Right)).unwrap(),
                    value(SequenceId::D, n, k)
                );
            }
        }
    }

    #[test]
    fn block_reversal_is_a_closure_and_equates_mirror_classes() {
        // reversing the maximal blocks of a Callan permutation yields a
        // Callan permutation and swaps the endpoint constraints
        fn reverse_blocks(p: &TaggedPermutation) -> TaggedPermutation {
            let mut blocks: Vec<Vec<Symbol>> = Vec::new();
            for &s in p.symbols() {
                match blocks.last_mut() {
                    Some(b) if b[0].is_left() == s.is_left() => b.push(s),
                    _ => blocks.push(vec![s]),
                }
            }
            blocks.reverse();
            TaggedPermutation::new(p.n(), p.k(), blocks.concat()).unwrap()
        }
        for n in 0..=3usize {
            for k in 0..=3usize {
                if n + k > 6 {
                    continue;
                }
                let all = enumerate_callan(n, k);
                for p in &all {
                    assert!(is_callan(&reverse_blocks(p)), "{p}");
                }
                for (a, b) in [
                    (
                        BoundaryClass::new(EndRule::Any, EndRule::Left),
                        BoundaryClass::new(EndRule::Left, EndRule::Any),
                    ),
                    (
                        BoundaryClass::new(EndRule::Right, EndRule::Left),
                        BoundaryClass::new(EndRule::Left, EndRule::Right),
                    ),
                ] {
                    assert_eq!(
                        count_callan(n, k, a).unwrap(),
                        count_callan(n, k, b).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let err = count_band_with_budget(&BandSpec::v(4, 4), 50);
        assert_eq!(err, Err(PermsError::BudgetExceeded { budget: 50 }));
    }
}
