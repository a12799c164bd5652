//! Constructive maps between the combinatorial interpretations, each paired
//! with its inverse and tested for round trips and exact image
//! characterization on exhaustive small domains.
//!
//! * acyclic orientations of complete bipartite graphs <-> lonesum matrices;
//! * the Callan moves: the largest-left-value exchange (`callan_phi` /
//!   `callan_psi`), the side swap, and the split of the (l,l) class;
//! * the zig-zag path from column-covered tableau fillings to permutations
//!   with prescribed excedance set.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::Int;
use crate::matrices::{contains_pattern, BinaryMatrix, PatternSet};
use crate::perms::{is_callan, Permutation, Symbol, TaggedPermutation};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BijectionError {
    #[error("orientation matrix must be {n}x{k}, got {rows}x{cols}")]
    BadShape {
        n: usize,
        k: usize,
        rows: usize,
        cols: usize,
    },
    #[error("enumeration budget exceeded: {cells} cells is too many")]
    TooLarge { cells: usize },
    #[error("input is not a valid Callan permutation")]
    NotCallan,
    #[error("input must end with a left value")]
    MustEndLeft,
    #[error("input must end with a right value")]
    MustEndRight,
    #[error("input must start and end with left values")]
    MustStartAndEndLeft,
    #[error("the {0} alphabet is empty")]
    EmptyAlphabet(&'static str),
    #[error("matrix is not a column-covered tableau filling")]
    NotTableau,
}

/// Orientation of the complete bipartite graph on left vertices
/// `u_1..u_n` and right vertices `v_1..v_k`: entry `(i,j) = 1` means the
/// edge is directed `v_j -> u_i`, entry 0 means `u_i -> v_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedBipartite {
    n: usize,
    k: usize,
    orientation: BinaryMatrix,
}

impl OrientedBipartite {
    pub fn new(n: usize, k: usize, orientation: BinaryMatrix) -> Result<Self, BijectionError> {
        if orientation.n_rows() != n || orientation.n_cols() != k {
            return Err(BijectionError::BadShape {
                n,
                k,
                rows: orientation.n_rows(),
                cols: orientation.n_cols(),
            });
        }
        Ok(OrientedBipartite { n, k, orientation })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn matrix(&self) -> &BinaryMatrix {
        &self.orientation
    }

    /// Out-degree-zero vertices, left vertices `0..n` first, then right
    /// vertices as `n + j`.  An isolated vertex is both a sink and a source.
    fn sinks(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for i in 0..self.n {
            // u_i's outgoing edges are the 0 entries of row i
            if (0..self.k).all(|j| self.orientation.get(i, j)) {
                out.push(i);
            }
        }
        for j in 0..self.k {
            // v_j's outgoing edges are the 1 entries of column j
            if (0..self.n).all(|i| !self.orientation.get(i, j)) {
                out.push(self.n + j);
            }
        }
        out
    }

    /// In-degree-zero vertices, numbered as in [`Self::sinks`].
    fn sources(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for i in 0..self.n {
            if (0..self.k).all(|j| !self.orientation.get(i, j)) {
                out.push(i);
            }
        }
        for j in 0..self.k {
            if (0..self.n).all(|i| self.orientation.get(i, j)) {
                out.push(self.n + j);
            }
        }
        out
    }
}

/// Decides acyclicity by Kahn's topological sort on the 2-colored digraph,
/// independently of the forbidden-pattern criterion.
pub fn orientation_is_acyclic(o: &OrientedBipartite) -> bool {
    let total = o.n + o.k;
    let mut indegree = vec![0usize; total];
    for i in 0..o.n {
        for j in 0..o.k {
            if o.orientation.get(i, j) {
                indegree[i] += 1; // v_j -> u_i
            } else {
                indegree[o.n + j] += 1; // u_i -> v_j
            }
        }
    }
    let mut queue: Vec<usize> = (0..total).filter(|&v| indegree[v] == 0).collect();
    let mut processed = 0;
    while let Some(v) = queue.pop() {
        processed += 1;
        if v < o.n {
            for j in 0..o.k {
                if !o.orientation.get(v, j) {
                    indegree[o.n + j] -= 1;
                    if indegree[o.n + j] == 0 {
                        queue.push(o.n + j);
                    }
                }
            }
        } else {
            let j = v - o.n;
            for i in 0..o.n {
                if o.orientation.get(i, j) {
                    indegree[i] -= 1;
                    if indegree[i] == 0 {
                        queue.push(i);
                    }
                }
            }
        }
    }
    processed == total
}

/// Which orientation family to count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrientationVariant {
    /// All acyclic orientations of `K_{n,k}`: counts `B(n,k)`.
    All,
    /// Acyclic orientations of `K_{n,k+1}` whose only sink is the extra
    /// right vertex: counts `C(n,k)`.
    UniqueSink,
    /// Acyclic orientations of `K_{n+1,k+1}` with the extra left vertex the
    /// only source and the extra right vertex the only sink: counts `D(n,k)`.
    UniqueSourceSink,
}

/// Exhaustively counts the orientation family; the graph actually
/// enumerated is the augmented one for the primed variants.
pub fn count_orientations(
    n: usize,
    k: usize,
    variant: OrientationVariant,
) -> Result<Int, BijectionError> {
    let (rows, cols) = match variant {
        OrientationVariant::All => (n, k),
        OrientationVariant::UniqueSink => (n, k + 1),
        OrientationVariant::UniqueSourceSink => (n + 1, k + 1),
    };
    let cells = rows * cols;
    if cells > 20 {
        return Err(BijectionError::TooLarge { cells });
    }
    let mut count = Int::zero();
    for code in 0..1u64 << cells {
        let bit_rows: Vec<u64> = (0..rows)
            .map(|i| (0..cols).fold(0u64, |acc, j| acc | (code >> (i * cols + j) & 1) << j))
            .collect();
        let o = OrientedBipartite::new(rows, cols, BinaryMatrix::from_bit_rows(bit_rows, cols))
            .expect("shape matches by construction");
        if !orientation_is_acyclic(&o) {
            continue;
        }
        let ok = match variant {
            OrientationVariant::All => true,
            OrientationVariant::UniqueSink => o.sinks() == vec![rows + cols - 1],
            OrientationVariant::UniqueSourceSink => {
                o.sinks() == vec![rows + cols - 1] && o.sources() == vec![rows - 1]
            }
        };
        if ok {
            count += Int::one();
        }
    }
    Ok(count)
}

fn require_callan(p: &TaggedPermutation) -> Result<(), BijectionError> {
    if is_callan(p) {
        Ok(())
    } else {
        Err(BijectionError::NotCallan)
    }
}

fn position_of(p: &TaggedPermutation, target: Symbol) -> usize {
    p.symbols()
        .iter()
        .position(|&s| s == target)
        .expect("symbol guaranteed by alphabet validation")
}

/// End index (inclusive) of the maximal same-sided run starting at `start`.
fn run_end(symbols: &[Symbol], start: usize) -> usize {
    let side = symbols[start].is_left();
    let mut end = start;
    while end + 1 < symbols.len() && symbols[end + 1].is_left() == side {
        end += 1;
    }
    end
}

/// Start index of the maximal same-sided run ending at `end` (inclusive).
fn run_start(symbols: &[Symbol], end: usize) -> usize {
    let side = symbols[end].is_left();
    let mut start = end;
    while start > 0 && symbols[start - 1].is_left() == side {
        start -= 1;
    }
    start
}

/// The largest-left-value exchange: maps the Callan class ending in a left
/// value over the `(n,k)` alphabet onto the class ending in a right value
/// over `(n-1,k+1)`.
///
/// `Left(n)` sits at the end of its left block.  If it is the final symbol
/// it is rewritten to `Right(k+1)`; otherwise it is rewritten to
/// `Right(k+1)` and the right block that followed it moves to the end.
pub fn callan_phi(p: &TaggedPermutation) -> Result<TaggedPermutation, BijectionError> {
    require_callan(p)?;
    if p.n() == 0 {
        return Err(BijectionError::EmptyAlphabet("left"));
    }
    if !p.last().is_some_and(|s| s.is_left()) {
        return Err(BijectionError::MustEndLeft);
    }
    let (n, k) = (p.n(), p.k());
    let syms = p.symbols();
    let pos = position_of(p, Symbol::Left(n));
    let mut out: Vec<Symbol> = Vec::with_capacity(syms.len());
    if pos == syms.len() - 1 {
        out.extend_from_slice(&syms[..pos]);
        out.push(Symbol::Right(k + 1));
    } else {
        let r_end = run_end(syms, pos + 1);
        debug_assert!(!syms[pos + 1].is_left(), "a left block ends at its maximum");
        out.extend_from_slice(&syms[..pos]);
        out.push(Symbol::Right(k + 1));
        out.extend_from_slice(&syms[r_end + 1..]);
        out.extend_from_slice(&syms[pos + 1..=r_end]);
    }
    let image = TaggedPermutation::new(n - 1, k + 1, out).expect("alphabet bookkeeping");
    debug_assert!(is_callan(&image));
    Ok(image)
}

/// Inverse of [`callan_phi`]: maps the class ending in a right value over
/// `(n,k)` onto the class ending in a left value over `(n+1,k-1)`, keyed on
/// the largest right value.
pub fn callan_psi(p: &TaggedPermutation) -> Result<TaggedPermutation, BijectionError> {
    require_callan(p)?;
    if p.k() == 0 {
        return Err(BijectionError::EmptyAlphabet("right"));
    }
    if !p.last().is_some_and(|s| !s.is_left()) {
        return Err(BijectionError::MustEndRight);
    }
    let (n, k) = (p.n(), p.k());
    let syms = p.symbols();
    let pos = position_of(p, Symbol::Right(k));
    let mut out: Vec<Symbol> = Vec::with_capacity(syms.len());
    if pos == syms.len() - 1 {
        out.extend_from_slice(&syms[..pos]);
        out.push(Symbol::Left(n + 1));
    } else {
        // Right(k) ends its own block; the permutation also ends with a
        // right block, necessarily a different one, which moves back after
        // the reinstated left maximum.
        let tail_start = run_start(syms, syms.len() - 1);
        debug_assert!(pos < tail_start);
        out.extend_from_slice(&syms[..pos]);
        out.push(Symbol::Left(n + 1));
        out.extend_from_slice(&syms[tail_start..]);
        out.extend_from_slice(&syms[pos + 1..tail_start]);
    }
    let image = TaggedPermutation::new(n + 1, k - 1, out).expect("alphabet bookkeeping");
    debug_assert!(is_callan(&image));
    Ok(image)
}

/// Exchanges the roles of left and right values: an involution carrying the
/// `(n,k)` alphabet to `(k,n)` and the ends-left class onto the ends-right
/// class.  Blocks are preserved, so validity is preserved.
pub fn callan_swap(p: &TaggedPermutation) -> Result<TaggedPermutation, BijectionError> {
    require_callan(p)?;
    let swapped: Vec<Symbol> = p
        .symbols()
        .iter()
        .map(|&s| match s {
            Symbol::Left(v) => Symbol::Right(v),
            Symbol::Right(v) => Symbol::Left(v),
        })
        .collect();
    let image = TaggedPermutation::new(p.k(), p.n(), swapped).expect("alphabet swap");
    debug_assert!(is_callan(&image));
    Ok(image)
}

/// Where [`callan_ll_split`] sent its input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitImage {
    /// In the starts-left/ends-right class over the `(n-1, k+1)` alphabet.
    LeftRight(TaggedPermutation),
    /// In the starts-right/ends-left class over the `(n-1, k)` alphabet.
    RightLeft(TaggedPermutation),
}

/// Splits the starts-left/ends-left class: if `Left(n)` is the leading
/// (necessarily singleton) block it is erased, landing in the `(r,l)` class
/// one left value down; otherwise the phi move applies, landing in the
/// `(l,r)` class.  [`callan_ll_unsplit`] restores the input exactly.
pub fn callan_ll_split(p: &TaggedPermutation) -> Result<SplitImage, BijectionError> {
    require_callan(p)?;
    if p.n() == 0 {
        return Err(BijectionError::EmptyAlphabet("left"));
    }
    let ends = p.first().is_some_and(|s| s.is_left()) && p.last().is_some_and(|s| s.is_left());
    if !ends {
        return Err(BijectionError::MustStartAndEndLeft);
    }
    let (n, k) = (p.n(), p.k());
    let syms = p.symbols();
    let pos = position_of(p, Symbol::Left(n));
    if pos == 0 {
        // Left(n) can only be followed by a right value, so the leading
        // block is the singleton {n}: erase it.
        let image = TaggedPermutation::new(n - 1, k, syms[1..].to_vec()).expect("erase maximum");
        debug_assert!(is_callan(&image));
        return Ok(SplitImage::RightLeft(image));
    }
    let mut out: Vec<Symbol> = Vec::with_capacity(syms.len());
    if pos == syms.len() - 1 {
        out.extend_from_slice(&syms[..pos]);
        out.push(Symbol::Right(k + 1));
    } else {
        let r_end = run_end(syms, pos + 1);
        out.extend_from_slice(&syms[..pos]);
        out.push(Symbol::Right(k + 1));
        out.extend_from_slice(&syms[r_end + 1..]);
        out.extend_from_slice(&syms[pos + 1..=r_end]);
    }
    let image = TaggedPermutation::new(n - 1, k + 1, out).expect("alphabet bookkeeping");
    debug_assert!(is_callan(&image));
    Ok(SplitImage::LeftRight(image))
}

/// Inverse of [`callan_ll_split`].
pub fn callan_ll_unsplit(image: &SplitImage) -> Result<TaggedPermutation, BijectionError> {
    match image {
        SplitImage::RightLeft(q) => {
            require_callan(q)?;
            let mut syms = Vec::with_capacity(q.symbols().len() + 1);
            syms.push(Symbol::Left(q.n() + 1));
            syms.extend_from_slice(q.symbols());
            let restored = TaggedPermutation::new(q.n() + 1, q.k(), syms).expect("prepend maximum");
            debug_assert!(is_callan(&restored));
            Ok(restored)
        }
        SplitImage::LeftRight(q) => callan_psi(q),
    }
}

/// The zig-zag reading of a column-covered tableau filling (a matrix
/// avoiding the tableau pattern set with no all-zero column) as a
/// permutation of `[n+k]` whose strict excedance set is exactly `[k]`.
///
/// Convention (fixed here once and pinned by the exhaustive bijectivity
/// tests): columns are labeled `1..=k` left to right; rows are labeled
/// `k+1..=k+n` bottom to top.  The path for label `i` enters at the top of
/// column `i` heading south (for `i <= k`) or at the left of the row
/// labeled `i` heading east, turns at every 1 it meets, and exits either
/// off the bottom of column `c` (value `c`) or off the right of a row
/// (that row's label).
pub fn zigzag_to_permutation(m: &BinaryMatrix) -> Result<Permutation, BijectionError> {
    let p = PatternSet::tableau_p();
    if p.patterns().iter().any(|pat| contains_pattern(m, pat)) {
        return Err(BijectionError::NotTableau);
    }
    let (n, k) = (m.n_rows(), m.n_cols());
    let covered = (0..k).all(|j| (0..n).any(|i| m.get(i, j)));
    if !covered {
        return Err(BijectionError::NotTableau);
    }
    let row_label = |row: usize| k + (n - row);
    let mut images = Vec::with_capacity(n + k);
    for label in 1..=n + k {
        let (mut south, mut row, mut col) = if label <= k {
            (true, 0usize, label - 1)
        } else {
            (false, n - (label - k), 0usize)
        };
        let value = loop {
            if row == n {
                break col + 1; // fell off the bottom of column col
            }
            if col == k {
                break row_label(row); // ran off the right of row `row`
            }
            if m.get(row, col) {
                south = !south;
            }
            if south {
                row += 1;
            } else {
                col += 1;
            }
        };
        images.push(value);
    }
    Permutation::from_one_line(images).map_err(|_| BijectionError::NotTableau)
}

/// Outcome of one exhaustive bijection suite: how many objects were pushed
/// through the map(s) and a description of every failure found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, msg: String) {
        // keep reports bounded; one failure already fails the suite
        if self.failures.len() < 32 {
            self.failures.push(msg);
        }
    }
}

/// All suites at their standard exhaustive sizes.
pub fn check_all() -> Vec<SuiteReport> {
    vec![
        check_phi_psi(7),
        check_swap(7),
        check_ll_split(7),
        check_zigzag(3, 3),
        check_orientation_coding(12),
    ]
}

fn callan_class(n: usize, k: usize, b: crate::perms::BoundaryClass) -> Vec<TaggedPermutation> {
    crate::perms::enumerate_callan(n, k)
        .into_iter()
        .filter(|p| b.matches(p))
        .collect()
}

/// Round trips and exact image equality for the largest-left-value
/// exchange, over every alphabet with `n + k <= max_total`, `n >= 1`.
pub fn check_phi_psi(max_total: usize) -> SuiteReport {
    use crate::perms::{BoundaryClass, EndRule};
    use std::collections::HashSet;
    let mut report = SuiteReport {
        name: "phi_psi",
        cases: 0,
        failures: Vec::new(),
    };
    let ends_left = BoundaryClass::new(EndRule::Any, EndRule::Left);
    let ends_right = BoundaryClass::new(EndRule::Any, EndRule::Right);
    for n in 1..=max_total {
        for k in 0..=max_total - n {
            let domain = callan_class(n, k, ends_left);
            let codomain: HashSet<TaggedPermutation> =
                callan_class(n - 1, k + 1, ends_right).into_iter().collect();
            let mut images = HashSet::new();
            for p in &domain {
                report.cases += 1;
                match callan_phi(p) {
                    Ok(img) => {
                        if !codomain.contains(&img) {
                            report.fail(format!("phi({p}) = {img} lands outside the codomain"));
                        }
                        if callan_psi(&img).ok().as_ref() != Some(p) {
                            report.fail(format!("psi(phi({p})) != identity"));
                        }
                        images.insert(img);
                    }
                    Err(e) => report.fail(format!("phi({p}) failed: {e}")),
                }
            }
            if images != codomain {
                report.fail(format!("phi not onto at ({n},{k})"));
            }
        }
    }
    report
}

/// Involution check for the side swap plus the class identity it induces.
pub fn check_swap(max_total: usize) -> SuiteReport {
    use crate::perms::{is_callan, BoundaryClass, EndRule};
    let mut report = SuiteReport {
        name: "swap",
        cases: 0,
        failures: Vec::new(),
    };
    for n in 0..=max_total {
        for k in 0..=max_total - n {
            for p in crate::perms::enumerate_callan(n, k) {
                report.cases += 1;
                match callan_swap(&p).and_then(|q| {
                    if !is_callan(&q) {
                        return Err(BijectionError::NotCallan);
                    }
                    callan_swap(&q)
                }) {
                    Ok(back) if back == p => {}
                    Ok(_) => report.fail(format!("swap(swap({p})) != {p}")),
                    Err(e) => report.fail(format!("swap round trip on {p} failed: {e}")),
                }
            }
            // swap maps ends-left onto ends-right of the mirrored alphabet
            let lhs = callan_class(n, k, BoundaryClass::new(EndRule::Any, EndRule::Left)).len();
            let rhs = callan_class(k, n, BoundaryClass::new(EndRule::Any, EndRule::Right)).len();
            if lhs != rhs {
                report.fail(format!(
                    "|C_{n}^{k}(*,l)| = {lhs} != {rhs} = |C_{k}^{n}(*,r)|"
                ));
            }
        }
    }
    report
}

/// Disjoint exhaustive cover and round trips for the (l,l) split.
pub fn check_ll_split(max_total: usize) -> SuiteReport {
    use crate::perms::{BoundaryClass, EndRule};
    use std::collections::HashSet;
    let mut report = SuiteReport {
        name: "ll_split",
        cases: 0,
        failures: Vec::new(),
    };
    for n in 1..=max_total {
        for k in 0..=max_total - n {
            let domain = callan_class(n, k, BoundaryClass::new(EndRule::Left, EndRule::Left));
            let mut to_lr = HashSet::new();
            let mut to_rl = HashSet::new();
            for p in &domain {
                report.cases += 1;
                match callan_ll_split(p) {
                    Ok(img) => {
                        if callan_ll_unsplit(&img).ok().as_ref() != Some(p) {
                            report.fail(format!("unsplit(split({p})) != identity"));
                        }
                        let fresh = match img {
                            SplitImage::LeftRight(q) => to_lr.insert(q),
                            SplitImage::RightLeft(q) => to_rl.insert(q),
                        };
                        if !fresh {
                            report.fail(format!("split collision at {p}"));
                        }
                    }
                    Err(e) => report.fail(format!("split({p}) failed: {e}")),
                }
            }
            let lr_target: HashSet<TaggedPermutation> = callan_class(
                n - 1,
                k + 1,
                BoundaryClass::new(EndRule::Left, EndRule::Right),
            )
            .into_iter()
            .collect();
            let rl_target: HashSet<TaggedPermutation> =
                callan_class(n - 1, k, BoundaryClass::new(EndRule::Right, EndRule::Left))
                    .into_iter()
                    .collect();
            if to_lr != lr_target || to_rl != rl_target {
                report.fail(format!(
                    "split images do not cover the targets at ({n},{k})"
                ));
            }
        }
    }
    report
}

/// Injectivity and exact image of the zig-zag reading over all matrices of
/// shape up to `max_n x max_k`.
pub fn check_zigzag(max_n: usize, max_k: usize) -> SuiteReport {
    use crate::perms::{enumerate_excedance_class, ExcedanceVariant};
    use std::collections::HashSet;
    let mut report = SuiteReport {
        name: "zigzag",
        cases: 0,
        failures: Vec::new(),
    };
    for n in 0..=max_n {
        for k in 0..=max_k {
            let mut images = HashSet::new();
            let mut domain = 0u64;
            for code in 0..1u64 << (n * k) {
                let rows: Vec<u64> = (0..n)
                    .map(|i| (0..k).fold(0u64, |acc, j| acc | (code >> (i * k + j) & 1) << j))
                    .collect();
                let m = BinaryMatrix::from_bit_rows(rows, k);
                match zigzag_to_permutation(&m) {
                    Ok(p) => {
                        report.cases += 1;
                        domain += 1;
                        if p.excedances() != (1..=k).collect::<Vec<_>>() {
                            report.fail(format!(
                                "zigzag({:?}) = {p} has excedance set != [k]",
                                m.row_strings()
                            ));
                        }
                        if !images.insert(p) {
                            report.fail(format!("zigzag collision at {:?}", m.row_strings()));
                        }
                    }
                    Err(BijectionError::NotTableau) => {}
                    Err(e) => report.fail(format!("unexpected error {e}")),
                }
            }
            let class = enumerate_excedance_class(n, k, ExcedanceVariant::EStar)
                .expect("class fits the budget");
            if domain != class.len() as u64 || images != class.into_iter().collect::<HashSet<_>>() {
                report.fail(format!("zigzag image mismatch at ({n},{k})"));
            }
        }
    }
    report
}

/// Equivalence of acyclicity and lonesum coding over every orientation of
/// `K_{n,k}` with `n * k <= max_cells`.
pub fn check_orientation_coding(max_cells: usize) -> SuiteReport {
    use crate::matrices::is_lonesum_reconstruction;
    let mut report = SuiteReport {
        name: "orientation_coding",
        cases: 0,
        failures: Vec::new(),
    };
    for n in 0..=max_cells {
        for k in 0..=max_cells {
            if n * k > max_cells {
                continue;
            }
            for code in 0..1u64 << (n * k) {
                let rows: Vec<u64> = (0..n)
                    .map(|i| (0..k).fold(0u64, |acc, j| acc | (code >> (i * k + j) & 1) << j))
                    .collect();
                let m = BinaryMatrix::from_bit_rows(rows, k);
                let o = OrientedBipartite::new(n, k, m.clone()).expect("shape");
                report.cases += 1;
                if orientation_is_acyclic(&o) != is_lonesum_reconstruction(&m) {
                    report.fail(format!(
                        "acyclicity and lonesum coding disagree at {:?}",
                        m.row_strings()
                    ));
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::exact::int;
    use crate::matrices::{count_avoiding, is_lonesum_reconstruction, Restriction};
    use crate::perms::{
        count_excedance_class, enumerate_callan, enumerate_excedance_class, BoundaryClass, EndRule,
        ExcedanceVariant,
    };
    use crate::sequences::{value, SequenceId};

    fn oriented(n: usize, k: usize, rows: &[&[u8]]) -> OrientedBipartite {
        OrientedBipartite::new(n, k, BinaryMatrix::from_rows(rows)).unwrap()
    }

    #[test]
    fn acyclicity_examples() {
        assert!(orientation_is_acyclic(
            &OrientedBipartite::new(2, 3, BinaryMatrix::zero(2, 3)).unwrap()
        ));
        assert!(!orientation_is_acyclic(&oriented(
            2,
            2,
            &[&[1, 0], &[0, 1]]
        )));
        assert!(orientation_is_acyclic(&oriented(2, 2, &[&[1, 1], &[1, 0]])));
    }

    #[test]
    fn acyclic_orientations_code_exactly_the_lonesum_matrices() {
        for n in 0..=6usize {
            for k in 0..=6usize {
                if n * k > 12 {
                    continue;
                }
                for code in 0..1u64 << (n * k) {
                    let rows: Vec<u64> = (0..n)
                        .map(|i| (0..k).fold(0u64, |acc, j| acc | (code >> (i * k + j) & 1) << j))
                        .collect();
                    let m = BinaryMatrix::from_bit_rows(rows, k);
                    let o = OrientedBipartite::new(n, k, m.clone()).unwrap();
                    assert_eq!(
                        orientation_is_acyclic(&o),
                        is_lonesum_reconstruction(&m),
                        "{:?}",
                        m.row_strings()
                    );
                }
            }
        }
    }

    #[test]
    fn orientation_count_examples() {
        assert_eq!(
            count_orientations(1, 1, OrientationVariant::All).unwrap(),
            int(2)
        );
        assert_eq!(
            count_orientations(2, 2, OrientationVariant::UniqueSink).unwrap(),
            int(7)
        );
        assert_eq!(
            count_orientations(2, 2, OrientationVariant::UniqueSourceSink).unwrap(),
            int(5)
        );
    }

    #[test]
    fn orientation_grid_matches_sequences() {
        for n in 0..=3usize {
            for k in 0..=3usize {
                assert_eq!(
                    count_orientations(n, k, OrientationVariant::All).unwrap(),
                    value(SequenceId::B, n, k),
                    "all({n},{k})"
                );
                assert_eq!(
                    count_orientations(n, k, OrientationVariant::UniqueSink).unwrap(),
                    value(SequenceId::C, n, k),
                    "sink({n},{k})"
                );
                assert_eq!(
                    count_orientations(n, k, OrientationVariant::UniqueSourceSink).unwrap(),
                    value(SequenceId::D, n, k),
                    "source+sink({n},{k})"
                );
            }
        }
    }

    fn tagged(n: usize, k: usize, syms: &[Symbol]) -> TaggedPermutation {
        TaggedPermutation::new(n, k, syms.to_vec()).unwrap()
    }

    #[test]
    fn phi_examples() {
        use Symbol::{Left as L, Right as R};
        let p = tagged(2, 1, &[R(1), L(1), L(2)]);
        assert_eq!(callan_phi(&p).unwrap(), tagged(1, 2, &[R(1), L(1), R(2)]));
        let p = tagged(2, 1, &[L(2), R(1), L(1)]);
        assert_eq!(callan_phi(&p).unwrap(), tagged(1, 2, &[R(2), L(1), R(1)]));
        assert_eq!(
            callan_phi(&tagged(1, 0, &[L(1)])).unwrap(),
            tagged(0, 1, &[R(1)])
        );
    }

    fn class_members(n: usize, k: usize, b: BoundaryClass) -> Vec<TaggedPermutation> {
        enumerate_callan(n, k)
            .into_iter()
            .filter(|p| b.matches(p))
            .collect()
    }

    #[test]
    fn phi_psi_are_mutually_inverse_bijections() {
        let ends_left = BoundaryClass::new(EndRule::Any, EndRule::Left);
        let ends_right = BoundaryClass::new(EndRule::Any, EndRule::Right);
        for n in 1..=4usize {
            for k in 0..=4usize {
                if n + k > 6 {
                    continue;
                }
                let domain = class_members(n, k, ends_left);
                let codomain: HashSet<TaggedPermutation> = class_members(n - 1, k + 1, ends_right)
                    .into_iter()
                    .collect();
                let mut images = HashSet::new();
                for p in &domain {
                    let img = callan_phi(p).unwrap();
                    assert!(codomain.contains(&img), "phi({p}) = {img} not in codomain");
                    assert_eq!(&callan_psi(&img).unwrap(), p, "psi . phi != id at {p}");
                    images.insert(img);
                }
                assert_eq!(images.len(), domain.len());
                assert_eq!(images, codomain, "phi not onto at ({n},{k})");
                for q in &codomain {
                    assert_eq!(&callan_phi(&callan_psi(q).unwrap()).unwrap(), q);
                }
            }
        }
    }

    #[test]
    fn swap_examples_and_involution() {
        use Symbol::{Left as L, Right as R};
        let p = tagged(1, 1, &[L(1), R(1)]);
        assert_eq!(callan_swap(&p).unwrap(), tagged(1, 1, &[R(1), L(1)]));
        for n in 0..=3usize {
            for k in 0..=3usize {
                if n + k > 6 {
                    continue;
                }
                for p in enumerate_callan(n, k) {
                    let back = callan_swap(&callan_swap(&p).unwrap()).unwrap();
                    assert_eq!(back, p);
                }
            }
        }
        // |swap(C_2^2(*,l))| = C(2,2) = 7, landing in C_2^2(*,r)
        let ends_left = BoundaryClass::new(EndRule::Any, EndRule::Left);
        let images: HashSet<TaggedPermutation> = class_members(2, 2, ends_left)
            .iter()
            .map(|p| callan_swap(p).unwrap())
            .collect();
        assert_eq!(images.len(), 7);
        assert!(images.iter().all(|q| !q.last().unwrap().is_left()));
    }

    #[test]
    fn swap_then_psi_realizes_the_c_symmetry() {
        // C(n,k) = C(k+1,n-1) at the level of sets
        let ends_left = BoundaryClass::new(EndRule::Any, EndRule::Left);
        for n in 1..=4usize {
            for k in 0..=3usize {
                if n + k > 6 {
                    continue;
                }
                let images: HashSet<TaggedPermutation> = class_members(n, k, ends_left)
                    .iter()
                    .map(|p| callan_psi(&callan_swap(p).unwrap()).unwrap())
                    .collect();
                let target: HashSet<TaggedPermutation> =
                    class_members(k + 1, n - 1, ends_left).into_iter().collect();
                assert_eq!(images, target, "({n},{k})");
            }
        }
    }

    #[test]
    fn ll_split_examples() {
        use Symbol::{Left as L, Right as R};
        let p = tagged(2, 1, &[L(1), R(1), L(2)]);
        assert_eq!(
            callan_ll_split(&p).unwrap(),
            SplitImage::LeftRight(tagged(1, 2, &[L(1), R(1), R(2)]))
        );
        let p = tagged(2, 1, &[L(2), R(1), L(1)]);
        assert_eq!(
            callan_ll_split(&p).unwrap(),
            SplitImage::RightLeft(tagged(1, 1, &[R(1), L(1)]))
        );
    }

    #[test]
    fn ll_split_is_a_disjoint_exhaustive_bijection() {
        for n in 1..=4usize {
            for k in 0..=4usize {
                if n + k > 6 {
                    continue;
                }
                let domain = class_members(n, k, BoundaryClass::new(EndRule::Left, EndRule::Left));
                let mut to_lr = HashSet::new();
                let mut to_rl = HashSet::new();
                for p in &domain {
                    let img = callan_ll_split(p).unwrap();
                    assert_eq!(&callan_ll_unsplit(&img).unwrap(), p, "round trip at {p}");
                    match img {
                        SplitImage::LeftRight(q) => {
                            assert!(to_lr.insert(q), "collision in (l,r) branch");
                        }
                        SplitImage::RightLeft(q) => {
                            assert!(to_rl.insert(q), "collision in (r,l) branch");
                        }
                    }
                }
                let lr_target: HashSet<TaggedPermutation> = class_members(
                    n - 1,
                    k + 1,
                    BoundaryClass::new(EndRule::Left, EndRule::Right),
                )
                .into_iter()
                .collect();
                let rl_target: HashSet<TaggedPermutation> =
                    class_members(n - 1, k, BoundaryClass::new(EndRule::Right, EndRule::Left))
                        .into_iter()
                        .collect();
                assert_eq!(to_lr, lr_target, "(l,r) image at ({n},{k})");
                assert_eq!(to_rl, rl_target, "(r,l) image at ({n},{k})");
            }
        }
    }

    #[test]
    fn zigzag_examples() {
        let m = BinaryMatrix::from_rows(&[&[1]]);
        let p = zigzag_to_permutation(&m).unwrap();
        assert_eq!(p.one_line(), &[2, 1]);

        // non-tableau inputs are rejected
        let hinge = BinaryMatrix::from_rows(&[&[1, 1], &[1, 0]]);
        assert_eq!(
            zigzag_to_permutation(&hinge),
            Err(BijectionError::NotTableau)
        );
        let uncovered = BinaryMatrix::zero(2, 2);
        assert_eq!(
            zigzag_to_permutation(&uncovered),
            Err(BijectionError::NotTableau)
        );
    }

    #[test]
    fn packaged_suites_pass_at_reduced_sizes() {
        for suite in [
            check_phi_psi(5),
            check_swap(5),
            check_ll_split(5),
            check_zigzag(2, 2),
            check_orientation_coding(6),
        ] {
            assert!(suite.passed(), "{}: {:?}", suite.name, suite.failures);
            assert!(suite.cases > 0, "{} ran no cases", suite.name);
        }
    }

    #[test]
    fn zigzag_is_a_bijection_onto_the_excedance_class() {
        for n in 0..=3usize {
            for k in 0..=3usize {
                let mut images = HashSet::new();
                let mut domain_size = 0u64;
                for code in 0..1u64 << (n * k) {
                    let rows: Vec<u64> = (0..n)
                        .map(|i| (0..k).fold(0u64, |acc, j| acc | (code >> (i * k + j) & 1) << j))
                        .collect();
                    let m = BinaryMatrix::from_bit_rows(rows, k);
                    match zigzag_to_permutation(&m) {
                        Ok(p) => {
                            domain_size += 1;
                            assert_eq!(
                                p.excedances(),
                                (1..=k).collect::<Vec<_>>(),
                                "E({p}) != [k] for {:?}",
                                m.row_strings()
                            );
                            assert!(images.insert(p), "zig-zag not injective at ({n},{k})");
                        }
                        Err(BijectionError::NotTableau) => {}
                        Err(other) => panic!("unexpected error {other:?}"),
                    }
                }
                let class = enumerate_excedance_class(n, k, ExcedanceVariant::EStar).unwrap();
                assert_eq!(domain_size, class.len() as u64, "cardinality at ({n},{k})");
                assert_eq!(images, class.into_iter().collect::<HashSet<_>>());
                // and the shared cardinality is the counted class size
                assert_eq!(
                    count_avoiding(n, k, &PatternSet::tableau_p(), Restriction::ColsNonzero)
                        .unwrap(),
                    count_excedance_class(n, k, ExcedanceVariant::EStar).unwrap()
                );
            }
        }
    }
}
