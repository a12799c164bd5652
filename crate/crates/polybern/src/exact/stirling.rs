//! Memoized tables of Stirling numbers, binomial coefficients and
//! factorials.
//!
//! Every module in the crate hammers these tables, so the module-level
//! functions keep process-wide caches behind `RwLock`s and grow them
//! geometrically on demand.  A built [`StirlingTable`] itself is immutable
//! and can be shared freely across threads.

use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use super::Int;

/// Which triangle a [`StirlingTable`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StirlingKind {
    /// `S(n,m)`: partitions of an n-set into m nonempty blocks;
    /// `S(n,m) = m*S(n-1,m) + S(n-1,m-1)`.
    Second,
    /// Signed first kind `s(n,m)`: coefficients of the falling factorial,
    /// `s(n,m) = s(n-1,m-1) - (n-1)*s(n-1,m)`.
    FirstSigned,
}

/// Triangular table of Stirling numbers, immutable after construction.
#[derive(Clone, Debug)]
pub struct StirlingTable {
    kind: StirlingKind,
    rows: Vec<Vec<Int>>,
}

impl StirlingTable {
    pub fn new(kind: StirlingKind, max_n: usize) -> Self {
        let mut rows: Vec<Vec<Int>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![Int::one()]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            for m in 0..=n {
                let take_prev = |idx: usize| -> Int {
                    if idx < prev.len() {
                        prev[idx].clone()
                    } else {
                        Int::zero()
                    }
                };
                let v = match kind {
                    StirlingKind::Second => {
                        let a = if m > 0 { take_prev(m - 1) } else { Int::zero() };
                        a + Int::from(m) * take_prev(m)
                    }
                    StirlingKind::FirstSigned => {
                        let a = if m > 0 { take_prev(m - 1) } else { Int::zero() };
                        a - Int::from(n - 1) * take_prev(m)
                    }
                };
                row.push(v);
            }
            rows.push(row);
        }
        StirlingTable { kind, rows }
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Table entry; arguments outside the triangle give 0.
    ///
    /// Panics if `n` exceeds the tabulated range (the module-level accessors
    /// grow the shared tables instead).
    pub fn get(&self, n: usize, m: usize) -> Int {
        if m > n {
            return Int::zero();
        }
        self.rows[n][m].clone()
    }
}

fn grown(lock: &RwLock<StirlingTable>, kind: StirlingKind, n: usize, m: usize) -> Int {
    {
        let table = lock.read().unwrap();
        if n <= table.max_n() {
            return table.get(n, m);
        }
    }
    let mut table = lock.write().unwrap();
    if n > table.max_n() {
        *table = StirlingTable::new(kind, n.max(table.max_n() * 2));
    }
    table.get(n, m)
}

/// Stirling number of the second kind `S(n,m)`; 0 outside the triangle.
pub fn stirling2(n: usize, m: usize) -> Int {
    static TABLE: OnceLock<RwLock<StirlingTable>> = OnceLock::new();
    let lock = TABLE.get_or_init(|| RwLock::new(StirlingTable::new(StirlingKind::Second, 32)));
    grown(lock, StirlingKind::Second, n, m)
}

/// Signed Stirling number of the first kind `s(n,m)`; 0 outside the
/// triangle.  Satisfies `sum_m s(n,m) q^m = q(q-1)...(q-n+1)`.
pub fn stirling1_signed(n: usize, m: usize) -> Int {
    static TABLE: OnceLock<RwLock<StirlingTable>> = OnceLock::new();
    let lock = TABLE.get_or_init(|| RwLock::new(StirlingTable::new(StirlingKind::FirstSigned, 32)));
    grown(lock, StirlingKind::FirstSigned, n, m)
}

/// Binomial coefficient `n choose m`; 0 when `m > n`.
pub fn binomial(n: usize, m: usize) -> Int {
    static ROWS: OnceLock<RwLock<Vec<Vec<Int>>>> = OnceLock::new();
    let lock = ROWS.get_or_init(|| RwLock::new(vec![vec![Int::one()]]));
    if m > n {
        return Int::zero();
    }
    {
        let rows = lock.read().unwrap();
        if n < rows.len() {
            return rows[n][m].clone();
        }
    }
    let mut rows = lock.write().unwrap();
    let target = (n + 1).max(rows.len() * 2);
    while rows.len() < target {
        let prev = rows.last().unwrap();
        let len = prev.len();
        let mut row = Vec::with_capacity(len + 1);
        row.push(Int::one());
        for i in 1..len {
            row.push(&prev[i - 1] + &prev[i]);
        }
        row.push(Int::one());
        rows.push(row);
    }
    rows[n][m].clone()
}

/// `n!` with a shared cache.
pub fn factorial(n: usize) -> Int {
    static FACTS: OnceLock<RwLock<Vec<Int>>> = OnceLock::new();
    let lock = FACTS.get_or_init(|| RwLock::new(vec![Int::one()]));
    {
        let facts = lock.read().unwrap();
        if n < facts.len() {
            return facts[n].clone();
        }
    }
    let mut facts = lock.write().unwrap();
    let target = (n + 1).max(facts.len() * 2);
    while facts.len() < target {
        let next = facts.last().unwrap() * Int::from(facts.len());
        facts.push(next);
    }
    facts[n].clone()
}
