//! Triangle algorithms over exact rationals: the Akiyama-Tanigawa rule, the
//! Chen variant, their Stirling-number closed forms, and the power-sequence
//! seeds that generate signed columns of `B`, `C`, `D`.
//!
//! Rules, on a row `a_0, a_1, ...`:
//!
//! * `at`: `a'_i = (i+1)(a_i - a_{i+1})`;
//! * `bt`: `b'_i = i*b_i - (i+1)*b_{i+1}`.
//!
//! Iterating from seed `1/(i+1)` produces the Bernoulli numbers, with
//! `B_1 = +1/2` under `at` and `B_1 = -1/2` under `bt`.

use num_traits::Zero;
use thiserror::Error;

use crate::exact::{factorial, stirling2, Int, Rat};
use crate::sequences::SequenceId;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TransformError {
    #[error("triangle step needs at least 2 entries, row has {len}")]
    RowTooShort { len: usize },
    #[error("seed too short: need {need} terms, got {got}")]
    SeedTooShort { need: usize, got: usize },
}

/// One row of a transform triangle; `generation` is the number of steps
/// applied since the seed row (which has generation 0).  Each step consumes
/// the right neighbor, so a row is one entry shorter than its predecessor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleRow {
    pub entries: Vec<Rat>,
    pub generation: usize,
}

impl TriangleRow {
    pub fn seed(entries: Vec<Rat>) -> Self {
        TriangleRow {
            entries,
            generation: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn leading(&self) -> &Rat {
        &self.entries[0]
    }
}

/// Akiyama-Tanigawa step: `a'_i = (i+1)(a_i - a_{i+1})`.
pub fn at_step(row: &TriangleRow) -> Result<TriangleRow, TransformError> {
    if row.len() < 2 {
        return Err(TransformError::RowTooShort { len: row.len() });
    }
    let entries = row
        .entries
        .windows(2)
        .enumerate()
        .map(|(i, w)| Rat::from_integer(Int::from(i as i64 + 1)) * (&w[0] - &w[1]))
        .collect();
    Ok(TriangleRow {
        entries,
        generation: row.generation + 1,
    })
}

/// Chen step: `b'_i = i*b_i - (i+1)*b_{i+1}`.
pub fn bt_step(row: &TriangleRow) -> Result<TriangleRow, TransformError> {
    if row.len() < 2 {
        return Err(TransformError::RowTooShort { len: row.len() });
    }
    let entries = row
        .entries
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            let i = i as i64;
            Rat::from_integer(Int::from(i)) * &w[0] - Rat::from_integer(Int::from(i + 1)) * &w[1]
        })
        .collect();
    Ok(TriangleRow {
        entries,
        generation: row.generation + 1,
    })
}

fn run(
    seed: &[Rat],
    n: usize,
    step: impl Fn(&TriangleRow) -> Result<TriangleRow, TransformError>,
) -> Result<Rat, TransformError> {
    if seed.len() < n + 1 {
        return Err(TransformError::SeedTooShort {
            need: n + 1,
            got: seed.len(),
        });
    }
    let mut row = TriangleRow::seed(seed[..=n].to_vec());
    for _ in 0..n {
        row = step(&row)?;
    }
    Ok(row.leading().clone())
}

/// Leading entry of the n-th Akiyama-Tanigawa row; consumes exactly the
/// first `n+1` seed terms.
pub fn at_run(seed: &[Rat], n: usize) -> Result<Rat, TransformError> {
    run(seed, n, at_step)
}

/// Leading entry of the n-th Chen row.
pub fn bt_run(seed: &[Rat], n: usize) -> Result<Rat, TransformError> {
    run(seed, n, bt_step)
}

/// Closed form of the Akiyama-Tanigawa output:
/// `a_{n,0} = sum_{i=0}^{n} (-1)^i i! S(n+1,i+1) a_{0,i}`.
pub fn at_closed(seed: &[Rat], n: usize) -> Result<Rat, TransformError> {
    if seed.len() < n + 1 {
        return Err(TransformError::SeedTooShort {
            need: n + 1,
            got: seed.len(),
        });
    }
    let mut acc = Rat::zero();
    for (i, a) in seed.iter().take(n + 1).enumerate() {
        let coef = Rat::from_integer(factorial(i) * stirling2(n + 1, i + 1));
        let term = coef * a;
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// Closed form of the Chen output,
/// `b_{n,0} = sum_{i=0}^{n} (-1)^i i! S(n,i) b_{0,i}`.
///
/// The alternating sign rides on the summation index `i`: iterating the
/// stepping rule by hand gives `b_{2,0} = -b_{0,1} + 2 b_{0,2}`, which pins
/// the sign down (a `(-1)^n` prefactor would flip it).  The stepping rule
/// is primary; this closed form is checked against it term by term.
pub fn bt_closed(seed: &[Rat], n: usize) -> Result<Rat, TransformError> {
    if seed.len() < n + 1 {
        return Err(TransformError::SeedTooShort {
            need: n + 1,
            got: seed.len(),
        });
    }
    let mut acc = Rat::zero();
    for (i, b) in seed.iter().take(n + 1).enumerate() {
        let coef = Rat::from_integer(factorial(i) * stirling2(n, i));
        let term = coef * b;
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// The Bernoulli seed `1/(i+1)`.
pub fn bernoulli_seed(len: usize) -> Vec<Rat> {
    (0..len)
        .map(|i| Rat::new(Int::from(1), Int::from(i as i64 + 1)))
        .collect()
}

/// The seed `i^k` (with `0^0 = 1`).
pub fn power_seed(k: usize, len: usize) -> Vec<Rat> {
    (0..len).map(|i| Rat::from_integer(int_pow(i, k))).collect()
}

/// The seed `(i+1)^k`.
pub fn power_plus_seed(k: usize, len: usize) -> Vec<Rat> {
    (0..len)
        .map(|i| Rat::from_integer(int_pow(i + 1, k)))
        .collect()
}

fn int_pow(base: usize, exp: usize) -> Int {
    let mut acc = Int::from(1);
    for _ in 0..exp {
        acc *= Int::from(base as i64);
    }
    acc
}

/// Recovers a sequence value from the triangle transforms of power seeds:
///
/// * `B(n,k) = (-1)^n * bt(seed (i+1)^k, row n)`;
/// * `D(n,k) = (-1)^n * at(seed i^k, row n)`;
/// * `C(n,k) = (-1)^k * at(seed (i+1)^n, row k)` - the seed exponent and the
///   row index trade places for `C`, because the AT transform of
///   `{(i+1)^k}` produces the mirror column `(-1)^i C(k,i)`, not
///   `(-1)^i C(i,k)`.
pub fn pb_via_transforms(seq: SequenceId, n: usize, k: usize) -> Int {
    let signed = |v: Rat, parity: usize| if parity % 2 == 0 { v } else { -v };
    let value = match seq {
        SequenceId::B => signed(
            bt_run(&power_plus_seed(k, n + 1), n).expect("seed sized to order"),
            n,
        ),
        SequenceId::D => signed(
            at_run(&power_seed(k, n + 1), n).expect("seed sized to order"),
            n,
        ),
        SequenceId::C => signed(
            at_run(&power_plus_seed(n, k + 1), k).expect("seed sized to order"),
            k,
        ),
    };
    assert!(value.is_integer(), "transform output must be integral");
    value.to_integer()
}
