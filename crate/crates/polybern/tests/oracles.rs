//! Heavier cross-oracle runs that pin down indexing conventions: the full
//! banded-count grid `f(r,n,k)` for `r <= 2`, `n + k <= 8`, enumerated
//! directly over permutations of `[n+k+r]` and compared with the
//! alternating Stirling sum.

use polybern::perms::{count_band, BandSpec};
use polybern::sequences::{value, vesztergombi_f, SequenceId};

#[test]
fn f_window_full_grid_matches_formula() {
    for r in 0..=2usize {
        for n in 0..=8usize {
            for k in 0..=8 - n {
                let spec = BandSpec::f_window(r, n, k);
                assert_eq!(
                    count_band(&spec).unwrap(),
                    vesztergombi_f(r, n, k),
                    "f({r},{n},{k}) over {} symbols",
                    spec.degree()
                );
            }
        }
    }
}

#[test]
fn f_window_specializations() {
    for n in 0..=6usize {
        for k in 0..=6 - n.min(6) {
            assert_eq!(vesztergombi_f(0, n, k), value(SequenceId::D, n, k));
            assert_eq!(vesztergombi_f(1, n, k), value(SequenceId::C, n + 1, k));
            assert_eq!(vesztergombi_f(2, n, k), value(SequenceId::B, n + 1, k + 1));
        }
    }
}
