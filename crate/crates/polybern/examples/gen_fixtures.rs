//! Regenerates the bundled OEIS fixtures from the closed formulas.
//!
//! The prefixes of all three files are pinned against independently
//! published values by the test suite, so a regeneration that drifted would
//! fail `cargo test` immediately.

use std::fs;
use std::path::PathBuf;

use polybern::diagonal::diagonal_sum;
use polybern::oeis::poly_bernoulli_antidiagonals;
use polybern::sequences::SequenceId;

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    fs::create_dir_all(&dir)?;

    let mut a099594 = String::from(
        "# A099594: poly-Bernoulli array B(n,k) read by antidiagonals, linear index from 1.\n",
    );
    for (i, v) in poly_bernoulli_antidiagonals(231).iter().enumerate() {
        a099594.push_str(&format!("{} {}\n", i + 1, v));
    }
    fs::write(dir.join("A099594.txt"), a099594)?;

    let mut a098830 =
        String::from("# A098830: diagonal sums of the poly-Bernoulli array, index from 0.\n");
    for n in 0..=24usize {
        a098830.push_str(&format!("{} {}\n", n, diagonal_sum(SequenceId::B, n)));
    }
    fs::write(dir.join("A098830.txt"), a098830)?;

    let mut a136127 =
        String::from("# A136127: diagonal sums of the C array (n >= 1), index from 1.\n");
    for n in 1..=24usize {
        a136127.push_str(&format!("{} {}\n", n, diagonal_sum(SequenceId::C, n)));
    }
    fs::write(dir.join("A136127.txt"), a136127)?;

    println!("fixtures written to {}", dir.display());
    Ok(())
}
