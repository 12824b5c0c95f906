//! Exact expanded-edge combinatorics: how many ordered k-tuples cover an
//! edge of size r, and the tensor weight each one carries.
//!
//! An edge of size r inside an order-k tensor occupies every k-tuple whose
//! distinct entries are exactly the edge (a "k-expanded edge"). The number
//! of such tuples is the surjection count r! * S2(k, r); each carries weight
//! r / count so that the edge contributes total mass r.
//!
//! ```bash
//! cargo run -p hypereigen --example expansion_weights
//! ```

use hypereigen::error::Result;
use hypereigen::expansion::{edge_expansion, surjection_count};

fn main() -> Result<()> {
    println!("surjection counts (ordered k-tuples covering an r-set):");
    println!("{:>4} {:>4} {:>24}", "r", "k", "count");
    for k in 1..=8usize {
        for r in 1..=k {
            let count = surjection_count(r, k)?;
            println!("{r:>4} {k:>4} {count:>24}");
        }
    }

    println!("\nper-edge expansion data at order k = 4:");
    println!(
        "{:>6} {:>12} {:>14} {:>20}",
        "size", "|S(e)|", "|S(e)_v|", "weight a(e)"
    );
    for size in 1..=4usize {
        let info = edge_expansion(size, 4)?;
        println!(
            "{size:>6} {:>12} {:>14} {:>20}",
            info.count_s,
            info.count_sv,
            format!("{} (= {:.6})", info.weight, info.weight_f64),
        );
        // The start-vertex classes partition S(e): |S(e)| = |e| * |S(e)_v|.
        assert_eq!(info.count_s, info.count_sv.clone() * size);
    }

    // Counts stay exact far beyond what fits in machine integers.
    let big = surjection_count(15, 25)?;
    println!("\nsurjection_count(15, 25) = {big}");
    println!("(exceeds u64::MAX = {}; counts use big integers)", u64::MAX);
    Ok(())
}
