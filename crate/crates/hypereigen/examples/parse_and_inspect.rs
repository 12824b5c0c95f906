//! Parse a hypergraph from the line-oriented text format and inspect its
//! structure: labels, degrees, rank vs tensor order, connectivity, and the
//! canonical serialization round trip.
//!
//! ```bash
//! cargo run -p hypereigen --example parse_and_inspect
//! ```

use hypereigen::error::Result;
use hypereigen::graph::Hypergraph;

fn main() -> Result<()> {
    // Labeled edges of mixed cardinality. `%k=3` pins the tensor order; it
    // would default to the largest edge size anyway, but being explicit keeps
    // the file self-describing.
    let text = "\
# a mixed-cardinality instance
%k=3
hub spoke1
hub spoke2
hub spoke1 spoke2
";
    let h = Hypergraph::parse(text)?;
    println!("parsed: n={} m={} order={} rank={}", h.n(), h.m(), h.order(), h.rank());
    println!("uniform: {} (edge sizes differ)", h.is_uniform());

    let degrees = h.degrees();
    for v in 0..h.n() {
        println!(
            "  vertex {v} ({}) has degree {} and neighborhood {:?}",
            h.label(v),
            degrees.degrees[v],
            h.neighborhood(v)
        );
    }
    println!("degree extremes: max={} min={} average={}", degrees.max, degrees.min, degrees.average);

    let connectivity = h.connectivity();
    println!(
        "connected: {} (components: {})",
        connectivity.is_connected(),
        connectivity.count
    );

    // Serialization always emits the %n / %k header so that vertex identity
    // and tensor order survive the round trip exactly.
    let canonical = h.to_text();
    println!("canonical form:\n{canonical}");
    let back = Hypergraph::parse(&canonical)?;
    assert_eq!(back.normalized(), h.normalized());
    println!("round trip preserves the instance");

    // Numeric vertex mode: %n fixes the vertex count up front, so isolated
    // vertices survive and labels are plain indices.
    let numeric = Hypergraph::parse("%n=5\n0 1\n1 2\n")?;
    println!(
        "numeric mode: n={} with {} isolated vertices, connected: {}",
        numeric.n(),
        numeric.n() - 3,
        numeric.is_connected()
    );
    Ok(())
}
