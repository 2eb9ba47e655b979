// Exact Cheeger constants by exhaustive search over vertex subsets.

use num_bigint::BigInt;
use num_rational::Ratio;
use spectral_glue::spectral::cheeger_constant;
use spectral_glue::OrientedGraph;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (name, g) in [
        ("K6", OrientedGraph::complete(6)?),
        ("P7", OrientedGraph::path(7)?),
        ("C8", OrientedGraph::cycle(8)?),
    ] {
        println!("h({name}) = {}", cheeger_constant(&g)?);
    }
    let r = |a: i64, b: i64| Ratio::new(BigInt::from(a), BigInt::from(b));
    assert_eq!(cheeger_constant(&OrientedGraph::path(7)?)?, r(1, 3));
    assert_eq!(cheeger_constant(&OrientedGraph::cycle(8)?)?, r(2, 3));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("cheeger");
}
