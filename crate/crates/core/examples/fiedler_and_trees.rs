// Algebraic connectivity and spanning trees of two K5s joined by a bridge.

use num_bigint::BigInt;
use spectral_glue::gluing::glue_bridge;
use spectral_glue::spectral::{fiedler_complete_bridge_same, fiedler_value, spanning_tree_count};
use spectral_glue::{BridgeSpec, OrientedGraph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let k5 = OrientedGraph::complete(5)?;
    let g = glue_bridge(&k5, &k5, &BridgeSpec::new(vec![(0, 0)]))?.graph;

    let f = fiedler_value(&g)?;
    println!("Fiedler value {f:.12}, closed form {:.12}", fiedler_complete_bridge_same(5));
    assert!((f - fiedler_complete_bridge_same(5)).abs() < 1e-9);

    // a bridge lies on every spanning tree, so the counts multiply
    let t = spanning_tree_count(&g)?;
    println!("spanning trees {t}");
    assert_eq!(t, BigInt::from(125 * 125));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("fiedler_and_trees");
}
