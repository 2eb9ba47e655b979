// Join two cycles by three bridges. The charpoly is assembled one bridge
// at a time from the pieces, sequentially and on the rayon pool.

use spectral_glue::charpoly::charpoly;
use spectral_glue::gluing::glue_bridge;
use spectral_glue::laplacian::even_laplacian;
use spectral_glue::spectral_gluing::{multi_bridge_charpoly_with, Execution};
use spectral_glue::{BridgeSpec, OrientedGraph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let c5 = OrientedGraph::cycle(5)?;
    let c6 = OrientedGraph::cycle(6)?;
    let bridges = BridgeSpec::new(vec![(0, 0), (2, 3), (4, 5)]);

    let seq = multi_bridge_charpoly_with(&c5, &c6, &bridges, Execution::Sequential)?;
    let par = multi_bridge_charpoly_with(&c5, &c6, &bridges, Execution::Parallel)?;
    let glued = glue_bridge(&c5, &c6, &bridges)?;
    let direct = charpoly(&even_laplacian(&glued.graph))?;

    println!("bridge edges at {:?}", glued.bridge_edges);
    println!("p(λ) = {seq}");
    assert_eq!(seq, par);
    assert_eq!(seq, direct);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("bridge_algorithm");
}
