// Glue K4 and K5 at a single vertex and get the characteristic polynomial
// three ways: from the pieces, from the closed form, and directly.

use spectral_glue::charpoly::{charpoly, minor_charpoly};
use spectral_glue::closed_forms::complete_interface_glue_charpoly;
use spectral_glue::gluing::glue_interface;
use spectral_glue::laplacian::even_laplacian;
use spectral_glue::spectral_gluing::vertex_interface_charpoly;
use spectral_glue::{InterfaceSpec, OrientedGraph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (k4, k5) = (OrientedGraph::complete(4)?, OrientedGraph::complete(5)?);
    let (l4, l5) = (even_laplacian(&k4), even_laplacian(&k5));

    let from_pieces = vertex_interface_charpoly(
        &charpoly(&l4)?,
        &minor_charpoly(&l4, 0)?,
        &charpoly(&l5)?,
        &minor_charpoly(&l5, 0)?,
    );
    let glued = glue_interface(&k4, &k5, &InterfaceSpec::vertices(vec![0], vec![0]))?.graph;
    let direct = charpoly(&even_laplacian(&glued))?;
    let closed = complete_interface_glue_charpoly(4, 5)?;

    println!("K4 ∨ K5: {} vertices, {} edges", glued.n_vertices(), glued.n_edges());
    println!("p(λ) = {from_pieces}");
    assert_eq!(from_pieces, direct);
    assert_eq!(from_pieces, closed);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("glue_complete_graphs");
}
