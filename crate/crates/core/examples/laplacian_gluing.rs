// Assemble the even and odd Laplacians of a glued graph from the pieces
// and compare with the Laplacians of the glued graph itself.

use spectral_glue::gluing::{canonical_interface_layout, glue_interface};
use spectral_glue::laplacian::{even_laplacian, odd_laplacian};
use spectral_glue::matrix_gluing::{even_laplacian_interface_glued, odd_laplacian_interface_glued};
use spectral_glue::{InterfaceSpec, OrientedGraph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // two triangles with a pendant vertex, glued along an edge
    let g1 = OrientedGraph::new(4, [(0, 1), (1, 2), (2, 0), (2, 3)])?;
    let g2 = OrientedGraph::new(4, [(3, 0), (0, 1), (1, 3), (1, 2)])?;
    let iface = InterfaceSpec::closed_over(&g1, &g2, vec![0, 1], vec![0, 1])?;

    let glued = glue_interface(&g1, &g2, &iface)?.graph;
    let c = canonical_interface_layout(&g1, &g2, &iface)?;
    let even = even_laplacian_interface_glued(&even_laplacian(&c.g1), &even_laplacian(&c.g2), c.q())?;
    let odd = odd_laplacian_interface_glued(&g1, &g2, &iface)?;

    println!("q = {}, r = {}", c.q(), c.r());
    println!("Δ⁺ =\n{}", spectral_glue::io::matrix_plain(&even));
    assert_eq!(even, even_laplacian(&glued));
    assert_eq!(odd, odd_laplacian(&glued));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("laplacian_gluing");
}
