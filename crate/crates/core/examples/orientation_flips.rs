// Reversing edges leaves Δ⁺ alone and conjugates Δ⁻ by a sign matrix, so
// both spectra are orientation independent.

use spectral_glue::graph::flip_orientation;
use spectral_glue::laplacian::{even_laplacian, flip_odd_laplacian, odd_laplacian};
use spectral_glue::spectral::odd_spectrum;
use spectral_glue::OrientedGraph;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = OrientedGraph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])?;
    let flipped = [1, 3, 4];
    let h = flip_orientation(&g, &flipped)?;

    assert_eq!(even_laplacian(&g), even_laplacian(&h));
    assert_eq!(flip_odd_laplacian(&odd_laplacian(&g), &flipped)?, odd_laplacian(&h));

    let (a, b) = (odd_spectrum(&g, 1e-12)?, odd_spectrum(&h, 1e-12)?);
    for (x, y) in a.eigenvalues.iter().zip(&b.eigenvalues) {
        assert!((x - y).abs() < 1e-10);
    }
    println!("odd spectrum {:?} (b1 = {})", a.eigenvalues, a.zero_count);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("orientation_flips");
}
