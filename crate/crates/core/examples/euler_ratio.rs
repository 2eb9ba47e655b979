// The even and odd characteristic polynomials differ by (-λ)^χ.

use spectral_glue::graph::euler_characteristic;
use spectral_glue::spectral_gluing::euler_ratio;
use spectral_glue::OrientedGraph;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (name, g) in [
        ("P5", OrientedGraph::path(5)?),
        ("C5", OrientedGraph::cycle(5)?),
        ("K5", OrientedGraph::complete(5)?),
    ] {
        let r = euler_ratio(&g)?;
        assert_eq!(r.exponent, euler_characteristic(&g));
        println!("{name}: χ = {:>3}  p⁺ = {}  p⁻ = {}", r.exponent, r.even, r.odd);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("euler_ratio");
}
