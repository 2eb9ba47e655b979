// A particle starting on one end of an edge moves to the other after
// s = π/2 and the norm is conserved throughout.

use std::f64::consts::FRAC_PI_2;

use spectral_glue::quantum::{evolve, propagator, propagator_series, EvolutionParams, WaveFunction};
use spectral_glue::OrientedGraph;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p2 = OrientedGraph::path(2)?;
    let psi = WaveFunction::basis(2, 0)?;
    let out = evolve(&psi, &p2, EvolutionParams::new(1.0, FRAC_PI_2))?;
    println!("Ψ(π/2) = {:?}", out.amplitudes);
    assert!(out.max_diff(&WaveFunction::from_real(&[0.0, 1.0])) < 1e-12);

    let c6 = OrientedGraph::cycle(6)?;
    let p = EvolutionParams::new(0.5, 0.8);
    let k = propagator(&c6, p)?;
    println!("unitarity defect {:.1e}", k.unitarity_defect());
    assert!(k.unitarity_defect() < 1e-10);
    assert!(k.max_diff(&propagator_series(&c6, p, 40)?) < 1e-10);

    let spread = evolve(&WaveFunction::basis(6, 0)?, &c6, p)?;
    assert!((spread.norm() - 1.0).abs() < 1e-12);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("quantum_walk");
}
