//! The self-verification suite: every gluing identity, closed form and
//! numeric invariant the crate relies on, run on built-in and seeded
//! random instances. Each check reports pass/fail with a short detail line.

use std::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Pow, ToPrimitive};
use rand::Rng;

use crate::charpoly::{charpoly, minor_charpoly};
use crate::closed_forms::{
    complete_bridge_glue_charpoly, complete_interface_glue_charpoly, cycle_charpoly_eval,
    cycle_minor_charpoly_eval,
};
use crate::error::Result;
use crate::gluing::{canonical_interface_layout, glue_bridge, glue_interface, BridgeSpec, InterfaceSpec};
use crate::graph::{euler_characteristic, flip_orientation, OrientedGraph};
use crate::laplacian::{even_laplacian, odd_laplacian};
use crate::matrix_gluing::{
    even_laplacian_bridge_glued, even_laplacian_interface_glued, odd_laplacian_bridge_glued,
    odd_laplacian_interface_glued, odd_laplacian_vertex_interface_glued,
};
use crate::poly::IntPoly;
use crate::quantum::{evolve, laplacian_eigenbasis, propagator, propagator_series, EvolutionParams, WaveFunction};
use crate::random::{
    random_bridge_instance, random_edge_addition, random_flips, random_graph, random_interface_instance,
    random_wave, rng,
};
use crate::spectral::{
    even_spectrum, fiedler_bounds_complete_bridge, fiedler_complete_bridge_same, fiedler_value,
    isospectral_check, odd_spectrum, spanning_tree_count, spanning_tree_count_cofactor,
};
use crate::spectral_gluing::{
    add_edge_charpoly, bridge_charpoly, euler_ratio, multi_bridge_charpoly_with, vertex_interface_charpoly,
    Execution,
};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// Random instances per exact gluing check.
pub const GLUING_INSTANCES: usize = 200;
pub const EULER_INSTANCES: usize = 500;
pub const ISOSPECTRAL_INSTANCES: usize = 200;

pub const FIEDLER_TOL: f64 = 1e-9;
pub const ISOSPECTRAL_TOL: f64 = 1e-8;
pub const CYCLE_REL_TOL: f64 = 1e-8;
pub const UNITARITY_TOL: f64 = 1e-10;
pub const SERIES_TOL: f64 = 1e-8;
pub const SERIES_TERMS: usize = 40;
pub const PHASE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{mark} [{}] {}: {}", self.id, self.title, self.detail)
    }
}

/// Tally of an instance sweep: instances seen and the first few failures.
struct Tally {
    total: usize,
    failures: Vec<String>,
    failed: usize,
}

impl Tally {
    fn new() -> Self {
        Tally { total: 0, failures: Vec::new(), failed: 0 }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < 3 {
                self.failures.push(what());
            }
        }
    }

    fn error(&mut self, e: crate::Error) {
        self.record(false, || format!("error: {e}"));
    }

    fn outcome(self, id: &'static str, title: &'static str, summary: &str) -> CheckOutcome {
        let detail = if self.failed == 0 {
            format!("{}/{} {summary}", self.total, self.total)
        } else {
            format!(
                "{} of {} instances failed; first: {}",
                self.failed,
                self.total,
                self.failures.join("; ")
            )
        };
        CheckOutcome { id, title, passed: self.failed == 0 && self.total > 0, detail }
    }
}

fn sweep(tally: &mut Tally, r: Result<bool>, what: impl FnOnce() -> String) {
    match r {
        Ok(ok) => tally.record(ok, what),
        Err(e) => tally.error(e),
    }
}

pub fn vertex_interface_formula(seed: u64) -> CheckOutcome {
    let mut r = rng(seed ^ 0x1a);
    let mut t = Tally::new();
    for _ in 0..GLUING_INSTANCES {
        let inst = random_interface_instance(&mut r, 1, 6, 0.0, 0.5);
        let res = (|| {
            let (l1, l2) = (even_laplacian(&inst.g1), even_laplacian(&inst.g2));
            let (v1, v2) = (inst.iface.vertices_1[0], inst.iface.vertices_2[0]);
            let formula = vertex_interface_charpoly(
                &charpoly(&l1)?,
                &minor_charpoly(&l1, v1)?,
                &charpoly(&l2)?,
                &minor_charpoly(&l2, v2)?,
            );
            let direct = charpoly(&even_laplacian(&glue_interface(&inst.g1, &inst.g2, &inst.iface)?.graph))?;
            Ok(formula == direct)
        })();
        sweep(&mut t, res, || format!("{:?}", inst));
    }
    t.outcome("1a", "single-vertex interface charpoly formula", "exact matches")
}

pub fn edge_addition_formula(seed: u64) -> CheckOutcome {
    let mut r = rng(seed ^ 0x1b);
    let mut t = Tally::new();
    while t.total < GLUING_INSTANCES {
        let n = r.gen_range(2..=9);
        let Some((g, v1, v2)) = random_edge_addition(&mut r, n, 0.5) else {
            continue;
        };
        let res = (|| {
            let formula = add_edge_charpoly(&even_laplacian(&g), v1, v2)?;
            let direct = charpoly(&even_laplacian(&g.with_edge((v1, v2))?))?;
            Ok(formula == direct)
        })();
        sweep(&mut t, res, || format!("{g:?} + ({v1}, {v2})"));
    }
    t.outcome("1b", "edge-addition charpoly formula", "exact matches")
}

pub fn single_bridge_formula(seed: u64) -> CheckOutcome {
    let mut r = rng(seed ^ 0x1c);
    let mut t = Tally::new();
    for _ in 0..GLUING_INSTANCES {
        let inst = random_bridge_instance(&mut r, 7, 1, 0.5);
        let res = (|| {
            let (a, b) = inst.bridges.pairs[0];
            let (l1, l2) = (even_laplacian(&inst.g1), even_laplacian(&inst.g2));
            let formula = bridge_charpoly(
                &charpoly(&l1)?,
                &minor_charpoly(&l1, a)?,
                &charpoly(&l2)?,
                &minor_charpoly(&l2, b)?,
            );
            let direct = charpoly(&even_laplacian(&glue_bridge(&inst.g1, &inst.g2, &inst.bridges)?.graph))?;
            Ok(formula == direct)
        })();
        sweep(&mut t, res, || format!("{:?}", inst));
    }
    t.outcome("1c", "single-bridge charpoly formula", "exact matches")
}

pub fn multi_bridge_algorithm(seed: u64) -> CheckOutcome {
    let mut r = rng(seed ^ 0x1d);
    let mut t = Tally::new();
    for _ in 0..GLUING_INSTANCES {
        let k = r.gen_range(1..=4);
        let inst = random_bridge_instance(&mut r, 7, k, 0.5);
        let res = (|| {
            let formula = multi_bridge_charpoly_with(&inst.g1, &inst.g2, &inst.bridges, Execution::Parallel)?;
            let direct = charpoly(&even_laplacian(&glue_bridge(&inst.g1, &inst.g2, &inst.bridges)?.graph))?;
            Ok(formula == direct)
        })();
        sweep(&mut t, res, || format!("{:?}", inst));
    }
    t.outcome("1d", "k-bridge charpoly algorithm (k ≤ 4)", "exact matches")
}

pub fn interface_matrix_gluing(seed: u64) -> CheckOutcome {
    let mut r = rng(seed ^ 0x2a);
    let mut t = Tally::new();
    for _ in 0..GLUING_INSTANCES {
        let q = r.gen_range(0..=4);
        let inst = random_interface_instance(&mut r, q, 4, 0.5, 0.5);
        let res = (|| {
            let c = canonical_interface_layout(&inst.g1, &inst.g2, &inst.iface)?;
            let direct = glue_interface(&inst.g1, &inst.g2, &inst.iface)?.graph;
            let even = even_laplacian_interface_glued(&even_laplacian(&c.g1), &even_laplacian(&c.g2), c.q())?;
            let odd = odd_laplacian_interface_glued(&inst.g1, &inst.g2, &inst.iface)?;
            Ok(even == even_laplacian(&direct) && odd == odd_laplacian(&direct))
        })();
        sweep(&mut t, res, || format!("{:?}", inst));
    }
    t.outcome("2a", "even and odd Laplacians of interface gluings", "entrywise matches")
}

pub fn vertex_interface_block_form(seed: u64) -> CheckOutcome {
    let mut r = rng(seed ^ 0x2b);
    let mut t = Tally::new();
    for _ in 0..GLUING_INSTANCES {
        let q = r.gen_range(0..=4);
        let inst = random_interface_instance(&mut r, q, 4, 0.0, 0.5);
        let res = (|| {
            let direct = glue_interface(&inst.g1, &inst.g2, &inst.iface)?.graph;
            let blocks = odd_laplacian_vertex_interface_glued(&inst.g1, &inst.g2, &inst.iface)?;
            Ok(blocks == odd_laplacian(&direct))
        })();
        sweep(&mut t, res, || format!("{:?}", inst));
    }
    t.outcome("2b", "odd Laplacian block form for vertex-only interfaces", "entrywise matches")
}

pub fn bridge_matrix_gluing(seed: u64) -> CheckOutcome {
    let mut r = rng(seed ^ 0x2c);
    let mut t = Tally::new();
    for _ in 0..GLUING_INSTANCES {
        let k = r.gen_range(1..=4);
        let inst = random_bridge_instance(&mut r, 7, k, 0.5);
        let res = (|| {
            let direct = glue_bridge(&inst.g1, &inst.g2, &inst.bridges)?.graph;
            let even = even_laplacian_bridge_glued(&even_laplacian(&inst.g1), &even_laplacian(&inst.g2), &inst.bridges)?;
            let odd = odd_laplacian_bridge_glued(&inst.g1, &inst.g2, &inst.bridges)?;
            Ok(even == even_laplacian(&direct) && odd == odd_laplacian(&direct))
        })();
        sweep(&mut t, res, || format!("{:?}", inst));
    }
    t.outcome("2c", "even and odd Laplacians of bridge gluings", "entrywise matches")
}

fn complete_pairs() -> impl Iterator<Item = (usize, usize)> {
    (2..=6).flat_map(|m| (2..=6).map(move |n| (m, n)))
}

fn complete_glued(m: usize, n: usize) -> Result<(OrientedGraph, OrientedGraph)> {
    let km = OrientedGraph::complete(m)?;
    let kn = OrientedGraph::complete(n)?;
    let at_vertex = glue_interface(&km, &kn, &InterfaceSpec::vertices(vec![m - 1], vec![0]))?.graph;
    let bridged = glue_bridge(&km, &kn, &BridgeSpec::new(vec![(m - 1, 0)]))?.graph;
    Ok((at_vertex, bridged))
}

pub fn complete_closed_forms() -> CheckOutcome {
    let mut t = Tally::new();
    for (m, n) in complete_pairs() {
        let res = (|| {
            let (at_vertex, bridged) = complete_glued(m, n)?;
            Ok(charpoly(&even_laplacian(&at_vertex))? == complete_interface_glue_charpoly(m, n)?
                && charpoly(&even_laplacian(&bridged))? == complete_bridge_glue_charpoly(m, n)?)
        })();
        sweep(&mut t, res, || format!("m={m}, n={n}"));
    }
    t.outcome("3", "complete-graph gluing closed forms, 2 ≤ m,n ≤ 6", "exact matches")
}

pub fn spanning_trees() -> CheckOutcome {
    let mut t = Tally::new();
    for (m, n) in complete_pairs() {
        let res = (|| {
            let want = BigInt::from(m).pow(m as u32 - 2) * BigInt::from(n).pow(n as u32 - 2);
            let (at_vertex, bridged) = complete_glued(m, n)?;
            let mut ok = true;
            for g in [&at_vertex, &bridged] {
                ok &= spanning_tree_count(g)? == want;
                ok &= spanning_tree_count_cofactor(g, 0)? == want;
            }
            Ok(ok)
        })();
        sweep(&mut t, res, || format!("m={m}, n={n}"));
    }
    for n in 1..=10 {
        let res = (|| {
            let p = OrientedGraph::path(n)?;
            let mut ok = spanning_tree_count(&p)? == BigInt::from(1)
                && spanning_tree_count_cofactor(&p, n - 1)? == BigInt::from(1);
            if n >= 3 {
                let c = OrientedGraph::cycle(n)?;
                ok &= spanning_tree_count(&c)? == BigInt::from(n)
                    && spanning_tree_count_cofactor(&c, 0)? == BigInt::from(n);
            }
            Ok(ok)
        })();
        sweep(&mut t, res, || format!("path/cycle n={n}"));
    }
    t.outcome("4", "spanning-tree counts and cofactor oracle", "exact matches")
}

pub fn fiedler_vertex_gluing() -> CheckOutcome {
    let mut t = Tally::new();
    for (m, n) in complete_pairs() {
        let res = complete_glued(m, n).and_then(|(g, _)| fiedler_value(&g));
        match res {
            Ok(f) => t.record((f - 1.0).abs() <= FIEDLER_TOL, || format!("m={m}, n={n}: {f}")),
            Err(e) => t.error(e),
        }
    }
    t.outcome("5a", "Fiedler value 1 for K_m, K_n sharing a vertex", "within 1e-9")
}

pub fn fiedler_bridge_equal_sizes() -> CheckOutcome {
    let mut t = Tally::new();
    for n in 2..=6 {
        let res = complete_glued(n, n).and_then(|(_, g)| fiedler_value(&g));
        let want = fiedler_complete_bridge_same(n);
        match res {
            Ok(f) => t.record((f - want).abs() <= FIEDLER_TOL, || format!("n={n}: {f} vs {want}")),
            Err(e) => t.error(e),
        }
    }
    t.outcome("5b", "Fiedler value of two bridged K_n", "within 1e-9")
}

pub fn fiedler_bridge_bounds() -> CheckOutcome {
    let mut t = Tally::new();
    for (m, n) in complete_pairs() {
        let res = (|| {
            let f = fiedler_value(&complete_glued(m, n)?.1)?;
            let b = fiedler_bounds_complete_bridge(m, n)?;
            Ok((f, b))
        })();
        match res {
            Ok((f, b)) => t.record(b.contains(f, FIEDLER_TOL), || {
                format!("m={m}, n={n}: F={f:.6} outside [{:.6}, {:.6}]", b.lower, b.upper)
            }),
            Err(e) => t.error(e),
        }
    }
    t.outcome("5c", "Fiedler value of bridged K_m, K_n within the Laguerre bounds", "inside bounds")
}

pub fn euler_ratio_random(seed: u64) -> CheckOutcome {
    let mut r = rng(seed ^ 0x6a);
    let mut t = Tally::new();
    for _ in 0..EULER_INSTANCES {
        let n = r.gen_range(1..=9);
        let density = r.gen_range(0.1..0.9);
        let g = random_graph(&mut r, n, density);
        let res = euler_ratio(&g).map(|e| e.exponent == euler_characteristic(&g));
        sweep(&mut t, res, || format!("{g:?}"));
    }
    t.outcome("6a", "even/odd charpoly ratio is (-λ)^χ", "exact divisions")
}

pub fn euler_additivity(seed: u64) -> CheckOutcome {
    let mut r = rng(seed ^ 0x6b);
    let mut t = Tally::new();
    for _ in 0..GLUING_INSTANCES / 2 {
        let q = r.gen_range(0..=3);
        let inst = random_interface_instance(&mut r, q, 4, 0.5, 0.5);
        let res = (|| {
            let glued = glue_interface(&inst.g1, &inst.g2, &inst.iface)?.graph;
            let chi_i = inst.iface.n_vertices() as i64 - inst.iface.n_edges() as i64;
            Ok(euler_ratio(&glued)?.exponent
                == euler_ratio(&inst.g1)?.exponent + euler_ratio(&inst.g2)?.exponent - chi_i)
        })();
        sweep(&mut t, res, || format!("{:?}", inst));

        let k = r.gen_range(1..=4);
        let inst = random_bridge_instance(&mut r, 6, k, 0.5);
        let res = (|| {
            let glued = glue_bridge(&inst.g1, &inst.g2, &inst.bridges)?.graph;
            Ok(euler_ratio(&glued)?.exponent
                == euler_ratio(&inst.g1)?.exponent + euler_ratio(&inst.g2)?.exponent
                    - inst.bridges.euler_characteristic())
        })();
        sweep(&mut t, res, || format!("{:?}", inst));
    }
    t.outcome("6b", "ratio exponent additive under both gluings", "exact")
}

fn spectra_close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

pub fn even_odd_isospectral(seed: u64) -> CheckOutcome {
    let mut r = rng(seed ^ 0x7a);
    let mut t = Tally::new();
    while t.total < ISOSPECTRAL_INSTANCES {
        let n = r.gen_range(2..=9);
        let density = r.gen_range(0.2..0.9);
        let g = random_graph(&mut r, n, density);
        if g.n_edges() == 0 {
            continue;
        }
        let flips = random_flips(&mut r, g.n_edges());
        let res = (|| {
            let h = flip_orientation(&g, &flips)?;
            let tol = crate::eigen::DEFAULT_TOL;
            Ok(isospectral_check(&g, ISOSPECTRAL_TOL)?
                && isospectral_check(&h, ISOSPECTRAL_TOL)?
                && spectra_close(&even_spectrum(&g, tol)?.eigenvalues, &even_spectrum(&h, tol)?.eigenvalues, ISOSPECTRAL_TOL)
                && spectra_close(&odd_spectrum(&g, tol)?.eigenvalues, &odd_spectrum(&h, tol)?.eigenvalues, ISOSPECTRAL_TOL)
                && (fiedler_value(&g)? - fiedler_value(&h)?).abs() <= ISOSPECTRAL_TOL)
        })();
        sweep(&mut t, res, || format!("{g:?} flipping {flips:?}"));
    }
    t.outcome("7", "even/odd isospectrality and orientation invariance", "within 1e-8")
}

/// `p(x)` in exact rational arithmetic, rounded once to f64.
fn eval_exact(p: &IntPoly, x: f64) -> f64 {
    let x = Ratio::<BigInt>::from_float(x).expect("finite");
    p.coeffs()
        .iter()
        .rev()
        .fold(Ratio::from_integer(BigInt::from(0)), |acc, c| acc * &x + Ratio::from_integer(c.clone()))
        .to_f64()
        .unwrap_or(f64::NAN)
}

pub fn cycle_products(seed: u64) -> CheckOutcome {
    let mut r = rng(seed ^ 0x8a);
    let mut t = Tally::new();
    for n in 3..=8 {
        let res = (|| {
            let c = OrientedGraph::cycle(n)?;
            let l = even_laplacian(&c);
            Ok((charpoly(&l)?, minor_charpoly(&l, 0)?))
        })();
        let (p, pv) = match res {
            Ok(x) => x,
            Err(e) => {
                t.error(e);
                continue;
            }
        };
        for _ in 0..20 {
            let x: f64 = r.gen_range(-0.5..4.5);
            let rel = |a: f64, b: f64| (a - b).abs() <= CYCLE_REL_TOL * b.abs();
            let full = cycle_charpoly_eval(n, x).map(|v| (v, eval_exact(&p, x)));
            let minor = cycle_minor_charpoly_eval(n, x).map(|v| (v, eval_exact(&pv, x)));
            match (full, minor) {
                (Ok((a, b)), Ok((c, d))) => {
                    t.record(rel(a, b) && rel(c, d), || format!("n={n}, λ={x}: {a} vs {b}, {c} vs {d}"))
                }
                (Err(e), _) | (_, Err(e)) => t.error(e),
            }
        }
    }
    let detail = format!("relative {CYCLE_REL_TOL:e}");
    t.outcome("8", "cycle and truncated-cycle trigonometric products", &detail)
}

fn quantum_graphs(seed: u64) -> Vec<OrientedGraph> {
    let mut r = rng(seed);
    let mut gs: Vec<OrientedGraph> = (1..=8)
        .flat_map(|n| {
            let mut v = vec![OrientedGraph::complete(n).expect("n ≥ 1"), OrientedGraph::path(n).expect("n ≥ 1")];
            if n >= 3 {
                v.push(OrientedGraph::cycle(n).expect("n ≥ 3"));
            }
            v
        })
        .collect();
    for _ in 0..60 {
        let n = r.gen_range(1..=8);
        gs.push(random_graph(&mut r, n, 0.5));
    }
    gs
}

fn scales(r: &mut impl Rng) -> [f64; 4] {
    [2.0, -2.0, r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0)]
}

pub fn quantum_unitarity(seed: u64) -> CheckOutcome {
    let mut r = rng(seed ^ 0x9a);
    let mut t = Tally::new();
    for g in quantum_graphs(seed ^ 0x9b) {
        for s in scales(&mut r) {
            let p = EvolutionParams::new(1.0, s);
            let psi = random_wave(&mut r, g.n_vertices());
            let res = (|| {
                let k = propagator(&g, p)?;
                let out = evolve(&psi, &g, p)?;
                Ok(k.unitarity_defect() <= UNITARITY_TOL && (out.norm() - psi.norm()).abs() <= UNITARITY_TOL)
            })();
            sweep(&mut t, res, || format!("{g:?}, s={s}"));
        }
    }
    t.outcome("9a", "propagator unitarity and norm conservation", "within 1e-10")
}

pub fn quantum_series_oracle(seed: u64) -> CheckOutcome {
    let mut r = rng(seed ^ 0x9c);
    let mut t = Tally::new();
    for g in quantum_graphs(seed ^ 0x9b) {
        for s in scales(&mut r) {
            let p = EvolutionParams::new(1.0, s);
            let res = (|| {
                let diff = propagator(&g, p)?.max_diff(&propagator_series(&g, p, SERIES_TERMS)?);
                Ok(diff)
            })();
            match res {
                Ok(d) => t.record(d <= SERIES_TOL, || {
                    format!("{} vertices, {} edges, s={s:.3}: max diff {d:.2e}", g.n_vertices(), g.n_edges())
                }),
                Err(e) => t.error(e),
            }
        }
    }
    t.outcome("9b", "eigendecomposition propagator vs 40-term series", "within 1e-8")
}

pub fn quantum_eigenstate_phase(seed: u64) -> CheckOutcome {
    let mut r = rng(seed ^ 0x9d);
    let mut t = Tally::new();
    for g in quantum_graphs(seed ^ 0x9b) {
        let s = r.gen_range(-2.0..2.0);
        let p = EvolutionParams::new(1.0, s);
        let res = (|| {
            let eig = laplacian_eigenbasis(&g)?;
            let mut ok = true;
            for (l, v) in eig.values.iter().zip(&eig.vectors) {
                let psi = WaveFunction::from_real(v);
                let phase = num_complex::Complex64::from_polar(1.0, s * l);
                let want = WaveFunction::new(psi.amplitudes.iter().map(|a| a * phase).collect());
                ok &= evolve(&psi, &g, p)?.max_diff(&want) <= PHASE_TOL;
            }
            Ok(ok)
        })();
        sweep(&mut t, res, || format!("{g:?}, s={s}"));
    }
    t.outcome("9c", "eigenstates pick up the phase e^{isλ}", "within 1e-10")
}

pub fn parallel_determinism(seed: u64) -> CheckOutcome {
    let mut r = rng(seed ^ 0xa0);
    let mut t = Tally::new();
    for _ in 0..50 {
        let k = r.gen_range(1..=4);
        let inst = random_bridge_instance(&mut r, 7, k, 0.5);
        let res = (|| {
            let seq = multi_bridge_charpoly_with(&inst.g1, &inst.g2, &inst.bridges, Execution::Sequential)?;
            let par = multi_bridge_charpoly_with(&inst.g1, &inst.g2, &inst.bridges, Execution::Parallel)?;
            let again = multi_bridge_charpoly_with(&inst.g1, &inst.g2, &inst.bridges, Execution::Parallel)?;
            Ok(seq == par && par == again)
        })();
        sweep(&mut t, res, || format!("{:?}", inst));
    }
    t.outcome("10", "sequential and parallel bridge algorithm agree", "bit-identical")
}

/// Every check, in order.
pub fn run_all(seed: u64) -> Vec<CheckOutcome> {
    vec![
        vertex_interface_formula(seed),
        edge_addition_formula(seed),
        single_bridge_formula(seed),
        multi_bridge_algorithm(seed),
        interface_matrix_gluing(seed),
        vertex_interface_block_form(seed),
        bridge_matrix_gluing(seed),
        complete_closed_forms(),
        spanning_trees(),
        fiedler_vertex_gluing(),
        fiedler_bridge_equal_sizes(),
        fiedler_bridge_bounds(),
        euler_ratio_random(seed),
        euler_additivity(seed),
        even_odd_isospectral(seed),
        cycle_products(seed),
        quantum_unitarity(seed),
        quantum_series_oracle(seed),
        quantum_eigenstate_phase(seed),
        parallel_determinism(seed),
    ]
}
