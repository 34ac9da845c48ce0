//! Automorphism orbits and how they sit inside each core distance partition.

use lambda_cdp::cdp::compute_cdp;
use lambda_cdp::graph::{cubic_12, make_cycle};
use lambda_cdp::spectral::{Spectrum, Tolerances, UniversalParams};
use lambda_cdp::symmetry::{automorphism_orbits, color_refinement, verify_cdp_orbit_refinement, DEFAULT_VERTEX_CAP};

fn main() -> lambda_cdp::Result<()> {
    let g = cubic_12();
    let op = automorphism_orbits(&g, DEFAULT_VERTEX_CAP)?;
    println!("colour refinement cells: {}", color_refinement(&g).len());
    println!("orbits ({} generators found):", op.generator_count());
    for o in &op.orbits {
        println!("  {o}");
    }

    let tol = Tolerances::default();
    let spectrum = Spectrum::new(&g, &UniversalParams::ADJACENCY, &tol)?;
    for cluster in &spectrum.clusters {
        let cdp = compute_cdp(&g, &spectrum.core_set(cluster)?)?;
        let check = verify_cdp_orbit_refinement(&cdp, &op);
        println!("lambda = {:>8.4}: {} blocks, orbits refine CDP: {}", cluster.value, cdp.blocks.len(), check.holds);
    }

    let c7 = make_cycle(7)?;
    println!("C7 orbits: {:?}", automorphism_orbits(&c7, DEFAULT_VERTEX_CAP)?.sizes());
    Ok(())
}
