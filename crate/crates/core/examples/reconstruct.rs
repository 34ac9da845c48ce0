//! Rebuilds CDPs of other eigenvalues from the divisor matrix of the 1-CDP.

use lambda_cdp::cdp::{check_equitable, compute_cdp, divisor_spectrum, reconstruct_cdp, Equitability};
use lambda_cdp::graph::cubic_12;
use lambda_cdp::spectral::{Spectrum, Tolerances, UniversalParams};

fn main() -> lambda_cdp::Result<()> {
    let g = cubic_12();
    let tol = Tolerances::default();
    let spectrum = Spectrum::new(&g, &UniversalParams::ADJACENCY, &tol)?;
    let cdp = compute_cdp(&g, &spectrum.core_set(spectrum.target(1.0)?)?)?;
    let Equitability::Equitable(b) = check_equitable(&spectrum.matrix, &cdp.blocks, tol.equitable)? else {
        return Err(lambda_cdp::Error::NotEquitable);
    };
    println!("1-CDP blocks: {:?}", cdp.block_sizes());
    println!("divisor matrix: {:?}", b.entries);
    for pair in divisor_spectrum(&b, &tol)? {
        let r = reconstruct_cdp(&cdp, &b, pair.value, &spectrum.eigen, &tol)?;
        println!("\nmu = {:.4}", r.mu);
        println!("  index layers: {:?}", r.index_layers);
        println!("  core subset:  {}", r.core_subset);
        println!("  m_U, m_B:     {:?}", r.multiplicities);
        match &r.full_cdp {
            Some(p) => {
                let blocks: Vec<String> = p.blocks.iter().map(ToString::to_string).collect();
                println!("  mu-CDP:       {}", blocks.join(" | "));
            }
            None => println!("  mu-CDP:       not determined (multiplicities differ)"),
        }
    }
    Ok(())
}
