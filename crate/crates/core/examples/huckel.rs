//! Hückel orbital energies `alpha + beta * lambda` and their core sets for
//! a few conjugated hydrocarbon skeletons. With `beta < 0` the bonding
//! orbitals come first.

use lambda_cdp::graph::{make_cycle, make_path, Graph};
use lambda_cdp::report::{analyze, AnalysisConfig};
use lambda_cdp::spectral::UniversalParams;

fn main() -> lambda_cdp::Result<()> {
    let (alpha, beta) = (0.0, -1.0);
    let skeletons: [(&str, Graph); 4] = [
        ("allyl", make_path(3)?),
        ("butadiene", make_path(4)?),
        ("cyclobutadiene", make_cycle(4)?),
        ("benzene", make_cycle(6)?),
    ];
    for (name, g) in skeletons {
        let config = AnalysisConfig::custom(UniversalParams::huckel(alpha, beta)?, "huckel");
        let report = analyze(&g, &config)?;
        println!("{name}:");
        for c in &report.eigenvalues {
            println!(
                "  E = {:>7.4} x{}  core {}  CDP blocks {}  I = {:.4}",
                c.lambda,
                c.multiplicity,
                c.core,
                c.cdp_blocks.len(),
                c.entropy
            );
        }
    }
    Ok(())
}
