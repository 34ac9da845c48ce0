//! Nullity, slimness and minimal configurations across all small connected
//! graphs.

use lambda_cdp::entropy::LogBase;
use lambda_cdp::enumerate::connected_graphs;
use lambda_cdp::singular::{singular_report, slim_entropy_check};
use lambda_cdp::spectral::Tolerances;

fn main() -> lambda_cdp::Result<()> {
    let tol = Tolerances::default();
    println!("n,graphs,singular,slim,minimal_configurations,bipartite_mcs,slim_iff_min_entropy");
    for n in 1..=7 {
        let graphs = connected_graphs(n);
        let (mut singular, mut slim, mut mc, mut bmc, mut consistent) = (0, 0, 0, 0, 0);
        for g in &graphs {
            let r = singular_report(g, LogBase::E, &tol)?;
            if !r.is_singular {
                continue;
            }
            singular += 1;
            slim += usize::from(r.slim);
            mc += usize::from(r.minimal_configuration);
            bmc += usize::from(r.bipartite_mc);
            consistent += usize::from(slim_entropy_check(g, LogBase::E, &tol)?.consistent);
        }
        println!("{n},{},{singular},{slim},{mc},{bmc},{consistent}", graphs.len());
    }
    Ok(())
}
