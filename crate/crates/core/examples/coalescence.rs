//! Coalescing slim singular graphs at core vertices, including a pair where
//! the coalesced entropy drops below both inputs.

use lambda_cdp::entropy::LogBase;
use lambda_cdp::graph::{make_cycle, make_path, Graph};
use lambda_cdp::singular::coalescence_report;
use lambda_cdp::spectral::Tolerances;

fn show(label: &str, h1: &Graph, v1: usize, h2: &Graph, v2: usize) -> lambda_cdp::Result<()> {
    let r = coalescence_report(h1, v1, h2, v2, LogBase::E, &Tolerances::default())?;
    println!("{label}: n = {}", r.graph.order());
    println!("  eta   {} + {} - 1 -> {} ({})", r.h1.eta, r.h2.eta, r.result.eta, r.eta_formula_holds);
    println!(
        "  core  {} + {} - 1 -> {} ({})",
        r.h1.core_size, r.h2.core_size, r.result.core_size, r.core_formula_holds
    );
    println!("  I_0   {:.4}, {:.4} -> {:.4}", r.h1.i0, r.h2.i0, r.result.i0);
    println!("  slim {}, min bound {}", r.result_slim, r.min_bound_holds);
    Ok(())
}

fn main() -> lambda_cdp::Result<()> {
    let p3 = make_path(3)?;
    show("P3 . P3", &p3, 1, &p3, 1)?;
    let c4 = make_cycle(4)?;
    show("C4 . C4", &c4, 1, &c4, 1)?;
    // slim, 7 vertices, 0-core {2, 6}; the coalesced entropy falls below both inputs
    let h = Graph::new(
        7,
        [(1, 2), (1, 3), (1, 6), (2, 3), (2, 4), (2, 5), (2, 7), (3, 6), (4, 5), (4, 6), (5, 6), (6, 7)],
    )?;
    show("H . H", &h, 2, &h, 2)?;
    match coalescence_report(&p3, 2, &p3, 1, LogBase::E, &Tolerances::default()) {
        Err(e) => println!("P3 at its centre: {e}"),
        Ok(_) => unreachable!("the centre of P3 is core-forbidden"),
    }
    Ok(())
}
