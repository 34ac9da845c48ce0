//! Counts of graphs and connected graphs by order, with the number of
//! distinct adjacency eigenvalues per class.

use lambda_cdp::enumerate::{all_graphs, connected_graphs};
use lambda_cdp::spectral::{Spectrum, Tolerances, UniversalParams};

fn main() -> lambda_cdp::Result<()> {
    let tol = Tolerances::default();
    println!("n  graphs  connected  mean_distinct_eigenvalues");
    for n in 1..=6 {
        let connected = connected_graphs(n);
        let mut distinct = 0;
        for g in &connected {
            distinct += Spectrum::new(g, &UniversalParams::ADJACENCY, &tol)?.clusters.len();
        }
        println!(
            "{n}  {:>6}  {:>9}  {:.3}",
            all_graphs(n).len(),
            connected.len(),
            distinct as f64 / connected.len() as f64
        );
    }
    Ok(())
}
