//! Full per-eigenvalue report for the bundled 12-vertex cubic graph.
//!
//! ```text
//! cargo run --example analyze_cubic
//! cargo run --example analyze_cubic -- path/to/graph.txt json
//! ```

use lambda_cdp::graph::cubic_12;
use lambda_cdp::report::{analyze, read_graph, AnalysisConfig, OutputFormat, Render};

fn main() -> lambda_cdp::Result<()> {
    let mut args = std::env::args().skip(1);
    let g = match args.next() {
        Some(path) => read_graph(path)?,
        None => cubic_12(),
    };
    let format = match args.next().as_deref() {
        Some("json") => OutputFormat::Json,
        _ => OutputFormat::Text,
    };
    let report = analyze(&g, &AnalysisConfig::default())?;
    print!("{}", report.render(format));
    Ok(())
}
