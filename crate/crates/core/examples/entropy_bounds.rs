//! Entropy range of a core distance partition as the core size varies.
//! Prints CSV suitable for plotting.
//!
//! ```text
//! cargo run --example entropy_bounds -- 20 2
//! ```

use lambda_cdp::entropy::LogBase;
use lambda_cdp::report::bounds_csv;

fn main() -> lambda_cdp::Result<()> {
    let mut args = std::env::args().skip(1);
    let n = args.next().and_then(|a| a.parse().ok()).unwrap_or(12);
    let base = args.next().and_then(|a| a.parse().ok()).unwrap_or(LogBase::E);
    print!("{}", bounds_csv(n, base)?);
    Ok(())
}
