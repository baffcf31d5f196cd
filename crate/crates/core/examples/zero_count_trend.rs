//! N(T) against (T/2 pi) log T: the ratio climbs slowly towards 1.
//!
//! ```bash
//! cargo run --release --example zero_count_trend
//! ```

use zero_density::numerics::check_asymptotic;

fn main() -> zero_density::Result<()> {
    let heights = [100.0, 300.0, 1000.0, 3000.0, 10000.0];
    for (t, ratio) in check_asymptotic(&heights)? {
        println!("T = {t:>7}: N(T) / ((T/2pi) log T) = {ratio:.6}");
    }
    Ok(())
}
