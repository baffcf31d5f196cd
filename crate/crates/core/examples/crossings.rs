//! Exact crossing points between pairs of bounds.
//!
//! ```bash
//! cargo run --example crossings
//! ```

use zero_density::exponent::{
    crossover, crossover_exprs, default_width, montgomery_pieces, records_for, BoundId, Crossover,
    EtaInterval, Root,
};
use zero_density::rational::{int, rat, to_f64};

fn show(c: &Crossover) -> String {
    match c {
        Crossover::Identical => "identical".into(),
        Crossover::Roots(r) if r.is_empty() => "none".into(),
        Crossover::Roots(r) => r
            .iter()
            .map(|x| match x {
                Root::Exact(q) => q.to_string(),
                Root::Isolated { .. } => format!("~{:.15} (isolated)", to_f64(&x.representative())),
            })
            .collect::<Vec<_>>()
            .join(", "),
    }
}

fn main() -> zero_density::Result<()> {
    let pairs = [
        (BoundId::MaxFormL2, BoundId::MaxFormL3),
        (BoundId::MaxFormL1, BoundId::MaxFormL2),
        (BoundId::MaxFormL1, BoundId::Trivial),
        (BoundId::Carlson, BoundId::MaxFormL2),
        (BoundId::Ingham, BoundId::Huxley),
        (BoundId::HalaszTuran, BoundId::MaxFormL3),
    ];
    for (a, b) in pairs {
        let ra = &records_for(&[a])[0];
        let rb = &records_for(&[b])[0];
        let c = crossover(ra, rb, &EtaInterval::full(), &default_width())?;
        println!("{:<12} vs {:<12} {}", a.as_str(), b.as_str(), show(&c));
    }

    let [lo, hi] = montgomery_pieces();
    let c = crossover_exprs(
        &lo.expr,
        &hi.expr,
        &EtaInterval::open(int(0), rat(1, 2)),
        &default_width(),
    )?;
    println!("{:<12} vs {:<12} {}", lo.name, hi.name, show(&c));
    Ok(())
}
