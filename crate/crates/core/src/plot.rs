//! Static SVG plots of bound curves and their lower envelope.

use std::fmt::Write;

use crate::exponent::bound::BoundRecord;
use crate::exponent::envelope::Envelope;
use crate::rational::{to_exact_string, to_f64};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN: f64 = 60.0;
const Y_CAP: f64 = 12.0;
const COLORS: [&str; 8] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

fn fmt_num(x: f64) -> String {
    format!("{x:.2}")
}

/// One polyline per record sampled on `grid` points of the envelope's
/// interval, the envelope drawn on top, and each breakpoint labelled with
/// its exact value. Values above a fixed cap are clipped.
pub fn envelope_svg(records: &[BoundRecord], env: &Envelope, grid: usize) -> String {
    let grid = grid.max(2);
    let x0 = to_f64(&env.interval.lo);
    let x1 = to_f64(&env.interval.hi);
    let xs: Vec<f64> = (0..grid)
        .map(|i| x0 + (x1 - x0) * (i as f64 + 0.5) / grid as f64)
        .collect();
    let env_pts: Vec<(f64, f64)> = xs
        .iter()
        .filter_map(|&x| {
            let seg = env
                .segments
                .iter()
                .find(|s| to_f64(&s.lo) <= x && x <= to_f64(&s.hi))?;
            Some((x, seg.expr.approx(x)))
        })
        .collect();
    let y_max = env_pts.iter().map(|p| p.1).fold(0.0f64, f64::max);
    let y_max = (1.25 * y_max).clamp(1.0, Y_CAP);
    let px = |x: f64| MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN);
    let py = |y: f64| HEIGHT - MARGIN - y.clamp(0.0, y_max) / y_max * (HEIGHT - 2.0 * MARGIN);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="monospace" font-size="11">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let (l, r, t, b) = (MARGIN, WIDTH - MARGIN, MARGIN, HEIGHT - MARGIN);
    let _ = writeln!(
        s,
        r#"<path d="M{l} {t} L{l} {b} L{r} {b}" stroke="black" fill="none"/>"#
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">eta in {}</text>"#,
        WIDTH / 2.0,
        HEIGHT - 15.0,
        env.interval
    );
    let _ = writeln!(
        s,
        r#"<text x="15" y="{}" transform="rotate(-90 15 {})" text-anchor="middle">B(eta)</text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0
    );
    for k in 0..=4 {
        let y = y_max * k as f64 / 4.0;
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#,
            fmt_num(l - 5.0),
            fmt_num(py(y) + 4.0),
            fmt_num(y)
        );
    }

    for (i, rec) in records.iter().enumerate() {
        let pts: Vec<String> = xs
            .iter()
            .filter(|&&x| {
                let lo = to_f64(&rec.validity.lo);
                let hi = to_f64(&rec.validity.hi);
                x > lo && x < hi
            })
            .map(|&x| format!("{},{}", fmt_num(px(x)), fmt_num(py(rec.expr.approx(x)))))
            .collect();
        if pts.is_empty() {
            continue;
        }
        let color = COLORS[i % COLORS.len()];
        let _ = writeln!(
            s,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"><title>{}</title></polyline>"#,
            pts.join(" "),
            rec.name
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" fill="{color}">{}</text>"#,
            fmt_num(r - 150.0),
            fmt_num(t + 14.0 * i as f64),
            rec.name
        );
    }

    let env_line: Vec<String> = env_pts
        .iter()
        .map(|&(x, y)| format!("{},{}", fmt_num(px(x)), fmt_num(py(y))))
        .collect();
    let _ = writeln!(
        s,
        r#"<polyline fill="none" stroke="black" stroke-width="3" stroke-dasharray="6 3" points="{}"><title>envelope</title></polyline>"#,
        env_line.join(" ")
    );
    for bp in env.breakpoints() {
        let x = px(to_f64(&bp));
        let _ = writeln!(
            s,
            r#"<line x1="{0}" y1="{t}" x2="{0}" y2="{b}" stroke="gray" stroke-dasharray="2 2"/>"#,
            fmt_num(x)
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
            fmt_num(x),
            fmt_num(b + 14.0),
            to_exact_string(&bp)
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent::bound::EtaInterval;
    use crate::exponent::envelope::envelope;
    use crate::exponent::registry::{records_for, BoundId};

    #[test]
    fn deterministic_with_exact_labels() {
        let recs = records_for(&[BoundId::MaxFormL2, BoundId::MaxFormL3]);
        let env = envelope(&recs, &EtaInterval::full()).unwrap();
        let a = envelope_svg(&recs, &env, 200);
        let b = envelope_svg(&recs, &env, 200);
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert!(a.contains(">1/24<"));
        assert_eq!(a.matches("<polyline").count(), 3);
    }
}
