//! Solving `f(η) = g(η)` for pairs of bound expressions.
//!
//! Two linear-fractional forms meet where a polynomial of degree at most two
//! vanishes; rational roots come back exact and irrational ones as isolating
//! intervals. Pairs involving a power law are solved by bisection on the
//! certified sign of `f - g`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exponent::bound::{BoundExpr, BoundRecord, EtaInterval, Value};
use crate::rational::{exact_sqrt, int, inv_pow2, midpoint, rat, root_enclosure, Rational};

/// Default isolation width for irrational roots: 10^-12.
pub fn default_width() -> Rational {
    Rational::new(BigInt::from(1), BigInt::from(10).pow(12))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Root {
    Exact(Rational),
    /// Exactly one root lies strictly inside `(lo, hi)`.
    Isolated {
        lo: Rational,
        hi: Rational,
    },
}

impl Root {
    /// A rational representative: the root itself, or the midpoint of its
    /// isolating interval.
    pub fn representative(&self) -> Rational {
        match self {
            Root::Exact(r) => r.clone(),
            Root::Isolated { lo, hi } => midpoint(lo, hi),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Root::Exact(_))
    }

    fn key(&self) -> Rational {
        self.representative()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Crossover {
    /// The two expressions agree identically on the domain.
    Identical,
    Roots(Vec<Root>),
}

impl Crossover {
    pub fn roots(&self) -> &[Root] {
        match self {
            Crossover::Identical => &[],
            Crossover::Roots(r) => r,
        }
    }

    /// The roots if all are exact.
    pub fn exact_roots(&self) -> Option<Vec<Rational>> {
        self.roots()
            .iter()
            .map(|r| match r {
                Root::Exact(x) => Some(x.clone()),
                Root::Isolated { .. } => None,
            })
            .collect()
    }
}

/// Crossings of two records on `interval` intersected with both validity
/// ranges.
pub fn crossover(
    a: &BoundRecord,
    b: &BoundRecord,
    interval: &EtaInterval,
    width: &Rational,
) -> Result<Crossover> {
    let dom = interval.intersect(&a.validity).intersect(&b.validity);
    if dom.is_empty() {
        return Err(Error::domain(format!(
            "{} and {} are not both valid anywhere in {interval}",
            a.name, b.name
        )));
    }
    crossover_exprs(&a.expr, &b.expr, &dom, width)
}

/// Crossings of two expressions on `domain`, which must avoid both poles.
pub fn crossover_exprs(
    f: &BoundExpr,
    g: &BoundExpr,
    domain: &EtaInterval,
    width: &Rational,
) -> Result<Crossover> {
    if domain.is_empty() {
        return Ok(Crossover::Roots(Vec::new()));
    }
    if !width.is_positive() {
        return Err(Error::domain("isolation width must be positive"));
    }
    for e in [f, g] {
        if let Some(p) = e.pole() {
            if domain.contains(&p) {
                return Err(Error::domain(format!("{e} has a pole inside {domain}")));
            }
        }
    }
    let mut roots = match (f, g) {
        (
            BoundExpr::LinearFractional { a0, a1, b0, b1 },
            BoundExpr::LinearFractional {
                a0: c0,
                a1: c1,
                b0: d0,
                b1: d1,
            },
        ) => {
            // (a0 + a1 x)(d0 + d1 x) - (c0 + c1 x)(b0 + b1 x)
            let qa = a1 * d1 - c1 * b1;
            let qb = a0 * d1 + a1 * d0 - c0 * b1 - c1 * b0;
            let qc = a0 * d0 - c0 * b0;
            if qa.is_zero() && qb.is_zero() && qc.is_zero() {
                return Ok(Crossover::Identical);
            }
            quadratic_roots(&qa, &qb, &qc, domain, width)
        }
        _ => {
            if f == g {
                return Ok(Crossover::Identical);
            }
            bisection_roots(f, g, domain, width)?
        }
    };
    roots.sort_by_key(Root::key);
    roots.dedup();
    Ok(Crossover::Roots(roots))
}

/// Roots of `a x² + b x + c` in `domain` (not all coefficients zero).
fn quadratic_roots(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    domain: &EtaInterval,
    width: &Rational,
) -> Vec<Root> {
    let keep = |x: Rational| domain.contains(&x).then_some(Root::Exact(x));
    if a.is_zero() {
        if b.is_zero() {
            return Vec::new();
        }
        return keep(-(c / b)).into_iter().collect();
    }
    let disc = b * b - int(4) * a * c;
    if disc.is_negative() {
        return Vec::new();
    }
    let two_a = int(2) * a;
    if let Some(s) = exact_sqrt(&disc) {
        let mut out: Vec<Root> = [(-b - &s) / &two_a, (-b + &s) / &two_a]
            .into_iter()
            .filter_map(keep)
            .collect();
        out.dedup();
        return out;
    }
    // √disc is irrational, so neither root equals a rational domain endpoint
    // and refinement eventually decides membership.
    let mut out = Vec::new();
    for sign in [-1i64, 1] {
        let mut bits = 16u32;
        loop {
            let (s_lo, s_hi) = root_enclosure(&disc, 2, bits);
            let e1 = (-b + int(sign) * &s_lo) / &two_a;
            let e2 = (-b + int(sign) * &s_hi) / &two_a;
            let (lo, hi) = if e1 <= e2 { (e1, e2) } else { (e2, e1) };
            let narrow = &hi - &lo <= *width;
            let inside = lo >= domain.lo && hi <= domain.hi;
            let outside = hi <= domain.lo || lo >= domain.hi;
            if outside {
                break;
            }
            if inside && narrow {
                out.push(Root::Isolated { lo, hi });
                break;
            }
            bits += 16;
            if bits > 4096 {
                break;
            }
        }
    }
    out
}

/// Certified sign of `f(x) - g(x)`: `Some(Equal)` only when both values are
/// exact and coincide. `None` if undecided at the finest precision.
fn diff_sign(f: &BoundExpr, g: &BoundExpr, x: &Rational) -> Option<Ordering> {
    let mut bits = 64;
    while bits <= 1024 {
        let vf = f.value(x, bits).ok()?;
        let vg = g.value(x, bits).ok()?;
        if let Some(o) = vf.certain_cmp(&vg) {
            return Some(o);
        }
        if matches!((&vf, &vg), (Value::Exact(_), Value::Exact(_))) {
            return None;
        }
        bits *= 2;
    }
    None
}

/// Sample grid on `domain`: uniform points plus the dyadic points 2^-k,
/// which resolve crossings close to η = 0.
fn sample_grid(domain: &EtaInterval) -> Vec<Rational> {
    let mut pts = domain.interior_samples(255);
    if domain.lo_closed {
        pts.push(domain.lo.clone());
    }
    if domain.hi_closed {
        pts.push(domain.hi.clone());
    }
    for k in 1..=96u32 {
        let x = inv_pow2(k);
        if domain.interior_contains(&x) {
            pts.push(x.clone());
        }
        // also the points between consecutive dyadics near the left edge
        let y = &x * rat(3, 4);
        if domain.interior_contains(&y) {
            pts.push(y);
        }
    }
    pts.sort();
    pts.dedup();
    pts
}

fn bisection_roots(
    f: &BoundExpr,
    g: &BoundExpr,
    domain: &EtaInterval,
    width: &Rational,
) -> Result<Vec<Root>> {
    let pts = sample_grid(domain);
    let signs: Vec<Option<Ordering>> = pts.iter().map(|x| diff_sign(f, g, x)).collect();
    let mut out = Vec::new();
    for (x, s) in pts.iter().zip(&signs) {
        if *s == Some(Ordering::Equal) {
            out.push(Root::Exact(x.clone()));
        }
    }
    for i in 0..pts.len().saturating_sub(1) {
        let (Some(sl), Some(sr)) = (signs[i], signs[i + 1]) else {
            continue;
        };
        if sl == Ordering::Equal || sr == Ordering::Equal || sl == sr {
            continue;
        }
        let (mut lo, mut hi) = (pts[i].clone(), pts[i + 1].clone());
        let mut exact = None;
        while &hi - &lo > *width {
            let m = midpoint(&lo, &hi);
            match diff_sign(f, g, &m) {
                Some(Ordering::Equal) => {
                    exact = Some(m);
                    break;
                }
                Some(s) if s == sl => lo = m,
                Some(_) => hi = m,
                None => {
                    return Err(Error::domain(format!(
                        "could not certify the sign of {f} - {g} near a crossing"
                    )))
                }
            }
        }
        out.push(match exact {
            Some(m) => Root::Exact(m),
            None => Root::Isolated { lo, hi },
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent::calculus::montgomery_pieces;
    use crate::exponent::registry::BoundId;

    fn rec(id: BoundId) -> BoundRecord {
        id.records().remove(0)
    }

    fn w() -> Rational {
        default_width()
    }

    #[test]
    fn stated_crossings() {
        let full = EtaInterval::full();
        let c = crossover(
            &rec(BoundId::MaxFormL2),
            &rec(BoundId::MaxFormL3),
            &full,
            &w(),
        )
        .unwrap();
        assert_eq!(c.exact_roots().unwrap(), vec![rat(1, 24)]);

        let [lo, hi] = montgomery_pieces();
        let dom = EtaInterval::open(int(0), rat(1, 2));
        let c = crossover_exprs(&lo.expr, &hi.expr, &dom, &w()).unwrap();
        assert_eq!(c.exact_roots().unwrap(), vec![rat(1, 5)]);

        let c = crossover(
            &rec(BoundId::MaxFormL1),
            &rec(BoundId::Trivial),
            &full,
            &w(),
        )
        .unwrap();
        assert_eq!(c.exact_roots().unwrap(), vec![rat(2, 7)]);

        let c = crossover(
            &rec(BoundId::MaxFormL1),
            &rec(BoundId::MaxFormL2),
            &full,
            &w(),
        )
        .unwrap();
        assert_eq!(c.exact_roots().unwrap(), vec![rat(1, 8)]);
    }

    #[test]
    fn identical_forms() {
        // 4/(4(1 - 4η)) and 1/(1 - 4η)
        let a = crate::exponent::calculus::closed_form_record(2).unwrap();
        let b = rec(BoundId::MaxFormL2);
        assert_eq!(
            crossover(&a, &b, &EtaInterval::full(), &w()).unwrap(),
            Crossover::Identical
        );
    }

    #[test]
    fn irrational_roots_are_isolated() {
        // 4(1 - η) = 1/(1 - 4η)  ⇔  16η² - 20η + 3 = 0, roots (5 ± √13)/8
        let c = crossover(
            &rec(BoundId::Carlson),
            &rec(BoundId::MaxFormL2),
            &EtaInterval::full(),
            &w(),
        )
        .unwrap();
        let roots = c.roots();
        assert_eq!(roots.len(), 1);
        let Root::Isolated { lo, hi } = &roots[0] else {
            panic!("expected an isolating interval")
        };
        assert!(hi - lo <= w());
        let p = |x: &Rational| int(16) * x * x - int(20) * x + int(3);
        assert!(p(lo).is_positive() != p(hi).is_positive());
        let approx = (5.0 - 13f64.sqrt()) / 8.0;
        assert!((crate::rational::to_f64(lo) - approx).abs() < 1e-11);
    }

    #[test]
    fn power_law_crossings() {
        // 1.2e5 √η = 1/η at η = 1.2e5^(-2/3)
        let c = crossover(
            &rec(BoundId::HalaszTuran),
            &rec(BoundId::Trivial),
            &EtaInterval::full(),
            &w(),
        )
        .unwrap();
        assert_eq!(c.roots().len(), 1);
        let r = crate::rational::to_f64(&c.roots()[0].representative());
        assert!((r - 120_000f64.powf(-2.0 / 3.0)).abs() < 1e-11);

        // 1.2e5 √η = 60000 exactly at η = 1/4, a dyadic sample point
        let c = crossover_exprs(
            &rec(BoundId::HalaszTuran).expr,
            &BoundExpr::constant(int(60_000)),
            &EtaInterval::full(),
            &w(),
        )
        .unwrap();
        assert_eq!(c.exact_roots().unwrap(), vec![rat(1, 4)]);
    }

    #[test]
    fn disjoint_validity_is_an_error() {
        let [lo, hi] = montgomery_pieces();
        assert!(crossover(&lo, &hi, &EtaInterval::full(), &w()).is_err());
    }
}
