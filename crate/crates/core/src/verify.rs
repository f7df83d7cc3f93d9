//! The verification suite: one check per theorem, each run on exact
//! desk-scale instances and reported as a [`CriterionResult`].

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::f2;
use crate::field::{Field, Sign};
use crate::graph::{diameter_report, is_edge, EvenGraph};
use crate::hyperelliptic::{cantor_add, zeta_data, Curve, HyperellipticModel, JacobianLimits, JacobianTable};
use crate::p1::{hilbert_product_check, reciprocity_check, RationalModel};
use crate::poly::{monic_irreducibles, Poly};
use crate::rational::RationalFunction;
use crate::squares::{legendre_via_coords, CurveModel, DensityMode, Squares};

/// The genus-two fixture over `F_3`.
pub const QUINTIC_F3: &str = "x^5 - x";
pub const ELLIPTIC_F5: &str = "x^3 - x";
/// Scan bound used throughout the suite.
pub const SCAN_BOUND: usize = 6;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: String,
    pub title: String,
    pub passed: bool,
    pub detail: String,
    /// Informational lines that do not affect `passed`.
    pub notes: Vec<String>,
    pub seconds: f64,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "{} {:<4} {} ({:.2}s): {}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.seconds,
            self.detail
        )
    }
}

fn timed(
    id: &str,
    title: &str,
    limit_secs: Option<f64>,
    f: impl FnOnce() -> Result<(bool, String, Vec<String>)>,
) -> CriterionResult {
    let start = Instant::now();
    let out = f();
    let seconds = start.elapsed().as_secs_f64();
    let (mut passed, mut detail, notes) = match out {
        Ok(v) => v,
        Err(e) => (false, format!("error: {e}"), Vec::new()),
    };
    if let Some(limit) = limit_secs {
        if seconds > limit {
            passed = false;
            detail = format!("{detail}; exceeded the {limit:.0}s limit");
        }
    }
    CriterionResult {
        id: id.into(),
        title: title.into(),
        passed,
        detail,
        notes,
        seconds,
    }
}

pub fn p1_squares(q: u32) -> Result<Squares<RationalModel>> {
    Squares::new(RationalModel::new(Field::of_order(q)?), SCAN_BOUND)
}

pub fn curve_squares(q: u32, f: &str) -> Result<Squares<HyperellipticModel>> {
    let curve = Curve::parse(Field::of_order(q)?, f)?;
    Squares::new(HyperellipticModel::new(curve)?, SCAN_BOUND)
}

pub fn a1() -> CriterionResult {
    timed("A1", "non-transitive triple over F_5", Some(1.0), || {
        let sq = p1_squares(5)?;
        let m = sq.model();
        let f = m.parse_place("t^2+4t+1")?;
        let g = m.parse_place("t^2+2t+3")?;
        let h = m.parse_place("t^2+2")?;
        let (fg, gh, fh) = (is_edge(&sq, &f, &g)?, is_edge(&sq, &g, &h)?, is_edge(&sq, &f, &h)?);
        Ok((
            fg && gh && !fh,
            format!("edge(f,g)={fg} edge(g,h)={gh} edge(f,h)={fh}"),
            vec![],
        ))
    })
}

pub fn a2() -> CriterionResult {
    timed(
        "A2",
        "quadratic reciprocity, degree ≤ 3 over F_3, F_5, F_7",
        Some(30.0),
        || {
            let mut checked = 0;
            let mut failures = Vec::new();
            for q in [3, 5, 7] {
                let k = Field::prime(q)?;
                let irr: Vec<Poly> = (1..=3).flat_map(|d| monic_irreducibles(&k, d).to_vec()).collect();
                for (i, f) in irr.iter().enumerate() {
                    for g in &irr[i + 1..] {
                        checked += 1;
                        if !reciprocity_check(f, g, &k)?.ok {
                            failures.push(format!("F_{q}: ({}, {})", f.render("t", &k), g.render("t", &k)));
                        }
                    }
                }
            }
            Ok((
                failures.is_empty(),
                format!("{checked} pairs, {} failures", failures.len()),
                failures,
            ))
        },
    )
}

pub fn a3() -> CriterionResult {
    timed(
        "A3",
        "Hilbert reciprocity on 500 random pairs over F_5",
        Some(30.0),
        || {
            let k = Field::prime(5)?;
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            let random = |rng: &mut ChaCha8Rng| loop {
                let num = Poly::random(&k, rng.gen_range(1..=5), rng);
                let den = Poly::random(&k, rng.gen_range(1..=5), rng);
                if !num.is_zero() && !den.is_zero() {
                    return RationalFunction::new(num, den, &k).expect("nonzero denominator");
                }
            };
            let mut bad = 0;
            for _ in 0..500 {
                let a = random(&mut rng);
                let b = random(&mut rng);
                if !hilbert_product_check(&a, &b, &k)?.1 {
                    bad += 1;
                }
            }
            Ok((bad == 0, format!("500 pairs, {bad} with product -1"), vec![]))
        },
    )
}

/// `(label, |Sing X| from the scan, |Pic X/2 Pic X| from the class group)`.
fn sing_vs_pic() -> Result<Vec<(String, u64, u64)>> {
    let mut out = Vec::new();
    for q in [3, 5, 9] {
        let sq = p1_squares(q)?;
        let scan = sq.sing_scan(&[])?;
        out.push((format!("P1/F_{q}"), scan.order(), 2));
    }
    for (q, f) in [(5, ELLIPTIC_F5), (3, QUINTIC_F3)] {
        let curve = Curve::parse(Field::of_order(q)?, f)?;
        let jac = JacobianTable::new(&curve, JacobianLimits::from_env())?;
        let pic = 2u64 << jac.two_rank();
        let sq = Squares::new(HyperellipticModel::new(curve)?, SCAN_BOUND)?;
        out.push((format!("y^2={f}/F_{q}"), sq.sing_scan(&[])?.order(), pic));
    }
    Ok(out)
}

pub fn a4() -> CriterionResult {
    timed("A4", "|Sing X| = |Pic X / 2 Pic X|", Some(120.0), || {
        let rows = sing_vs_pic()?;
        let ok = rows.iter().all(|(_, s, p)| s == p);
        let detail = rows
            .iter()
            .map(|(l, s, p)| format!("{l}: {s} vs {p}"))
            .collect::<Vec<_>>()
            .join("; ");
        Ok((ok, detail, vec![]))
    })
}

fn criteria_disagreements<M: CurveModel>(sq: &Squares<M>, d: usize) -> Result<(usize, Vec<String>)> {
    let places = sq.model().places_up_to(d);
    let mut bad = Vec::new();
    for p in &places {
        let r = sq.even_criteria_report(p)?;
        if !r.agree() {
            bad.push(format!("{}: {:?}", r.place, r.values()));
        }
    }
    Ok((places.len(), bad))
}

pub fn a5() -> CriterionResult {
    timed("A5", "five evenness criteria agree, degree ≤ 3", None, || {
        let (n1, b1) = criteria_disagreements(&p1_squares(5)?, 3)?;
        let (n2, b2) = criteria_disagreements(&curve_squares(5, ELLIPTIC_F5)?, 3)?;
        let bad: Vec<String> = b1.into_iter().chain(b2).collect();
        Ok((
            bad.is_empty(),
            format!("{} places, {} disagreements", n1 + n2, bad.len()),
            bad,
        ))
    })
}

fn gst_on<M: CurveModel>(sq: &Squares<M>, label: &str, seed: u64) -> Result<(bool, String)> {
    let m = sq.model();
    let even = sq.even_places_brute_force(6)?;
    let mut ok = true;
    let mut members = 0;
    for s in sq.sing_x().elements(m) {
        members += 1;
        ok &= matches!(
            sq.gst_check_on(&s, &even),
            crate::squares::GstVerdict::Consistent { .. }
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut witnessed, mut inside) = (0, 0);
    for _ in 0..20 {
        let l = m.random_class(&mut rng);
        let v = sq.gst_check_on(&l, &even);
        ok &= v.agrees();
        match v {
            crate::squares::GstVerdict::WitnessFound { .. } => witnessed += 1,
            crate::squares::GstVerdict::Consistent { .. } => inside += 1,
            _ => {}
        }
    }
    Ok((
        ok,
        format!(
            "{label}: {} even places, {members} Sing(X) classes consistent, {witnessed}/20 random classes witnessed ({inside} in Sing(X))",
            even.len()
        ),
    ))
}

pub fn a6() -> CriterionResult {
    timed(
        "A6",
        "Sing(X) classes are squares at even places, degree ≤ 6",
        None,
        || {
            let (ok1, d1) = gst_on(&p1_squares(5)?, "P1/F_5", 0)?;
            let (ok2, d2) = gst_on(&curve_squares(5, ELLIPTIC_F5)?, "elliptic/F_5", 0)?;
            Ok((ok1 && ok2, format!("{d1}; {d2}"), vec![]))
        },
    )
}

pub fn a7() -> CriterionResult {
    timed(
        "A7",
        "sign patterns of {t, t+1} at degree 7 over F_5",
        Some(120.0),
        || {
            let sq = p1_squares(5)?;
            let m = sq.model();
            let classes = vec![m.parse_class("t")?, m.parse_class("t+1")?];
            let mut ok = true;
            let mut parts = Vec::new();
            for signs in [
                [Sign::Plus, Sign::Plus],
                [Sign::Plus, Sign::Minus],
                [Sign::Minus, Sign::Plus],
                [Sign::Minus, Sign::Minus],
            ] {
                let r = sq.hecke_density_experiment(&classes, &signs, 7, DensityMode::Exhaustive)?;
                ok &= (r.fraction - 0.25).abs() <= 0.05;
                parts.push(format!(
                    "({},{}) {}/{} = {:.4}",
                    signs[0], signs[1], r.count, r.total, r.fraction
                ));
            }
            Ok((ok, parts.join("; "), vec![]))
        },
    )
}

pub fn a8() -> CriterionResult {
    timed(
        "A8",
        "even places of degree 6 on the elliptic curve, 1/2^k ± 0.05",
        None,
        || {
            let sq = curve_squares(5, ELLIPTIC_F5)?;
            let k = sq.sing_x().dim();
            let pic = sq.model().pic2_dim()?;
            let r = sq.even_density_experiment(6, DensityMode::Exhaustive)?;
            let target = 1.0 / (1u64 << k) as f64;
            let ok = (r.fraction - target).abs() <= 0.05 && k == pic;
            let at_even_degree = 1.0 / (1u64 << (k - 1)) as f64;
            Ok((
                ok,
                format!(
                    "k = {k}, {}/{} = {:.4}, target {target:.4}",
                    r.count, r.total, r.fraction
                ),
                vec![format!(
                    "ζ has symbol +1 at every place of even degree, so among degree-6 places only k - 1 = {} \
                 conditions remain and the fixed-degree proxy predicts 1/2^(k-1) = {at_even_degree:.4} \
                 (observed deviation {:.4})",
                    k - 1,
                    (r.fraction - at_even_degree).abs()
                )],
            ))
        },
    )
}

pub fn a9() -> CriterionResult {
    timed(
        "A9",
        "adjacency is symmetric, degree ≤ 4 over F_3 and F_5",
        None,
        || {
            let mut parts = Vec::new();
            let mut ok = true;
            for q in [3, 5] {
                let sq = p1_squares(q)?;
                let g = EvenGraph::build(&sq, 4)?;
                ok &= g.is_symmetric();
                parts.push(format!("F_{q}: {} vertices, {} edges", g.len(), g.edge_count()));
            }
            Ok((ok, parts.join("; "), vec![]))
        },
    )
}

pub fn a10() -> CriterionResult {
    timed(
        "A10",
        "diameter 2: vertices of degree ≤ 4, neighbors of degree ≤ 6",
        Some(120.0),
        || {
            let mut parts = Vec::new();
            let mut notes = Vec::new();
            let mut ok = true;
            for q in [3, 5] {
                let sq = p1_squares(q)?;
                let g = EvenGraph::build(&sq, 4)?;
                let r = diameter_report(&sq, &g, 6)?;
                ok &= r.unresolved_pairs.is_empty();
                parts.push(format!(
                    "F_{q}: max distance {}, {} unresolved",
                    r.max_distance_observed,
                    r.unresolved_pairs.len()
                ));
                if !r.unresolved_pairs.is_empty() {
                    notes.push(format!(
                        "F_{q}: raise the neighbor search degree; unresolved {:?}",
                        r.unresolved_pairs
                    ));
                }
            }
            Ok((ok, parts.join("; "), notes))
        },
    )
}

pub fn a11() -> CriterionResult {
    timed(
        "A11",
        "every vertex of degree ≤ 4 over F_5 has a non-neighbor of degree ≤ 6",
        None,
        || {
            let sq = p1_squares(5)?;
            let m = sq.model();
            let g = EvenGraph::build(&sq, 4)?;
            let pool = sq.even_places(6)?;
            let mut missing = Vec::new();
            for (p, l) in g.places.iter().zip(&g.lambdas) {
                let mut found = false;
                for r in &pool {
                    if r != p && m.legendre(l, r)? == Sign::Minus {
                        found = true;
                        break;
                    }
                }
                if !found {
                    missing.push(m.render_place(p));
                }
            }
            Ok((
                missing.is_empty(),
                format!("{} vertices, {} without a witness", g.len(), missing.len()),
                missing,
            ))
        },
    )
}

/// Curves whose Jacobians are enumerated and checked against the zeta function.
pub const JACOBIAN_FIXTURES: [(u32, &str); 7] = [
    (5, ELLIPTIC_F5),
    (3, QUINTIC_F3),
    (3, "x^5 - x + 1"),
    (5, "x^3 + 2x + 1"),
    (9, "x^3 - x"),
    (5, "x^5 + x + 3"),
    (3, "x^7 - x + 1"),
];

pub fn a12() -> CriterionResult {
    timed(
        "A12",
        "Jacobian order, Hasse–Weil bound and associativity",
        None,
        || {
            let mut ok = true;
            let mut parts = Vec::new();
            for (q, f) in JACOBIAN_FIXTURES {
                let c = Curve::parse(Field::of_order(q)?, f)?;
                let t = JacobianTable::new(&c, JacobianLimits::from_env())?;
                let z = zeta_data(&c);
                ok &= t.order() as u64 == z.order && z.hasse_weil_ok;
                parts.push(format!("y^2={f}/F_{q}: |J| = {} (zeta {})", t.order(), z.order));
            }
            let c = Curve::parse(Field::prime(5)?, "x^5 + x + 3")?;
            let t = JacobianTable::new(&c, JacobianLimits::from_env())?;
            let els = t.elements();
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            let mut assoc_fail = 0;
            for _ in 0..500 {
                let [a, b, d] = [0; 3].map(|_| &els[rng.gen_range(0..els.len())]);
                let ab = cantor_add(&c, a, b)?.0;
                let bd = cantor_add(&c, b, d)?.0;
                if cantor_add(&c, &ab, d)?.0 != cantor_add(&c, a, &bd)?.0 {
                    assoc_fail += 1;
                }
            }
            ok &= assoc_fail == 0;
            parts.push(format!("500 triples, {assoc_fail} non-associative"));
            Ok((ok, parts.join("; "), vec![]))
        },
    )
}

fn compatible_basis_checks<M: CurveModel>(sq: &Squares<M>, label: &str) -> Result<(bool, String)> {
    let m = sq.model();
    let basis = sq.sing_x().basis.clone();
    let first = sq.compatible_points_for_classes(&basis, 6, 0)?;
    let second = sq.compatible_points_for_classes(&basis, 6, 1)?;
    let mut ok = sq.pairing_matrix(&first, &basis)?.is_compatible && sq.pairing_matrix(&second, &basis)?.is_compatible;
    for (p, q) in first.iter().zip(&second) {
        ok &= m.pic2_coords(p)? == m.pic2_coords(q)?;
    }
    // symbols from coordinates
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let elements = sq.sing_x().elements(m);
    let places = m.places_up_to(4);
    let mut formula_fail = 0;
    for _ in 0..200 {
        let l = &elements[rng.gen_range(0..elements.len())];
        let p = &places[rng.gen_range(0..places.len())];
        let lc = sq.sing_x().coordinates(m, l).expect("member of Sing(X)");
        let pc = sq.pic_coordinates(p, &basis)?;
        if legendre_via_coords(&lc, &pc) != m.legendre(l, p)? {
            formula_fail += 1;
        }
    }
    ok &= formula_fail == 0;
    // coordinates are linear
    for _ in 0..50 {
        let a = &elements[rng.gen_range(0..elements.len())];
        let b = &elements[rng.gen_range(0..elements.len())];
        let ab = m.mul(a, b);
        let ca = sq.sing_x().coordinates(m, a).expect("member");
        let cb = sq.sing_x().coordinates(m, b).expect("member");
        ok &= sq.sing_x().coordinates(m, &ab) == Some(f2::xor(&ca, &cb));
    }
    // congruent places have equal Δ
    let small = m.places_up_to(2);
    let mut congruent = 0;
    for (i, p) in small.iter().enumerate() {
        for q in &small[i..] {
            if m.pic2_coords(p)? == m.pic2_coords(q)? {
                congruent += 1;
                ok &= sq.congruent_points_delta_check(p, q)?;
            }
        }
    }
    Ok((
        ok,
        format!(
            "{label}: compatible tuples {} and {}, {formula_fail}/200 symbol mismatches, {congruent} congruent pairs",
            first.iter().map(|p| m.render_place(p)).collect::<Vec<_>>().join(","),
            second.iter().map(|p| m.render_place(p)).collect::<Vec<_>>().join(",")
        ),
    ))
}

pub fn a13() -> CriterionResult {
    timed(
        "A13",
        "compatible bases are unique up to Pic/2; congruent places share Δ",
        None,
        || {
            let (ok1, d1) = compatible_basis_checks(&p1_squares(5)?, "P1/F_5")?;
            let (ok2, d2) = compatible_basis_checks(&curve_squares(5, ELLIPTIC_F5)?, "elliptic/F_5")?;
            let (ok3, d3) = compatible_basis_checks(&curve_squares(3, QUINTIC_F3)?, "quintic/F_3")?;
            Ok((ok1 && ok2 && ok3, format!("{d1}; {d2}; {d3}"), vec![]))
        },
    )
}

pub fn a14() -> CriterionResult {
    timed("A14", "edges do not depend on the choice of λ_p", None, || {
        let sq = p1_squares(5)?;
        let g = EvenGraph::build(&sq, 2)?;
        let inv = g.choice_invariant(&sq)?;
        Ok((
            inv,
            format!("{} vertices, {} Sing(X) shifts", g.len(), sq.sing_x().order()),
            vec![],
        ))
    })
}

pub fn run_all() -> Vec<CriterionResult> {
    vec![
        a1(),
        a2(),
        a3(),
        a4(),
        a5(),
        a6(),
        a7(),
        a8(),
        a9(),
        a10(),
        a11(),
        a12(),
        a13(),
        a14(),
    ]
}
