//! Acceptance criteria, one line per criterion. Exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use kuramoto_core::approx::{bound_a, bound_lower_sqrt, bound_upper_half, lagrange_l, rational_lpol};
use kuramoto_core::bessel::{iv, iv_asymptotic, psi, psi_mittag_leffler, Order};
use kuramoto_core::solver::{origin_slope, residual, solve_r, CouplingStrength};
use kuramoto_core::turan::{
    beta_limit, find_omega_threshold, gamma_limit, lambda_leading_term, lambda_nu, sweep, xi_nu,
    EvaluationGrid, InequalityId,
};
use kuramoto_core::Error;

type Outcome = Result<String, String>;

fn order(nu: f64) -> Order<f64> {
    Order::new(nu).unwrap()
}

fn coupling(k: f64) -> CouplingStrength<f64> {
    CouplingStrength::new(k).unwrap()
}

fn r_of(k: f64) -> f64 {
    solve_r(order(0.0), coupling(k), 1e-13).unwrap().r
}

fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    EvaluationGrid::logarithmic(lo, hi, n).unwrap().values()
}

/// Tabulated differences as printed, with the unit of the last printed digit.
const TABLE: [(f64, (f64, f64), (f64, f64)); 5] = [
    (1.5, (0.035677, 1e-6), (0.02818, 1e-5)),
    (2.0, (0.009434, 1e-6), (0.0042565, 1e-7)),
    (5.0, (0.0001994, 1e-7), (-0.000234, 1e-6)),
    (10.0, (0.00001936, 1e-8), (-0.0000372, 1e-7)),
    (100.0, (1.59e-8, 1e-10), (-4.25e-8, 1e-10)),
];

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0_f64;
    for &(k, (da, ua), (dl, ul)) in &TABLE {
        let r = r_of(k);
        let got_a = bound_a(k).unwrap() - r;
        let got_l = rational_lpol(k) - r;
        if (got_a - da).abs() > ua {
            return Err(format!("K = {k}: A - r = {got_a:e}, printed {da:e} (unit {ua:e})"));
        }
        if (got_l - dl).abs() > ul {
            return Err(format!("K = {k}: Lpol - r = {got_l:e}, printed {dl:e} (unit {ul:e})"));
        }
        worst = worst.max((got_a - da).abs() / ua).max((got_l - dl).abs() / ul);
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(1) {
        return Err(format!("runtime {elapsed:?} >= 1 s"));
    }
    Ok(format!("worst deviation {worst:.3} last-digit units, {elapsed:?}"))
}

fn criterion_2a() -> Outcome {
    let ks = EvaluationGrid::linear(2.8, 100.0, 100).unwrap().values();
    let mut worst = (0.0_f64, 0.0_f64);
    let mut failures = 0;
    for &k in &ks {
        let err = (lagrange_l(k).unwrap() - r_of(k)).abs();
        if err >= 5e-7 {
            failures += 1;
        }
        if err > worst.0 {
            worst = (err, k);
        }
    }
    let detail = format!("max |L - r| = {:e} at K = {}, {failures}/100 points >= 5e-7", worst.0, worst.1);
    if failures == 0 { Ok(detail) } else { Err(detail) }
}

fn criterion_2b() -> Outcome {
    let (lo, hi, n) = (1.01, 100.0, 500);
    let mut worst_ratio = 0.0_f64;
    for i in 1..=n {
        let k = lo + (hi - lo) * i as f64 / n as f64;
        let r = r_of(k);
        let dl = (lagrange_l(k).unwrap() - r).abs();
        let da = (bound_a(k).unwrap() - r).abs();
        if !(dl < da) {
            return Err(format!("K = {k}: |L - r| = {dl:e} >= |A - r| = {da:e}"));
        }
        worst_ratio = worst_ratio.max(dl / da);
    }
    Ok(format!("max |L - r|/|A - r| = {worst_ratio:.3e} over 500 points"))
}

fn criterion_3() -> Outcome {
    let (lo, hi, n) = (1.001_f64, 1000.0_f64, 1000);
    for i in 1..=n {
        let k = lo * (hi / lo).powf(i as f64 / n as f64);
        let r = r_of(k);
        let (l, a, u) = (bound_lower_sqrt(k).unwrap(), bound_a(k).unwrap(), bound_upper_half(k).unwrap());
        if !(l < r && r < a && a < u) {
            return Err(format!("K = {k}: {l} < {r} < {a} < {u} fails"));
        }
    }
    Ok("chain holds at 1000 points".into())
}

fn criterion_4() -> Outcome {
    for &x in &log_grid(1e-6, 1e6, 2000) {
        let l = lambda_nu(order(0.0), x).map_err(|e| e.to_string())?;
        if !(2.0 < l && l < 4.0) {
            return Err(format!("lambda_0({x}) = {l} outside (2, 4)"));
        }
    }
    let far = (lambda_nu(order(0.0), 1e6).unwrap() - 4.0).abs();
    if far > 1e-3 {
        return Err(format!("|lambda_0(1e6) - 4| = {far:e}"));
    }
    let x0 = 1e-6_f64;
    let lead = (8.0_f64.ln() - 2.0 * x0.ln()) / (2.0_f64.ln() - x0.ln());
    let near = (lambda_nu(order(0.0), x0).unwrap() - lead).abs();
    if near > 1e-3 || (lambda_leading_term(x0) - lead).abs() > 1e-14 {
        return Err(format!("|lambda_0(1e-6) - leading term| = {near:e}"));
    }
    for &nu in &[0.5, 1.0, 2.0, 5.0] {
        let (beta, gamma) = (4.0 / (2.0 * nu + 1.0), 4.0 * (nu + 1.0) / (2.0 * nu + 1.0));
        if beta_limit(order(nu)) != beta || (gamma_limit(order(nu)) - gamma).abs() > 1e-15 {
            return Err(format!("limit constants wrong at nu = {nu}"));
        }
        let dl = (lambda_nu(order(nu), 1e6).unwrap() - beta).abs();
        let dx = (xi_nu(order(nu), 1e6).unwrap() - gamma).abs();
        if dl > 1e-3 || dx > 1e-3 {
            return Err(format!("nu = {nu}: limit gaps {dl:e}, {dx:e}"));
        }
        for &x in &log_grid(1e-6, 1e6, 2000) {
            let l = lambda_nu(order(nu), x).map_err(|e| e.to_string())?;
            let xi = xi_nu(order(nu), x).map_err(|e| e.to_string())?;
            if !(l < beta && xi < gamma) {
                return Err(format!("nu = {nu}, x = {x}: lambda = {l}, xi = {xi}"));
            }
        }
    }
    Ok(format!("|lambda_0(1e6) - 4| = {far:.2e}, near-origin gap {near:.2e}"))
}

fn criterion_5() -> Outcome {
    let grid = EvaluationGrid::logarithmic(1e-4, 1e3, 4000).unwrap();
    let fig1_grid = EvaluationGrid::linear(10.0 / 4000.0, 10.0, 4000).unwrap();
    let mut cases: Vec<(InequalityId, f64, EvaluationGrid<f64>)> = Vec::new();
    for &nu in &[-0.5, 0.0, 0.5, 1.0, 2.0, 5.0] {
        cases.push((InequalityId::Turanb, nu, grid));
    }
    cases.push((InequalityId::Edin, 0.0, grid));
    for &nu in &[0.3, 0.5, 1.0, 2.0, 3.0] {
        cases.push((InequalityId::NewTuran, nu, grid));
    }
    for &a in &[0.0, 1.0, 2.0, 3.0] {
        cases.push((InequalityId::Fig1, a, grid));
        cases.push((InequalityId::Fig1, a, fig1_grid));
    }
    for &nu in &[0.0, 0.5, 1.0, 2.0] {
        cases.push((InequalityId::Ineq9, nu, grid));
    }
    for (id, nu, g) in &cases {
        let report = sweep(*id, order(*nu), g).map_err(|e| format!("{id} nu = {nu}: {e}"))?;
        if !report.holds() {
            return Err(format!(
                "{id} nu = {nu}: {} violations, min margin {:e} at x = {}",
                report.violations, report.min_margin, report.argmin_x
            ));
        }
    }
    let inter = sweep(InequalityId::Turaninter, order(0.25), &grid).map_err(|e| e.to_string())?;
    if inter.violations == 0 {
        return Err("turaninter at nu = 0.25 shows no violation".into());
    }
    Ok(format!("{} sweeps clean; turaninter nu = 0.25 has {} violations", cases.len(), inter.violations))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let nu = find_omega_threshold(0.01_f64).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if !(0.29..=0.31).contains(&nu) {
        return Err(format!("threshold {nu}"));
    }
    if elapsed >= Duration::from_secs(10) {
        return Err(format!("threshold {nu}, runtime {elapsed:?} >= 10 s"));
    }
    Ok(format!("threshold {nu:.5}, {elapsed:?}"))
}

fn criterion_7() -> Outcome {
    for &x in &EvaluationGrid::linear(0.1, 20.0, 400).unwrap().values() {
        let gap = (psi(order(0.0), x).unwrap().value - psi_mittag_leffler(x, 500).unwrap()).abs();
        if gap > 1e-5 {
            return Err(format!("Mittag-Leffler gap {gap:e} at x = {x}"));
        }
    }
    for &nu in &[0.0, 0.25, 0.5, 1.0, 2.0, 5.0] {
        let o = order(nu);
        for &x in &log_grid(1e-3, 30.0, 200) {
            let i0 = iv(o, x, true).unwrap().value;
            let i1 = iv(o.shifted(1), x, true).unwrap().value;
            let i2 = iv(o.shifted(2), x, true).unwrap().value;
            let res = (x * i0 - x * i2 - 2.0 * (nu + 1.0) * i1).abs();
            if res > 1e-12 * x * i0 {
                return Err(format!("recurrence residual {res:e} at nu = {nu}, x = {x}"));
            }
        }
    }
    let exact = iv(order(0.0), 100.0, true).unwrap().value;
    let asym = iv_asymptotic(order(0.0), 100.0, 4, true).unwrap();
    let rel = ((asym - exact) / exact).abs();
    if rel > 1e-6 {
        return Err(format!("asymptotic relative error {rel:e} at x = 100"));
    }
    for &nu in &[0.0, 1.0, 2.0] {
        for &k in &[1.5, 2.0, 4.0] {
            let h = 1e-7;
            let fd = residual(order(nu), coupling(k), h).unwrap() / h;
            let slope = origin_slope(order(nu), coupling(k));
            if (fd - slope).abs() > 1e-4 {
                return Err(format!("slope at nu = {nu}, K = {k}: {fd} vs {slope}"));
            }
        }
    }
    Ok(format!("asymptotic relative error {rel:.2e}"))
}

fn criterion_8() -> Outcome {
    let mut checked = 0;
    for &nu in &[0.0, 0.25, 0.5, 1.0, 2.0, 5.0] {
        for &k in &[0.1, 0.5, 1.0, 1.25, 1.5, 2.0, 3.0, 3.5, 6.0, 6.5, 10.0, 50.0, nu + 1.0, nu + 1.0 + 1e-6] {
            let exists = k > nu + 1.0;
            match solve_r(order(nu), coupling(k), 1e-12) {
                Err(Error::NoNontrivialRoot { .. }) if !exists => {}
                Ok(s) if exists && s.residual <= 1e-12 => {}
                other => return Err(format!("nu = {nu}, K = {k}: {other:?}")),
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (nu, K) pairs"))
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, fn() -> Outcome); 9] = [
        ("1", "difference table", criterion_1),
        ("2a", "Lagrange six-digit accuracy on [2.8, 100]", criterion_2a),
        ("2b", "Lagrange dominance over A on (1.01, 100]", criterion_2b),
        ("3", "bound chain", criterion_3),
        ("4", "sharpness constants", criterion_4),
        ("5", "inequality sweeps", criterion_5),
        ("6", "threshold experiment", criterion_6),
        ("7", "kernel cross-validation", criterion_7),
        ("8", "existence logic", criterion_8),
    ];
    let mut failed = 0;
    for (id, name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS criterion {id} ({name}): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {id} ({name}): {detail}");
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
