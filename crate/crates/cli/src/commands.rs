use kuramoto_core::approx::{
    bound_general, error_table, ApproximationRow, BoundKind, REFERENCE_DELTA_A, REFERENCE_DELTA_LPOL, REFERENCE_K,
};
use kuramoto_core::bessel::{gamma_amos, iv, omega_amos, psi, Order};
use kuramoto_core::solver::{solve_r, CouplingStrength};
use kuramoto_core::turan::{
    fig1_value, find_omega_threshold, lambda_nu, sweep, xi_nu, Claim, EvaluationGrid, InequalityId, Spacing,
};
use kuramoto_core::Error;

use crate::output::{printed, Cell, OutputSpec, Record};
use crate::{Command, EvalFn, GridSpacing};

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::NoNontrivialRoot { .. }) { 1 } else { 2 };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn claim_name(c: Claim) -> &'static str {
    match c {
        Claim::Proven => "proven",
        Claim::Conjectured => "conjectured",
        Claim::NotClaimed => "not_claimed",
    }
}

pub fn run(command: Command, out: &OutputSpec) -> Result<u8, Failure> {
    match command {
        Command::Solve { k, nu, tol } => solve(k, nu, tol, out),
        Command::Table => table(out),
        Command::Sweep { k_min, k_max, steps, nu, tol } => sweep_k(k_min, k_max, steps, nu, tol, out),
        Command::Approx { k, tol } => approx(k, tol, out),
        Command::Verify { inequality, nu, x_min, x_max, points, spacing } => {
            verify(&inequality, nu, x_min, x_max, points, spacing, out)
        }
        Command::Figure { id, points } => figure(id, points, out),
        Command::Threshold { tolerance } => threshold(tolerance, out),
        Command::Eval { function, nu, x, scaled } => eval(function, nu, x, scaled, out),
    }
}

fn solve(k: f64, nu: f64, tol: f64, out: &OutputSpec) -> Result<u8, Failure> {
    let order = Order::new(nu)?;
    let s = solve_r(order, CouplingStrength::new(k)?, tol)?;
    let record: Record = vec![
        ("K", Cell::Num(k)),
        ("nu", Cell::Num(nu)),
        ("r", Cell::Num(s.r)),
        ("residual", Cell::Num(s.residual)),
        ("bracket_lo", Cell::Num(s.bracket_lo)),
        ("bracket_hi", Cell::Num(s.bracket_hi)),
        ("iterations", Cell::Int(s.iterations as u64)),
        ("sign_changes", Cell::Int(s.sign_changes as u64)),
    ];
    out.emit(&[record], true)?;
    Ok(0)
}

fn table(out: &OutputSpec) -> Result<u8, Failure> {
    let rows = error_table(&REFERENCE_K, 1e-13)?;
    let records: Vec<Record> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            vec![
                ("K", Cell::Num(row.k)),
                ("A_minus_r", printed(row.delta_a, REFERENCE_DELTA_A[i].significant_digits())),
                ("Lpol_minus_r", printed(row.delta_lpol, REFERENCE_DELTA_LPOL[i].significant_digits())),
                ("r", Cell::Num(row.r)),
                ("L_minus_r", Cell::Num(row.delta_l)),
            ]
        })
        .collect();
    out.emit(&records, false)?;
    Ok(0)
}

fn sweep_k(k_min: f64, k_max: f64, steps: usize, nu: f64, tol: f64, out: &OutputSpec) -> Result<u8, Failure> {
    let order = Order::new(nu)?;
    if steps < 2 {
        return Err(usage(format!("--steps must be at least 2, got {steps}")));
    }
    let critical = (nu + 1.0).max(1.0);
    if !(k_min > critical && k_min < k_max && k_max.is_finite()) {
        return Err(usage(format!("need {critical} < k_min < k_max, got [{k_min}, {k_max}]")));
    }
    let ks = EvaluationGrid::linear(k_min, k_max, steps)?.values();
    let records: Vec<Record> = if nu == 0.0 {
        error_table(&ks, tol)?
            .iter()
            .map(|row| {
                vec![
                    ("K", Cell::Num(row.k)),
                    ("r", Cell::Num(row.r)),
                    ("lower_sqrt", Cell::Num(row.lower_sqrt)),
                    ("A", Cell::Num(row.a)),
                    ("upper_half", Cell::Num(row.upper_half)),
                    ("L", Cell::Num(row.l)),
                    ("Lpol", Cell::Num(row.lpol)),
                ]
            })
            .collect()
    } else {
        let mut records = Vec::with_capacity(ks.len());
        for &k in &ks {
            let r = solve_r(order, CouplingStrength::new(k)?, tol)?.r;
            records.push(vec![
                ("K", Cell::Num(k)),
                ("r", Cell::Num(r)),
                ("lower_sqrt", Cell::Num(bound_general(order, k, BoundKind::Sqrt)?.value)),
                ("A", Cell::Num(bound_general(order, k, BoundKind::QuarterPower)?.value)),
                ("upper_half", Cell::Num(bound_general(order, k, BoundKind::Half)?.value)),
                ("L", Cell::Null),
                ("Lpol", Cell::Null),
            ]);
        }
        records
    };
    out.emit(&records, false)?;
    Ok(0)
}

fn approx(k: f64, tol: f64, out: &OutputSpec) -> Result<u8, Failure> {
    let row = ApproximationRow::at(k, tol)?;
    let record: Record = vec![
        ("K", Cell::Num(row.k)),
        ("r", Cell::Num(row.r)),
        ("lower_sqrt", Cell::Num(row.lower_sqrt)),
        ("upper_half", Cell::Num(row.upper_half)),
        ("A", Cell::Num(row.a)),
        ("L", Cell::Num(row.l)),
        ("Lpol", Cell::Num(row.lpol)),
        ("delta_A", Cell::Num(row.delta_a)),
        ("delta_Lpol", Cell::Num(row.delta_lpol)),
        ("delta_L", Cell::Num(row.delta_l)),
    ];
    out.emit(&[record], true)?;
    Ok(0)
}

fn verify(
    inequality: &str,
    nu: f64,
    x_min: f64,
    x_max: f64,
    points: usize,
    spacing: GridSpacing,
    out: &OutputSpec,
) -> Result<u8, Failure> {
    let id: InequalityId = inequality.parse()?;
    let order = Order::new(nu)?;
    let spacing = match spacing {
        GridSpacing::Log => Spacing::Logarithmic,
        GridSpacing::Linear => Spacing::Linear,
    };
    let grid = EvaluationGrid::new(x_min, x_max, points, spacing)?;
    let report = sweep(id, order, &grid)?;
    let record: Record = vec![
        ("inequality_id", Cell::Text(id.name().into())),
        ("nu", Cell::Num(report.order.nu())),
        ("x_min", Cell::Num(grid.lo)),
        ("x_max", Cell::Num(grid.hi)),
        ("points", Cell::Int(grid.points as u64)),
        ("spacing", Cell::Text(if spacing == Spacing::Linear { "linear" } else { "log" }.into())),
        ("min_margin", Cell::Num(report.min_margin)),
        ("min_margin_ln_abs", Cell::Num(report.min_margin_ln_abs)),
        ("argmin_x", Cell::Num(report.argmin_x)),
        ("violations", Cell::Int(report.violations as u64)),
        ("holds", Cell::Bool(report.holds())),
        ("claim", Cell::Text(claim_name(report.claim).into())),
        ("evidence", Cell::Text(report.evidence.into())),
    ];
    out.emit(&[record], true)?;
    Ok(if report.holds() { 0 } else { 1 })
}

fn figure(id: u8, points: usize, out: &OutputSpec) -> Result<u8, Failure> {
    if points < 2 {
        return Err(usage(format!("--points must be at least 2, got {points}")));
    }
    let mut records = Vec::with_capacity(points);
    match id {
        1 => {
            for x in EvaluationGrid::linear(1e-3, 10.0, points)?.values() {
                let mut record: Record = vec![("x", Cell::Num(x))];
                for (name, a) in [("g_0", 0.0), ("g_1", 1.0), ("g_2", 2.0), ("g_3", 3.0)] {
                    record.push((name, Cell::Num(fig1_value(Order::new(a)?, x)?)));
                }
                records.push(record);
            }
        }
        2 => {
            let ks = EvaluationGrid::linear(1.001, 3.0, points)?.values();
            for row in error_table(&ks, 1e-13)? {
                records.push(vec![
                    ("K", Cell::Num(row.k)),
                    ("A", Cell::Num(row.a)),
                    ("L", Cell::Num(row.l)),
                    ("r", Cell::Num(row.r)),
                    ("lower_sqrt", Cell::Num(row.lower_sqrt)),
                ]);
            }
        }
        _ => {
            let ks = EvaluationGrid::linear(1.001, 4.0, points)?.values();
            for row in error_table(&ks, 1e-13)? {
                records.push(vec![
                    ("K", Cell::Num(row.k)),
                    ("A", Cell::Num(row.a)),
                    ("Lpol", Cell::Num(row.lpol)),
                    ("r", Cell::Num(row.r)),
                ]);
            }
        }
    }
    out.emit(&records, false)?;
    Ok(0)
}

fn threshold(tolerance: f64, out: &OutputSpec) -> Result<u8, Failure> {
    let nu = find_omega_threshold(tolerance)?;
    let record: Record = vec![("nu_star", Cell::Num(nu)), ("tolerance", Cell::Num(tolerance))];
    out.emit(&[record], true)?;
    Ok(0)
}

fn eval(function: EvalFn, nu: f64, x: f64, scaled: bool, out: &OutputSpec) -> Result<u8, Failure> {
    if scaled && function != EvalFn::Iv {
        return Err(usage("--scaled applies to --fn iv only"));
    }
    let order = Order::new(nu)?;
    let (name, value) = match function {
        EvalFn::Iv => ("iv", iv(order, x, scaled)?.value),
        EvalFn::Psi => ("psi", psi(order, x)?.value),
        EvalFn::Omega => ("omega", omega_amos(order, x)?),
        EvalFn::Gamma => ("gamma", gamma_amos(order, x)?),
        EvalFn::Lambda => ("lambda", lambda_nu(order, x)?),
        EvalFn::Xi => ("xi", xi_nu(order, x)?),
    };
    let record: Record = vec![
        ("fn", Cell::Text(name.into())),
        ("nu", Cell::Num(nu)),
        ("x", Cell::Num(x)),
        ("scaled", Cell::Bool(scaled)),
        ("value", Cell::Num(value)),
    ];
    out.emit(&[record], true)?;
    Ok(0)
}
