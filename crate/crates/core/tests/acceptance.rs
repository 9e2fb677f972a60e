//! Acceptance criteria. One PASS/FAIL line per criterion; exits non-zero if
//! any criterion fails. Tolerances and thresholds are pinned here.

use std::process::ExitCode;
use std::time::Duration;

use osc_spectra::verify::{self, Outcome};

struct Line {
    id: u32,
    name: &'static str,
    pass: bool,
    detail: String,
}

fn summary(o: &Outcome) -> String {
    let mut s = format!("cases={} residual={:.2e} time={:.2}s", o.cases, o.max_residual, o.elapsed.as_secs_f64());
    if let Some(g) = o.min_group_cases {
        s += &format!(" min_per_type={g}");
    }
    if let Some(v) = o.value {
        s += &format!(" value={v:.4e}");
    }
    if let Some(m) = o.mismatches.first() {
        s += &format!(" mismatches={} first=[{m}]", o.mismatches.len());
    }
    s
}

fn line(id: u32, name: &'static str, o: &Outcome, pass: bool) -> Line {
    Line { id, name, pass, detail: summary(o) }
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let mut lines = Vec::new();

    let o = verify::multiplicity_vs_oracle(4, 4);
    let pass = o.mismatches.is_empty() && o.cases >= 800 && o.elapsed < secs(30);
    lines.push(line(1, "multiplicities equal oracle invariant dimensions", &o, pass));

    let o = verify::dimension_sums(4, 4);
    let pass = o.mismatches.is_empty() && o.cases > 0;
    lines.push(line(2, "multiplicities over one period sum to r|m|", &o, pass));

    let o = verify::trace_tables(6, 6);
    let pass = o.mismatches.is_empty() && o.cases > 0 && o.max_residual <= 1e-9;
    lines.push(line(3, "trace tables match oracle traces", &o, pass));

    let o = verify::gauss_reciprocity(40, 2, 20240601);
    let pass = o.cases >= 10_000 && o.max_residual <= 1e-9 && o.elapsed < secs(20);
    lines.push(line(4, "Gauss sum reciprocity", &o, pass));

    let o = verify::straight_lattices(3, 3);
    let pass = o.mismatches.is_empty() && o.cases > 0;
    lines.push(line(5, "straight lattices through the pipeline", &o, pass));

    let o = verify::round_trip(4, 4, 100, 77);
    let pass = o.mismatches.is_empty() && o.cases > 0;
    lines.push(line(6, "round trip and classification sweep", &o, pass));

    let o = verify::shift_invariance(500, 99);
    let pass = o.mismatches.is_empty() && o.min_group_cases.is_some_and(|g| g >= 500);
    lines.push(line(7, "shift invariant under rewriting and conjugation", &o, pass));

    let o = verify::casimir(32);
    let pass = o.mismatches.is_empty() && o.cases > 0 && o.max_residual <= 1e-10;
    lines.push(line(8, "ladder Casimir values and straight wave sets", &o, pass));

    let o = verify::gaussian_density(10_000);
    let pass = o.mismatches.is_empty() && o.value.is_some_and(|v| (0.76..=0.81).contains(&v));
    lines.push(line(9, "square-lattice S multiplicities count Gaussian ideals", &o, pass));

    let golden = (1.0 + 5f64.sqrt()) / 2.0;
    let o = verify::accumulation(golden, 20);
    let pass = o.mismatches.is_empty() && o.cases >= 20 && o.value.is_some_and(|g| g < 1e-3) && o.elapsed < secs(1);
    lines.push(line(10, "accumulation of wave eigenvalues", &o, pass));

    let mut failed = 0;
    for l in &lines {
        println!("{} [{}] {}: {}", if l.pass { "PASS" } else { "FAIL" }, l.id, l.name, l.detail);
        failed += !l.pass as u32;
    }
    println!("{} of {} criteria passed", lines.len() as u32 - failed, lines.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
