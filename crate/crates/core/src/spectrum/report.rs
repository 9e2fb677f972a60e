//! Text and line-record rendering of spectrum windows.

use std::fmt::Write;

use crate::numeric::fmt_rat;

use super::decomposition::{Part, SpectrumWindow};
use super::irrep::{CasimirConvention, IrrRep, PiPoly, Pullback};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    /// One tab-separated `key=value` record per line.
    Records,
}

pub fn part_name(p: Part) -> &'static str {
    match p {
        Part::H0 => "h0",
        Part::H1 => "h1",
        Part::All => "all",
    }
}

fn pullback_text(p: &Pullback) -> String {
    match p {
        Pullback::Shift { u_coef } => format!("shift(u*pi={})", fmt_rat(u_coef)),
        Pullback::Scale { s } => format!("scale(s={})", fmt_rat(s)),
    }
}

/// Header lines shared by spectrum and wave reports.
pub fn header(w: &SpectrumWindow, conv: CasimirConvention) -> Vec<String> {
    let b = &w.bounds;
    let mut out = vec![
        format!("standard form: {}", w.descriptor),
        format!(
            "window on standard-form labels: nmax={} mmax={} amax={} part={} convention={}",
            b.nmax,
            b.mmax,
            fmt_rat(&b.amax),
            part_name(w.part),
            conv.name()
        ),
    ];
    if w.pullbacks.is_empty() {
        out.push("pullbacks: none".into());
    } else {
        out.push(format!("pullbacks: {}", w.pullbacks.iter().map(pullback_text).collect::<Vec<_>>().join(", ")));
    }
    out
}

fn record(rep: &IrrRep, mult: u64) -> String {
    match rep {
        IrrRep::C { d_coef } => format!("kind=C\td_pi={}\tmult={mult}", fmt_rat(d_coef)),
        IrrRep::S { a2, tau } => format!("kind=S\ta2={a2}\ttau={}\tmult={mult}", fmt_rat(tau)),
        IrrRep::F { c, d_coef } => format!("kind=F\tc={}\td_pi={}\tmult={mult}", fmt_rat(c), fmt_rat(d_coef)),
    }
}

pub fn render_spectrum(w: &SpectrumWindow, conv: CasimirConvention, fmt: Format) -> String {
    let mut s = String::new();
    match fmt {
        Format::Text => {
            for h in header(w, conv) {
                writeln!(s, "# {h}").unwrap();
            }
            for (rep, m) in &w.entries {
                writeln!(s, "{rep} x{m}").unwrap();
            }
        }
        Format::Records => {
            for (rep, m) in &w.entries {
                writeln!(s, "{}", record(rep, *m)).unwrap();
            }
        }
    }
    s
}

pub fn render_wave(w: &SpectrumWindow, values: &[(PiPoly, u64)], conv: CasimirConvention, fmt: Format) -> String {
    let mut s = String::new();
    if fmt == Format::Text {
        for h in header(w, conv) {
            writeln!(s, "# {h}").unwrap();
        }
    }
    for (x, m) in values {
        match fmt {
            Format::Text => writeln!(s, "{x} ~ {:.12} x{m}", x.to_f64()).unwrap(),
            Format::Records => writeln!(s, "value={x}\tapprox={:.12}\tmult={m}", x.to_f64()).unwrap(),
        }
    }
    s
}
