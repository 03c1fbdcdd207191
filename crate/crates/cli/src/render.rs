//! Text and CSV renderings.

use std::fmt::Write as _;
use std::io;

use sixlines::cases::Verification;
use sixlines::catalog::{Catalog, CurveName};
use sixlines::classify::{AuditReport, ConfigurationRow, EnumerationMode};
use sixlines::fibration::{FibrationReport, Mode};
use sixlines::tables::TablesReport;

fn coords(c: &sixlines::lattice::DivisorClass) -> String {
    c.coords().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn catalog_csv(cat: &Catalog, out: impl io::Write) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["name", "kind", "square", "b_pairing", "class"])?;
    for c in cat.curves() {
        w.write_record([
            c.name.to_string(),
            c.kind.label().to_string(),
            c.square().to_string(),
            c.b_pairing().to_string(),
            coords(&c.cls),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn catalog_text(cat: &Catalog) -> String {
    let mut s = String::new();
    let width = cat.curves().iter().map(|c| c.name.to_string().len()).max().unwrap_or(4);
    for c in cat.curves() {
        let _ = writeln!(s, "{:<width$}  {:<14}  {}", c.name.to_string(), c.kind.label(), coords(&c.cls));
    }
    let _ = writeln!(s, "{} curves", cat.len());
    s
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or("-".into(), ToString::to_string)
}

pub fn rows_csv(rows: &[ConfigurationRow], out: impl io::Write) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "class", "fibers", "specials_in_fibers", "mw_rank", "mw_group", "slack_iii_i2", "euler_residual",
        "generic_i2", "generic_i1",
    ])?;
    for r in rows {
        w.write_record([
            opt(&r.class),
            r.fibers_label(),
            r.specials_in_fibers.to_string(),
            r.mw_rank.to_string(),
            opt(&r.mw_group_label),
            r.slack_iii_i2.to_string(),
            r.euler_residual.to_string(),
            opt(&r.generic_i2),
            opt(&r.generic_i1),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn rows_text(mode: EnumerationMode, rows: &[ConfigurationRow]) -> String {
    let mut s = String::new();
    match mode {
        EnumerationMode::Infinite => {
            let _ = writeln!(s, "{:<6} {:<22} {:>6} {:>8}", "class", "reducible fibers", "2a+b", "MW rank");
            for r in rows {
                let _ = writeln!(
                    s,
                    "{:<6} {:<22} {:>6} {:>8}",
                    opt(&r.class),
                    format!("{} aII bI_1", r.fibers_label()),
                    r.euler_residual,
                    r.mw_rank
                );
            }
        }
        EnumerationMode::Finite => {
            let _ = writeln!(s, "{:<6} {:<20} {:<10} {:>7} {:>16}", "class", "fibers", "MW", "iii+i2", "3iii+2i2+2ii+i1");
            for r in rows {
                let _ = writeln!(
                    s,
                    "{:<6} {:<20} {:<10} {:>7} {:>16}",
                    opt(&r.class),
                    r.fibers_label(),
                    opt(&r.mw_group_label),
                    r.slack_iii_i2,
                    r.euler_residual
                );
            }
        }
        EnumerationMode::Generic => {
            let _ = writeln!(s, "{:<6} {:<20} {:<10} {:>4} {:>4}  notes", "class", "fibers", "MW", "i2", "i1");
            for r in rows {
                let _ = writeln!(
                    s,
                    "{:<6} {:<20} {:<10} {:>4} {:>4}  {}",
                    opt(&r.class),
                    r.fibers_label(),
                    opt(&r.mw_group_label),
                    opt(&r.generic_i2),
                    opt(&r.generic_i1),
                    r.notes.join("; ")
                );
            }
        }
    }
    let _ = writeln!(s, "{} rows", rows.len());
    s
}

const SHOWN: usize = 8;

pub fn audit_text(a: &AuditReport) -> String {
    let mut s = String::new();
    let mode = match a.mode {
        EnumerationMode::Infinite => "infinite",
        _ => "finite",
    };
    let _ = writeln!(
        s,
        "{mode} mode: {} candidates, {} pass the arithmetic stage, {} survive (overshoot {})",
        a.universe,
        a.arithmetic_pass,
        a.survivors.len(),
        a.overshoot
    );
    for r in &a.rules {
        let _ = writeln!(s, "  {} [{}] killed {}, passed {}", r.id, r.stage, r.killed.len(), r.passed);
        let _ = writeln!(s, "    {}", r.justification);
        for k in r.killed.iter().take(SHOWN) {
            let _ = writeln!(s, "    - {k}");
        }
        if r.killed.len() > SHOWN {
            let _ = writeln!(s, "    ... {} more", r.killed.len() - SHOWN);
        }
    }
    let _ = writeln!(s, "  survivors: {}", a.survivors.join(", "));
    s
}

pub fn tables_text(rep: &TablesReport) -> String {
    let mut s = String::new();
    for t in &rep.tables {
        let _ = writeln!(s, "== {} ==", t.name);
        let _ = writeln!(s, "{:<6} {:<16} {:<22} {:<22} status", "class", "column", "reference", "computed");
        for r in &t.rows {
            for c in &r.cells {
                let _ = writeln!(s, "{:<6} {:<16} {:<22} {:<22} {}", r.class, c.column, c.reference, c.computed, c.status);
            }
        }
        for u in &t.unmatched {
            let _ = writeln!(s, "FAIL   {u}");
        }
        let _ = writeln!(s);
    }
    let _ = writeln!(s, "{}", if rep.passed() { "PASS" } else { "FAIL" });
    s
}

pub fn report_text(r: &FibrationReport) -> String {
    let mut s = String::new();
    let mode = match r.mode {
        Mode::Infinite => "infinite (all special curves vertical)",
        Mode::Finite => "finite (some special curve horizontal)",
    };
    let _ = writeln!(s, "fiber class: {}", r.fiber_class);
    let _ = writeln!(s, "mode: {mode}");
    for f in &r.fibers {
        let names: Vec<String> = f
            .components
            .iter()
            .map(|c| if c.multiplicity == 1 { c.name.clone() } else { format!("{}{}", c.multiplicity, c.name) })
            .collect();
        let mut line = format!("  {:<8} {}", f.label.to_string(), names.join(" + "));
        if let Some(c) = &f.completion {
            let _ = write!(line, "  (+{} ordinary components)", c.added.len());
        }
        if f.given {
            line.push_str("  [given]");
        }
        let _ = writeln!(s, "{line}");
    }
    let _ = writeln!(s, "sections: {}", list(&r.sections));
    let (special, other): (Vec<_>, Vec<_>) = r.multisections.iter().partition(|m| is_special(&m.curve));
    let ms: Vec<String> = special.iter().map(|m| format!("{} (degree {})", m.curve, m.degree)).collect();
    let _ = writeln!(s, "special multisections: {}", list(&ms));
    let _ = writeln!(s, "other horizontal catalog curves: {}", other.len());
    let _ = writeln!(s, "vertical specials: {}", list(&r.vertical_specials));
    let _ = writeln!(s, "horizontal specials: {}", list(&r.horizontal_specials));
    let _ = writeln!(s, "MW rank: {}", r.mw_rank);
    if let Some(g) = &r.mw_group {
        let _ = writeln!(s, "MW group: {g}");
    }
    let _ = writeln!(s, "Σ(m-1) = {}, iii+i2 = {}, identified I_2/III = {}", r.rank_sum, r.small_fiber_budget, r.small_fibers_identified);
    let _ = writeln!(s, "Σe = {}, residual = {}", r.euler_used, r.euler_residual);
    for n in &r.notes {
        let _ = writeln!(s, "note: {n}");
    }
    for w in &r.warnings {
        let _ = writeln!(s, "warning: {w}");
    }
    s
}

fn is_special(name: &str) -> bool {
    name.parse::<CurveName>().is_ok_and(|n| n.kind().is_special())
}

fn list(v: &[String]) -> String {
    if v.is_empty() {
        "-".into()
    } else {
        v.join(", ")
    }
}

pub fn verification_text(v: &Verification) -> String {
    let mut s = format!("== case {} ==\n", v.case);
    s.push_str(&report_text(&v.report));
    for c in &v.checks {
        let _ = writeln!(s, "{:<8} {}: expected {}, computed {}", c.status.to_string(), c.claim, c.expected, c.computed);
    }
    let _ = writeln!(s, "{}\n", if v.passed() { "PASS" } else { "FAIL" });
    s
}
