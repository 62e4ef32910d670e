//! CSV and JSON writers. Numbers use the shortest decimal form that
//! round-trips through binary64.

use std::io::Write;

use dce_core::VerificationRecord;

use crate::config::Format;
use crate::error::Result;
use crate::table::TableRow;

pub const TABLE_HEADER: [&str; 9] = ["n", "kappa", "p", "A", "B", "C", "eps", "nu", "units"];

/// Shortest round-trip representation of `x`.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:?}")
}

fn value(v: Option<f64>) -> String {
    v.map_or_else(|| "divergent".to_string(), fmt_f64)
}

pub fn write_table<W: Write>(w: W, rows: &[TableRow], format: Format) -> Result<()> {
    match format {
        Format::Csv => {
            let mut out = csv::Writer::from_writer(w);
            out.write_record(TABLE_HEADER)?;
            for r in rows {
                out.write_record([
                    r.n.to_string(),
                    r.kappa.to_string(),
                    r.p.to_string(),
                    value(r.a),
                    value(r.b),
                    value(r.c),
                    fmt_f64(r.eps),
                    fmt_f64(r.nu),
                    r.units.to_string(),
                ])?;
            }
            out.flush()?;
        }
        Format::Json => write_json(w, rows)?,
    }
    Ok(())
}

pub fn write_records<W: Write>(w: W, records: &[VerificationRecord], format: Format) -> Result<()> {
    match format {
        Format::Csv => {
            let mut out = csv::Writer::from_writer(w);
            out.write_record([
                "identity_name",
                "anchor",
                "context",
                "lhs",
                "rhs",
                "abs_err",
                "rel_err",
                "tol",
                "pass",
                "ill_conditioned",
            ])?;
            for r in records {
                out.write_record([
                    r.identity_name.clone(),
                    r.anchor.clone(),
                    r.context.clone(),
                    fmt_f64(r.lhs),
                    fmt_f64(r.rhs),
                    fmt_f64(r.abs_err),
                    fmt_f64(r.rel_err),
                    fmt_f64(r.tol),
                    r.pass.to_string(),
                    r.ill_conditioned.to_string(),
                ])?;
            }
            out.flush()?;
        }
        Format::Json => write_json(w, records)?,
    }
    Ok(())
}

fn write_json<W: Write, T: serde::Serialize + ?Sized>(mut w: W, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    Ok(())
}
