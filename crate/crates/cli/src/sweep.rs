use lissatoric::invariants::jones_polynomial_limited;
use lissatoric::oracle::{
    compare_up_to_mirror_limited, default_phase, default_samples, detect_braid_float,
    enumerate_braid,
};
use lissatoric::symbolic::{classify, lissajous_braid, Classification};
use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::{strand_limit, write_output, CliError, CliResult, SweepFormat};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    #[serde(rename = "N")]
    pub n: u64,
    pub q: u64,
    pub p: u64,
    pub d: u64,
    pub braid_len: usize,
    pub jones: String,
    pub flags: String,
    pub verify_status: String,
}

fn flags(c: &Classification) -> String {
    let mut f = Vec::new();
    if c.ribbon {
        f.push("ribbon".to_string());
    } else {
        f.push(format!("periodic{}", c.periodic_d));
    }
    if c.quasipositive_case {
        f.push("qp".into());
    }
    if c.amphicheiral {
        f.push("amph".into());
    }
    if let Some(t) = c.trivial_family {
        f.push(format!("trivial:{}", t.label()));
    }
    f.join(",")
}

fn row(n: u64, q: u64, p: u64, float: bool, limit: usize) -> SweepRow {
    // gcd conditions were filtered by the caller, so failures here are per-row findings
    let attempt = || -> lissatoric::Result<SweepRow> {
        let c = classify(n, q, p)?;
        let (oq, op) = c.params.oriented();
        let sym = lissajous_braid(n, q, p)?;
        let spec = default_phase(n, oq, op)?;
        let exact = enumerate_braid(n, oq, op, &spec)?;
        let mut status = compare_up_to_mirror_limited(&sym, &exact, limit)?.to_string();
        if float {
            let fl = detect_braid_float(
                n,
                oq,
                op,
                spec.phi.to_f64().unwrap_or(f64::NAN),
                spec.eta.to_f64().unwrap_or(f64::NAN),
                default_samples(n, oq),
            )?;
            status = format!(
                "{status}/{}",
                compare_up_to_mirror_limited(&exact, &fl, limit)?
            );
        }
        Ok(SweepRow {
            n,
            q,
            p,
            d: c.params.d,
            braid_len: sym.len(),
            jones: jones_polynomial_limited(&sym, limit)?.to_string(),
            flags: flags(&c),
            verify_status: status,
        })
    };
    attempt().unwrap_or_else(|e| SweepRow {
        n,
        q,
        p,
        d: q.gcd(&p),
        braid_len: 0,
        jones: "-".into(),
        flags: "-".into(),
        verify_status: format!("error: {e}"),
    })
}

pub fn to_tsv(rows: &[SweepRow]) -> String {
    let mut out = String::from("N\tq\tp\td\tbraid_len\tjones\tflags\tverify_status\n");
    for r in rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.n, r.q, r.p, r.d, r.braid_len, r.jones, r.flags, r.verify_status
        ));
    }
    out
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_sweep(
    n: u64,
    q: u64,
    p_min: u64,
    p_max: u64,
    out: Option<&std::path::Path>,
    format: SweepFormat,
    parallel: bool,
    float: bool,
) -> CliResult<()> {
    if n < 2 || q == 0 || n.gcd(&q) != 1 {
        return Err(CliError::Params(format!(
            "need N >= 2, q >= 1 and gcd(N,q) = 1, got N = {n}, q = {q}"
        )));
    }
    if p_min == 0 || p_min > p_max {
        return Err(CliError::Params(format!("bad p range {p_min}..={p_max}")));
    }
    let ps: Vec<u64> = (p_min..=p_max).filter(|p| n.gcd(p) == 1).collect();
    let skipped = (p_max - p_min + 1) as usize - ps.len();
    let limit = strand_limit();
    let rows: Vec<SweepRow> = if parallel {
        ps.par_iter().map(|&p| row(n, q, p, float, limit)).collect()
    } else {
        ps.iter().map(|&p| row(n, q, p, float, limit)).collect()
    };
    eprintln!("{} rows, {skipped} skipped (gcd(N,p) != 1)", rows.len());
    let text = match format {
        SweepFormat::Tsv => to_tsv(&rows),
        SweepFormat::Json => serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n",
    };
    write_output(out, &text)?;
    if rows.iter().any(|r| r.verify_status.contains("Distinct")) {
        return Err(CliError::Verify("a row verified as Distinct".into()));
    }
    Ok(())
}
