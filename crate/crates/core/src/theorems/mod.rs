//! Verification suite: one checker per statement, run over an instance
//! `(Λ, n, M)` and collected into a deterministic JSON certificate.

mod context;
mod ext_rows;
mod functor_rows;
mod report;

use std::time::Instant;

pub use context::{check_fullness, span_rank, Suite, SuiteConfig};
pub use report::{spec_hash, Certificate, CheckReport, CheckStatus, Summary, SCHEMA_VERSION};

use crate::error::{Error, Result};
use crate::paperfun::Instance;

/// The check rows, in report order.
pub const CHECK_IDS: [&str; 14] = [
    "yoneda_equiv",
    "upsilon_suite",
    "phi_suite",
    "psi_suite",
    "theta_suite",
    "equiv_chain",
    "comparison",
    "defect_lemma",
    "sigma_defects",
    "hilton_rees",
    "direct_summand",
    "tau_n_thm",
    "prop_2_10_counts",
    "finite_type",
];

fn dispatch(id: &str, s: &Suite) -> Result<CheckReport> {
    match id {
        "yoneda_equiv" => functor_rows::yoneda_equiv(s),
        "upsilon_suite" => functor_rows::upsilon_suite(s),
        "phi_suite" => functor_rows::phi_suite(s),
        "psi_suite" => functor_rows::psi_suite(s),
        "theta_suite" => functor_rows::theta_suite(s),
        "equiv_chain" => functor_rows::equiv_chain(s),
        "comparison" => functor_rows::comparison(s),
        "defect_lemma" => ext_rows::defect_lemma(s),
        "sigma_defects" => ext_rows::sigma_defects(s),
        "hilton_rees" => ext_rows::hilton_rees(s),
        "direct_summand" => ext_rows::direct_summand(s),
        "tau_n_thm" => ext_rows::tau_n_thm(s),
        "prop_2_10_counts" => ext_rows::prop_2_10_counts(s),
        "finite_type" => ext_rows::finite_type(s),
        _ => Err(Error::Input(format!("unknown check `{id}`"))),
    }
}

/// Whether `M` is certified n-cluster tilting; the reason otherwise.
fn certification(s: &Suite) -> Result<Option<String>> {
    let cert = s.ins.subcat().certify()?;
    Ok((!cert.positive).then(|| {
        format!("M is not n-cluster tilting ({})", cert.violation.unwrap_or_default())
    }))
}

fn run_one(id: &str, s: &Suite, gate: &Option<String>) -> CheckReport {
    if let Some(reason) = gate {
        return CheckReport::skipped(id, &s.label, reason.clone());
    }
    let start = Instant::now();
    let mut rep = match dispatch(id, s) {
        Ok(r) => r,
        Err(e) => {
            let mut r = s.report(id);
            r.fail(format!("error: {e}"));
            r
        }
    };
    rep.elapsed = start.elapsed();
    rep
}

/// Runs one row. Unknown ids are input errors.
pub fn run_check(id: &str, ins: &Instance, cfg: SuiteConfig) -> Result<CheckReport> {
    if !CHECK_IDS.contains(&id) {
        return Err(Error::Input(format!("unknown check `{id}`")));
    }
    let s = Suite::new(ins, cfg);
    let gate = certification(&s)?;
    Ok(run_one(id, &s, &gate))
}

/// Runs the selected rows (all when `ids` is empty) in table order, sharing populations.
pub fn run_selected(ids: &[&str], ins: &Instance, cfg: SuiteConfig) -> Result<Vec<CheckReport>> {
    if let Some(bad) = ids.iter().find(|id| !CHECK_IDS.contains(id)) {
        return Err(Error::Input(format!("unknown check `{bad}`")));
    }
    let s = Suite::new(ins, cfg);
    let gate = certification(&s)?;
    Ok(CHECK_IDS
        .iter()
        .filter(|id| ids.is_empty() || ids.contains(id))
        .map(|id| run_one(id, &s, &gate))
        .collect())
}

pub fn run_all(ins: &Instance, cfg: SuiteConfig) -> Result<Vec<CheckReport>> {
    run_selected(&[], ins, cfg)
}

/// Certificate for a run over the algebra given by `spec_text`.
pub fn certificate(spec_text: &str, ins: &Instance, reports: Vec<CheckReport>) -> Certificate {
    let m = ins.subcat();
    Certificate::new(spec_text, ins.base().field().p(), m.n(), m.generator_names(), reports)
}

#[cfg(test)]
mod tests;
