use std::sync::Arc;

use super::*;
use crate::algebra::presets;
use crate::cluster::{search_n_cluster_tilting, ClusterSubcat};
use crate::modcat::{Caps, Catalog};

fn a3r2() -> Instance {
    let cat = Arc::new(Catalog::enumerate(&presets::a3r2(), Caps::default()).unwrap());
    Instance::new(&ClusterSubcat::from_names(cat, &["P1", "P2", "S1", "S3"], 2).unwrap())
}

fn ppa2() -> Instance {
    let cat = Arc::new(Catalog::enumerate(&presets::ppa2(), Caps::default()).unwrap());
    Instance::new(&search_n_cluster_tilting(&cat, 2).unwrap().remove(0))
}

fn show(reports: &[CheckReport]) -> String {
    reports.iter().map(|r| format!("{} {:?} {:?} {:?}\n", r.check_id, r.status, r.stats, r.witnesses)).collect()
}

#[test]
fn a3r2_suite() {
    let reports = run_all(&a3r2(), SuiteConfig::default()).unwrap();
    assert_eq!(reports.len(), CHECK_IDS.len());
    for r in &reports {
        match r.check_id.as_str() {
            "phi_suite" | "comparison" => assert!(matches!(r.status, CheckStatus::Skipped { .. }), "{}", show(&reports)),
            _ => assert!(r.is_pass(), "{}", show(&reports)),
        }
    }
}

#[test]
fn ppa2_suite() {
    let reports = run_all(&ppa2(), SuiteConfig::default()).unwrap();
    assert!(reports.iter().all(CheckReport::is_pass), "{}", show(&reports));
}

#[test]
fn deep_check_on_ppa2() {
    let cfg = SuiteConfig { deep_check: true, ..SuiteConfig::default() };
    let reports = run_selected(&["phi_suite", "psi_suite"], &ppa2(), cfg).unwrap();
    assert!(reports.iter().all(CheckReport::is_pass), "{}", show(&reports));
    assert!(reports[0].stat("objectivity_pairs").unwrap() > 0);
}

#[test]
fn uncertified_subcategory_skips_everything() {
    let cat = Arc::new(Catalog::enumerate(&presets::a3r2(), Caps::default()).unwrap());
    let ins = Instance::new(&ClusterSubcat::from_names(cat, &["P1", "P2", "S3"], 2).unwrap());
    let reports = run_all(&ins, SuiteConfig::default()).unwrap();
    assert!(reports.iter().all(|r| matches!(r.status, CheckStatus::Skipped { .. })));
}

#[test]
fn unknown_check_is_input_error() {
    assert!(run_check("nope", &a3r2(), SuiteConfig::default()).is_err());
}

#[test]
fn certificate_is_deterministic() {
    let spec = presets::preset_spec("a3r2").unwrap();
    let one = certificate(&spec, &a3r2(), run_selected(&["psi_suite", "tau_n_thm"], &a3r2(), SuiteConfig::default()).unwrap());
    let two = certificate(&spec, &a3r2(), run_selected(&["psi_suite", "tau_n_thm"], &a3r2(), SuiteConfig::default()).unwrap());
    assert_eq!(one.to_json(), two.to_json());
    assert_eq!(one.algebra_spec_hash, spec_hash(&spec));
    assert_eq!(one.summary.pass, 2);
}
