//! Acceptance suite: one line per criterion, nonzero exit on any failure.

mod common;

use std::sync::Arc;
use std::time::Instant;

use common::*;
use monocat::algebra::presets;
use monocat::cluster::{search_n_cluster_tilting, ClusterSubcat};
use monocat::functcat::FunctorMod;
use monocat::linalg::Matrix;
use monocat::modcat::{is_self_injective, Caps, Catalog};
use monocat::paperfun::{
    enumerate_epi_pairs, enumerate_mono_pairs, is_k, is_split_epi, is_split_mono, is_u, Instance, PairCaps,
};
use monocat::theorems::{certificate, check_fullness, run_all, run_selected, CheckReport, SuiteConfig};
use rand::Rng;

/// Caps of the exhaustive checks: at most two indecomposable summands, total dimension at most 16.
const CAPS: PairCaps = PairCaps { mult_cap: 2, max_dim: 16 };
const SEED: u64 = 0x5eed;
const RANDOM_CASES: u64 = 64;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn a3r2() -> Instance {
    Instance::new(&a3r2_m3())
}

fn ppa2_all() -> Vec<Instance> {
    ppa2_hits().iter().map(Instance::new).collect()
}

fn name_set(m: &ClusterSubcat) -> Vec<String> {
    let mut v = m.generator_names();
    v.sort();
    v
}

fn ac1_search() -> Outcome {
    let a = search_n_cluster_tilting(&catalog(&presets::a3r2()), 2).map_err(|e| e.to_string())?;
    if a.len() != 1 || name_set(&a[0]) != ["P1", "P2", "S1", "S3"] {
        return Err(format!("A3R2: {:?}", a.iter().map(name_set).collect::<Vec<_>>()));
    }
    let alg = presets::ppa2();
    let p = search_n_cluster_tilting(&catalog(&alg), 2).map_err(|e| e.to_string())?;
    let nz = p.iter().map(|m| m.is_nz().unwrap_or(false)).collect::<Vec<_>>();
    if p.len() != 2 || nz.iter().any(|b| !b) || !is_self_injective(&alg) {
        return Err(format!("PPA2: {} hits, nZ {nz:?}", p.len()));
    }
    let k = search_n_cluster_tilting(&catalog(&presets::truncated_polynomial(2)), 2).map_err(|e| e.to_string())?;
    if !k.is_empty() {
        return Err(format!("k[x]/(x²): {} hits", k.len()));
    }
    Ok("A3R2 1 hit {P1,P2,S1,S3}; PPA2 2 nZ hits; k[x]/(x²) none".into())
}

fn ac2_kernels() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    let mut instances = vec![a3r2()];
    instances.extend(ppa2_all());
    for ins in &instances {
        let m = ins.subcat();
        let mc = ins.morphism_cat();
        for x in enumerate_mono_pairs(m, CAPS).map_err(|e| e.to_string())? {
            checked += 1;
            let e = |e: monocat::Error| e.to_string();
            if ins.psi(&x).map_err(e)?.is_zero() != is_split_mono(&x.f) {
                bad.push("Ψ");
            }
            if ins.upsilon(&x).map_err(e)?.is_zero() != is_k(mc, &x.f).map_err(e)? {
                bad.push("Υ");
            }
            if ins.is_self_injective() && ins.phi(&x).map_err(e)?.is_zero() != is_u(mc, &x.f).map_err(e)? {
                bad.push("Φ");
            }
        }
        for x in enumerate_epi_pairs(m, CAPS).map_err(|e| e.to_string())? {
            checked += 1;
            if ins.theta(&x).map_err(|e| e.to_string())?.is_zero() != is_split_epi(&x.f) {
                bad.push("Θ");
            }
        }
    }
    if bad.is_empty() {
        Ok(format!("{checked} objects, 0 counterexamples"))
    } else {
        Err(format!("counterexamples for {bad:?}"))
    }
}

fn stable_inds(ins: &Instance) -> Result<Vec<FunctorMod>, String> {
    ins.indecomposable_functors(&ins.stable().map_err(|e| e.to_string())?, Caps::default()).map_err(|e| e.to_string())
}

fn ac3_denseness() -> Outcome {
    let mut count = 0;
    let mut instances = vec![a3r2()];
    instances.extend(ppa2_all());
    for ins in &instances {
        for f in stable_inds(ins)? {
            let psi = ins.psi(&ins.psi_preimage(&f).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            let theta = ins.theta(&ins.theta_preimage(&f).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            let mut ok = psi.is_isomorphic(&f).unwrap_or(false) && theta.is_isomorphic(&f).unwrap_or(false);
            if ins.is_self_injective() {
                let phi = ins.phi(&ins.phi_preimage(&f).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
                ok &= phi.is_isomorphic(&f).unwrap_or(false);
            }
            if !ok {
                return Err(format!("preimage mismatch for values {:?}", f.value_dims()));
            }
            count += 1;
        }
    }
    if count == 0 {
        return Err("no indecomposable Γ̲-modules".into());
    }
    Ok(format!("{count} indecomposable Γ̲-modules hit exactly"))
}

fn ac4_fullness() -> Outcome {
    let mut rep = CheckReport::new("fullness", "acceptance");
    let mut instances = vec![a3r2()];
    instances.extend(ppa2_all());
    for ins in &instances {
        let m = ins.subcat();
        let mc = ins.morphism_cat();
        let monos = enumerate_mono_pairs(m, CAPS).map_err(|e| e.to_string())?;
        let epis = enumerate_epi_pairs(m, CAPS).map_err(|e| e.to_string())?;
        let name = |f: &monocat::modcat::ModuleHom| format!("{:?}->{:?}", f.source().dims(), f.target().dims());
        let sq = |x: &monocat::paperfun::MonoPair, y: &monocat::paperfun::MonoPair| mc.hom_basis(&x.f, &y.f);
        let run = |rep: &mut CheckReport| -> monocat::Result<()> {
            check_fullness(rep, &monos, sq, |x| ins.psi(x), |x, y, a| ins.psi_map(x, y, a), |x| name(&x.f))?;
            check_fullness(rep, &monos, sq, |x| ins.upsilon(x), |x, y, a| ins.upsilon_map(x, y, a), |x| name(&x.f))?;
            if ins.is_self_injective() {
                check_fullness(rep, &monos, sq, |x| ins.phi(x), |x, y, a| ins.phi_map(x, y, a), |x| name(&x.f))?;
            }
            check_fullness(
                rep,
                &epis,
                |x, y| mc.hom_basis(&x.f, &y.f),
                |x| ins.theta(x),
                |x, y, a| ins.theta_map(x, y, a),
                |x| name(&x.f),
            )
        };
        run(&mut rep).map_err(|e| e.to_string())?;
    }
    let pairs = rep.stat("fullness_pairs").unwrap_or(0);
    if rep.is_pass() {
        Ok(format!("{pairs} pairs with nonzero Nat, all surjective"))
    } else {
        Err(rep.witnesses.join("; "))
    }
}

fn row_passes(ins: &Instance, ids: &[&str]) -> Result<Vec<CheckReport>, String> {
    let reports = run_selected(ids, ins, SuiteConfig::default()).map_err(|e| e.to_string())?;
    for r in &reports {
        if !r.is_pass() {
            return Err(format!("{} {:?}: {}", r.check_id, r.status, r.witnesses.join("; ")));
        }
    }
    Ok(reports)
}

fn ac5_comparison() -> Outcome {
    let mut hits = 0;
    for ins in ppa2_all() {
        row_passes(&ins, &["comparison"])?;
        hits += 1;
    }
    let mut sweep = 0;
    for m in 1..=4 {
        for l in 2..=6 {
            let alg = presets::cyclic_nakayama(m, l);
            if !is_self_injective(&alg) {
                continue;
            }
            let cat = Arc::new(Catalog::enumerate(&alg, Caps::default()).map_err(|e| e.to_string())?);
            for n in [2, 3] {
                for sub in search_n_cluster_tilting(&cat, n).map_err(|e| e.to_string())? {
                    if !sub.is_nz().map_err(|e| e.to_string())? {
                        continue;
                    }
                    row_passes(&Instance::new(&sub), &["comparison"])
                        .map_err(|e| format!("Λ({m},{l}) n={n}: {e}"))?;
                    sweep += 1;
                }
            }
        }
    }
    if sweep == 0 {
        return Err("the Nakayama sweep found no nZ hit".into());
    }
    Ok(format!("PPA2 {hits} instances; Nakayama sweep {sweep} nZ hits, all pass"))
}

fn ac6_defects() -> Outcome {
    let reports = row_passes(&a3r2(), &["defect_lemma", "sigma_defects"])?;
    let proj = reports[0].stat("projective_sequences").unwrap_or(0);
    let seqs = reports[1].stat("sequences").unwrap_or(0);
    if proj == 0 {
        return Err("no sequence with projective Mⁿ".into());
    }
    Ok(format!("{seqs} sequences Σ(δ*) ≅ δ_*; {proj} with projective Mⁿ"))
}

fn tau_name(ins: &Instance, x: &str) -> Result<(String, String), String> {
    let cat = ins.subcat().catalog();
    let s = cat.module(cat.resolve(x).ok_or("unknown module")?);
    let name = |m: &monocat::modcat::FdModule| cat.index_of(m).map(|i| cat.name(i).to_string()).unwrap_or_default();
    let direct = ins.tau_n_direct(s).map_err(|e| e.to_string())?;
    let via = ins.tau_n_via_sigma(s).map_err(|e| e.to_string())?;
    Ok((name(&direct), name(&via)))
}

fn ac7_hilton_rees_tau() -> Outcome {
    let a = a3r2();
    let ppa = ppa2_all().into_iter().find(|i| i.subcat().generator_names().iter().any(|n| n == "S1"));
    let ppa = ppa.ok_or("no PPA2 instance contains S1")?;
    let mut literal = 0;
    for ins in [&a, &ppa] {
        let reports = row_passes(ins, &["hilton_rees", "tau_n_thm"])?;
        literal += reports[0].stat("literal_form_mismatches").unwrap_or(0);
    }
    if literal > 0 {
        return Err(format!("dim M̲(X, Y) differs from dim Nat on {literal} pairs"));
    }
    let ta = tau_name(&a, "S1")?;
    let tp = tau_name(&ppa, "S1")?;
    if ta != ("S3".into(), "S3".into()) || tp != ("S1".into(), "S1".into()) {
        return Err(format!("τ₂(S1): A3R2 {ta:?}, PPA2 {tp:?}"));
    }
    Ok("Hilton–Rees dims match; τ₂(S1)=S3 on A3R2, S1 on PPA2; direct ≡ via Σ".into())
}

fn ac8_direct_summand() -> Outcome {
    let mut summands = 0;
    let mut instances = vec![a3r2()];
    instances.extend(ppa2_all());
    for ins in &instances {
        let r = row_passes(ins, &["direct_summand"])?;
        summands += r[0].stat("summands").unwrap_or(0);
    }
    Ok(format!("{summands} summands of Ext²(A, -) matched"))
}

fn ac9_determinism() -> Outcome {
    let spec = presets::preset_spec("PPA2").ok_or("preset")?;
    let ins = ppa2_all().remove(0);
    let json = || {
        run_all(&ins, SuiteConfig::default()).map(|r| certificate(&spec, &ins, r).to_json()).map_err(|e| e.to_string())
    };
    let (one, two) = (json()?, json()?);
    if one != two {
        return Err("certificates differ".into());
    }
    Ok(format!("two runs, {} identical bytes", one.len()))
}

fn ac10_invariants() -> Outcome {
    let mut r = rng(SEED);
    let algs = anchors();
    let subs = [a3r2_m3(), ppa2_hits().remove(0)];
    for case in 0..RANDOM_CASES {
        let p = [2u32, 3, 5, 7][case as usize % 4];
        let f = monocat::linalg::FieldPrime::new(p).map_err(|e| e.to_string())?;
        let (rows, cols, k) = (r.gen_range(1..6), r.gen_range(1..6), r.gen_range(1..6));
        let mut m = |a: usize, b: usize| {
            let e: Vec<u32> = (0..a * b).map(|_| r.gen_range(0..p)).collect();
            Matrix::from_fn(f, a, b, |i, j| e[i * b + j])
        };
        let (a, b, y, sq) = (m(rows, cols), m(cols, k), m(cols, 1), m(rows, rows));
        check_linalg(&a, &b, &y).map_err(|e| format!("linalg case {case}: {e}"))?;
        check_linalg(&sq, &sq, &m(rows, 1)).map_err(|e| format!("linalg case {case}: {e}"))?;
        let alg = &algs[case as usize % algs.len()];
        let x = random_module(alg, &mut r);
        check_krull_schmidt(&x).map_err(|e| format!("Krull–Schmidt case {case}: {e}"))?;
        check_translate(&x).map_err(|e| format!("τ⁻τ case {case}: {e}"))?;
        check_recollement(&subs[case as usize % 2], r.gen()).map_err(|e| format!("recollement case {case}: {e}"))?;
    }
    Ok(format!("{RANDOM_CASES} seeded cases × 4 invariants"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("AC1 anchor discovery", ac1_search),
        ("AC2 kernel characterizations", ac2_kernels),
        ("AC3 denseness via preimages", ac3_denseness),
        ("AC4 fullness", ac4_fullness),
        ("AC5 comparison theorem", ac5_comparison),
        ("AC6 defects and Σ", ac6_defects),
        ("AC7 Hilton–Rees and τₙ", ac7_hilton_rees_tau),
        ("AC8 direct-summand theorem", ac8_direct_summand),
        ("AC9 determinism", ac9_determinism),
        ("AC10 standing invariants", ac10_invariants),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (name, run) in criteria {
        let t = Instant::now();
        let outcome = run();
        let tag = if outcome.is_ok() { "PASS" } else { "FAIL" };
        let detail = outcome.unwrap_or_else(|e| e);
        println!("[{tag}] {name}: {detail} ({:.2?})", t.elapsed());
        failed += usize::from(tag == "FAIL");
    }
    let total = start.elapsed();
    println!("acceptance: {} of 10 passed in {total:.2?}", 10 - failed);
    if failed > 0 || total.as_secs() >= 60 {
        std::process::exit(1);
    }
}
