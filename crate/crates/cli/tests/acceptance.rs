//! One line per acceptance criterion. Exits non-zero if any fails.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use bigon_cli::report::verify_t;
use bigon_core::assembly::{
    build_mt, build_surface_s, euler_of_assembly, expected_word, surface_pair, Side,
};
use bigon_core::cutmodel::{
    build_standard_cut_model, enumerate_completions, max_extension, Extension,
};
use bigon_core::fatgraph::{gcd, Sign};
use bigon_core::freegroup::{is_primitive, nielsen_orbit, Letter, Word};
use bigon_core::pairing::{check_no_double_parallel, check_parity, GraphPair};
use bigon_core::smallcases::{build_annulus_case, corr2_scan, corr2_t4_contradiction};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn dichotomy() -> Outcome {
    for t in 4..=32usize {
        for alpha in (1..t).filter(|&a| gcd(t as u64, a as u64) == 1) {
            let m = build_standard_cut_model(t, alpha).map_err(|e| e.to_string())?;
            let cs = enumerate_completions(&m).map_err(|e| e.to_string())?;
            let rigid = cs.iter().filter(|c| !c.slidable).count();
            let want = if alpha == 1 || alpha == t - 1 { (2, 1) } else { (1, 0) };
            ensure((cs.len(), rigid) == want, || {
                format!("t={t} alpha={alpha}: {} completions, {rigid} non-slidable", cs.len())
            })?;
        }
    }
    Ok(())
}

fn extension_bound() -> Outcome {
    for t in 4..=32usize {
        let m = build_standard_cut_model(t, 1).map_err(|e| e.to_string())?;
        let cs = enumerate_completions(&m).map_err(|e| e.to_string())?;
        let c = cs.iter().find(|c| !c.slidable).ok_or(format!("t={t}: no non-slidable completion"))?;
        let ext = max_extension(c).extension;
        ensure(ext == Extension::Exact(t + 2), || format!("t={t}: {ext:?}"))?;
    }
    let certs = corr2_t4_contradiction().map_err(|e| e.to_string())?;
    ensure(certs.iter().all(|c| c.is_empty()), || format!("t=4 placements remain: {certs:?}"))
}

fn assembly_suite() -> Outcome {
    for t in 4..=64usize {
        let r = verify_t(t);
        let failed: Vec<&str> = r.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
        ensure(r.pass && r.checks.len() == 9, || format!("t={t}: failed {failed:?}"))?;
        let s = build_surface_s(&build_mt(t).unwrap()).unwrap();
        let (v, e, f) = (s.boundary.len(), s.gts.edge_count(), s.faces.len());
        ensure((v, e, f) == (2, 3 * t, 3 * t - 2) && euler_of_assembly(&s) == 0, || {
            format!("t={t}: V,E,F = {v},{e},{f}")
        })?;
    }
    Ok(())
}

fn pairing_rules() -> Outcome {
    let mut pairs: Vec<(String, GraphPair)> = Vec::new();
    for t in 4..=64usize {
        let s = build_surface_s(&build_mt(t).unwrap()).unwrap();
        pairs.push((format!("t={t}"), surface_pair(&s)));
    }
    for t in [2, 3] {
        pairs.push((format!("annulus t={t}"), build_annulus_case(t).map_err(|e| e.to_string())?.pair));
    }
    for (name, p) in &pairs {
        ensure(check_parity(p).is_ok(), || format!("{name}: parity"))?;
        ensure(matches!(check_no_double_parallel(p), Ok(Ok(()))), || format!("{name}: double parallel"))?;
    }
    let p = &pairs[0].1;
    let e = p.g2.edge_ids().next().unwrap();
    let g2 = p.g2.with_signs(|x| if x.id == e { Sign::Negative } else { Sign::Positive });
    let q = GraphPair::new(p.g1.clone(), g2, p.edge_bijection.clone()).map_err(|e| e.to_string())?;
    ensure(check_parity(&q).is_err(), || "mutated pair passes parity".into())
}

fn reduced_words(max: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Letter>> = vec![vec![]];
    for _ in 0..max {
        let mut next = Vec::new();
        for w in &layer {
            for x in [1, -1, 2, -2] {
                if w.last() != Some(&-x) {
                    let mut v = w.clone();
                    v.push(x);
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().map(|v| Word::new(v)));
        layer = next;
    }
    out
}

fn primitivity() -> Outcome {
    for t in 4..=64usize {
        for side in [Side::B, Side::W] {
            let w = expected_word(t, side);
            ensure(!is_primitive(&w), || format!("t={t}: {w} reported primitive"))?;
        }
    }
    let orbit = nielsen_orbit(&"a".parse().unwrap(), 16);
    let words = reduced_words(8);
    for w in &words {
        let oracle = orbit.contains(&w.cyclic_normal_form());
        ensure(is_primitive(w) == oracle, || format!("{w}: whitehead {} oracle {oracle}", !oracle))?;
    }
    Ok(())
}

fn small_cases() -> Outcome {
    let two = build_annulus_case(2).map_err(|e| e.to_string())?;
    ensure(two.faces.iter().all(|f| f.length == 4 && f.scharlemann) && two.delta == 2, || {
        format!("t=2: {:?}, delta {}", two.faces, two.delta)
    })?;
    let three = build_annulus_case(3).map_err(|e| e.to_string())?;
    let lengths = three.pair.g2.faces().lengths();
    ensure(lengths == [3, 3, 6] && three.delta == 2, || format!("t=3: {lengths:?}, delta {}", three.delta))?;
    let sols = corr2_scan(4..=1000, 4, 6);
    ensure(sols == [(4, 4, 6)], || format!("scan: {sols:?}"))?;
    let seven = corr2_scan(4..=1000, 4, 7);
    ensure(seven.is_empty(), || format!("scan with delta >= 7: {seven:?}"))
}

fn read_all(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    let mut out = BTreeMap::new();
    for entry in fs::read_dir(dir).into_iter().flatten().flatten() {
        out.insert(entry.file_name().to_string_lossy().into_owned(), fs::read(entry.path()).unwrap_or_default());
    }
    out
}

fn determinism() -> Outcome {
    let base = std::env::temp_dir().join(format!("bigon-acceptance-{}", std::process::id()));
    let mut runs = Vec::new();
    for k in 0..2 {
        let dir = base.join(format!("run{k}"));
        let _ = fs::remove_dir_all(&dir);
        let out = Command::new(env!("CARGO_BIN_EXE_bigon"))
            .args(["verify", "--t-range", "4..32", "--out-dir"])
            .arg(&dir)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("run {k} exited with {}", out.status))?;
        runs.push((read_all(&dir.join("verify")), out.stdout));
    }
    let _ = fs::remove_dir_all(&base);
    ensure(!runs[0].0.is_empty(), || "no reports written".into())?;
    ensure(runs[0] == runs[1], || "reports differ between runs".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 completion dichotomy, t in 4..=32", dichotomy, Duration::from_secs(10)),
        ("2 extension bound t+2 and empty t=4 placement set", extension_bound, Duration::from_secs(5)),
        ("3 S-assembly suite, t in 4..=64", assembly_suite, Duration::from_secs(10)),
        ("4 parity and no-double-parallel", pairing_rules, Duration::from_secs(2)),
        ("5 primitivity certificates and exhaustive sweep", primitivity, Duration::from_secs(60)),
        ("6 small cases and degree scan", small_cases, Duration::from_secs(1)),
        ("7 byte-identical verify reports", determinism, Duration::from_secs(120)),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(took <= budget, || format!("took {took:.2?}, budget {budget:?}"))
        });
        match outcome {
            Ok(()) => println!("PASS  {name} ({took:.2?})"),
            Err(e) => {
                failed += 1;
                println!("FAIL  {name} ({took:.2?}): {e}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
