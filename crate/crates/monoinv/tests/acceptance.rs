//! End-to-end acceptance run over the shipped corpus. Prints one line per
//! criterion and exits nonzero if any fails.

#[path = "../../core/tests/support/oracle.rs"]
mod oracle;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::Rng;

use monoinv::cli::default_corpus_dir;
use monoinv::corpus_file::read_dir;
use monoinv::report::{gap_summary, slice_summary, trace_summary, RunOptions};
use monoinv_core::corpus::{general_points, CorpusEntry};
use monoinv_core::gin::SeedStream;
use monoinv_core::groebner::{ideal_quotient, intersect, saturate};
use monoinv_core::{
    connectedness_report, gin, variety_invariants, GinConfig, Ideal, InvariantTable, LinearChange, Monomial,
    MonomialIdeal, Polynomial, PrimeField, Ring,
};
use oracle::{monomials, sparse, Oracle, Sparse};

const PRIME: u32 = 32003;
const SAMPLES: usize = 5;
const ENTRY_BUDGET: Duration = Duration::from_secs(10);
const SLICE_FORMS: usize = 3;
const SLICE_P_MAX: u32 = 3;
const TRACE_LEVEL: u32 = 2;
const POINT_COUNTS: std::ops::RangeInclusive<usize> = 3..=12;
const POINT_SEEDS: u64 = 10;
const ORACLE_INSTANCES: u64 = 20;
const ORACLE_DEGREE: u32 = 5;
/// Exponent used for saturation in the oracle; far above what the small
/// random instances need.
const ORACLE_SAT_POWER: u32 = 8;

type Outcome = Result<String, String>;

fn field() -> PrimeField {
    PrimeField::new(PRIME).unwrap()
}

fn gens(ideal: &Ideal) -> Vec<Sparse> {
    ideal.generators().iter().map(sparse).collect()
}

fn opts() -> RunOptions {
    RunOptions { slice_forms: SLICE_FORMS, slice_p_max: SLICE_P_MAX, trace_level: TRACE_LEVEL, ..RunOptions::default() }
}

fn config(entry: &CorpusEntry) -> GinConfig {
    GinConfig::new(0, 2).unwrap().derive(&entry.name, 0)
}

fn fail_list(failed: Vec<String>, ok: String) -> Outcome {
    if failed.is_empty() {
        Ok(ok)
    } else {
        Err(failed.join("; "))
    }
}

/// `lambda_{i+1} + 2 >= lambda_i >= lambda_{i+1} + 1`, checked from scratch.
fn profile_connected(lambdas: &[u32]) -> bool {
    lambdas.windows(2).all(|w| w[1] + 2 >= w[0] && w[0] > w[1])
}

fn all_rows_connected(table: &InvariantTable, level: Option<u32>) -> bool {
    table
        .entries
        .iter()
        .filter(|e| level.is_none_or(|l| e.p_hat.0.iter().sum::<u32>() <= l))
        .all(|e| profile_connected(&e.profile.lambdas))
}

fn galligo(entries: &[CorpusEntry]) -> Outcome {
    let mut failed = Vec::new();
    let mut slowest = Duration::ZERO;
    for e in entries {
        let start = Instant::now();
        let r = e.ideal.ring();
        let stream = SeedStream::new(0).child(&e.name, 0);
        let samples: Vec<MonomialIdeal> = (0..SAMPLES as u64)
            .map(|k| {
                let g = LinearChange::random(r, &mut stream.child("sample", k).rng());
                e.ideal.apply_change(&g).unwrap().initial_ideal()
            })
            .collect();
        let voted = gin(&e.ideal, &config(e)).map(|g| g.gin);
        let same = samples.windows(2).all(|w| w[0] == w[1]) && voted.as_ref().is_ok_and(|v| *v == samples[0]);
        let m = &samples[0];
        let elapsed = start.elapsed();
        slowest = slowest.max(elapsed);
        if !same || !m.is_borel_fixed() || !m.is_saturated() || elapsed > ENTRY_BUDGET {
            failed.push(format!("{} (agree={same} borel={} free={} {elapsed:?})", e.name, m.is_borel_fixed(), m.is_saturated()));
        }
    }
    fail_list(failed, format!("{} entries, {SAMPLES} samples each, slowest {slowest:.2?}", entries.len()))
}

fn hilbert_preservation(entries: &[CorpusEntry]) -> Outcome {
    let mut failed = Vec::new();
    for e in entries {
        let n = e.ideal.ring().nvars();
        let g = gin(&e.ideal, &config(e)).map_err(|err| format!("{}: {err}", e.name))?.gin;
        let dmax = g.max_degree().unwrap_or(0) + n as u32;
        let expected = Oracle::new(field(), n).hilbert(&gens(&e.ideal), dmax);
        if g.hilbert_function(dmax).values != expected {
            failed.push(e.name.clone());
        }
    }
    fail_list(failed, format!("{} entries, exact up to max generator degree + n + 1", entries.len()))
}

fn slicing(entries: &[CorpusEntry]) -> Outcome {
    let mut failed = Vec::new();
    let mut checks = 0;
    for e in entries {
        let cfg = config(e);
        let g = gin(&e.ideal, &cfg).map_err(|err| format!("{}: {err}", e.name))?.gin;
        let s = slice_summary(&e.ideal, &g, &opts(), &cfg.derive("slice", 0)).map_err(|err| format!("{}: {err}", e.name))?;
        checks += s.checks.len();
        if !s.passed || s.checks.len() != SLICE_FORMS * (SLICE_P_MAX as usize + 1) {
            failed.push(e.name.clone());
        }
    }
    fail_list(failed, format!("{checks} identities, p = 0..={SLICE_P_MAX}, {SLICE_FORMS} forms per entry"))
}

fn gap_truncation(entries: &[CorpusEntry]) -> Outcome {
    let mut failed = Vec::new();
    let mut vacuous = Vec::new();
    let mut checks = 0;
    for e in entries {
        let cfg = config(e);
        let g = gin(&e.ideal, &cfg).map_err(|err| format!("{}: {err}", e.name))?.gin;
        let s = gap_summary(&e.ideal, &g, &cfg.derive("gap", 0)).map_err(|err| format!("{}: {err}", e.name))?;
        checks += s.checks.len();
        if s.vacuous {
            vacuous.push(e.name.as_str());
        }
        if !s.passed || s.vacuous != g.gap_degrees().internal.is_empty() {
            failed.push(e.name.clone());
        }
    }
    fail_list(failed, format!("{checks} gap degrees checked; vacuous: {}", vacuous.join(", ")))
}

fn connectedness(entries: &[CorpusEntry]) -> Outcome {
    let mut failed = Vec::new();
    let mut covered = 0;
    for e in entries.iter().filter(|e| e.tags.integral && e.tags.codim2) {
        let inv = variety_invariants(&e.ideal, &config(e)).map_err(|err| format!("{}: {err}", e.name))?;
        if inv.s_z != inv.s_gamma {
            continue;
        }
        covered += 1;
        let report = connectedness_report(&inv);
        if !report.violations.is_empty() || !all_rows_connected(&inv.table, None) {
            failed.push(e.name.clone());
        }
    }
    if covered == 0 {
        return Err("no entry satisfies the hypothesis".into());
    }
    fail_list(failed, format!("{covered} entries with s_Z = s_Gamma, zero violations"))
}

fn low_levels(entries: &[CorpusEntry]) -> Outcome {
    let mut failed = Vec::new();
    let curves: Vec<&CorpusEntry> = entries.iter().filter(|e| e.n == 3).collect();
    for e in &curves {
        let inv = variety_invariants(&e.ideal, &config(e)).map_err(|err| format!("{}: {err}", e.name))?;
        if !all_rows_connected(&inv.table, Some(1)) || !connectedness_report(&inv).low_levels_connected {
            failed.push(e.name.clone());
        }
    }
    fail_list(failed, format!("{} curves in P^3, rows p = 0, 1", curves.len()))
}

fn general_points_connected() -> Outcome {
    let mut failed = Vec::new();
    let mut fixtures = Vec::new();
    for count in POINT_COUNTS {
        for seed in 0..POINT_SEEDS {
            let (ideal, _) = general_points(field(), count, seed).map_err(|e| e.to_string())?;
            let inv = variety_invariants(&ideal, &GinConfig::new(seed, 2).unwrap()).map_err(|e| e.to_string())?;
            let lambdas = inv.table.stable_profile().lambdas.clone();
            // oracle: degree and least degree of a curve through the points
            let h = Oracle::new(field(), 3).hilbert(&gens(&ideal), count as u32);
            let s_z = (0..).find(|&d: &usize| (h[d] as usize) < (d + 1) * (d + 2) / 2).unwrap();
            let consistent = lambdas.iter().sum::<u32>() as u64 == h[count] && lambdas.len() == s_z;
            if !consistent || !all_rows_connected(&inv.table, None) || !connectedness_report(&inv).connected {
                failed.push(format!("N={count} seed={seed} lambda={lambdas:?}"));
            }
            let fixture = match count {
                3 => Some(vec![2, 1]),
                5 => Some(vec![3, 2]),
                _ => None,
            };
            if let Some(f) = fixture {
                fixtures.push(lambdas == f);
                if lambdas != f {
                    failed.push(format!("N={count} seed={seed} lambda={lambdas:?}, expected {f:?}"));
                }
            }
        }
    }
    let runs = POINT_COUNTS.count() as u64 * POINT_SEEDS;
    fail_list(failed, format!("{runs} point sets, N = 3 gives (2,1), N = 5 gives (3,2) on {} seeds", fixtures.len()))
}

fn proof_traces(entries: &[CorpusEntry]) -> Outcome {
    let mut failed = Vec::new();
    let mut traces = 0;
    for e in entries {
        let cfg = config(e);
        let g = gin(&e.ideal, &cfg).map_err(|err| format!("{}: {err}", e.name))?.gin;
        let s = trace_summary(&e.ideal, &g, &opts(), &cfg.derive("trace", 0)).map_err(|err| format!("{}: {err}", e.name))?;
        let box_size = (TRACE_LEVEL as usize + 1).pow(e.ideal.ring().nvars().saturating_sub(3) as u32);
        traces += s.traces.len();
        if s.traces.len() != box_size || !s.traces.iter().all(|t| t.step1 && t.step2) {
            failed.push(e.name.clone());
        }
    }
    fail_list(failed, format!("{traces} traces, steps 1 and 2, indices in {{0,1,2}}"))
}

fn random_ideal(r: Ring, rng: &mut impl Rng) -> (Ideal, Vec<Polynomial>) {
    let count = rng.gen_range(1..=2);
    let forms: Vec<Polynomial> = (0..count)
        .map(|_| loop {
            let d = rng.gen_range(1..=2);
            let terms = monomials(3, d).into_iter().map(|e| (field().elem(rng.gen_range(0..PRIME)), Monomial::new(&e).unwrap()));
            let f = Polynomial::from_terms(r, terms).unwrap();
            if !f.is_zero() {
                break f;
            }
        })
        .collect();
    (Ideal::new(r, forms.clone()).unwrap(), forms)
}

fn oracle_equivalence() -> Outcome {
    let r = Ring::new(field(), 3).unwrap();
    let o = Oracle::new(field(), 3);
    let mut failed = Vec::new();
    for k in 0..ORACLE_INSTANCES {
        let mut rng = SeedStream::new(0).child("oracle", k).rng();
        let (i, ig) = random_ideal(r, &mut rng);
        let (j, jg) = random_ideal(r, &mut rng);
        let (_, fs) = random_ideal(r, &mut rng);
        let ig: Vec<Sparse> = ig.iter().map(sparse).collect();
        let jg: Vec<Sparse> = jg.iter().map(sparse).collect();
        let f = &fs[0];
        let fp = sparse(&f.pow(ORACLE_SAT_POWER));
        let q = ideal_quotient(&i, f).map_err(|e| e.to_string())?;
        let s = saturate(&i, f).map_err(|e| e.to_string())?;
        let m = intersect(&i, &j).map_err(|e| e.to_string())?;
        for d in 0..=ORACLE_DEGREE {
            if o.ideal_piece(&gens(&q), d) != o.quotient_piece(&ig, &sparse(f), d) {
                failed.push(format!("instance {k}: quotient in degree {d}"));
            }
            if o.ideal_piece(&gens(&s), d) != o.quotient_piece(&ig, &fp, d) {
                failed.push(format!("instance {k}: saturation in degree {d}"));
            }
            if o.ideal_piece(&gens(&m), d) != o.intersection(&o.ideal_piece(&ig, d), &o.ideal_piece(&jg, d)) {
                failed.push(format!("instance {k}: intersection in degree {d}"));
            }
        }
    }
    fail_list(failed, format!("{ORACLE_INSTANCES} instances, degrees 0..={ORACLE_DEGREE}"))
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_monoinv"))
            .args(["corpus-run", "--seed", "0", "--json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    if !a.status.success() {
        return Err(format!("corpus-run exited with {}", a.status));
    }
    if a.stdout != b.stdout {
        return Err("reports differ".into());
    }
    Ok(format!("two runs, {} identical bytes", a.stdout.len()))
}

fn main() -> ExitCode {
    let entries: Vec<CorpusEntry> = match read_dir(&default_corpus_dir()) {
        Ok(files) => files.into_iter().map(|f| f.entry).collect(),
        Err(e) => {
            println!("cannot read corpus: {e}");
            return ExitCode::FAILURE;
        }
    };
    let criteria: [(&str, &dyn Fn() -> Outcome); 10] = [
        ("gin agrees across samples, Borel-fixed, free of x_n", &|| galligo(&entries)),
        ("Hilbert function of gin matches rank counts", &|| hilbert_preservation(&entries)),
        ("slicing identity", &|| slicing(&entries)),
        ("gap truncation", &|| gap_truncation(&entries)),
        ("connected invariants under s_Z = s_Gamma", &|| connectedness(&entries)),
        ("low levels connected for curves in P^3", &|| low_levels(&entries)),
        ("general points in P^2", &general_points_connected),
        ("proof trace", &|| proof_traces(&entries)),
        ("quotient, saturation, intersection vs linear algebra", &oracle_equivalence),
        ("corpus-run is deterministic", &determinism),
    ];
    let mut all = true;
    for (k, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        all &= outcome.is_ok();
        println!("criterion {}: {tag} {title}: {detail} [{:.2?}]", k + 1, start.elapsed());
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
