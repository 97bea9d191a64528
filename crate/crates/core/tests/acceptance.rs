//! The eight acceptance criteria, each timed against a fixed budget. One
//! line per criterion goes to stderr.

mod common;

use std::io::Write;
use std::path::Path;
use std::sync::Arc;
use std::time::{Duration, Instant};

use common::{laws, random_filtered};
use eqss::ceforms::relative_subcomplex;
use eqss::cli::corpus;
use eqss::cli::input::{InputDocument, Workspace};
use eqss::cohom::{
    cohomology, invariant_cohomology, lie_cohomology, relative_cohomology, CohomologyResult,
    GroupActionOnCohomology,
};
use eqss::exactla::{rat, DEFAULT_GROUP_BOUND};
use eqss::liealg::{library, LieAutomorphism, Subalgebra};
use eqss::obstruct::{
    gysin_assemble, s3_check_4manifold, s3_check_5manifold, solve_les, verify_exactness, wang_check,
    GysinOptions, LesProblem, LesSolution, NullSearchOptions, Verdict, DEFAULT_SOLVER_CAP,
};
use eqss::specseq::{models, product_model, run_to_stabilization, twist_by_deck, FilteredComplex};

/// Instances per property law.
const LAW_INSTANCES: u64 = 100;
/// Random filtered complexes for the convergence audit.
const RANDOM_COMPLEXES: u64 = 100;

type Outcome = Result<(), String>;

/// Name, check and time limit in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn relative(h: &Subalgebra) -> Result<CohomologyResult, String> {
    relative_cohomology(&relative_subcomplex(h).map_err(err)?).map_err(err)
}

fn invariant_dims(h: &CohomologyResult, a: &LieAutomorphism) -> Result<Vec<usize>, String> {
    let action = GroupActionOnCohomology::from_automorphisms(h, std::slice::from_ref(a), DEFAULT_GROUP_BOUND)
        .map_err(err)?;
    Ok(invariant_cohomology(h, &action, DEFAULT_GROUP_BOUND).map_err(err)?.dims().to_vec())
}

fn golden_cohomology() -> Outcome {
    let su2 = Arc::new(library::su2());
    let got = lie_cohomology(&su2).map_err(err)?.dims().to_vec();
    ensure!(got == [1, 0, 0, 1], "H(su2) = {got:?}");
    let (_, circle, flip) = library::su2_circle();
    let h = relative(&circle)?;
    ensure!(h.dims() == [1, 0, 1], "H(su2, circle) = {:?}", h.dims());
    let inv = invariant_dims(&h, &flip)?;
    ensure!(inv == [1, 0, 0], "H(su2, circle) invariants = {inv:?}");
    let (_, so2, refl) = library::so_pair(2);
    let h = relative(&so2)?;
    let inv = invariant_dims(&h, &refl)?;
    ensure!(h.dims() == [1, 0, 1] && inv == [1, 0, 0], "H(so3, so2) = {:?}, invariants {inv:?}", h.dims());
    let (_, so3, _) = library::so_pair(3);
    let h = relative(&so3)?;
    ensure!(h.dims() == [1, 0, 0, 1], "H(so4, so3) = {:?}", h.dims());
    Ok(())
}

fn normalizer_sign() -> Outcome {
    for l in 2..=4usize {
        let (_, h, refl) = library::so_pair(l);
        let coh = relative(&h)?;
        ensure!(coh.dims()[l] == 1, "l={l}: top relative cohomology has dim {}", coh.dims()[l]);
        let action = GroupActionOnCohomology::from_automorphisms(&coh, std::slice::from_ref(&refl), DEFAULT_GROUP_BOUND)
            .map_err(err)?;
        let top = &action.generators()[0][l];
        let expected = rat(if (l + 1) % 2 == 0 { 1 } else { -1 });
        ensure!(*top.get(0, 0) == expected, "l={l}: reflection acts by {} on H^{l}", top.get(0, 0));
    }
    Ok(())
}

fn audit(name: &str, fc: &FilteredComplex) -> Outcome {
    let table = run_to_stabilization(fc).map_err(|e| format!("{name}: {e}"))?;
    let h = cohomology(fc.complex()).map_err(err)?;
    ensure!(table.einf_by_degree() == h.dims(), "{name}: E_inf {:?} vs H {:?}", table.einf_by_degree(), h.dims());
    Ok(())
}

fn convergence() -> Outcome {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let mut shipped = 0;
    for (file, _) in corpus::documents() {
        let text = std::fs::read_to_string(data.join(file)).map_err(|e| format!("{file}: {e}"))?;
        let doc = InputDocument::parse(&text).map_err(|e| format!("{file}: {e}"))?;
        let ws = Workspace::build(&doc, DEFAULT_GROUP_BOUND).map_err(|e| format!("{file}: {e}"))?;
        for (name, (c, weights)) in &ws.complexes {
            let fc = match weights {
                Some(_) => ws.filtered(name).map_err(err)?,
                None => FilteredComplex::trivial(c.clone()),
            };
            audit(name, &fc)?;
            shipped += 1;
        }
        for name in ws.products.keys().chain(ws.twists.keys()) {
            audit(name, &ws.filtered(name).map_err(err)?)?;
            shipped += 1;
        }
    }
    ensure!(shipped >= 40, "only {shipped} shipped complexes found");
    for seed in 0..RANDOM_COMPLEXES {
        let built = random_filtered(seed);
        ensure!(built.fc.complex().dims().iter().all(|&d| d <= 8), "seed {seed} exceeds 8 per degree");
        audit(&format!("random seed {seed}"), &built.fc)?;
    }
    Ok(())
}

fn trivial_twist_e2() -> Outcome {
    let su2 = Arc::new(library::su2());
    let (_, so2, _) = library::so_pair(2);
    let coefficients = [Subalgebra::zero(su2), so2];
    for h in &coefficients {
        let fibre = relative(h)?;
        for base in [models::point(), models::circle(), models::sphere(2), models::sphere(4)] {
            let base_h = cohomology(&base).map_err(err)?;
            let model = product_model(&base, h).map_err(err)?;
            let table = run_to_stabilization(model.filtered()).map_err(err)?;
            let e2 = table.page(2).ok_or("no E2")?;
            for p in 0..base_h.dims().len() {
                for q in 0..fibre.dims().len() {
                    let want = base_h.dims()[p] * fibre.dims()[q];
                    let got = e2.dim(p as i64, q as i64);
                    ensure!(got == want, "{} x {}: E2^({p},{q}) = {got}, expected {want}", base.name(), h.name());
                }
            }
            let total: usize = e2.entries().iter().map(|e| e.dim).sum();
            let expected: usize = base_h.dims().iter().sum::<usize>() * fibre.dims().iter().sum::<usize>();
            ensure!(total == expected, "{} x {}: stray E2 entries", base.name(), h.name());
        }
    }
    Ok(())
}

fn antipodal_twist() -> Outcome {
    let (g, so2, refl) = library::so_pair(2);
    let (cells, swap) = models::circle_double_cover();
    let model = product_model(&cells, &so2).map_err(err)?;
    let cases = [(refl, vec![1, 1, 0, 0]), (LieAutomorphism::identity(g), vec![1, 1, 1, 1])];
    for (a, want) in cases {
        let inv = twist_by_deck(&model, &swap, &a, DEFAULT_GROUP_BOUND).map_err(err)?;
        let table = run_to_stabilization(&inv.filtered).map_err(err)?;
        ensure!(table.total_cohomology == want, "{}: {:?}, expected {want:?}", a.name(), table.total_cohomology);
    }
    Ok(())
}

/// Exactness recomputed from the term dimensions alone.
fn independently_exact(p: &LesProblem, s: &LesSolution) -> bool {
    let Some(dims) = s.term_dims(p) else { return false };
    let mut incoming = 0usize;
    for (i, &d) in dims.iter().enumerate() {
        let Some(out) = d.checked_sub(incoming) else { return false };
        if i + 1 == dims.len() {
            return out == 0;
        }
        if out > dims[i + 1] || (p.zero_arrows.contains(&i) && out != 0) || s.map_ranks[i] != out {
            return false;
        }
        incoming = out;
    }
    true
}

fn check_all(p: &LesProblem, sols: &[LesSolution]) -> Outcome {
    for s in sols {
        verify_exactness(p, s).map_err(|e| format!("{}: {e}", p.name))?;
        ensure!(independently_exact(p, s), "{}: {:?} fails the independent check", p.name, s.assignments);
    }
    Ok(())
}

fn totals(s: &LesSolution, n: usize) -> Vec<usize> {
    (0..n).map(|k| s.assignments.get(&format!("h{k:02}")).copied().unwrap_or(usize::MAX)).collect()
}

fn gysin_wang() -> Outcome {
    let p = gysin_assemble(3, &[1, 1], None, GysinOptions::default()).map_err(err)?;
    let sols = solve_les(&p, DEFAULT_SOLVER_CAP).map_err(err)?;
    check_all(&p, &sols)?;
    ensure!(sols.iter().any(|s| totals(s, 5) == [1, 1, 0, 1, 1]), "[1,1,0,1,1] missing from {} solutions", sols.len());

    let p = gysin_assemble(2, &[1, 0, 1], Some(&[1, 0, 2, 0, 1]), GysinOptions::default()).map_err(err)?;
    let sols = solve_les(&p, DEFAULT_SOLVER_CAP).map_err(err)?;
    check_all(&p, &sols)?;
    ensure!(!sols.is_empty(), "S2 x S2 totals rejected");

    let w1 = wang_check(1, true, true, &[1, 0, 1], DEFAULT_SOLVER_CAP).map_err(err)?;
    ensure!(w1.verdict == Verdict::Excluded, "wang codim 1: {:?}", w1.verdict);
    let w3 = wang_check(3, true, true, &[1, 1, 0, 1], DEFAULT_SOLVER_CAP).map_err(err)?;
    ensure!(w3.verdict == Verdict::Inconsistent, "wang codim 3 with H^1 = 1: {:?}", w3.verdict);

    let w2 = wang_check(2, true, true, &[1, 0, 0, 1], DEFAULT_SOLVER_CAP).map_err(err)?;
    let problem = w2.problem.as_ref().ok_or("wang codim 2 has no problem")?;
    check_all(problem, &w2.solutions)?;
    let hits = w2.solutions.iter().any(|s| {
        s.term_dims(problem).is_some_and(|dims| {
            (0..6).all(|k| dims[3 * (k + 1)] == [1, 0, 1, 1, 0, 1][k])
        })
    });
    ensure!(hits, "wang codim 2 over su2 misses [1,0,1,1,0,1]");
    Ok(())
}

fn exclusion_checkers() -> Outcome {
    let mut excluded_before = false;
    for b2 in 0..=10 {
        let v = s3_check_4manifold(&[1, 0, b2, 0, 1]).map_err(err)?.verdict;
        let excluded = v == Verdict::Excluded;
        ensure!(excluded == (b2 >= 3), "b2 = {b2}: {v:?}");
        ensure!(!excluded_before || excluded, "not monotone at b2 = {b2}");
        excluded_before = excluded;
    }
    let cups = corpus::cup_forms();
    let get = |name: &str| {
        cups.iter()
            .find(|(n, _)| *n == name)
            .map(|(_, c)| c.build())
            .ok_or(format!("{name} missing"))?
            .map_err(err)
    };
    let expect = [
        ("cup_line.json", Verdict::NotExcluded),
        ("cup_hyperbolic.json", Verdict::NotExcluded),
        ("cup_definite.json", Verdict::Excluded),
    ];
    for (name, want) in expect {
        let cup = get(name)?;
        let got = s3_check_5manifold(cup.b2(), &cup, false, &NullSearchOptions::default()).map_err(err)?.verdict;
        ensure!(got == want, "{name}: {got:?}, expected {want:?}");
    }
    Ok(())
}

fn property_suites() -> Outcome {
    for (name, law) in laws::ALL {
        for seed in 0..LAW_INSTANCES {
            law(seed).map_err(|e| format!("{name}, seed {seed}: {e}"))?;
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("golden Lie algebra cohomology", golden_cohomology, 1),
        ("normalizer sign (-1)^(l+1)", normalizer_sign, 5),
        ("convergence audit", convergence, 30),
        ("trivial-twist E2 = H(base) x H(g,h)", trivial_twist_e2, 10),
        ("antipodal twist", antipodal_twist, 5),
        ("Gysin and Wang solver", gysin_wang, 5),
        ("exclusion checkers", exclusion_checkers, 1),
        ("property suites", property_suites, 60),
    ];
    let mut failures = Vec::new();
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(*limit);
        let verdict = match (&result, elapsed <= limit) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (over the {} s limit)", limit.as_secs()),
            (Err(e), _) => format!("FAIL ({e})"),
        };
        // direct handle writes are not captured by the test harness
        writeln!(
            std::io::stderr(),
            "criterion {}: {verdict} in {:.3} s (limit {} s): {name}",
            i + 1,
            elapsed.as_secs_f64(),
            limit.as_secs()
        )
        .expect("stderr");
        if !verdict.starts_with("PASS") {
            failures.push(i + 1);
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
