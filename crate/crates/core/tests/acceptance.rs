//! Acceptance suite. Run with `cargo test -p dyck-cluster --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use dyck_cluster::quiver::interval_of;
use dyck_cluster::*;
use rayon::prelude::*;

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn lib<T>(r: dyck_cluster::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn poly(s: &str, nvars: usize) -> LaurentPoly {
    LaurentPoly::parse(s, nvars).expect("test literal parses")
}

fn catalan(n: usize) -> u128 {
    // C_n = binom(2n, n) / (n + 1), built incrementally.
    (0..n as u128).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Check {
    ensure!(elapsed < limit, "{what} took {elapsed:?}, limit {limit:?}");
    Ok(())
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let q = QuiverA::new(vec![Dir::Right]);
    let vars = lib(enumerate_cluster_variables(&q))?;
    let expected: BTreeSet<LaurentPoly> =
        ["x1", "x2", "(1 + x2)/x1", "(1 + x1 + x2)/(x1*x2)", "(1 + x1)/x2"].iter().map(|s| poly(s, 2)).collect();
    let got: Vec<String> = vars.iter().map(LaurentPoly::canonical_string).collect();
    let want: Vec<String> = expected.iter().map(LaurentPoly::canonical_string).collect();
    ensure!(got == want, "got {got:?}, expected {want:?}");
    within(start.elapsed(), Duration::from_secs(1), "A_2 enumeration")
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let c = lib(AdmissibleSubchain::parse(5, "j1,i2,j4"))?;
    let y = PeakPath::from_dyck(&lib("UDUUDUDDUD".parse())?).ok_or("path is not in S")?;
    let x = lib(cluster_var_from_dyck(&y, &c))?;
    ensure!(x.canonical_string() == "(x4 + x2 + x1*x3*x4)/(x2*x3)", "cluster variable {x}");
    ensure!(x == poly("(x4 + x2 + x3*x1*x4)/(x2*x3)", 4), "structural mismatch for {x}");
    let words: BTreeSet<String> = lib(restricted_words(&y, &c))?.iter().map(ToString::to_string).collect();
    let expected: BTreeSet<String> = ["E.E.U1^3", "E.U2^2.E", "U2^1.U1^2.U1^3"].iter().map(|s| s.to_string()).collect();
    ensure!(words == expected, "restricted words {words:?}");
    within(start.elapsed(), Duration::from_secs(1), "worked example")
}

fn criterion_3() -> Check {
    let start = Instant::now();
    let reports = lib(verify_all(3..=8))?;
    let mut checked = 0;
    for r in &reports {
        let n = r.subchain.n();
        ensure!(r.equal, "{}: missing {:?}, extra {:?}", r.subchain, r.missing, r.extra);
        ensure!(r.dyck_count == n * (n - 1) / 2, "{}: {} Dyck variables", r.subchain, r.dyck_count);
        checked += 1;
    }
    ensure!(checked == 126, "checked {checked} subchains");
    within(start.elapsed(), Duration::from_secs(300), "headline cross-validation")
}

fn criterion_4() -> Check {
    for n in 1..=12 {
        let count = lib(enumerate_dyck(n))?.len() as u128;
        ensure!(count == catalan(n), "|D_{}| = {count}, Catalan = {}", 2 * n, catalan(n));
    }
    for n in 2..=12 {
        let count = lib(enumerate_s(n))?.len();
        ensure!(count == n * (n - 1) / 2, "|S| = {count} for n = {n}");
    }
    for m in 1..=7 {
        for c in AdmissibleSubchain::all(m + 1).into_iter().take(2) {
            let count = lib(enumerate_cluster_variables(&quiver_from_subchain(&c)))?.len();
            ensure!(count == type_a_variable_count(m), "A_{m} ({c}) has {count} cluster variables");
        }
    }
    for n in 3..=9 {
        for c in AdmissibleSubchain::all(n) {
            let words = lib(words_x_c(&c))?;
            let distinct: BTreeSet<&HWord> = words.iter().collect();
            let matchings = count_matchings_transfer(&snake_from_subchain(&c));
            ensure!(
                distinct.len() as u128 == matchings && words.len() as u128 == matchings,
                "{c}: {} words ({} distinct), {matchings} matchings",
                words.len(),
                distinct.len()
            );
        }
    }
    Ok(())
}

fn criterion_5() -> Check {
    let chains: Vec<AdmissibleSubchain> = (2..=7).flat_map(AdmissibleSubchain::all).collect();
    chains.par_iter().try_for_each(|c| -> Check {
        let s = lib(enumerate_s(c.n()))?;
        let reps = s.iter().map(|y| lib(theta(y, c))).collect::<std::result::Result<Vec<_>, _>>()?;
        for (a, ya) in s.iter().enumerate() {
            for (b, yb) in s.iter().enumerate() {
                let dim = lib(hom_dim_bruteforce(&reps[a], &reps[b]))?;
                ensure!(dim <= 1, "{c}: dim Hom({ya}, {yb}) = {dim}");
                let criterion = lib(hom_nonzero(ya, yb, c))?;
                ensure!(criterion == (dim == 1), "{c}: criterion {criterion} but dim Hom({ya}, {yb}) = {dim}");
            }
        }
        Ok(())
    })
}

fn criterion_6() -> Check {
    let c = lib(AdmissibleSubchain::parse(6, "i1,j2,i3,j4,i5"))?;
    let q = quiver_from_subchain(&c);
    ensure!(q.arrows() == vec![(2, 1), (2, 3), (4, 3), (4, 5)], "quiver arrows {:?}", q.arrows());
    let ar = lib(ar_quiver(&c))?;
    ensure!(ar.vertices.len() == 15, "{} vertices", ar.vertices.len());
    ensure!(ar.projectives().len() == 5, "{} projectives", ar.projectives().len());
    ensure!(ar.injectives().len() == 5, "{} injectives", ar.injectives().len());
    ensure!(ar.meshes_commute(), "a mesh does not commute");
    ensure!(ar.is_acyclic(), "arrow relation has a cycle");
    ensure!(ar.is_connected(), "AR quiver is disconnected");
    for (v, y) in ar.vertices.iter().enumerate() {
        let dims = lib(theta(y, &c))?.dims().to_vec();
        let cox = lib(coxeter_translate(&dims, &q))?;
        match (ar.tau(v), cox) {
            (None, Translate::ProjectiveHit) => {}
            (Some(t), Translate::Module(d)) => {
                let w = ar.vertices[t];
                ensure!(interval_of(&d) == Some((w.l(), w.r())), "tau({y}) = {w} by knitting, {d:?} by Coxeter");
            }
            (knit, cox) => return Err(format!("{y}: knitting gives {knit:?}, Coxeter gives {cox:?}")),
        }
    }
    Ok(())
}

fn criterion_7() -> Check {
    let k = lib(KupischSeries::new(vec![3, 3, 2, 2, 1]))?;
    let p = lib(dyck_from_kupisch(&k))?;
    ensure!(p.to_string() == "UDUUDUDD", "Kupisch path {p}");
    ensure!(lib(kupisch_from_dyck(&p))? == k, "round trip failed");
    let objects = lib(nv_objects(&NvSpec::from_kupisch(&k)))?;
    ensure!(objects.len() == 11, "{} objects", objects.len());
    let ar = lib(ar_quiver_nakayama(&k))?;
    ensure!(ar.vertices.len() == 11, "{} AR vertices", ar.vertices.len());
    ensure!(ar.meshes_commute() && ar.is_acyclic(), "Nakayama AR quiver is malformed");
    let stair = lib(ar_quiver_nakayama(&lib(KupischSeries::staircase(5))?))?;
    let linear = lib(ar_quiver(&lib(AdmissibleSubchain::linear(6))?))?;
    ensure!(stair == linear, "staircase AR quiver differs from the linear A_5 one");
    Ok(())
}

fn criterion_8() -> Check {
    let paths: Vec<String> = [Letter::U1(1), Letter::U2(1), Letter::E]
        .iter()
        .map(|&l| lib(letter_path(l, 3)).map(|p| p.to_string()))
        .collect::<std::result::Result<_, _>>()?;
    ensure!(paths == ["UUDDUD", "UDUUDD", "UUUDDD"], "H_3 letters render as {paths:?}");
    let g = snake_from_subchain(&lib(AdmissibleSubchain::parse(6, "i1,j3,i5"))?);
    use SnakeStep::{Above, RightOf};
    ensure!(g.steps() == [RightOf, Above, Above, RightOf], "snake steps {:?}", g.steps());
    let x12: BTreeSet<String> =
        lib(words_x_c(&lib(AdmissibleSubchain::parse(3, "i1,j2"))?))?.iter().map(ToString::to_string).collect();
    let h3: BTreeSet<String> = ["E", "U1^1", "U2^1"].iter().map(|s| s.to_string()).collect();
    ensure!(x12 == h3, "X_{{1,2}} = {x12:?}");
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 8] = [
        ("A_2 ground truth", criterion_1),
        ("worked A_4 example", criterion_2),
        ("Dyck formula = mutation, all subchains, 3 <= n <= 8", criterion_3),
        ("counting suite", criterion_4),
        ("Hom criterion = brute force, n <= 7", criterion_5),
        ("AR quiver of the zigzag A_5 quiver", criterion_6),
        ("Nakayama [3,3,2,2,1] and staircase", criterion_7),
        ("alphabet, snake shape, X_{1,2}", criterion_8),
    ];
    let mut failures = Vec::new();
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(()) => println!("[PASS] criterion {} ({name}) in {secs:.2} s", k + 1),
            Err(why) => {
                println!("[FAIL] criterion {} ({name}) in {secs:.2} s: {why}", k + 1);
                failures.push(k + 1);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
