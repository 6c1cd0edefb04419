//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the target exits non-zero if any criterion fails. All comparisons are exact.

use std::time::{Duration, Instant};

use lacune::gap::{gap_report, HILBERT_CARTAN_CAP};
use lacune_core::arith::ratfun::RationalFunction;
use lacune_core::arith::rational::Rational;
use lacune_core::distribution::monge::{
    hilbert_cartan, monge_distribution, perturbed, power, power_symmetries, submax9_symmetries,
};
use lacune_core::distribution::symbol_at_point;
use lacune_core::distribution::symmetry::{is_symmetry, polynomial_symmetries, structure_constants};
use lacune_core::gnla;
use lacune_core::integrals::jets::DEFAULT_EXTRA_ORDERS;
use lacune_core::integrals::{flat, integral_dimension, linear_factor, warped_product};
use lacune_core::lie::cohomology::chevalley_eilenberg;
use lacune_core::lie::invariants::verify_invariant_relations;
use lacune_core::lie::presets::{parameter, sl2, submax9, submax9_base, submax9_derivation, w7, w7_base, w7_derivation};
use lacune_core::lie::LieAlgebra;
use lacune_core::symbols::{self, dimension_bound, prolongation_sequence, killing_symbol};
use lacune_core::tanaka::{dimension_certificate, tanaka_prolongation, DEFAULT_CAP};

const SEED: u64 = 0x5eed;
/// Largest degree cap tried when searching for the Hilbert–Cartan sandwich.
const SANDWICH_MAX_CAP: u32 = 8;
const SPEC_GAP_MAX_N: usize = 5;

type Outcome = Result<String, String>;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

fn chain(g: &symbols::SymbolSpace, g0: usize) -> (Vec<usize>, Option<usize>) {
    let seq = prolongation_sequence(g, symbols::DEFAULT_CAP);
    let mut c = vec![g0];
    c.extend(&seq.dims);
    (c, dimension_bound(&seq, g0).ok())
}

fn killing_fields() -> Outcome {
    let mut out = Vec::new();
    for n in 2..=5 {
        let g = killing_symbol(n, 1);
        let (c, total) = chain(&g, g.w);
        out.push(format!("n={n}: {c:?}"));
        if c != [n, n * (n - 1) / 2, 0] || total != Some(n * (n + 1) / 2) {
            return Err(out.join("; "));
        }
    }
    Ok(out.join("; "))
}

fn killing_two() -> Outcome {
    let mut out = Vec::new();
    for n in 2..=4 {
        let g = killing_symbol(n, 2);
        let (c, total) = chain(&g, g.w);
        let want = [n * (n + 1) / 2, n * (n * n - 1) / 3, n * n * (n * n - 1) / 12, 0];
        out.push(format!("n={n}: {c:?} sum {total:?}"));
        if c != want || total != Some((n + 1) * (n + 1) * ((n + 1) * (n + 1) - 1) / 12) {
            return Err(out.join("; "));
        }
    }
    Ok(out.join("; "))
}

fn conformal() -> Outcome {
    let mut out = Vec::new();
    for n in 3..=4 {
        let seq = prolongation_sequence(&symbols::co(n), symbols::DEFAULT_CAP);
        let total = dimension_bound(&seq, n).ok();
        out.push(format!("n={n}: {:?} total {total:?}", seq.dims));
        if seq.dims != [1 + n * (n - 1) / 2, n, 0] || total != Some((n + 1) * (n + 2) / 2) {
            return Err(out.join("; "));
        }
    }
    Ok(out.join("; "))
}

fn flat_oracle() -> Outcome {
    let mut out = Vec::new();
    let mut ok = true;
    for (n, d, want) in [(2, 1, 3), (3, 1, 6), (2, 2, 6), (3, 2, 20), (2, 3, 10)] {
        let got = integral_dimension(&flat(n), d, DEFAULT_EXTRA_ORDERS, SEED).map_err(err)?;
        let g = killing_symbol(n, d as u32);
        let bound = chain(&g, g.w).1;
        ok &= got == want && bound == Some(want);
        out.push(format!("({n},{d}): {got} vs symbol {bound:?}"));
    }
    check(ok, out.join("; "))
}

fn linear_factor_integrals() -> Outcome {
    let two = integral_dimension(&linear_factor(2), 2, DEFAULT_EXTRA_ORDERS, SEED).map_err(err)?;
    let three = integral_dimension(&linear_factor(3), 2, DEFAULT_EXTRA_ORDERS, SEED).map_err(err)?;
    check(two == 4 && three == 12, format!("n=2: {two}, n=3: {three}"))
}

fn warped_integrals() -> Outcome {
    let g = warped_product(3, Rational::one(), Rational::one()).map_err(err)?;
    let q2 = integral_dimension(&g, 2, DEFAULT_EXTRA_ORDERS, SEED).map_err(err)?;
    let q1 = integral_dimension(&linear_factor(3), 1, DEFAULT_EXTRA_ORDERS, SEED).map_err(err)?;
    check(q2 == 10 && q1 == 3, format!("Q2 = {q2}, Q1 of the linear-factor metric = {q1}"))
}

fn tanaka_total(m: &gnla::Gnla) -> Result<(usize, Vec<usize>), String> {
    let t = tanaka_prolongation(m, None, DEFAULT_CAP).map_err(err)?;
    Ok((dimension_certificate(&t).map_err(err)?, t.all_dims()))
}

fn tanaka_bounds() -> Outcome {
    let (free, dims) = tanaka_total(&gnla::free235())?;
    let (neg, _) = tanaka_total(&gnla::symbol2356())?;
    let mut monge = Vec::new();
    for n in 3..=4 {
        let (m, _) = symbol_at_point(&monge_distribution(&power(2, n).map_err(err)?), None, SEED).map_err(err)?;
        monge.push(tanaka_total(&m)?.0);
    }
    check(
        free == 14 && dims == [2, 1, 2, 4, 2, 1, 2] && neg == 11 && monge == [11, 13],
        format!("free(2,3,5): {free} {dims:?}; (2,3,5,6): {neg}; Monge n=3,4: {monge:?}"),
    )
}

fn symmetry_witnesses() -> Outcome {
    let cubic = power_symmetries(3).map_err(err)?;
    let d5 = monge_distribution(&power(3, 2).map_err(err)?);
    let nine = submax9_symmetries(Rational::one()).map_err(err)?;
    let d8 = monge_distribution(&perturbed(3, 2, Rational::one()).map_err(err)?);
    let mut bad = Vec::new();
    for (i, v) in cubic.iter().enumerate() {
        if !is_symmetry(v, &d5).map_err(err)? {
            bad.push(format!("W{} (m=3)", i + 1));
        }
    }
    for (i, v) in nine.iter().enumerate() {
        if !is_symmetry(v, &d8).map_err(err)? {
            bad.push(format!("W{} (eps=1)", i + 1));
        }
    }
    let a7 = structure_constants(&cubic).map_err(err)?;
    let a9 = structure_constants(&nine).map_err(err)?;
    let (s7, s9) = (a7.derived_series(), a9.derived_series());
    check(
        bad.is_empty() && a7.dim() == 7 && a9.dim() == 9 && s7 == [7, 5, 1, 0] && s9 == [9, 7, 1, 0],
        format!("failing: {bad:?}; dims {} {}; derived {s7:?} {s9:?}", a7.dim(), a9.dim()),
    )
}

fn sandwich() -> Outcome {
    let d = monge_distribution(&hilbert_cartan());
    let mut seen = Vec::new();
    for cap in 1..=SANDWICH_MAX_CAP {
        let p = polynomial_symmetries(&d, cap, SEED).map_err(err)?;
        seen.push(p.dimension);
        if p.dimension == 14 {
            let note = if cap <= 5 { "" } else { " (above the anticipated 5)" };
            return check(
                cap == HILBERT_CARTAN_CAP,
                format!("reaches 14 at degree cap {cap}{note}; dims by cap {seen:?}"),
            );
        }
    }
    Err(format!("never reached 14 up to cap {SANDWICH_MAX_CAP}: {seen:?}"))
}

fn invariants() -> Outcome {
    let r = verify_invariant_relations().map_err(err)?;
    let failed: Vec<&str> = r.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    check(failed.is_empty(), format!("{} identities, failing {failed:?}", r.checks.len()))
}

fn same_brackets(a: &LieAlgebra<Rational>, b: &LieAlgebra<Rational>) -> bool {
    let n = a.dim();
    n == b.dim() && (0..n).all(|i| (0..n).all(|j| a.basis_bracket(i, j) == b.basis_bracket(i, j)))
}

fn extensions_and_cohomology() -> Outcome {
    let m = parameter("m");
    let e = parameter("e");
    let d6 = w7_base(&m).map_err(err)?.is_derivation(&w7_derivation(&m));
    let d1 = submax9_base(&e).map_err(err)?.is_derivation(&submax9_derivation(&e));
    let c = |n: i64| RationalFunction::constant(Rational::from_int(n));
    let w = w7(c(3)).map_err(err)?.to_rational().map_err(err)?;
    let s = submax9(c(1)).map_err(err)?.to_rational().map_err(err)?;
    let r7 = same_brackets(&w, &structure_constants(&power_symmetries(3).map_err(err)?).map_err(err)?);
    let r9 = same_brackets(&s, &structure_constants(&submax9_symmetries(Rational::one()).map_err(err)?).map_err(err)?);
    let h_sl2 = chevalley_eilenberg(&sl2(), 2);
    let h_ab = chevalley_eilenberg(&LieAlgebra::abelian(vec!["a".into(), "b".into()]), 2);
    check(
        d6 && d1 && r7 && r9 && h_sl2 == 0 && h_ab == 2,
        format!("derivations {d6} {d1}; rebuilt 7/9 {r7} {r9}; H2(sl2) = {h_sl2}; H2(ab2) = {h_ab}"),
    )
}

fn gap_table() -> Outcome {
    let rows = gap_report(SPEC_GAP_MAX_N, SEED).map_err(err)?;
    let bad: Vec<String> = rows.iter().filter(|r| !r.ok).map(|r| format!("{} n={}", r.structure, r.n)).collect();
    check(bad.is_empty(), format!("{} rows, mismatches {bad:?}", rows.len()))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, name: "Killing-field symbol chains, n = 2..5", limit: secs(1), run: killing_fields },
    Criterion { id: 2, name: "Killing 2-tensor chains, n = 2..4", limit: secs(5), run: killing_two },
    Criterion { id: 3, name: "conformal chains, n = 3, 4", limit: secs(5), run: conformal },
    Criterion { id: 4, name: "flat metrics: solver vs symbol bound", limit: secs(120), run: flat_oracle },
    Criterion { id: 5, name: "linear-factor metric, quadratic integrals", limit: secs(600), run: linear_factor_integrals },
    Criterion { id: 6, name: "warped product Q2 and Q1", limit: secs(300), run: warped_integrals },
    Criterion { id: 7, name: "Tanaka bounds 14, 11, 11, 13", limit: secs(240), run: tanaka_bounds },
    Criterion { id: 8, name: "symmetry witnesses close as 7 and 9", limit: secs(120), run: symmetry_witnesses },
    Criterion { id: 9, name: "Hilbert-Cartan polynomial sandwich", limit: secs(600), run: sandwich },
    Criterion { id: 10, name: "invariant identities", limit: secs(10), run: invariants },
    Criterion { id: 11, name: "double extensions and cohomology", limit: secs(60), run: extensions_and_cohomology },
    Criterion { id: 12, name: "gap report, n = 2..5", limit: secs(1800), run: gap_table },
];

fn main() {
    let mut failures = Vec::new();
    for c in CRITERIA {
        let t = Instant::now();
        let out = (c.run)();
        let dt = t.elapsed();
        let (ok, detail) = match &out {
            Ok(d) => (dt <= c.limit, d.clone()),
            Err(d) => (false, d.clone()),
        };
        let slow = if out.is_ok() && !ok { format!(" over the {:?} limit", c.limit) } else { String::new() };
        println!("{} {:>2} {:<44} {:>9.3?}{slow}  {detail}", if ok { "PASS" } else { "FAIL" }, c.id, c.name, dt);
        if !ok {
            failures.push(c.id);
        }
    }
    if !failures.is_empty() {
        eprintln!("failing criteria: {failures:?}");
        std::process::exit(1);
    }
}
