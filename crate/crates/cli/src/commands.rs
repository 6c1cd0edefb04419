//! Dispatch from a job to the core library.

use serde_json::{json, Value};

use lacune_core::distribution::symmetry::{annihilator, is_symmetry_with, polynomial_symmetries, structure_constants};
use lacune_core::distribution::{derived_flag, symbol_at_point, Saturation};
use lacune_core::integrals::integral_dimension_report;
use lacune_core::integrals::jets::DEFAULT_EXTRA_ORDERS;
use lacune_core::lie::cohomology::chevalley_eilenberg_checked;
use lacune_core::lie::invariants::verify_invariant_relations;
use lacune_core::symbols::{self, dimension_bound, prolongation_sequence};
use lacune_core::tanaka::{self, tanaka_prolongation, TanakaStatus};

use crate::error::{CliError, Context};
use crate::gap::gap_report;
use crate::job::JobSpec;
use crate::presets::{self, parse_params, SymbolInput};
use crate::report::Report;

pub const COMMANDS: &[&str] = &["symbol", "tanaka", "flag", "symcheck", "polysym", "killing", "liealg", "gap-report"];

/// Seed used when none is given outside machine mode.
pub const DEFAULT_SEED: u64 = 0;

fn rationals(v: &[lacune_core::arith::rational::Rational]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

/// Runs a single job whose command and seed policy are already settled.
pub fn run(job: &JobSpec) -> Result<Report, CliError> {
    let command = job.command.clone().ok_or_else(|| CliError::Usage("job has no command".into()))?;
    let mut r = Report::new(&command, job.clone());
    let opts = &job.options;
    let params = parse_params(&opts.params)?;
    let input = job.input.as_ref();
    let seed = opts.seed.unwrap_or(DEFAULT_SEED);
    let uses_seed = matches!(command.as_str(), "tanaka" | "flag" | "polysym" | "killing" | "gap-report");
    if uses_seed {
        r.note(match opts.seed {
            Some(s) => format!("seed {s}"),
            None => format!("seed {DEFAULT_SEED} (default)"),
        });
    }
    match command.as_str() {
        "symbol" => {
            let cap = opts.cap.map_or(symbols::DEFAULT_CAP, |c| c as usize);
            let (seq, g0) = match presets::symbol(input, cap)? {
                SymbolInput::Space(g, g0) => (prolongation_sequence(&g, cap), g0),
                SymbolInput::Given(seq, g0, how) => {
                    r.note(how);
                    (seq, g0)
                }
            };
            r.set("g0", g0);
            r.set("dims", &seq.dims);
            r.set("terminated", seq.is_terminated());
            r.primary = match dimension_bound(&seq, g0) {
                Ok(t) => json!(t),
                Err(_) => {
                    r.note(format!("no zero symbol within {cap} prolongations"));
                    json!("capped")
                }
            };
        }
        "tanaka" => {
            let m = match presets::gnla(input)? {
                Some(g) => g,
                None => {
                    let d = presets::distribution(input, &params)?;
                    let (g, p) = symbol_at_point(&d, None, seed).context(|| "symbol of the distribution".into())?;
                    r.set("point", rationals(&p));
                    g
                }
            };
            let cap = opts.cap.map_or(tanaka::DEFAULT_CAP, |c| c as usize);
            let t = tanaka_prolongation(&m, None, cap).context(|| "Tanaka prolongation".into())?;
            r.set("negative_dims", t.negative_dims());
            r.set("nonneg_dims", t.nonneg_dims());
            r.set("dims", t.all_dims());
            r.primary = match t.status {
                TanakaStatus::Terminated => json!(t.total_dim()),
                TanakaStatus::Capped => {
                    r.note(format!("prolongation still nonzero at degree {}", cap - 1));
                    json!("capped")
                }
            };
        }
        "flag" => {
            let d = presets::distribution(input, &params)?;
            let g = derived_flag(&d, None, seed).context(|| "derived flag".into())?;
            r.set("saturation", if g.saturation == Saturation::Full { "full" } else { "stabilized" });
            r.set("point", rationals(&g.point));
            if let Some(w) = &g.warning {
                r.note(w.clone());
            }
            r.primary = json!(g.dims);
        }
        "symcheck" => {
            let d = presets::distribution(input, &params)?;
            let spec = opts.fields.as_ref().ok_or_else(|| CliError::Usage("symcheck needs options.fields".into()))?;
            let fields = presets::fields(spec, &d, &params)?;
            let forms = annihilator(&d).context(|| "annihilator".into())?;
            let checks = fields
                .iter()
                .enumerate()
                .map(|(i, v)| is_symmetry_with(v, &d, &forms).context(|| format!("field {}", i + 1)))
                .collect::<Result<Vec<bool>, _>>()?;
            let all = checks.iter().all(|&b| b);
            r.set("symmetries", &checks);
            if all {
                match structure_constants(&fields) {
                    Ok(l) => {
                        r.set("closed", true);
                        r.set("algebra_dim", l.dim());
                        r.set("derived_series", l.derived_series());
                    }
                    Err(lacune_core::Error::NotClosed(a, b)) => {
                        r.set("closed", false);
                        r.note(format!("[V{}, V{}] leaves the span", a + 1, b + 1));
                    }
                    Err(e) => return Err(CliError::Core { context: "structure constants".into(), err: e }),
                }
            }
            r.primary = json!(all);
        }
        "polysym" => {
            let d = presets::distribution(input, &params)?;
            let cap = opts.cap.unwrap_or(4);
            let p = polynomial_symmetries(&d, cap, seed).context(|| "polynomial symmetries".into())?;
            r.set("degree_cap", p.degree_cap);
            r.note("a lower bound for the symmetry dimension");
            r.primary = json!(p.dimension);
        }
        "killing" => {
            let g = presets::metric(input, &params)?;
            let d = opts.d.ok_or_else(|| CliError::Usage("killing needs options.d".into()))?;
            let extra = opts.extra_orders.unwrap_or(DEFAULT_EXTRA_ORDERS);
            let rep = integral_dimension_report(&g, d as usize, extra, seed).context(|| "integral dimension".into())?;
            r.set("point", rationals(&rep.point));
            let steps: Vec<Value> = rep
                .steps
                .iter()
                .map(|s| json!({"order": s.order, "jets": s.jets, "rank": s.rank, "free": s.free, "symbol": s.symbol}))
                .collect();
            r.set("steps", steps);
            r.primary = json!(rep.dimension);
        }
        "liealg" => {
            let l = presets::liealg(input, &params)?;
            r.set("dim", l.dim());
            r.set("basis", l.names());
            r.set("antisymmetric", l.is_antisymmetric());
            let res = l.jacobi_residuals();
            r.set("jacobi_residuals", res.len());
            if let Some(first) = res.first() {
                let (i, j, k) = first.triple;
                let n = l.names();
                r.note(format!("Jacobi fails on ({}, {}, {})", n[i], n[j], n[k]));
            }
            r.set("derived_series", l.derived_series());
            r.set("lower_central_series", l.lower_central_series());
            r.set("center", l.center_dim());
            if let Some(ks) = &opts.degrees {
                let mut h = serde_json::Map::new();
                for &k in ks {
                    let d = chevalley_eilenberg_checked(&l, k).context(|| format!("H^{k}"))?;
                    h.insert(k.to_string(), json!(d));
                }
                r.set("cohomology", h);
                r.note("cohomology with adjoint coefficients");
            }
            if opts.invariants {
                let rep = verify_invariant_relations().context(|| "invariant relations".into())?;
                let checks: Vec<Value> = rep.checks.iter().map(|c| json!({"check": c.name, "passed": c.passed})).collect();
                r.set("invariants", checks);
                r.set("invariants_passed", rep.passed());
                r.note(rep.convention);
            }
            r.primary = json!(l.derived_series());
        }
        "gap-report" => {
            let max_n = opts.max_n.unwrap_or(5);
            if max_n < 2 {
                return Err(CliError::Usage("max_n must be at least 2".into()));
            }
            let rows = gap_report(max_n, seed)?;
            let all = rows.iter().all(|r| r.ok);
            r.set("rows", rows.iter().map(|x| x.to_json()).collect::<Vec<_>>());
            r.set("mismatches", rows.iter().filter(|x| !x.ok).count());
            r.note("sub-maximal entries are realized lower bounds: explicit symmetry fields checked and closed");
            r.primary = json!(all);
            if !all {
                r.status = crate::report::Status::Mismatch;
            }
        }
        other => return Err(CliError::Usage(format!("unknown command `{other}`; expected one of {}", COMMANDS.join(", ")))),
    }
    r.settle();
    Ok(r)
}
