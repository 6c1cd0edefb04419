//! Preset names and inline definitions resolved to core objects.

use std::collections::BTreeMap;

use lacune_core::arith::field::Field;
use lacune_core::arith::linalg::sparse_from_dense;
use lacune_core::arith::poly::VarSet;
use lacune_core::arith::ratfun::RationalFunction;
use lacune_core::arith::rational::Rational;
use lacune_core::distribution::monge::{
    el_shift_symmetries, hilbert_cartan, monge_distribution, perturbed, power, power_symmetries,
    submax9_symmetries, MongeEquation,
};
use lacune_core::distribution::{Distribution, VectorField};
use lacune_core::expr::{parse_exp_function, parse_rational, parse_rational_function_with};
use lacune_core::gnla::{self, Gnla};
use lacune_core::integrals::{flat, linear_factor, revolution, warped_product, Metric};
use lacune_core::lie::presets as lp;
use lacune_core::lie::LieAlgebra;
use lacune_core::symbols::{self, SymbolSequence, SymbolSpace};

use crate::error::{CliError, Context};
use crate::job::{Fields, InlineBracket, InlineDistribution, InlineGnla, InlineLie, InlineSymbol, Input};

/// `name` or `name(arg, …)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Call {
    pub name: String,
    pub args: Vec<String>,
}

pub fn parse_call(s: &str) -> Result<Call, CliError> {
    let s = s.trim();
    let bad = || CliError::Usage(format!("malformed preset `{s}`"));
    match s.find('(') {
        None => {
            if s.is_empty() {
                return Err(bad());
            }
            Ok(Call { name: s.to_string(), args: Vec::new() })
        }
        Some(i) => {
            if !s.ends_with(')') {
                return Err(bad());
            }
            let inner = &s[i + 1..s.len() - 1];
            let args = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner.split(',').map(|a| a.trim().to_string()).collect()
            };
            if args.iter().any(|a| a.is_empty()) {
                return Err(bad());
            }
            Ok(Call { name: s[..i].trim().to_string(), args })
        }
    }
}

impl Call {
    fn arity(&self, n: usize) -> Result<(), CliError> {
        if self.args.len() == n {
            Ok(())
        } else {
            Err(CliError::Usage(format!("preset `{}` takes {n} argument(s), got {}", self.name, self.args.len())))
        }
    }

    fn usize(&self, i: usize) -> Result<usize, CliError> {
        self.args[i]
            .parse()
            .map_err(|_| CliError::Usage(format!("`{}`: argument {} must be a non-negative integer", self.name, i + 1)))
    }

    fn rational(&self, i: usize, params: &Params) -> Result<Rational, CliError> {
        let a = &self.args[i];
        if let Some(v) = params.get(a) {
            return Ok(v.clone());
        }
        parse_rational(a).context(|| format!("`{}`: argument {}", self.name, i + 1))
    }

    /// A rational constant, or a named symbol for ℚ(name).
    fn parameter(&self, i: usize, params: &Params) -> Result<RationalFunction, CliError> {
        let a = &self.args[i];
        if let Some(v) = params.get(a) {
            return Ok(RationalFunction::constant(v.clone()));
        }
        if a.chars().next().is_some_and(|c| c.is_alphabetic()) && a.chars().all(|c| c.is_alphanumeric() || c == '_') {
            return Ok(lp::parameter(a));
        }
        Ok(RationalFunction::constant(self.rational(i, params)?))
    }
}

pub type Params = BTreeMap<String, Rational>;

pub fn parse_params(raw: &BTreeMap<String, String>) -> Result<Params, CliError> {
    raw.iter().map(|(k, v)| Ok((k.clone(), parse_rational(v).context(|| format!("parameter {k}"))?))).collect()
}

fn param_slice(p: &Params) -> Vec<(&str, Rational)> {
    p.iter().map(|(k, v)| (k.as_str(), v.clone())).collect()
}

fn unknown(kind: &str, name: &str) -> CliError {
    CliError::Usage(format!("unknown {kind} preset `{name}`"))
}

fn preset_of<'a>(input: Option<&'a Input>, what: &str) -> Result<&'a Input, CliError> {
    input.ok_or_else(|| CliError::Usage(format!("this command needs an input {what}")))
}

pub fn metric(input: Option<&Input>, params: &Params) -> Result<Metric, CliError> {
    match preset_of(input, "metric")? {
        Input::Preset(s) => {
            let c = parse_call(s)?;
            match c.name.as_str() {
                "flat" => {
                    c.arity(1)?;
                    Ok(flat(c.usize(0)?))
                }
                "lemma1" | "linear_factor" => {
                    c.arity(1)?;
                    Ok(linear_factor(c.usize(0)?))
                }
                "lemma2" | "warped_product" => {
                    c.arity(3)?;
                    warped_product(c.usize(0)?, c.rational(1, params)?, c.rational(2, params)?).context(|| s.clone())
                }
                "revolution" => {
                    c.arity(2)?;
                    let ps = param_slice(params);
                    let f = parse_rational_function_with(&c.args[1], &VarSet::new(&["r"]), &ps).context(|| s.clone())?;
                    revolution(c.usize(0)?, &f).context(|| s.clone())
                }
                other => Err(unknown("metric", other)),
            }
        }
        Input::Metric(rows) => {
            let n = rows.len();
            let vars = lacune_core::integrals::metric::metric_vars(n);
            let ps = param_slice(params);
            let g = rows
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    r.iter()
                        .enumerate()
                        .map(|(j, e)| parse_rational_function_with(e, &vars, &ps).context(|| format!("input.metric[{i}][{j}]")))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            Metric::new(g).context(|| "input.metric".into())
        }
        _ => Err(CliError::Usage("expected a metric input".into())),
    }
}

pub fn monge(c: &Call, params: &Params) -> Result<Option<MongeEquation>, CliError> {
    let eq = match c.name.as_str() {
        "hilbert_cartan" => {
            c.arity(0)?;
            hilbert_cartan()
        }
        "engel" => {
            c.arity(0)?;
            power(2, 1).context(|| "engel".into())?
        }
        "power" => {
            c.arity(2)?;
            let m = c.usize(0)? as u32;
            power(m, c.usize(1)?).context(|| c.name.clone())?
        }
        "perturbed" => {
            c.arity(3)?;
            perturbed(c.usize(0)?, c.usize(1)?, c.rational(2, params)?).context(|| c.name.clone())?
        }
        _ => return Ok(None),
    };
    Ok(Some(eq))
}

fn contact3() -> Distribution {
    let vars = VarSet::new(&["x", "y", "z"]);
    let f = |s: &[&str]| {
        let cs = s.iter().map(|c| parse_exp_function(c, &vars, &[])).collect::<Result<Vec<_>, _>>().unwrap();
        VectorField::new(&vars, cs).unwrap()
    };
    Distribution::new(&vars, vec![f(&["1", "0", "y"]), f(&["0", "1", "0"])]).unwrap()
}

pub fn distribution(input: Option<&Input>, params: &Params) -> Result<Distribution, CliError> {
    match preset_of(input, "distribution")? {
        Input::Preset(s) => {
            let c = parse_call(s)?;
            if c.name == "heisenberg_contact" {
                c.arity(0)?;
                return Ok(contact3());
            }
            match monge(&c, params)? {
                Some(eq) => Ok(monge_distribution(&eq)),
                None => Err(unknown("distribution", &c.name)),
            }
        }
        Input::Monge(m) => {
            let eq = MongeEquation::parse(m.n, &m.f, &param_slice(params)).context(|| "input.monge.f".into())?;
            Ok(monge_distribution(&eq))
        }
        Input::Distribution(InlineDistribution { vars, fields }) => {
            let vs = VarSet::new(vars);
            let gens = inline_fields(&vs, fields, params, "input.distribution.fields")?;
            Distribution::new(&vs, gens).context(|| "input.distribution".into())
        }
        _ => Err(CliError::Usage("expected a distribution or Monge input".into())),
    }
}

fn inline_fields(vars: &VarSet, rows: &[Vec<String>], params: &Params, at: &str) -> Result<Vec<VectorField>, CliError> {
    let ps = param_slice(params);
    rows.iter()
        .enumerate()
        .map(|(i, r)| {
            let cs = r
                .iter()
                .enumerate()
                .map(|(j, e)| parse_exp_function(e, vars, &ps).context(|| format!("{at}[{i}][{j}]")))
                .collect::<Result<Vec<_>, _>>()?;
            VectorField::new(vars, cs).context(|| format!("{at}[{i}]"))
        })
        .collect()
}

pub fn fields(spec: &Fields, d: &Distribution, params: &Params) -> Result<Vec<VectorField>, CliError> {
    match spec {
        Fields::Inline(rows) => inline_fields(d.vars(), rows, params, "options.fields"),
        Fields::Preset(s) => {
            let c = parse_call(s)?;
            let out = match c.name.as_str() {
                "power_symmetries" => {
                    c.arity(1)?;
                    power_symmetries(c.usize(0)? as i64)
                }
                "submax9_symmetries" => {
                    c.arity(1)?;
                    submax9_symmetries(c.rational(0, params)?)
                }
                "el_shift" => {
                    c.arity(2)?;
                    el_shift_symmetries(c.usize(0)?, c.rational(1, params)?)
                }
                other => return Err(unknown("field list", other)),
            };
            out.context(|| s.clone())
        }
    }
}

fn named_bracket<F: Field>(
    names: &[String],
    b: &InlineBracket,
    i: usize,
    at: &str,
    value: impl Fn(&str) -> Result<F, CliError>,
) -> Result<(usize, usize, Vec<F>), CliError> {
    let idx = |s: &str| {
        names.iter().position(|n| n == s).ok_or_else(|| CliError::Usage(format!("{at}[{i}]: unknown basis element `{s}`")))
    };
    let mut v = vec![F::zero(); names.len()];
    for (k, x) in &b.value {
        v[idx(k)?] = value(x)?;
    }
    Ok((idx(&b.a)?, idx(&b.b)?, v))
}

pub fn gnla(input: Option<&Input>) -> Result<Option<Gnla>, CliError> {
    match preset_of(input, "graded algebra")? {
        Input::Preset(s) => {
            let c = parse_call(s)?;
            let g = match c.name.as_str() {
                "free235" => gnla::free235(),
                "free" if c.args == ["2", "3", "5"] => gnla::free235(),
                "heisenberg" => {
                    c.arity(1)?;
                    gnla::heisenberg(c.usize(0)?).context(|| s.clone())?
                }
                "abelian" => {
                    c.arity(1)?;
                    gnla::abelian(c.usize(0)?)
                }
                "theorem6_negative" | "symbol2356" => gnla::symbol2356(),
                _ => return Ok(None),
            };
            Ok(Some(g))
        }
        Input::Gnla(InlineGnla { names, depths, brackets }) => {
            let specs = brackets
                .iter()
                .enumerate()
                .map(|(i, b)| {
                    let (a, bb, v) = named_bracket::<Rational>(names, b, i, "input.gnla.brackets", |x| {
                        parse_rational(x).context(|| format!("input.gnla.brackets[{i}]"))
                    })?;
                    Ok((a, bb, sparse_from_dense(&v)))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            Ok(Some(Gnla::new(names.clone(), depths.clone(), &specs).context(|| "input.gnla".into())?))
        }
        _ => Ok(None),
    }
}

/// A symbol given as a space to prolong, or as known dimensions.
pub enum SymbolInput {
    Space(SymbolSpace, usize),
    Given(SymbolSequence, usize, String),
}

pub fn symbol(input: Option<&Input>, cap: usize) -> Result<SymbolInput, CliError> {
    let s = match preset_of(input, "symbol")? {
        Input::Preset(s) => s,
        Input::Symbol(InlineSymbol { n, w, k, basis, g0 }) => {
            let rows = basis
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter().map(|x| parse_rational(x).context(|| format!("input.symbol.basis[{i}]"))).collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            let g = SymbolSpace::new(*n, *w, *k, rows).context(|| "input.symbol".into())?;
            return Ok(SymbolInput::Space(g, g0.unwrap_or(*n)));
        }
        _ => return Err(CliError::Usage("input is not a symbol".into())),
    };
    let c = parse_call(s)?;
    let n = || -> Result<usize, CliError> {
        c.arity(1)?;
        c.usize(0)
    };
    Ok(match c.name.as_str() {
        "killing" => {
            c.arity(2)?;
            let g = symbols::killing_symbol(c.usize(0)?, c.usize(1)? as u32);
            let w = g.w;
            SymbolInput::Space(g, w)
        }
        "so" | "riemannian" => SymbolInput::Space(symbols::so(n()?), n()?),
        "co" | "conformal" => SymbolInput::Space(symbols::co(n()?), n()?),
        "sl" => SymbolInput::Space(symbols::sl(n()?), n()?),
        "gl" => SymbolInput::Space(symbols::gl(n()?), n()?),
        "concircular" => SymbolInput::Space(symbols::concircular(n()?), n()?),
        "mobility" => {
            let k = n()?;
            SymbolInput::Space(symbols::mobility(k), k * (k + 1) / 2)
        }
        "affine" => {
            let k = n()?;
            SymbolInput::Given(SymbolSequence::given(1, vec![k * k, 0]), k, "g1 = gl(n); the second-order equation forces g2 = 0".into())
        }
        "projective" => {
            let k = n()?;
            let tail = symbols::prolongation_sequence(&symbols::projective_second_order(k), cap);
            let mut dims = vec![k * k];
            dims.extend(tail.dims);
            SymbolInput::Given(SymbolSequence::given(1, dims), k, "g1 = gl(n) given; g2 constructed and prolonged".into())
        }
        other => return Err(unknown("symbol", other)),
    })
}

pub fn liealg(input: Option<&Input>, params: &Params) -> Result<LieAlgebra<RationalFunction>, CliError> {
    let l = match preset_of(input, "Lie algebra")? {
        Input::Preset(s) => {
            let c = parse_call(s)?;
            let ctx = || s.clone();
            match c.name.as_str() {
                "cartan7" => {
                    c.arity(1)?;
                    lp::cartan7(c.parameter(0, params)?)
                }
                "w7" => {
                    c.arity(1)?;
                    lp::w7(c.parameter(0, params)?).context(ctx)?
                }
                "w7_half" => lp::w7_half().context(ctx)?,
                "submax9" => {
                    c.arity(1)?;
                    lp::submax9(c.parameter(0, params)?).context(ctx)?
                }
                "theorem6_11" | "graded2356" => lp::graded2356().to_ratfun(),
                "heisenberg" => {
                    c.arity(1)?;
                    lp::heisenberg(c.usize(0)?).context(ctx)?.to_ratfun()
                }
                "sl2" => lp::sl2().to_ratfun(),
                other => {
                    // graded presets double as Lie algebras
                    match gnla(input)? {
                        Some(g) => g.to_lie_algebra().to_ratfun(),
                        None => return Err(unknown("Lie algebra", other)),
                    }
                }
            }
        }
        Input::Liealg(InlineLie { names, params: symbols, brackets }) => {
            let vars = VarSet::new(symbols);
            let ps = param_slice(params);
            let list = brackets
                .iter()
                .enumerate()
                .map(|(i, b)| {
                    named_bracket(names, b, i, "input.liealg.brackets", |x| {
                        parse_rational_function_with(x, &vars, &ps).context(|| format!("input.liealg.brackets[{i}]"))
                    })
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            LieAlgebra::from_brackets(names.clone(), &list).context(|| "input.liealg".into())?
        }
        Input::Gnla(_) => gnla(input)?.unwrap().to_lie_algebra().to_ratfun(),
        _ => return Err(CliError::Usage("expected a Lie algebra input".into())),
    };
    if params.is_empty() {
        return Ok(l);
    }
    let vals: Vec<(&str, Rational)> = param_slice(params);
    l.specialize(&vals).context(|| "specializing parameters".into())
}
