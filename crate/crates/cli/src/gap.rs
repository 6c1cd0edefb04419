//! The table of maximal and sub-maximal dimensions.

use serde_json::{json, Value};

use lacune_core::arith::rational::Rational;
use lacune_core::distribution::monge::{
    el_shift_symmetries, hilbert_cartan, monge_distribution, perturbed, power, power_symmetries, submax9_symmetries,
    MongeEquation,
};
use lacune_core::distribution::symmetry::{annihilator, is_symmetry_with, polynomial_symmetries, structure_constants};
use lacune_core::distribution::{symbol_at_point, VectorField};
use lacune_core::gnla;
use lacune_core::integrals::jets::DEFAULT_EXTRA_ORDERS;
use lacune_core::integrals::{flat, integral_dimension};
use lacune_core::symbols::{self, dimension_bound, prolongation_sequence, SymbolSequence, SymbolSpace};
use lacune_core::tanaka::{dimension_certificate, tanaka_prolongation, DEFAULT_CAP};

use crate::error::{CliError, Context};

/// Smallest degree cap at which the polynomial symmetries of the
/// Hilbert–Cartan distribution reach 14.
pub const HILBERT_CARTAN_CAP: u32 = 6;

#[derive(Clone, Debug)]
pub struct GapRow {
    pub structure: String,
    pub n: usize,
    pub formula: String,
    pub closed_form: usize,
    pub computed: Option<usize>,
    pub source: String,
    /// (claimed, realized) sub-maximal dimension
    pub sub_max: Option<(usize, Option<usize>)>,
    pub ok: bool,
}

impl GapRow {
    fn new(structure: &str, n: usize, formula: &str, closed_form: usize, computed: Option<usize>, source: &str) -> Self {
        GapRow {
            structure: structure.into(),
            n,
            formula: formula.into(),
            closed_form,
            computed,
            source: source.into(),
            sub_max: None,
            ok: computed == Some(closed_form),
        }
    }

    fn with_sub(mut self, claimed: usize, realized: Option<usize>) -> Self {
        self.sub_max = Some((claimed, realized));
        self.ok = self.ok && realized == Some(claimed);
        self
    }

    pub fn to_json(&self) -> Value {
        let opt = |v: Option<usize>| v.map_or(json!("-"), |x| json!(x));
        json!({
            "structure": self.structure,
            "n": self.n,
            "formula": self.formula,
            "closed_form": self.closed_form,
            "computed": opt(self.computed),
            "sub_max": self.sub_max.map_or(json!("-"), |(c, _)| json!(c)),
            "realized": self.sub_max.map_or(json!("-"), |(_, r)| opt(r)),
            "source": self.source,
            "match": self.ok,
        })
    }
}

fn prolonged(g: &SymbolSpace, g0: usize) -> Option<usize> {
    dimension_bound(&prolongation_sequence(g, symbols::DEFAULT_CAP), g0).ok()
}

fn given(dims: Vec<usize>, g0: usize) -> Option<usize> {
    dimension_bound(&SymbolSequence::given(1, dims), g0).ok()
}

fn monge_tanaka(eq: &MongeEquation, seed: u64) -> Result<usize, CliError> {
    let (m, _) = symbol_at_point(&monge_distribution(eq), None, seed).context(|| "Monge symbol".into())?;
    let t = tanaka_prolongation(&m, None, DEFAULT_CAP).context(|| "Tanaka prolongation".into())?;
    dimension_certificate(&t).context(|| "Tanaka prolongation".into())
}

/// Dimension of the algebra spanned by `fields`, if every one is a symmetry
/// of the equation and the span closes.
fn realized(eq: &MongeEquation, fields: &[VectorField]) -> Result<Option<usize>, CliError> {
    let d = monge_distribution(eq);
    let forms = annihilator(&d).context(|| "annihilator".into())?;
    for v in fields {
        if !is_symmetry_with(v, &d, &forms).context(|| "symmetry check".into())? {
            return Ok(None);
        }
    }
    match structure_constants(fields) {
        Ok(l) if l.is_lie_algebra() => Ok(Some(l.dim())),
        Ok(_) | Err(lacune_core::Error::NotClosed(..)) => Ok(None),
        Err(e) => Err(CliError::Core { context: "structure constants".into(), err: e }),
    }
}

pub fn gap_report(max_n: usize, seed: u64) -> Result<Vec<GapRow>, CliError> {
    let mut rows = Vec::new();
    for n in 2..=max_n {
        rows.push(GapRow::new("Riemannian metric", n, "n(n+1)/2", n * (n + 1) / 2, prolonged(&symbols::so(n), n), "so(n) prolonged"));
    }
    for n in 2..=max_n {
        rows.push(GapRow::new("affine connection", n, "n+n^2", n + n * n, given(vec![n * n, 0], n), "g1 = gl(n), g2 = 0"));
    }
    for n in 3..=max_n {
        rows.push(GapRow::new(
            "conformal structure",
            n,
            "(n+1)(n+2)/2",
            (n + 1) * (n + 2) / 2,
            prolonged(&symbols::co(n), n),
            "co(n) prolonged",
        ));
    }
    for n in 2..=max_n {
        let tail = prolongation_sequence(&symbols::projective_second_order(n), symbols::DEFAULT_CAP);
        let mut dims = vec![n * n];
        dims.extend(tail.dims);
        rows.push(GapRow::new("projective structure", n, "n^2+2n", n * n + 2 * n, given(dims, n), "g1 = gl(n), g2 prolonged"));
    }
    for n in 3..=max_n {
        rows.push(GapRow::new(
            "geodesic mobility",
            n,
            "(n+1)(n+2)/2",
            (n + 1) * (n + 2) / 2,
            prolonged(&symbols::mobility(n), n * (n + 1) / 2),
            "mobility symbol prolonged",
        ));
    }
    for n in 2..=max_n {
        rows.push(GapRow::new("concircular fields", n, "n+1", n + 1, prolonged(&symbols::concircular(n), n), "line of Id prolonged"));
    }
    for n in 2..=max_n {
        let f = (n + 1) * (n + 1) * ((n + 1) * (n + 1) - 1) / 12;
        let g = symbols::killing_symbol(n, 2);
        let w = g.w;
        rows.push(GapRow::new("quadratic integrals", n, "(n+1)^2((n+1)^2-1)/12", f, prolonged(&g, w), "Killing 2-tensor symbol prolonged"));
    }
    let g = symbols::killing_symbol(2, 3);
    let w = g.w;
    rows.push(GapRow::new("cubic integrals", 2, "10", 10, prolonged(&g, w), "Killing 3-tensor symbol prolonged"));
    for (n, d, f, formula) in [
        (2, 1, 3, "n(n+1)/2"),
        (3, 1, 6, "n(n+1)/2"),
        (2, 2, 6, "(n+1)^2((n+1)^2-1)/12"),
        (3, 2, 20, "(n+1)^2((n+1)^2-1)/12"),
        (2, 3, 10, "10"),
    ] {
        let got = integral_dimension(&flat(n), d, DEFAULT_EXTRA_ORDERS, seed).context(|| format!("flat({n}), d = {d}"))?;
        rows.push(GapRow::new(&format!("degree-{d} integrals, flat metric"), n, formula, f, Some(got), "integral solver"));
    }

    let one = Rational::one();
    let hc = monge_tanaka(&hilbert_cartan(), seed)?;
    let free = dimension_certificate(&tanaka_prolongation(&gnla::free235(), None, DEFAULT_CAP).context(|| "free(2,3,5)".into())?)
        .context(|| "free(2,3,5)".into())?;
    let cubic = realized(&power(3, 2).context(|| "power".into())?, &power_symmetries(3).context(|| "fields".into())?)?;
    rows.push(
        GapRow::new("rank-2 distribution, growth (2,3,5)", 2, "14", 14, (hc == free).then_some(hc), "Tanaka prolongation")
            .with_sub(7, cubic),
    );
    let poly = polynomial_symmetries(&monge_distribution(&hilbert_cartan()), HILBERT_CARTAN_CAP, seed)
        .context(|| "polynomial symmetries".into())?;
    rows.push(GapRow::new(
        "y' = (z'')^2, polynomial symmetries",
        2,
        "14",
        14,
        Some(poly.dimension),
        "polynomial ansatz, degree 6",
    ));
    let g2356 = dimension_certificate(&tanaka_prolongation(&gnla::symbol2356(), None, DEFAULT_CAP).context(|| "(2,3,5,6)".into())?)
        .context(|| "(2,3,5,6)".into())?;
    rows.push(GapRow::new("graded symbol, growth (2,3,5,6)", 3, "11", 11, Some(g2356), "Tanaka prolongation"));
    for n in 3..=4usize {
        let top = monge_tanaka(&power(2, n).context(|| "power".into())?, seed)?;
        let eq = perturbed(n, n - 1, one.clone()).context(|| "perturbed".into())?;
        let mut sub = realized(&eq, &el_shift_symmetries(n, one.clone()).context(|| "fields".into())?)?;
        if n == 3 {
            let listed = realized(&eq, &submax9_symmetries(one.clone()).context(|| "fields".into())?)?;
            if listed != sub {
                sub = None;
            }
        }
        rows.push(
            GapRow::new(&format!("Monge equation of order {n}"), n, "2n+5", 2 * n + 5, Some(top), "Tanaka prolongation")
                .with_sub(2 * n + 3, sub),
        );
    }
    Ok(rows)
}
