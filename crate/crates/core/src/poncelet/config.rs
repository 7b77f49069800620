use std::collections::BTreeSet;

use rand::Rng;

use super::{
    binomial, config_line, ensure_distinct, is_singular_at, poncelet_polynomial, subsets,
    vertex_point, Param,
};
use crate::binform::BinForm;
use crate::error::{Error, Result};
use crate::exact::{int, ExactMatrix};
use crate::mpoly::{MPoly, ProjLine, ProjPoint};
use crate::syzygy::{random_form, seeded_rng, LinearSystem, SampleRng, RETRY_BUDGET};

/// Containment of one configuration line in the hypersurface.
#[derive(Clone, Debug, PartialEq)]
pub struct LineCheck {
    pub subset: Vec<usize>,
    pub line: ProjLine,
    pub contained: bool,
}

/// Singularity of the hypersurface at one vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexCheck {
    pub subset: Vec<usize>,
    pub point: ProjPoint,
    pub singular: bool,
}

/// Lines and vertices of the configuration built from `n - 1` parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct ConfigReport {
    pub n: usize,
    pub k: usize,
    pub params: Vec<Param>,
    pub seed: u64,
    pub system: LinearSystem,
    pub equation: MPoly,
    pub lines: Vec<LineCheck>,
    pub vertices: Vec<VertexCheck>,
    /// No two vertices coincide.
    pub vertices_distinct: bool,
    /// The lines together span the whole ambient space.
    pub lines_span: bool,
}

impl ConfigReport {
    pub fn lines_contained(&self) -> usize {
        self.lines.iter().filter(|l| l.contained).count()
    }

    pub fn singular_vertices(&self) -> usize {
        self.vertices.iter().filter(|v| v.singular).count()
    }

    pub fn pass(&self) -> bool {
        self.lines.len() == binomial(self.n - 1, self.k)
            && self.vertices.len() == binomial(self.n - 1, self.k + 1)
            && self.lines_contained() == self.lines.len()
            && self.singular_vertices() == self.vertices.len()
            && self.vertices_distinct
            && self.lines_span
    }
}

fn root_product(params: &[Param]) -> BinForm {
    BinForm::from_roots(&params.iter().map(Param::pair).collect::<Vec<_>>())
}

/// System `⟨u f, v f, f_2, ..., f_k⟩` with `f` vanishing at `params` and
/// random completing forms, redrawn until the Poncelet determinant is nonzero.
fn configuration_system(
    n: usize,
    k: usize,
    params: &[Param],
    rng: &mut SampleRng,
) -> Result<LinearSystem> {
    let f = root_product(params);
    for _ in 0..RETRY_BUDGET {
        let mut forms = vec![f.shift(1, 0), f.shift(0, 1)];
        forms.extend((1..k).map(|_| random_form(n, rng)));
        let Ok(sys) = LinearSystem::new(&forms) else {
            continue;
        };
        match poncelet_polynomial(&sys) {
            Ok(_) => return Ok(sys),
            Err(Error::DegenerateDeterminant) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::RetryBudget(RETRY_BUDGET))
}

/// Builds the configuration system for `n - 1` distinct parameters and checks
/// every line and vertex against its Poncelet hypersurface.
pub fn verify_teorema(n: usize, k: usize, params: &[Param], seed: u64) -> Result<ConfigReport> {
    if k == 0 || n < k + 2 {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= k and k + 2 <= n, got n = {n}, k = {k}"
        )));
    }
    if params.len() != n - 1 {
        return Err(Error::InvalidParameters(format!(
            "expected {} parameters, got {}",
            n - 1,
            params.len()
        )));
    }
    ensure_distinct(params)?;
    let mut rng = seeded_rng(seed);
    let system = configuration_system(n, k, params, &mut rng)?;
    let h = poncelet_polynomial(&system)?;

    let pick =
        |subset: &[usize]| -> Vec<Param> { subset.iter().map(|&i| params[i].clone()).collect() };
    let lines = subsets(n - 1, k)
        .into_iter()
        .map(|subset| {
            let line = config_line(&pick(&subset), k)?;
            let contained = h.equation.restrict_to_line(&line)?.is_zero();
            Ok(LineCheck {
                subset,
                line,
                contained,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let vertices = subsets(n - 1, k + 1)
        .into_iter()
        .map(|subset| {
            let point = vertex_point(&pick(&subset), k)?;
            let singular = is_singular_at(&h, &point)?;
            Ok(VertexCheck {
                subset,
                point,
                singular,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let distinct: BTreeSet<Vec<String>> = vertices
        .iter()
        .map(|v| v.point.coords().iter().map(|c| c.to_string()).collect())
        .collect();
    let spanning = lines
        .iter()
        .flat_map(|l| [l.line.p().coords().to_vec(), l.line.q().coords().to_vec()])
        .collect::<Vec<_>>();
    let lines_span = ExactMatrix::from_rows(spanning)?.rank() == k + 2;

    Ok(ConfigReport {
        n,
        k,
        params: params.to_vec(),
        seed,
        vertices_distinct: distinct.len() == vertices.len(),
        lines_span,
        system,
        equation: h.equation,
        lines,
        vertices,
    })
}

/// Random system of degree `n` and dimension `k + 1` whose base divisor is
/// exactly the product of the given roots.
pub fn planted_system(
    n: usize,
    k: usize,
    roots: &[Param],
    rng: &mut SampleRng,
) -> Result<LinearSystem> {
    let d = roots.len();
    if n < d + k {
        return Err(Error::InvalidParameters(format!(
            "{d} base points leave no room for {} forms of degree {n}",
            k + 1
        )));
    }
    let g = root_product(roots);
    for _ in 0..RETRY_BUDGET {
        let forms: Vec<BinForm> = (0..=k).map(|_| &g * &random_form(n - d, rng)).collect();
        let Ok(sys) = LinearSystem::new(&forms) else {
            continue;
        };
        if sys.base_divisor().degree() != d {
            continue;
        }
        match poncelet_polynomial(&sys) {
            Ok(_) => return Ok(sys),
            Err(Error::DegenerateDeterminant) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::RetryBudget(RETRY_BUDGET))
}

/// `count` distinct parameters with small integer entries.
pub fn random_params(count: usize, rng: &mut SampleRng) -> Vec<Param> {
    let mut out: Vec<Param> = Vec::with_capacity(count);
    while out.len() < count {
        let (a, b) = (rng.gen_range(-6..=6), rng.gen_range(-6..=6));
        if a == 0 && b == 0 {
            continue;
        }
        let p = Param::new(int(a), int(b)).unwrap();
        if !out.iter().any(|q| q.same_point(&p)) {
            out.push(p);
        }
    }
    out
}
