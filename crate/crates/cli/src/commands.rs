use serde_json::{json, Map, Value};

use ponsyz::poncelet::{
    binomial, factor_base_points, factor_base_points_with_roots, planted_system, poncelet_matrix,
    poncelet_polynomial, verify_teorema, zero_locus_tests, zero_locus_vertices,
    BasePointFactorization, Param,
};
use ponsyz::syzygy::{parse_system, random_form, seeded_rng, verify_dime};
use ponsyz::{BinForm, Error, LinearSystem, MPoly, PolyMatrix, ProjPoint};

use crate::report::{Inputs, Report};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAILED_CHECK: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DEGENERATE: u8 = 3;

pub struct Options {
    pub seed: u64,
    pub trials: usize,
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DegenerateDeterminant => EXIT_DEGENERATE,
            Error::Internal(_) => EXIT_FAILED_CHECK,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<(Report, u8), Failure>;

fn usage(message: String) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message,
    }
}

fn read(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))
}

fn load_system(path: &str) -> Result<(String, LinearSystem), Failure> {
    let text = read(path)?;
    let sys = parse_system(&text).map_err(|e| usage(format!("{path}: {e}")))?;
    Ok((text, sys))
}

fn args(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|x| x.to_string()).collect()
}

fn finish(
    command: &str,
    inputs: Inputs,
    opts: &Options,
    results: Vec<Value>,
    pass: bool,
) -> Outcome {
    let code = if pass { EXIT_PASS } else { EXIT_FAILED_CHECK };
    Ok((Report::new(command, inputs, opts.seed, results, pass), code))
}

pub fn syzygy(path: &str, d: usize, opts: &Options) -> Outcome {
    let (text, sys) = load_system(path)?;
    let inputs = Inputs::new(
        args(&[("system", json!(path)), ("d", json!(d))]),
        &[(path.to_string(), text)],
    );
    let basis = sys.syzygy_basis(d);
    let result = json!({
        "system": sys.to_string(),
        "d": d,
        "r": basis.len(),
        "basis": strings(&basis),
    });
    finish("syzygy", inputs, opts, vec![result], true)
}

pub fn splitting(path: &str, opts: &Options) -> Outcome {
    let (text, sys) = load_system(path)?;
    let inputs = Inputs::new(
        args(&[("system", json!(path))]),
        &[(path.to_string(), text)],
    );
    let split = sys.splitting_type()?;
    let result = json!({
        "system": sys.to_string(),
        "parts": split.parts(),
        "base_degree": split.base_degree(),
        "base_divisor": sys.base_divisor().to_string(),
        "counts": sys.syzygy_counts(sys.n()),
    });
    finish("splitting", inputs, opts, vec![result], true)
}

fn factorization_json(f: &BasePointFactorization) -> Value {
    json!({
        "base_points": strings(&f.base_points),
        "factors": strings(&f.factors),
        "residual": f.residual.to_string(),
        "residual_system_equation": f.residual_system_equation.to_string(),
        "reconstructs": f.reconstructs,
        "residual_matches": f.residual_matches,
    })
}

pub fn basepoints(path: &str, points: Option<&str>, opts: &Options) -> Outcome {
    let (text, sys) = load_system(path)?;
    let inputs = Inputs::new(
        args(&[("system", json!(path)), ("points", json!(points))]),
        &[(path.to_string(), text)],
    );
    let f = match points {
        Some(p) => factor_base_points_with_roots(&sys, &Param::parse_list(p)?)?,
        None => factor_base_points(&sys)?,
    };
    let mut result = factorization_json(&f);
    result["system"] = json!(sys.to_string());
    result["base_divisor"] = json!(sys.base_divisor().to_string());
    finish("basepoints", inputs, opts, vec![result], f.holds())
}

/// A single polynomial, or a matrix whose determinant is taken.
fn parse_comparison(text: &str, nvars: usize) -> Result<MPoly, Failure> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    match lines.as_slice() {
        [] => Err(usage("comparison file is empty".into())),
        [single] => Ok(MPoly::parse(single, nvars)?),
        rows => {
            let rows = rows
                .iter()
                .map(|r| {
                    r.split(',')
                        .map(|e| MPoly::parse(e.trim(), nvars))
                        .collect()
                })
                .collect::<Result<Vec<Vec<MPoly>>, Error>>()?;
            Ok(PolyMatrix::new(nvars, rows)?.det()?)
        }
    }
}

pub fn poncelet(path: &str, compare: Option<&str>, opts: &Options) -> Outcome {
    let (text, sys) = load_system(path)?;
    let mut files = vec![(path.to_string(), text)];
    let comparison = compare
        .map(|c| read(c).map(|t| (c.to_string(), t)))
        .transpose()?;
    files.extend(comparison.clone());
    let inputs = Inputs::new(
        args(&[("system", json!(path)), ("compare", json!(compare))]),
        &files,
    );

    let m = poncelet_matrix(&sys);
    let grid: Vec<Vec<String>> = (0..m.matrix.rows())
        .map(|i| strings(m.matrix.row(i)))
        .collect();
    let mut result = json!({
        "system": sys.to_string(),
        "n": sys.n(),
        "k": sys.k(),
        "complement": m.complement,
        "matrix": grid,
    });
    let h = match poncelet_polynomial(&sys) {
        Err(Error::DegenerateDeterminant) => {
            result["degenerate"] = json!(true);
            let report = Report::new("poncelet", inputs, opts.seed, vec![result], false);
            return Ok((report, EXIT_DEGENERATE));
        }
        other => other?,
    };
    result["degenerate"] = json!(false);
    result["equation"] = json!(h.equation.to_string());
    result["degree"] = json!(h.degree());
    let mut pass = true;
    if let Some((file, text)) = comparison {
        let other = parse_comparison(&text, sys.k() + 2)?;
        let proportional = h.equation.proportional(&other);
        pass = proportional;
        result["compare"] = json!({
            "file": file,
            "polynomial": other.to_string(),
            "proportional": proportional,
        });
    }
    finish("poncelet", inputs, opts, vec![result], pass)
}

pub fn dime(k: usize, n: usize, r: usize, d: usize, opts: &Options) -> Outcome {
    let inputs = Inputs::new(
        args(&[
            ("k", json!(k)),
            ("n", json!(n)),
            ("r", json!(r)),
            ("d", json!(d)),
            ("trials", json!(opts.trials)),
        ]),
        &[],
    );
    let reports = verify_dime(k, n, r, d, opts.trials, opts.seed)?;
    let pass = reports.iter().all(|rep| rep.agrees());
    let results = reports
        .iter()
        .map(|rep| {
            json!({
                "trial": rep.trial,
                "seed": rep.seed,
                "system": rep.system.to_string(),
                "splitting": rep.splitting.parts(),
                "syzygies": rep.syzygies,
                "expected_codim": rep.expected_codim,
                "tangent_codim": rep.tangent_codim,
                "h1_codim": rep.h1_codim,
                "agrees": rep.agrees(),
            })
        })
        .collect();
    finish("verify dime", inputs, opts, results, pass)
}

fn config_inputs(
    n: usize,
    k: usize,
    points: &str,
    opts: &Options,
) -> Result<(Inputs, Vec<Param>), Failure> {
    let params = Param::parse_list(points)?;
    let inputs = Inputs::new(
        args(&[
            ("n", json!(n)),
            ("k", json!(k)),
            ("points", json!(strings(&params))),
            ("trials", json!(opts.trials)),
        ]),
        &[],
    );
    Ok((inputs, params))
}

pub fn teorema(n: usize, k: usize, points: &str, opts: &Options) -> Outcome {
    let (inputs, params) = config_inputs(n, k, points, opts)?;
    let mut results = Vec::new();
    let mut pass = true;
    for t in 0..opts.trials {
        let seed = opts.seed.wrapping_add(t as u64);
        let rep = verify_teorema(n, k, &params, seed)?;
        pass &= rep.pass();
        let lines: Vec<Value> = rep
            .lines
            .iter()
            .map(|l| json!({"subset": l.subset, "line": l.line.to_string(), "contained": l.contained}))
            .collect();
        let vertices: Vec<Value> = rep
            .vertices
            .iter()
            .map(|v| json!({"subset": v.subset, "point": v.point.to_string(), "singular": v.singular}))
            .collect();
        results.push(json!({
            "trial": t,
            "seed": seed,
            "system": rep.system.to_string(),
            "equation": rep.equation.to_string(),
            "lines_contained": rep.lines_contained(),
            "lines_total": rep.lines.len(),
            "singular_vertices": rep.singular_vertices(),
            "vertices_total": rep.vertices.len(),
            "vertices_distinct": rep.vertices_distinct,
            "lines_span": rep.lines_span,
            "lines": lines,
            "vertices": vertices,
            "pass": rep.pass(),
        }));
    }
    finish("verify teorema", inputs, opts, results, pass)
}

pub fn tpenc(n: usize, k: usize, points: &str, opts: &Options) -> Outcome {
    let (inputs, roots) = config_inputs(n, k, points, opts)?;
    let mut results = Vec::new();
    let mut pass = true;
    for t in 0..opts.trials {
        let seed = opts.seed.wrapping_add(t as u64);
        let sys = planted_system(n, k, &roots, &mut seeded_rng(seed))?;
        let f = factor_base_points_with_roots(&sys, &roots)?;
        pass &= f.holds();
        let mut result = factorization_json(&f);
        result["trial"] = json!(t);
        result["seed"] = json!(seed);
        result["system"] = json!(sys.to_string());
        result["pass"] = json!(f.holds());
        results.push(result);
    }
    finish("verify tpenc", inputs, opts, results, pass)
}

pub fn prozero(n: usize, k: usize, points: &str, opts: &Options) -> Outcome {
    let (inputs, roots) = config_inputs(n, k, points, opts)?;
    if roots.len() != n {
        return Err(usage(format!("expected {n} roots, got {}", roots.len())));
    }
    let s = BinForm::from_roots(&roots.iter().map(Param::pair).collect::<Vec<_>>());
    let vertices = zero_locus_vertices(&roots, k)?;
    let mut pass = vertices.len() == binomial(n, k + 1);
    let mut vertex_checks = Vec::new();
    for (subset, point) in &vertices {
        let (divides, member) = zero_locus_tests(&s, point, k)?;
        pass &= divides && member;
        vertex_checks.push(json!({
            "subset": subset,
            "point": point.to_string(),
            "divisibility": divides,
            "membership": member,
        }));
    }
    let mut rng = seeded_rng(opts.seed);
    let mut probes = Vec::new();
    while probes.len() < opts.trials {
        let Some(a) = ProjPoint::new(random_form(k + 1, &mut rng).coeffs().to_vec()) else {
            continue;
        };
        if vertices.iter().any(|(_, v)| *v == a) {
            continue;
        }
        let (divides, member) = zero_locus_tests(&s, &a, k)?;
        pass &= !divides && !member;
        probes.push(json!({
            "point": a.to_string(),
            "divisibility": divides,
            "membership": member,
        }));
    }
    let result = json!({
        "section": s.to_string(),
        "count": vertices.len(),
        "expected_count": binomial(n, k + 1),
        "vertices": vertex_checks,
        "probes": probes,
    });
    finish("verify prozero", inputs, opts, vec![result], pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_by_error_kind() {
        assert_eq!(
            Failure::from(Error::DegenerateDeterminant).code,
            EXIT_DEGENERATE
        );
        assert_eq!(
            Failure::from(Error::Internal("x".into())).code,
            EXIT_FAILED_CHECK
        );
        assert_eq!(Failure::from(Error::Parse("x".into())).code, EXIT_USAGE);
        assert_eq!(Failure::from(Error::IrrationalBaseDivisor).code, EXIT_USAGE);
    }
}
