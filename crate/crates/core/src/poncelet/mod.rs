//! Poncelet hypersurfaces of linear systems of binary forms.
//!
//! Coordinates `x0..x{k+1}` live on `P(V_{k+1})`. A parameter `(a:b)` of the
//! projective line determines the osculating hyperplane
//! `L_(a:b) = sum_m a^(k+1-m) b^m x_m` of the rational normal curve, and a
//! point `x` corresponds to the binary form `α_x = sum_m x_m u^(k+1-m) v^m`
//! of degree `k+1`; `L_p(x) = α_x(p)`.

mod config;
mod hypersurface;
mod schwarz;
mod zero_locus;

pub use config::{
    planted_system, random_params, verify_teorema, ConfigReport, LineCheck, VertexCheck,
};
pub use hypersurface::{
    factor_base_points, factor_base_points_with_roots, is_singular_at, poncelet_matrix,
    poncelet_polynomial, BasePointFactorization, PonceletHypersurface, PonceletMatrixResult,
};
pub use schwarz::SchwarzData;
pub use zero_locus::{
    point_form, vertices_on_hypersurface, zero_locus_check, zero_locus_count, zero_locus_tests,
    zero_locus_vertices, zero_order,
};

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{parse_rational, ExactMatrix, Rational};
use crate::mpoly::{null_points, MPoly, ProjLine, ProjPoint};

/// Point `(a:b)` of the projective line, not both zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Param {
    a: Rational,
    b: Rational,
}

impl Param {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::InvalidParameters("parameter (0:0)".into()));
        }
        Ok(Param { a, b })
    }

    pub fn from_i64(a: i64, b: i64) -> Result<Self> {
        Self::new(crate::exact::int(a), crate::exact::int(b))
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn pair(&self) -> (Rational, Rational) {
        (self.a.clone(), self.b.clone())
    }

    /// Projective equality.
    pub fn same_point(&self, other: &Param) -> bool {
        &self.a * &other.b == &self.b * &other.a
    }

    /// Parses `a:b` with integer or `p/q` entries.
    pub fn parse(text: &str) -> Result<Self> {
        let (a, b) = text
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected a:b, got '{text}'")))?;
        let a = parse_rational(a).ok_or_else(|| Error::Parse(format!("bad number '{a}'")))?;
        let b = parse_rational(b).ok_or_else(|| Error::Parse(format!("bad number '{b}'")))?;
        Self::new(a, b)
    }

    /// Comma-separated list of `a:b` entries.
    pub fn parse_list(text: &str) -> Result<Vec<Self>> {
        text.split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| Self::parse(s.trim()))
            .collect()
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.a, self.b)
    }
}

pub(crate) fn ensure_distinct(params: &[Param]) -> Result<()> {
    for (i, p) in params.iter().enumerate() {
        if params[..i].iter().any(|q| q.same_point(p)) {
            return Err(Error::InvalidParameters(format!(
                "parameter {p} is repeated"
            )));
        }
    }
    Ok(())
}

/// Coefficients `a^(k+1-m) b^m` of the osculating hyperplane at `p`.
fn osculating_coeffs(p: &Param, k: usize) -> Vec<Rational> {
    (0..=k + 1)
        .map(|m| num_traits::pow(p.a.clone(), k + 1 - m) * num_traits::pow(p.b.clone(), m))
        .collect()
}

/// Osculating hyperplane `L_(a:b) = sum_m a^(k+1-m) b^m x_m`.
pub fn osculating_form(p: &Param, k: usize) -> MPoly {
    MPoly::linear(&osculating_coeffs(p, k))
}

fn osculating_matrix(params: &[Param], k: usize) -> ExactMatrix {
    ExactMatrix::from_rows(params.iter().map(|p| osculating_coeffs(p, k)).collect())
        .expect("equal row lengths")
}

/// Common point of the `k + 1` osculating hyperplanes at distinct parameters.
pub fn vertex_point(params: &[Param], k: usize) -> Result<ProjPoint> {
    if params.len() != k + 1 {
        return Err(Error::InvalidParameters(format!(
            "a vertex needs {} parameters, got {}",
            k + 1,
            params.len()
        )));
    }
    ensure_distinct(params)?;
    match null_points(&osculating_matrix(params, k)).as_slice() {
        [v] => Ok(v.clone()),
        _ => Err(Error::InvalidParameters(
            "osculating hyperplanes are dependent".into(),
        )),
    }
}

/// Common line of the `k` osculating hyperplanes at distinct parameters.
pub fn config_line(params: &[Param], k: usize) -> Result<ProjLine> {
    if params.len() != k {
        return Err(Error::InvalidParameters(format!(
            "a configuration line needs {k} parameters, got {}",
            params.len()
        )));
    }
    ensure_distinct(params)?;
    match null_points(&osculating_matrix(params, k)).as_slice() {
        [p, q] => ProjLine::new(p.clone(), q.clone()),
        _ => Err(Error::InvalidParameters(
            "osculating hyperplanes are dependent".into(),
        )),
    }
}

/// All `size`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < size - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    rec(0, n, size, &mut current, &mut out);
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(list: &str) -> Vec<Param> {
        Param::parse_list(list).unwrap()
    }

    #[test]
    fn osculating_forms() {
        let p = |s| MPoly::parse(s, 4).unwrap();
        assert_eq!(osculating_form(&Param::from_i64(1, 0).unwrap(), 2), p("x0"));
        assert_eq!(osculating_form(&Param::from_i64(0, 1).unwrap(), 2), p("x3"));
        assert_eq!(
            osculating_form(&Param::from_i64(1, 1).unwrap(), 2),
            p("x0 + x1 + x2 + x3")
        );
        assert_eq!(
            osculating_form(&Param::from_i64(2, -1).unwrap(), 2),
            p("8 x0 - 4 x1 + 2 x2 - x3")
        );
        assert!(Param::from_i64(0, 0).is_err());
    }

    #[test]
    fn vertices() {
        assert_eq!(
            vertex_point(&params("1:0,0:1,1:1"), 2).unwrap(),
            ProjPoint::from_i64(&[0, 1, -1, 0]).unwrap()
        );
        assert_eq!(
            vertex_point(&params("1:0,0:1,1:-1"), 2).unwrap(),
            ProjPoint::from_i64(&[0, 1, 1, 0]).unwrap()
        );
        assert_eq!(
            vertex_point(&params("1:0,0:1"), 1).unwrap(),
            ProjPoint::from_i64(&[0, 1, 0]).unwrap()
        );
        assert!(matches!(
            vertex_point(&params("1:0,2:0,1:1"), 2),
            Err(Error::InvalidParameters(_))
        ));
    }

    #[test]
    fn lines() {
        let l = config_line(&params("1:0,0:1"), 2).unwrap();
        let expect = ProjLine::new(
            ProjPoint::from_i64(&[0, 1, 0, 0]).unwrap(),
            ProjPoint::from_i64(&[0, 0, 1, 0]).unwrap(),
        )
        .unwrap();
        assert_eq!(l, expect);

        let l = config_line(&params("1:1"), 1).unwrap();
        let plane_line = MPoly::parse("x0 + x1 + x2", 3).unwrap();
        assert!(plane_line.restrict_to_line(&l).unwrap().is_zero());

        let l = config_line(&params("1:0,1:1"), 2).unwrap();
        for form in [
            MPoly::parse("x0", 4).unwrap(),
            MPoly::parse("x0 + x1 + x2 + x3", 4).unwrap(),
        ] {
            assert!(form.restrict_to_line(&l).unwrap().is_zero());
        }
        assert!(l.contains(&ProjPoint::from_i64(&[0, 1, -1, 0]).unwrap()));
        assert!(config_line(&params("1:1,2:2"), 2).is_err());
    }

    #[test]
    fn param_parsing() {
        let ps = params("1:0, 0:1,1/2:-3");
        assert_eq!(ps.len(), 3);
        assert_eq!(ps[2].to_string(), "1/2:-3");
        assert!(Param::parse("1/0:1").is_err());
        assert!(Param::parse("1;2").is_err());
        assert!(Param::from_i64(1, 2)
            .unwrap()
            .same_point(&Param::from_i64(-2, -4).unwrap()));
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(subsets(4, 2)[0..2], [vec![0, 1], vec![0, 2]]);
        assert_eq!(binomial(5, 3), 10);
        assert_eq!(binomial(3, 4), 0);
    }
}
