use num_traits::Zero;

use super::{binomial, ensure_distinct, subsets, vertex_point, Param, SchwarzData};
use crate::binform::BinForm;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::mpoly::ProjPoint;
use crate::syzygy::LinearSystem;

use super::poncelet_polynomial;

/// The binary form `α_a = sum_m a_m u^(k+1-m) v^m` attached to a point of
/// `P(V_{k+1})`.
pub fn point_form(a: &ProjPoint, k: usize) -> Result<BinForm> {
    if a.dim() != k + 2 {
        return Err(Error::Dimension(format!(
            "point has {} coordinates, expected {}",
            a.dim(),
            k + 2
        )));
    }
    let mut coeffs = vec![Rational::zero(); k + 2];
    for (m, x) in a.coords().iter().enumerate() {
        coeffs[k + 1 - m] = x.clone();
    }
    Ok(BinForm::new(coeffs))
}

/// The two independent tests for `a ∈ Z(s)`: divisibility of `s` by `α_a`,
/// and membership of `s` in the span of the band sections at `a`.
pub fn zero_locus_tests(s: &BinForm, a: &ProjPoint, k: usize) -> Result<(bool, bool)> {
    if s.is_zero() {
        return Err(Error::AllZero);
    }
    let n = s.degree();
    if n <= k {
        return Err(Error::InvalidParameters(format!(
            "section degree {n} must exceed k = {k}"
        )));
    }
    let divides = point_form(a, k)?.divides(s);
    let member = SchwarzData::new(n, k).section_vanishes_at(s.coeffs(), a);
    Ok((divides, member))
}

/// Whether the section `s` of degree `n` vanishes at `a`.
pub fn zero_locus_check(s: &BinForm, a: &ProjPoint, k: usize) -> Result<bool> {
    match zero_locus_tests(s, a, k)? {
        (d, m) if d == m => Ok(d),
        (d, m) => Err(Error::Internal(format!(
            "zero locus tests disagree at {a}: divisibility {d}, membership {m}"
        ))),
    }
}

/// Largest `e` with `α_a^e | s`.
pub fn zero_order(s: &BinForm, a: &ProjPoint, k: usize) -> Result<usize> {
    if s.is_zero() {
        return Err(Error::AllZero);
    }
    let alpha = point_form(a, k)?;
    if alpha.degree() == 0 || alpha.is_zero() {
        return Err(Error::InvalidParameters("point form is constant".into()));
    }
    let mut rest = s.clone();
    let mut e = 0;
    while alpha.divides(&rest) {
        rest = rest.divexact(&alpha)?;
        e += 1;
    }
    Ok(e)
}

/// Vertices of `Z(s)` for a section with the given distinct roots, one per
/// `(k+1)`-subset in lexicographic order.
pub fn zero_locus_vertices(roots: &[Param], k: usize) -> Result<Vec<(Vec<usize>, ProjPoint)>> {
    ensure_distinct(roots)?;
    subsets(roots.len(), k + 1)
        .into_iter()
        .map(|subset| {
            let params: Vec<Param> = subset.iter().map(|&i| roots[i].clone()).collect();
            Ok((subset, vertex_point(&params, k)?))
        })
        .collect()
}

fn check_roots(s: &BinForm, roots: &[Param]) -> Result<()> {
    if roots.len() != s.degree() {
        return Err(Error::InvalidParameters(format!(
            "expected {} roots, got {}",
            s.degree(),
            roots.len()
        )));
    }
    ensure_distinct(roots)?;
    for p in roots {
        if !s.eval(p.a(), p.b()).is_zero() {
            return Err(Error::InvalidParameters(format!(
                "{p} is not a root of {s}"
            )));
        }
    }
    Ok(())
}

/// Checks every vertex of `Z(s)` and returns their number `C(n, k+1)`.
pub fn zero_locus_count(s: &BinForm, roots: &[Param], k: usize) -> Result<usize> {
    check_roots(s, roots)?;
    let vertices = zero_locus_vertices(roots, k)?;
    for (subset, v) in &vertices {
        if !zero_locus_check(s, v, k)? {
            return Err(Error::Internal(format!(
                "vertex {v} of subset {subset:?} is not in the zero locus"
            )));
        }
    }
    debug_assert_eq!(vertices.len(), binomial(roots.len(), k + 1));
    Ok(vertices.len())
}

/// Whether all vertices of `Z(s)`, for `s = sum_i c_i f_i` with the given
/// distinct roots, lie on the Poncelet hypersurface of the system.
pub fn vertices_on_hypersurface(
    sys: &LinearSystem,
    combination: &[Rational],
    roots: &[Param],
) -> Result<bool> {
    if combination.len() != sys.k() + 1 {
        return Err(Error::DegreeMismatch {
            expected: sys.k() + 1,
            found: combination.len(),
        });
    }
    let s = sys
        .forms()
        .iter()
        .zip(combination)
        .fold(BinForm::zero(sys.n()), |acc, (f, c)| &acc + &f.scale(c));
    if s.is_zero() {
        return Err(Error::AllZero);
    }
    check_roots(&s, roots)?;
    let h = poncelet_polynomial(sys)?;
    for (_, v) in zero_locus_vertices(roots, sys.k())? {
        if !h.contains(&v) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binform::parse_form;
    use crate::exact::int;

    fn form(s: &str) -> BinForm {
        parse_form(s, None).unwrap()
    }

    fn params(s: &str) -> Vec<Param> {
        Param::parse_list(s).unwrap()
    }

    #[test]
    fn point_form_dictionary() {
        let a = ProjPoint::from_i64(&[0, 1, -1, 0]).unwrap();
        assert_eq!(point_form(&a, 2).unwrap(), form("u^2 v - u v^2"));
    }

    #[test]
    fn check_examples() {
        let s = form("u^3 v - u v^3");
        let vertex = ProjPoint::from_i64(&[0, 1, -1, 0]).unwrap();
        assert!(zero_locus_check(&s, &vertex, 2).unwrap());
        let e0 = ProjPoint::coordinate(4, 0);
        assert!(!zero_locus_check(&s, &e0, 2).unwrap());

        let t = form("2 u^3 - u^2 v + 5 v^3");
        let own: Vec<Rational> = (0..4).map(|m| t.coeff(3 - m).clone()).collect();
        let own = ProjPoint::new(own).unwrap();
        assert!(zero_locus_check(&t, &own, 2).unwrap());
    }

    #[test]
    fn count_examples() {
        let roots = params("1:0,0:1,1:1,1:-1");
        assert_eq!(
            zero_locus_count(&form("u^3 v - u v^3"), &roots, 2).unwrap(),
            4
        );
        let roots3 = params("1:0,0:1,1:1");
        assert_eq!(
            zero_locus_count(&form("u^2 v - u v^2"), &roots3, 2).unwrap(),
            1
        );
        let roots5 = params("1:0,0:1,1:1,1:-1,1:2");
        let s = BinForm::from_roots(&roots5.iter().map(Param::pair).collect::<Vec<_>>());
        assert_eq!(zero_locus_count(&s, &roots5, 1).unwrap(), 10);
    }

    #[test]
    fn multiplicity() {
        let s = form("u^3 v^3");
        let a = ProjPoint::coordinate(3, 1);
        // α = u v
        assert_eq!(point_form(&a, 1).unwrap(), form("u v"));
        assert_eq!(zero_order(&s, &a, 1).unwrap(), 3);
        assert_eq!(zero_order(&form("u^2 v^4 + u^5 v"), &a, 1).unwrap(), 1);
    }

    #[test]
    fn vertices_of_member() {
        let sys = LinearSystem::new(&[form("u^3 v - u v^3"), form("u^4"), form("v^4")]).unwrap();
        let roots = params("1:0,0:1,1:1,1:-1");
        let c = [int(1), int(0), int(0)];
        assert!(vertices_on_hypersurface(&sys, &c, &roots).unwrap());

        let n_eq_k1 = LinearSystem::new(&[form("u^3 - u v^2"), form("u^2 v"), form("v^3")]);
        let n_eq_k1 = n_eq_k1.unwrap();
        let r = params("1:0,1:1,1:-1");
        // u^3 - u v^2 = u (u - v)(u + v) vanishes at (0:1), (1:1), (-1:1)
        assert!(vertices_on_hypersurface(&n_eq_k1, &c, &params("0:1,1:1,-1:1")).unwrap());
        assert!(vertices_on_hypersurface(&n_eq_k1, &c, &r).is_err());

        let a = LinearSystem::new(&[form("u^4"), form("u^2 v^2"), form("v^4")]).unwrap();
        let quadruple = params("1:0,1:0,1:0,1:0");
        assert!(vertices_on_hypersurface(&a, &c, &quadruple).is_err());
    }

    #[test]
    fn wrong_roots_rejected() {
        let s = form("u^3 v - u v^3");
        assert!(zero_locus_count(&s, &params("1:0,0:1,1:1,1:2"), 2).is_err());
        assert!(zero_locus_count(&s, &params("1:0,0:1,1:1"), 2).is_err());
    }
}
