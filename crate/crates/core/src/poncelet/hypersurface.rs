use num_traits::Zero;

use super::{osculating_form, Param, SchwarzData};
use crate::binform::BinForm;
use crate::error::{Error, Result};
use crate::mpoly::{MPoly, PolyMatrix, ProjPoint};
use crate::syzygy::LinearSystem;

/// Square matrix of linear forms whose determinant is the Poncelet equation.
#[derive(Clone, Debug, PartialEq)]
pub struct PonceletMatrixResult {
    pub matrix: PolyMatrix,
    /// Exponents `c` of the monomials `u^c v^(n-c)` whose classes form the
    /// basis of `V_n / Λ` used for the columns.
    pub complement: Vec<usize>,
}

/// Poncelet hypersurface of a system, canonically normalised.
#[derive(Clone, Debug, PartialEq)]
pub struct PonceletHypersurface {
    pub equation: MPoly,
    pub n: usize,
    pub k: usize,
    pub system: LinearSystem,
}

impl PonceletHypersurface {
    pub fn degree(&self) -> usize {
        self.n - self.k
    }

    pub fn contains(&self, a: &ProjPoint) -> bool {
        self.equation.eval(a.coords()).is_ok_and(|v| v.is_zero())
    }
}

/// The Schwarzenberger band reduced modulo `Λ`.
///
/// Row `j` is the class of `sum_i x_i z_{(k+1-i)+j}` in `V_n / Λ`, written in
/// the complement basis of [`LinearSystem::complement`].
pub fn poncelet_matrix(sys: &LinearSystem) -> PonceletMatrixResult {
    let (n, k) = (sys.n(), sys.k());
    let nvars = k + 2;
    let complement = sys.complement();
    if n == k {
        return PonceletMatrixResult {
            matrix: PolyMatrix::new(nvars, vec![]).unwrap(),
            complement,
        };
    }
    let band = SchwarzData::new(n, k).poncelet_band();
    let (reduced, pivots) = sys.reduced_basis();
    let rows = (0..n - k)
        .map(|j| {
            let w = band.row(j);
            complement
                .iter()
                .map(|&c| {
                    // w[c] - sum_t w[pivot_t] * R[t][c]
                    let mut entry = w[c].clone();
                    for (t, &p) in pivots.iter().enumerate() {
                        let r = &reduced[(t, c)];
                        if !r.is_zero() && !w[p].is_zero() {
                            entry = &entry - &w[p].scale(r);
                        }
                    }
                    entry
                })
                .collect()
        })
        .collect();
    PonceletMatrixResult {
        matrix: PolyMatrix::new(nvars, rows).expect("linear entries"),
        complement,
    }
}

/// Canonical Poncelet equation of degree `n - k`; an identically zero
/// determinant is reported as [`Error::DegenerateDeterminant`].
pub fn poncelet_polynomial(sys: &LinearSystem) -> Result<PonceletHypersurface> {
    let det = poncelet_matrix(sys).matrix.det()?;
    if det.is_zero() {
        return Err(Error::DegenerateDeterminant);
    }
    Ok(PonceletHypersurface {
        equation: det.normalize_primitive()?,
        n: sys.n(),
        k: sys.k(),
        system: sys.clone(),
    })
}

/// Equation and every partial derivative vanish at `a`.
pub fn is_singular_at(h: &PonceletHypersurface, a: &ProjPoint) -> Result<bool> {
    let eq = &h.equation;
    if !eq.eval(a.coords())?.is_zero() {
        return Ok(false);
    }
    for i in 0..eq.nvars() {
        if !eq.derivative(i)?.eval(a.coords())?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Poncelet equation split into osculating hyperplanes at base points and
/// the residual.
#[derive(Clone, Debug, PartialEq)]
pub struct BasePointFactorization {
    pub base_points: Vec<Param>,
    pub factors: Vec<MPoly>,
    pub residual: MPoly,
    /// Canonical Poncelet equation of the system divided by its base divisor.
    pub residual_system_equation: MPoly,
    /// `product(factors) * residual` equals the full equation exactly.
    pub reconstructs: bool,
    /// `residual` is a nonzero multiple of `residual_system_equation`.
    pub residual_matches: bool,
}

impl BasePointFactorization {
    pub fn holds(&self) -> bool {
        self.reconstructs && self.residual_matches
    }
}

/// Factors the Poncelet equation of a system with rational base points.
pub fn factor_base_points(sys: &LinearSystem) -> Result<BasePointFactorization> {
    let base = sys.base_divisor();
    let roots = if base.degree() == 0 {
        Vec::new()
    } else {
        base.rational_roots()?
            .into_iter()
            .map(|(a, b)| Param::new(a, b))
            .collect::<Result<Vec<_>>>()?
    };
    factor_base_points_with_roots(sys, &roots)
}

/// As [`factor_base_points`], with the base points supplied (with
/// multiplicity). They must account for the whole base divisor.
pub fn factor_base_points_with_roots(
    sys: &LinearSystem,
    roots: &[Param],
) -> Result<BasePointFactorization> {
    let base = sys.base_divisor();
    let planted = BinForm::from_roots(&roots.iter().map(Param::pair).collect::<Vec<_>>());
    if planted.degree() != base.degree() || base.divexact(&planted).is_err() {
        return Err(Error::InvalidParameters(
            "supplied base points do not match the base divisor".into(),
        ));
    }
    let full = poncelet_polynomial(sys)?.equation;
    let mut residual = full.clone();
    let mut factors = Vec::with_capacity(roots.len());
    for p in roots {
        let l = osculating_form(p, sys.k());
        residual = residual.divexact(&l)?;
        factors.push(l);
    }
    let reconstructed = factors.iter().fold(residual.clone(), |acc, l| &acc * l);

    let reduced: Vec<BinForm> = sys
        .forms()
        .iter()
        .map(|f| f.divexact(&base))
        .collect::<Result<_>>()?;
    let residual_system = LinearSystem::new(&reduced)?;
    let residual_system_equation = poncelet_polynomial(&residual_system)?.equation;
    Ok(BasePointFactorization {
        base_points: roots.to_vec(),
        residual_matches: residual.proportional(&residual_system_equation),
        reconstructs: reconstructed == full,
        factors,
        residual,
        residual_system_equation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binform::parse_form;
    use crate::mpoly::PolyMatrix;
    use crate::syzygy::{random_invertible, seeded_rng};

    fn sys(forms: &[&str]) -> LinearSystem {
        let forms: Vec<BinForm> = forms.iter().map(|s| parse_form(s, None).unwrap()).collect();
        LinearSystem::new(&forms).unwrap()
    }

    fn p4(s: &str) -> MPoly {
        MPoly::parse(s, 4).unwrap()
    }

    const CAYLEY: [&str; 3] = [
        "u^5 + v^5",
        "u^5 - u^4 v + u^3 v^2 - u^2 v^3 + u v^4",
        "u^5 - v^5",
    ];

    #[test]
    fn displayed_determinants() {
        let a = poncelet_matrix(&sys(&["u^4", "u^2 v^2", "v^4"]));
        assert_eq!(a.complement, vec![1, 3]);
        assert_eq!(a.matrix.det().unwrap(), p4("x1*x2 - x0*x3"));
        let b = poncelet_matrix(&sys(&["u^4", "u^3 v", "v^4"]));
        assert_eq!(b.matrix.det().unwrap(), p4("x2^2 - x1*x3"));
        let fixpt = poncelet_matrix(&sys(&["u^3 v", "u v^3", "v^4"]));
        assert_eq!(fixpt.matrix.det().unwrap(), p4("x0*x1"));
    }

    #[test]
    fn canonical_polynomials() {
        let h = poncelet_polynomial(&sys(&["u^4", "u^2 v^2", "v^4"])).unwrap();
        assert_eq!(h.equation, p4("x0*x3 - x1*x2"));
        assert_eq!(h.degree(), 2);
    }

    #[test]
    fn cayley_cubic_matches_display() {
        let displayed = PolyMatrix::new(
            4,
            [
                ["x1 + x2", "x2 + x3", "x3"],
                ["x0 + x1", "x1 + x2", "x3 + x2"],
                ["x0", "x1 + x0", "x1 + x2"],
            ]
            .iter()
            .map(|r| r.iter().map(|s| p4(s)).collect())
            .collect(),
        )
        .unwrap();
        let expected = displayed.det().unwrap();
        let h = poncelet_polynomial(&sys(&CAYLEY)).unwrap();
        assert_eq!(h.equation.homogeneous_degree(), Some(3));
        assert!(h.equation.proportional(&expected));
    }

    #[test]
    fn special_quadric_contains_coordinate_lines() {
        let special = sys(&["u^5", "u^4 v", "u^3 v^2", "v^5"]);
        let h = poncelet_polynomial(&special).unwrap();
        assert_eq!(h.equation.homogeneous_degree(), Some(2));
        let (f, _) = special.normalize_linear_syzygy().unwrap();
        assert_eq!(f, parse_form("u^4", None).unwrap());
        // u^4 V_1 and u^3 v V_1 lie in the system, so every x whose form
        // lies in u^3 V_1 or in u^2 v V_1 is a zero of a section.
        let x = |i| ProjPoint::coordinate(5, i);
        for (p, q) in [(x(0), x(1)), (x(1), x(2))] {
            let line = crate::mpoly::ProjLine::new(p, q).unwrap();
            assert!(h.equation.restrict_to_line(&line).unwrap().is_zero());
        }
        let stray = crate::mpoly::ProjLine::new(x(3), x(4)).unwrap();
        assert!(!h.equation.restrict_to_line(&stray).unwrap().is_zero());
    }

    #[test]
    fn singularity_checks() {
        let cone = poncelet_polynomial(&sys(&["u^4", "u^3 v", "v^4"])).unwrap();
        let quadric = poncelet_polynomial(&sys(&["u^4", "u^2 v^2", "v^4"])).unwrap();
        let e0 = ProjPoint::coordinate(4, 0);
        assert!(is_singular_at(&cone, &e0).unwrap());
        assert!(!is_singular_at(&quadric, &e0).unwrap());
        let off = ProjPoint::from_i64(&[0, 0, 1, 0]).unwrap();
        assert!(!is_singular_at(&cone, &off).unwrap());
    }

    #[test]
    fn base_point_factorizations() {
        let f = factor_base_points(&sys(&["u^3 v", "u v^3", "v^4"])).unwrap();
        assert_eq!(f.factors, vec![p4("x0")]);
        assert!(f.residual.proportional(&p4("x1")));
        assert!(f.holds());

        let f = factor_base_points(&sys(&["u^4", "u^3 v", "u v^3"])).unwrap();
        assert_eq!(f.factors, vec![p4("x3")]);
        assert!(f.residual.proportional(&p4("x2")));
        assert!(f.holds());

        let free = sys(&["u^4", "u^2 v^2", "v^4"]);
        let f = factor_base_points(&free).unwrap();
        assert!(f.factors.is_empty());
        assert_eq!(f.residual, poncelet_polynomial(&free).unwrap().equation);
    }

    #[test]
    fn irrational_base_divisor_is_refused() {
        let s = sys(&["u^4 + u^2 v^2", "u^3 v + u v^3", "u^2 v^2 + v^4"]);
        assert_eq!(factor_base_points(&s), Err(Error::IrrationalBaseDivisor));
    }

    #[test]
    fn invariant_under_recombination() {
        let mut rng = seeded_rng(3);
        for forms in [
            &CAYLEY[..],
            &["u^4", "u^3 v", "v^4"],
            &["u^3 v", "u v^3", "v^4"],
        ] {
            let s = sys(forms);
            let h = poncelet_polynomial(&s).unwrap();
            for _ in 0..3 {
                let m = random_invertible(s.k() + 1, &mut rng);
                let t = s.recombine(&m).unwrap();
                assert_eq!(poncelet_polynomial(&t).unwrap().equation, h.equation);
            }
        }
    }

    #[test]
    fn whole_space_has_constant_equation() {
        let h = poncelet_polynomial(&sys(&["u^2", "u v", "v^2"])).unwrap();
        assert_eq!(h.equation, MPoly::one(4));
    }
}
