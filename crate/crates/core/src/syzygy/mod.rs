//! Linear systems of binary forms and their syzygies.
//!
//! A system `Λ ⊂ V_n` of projective dimension `k` is stored through a basis
//! `f_0..f_k`. A syzygy of degree `d` is a tuple `(g_0..g_k)` of degree-`d`
//! forms with `sum g_i f_i = 0`; the syzygies of degree `d` are the kernel of
//! the multiplication map `Λ ⊗ V_d -> V_{n+d}`.

mod file;
mod sample;
mod strata;

pub use file::{parse_system, SYSTEM_DEGREE_HEADER};
pub use sample::{
    hilbert_burch_sample, random_form, random_invertible, random_system, seeded_rng, SampleRng,
    COEFF_RANGE, RETRY_BUDGET,
};
pub use strata::{
    expected_codim, generic_splitting, h1_end, tangent_codim, verify_dime, StratumReport,
};

use std::fmt;

use num_traits::Zero;

use crate::binform::{gcd_forms, BinForm};
use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, Rational};

#[derive(Clone, PartialEq, Debug)]
pub struct LinearSystem {
    n: usize,
    basis: ExactMatrix,
}

impl LinearSystem {
    /// System spanned by `forms`, which must be linearly independent forms of
    /// one common degree `n`. Independence forces `n >= k = forms.len() - 1`;
    /// `n = k` is the whole space `V_n`.
    pub fn new(forms: &[BinForm]) -> Result<Self> {
        let first = forms
            .first()
            .ok_or_else(|| Error::InvalidSystem("no forms".into()))?;
        let n = first.degree();
        if let Some(f) = forms.iter().find(|f| f.degree() != n) {
            return Err(Error::DegreeMismatch {
                expected: n,
                found: f.degree(),
            });
        }
        let basis = ExactMatrix::from_rows(forms.iter().map(|f| f.coeffs().to_vec()).collect())?;
        Self::from_matrix(basis)
    }

    /// System whose basis is given by the rows of a `(k+1) x (n+1)` matrix.
    pub fn from_matrix(basis: ExactMatrix) -> Result<Self> {
        if basis.rows() == 0 || basis.cols() == 0 {
            return Err(Error::InvalidSystem("empty basis".into()));
        }
        let n = basis.cols() - 1;
        let k = basis.rows() - 1;
        if n < k {
            return Err(Error::InvalidSystem(format!(
                "{} forms of degree {n} cannot be independent",
                k + 1
            )));
        }
        if basis.rank() != basis.rows() {
            return Err(Error::InvalidSystem(
                "basis forms are linearly dependent".into(),
            ));
        }
        Ok(LinearSystem { n, basis })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.basis.rows() - 1
    }

    pub fn basis(&self) -> &ExactMatrix {
        &self.basis
    }

    pub fn form(&self, i: usize) -> BinForm {
        BinForm::new(self.basis.row(i).to_vec())
    }

    pub fn forms(&self) -> Vec<BinForm> {
        (0..self.basis.rows()).map(|i| self.form(i)).collect()
    }

    /// Reduced row echelon basis and its pivot columns. Depends only on the
    /// subspace, not on the chosen basis.
    pub fn reduced_basis(&self) -> (ExactMatrix, Vec<usize>) {
        let (r, pivots) = self.basis.rref();
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        (ExactMatrix::from_rows(rows).unwrap(), pivots)
    }

    /// Non-pivot columns of the reduced basis: monomials `u^c v^(n-c)` whose
    /// classes form a basis of `V_n / Λ`.
    pub fn complement(&self) -> Vec<usize> {
        let (_, pivots) = self.reduced_basis();
        (0..=self.n).filter(|c| !pivots.contains(c)).collect()
    }

    pub fn contains(&self, f: &BinForm) -> bool {
        if f.degree() != self.n {
            return false;
        }
        let stacked = self
            .basis
            .vstack(&ExactMatrix::from_rows(vec![f.coeffs().to_vec()]).unwrap())
            .unwrap();
        stacked.rank() == self.basis.rows()
    }

    /// Same subspace with basis `m * basis`; `m` must be invertible.
    pub fn recombine(&self, m: &ExactMatrix) -> Result<Self> {
        Self::from_matrix(m.mul(&self.basis)?)
    }

    /// Matrix of `Λ ⊗ V_d -> V_{n+d}`.
    ///
    /// Column `i*(d+1) + j` holds the coefficients of `f_i * u^j v^(d-j)`.
    pub fn build_phi(&self, d: usize) -> ExactMatrix {
        let rows = self.n + d + 1;
        let cols = (self.k() + 1) * (d + 1);
        let mut m = ExactMatrix::zeros(rows, cols);
        for i in 0..=self.k() {
            for j in 0..=d {
                for (l, c) in self.basis.row(i).iter().enumerate() {
                    m[(l + j, i * (d + 1) + j)] = c.clone();
                }
            }
        }
        m
    }

    /// Number `r(d)` of independent syzygies of degree `d`.
    pub fn syzygy_count(&self, d: usize) -> usize {
        (self.k() + 1) * (d + 1) - self.build_phi(d).rank()
    }

    /// `r(0), ..., r(max_d)`.
    pub fn syzygy_counts(&self, max_d: usize) -> Vec<usize> {
        (0..=max_d).map(|d| self.syzygy_count(d)).collect()
    }

    /// Canonical kernel basis of [`Self::build_phi`], decoded into tuples.
    pub fn syzygy_basis(&self, d: usize) -> Vec<Syzygy> {
        self.build_phi(d)
            .kernel_basis()
            .into_iter()
            .map(|v| Syzygy {
                degree: d,
                entries: v.chunks(d + 1).map(|c| BinForm::new(c.to_vec())).collect(),
            })
            .collect()
    }

    /// Greatest common divisor of the basis forms (monic).
    pub fn base_divisor(&self) -> BinForm {
        gcd_forms(&self.forms()).expect("basis forms are nonzero")
    }

    /// Splitting type of the kernel bundle, recovered from first and second
    /// differences of the syzygy counts.
    pub fn splitting_type(&self) -> Result<SplittingType> {
        let base_degree = self.base_divisor().degree();
        let k = self.k();
        let mut parts = Vec::with_capacity(k);
        // r(-1) = r(0) = 0 for an independent basis
        let mut prev_r = 0usize;
        let mut prev_step = 0usize;
        for d in 1..=self.n {
            if parts.len() == k {
                break;
            }
            let r = self.syzygy_count(d);
            let step = r - prev_r;
            if step < prev_step {
                return Err(Error::Internal("syzygy counts are not convex".into()));
            }
            parts.extend(std::iter::repeat_n(d, step - prev_step));
            prev_r = r;
            prev_step = step;
        }
        let sum: usize = parts.iter().sum();
        if parts.len() != k || sum + base_degree != self.n {
            return Err(Error::Internal(format!(
                "recovered parts {parts:?} with base degree {base_degree} do not split n = {}",
                self.n
            )));
        }
        Ok(SplittingType { parts, base_degree })
    }

    /// Rewrites the system as `<u f, v f, f_2, ..., f_k>` from a linear syzygy.
    ///
    /// With the first linear syzygy `sum (α_i u + β_i v) f_i = 0` one has
    /// `sum β_i f_i = u f` and `sum α_i f_i = -v f`. The returned `f` is scaled
    /// to be monic and the new basis starts with `u f, v f` for that `f`.
    pub fn normalize_linear_syzygy(&self) -> Option<(BinForm, LinearSystem)> {
        let syz = self.syzygy_basis(1).into_iter().next()?;
        let mut beta_sum = BinForm::zero(self.n);
        for (g, f) in syz.entries.iter().zip(self.forms()) {
            beta_sum = &beta_sum + &f.scale(g.coeff(0));
        }
        let u = BinForm::from_i64(&[0, 1]);
        let f = beta_sum
            .divexact(&u)
            .expect("a linear syzygy forces u | sum β_i f_i")
            .monic();
        let mut forms = vec![f.shift(1, 0), f.shift(0, 1)];
        for g in self.forms() {
            if forms.len() == self.k() + 1 {
                break;
            }
            let mut trial = forms.clone();
            trial.push(g);
            let m = ExactMatrix::from_rows(trial.iter().map(|h| h.coeffs().to_vec()).collect())
                .unwrap();
            if m.rank() == trial.len() {
                forms = trial;
            }
        }
        let sys = LinearSystem::new(&forms).expect("u f, v f lie in the system");
        debug_assert!(forms.iter().all(|h| self.contains(h)));
        Some((f, sys))
    }
}

impl fmt::Display for LinearSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let forms: Vec<String> = self.forms().iter().map(ToString::to_string).collect();
        write!(f, "<{}>", forms.join(", "))
    }
}

/// Sorted twists `b_1 <= ... <= b_k` with `E ≅ ⊕ O(-b_j)`, plus the degree
/// of the base divisor.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct SplittingType {
    parts: Vec<usize>,
    base_degree: usize,
}

impl SplittingType {
    pub fn new(mut parts: Vec<usize>, base_degree: usize) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidParameters(
                "splitting parts must be positive and non-empty".into(),
            ));
        }
        parts.sort_unstable();
        Ok(SplittingType { parts, base_degree })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn base_degree(&self) -> usize {
        self.base_degree
    }

    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    /// Total degree `n = sum(parts) + base_degree`.
    pub fn n(&self) -> usize {
        self.parts.iter().sum::<usize>() + self.base_degree
    }

    /// `h^0(E(d)) = sum max(0, d - b_j + 1)`.
    pub fn h0(&self, d: usize) -> usize {
        self.parts.iter().map(|&b| (d + 1).saturating_sub(b)).sum()
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Syzygy {
    degree: usize,
    entries: Vec<BinForm>,
}

impl Syzygy {
    /// Tuple of forms sharing one degree.
    pub fn new(entries: Vec<BinForm>) -> Result<Self> {
        let degree = entries.first().map_or(0, BinForm::degree);
        if let Some(g) = entries.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        Ok(Syzygy { degree, entries })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn entries(&self) -> &[BinForm] {
        &self.entries
    }

    /// Whether `sum g_i f_i` vanishes for the basis of `sys`.
    pub fn holds_for(&self, sys: &LinearSystem) -> bool {
        if self.entries.len() != sys.k() + 1 {
            return false;
        }
        let mut acc = BinForm::zero(sys.n() + self.degree);
        for (g, f) in self.entries.iter().zip(sys.forms()) {
            acc = &acc + &(g * &f);
        }
        acc.is_zero()
    }

    /// Same syzygy scaled by `c`.
    pub fn scale(&self, c: &Rational) -> Syzygy {
        Syzygy {
            degree: self.degree,
            entries: self.entries.iter().map(|g| g.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(BinForm::is_zero)
    }

    /// Whether `self = c * other` for some nonzero `c`.
    pub fn proportional(&self, other: &Syzygy) -> bool {
        let flat = |s: &Syzygy| -> Vec<Rational> {
            s.entries.iter().flat_map(|g| g.coeffs().to_vec()).collect()
        };
        let (a, b) = (flat(self), flat(other));
        if a.len() != b.len() {
            return false;
        }
        let Some(i) = b.iter().position(|x| !x.is_zero()) else {
            return a.iter().all(Zero::is_zero);
        };
        let c = &a[i] / &b[i];
        !c.is_zero() && a.iter().zip(&b).all(|(x, y)| *x == &c * y)
    }
}

impl fmt::Display for Syzygy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "({})", entries.join(", "))
    }
}
