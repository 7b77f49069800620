use num_traits::Zero;

use crate::exact::{ExactMatrix, Rational};
use crate::mpoly::{MPoly, PolyMatrix, ProjPoint};

/// Band (Toeplitz) presentation of the Schwarzenberger bundle `E_n` on
/// `P(V_{k+1})`: the map `V_{n-k-1} ⊗ O(-1) -> V_n ⊗ O` given by
/// multiplication with the generic form of degree `k+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SchwarzData {
    n: usize,
    k: usize,
}

impl SchwarzData {
    /// Panics unless `n > k`.
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n > k, "Schwarzenberger data needs n > k");
        SchwarzData { n, k }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn nvars(&self) -> usize {
        self.k + 2
    }

    /// `(n-k) x (n+1)` matrix with `x_{c-j}` at row `j`, column `c` when
    /// `0 <= c-j <= k+1`. Row `j` encodes the incidence relation
    /// `sum_i x_i z_{i+j} = 0`.
    pub fn band_matrix(&self) -> PolyMatrix {
        self.build(|offset| offset)
    }

    /// The band matrix in the coordinates used for Poncelet equations, which
    /// differ from [`Self::band_matrix`] by `x_i -> x_{k+1-i}`: row `j` is
    /// `sum_i x_i z_{(k+1-i)+j}`.
    pub fn poncelet_band(&self) -> PolyMatrix {
        let top = self.k + 1;
        self.build(|offset| top - offset)
    }

    fn build(&self, var_at: impl Fn(usize) -> usize) -> PolyMatrix {
        let nv = self.nvars();
        let rows = (0..self.n - self.k)
            .map(|j| {
                (0..=self.n)
                    .map(|c| match c.checked_sub(j) {
                        Some(off) if off <= self.k + 1 => MPoly::var(nv, var_at(off)),
                        _ => MPoly::zero(nv),
                    })
                    .collect()
            })
            .collect();
        PolyMatrix::new(nv, rows).expect("rectangular by construction")
    }

    /// Rows of [`Self::poncelet_band`] evaluated at `a`: a spanning set of the
    /// forms `α_a * V_{n-k-1}` inside `V_n`, which are the sections of `E_n`
    /// vanishing at `a`.
    pub fn sections_at(&self, a: &ProjPoint) -> ExactMatrix {
        let coords = a.coords();
        assert_eq!(coords.len(), self.nvars(), "point dimension");
        let top = self.k + 1;
        let mut m = ExactMatrix::zeros(self.n - self.k, self.n + 1);
        for j in 0..self.n - self.k {
            for off in 0..=top {
                m[(j, j + off)] = coords[top - off].clone();
            }
        }
        m
    }

    /// Whether the coefficient vector `s` lies in the row span of
    /// [`Self::sections_at`].
    pub fn section_vanishes_at(&self, s: &[Rational], a: &ProjPoint) -> bool {
        assert_eq!(s.len(), self.n + 1, "section length");
        if s.iter().all(Zero::is_zero) {
            return true;
        }
        let w = self.sections_at(a);
        let stacked = w
            .vstack(&ExactMatrix::from_rows(vec![s.to_vec()]).unwrap())
            .unwrap();
        stacked.rank() == w.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn reverse_vars(p: &MPoly) -> MPoly {
        MPoly::from_terms(
            p.nvars(),
            p.terms().map(|(m, c)| {
                let mut e = m.exps().to_vec();
                e.reverse();
                (e, c.clone())
            }),
        )
    }

    #[test]
    fn band_pattern() {
        let s = SchwarzData::new(4, 2);
        let band = s.band_matrix();
        assert_eq!((band.rows(), band.cols()), (2, 5));
        assert_eq!(band.get(0, 0), &MPoly::var(4, 0));
        assert_eq!(band.get(0, 3), &MPoly::var(4, 3));
        assert!(band.get(0, 4).is_zero());
        assert!(band.get(1, 0).is_zero());
        assert_eq!(band.get(1, 4), &MPoly::var(4, 3));
    }

    #[test]
    fn poncelet_band_is_reversed_band() {
        for (n, k) in [(4, 2), (5, 3), (6, 1)] {
            let s = SchwarzData::new(n, k);
            let (a, b) = (s.band_matrix(), s.poncelet_band());
            for j in 0..a.rows() {
                for c in 0..a.cols() {
                    assert_eq!(&reverse_vars(a.get(j, c)), b.get(j, c));
                }
            }
        }
    }

    #[test]
    fn sections_are_multiples_of_point_form() {
        // a = (1:2:0:-1) gives α = u^3 + 2 u^2 v - v^3
        let s = SchwarzData::new(5, 2);
        let a = ProjPoint::from_i64(&[1, 2, 0, -1]).unwrap();
        let w = s.sections_at(&a);
        assert_eq!(
            w.row(0),
            &[int(-1), int(0), int(2), int(1), int(0), int(0)][..]
        );
        assert!(s.section_vanishes_at(&[int(0), int(-1), int(0), int(2), int(1), int(0)], &a));
        assert!(!s.section_vanishes_at(&[int(1), int(0), int(0), int(0), int(0), int(0)], &a));
    }
}
