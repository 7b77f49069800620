use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, ExactMatrix, Rational};

/// Point of projective space, kept in canonical form: the first nonzero
/// coordinate is 1. Equality is therefore projective equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: Vec<Rational>,
}

impl ProjPoint {
    /// `None` for the all-zero vector.
    pub fn new(coords: Vec<Rational>) -> Option<Self> {
        let lead = coords.iter().find(|c| !c.is_zero())?.clone();
        Some(ProjPoint {
            coords: coords.into_iter().map(|c| c / &lead).collect(),
        })
    }

    pub fn from_i64(coords: &[i64]) -> Option<Self> {
        Self::new(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(":"))
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Line spanned by two projectively distinct points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjLine {
    p: ProjPoint,
    q: ProjPoint,
}

impl ProjLine {
    pub fn new(p: ProjPoint, q: ProjPoint) -> Result<Self> {
        if p.dim() != q.dim() {
            return Err(Error::Dimension("points in different spaces".into()));
        }
        if p == q {
            return Err(Error::InvalidParameters(
                "line through a single point".into(),
            ));
        }
        Ok(ProjLine { p, q })
    }

    pub fn p(&self) -> &ProjPoint {
        &self.p
    }

    pub fn q(&self) -> &ProjPoint {
        &self.q
    }

    /// Point `s*p + t*q`.
    pub fn point(&self, s: &Rational, t: &Rational) -> Option<ProjPoint> {
        ProjPoint::new(
            self.p
                .coords
                .iter()
                .zip(&self.q.coords)
                .map(|(a, b)| a * s + b * t)
                .collect(),
        )
    }

    pub fn contains(&self, x: &ProjPoint) -> bool {
        let m = ExactMatrix::from_rows(vec![
            self.p.coords.clone(),
            self.q.coords.clone(),
            x.coords.clone(),
        ])
        .expect("equal lengths");
        m.rank() == 2
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.p, self.q)
    }
}

/// Projective points spanning the null space of `m`, in canonical kernel order.
pub(crate) fn null_points(m: &ExactMatrix) -> Vec<ProjPoint> {
    m.kernel_basis()
        .into_iter()
        .filter_map(ProjPoint::new)
        .collect()
}

impl ProjPoint {
    /// `(1:0:...:0)`-style coordinate point.
    pub fn coordinate(dim: usize, i: usize) -> Self {
        let mut c = vec![Rational::zero(); dim];
        c[i] = Rational::one();
        ProjPoint { coords: c }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_representative() {
        let a = ProjPoint::from_i64(&[0, -2, 4, 0]).unwrap();
        let b = ProjPoint::from_i64(&[0, 1, -2, 0]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "(0:1:-2:0)");
        assert!(ProjPoint::from_i64(&[0, 0]).is_none());
    }

    #[test]
    fn line_membership() {
        let l = ProjLine::new(ProjPoint::coordinate(3, 0), ProjPoint::coordinate(3, 1)).unwrap();
        assert!(l.contains(&ProjPoint::from_i64(&[3, -1, 0]).unwrap()));
        assert!(!l.contains(&ProjPoint::from_i64(&[0, 0, 1]).unwrap()));
        assert!(ProjLine::new(
            ProjPoint::coordinate(3, 0),
            ProjPoint::from_i64(&[2, 0, 0]).unwrap()
        )
        .is_err());
    }
}
