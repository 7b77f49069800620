//! Sparse multivariate polynomials in `x0..x{m}` over the rationals.
//!
//! Terms are ordered graded-lexicographically with `x0 > x1 > ...`; this
//! order drives printing, exact division and [`MPoly::normalize_primitive`].

mod matrix;
mod proj;

pub use matrix::{PolyMatrix, DEFAULT_DET_BOUND};
pub(crate) use proj::null_points;
pub use proj::{ProjLine, ProjPoint};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::binform::{parse_terms, write_term, BinForm};
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Exponent vector under the graded-lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(nvars, i), Rational::one());
        p
    }

    /// Linear form `sum coeffs[i] * x_i`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(n, i), c.clone());
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in decreasing graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Common degree of all terms, if they share one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.nvars), |acc, _| &acc * self)
    }

    /// Formal partial derivative with respect to `x_var`.
    pub fn derivative(&self, var: usize) -> Result<Self> {
        if var >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index: var,
                bound: self.nvars,
            });
        }
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[var] -= 1;
            out.add_term(Monomial(exps), c * Rational::from_integer(BigInt::from(e)));
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::Dimension(format!(
                "point of length {} for {} variables",
                point.len(),
                self.nvars
            )));
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Restriction to the line through `line.p()` and `line.q()`.
    ///
    /// Substitutes `x = s*p + t*q` and returns the binary form in `(s, t)`,
    /// written with `s -> u` and `t -> v`. The result is identically zero
    /// exactly when the line lies on the hypersurface.
    pub fn restrict_to_line(&self, line: &ProjLine) -> Result<BinForm> {
        if self.is_zero() {
            return Ok(BinForm::zero(0));
        }
        let deg = self.homogeneous_degree().ok_or(Error::Inhomogeneous)? as usize;
        let (p, q) = (line.p().coords(), line.q().coords());
        if p.len() != self.nvars {
            return Err(Error::Dimension("line lives in a different space".into()));
        }
        let lin: Vec<BinForm> = p
            .iter()
            .zip(q)
            .map(|(a, b)| BinForm::new(vec![b.clone(), a.clone()]))
            .collect();
        let mut out = BinForm::zero(deg);
        for (m, c) in &self.terms {
            let mut t = BinForm::new(vec![c.clone()]);
            for (l, &e) in lin.iter().zip(&m.0) {
                for _ in 0..e {
                    t = &t * l;
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Exact quotient `self / divisor`, by leading-term cancellation.
    pub fn divexact(&self, divisor: &MPoly) -> Result<MPoly> {
        let (lm, lc) = divisor.leading_term().ok_or(Error::InexactDivision)?;
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lm).ok_or(Error::InexactDivision)?;
            let qc = c / lc;
            let mut step = MPoly::zero(self.nvars);
            step.add_term(qm, qc);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Ok(quot)
    }

    /// Rescaled to coprime integer coefficients with a positive leading coefficient.
    pub fn normalize_primitive(&self) -> Result<MPoly> {
        let (_, lc) = self.leading_term().ok_or(Error::AllZero)?;
        let den_lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num_gcd = self
            .terms
            .values()
            .map(|c| (c * Rational::from_integer(den_lcm.clone())).to_integer())
            .fold(BigInt::zero(), |acc, n| acc.gcd(&n));
        let mut factor = Rational::new(den_lcm, num_gcd);
        if lc.is_negative() {
            factor = -factor;
        }
        Ok(self.scale(&factor))
    }

    /// Whether `self = c * other` for some nonzero scalar `c`; `(0, 0)` counts.
    pub fn proportional(&self, other: &MPoly) -> bool {
        match (self.leading_term(), other.leading_term()) {
            (None, None) => true,
            (Some((ma, ca)), Some((mb, cb))) => {
                ma == mb && self.nvars == other.nvars && *self == other.scale(&(ca / cb))
            }
            _ => false,
        }
    }

    /// Parses a polynomial such as `x0*x3 - 3/2 x1^2 x2` in `nvars` variables.
    pub fn parse(text: &str, nvars: usize) -> Result<MPoly> {
        let renamed = rename_indexed_vars(text, nvars)?;
        let vars: Vec<char> = (0..nvars).map(var_char).collect();
        let terms = parse_terms(&renamed, &vars)?;
        Ok(MPoly::from_terms(
            nvars,
            terms
                .into_iter()
                .map(|(c, e)| (e.into_iter().map(|x| x as u32).collect(), c)),
        ))
    }
}

// Indexed variables are mapped onto private-use characters so the shared
// single-letter term parser can be reused.
fn var_char(i: usize) -> char {
    char::from_u32(0xE000 + i as u32).unwrap()
}

fn rename_indexed_vars(text: &str, nvars: usize) -> Result<String> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = String::with_capacity(text.len());
    let mut i = 0;
    while i < chars.len() {
        if chars[i] == 'x' {
            let start = i + 1;
            let mut j = start;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            if j == start {
                return Err(Error::Parse("variable 'x' needs an index".into()));
            }
            let idx: usize = chars[start..j].iter().collect::<String>().parse().unwrap();
            if idx >= nvars {
                return Err(Error::Parse(format!(
                    "x{idx} out of range for {nvars} variables"
                )));
            }
            out.push(var_char(idx));
            i = j;
        } else {
            out.push(chars[i]);
            i += 1;
        }
    }
    Ok(out)
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = MPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let mono =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, e)| **e > 0)
                    .map(|(i, e)| {
                        if *e == 1 {
                            format!("x{i}")
                        } else {
                            format!("x{i}^{e}")
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("*");
            write_term(f, c, &mono, "*", idx == 0)?;
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[{}]({})", self.nvars, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use proptest::prelude::*;

    fn p(s: &str) -> MPoly {
        MPoly::parse(s, 4).unwrap()
    }

    #[test]
    fn grlex_order_and_printing() {
        let q = p("x1*x2 - x0*x3 + x3^2 + 3/2*x0");
        assert_eq!(q.to_string(), "-x0*x3 + x1*x2 + x3^2 + 3/2*x0");
        assert_eq!(MPoly::parse(&q.to_string(), 4).unwrap(), q);
        assert_eq!(p("x2 x2 - x1 x3"), p("x2^2 - x1*x3"));
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("x1*x2 - x0*x3").derivative(0).unwrap(), p("-x3"));
        assert_eq!(p("x2^2 - x1*x3").derivative(2).unwrap(), p("2 x2"));
        assert!(MPoly::constant(4, int(5)).derivative(3).unwrap().is_zero());
        assert_eq!(
            p("x0").derivative(4),
            Err(Error::IndexOutOfRange { index: 4, bound: 4 })
        );
    }

    fn line(a: &[i64], b: &[i64]) -> ProjLine {
        ProjLine::new(
            ProjPoint::from_i64(a).unwrap(),
            ProjPoint::from_i64(b).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn line_restriction() {
        let f = p("x1*x2 - x0*x3")
            .restrict_to_line(&line(&[1, 0, 0, 0], &[0, 0, 0, 1]))
            .unwrap();
        assert_eq!(f, BinForm::from_i64(&[0, -1, 0]));
        let f = p("x0")
            .restrict_to_line(&line(&[0, 1, 0, 0], &[0, 0, 1, 0]))
            .unwrap();
        assert!(f.is_zero());
        let f = p("x2^2 - x1*x3")
            .restrict_to_line(&line(&[1, 0, 0, 0], &[0, 1, 0, 0]))
            .unwrap();
        assert!(f.is_zero());
        assert_eq!(
            p("x0^2 + x1").restrict_to_line(&line(&[1, 0, 0, 0], &[0, 1, 0, 0])),
            Err(Error::Inhomogeneous)
        );
    }

    #[test]
    fn exact_division() {
        assert_eq!(p("x0*x1").divexact(&p("x0")).unwrap(), p("x1"));
        assert_eq!(
            p("x1*x2 - x0*x3").divexact(&p("x0")),
            Err(Error::InexactDivision)
        );
        let prod = &p("x2^2 - x1*x3") * &p("x0 + x1");
        assert_eq!(prod.divexact(&p("x0 + x1")).unwrap(), p("x2^2 - x1*x3"));
    }

    #[test]
    fn normalization() {
        assert_eq!(p("-2 x0*x1").normalize_primitive().unwrap(), p("x0*x1"));
        let q = p("3/2 x1*x2 - 3/2 x0*x3");
        assert_eq!(q.normalize_primitive().unwrap(), p("x0*x3 - x1*x2"));
        let r = p("x0*x3 - x1*x2");
        assert_eq!(r.normalize_primitive().unwrap(), r);
        assert_eq!(
            p("4/3 x0 + 2/5 x1").normalize_primitive().unwrap(),
            p("10 x0 + 3 x1")
        );
        assert_eq!(MPoly::zero(3).normalize_primitive(), Err(Error::AllZero));
    }

    #[test]
    fn proportionality() {
        assert!(p("2 x0").proportional(&p("x0")));
        assert!(!p("x0").proportional(&p("x1")));
        assert!(MPoly::zero(4).proportional(&MPoly::zero(4)));
        assert!(!p("x0 + x1").proportional(&p("x0 + 2 x1")));
        assert!(!p("x0").proportional(&MPoly::zero(4)));
    }

    #[test]
    fn evaluation() {
        let q = p("x2^2 - x1*x3");
        assert_eq!(
            q.eval(&[int(0), int(1), int(2), ratio(1, 2)]).unwrap(),
            ratio(7, 2)
        );
    }

    fn arb_poly() -> impl Strategy<Value = MPoly> {
        proptest::collection::vec((proptest::collection::vec(0u32..3, 3), -6i64..=6), 0..6)
            .prop_map(|ts| MPoly::from_terms(3, ts.into_iter().map(|(e, c)| (e, int(c)))))
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent(q in arb_poly()) {
            prop_assume!(!q.is_zero());
            let n = q.normalize_primitive().unwrap();
            prop_assert_eq!(n.normalize_primitive().unwrap(), n.clone());
            prop_assert!(q.proportional(&n));
        }

        #[test]
        fn product_division(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).divexact(&b).unwrap(), a);
        }

        #[test]
        fn line_restriction_matches_sampling(
            q in arb_poly(),
            pt in proptest::collection::vec(-3i64..=3, 3),
            qt in proptest::collection::vec(-3i64..=3, 3),
        ) {
            // homogenize by keeping only the top-degree part
            let Some(d) = q.total_degree() else { return Ok(()); };
            let top = MPoly::from_terms(3, q.terms().filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.exps().to_vec(), c.clone())));
            let (Some(a), Some(b)) = (ProjPoint::from_i64(&pt), ProjPoint::from_i64(&qt)) else { return Ok(()); };
            let Ok(l) = ProjLine::new(a.clone(), b.clone()) else { return Ok(()); };
            let restricted = top.restrict_to_line(&l).unwrap();
            let samples = 3 * d as i64 + 1;
            let all_vanish = (0..samples).all(|s| {
                let x: Vec<Rational> = a.coords().iter().zip(b.coords())
                    .map(|(x, y)| x * int(1) + y * int(s)).collect();
                top.eval(&x).unwrap().is_zero()
            });
            prop_assert_eq!(restricted.is_zero(), all_vanish);
        }
    }
}
