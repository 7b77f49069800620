//! Binary forms: homogeneous polynomials in `u, v`.
//!
//! A form of degree `n` is stored as `n + 1` coefficients where index `i`
//! holds the coefficient of `u^i v^(n-i)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{parse_rational, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinForm {
    coeffs: Vec<Rational>,
}

impl BinForm {
    /// Form with the given coefficients; `coeffs[i]` multiplies `u^i v^(n-i)`.
    ///
    /// Panics on an empty coefficient vector.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a binary form has at least one coefficient"
        );
        BinForm { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| crate::exact::int(c)).collect())
    }

    pub fn zero(degree: usize) -> Self {
        BinForm {
            coeffs: vec![Rational::zero(); degree + 1],
        }
    }

    /// The constant form 1.
    pub fn one() -> Self {
        BinForm {
            coeffs: vec![Rational::one()],
        }
    }

    /// `c * u^i v^(degree-i)`.
    pub fn monomial(degree: usize, i: usize, c: Rational) -> Self {
        assert!(i <= degree);
        let mut f = Self::zero(degree);
        f.coeffs[i] = c;
        f
    }

    /// The linear form `b u - a v`, which vanishes at `(u:v) = (a:b)`.
    pub fn linear_root(a: &Rational, b: &Rational) -> Self {
        BinForm {
            coeffs: vec![-a.clone(), b.clone()],
        }
    }

    /// Product of `b u - a v` over the given roots.
    pub fn from_roots(roots: &[(Rational, Rational)]) -> Self {
        roots
            .iter()
            .fold(Self::one(), |acc, (a, b)| &acc * &Self::linear_root(a, b))
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        BinForm {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplication by `u^i v^j`.
    pub fn shift(&self, i: usize, j: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); i];
        coeffs.extend(self.coeffs.iter().cloned());
        coeffs.extend(std::iter::repeat_n(Rational::zero(), j));
        BinForm { coeffs }
    }

    /// Lowest power of `u` dividing the form (its order at `(0:1)`).
    fn u_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Lowest power of `v` dividing the form (its order at `(1:0)`).
    fn v_order(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .map(|top| self.degree() - top)
    }

    /// Leading coefficient: that of the highest nonzero power of `u`.
    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.iter().rev().find(|c| !c.is_zero())
    }

    /// Scaled so that the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }

    pub fn eval(&self, a: &Rational, b: &Rational) -> Rational {
        let n = self.degree();
        let mut apow = vec![Rational::one(); n + 1];
        let mut bpow = vec![Rational::one(); n + 1];
        for i in 1..=n {
            apow[i] = &apow[i - 1] * a;
            bpow[i] = &bpow[i - 1] * b;
        }
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| c * &apow[i] * &bpow[n - i])
            .sum()
    }

    /// Exact quotient `self / g`.
    pub fn divexact(&self, g: &BinForm) -> Result<BinForm> {
        let top = g
            .coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .ok_or(Error::InexactDivision)?;
        let n = self.degree();
        let m = g.degree();
        if m > n {
            return Err(Error::InexactDivision);
        }
        let mut rem = self.coeffs.clone();
        let mut q = vec![Rational::zero(); n - m + 1];
        for i in (0..=n - m).rev() {
            let c = &rem[i + top] / &g.coeffs[top];
            if c.is_zero() {
                continue;
            }
            for (j, gj) in g.coeffs.iter().enumerate() {
                if !gj.is_zero() {
                    rem[i + j] -= &c * gj;
                }
            }
            q[i] = c;
        }
        if rem.iter().all(Zero::is_zero) {
            Ok(BinForm { coeffs: q })
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// True when `self` divides `f` exactly.
    pub fn divides(&self, f: &BinForm) -> bool {
        f.divexact(self).is_ok()
    }

    /// Rational roots `(a:b)` with multiplicity, provided the form splits
    /// completely into rational linear factors.
    ///
    /// Points are normalised to `(1:0)` or `(t:1)`.
    pub fn rational_roots(&self) -> Result<Vec<(Rational, Rational)>> {
        if self.is_zero() {
            return Err(Error::AllZero);
        }
        let mut roots = Vec::new();
        let uo = self.u_order().unwrap();
        let vo = self.v_order().unwrap();
        roots.extend(std::iter::repeat_n((Rational::one(), Rational::zero()), vo));
        roots.extend(std::iter::repeat_n((Rational::zero(), Rational::one()), uo));
        let core = Poly(self.coeffs[uo..=self.degree() - vo].to_vec());
        let mut rest = core;
        while rest.degree() > 0 {
            let t = rest
                .some_rational_root()
                .ok_or(Error::IrrationalBaseDivisor)?;
            rest = rest.div_linear(&t);
            roots.push((t, Rational::one()));
        }
        Ok(roots)
    }
}

/// Greatest common divisor of a list of forms, normalised to be monic.
///
/// Common powers of `u` and `v` are stripped first, the remaining parts are
/// dehomogenised in `t = u/v` and run through Euclid, then re-homogenised.
/// Zero inputs are ignored.
pub fn gcd_forms(forms: &[BinForm]) -> Result<BinForm> {
    let nonzero: Vec<&BinForm> = forms.iter().filter(|f| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Error::AllZero);
    }
    let uo = nonzero.iter().map(|f| f.u_order().unwrap()).min().unwrap();
    let vo = nonzero.iter().map(|f| f.v_order().unwrap()).min().unwrap();
    let mut g: Option<Poly> = None;
    for f in &nonzero {
        let (a, b) = (f.u_order().unwrap(), f.v_order().unwrap());
        let p = Poly(f.coeffs[a..=f.degree() - b].to_vec());
        g = Some(match g {
            None => p.monic(),
            Some(g) => g.gcd(&p),
        });
    }
    let g = g.unwrap();
    let mut coeffs = vec![Rational::zero(); uo];
    coeffs.extend(g.0);
    coeffs.extend(std::iter::repeat_n(Rational::zero(), vo));
    Ok(BinForm { coeffs })
}

/// Dense univariate polynomial in `t`, lowest coefficient first, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
struct Poly(Vec<Rational>);

impl Poly {
    fn trimmed(mut v: Vec<Rational>) -> Poly {
        while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        if v.is_empty() {
            v.push(Rational::zero());
        }
        Poly(v)
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    fn degree(&self) -> usize {
        self.0.len() - 1
    }

    fn monic(&self) -> Poly {
        let lc = self.0.last().unwrap().clone();
        Poly(self.0.iter().map(|c| c / &lc).collect())
    }

    fn rem(&self, d: &Poly) -> Poly {
        let mut r = self.0.clone();
        let dl = d.0.last().unwrap();
        while r.len() >= d.0.len() && !(r.len() == 1 && r[0].is_zero()) {
            let shift = r.len() - d.0.len();
            let c = r.last().unwrap() / dl;
            for (j, dj) in d.0.iter().enumerate() {
                r[shift + j] -= &c * dj;
            }
            r.pop();
            while r.len() > 1 && r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            if r.is_empty() {
                r.push(Rational::zero());
            }
        }
        Poly::trimmed(r)
    }

    fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn eval(&self, t: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    /// Quotient by `t - root`, assuming `root` is a root.
    fn div_linear(&self, root: &Rational) -> Poly {
        let n = self.degree();
        let mut q = vec![Rational::zero(); n];
        let mut carry = Rational::zero();
        for i in (1..=n).rev() {
            carry = &self.0[i] + carry * root;
            q[i - 1] = carry.clone();
        }
        Poly::trimmed(q)
    }

    /// Rational root search via the rational root theorem.
    fn some_rational_root(&self) -> Option<Rational> {
        use num_bigint::BigInt;
        use num_integer::Integer;
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let c0 = ints.first()?.abs();
        let cn = ints.last()?.abs();
        if c0.is_zero() {
            return Some(Rational::zero());
        }
        let ps = small_divisors(&c0)?;
        let qs = small_divisors(&cn)?;
        for q in &qs {
            for p in &ps {
                for cand in [
                    Rational::new(p.clone(), q.clone()),
                    -Rational::new(p.clone(), q.clone()),
                ] {
                    if self.eval(&cand).is_zero() {
                        return Some(cand);
                    }
                }
            }
        }
        None
    }
}

/// Positive divisors by trial division; `None` when the integer is too large
/// to enumerate cheaply.
fn small_divisors(n: &num_bigint::BigInt) -> Option<Vec<num_bigint::BigInt>> {
    use num_traits::ToPrimitive;
    let n = n.to_u64().filter(|&n| n <= 1 << 40)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out.into_iter().map(Into::into).collect())
}

impl Add for &BinForm {
    type Output = BinForm;
    /// Panics when degrees differ.
    fn add(self, rhs: &BinForm) -> BinForm {
        assert_eq!(
            self.degree(),
            rhs.degree(),
            "adding forms of different degrees"
        );
        BinForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &BinForm {
    type Output = BinForm;
    fn sub(self, rhs: &BinForm) -> BinForm {
        self + &(-rhs)
    }
}

impl Neg for &BinForm {
    type Output = BinForm;
    fn neg(self) -> BinForm {
        BinForm {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &BinForm {
    type Output = BinForm;
    fn mul(self, rhs: &BinForm) -> BinForm {
        let mut coeffs = vec![Rational::zero(); self.degree() + rhs.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        BinForm { coeffs }
    }
}

impl fmt::Display for BinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for i in (0..=n).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let mono = [("u", i), ("v", n - i)]
                .iter()
                .filter(|(_, e)| *e > 0)
                .map(|(x, e)| {
                    if *e == 1 {
                        x.to_string()
                    } else {
                        format!("{x}^{e}")
                    }
                })
                .collect::<Vec<_>>()
                .join(" ");
            write_term(f, c, &mono, " ", first)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinForm[{}]({})", self.degree(), self)
    }
}

/// Shared term printer for forms and polynomials.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    c: &Rational,
    mono: &str,
    sep: &str,
    first: bool,
) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    match (first, neg) {
        (true, true) => write!(f, "-")?,
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
        (true, false) => {}
    }
    if mono.is_empty() {
        write!(f, "{abs}")
    } else if abs.is_one() {
        write!(f, "{mono}")
    } else {
        write!(f, "{abs}{sep}{mono}")
    }
}

/// Parses a form such as `u^5 - u^4 v + 3/2 u v^4`.
///
/// Terms are `[coef] [u[^i]] [v[^j]]` with optional `*` between factors.
/// With `expected_degree` set, the form must be homogeneous of that degree;
/// the zero form `0` needs it to fix its degree.
pub fn parse_form(text: &str, expected_degree: Option<usize>) -> Result<BinForm> {
    let terms = parse_terms(text, &['u', 'v'])?;
    let mut degrees = terms
        .iter()
        .filter(|(c, _)| !c.is_zero())
        .map(|(_, e)| e[0] + e[1]);
    let degree = match degrees.next() {
        Some(d) => {
            if degrees.any(|x| x != d) {
                return Err(Error::Inhomogeneous);
            }
            d
        }
        None => expected_degree.unwrap_or(0),
    };
    if let Some(e) = expected_degree {
        if e != degree {
            return Err(Error::DegreeMismatch {
                expected: e,
                found: degree,
            });
        }
    }
    let mut f = BinForm::zero(degree);
    for (c, e) in terms.into_iter().filter(|(c, _)| !c.is_zero()) {
        f.coeffs[e[0]] += c;
    }
    Ok(f)
}

/// Tokenises a sum of monomial terms over single-letter variables with an
/// optional numeric index for multi-variable names (`x0`, `x12`).
///
/// Returns `(coefficient, exponent vector)` pairs; for indexed variables the
/// exponent vector is indexed by the number after the letter.
pub(crate) fn parse_terms(text: &str, vars: &[char]) -> Result<Vec<(Rational, Vec<usize>)>> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut pos = 0;
    let mut out = Vec::new();
    while pos < chars.len() {
        let mut sign = Rational::one();
        let mut saw_sign = false;
        while pos < chars.len() && (chars[pos] == '+' || chars[pos] == '-') {
            if chars[pos] == '-' {
                sign = -sign;
            }
            saw_sign = true;
            pos += 1;
        }
        if !out.is_empty() && !saw_sign {
            return Err(Error::Parse(format!(
                "expected '+' or '-' at position {pos}"
            )));
        }
        let mut coeff = sign;
        let mut exps = vec![0usize; vars.len()];
        let mut factors = 0;
        loop {
            if pos < chars.len() && chars[pos] == '*' && factors > 0 {
                pos += 1;
            }
            if pos >= chars.len() {
                break;
            }
            let c = chars[pos];
            if c.is_ascii_digit() {
                let start = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pos < chars.len() && chars[pos] == '/' {
                    pos += 1;
                    while pos < chars.len() && chars[pos].is_ascii_digit() {
                        pos += 1;
                    }
                }
                let lit: String = chars[start..pos].iter().collect();
                let r = parse_rational(&lit)
                    .ok_or_else(|| Error::Parse(format!("bad coefficient '{lit}'")))?;
                coeff *= r;
            } else if let Some(vi) = vars.iter().position(|&v| v == c) {
                pos += 1;
                let mut e = 1;
                if pos < chars.len() && chars[pos] == '^' {
                    pos += 1;
                    let start = pos;
                    while pos < chars.len() && chars[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if start == pos {
                        return Err(Error::Parse("missing exponent after '^'".into()));
                    }
                    e = chars[start..pos]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .unwrap();
                }
                exps[vi] += e;
            } else if c == '+' || c == '-' {
                break;
            } else {
                return Err(Error::Parse(format!("unexpected character '{c}'")));
            }
            factors += 1;
        }
        if factors == 0 {
            return Err(Error::Parse("empty term".into()));
        }
        out.push((coeff, exps));
    }
    Ok(out)
}
