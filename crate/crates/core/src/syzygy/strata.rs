//! Codimension of the stratum of systems with at least `r` syzygies of
//! degree `d`, computed three ways: the determinantal expected value, the
//! `h^1(End E)` count from the splitting type, and the rank of the tangent
//! map at an actual sample.

use num_traits::Zero;

use super::{hilbert_burch_sample, LinearSystem, SplittingType};
use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, Rational};

/// Expected codimension `r (n + r - (d+1) k)`. May be `<= 0`, in which case
/// the stratum fills the Grassmannian.
pub fn expected_codim(k: usize, n: usize, r: usize, d: usize) -> i64 {
    let (k, n, r, d) = (k as i64, n as i64, r as i64, d as i64);
    r * (n + r - (d + 1) * k)
}

/// Splitting type of a general system with exactly `r` syzygies of degree `d`:
/// `d` repeated `r` times, then the rest balanced as `A^(k-r-B) (A+1)^B`
/// where `n - d r = A (k - r) + B` with `0 <= B < k - r`.
pub fn generic_splitting(k: usize, n: usize, r: usize, d: usize) -> Result<SplittingType> {
    let fail = |why: String| Err(Error::NoGenericStratum(why));
    if r == 0 || r > k || d == 0 || n <= k {
        return fail(format!(
            "need 1 <= r <= k, d >= 1, n > k (k={k}, n={n}, r={r}, d={d})"
        ));
    }
    if r == k {
        if n != d * k {
            return fail(format!("r = k requires n = d k, got n = {n}"));
        }
        return SplittingType::new(vec![d; k], 0);
    }
    let Some(rest) = n.checked_sub(d * r) else {
        return fail("n - d r is negative".to_string());
    };
    let (a, b) = (rest / (k - r), rest % (k - r));
    if a <= d {
        return fail(format!("A = {a} must exceed d = {d}"));
    }
    let mut parts = vec![d; r];
    parts.extend(std::iter::repeat_n(a, k - r - b));
    parts.extend(std::iter::repeat_n(a + 1, b));
    SplittingType::new(parts, 0)
}

/// `h^1(E ⊗ E^∨) = sum over ordered pairs of max(0, b_i - b_j - 1)`.
pub fn h1_end(s: &SplittingType) -> Result<usize> {
    if s.base_degree() > 0 {
        return Err(Error::BasePoints(s.base_degree()));
    }
    let p = s.parts();
    Ok(p.iter()
        .flat_map(|&bi| p.iter().map(move |&bj| bi.saturating_sub(bj + 1)))
        .sum())
}

/// Codimension of the tangent space to the rank stratum of
/// `Φ_d : Λ ⊗ V_d -> V_{n+d}` at `sys`.
///
/// A chart direction moves one basis form `f_i` by a complement monomial
/// `z_c`; on a syzygy `(g_0..g_k)` it induces `g_i z_c` modulo the image of
/// `Φ_d`. The result is the rank of the assembled map
/// `Hom(Λ, V_n/Λ) -> Hom(ker Φ_d, coker Φ_d)`.
pub fn tangent_codim(sys: &LinearSystem, d: usize) -> Result<usize> {
    let base = sys.base_divisor().degree();
    if base > 0 {
        return Err(Error::BasePoints(base));
    }
    let phi = sys.build_phi(d);
    let kernel = phi.kernel_basis();
    if kernel.is_empty() {
        return Err(Error::NoSyzygy(d));
    }
    // y^T Φ = 0 identifies coker Φ with the dual of the left kernel
    let cokernel = phi.left_kernel_basis();
    let width = sys.n() + d + 1;
    let mut columns: Vec<Vec<Rational>> = Vec::new();
    for i in 0..=sys.k() {
        for &c in &sys.complement() {
            let mut column = Vec::with_capacity(kernel.len() * cokernel.len());
            for kv in &kernel {
                let g = &kv[i * (d + 1)..(i + 1) * (d + 1)];
                let mut w = vec![Rational::zero(); width];
                for (j, gj) in g.iter().enumerate() {
                    w[c + j] = gj.clone();
                }
                for y in &cokernel {
                    column.push(
                        y.iter()
                            .zip(&w)
                            .filter(|(_, x)| !x.is_zero())
                            .map(|(a, b)| a * b)
                            .sum(),
                    );
                }
            }
            columns.push(column);
        }
    }
    if cokernel.is_empty() {
        return Ok(0);
    }
    Ok(ExactMatrix::from_rows(columns)?.rank())
}

/// One trial of the codimension comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct StratumReport {
    pub k: usize,
    pub n: usize,
    pub d: usize,
    pub r: usize,
    pub trial: usize,
    pub seed: u64,
    pub system: LinearSystem,
    pub splitting: SplittingType,
    /// Observed `r(d)` of the sample.
    pub syzygies: usize,
    pub expected_codim: i64,
    pub tangent_codim: usize,
    pub h1_codim: usize,
}

impl StratumReport {
    /// All three codimensions coincide.
    pub fn agrees(&self) -> bool {
        self.tangent_codim as i64 == self.expected_codim
            && self.h1_codim as i64 == self.expected_codim
    }
}

/// Samples `trials` general members of the stratum (trial `t` seeded with
/// `seed + t`) and compares the three codimension counts on each.
pub fn verify_dime(
    k: usize,
    n: usize,
    r: usize,
    d: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<StratumReport>> {
    let expected = expected_codim(k, n, r, d);
    if expected < 0 {
        return Err(Error::InvalidParameters(format!(
            "expected codimension {expected} is negative"
        )));
    }
    let splitting = generic_splitting(k, n, r, d)?;
    (0..trials)
        .map(|trial| {
            let trial_seed = seed.wrapping_add(trial as u64);
            let system = hilbert_burch_sample(&splitting, trial_seed)?;
            Ok(StratumReport {
                k,
                n,
                d,
                r,
                trial,
                seed: trial_seed,
                syzygies: system.syzygy_count(d),
                tangent_codim: tangent_codim(&system, d)?,
                h1_codim: h1_end(&splitting)?,
                expected_codim: expected,
                splitting: splitting.clone(),
                system,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binform::parse_form;

    fn st(parts: &[usize]) -> SplittingType {
        SplittingType::new(parts.to_vec(), 0).unwrap()
    }

    fn sys(forms: &[&str]) -> LinearSystem {
        let forms: Vec<_> = forms.iter().map(|s| parse_form(s, None).unwrap()).collect();
        LinearSystem::new(&forms).unwrap()
    }

    #[test]
    fn expected_codimensions() {
        assert_eq!(expected_codim(3, 5, 1, 1), 0);
        assert_eq!(expected_codim(3, 5, 2, 1), 2);
        assert_eq!(expected_codim(2, 4, 1, 1), 1);
        assert_eq!(expected_codim(3, 4, 1, 1), -1);
    }

    /// Porteous count `(domain - rank)(codomain - rank)` for the rank drop
    /// of `Φ_d`, written out separately from the closed form.
    #[test]
    fn expected_matches_porteous_recount() {
        for k in 1..4 {
            for n in k + 1..9 {
                for d in 0..3 {
                    for r in 1..3 {
                        let domain = ((k + 1) * (d + 1)) as i64;
                        let codomain = (n + d + 1) as i64;
                        let rank = domain - r as i64;
                        let porteous = (domain - rank) * (codomain - rank);
                        assert_eq!(porteous, expected_codim(k, n, r, d));
                    }
                }
            }
        }
    }

    #[test]
    fn generic_splittings() {
        assert_eq!(generic_splitting(3, 5, 2, 1).unwrap(), st(&[1, 1, 3]));
        assert_eq!(generic_splitting(3, 5, 1, 1).unwrap(), st(&[1, 2, 2]));
        assert_eq!(generic_splitting(2, 5, 1, 1).unwrap(), st(&[1, 4]));
        assert_eq!(generic_splitting(2, 4, 2, 2).unwrap(), st(&[2, 2]));
        // A = 1 is not larger than d = 1
        assert!(matches!(
            generic_splitting(3, 4, 1, 1),
            Err(Error::NoGenericStratum(_))
        ));
        assert!(matches!(
            generic_splitting(2, 5, 2, 2),
            Err(Error::NoGenericStratum(_))
        ));
        assert!(matches!(
            generic_splitting(2, 5, 3, 1),
            Err(Error::NoGenericStratum(_))
        ));
    }

    #[test]
    fn h1_values() {
        assert_eq!(h1_end(&st(&[1, 2, 2])).unwrap(), 0);
        assert_eq!(h1_end(&st(&[1, 1, 3])).unwrap(), 2);
        assert_eq!(h1_end(&st(&[1, 3])).unwrap(), 1);
        for n in 1..8 {
            assert_eq!(h1_end(&st(&[n])).unwrap(), 0);
        }
        let based = SplittingType::new(vec![1, 2], 1).unwrap();
        assert_eq!(h1_end(&based), Err(Error::BasePoints(1)));
    }

    #[test]
    fn tangent_codimensions() {
        let special = sys(&["u^5", "u^4 v", "u^3 v^2", "v^5"]);
        assert_eq!(tangent_codim(&special, 1).unwrap(), 2);
        assert_eq!(tangent_codim(&sys(&["u^4", "u^3 v", "v^4"]), 1).unwrap(), 1);
        let hb = hilbert_burch_sample(&st(&[2, 2]), 1).unwrap();
        assert_eq!(tangent_codim(&hb, 2).unwrap(), 0);
    }

    #[test]
    fn tangent_refusals() {
        assert_eq!(
            tangent_codim(&sys(&["u^3 v", "u v^3", "v^4"]), 1),
            Err(Error::BasePoints(1))
        );
        assert_eq!(
            tangent_codim(&sys(&["u^4", "u^2 v^2", "v^4"]), 1),
            Err(Error::NoSyzygy(1))
        );
    }

    #[test]
    fn dime_examples() {
        for (k, n, r, d, codim) in [(3, 5, 2, 1, 2), (2, 4, 1, 1, 1), (2, 5, 1, 1, 2)] {
            let reports = verify_dime(k, n, r, d, 5, 1).unwrap();
            assert_eq!(reports.len(), 5);
            for rep in reports {
                assert_eq!(
                    (rep.expected_codim, rep.tangent_codim, rep.h1_codim),
                    (codim, codim as usize, codim as usize)
                );
                assert_eq!(rep.syzygies, r);
                assert!(rep.agrees());
            }
        }
    }
}
