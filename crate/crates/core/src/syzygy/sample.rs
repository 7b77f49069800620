use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{LinearSystem, SplittingType};
use crate::binform::BinForm;
use crate::error::{Error, Result};
use crate::exact::{int, ExactMatrix};

pub type SampleRng = ChaCha8Rng;

/// Random coefficients are integers drawn uniformly from this range.
pub const COEFF_RANGE: std::ops::RangeInclusive<i64> = -100..=100;

/// Number of whole-matrix redraws before a sampler gives up.
pub const RETRY_BUDGET: usize = 50;

pub fn seeded_rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_form(degree: usize, rng: &mut SampleRng) -> BinForm {
    BinForm::new(
        (0..=degree)
            .map(|_| int(rng.gen_range(COEFF_RANGE)))
            .collect(),
    )
}

/// Random system of `k + 1` forms of degree `n`.
pub fn random_system(n: usize, k: usize, rng: &mut SampleRng) -> Result<LinearSystem> {
    for _ in 0..RETRY_BUDGET {
        let forms: Vec<BinForm> = (0..=k).map(|_| random_form(n, rng)).collect();
        match LinearSystem::new(&forms) {
            Ok(s) => return Ok(s),
            Err(Error::InvalidSystem(msg)) if msg.contains("dependent") => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::RetryBudget(RETRY_BUDGET))
}

/// Random invertible integer matrix of size `size`.
pub fn random_invertible(size: usize, rng: &mut SampleRng) -> ExactMatrix {
    loop {
        let data = (0..size * size)
            .map(|_| int(rng.gen_range(COEFF_RANGE)))
            .collect();
        let m = ExactMatrix::new(size, size, data).unwrap();
        if m.rank() == size {
            return m;
        }
    }
}

/// Determinant of a square matrix of binary forms whose column `j` holds
/// forms of degree `col_degrees[j]`; expansion along the first column.
fn form_det(rows: &[Vec<BinForm>], col_degrees: &[usize]) -> BinForm {
    let size = rows.len();
    if size == 0 {
        return BinForm::one();
    }
    let total: usize = col_degrees.iter().sum();
    let mut acc = BinForm::zero(total);
    for i in 0..size {
        let minor: Vec<Vec<BinForm>> = rows
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != i)
            .map(|(_, row)| row[1..].to_vec())
            .collect();
        let term = &rows[i][0] * &form_det(&minor, &col_degrees[1..]);
        acc = if i % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// System realised as the signed maximal minors of a random `(k+1) x k`
/// matrix whose column `j` has entries of degree `parts[j]`.
///
/// The columns of that matrix generate the syzygy module, so the kernel
/// bundle splits as `parts` whenever the minors are independent and share
/// no common factor. Draws are redone until that holds.
pub fn hilbert_burch_sample(parts: &SplittingType, seed: u64) -> Result<LinearSystem> {
    if parts.base_degree() != 0 {
        return Err(Error::InvalidParameters(
            "sampling needs a splitting type without base points".into(),
        ));
    }
    let k = parts.rank();
    let mut rng = seeded_rng(seed);
    for _ in 0..RETRY_BUDGET {
        let matrix: Vec<Vec<BinForm>> = (0..=k)
            .map(|_| {
                parts
                    .parts()
                    .iter()
                    .map(|&b| random_form(b, &mut rng))
                    .collect()
            })
            .collect();
        let minors: Vec<BinForm> = (0..=k)
            .map(|i| {
                let rest: Vec<Vec<BinForm>> = matrix
                    .iter()
                    .enumerate()
                    .filter(|(r, _)| *r != i)
                    .map(|(_, row)| row.clone())
                    .collect();
                let m = form_det(&rest, parts.parts());
                if i % 2 == 0 {
                    m
                } else {
                    -&m
                }
            })
            .collect();
        let Ok(sys) = LinearSystem::new(&minors) else {
            continue;
        };
        if sys.splitting_type().as_ref() == Ok(parts) {
            return Ok(sys);
        }
    }
    Err(Error::RetryBudget(RETRY_BUDGET))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(parts: &[usize]) -> SplittingType {
        SplittingType::new(parts.to_vec(), 0).unwrap()
    }

    #[test]
    fn samples_match_h0_formula() {
        let s = hilbert_burch_sample(&st(&[1, 3]), 1).unwrap();
        assert_eq!((s.n(), s.k()), (4, 2));
        assert_eq!(s.syzygy_counts(3), vec![0, 1, 2, 4]);

        let s = hilbert_burch_sample(&st(&[2, 2]), 1).unwrap();
        assert_eq!(s.syzygy_counts(2), vec![0, 0, 2]);

        let s = hilbert_burch_sample(&st(&[1, 1, 3]), 7).unwrap();
        assert_eq!(s.splitting_type().unwrap(), st(&[1, 1, 3]));
    }

    #[test]
    fn samples_are_deterministic() {
        let a = hilbert_burch_sample(&st(&[2, 3]), 42).unwrap();
        let b = hilbert_burch_sample(&st(&[2, 3]), 42).unwrap();
        assert_eq!(a, b);
        let c = hilbert_burch_sample(&st(&[2, 3]), 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn matrix_columns_are_syzygies() {
        // minors of [[u, v], [v, u], [u, u]] with column degrees (1, 1)
        let u = BinForm::from_i64(&[0, 1]);
        let v = BinForm::from_i64(&[1, 0]);
        let rows = [
            vec![u.clone(), v.clone()],
            vec![v.clone(), u.clone()],
            vec![u.clone(), u.clone()],
        ];
        let f0 = form_det(&rows[1..], &[1, 1]);
        assert_eq!(f0, &(&v * &u) - &(&u * &u));
        let det3 = form_det(
            &[
                vec![u.clone(), u.clone(), v.clone()],
                vec![v.clone(), v.clone(), u.clone()],
                vec![u.clone(), u.clone(), u.clone()],
            ],
            &[1, 1, 1],
        );
        assert!(det3.is_zero(), "repeated column");
    }

    #[test]
    fn base_points_are_rejected() {
        let t = SplittingType::new(vec![1, 2], 1).unwrap();
        assert!(matches!(
            hilbert_burch_sample(&t, 0),
            Err(Error::InvalidParameters(_))
        ));
    }
}
