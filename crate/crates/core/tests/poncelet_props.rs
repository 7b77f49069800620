use proptest::prelude::*;

use ponsyz::exact::int;
use ponsyz::poncelet::{
    binomial, factor_base_points_with_roots, planted_system, point_form, poncelet_polynomial,
    random_params, verify_teorema, vertices_on_hypersurface, zero_locus_count, zero_locus_tests,
    zero_locus_vertices, Param,
};
use ponsyz::syzygy::{random_form, random_invertible, random_system, seeded_rng};
use ponsyz::{BinForm, Error, LinearSystem, ProjPoint};

fn grid() -> impl Strategy<Value = (usize, usize)> {
    prop::sample::select(vec![(3, 1), (4, 1), (4, 2), (5, 2), (5, 3), (6, 3)])
}

fn root_form(roots: &[Param]) -> BinForm {
    BinForm::from_roots(&roots.iter().map(Param::pair).collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn recombination_leaves_equation_unchanged((n, k) in grid(), seed in any::<u64>()) {
        let mut rng = seeded_rng(seed);
        let sys = random_system(n, k, &mut rng).unwrap();
        let h = match poncelet_polynomial(&sys) {
            Err(Error::DegenerateDeterminant) => return Ok(()),
            other => other.unwrap(),
        };
        prop_assert_eq!(h.equation.homogeneous_degree(), Some((n - k) as u32));
        let m = random_invertible(k + 1, &mut rng);
        let other = poncelet_polynomial(&sys.recombine(&m).unwrap()).unwrap();
        prop_assert_eq!(other.equation, h.equation);
    }

    #[test]
    fn planted_base_points_factor((n, k) in grid(), d in 1usize..=2, seed in any::<u64>()) {
        prop_assume!(n >= d + k);
        let mut rng = seeded_rng(seed);
        let roots = random_params(d, &mut rng);
        let sys = planted_system(n, k, &roots, &mut rng).unwrap();
        let f = factor_base_points_with_roots(&sys, &roots).unwrap();
        prop_assert!(f.reconstructs);
        prop_assert!(f.residual_matches);
        prop_assert_eq!(f.residual.homogeneous_degree(), Some((n - k - d) as u32));
    }

    #[test]
    fn zero_locus_tests_agree((n, k) in grid(), seed in any::<u64>(), planted in any::<bool>()) {
        let mut rng = seeded_rng(seed);
        let a = loop {
            let c = random_form(k + 1, &mut rng);
            if let Some(p) = ProjPoint::new(c.coeffs().to_vec()) {
                break p;
            }
        };
        let s = if planted {
            &point_form(&a, k).unwrap() * &random_form(n - k - 1, &mut rng)
        } else {
            random_form(n, &mut rng)
        };
        prop_assume!(!s.is_zero());
        let (divides, member) = zero_locus_tests(&s, &a, k).unwrap();
        prop_assert_eq!(divides, member);
        if planted {
            prop_assert!(divides);
        }
    }

    #[test]
    fn vertices_of_split_sections((n, k) in grid(), seed in any::<u64>()) {
        let mut rng = seeded_rng(seed);
        let roots = random_params(n, &mut rng);
        let s = root_form(&roots);
        prop_assert_eq!(zero_locus_count(&s, &roots, k).unwrap(), binomial(n, k + 1));
        let vertices: Vec<ProjPoint> =
            zero_locus_vertices(&roots, k).unwrap().into_iter().map(|(_, v)| v).collect();
        for (i, v) in vertices.iter().enumerate() {
            prop_assert!(!vertices[..i].contains(v));
        }
    }

    #[test]
    fn member_vertices_lie_on_hypersurface((n, k) in grid(), seed in any::<u64>()) {
        let mut rng = seeded_rng(seed);
        let roots = random_params(n, &mut rng);
        let mut forms = vec![root_form(&roots)];
        forms.extend((0..k).map(|_| random_form(n, &mut rng)));
        let Ok(sys) = LinearSystem::new(&forms) else { return Ok(()) };
        if let Err(Error::DegenerateDeterminant) = poncelet_polynomial(&sys) {
            return Ok(());
        }
        let mut c = vec![int(0); k + 1];
        c[0] = int(1);
        prop_assert!(vertices_on_hypersurface(&sys, &c, &roots).unwrap());
    }

    #[test]
    fn configurations_are_singular(
        (n, k) in prop::sample::select(vec![(4, 1), (5, 1), (5, 2), (6, 2), (5, 3)]),
        seed in any::<u64>(),
    ) {
        let mut rng = seeded_rng(seed);
        let params = random_params(n - 1, &mut rng);
        let report = verify_teorema(n, k, &params, seed).unwrap();
        prop_assert!(report.pass(), "{:?}", report);
    }
}
