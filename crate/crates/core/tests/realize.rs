mod common;

use gauss_meander::gauss::{enumerate_codes, GaussCode};
use gauss_meander::realize::{
    count_faces, euler_characteristics, even_condition, matrix_conditions, oracle_realizable,
    scalar_product, theorem34_realizable, RotationAssignment, ScalarMode, Witness,
};
use gauss_meander::ChordDiagram;
use proptest::prelude::*;

fn crossing_domain(max_n: usize) -> Vec<ChordDiagram> {
    (2..=max_n)
        .flat_map(|n| enumerate_codes(n, true).unwrap())
        .map(|c| ChordDiagram::new(c.into_code()).unwrap())
        .collect()
}

fn as_bools(d: &ChordDiagram) -> Vec<Vec<bool>> {
    common::interlace(d.code().word())
}

#[test]
fn scalar_products_count_common_crossings() {
    for n in 1..=5 {
        for w in common::all_words(n) {
            let d = ChordDiagram::new(GaussCode::from_indices(&w).unwrap()).unwrap();
            let m = d.interlacement_matrix();
            let sets: Vec<Vec<usize>> = (0..n).map(|c| d.crossing_set(c)).collect();
            let mut subsets: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
            for i in 0..n {
                for j in i..n {
                    subsets.push(vec![i, j]);
                    for k in j..n {
                        subsets.push(vec![i, j, k]);
                    }
                }
            }
            for s in subsets {
                let direct = (0..n)
                    .filter(|t| s.iter().all(|&i| sets[i].contains(t)))
                    .count() as u32;
                assert_eq!(
                    scalar_product(&m, &s, ScalarMode::Integer).unwrap(),
                    direct,
                    "{w:?} {s:?}"
                );
                assert_eq!(
                    scalar_product(&m, &s, ScalarMode::Mod2).unwrap(),
                    direct % 2
                );
            }
        }
    }
}

#[test]
fn even_condition_is_matrix_conditions_one_and_two() {
    for n in 0..=6 {
        for canon in enumerate_codes(n, false).unwrap() {
            let d = ChordDiagram::new(canon.into_code()).unwrap();
            let c = matrix_conditions(&d.interlacement_matrix()).unwrap();
            let even = even_condition(&d).is_realizable();
            assert_eq!(
                even,
                c.condition_holds(1) && c.condition_holds(2),
                "{}",
                d.code()
            );
            assert_eq!(even, common::even_condition(&as_bools(&d)), "{}", d.code());
        }
    }
}

#[test]
fn oracle_agrees_with_cocycle_criterion() {
    for d in crossing_domain(6) {
        let oracle = oracle_realizable(d.code()).unwrap();
        assert_eq!(
            oracle.realizable,
            common::cocycle_realizable(&as_bools(&d)),
            "{}",
            d.code()
        );
    }
}

#[test]
fn realizable_diagrams_pass_every_necessary_condition() {
    for d in crossing_domain(6) {
        if oracle_realizable(d.code()).unwrap().realizable {
            assert!(even_condition(&d).is_realizable(), "{}", d.code());
            assert!(
                matrix_conditions(&d.interlacement_matrix())
                    .unwrap()
                    .holds(),
                "{}",
                d.code()
            );
        }
    }
}

#[test]
fn oracle_sanity() {
    for n in 1..=6 {
        for canon in enumerate_codes(n, false).unwrap() {
            let d = ChordDiagram::new(canon.into_code()).unwrap();
            let chis = euler_characteristics(&d);
            assert_eq!(chis.len(), 1 << n);
            let max = *chis.iter().max().unwrap();
            assert!(max <= 2 && max % 2 == 0, "{}: {max}", d.code());
            for a in RotationAssignment::all(n) {
                assert!(count_faces(&d, a) >= 1);
            }
        }
    }
}

#[test]
fn smallest_even_passing_non_realizable_code() {
    let found = crossing_domain(6).into_iter().find(|d| {
        even_condition(d).is_realizable() && !oracle_realizable(d.code()).unwrap().realizable
    });
    let d = found.expect("some code passes the even condition without being planar");
    let report = theorem34_realizable(&d);
    assert!(!report.is_realizable());
    assert!(
        matches!(report.witness, Some(Witness::Smoothed { .. })),
        "{}: {report}",
        d.code()
    );
}

#[test]
fn worked_verdicts() {
    let verdict = |s: &str| oracle_realizable(&GaussCode::parse(s).unwrap()).unwrap();
    assert_eq!((verdict("aa").realizable, verdict("aa").genus), (true, 0));
    assert_eq!(
        (verdict("abab").realizable, verdict("abab").genus),
        (false, 1)
    );
    assert_eq!(
        (verdict("abcabc").realizable, verdict("abcabc").genus),
        (true, 0)
    );
    assert!(verdict("").realizable);
    let d = ChordDiagram::parse("abab").unwrap();
    assert_eq!(
        even_condition(&d).to_string(),
        "not-realizable (witness: |a_×| = 1 is odd)"
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn deciders_agree_on_random_codes(n in 2usize..=8, seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut w: Vec<usize> = (0..n).flat_map(|x| [x, x]).collect();
        w.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let d = ChordDiagram::new(GaussCode::from_indices(&w).unwrap()).unwrap();
        let oracle = oracle_realizable(d.code()).unwrap();
        prop_assert_eq!(theorem34_realizable(&d).is_realizable(), oracle.realizable);
        prop_assert_eq!(common::cocycle_realizable(&as_bools(&d)), oracle.realizable);
        if oracle.realizable {
            prop_assert!(matrix_conditions(&d.interlacement_matrix()).unwrap().holds());
        }
    }
}
