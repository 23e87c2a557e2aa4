use liemult::catalogue::{self, Invariant};
use liemult::hopf::{self, ComplementChoice, PresentationOptions};
use liemult::linalg::{int, Scalar, SparseVec};
use liemult::multiplier::{kunneth_dim, multiplier_report, schur_multiplier_dim};
use liemult::verify::{self, lemma_suite, Status};
use liemult::LieAlgebra;
use proptest::prelude::*;
use std::collections::BTreeMap;

fn entries() -> Vec<(&'static str, LieAlgebra)> {
    catalogue::list_entries()
        .iter()
        .filter_map(|e| e.algebra().ok().map(|l| (e.name(), l)))
        .collect()
}

fn small_vec(n: usize) -> impl Strategy<Value = SparseVec> {
    prop::collection::vec(-3i64..=3, n)
        .prop_map(|c| SparseVec::from_dense(&c.into_iter().map(int).collect::<Vec<Scalar>>()))
}

fn entry_index() -> impl Strategy<Value = usize> {
    0..entries().len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_bilinear_and_alternating((idx, u, v, w) in entry_index().prop_flat_map(|i| {
        let n = entries()[i].1.dim();
        (Just(i), small_vec(n), small_vec(n), small_vec(n))
    })) {
        let (_, l) = &entries()[idx];
        let a = int(3);
        prop_assert!(l.bracket_sparse(&u, &u).is_zero());
        prop_assert_eq!(l.bracket_sparse(&u, &v), l.bracket_sparse(&v, &u).neg());
        let lhs = l.bracket_sparse(&u.scaled(&a).add(&w), &v);
        let rhs = l.bracket_sparse(&u, &v).scaled(&a).add(&l.bracket_sparse(&w, &v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn direct_sum_is_additive(i in entry_index(), j in entry_index()) {
        let all = entries();
        let (a, b) = (&all[i].1, &all[j].1);
        prop_assume!(a.dim() + b.dim() <= 11);
        let s = a.direct_sum(b);
        prop_assert_eq!(s.dim(), a.dim() + b.dim());
        prop_assert_eq!(s.derived_subalgebra().dim(), a.derived_subalgebra().dim() + b.derived_subalgebra().dim());
        prop_assert_eq!(s.center().dim(), a.center().dim() + b.center().dim());
        let class = a.nilpotency_class().unwrap().max(b.nilpotency_class().unwrap());
        prop_assert_eq!(s.nilpotency_class().unwrap(), class);
    }

    #[test]
    fn quotient_by_center_drops_class(idx in entry_index()) {
        let (_, l) = &entries()[idx];
        let q = l.quotient(&l.center()).unwrap();
        prop_assert_eq!(q.dim(), l.dim() - l.center().dim());
        prop_assert_eq!(q.nilpotency_class().unwrap(), l.nilpotency_class().unwrap() - 1);
        let q = l.quotient(&l.derived_subalgebra()).unwrap();
        prop_assert!(q.is_abelian());
        prop_assert_eq!(q.dim(), l.abelianization_dim());
    }

    #[test]
    fn kunneth_holds_on_catalogue(idx in entry_index(), k in 1usize..=2) {
        let (_, l) = &entries()[idx];
        prop_assume!(l.dim() + k <= 10);
        let m = schur_multiplier_dim(l).unwrap();
        let sum = l.direct_sum(&LieAlgebra::abelian(k));
        prop_assert_eq!(schur_multiplier_dim(&sum).unwrap(), kunneth_dim(m, l.abelianization_dim(), k));
    }

    #[test]
    fn heisenberg_shape(m in 1usize..=5) {
        let h = LieAlgebra::heisenberg(m);
        prop_assert_eq!(h.dim(), 2 * m + 1);
        prop_assert_eq!(h.nilpotency_class().unwrap(), 2);
        prop_assert_eq!(h.center().dim(), 1);
    }
}

#[test]
fn center_is_first_upper_term() {
    for (name, l) in entries() {
        let series = l.central_series().unwrap();
        assert_eq!(series.upper[1], l.center(), "{name}");
        assert_eq!(series.lower[1], l.derived_subalgebra(), "{name}");
    }
}

#[test]
fn every_entry_validates_or_is_quarantined() {
    for e in catalogue::list_entries() {
        assert_eq!(e.algebra().is_err(), e.is_quarantined(), "{}", e.name());
    }
}

#[test]
fn epicenter_does_not_depend_on_complement() {
    for (name, l) in entries() {
        let first = hopf::cover_with_options(
            &l,
            PresentationOptions {
                complement: ComplementChoice::First,
                ..Default::default()
            },
        )
        .unwrap();
        let last = hopf::cover_with_options(
            &l,
            PresentationOptions {
                complement: ComplementChoice::Last,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(first.epicenter, last.epicenter, "{name}");
        let m = schur_multiplier_dim(&l).unwrap();
        assert_eq!(first.cover.dim(), l.dim() + m, "{name}");
        assert!(
            first.kernel_is_central() && first.kernel_in_derived(),
            "{name}"
        );
    }
}

#[test]
fn capability_expectations_hold() {
    for e in catalogue::list_entries() {
        for x in e.expectations() {
            if let Invariant::Capable(expected) = x.invariant {
                let c = hopf::cover_and_epicenter(&e.algebra().unwrap()).unwrap();
                assert_eq!(c.is_capable, expected, "{}", e.name());
            }
        }
    }
}

#[test]
fn aliases_give_identical_tables() {
    for e in catalogue::list_entries() {
        for alias in e.aliases() {
            assert_eq!(catalogue::entry(alias).unwrap().name(), e.name());
            assert_eq!(catalogue::get(alias).ok(), e.algebra().ok(), "{alias}");
        }
    }
    assert_eq!(
        catalogue::get("L(3,4,1,4)").unwrap(),
        catalogue::get("L_{4,3}").unwrap()
    );
    assert_eq!(
        catalogue::get("L_1").unwrap(),
        catalogue::get("27B").unwrap()
    );
    assert_eq!(
        catalogue::get("L_2").unwrap(),
        catalogue::get("27A").unwrap()
    );
}

#[test]
fn classify_matches_iff_s_is_five() {
    for (name, l) in entries() {
        if l.is_abelian() {
            continue;
        }
        let s = multiplier_report(&l).unwrap().s.unwrap();
        let found = verify::classify_s5(&l).unwrap();
        assert_eq!(!found.is_empty(), s == 5, "{name}");
    }
}

#[test]
fn fingerprint_collisions() {
    let mut groups: BTreeMap<String, Vec<&str>> = BTreeMap::new();
    for (label, e) in catalogue::main_theorem_list() {
        let fp = verify::fingerprint(&e.algebra().unwrap()).unwrap();
        groups.entry(fp.to_string()).or_default().push(label);
    }
    let mut shared: Vec<Vec<&str>> = groups.into_values().filter(|g| g.len() > 1).collect();
    shared.sort();
    assert_eq!(
        shared,
        vec![vec!["37B", "37C", "37D"], vec!["L_{6,23}", "L_{6,25}"]]
    );
}

#[test]
fn lemma_suite_passes() {
    let r = lemma_suite();
    assert!(r.is_success(), "{}", r.to_text());
    assert!(r.count(Status::Pass) > 100);
}

#[test]
fn table_verification_fails_only_on_one_row() {
    let r = verify::verify_tables(&Default::default());
    let failing: Vec<(&str, &str)> = r
        .failures()
        .map(|f| (f.name.as_str(), f.invariant.as_str()))
        .collect();
    assert_eq!(failing, vec![("1357C", "dim M, s"), ("1357C", "dim Z")]);
    let oracle = verify::verify_tables(&verify::VerifyOptions {
        oracle: true,
        epsilon_samples: vec![],
        ..Default::default()
    });
    assert!(oracle
        .records
        .iter()
        .filter(|r| r.invariant == "dim M (hopf)")
        .all(|r| r.status != Status::Fail));
}
