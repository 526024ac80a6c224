use std::collections::BTreeSet;

use fuzzy_riesz::foset::{random_lattice, random_maxmin_foset, supremum, validate_fuzzy_order, MembershipMatrix};
use fuzzy_riesz::ideals::{band_generated, disjoint_complement, ideal_generated, Handle};
use fuzzy_riesz::projections::{band_projection_operator, principal_projection};
use fuzzy_riesz::rational::{int, ratio, Rational};
use fuzzy_riesz::space::riesz_decompose;
use fuzzy_riesz::{Grade, RationalVector, SpaceSpec};
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(p, q)| ratio(p, q))
}

fn vector(dim: usize) -> impl Strategy<Value = RationalVector> {
    prop::collection::vec(rational(), dim).prop_map(RationalVector::new)
}

fn grade_c() -> impl Strategy<Value = Rational> {
    prop_oneof![Just(ratio(3, 5)), Just(ratio(2, 3)), Just(ratio(4, 5)), Just(int(1))]
}

fn pointwise_pair() -> impl Strategy<Value = (SpaceSpec, RationalVector, RationalVector)> {
    (1usize..=5, grade_c()).prop_flat_map(|(n, c)| (Just(SpaceSpec::pointwise(n, c).unwrap()), vector(n), vector(n)))
}

fn lex_pair() -> impl Strategy<Value = (SpaceSpec, RationalVector, RationalVector)> {
    (grade_c(), vector(2), vector(2)).prop_map(|(c, x, y)| (SpaceSpec::lex(c).unwrap(), x, y))
}

fn coordinatewise(x: &RationalVector, y: &RationalVector, f: fn(&Rational, &Rational) -> Rational) -> RationalVector {
    RationalVector::new(x.coords().iter().zip(y.coords()).map(|(a, b)| f(a, b)).collect())
}

fn support(x: &RationalVector) -> BTreeSet<usize> {
    (0..x.dim()).filter(|&i| !x[i].is_zero()).map(|i| i + 1).collect()
}

proptest! {
    // [TRIVIAL] text and JSON forms read back to the same vector
    #[test]
    fn vector_round_trips(x in vector(4)) {
        prop_assert_eq!(RationalVector::parse(&x.to_string()).unwrap(), x.clone());
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<RationalVector>(&json).unwrap(), x);
    }

    // [DERIVED] pointwise lattice operations are coordinatewise max and min
    #[test]
    fn pointwise_lattice_is_coordinatewise((s, x, y) in pointwise_pair()) {
        prop_assert_eq!(s.join(&x, &y).unwrap(), coordinatewise(&x, &y, |a, b| a.max(b).clone()));
        prop_assert_eq!(s.meet(&x, &y).unwrap(), coordinatewise(&x, &y, |a, b| a.min(b).clone()));
        prop_assert_eq!(s.abs(&x).unwrap(), x.coord_abs());
    }

    // [DERIVED] grades follow the preset formula against an independent order test
    #[test]
    fn grades_match_the_preset_formula((s, x, y) in prop_oneof![pointwise_pair(), lex_pair()]) {
        let below = match s.family() {
            fuzzy_riesz::Family::Pointwise => x.coords().iter().zip(y.coords()).all(|(a, b)| a <= b),
            fuzzy_riesz::Family::Lex => x.coords() <= y.coords(),
        };
        let expected = if x == y { int(1) } else if below { s.grade_c().clone() } else { int(0) };
        prop_assert_eq!(s.mu(&x, &y).unwrap().value().clone(), expected);
    }

    // [DERIVED] the plane orders lexicographically: the join is the larger tuple
    #[test]
    fn lex_join_is_tuple_max((s, x, y) in lex_pair()) {
        let bigger = if x.coords() >= y.coords() { x.clone() } else { y.clone() };
        prop_assert_eq!(s.join(&x, &y).unwrap(), bigger);
        prop_assert_eq!(&s.pos_part(&x).unwrap() - &s.neg_part(&x).unwrap(), x.clone());
        prop_assert_eq!(&s.pos_part(&x).unwrap() + &s.neg_part(&x).unwrap(), s.abs(&x).unwrap());
    }

    // [DERIVED] decomposition postconditions on instances dominated by construction
    #[test]
    fn decomposition_postconditions(
        n in 1usize..=4,
        ys in prop::collection::vec(vector(3), 1..=4),
        ts in prop::collection::vec(-4i64..=4, 3),
    ) {
        let s = SpaceSpec::pointwise(3, ratio(2, 3)).unwrap();
        let ys: Vec<RationalVector> = ys.into_iter().cycle().take(n).collect();
        let bound = s.abs(&s.sum(&ys).unwrap()).unwrap();
        let x = RationalVector::new((0..3).map(|i| &bound[i] * ratio(ts[i], 4)).collect());
        let parts = riesz_decompose(&s, &x, &ys).unwrap().parts;
        prop_assert_eq!(s.sum(&parts).unwrap(), x.clone());
        for (p, y) in parts.iter().zip(&ys) {
            prop_assert!(s.mu(&s.abs(p).unwrap(), &s.abs(y).unwrap()).unwrap().above_half());
        }
        if ts.iter().all(|t| *t >= 0) {
            for p in &parts {
                prop_assert!(p.coords().iter().all(|c| !c.is_negative()));
            }
        }
    }

    // [DERIVED] pointwise ideals, bands, complements and projections are support masks
    #[test]
    fn pointwise_handles_are_supports(d in prop::collection::vec(vector(4), 1..=3), y in vector(4)) {
        let s = SpaceSpec::pointwise(4, ratio(3, 5)).unwrap();
        let union: BTreeSet<usize> = d.iter().flat_map(support).collect();
        let h = Handle::pointwise(union.clone());
        prop_assert_eq!(ideal_generated(&s, &d).unwrap(), h.clone());
        prop_assert_eq!(band_generated(&s, &d).unwrap(), h.clone());
        prop_assert_eq!(h.contains(&s, &y).unwrap(), support(&y).is_subset(&union));
        let rest: BTreeSet<usize> = (1..=4).filter(|i| !union.contains(i)).collect();
        prop_assert_eq!(disjoint_complement(&s, &h).unwrap(), Handle::pointwise(rest));
        let masked = RationalVector::new(
            (0..4).map(|i| if union.contains(&(i + 1)) { y[i].clone() } else { int(0) }).collect(),
        );
        prop_assert_eq!(band_projection_operator(&s, &h).unwrap().apply(&y).unwrap(), masked);
    }

    // [DERIVED] the principal projection keeps exactly the coordinates where x is nonzero
    #[test]
    fn principal_projection_is_a_mask(x in vector(4), y in vector(4)) {
        let s = SpaceSpec::pointwise(4, ratio(4, 5)).unwrap();
        let keep = support(&x);
        let expected = RationalVector::new(
            (0..4).map(|i| if keep.contains(&(i + 1)) { y[i].clone() } else { int(0) }).collect(),
        );
        prop_assert_eq!(principal_projection(&s, &x, &y).unwrap(), expected);
    }

    // [DERIVED] generated fosets validate and lowering one diagonal grade is caught
    #[test]
    fn generated_fosets(seed in any::<u64>(), n in 2usize..=8, g in 0i64..10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut m = random_maxmin_foset(&mut rng, n).unwrap();
        prop_assert!(validate_fuzzy_order(&m).is_empty());
        let x = (seed % n as u64) as usize;
        m.set(x, x, Grade::new(ratio(g, 10)).unwrap());
        let report = validate_fuzzy_order(&m);
        prop_assert_eq!(report.reflexivity_violations, vec![m.label(x).to_string()]);
    }

    // [DERIVED] lattice suprema of pairs are upper bounds below every other upper bound
    #[test]
    fn lattice_suprema(seed in any::<u64>(), n in 2usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m: MembershipMatrix = random_lattice(&mut rng, n, &ratio(2, 3)).unwrap();
        for a in 0..n {
            for b in 0..n {
                let z = supremum(&m, &[a, b]).unwrap().expect("lattice");
                prop_assert!(m.precedes(a, z) && m.precedes(b, z));
                for u in (0..n).filter(|&u| m.precedes(a, u) && m.precedes(b, u)) {
                    prop_assert!(m.precedes(z, u));
                }
            }
        }
    }

    // [TRIVIAL] specs and handles survive JSON
    #[test]
    fn spec_and_handle_json(n in 1usize..=6, c in grade_c(), mask in 0u64..64) {
        let s = SpaceSpec::pointwise(n, c).unwrap();
        prop_assert_eq!(SpaceSpec::from_json(&s.to_json()).unwrap(), s);
        let h = Handle::pointwise((0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1));
        prop_assert_eq!(Handle::from_json(&h.to_json()).unwrap(), h);
    }
}
