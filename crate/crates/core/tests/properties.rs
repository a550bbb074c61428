//! Property-based invariants over randomized inputs: reflection geometry,
//! character-ring laws, coset-section structure, and branching reassembly.

use num_traits::Zero;
use proptest::prelude::*;

use equalrank::charring::{
    branch, delta, delta_is_antisymmetric, irrep_character, is_invariant_under,
    FormalCharacter, DEFAULT_SUPPORT_CAP,
};
use equalrank::multiplet::{is_dominant_integral, multiplet, DominantWeightF};
use equalrank::pair::{bn_dn_pair, make_pair, EqualRankPair, Registry};
use equalrank::rootspace::{build_root_system, rat, rat_int, Family, WeightVector};
use equalrank::weyl::{coset_section, reflect_raw, DEFAULT_ORBIT_CAP};
use equalrank::{Int, Rat};

const CAP: u64 = DEFAULT_SUPPORT_CAP;

fn rational() -> impl Strategy<Value = Rat> {
    (-12i64..=12, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn vector(dim: usize) -> impl Strategy<Value = WeightVector> {
    prop::collection::vec(rational(), dim).prop_map(WeightVector::new)
}

fn small_character(dim: usize) -> impl Strategy<Value = FormalCharacter> {
    prop::collection::vec(
        (
            prop::collection::vec(-4i64..=4, dim),
            -5i64..=5,
        ),
        0..6,
    )
    .prop_map(move |entries| {
        FormalCharacter::from_terms(
            dim,
            entries
                .into_iter()
                .map(|(coords, c)| (WeightVector::from_ints(&coords), Int::from(c))),
        )
        .unwrap()
    })
}

fn small_pair() -> impl Strategy<Value = EqualRankPair> {
    prop_oneof![
        Just(bn_dn_pair(2).unwrap()),
        Just(bn_dn_pair(3).unwrap()),
        Just(Registry::builtin().resolve("F4-B4", None).unwrap()),
        Just(Registry::builtin().resolve("B4-D4", None).unwrap()),
        Just(make_pair(build_root_system(Family::A, 2).unwrap(), &[], None).unwrap()),
        Just(make_pair(build_root_system(Family::G, 2).unwrap(), &[], None).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflection_is_an_involution_and_isometry(
        x in vector(4),
        y in vector(4),
        root_index in 0usize..24,
    ) {
        let f4 = build_root_system(Family::F, 4).unwrap();
        let alpha = &f4.positive_roots[root_index];
        let rx = reflect_raw(alpha, &x);
        prop_assert_eq!(reflect_raw(alpha, &rx), x.clone());
        // ⟨s_α x, s_α y⟩ = ⟨x, y⟩
        let ry = reflect_raw(alpha, &y);
        prop_assert_eq!(rx.dot(&ry), x.dot(&y));
        // fixed hyperplane: ⟨s_α x, α⟩ = −⟨x, α⟩
        prop_assert_eq!(rx.dot(alpha), -x.dot(alpha));
    }

    #[test]
    fn character_ring_laws(
        a in small_character(3),
        b in small_character(3),
        c in small_character(3),
    ) {
        // commutativity and associativity of +, ·; distributivity
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b, CAP).unwrap(), b.mul(&a, CAP).unwrap());
        prop_assert_eq!(
            a.mul(&b, CAP).unwrap().mul(&c, CAP).unwrap(),
            a.mul(&b.mul(&c, CAP).unwrap(), CAP).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap(), CAP).unwrap(),
            a.mul(&b, CAP).unwrap().add(&a.mul(&c, CAP).unwrap()).unwrap()
        );
        // identities
        let one = FormalCharacter::one(3);
        prop_assert_eq!(a.mul(&one, CAP).unwrap(), a.clone());
        prop_assert_eq!(a.sub(&a).unwrap(), FormalCharacter::zero(3));
        // dimension is a ring homomorphism to the integers
        prop_assert_eq!(a.add(&b).unwrap().dimension(), a.dimension() + b.dimension());
        prop_assert_eq!(a.mul(&b, CAP).unwrap().dimension(), a.dimension() * b.dimension());
    }

    #[test]
    fn coset_section_structure(pair in small_pair()) {
        let section = coset_section(&pair, DEFAULT_ORBIT_CAP).unwrap();
        // cardinality = predicted index m
        prop_assert_eq!(Int::from(section.len()), pair.predicted_index().unwrap());
        // images of rho_F are distinct and strictly B-dominant; signs match
        // word parity
        let mut images = std::collections::BTreeSet::new();
        for c in &section {
            prop_assert!(images.insert(c.image_of_rho_f.clone()));
            let parity: i8 = if c.word.len() % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(c.sign, parity);
            prop_assert_eq!(
                c.apply(&pair.f.simple_roots, &pair.rho_f),
                c.image_of_rho_f.clone()
            );
            for alpha in &pair.b_positive_roots {
                prop_assert!(c.image_of_rho_f.dot(alpha) > Rat::zero());
            }
        }
        // the identity coset is present with sign +1
        prop_assert!(section.iter().any(|c| c.word.is_empty() && c.sign == 1));
    }

    #[test]
    fn bullet_images_are_dominant_integral(
        pair in small_pair(),
        raw in prop::collection::vec(0i64..=3, 4),
    ) {
        let coeffs: Vec<Rat> = raw.iter().take(pair.f.rank).map(|&c| rat_int(c)).collect();
        prop_assume!(coeffs.len() == pair.f.rank);
        let weight = pair.f.weight_from_fundamental_coeffs(&coeffs).unwrap();
        let lambda = DominantWeightF::new(&pair.f_subsystem(), weight).unwrap();
        let section = coset_section(&pair, DEFAULT_ORBIT_CAP).unwrap();
        let mult = multiplet(&pair, &section, &lambda).unwrap();
        let b_sub = pair.b_subsystem();
        for m in &mult.members {
            prop_assert!(is_dominant_integral(&b_sub, &m.highest_weight));
        }
        prop_assert!(mult.signed_dimension_sum().is_zero());
    }

    #[test]
    fn delta_antisymmetry_and_weyl_invariance(pair in small_pair()) {
        prop_assume!(pair.missing_positive_roots.len() <= 24);
        let d = delta(&pair, CAP).unwrap();
        // Reflecting in a missing root ψ negates Δ exactly when every s_ψ
        // stabilizes Φ(F/B) (true for torus pairs and D_n ⊂ B_n; false for
        // B4 ⊂ F4, where s_ψ can carry a missing root into a B-root).
        let stable = pair.missing_positive_roots.iter().all(|psi| {
            pair.missing_positive_roots.iter().all(|phi| {
                let image = reflect_raw(psi, phi);
                pair.missing_positive_roots.contains(&image)
                    || pair.missing_positive_roots.contains(&image.neg())
            })
        });
        prop_assert_eq!(delta_is_antisymmetric(&pair, &d), stable);
        // Δ is always W(B)-invariant (quotient of two anti-invariants)
        prop_assert!(is_invariant_under(&pair.b_subsystem(), &d));
        // the leading term is e^(rho_F - rho_B) with coefficient 1
        prop_assert_eq!(d.coeff(&pair.rho_f.sub(&pair.rho_b)), Int::from(1));
    }

    #[test]
    fn branch_reassembles_the_restricted_character(
        n in 2usize..=3,
        raw in prop::collection::vec(0i64..=2, 3),
    ) {
        let pair = bn_dn_pair(n).unwrap();
        let coeffs: Vec<Rat> = raw.iter().take(n).map(|&c| rat_int(c)).collect();
        let weight = pair.f.weight_from_fundamental_coeffs(&coeffs).unwrap();
        let lambda = DominantWeightF::new(&pair.f_subsystem(), weight).unwrap();
        let section = coset_section(&pair, DEFAULT_ORBIT_CAP).unwrap();
        let report = branch(&pair, &section, &lambda, CAP).unwrap();
        let b_sub = pair.b_subsystem();
        let mut reassembled = FormalCharacter::zero(pair.f.ambient_dim);
        for entry in &report.entries {
            let ch = irrep_character(&b_sub, &entry.highest_weight, CAP).unwrap();
            reassembled = reassembled.add(&ch.scale(&entry.multiplicity)).unwrap();
        }
        let restricted = irrep_character(&pair.f_subsystem(), &lambda.weight, CAP).unwrap();
        prop_assert_eq!(reassembled, restricted.clone());
        // W(B)-symmetry of the restriction
        prop_assert!(is_invariant_under(&b_sub, &restricted));
    }
}
