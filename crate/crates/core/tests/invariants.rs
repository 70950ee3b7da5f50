use std::collections::BTreeSet;

use proptest::collection::vec;
use proptest::prelude::*;

use monideal::arith::{
    colon_monomial, colon_variables_outside_support, deletion, intersect, power, product, sum,
};
use monideal::decompose::{
    all_witnesses, associated_primes, embedded_primes, height, irreducible_decomposition,
    minimal_primes, witnesses_in_box,
};
use monideal::graph::{cover_ideal, GraphSpec};
use monideal::harness::{parse_ideal_document, random_ideal};
use monideal::properties::theorems::{
    check_deletion_witness, check_disjoint_ass, check_minprime_witness, check_witness_degree,
    check_witness_nondivisibility,
};
use monideal::properties::{
    check_report, corner_elements, is_ntf_up_to, FailureWitness, Property, Verdict,
};
use monideal::structure::{
    beta1, is_konig, max_disjoint_generators, symbolic_power, symbolic_power_general,
    symbolic_power_squarefree,
};
use monideal::{minimalize, Budget, Monomial, MonomialIdeal, MonomialPrime, RingContext};

fn exps(n: usize, max: u32) -> impl Strategy<Value = Vec<u32>> {
    vec(0..=max, n)
}

fn nonconstant(mut e: Vec<u32>) -> Monomial {
    if e.iter().all(|&x| x == 0) {
        e[0] = 1;
    }
    Monomial::from_exponents(e)
}

/// Proper nonzero ideal in `lo..=hi` variables.
fn ideal(lo: usize, hi: usize, gens: usize, max: u32) -> impl Strategy<Value = MonomialIdeal> {
    (lo..=hi).prop_flat_map(move |n| {
        vec(exps(n, max), 1..=gens).prop_map(move |gs| {
            let r = RingContext::with_vars(n).unwrap();
            MonomialIdeal::new(&r, gs.into_iter().map(nonconstant)).unwrap()
        })
    })
}

fn squarefree(lo: usize, hi: usize, gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    ideal(lo, hi, gens, 1)
}

/// Ideals sharing one ring.
fn ideals_in(
    n: usize,
    k: usize,
    gens: usize,
    max: u32,
) -> impl Strategy<Value = Vec<MonomialIdeal>> {
    vec(vec(exps(n, max), 1..=gens), k).prop_map(move |all| {
        let r = RingContext::with_vars(n).unwrap();
        all.into_iter()
            .map(|gs| MonomialIdeal::new(&r, gs.into_iter().map(nonconstant)).unwrap())
            .collect()
    })
}

fn var_prime(i: &MonomialIdeal, vars: impl IntoIterator<Item = usize>) -> MonomialPrime {
    MonomialPrime::new(i.ring(), vars).unwrap()
}

/// Irreducible components by recursive splitting:
/// `I + (u*v) = (I + (u)) ∩ (I + (v))` for coprime `u, v`.
fn split_components(gens: Vec<Monomial>, out: &mut BTreeSet<Vec<u32>>) {
    let n = gens[0].nvars();
    match gens.iter().find(|g| g.support().len() > 1) {
        None => {
            let mut c = vec![0u32; n];
            for g in &gens {
                let v = g.support_iter().next().unwrap();
                let e = g.exponent(v);
                if c[v] == 0 || e < c[v] {
                    c[v] = e;
                }
            }
            out.insert(c);
        }
        Some(g) => {
            let v = g.support_iter().next().unwrap();
            let pure = Monomial::from_exponents(
                (0..n)
                    .map(|k| if k == v { g.exponent(v) } else { 0 })
                    .collect::<Vec<_>>(),
            );
            let rest = g.with_exponent(v, 0);
            for part in [pure, rest] {
                let mut next: Vec<Monomial> = gens.iter().filter(|h| *h != g).cloned().collect();
                next.push(part);
                split_components(next, out);
            }
        }
    }
}

fn oracle_components(i: &MonomialIdeal) -> BTreeSet<Vec<u32>> {
    let mut all = BTreeSet::new();
    split_components(i.gens().to_vec(), &mut all);
    // keep inclusion-minimal components: a ⊆ b iff each pure power of b
    // is divided by a pure power of a
    let subset =
        |a: &Vec<u32>, b: &Vec<u32>| a.iter().zip(b).all(|(&x, &y)| x == 0 || (y > 0 && y <= x));
    all.iter()
        .filter(|c| !all.iter().any(|d| d != *c && subset(d, c)))
        .cloned()
        .collect()
}

fn minimal_vertex_covers(n: usize, edges: &[(usize, usize)]) -> BTreeSet<Vec<u32>> {
    let covers: Vec<u32> = (0u32..1 << n)
        .filter(|s| {
            edges
                .iter()
                .all(|&(a, b)| s >> a & 1 == 1 || s >> b & 1 == 1)
        })
        .collect();
    covers
        .iter()
        .filter(|&&s| !covers.iter().any(|&t| t != s && t & s == t))
        .map(|&s| (0..n).map(|k| s >> k & 1).collect())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn minimalize_is_idempotent_and_keeps_membership(
        (n, gens, probes) in (1usize..=4).prop_flat_map(|n| (
            Just(n),
            vec(exps(n, 3), 0..=6),
            vec(exps(n, 4), 100),
        ))
    ) {
        let r = RingContext::with_vars(n).unwrap();
        let raw: Vec<Monomial> = gens.into_iter().map(Monomial::from_exponents).collect();
        let i = minimalize(&r, raw.clone()).unwrap();
        prop_assert_eq!(&minimalize(&r, i.gens().to_vec()).unwrap(), &i);
        for p in probes {
            let m = Monomial::from_exponents(p);
            prop_assert_eq!(i.contains(&m).unwrap(), raw.iter().any(|g| g.divides(&m)));
        }
    }

    #[test]
    fn divisibility_is_a_partial_order(
        (a, b, c) in (1usize..=4).prop_flat_map(|n| (exps(n, 2), exps(n, 2), exps(n, 2)))
    ) {
        let (a, b, c) = (Monomial::from_exponents(a), Monomial::from_exponents(b), Monomial::from_exponents(c));
        prop_assert!(a.divides(&a));
        if a.divides(&b) && b.divides(&a) {
            prop_assert_eq!(&a, &b);
        }
        if a.divides(&b) && b.divides(&c) {
            prop_assert!(a.divides(&c));
        }
    }

    #[test]
    fn gcd_times_lcm(
        (a, b) in (1usize..=5).prop_flat_map(|n| (exps(n, 6), exps(n, 6)))
    ) {
        let (a, b) = (Monomial::from_exponents(a), Monomial::from_exponents(b));
        prop_assert_eq!(
            a.gcd(&b).checked_mul(&a.lcm(&b)).unwrap(),
            a.checked_mul(&b).unwrap()
        );
    }

    #[test]
    fn power_is_additive(i in ideal(1, 3, 3, 2), a in 1u32..=3, b in 1u32..=3) {
        prop_assert_eq!(power(&i, a + b).unwrap(), product(&power(&i, a).unwrap(), &power(&i, b).unwrap()).unwrap());
    }

    #[test]
    fn colon_adjunction(
        (i, h, probes) in ideal(1, 4, 4, 3).prop_flat_map(|i| {
            let n = i.nvars();
            (Just(i), exps(n, 3), vec(exps(n, 3), 30))
        })
    ) {
        let h = Monomial::from_exponents(h);
        let q = colon_monomial(&i, &h).unwrap();
        for u in probes {
            let u = Monomial::from_exponents(u);
            prop_assert_eq!(q.contains(&u).unwrap(), i.contains(&u.checked_mul(&h).unwrap()).unwrap());
        }
    }

    #[test]
    fn deletion_commutes_with_power(i in ideal(1, 4, 4, 2), t in 1u32..=3, v in 0usize..4) {
        let v = v % i.nvars();
        prop_assert_eq!(
            power(&deletion(&i, v).unwrap(), t).unwrap(),
            deletion(&power(&i, t).unwrap(), v).unwrap()
        );
    }

    #[test]
    fn colon_by_outside_monomial_is_identity(
        (i, h) in (1usize..=3, 1usize..=3).prop_flat_map(|(a, b)| {
            (vec(exps(a, 3), 1..=3), exps(b, 3)).prop_map(move |(gs, h)| {
                let r = RingContext::with_vars(a + b).unwrap();
                let gens = gs.into_iter().map(|g| {
                    let mut e = g;
                    e.resize(a + b, 0);
                    nonconstant(e)
                });
                let mut he = vec![0u32; a];
                he.extend(h);
                (MonomialIdeal::new(&r, gens).unwrap(), Monomial::from_exponents(he))
            })
        })
    ) {
        if i.support_union().iter().all(|&v| h.exponent(v) == 0) {
            prop_assert_eq!(&colon_monomial(&i, &h).unwrap(), &i);
            prop_assert_eq!(&colon_variables_outside_support(&i, &h).unwrap(), &i);
        }
    }

    #[test]
    fn decomposition_reconstructs_and_matches_splitting(i in ideal(1, 4, 5, 3)) {
        let d = irreducible_decomposition(&i).unwrap();
        prop_assert_eq!(&d.intersection(i.ring()).unwrap(), &i);
        let ours: BTreeSet<Vec<u32>> = d
            .components
            .iter()
            .map(|c| {
                let pp = c.pure_powers();
                (0..i.nvars()).map(|v| pp.get(&v).copied().unwrap_or(0)).collect()
            })
            .collect();
        prop_assert_eq!(ours, oracle_components(&i));
    }

    #[test]
    fn disjoint_sum_ass(
        (i1, i2) in (1usize..=3, 1usize..=3).prop_flat_map(|(a, b)| {
            (vec(exps(a, 2), 1..=3), vec(exps(b, 2), 1..=3)).prop_map(move |(g1, g2)| {
                let r = RingContext::with_vars(a + b).unwrap();
                let left = g1.into_iter().map(|g| {
                    let mut e = nonconstant(g).exponents().to_vec();
                    e.resize(a + b, 0);
                    Monomial::from_exponents(e)
                });
                let right = g2.into_iter().map(|g| {
                    let mut e = vec![0u32; a];
                    e.extend_from_slice(nonconstant(g).exponents());
                    Monomial::from_exponents(e)
                });
                (MonomialIdeal::new(&r, left).unwrap(), MonomialIdeal::new(&r, right).unwrap())
            })
        })
    ) {
        let rep = check_disjoint_ass(&i1, &i2).unwrap();
        prop_assert!(rep.confirmed(), "{:?}", rep.facts);
    }

    #[test]
    fn witnesses_exist_inside_the_support(i in ideal(1, 4, 4, 2), t in 1u32..=2) {
        let b = Budget::default();
        let j = power(&i, t).unwrap();
        let support = i.support_union();
        let bounds: Vec<u32> = monideal::decompose::witness_box(&j)
            .into_iter()
            .enumerate()
            .map(|(v, e)| if support.contains(&v) { e } else { 0 })
            .collect();
        let inside: BTreeSet<MonomialPrime> =
            witnesses_in_box(&j, &bounds, &b).unwrap().into_iter().map(|w| w.prime().clone()).collect();
        let all: BTreeSet<MonomialPrime> = associated_primes(&j).unwrap().into_iter().collect();
        prop_assert_eq!(inside, all);
    }

    #[test]
    fn witness_checks_hold(i in ideal(1, 4, 4, 2), t in 1u32..=2) {
        let b = Budget::default();
        let r = check_witness_nondivisibility(&i, t, &b).unwrap();
        prop_assert!(r.confirmed(), "{:?}", r.facts);
        let r = check_deletion_witness(&i, t, &b).unwrap();
        prop_assert!(r.confirmed(), "{:?}", r.facts);
    }

    #[test]
    fn squarefree_witness_checks_hold(i in squarefree(2, 5, 5), t in 1u32..=3) {
        let b = Budget::default();
        let r = check_witness_degree(&i, t, &b).unwrap();
        prop_assert!(r.confirmed(), "{:?}", r.facts);
        let r = check_minprime_witness(&i).unwrap();
        prop_assert!(r.confirmed(), "{:?}", r.facts);
    }

    #[test]
    fn symbolic_powers(i in squarefree(1, 5, 5), k in 1u32..=3) {
        let a = symbolic_power_general(&i, k).unwrap();
        prop_assert_eq!(&a, &symbolic_power_squarefree(&i, k).unwrap());
        let p = power(&i, k).unwrap();
        prop_assert!(p.is_subset_of(&a).unwrap());
        if associated_primes(&p).unwrap() == minimal_primes(&i).unwrap() {
            prop_assert_eq!(&p, &a);
        }
    }

    #[test]
    fn general_symbolic_contains_power(i in ideal(1, 3, 3, 2), k in 1u32..=3) {
        prop_assert!(power(&i, k).unwrap().is_subset_of(&symbolic_power(&i, k).unwrap()).unwrap());
    }

    #[test]
    fn beta1_is_a_maximum_independent_set(i in ideal(1, 6, 10, 2)) {
        let (b, set) = beta1(&i).unwrap();
        prop_assert_eq!(b, set.len());
        for (x, f) in set.iter().enumerate() {
            prop_assert!(i.gens().contains(f));
            for g in &set[x + 1..] {
                prop_assert!(f.is_coprime(g));
            }
        }
        let gens = i.gens();
        let best = (0u32..1 << gens.len())
            .filter(|s| {
                (0..gens.len()).all(|a| {
                    (a + 1..gens.len()).all(|c| s >> a & 1 == 0 || s >> c & 1 == 0 || gens[a].is_coprime(&gens[c]))
                })
            })
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap();
        prop_assert_eq!(b, best);
    }

    #[test]
    fn disjoint_generators_bounded_by_height(i in squarefree(1, 6, 6)) {
        let d = max_disjoint_generators(&i).unwrap();
        let h = height(&i).unwrap();
        prop_assert!(d <= h);
        prop_assert_eq!(is_konig(&i).unwrap(), d == h);
    }

    #[test]
    fn cover_ideal_matches_brute_force(
        (n, edges) in (2usize..=8).prop_flat_map(|n| {
            (Just(n), vec((0..n, 0..n), 1..=12))
        })
    ) {
        let mut es: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (a, b) in edges {
            if a != b {
                es.insert((a.min(b), a.max(b)));
            }
        }
        prop_assume!(!es.is_empty());
        let es: Vec<(usize, usize)> = es.into_iter().collect();
        let g = GraphSpec::new((1..=n).map(|v| v.to_string()), es.iter().copied()).unwrap();
        let r = RingContext::with_vars(n).unwrap();
        let j = cover_ideal(&g, &r).unwrap();
        let ours: BTreeSet<Vec<u32>> = j.gens().iter().map(|m| m.exponents().to_vec()).collect();
        prop_assert_eq!(ours, minimal_vertex_covers(n, &es));
    }

    #[test]
    fn ntf_evidence(i in squarefree(2, 5, 5)) {
        let b = Budget::default();
        let rep = is_ntf_up_to(&i, 3, &b).unwrap();
        let min = minimal_primes(&i).unwrap();
        match rep.verdict(Property::NormallyTorsionFree).unwrap() {
            Verdict::FailsAt { power: k, witness } => {
                let j = power(&i, *k).unwrap();
                prop_assert!(!embedded_primes(&j).unwrap().is_empty());
                match witness {
                    FailureWitness::Prime { prime, witness: Some(h) } => {
                        prop_assert!(!min.contains(prime));
                        prop_assert_eq!(colon_monomial(&j, h).unwrap(), prime.to_ideal());
                    }
                    other => prop_assert!(false, "unexpected witness {:?}", other),
                }
            }
            _ => {
                for s in &rep.snapshots {
                    prop_assert_eq!(&s.primes, &min);
                }
            }
        }
    }

    #[test]
    fn corners_track_the_maximal_ideal(i in ideal(1, 4, 4, 2), t in 1u32..=2) {
        let set = corner_elements(&i, t, &Budget::default()).unwrap();
        let m = MonomialPrime::maximal(i.ring());
        prop_assert_eq!(!set.is_empty(), associated_primes(&power(&i, t).unwrap()).unwrap().contains(&m));
        for f in set.corners() {
            for g in set.corners() {
                prop_assert!(f == g || !f.divides(g));
            }
        }
    }

    #[test]
    fn monomial_multiple_preserves_ntf(i in squarefree(2, 4, 4), h in exps(4, 2)) {
        let b = Budget::default();
        let h = Monomial::from_exponents(h[..i.nvars()].to_vec());
        let hi = product(&i, &MonomialIdeal::principal(i.ring(), h).unwrap()).unwrap();
        prop_assert_eq!(is_ntf_up_to(&i, 3, &b).unwrap().holds(), is_ntf_up_to(&hi, 3, &b).unwrap().holds());
    }

    #[test]
    fn strong_persistence_implies_persistence(i in ideal(1, 4, 4, 2)) {
        let rep = check_report(&i, 3, &Budget::default(), &[Property::StrongPersistence, Property::Persistence]).unwrap();
        if rep.verdict(Property::StrongPersistence).unwrap().holds() {
            prop_assert!(rep.verdict(Property::Persistence).unwrap().holds());
        }
    }

    #[test]
    fn random_ideal_is_reproducible(seed in any::<u64>(), sf in any::<bool>()) {
        let a = random_ideal(seed, 4, 5, 3, sf).unwrap();
        prop_assert_eq!(&a, &random_ideal(seed, 4, 5, 3, sf).unwrap());
        prop_assert!(a.len() <= 5);
        prop_assert!(!sf || a.is_squarefree());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn intersection_and_sum_distribute(three in (1usize..=4).prop_flat_map(|n| ideals_in(n, 3, 4, 3))) {
        let (i, j, l) = (&three[0], &three[1], &three[2]);
        prop_assert_eq!(
            intersect(i, &sum(j, l).unwrap()).unwrap(),
            sum(&intersect(i, j).unwrap(), &intersect(i, l).unwrap()).unwrap()
        );
        prop_assert_eq!(
            sum(i, &intersect(j, l).unwrap()).unwrap(),
            intersect(&sum(i, j).unwrap(), &sum(i, l).unwrap()).unwrap()
        );
    }
}

#[test]
fn witness_degree_outside_the_prime_is_unbounded() {
    // (x1*x2 : x2^k) = (x1) for all k, so the bound only applies inside p
    let r = RingContext::with_vars(2).unwrap();
    let i = MonomialIdeal::parse(&r, "x1*x2").unwrap();
    let p = var_prime(&i, [0]);
    for k in 1..=5 {
        let h = r.monomial(&format!("x2^{k}")).unwrap();
        assert_eq!(colon_monomial(&i, &h).unwrap(), p.to_ideal());
    }
    let ws = all_witnesses(&i, 1, &Budget::default()).unwrap();
    assert!(ws
        .iter()
        .any(|w| w.prime() == &p && w.witness().exponent(1) > 0));
}

#[test]
fn parser_round_trip_on_golden_inputs() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data");
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("ideal") {
            continue;
        }
        let text = std::fs::read_to_string(&path).unwrap();
        let doc = parse_ideal_document(&text).unwrap();
        let printed = doc.to_string();
        assert_eq!(
            parse_ideal_document(&printed).unwrap(),
            doc,
            "{}",
            path.display()
        );
        assert_eq!(parse_ideal_document(&printed).unwrap().to_string(), printed);
        seen += 1;
    }
    assert!(seen >= 4);
}
