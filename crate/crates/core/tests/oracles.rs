//! Worked values, each computed by an independent reference and frozen.

mod common;

use common::*;
use relcat::chains::{chain_term, chain_trace, closure, default_cutoff, supremum_sigma, words};
use relcat::cocart::{self, cocartesian_image, is_cocartesian, join, modular_formula_check};
use relcat::enumerate::enumerate;
use relcat::maps::{direct_image, inverse_image, square};
use relcat::permut::{closure_power, mixed_subpermutability, pair_permutability_level, stationarity_conditions, Parity};
use relcat::relation::compose;
use relcat::ualg::{
    congruence_generated, congruence_join, congruence_lattice, day_formula_check, is_compatible, modularity_check,
    named, shifting_principle_check, shifting_scan, Congruence, FiniteAlgebra,
};
use relcat::{Error, FiniteMap, Kind, OrderKind, Relation};

fn r1() -> Relation {
    refl(3, &[(0, 1)])
}

fn s1() -> Relation {
    refl(3, &[(1, 2)])
}

fn path4() -> Relation {
    refl(4, &[(0, 1), (1, 2), (2, 3)])
}

fn f0112() -> FiniteMap {
    FiniteMap::new(3, vec![0, 1, 1, 2]).unwrap()
}

fn t1() -> Relation {
    refl(4, &[(0, 1), (2, 3)])
}

fn part(n: usize, blocks: &[&[usize]]) -> Relation {
    Relation::from_partition(n, blocks).unwrap()
}

fn mod_k(n: usize, k: usize) -> Relation {
    Relation::from_fn(n, |i, j| i % k == j % k)
}

fn z(n: usize) -> FiniteAlgebra {
    FiniteAlgebra::binary(n, "add", |a, b| (a + b) % n).unwrap()
}

#[test]
fn composition_follows_paths() {
    let sr = compose(&s1(), &r1()).unwrap();
    assert_eq!(sr, path_compose(&s1(), &r1()));
    assert_eq!(sr, refl(3, &[(0, 1), (1, 2), (0, 2)]));
    let rs = compose(&r1(), &s1()).unwrap();
    assert_eq!(rs, path_compose(&r1(), &s1()));
    assert_eq!(rs, refl(3, &[(0, 1), (1, 2)]));
    assert_eq!(sr.dual(), compose(&r1().dual(), &s1().dual()).unwrap());
}

#[test]
fn powers_of_a_path() {
    let r = path4();
    let mut expected = r.clone();
    for k in 2..=4 {
        expected = path_compose(&r, &expected);
        assert_eq!(r.power(k), expected);
    }
    assert_eq!(r.power(2), r.union(&rel(4, &[(0, 2), (1, 3)])));
    assert_eq!(r.power(3), r.power(2).union(&rel(4, &[(0, 3)])));
    assert_eq!(r.power(4), r.power(3));
}

#[test]
fn classification_of_a_short_path() {
    let r = refl(3, &[(0, 1), (1, 2)]);
    let m = matrix(&r);
    assert!(is_reflexive(&m) && !is_transitive(&m));
    let p = r.classify();
    assert!(p.reflexive && !p.transitive && !p.preorder);
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 0..=4 {
        let sorted = |mut v: Vec<Relation>| {
            v.sort();
            v
        };
        let pre = sorted(enumerate(Kind::Preorder, n).unwrap());
        let eq = sorted(enumerate(Kind::Equivalence, n).unwrap());
        assert_eq!(pre, sorted(brute_preorders(n)), "preorders on {n}");
        assert_eq!(eq, sorted(brute_equivalences(n)), "equivalences on {n}");
    }
    let counts: Vec<usize> = (0..=4).map(|n| brute_preorders(n).len()).collect();
    assert_eq!(counts, [1, 1, 4, 29, 355]);
    let counts: Vec<usize> = (0..=4).map(|n| brute_equivalences(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 5, 15]);
}

#[test]
fn direct_image_can_lose_transitivity() {
    let img = direct_image(&f0112(), &t1()).unwrap();
    let oracle = Relation::from_fn(3, |x, y| {
        t1().pairs().any(|(a, b)| f0112().apply(a) == x && f0112().apply(b) == y)
    });
    assert_eq!(img, oracle);
    assert_eq!(img, refl(3, &[(0, 1), (1, 2)]));
    assert!(!img.is_transitive());
}

#[test]
fn inverse_image_pointwise() {
    let s = refl(3, &[(0, 1), (1, 2)]);
    let f = f0112();
    let got = inverse_image(&f, &s).unwrap();
    let oracle = Relation::from_fn(4, |a, b| s.contains(f.apply(a), f.apply(b)));
    assert_eq!(got, oracle);
    let expected = rel(
        4,
        &[(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (3, 3)],
    );
    assert_eq!(got, expected);
    assert_eq!(got.count(), 10);
}

#[test]
fn square_by_quadruple_scan() {
    let (r, s) = (r1(), s1());
    let mut oracle = Vec::new();
    for u in 0..3 {
        for v in 0..3 {
            for u2 in 0..3 {
                for v2 in 0..3 {
                    if r.contains(u, u2) && r.contains(v, v2) && s.contains(u, v) && s.contains(u2, v2) {
                        oracle.push([u, v, u2, v2]);
                    }
                }
            }
        }
    }
    let got = square(&r, &s).unwrap();
    assert_eq!(got, oracle);
    assert!(got.contains(&[1, 2, 1, 2]));
    assert!(got.contains(&[0, 0, 1, 1]));
}

/// `x (R,S)ₙ z` iff some walk of `n` steps has its `i`-th step in `R` when
/// `i ≡ n (mod 2)` and in `S` otherwise.
fn walk_oracle(r: &Relation, s: &Relation, n: usize) -> Relation {
    let size = r.size();
    let mut reach: Vec<Vec<bool>> = (0..size).map(|x| (0..size).map(|y| x == y).collect()).collect();
    for i in 1..=n {
        let step = if i % 2 == n % 2 { r } else { s };
        reach = reach
            .iter()
            .map(|row| (0..size).map(|z| (0..size).any(|y| row[y] && step.contains(y, z))).collect())
            .collect();
    }
    from_matrix(&reach)
}

#[test]
fn chain_terms_follow_the_step_parity() {
    let (r, s) = (r1(), s1());
    assert_eq!(chain_term(&r, &s, 2).unwrap(), refl(3, &[(0, 1), (1, 2)]));
    assert_eq!(chain_term(&r, &s, 3).unwrap(), refl(3, &[(0, 1), (1, 2), (0, 2)]));
    for n in 0..8 {
        assert_eq!(chain_term(&r, &s, n).unwrap(), walk_oracle(&r, &s, n), "term {n}");
        assert_eq!(chain_term(&s, &r, n).unwrap(), walk_oracle(&s, &r, n), "swapped term {n}");
    }
}

#[test]
fn chains_with_a_unit_side_are_powers() {
    let r = path4();
    let d = Relation::delta(4);
    for n in 0..9 {
        assert_eq!(chain_term(&r, &d, n).unwrap(), r.power(n.div_ceil(2)));
    }
}

#[test]
fn trace_of_the_small_pair() {
    let trace = chain_trace(&r1(), &s1(), default_cutoff(3)).unwrap();
    assert_eq!(trace.stationary_index, Some(3));
    let limit = trace.limit().unwrap();
    assert_eq!(limit.count(), 6);
    assert_eq!(limit, &warshall(&r1().union(&s1())));
}

#[test]
fn sigma_is_reachability() {
    let sup = supremum_sigma(&r1(), &s1()).unwrap();
    assert_eq!(sup, warshall(&r1().union(&s1())));
    assert_eq!(sup, refl(3, &[(0, 1), (1, 2), (0, 2)]));
    let r = path4();
    assert_eq!(supremum_sigma(&r, &r).unwrap(), warshall(&r));
}

#[test]
fn closures_against_warshall_and_union_find() {
    let t = rel(3, &[(0, 1), (1, 2)]);
    assert_eq!(closure(OrderKind::Preorder, &t), warshall(&t));
    assert_eq!(closure(OrderKind::Preorder, &t), refl(3, &[(0, 1), (1, 2), (0, 2)]));
    let t = rel(3, &[(0, 1)]);
    assert_eq!(closure(OrderKind::Equivalence, &t), union_find(&t));
    assert_eq!(closure(OrderKind::Equivalence, &t), refl(3, &[(0, 1), (1, 0)]));
}

#[test]
fn joins_are_least_upper_bounds() {
    let pre = brute_preorders(3);
    let j = join(OrderKind::Preorder, &r1(), &s1()).unwrap();
    assert_eq!(Some(j.clone()), least_upper_bound(&pre, &r1(), &s1()));
    assert_eq!(j, refl(3, &[(0, 1), (1, 2), (0, 2)]));

    let (m2, m3) = (mod_k(6, 2), mod_k(6, 3));
    let j = join(OrderKind::Equivalence, &m2, &m3).unwrap();
    assert_eq!(j, union_find(&m2.union(&m3)));
    assert_eq!(j, Relation::nabla(6));
    assert_eq!(chain_term(&m2, &m3, 2).unwrap(), Relation::nabla(6));
}

#[test]
fn cocartesian_image_is_the_least_preorder_above() {
    let (f, t) = (f0112(), t1());
    let c = cocartesian_image(OrderKind::Preorder, &f, &t).unwrap();
    let candidates: Vec<Relation> = brute_preorders(3)
        .into_iter()
        .filter(|s| t.is_subset(&inverse_image(&f, s).unwrap()))
        .collect();
    let least = candidates.iter().find(|s| candidates.iter().all(|o| s.is_subset(o))).unwrap();
    assert_eq!(&c.image, least);
    assert_eq!(c.image, refl(3, &[(0, 1), (1, 2), (0, 2)]));
    assert_eq!(c.image, warshall(&direct_image(&f, &t).unwrap()));
    assert!(c.certified);
    assert!(!is_cocartesian(OrderKind::Preorder, &f, &t, &Relation::nabla(3)).unwrap());
    assert!(is_cocartesian(OrderKind::Preorder, &f, &t, &c.image).unwrap());
}

#[test]
fn modular_formula_examples() {
    let f = FiniteMap::new(2, vec![0, 0, 1]).unwrap();
    let s = refl(3, &[(0, 1)]);
    let t = Relation::nabla(3);
    assert_eq!(direct_image(&f, &s).unwrap(), Relation::delta(2));
    let k = f.kernel_pair();
    let left = union_find(&k).union(&warshall(&k.union(&s))).intersect(&t);
    let right = warshall(&k.union(&s.intersect(&t)));
    assert_eq!(left == right, modular_formula_check(&f, &s, &t, cocart::Mode::Strict).unwrap());
    assert!(modular_formula_check(&f, &s, &t, cocart::Mode::Strict).unwrap());

    // The four-point partition triple, pushed through a map that merges 0 and 1.
    let f = FiniteMap::new(3, vec![0, 0, 1, 2]).unwrap();
    let s = part(4, &[&[0, 2], &[1, 3]]);
    let t = part(4, &[&[0, 1], &[2, 3]]);
    assert!(matches!(
        modular_formula_check(&f, &s, &t, cocart::Mode::Strict),
        Err(Error::Hypothesis { .. })
    ));
    let k = f.kernel_pair();
    let left = warshall(&k.union(&s)).intersect(&t);
    let right = warshall(&k.union(&s.intersect(&t)));
    assert_ne!(left, right);
    assert!(!modular_formula_check(&f, &s, &t, cocart::Mode::Exploratory).unwrap());
}

#[test]
fn odd_conditions_agree_on_the_small_pair() {
    let r = closure(OrderKind::Preorder, &rel(3, &[(0, 1), (0, 2)]));
    let s = s1();
    let rep = stationarity_conditions(Parity::Odd, &r, &s, 1, cocart::Mode::Strict).unwrap();
    let a: Vec<Relation> = (0..6).map(|n| walk_oracle(&r, &s, n)).collect();
    let b: Vec<Relation> = (0..6).map(|n| walk_oracle(&s, &r, n)).collect();
    let by_hand = [
        a[4] == a[3],
        a[3] == a[4] && a[4] == a[5],
        warshall(&a[3]) == a[3],
        b[4] == a[3],
        b[3].is_subset(&a[3]),
    ];
    let got: Vec<bool> = rep.conditions.iter().map(|c| c.1).collect();
    assert_eq!(got, by_hand);
    assert!(got.iter().all(|&v| v == got[0]));
    assert!(rep.consistent);
}

#[test]
fn permutability_levels() {
    let (m2, m3) = (mod_k(6, 2), mod_k(6, 3));
    let (n, common) = pair_permutability_level(&m2, &m3, 6, cocart::Mode::Strict).unwrap().unwrap();
    assert_eq!(n, 2);
    assert_eq!(common, Relation::nabla(6));

    let r = part(3, &[&[0, 1]]);
    let s = part(3, &[&[1, 2]]);
    let (n, common) = pair_permutability_level(&r, &s, 6, cocart::Mode::Strict).unwrap().unwrap();
    assert_eq!(n, 3);
    assert_eq!(common, Relation::nabla(3));
    assert_eq!(walk_oracle(&r, &s, 3), Relation::nabla(3));
    assert_ne!(walk_oracle(&r, &s, 2), walk_oracle(&s, &r, 2));
}

#[test]
fn finite_sets_are_not_three_permutable() {
    let r = path4();
    assert_ne!(r.power(3), r.power(2));
    assert_eq!(path_compose(&r, &path_compose(&r, &r)), r.power(3));
}

#[test]
fn mixed_condition_with_unit_left() {
    let s = refl(3, &[(0, 1), (1, 2)]);
    let d = Relation::delta(3);
    assert!(!mixed_subpermutability(&d, &s, 2, cocart::Mode::Strict).unwrap());
    assert!(!path_compose(&s, &s).is_subset(&s));
    let r = closure(OrderKind::Preorder, &s);
    let inner = refl(3, &[(0, 1)]);
    assert!(mixed_subpermutability(&r, &inner, 2, cocart::Mode::Strict).unwrap());
}

#[test]
fn closure_powers() {
    let r = refl(2, &[(0, 1)]);
    let (p, props) = closure_power(&r, 3).unwrap();
    assert_eq!(p, r);
    assert!(props.preorder && !props.symmetric);
    for r in relcat::enumerate::enumerate(Kind::Reflexive, 2).unwrap() {
        let sq = path_compose(&r, &r);
        assert!(is_transitive(&matrix(&sq)));
        assert_eq!(closure_power(&r, 3).unwrap().0, sq);
    }
}

#[test]
fn compatibility_on_z4() {
    let z4 = z(4);
    let m2 = part(4, &[&[0, 2], &[1, 3]]);
    let bad = part(4, &[&[0, 1]]);
    assert!(is_compatible(&z4, &m2) && compatible(&z4, &m2));
    assert!(!is_compatible(&z4, &bad) && !compatible(&z4, &bad));
}

#[test]
fn generated_congruences() {
    let z4 = z(4);
    let t = rel(4, &[(0, 2)]);
    let c = congruence_generated(&z4, &t).unwrap();
    assert_eq!(c.relation(), &brute_congruence(&z4, &t));
    assert_eq!(c.relation(), &part(4, &[&[0, 2], &[1, 3]]));
}

#[test]
fn congruence_joins() {
    let z6 = z(6);
    let m2 = Congruence::new(&z6, mod_k(6, 2)).unwrap();
    let m3 = Congruence::new(&z6, mod_k(6, 3)).unwrap();
    let j = congruence_join(&z6, &m2, &m3).unwrap();
    assert_eq!(j.relation(), &union_find(&mod_k(6, 2).union(&mod_k(6, 3))));
    assert_eq!(j.relation(), &Relation::nabla(6));

    let bare = FiniteAlgebra::bare(4);
    let a = Congruence::new(&bare, part(4, &[&[0, 1]])).unwrap();
    let b = Congruence::new(&bare, part(4, &[&[1, 2]])).unwrap();
    let j = congruence_join(&bare, &a, &b).unwrap();
    assert_eq!(j.relation(), &union_find(&part(4, &[&[0, 1]]).union(&part(4, &[&[1, 2]]))));
    assert_eq!(j.relation(), &part(4, &[&[0, 1, 2]]));
}

#[test]
fn congruence_lattices_by_filtering() {
    let z4 = z(4);
    let lat = congruence_lattice(&z4).unwrap();
    let filtered: Vec<Relation> = partitions(4).into_iter().filter(|e| compatible(&z4, e)).collect();
    assert_eq!(lat.len(), filtered.len());
    assert_eq!(lat.elements, vec![Relation::delta(4), part(4, &[&[0, 2], &[1, 3]]), Relation::nabla(4)]);
    assert_eq!(congruence_lattice(&FiniteAlgebra::bare(3)).unwrap().len(), 5);
}

fn brute_modular(a: &FiniteAlgebra) -> bool {
    let cons: Vec<Relation> = partitions(a.size()).into_iter().filter(|e| compatible(a, e)).collect();
    let j = |x: &Relation, y: &Relation| union_find(&x.union(y));
    cons.iter().all(|t| {
        cons.iter()
            .filter(|r| r.is_subset(t))
            .all(|r| cons.iter().all(|s| j(r, s).intersect(t) == j(r, &s.intersect(t))))
    })
}

#[test]
fn modularity_by_triple_scan() {
    assert!(brute_modular(&z(4)));
    assert_eq!(modularity_check(&z(4)).unwrap(), None);
    let bare = FiniteAlgebra::bare(4);
    assert!(!brute_modular(&bare));
    assert!(modularity_check(&bare).unwrap().is_some());

    let r = part(4, &[&[0, 1]]);
    let s = part(4, &[&[0, 2], &[1, 3]]);
    let t = part(4, &[&[0, 1], &[2, 3]]);
    assert!(r.is_subset(&t));
    assert_eq!(union_find(&r.union(&s)).intersect(&t), t);
    assert_eq!(union_find(&r.union(&s.intersect(&t))), r);
}

#[test]
fn shifting_on_small_algebras() {
    assert_eq!(shifting_scan(&z(4)).unwrap().witness, None);
    let scan = shifting_scan(&FiniteAlgebra::bare(4)).unwrap();
    let (t, s, r, q) = scan.witness.unwrap();
    assert_eq!(shifting_principle_check(&FiniteAlgebra::bare(4), &t, &s, &r).unwrap(), Some(q));
    let [x, x2, y, y2] = q;
    assert!(s.contains(x, y) && s.contains(x2, y2) && r.contains(x, x2) && t.contains(y, y2));
    assert!(!t.contains(x, x2));
}

#[test]
fn day_formula_on_z6() {
    let z6 = z(6);
    let m2 = Congruence::new(&z6, mod_k(6, 2)).unwrap();
    let m3 = Congruence::new(&z6, mod_k(6, 3)).unwrap();
    assert!(day_formula_check(&z6, &m2, &m3, &m2).unwrap());
    let left = union_find(&mod_k(6, 2).union(&mod_k(6, 3))).intersect(&mod_k(6, 2));
    assert_eq!(left, mod_k(6, 2));
    let right = words(&mod_k(6, 2), &mod_k(6, 3), 4)
        .iter()
        .fold(Relation::empty(6), |acc, w| acc.union(&w.intersect(&mod_k(6, 2))));
    assert_eq!(right, mod_k(6, 2));
}

#[test]
fn corpus_congruences_match_the_intersection_oracle() {
    for name in ["z2", "z4", "z2xz2", "semilattice2", "semilattice3", "set3", "set4"] {
        let a = named(name).unwrap();
        for t in all_relations(a.size()).iter().step_by(7) {
            assert_eq!(congruence_generated(&a, t).unwrap().relation(), &brute_congruence(&a, t), "{name}");
        }
    }
}
