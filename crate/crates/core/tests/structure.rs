mod common;

use std::collections::BTreeSet;

use common::*;
use permgrp::alternating::{
    alternating_group, centralizer_order, count_cycle_type, cycle_type_census, family_structure, symmetric_group,
    verify_generation, verify_prop_maximal, Family,
};
use permgrp::group::is_prime;
use permgrp::{Action, EquivariantMap, FiniteGroup, PartitionOfN, Permutation, Subgroup};

fn members(h: &Subgroup<'_>) -> Vec<Permutation> {
    h.elements().cloned().collect()
}

fn small_groups() -> Vec<FiniteGroup> {
    let mut out: Vec<FiniteGroup> = random_actions(21, 30).into_iter().map(|a| a.group().clone()).collect();
    for n in 1..=5 {
        out.push(symmetric_group(n).unwrap());
        out.push(alternating_group(n).unwrap());
    }
    out
}

#[test]
fn lagrange_and_class_equation() {
    for g in small_groups() {
        let classes = g.conjugacy_classes();
        let total: usize = classes.iter().map(|c| c.len()).sum();
        assert_eq!(total, g.order());
        for c in &classes {
            let x = g.element(c.representative()).clone();
            let z = g.centralizer(&x).unwrap();
            assert_eq!(c.len() * z.order(), g.order());
        }
        let oracle = classes_by_brute_force(&g);
        assert_eq!(oracle.len(), classes.len());
        for h in g.normal_subgroups() {
            assert_eq!(g.order() % h.order(), 0);
            assert_eq!(h.left_coset_representatives().len(), h.index());
        }
    }
}

#[test]
fn normal_subgroups_match_class_unions() {
    let mut groups = small_groups();
    groups.push(alternating_group(6).unwrap());
    groups.push(symmetric_group(6).unwrap());
    for g in groups {
        let found: BTreeSet<Vec<Permutation>> = g.normal_subgroups().iter().map(members).collect();
        assert_eq!(found, normal_subgroups_by_class_unions(&g), "order {}", g.order());
        let derived = members(&g.derived_subgroup());
        assert!(found.contains(&derived));
        let oracle: Vec<Permutation> = derived_by_brute_force(&g).into_iter().collect();
        assert_eq!(derived, oracle);
        for h in g.normal_subgroups() {
            assert!(g.elements().iter().all(|x| h.elements().all(|y| h.contains(&y.conjugate_by(x)))));
        }
    }
}

#[test]
fn alternating_seven_normals() {
    let g = alternating_group(7).unwrap();
    let orders: Vec<usize> = g.normal_subgroups().iter().map(Subgroup::order).collect();
    assert_eq!(orders, vec![1, 2520]);
}

#[test]
fn sylow_subgroups_conjugate_and_counted() {
    let mut groups = small_groups();
    groups.push(alternating_group(6).unwrap());
    for g in groups {
        let order = g.order() as u64;
        for p in (2..=order).filter(|&p| is_prime(p) && order.is_multiple_of(p)) {
            let sylows = g.sylow_subgroups(p).unwrap();
            assert_eq!(sylows.len() as u64 % p, 1);
            let first = &sylows[0];
            assert!(sylows.iter().all(|s| g.elements().iter().any(|x| first.conjugate_by(x).unwrap() == *s)));
            if g.order() <= 360 {
                let oracle = subgroups_of_order(&g, first.order());
                let found: BTreeSet<Vec<Permutation>> = sylows.iter().map(members).collect();
                assert_eq!(found, oracle, "p = {p}, |G| = {}", g.order());
            }
        }
    }
}

#[test]
fn minimal_block_is_minimal() {
    for action in random_actions(31, 40) {
        if !action.is_pretransitive() || action.points() > 12 {
            continue;
        }
        let scan = blocks_by_subset_scan(&action, 0);
        for y in 1..action.points() {
            let b = action.minimal_block(&[0, y]).unwrap();
            assert!(is_block_by_definition(&action, b.points()));
            let smallest = scan.iter().filter(|c| c.contains(&y)).min_by_key(|c| c.len()).unwrap();
            assert_eq!(b.points(), smallest.as_slice());
        }
        let found: Vec<Vec<usize>> = action.blocks_containing(0).unwrap().iter().map(|b| b.points().to_vec()).collect();
        let mut sorted = found.clone();
        sorted.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
        assert_eq!(sorted, scan);
        assert_eq!(action.is_primitive(), scan.len() == 2 || action.points() <= 1);
    }
}

#[test]
fn blocks_correspond_to_overgroups() {
    for action in random_actions(41, 40) {
        if !action.is_pretransitive() || action.points() > 12 {
            continue;
        }
        let corr = action.block_stabilizer_equiv(0).unwrap();
        assert!(corr.is_bijection());
        assert!(corr.preserves_order());
        let stab: BTreeSet<Permutation> = action.stabilizer(0).unwrap().elements().cloned().collect();
        let oracle = overgroups_by_coset_unions(action.group(), &stab);
        let found: BTreeSet<Vec<Permutation>> =
            action.overgroups_of_stabilizer(0).unwrap().iter().map(members).collect();
        assert_eq!(found, oracle);
    }
}

#[test]
fn families_are_covariant_and_commutative() {
    for n in 3..=6 {
        for family in [Family::Transposition, Family::ThreeCycle, Family::Klein] {
            let k = family.subset_size();
            if k > n {
                continue;
            }
            let action = Action::on_subsets(family.ambient_group(n).unwrap(), k).unwrap();
            let structure = family_structure(&action, family).unwrap();
            let report = structure.check_structure();
            assert!(report.all_commutative());
            assert!(report.covariant, "n = {n}, {family:?}");
            // Orbit-constancy: the family member size is constant on orbits.
            for orbit in action.orbits() {
                let size = structure.subgroup(orbit[0]).order();
                assert!(orbit.iter().all(|&x| structure.subgroup(x).order() == size));
            }
            if n >= 5 {
                assert!(verify_generation(n, family).unwrap());
            }
        }
    }
}

#[test]
fn complement_is_equivariant() {
    for n in 2..=7 {
        let g = alternating_group(n).unwrap();
        for k in 1..n {
            if n == 7 && k != 3 {
                continue;
            }
            let a = Action::on_subsets(g.clone(), k).unwrap();
            let b = Action::on_subsets(g.clone(), n - k).unwrap();
            let map = EquivariantMap::complement(&a, &b).unwrap();
            assert!(map.check_equivariant());
            assert!(map.is_isomorphism());
            assert!(map.transfer_report().is_consistent());
        }
    }
}

#[test]
fn census_matches_enumeration() {
    for n in 1..=6usize {
        let census = census_by_heap(n);
        let counted = cycle_type_census(&symmetric_group(n).unwrap());
        assert_eq!(counted.values().sum::<u64>(), factorial(n as u64));
        for p in PartitionOfN::all(n) {
            let count = count_cycle_type(n, &p).unwrap();
            assert_eq!(count * centralizer_order(&p).unwrap(), factorial(n as u64));
            let parts = p.cycle_type().display_parts();
            assert_eq!(census.get(&parts).copied().unwrap_or(0), count, "n = {n}, {p}");
        }
    }
}

#[test]
fn symmetric_six_on_triples_has_an_intermediate_subgroup() {
    let rec = verify_prop_maximal(6, 3).unwrap();
    assert!(!rec.hypothesis_holds);
    let route = &rec.symmetric;
    assert!(!route.primitive);
    assert!(!route.stabilizer_maximal);
    let mid = route.intermediate_order.unwrap();
    assert!(route.stabilizer_order < mid && mid < route.group_order);
    let block = route.witness_block.as_ref().unwrap();
    assert_eq!(block.len(), 2);
    assert!(rec.routes_agree());
}
