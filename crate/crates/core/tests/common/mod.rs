//! Brute-force oracles shared by the integration tests. None of these reuse
//! the production algorithms they are compared against.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use permgrp::{Action, FiniteGroup, Permutation};
use rand::seq::SliceRandom;
use rand::Rng;

/// Element sets as sorted lists of permutations.
pub type ElementSet = Vec<Permutation>;

/// Closure of a set of permutations under composition, by repeated squaring
/// of the set (no generator bookkeeping).
pub fn closure(degree: usize, seed: &[Permutation]) -> BTreeSet<Permutation> {
    let mut set: BTreeSet<Permutation> = seed.iter().cloned().collect();
    set.insert(Permutation::identity(degree));
    loop {
        let current: Vec<Permutation> = set.iter().cloned().collect();
        let before = set.len();
        for a in &current {
            for b in &current {
                set.insert(a * b);
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

/// Closure by breadth-first products with the seed, abandoned once it
/// outgrows `limit`.
pub fn bounded_closure(degree: usize, seed: &[Permutation], limit: usize) -> Option<BTreeSet<Permutation>> {
    let mut set = BTreeSet::new();
    let mut queue = vec![Permutation::identity(degree)];
    set.insert(queue[0].clone());
    while let Some(x) = queue.pop() {
        for s in seed {
            let y = &x * s;
            if set.insert(y.clone()) {
                if set.len() > limit {
                    return None;
                }
                queue.push(y);
            }
        }
    }
    Some(set)
}

/// Is the set closed under composition (hence a subgroup, being finite)?
pub fn is_closed(set: &BTreeSet<Permutation>) -> bool {
    set.iter().all(|a| set.iter().all(|b| set.contains(&(a * b))))
}

/// Conjugacy classes by direct conjugation with every element.
pub fn classes_by_brute_force(g: &FiniteGroup) -> Vec<BTreeSet<Permutation>> {
    let mut done = BTreeSet::new();
    let mut out = Vec::new();
    for x in g.elements() {
        if done.contains(x) {
            continue;
        }
        let class: BTreeSet<Permutation> = g.elements().iter().map(|h| x.conjugate_by(h)).collect();
        done.extend(class.iter().cloned());
        out.push(class);
    }
    out
}

/// Normal subgroups as the unions of conjugacy classes (identity class
/// included) that are closed under composition. Lagrange prunes first.
pub fn normal_subgroups_by_class_unions(g: &FiniteGroup) -> BTreeSet<ElementSet> {
    let classes = classes_by_brute_force(g);
    let (identity, rest): (Vec<_>, Vec<_>) = classes.into_iter().partition(|c| c.iter().next().unwrap().is_identity());
    let mut out = BTreeSet::new();
    for mask in 0u64..(1 << rest.len()) {
        let size: usize = 1 + (0..rest.len()).filter(|i| mask >> i & 1 == 1).map(|i| rest[i].len()).sum::<usize>();
        if !g.order().is_multiple_of(size) {
            continue;
        }
        let mut union = identity[0].clone();
        for (i, c) in rest.iter().enumerate() {
            if mask >> i & 1 == 1 {
                union.extend(c.iter().cloned());
            }
        }
        // The identity class and the whole group are subgroups outright.
        let full = mask == (1 << rest.len()) - 1;
        if mask == 0 || full || is_closed(&union) {
            out.insert(union.into_iter().collect());
        }
    }
    out
}

/// Subgroup generated by all commutators of all pairs of elements.
pub fn derived_by_brute_force(g: &FiniteGroup) -> BTreeSet<Permutation> {
    let comms: BTreeSet<Permutation> =
        g.elements().iter().flat_map(|a| g.elements().iter().map(move |b| a.commutator(b))).collect();
    closure(g.degree(), &comms.into_iter().collect::<Vec<_>>())
}

/// Every subgroup of a given order, by breadth-first growth through all
/// subgroups generated by elements whose order divides the target.
pub fn subgroups_of_order(g: &FiniteGroup, order: usize) -> BTreeSet<ElementSet> {
    let candidates: Vec<&Permutation> =
        g.elements().iter().filter(|e| order.is_multiple_of(e.order() as usize)).collect();
    let mut layer: BTreeSet<ElementSet> = BTreeSet::new();
    layer.insert(vec![Permutation::identity(g.degree())]);
    let mut all = layer.clone();
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for h in &layer {
            for &c in &candidates {
                if h.binary_search(c).is_ok() {
                    continue;
                }
                let mut seed = h.clone();
                seed.push(c.clone());
                let Some(k) = bounded_closure(g.degree(), &seed, order) else { continue };
                let k: ElementSet = k.into_iter().collect();
                if order.is_multiple_of(k.len()) && all.insert(k.clone()) {
                    next.insert(k);
                }
            }
        }
        layer = next;
    }
    all.into_iter().filter(|h| h.len() == order).collect()
}

/// Blocks containing `a`, by scanning all subsets of points that contain it.
pub fn blocks_by_subset_scan(action: &Action, a: usize) -> Vec<Vec<usize>> {
    let m = action.points();
    assert!(m <= 16, "subset scan is exponential");
    let others: Vec<usize> = (0..m).filter(|&x| x != a).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << others.len()) {
        let mut b = vec![a];
        b.extend((0..others.len()).filter(|i| mask >> i & 1 == 1).map(|i| others[i]));
        b.sort_unstable();
        if is_block_by_definition(action, &b) {
            out.push(b);
        }
    }
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    out
}

/// Translates of `b` under every element are pairwise equal or disjoint.
pub fn is_block_by_definition(action: &Action, b: &[usize]) -> bool {
    let translates: BTreeSet<BTreeSet<usize>> =
        action.group().elements().iter().map(|g| b.iter().map(|&x| action.apply(g, x)).collect()).collect();
    translates.iter().all(|s| translates.iter().all(|t| s == t || s.is_disjoint(t)))
}

/// Subgroups containing `h` as unions of left cosets of `h`.
pub fn overgroups_by_coset_unions(g: &FiniteGroup, h: &BTreeSet<Permutation>) -> BTreeSet<ElementSet> {
    let mut cosets: Vec<BTreeSet<Permutation>> = Vec::new();
    let mut covered = BTreeSet::new();
    for x in g.elements() {
        if covered.contains(x) {
            continue;
        }
        let c: BTreeSet<Permutation> = h.iter().map(|y| x * y).collect();
        covered.extend(c.iter().cloned());
        cosets.push(c);
    }
    let trivial = cosets.iter().position(|c| c.contains(&Permutation::identity(g.degree()))).unwrap();
    let rest: Vec<&BTreeSet<Permutation>> =
        cosets.iter().enumerate().filter(|(i, _)| *i != trivial).map(|(_, c)| c).collect();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1 << rest.len()) {
        let count = 1 + mask.count_ones() as usize;
        if !cosets.len().is_multiple_of(count) {
            continue;
        }
        let mut union = cosets[trivial].clone();
        for (i, c) in rest.iter().enumerate() {
            if mask >> i & 1 == 1 {
                union.extend(c.iter().cloned());
            }
        }
        if is_closed(&union) {
            out.insert(union.into_iter().collect());
        }
    }
    out
}

/// The number of permutations of `0..n` with each display cycle type,
/// counted by walking all `n!` image sequences.
pub fn census_by_heap(n: usize) -> BTreeMap<Vec<usize>, u64> {
    let mut out = BTreeMap::new();
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    let mut record = |a: &[usize]| {
        let p = Permutation::from_images(a.to_vec()).unwrap();
        *out.entry(p.cycle_type().display_parts()).or_insert(0) += 1;
    };
    record(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            record(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

/// A deterministic corpus of small actions: random groups of degree 3..=6
/// on points or on `k`-subsets.
pub fn random_actions(seed: u64, count: usize) -> Vec<Action> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(3..=6);
        let gens: Vec<Permutation> = (0..rng.gen_range(1..=3)).map(|_| random_permutation(&mut rng, n)).collect();
        let g = FiniteGroup::enumerate(n, gens).unwrap();
        let k = rng.gen_range(0..=n / 2);
        let action = if k <= 1 { Action::natural(g) } else { Action::on_subsets(g, k).unwrap() };
        out.push(action);
    }
    out
}
