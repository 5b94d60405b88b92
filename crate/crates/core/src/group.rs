//! Finite permutation groups given by generators.
//!
//! A [`FiniteGroup`] is enumerated completely and keeps its elements in
//! lexicographic order of their image sequences; the identity is therefore
//! always element 0. A [`Subgroup`] is a subset of a parent group's element
//! indices that is closed under the group law.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::bitset::BitSet;
use crate::error::Error;
use crate::perm::Permutation;

/// Default bound on the order of enumerated groups (covers `S_7`).
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// A group of permutations of `{0, …, degree-1}`, fully enumerated.
#[derive(Clone)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    inverses: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl FiniteGroup {
    /// `⟨generators⟩` with the default order cap.
    pub fn enumerate(degree: usize, generators: Vec<Permutation>) -> Result<Self, Error> {
        FiniteGroup::enumerate_with_cap(degree, generators, DEFAULT_ORDER_CAP)
    }

    pub fn enumerate_with_cap(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self, Error> {
        if degree == 0 {
            return Err(Error::EmptyDegree);
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
        }
        let identity = Permutation::identity(degree);
        let mut seen = BTreeSet::new();
        seen.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = &x * g;
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let elements: Vec<Permutation> = seen.into_iter().collect();
        let inverses =
            elements.iter().map(|e| elements.binary_search(&e.inverse()).expect("closed under inverses")).collect();
        Ok(FiniteGroup { degree, generators, elements, inverses })
    }

    pub fn trivial(degree: usize) -> Result<Self, Error> {
        FiniteGroup::enumerate(degree, Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements in canonical (lexicographic) order.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &Permutation {
        &self.elements[index]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        if p.degree() != self.degree {
            return None;
        }
        self.elements.binary_search(p).ok()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index_of(p).is_some()
    }

    #[inline]
    pub fn inverse_index(&self, i: usize) -> usize {
        self.inverses[i]
    }

    /// Index of `elements[i] ∘ elements[j]` without allocating.
    #[inline]
    pub fn product_index(&self, i: usize, j: usize) -> usize {
        let a = self.elements[i].images();
        let b = self.elements[j].images();
        self.elements
            .binary_search_by(|e| {
                for (k, &x) in e.images().iter().enumerate() {
                    match x.cmp(&a[b[k]]) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            })
            .expect("group is closed under composition")
    }

    /// Index of `g ∘ x ∘ g⁻¹`.
    #[inline]
    pub fn conjugate_index(&self, x: usize, g: usize) -> usize {
        self.product_index(self.product_index(g, x), self.inverses[g])
    }

    fn generator_indices(&self) -> Vec<usize> {
        self.generators.iter().map(|g| self.index_of(g).expect("generator is an element")).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generator_indices();
        gens.iter().all(|&a| gens.iter().all(|&b| self.product_index(a, b) == self.product_index(b, a)))
    }

    /// The whole group as a subgroup of itself.
    pub fn as_subgroup(&self) -> Subgroup<'_> {
        let mut mask = BitSet::new(self.order());
        for i in 0..self.order() {
            mask.insert(i);
        }
        Subgroup { parent: self, mask, members: (0..self.order()).collect(), generators: self.generator_indices() }
    }

    pub fn trivial_subgroup(&self) -> Subgroup<'_> {
        Closure::new(self).finish()
    }

    /// `⟨gens⟩` inside this group; every generator must be an element.
    pub fn subgroup_generated<'a, I>(&self, gens: I) -> Result<Subgroup<'_>, Error>
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let mut closure = Closure::new(self);
        for g in gens {
            closure.adjoin(self.index_of(g).ok_or(Error::NotAMember)?);
        }
        Ok(closure.finish())
    }

    pub fn subgroup_generated_by_indices<I: IntoIterator<Item = usize>>(&self, gens: I) -> Subgroup<'_> {
        let mut closure = Closure::new(self);
        for g in gens {
            closure.adjoin(g);
        }
        closure.finish()
    }

    /// The subgroup of elements satisfying `keep`. The caller guarantees the
    /// selected set is closed; a generating set is computed from it.
    pub fn subgroup_where<F: FnMut(usize) -> bool>(&self, mut keep: F) -> Subgroup<'_> {
        let members: Vec<usize> = (0..self.order()).filter(|&i| keep(i)).collect();
        Subgroup::from_members(self, members)
    }

    pub fn derived_subgroup(&self) -> Subgroup<'_> {
        self.as_subgroup().derived_subgroup()
    }

    pub fn derived_series(&self) -> Vec<Subgroup<'_>> {
        self.as_subgroup().derived_series()
    }

    pub fn is_solvable(&self) -> bool {
        self.as_subgroup().is_solvable()
    }

    /// Conjugacy classes ordered by representative, the smallest element of
    /// each class.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let gens = self.generator_indices();
        let mut class_of = vec![usize::MAX; self.order()];
        let mut classes = Vec::new();
        for start in 0..self.order() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[start] = id;
            let mut members = vec![start];
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                for &g in &gens {
                    let y = self.conjugate_index(x, g);
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        members.push(y);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            classes.push(ConjugacyClass { members });
        }
        classes
    }

    pub fn centralizer(&self, g: &Permutation) -> Result<Subgroup<'_>, Error> {
        let gi = self.index_of(g).ok_or(Error::NotAMember)?;
        Ok(self.subgroup_where(|h| self.product_index(h, gi) == self.product_index(gi, h)))
    }

    pub fn center(&self) -> Subgroup<'_> {
        let gens = self.generator_indices();
        self.subgroup_where(|h| gens.iter().all(|&g| self.product_index(h, g) == self.product_index(g, h)))
    }

    /// Every normal subgroup, sorted by order and then by elements.
    ///
    /// Each normal subgroup is generated by the conjugacy classes it
    /// contains, so the list is the closure of the normal closures of single
    /// classes under joins.
    pub fn normal_subgroups(&self) -> Vec<Subgroup<'_>> {
        let mut found: Vec<Subgroup<'_>> = vec![self.trivial_subgroup()];
        let mut seen: BTreeSet<BitSet> = BTreeSet::new();
        seen.insert(found[0].mask.clone());
        for class in self.conjugacy_classes().iter().skip(1) {
            let n = self.subgroup_generated_by_indices(class.members.iter().copied());
            if seen.insert(n.mask.clone()) {
                found.push(n);
            }
        }
        let mut i = 0;
        while i < found.len() {
            for j in 0..i {
                let joined = found[i].join(&found[j]);
                if seen.insert(joined.mask.clone()) {
                    found.push(joined);
                }
            }
            i += 1;
        }
        found.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
        found
    }

    /// Nontrivial with exactly two normal subgroups.
    pub fn is_simple(&self) -> bool {
        self.order() > 1 && self.normal_subgroups().len() == 2
    }

    /// `H ≠ G` and `⟨H, g⟩ = G` for every `g ∉ H`.
    pub fn is_maximal(&self, h: &Subgroup<'_>) -> Result<bool, Error> {
        if !core::ptr::eq(h.parent, self) {
            return Err(Error::ForeignSubgroup);
        }
        Ok(h.order() < self.order() && self.intermediate_subgroup(h)?.is_none())
    }

    /// The smallest `⟨H, g⟩` with `H < ⟨H, g⟩ < G`, if one exists.
    pub fn intermediate_subgroup<'g>(&'g self, h: &Subgroup<'g>) -> Result<Option<Subgroup<'g>>, Error> {
        if !core::ptr::eq(h.parent, self) {
            return Err(Error::ForeignSubgroup);
        }
        let mut best: Option<Subgroup<'g>> = None;
        for g in h.left_coset_representatives().into_iter().skip(1) {
            let k = h.adjoin(g);
            if k.order() < self.order() && best.as_ref().is_none_or(|b| k.order() < b.order()) {
                best = Some(k);
            }
        }
        Ok(best)
    }

    /// All Sylow `p`-subgroups, sorted by elements.
    ///
    /// One Sylow subgroup is grown from the trivial group by repeatedly
    /// adjoining a `p`-element of the normalizer; the rest are its conjugates.
    pub fn sylow_subgroups(&self, p: u64) -> Result<Vec<Subgroup<'_>>, Error> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let target = sylow_order(self.order() as u64, p) as usize;
        let mut sylow = self.trivial_subgroup();
        while sylow.order() < target {
            let normalizer = sylow.normalizer();
            let g = normalizer
                .members()
                .iter()
                .copied()
                .find(|&g| !sylow.contains_index(g) && is_power_of(self.elements[g].order(), p))
                .expect("a proper p-subgroup has a p-element in its normalizer outside it");
            sylow = sylow.adjoin(g);
        }
        let gens = self.generator_indices();
        let mut seen = BTreeSet::new();
        seen.insert(sylow.mask.clone());
        let mut out = vec![sylow];
        let mut i = 0;
        while i < out.len() {
            for &g in &gens {
                let c = out[i].conjugate_by_index(g);
                if seen.insert(c.mask.clone()) {
                    out.push(c);
                }
            }
            i += 1;
        }
        out.sort_by(|a, b| a.members.cmp(&b.members));
        Ok(out)
    }
}

/// Largest power of `p` dividing `order`.
pub fn sylow_order(mut order: u64, p: u64) -> u64 {
    let mut q = 1;
    while order.is_multiple_of(p) {
        order /= p;
        q *= p;
    }
    q
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub(crate) fn is_power_of(mut x: u64, p: u64) -> bool {
    while x.is_multiple_of(p) {
        x /= p;
    }
    x == 1
}

/// A conjugacy class as sorted element indices of its group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn representative(&self) -> usize {
        self.members[0]
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Incremental closure under right multiplication by generators.
struct Closure<'g> {
    group: &'g FiniteGroup,
    mask: BitSet,
    members: Vec<usize>,
    generators: Vec<usize>,
}

impl<'g> Closure<'g> {
    fn new(group: &'g FiniteGroup) -> Self {
        let mut mask = BitSet::new(group.order());
        mask.insert(0);
        Closure { group, mask, members: vec![0], generators: Vec::new() }
    }

    fn from_subgroup(h: &Subgroup<'g>) -> Self {
        Closure { group: h.parent, mask: h.mask.clone(), members: h.members.clone(), generators: h.generators.clone() }
    }

    /// Adds `s` as a generator unless it is already in the closure.
    fn adjoin(&mut self, s: usize) -> bool {
        if self.mask.contains(s) {
            return false;
        }
        self.generators.push(s);
        let mut frontier = Vec::new();
        for &x in &self.members {
            let y = self.group.product_index(x, s);
            if self.mask.insert(y) {
                frontier.push(y);
            }
        }
        while let Some(y) = frontier.pop() {
            self.members.push(y);
            for &g in &self.generators {
                let z = self.group.product_index(y, g);
                if self.mask.insert(z) {
                    frontier.push(z);
                }
            }
        }
        true
    }

    fn finish(mut self) -> Subgroup<'g> {
        self.members.sort_unstable();
        Subgroup { parent: self.group, mask: self.mask, members: self.members, generators: self.generators }
    }
}

/// A subgroup of a [`FiniteGroup`], stored as element indices of the parent.
#[derive(Clone)]
pub struct Subgroup<'g> {
    parent: &'g FiniteGroup,
    mask: BitSet,
    members: Vec<usize>,
    generators: Vec<usize>,
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        core::ptr::eq(self.parent, other.parent) && self.members == other.members
    }
}

impl Eq for Subgroup<'_> {}

impl fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.order())
            .field("generators", &self.generators().collect::<Vec<_>>())
            .finish()
    }
}

impl<'g> Subgroup<'g> {
    /// Builds a subgroup from a closed, sorted set of member indices.
    fn from_members(parent: &'g FiniteGroup, members: Vec<usize>) -> Self {
        let mut closure = Closure::new(parent);
        for &m in &members {
            closure.adjoin(m);
        }
        debug_assert_eq!(closure.members.len(), members.len(), "member set is not closed");
        closure.finish()
    }

    pub fn parent(&self) -> &'g FiniteGroup {
        self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.order()
    }

    /// Sorted element indices in the parent.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn elements(&self) -> impl Iterator<Item = &'g Permutation> + '_ {
        self.members.iter().map(|&i| self.parent.element(i))
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn generators(&self) -> impl Iterator<Item = &'g Permutation> + '_ {
        self.generators.iter().map(|&i| self.parent.element(i))
    }

    #[inline]
    pub fn contains_index(&self, i: usize) -> bool {
        self.mask.contains(i)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.parent.index_of(p).is_some_and(|i| self.mask.contains(i))
    }

    pub fn is_subgroup_of(&self, other: &Subgroup<'g>) -> bool {
        core::ptr::eq(self.parent, other.parent) && self.mask.is_subset(&other.mask)
    }

    /// Normal in the parent: every generator of the parent conjugates every
    /// element back into the subgroup.
    pub fn is_normal(&self) -> bool {
        let gens = self.parent.generator_indices();
        self.members.iter().all(|&x| gens.iter().all(|&g| self.mask.contains(self.parent.conjugate_index(x, g))))
    }

    pub fn is_abelian(&self) -> bool {
        let p = self.parent;
        self.generators.iter().all(|&a| self.generators.iter().all(|&b| p.product_index(a, b) == p.product_index(b, a)))
    }

    /// `⟨self, g⟩`.
    pub fn adjoin(&self, g: usize) -> Subgroup<'g> {
        let mut c = Closure::from_subgroup(self);
        c.adjoin(g);
        c.finish()
    }

    /// `⟨self ∪ other⟩`.
    pub fn join(&self, other: &Subgroup<'g>) -> Subgroup<'g> {
        let mut c = Closure::from_subgroup(self);
        for &g in &other.generators {
            c.adjoin(g);
        }
        c.finish()
    }

    pub fn intersection(&self, other: &Subgroup<'g>) -> Subgroup<'g> {
        let members = self.members.iter().copied().filter(|&i| other.mask.contains(i)).collect();
        Subgroup::from_members(self.parent, members)
    }

    /// `g H g⁻¹` for the parent element with index `g`.
    pub fn conjugate_by_index(&self, g: usize) -> Subgroup<'g> {
        let p = self.parent;
        let mut members: Vec<usize> = self.members.iter().map(|&x| p.conjugate_index(x, g)).collect();
        members.sort_unstable();
        let mut mask = BitSet::new(p.order());
        for &m in &members {
            mask.insert(m);
        }
        let generators = self.generators.iter().map(|&x| p.conjugate_index(x, g)).collect();
        Subgroup { parent: p, mask, members, generators }
    }

    pub fn conjugate_by(&self, g: &Permutation) -> Result<Subgroup<'g>, Error> {
        let gi = self.parent.index_of(g).ok_or(Error::NotAMember)?;
        Ok(self.conjugate_by_index(gi))
    }

    /// Normalizer in the parent group.
    pub fn normalizer(&self) -> Subgroup<'g> {
        let p = self.parent;
        p.subgroup_where(|g| self.generators.iter().all(|&x| self.mask.contains(p.conjugate_index(x, g))))
    }

    /// One representative of each left coset `gH`, the smallest index in
    /// each; the first is the identity.
    pub fn left_coset_representatives(&self) -> Vec<usize> {
        let p = self.parent;
        let mut covered = BitSet::new(p.order());
        let mut reps = Vec::new();
        for g in 0..p.order() {
            if covered.contains(g) {
                continue;
            }
            reps.push(g);
            for &h in &self.members {
                covered.insert(p.product_index(g, h));
            }
        }
        reps
    }

    /// Subgroup generated by the commutators of its elements. Computed as
    /// the normal closure of the generator commutators.
    pub fn derived_subgroup(&self) -> Subgroup<'g> {
        let p = self.parent;
        let mut c = Closure::new(p);
        for &a in &self.generators {
            for &b in &self.generators {
                let ab = p.product_index(a, b);
                let ba = p.product_index(b, a);
                c.adjoin(p.product_index(ab, p.inverse_index(ba)));
            }
        }
        // Close under conjugation by the subgroup's generators.
        loop {
            let mut grew = false;
            let current: Vec<usize> = c.generators.clone();
            for &x in &current {
                for &g in &self.generators {
                    grew |= c.adjoin(p.conjugate_index(x, g));
                }
            }
            if !grew {
                break;
            }
        }
        c.finish()
    }

    /// `H, D(H), D(D(H)), …` up to the first repeated term (included once).
    pub fn derived_series(&self) -> Vec<Subgroup<'g>> {
        let mut series = vec![self.clone()];
        loop {
            let next = series.last().expect("nonempty").derived_subgroup();
            if next.order() == series.last().expect("nonempty").order() {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().expect("nonempty").is_trivial()
    }

    /// Re-enumerates the subgroup as a standalone group.
    pub fn to_group(&self) -> FiniteGroup {
        let generators: Vec<Permutation> = self.generators().cloned().collect();
        let elements: Vec<Permutation> = self.elements().cloned().collect();
        let inverses =
            elements.iter().map(|e| elements.binary_search(&e.inverse()).expect("closed under inverses")).collect();
        FiniteGroup { degree: self.parent.degree, generators, elements, inverses }
    }
}
