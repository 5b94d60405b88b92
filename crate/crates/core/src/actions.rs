//! Actions of permutation groups on finite point sets.
//!
//! Two concrete actions are supported: the natural action on `{0..n}` and
//! the induced action on `k`-subsets, whose points are numbered by colex
//! rank (see [`crate::subsets`]). For every group element the induced
//! permutation of the points is precomputed, so `apply` is a table lookup.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use crate::bitset::BitSet;
use crate::error::Error;
use crate::group::{FiniteGroup, Subgroup};
use crate::perm::Permutation;
use crate::subsets;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionKind {
    Natural,
    Subsets { k: usize },
}

/// A group acting on `0..points()`.
#[derive(Clone, Debug)]
pub struct Action {
    group: FiniteGroup,
    kind: ActionKind,
    /// Subset masks by rank; empty for the natural action.
    subsets: Vec<u64>,
    /// `induced[g][x]` is `g · x` for group element index `g`.
    induced: Vec<Vec<usize>>,
}

impl Action {
    pub fn natural(group: FiniteGroup) -> Self {
        let induced = group.elements().iter().map(|g| g.images().to_vec()).collect();
        Action { group, kind: ActionKind::Natural, subsets: Vec::new(), induced }
    }

    /// The action on `k`-element subsets of `{0..n}`.
    pub fn on_subsets(group: FiniteGroup, k: usize) -> Result<Self, Error> {
        let n = group.degree();
        if k > n {
            return Err(Error::SubsetSizeOutOfRange { n, k });
        }
        if n > subsets::MAX_POINTS {
            return Err(Error::Unsupported("subset actions need degree at most 64"));
        }
        let subs = subsets::all(n, k);
        let induced =
            group.elements().iter().map(|g| subs.iter().map(|&s| subsets::rank(map_subset(g, s))).collect()).collect();
        Ok(Action { group, kind: ActionKind::Subsets { k }, subsets: subs, induced })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn kind(&self) -> ActionKind {
        self.kind
    }

    pub fn points(&self) -> usize {
        match self.kind {
            ActionKind::Natural => self.group.degree(),
            ActionKind::Subsets { .. } => self.subsets.len(),
        }
    }

    /// `natural(n)` or `subsets(n,k)`.
    pub fn descriptor(&self) -> String {
        let n = self.group.degree();
        match self.kind {
            ActionKind::Natural => alloc::format!("natural({n})"),
            ActionKind::Subsets { k } => alloc::format!("subsets({n},{k})"),
        }
    }

    /// The subset behind point `x` of a subset action.
    pub fn subset(&self, x: usize) -> Option<u64> {
        self.subsets.get(x).copied()
    }

    /// Point index of a subset given by 0-based elements.
    pub fn point_of_subset(&self, elements: &[usize]) -> Result<usize, Error> {
        let ActionKind::Subsets { k } = self.kind else {
            return Err(Error::Unsupported("not a subset action"));
        };
        let n = self.group.degree();
        let mask = subsets::from_elements(elements);
        if let Some(&p) = elements.iter().find(|&&p| p >= n) {
            return Err(Error::PointOutOfRange { point: p, points: n });
        }
        if mask.count_ones() as usize != elements.len() || elements.len() != k {
            return Err(Error::SubsetSizeOutOfRange { n, k: elements.len() });
        }
        Ok(subsets::rank(mask))
    }

    /// `g · x` for an arbitrary permutation of the right degree.
    pub fn apply(&self, g: &Permutation, x: usize) -> usize {
        match self.kind {
            ActionKind::Natural => g.apply(x),
            ActionKind::Subsets { .. } => subsets::rank(map_subset(g, self.subsets[x])),
        }
    }

    /// `g · x` for the group element with index `g`.
    #[inline]
    pub fn apply_index(&self, g: usize, x: usize) -> usize {
        self.induced[g][x]
    }

    /// The permutation of the points induced by element `g`.
    pub fn induced_permutation(&self, g: usize) -> Permutation {
        Permutation::from_images(self.induced[g].clone()).expect("induced map is a bijection")
    }

    fn generator_indices(&self) -> Vec<usize> {
        self.group.generators().iter().map(|g| self.group.index_of(g).expect("generator is an element")).collect()
    }

    fn check_point(&self, x: usize) -> Result<(), Error> {
        if x >= self.points() {
            return Err(Error::PointOutOfRange { point: x, points: self.points() });
        }
        Ok(())
    }

    /// Orbit of `x`, sorted.
    pub fn orbit(&self, x: usize) -> Result<Vec<usize>, Error> {
        self.check_point(x)?;
        Ok(self.orbit_under(&self.generator_indices(), x))
    }

    fn orbit_under(&self, gens: &[usize], x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.points()];
        seen[x] = true;
        let mut orbit = vec![x];
        let mut i = 0;
        while i < orbit.len() {
            let y = orbit[i];
            for &g in gens {
                let z = self.induced[g][y];
                if !core::mem::replace(&mut seen[z], true) {
                    orbit.push(z);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbit
    }

    /// Orbit of `x` under a subgroup of the acting group.
    pub fn orbit_of_subgroup(&self, h: &Subgroup<'_>, x: usize) -> Result<Vec<usize>, Error> {
        self.check_point(x)?;
        if !core::ptr::eq(h.parent(), &self.group) {
            return Err(Error::ForeignSubgroup);
        }
        Ok(self.orbit_under(h.generator_indices(), x))
    }

    /// All orbits, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let gens = self.generator_indices();
        let mut seen = vec![false; self.points()];
        let mut out = Vec::new();
        for x in 0..self.points() {
            if !seen[x] {
                let o = self.orbit_under(&gens, x);
                for &y in &o {
                    seen[y] = true;
                }
                out.push(o);
            }
        }
        out
    }

    /// One orbit covering every point; vacuously true with no points.
    pub fn is_pretransitive(&self) -> bool {
        self.points() == 0 || self.orbit_under(&self.generator_indices(), 0).len() == self.points()
    }

    pub fn stabilizer(&self, x: usize) -> Result<Subgroup<'_>, Error> {
        self.check_point(x)?;
        Ok(self.group.subgroup_where(|g| self.induced[g][x] == x))
    }

    /// Setwise stabilizer `{g : g·B = B}`.
    pub fn setwise_stabilizer(&self, block: &Block) -> Subgroup<'_> {
        let set = self.bitset(block.points());
        self.group.subgroup_where(|g| block.points().iter().all(|&x| set.contains(self.induced[g][x])))
    }

    /// Elements acting as the identity on the points.
    pub fn kernel(&self) -> Subgroup<'_> {
        self.group.subgroup_where(|g| self.induced[g].iter().enumerate().all(|(x, &y)| x == y))
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel().is_trivial()
    }

    fn bitset(&self, points: &[usize]) -> BitSet {
        let mut s = BitSet::new(self.points());
        for &p in points {
            s.insert(p);
        }
        s
    }

    /// Every translate `g·B` equals `B` or is disjoint from it.
    pub fn is_block(&self, points: &[usize]) -> bool {
        if points.iter().any(|&p| p >= self.points()) {
            return false;
        }
        let set = self.bitset(points);
        let size = set.count();
        (0..self.group.order()).all(|g| {
            let image = self.bitset(&set.iter().map(|x| self.induced[g][x]).collect::<Vec<_>>());
            debug_assert_eq!(image.count(), size);
            image == set || image.is_disjoint(&set)
        })
    }

    /// Smallest block containing `seed`, by union-find: the seed points are
    /// merged and the partition is closed under the generators; the class of
    /// the seed is the block.
    pub fn minimal_block(&self, seed: &[usize]) -> Result<Block, Error> {
        let Some(&first) = seed.first() else {
            return Err(Error::EmptySeed);
        };
        for &x in seed {
            self.check_point(x)?;
        }
        if !self.is_pretransitive() {
            return Err(Error::NotTransitive);
        }
        let gens = self.generator_indices();
        let mut uf = UnionFind::new(self.points());
        let mut pending = Vec::new();
        for &x in &seed[1..] {
            if uf.union(first, x) {
                pending.push((first, x));
            }
        }
        while let Some((x, y)) = pending.pop() {
            for &g in &gens {
                let (gx, gy) = (self.induced[g][x], self.induced[g][y]);
                if uf.union(gx, gy) {
                    pending.push((gx, gy));
                }
            }
        }
        let root = uf.find(first);
        let points = (0..self.points()).filter(|&x| uf.find(x) == root).collect();
        Ok(Block { points })
    }

    /// A block `B` with `2 ≤ |B| < points()` through point 0, if any.
    /// Requires a transitive action.
    pub fn nontrivial_block(&self) -> Result<Option<Block>, Error> {
        if !self.is_pretransitive() {
            return Err(Error::NotTransitive);
        }
        for y in 1..self.points() {
            let b = self.minimal_block(&[0, y])?;
            if b.len() < self.points() {
                return Ok(Some(b));
            }
        }
        Ok(None)
    }

    /// Pretransitive with only trivial blocks (vacuous on at most one point).
    pub fn is_preprimitive(&self) -> bool {
        self.is_pretransitive() && matches!(self.nontrivial_block(), Ok(None))
    }

    /// Preprimitive on at least two points.
    pub fn is_primitive(&self) -> bool {
        self.points() >= 2 && self.is_preprimitive()
    }

    /// Transitive on ordered pairs of distinct points.
    pub fn is_two_transitive(&self) -> bool {
        let m = self.points();
        if m < 2 {
            return false;
        }
        let gens = self.generator_indices();
        let mut seen = vec![false; m * m];
        seen[1] = true;
        let mut stack = vec![(0usize, 1usize)];
        let mut count = 1;
        while let Some((x, y)) = stack.pop() {
            for &g in &gens {
                let (gx, gy) = (self.induced[g][x], self.induced[g][y]);
                if !core::mem::replace(&mut seen[gx * m + gy], true) {
                    count += 1;
                    stack.push((gx, gy));
                }
            }
        }
        count == m * (m - 1)
    }

    /// Does the subgroup move some point?
    pub fn acts_nontrivially(&self, h: &Subgroup<'_>) -> bool {
        h.generator_indices().iter().any(|&g| self.induced[g].iter().enumerate().any(|(x, &y)| x != y))
    }

    /// Is the subgroup transitive on the points?
    pub fn is_transitive_subgroup(&self, h: &Subgroup<'_>) -> bool {
        self.points() == 0 || self.orbit_under(h.generator_indices(), 0).len() == self.points()
    }

    /// A normal subgroup that acts nontrivially but not transitively.
    pub fn quasiprimitivity_witness(&self) -> Option<Subgroup<'_>> {
        self.group.normal_subgroups().into_iter().find(|n| self.acts_nontrivially(n) && !self.is_transitive_subgroup(n))
    }

    /// Every normal subgroup that acts nontrivially is transitive.
    pub fn is_quasiprimitive(&self) -> bool {
        self.quasiprimitivity_witness().is_none()
    }

    /// Blocks containing `a`, sorted by size then points.
    ///
    /// Found by closing `{a}` under `B ↦ minimal_block(B ∪ {y})`; every block
    /// through `a` is reached since any block strictly containing `B` contains
    /// such a step.
    pub fn blocks_containing(&self, a: usize) -> Result<Vec<Block>, Error> {
        self.check_point(a)?;
        if !self.is_pretransitive() {
            return Err(Error::NotTransitive);
        }
        let start = Block { points: vec![a] };
        let mut seen = BTreeSet::new();
        seen.insert(start.points.clone());
        let mut out = vec![start];
        let mut i = 0;
        while i < out.len() {
            let current = out[i].points.clone();
            for y in 0..self.points() {
                if current.binary_search(&y).is_ok() {
                    continue;
                }
                let mut seed = current.clone();
                seed.push(y);
                let b = self.minimal_block(&seed)?;
                if seen.insert(b.points.clone()) {
                    out.push(b);
                }
            }
            i += 1;
        }
        out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.points.cmp(&y.points)));
        Ok(out)
    }

    /// Subgroups containing `stabilizer(a)`, sorted by order then elements.
    pub fn overgroups_of_stabilizer(&self, a: usize) -> Result<Vec<Subgroup<'_>>, Error> {
        let h = self.stabilizer(a)?;
        let mut seen = BTreeSet::new();
        seen.insert(h.members().to_vec());
        let mut out = vec![h];
        let mut i = 0;
        while i < out.len() {
            for g in out[i].left_coset_representatives().into_iter().skip(1) {
                let k = out[i].adjoin(g);
                if seen.insert(k.members().to_vec()) {
                    out.push(k);
                }
            }
            i += 1;
        }
        out.sort_by(|x, y| x.order().cmp(&y.order()).then_with(|| x.members().cmp(y.members())));
        Ok(out)
    }

    /// The order isomorphism between blocks through `a` and subgroups
    /// containing the fixator of `a`.
    pub fn block_stabilizer_equiv(&self, a: usize) -> Result<BlockStabilizerCorrespondence<'_>, Error> {
        let blocks = self.blocks_containing(a)?;
        let subgroups = self.overgroups_of_stabilizer(a)?;
        let forward = blocks
            .iter()
            .map(|b| {
                let s = self.setwise_stabilizer(b);
                subgroups.iter().position(|h| *h == s)
            })
            .collect();
        let inverse = subgroups
            .iter()
            .map(|h| {
                let orbit = self.orbit_under(h.generator_indices(), a);
                blocks.iter().position(|b| b.points == orbit)
            })
            .collect();
        Ok(BlockStabilizerCorrespondence { point: a, blocks, subgroups, forward, inverse })
    }

    pub fn point_label(&self, x: usize) -> String {
        match self.kind {
            ActionKind::Natural => alloc::format!("{}", x + 1),
            ActionKind::Subsets { .. } => subset_label(self.subsets[x]),
        }
    }

    /// Sorted 1-based rendering, e.g. `{{1,2},{3,4}}`.
    pub fn block_label(&self, block: &Block) -> String {
        let mut labels: Vec<(Vec<usize>, String)> = block
            .points
            .iter()
            .map(|&x| {
                let key = match self.kind {
                    ActionKind::Natural => vec![x],
                    ActionKind::Subsets { .. } => subsets::elements(self.subsets[x]).collect(),
                };
                (key, self.point_label(x))
            })
            .collect();
        labels.sort();
        let mut s = String::from("{");
        for (i, (_, l)) in labels.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(l);
        }
        s.push('}');
        s
    }
}

fn map_subset(g: &Permutation, mask: u64) -> u64 {
    subsets::elements(mask).fold(0, |m, x| m | 1 << g.apply(x))
}

fn subset_label(mask: u64) -> String {
    let mut s = String::from("{");
    for (i, x) in subsets::elements(mask).enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{}", x + 1);
    }
    s.push('}');
    s
}

/// A sorted set of action points.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block {
    points: Vec<usize>,
}

impl Block {
    pub fn new(mut points: Vec<usize>) -> Self {
        points.sort_unstable();
        points.dedup();
        Block { points }
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.points.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &Block) -> bool {
        self.points.iter().all(|&x| other.contains(x))
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char('{')?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_char(',')?;
            }
            write!(f, "{}", p + 1)?;
        }
        f.write_char('}')
    }
}

/// Both sides of the block/overgroup correspondence at one point, with the
/// two maps expressed as positions into the other list.
#[derive(Debug)]
pub struct BlockStabilizerCorrespondence<'a> {
    pub point: usize,
    pub blocks: Vec<Block>,
    pub subgroups: Vec<Subgroup<'a>>,
    /// `forward[i]`: position of `setwise_stabilizer(blocks[i])` in `subgroups`.
    pub forward: Vec<Option<usize>>,
    /// `inverse[j]`: position of the `subgroups[j]`-orbit of the point in `blocks`.
    pub inverse: Vec<Option<usize>>,
}

impl BlockStabilizerCorrespondence<'_> {
    /// Both maps total with `inverse ∘ forward` and `forward ∘ inverse` the
    /// identity.
    pub fn is_bijection(&self) -> bool {
        self.blocks.len() == self.subgroups.len()
            && self.forward.iter().enumerate().all(|(i, f)| f.is_some_and(|j| self.inverse[j] == Some(i)))
            && self.inverse.iter().enumerate().all(|(j, v)| v.is_some_and(|i| self.forward[i] == Some(j)))
    }

    /// `B ⊆ B'` exactly when `stab(B) ≤ stab(B')`.
    pub fn preserves_order(&self) -> bool {
        let n = self.blocks.len();
        (0..n).all(|i| {
            (0..n).all(|j| match (self.forward[i], self.forward[j]) {
                (Some(a), Some(b)) => {
                    self.blocks[i].is_subset(&self.blocks[j]) == self.subgroups[a].is_subgroup_of(&self.subgroups[b])
                }
                _ => false,
            })
        })
    }

    /// Pairs `(block, subgroup)` in block order.
    pub fn pairs(&self) -> Vec<(&Block, Option<&Subgroup<'_>>)> {
        self.blocks.iter().zip(&self.forward).map(|(b, f)| (b, f.map(|j| &self.subgroups[j]))).collect()
    }
}

/// A point map between two actions together with a group morphism.
pub struct EquivariantMap<'a> {
    source: &'a Action,
    target: &'a Action,
    /// Target element index of `φ(g)` for each source element index `g`.
    morphism: Vec<usize>,
    point_map: Vec<usize>,
}

impl<'a> EquivariantMap<'a> {
    pub fn new<F>(source: &'a Action, target: &'a Action, phi: F, point_map: Vec<usize>) -> Result<Self, Error>
    where
        F: Fn(&Permutation) -> Permutation,
    {
        if point_map.len() != source.points() || point_map.iter().any(|&y| y >= target.points()) {
            return Err(Error::IncompatibleActions);
        }
        let morphism = source
            .group
            .elements()
            .iter()
            .map(|g| target.group.index_of(&phi(g)).ok_or(Error::NotAMember))
            .collect::<Result<_, _>>()?;
        Ok(EquivariantMap { source, target, morphism, point_map })
    }

    /// Identity morphism and identity point map.
    pub fn identity(action: &'a Action) -> Self {
        EquivariantMap {
            source: action,
            target: action,
            morphism: (0..action.group.order()).collect(),
            point_map: (0..action.points()).collect(),
        }
    }

    /// `x ↦` complement of `x`, from `k`-subsets to `(n-k)`-subsets of the
    /// same group, with the identity morphism.
    pub fn complement(source: &'a Action, target: &'a Action) -> Result<Self, Error> {
        let n = source.group.degree();
        match (source.kind, target.kind) {
            (ActionKind::Subsets { k }, ActionKind::Subsets { k: j }) if k + j == n => {}
            _ => return Err(Error::IncompatibleActions),
        }
        if source.group.elements() != target.group.elements() {
            return Err(Error::IncompatibleActions);
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let point_map = source.subsets.iter().map(|&s| subsets::rank(full & !s)).collect();
        Ok(EquivariantMap { source, target, morphism: (0..source.group.order()).collect(), point_map })
    }

    /// `φ(g h) = φ(g) φ(h)` for all `g` and all source generators `h`.
    pub fn is_homomorphism(&self) -> bool {
        let (s, t) = (&self.source.group, &self.target.group);
        let gens = self.source.generator_indices();
        (0..s.order()).all(|g| {
            gens.iter()
                .all(|&h| self.morphism[s.product_index(g, h)] == t.product_index(self.morphism[g], self.morphism[h]))
        })
    }

    /// `f(g·x) = φ(g)·f(x)` for every `g` and `x`.
    pub fn check_equivariant(&self) -> bool {
        self.is_homomorphism()
            && (0..self.source.group.order()).all(|g| {
                (0..self.source.points()).all(|x| {
                    self.point_map[self.source.induced[g][x]]
                        == self.target.induced[self.morphism[g]][self.point_map[x]]
                })
            })
    }

    /// `φ` and `f` are both bijections.
    pub fn is_isomorphism(&self) -> bool {
        fn bijective(map: &[usize], size: usize) -> bool {
            map.len() == size && map.iter().collect::<BTreeSet<_>>().len() == size
        }
        bijective(&self.morphism, self.target.group.order()) && bijective(&self.point_map, self.target.points())
    }

    /// Runs the transitivity and primitivity tests on both sides.
    pub fn transfer_report(&self) -> TransferReport {
        let equivariant = self.check_equivariant();
        let isomorphism = self.is_isomorphism();
        let source = ActionVerdicts::of(self.source);
        let target = ActionVerdicts::of(self.target);
        TransferReport { equivariant, isomorphism, verdicts_agree: source == target, source, target }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ActionVerdicts {
    pub transitive: bool,
    pub primitive: bool,
    pub two_transitive: bool,
}

impl ActionVerdicts {
    pub fn of(action: &Action) -> Self {
        ActionVerdicts {
            transitive: action.is_pretransitive(),
            primitive: action.is_primitive(),
            two_transitive: action.is_two_transitive(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TransferReport {
    pub equivariant: bool,
    pub isomorphism: bool,
    pub source: ActionVerdicts,
    pub target: ActionVerdicts,
    pub verdicts_agree: bool,
}

impl TransferReport {
    /// An equivariant isomorphism must carry verdicts across unchanged.
    pub fn is_consistent(&self) -> bool {
        !(self.equivariant && self.isomorphism) || self.verdicts_agree
    }
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if two classes were merged.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            core::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}
