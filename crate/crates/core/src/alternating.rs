//! Symmetric and alternating groups and the checks built on them: the
//! transposition, 3-cycle and Klein subgroup families, generation, derived
//! subgroups, cycle-type counting, centralizer structure, the Sylow
//! 2-subgroup of `A_4`, and maximality of `k`-subset stabilizers.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::actions::{Action, Block};
use crate::error::Error;
use crate::group::{FiniteGroup, Subgroup, DEFAULT_ORDER_CAP};
use crate::iwasawa::IwasawaStructure;
use crate::partition::{factorial, PartitionOfN};
use crate::perm::{CycleType, Permutation};
use crate::subsets;

pub fn symmetric_group(n: usize) -> Result<FiniteGroup, Error> {
    symmetric_group_with_cap(n, DEFAULT_ORDER_CAP)
}

/// `S_n` generated by `(1 2)` and `(1 2 … n)`.
pub fn symmetric_group_with_cap(n: usize, cap: usize) -> Result<FiniteGroup, Error> {
    if factorial(n).map_or(true, |f| f > cap as u64) {
        return Err(Error::GroupTooLarge { cap });
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::transposition(n, 0, 1)?);
        gens.push(Permutation::cycle(n, &(0..n).collect::<Vec<_>>())?);
    }
    FiniteGroup::enumerate_with_cap(n, gens, cap)
}

pub fn alternating_group(n: usize) -> Result<FiniteGroup, Error> {
    alternating_group_with_cap(n, DEFAULT_ORDER_CAP)
}

/// `A_n` generated by the 3-cycles `(1 2 i)`, `3 ≤ i ≤ n`.
pub fn alternating_group_with_cap(n: usize, cap: usize) -> Result<FiniteGroup, Error> {
    if factorial(n).map_or(true, |f| f / 2 > cap as u64) {
        return Err(Error::GroupTooLarge { cap });
    }
    let gens = (2..n).map(|i| Permutation::cycle(n, &[0, 1, i])).collect::<Result<Vec<_>, _>>()?;
    FiniteGroup::enumerate_with_cap(n, gens, cap)
}

/// Subgroup families attached to `k`-subsets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `⟨(a b)⟩` for a pair `{a, b}`, inside `S_n`.
    Transposition,
    /// `⟨(a b c)⟩` for a triple, inside `A_n`.
    ThreeCycle,
    /// Klein four-group on a quadruple, inside `A_n`.
    Klein,
}

impl Family {
    /// Size of the subsets the family is indexed by.
    pub fn subset_size(self) -> usize {
        match self {
            Family::Transposition => 2,
            Family::ThreeCycle => 3,
            Family::Klein => 4,
        }
    }

    /// The ambient group: `S_n` for transpositions, `A_n` otherwise.
    pub fn ambient_group(self, n: usize) -> Result<FiniteGroup, Error> {
        match self {
            Family::Transposition => symmetric_group(n),
            Family::ThreeCycle | Family::Klein => alternating_group(n),
        }
    }

    /// Generators of the family member attached to 0-based `points`.
    pub fn generators(self, degree: usize, points: &[usize]) -> Result<Vec<Permutation>, Error> {
        if points.len() != self.subset_size() {
            return Err(Error::SubsetSizeOutOfRange { n: degree, k: points.len() });
        }
        check_distinct(degree, points)?;
        match self {
            Family::Transposition => Ok(vec![Permutation::transposition(degree, points[0], points[1])?]),
            Family::ThreeCycle => Ok(vec![Permutation::cycle(degree, points)?]),
            Family::Klein => {
                let [a, b, c, d] = [points[0], points[1], points[2], points[3]];
                Ok(vec![
                    Permutation::from_cycles(degree, &[[a, b], [c, d]])?,
                    Permutation::from_cycles(degree, &[[a, c], [b, d]])?,
                ])
            }
        }
    }
}

fn check_distinct(degree: usize, points: &[usize]) -> Result<(), Error> {
    for (i, &p) in points.iter().enumerate() {
        if p >= degree {
            return Err(Error::PointOutOfRange { point: p, points: degree });
        }
        if points[..i].contains(&p) {
            return Err(Error::RepeatedPoint(p));
        }
    }
    Ok(())
}

fn family_subgroup<'g>(group: &'g FiniteGroup, family: Family, points: &[usize]) -> Result<Subgroup<'g>, Error> {
    let gens = family.generators(group.degree(), points)?;
    group.subgroup_generated(&gens)
}

pub fn transposition_subgroup<'g>(group: &'g FiniteGroup, pair: [usize; 2]) -> Result<Subgroup<'g>, Error> {
    family_subgroup(group, Family::Transposition, &pair)
}

pub fn three_cycle_subgroup<'g>(group: &'g FiniteGroup, triple: [usize; 3]) -> Result<Subgroup<'g>, Error> {
    family_subgroup(group, Family::ThreeCycle, &triple)
}

/// `{e, (a b)(c d), (a c)(b d), (a d)(b c)}`.
pub fn klein_vierergruppe<'g>(group: &'g FiniteGroup, quadruple: [usize; 4]) -> Result<Subgroup<'g>, Error> {
    family_subgroup(group, Family::Klein, &quadruple)
}

/// The family as an Iwasawa structure on the `k`-subset action.
pub fn family_structure(action: &Action, family: Family) -> Result<IwasawaStructure<'_>, Error> {
    match action.kind() {
        crate::ActionKind::Subsets { k } if k == family.subset_size() => {}
        _ => return Err(Error::Unsupported("family does not match the action")),
    }
    let group = action.group();
    let family = (0..action.points())
        .map(|x| {
            let pts: Vec<usize> = subsets::elements(action.subset(x).expect("subset action")).collect();
            family_subgroup(group, family, &pts)
        })
        .collect::<Result<Vec<_>, _>>()?;
    IwasawaStructure::new(action, family)
}

/// All members of the family inside `S_n`, joined.
pub fn generated_by_family(n: usize, family: Family) -> Result<FiniteGroup, Error> {
    let k = family.subset_size();
    let mut gens = Vec::new();
    if n >= k {
        for mask in subsets::all(n, k) {
            let pts: Vec<usize> = subsets::elements(mask).collect();
            gens.extend(family.generators(n, &pts)?);
        }
    }
    let n = n.max(1);
    FiniteGroup::enumerate(n, gens)
}

/// Whether the family generates `S_n` (transpositions) or `A_n` (the others).
pub fn verify_generation(n: usize, family: Family) -> Result<bool, Error> {
    let generated = generated_by_family(n, family)?;
    let expected = family.ambient_group(n.max(1))?;
    Ok(generated.elements() == expected.elements())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CommutatorRecord {
    pub n: usize,
    pub derived_symmetric_is_alternating: bool,
    pub derived_alternating_is_alternating: bool,
    pub derived_alternating_order: usize,
    /// `D(A_n) = A_n` is only expected from `n = 5` on.
    pub second_expected: bool,
}

pub fn verify_commutator_prop(n: usize) -> Result<CommutatorRecord, Error> {
    let s = symmetric_group(n)?;
    let a = alternating_group(n)?;
    let ds = s.derived_subgroup();
    let da = a.derived_subgroup();
    Ok(CommutatorRecord {
        n,
        derived_symmetric_is_alternating: ds.elements().eq(a.elements().iter()),
        derived_alternating_is_alternating: da.is_whole(),
        derived_alternating_order: da.order(),
        second_expected: n >= 5,
    })
}

/// `n! / (∏ i^{m_i} ∏ m_i!)`, the number of permutations of a cycle type.
pub fn count_cycle_type(n: usize, partition: &PartitionOfN) -> Result<u64, Error> {
    if partition.n() != n {
        return Err(Error::InvalidPartition);
    }
    Ok(factorial(n)? / centralizer_order(partition)?)
}

/// `∏ i^{m_i} ∏ m_i!`.
pub fn centralizer_order(partition: &PartitionOfN) -> Result<u64, Error> {
    partition.multiplicities().into_iter().try_fold(1u64, |acc, (i, m)| {
        let power = (i as u64).checked_pow(m as u32).ok_or(Error::Overflow)?;
        acc.checked_mul(power).and_then(|x| x.checked_mul(factorial(m).ok()?)).ok_or(Error::Overflow)
    })
}

/// Number of elements of each cycle type, by direct count.
pub fn cycle_type_census(group: &FiniteGroup) -> BTreeMap<CycleType, u64> {
    let mut census = BTreeMap::new();
    for g in group.elements() {
        *census.entry(g.cycle_type()).or_insert(0) += 1;
    }
    census
}

/// Outcome of replaying the centralizer-structure argument for one `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerRecord {
    pub cycle_type: CycleType,
    pub formula_order: u64,
    pub centralizer_order: usize,
    /// `h_σ` lies in `Z_g` and satisfies `φ(h_σ) = σ` for every σ.
    pub section_valid: bool,
    /// `σ ↦ h_σ` is a group morphism.
    pub section_is_homomorphism: bool,
    /// The image of `φ` is all of `∏ S_{m_i}`.
    pub phi_surjective: bool,
    pub kernel_order: usize,
    pub kernel_formula_order: u64,
    /// `ker φ` equals the group generated by the cycles of `g`.
    pub kernel_generated_by_cycles: bool,
}

impl CentralizerRecord {
    pub fn all_hold(&self) -> bool {
        self.formula_order == self.centralizer_order as u64
            && self.section_valid
            && self.section_is_homomorphism
            && self.phi_surjective
            && self.kernel_order as u64 == self.kernel_formula_order
            && self.kernel_generated_by_cycles
    }
}

/// Replays the structure of `Z_g` in `S_n`: the morphism `φ` to the
/// permutations of same-length cycles, its section built from anchor points
/// (each cycle's smallest point) and its kernel.
pub fn verify_centralizer_structure(n: usize, g: &Permutation) -> Result<CentralizerRecord, Error> {
    let s = symmetric_group(n)?;
    let z = s.centralizer(g)?;
    let cycles = g.cycles();
    let r = cycles.len();
    let mut cycle_of = vec![0; n];
    for (ci, c) in cycles.iter().enumerate() {
        for &x in c {
            cycle_of[x] = ci;
        }
    }
    let cycle_type = g.cycle_type();
    let formula_order = centralizer_order(&cycle_type.to_partition())?;

    // φ(h) as a permutation of cycle indices: c ↦ the cycle containing h(a_c).
    let phi = |h: &Permutation| -> Permutation {
        let images = cycles.iter().map(|c| cycle_of[h.apply(c[0])]).collect();
        Permutation::from_images(images).expect("h permutes the cycles")
    };

    // Length-preserving permutations of the cycles, as a subgroup of S_r.
    let sym_r = symmetric_group(r)?;
    let lengths_preserving = sym_r
        .elements()
        .iter()
        .filter(|sigma| (0..r).all(|c| cycles[sigma.apply(c)].len() == cycles[c].len()))
        .cloned()
        .collect::<Vec<_>>();

    // h_σ(g^j(a_c)) = g^j(a_σ(c)).
    let section = |sigma: &Permutation| -> Permutation {
        let mut images = vec![0; n];
        for (ci, c) in cycles.iter().enumerate() {
            let target = &cycles[sigma.apply(ci)];
            for (j, &x) in c.iter().enumerate() {
                images[x] = target[j];
            }
        }
        Permutation::from_images(images).expect("length-preserving section")
    };

    let lifts: Vec<Permutation> = lengths_preserving.iter().map(section).collect();
    let section_valid = lifts.iter().zip(&lengths_preserving).all(|(h, sigma)| z.contains(h) && &phi(h) == sigma);
    let section_is_homomorphism = lengths_preserving
        .iter()
        .zip(&lifts)
        .all(|(s1, h1)| lengths_preserving.iter().zip(&lifts).all(|(s2, h2)| section(&(s1 * s2)) == h1 * h2));
    let mut image: Vec<Permutation> = z.elements().map(&phi).collect();
    image.sort();
    image.dedup();
    let phi_surjective = image == lengths_preserving;

    let identity_r = Permutation::identity(r);
    let kernel: Vec<&Permutation> = z.elements().filter(|h| phi(h) == identity_r).collect();
    let kernel_formula_order =
        (1..=n).try_fold(1u64, |acc, i| acc.checked_mul((i as u64).checked_pow(cycle_type.multiplicity(i) as u32)?));
    let cycle_perms =
        cycles.iter().filter(|c| c.len() > 1).map(|c| Permutation::cycle(n, c)).collect::<Result<Vec<_>, _>>()?;
    let by_cycles = s.subgroup_generated(&cycle_perms)?;
    let kernel_generated_by_cycles = by_cycles.order() == kernel.len() && kernel.iter().all(|h| by_cycles.contains(h));

    Ok(CentralizerRecord {
        cycle_type,
        formula_order,
        centralizer_order: z.order(),
        section_valid,
        section_is_homomorphism,
        phi_surjective,
        kernel_order: kernel.len(),
        kernel_formula_order: kernel_formula_order.ok_or(Error::Overflow)?,
        kernel_generated_by_cycles,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KleinSylowRecord {
    pub alternating_order: usize,
    pub sylow_order: usize,
    pub sylow_count: usize,
    /// Every element of a Sylow 2-subgroup has type `()` or `(2,2)`.
    pub sylow_types_restricted: bool,
    /// Number of elements of type `(2,2)` in `A_4`.
    pub double_transpositions: u64,
    pub sylow_equals_klein: bool,
    pub klein_normal_in_alternating: bool,
    pub klein_normal_in_symmetric: bool,
}

impl KleinSylowRecord {
    pub fn all_hold(&self) -> bool {
        self.alternating_order == 12
            && self.sylow_order == 4
            && self.sylow_count == 1
            && self.sylow_types_restricted
            && self.double_transpositions == 3
            && self.sylow_equals_klein
            && self.klein_normal_in_alternating
            && self.klein_normal_in_symmetric
    }
}

/// The unique Sylow 2-subgroup of `A_4` is the Klein four-group.
pub fn verify_klein_sylow() -> Result<KleinSylowRecord, Error> {
    let a4 = alternating_group(4)?;
    let s4 = symmetric_group(4)?;
    let sylows = a4.sylow_subgroups(2)?;
    let double = CycleType::from_partition(&PartitionOfN::new(4, vec![2, 2])?);
    let identity = Permutation::identity(4).cycle_type();
    let sylow_types_restricted =
        sylows.iter().all(|p| p.elements().all(|g| g.cycle_type() == double || g.cycle_type() == identity));
    let double_transpositions = cycle_type_census(&a4).get(&double).copied().unwrap_or(0);
    let v_in_a4 = klein_vierergruppe(&a4, [0, 1, 2, 3])?;
    let v_in_s4 = klein_vierergruppe(&s4, [0, 1, 2, 3])?;
    Ok(KleinSylowRecord {
        alternating_order: a4.order(),
        sylow_order: sylows.first().map_or(0, |p| p.order()),
        sylow_count: sylows.len(),
        sylow_types_restricted,
        double_transpositions,
        sylow_equals_klein: sylows.len() == 1 && sylows[0] == v_in_a4,
        klein_normal_in_alternating: v_in_a4.is_normal(),
        klein_normal_in_symmetric: v_in_s4.is_normal(),
    })
}

/// Primitivity of a `k`-subset action against maximality of the stabilizer
/// of `{1..k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalityRoute {
    pub group_order: usize,
    pub primitive: bool,
    pub stabilizer_order: usize,
    pub stabilizer_maximal: bool,
    /// Order of the smallest `⟨H, g⟩` strictly between, when not maximal.
    pub intermediate_order: Option<usize>,
    pub witness_block: Option<Block>,
    /// Order of the stabilizer of `{{1..k}, {k+1..n}}` when `n = 2k`.
    pub partition_stabilizer_order: Option<usize>,
}

impl MaximalityRoute {
    /// Transitive action: primitive exactly when point stabilizers are maximal.
    pub fn routes_agree(&self) -> bool {
        self.primitive == self.stabilizer_maximal
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropMaximalRecord {
    pub n: usize,
    pub k: usize,
    /// `0 < k < n - k`.
    pub hypothesis_holds: bool,
    pub alternating: MaximalityRoute,
    pub symmetric: MaximalityRoute,
}

impl PropMaximalRecord {
    pub fn primitive(&self) -> bool {
        self.alternating.primitive && self.symmetric.primitive
    }

    pub fn routes_agree(&self) -> bool {
        self.alternating.routes_agree() && self.symmetric.routes_agree()
    }
}

fn maximality_route(group: FiniteGroup, k: usize) -> Result<MaximalityRoute, Error> {
    let n = group.degree();
    let action = Action::on_subsets(group, k)?;
    let g = action.group();
    let x = action.point_of_subset(&(0..k).collect::<Vec<_>>())?;
    let h = action.stabilizer(x)?;
    let intermediate = g.intermediate_subgroup(&h)?;
    let partition_stabilizer_order = (2 * k == n).then(|| {
        let complement = action.point_of_subset(&(k..n).collect::<Vec<_>>()).expect("complement");
        action.setwise_stabilizer(&Block::new(vec![x, complement])).order()
    });
    Ok(MaximalityRoute {
        group_order: g.order(),
        primitive: action.is_primitive(),
        stabilizer_order: h.order(),
        stabilizer_maximal: g.is_maximal(&h)?,
        intermediate_order: intermediate.map(|s| s.order()),
        witness_block: action.nontrivial_block().ok().flatten(),
        partition_stabilizer_order,
    })
}

/// Checks primitivity of `A_n` and `S_n` on `k`-subsets against maximality
/// of `(S_k × S_{n-k}) ∩ A_n` and `S_k × S_{n-k}`. Runs for any `k ≤ n`;
/// outside `0 < k < n - k` the verdicts are reported as they come out.
pub fn verify_prop_maximal(n: usize, k: usize) -> Result<PropMaximalRecord, Error> {
    if k > n {
        return Err(Error::SubsetSizeOutOfRange { n, k });
    }
    Ok(PropMaximalRecord {
        n,
        k,
        hypothesis_holds: 0 < k && k < n - k,
        alternating: maximality_route(alternating_group(n)?, k)?,
        symmetric: maximality_route(symmetric_group(n)?, k)?,
    })
}
