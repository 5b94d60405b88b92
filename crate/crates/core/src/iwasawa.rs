//! Executable Iwasawa criterion.
//!
//! Given an action of `G` on `X` and a subgroup `T(x)` for every point, the
//! criterion needs: each `T(x)` abelian, `T(g·x) = g T(x) g⁻¹`, the `T(x)`
//! generating `G`, and a quasiprimitive action. Its conclusion, that every
//! normal subgroup acting nontrivially contains `D(G)`, is not assumed here:
//! [`IwasawaStructure::conclude`] checks it against the full list of normal
//! subgroups.

use alloc::string::String;
use alloc::vec::Vec;

use crate::actions::Action;
use crate::alternating::{family_structure, Family};
use crate::error::Error;
use crate::group::Subgroup;
use crate::perm::Permutation;

/// A family of subgroups indexed by the points of an action.
#[derive(Debug)]
pub struct IwasawaStructure<'a> {
    action: &'a Action,
    family: Vec<Subgroup<'a>>,
}

/// Why a hypothesis or the conclusion failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Counterexample {
    /// Two elements of `T(point)` that do not commute.
    NonCommuting { point: usize, a: Permutation, b: Permutation },
    /// `T(g·x) ≠ g T(x) g⁻¹`.
    NotCovariant { g: Permutation, point: usize },
    /// The `T(x)` only generate a proper subgroup of this order.
    NotGenerating { generated_order: usize },
    /// A normal subgroup acting nontrivially but intransitively.
    NotQuasiprimitive { normal_generators: Vec<Permutation>, normal_order: usize },
    /// A normal subgroup acting nontrivially that misses `D(G)`.
    ConclusionFails { normal_generators: Vec<Permutation>, normal_order: usize },
}

/// One row of the normal-subgroup evidence table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalEvidence {
    pub order: usize,
    pub generators: Vec<Permutation>,
    pub acts_nontrivially: bool,
    pub contains_derived: bool,
    /// `⟨N ∪ T(a)⟩ = G` at the base point, for nontrivially acting `N`.
    pub joins_to_group_with_base: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IwasawaReport {
    pub commutative: Vec<bool>,
    pub covariant: bool,
    pub generates: bool,
    /// `None` until [`IwasawaStructure::conclude`] runs.
    pub quasiprimitive: Option<bool>,
    pub conclusion_verified: bool,
    pub counterexample: Option<Counterexample>,
    pub derived_order: usize,
    pub normal_subgroups: Vec<NormalEvidence>,
}

impl IwasawaReport {
    pub fn all_commutative(&self) -> bool {
        self.commutative.iter().all(|&c| c)
    }

    /// Commutative, covariant and generating.
    pub fn structure_holds(&self) -> bool {
        self.all_commutative() && self.covariant && self.generates
    }

    pub fn hypotheses_hold(&self) -> bool {
        self.structure_holds() && self.quasiprimitive == Some(true)
    }

    /// Names of the failed hypotheses, in declaration order.
    pub fn failed_hypotheses(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.all_commutative() {
            out.push("commutative");
        }
        if !self.covariant {
            out.push("covariant");
        }
        if !self.generates {
            out.push("generates");
        }
        if self.quasiprimitive == Some(false) {
            out.push("quasiprimitive");
        }
        out
    }
}

impl<'a> IwasawaStructure<'a> {
    /// `family[x]` is `T(x)`; each must be a subgroup of the acting group.
    pub fn new(action: &'a Action, family: Vec<Subgroup<'a>>) -> Result<Self, Error> {
        if family.len() != action.points() {
            return Err(Error::IncompatibleActions);
        }
        if family.iter().any(|t| !core::ptr::eq(t.parent(), action.group())) {
            return Err(Error::ForeignSubgroup);
        }
        Ok(IwasawaStructure { action, family })
    }

    /// Builds `T(x)` from generators returned by `gens(x)`.
    pub fn from_generators<F>(action: &'a Action, mut gens: F) -> Result<Self, Error>
    where
        F: FnMut(usize) -> Vec<Permutation>,
    {
        let family =
            (0..action.points()).map(|x| action.group().subgroup_generated(&gens(x))).collect::<Result<Vec<_>, _>>()?;
        IwasawaStructure::new(action, family)
    }

    pub fn action(&self) -> &'a Action {
        self.action
    }

    pub fn subgroup(&self, x: usize) -> &Subgroup<'a> {
        &self.family[x]
    }

    /// Decides commutativity, covariance and generation exhaustively.
    pub fn check_structure(&self) -> IwasawaReport {
        let g = self.action.group();
        let mut counterexample = None;

        let commutative: Vec<bool> = self
            .family
            .iter()
            .enumerate()
            .map(|(x, t)| {
                let pair = t.members().iter().find_map(|&a| {
                    t.members().iter().find(|&&b| g.product_index(a, b) != g.product_index(b, a)).map(|&b| (a, b))
                });
                if let Some((a, b)) = pair {
                    counterexample.get_or_insert(Counterexample::NonCommuting {
                        point: x,
                        a: g.element(a).clone(),
                        b: g.element(b).clone(),
                    });
                }
                pair.is_none()
            })
            .collect();

        let bad = (0..g.order()).find_map(|gi| {
            (0..self.action.points())
                .find(|&x| {
                    let target = &self.family[self.action.apply_index(gi, x)];
                    let t = &self.family[x];
                    target.order() != t.order()
                        || !t.members().iter().all(|&h| target.contains_index(g.conjugate_index(h, gi)))
                })
                .map(|x| (gi, x))
        });
        let covariant = bad.is_none();
        if let Some((gi, point)) = bad {
            counterexample.get_or_insert(Counterexample::NotCovariant { g: g.element(gi).clone(), point });
        }

        let generated_order = self.generated().order();
        let generates = generated_order == g.order();
        if !generates {
            counterexample.get_or_insert(Counterexample::NotGenerating { generated_order });
        }

        IwasawaReport {
            commutative,
            covariant,
            generates,
            quasiprimitive: None,
            conclusion_verified: false,
            counterexample,
            derived_order: g.derived_subgroup().order(),
            normal_subgroups: Vec::new(),
        }
    }

    /// `⟨∪ T(x)⟩`.
    pub fn generated(&self) -> Subgroup<'a> {
        let g = self.action.group();
        g.subgroup_generated_by_indices(self.family.iter().flat_map(|t| t.generator_indices().iter().copied()))
    }

    /// Full check: structure, quasiprimitivity, then the conclusion by
    /// enumeration of normal subgroups. When a hypothesis fails the
    /// conclusion is not evaluated and `conclusion_verified` stays false.
    pub fn conclude(&self) -> IwasawaReport {
        let mut report = self.check_structure();
        let g = self.action.group();
        let normals = g.normal_subgroups();
        let derived = g.derived_subgroup();
        let witness =
            normals.iter().find(|n| self.action.acts_nontrivially(n) && !self.action.is_transitive_subgroup(n));
        report.quasiprimitive = Some(witness.is_none());
        if let Some(n) = witness {
            report.counterexample.get_or_insert(Counterexample::NotQuasiprimitive {
                normal_generators: n.generators().cloned().collect(),
                normal_order: n.order(),
            });
        }
        let base = self.family.first();
        report.normal_subgroups = normals
            .iter()
            .map(|n| {
                let acts = self.action.acts_nontrivially(n);
                NormalEvidence {
                    order: n.order(),
                    generators: n.generators().cloned().collect(),
                    acts_nontrivially: acts,
                    contains_derived: derived.is_subgroup_of(n),
                    joins_to_group_with_base: (acts && base.is_some())
                        .then(|| n.join(base.expect("base point")).is_whole()),
                }
            })
            .collect();
        if !report.hypotheses_hold() {
            return report;
        }
        let failure = normals.iter().find(|n| self.action.acts_nontrivially(n) && !derived.is_subgroup_of(n));
        match failure {
            None => report.conclusion_verified = true,
            Some(n) => {
                report.counterexample = Some(Counterexample::ConclusionFails {
                    normal_generators: n.generators().cloned().collect(),
                    normal_order: n.order(),
                })
            }
        }
        report
    }
}

/// Evidence chain for simplicity of `A_n` through one subset family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityVerdict {
    pub n: usize,
    pub k: usize,
    pub family: Family,
    /// The group the criterion is applied to, such as `"S5"` or `"A6"`.
    pub group_name: String,
    pub report: IwasawaReport,
    /// Primitivity of the subset action, reported alongside quasiprimitivity.
    pub primitive: bool,
    pub faithful: bool,
    /// `D(G) = G` for the acting group.
    pub derived_equals_group: bool,
    /// For `A_n` routes: the criterion plus `D(A_n) = A_n` on a faithful
    /// action. `None` on the transposition route, which acts on `S_n`.
    pub simple_by_iwasawa: Option<bool>,
    /// `is_simple(A_n)` by enumeration of normal subgroups.
    pub simple_brute_force: bool,
}

impl SimplicityVerdict {
    pub fn consistent(&self) -> bool {
        self.simple_by_iwasawa.is_none_or(|s| s == self.simple_brute_force)
    }

    pub fn simple(&self) -> bool {
        self.simple_by_iwasawa.unwrap_or(self.simple_brute_force)
    }
}

/// Runs the criterion for `(n, k, family)` with `5 ≤ n ≤ 7` and `k` the
/// family's subset size, then cross-checks against enumeration.
pub fn simplicity_via_iwasawa(n: usize, k: usize, family: Family) -> Result<SimplicityVerdict, Error> {
    if !(5..=7).contains(&n) {
        return Err(Error::Unsupported("degree must be between 5 and 7"));
    }
    if family.subset_size() != k {
        return Err(Error::Unsupported("family does not match the subset size"));
    }
    let action = Action::on_subsets(family.ambient_group(n)?, k)?;
    let structure = family_structure(&action, family)?;
    let report = structure.conclude();
    let g = action.group();
    let derived_equals_group = g.derived_subgroup().is_whole();
    let faithful = action.is_faithful();
    let alternating = crate::alternating::alternating_group(n)?;
    let simple_by_iwasawa = match family {
        Family::Transposition => None,
        Family::ThreeCycle | Family::Klein => {
            Some(report.conclusion_verified && derived_equals_group && faithful && g.order() > 1)
        }
    };
    let group_name = match family {
        Family::Transposition => alloc::format!("S{n}"),
        _ => alloc::format!("A{n}"),
    };
    Ok(SimplicityVerdict {
        n,
        k,
        family,
        group_name,
        primitive: action.is_primitive(),
        faithful,
        derived_equals_group,
        simple_by_iwasawa,
        simple_brute_force: alternating.is_simple(),
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alternating::{alternating_group, symmetric_group};
    use crate::group::FiniteGroup;

    #[test]
    fn transpositions_on_pairs_of_s5() {
        let action = Action::on_subsets(symmetric_group(5).unwrap(), 2).unwrap();
        let s = family_structure(&action, Family::Transposition).unwrap();
        let r = s.check_structure();
        assert!(r.structure_holds());
        assert_eq!(r.quasiprimitive, None);
        let r = s.conclude();
        assert!(r.conclusion_verified);
        let acting: Vec<usize> = r.normal_subgroups.iter().filter(|e| e.acts_nontrivially).map(|e| e.order).collect();
        assert_eq!(acting, vec![60, 120]);
        assert!(r.normal_subgroups.iter().filter(|e| e.acts_nontrivially).all(|e| e.contains_derived));
    }

    #[test]
    fn three_cycles_on_triples_of_a5() {
        let action = Action::on_subsets(alternating_group(5).unwrap(), 3).unwrap();
        let r = family_structure(&action, Family::ThreeCycle).unwrap().conclude();
        assert!(r.hypotheses_hold() && r.conclusion_verified);
    }

    #[test]
    fn whole_group_family_is_not_commutative() {
        let action = Action::on_subsets(alternating_group(5).unwrap(), 2).unwrap();
        let g = action.group();
        let s = IwasawaStructure::new(&action, (0..10).map(|_| g.as_subgroup()).collect()).unwrap();
        let r = s.check_structure();
        assert!(!r.all_commutative());
        assert!(r.covariant && r.generates);
        assert!(matches!(r.counterexample, Some(Counterexample::NonCommuting { point: 0, .. })));
        let r = s.conclude();
        assert!(!r.conclusion_verified);
        assert_eq!(r.failed_hypotheses(), vec!["commutative"]);
    }

    #[test]
    fn non_covariant_family_detected() {
        let action = Action::on_subsets(symmetric_group(4).unwrap(), 2).unwrap();
        let t = crate::parse_cycles("(1 2)", 4).unwrap();
        let s = IwasawaStructure::from_generators(&action, |_| alloc::vec![t.clone()]).unwrap();
        let r = s.check_structure();
        assert!(!r.covariant);
        assert!(!r.generates);
    }

    #[test]
    fn trivial_group_is_vacuous() {
        let action = Action::natural(FiniteGroup::trivial(1).unwrap());
        let g = action.group();
        let s = IwasawaStructure::new(&action, alloc::vec![g.trivial_subgroup()]).unwrap();
        let r = s.conclude();
        assert!(r.hypotheses_hold());
        assert!(r.conclusion_verified);
    }

    #[test]
    fn simplicity_routes() {
        let v = simplicity_via_iwasawa(5, 3, Family::ThreeCycle).unwrap();
        assert_eq!(v.simple_by_iwasawa, Some(true));
        assert!(v.consistent());
        let v = simplicity_via_iwasawa(6, 4, Family::Klein).unwrap();
        assert_eq!(v.simple_by_iwasawa, Some(true));
        let v = simplicity_via_iwasawa(6, 3, Family::ThreeCycle).unwrap();
        assert!(!v.primitive);
        assert_eq!(v.report.quasiprimitive, Some(true));
        let v = simplicity_via_iwasawa(5, 2, Family::Transposition).unwrap();
        assert_eq!(v.simple_by_iwasawa, None);
        assert!(v.report.conclusion_verified);
        assert!(simplicity_via_iwasawa(5, 3, Family::Klein).is_err());
        assert!(simplicity_via_iwasawa(4, 3, Family::ThreeCycle).is_err());
    }
}
