//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Every criterion is exact (no tolerances); brute-force oracles from
//! `common` back the production results wherever an independent route
//! exists.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use permgrp::actions::ActionVerdicts;
use permgrp::alternating::{
    alternating_group, centralizer_order, count_cycle_type, cycle_type_census, family_structure, klein_vierergruppe,
    symmetric_group, verify_centralizer_structure, verify_generation, verify_klein_sylow, Family,
};
use permgrp::{parse_cycles, Action, EquivariantMap, PartitionOfN, Permutation};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn c01_group_sizes() -> Outcome {
    for n in 2..=7u64 {
        let s = symmetric_group(n as usize).map_err(err)?;
        let a = alternating_group(n as usize).map_err(err)?;
        ensure!(s.order() as u64 == factorial(n), "|S{n}| = {}", s.order());
        ensure!(a.order() as u64 == factorial(n) / 2, "|A{n}| = {}", a.order());
    }
    Ok("|S_n| = n!, |A_n| = n!/2 for n = 2..7 (|S4| = 24, |A4| = 12)".into())
}

fn c02_simplicity() -> Outcome {
    for n in 5..=7 {
        ensure!(alternating_group(n).map_err(err)?.is_simple(), "A{n} not simple");
    }
    let a4 = alternating_group(4).map_err(err)?;
    ensure!(!a4.is_simple(), "A4 reported simple");
    let normals = a4.normal_subgroups();
    let proper: Vec<_> = normals.iter().filter(|n| !n.is_trivial() && !n.is_whole()).collect();
    let v = klein_vierergruppe(&a4, [0, 1, 2, 3]).map_err(err)?;
    ensure!(proper.len() == 1 && *proper[0] == v, "A4 proper normal subgroups: {proper:?}");
    let a5 = alternating_group(5).map_err(err)?;
    ensure!(a5.order() == 5 * 4 * 3, "|A5| = {}", a5.order());
    Ok("A5, A6, A7 simple; A4 not, with V its only proper nontrivial normal subgroup; |A5| = 5*4*3".into())
}

fn c03_normal_subgroups_s5() -> Outcome {
    let s5 = symmetric_group(5).map_err(err)?;
    let a5 = alternating_group(5).map_err(err)?;
    let got: Vec<Vec<Permutation>> = s5.normal_subgroups().iter().map(|n| n.elements().cloned().collect()).collect();
    let expected = vec![vec![Permutation::identity(5)], a5.elements().to_vec(), s5.elements().to_vec()];
    ensure!(got == expected, "normal subgroups of S5 have orders {:?}", got.iter().map(Vec::len).collect::<Vec<_>>());
    let oracle: Vec<Vec<Permutation>> = normal_subgroups_by_class_unions(&s5).into_iter().collect();
    let mut sorted = got.clone();
    sorted.sort();
    ensure!(oracle == sorted, "class-union oracle disagrees");
    Ok("normal subgroups of S5 are exactly {e}, A5, S5 (class-union oracle agrees)".into())
}

fn c04_commutators() -> Outcome {
    for n in 5..=7 {
        let s = symmetric_group(n).map_err(err)?;
        let a = alternating_group(n).map_err(err)?;
        ensure!(s.derived_subgroup().elements().eq(a.elements().iter()), "D(S{n}) != A{n}");
        ensure!(a.derived_subgroup().is_whole(), "D(A{n}) != A{n}");
    }
    let a4 = alternating_group(4).map_err(err)?;
    let d = a4.derived_subgroup();
    let v = klein_vierergruppe(&a4, [0, 1, 2, 3]).map_err(err)?;
    ensure!(d.order() == 4 && d == v, "D(A4) has order {}", d.order());
    for n in 3..=5 {
        let s = symmetric_group(n).map_err(err)?;
        let oracle = derived_by_brute_force(&s);
        ensure!(s.derived_subgroup().elements().cloned().collect::<BTreeSet<_>>() == oracle, "D(S{n}) oracle mismatch");
    }
    Ok("D(S_n) = A_n and D(A_n) = A_n for n = 5,6,7; D(A4) = V of order 4".into())
}

fn c05_iwasawa() -> Outcome {
    let cases = [(5, Family::Transposition), (5, Family::ThreeCycle), (7, Family::ThreeCycle), (6, Family::Klein)];
    let mut lines = Vec::new();
    for (n, family) in cases {
        let action = Action::on_subsets(family.ambient_group(n).map_err(err)?, family.subset_size()).map_err(err)?;
        let structure = family_structure(&action, family).map_err(err)?;
        let report = structure.conclude();
        ensure!(report.all_commutative(), "n={n} {family:?}: not commutative");
        ensure!(report.covariant, "n={n} {family:?}: not covariant");
        ensure!(report.generates, "n={n} {family:?}: does not generate");
        ensure!(report.quasiprimitive == Some(true), "n={n} {family:?}: not quasiprimitive");
        ensure!(report.conclusion_verified, "n={n} {family:?}: conclusion fails: {:?}", report.counterexample);
        let acting: Vec<_> = report.normal_subgroups.iter().filter(|e| e.acts_nontrivially).collect();
        ensure!(acting.iter().all(|e| e.contains_derived), "nontrivially acting normal subgroup misses D(G)");
        ensure!(acting.iter().all(|e| e.joins_to_group_with_base == Some(true)), "<N, T(a)> != G");
        // Quasiprimitivity against the class-union oracle.
        let g = action.group();
        for n_set in normal_subgroups_by_class_unions(g) {
            let n_group = g.subgroup_generated(&n_set).map_err(err)?;
            if action.acts_nontrivially(&n_group) {
                ensure!(action.is_transitive_subgroup(&n_group), "oracle normal subgroup intransitive");
            }
        }
        lines.push(format!(
            "{}{} on {}-subsets",
            if family == Family::Transposition { "S" } else { "A" },
            n,
            family.subset_size()
        ));
    }
    Ok(format!("hypotheses and conclusion verified: {}", lines.join("; ")))
}

fn c06_primitivity() -> Outcome {
    let a5 = Action::on_subsets(alternating_group(5).map_err(err)?, 2).map_err(err)?;
    ensure!(a5.is_primitive(), "A5 on 2-subsets not primitive");

    let s4 = Action::on_subsets(symmetric_group(4).map_err(err)?, 2).map_err(err)?;
    ensure!(!s4.is_primitive(), "S4 on 2-subsets primitive");
    let w = s4.nontrivial_block().map_err(err)?.ok_or("no witness for S4")?;
    ensure!(s4.block_label(&w) == "{{1,2},{3,4}}", "S4 witness {}", s4.block_label(&w));
    ensure!(s4.is_block(w.points()) && is_block_by_definition(&s4, w.points()), "S4 witness not a block");

    let a6 = Action::on_subsets(alternating_group(6).map_err(err)?, 3).map_err(err)?;
    ensure!(!a6.is_primitive(), "A6 on 3-subsets primitive");
    let w = a6.nontrivial_block().map_err(err)?.ok_or("no witness for A6")?;
    let [x, y] = w.points() else { return Err(format!("A6 witness {}", a6.block_label(&w))) };
    ensure!(a6.subset(*x).unwrap() ^ a6.subset(*y).unwrap() == 0b111111, "A6 witness not complementary");
    ensure!(a6.is_block(w.points()) && is_block_by_definition(&a6, w.points()), "A6 witness not a block");

    let a7 = Action::on_subsets(alternating_group(7).map_err(err)?, 3).map_err(err)?;
    ensure!(a7.is_primitive(), "A7 on 3-subsets not primitive");
    Ok(format!(
        "A5/X[2] primitive; S4/X[2] witness {}; A6/X[3] witness {}; A7/X[3] primitive",
        s4.block_label(&s4.nontrivial_block().unwrap().unwrap()),
        a6.block_label(&w)
    ))
}

fn c07_maximality() -> Outcome {
    let a5 = alternating_group(5).map_err(err)?;
    let h = a5.subgroup_where(|i| (0..2).all(|x| a5.element(i).apply(x) < 2));
    ensure!(h.order() == 6, "(S2xS3)∩A5 has order {}", h.order());
    ensure!(a5.is_maximal(&h).map_err(err)?, "(S2xS3)∩A5 not maximal");

    let s6 = symmetric_group(6).map_err(err)?;
    let h = s6.subgroup_where(|i| (0..3).all(|x| s6.element(i).apply(x) < 3));
    ensure!(h.order() == 36, "S3xS3 has order {}", h.order());
    ensure!(!s6.is_maximal(&h).map_err(err)?, "S3xS3 maximal in S6");
    // Stabilizer of the partition {{1,2,3},{4,5,6}}.
    let half = |p: &Permutation, x: usize| p.apply(x) / 3;
    let stab = s6.subgroup_where(|i| {
        let p = s6.element(i);
        half(p, 0) == half(p, 1) && half(p, 1) == half(p, 2)
    });
    ensure!(stab.order() == 72, "partition stabilizer order {}", stab.order());
    ensure!(h.is_subgroup_of(&stab) && stab.order() / h.order() == 2, "S3xS3 not of index 2");
    ensure!(!stab.is_whole(), "partition stabilizer is S6");
    let found = s6.intermediate_subgroup(&h).map_err(err)?.ok_or("no intermediate subgroup")?;
    ensure!(found == stab, "intermediate subgroup of order {} is not the partition stabilizer", found.order());
    Ok("(S2xS3)∩A5 maximal in A5; S3xS3 < partition stabilizer (order 72, index 2) < S6".into())
}

fn c08_class_counts() -> Outcome {
    for n in 1..=6usize {
        let s = symmetric_group(n).map_err(err)?;
        let census = cycle_type_census(&s);
        let heap = census_by_heap(n);
        let mut total = 0;
        for pi in PartitionOfN::all(n) {
            let formula = count_cycle_type(n, &pi).map_err(err)?;
            let brute = census.get(&pi.cycle_type()).copied().unwrap_or(0);
            ensure!(formula == brute, "n={n} {pi}: formula {formula} vs census {brute}");
            ensure!(
                heap.get(&pi.cycle_type().display_parts()).copied().unwrap_or(0) == formula,
                "n={n} {pi}: heap census"
            );
            ensure!(formula * centralizer_order(&pi).map_err(err)? == factorial(n as u64), "n={n} {pi}: product");
            total += formula;
        }
        ensure!(total == factorial(n as u64), "n={n}: total {total}");
        for class in s.conjugacy_classes() {
            let rep = s.element(class.representative());
            let z = s.centralizer(rep).map_err(err)?;
            ensure!(class.len() * z.order() == s.order(), "n={n}: class equation for {rep}");
        }
    }
    let s4 = symmetric_group(4).map_err(err)?;
    let z = s4.centralizer(&parse_cycles("(1 2)(3 4)", 4).map_err(err)?).map_err(err)?;
    ensure!(z.order() == 8, "|Z_(12)(34)| = {}", z.order());
    Ok("formula = census for all partitions, n <= 6; sums n!; |class|*|Z| = n!; |Z_(1 2)(3 4)| = 8".into())
}

fn c09_centralizer_structure() -> Outcome {
    let s5 = symmetric_group(5).map_err(err)?;
    for g in s5.elements() {
        let r = verify_centralizer_structure(5, g).map_err(err)?;
        ensure!(r.all_hold(), "g = {g}: {r:?}");
    }
    Ok("section, surjectivity and kernel replayed for all 120 elements of S5".into())
}

fn c10_klein_sylow() -> Outcome {
    let r = verify_klein_sylow().map_err(err)?;
    ensure!(r.all_hold(), "{r:?}");
    let a4 = alternating_group(4).map_err(err)?;
    let order4 = subgroups_of_order(&a4, 4);
    let v: Vec<Permutation> = klein_vierergruppe(&a4, [0, 1, 2, 3]).map_err(err)?.elements().cloned().collect();
    ensure!(order4.len() == 1 && order4.contains(&v), "A4 has {} subgroups of order 4", order4.len());
    Ok("A4 has exactly one subgroup of order 4, equal to V; types () and (2,2); V normal in S4".into())
}

fn c11_block_stabilizer() -> Outcome {
    let natural = Action::natural(alternating_group(5).map_err(err)?);
    let pairs = Action::on_subsets(symmetric_group(4).map_err(err)?, 2).map_err(err)?;
    let mut summary = Vec::new();
    for (action, a) in [(&natural, 0), (&pairs, 0)] {
        let c = action.block_stabilizer_equiv(a).map_err(err)?;
        ensure!(c.is_bijection(), "{}: maps not mutually inverse", action.descriptor());
        ensure!(c.preserves_order(), "{}: order not preserved", action.descriptor());
        let blocks: Vec<Vec<usize>> = c.blocks.iter().map(|b| b.points().to_vec()).collect();
        ensure!(blocks == blocks_by_subset_scan(action, a), "{}: block list incomplete", action.descriptor());
        let g = action.group();
        let stab: BTreeSet<Permutation> = action.stabilizer(a).map_err(err)?.elements().cloned().collect();
        let oracle = overgroups_by_coset_unions(g, &stab);
        let got: BTreeSet<Vec<Permutation>> = c.subgroups.iter().map(|s| s.elements().cloned().collect()).collect();
        ensure!(got == oracle, "{}: overgroup list incomplete", action.descriptor());
        summary.push(format!("{}: {} pairs", action.descriptor(), c.blocks.len()));
    }
    Ok(summary.join("; "))
}

fn c12_property_corpus() -> Outcome {
    use rand::SeedableRng;
    let corpus = random_actions(0x5eed, 60);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xC0FFEE);
    let mut violations = Vec::new();
    for (i, action) in corpus.iter().enumerate() {
        let tag = format!("#{i} {} |G|={}", action.descriptor(), action.group().order());
        let primitive = action.is_primitive();
        if action.points() >= 2 && action.is_two_transitive() && !primitive {
            violations.push(format!("{tag}: 2-transitive but not primitive"));
        }
        if primitive && !action.is_quasiprimitive() {
            violations.push(format!("{tag}: primitive but not quasiprimitive"));
        }
        for n in action.group().normal_subgroups() {
            let mut seen = BTreeSet::new();
            for x in 0..action.points() {
                if seen.contains(&x) {
                    continue;
                }
                let orbit = action.orbit_of_subgroup(&n, x).map_err(err)?;
                seen.extend(orbit.iter().copied());
                if !action.is_block(&orbit) {
                    violations.push(format!("{tag}: orbit of normal subgroup is not a block"));
                }
            }
        }
        for x in 0..action.points() {
            let orbit = action.orbit(x).map_err(err)?;
            let stab = action.stabilizer(x).map_err(err)?;
            if orbit.len() * stab.order() != action.group().order() {
                violations.push(format!("{tag}: orbit-stabilizer fails at {x}"));
            }
        }
        let n = action.group().degree();
        for _ in 0..5 {
            let p = random_permutation(&mut rng, n);
            let q = random_permutation(&mut rng, n);
            if (&p * &q).sign() != p.sign() * q.sign() {
                violations.push(format!("{tag}: sign not multiplicative"));
            }
            if parse_cycles(&p.to_string(), n).ok() != Some(p.clone()) {
                violations.push(format!("{tag}: round trip fails for {p}"));
            }
        }
    }
    ensure!(violations.is_empty(), "{} violations: {:?}", violations.len(), &violations[..violations.len().min(5)]);
    ensure!(corpus.len() >= 50, "corpus too small");
    Ok(format!("{} seeded actions, zero violations", corpus.len()))
}

fn c13_generation() -> Outcome {
    for n in 4..=7 {
        ensure!(verify_generation(n, Family::ThreeCycle).map_err(err)?, "3-cycles do not generate A{n}");
    }
    for n in 5..=6 {
        ensure!(verify_generation(n, Family::Klein).map_err(err)?, "V(x) do not generate A{n}");
    }
    let at4 = permgrp::alternating::generated_by_family(4, Family::Klein).map_err(err)?;
    let a4 = alternating_group(4).map_err(err)?;
    let v: Vec<Permutation> = klein_vierergruppe(&a4, [0, 1, 2, 3]).map_err(err)?.elements().cloned().collect();
    ensure!(at4.elements() == v.as_slice(), "V(x) at n=4 generate a group of order {}", at4.order());
    Ok("3-cycles generate A_n (n=4..7); V(x) generate A5, A6 and only V at n=4".into())
}

fn c14_equivariant_transfer() -> Outcome {
    let g = alternating_group(5).map_err(err)?;
    let four = Action::on_subsets(g.clone(), 4).map_err(err)?;
    let one = Action::on_subsets(g, 1).map_err(err)?;
    let f = EquivariantMap::complement(&four, &one).map_err(err)?;
    let r = f.transfer_report();
    ensure!(r.equivariant && r.isomorphism, "complement map not an equivariant isomorphism");
    ensure!(r.verdicts_agree && r.source.primitive, "{r:?}");
    ensure!(ActionVerdicts::of(&four) == ActionVerdicts::of(&one), "direct verdicts differ");
    Ok("complement X[4] -> X[1] for A5 equivariant; both sides primitive".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 14] = [
        ("01 group sizes", c01_group_sizes),
        ("02 simplicity", c02_simplicity),
        ("03 normal subgroups of S5", c03_normal_subgroups_s5),
        ("04 commutators", c04_commutators),
        ("05 iwasawa instantiations", c05_iwasawa),
        ("06 primitivity matrix", c06_primitivity),
        ("07 maximality", c07_maximality),
        ("08 class counts", c08_class_counts),
        ("09 centralizer structure", c09_centralizer_structure),
        ("10 klein/sylow", c10_klein_sylow),
        ("11 block-stabilizer equivalence", c11_block_stabilizer),
        ("12 property corpus", c12_property_corpus),
        ("13 generation", c13_generation),
        ("14 equivariant transfer", c14_equivariant_transfer),
    ];
    let mut failed = 0;
    let start = Instant::now();
    for (name, check) in criteria {
        let t = Instant::now();
        match check() {
            Ok(evidence) => println!("PASS {name} ({} ms): {evidence}", t.elapsed().as_millis()),
            Err(why) => {
                failed += 1;
                println!("FAIL {name} ({} ms): {why}", t.elapsed().as_millis());
            }
        }
    }
    println!("{} / {} criteria passed in {} ms", criteria.len() - failed, criteria.len(), start.elapsed().as_millis());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
