//! Greedy, deterministic shrinking of failing instances.
//!
//! Candidate reductions are tried in a fixed order: drop a whole class,
//! drop one copy of a coalition, drop one copy from `Γ`, drop one member
//! from one copy of a ranked coalition, drop an idle individual. The first
//! candidate that still fails replaces the instance and the scan restarts. Each step strictly shrinks the instance, so the
//! loop terminates.

use crate::model::{Coalition, CoalitionalRanking};
use crate::solutions::SolutionId;

use super::generate::mentioned;
use super::{check, AxiomInstance, Witness};

/// Class indices the axiom refers to; those classes are never dropped.
fn pinned_classes(instance: &AxiomInstance) -> Vec<usize> {
    match instance {
        AxiomInstance::Ipp { .. } => vec![1],
        AxiomInstance::Dcont { k1, .. } | AxiomInstance::DcontStar { k1, .. } => vec![*k1, k1 + 1],
        AxiomInstance::Mon { k_hat, .. } => vec![*k_hat, k_hat + 1],
        AxiomInstance::Can { k1, k2, .. } => vec![k1 - 1, *k1, k2 - 1, *k2],
        _ => Vec::new(),
    }
}

/// Renumbers class indices after class `removed` disappears.
fn shift_indices(instance: &mut AxiomInstance, removed: usize) {
    let shift = |k: &mut usize| {
        if *k > removed {
            *k -= 1;
        }
    };
    match instance {
        AxiomInstance::Dcont { k1, .. } | AxiomInstance::DcontStar { k1, .. } => shift(k1),
        AxiomInstance::Mon { k_hat, .. } => shift(k_hat),
        AxiomInstance::Can { k1, k2, .. } => {
            shift(k1);
            shift(k2);
        }
        _ => {}
    }
}

fn without_class(instance: &AxiomInstance, k: usize) -> Option<AxiomInstance> {
    if pinned_classes(instance).contains(&k) {
        return None;
    }
    let mut out = instance.clone();
    for r in out.rankings_mut() {
        *r = r.without_class(k).ok()?;
    }
    shift_indices(&mut out, k);
    Some(out)
}

fn candidates(instance: &AxiomInstance) -> Vec<AxiomInstance> {
    let mut out = Vec::new();
    let l = instance.rankings()[0].class_count();
    for k in 1..=l {
        out.extend(without_class(instance, k));
    }
    for (which, r) in instance.rankings().into_iter().enumerate() {
        for (k, class) in r.indexed_classes() {
            for (c, _) in class.iter() {
                if let Ok(smaller) = r.without_coalition(c, k) {
                    let mut next = instance.clone();
                    *next.rankings_mut()[which] = smaller;
                    out.push(next);
                }
            }
        }
    }
    if let AxiomInstance::DcontStar { gamma, .. } = instance {
        for (c, _) in gamma.iter() {
            let mut next = instance.clone();
            if let AxiomInstance::DcontStar { gamma, .. } = &mut next {
                gamma.remove_one(c);
            }
            out.push(next);
        }
    }
    for (which, r) in instance.rankings().into_iter().enumerate() {
        for (k, class) in r.indexed_classes() {
            for (c, _) in class.iter() {
                for z in c.members() {
                    let smaller = Coalition::new(c.members().filter(|m| *m != z).cloned());
                    if smaller.is_empty() {
                        continue;
                    }
                    if let Some(replaced) = replace_one(r, k, c, smaller) {
                        let mut next = instance.clone();
                        *next.rankings_mut()[which] = replaced;
                        out.push(next);
                    }
                }
            }
        }
    }
    let used = mentioned(instance);
    let idle: Vec<_> = instance.rankings()[0]
        .universe()
        .iter()
        .filter(|z| !used.contains(*z))
        .cloned()
        .collect();
    for z in idle {
        let mut next = instance.clone();
        if let AxiomInstance::Nt { sigma, .. } = &mut next {
            match sigma.without_fixed_point(&z) {
                Some(smaller) => *sigma = smaller,
                None => continue,
            }
        }
        let shrunk = next
            .rankings_mut()
            .into_iter()
            .all(|r| match r.without_individual(&z) {
                Ok(smaller) => {
                    *r = smaller;
                    true
                }
                Err(_) => false,
            });
        if shrunk {
            out.push(next);
        }
    }
    out
}

/// `r` with one copy of `from` in class `k` replaced by `to`.
fn replace_one(
    r: &CoalitionalRanking,
    k: usize,
    from: &Coalition,
    to: Coalition,
) -> Option<CoalitionalRanking> {
    let mut classes = r.classes().to_vec();
    let class = &mut classes[k - 1];
    class.remove_one(from);
    class.insert(to, 1).ok()?;
    CoalitionalRanking::from_worst_first(classes, r.universe().iter().cloned()).ok()
}

fn still_fails(id: &SolutionId, instance: &AxiomInstance) -> bool {
    matches!(check(id, instance), Ok(v) if v.is_fail())
}

/// Shrinks a failing witness; returns it unchanged if it does not fail.
pub fn minimize(witness: &Witness) -> Witness {
    let id = &witness.solution;
    let mut current = witness.instance.clone();
    if !still_fails(id, &current) {
        return witness.clone();
    }
    'outer: loop {
        for candidate in candidates(&current) {
            if still_fails(id, &candidate) {
                current = candidate;
                continue 'outer;
            }
        }
        return Witness::new(id.clone(), current);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::id;

    #[test]
    fn shrinks_econ_counterexample() {
        let w = Witness::new(
            SolutionId::B2,
            AxiomInstance::Econ {
                first: "{x} {q} > {y} > {y} > {z}".parse().unwrap(),
                second: "{z} > {z} > {z} > {z}*2".parse().unwrap(),
                x: id("x"),
                y: id("y"),
            },
        );
        assert!(w.replay().unwrap().is_fail());
        let m = minimize(&w);
        assert!(m.replay().unwrap().is_fail());
        let size = |w: &Witness| -> u64 {
            w.instance
                .rankings()
                .iter()
                .map(|r| r.total_coalitions())
                .sum()
        };
        assert!(size(&m) < size(&w));
        assert_eq!(minimize(&m), m);
    }

    #[test]
    fn keeps_pinned_classes() {
        let w = Witness::new(
            SolutionId::Const,
            AxiomInstance::Mon {
                ranking: "{z} > {a} > {x,y} > {y}".parse().unwrap(),
                s: "{x}".parse().unwrap(),
                k_hat: 1,
                x: id("x"),
                y: id("y"),
            },
        );
        let m = minimize(&w);
        assert!(m.replay().unwrap().is_fail());
        match &m.instance {
            AxiomInstance::Mon { ranking, k_hat, .. } => {
                assert_eq!(*k_hat, 1);
                assert_eq!(ranking.class_count(), 2);
                assert_eq!(ranking.universe().len(), 2);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn passing_witness_is_returned_unchanged() {
        let w = Witness::new(
            SolutionId::B1,
            AxiomInstance::Cu {
                ranking: "{x} > {y}".parse().unwrap(),
                x: id("x"),
                y: id("y"),
            },
        );
        assert_eq!(minimize(&w), w);
    }
}
