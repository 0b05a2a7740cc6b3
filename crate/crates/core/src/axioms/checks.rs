use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::model::{Coalition, CoalitionMultiset, CoalitionalRanking, Individual, Permutation};
use crate::solutions::SolutionId;

use super::{AxiomInstance, Split, Verdict, Witness};

/// Largest total multiplicity of `Γ` for which DCONT* enumerates splits.
pub const DCONT_STAR_MAX_GAMMA: u64 = 6;

fn verdict_word(o: Ordering, x: &Individual, y: &Individual) -> String {
    match o {
        Ordering::Greater => format!("{x} P {y}"),
        Ordering::Less => format!("{y} P {x}"),
        Ordering::Equal => format!("{x} I {y}"),
    }
}

fn distinct_members(
    r: &CoalitionalRanking,
    x: &Individual,
    y: &Individual,
) -> Result<CoalitionalRanking> {
    if x == y {
        return Err(Error::domain(format!(
            "axioms need two distinct individuals, got {x} twice"
        )));
    }
    Ok(r.with_declared([x.clone(), y.clone()]))
}

fn require_separates(s: &Coalition, x: &Individual, y: &Individual, name: &str) -> Result<()> {
    if s.separates(x, y) {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "{name} = {s} must contain {x} and not {y}"
        )))
    }
}

fn fail(id: &SolutionId, instance: &AxiomInstance, reason: String) -> Verdict {
    Verdict::Fail {
        witness: Witness::new(id.clone(), instance.clone()),
        reason,
    }
}

/// Dispatches to the checker for the instance's axiom.
pub fn check(id: &SolutionId, instance: &AxiomInstance) -> Result<Verdict> {
    let reason = match instance {
        AxiomInstance::Nt {
            ranking,
            sigma,
            x,
            y,
        } => nt(id, ranking, sigma, x, y)?,
        AxiomInstance::Econ {
            first,
            second,
            x,
            y,
        } => econ(id, first, second, x, y)?,
        AxiomInstance::Ipp { ranking, s, x, y } => ipp(id, ranking, s, x, y)?,
        AxiomInstance::Dcont {
            ranking,
            s,
            k1,
            x,
            y,
        } => dcont(id, ranking, s, *k1, x, y)?,
        AxiomInstance::DcontStar {
            ranking,
            gamma,
            k1,
            x,
            y,
        } => {
            return match dcont_star(id, ranking, gamma, *k1, x, y)? {
                Ok(split) => Ok(Verdict::Pass { split }),
                Err(reason) => Ok(fail(id, instance, reason)),
            };
        }
        AxiomInstance::Cu { ranking, x, y } => cu(id, ranking, x, y)?,
        AxiomInstance::Can {
            ranking,
            s,
            t,
            k1,
            k2,
            x,
            y,
        } => can(id, ranking, s, t, *k1, *k2, x, y)?,
        AxiomInstance::Mon {
            ranking,
            s,
            k_hat,
            x,
            y,
        } => mon(id, ranking, s, *k_hat, x, y)?,
    };
    Ok(match reason {
        None => Verdict::pass(),
        Some(reason) => fail(id, instance, reason),
    })
}

fn nt(
    id: &SolutionId,
    r: &CoalitionalRanking,
    sigma: &Permutation,
    x: &Individual,
    y: &Individual,
) -> Result<Option<String>> {
    let r = distinct_members(r, x, y)?;
    let permuted = r.permuted(sigma)?;
    let before = id.prepare(&permuted)?;
    let after = id.prepare(&r)?;
    for (a, b) in [(x, y), (y, x)] {
        let at_permuted = before.compare(a, b)?;
        let (sa, sb) = (sigma.apply(a), sigma.apply(b));
        let at_base = after.compare(sa, sb)?;
        if at_permuted != Ordering::Less && at_base == Ordering::Less {
            return Ok(Some(format!(
                "{} at r^sigma, but {} at r with sigma({a}) = {sa}, sigma({b}) = {sb}",
                verdict_word(at_permuted, a, b),
                verdict_word(at_base, sa, sb)
            )));
        }
    }
    Ok(None)
}

fn econ(
    id: &SolutionId,
    first: &CoalitionalRanking,
    second: &CoalitionalRanking,
    x: &Individual,
    y: &Individual,
) -> Result<Option<String>> {
    if first.class_count() != second.class_count() {
        return Err(Error::domain(format!(
            "ECON needs equal class counts, got {} and {}",
            first.class_count(),
            second.class_count()
        )));
    }
    let universe: Vec<Individual> = first.universe().union(second.universe()).cloned().collect();
    let first = distinct_members(&first.with_declared(universe.iter().cloned()), x, y)?;
    let second = distinct_members(&second.with_declared(universe.iter().cloned()), x, y)?;
    let sum = first.sum(&second)?;
    let v1 = id.compare(&first, x, y)?;
    let v2 = id.compare(&second, x, y)?;
    let vs = id.compare(&sum, x, y)?;
    let explain = |clause: &str| {
        format!(
            "{clause}: {} at r1, {} at r2, {} at r1+r2",
            verdict_word(v1, x, y),
            verdict_word(v2, x, y),
            verdict_word(vs, x, y)
        )
    };
    // Seen from x with `sign = Greater`, from y with `sign = Less`.
    for sign in [Ordering::Greater, Ordering::Less] {
        let weak = |v: Ordering| v == sign || v == Ordering::Equal;
        let strict = |v: Ordering| v == sign;
        if weak(v1) && weak(v2) && !weak(vs) {
            return Ok(Some(explain("weak + weak must stay weak")));
        }
        if ((strict(v1) && weak(v2)) || (weak(v1) && strict(v2))) && !strict(vs) {
            return Ok(Some(explain("strict + weak must stay strict")));
        }
    }
    Ok(None)
}

fn ipp(
    id: &SolutionId,
    r: &CoalitionalRanking,
    s: &Coalition,
    x: &Individual,
    y: &Individual,
) -> Result<Option<String>> {
    require_separates(s, x, y, "S")?;
    let r = distinct_members(r, x, y)?.with_declared(s.members().cloned());
    let before = id.compare(&r, x, y)?;
    let after = id.compare(&r.with_coalition(s, 1)?, x, y)?;
    Ok((before != after).then(|| {
        format!(
            "{} at r but {} after adding S to the worst class",
            verdict_word(before, x, y),
            verdict_word(after, x, y)
        )
    }))
}

fn check_shift_index(r: &CoalitionalRanking, k1: usize) -> Result<()> {
    let l = r.class_count();
    if l < 2 || !(1..l).contains(&k1) {
        return Err(Error::domain(format!(
            "k1 = {k1} must lie in 1..={} (l = {l})",
            l.saturating_sub(1)
        )));
    }
    Ok(())
}

fn reversal(low: Ordering, high: Ordering) -> bool {
    low != Ordering::Equal && high == low.reverse()
}

fn dcont(
    id: &SolutionId,
    r: &CoalitionalRanking,
    s: &Coalition,
    k1: usize,
    x: &Individual,
    y: &Individual,
) -> Result<Option<String>> {
    check_shift_index(r, k1)?;
    let r = distinct_members(r, x, y)?;
    let low = id.compare(&r.with_coalition(s, k1)?, x, y)?;
    let high = id.compare(&r.with_coalition(s, k1 + 1)?, x, y)?;
    Ok(reversal(low, high).then(|| {
        format!(
            "{} with S in class {k1} but {} with S in class {}",
            verdict_word(low, x, y),
            verdict_word(high, x, y),
            k1 + 1
        )
    }))
}

/// Every sub-multiset of `gamma`, in a fixed order: multiplicities are
/// counted up like an odometer over the lexicographically sorted
/// coalitions.
fn sub_multisets(gamma: &CoalitionMultiset) -> Vec<CoalitionMultiset> {
    let entries: Vec<(&Coalition, u64)> = gamma.iter().collect();
    let mut counts = vec![0u64; entries.len()];
    let mut out = Vec::new();
    loop {
        let sub = CoalitionMultiset::from_entries(
            entries
                .iter()
                .zip(&counts)
                .filter(|(_, &n)| n > 0)
                .map(|((c, _), &n)| ((*c).clone(), n)),
        )
        .expect("sub-multiset stays within caps");
        out.push(sub);
        let mut i = 0;
        loop {
            if i == entries.len() {
                return out;
            }
            if counts[i] < entries[i].1 {
                counts[i] += 1;
                break;
            }
            counts[i] = 0;
            i += 1;
        }
    }
}

/// `Ok(Ok(split))` on pass, `Ok(Err(reason))` on failure.
fn dcont_star(
    id: &SolutionId,
    r: &CoalitionalRanking,
    gamma: &CoalitionMultiset,
    k1: usize,
    x: &Individual,
    y: &Individual,
) -> Result<std::result::Result<Option<Split>, String>> {
    check_shift_index(r, k1)?;
    if gamma.total() > DCONT_STAR_MAX_GAMMA {
        return Err(Error::resource(format!(
            "gamma holds {} coalitions, split enumeration is capped at {DCONT_STAR_MAX_GAMMA}",
            gamma.total()
        )));
    }
    let r = distinct_members(r, x, y)?;
    let low = id.compare(&r.with_added(gamma, k1)?, x, y)?;
    let high = id.compare(&r.with_added(gamma, k1 + 1)?, x, y)?;
    if !reversal(low, high) {
        return Ok(Ok(None));
    }
    for lower in sub_multisets(gamma) {
        let upper = gamma.difference(&lower);
        let split = r.with_added(&lower, k1)?.with_added(&upper, k1 + 1)?;
        if id.compare(&split, x, y)? == Ordering::Equal {
            return Ok(Ok(Some(Split { lower, upper })));
        }
    }
    Ok(Err(format!(
        "{} with gamma in class {k1}, {} with gamma in class {}, and no split gives {x} I {y}",
        verdict_word(low, x, y),
        verdict_word(high, x, y),
        k1 + 1
    )))
}

fn cu(
    id: &SolutionId,
    r: &CoalitionalRanking,
    x: &Individual,
    y: &Individual,
) -> Result<Option<String>> {
    let r = distinct_members(r, x, y)?;
    if !r.is_linear() {
        return Err(Error::domain("CU needs a linear ranking"));
    }
    if !r.is_symmetric_pair(x, y)? {
        return Err(Error::domain(format!(
            "{x} and {y} are not a symmetric pair"
        )));
    }
    let got = id.compare(&r, x, y)?;
    let reference = SolutionId::Bi.compare(&r, x, y)?;
    Ok((got != reference).then(|| {
        format!(
            "{} but the inversion score gives {}",
            verdict_word(got, x, y),
            verdict_word(reference, x, y)
        )
    }))
}

#[allow(clippy::too_many_arguments)]
fn can(
    id: &SolutionId,
    r: &CoalitionalRanking,
    s: &Coalition,
    t: &Coalition,
    k1: usize,
    k2: usize,
    x: &Individual,
    y: &Individual,
) -> Result<Option<String>> {
    require_separates(s, x, y, "S")?;
    require_separates(t, y, x, "T")?;
    let l = r.class_count();
    for (name, k) in [("k1", k1), ("k2", k2)] {
        if !(2..=l).contains(&k) {
            return Err(Error::domain(format!("{name} = {k} must lie in 2..={l}")));
        }
    }
    let r = distinct_members(r, x, y)?;
    let upper = r.with_coalition(s, k1)?.with_coalition(t, k2)?;
    let lower = r.with_coalition(s, k1 - 1)?.with_coalition(t, k2 - 1)?;
    let vu = id.compare(&upper, x, y)?;
    let vl = id.compare(&lower, x, y)?;
    Ok((vu != vl).then(|| {
        format!(
            "{} with S, T in classes {k1}, {k2} but {} in classes {}, {}",
            verdict_word(vu, x, y),
            verdict_word(vl, x, y),
            k1 - 1,
            k2 - 1
        )
    }))
}

fn mon(
    id: &SolutionId,
    r: &CoalitionalRanking,
    s: &Coalition,
    k_hat: usize,
    x: &Individual,
    y: &Individual,
) -> Result<Option<String>> {
    require_separates(s, x, y, "S")?;
    check_shift_index(r, k_hat)?;
    let r = distinct_members(r, x, y)?;
    let before = id.compare(&r.with_coalition(s, k_hat)?, x, y)?;
    let after = id.compare(&r.with_coalition(s, k_hat + 1)?, x, y)?;
    Ok(
        (before != Ordering::Less && after != Ordering::Greater).then(|| {
            format!(
                "{} with S in class {k_hat} but {} after raising S to class {}",
                verdict_word(before, x, y),
                verdict_word(after, x, y),
                k_hat + 1
            )
        }),
    )
}

/// Neutrality: `x R y` at `r^σ` implies `σ(x) R σ(y)` at `r`, for both
/// orders of the pair.
pub fn check_nt(
    id: &SolutionId,
    ranking: &CoalitionalRanking,
    sigma: &Permutation,
    x: &Individual,
    y: &Individual,
) -> Result<Verdict> {
    check(
        id,
        &AxiomInstance::Nt {
            ranking: ranking.clone(),
            sigma: sigma.clone(),
            x: x.clone(),
            y: y.clone(),
        },
    )
}

/// Equi-size consistency for `r1`, `r2` and `r1 + r2`.
pub fn check_econ(
    id: &SolutionId,
    first: &CoalitionalRanking,
    second: &CoalitionalRanking,
    x: &Individual,
    y: &Individual,
) -> Result<Verdict> {
    check(
        id,
        &AxiomInstance::Econ {
            first: first.clone(),
            second: second.clone(),
            x: x.clone(),
            y: y.clone(),
        },
    )
}

/// Adding `S ∋ x`, `S ∌ y` to the worst class keeps the `{x,y}` verdict.
pub fn check_ipp(
    id: &SolutionId,
    ranking: &CoalitionalRanking,
    s: &Coalition,
    x: &Individual,
    y: &Individual,
) -> Result<Verdict> {
    check(
        id,
        &AxiomInstance::Ipp {
            ranking: ranking.clone(),
            s: s.clone(),
            x: x.clone(),
            y: y.clone(),
        },
    )
}

/// Moving `S` from class `k1` to `k1 + 1` never reverses a strict verdict.
pub fn check_dcont(
    id: &SolutionId,
    ranking: &CoalitionalRanking,
    s: &Coalition,
    k1: usize,
    x: &Individual,
    y: &Individual,
) -> Result<Verdict> {
    check(
        id,
        &AxiomInstance::Dcont {
            ranking: ranking.clone(),
            s: s.clone(),
            k1,
            x: x.clone(),
            y: y.clone(),
        },
    )
}

/// If moving `Γ` up one class reverses the verdict, some split of `Γ`
/// across the two classes yields indifference. A pass with a true premise
/// carries that split.
pub fn check_dcont_star(
    id: &SolutionId,
    ranking: &CoalitionalRanking,
    gamma: &CoalitionMultiset,
    k1: usize,
    x: &Individual,
    y: &Individual,
) -> Result<Verdict> {
    check(
        id,
        &AxiomInstance::DcontStar {
            ranking: ranking.clone(),
            gamma: gamma.clone(),
            k1,
            x: x.clone(),
            y: y.clone(),
        },
    )
}

/// On a linear ranking with `x`, `y` symmetric, the verdict matches the
/// inversion score.
pub fn check_cu(
    id: &SolutionId,
    ranking: &CoalitionalRanking,
    x: &Individual,
    y: &Individual,
) -> Result<Verdict> {
    check(
        id,
        &AxiomInstance::Cu {
            ranking: ranking.clone(),
            x: x.clone(),
            y: y.clone(),
        },
    )
}

/// Lowering both `S` (from `k1`) and `T` (from `k2`) by one class keeps the
/// `{x,y}` verdict.
#[allow(clippy::too_many_arguments)]
pub fn check_can(
    id: &SolutionId,
    ranking: &CoalitionalRanking,
    s: &Coalition,
    t: &Coalition,
    k1: usize,
    k2: usize,
    x: &Individual,
    y: &Individual,
) -> Result<Verdict> {
    check(
        id,
        &AxiomInstance::Can {
            ranking: ranking.clone(),
            s: s.clone(),
            t: t.clone(),
            k1,
            k2,
            x: x.clone(),
            y: y.clone(),
        },
    )
}

/// Raising `S ∋ x` from class `k̂` to `k̂ + 1` turns `x R y` into `x P y`.
pub fn check_mon(
    id: &SolutionId,
    ranking: &CoalitionalRanking,
    s: &Coalition,
    k_hat: usize,
    x: &Individual,
    y: &Individual,
) -> Result<Verdict> {
    check(
        id,
        &AxiomInstance::Mon {
            ranking: ranking.clone(),
            s: s.clone(),
            k_hat,
            x: x.clone(),
            y: y.clone(),
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::id;
    use crate::solutions::TieOrder;

    fn r(s: &str) -> CoalitionalRanking {
        s.parse().unwrap()
    }

    fn c(s: &str) -> Coalition {
        s.parse().unwrap()
    }

    fn xy() -> (Individual, Individual) {
        (id("x"), id("y"))
    }

    #[test]
    fn nt_identity_and_tie_break() {
        let (x, y) = xy();
        let r2 = r("{x} {y} > {x,y}");
        let ident = Permutation::identity(r2.universe());
        assert!(check_nt(&SolutionId::B1, &r2, &ident, &x, &y)
            .unwrap()
            .is_pass());
        let swap = Permutation::swap(r2.universe(), &x, &y).unwrap();
        assert!(check_nt(&SolutionId::B1, &r2, &swap, &x, &y)
            .unwrap()
            .is_pass());
        let tb = SolutionId::B1TieBreak(TieOrder::explicit(vec![x.clone(), y.clone()]).unwrap());
        assert!(check_nt(&tb, &r2, &swap, &x, &y).unwrap().is_fail());
        assert!(check_nt(&SolutionId::Const, &r2, &swap, &x, &y)
            .unwrap()
            .is_pass());
    }

    #[test]
    fn nt_rejects_partial_permutation() {
        let (x, y) = xy();
        let ranking = r("{x} > {y} > {z}");
        let partial = Permutation::swap(&[x.clone(), y.clone()].into(), &x, &y).unwrap();
        assert!(check_nt(&SolutionId::B1, &ranking, &partial, &x, &y).is_err());
    }

    #[test]
    fn econ_counterexamples() {
        let (x, y) = xy();
        let cases = [
            (
                SolutionId::B2,
                "{x} > {y} > {y} > {z}",
                "{z} > {z} > {z} > {z}*2",
            ),
            (SolutionId::B3, "{x} > {y}*3 > {z}*3", "{z} > {z} > {z}"),
            (SolutionId::Bi, "{x} > {y}*2 > {x}", "{z}*2 > {z} > {z}"),
        ];
        for (id, a, b) in cases {
            let v = check_econ(&id, &r(a), &r(b), &x, &y).unwrap();
            assert!(v.is_fail(), "{id}");
            assert!(check_econ(&SolutionId::B1, &r(a), &r(b), &x, &y)
                .unwrap()
                .is_pass());
        }
    }

    #[test]
    fn econ_needs_equal_class_counts() {
        let (x, y) = xy();
        assert!(check_econ(&SolutionId::B1, &r("{x} > {y}"), &r("{x}"), &x, &y).is_err());
    }

    #[test]
    fn econ_buddy_pair_orientations() {
        let (x, y) = xy();
        let base = r("{x,y} > {x,y}");
        let printed = r("{x,y} > {x}");
        let reversed = r("{x} > {x,y}");
        let id = SolutionId::B1ColonConst;
        assert!(check_econ(&id, &base, &printed, &x, &y).unwrap().is_pass());
        assert!(check_econ(&id, &base, &reversed, &x, &y).unwrap().is_fail());
        assert!(check_econ(&id, &reversed, &base, &x, &y).unwrap().is_fail());
    }

    #[test]
    fn ipp_cases() {
        let (x, y) = xy();
        let r1 = r("{x,y} {z} > {x} {y}");
        let s = c("{x,z}");
        assert!(check_ipp(&SolutionId::TildeB1, &r1, &s, &x, &y)
            .unwrap()
            .is_fail());
        assert!(check_ipp(&SolutionId::B1, &r1, &s, &x, &y)
            .unwrap()
            .is_pass());
        assert!(check_ipp(&SolutionId::Const, &r1, &s, &x, &y)
            .unwrap()
            .is_pass());
        assert!(check_ipp(&SolutionId::B1, &r1, &c("{x,y}"), &x, &y).is_err());
    }

    #[test]
    fn ipp_pair_absent_from_base() {
        let (x, y) = xy();
        let base = r("{z}");
        assert!(check_ipp(&SolutionId::B1, &base, &c("{x}"), &x, &y)
            .unwrap()
            .is_pass());
    }

    #[test]
    fn dcont_cases() {
        let (x, y) = xy();
        let single = r("{x,y} > {x,y}");
        assert!(
            check_dcont(&SolutionId::B1, &single, &c("{x,y}"), 1, &x, &y)
                .unwrap()
                .is_pass()
        );
        // x3 = y3 and x2 >= y2 + 2; moving {y} from class 2 to 3 flips NWL.
        let nwl = r("{z} > {x}*2 > {z}");
        let id = SolutionId::B1ColonNwl;
        assert!(check_dcont(&id, &nwl, &c("{y}"), 2, &x, &y)
            .unwrap()
            .is_fail());
        assert!(check_dcont(&SolutionId::B1, &nwl, &c("{y}"), 2, &x, &y)
            .unwrap()
            .is_pass());
        assert!(check_dcont(&SolutionId::B1, &nwl, &c("{y}"), 3, &x, &y).is_err());
        assert!(check_dcont(&SolutionId::B1, &r("{x}"), &c("{y}"), 1, &x, &y).is_err());
    }

    #[test]
    fn dcont_star_cases() {
        let (x, y) = xy();
        let base = r("{x} > {z} > {z}");
        let gamma: CoalitionMultiset = "{y}*3".parse().unwrap();
        // y is below x with gamma in class 1 and above it in class 2.
        match check_dcont_star(&SolutionId::B1, &base, &gamma, 1, &x, &y).unwrap() {
            Verdict::Pass { split: Some(split) } => {
                assert_eq!(split.lower, "{y}".parse().unwrap());
                assert_eq!(split.upper, "{y}*2".parse().unwrap());
            }
            other => panic!("expected split, got {other:?}"),
        }
        let vacuous: CoalitionMultiset = "{z}".parse().unwrap();
        assert_eq!(
            check_dcont_star(&SolutionId::B1, &base, &vacuous, 1, &x, &y).unwrap(),
            Verdict::Pass { split: None }
        );
        let nwl = r("{z} > {x}*2 > {z}");
        let single: CoalitionMultiset = "{y}".parse().unwrap();
        let id = SolutionId::B1ColonNwl;
        assert!(check_dcont_star(&id, &nwl, &single, 2, &x, &y)
            .unwrap()
            .is_fail());
        let big: CoalitionMultiset = "{y}*7".parse().unwrap();
        assert!(matches!(
            check_dcont_star(&SolutionId::B1, &base, &big, 1, &x, &y),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn sub_multisets_enumerate_all() {
        let gamma: CoalitionMultiset = "{a}*2 {b}".parse().unwrap();
        let subs = sub_multisets(&gamma);
        assert_eq!(subs.len(), 6);
        assert!(subs[0].is_empty());
        assert_eq!(subs[5], gamma);
    }

    #[test]
    fn cu_cases() {
        let (x, y) = xy();
        let lin = r("{x} > {y}");
        assert!(check_cu(&SolutionId::Const, &lin, &x, &y)
            .unwrap()
            .is_fail());
        for id in [
            SolutionId::B1,
            SolutionId::B2,
            SolutionId::B3,
            SolutionId::Bi,
        ] {
            assert!(check_cu(&id, &lin, &x, &y).unwrap().is_pass());
        }
        assert!(check_cu(&SolutionId::B1, &r("{x} {y}"), &x, &y).is_err());
        assert!(check_cu(&SolutionId::B1, &r("{x} > {x,z}"), &x, &y).is_err());
    }

    #[test]
    fn can_cases() {
        let (x, y) = xy();
        let base = r("{x,y} > {y} > {x}");
        let (s, t) = (c("{x}"), c("{y}"));
        assert!(check_can(&SolutionId::Nwl, &base, &s, &t, 3, 2, &x, &y)
            .unwrap()
            .is_fail());
        assert!(check_can(&SolutionId::B1, &base, &s, &t, 3, 2, &x, &y)
            .unwrap()
            .is_pass());
        assert!(check_can(&SolutionId::B1, &base, &s, &t, 3, 3, &x, &y)
            .unwrap()
            .is_pass());
        assert!(check_can(&SolutionId::B1, &base, &s, &t, 1, 2, &x, &y).is_err());
        assert!(check_can(&SolutionId::B1, &base, &t, &s, 2, 2, &x, &y).is_err());
    }

    #[test]
    fn mon_cases() {
        let (x, y) = xy();
        let base = r("{x,y} > {y}");
        let s = c("{x}");
        assert!(check_mon(&SolutionId::Const, &base, &s, 1, &x, &y)
            .unwrap()
            .is_fail());
        assert!(check_mon(&SolutionId::B1, &base, &s, 1, &x, &y)
            .unwrap()
            .is_pass());
        let ahead = r("{y} > {y} > {z}");
        assert!(check_mon(&SolutionId::Const, &ahead, &s, 1, &x, &y)
            .unwrap()
            .is_fail());
        // Under B1 the premise is false here: y stays strictly ahead.
        assert!(check_mon(&SolutionId::B1, &ahead, &s, 1, &x, &y)
            .unwrap()
            .is_pass());
        assert!(check_mon(&SolutionId::B1, &base, &s, 2, &x, &y).is_err());
    }
}
