use super::{Report, Suite, SuiteConfig, Tally};
use crate::error::Result;
use crate::foset::{
    infimum_candidates, join, meet, random_constant_foset, random_lattice, random_maxmin_foset, supremum_candidates,
    validate_fuzzy_order, MembershipMatrix,
};
use crate::grade::Grade;
use crate::rational::{ratio, Rational};
use crate::sample::Sampler;

fn render(m: &MembershipMatrix) -> String {
    m.to_json().replace(['\n', ' '], "")
}

fn generate(smp: &mut Sampler, n: usize) -> Result<MembershipMatrix> {
    if smp.chance(0.5) {
        random_constant_foset(smp.rng(), n)
    } else {
        random_maxmin_foset(smp.rng(), n)
    }
}

/// Changes one entry so that some axiom breaks: a diagonal entry drops below
/// 1, a reversed grade pushes a related pair over 1, or a composite grade
/// falls below its chain.
fn mutate(smp: &mut Sampler, m: &MembershipMatrix) -> (MembershipMatrix, String) {
    let n = m.len();
    let mut out = m.clone();
    let related: Vec<(usize, usize)> =
        (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| x != y && m.precedes(x, y)).collect();
    let chains: Vec<(usize, usize, usize)> = related
        .iter()
        .flat_map(|&(x, y)| related.iter().filter(move |&&(a, _)| a == y).map(move |&(_, z)| (x, y, z)))
        .filter(|&(x, _, z)| x != z)
        .collect();
    match smp.index(3) {
        1 if !related.is_empty() => {
            let (x, y) = related[smp.index(related.len())];
            let g = m.grade(x, y).value().clone();
            let raised = (Rational::from_integer(1.into()) - &g + Rational::from_integer(1.into())) / ratio(2, 1);
            out.set(y, x, Grade::new(raised).expect("inside [0, 1]"));
            (out, format!("raised grade({y}, {x}) against grade({x}, {y}) = {g}"))
        }
        2 if !chains.is_empty() => {
            let (x, y, z) = chains[smp.index(chains.len())];
            out.set(x, z, Grade::zero());
            (out, format!("zeroed grade({x}, {z}) across {y}"))
        }
        _ => {
            let x = smp.index(n);
            out.set(x, x, Grade::new(ratio(smp.int_in(0, 9), 10)).expect("below 1"));
            (out, format!("lowered diagonal entry {x}"))
        }
    }
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..(1 << n)).map(move |mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
}

fn lattice_identities(m: &MembershipMatrix) -> Result<Option<String>> {
    let n = m.len();
    for x in 0..n {
        if meet(m, x, x)? != Some(x) || join(m, x, x)? != Some(x) {
            return Ok(Some(format!("idempotence fails at {x}")));
        }
        for y in 0..n {
            let (j, mt) = (join(m, x, y)?, meet(m, x, y)?);
            let (Some(j), Some(mt)) = (j, mt) else {
                return Ok(Some(format!("pair ({x}, {y}) has no join or meet")));
            };
            if join(m, y, x)? != Some(j) || meet(m, y, x)? != Some(mt) {
                return Ok(Some(format!("commutativity fails at ({x}, {y})")));
            }
            if meet(m, x, j)? != Some(x) || join(m, x, mt)? != Some(x) {
                return Ok(Some(format!("absorption fails at ({x}, {y})")));
            }
            let below = m.grade(x, y).above_half();
            if below != (mt == x) || below != (j == y) {
                return Ok(Some(format!(
                    "order, meet and join disagree at ({x}, {y}): grade {}, meet {mt}, join {j}",
                    m.grade(x, y)
                )));
            }
        }
    }
    Ok(None)
}

pub(super) fn run(cfg: &SuiteConfig) -> crate::suites::SuiteResult {
    let mut smp = cfg.sampler(Suite::Foset);
    let mut report = Report::new(Suite::Foset);
    let mut valid = Tally::new("foset-generated-valid");
    let mut caught = Tally::new("foset-mutation-caught");
    for _ in 0..cfg.cases {
        let n = 2 + smp.index(7);
        match generate(&mut smp, n) {
            Ok(m) => {
                valid.case(Ok(validate_fuzzy_order(&m).is_empty()), || render(&m));
                let (bad, what) = mutate(&mut smp, &m);
                caught.case(Ok(!validate_fuzzy_order(&bad).is_empty()), || format!("{what} in {}", render(&m)));
            }
            Err(e) => valid.case(Err(e), || format!("size {n}")),
        }
    }
    report.push(valid);
    report.push(caught);

    let mut unique = Tally::new("bound-uniqueness");
    let mut identities = Tally::new("lattice-identities");
    for _ in 0..cfg.cases {
        let n = 2 + smp.index(4);
        let c = [ratio(3, 5), ratio(2, 3), ratio(1, 1)][smp.index(3)].clone();
        let m = match random_lattice(smp.rng(), n, &c) {
            Ok(m) => m,
            Err(e) => {
                unique.case(Err(e), || format!("lattice of size {n}"));
                continue;
            }
        };
        let scan = || -> Result<Option<Vec<usize>>> {
            for a in subsets(n) {
                if supremum_candidates(&m, &a)?.len() != 1 || infimum_candidates(&m, &a)?.len() != 1 {
                    return Ok(Some(a));
                }
            }
            Ok(None)
        };
        match scan() {
            Ok(bad) => unique.case(Ok(bad.is_none()), || format!("subset {bad:?} of {}", render(&m))),
            Err(e) => unique.case(Err(e), || render(&m)),
        }
        match lattice_identities(&m) {
            Ok(bad) => {
                identities.case(Ok(bad.is_none()), || format!("{} in {}", bad.clone().unwrap_or_default(), render(&m)))
            }
            Err(e) => identities.case(Err(e), || render(&m)),
        }
    }
    report.push(unique);
    report.push(identities);
    report.finish()
}
