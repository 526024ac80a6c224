//! Convergence certificates: a harmonic sequence, a monotone sequence and its
//! supremum, limit laws, and a constant offset that never converges.

use fuzzy_riesz::convergence::{
    check_convergence_certificate, check_limit_laws, check_monotone_limit, natural_family, Certified, Decay,
    DominatingFamily, SequenceSpec, DEFAULT_HORIZON,
};
use fuzzy_riesz::rational::int;
use fuzzy_riesz::rational::ratio;
use fuzzy_riesz::{RationalVector, Result, SpaceSpec};

fn main() -> Result<()> {
    let s = SpaceSpec::pointwise(2, ratio(2, 3))?;
    let file: serde_json::Value = serde_json::from_str(include_str!("data/harmonic_certificate.json"))?;
    let c: Certified = serde_json::from_value(file)?;
    let r = c.check(&s, DEFAULT_HORIZON)?;
    println!("harmonic certificate: accepted {}, tail {:?}", r.accepted, r.inf_zero_status);

    let limit = RationalVector::from_ints(&[1, 1]);
    let up = SequenceSpec::closed_form(limit.clone(), RationalVector::from_ints(&[-1, -2]), Decay::Harmonic);
    let m = check_monotone_limit(&s, &up, &limit, DEFAULT_HORIZON)?;
    println!("increasing to {limit}: limit is the supremum {}", m.limit_is_supremum);

    let other = SequenceSpec::closed_form(
        RationalVector::from_ints(&[0, 3]),
        RationalVector::from_ints(&[4, 4]),
        Decay::Geometric { ratio: ratio(1, 2) },
    );
    let fam = natural_family(&s, &other, &RationalVector::from_ints(&[0, 3]))?.expect("closed form");
    let c2 = Certified::new(other, RationalVector::from_ints(&[0, 3]), fam);
    let c1 = Certified::new(up, limit.clone(), DominatingFamily::harmonic(RationalVector::from_ints(&[1, 2])));
    let laws = check_limit_laws(&s, &c1, &c2, &int(2), &int(-1), DEFAULT_HORIZON)?;
    println!("limit laws all accepted: {}", laws.all_accepted());

    let offset = SequenceSpec::constant(RationalVector::from_ints(&[2, 2]));
    let fam = DominatingFamily::harmonic(RationalVector::from_ints(&[1, 1]));
    let r = check_convergence_certificate(&s, &offset, &limit, &fam, 16)?;
    println!("constant offset: accepted {}, first violation at n = {:?}", r.accepted, r.first_violation());
    Ok(())
}
