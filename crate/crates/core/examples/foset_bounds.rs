//! Upper and lower bound sets, suprema and lattice detection on small fosets.

use fuzzy_riesz::foset::{
    infimum, is_lattice, join, meet, random_lattice, supremum, upper_bound_set, validate_fuzzy_order, MembershipMatrix,
};
use fuzzy_riesz::rational::ratio;
use fuzzy_riesz::{Grade, Result};
use rand::SeedableRng;

fn main() -> Result<()> {
    let chain = MembershipMatrix::from_json(include_str!("data/chain3.json"))?;
    println!("chain valid: {}", validate_fuzzy_order(&chain).is_empty());

    let ab = chain.indices_of(&["a", "b"])?;
    let u = upper_bound_set(&chain, &ab)?;
    for (i, label) in chain.labels().iter().enumerate() {
        println!("U({{a,b}})({label}) = {}", u.grade(i));
    }
    let show = |z: Option<usize>| z.map_or("none".to_string(), |i| chain.label(i).to_string());
    println!("sup {{a,b}} = {}", show(supremum(&chain, &ab)?));
    println!("inf {{b,c}} = {}", show(infimum(&chain, &chain.indices_of(&["b", "c"])?)?));

    let mut bad = chain.clone();
    bad.set_by_label("c", "a", Grade::new(ratio(1, 2))?)?;
    let report = validate_fuzzy_order(&bad);
    for v in &report.antisymmetry_violations {
        println!("antisymmetry: mu({0}, {1}) + mu({1}, {0}) = {2}", v.x, v.y, v.sum);
    }
    println!("transitivity violations: {}", report.transitivity_violations.len());

    let diamond = MembershipMatrix::from_json(include_str!("data/diamond.json"))?;
    let (l, r) = (diamond.index_of("l")?, diamond.index_of("r")?);
    println!(
        "diamond: lattice {}, l v r = {}, l ^ r = {}",
        is_lattice(&diamond)?,
        diamond.label(join(&diamond, l, r)?.expect("join")),
        diamond.label(meet(&diamond, l, r)?.expect("meet")),
    );

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    let random = random_lattice(&mut rng, 5, &ratio(3, 5))?;
    println!("random 5-element lattice is a lattice: {}", is_lattice(&random)?);
    Ok(())
}
