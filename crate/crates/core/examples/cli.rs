//! Drives the command-line front end in process, as the binary would.

fn main() {
    let calls: [&[&str]; 5] = [
        &["space", "decompose", "pointwise:2:2/3", "3,0", "2,1", "2,-1"],
        &["band", "generate", "pointwise:3:2/3", "1,0,0", "0,0,2"],
        &["band", "project", "lex:2/3", "axis", "1,1", "--json"],
        &["project", "principal", "lex:4/5", "1,0", "-3,8"],
        &["theorems", "foset", "--cases", "50"],
    ];
    for args in calls {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code =
            fuzzy_riesz::cli::run_with(std::iter::once("fuzzy-riesz").chain(args.iter().copied()), &mut out, &mut err);
        println!("$ fuzzy-riesz {}  (exit {code})", args.join(" "));
        print!("{}{}", String::from_utf8_lossy(&out), String::from_utf8_lossy(&err));
    }
}
