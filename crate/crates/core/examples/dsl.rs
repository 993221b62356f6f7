//! Parse an algebra from source, check it and export it as JSON.

use lcsa::conformal::check_axioms;
use lcsa::dsl::{export_structure, import_structure, parse_algebra, to_source};

const SOURCE: &str = "\
# Virasoro acting on a primary field of weight h
algebra VirPrimary
param h
basis L even, G even
bracket L L = (d + 2*l) L
bracket L G = (d + h*l) G
";

fn main() -> lcsa::Result<()> {
    let alg = parse_algebra(SOURCE)?;
    println!("{}", check_axioms(&alg));
    let json = export_structure(&alg);
    print!("{json}");
    let back = import_structure(&json)?;
    assert_eq!(export_structure(&back), json);
    print!("{}", to_source(&back));
    Ok(())
}
