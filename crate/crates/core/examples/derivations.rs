//! Degree-bounded derivation and centroid spaces.

use lcsa::derivations::{
    solve_cder, solve_centroid, solve_conformal_centroid, solve_ordinary_der, DegreeBounds,
};
use lcsa::families::{make_current, make_w, tensor_grassmann, LieSuperalgebra};

fn main() -> lcsa::Result<()> {
    let cur = make_current(&LieSuperalgebra::sl2())?;
    let b = DegreeBounds::new(1, 1);
    println!("{}", solve_cder(&cur, b));
    println!("{}", solve_ordinary_der(&cur, 2));
    println!("{}", solve_conformal_centroid(&cur, b));
    println!("{}", solve_conformal_centroid(&make_w(1), b));
    for n in 0..=2 {
        let t = tensor_grassmann(&cur, n);
        println!("{}: {}", t.name, solve_centroid(&t, 1));
    }
    Ok(())
}
