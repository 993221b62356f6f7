//! Derived series, centers and submodule invariants.

use lcsa::families::{make_current, make_k, make_vir, LieSuperalgebra};
use lcsa::linalg::smith_quotient;
use lcsa::structure::{center, derived_series, derived_subalgebra, rank_one_characters};

fn main() -> lcsa::Result<()> {
    let b2 = make_current(&LieSuperalgebra::b2())?;
    for alg in [&b2, &make_vir(), &make_k(2)] {
        let s = derived_series(alg, 6)?;
        println!("{:8} derived ranks {:?}: {}", alg.name, s.ranks, s.verdict);
    }

    let k4 = make_k(4);
    let d = derived_subalgebra(&k4);
    let q = smith_quotient(&d.hnf);
    let torsion: Vec<String> = q.torsion.iter().map(|p| p.to_string()).collect();
    println!(
        "K4' has rank {}; K4/K4' free rank {}, torsion [{}]",
        d.rank(),
        q.free_rank,
        torsion.join(", ")
    );

    let c = center(&make_current(&LieSuperalgebra::sl2_plus_center())?, None);
    println!("center of Cur(sl2 + C) has rank {}", c.submodule.rank());

    let ch = rank_one_characters(&b2);
    println!(
        "rank-one characters of Cur b2: L rank {}, L0 rank {}",
        ch.l_rank, ch.l0_rank
    );
    Ok(())
}
