//! Hermite and Smith normal forms over C[∂].

use lcsa::linalg::{hnf, smith, smith_quotient, PolyMatrix};

fn main() {
    // Rows (∂, 1), (0, ∂²) span a submodule of C[∂]² with quotient C[∂]/(∂³).
    let m = PolyMatrix::from_int_rows(&[vec![vec![0, 1], vec![1]], vec![vec![], vec![0, 0, 1]]]);
    let (h, u) = hnf(&m);
    println!("M =\n{m}\nH =\n{h}\nU =\n{u}");
    let s = smith(&m);
    let diag: Vec<String> = s.diag.iter().map(|p| p.to_string()).collect();
    println!("Smith diagonal: {}", diag.join(", "));
    let q = smith_quotient(&m);
    let torsion: Vec<String> = q.torsion.iter().map(|p| p.to_string()).collect();
    println!(
        "quotient: free rank {}, torsion [{}]",
        q.free_rank,
        torsion.join(", ")
    );
}
