//! End-to-end acceptance run. Each criterion prints one `PASS`/`FAIL` line to
//! stderr (uncaptured), then the test asserts the expected outcome.

use std::io::Write;
use std::path::PathBuf;

use lcsa::conformal::{
    ad, check_axioms, check_conformal_derivation, check_module_axioms, nth_product, Algebra,
    ConformalLinearMap, Element, Module,
};
use lcsa::cpoly::{CPoly, D, LAMBDA};
use lcsa::derivations::*;
use lcsa::dsl::{export_structure, import_structure, parse_algebra, to_source};
use lcsa::families::*;
use lcsa::grassmann::{GMono, GrassmannElement, VectorFieldElement};
use lcsa::linalg::{hnf_rows, kernel, smith_quotient, PolyMatrix};
use lcsa::structure::*;
use lcsa::virasoro::{verify_physical_catalog, RowKind};
use lcsa::{Scalar, UPoly};

/// Named sub-claims of one criterion.
type Claims = Vec<(String, bool)>;

type Criterion = (&'static str, fn() -> Claims);

fn claim(v: &mut Claims, what: impl Into<String>, ok: bool) {
    v.push((what.into(), ok));
}

fn sl2() -> LieSuperalgebra {
    LieSuperalgebra::sl2()
}

fn cur_sl2() -> Algebra {
    make_current(&sl2()).unwrap()
}

fn axioms() -> Claims {
    let sym_a = Scalar::param("a");
    let mut algs = vec![cur_sl2()];
    algs.extend((0..=3).map(make_w));
    algs.extend((1..=4).map(make_k));
    algs.push(make_s(2, &sym_a).unwrap().algebra);
    algs.push(make_tilde_s(2).unwrap().algebra);
    algs.push(make_k4_prime().unwrap().algebra);
    algs.push(make_ck6(&ck6_alpha()).unwrap().algebra);
    algs.push(tensor_grassmann(&make_vir(), 1));
    algs.push(semidirect_w_current(&sl2(), 1).unwrap());
    std::thread::scope(|s| {
        let handles: Vec<_> = algs
            .iter()
            .map(|a| s.spawn(move || (a.name.clone(), check_axioms(a).passed())))
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    })
}

fn ranks() -> Claims {
    let mut v = Claims::new();
    for n in 0..=3 {
        claim(
            &mut v,
            format!("rank W{n}"),
            make_w(n).rank() == (n + 1) << n,
        );
    }
    for n in 0..=4 {
        claim(&mut v, format!("rank K{n}"), make_k(n).rank() == 1 << n);
    }
    claim(
        &mut v,
        "rank S2,a",
        make_s(2, &Scalar::param("a")).unwrap().rank() == 8,
    );
    claim(&mut v, "rank S~2", make_tilde_s(2).unwrap().rank() == 8);
    claim(
        &mut v,
        "rank CK6",
        make_ck6(&ck6_alpha()).unwrap().rank() == 32,
    );
    v
}

fn k4_decomposition() -> Claims {
    let mut v = Claims::new();
    let k4 = make_k(4);
    let d = derived_subalgebra(&k4);
    claim(&mut v, "rank K4' = 16", d.rank() == 16);
    let q = smith_quotient(&d.hnf);
    claim(
        &mut v,
        "K4/K4' is torsion with one invariant",
        q.free_rank == 0 && q.torsion.len() == 1,
    );
    let kp = make_k4_prime().unwrap();
    let nu = make_top_monomial(&k4).unwrap().element;
    claim(
        &mut v,
        "d nu in K4'",
        kp.contains(&nu.mul_poly(&UPoly::d())),
    );
    claim(&mut v, "nu not in K4'", !kp.contains(&nu));
    v
}

fn div_kernel(pre: &GrassmannElement) -> PolyMatrix {
    let rows = (0..12)
        .map(|k| {
            divergence(
                2,
                &grassmann_scale(pre, &Element::basis(12, k)).unwrap(),
                &Scalar::zero(),
            )
            .unwrap()
            .coeffs
        })
        .collect();
    kernel(&PolyMatrix::from_rows(4, rows))
}

fn divergence_claims() -> Claims {
    let mut v = Claims::new();
    let w2 = make_w(2);
    let all = (0..w2.rank()).all(|i| {
        (0..w2.rank())
            .all(|j| check_div_identity(2, &Element::basis(12, i), &Element::basis(12, j)).unwrap())
    });
    claim(&mut v, "divergence identity on W2 basis pairs", all);

    let a = Scalar::param("a");
    let s = make_s(2, &a).unwrap();
    let mut div_free = true;
    for x in &s.basis {
        for y in &s.basis {
            for n in 0..=6 {
                let p = nth_product(&w2, x, y, n).unwrap();
                div_free &= divergence(2, &p, &a)
                    .unwrap()
                    .coeffs
                    .iter()
                    .all(UPoly::is_zero);
            }
        }
    }
    claim(&mut v, "Div_a vanishes on S2,a brackets", div_free);

    let one = GrassmannElement::one(2);
    let nu = GrassmannElement::top(2);
    let k = div_kernel(&one.add(&nu).unwrap());
    let minus = one.sub(&nu).unwrap();
    let scaled = make_s(2, &Scalar::zero())
        .unwrap()
        .basis
        .iter()
        .map(|e| grassmann_scale(&minus, e).unwrap().coeffs)
        .collect();
    let st = make_tilde_s(2).unwrap();
    let built = PolyMatrix::from_rows(12, st.basis.iter().map(|e| e.coeffs.clone()).collect());
    let h = hnf_rows(&k);
    claim(
        &mut v,
        "S~2 constructions agree",
        h == hnf_rows(&PolyMatrix::from_rows(12, scaled)) && h == hnf_rows(&built),
    );
    v
}

fn catalog() -> Claims {
    let mut v = Claims::new();
    match verify_physical_catalog(6) {
        Ok(r) => {
            let control = r
                .rows
                .iter()
                .any(|row| row.algebra == "Stilde2" && row.kind == RowKind::NegativeControl);
            claim(&mut v, "S~2 negative control present", control);
            for row in r.rows {
                claim(
                    &mut v,
                    format!("{} {}", row.algebra, row.element),
                    row.passed,
                );
            }
        }
        Err(e) => claim(&mut v, e.to_string(), false),
    }
    v
}

fn modules() -> Claims {
    let mut v = Claims::new();
    for n in 0..=3 {
        claim(
            &mut v,
            format!("W{n} on C[d]⊗∧({n})"),
            check_module_axioms(&make_w(n), &wn_module(n))
                .unwrap()
                .passed(),
        );
    }
    let m = w_action_on_current(&sl2(), 1).unwrap();
    claim(
        &mut v,
        "W1 on Cur sl2⊗∧(1)",
        check_module_axioms(&make_w(1), &m).unwrap().passed(),
    );
    v
}

fn derivation_claims() -> Claims {
    let mut v = Claims::new();
    let sub = make_k4_prime().unwrap();
    let phi = restricted_ad(&sub, &k_function(&GrassmannElement::top(4))).unwrap();
    claim(
        &mut v,
        "ad nu is a conformal derivation of K4'",
        check_conformal_derivation(&sub.algebra, &phi).unwrap(),
    );
    claim(
        &mut v,
        "ad nu is outer",
        decompose_inner(&sub.algebra, &phi).unwrap().inner.is_none(),
    );

    let a = cur_sl2();
    let s = solve_cder(&a, DegreeBounds::new(1, 1));
    claim(
        &mut v,
        "cder(Cur sl2) stable at (1,1)",
        s.stable && s.verified,
    );
    let ads = (0..3).all(|i| s.contains(&ad(&a, &Element::basis(3, i)).unwrap()));
    claim(&mut v, "contains ad sl2", ads);
    let vir = ConformalLinearMap::identity(3).scale(&CPoly::linear(&[(D, 1), (LAMBDA, 1)]));
    claim(
        &mut v,
        "contains (d+λ)·id",
        s.contains(&vir) && s.module_rank == Some(4),
    );

    let o = solve_ordinary_der(&a, 2);
    claim(
        &mut v,
        "der(Cur sl2) has stable dimension 4",
        o.dim == 4 && o.stable,
    );
    v
}

/// Bound pairs for the conformal centroid of `Cur sl2`.
const CC_BOUNDS: [(u32, u32); 4] = [(0, 0), (1, 0), (0, 1), (1, 1)];

fn centroid_claims() -> Claims {
    let mut v = Claims::new();
    for n in 0..=2 {
        let alg = tensor_grassmann(&cur_sl2(), n);
        let c = solve_centroid(&alg, 1);
        claim(
            &mut v,
            format!("centroid Cur sl2⊗∧({n}) dim {}", 1 << n),
            c.dim == 1 << n && c.stable,
        );
    }
    for alg in [make_w(1), make_w(2), make_k(3)] {
        let c = solve_conformal_centroid(&alg, DegreeBounds::new(1, 1));
        claim(
            &mut v,
            format!("conformal centroid of {} is 0", alg.name),
            c.dim == 0,
        );
    }
    for (d, l) in CC_BOUNDS {
        let c = solve_conformal_centroid(&cur_sl2(), DegreeBounds::new(d, l));
        let want = ((d + 1) * (l + 1)) as usize;
        claim(
            &mut v,
            format!(
                "conformal centroid Cur sl2 at (∂≤{d}, λ≤{l}): want {want}, got {}",
                c.dim
            ),
            c.dim == want,
        );
    }
    v
}

fn solvability() -> Claims {
    let mut v = Claims::new();
    let s = derived_series(&make_current(&LieSuperalgebra::b2()).unwrap(), 5).unwrap();
    let decreasing = s.ranks.windows(2).all(|w| w[1] < w[0]);
    claim(
        &mut v,
        "Cur b2 series [2,1,0] solvable",
        s.ranks == [2, 1, 0] && s.verdict == SolvabilityVerdict::Solvable && decreasing,
    );
    let s = derived_series(&make_vir(), 5).unwrap();
    claim(
        &mut v,
        "Vir not solvable",
        s.verdict == SolvabilityVerdict::NotSolvable,
    );
    v
}

fn transitivity() -> Claims {
    let mut v = Claims::new();
    let sd = semidirect_w_current(&sl2(), 1).unwrap();
    let r = sd.rank();
    let w_part: Vec<Element> = (0..4).map(|i| Element::basis(r, i)).collect();
    claim(
        &mut v,
        "W1 projection",
        check_transitive(&Submodule::new(&sd, &w_part), 1).unwrap(),
    );
    let xd = w_vector_field(&VectorFieldElement::monomial(
        1,
        GMono::xi(1),
        1,
        Scalar::one(),
    ));
    let d1 = w_vector_field(&VectorFieldElement::monomial(
        1,
        GMono::ONE,
        1,
        Scalar::one(),
    ));
    let lift = |x: &Element| {
        let mut e = Element::zero(r);
        e.coeffs[..4].clone_from_slice(&x.coeffs);
        e
    };
    claim(
        &mut v,
        "C[d]{∂1 + ξ1∂1}",
        check_transitive(&Submodule::new(&sd, &[lift(&d1.add(&xd))]), 1).unwrap(),
    );
    claim(
        &mut v,
        "C[d]{ξ1∂1} is not",
        !check_transitive(&Submodule::new(&sd, &[lift(&xd)]), 1).unwrap(),
    );
    v
}

fn characters() -> Claims {
    let mut v = Claims::new();
    let b2 = make_current(&LieSuperalgebra::b2()).unwrap();
    let c = rank_one_characters(&b2);
    claim(
        &mut v,
        "L rank 1, L0 rank 1",
        c.l_rank == 1 && c.l0_rank == 1,
    );
    let m = Module::trivial(2, 1);
    let ell = Character {
        values: vec![UPoly::one(), UPoly::zero()],
    };
    let ok =
        twist_module(&b2, &m, &[0], &ell).map(|t| check_module_axioms(&b2, &t).unwrap().passed());
    claim(&mut v, "twist by ℓ(x)=1 is a module", ok == Ok(true));
    let bad = Character {
        values: vec![UPoly::zero(), UPoly::one()],
    };
    claim(
        &mut v,
        "ℓ(y)≠0 rejected",
        twist_module(&b2, &m, &[0], &bad).is_err(),
    );
    v
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn tooling() -> Claims {
    let mut v = Claims::new();
    let a = Scalar::param("a");
    let mut algs = vec![
        make_vir(),
        cur_sl2(),
        make_current(&LieSuperalgebra::b2()).unwrap(),
    ];
    algs.extend((0..=3).map(make_w));
    algs.extend((1..=3).map(make_k));
    algs.push(make_s(2, &a).unwrap().algebra);
    algs.push(make_s(3, &a).unwrap().algebra);
    algs.push(make_tilde_s(2).unwrap().algebra);
    algs.push(tensor_grassmann(&make_vir(), 1));
    algs.push(semidirect_w_current(&sl2(), 1).unwrap());
    for alg in &algs {
        let text = export_structure(alg);
        let json = import_structure(&text)
            .map(|b| export_structure(&b) == text)
            .unwrap_or(false);
        let src = parse_algebra(&to_source(alg))
            .map(|b| export_structure(&b) == text)
            .unwrap_or(false);
        claim(&mut v, format!("round trip {}", alg.name), json && src);
    }
    let code = |args: &[&str]| {
        let mut sink = Vec::new();
        lcsa::cli::run(
            std::iter::once("lcsa").chain(args.iter().copied()),
            &mut sink,
        )
    };
    claim(
        &mut v,
        "exit 0 on pass",
        code(&["check", &fixture("vir.lcsa")]) == 0,
    );
    claim(
        &mut v,
        "exit 1 on failed check",
        code(&["check", &fixture("vir_corrupt.lcsa")]) == 1,
    );
    claim(
        &mut v,
        "exit 2 on parse error",
        code(&["check", &fixture("parse_error.lcsa")]) == 2,
    );
    claim(&mut v, "exit 2 on usage error", code(&["check"]) == 2);
    v
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 12] = [
        ("axiom suite", axioms),
        ("rank identities", ranks),
        ("K4 decomposition", k4_decomposition),
        ("divergence", divergence_claims),
        ("physical catalog", catalog),
        ("module actions", modules),
        ("derivations", derivation_claims),
        ("centroids", centroid_claims),
        ("solvability", solvability),
        ("transitivity", transitivity),
        ("characters", characters),
        ("tooling", tooling),
    ];
    let results: Vec<Claims> = std::thread::scope(|s| {
        let hs: Vec<_> = criteria.iter().map(|(_, f)| s.spawn(f)).collect();
        hs.into_iter().map(|h| h.join().unwrap()).collect()
    });

    let mut err = std::io::stderr().lock();
    let mut failed = Vec::new();
    for (k, ((name, _), claims)) in criteria.iter().zip(&results).enumerate() {
        let bad: Vec<&str> = claims
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(w, _)| w.as_str())
            .collect();
        let status = if bad.is_empty() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            err,
            "{status} criterion {:2} {name} ({} checks){}",
            k + 1,
            claims.len(),
            if bad.is_empty() {
                String::new()
            } else {
                format!(": {}", bad.join("; "))
            }
        );
        if !bad.is_empty() {
            failed.push((k + 1, bad.into_iter().map(String::from).collect::<Vec<_>>()));
        }
    }

    // The conformal centroid of Cur sl2 is q(λ)·id only: dimension lmax+1,
    // not (dmax+1)(lmax+1). Those rows fail; anything else failing is a bug.
    let expected: Vec<String> = CC_BOUNDS
        .iter()
        .filter(|(d, _)| *d > 0)
        .map(|(d, l)| {
            format!(
                "conformal centroid Cur sl2 at (∂≤{d}, λ≤{l}): want {}, got {}",
                (d + 1) * (l + 1),
                l + 1
            )
        })
        .collect();
    assert_eq!(failed, vec![(8, expected)]);
}
