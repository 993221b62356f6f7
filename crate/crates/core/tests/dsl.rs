use lcsa::conformal::{check_axioms, Algebra};
use lcsa::dsl::*;
use lcsa::families::*;
use lcsa::{Error, Scalar};

const VIR: &str =
    "# the Virasoro conformal algebra\nalgebra Vir\nbasis L even\nbracket L L = (d + 2*l) L\n";

fn families() -> Vec<Algebra> {
    let mut v = vec![
        make_vir(),
        make_current(&LieSuperalgebra::sl2()).unwrap(),
        make_current(&LieSuperalgebra::b2()).unwrap(),
    ];
    for n in 0..=3 {
        v.push(make_w(n));
    }
    for n in 1..=3 {
        v.push(make_k(n));
    }
    v.push(make_s(2, &Scalar::param("a")).unwrap().algebra);
    v.push(make_s(3, &Scalar::ratio(1, 2)).unwrap().algebra);
    v.push(make_tilde_s(2).unwrap().algebra);
    v.push(tensor_grassmann(&make_vir(), 1));
    v.push(semidirect_w_current(&LieSuperalgebra::sl2(), 1).unwrap());
    v
}

#[test]
fn vir_source_matches_family() {
    let a = parse_algebra(VIR).unwrap();
    assert_eq!(a.entries(), make_w(0).entries());
    assert!(check_axioms(&a).passed());
}

#[test]
fn empty_bracket_block_is_abelian() {
    let a = parse_algebra("algebra A\nbasis x even, y odd\n").unwrap();
    assert_eq!(a.rank(), 2);
    assert!(a.entries().iter().all(|(_, c)| c.is_zero()));
}

#[test]
fn skew_fill_and_explicit_pairs() {
    let src = "algebra B\nbasis x even, y even\nbracket x y = y\n";
    let a = parse_algebra(src).unwrap();
    assert_eq!(a.entry(1, 0), &a.entry(0, 1).neg());
    assert!(check_axioms(&a).passed());
}

#[test]
fn parse_errors_carry_positions() {
    let src = "algebra V\nbasis L even, G odd\nbracket L G = x\n";
    assert_eq!(
        parse_algebra(src).unwrap_err(),
        Error::Parse {
            line: 3,
            col: 15,
            msg: "unknown identifier 'x'".into()
        }
    );
    let parity = parse_algebra("algebra V\nbasis L even, G odd\nbracket L G = d L\n").unwrap_err();
    assert!(matches!(parity, Error::Parse { line: 3, .. }));
    let twice =
        parse_algebra("algebra V\nbasis L even\nbracket L L = L\nbracket L L = L\n").unwrap_err();
    assert!(matches!(twice, Error::Parse { line: 4, .. }));
    assert!(matches!(
        parse_algebra("basis L even\n").unwrap_err(),
        Error::Parse { .. }
    ));
    assert!(matches!(
        parse_algebra("algebra V\nbasis d even\n").unwrap_err(),
        Error::Parse {
            line: 2,
            col: 7,
            ..
        }
    ));
    assert!(matches!(
        parse_algebra("algebra V\nbasis L even\nbracket L L = L L\n").unwrap_err(),
        Error::Parse { .. }
    ));
}

#[test]
fn params_and_imaginary_unit() {
    let src = "algebra P\nparam a\nbasis L even, x even\nbracket L x = (a + i/2) d x - 3/4 l^2 x\n";
    let a = parse_algebra(src).unwrap();
    assert_eq!(a.params, vec!["a".to_string()]);
    let text = export_structure(&a);
    assert!(text.contains("\"scalar\": \"-3/4\""));
    assert_eq!(export_structure(&import_structure(&text).unwrap()), text);
}

#[test]
fn vir_export() {
    let text = export_structure(&make_vir());
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["basis"].as_array().unwrap().len(), 1);
    let b = doc["brackets"].as_array().unwrap();
    assert_eq!(b.len(), 1);
    let mut terms: Vec<(u64, u64, String, String)> = b[0]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            (
                t["dpow"].as_u64().unwrap(),
                t["lpow"].as_u64().unwrap(),
                t["label"].as_str().unwrap().to_string(),
                t["scalar"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    terms.sort();
    assert_eq!(
        terms,
        vec![
            (0, 1, "L".into(), "2".into()),
            (1, 0, "L".into(), "1".into())
        ]
    );
}

#[test]
fn k1_export_counts() {
    let doc: serde_json::Value = serde_json::from_str(&export_structure(&make_k(1))).unwrap();
    assert_eq!(doc["basis"].as_array().unwrap().len(), 2);
    assert_eq!(doc["brackets"].as_array().unwrap().len(), 3);
}

#[test]
fn round_trips_are_byte_identical() {
    for alg in families() {
        let text = export_structure(&alg);
        let back = import_structure(&text).unwrap();
        assert_eq!(export_structure(&back), text, "{}", alg.name);
        assert_eq!(back.entries(), alg.entries(), "{}", alg.name);
        let via_source = parse_algebra(&to_source(&alg)).unwrap();
        assert_eq!(export_structure(&via_source), text, "{}", alg.name);
    }
}
