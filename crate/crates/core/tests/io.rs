use std::path::PathBuf;

use hopf_planar::io::{
    coefficient, hopf_constants_from_json, hopf_constants_to_json, load_hopf, load_hopf_constants, load_network,
    network_from_json, network_to_json, parse_json, scalar_from_json, scalar_to_json, IoError,
};
use hopf_planar::network::NetworkError;
use hopf_planar::{family, DeltaSign, Field, Hopf, HopfError, Scalar};
use num_traits::One;
use serde_json::json;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

#[test]
fn group_specs_match_family() {
    assert_eq!(load_hopf_constants(&data("z2.json")).unwrap(), *family::z2::<Scalar>().constants());
    assert_eq!(load_hopf_constants(&data("klein.json")).unwrap(), *family::klein::<Scalar>().constants());
    assert_eq!(load_hopf_constants(&data("s3.json")).unwrap(), *family::s3::<Scalar>().constants());
    let dual = load_hopf_constants(&data("s3_dual.json")).unwrap();
    assert_eq!(dual, family::s3::<Scalar>().constants().transposed());
    assert_eq!(load_hopf_constants(&data("z2_constants.json")).unwrap().mult, family::z2::<Scalar>().constants().mult);
}

#[test]
fn constants_roundtrip() {
    for (_, h) in family::standard::<Scalar>() {
        let v = hopf_constants_to_json(h.constants());
        let back = hopf_constants_from_json(&v, std::path::Path::new(".")).unwrap();
        assert_eq!(back, *h.constants());
    }
}

#[test]
fn hopf_file_errors_are_named() {
    let err = load_hopf::<Scalar>(&data("broken_antipode.json"), DeltaSign::Plus).unwrap_err();
    assert!(matches!(err, IoError::Hopf(HopfError::Axiom { .. })), "{err:?}");
    assert!(matches!(load_hopf_constants(&data("missing.json")), Err(IoError::Read { .. })));
    assert!(matches!(parse_json("{"), Err(IoError::Json(_))));
    let bad = json!({"type": "group", "table": [[0, 1], [1, 1]]});
    assert!(matches!(hopf_constants_from_json(&bad, ".".as_ref()), Err(IoError::Hopf(HopfError::NotAGroup { .. }))));
    assert!(matches!(hopf_constants_from_json(&json!({"type": "lie"}), ".".as_ref()), Err(IoError::Format { .. })));
}

#[test]
fn coefficients_in_every_form() {
    let h: Hopf = family::z2();
    let d = h.delta().clone();
    let half = Scalar::from_i64(1).try_div(&Scalar::from_i64(2)).unwrap();
    assert_eq!(coefficient(&json!(3), &h).unwrap(), Scalar::from_i64(3));
    assert_eq!(coefficient(&json!("1/2"), &h).unwrap(), half);
    assert_eq!(coefficient(&json!("1/2 + -1·δ"), &h).unwrap(), half.clone() - d.clone());
    assert_eq!(coefficient(&json!({"rat": [1, 2], "delta": ["-1", "1"]}), &h).unwrap(), half - d.clone());
    assert!(coefficient(&json!({"rat": [1, 0], "delta": [0, 1]}), &h).is_err());
    assert!(coefficient(&json!(true), &h).is_err());
    let x = scalar_from_json(&json!("2/3 + 5/7·δ"), 2).unwrap();
    assert_eq!(scalar_from_json(&scalar_to_json(&x), 2).unwrap(), x);
    assert_eq!(scalar_from_json(&json!(x.to_string()), 2).unwrap(), x);
    // The symbol is the positive root even when the loop value is −√n.
    let neg: Hopf = Hopf::from_constants(h.constants().clone(), DeltaSign::Minus).unwrap();
    assert_eq!(coefficient(&json!("0 + 1·δ"), &neg).unwrap(), -neg.delta().clone());
}

#[test]
fn network_files_evaluate() {
    let h: Hopf = family::z2();
    let d = h.delta().clone();
    let empty = load_network(&data("empty_loop.json"), &h).unwrap();
    assert_eq!(empty.evaluate(&h).unwrap(), d);
    assert_eq!(empty.evaluate(&h).unwrap().to_string(), "0 + 1·δ");
    // Closure of a gives δε(a) with ε(a) = 1/2 + 1/3.
    let closure = load_network(&data("closure.json"), &h).unwrap();
    let eps = Scalar::from_i64(5).try_div(&Scalar::from_i64(6)).unwrap();
    assert_eq!(closure.evaluate(&h).unwrap(), eps * &d);
    let cap = load_network(&data("h_cap.json"), &h).unwrap();
    assert_eq!(cap.evaluate(&h).unwrap(), d.clone() * &d * &d);
    let four = load_network(&data("four_boxes.json"), &h).unwrap();
    assert!(four.is_planar());
    assert_eq!(four.boxes["d"], *h.one());
}

#[test]
fn network_roundtrip_and_errors() {
    let h: Hopf = family::s3();
    let four = load_network(&data("four_boxes.json"), &family::z2::<Scalar>()).unwrap();
    let back = network_from_json(&network_to_json(&four), &family::z2::<Scalar>()).unwrap();
    assert_eq!(back, four);
    let short =
        json!({"boxes": {"a": [1, 0]}, "loops": [[{"box": "a", "side": "star"}, {"box": "a", "side": "other"}]]});
    assert!(matches!(network_from_json(&short, &h), Err(IoError::Network(NetworkError::LabelDimension { .. }))));
    let unknown = json!({"boxes": {"a": "y"}, "loops": []});
    assert!(matches!(network_from_json(&unknown, &h), Err(IoError::Format { .. })));
    let missing = json!({"boxes": {"a": "1"}, "loops": [[{"box": "a", "side": "star"}]]});
    assert!(matches!(network_from_json(&missing, &h), Err(IoError::Network(NetworkError::MissingPass(..)))));
    let shading = json!({"shading": "grey", "loops": []});
    assert!(network_from_json(&shading, &h).is_err());
    let named = json!({"shading": "minus", "boxes": {"a": "(012)"}, "loops": [[{"box": "a", "side": "other"}, {"box": "a", "side": "star"}]]});
    let n = network_from_json(&named, &h).unwrap();
    assert!(n.evaluate(&h).unwrap() == *h.delta());
    assert!(Scalar::one() != n.evaluate(&h).unwrap());
}
