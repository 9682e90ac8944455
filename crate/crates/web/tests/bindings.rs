use serde_json::Value;
use wirtlab_web::{curve_json, quotient_json, verify_json};

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn curve_points_and_stats() {
    let v = parse(&curve_json(3, 2, 100).unwrap());
    assert_eq!(v["points"].as_array().unwrap().len(), 101);
    assert_eq!(v["stats"]["cusps"], 5);
    assert!(curve_json(4, 2, 10).is_err(), "k and l must be coprime");
}

#[test]
fn quotient_has_diagram_and_arcs() {
    let v = parse(&quotient_json(2).unwrap());
    assert!(v["diagram"].as_str().unwrap().starts_with("diagram\n"));
    assert_eq!(v["events"].as_array().unwrap().len(), 3);
    assert!(v["arcs"].as_array().unwrap().len() >= 3);
}

#[test]
fn verify_reports_profiles() {
    let v = parse(&verify_json(3).unwrap());
    assert_eq!(v["equal"], true);
    assert!(verify_json(1).is_err());
}
