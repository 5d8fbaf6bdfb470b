use cdlat_web::{delta_table_json, lattice_json, measure_json};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn measure_s3() {
    let v = parse(measure_json("s3").unwrap());
    assert_eq!(v["order"], 6);
    assert_eq!(v["m_star"], 9);
    assert_eq!(v["cd_size"], 1);
    assert_eq!(v["delta"], 5);
    assert_eq!(v["nilpotent"], false);
}

#[test]
fn lattice_of_m27() {
    let v = parse(lattice_json("m 3 3").unwrap());
    let nodes = v["nodes"].as_array().unwrap();
    assert_eq!(nodes.len(), 10);
    assert_eq!(nodes.iter().filter(|n| n["cd"] == true).count(), 6);
    assert_eq!(v["m_star"], 81);
    let edges = v["edges"].as_array().unwrap();
    assert!(edges.iter().all(|e| e[0].as_u64() < e[1].as_u64()));
}

#[test]
fn table_keeps_going_after_a_bad_row() {
    let v = parse(delta_table_json("q 8\n\nz 3\nq 8 x c 3\n").unwrap());
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["delta"], 1);
    assert!(rows[1]["error"]
        .as_str()
        .unwrap()
        .contains("unknown family"));
    assert_eq!(rows[2]["delta"], 7);
}

#[test]
fn oversized_groups_are_refused() {
    assert!(measure_json("s 7").is_err());
    assert!(measure_json("").is_err());
}
