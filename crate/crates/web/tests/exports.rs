use tworow_web::{alpha_table_value, parse_tree, path_map_value, tree_report_value};

#[test]
fn tree_specs() {
    assert_eq!(parse_tree("path:4").unwrap().to_string(), "n=4:1-2,2-3,3-4");
    assert_eq!(parse_tree("1-2, 2-3, 3-4").unwrap().to_string(), "n=4:1-2,2-3,3-4");
    assert_eq!(parse_tree("pruefer:1,1").unwrap().degrees()[1], 3);
    for bad in ["path:x", "1-2,3-4", "1:2", "path:17", "pruefer:7"] {
        assert!(parse_tree(bad).is_err(), "{bad}");
    }
}

#[test]
fn p4_report() {
    let r = tree_report_value("path:4", 1.0, 5).unwrap();
    assert_eq!(r["n"], 4);
    let two_row = r["two_row"].as_array().unwrap();
    assert_eq!(two_row.len(), 3);
    assert_eq!(two_row[1]["label"], "(3,1)");
    assert_eq!(two_row[1]["text"], "1 + 3q^2 + 4/3 q^4");
    assert_eq!(two_row[2]["text"], "1 + 2q^2 + 2q^4");
    let pts = two_row[1]["points"].as_array().unwrap();
    assert_eq!(pts.len(), 5);
    // q = 1: 1 + 3 + 4/3
    let last = pts[4].as_array().unwrap();
    assert_eq!(last[0].as_f64().unwrap(), 1.0);
    assert!((last[1].as_f64().unwrap() - 16.0 / 3.0).abs() < 1e-12);
    assert_eq!(r["hook"].as_array().unwrap().len(), 4);
    assert_eq!(r["a"][0], "1 - q^2");
    assert!(tree_report_value("path:4", -1.0, 5).is_err());
}

#[test]
fn alpha_json() {
    let t = alpha_table_value(8).unwrap();
    assert_eq!(t["rows"][2], serde_json::json!(["1", "5", "11", "13", "6"]));
    assert!(alpha_table_value(61).is_err());
}

#[test]
fn path_maps() {
    let r = path_map_value("callan", "uddUUUUH").unwrap();
    assert_eq!(r["output"]["path"], "DUUHUUUH");
    let r = path_map_value("callan-inverse", "UDDHDUUU").unwrap();
    assert_eq!(r["output"]["path"], "DUUHUDDH");
    let r = path_map_value("double", "UHU").unwrap();
    assert_eq!(r["output"]["path"], "UUDUUU");
    assert_eq!(r["input"]["riordan"], true);
    assert!(r["output"]["peaks"].as_array().unwrap().iter().all(|p| p["odd"] == false));
    assert_eq!(path_map_value("halve", "UUDUUU").unwrap()["output"]["path"], "UHU");
    assert!(path_map_value("callan", "UHU").is_err());
    assert!(path_map_value("twist", "UD").is_err());
    assert!(path_map_value("callan", "UXD").is_err());
}
