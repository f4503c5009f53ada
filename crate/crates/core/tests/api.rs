use tworow::alpha::alpha_table;
use tworow::immanant::{extract_a_coeffs, normalized_immanant_tree, report, two_row_from_a_coeffs, two_row_immanants, Algorithm};
use tworow::paths::{callan_forward, callan_inverse, count_restricted, LatticePath};
use tworow::suite::{run_claims, Summary, SuiteConfig};
use tworow::syt::TwoRowSyt;
use tworow::tree::{generate_trees, TreeKind};
use tworow::{Partition, RatPoly, Tree};

#[test]
fn tree_to_reconstruction() {
    for tree in generate_trees(TreeKind::Random, 9, Some(3)).unwrap().take(5) {
        let a = extract_a_coeffs(&tree);
        let table = alpha_table(9);
        for (k, imm) in two_row_immanants(&tree).iter().enumerate() {
            assert_eq!(&two_row_from_a_coeffs(&a, &table, k), imm);
        }
    }
}

#[test]
fn report_json() {
    let t = Tree::parse_edge_list("4\n1 2\n2 3\n3 4\n").unwrap();
    let shape: Partition = "3,1".parse().unwrap();
    let r = report(&t, &shape, Algorithm::Bruteforce).unwrap();
    assert_eq!(r.normalized, normalized_immanant_tree(&t, &shape).unwrap());
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["algorithm"], "bruteforce");
    assert_eq!(r.normalized.to_string(), "1 + 3q^2 + 4/3 q^4");
    let back: RatPoly = serde_json::from_value(serde_json::to_value(&r.normalized).unwrap()).unwrap();
    assert_eq!(back, r.normalized);
}

#[test]
fn paths_and_tableaux() {
    let p: LatticePath = "UDDUUUUH".parse().unwrap();
    let f = callan_forward(&p).unwrap();
    assert_eq!(callan_inverse(&f).unwrap(), p);
    let t = TwoRowSyt::from_path(&"UUDUDD".parse().unwrap()).unwrap();
    assert_eq!(t.row2(), &[3, 5, 6]);
    assert_eq!(count_restricted(8, 4, 0).unwrap(), 14.into());
}

#[test]
fn small_sweep_summary() {
    let cfg = SuiteConfig { n_max: 5, random_trees: 0, ..SuiteConfig::default() };
    let v = run_claims(&cfg, &["thm2", "lem22", "rem20"]);
    let s = Summary::of(&v);
    assert!(s.all_pass());
    assert_eq!(s.claims["thm2"].total, 125);
}
