use std::io::Write;
use std::process::{Command, Output};

fn kflat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kflat")).args(args).output().expect("run kflat")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, text: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("kflat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::File::create(&path).unwrap().write_all(text.as_bytes()).unwrap();
    path
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn frob_power_over_f3_drops_the_middle_monomial() {
    let o = kflat(&["frob-power", "--ideal", "x,y", "--m", "4", "--field", "Fp:3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&kflat(&["frob-power", "--ideal", "x,y", "--m", "4", "--field", "Fp:3", "--json"]));
    let basis: Vec<&str> = v["basis"].as_array().unwrap().iter().map(|b| b.as_str().unwrap()).collect();
    assert_eq!(basis, ["x^4", "x^3*y", "x*y^3", "y^4"]);
    assert!(!stdout(&o).contains("x^2*y^2"));
}

#[test]
fn check_cn_symmetric_simple_poles() {
    let path = temp_file("sym.cn", "# symmetric residues\n1 2: x2^-1\n2 1: x1^-1\n");
    let o = kflat(&["check-cn", "--n", "3", "--def", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("K-flat: yes; flat: no\n"));
}

#[test]
fn check_cn_rejects_double_pole_with_refutation() {
    let path = temp_file("double.cn", "n 3\n1 2: x2^-2\n");
    let o = kflat(&["check-cn", "--def", path.to_str().unwrap(), "--refute", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["kflat"], false);
    assert_eq!(v["verdict"], false);
    assert!(v["refutation"].as_str().unwrap().starts_with("pole"));
}

#[test]
fn check_cn_n_mismatch_is_a_usage_error() {
    let path = temp_file("n4.cn", "n 4\n");
    assert_eq!(kflat(&["check-cn", "--n", "3", "--def", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn chow_axes_n4_lists_all_mixed_monomials() {
    let v = json(&kflat(&["chow-axes", "--n", "4", "--json"]));
    let basis = v["basis"].as_array().unwrap();
    // 35 quartic monomials in four variables, minus the four pure powers
    assert_eq!(basis.len(), 31);
    assert!(basis.iter().all(|b| !["x1^4", "x2^4", "x3^4", "x4^4"].contains(&b.as_str().unwrap())));
}

#[test]
fn membership_exit_codes() {
    assert_eq!(kflat(&["member", "--ideal", "x^2,y", "--poly", "x^2*y + y"]).status.code(), Some(0));
    assert_eq!(kflat(&["member", "--ideal", "x^2,y", "--poly", "x"]).status.code(), Some(1));
}

#[test]
fn parse_errors_exit_2_with_offset() {
    let o = kflat(&["gb", "--ideal", "x + w^, y"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("byte 6"), "{err}");
    let o = kflat(&["gb", "--ideal", "x*q", "--vars", "x,y"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(kflat(&["gb"]).status.code(), Some(2));
    assert_eq!(kflat(&["gb", "--ideal", "u^-1"]).status.code(), Some(2));
}

#[test]
fn plane_and_monomial_checks() {
    let o = kflat(&["check-monomial", "--a", "2", "--c", "3", "--phi", "t^-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("flat: no; globalizes: no; C-flat: yes"));
    let o = kflat(&["check-monomial", "--a", "3", "--c", "5", "--phi", "t^-8"]);
    assert_eq!(o.status.code(), Some(1));
    let o = kflat(&["check-plane", "--def", "v^2 - u^3; 0; u"]);
    assert!(stdout(&o).contains("flat: yes; globalizes: yes; C-flat: yes"));
}

#[test]
fn semigroup_report() {
    let v = json(&kflat(&["semigroup", "--a", "3", "--c", "5", "--json"]));
    assert_eq!(v["frobenius"], 7);
    assert_eq!(v["cflat_nonglobal_dim"], 4);
    assert_eq!(v["lemma"], true);
}

#[test]
fn torsion_and_pure() {
    let v = json(&kflat(&["torsion", "--ideal", "v^2, v*u^3", "--json"]));
    assert_eq!(v["torsion_length"], 3);
    let v = json(&kflat(&["pure", "--ideal", "v^2, v*u^3", "--json"]));
    assert_eq!(v["basis"], serde_json::json!(["v"]));
}

#[test]
fn ideal_operations() {
    let v = json(&kflat(&["intersect", "--ideal", "x", "--ideal", "y", "--json"]));
    assert_eq!(v["basis"], serde_json::json!(["x*y"]));
    let v = json(&kflat(&["quotient", "--ideal", "x*y", "--by", "x", "--json"]));
    assert_eq!(v["basis"], serde_json::json!(["y"]));
    let v = json(&kflat(&["saturate", "--ideal", "x^2*y, x^3", "--by", "x", "--json"]));
    assert_eq!(v["basis"], serde_json::json!(["1"]));
    let v = json(&kflat(&["gb", "--ideal", "x^2 - y, x*y - 1", "--order", "lex", "--json"]));
    assert_eq!(v["order"], "lex");
}

#[test]
fn dsupp_and_cartier() {
    let v = json(&kflat(&["dsupp", "--modules", "x^2 + 1, x - 3", "--var", "x", "--json"]));
    assert_eq!(v["equation"], "x^3 - 3*x^2 + x - 3");
    let v = json(&kflat(&["dsupp", "--matrix", "u, 0; 0, 2u", "--json"]));
    assert_eq!(v["cartier"], true);
    let o = kflat(&["cartier", "--f", "v", "--g", "v", "--y", "u"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&kflat(&["cartier", "--example", "cusp", "--json"]));
    assert_eq!(v["torsion_length"], 3);
}

#[test]
fn chow_commands() {
    let v = json(&kflat(&["chow-hull", "--component", "2:x,y", "--component", "1:x,z", "--json"]));
    assert_eq!(v["basis"].as_array().unwrap().len(), 3);
    let o = kflat(&["chow-sample", "--component", "2:x,y", "--component", "1:x,z", "--compare"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&kflat(&["chow-pair", "--f", "x^2 - y^3", "--z", "z", "--json"]));
    assert!(v["basis"].as_array().unwrap().iter().any(|b| b == "z^2"));
    assert_eq!(kflat(&["subset-lemma", "--n", "5"]).status.code(), Some(0));
    assert_eq!(kflat(&["subset-lemma", "--n", "3", "--w", "1,1,1"]).status.code(), Some(1));
}

#[test]
fn cn_smooth_outputs() {
    let o = kflat(&["cn-smooth", "--p", "1,2,3"]);
    assert!(stdout(&o).contains("-x1*x2 + x1*t - x2*t"));
    let v = json(&kflat(&["cn-smooth", "--rank", "3", "--json"]));
    assert_eq!(v["rank"], 6);
    assert_eq!(v["rank_modulo_translations"], 3);
}

#[test]
fn identical_seeds_give_identical_output() {
    let args = ["chow-sample", "--axes", "3", "--seed", "17", "--json"];
    assert_eq!(kflat(&args).stdout, kflat(&args).stdout);
    let path = temp_file("seed.cn", "n 3\n1 2: x2^-1\n");
    let args = ["check-cn", "--def", path.to_str().unwrap(), "--refute", "--seed", "5"];
    assert_eq!(kflat(&args).stdout, kflat(&args).stdout);
}
