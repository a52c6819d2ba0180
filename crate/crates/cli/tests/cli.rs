use serde_json::Value;
use std::path::PathBuf;
use std::process::Command;

fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfpar")).args(args).output().expect("binary runs");
    let v: Value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    assert_eq!(v["schema"], "hopfpar/1");
    (out.status.code().unwrap(), v)
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hopfpar-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

fn failed(v: &Value) -> Vec<String> {
    v["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == false).map(|c| c["name"].to_string()).collect()
}

#[test]
fn kpar_z4() {
    let (code, v) = run(&["kpar", "--group", "cyclic:4"]);
    assert_eq!(code, 0);
    assert_eq!(v["dim"], 20);
    let blocks: Vec<&str> = v["blocks"]["components"].as_array().unwrap().iter().map(|b| b["block"].as_str().unwrap()).collect();
    assert_eq!(blocks, ["Mat_1(K)", "Mat_2(K)", "Mat_1(K[G_2])", "Mat_3(K)", "Mat_1(K[G_4])"]);
}

#[test]
fn kpar_trivial_group() {
    let (code, v) = run(&["kpar", "--group", "cyclic:1"]);
    assert_eq!(code, 0);
    assert_eq!(v["dim"], 1);
}

#[test]
fn kpar_rejects_nonassociative_table() {
    let p = scratch("loop.json", r#"{"order":5,"table":[[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]}"#);
    let (code, v) = run(&["kpar", "--group-file", p.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "NotAssociative");
}

#[test]
fn rankone_nilpotent_reference() {
    let (code, v) = run(&["rankone", "--group", "cyclic:4", "--chi", "-1", "--a", "g", "--kappa", "0", "-N", "3", "--against-paper", "nilpotent8"]);
    assert_eq!(code, 0, "{:?}", failed(&v));
    assert_eq!(v["against_paper"]["discrepancies"], serde_json::json!([]));
    let dims: Vec<u64> = v["hpar"]["blocks"].as_array().unwrap().iter().map(|b| b["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, [4, 16, 16, 36, 8]);
    assert_eq!(v["apar"]["structures"]["K[t]/(t^2)"], 6);
}

#[test]
fn rankone_nonnilpotent_reference() {
    let (code, v) = run(&["rankone", "--group", "cyclic:4", "--chi", "-1", "--a", "g", "--kappa", "1", "-N", "3", "--against-paper", "nonnilpotent8"]);
    assert_eq!(code, 0, "{:?}", failed(&v));
    assert_eq!(v["apar"]["structures"]["K[t]/(t^2 + 1)"], 6);
}

#[test]
fn rankone_primitive_fourth_root() {
    let (code, v) = run(&["rankone", "--group", "cyclic:4", "--chi", "i", "--a", "g", "--kappa", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["datum"]["n"], 4);
    assert_eq!(v["hopf"]["dim"], 16);
    assert_eq!(v["hpar"]["unsupported"]["kind"], "UnsupportedPresentation");
}

#[test]
fn rankone_invalid_datum() {
    let (code, v) = run(&["rankone", "--group", "cyclic:3", "--chi", "-1", "--a", "g", "--kappa", "0"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "InvalidGroupDatum");
    let (code, v) = run(&["rankone", "--group", "cyclic:4", "--chi", "-1", "--a", "g", "--kappa", "0", "--against-paper", "nope"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "Parse");
}

#[test]
fn verify_suites() {
    let (code, v) = run(&["verify", "--suite", "all", "--max-group-order", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["suites"].as_array().unwrap().len(), 7);
    let (code, _) = run(&["verify", "--suite", "convolution"]);
    assert_eq!(code, 0);
    let (code, v) = run(&["verify", "--suite", "bogus"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "Parse");
}

#[test]
fn verify_hopf_file_and_corruption() {
    let (_, v) = run(&["rankone", "--group", "cyclic:4", "--chi", "-1", "--a", "g", "--kappa", "1", "-N", "1", "--export"]);
    let mut h = v["hopf_structure"].clone();
    let good = scratch("h.json", &h.to_string());
    let (code, _) = run(&["verify", "--hopf-file", good.to_str().unwrap()]);
    assert_eq!(code, 0);

    for e in h["mul"].as_array_mut().unwrap() {
        if e[0] == 4 && e[1] == 4 {
            e[3] = "2".into();
        }
    }
    let bad = scratch("hbad.json", &h.to_string());
    let (code, v) = run(&["verify", "--hopf-file", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    let assoc = v["suites"][0]["checks"].as_array().unwrap().iter().find(|c| c["name"] == "associativity").unwrap();
    assert_eq!(assoc["passed"], false);
    assert_eq!(assoc["witness"], "(g, x, x)");
}

#[test]
fn out_file_and_determinism() {
    let p = scratch("placeholder", "");
    let out = p.with_file_name("kpar.json");
    let args = ["kpar", "--group", "klein", "--out", out.to_str().unwrap()];
    let status = Command::new(env!("CARGO_BIN_EXE_hopfpar")).args(args).status().unwrap();
    assert!(status.success());
    let first = std::fs::read(&out).unwrap();
    Command::new(env!("CARGO_BIN_EXE_hopfpar")).args(args).status().unwrap();
    assert_eq!(first, std::fs::read(&out).unwrap());
    let v: Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(v["dim"], 20);
}
