use std::process::{Command, Output};

fn scrolls(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scrolls"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = scrolls(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&full)).unwrap()
}

#[test]
fn enumerate_counts() {
    let rows = stdout(&["enumerate", "-n", "4", "--nondegenerate"]);
    assert_eq!(rows.lines().count(), 2);
    assert!(rows.contains("d=3 g=0") && rows.contains("d=5 g=1"));

    let rows = json(&[
        "enumerate",
        "-n",
        "5",
        "--nondegenerate",
        "--contains-dim",
        "2",
    ]);
    assert_eq!(rows.as_array().unwrap().len(), 3);

    assert_eq!(stdout(&["enumerate", "-n", "3"]).lines().count(), 1 + 1);
    let nd = json(&["enumerate", "-n", "3", "--nondegenerate"]);
    assert_eq!(nd.as_array().unwrap().len(), 1);
    assert_eq!(nd[0]["degree"], 2);
}

#[test]
fn enumerate_genus_filter_and_formats() {
    let all = json(&["enumerate", "-n", "6", "--nondegenerate"]);
    let genus_one = json(&["enumerate", "-n", "6", "--nondegenerate", "--genus", "1"]);
    let expected = all
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["genus"] == 1)
        .count();
    assert!(expected > 0);
    assert_eq!(genus_one.as_array().unwrap().len(), expected);

    let csv = stdout(&["enumerate", "-n", "4", "--nondegenerate", "--format", "csv"]);
    assert_eq!(
        csv.lines().next().unwrap(),
        "ambient,dims,span,degree,genus,h1,special,directrix"
    );
    assert_eq!(csv.lines().count(), 3);
    let md = stdout(&["enumerate", "-n", "4", "--nondegenerate", "--format", "md"]);
    assert_eq!(md.lines().count(), 4);
}

#[test]
fn enumerate_soft_cap() {
    let out = scrolls(&["enumerate", "-n", "13"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--force"));
}

#[test]
fn analyze_special_scroll() {
    let text = stdout(&["analyze", "-n", "5", "--base", "2,3,3,3,3,3"]);
    assert!(
        text.starts_with("n=5 dims=2,3,3,3,3,3  d=9 g=3 h1=1 special"),
        "{text}"
    );

    let r = json(&["analyze", "-n", "5", "--base", "3,2,3,3,3,3"]);
    assert_eq!(r["ambient"], 5);
    assert_eq!(r["dims"], serde_json::json!([2, 3, 3, 3, 3, 3]));
    assert_eq!(
        (r["degree"].as_i64(), r["genus"].as_i64()),
        (Some(9), Some(3))
    );
    assert_eq!(r["h1"], 1);
    assert_eq!(r["special"], true);
    assert_eq!(r["span"], 5);
    assert!(r["directrix"].is_array());
    assert!(r.get("tree").is_none());
}

fn check_node(node: &serde_json::Value) -> usize {
    let children = node["children"].as_array().cloned().unwrap_or_default();
    let mut joins = 0;
    if node["action"] == "join" {
        let (a, b) = (&children[0], &children[1]);
        let kappa = node["kappa"].as_i64().unwrap();
        assert!(kappa >= 1);
        assert_eq!(
            node["degree"].as_i64().unwrap(),
            a["degree"].as_i64().unwrap() + b["degree"].as_i64().unwrap()
        );
        assert_eq!(
            node["genus"].as_i64().unwrap(),
            a["genus"].as_i64().unwrap() + b["genus"].as_i64().unwrap() + kappa - 1
        );
        joins += 1;
    }
    joins + children.iter().map(check_node).sum::<usize>()
}

#[test]
fn analyze_with_tree() {
    let r = json(&["analyze", "-n", "6", "--base", "2,3,3,4,4", "--tree"]);
    assert_eq!(
        (r["degree"].as_i64(), r["genus"].as_i64()),
        (Some(7), Some(1))
    );
    let tree = &r["tree"];
    assert_eq!(tree["degree"], 7);
    assert!(check_node(tree) > 0);

    let text = stdout(&["analyze", "-n", "6", "--base", "2,3,3,4,4", "--tree"]);
    assert!(text.contains("degeneration:"));
    assert!(text.contains("kappa="));
}

#[test]
fn analyze_rejects_non_incidence_base() {
    let out = scrolls(&["analyze", "-n", "5", "--base", "2,3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("conditions=3, required 7"));

    let out = scrolls(&["analyze", "-n", "5", "--base", "2,x"]);
    assert_eq!(out.status.code(), Some(2));
    let out = scrolls(&["analyze", "-n", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

fn table_rows(id: &str) -> Vec<String> {
    stdout(&["table", "--id", id, "--format", "md"])
        .lines()
        .skip(2)
        .map(str::to_string)
        .collect()
}

#[test]
fn tables_render_with_engine_values() {
    let one = table_rows("1");
    assert_eq!(one.len(), 7);
    assert!(one.iter().all(|l| l.ends_with("| ok |")));

    let two = table_rows("2");
    assert_eq!(two.len(), 15);
    assert!(two.iter().all(|l| l.ends_with("| ok |")));

    let three = table_rows("3");
    assert_eq!(three.len(), 14);
    let flagged: Vec<&String> = three.iter().filter(|l| l.contains("DEVIATION")).collect();
    assert_eq!(flagged.len(), 1);
    assert!(flagged[0].starts_with("| R^10_3 in P^6"));
    assert!(flagged[0].contains("5 vs engine 6"));

    let rows = json(&["table", "--id", "2"]);
    assert_eq!(rows.as_array().unwrap().len(), 15);
    let csv = stdout(&["table", "--id", "1", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 8);

    assert_eq!(scrolls(&["table", "--id", "4"]).status.code(), Some(2));
}

#[test]
fn products() {
    let out = stdout(&[
        "product",
        "--grassmann",
        "1,5",
        "--specials",
        "2,3,3,3,3,3,3",
    ]);
    assert_eq!(out, "9*w(0,1)\ndegree: 9\n");
    let out = stdout(&["product", "--grassmann", "1,4", "--specials", "2,2,2,2,2,2"]);
    assert_eq!(out.lines().next(), Some("5*w(0,1)"));
    let out = stdout(&["product", "--grassmann", "1,3", "--specials", "1,1,1"]);
    assert_eq!(out, "2*w(0,2)\n");

    let r = json(&["product", "--grassmann", "2,4", "--specials", "1,1,1,1,1,1"]);
    assert_eq!(r["degree"], "5");
    assert_eq!(r["cycle"], "5*w(0,1,2)");

    let out = scrolls(&["product", "--grassmann", "1,4", "--specials", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cache_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("memo.txt");
    let path = path.to_str().unwrap();
    let args = [
        "enumerate",
        "-n",
        "7",
        "--nondegenerate",
        "--format",
        "json",
    ];

    let plain = stdout(&args);
    let mut cached = args.to_vec();
    cached.extend(["--cache", path]);
    let first = stdout(&cached);
    let memo = std::fs::read_to_string(path).unwrap();
    assert!(memo.starts_with("# scrolls-cache v1\n"));
    assert!(memo.lines().count() > 1);
    let second = stdout(&cached);
    assert_eq!(first, plain);
    assert_eq!(second, plain);

    std::fs::write(path, "not a cache\n").unwrap();
    assert_eq!(scrolls(&cached).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "-n", "8", "--format", "json", "--tree"];
    let a = stdout(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_scrolls"))
        .args(args)
        .env("RAYON_NUM_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.as_bytes(), &b.stdout[..]);
}
