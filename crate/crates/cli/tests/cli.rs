use std::collections::HashMap;
use std::path::Path;
use std::process::{Command, Output};

const FIG2: &str = "20 11 19 8 6 18 14 16 4 3 12 10 9 7 13 5 17 15 1 2\n";

fn srmq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srmq")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn kv(o: &Output) -> HashMap<String, String> {
    stdout(o)
        .lines()
        .filter_map(|l| l.split_once('='))
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

fn num(m: &HashMap<String, String>, k: &str) -> f64 {
    m[k].parse().unwrap_or_else(|_| panic!("{k} = {}", m[k]))
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn build_and_query_figure_two() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("fig2.txt");
    let index = dir.path().join("fig2.idx");
    std::fs::write(&input, FIG2).unwrap();
    let o = srmq(&["build", path(&input), "-o", path(&index), "--kv"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let r = kv(&o);
    assert_eq!(num(&r, "n"), 20.0);
    assert!(num(&r, "tree_code_body_bits") <= 31.0);
    let q = srmq(&["query", path(&index), "1", "20", "4", "8", "7", "7"]);
    assert!(q.status.success());
    assert_eq!(stdout(&q), "19\n5\n7\n");
    let bad = srmq(&["query", path(&index), "5", "4"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn space_report_adds_up_and_fixed_payload_is_zaks() {
    for codec in ["fixed", "entropy", "huffman"] {
        let o = srmq(&["build", "--random", "20000", "--seed", "3", "--codec", codec, "--kv"]);
        assert!(o.status.success());
        let r = kv(&o);
        let parts: f64 = ["micro_payload", "codebook", "directories", "macro_tiers", "lookup_tables"].iter().map(|k| num(&r, k)).sum();
        assert_eq!(parts, num(&r, "bits_total"));
        if codec == "fixed" {
            // every micro tree costs 2·size + 1 bits
            assert_eq!(num(&r, "micro_payload"), 2.0 * 20000.0 + num(&r, "micro_trees"));
        }
    }
}

#[test]
fn builds_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    for p in [&a, &b] {
        assert!(srmq(&["build", "--random", "5000", "--seed", "7", "-o", path(p)]).status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn verify_passes_on_random_and_path_inputs() {
    let o = srmq(&["verify", "--n", "256", "--trials", "20", "--kv"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(kv(&o)["result"], "pass");
    let dir = tempfile::tempdir().unwrap();
    let sorted = dir.path().join("sorted.txt");
    std::fs::write(&sorted, (1..=300).map(|i| i.to_string()).collect::<Vec<_>>().join(",")).unwrap();
    let o = srmq(&["verify", "--input", path(&sorted), "--micro-b", "2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn entropy_table_values() {
    let o = srmq(&["entropy-table", "20"]);
    assert!(o.status.success());
    let rows: Vec<Vec<f64>> = stdout(&o).lines().skip(1).map(|l| l.split('\t').map(|x| x.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 20);
    assert!((rows[1][1] - 1.0).abs() < 1e-9);
    assert!((rows[19][1] - 29.2209).abs() < 5e-4);
    let o = srmq(&["entropy-table", "10000", "--every", "5000"]);
    let last: Vec<f64> = stdout(&o).lines().last().unwrap().split('\t').map(|x| x.parse().unwrap()).collect();
    assert_eq!(last[0], 10000.0);
    assert!(last[2] > 1.70 && last[2] < 1.7364);
    assert_eq!(srmq(&["entropy-table", "1"]).status.code(), Some(1));
}

#[test]
fn encode_decode_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let code = dir.path().join("t.code");
    let shape = "((..)(.(..)))";
    assert!(srmq(&["encode", "--shape", shape, "-o", path(&code)]).status.success());
    let o = srmq(&["decode", path(&code)]);
    assert_eq!(stdout(&o).trim(), shape);
    let o = srmq(&["decode", path(&code), "--format", "left-sizes"]);
    assert_eq!(stdout(&o).trim(), "1 0 0 0");

    let input = dir.path().join("fig2.txt");
    std::fs::write(&input, FIG2).unwrap();
    let o = srmq(&["encode", path(&input), "-o", path(&code), "--kv"]);
    let r = kv(&o);
    assert!(num(&r, "body_bits") <= 31.0);
    assert_eq!(r["branch"], "subtree-size");
    assert!(srmq(&["decode", path(&code)]).status.success());

    std::fs::write(&code, [3u8, 0xff]).unwrap();
    assert_eq!(srmq(&["decode", path(&code)]).status.code(), Some(1));
}

#[test]
fn lcp_ingest_small_texts() {
    let dir = tempfile::tempdir().unwrap();
    let text = dir.path().join("t.txt");
    let out = dir.path().join("lcp.txt");
    for (s, want) in [("aaaa", "0\n1\n2\n3\n"), ("ab", "0\n0\n")] {
        std::fs::write(&text, s).unwrap();
        let o = srmq(&["lcp-ingest", path(&text), "-o", path(&out), "--checks", "50", "--kv"]);
        assert!(o.status.success());
        assert_eq!(kv(&o)["lce_mismatches"], "0");
        assert_eq!(std::fs::read_to_string(&out).unwrap(), want);
    }
    // the written array feeds straight into build
    assert!(srmq(&["build", path(&out)]).status.success());
    let body: String = (0..4000).map(|i| if (i * i) % 7 < 3 { 'a' } else { 'b' }).collect();
    std::fs::write(&text, body).unwrap();
    let o = srmq(&["lcp-ingest", path(&text), "--checks", "1000", "--kv"]);
    assert!(o.status.success());
    assert_eq!(kv(&o)["lce_mismatches"], "0");
    std::fs::write(&text, "").unwrap();
    assert_eq!(srmq(&["lcp-ingest", path(&text)]).status.code(), Some(1));
}

#[test]
fn bench_reports_operation_counts() {
    let o = srmq(&["bench", "--n", "5000", "--queries", "2000", "--kv"]);
    assert!(o.status.success());
    let r = kv(&o);
    assert!(num(&r, "ops_per_query_max_long") > 0.0);
    assert!(num(&r, "ops_per_query_max_short") > 0.0);
}

#[test]
fn usage_and_input_errors_exit_one() {
    assert_eq!(srmq(&["nonsense"]).status.code(), Some(1));
    assert_eq!(srmq(&["build"]).status.code(), Some(1));
    assert_eq!(srmq(&["--help"]).status.code(), Some(0));
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, " \n").unwrap();
    assert_eq!(srmq(&["build", path(&empty)]).status.code(), Some(1));
    let junk = dir.path().join("junk.idx");
    std::fs::write(&junk, b"not an index").unwrap();
    assert_eq!(srmq(&["query", path(&junk), "1", "1"]).status.code(), Some(1));
    assert_eq!(srmq(&["build", "--random", "10", "--micro-b", "0"]).status.code(), Some(1));
    assert_eq!(srmq(&["query", path(&junk), "1", "2", "3"]).status.code(), Some(1));
}
