#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
}

const fn case(name: &'static str, args: &'static [&'static str]) -> Case {
    Case { name, args }
}

/// Invocations over the example corpus; paths are relative to the crate root.
pub const CASES: &[Case] = &[
    case("check_sec3", &["check", "--input", "tests/corpus/sec3.txt"]),
    case("check_sec3_records", &["--format", "records", "check", "--input", "tests/corpus/sec3.txt"]),
    case("check_claw", &["check", "--input", "tests/corpus/claw.txt"]),
    case("check_selfloop", &["check", "--input", "tests/corpus/selfloop.txt"]),
    case("check_two_edges", &["check", "--input", "tests/corpus/two_edges.txt"]),
    case("check_c5", &["check", "--input", "tests/corpus/c5.txt"]),
    case("label_find_sec3", &["label", "find", "--input", "tests/corpus/sec3.txt"]),
    case("label_find_claw", &["label", "find", "--input", "tests/corpus/claw.txt"]),
    case("label_find_scrambled", &["label", "find", "--input", "tests/corpus/scrambled.txt"]),
    case("label_count_sec3", &["label", "count", "--input", "tests/corpus/sec3.txt"]),
    case("label_count_sec3_records", &["--format", "records", "label", "count", "--input", "tests/corpus/sec3.txt"]),
    case("label_count_two_edges", &["label", "count", "--input", "tests/corpus/two_edges.txt"]),
    case("label_enumerate_k3", &["label", "enumerate", "--input", "tests/corpus/k3.txt"]),
    case("label_enumerate_k3_paged", &["--page", "2", "--offset", "3", "label", "enumerate", "--input", "tests/corpus/k3.txt"]),
    case("label_enumerate_diamond_tail", &["--format", "records", "label", "enumerate", "--input", "tests/corpus/diamond_tail.txt"]),
    case("census_count_121", &["census", "count", "--partition", "1,2,1"]),
    case("census_count_n3", &["census", "count", "--n", "3"]),
    case("census_count_n12", &["--format", "records", "census", "count", "--n", "12"]),
    case("census_enumerate_121", &["census", "enumerate", "--partition", "1,2,1"]),
    case("census_enumerate_n4_records", &["--format", "records", "census", "enumerate", "--n", "4"]),
    case("census_bad_partition", &["census", "count", "--partition", "1,0,1"]),
    case("cluster_sec3", &["cluster", "--input", "tests/corpus/sec3.txt"]),
    case("cluster_sec3_records", &["--format", "records", "cluster", "--input", "tests/corpus/sec3.txt"]),
    case("cluster_path5", &["cluster", "--input", "tests/corpus/path5.txt"]),
    case("cluster_claw", &["cluster", "--input", "tests/corpus/claw.txt"]),
    case("oracle_sec3", &["oracle", "--input", "tests/corpus/sec3.txt"]),
    case("oracle_scrambled", &["oracle", "--input", "tests/corpus/scrambled.txt"]),
    case("oracle_census_6", &["oracle", "--census-n", "6"]),
    case("oracle_bound_too_large", &["--oracle-bound", "11", "oracle", "--input", "tests/corpus/sec3.txt"]),
];

pub fn crate_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    crate_root().join("tests/golden").join(format!("{name}.txt"))
}

/// Runs the binary and captures stdout, stderr and the exit status in one transcript.
pub fn transcript(case: &Case) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_closedg"))
        .current_dir(crate_root())
        .args(case.args)
        .output()
        .expect("spawn closedg");
    let mut t = format!("$ closedg {}\n", case.args.join(" ")).into_bytes();
    t.extend_from_slice(&out.stdout);
    t.extend_from_slice(format!("--- exit {}\n", out.status.code().unwrap_or(-1)).as_bytes());
    t.extend_from_slice(&out.stderr);
    t
}

pub fn read_golden(name: &str) -> Option<Vec<u8>> {
    std::fs::read(golden_path(name)).ok()
}

pub fn write_golden(name: &str, bytes: &[u8]) {
    let p = golden_path(name);
    std::fs::create_dir_all(p.parent().unwrap_or(Path::new("."))).unwrap();
    std::fs::write(p, bytes).unwrap();
}

use closed_graphs::census::{enumerate_closed_graphs, LayerPartition};
use closed_graphs::Graph;

/// Every connected graph on `1..=n` whose identity labeling is closed, via the census.
pub fn census_graphs(n: usize) -> Vec<Graph> {
    LayerPartition::all(n)
        .unwrap()
        .iter()
        .flat_map(|p| enumerate_closed_graphs(p).map(|(_, g)| g).collect::<Vec<_>>())
        .collect()
}
