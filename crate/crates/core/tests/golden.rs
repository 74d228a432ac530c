mod common;

use common::{read_golden, transcript, write_golden, CASES};

/// Set `UPDATE_GOLDEN=1` to rewrite the expected transcripts.
#[test]
fn cli_transcripts_match_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut mismatched = Vec::new();
    for case in CASES {
        let got = transcript(case);
        if update {
            write_golden(case.name, &got);
            continue;
        }
        match read_golden(case.name) {
            Some(expected) if expected == got => {}
            Some(expected) => {
                eprintln!(
                    "{}: expected\n{}\ngot\n{}",
                    case.name,
                    String::from_utf8_lossy(&expected),
                    String::from_utf8_lossy(&got)
                );
                mismatched.push(case.name);
            }
            None => mismatched.push(case.name),
        }
    }
    assert!(mismatched.is_empty(), "golden mismatches: {mismatched:?}");
}

#[test]
fn exit_codes() {
    let status = |name: &str| {
        let case = CASES.iter().find(|c| c.name == name).unwrap();
        let t = String::from_utf8(transcript(case)).unwrap();
        let line = t.lines().find(|l| l.starts_with("--- exit ")).unwrap().to_string();
        line["--- exit ".len()..].parse::<i32>().unwrap()
    };
    assert_eq!(status("check_sec3"), 0);
    assert_eq!(status("check_selfloop"), 1);
    assert_eq!(status("census_bad_partition"), 1);
    assert_eq!(status("oracle_bound_too_large"), 1);
    assert_eq!(status("label_count_two_edges"), 2);
    assert_eq!(status("cluster_sec3"), 0);
}
