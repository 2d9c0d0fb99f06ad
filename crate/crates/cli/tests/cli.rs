use std::process::Command;

const BIN: &str = env!("CARGO_BIN_EXE_parity-board");

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(BIN).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    for args in [
        &["verify-phi", "--n-max", "8"][..],
        &["verify-iota", "--n-max", "15"],
        &["verify-thm34", "--n-max", "20", "--format", "json-lines"],
        &["verify-congruences"],
    ] {
        let (c1, serial) = run(args);
        let mut parallel_args = args.to_vec();
        parallel_args.extend(["--jobs", "4"]);
        let (c4, parallel) = run(&parallel_args);
        assert_eq!((c1, c4), (0, 0));
        assert_eq!(serial, parallel, "{args:?}");
        assert_eq!(run(args).1, serial, "rerun of {args:?}");
    }
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["verify-phi", "--a-max", "x"]).0, 2);
    assert_eq!(run(&["no-such-command"]).0, 2);
    assert_eq!(run(&["verify-phi", "--delta", "1,1,1"]).0, 2);
    assert_eq!(run(&["verify-thm34", "--k-min", "2", "--k-max", "1"]).0, 2);
    assert_eq!(run(&["verify-iota", "--jobs", "0"]).0, 2);
    assert_eq!(run(&["table", "bogus"]).0, 2);
}

#[test]
fn counts_for_zero_is_a_single_row() {
    let (code, out) = run(&["table", "counts", "--n", "0"]);
    assert_eq!(code, 0);
    assert_eq!(out, "# counts n<=0\nn\tpartitions\tstrict\teven_plus_triangular\n0\t1\t1\t1\n");
}

#[test]
fn json_lines_output() {
    let (code, out) = run(&["verify-euler", "--n-max", "7", "--format", "json-lines"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].contains(r#""record":"header""#));
    assert!(lines[1].contains(r#""status":"pass""#));
    assert!(lines[1].contains(r#""checks":8"#));
}

#[test]
fn s_coefficient_table_matches_verified_counts() {
    let (code, out) = run(&["table", "s-coeffs", "--a-max", "2", "--b-max", "4", "--trunc", "10", "--format", "json-lines"]);
    assert_eq!(code, 0);
    assert!(out.lines().next().unwrap().contains("gf-coefficients"));
    for line in out.lines().skip(1) {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let (a, b, n) = (v["a"].as_u64().unwrap(), v["b"].as_u64().unwrap(), v["n"].as_u64().unwrap());
        let want = if b == 0 { 1 } else { parity_board::abseq::enumerate_s(a, b, n).len() as i64 };
        assert_eq!(v["coefficient"].as_i64().unwrap(), want, "{line}");
    }
    assert_eq!(run(&["verify-gf", "--a-max", "2", "--b-max", "4", "--trunc", "10"]).0, 0);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("parity-board-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.tsv");
    let (code, stdout) = run(&["table", "table1", "--n", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, "# iota-image n=4\npartition\tt\tdelta\n4\t0\t{1,1,1,1}\n3+1\t0\t{1,2,1}\n");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn enumerate_subcommand() {
    let (code, out) = run(&["enumerate", "abseq", "--a", "5", "--b", "1", "--n", "9"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().skip(2).count(), 3);
    assert!(out.contains("{6,6,3,3}"));
    let (_, out) = run(&["enumerate", "partitions", "--n", "6", "--even-only"]);
    let rows: Vec<&str> = out.lines().skip(2).map(|l| l.split('\t').next().unwrap()).collect();
    assert_eq!(rows, ["(6)", "(4,2)", "(2,2,2)"]);
    let (_, out) = run(&["enumerate", "strict", "--n", "7"]);
    assert_eq!(out.lines().count(), 7);
}

#[test]
fn theorem34_spot_rows() {
    let (code, out) = run(&["table", "theorem34", "--k-min", "3", "--k-max", "3", "--m-max", "6", "--n-max", "33"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "3\t6\t33\t1\t3\t3"));
}
