use std::process::{Command, Output};

use adjalg_cli::report::AnalysisReport;

fn adjalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adjalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn eigcount_of_k4_is_two() {
    let out = adjalg(&["eigcount", "gen:complete(4)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2\n");
}

#[test]
fn kronecker_report_has_five_basis_polynomials() {
    let out = adjalg(&["analyze", "gen:kronecker(complete(2),triangular(4))", "--json"]);
    assert!(out.status.success());
    let report = AnalysisReport::from_json(&stdout(&out)).unwrap();
    assert_eq!(report.schema, "1");
    assert_eq!(report.eigenvalue_count, 5);
    assert!(report.standard_basis.closed);
    let polys: Vec<&str> = report
        .standard_basis
        .elements
        .iter()
        .map(|e| e.polynomial.pretty.as_str())
        .collect();
    assert_eq!(
        polys,
        ["1", "t", "−1/32·t⁴ + 5/8·t² − 1", "1/16·t⁴ − 3/4·t²", "1/8·t³ − 3/2·t"]
    );
    assert_eq!(
        report.standard_basis.elements[2].polynomial.coefficients,
        ["-1/1", "0/1", "5/8", "0/1", "-1/32"]
    );
    for e in &report.standard_basis.elements {
        assert_eq!(e.rows.len(), 12);
        assert!(e.rows.iter().all(|r| r.len() == 12 && r.chars().all(|c| c == '0' || c == '1')));
    }
}

#[test]
fn chordal_ring_distance_table() {
    let out = adjalg(&["distpoly", "gen:chordal-ring-12-4"]);
    assert!(out.status.success());
    let heads: Vec<String> = stdout(&out)
        .lines()
        .map(|l| l.rsplit_once(" = ").unwrap().0.to_owned())
        .collect();
    assert_eq!(
        heads,
        [
            "A_0 = p_0",
            "A_1 = p_1 + p_2",
            "A_2 = p_3 + p_4",
            "A_3 = p_5",
            "A_4 = p_6"
        ]
    );
}

#[test]
fn analyze_agrees_with_single_commands() {
    for spec in [
        "gen:petersen",
        "gen:cycle(6)",
        "gen:chordal-ring-12-4",
        "gen:circulant(7,1,2)",
        "gen:circulant(12,2,3,4)",
    ] {
        let report = AnalysisReport::from_json(&stdout(&adjalg(&["analyze", spec, "--json"]))).unwrap();
        assert_eq!(
            stdout(&adjalg(&["eigcount", spec])).trim(),
            report.eigenvalue_count.to_string()
        );
        let drg = stdout(&adjalg(&["drg", spec]));
        assert_eq!(drg.contains("distance-regular: yes"), report.drg.is_drg, "{spec}");
        if let Some(a) = &report.drg.intersection_array {
            assert!(drg.contains(&a.display));
        }
        let basis = stdout(&adjalg(&["basis", spec]));
        assert_eq!(basis.starts_with("closed: yes"), report.standard_basis.closed, "{spec}");
        let table = stdout(&adjalg(&["distpoly", spec]));
        for (line, entry) in table.lines().zip(&report.distance_polynomials) {
            match &entry.polynomial {
                Some(p) => assert!(line.ends_with(&p.pretty), "{spec}: {line}"),
                None => assert!(line.ends_with("not a polynomial in A")),
            }
        }
        let walk = stdout(&adjalg(&["walkpart", spec]));
        let qp = &report.quotient_polynomial;
        assert!(walk.starts_with(&format!("d = {}, r = {}", qp.d, qp.r)), "{spec}");
    }
}

#[test]
fn gen_writes_a_loadable_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t4.txt");
    let out = adjalg(&["gen", "triangular", "4", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# triangular(4)\n6 12\n"));
    let out = adjalg(&["eigcount", path.to_str().unwrap()]);
    assert_eq!(stdout(&out), "3\n");

    let nested = adjalg(&["gen", "kronecker", "complete(2)", "triangular(4)"]);
    assert!(stdout(&nested).contains("\n12 24\n"));
}

#[test]
fn exit_codes_follow_failure_class() {
    let dir = tempfile::tempdir().unwrap();
    let star = dir.path().join("star.txt");
    std::fs::write(&star, "4 3\n0 1\n1 2\n1 3\n").unwrap();
    let split = dir.path().join("split.txt");
    std::fs::write(&split, "4 2\n0 1\n2 3\n").unwrap();
    let junk = dir.path().join("junk.txt");
    std::fs::write(&junk, "3 1\n0 zero\n").unwrap();
    let (star, split, junk) = (
        star.to_str().unwrap(),
        split.to_str().unwrap(),
        junk.to_str().unwrap(),
    );

    let code = |args: &[&str]| adjalg(args).status.code().unwrap();
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);
    assert_eq!(code(&[]), 1);
    assert_eq!(code(&["nonsense"]), 1);
    assert_eq!(code(&["basis"]), 1);
    assert_eq!(code(&["gen", "hypercube", "3"]), 1);
    assert_eq!(code(&["drg", junk]), 2);
    assert_eq!(code(&["drg", "/definitely/missing.txt"]), 2);
    assert_eq!(code(&["eigcount", "gen:cycle(2)"]), 2);
    assert_eq!(code(&["eigcount", "gen:circulant(6,3,6)"]), 2);
    assert_eq!(code(&["basis", star]), 3);
    assert_eq!(code(&["analyze", split]), 3);
    assert_eq!(code(&["walkpart", split]), 3);
    // Counting eigenvalues needs no connectivity.
    assert_eq!(code(&["eigcount", split]), 0);
    assert_eq!(code(&["analyze", star]), 0);
}

#[test]
fn closure_failure_is_reported_not_fatal() {
    let out = adjalg(&["basis", "gen:chordal-ring-12-4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("closed: no\nwitness: "));
}
