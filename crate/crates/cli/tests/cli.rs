use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_siegel-dim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn compute_proven_and_formal() {
    let o = run(&["compute", "--d1", "6", "--d2", "1", "--k", "10", "--j", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "15 (proven, k>=5)\n");

    let o = run(&["compute", "--d1", "6", "--d2", "1", "--k", "1", "--j", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-1 (formal, k<=4)\n");
}

#[test]
fn compute_breakdown_lists_fifteen_terms() {
    let o = run(&[
        "compute",
        "--d1",
        "6",
        "--d2",
        "1",
        "--k",
        "5",
        "--j",
        "0",
        "--breakdown",
    ]);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1 + 15 + 1);
    assert!(out.contains("H1 = 35/72"));
    assert!(out.contains("I3 = -1/3"));
    assert!(out.ends_with("total = 0/1\n"));
}

#[test]
fn invalid_levels_exit_2() {
    let o = run(&["compute", "--d1", "4", "--d2", "1", "--k", "5", "--j", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("D not squarefree"));

    let o = run(&["table", "--d1", "3", "--d2", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("odd ramification"));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(run(&["compute", "--d1", "x"]).status.code(), Some(64));
    assert_eq!(
        run(&["table", "--d1", "6", "--d2", "1", "--k", "9..2"])
            .status
            .code(),
        Some(64)
    );
    assert_eq!(
        run(&["table", "--d1", "6", "--d2", "1", "--format", "xml"])
            .status
            .code(),
        Some(64)
    );
    assert_eq!(
        run(&["crosscheck", "--pmax", "2", "--kmax", "4"])
            .status
            .code(),
        Some(64)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn table_csv_rows() {
    let o = run(&[
        "table", "--d1", "1", "--d2", "15", "--k", "5..5", "--j", "0..0", "--format", "csv",
    ]);
    assert_eq!(stdout(&o), "d1,d2,k,j,dim,validity\n1,15,5,0,4,proven\n");

    let o = run(&[
        "table", "--d1", "6", "--d2", "1", "--k", "5..5", "--j", "1..1", "--format", "csv",
    ]);
    assert_eq!(stdout(&o).lines().nth(1), Some("6,1,5,1,0,proven"));
}

#[test]
fn table_latex_matches_published_layout() {
    let o = run(&[
        "table", "--d1", "6", "--d2", "1", "--k", "0..15", "--j", "0..8", "--format", "latex",
    ]);
    let out = stdout(&o);
    let body: Vec<&str> = out
        .lines()
        .filter(|l| l.ends_with("\\\\ \\hline") && !l.starts_with('$'))
        .collect();
    assert_eq!(body.len(), 5);
    assert_eq!(
        body[0],
        "0&0&-1&0&-1&2&0&4&2&8&5&15&10&25&15&34&26\\\\ \\hline"
    );
    assert_eq!(
        body[4],
        "8&-3&-2&2&7&19&27&49&67&106&131&188&223&298&346&448&514\\\\ \\hline"
    );
}

#[test]
fn formats_agree_and_are_deterministic() {
    let base = [
        "table", "--d1", "2", "--d2", "5", "--k", "0..15", "--j", "0..8",
    ];
    let with = |fmt: &str| {
        let mut args = base.to_vec();
        args.extend(["--format", fmt]);
        stdout(&run(&args))
    };
    let csv = with("csv");
    assert_eq!(csv, with("csv"));
    let csv_dims: Vec<String> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(4).unwrap().to_string())
        .collect();

    let json: Vec<serde_json::Value> = serde_json::from_str(&with("json")).unwrap();
    let json_dims: Vec<String> = json.iter().map(|c| c["dim"].to_string()).collect();
    assert_eq!(csv_dims, json_dims);

    let latex = with("latex");
    let latex_dims: Vec<String> = latex
        .lines()
        .filter(|l| l.contains('&') && !l.starts_with('$'))
        .flat_map(|l| {
            l.trim_end_matches("\\\\ \\hline")
                .split('&')
                .skip(1)
                .map(String::from)
                .collect::<Vec<_>>()
        })
        .collect();
    assert_eq!(csv_dims, latex_dims);
}

#[test]
fn verify_reports_all_cells() {
    let o = run(&["verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim_end(), "960/960 cells match");
}

#[test]
fn crosscheck_agrees_from_5_on() {
    let o = run(&["crosscheck", "--pmax", "97", "--kmax", "40"]);
    let out = stdout(&o);
    assert!(out
        .lines()
        .filter(|l| l.starts_with("mismatch"))
        .all(|l| l.starts_with("mismatch p=3 ")));
    // The closed form is not integral at p = 3, so the run as a whole fails.
    assert_eq!(o.status.code(), Some(1));
}
