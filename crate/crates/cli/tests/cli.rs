use std::io::Write as _;
use std::process::{Command, Output, Stdio};

use rand::{Rng, SeedableRng};

fn brauer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brauer"))
        .args(args)
        .output()
        .unwrap()
}

fn brauer_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_brauer"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn compose_worked_example() {
    let out = brauer(&[
        "compose",
        "3>3:[T1-T3,T2-B1,B2-B3]",
        "3>3:[T1-B3,T2-T3,B1-B2]",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "k=1, 3>3:[T1-T3,T2-B3,B1-B2]\n");
}

#[test]
fn compose_identities() {
    let out = brauer(&["compose", "2>2:[T1-B1,T2-B2]", "2>2:[T1-B1,T2-B2]"]);
    assert_eq!(stdout(&out), "k=0, 2>2:[T1-B1,T2-B2]\n");
}

#[test]
fn compose_exit_codes() {
    assert_eq!(
        code(&brauer(&[
            "compose",
            "2>3:[T1-B1,T2-B2]",
            "2>2:[T1-B1,T2-B2]"
        ])),
        3
    );
    assert_eq!(
        code(&brauer(&[
            "compose",
            "2>4:[T1-B1,T2-B2,B3-B4]",
            "2>2:[T1-B1,T2-B2]"
        ])),
        3
    );
    let out = brauer(&["compose", "2>2:[T1-B1,T2-B2", "2>2:[T1-B1,T2-B2]"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 16"));
}

#[test]
fn compose_from_stdin_json() {
    let input = r#"["2>2:[T1-B2,T2-B1]", {"top":2,"bottom":2,"pairs":[["T1","B2"],["T2","B1"]]}]"#;
    let out = brauer_stdin(&["compose", "--file", "-", "--format", "json"], input);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "{\"bottom\":2,\"loops\":0,\"pairs\":[[\"T1\",\"B1\"],[\"T2\",\"B2\"]],\"top\":2}\n"
    );
}

#[test]
fn represent_examples() {
    let out = brauer(&[
        "represent",
        "--p",
        "2",
        "3>3:[T1-T3,T2-B1,B2-B3]",
        "--format",
        "csv",
    ]);
    let csv = stdout(&out);
    assert_eq!(csv.lines().count(), 8);
    assert_eq!(csv.matches("1/1").count(), 8);

    let out = brauer(&[
        "represent",
        "--p",
        "3",
        "phi_0 o gamma_0",
        "--format",
        "csv",
    ]);
    assert_eq!(stdout(&out), "# links: k=1, 0>0:[]\n3/1\n");

    let out = brauer(&["represent", "--p", "2", "id_2", "--format", "text"]);
    assert_eq!(
        stdout(&out),
        "links: k=0, 2>2:[T1-B1,T2-B2]\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n"
    );
}

#[test]
fn represent_errors() {
    assert_eq!(
        code(&brauer(&["represent", "--p", "2", "phi_0 o phi_0"])),
        4
    );
    assert_eq!(code(&brauer(&["represent", "--p", "2", "phi_0 o"])), 2);
    assert_eq!(code(&brauer(&["represent", "--p", "0", "id_1"])), 3);
}

#[test]
fn term_and_links_give_the_same_matrix() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(5);
    for _ in 0..10 {
        let source = rng.gen_range(0..=2);
        let t = brauer_core::term::random_term(&mut rng, 4, source, 4);
        let text = t.term().to_string();
        let links = t.links().diagram.to_string();
        let loops = t.links().loops;
        let via_term = stdout(&brauer(&[
            "represent",
            "--p",
            "2",
            &text,
            "--format",
            "csv",
        ]));
        let via_links = stdout(&brauer(&[
            "represent",
            "--p",
            "2",
            &links,
            "--format",
            "csv",
        ]));
        let body = via_term.split_once('\n').unwrap().1;
        // The links diagram drops the loop factor; put it back.
        let scale = 2u64.pow(loops);
        let rescaled: String = via_links
            .lines()
            .map(|l| {
                let cells: Vec<String> = l
                    .split(',')
                    .map(|c| {
                        let n: u64 = c.trim_end_matches("/1").parse().unwrap();
                        format!("{}/1", n * scale)
                    })
                    .collect();
                cells.join(",") + "\n"
            })
            .collect();
        assert_eq!(body, rescaled, "{text}");
    }
}

#[test]
fn check_suites_pass() {
    let out = brauer(&["check", "axioms", "--max-power", "3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).ends_with("0 failed\n"));
    assert_eq!(
        code(&brauer(&[
            "check",
            "functor",
            "--max-size",
            "3",
            "--p",
            "2"
        ])),
        0
    );
    assert_eq!(
        code(&brauer(&["check", "commutant", "--n", "2", "--p", "2"])),
        0
    );
    assert_eq!(
        code(&brauer(&[
            "--sequential",
            "check",
            "axioms",
            "--max-power",
            "1",
            "--p",
            "2"
        ])),
        0
    );
    assert_eq!(code(&brauer(&["check", "functor", "--max-size", "9"])), 3);
}

#[test]
fn faithfulness_lines() {
    assert_eq!(
        stdout(&brauer(&["faithfulness", "--n", "3", "--p", "2", "--tl"])),
        "dim=5, rank=5, injective=yes\n"
    );
    assert_eq!(
        stdout(&brauer(&["faithfulness", "--n", "2", "--p", "1"])),
        "dim=3, rank=1, injective=no\n"
    );
    assert_eq!(
        stdout(&brauer(&["faithfulness", "--n", "1", "--p", "2"])),
        "dim=1, rank=1, injective=yes\n"
    );
    assert_eq!(code(&brauer(&["faithfulness", "--n", "7", "--p", "2"])), 3);
}

#[test]
fn enumerate_lists_in_order() {
    let out = stdout(&brauer(&["enumerate", "--m", "2", "--n", "2"]));
    assert_eq!(
        out,
        "2>2:[T1-T2,B1-B2]\n2>2:[T1-B1,T2-B2]\n2>2:[T1-B2,T2-B1]\n"
    );
    assert_eq!(
        stdout(&brauer(&[
            "enumerate",
            "--m",
            "3",
            "--n",
            "3",
            "--noncrossing"
        ]))
        .lines()
        .count(),
        5
    );
}

#[test]
fn render_outputs() {
    let out = stdout(&brauer(&["render", "3>3:[T1-B1,T2-B2,T3-B3]"]));
    assert_eq!(out, "*   *   *\n|   |   |\n*   *   *\n");
    let tikz = stdout(&brauer(&[
        "render",
        "--style",
        "tikz",
        "3>3:[T1-T3,T2-B1,B2-B3]",
    ]));
    assert!(tikz.contains("\\draw (T2) -- (B1);"));
    assert!(tikz.contains("(T3);") && tikz.contains("(B3);"));
    assert_eq!(code(&brauer(&["render", "3>3:[T1-T3"])), 2);
}

#[test]
fn render_is_deterministic_through_reprinting() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(9);
    for _ in 0..20 {
        let m = rng.gen_range(0..=4);
        let n = rng.gen_range(0..=2) * 2 + m % 2;
        let all = brauer_core::enumerate_diagrams(m, n);
        let d = &all[rng.gen_range(0..all.len())];
        let reprinted: brauer_core::Diagram = d.to_string().parse().unwrap();
        let a = stdout(&brauer(&["render", &d.to_string()]));
        let b = stdout(&brauer(&["render", &reprinted.to_string()]));
        assert_eq!(a, b);
    }
}

#[test]
fn eval_term_prints_type_and_links() {
    let out = stdout(&brauer(&["eval-term", "chi_1 o F(chi_0) o chi_1"]));
    assert_eq!(
        out,
        "chi_1 o (F(chi_0) o chi_1)\ntype: 3 -> 3\nlinks: k=0, 3>3:[T1-B3,T2-B2,T3-B1]\n"
    );
    let out = brauer(&["eval-term", "F chi_0"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 2"));
}
