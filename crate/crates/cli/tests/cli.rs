use std::process::{Command, Output};

use specht_cli::Report;

fn specht(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specht"))
        .args(args)
        .env_remove("SPECHT_MAX_N")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_report(args: &[&str]) -> (Report, String) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let o = specht(&all);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let text = stdout(&o);
    (serde_json::from_str(&text).unwrap(), text)
}

const COMMANDS: &[&[&str]] = &[
    &[
        "--force",
        "tableaux",
        "--alpha",
        "4,3,3,2,1",
        "--beta",
        "3,3,3,2,1,1",
    ],
    &["hom", "--alpha", "4,3", "--beta", "3,3,1", "-p", "5"],
    &[
        "cp-map",
        "--alpha",
        "4,3",
        "--beta",
        "3,3,1",
        "-p",
        "5",
        "--image-of",
        "row-reading",
        "--matrix",
    ],
    &[
        "cp-map",
        "--alpha",
        "4,3",
        "--a",
        "1",
        "--b",
        "3",
        "--image-of",
        "1324/567",
    ],
    &[
        "jm-map", "--lambda", "4,3,1", "--from", "3", "--to", "1", "-p", "5", "--matrix",
    ],
    &["jm-map", "--alpha", "2,1", "--beta", "1,1,1", "-p", "3"],
    &["endo", "--lambda", "4,3,1", "-p", "5", "--restrict"],
    &["endo", "--lambda", "2,1", "-p", "3", "--induce"],
    &[
        "jantzen",
        "--beta",
        "3,3,1",
        "-p",
        "5",
        "--contain",
        "4,3",
        "--bases",
    ],
    &["verify", "--max-n", "4"],
];

#[test]
fn json_round_trips_and_is_deterministic() {
    for args in COMMANDS {
        let (report, text) = json_report(args);
        assert_eq!(report.to_json(), text, "{args:?}");
        let (_, again) = json_report(args);
        assert_eq!(again, text, "{args:?} is not deterministic");
    }
}

#[test]
fn text_output_is_deterministic() {
    for args in COMMANDS {
        let a = specht(args);
        let b = specht(args);
        assert_eq!(
            a.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&a.stderr)
        );
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn hom_example() {
    let o = specht(&["hom", "--alpha", "4,3", "--beta", "3,3,1", "-p", "5"]);
    assert!(stdout(&o).contains("dim Hom = 1"));
    let o = specht(&["hom", "--alpha", "4,3", "--beta", "3,3,1", "-p", "3"]);
    assert!(stdout(&o).contains("dim Hom = 0"));
}

#[test]
fn cp_map_row_reading_image() {
    let (report, _) = json_report(&[
        "cp-map",
        "--alpha",
        "4,3",
        "--beta",
        "3,3,1",
        "-p",
        "5",
        "--image-of",
        "row-reading",
    ]);
    let Report::CpMap(r) = report else {
        panic!("wrong report")
    };
    let img = r.image.unwrap();
    assert_eq!(img.tableau.to_string(), "1234/567");
    assert!(img
        .tabloids
        .iter()
        .all(|e| e.denominator_or_modulus == 5.into()));
    assert!(!img.expansion.unwrap().is_empty());
    assert!(!img.corrected.unwrap().is_empty());
}

#[test]
fn endo_example() {
    let (report, _) = json_report(&["endo", "--lambda", "4,3,1", "-p", "5", "--restrict"]);
    let Report::Endo(r) = report else {
        panic!("wrong report")
    };
    let blocks: Vec<(u64, usize)> = r
        .analysis
        .blocks
        .iter()
        .map(|b| (b.residue, b.multiplicity()))
        .collect();
    assert_eq!(blocks, vec![(1, 1), (3, 2)]);
    assert!(r.failure.is_none());
    let text = stdout(&specht(&[
        "endo",
        "--lambda",
        "4,3,1",
        "-p",
        "5",
        "--restrict",
    ]));
    assert!(text.contains("block res 3: dim 2"));
    assert!(text.contains("block res 1: dim 1"));
    assert!(text.contains('•'));
}

#[test]
fn jantzen_containment_instance() {
    let (report, _) = json_report(&["jantzen", "--beta", "3,3,1", "-p", "5", "--contain", "4,3"]);
    let Report::Jantzen(r) = report else {
        panic!("wrong report")
    };
    let c = r.containment.unwrap();
    assert!(c.holds() && c.observed.unwrap() >= 1);
    assert_eq!(r.filtration.dims()[0], 21);
}

#[test]
fn validation_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["hom", "--alpha", "4,3", "--beta", "3,3,1", "-p", "4"],
        &["hom", "--alpha", "4,3", "--beta", "3,3,1", "-p", "2"],
        &["hom", "--alpha", "3,4", "--beta", "3,3,1", "-p", "5"],
        &["cp-map", "--alpha", "4,3", "--beta", "3,3,1", "-p", "3"],
        &[
            "cp-map",
            "--alpha",
            "4,3",
            "--beta",
            "3,3,1",
            "-p",
            "2",
            "--allow-p2",
        ],
        &[
            "cp-map",
            "--alpha",
            "4,3",
            "--beta",
            "3,3,1",
            "--image-of",
            "1234/566",
        ],
        &["cp-map", "--alpha", "4,3", "--beta", "3,2,2"],
        &["tableaux", "--alpha", "4,3,3,2,1", "--a", "1", "--b", "6"],
        &["endo", "--lambda", "3,1", "-p", "2", "--restrict"],
        &[
            "jantzen",
            "--beta",
            "3,3,1",
            "-p",
            "2",
            "--contain",
            "4,3",
            "--allow-p2",
        ],
        &["tableaux", "--alpha", "7,6"],
        &["hom", "--alpha", "7,6", "--beta", "6,6,1", "-p", "3"],
        &["bogus"],
    ];
    for args in cases {
        let o = specht(args);
        assert_eq!(
            o.status.code(),
            Some(2),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn p2_is_allowed_for_brute_force_with_flag() {
    let o = specht(&[
        "--allow-p2",
        "hom",
        "--alpha",
        "2,1",
        "--beta",
        "1,1,1",
        "-p",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = specht(&["--allow-p2", "jantzen", "--beta", "2,1", "-p", "2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn degree_guard_and_override() {
    let small = ["tableaux", "--alpha", "4,3", "--beta", "3,3,1"];
    let o = Command::new(env!("CARGO_BIN_EXE_specht"))
        .args(small)
        .env("SPECHT_MAX_N", "6")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let big = ["tableaux", "--alpha", "7,6", "--a", "1", "--b", "3"];
    assert_eq!(
        specht(&["--force", big[0], big[1], big[2], big[3], big[4], big[5], big[6]])
            .status
            .code(),
        Some(0)
    );
}
