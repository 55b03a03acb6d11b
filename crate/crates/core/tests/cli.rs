use artin_monodromy::cli::run;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("artin-monodromy").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn exit_code_matrix() {
    let cases: &[(&[&str], i32)] = &[
        (&["gamma", "stats"], 0),
        (&["gamma", "export", "--format", "dot"], 0),
        (&["gamma", "stats", "--k", "0"], 2),
        (&["lattice", "gram"], 0),
        (&["lattice", "radical"], 0),
        (&["lattice", "quotient"], 0),
        (&["lattice", "rank", "--subset", "all"], 0),
        (&["lattice", "rank", "--subset", "01x1"], 2),
        (&["rep", "check-relations"], 0),
        (&["rep", "witnesses", "--sign", "positive"], 0),
        (&["rep", "qform"], 0),
        (&["rep", "irreducible", "--seed", "0001"], 0),
        (&["rep", "parity"], 0),
        (
            &[
                "chains",
                "verify",
                "--seq",
                "0001,0101,0100,0110,0010,1010,1000",
            ],
            0,
        ),
        (
            &[
                "chains",
                "verify",
                "--seq",
                "0001,0101,0100,0110,0010,1010,1000,1001",
                "--cycle",
            ],
            0,
        ),
        (&["chains", "verify", "--seq", "0001,0011,0111"], 1),
        (&["chains", "verify", "--seq", "0001,011"], 2),
        (&["chains", "enumerate", "--length", "3", "--k", "3"], 0),
        (&["chains", "witnesses"], 0),
        (&["realize", "validate", "--pattern", "twelve"], 0),
        (&["realize", "bound", "--pattern", "chain7.json"], 0),
        (
            &[
                "realize",
                "min-genus",
                "--pattern",
                "chain7",
                "--budget",
                "3",
            ],
            0,
        ),
        (
            &["realize", "check", "--pattern", "chain7", "--genus", "2"],
            1,
        ),
        (&["realize", "check", "--pattern", "ten", "--genus", "5"], 0),
        (
            &[
                "realize",
                "min-genus",
                "--pattern",
                "twelve",
                "--node-cap",
                "100",
            ],
            3,
        ),
        (&["realize", "min-genus", "--pattern", "missing.json"], 2),
        (
            &[
                "realize",
                "min-genus",
                "--pattern",
                "eleven",
                "--arc",
                "a:b:c",
            ],
            2,
        ),
        (&["no-such-command"], 2),
    ];
    for (args, want) in cases {
        let (code, _, err) = call(args);
        assert_eq!(code, *want, "{args:?}: {err}");
    }
}

#[test]
fn chain_verify_reports_is_chain() {
    let (code, out, _) = call(&[
        "chains",
        "verify",
        "--seq",
        "0001,0101,0100,0110,0010,1010,1000",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("is_chain=true"));
}

#[test]
fn json_output_embeds_manifest() {
    let (code, out, _) = call(&[
        "--json",
        "realize",
        "min-genus",
        "--pattern",
        "chain7",
        "--budget",
        "4",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["manifest"]["command"], "realize min-genus");
    assert_eq!(
        v["manifest"]["input_hashes"]["pattern"]
            .as_str()
            .unwrap()
            .len(),
        64
    );
    assert_eq!(v["result"]["verdict"]["kind"], "exact");
    assert_eq!(v["result"]["verdict"]["genus"], 3);
    assert_eq!(v["result"]["exhausted"], true);
}

#[test]
fn manifests_identical_modulo_timing() {
    let strip = |s: String| {
        let mut v: Value = serde_json::from_str(&s).unwrap();
        v["manifest"]["wall_time_ms"] = Value::Null;
        v
    };
    let a = call(&[
        "--json",
        "realize",
        "min-genus",
        "--pattern",
        "ten",
        "--threads",
        "1",
    ]);
    let b = call(&[
        "--json",
        "realize",
        "min-genus",
        "--pattern",
        "ten",
        "--threads",
        "1",
    ]);
    assert_eq!(strip(a.1), strip(b.1));
}

#[test]
fn validate_lists_problems() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"curves":["x","y","z"],"intersections":[["x","y"],["y","x"]]}"#,
    )
    .unwrap();
    let (code, out, _) = call(&["realize", "validate", "--pattern", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.contains("unsupported multiplicity"));
    assert!(out.contains("isolated curve at z"));
}

#[test]
fn witness_file_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.json");
    let (code, _, _) = call(&[
        "realize",
        "check",
        "--pattern",
        "ten",
        "--genus",
        "5",
        "--witness-out",
        w.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let json: artin_monodromy::curves::WitnessJson =
        serde_json::from_str(&std::fs::read_to_string(&w).unwrap()).unwrap();
    let p = artin_monodromy::standard::ten_curve_pattern();
    let s = artin_monodromy::curves::RibbonStructure::from_json(&p, &json).unwrap();
    assert!(artin_monodromy::curves::surface_of(&p, &s).unwrap().genus() <= 5);
}

#[test]
fn bundled_files_match_builders() {
    use artin_monodromy::standard::*;
    assert_eq!(bundled("chain7").unwrap().unwrap(), chain7_pattern());
    assert_eq!(bundled("cycle8").unwrap().unwrap(), cycle8_pattern());
    assert_eq!(bundled("ten").unwrap().unwrap(), ten_curve_pattern());
    assert_eq!(bundled("twelve").unwrap().unwrap(), twelve_curve_pattern());
    let t = twelve_curve_pattern();
    assert_eq!(CurvePatternRoundTrip::round_trip(&t), t);
}

trait CurvePatternRoundTrip {
    fn round_trip(&self) -> Self;
}

impl CurvePatternRoundTrip for artin_monodromy::curves::CurvePattern {
    fn round_trip(&self) -> Self {
        Self::from_json_str(&self.to_json_string()).unwrap()
    }
}
