use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

use permcat::cli::doc::{parse, serialize, Body};
use permcat::cli::run;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

struct Run {
    code: u8,
    stdout: String,
    stderr: String,
}

impl Run {
    fn records(&self) -> Vec<Value> {
        self.stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
    }

    fn documents(&self) -> Vec<Value> {
        self.records().into_iter().filter(|r| r.get("schema_version").is_some()).collect()
    }

    fn laws(&self) -> Vec<Value> {
        self.records().into_iter().filter(|r| r.get("law").is_some()).collect()
    }

    fn summary(&self) -> Value {
        self.records().last().unwrap()["summary"].clone()
    }
}

fn permcat(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("permcat").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

#[test]
fn validate_deloop_z3_passes() {
    let r = permcat(&["validate", &fixture("deloop_z3.json"), "--depth", "3"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let laws = r.laws();
    assert_eq!(laws.len(), 9);
    for l in &laws {
        assert_eq!(l["status"], "pass");
        assert_eq!(l["depth"], 3);
    }
    assert_eq!(r.summary()["failed"], 0);
    assert!(r.stderr.contains("9 laws, 0 failed"));
}

#[test]
fn factor_emits_three_documents() {
    let r = permcat(&["factor", &fixture("disc_to_chaotic.json")]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let docs = r.documents();
    assert_eq!(docs.len(), 3);
    let kinds: Vec<_> = docs.iter().map(|d| d["kind"].as_str().unwrap().to_string()).collect();
    assert_eq!(kinds, ["category", "functor", "functor"]);
    // G(F) of Discrete(Z2) -> Chaotic(Z2) has one morphism in every hom
    let cat = parse(&docs[0].to_string()).unwrap();
    let Body::Category(c) = cat.body else { panic!() };
    let g = permcat::cli::codec::Realizer::new().category(&c).unwrap();
    for x in g.objects().enumerate(0) {
        for y in g.objects().enumerate(0) {
            assert_eq!(g.hom(&x, &y).unwrap().len(), 1);
        }
    }
}

#[test]
fn retract_of_a_non_cofibration_fails() {
    let r = permcat(&["retract", &fixture("not_a_cofibration.json"), "--depth", "6"]);
    assert_eq!(r.code, 1);
    let laws = r.laws();
    assert_eq!(laws[0]["law"], "cofibration_recognized");
    assert_eq!(laws[0]["status"], "fail");
    assert_eq!(laws[0]["counterexample"], "no lift within depth");
}

#[test]
fn retract_of_an_inclusion_builds_the_witness() {
    let r = permcat(&["retract", &fixture("disc_to_chaotic.json"), "--depth", "2"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.documents().len(), 4);
}

#[test]
fn pushout_and_lift_of_the_z2_collapse() {
    let r = permcat(&["pushout", &fixture("collapse_z2.json")]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.documents().len(), 3);
    let r = permcat(&["lift", &fixture("collapse_z2.json"), "--depth", "2"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.laws().iter().any(|l| l["law"] == "lift/lift_unique" && l["status"] == "pass"));
}

#[test]
fn negative_controls_fail_with_exit_one() {
    let r = permcat(&["validate", &fixture("negative/interchange.json"), "--depth", "2"]);
    assert_eq!(r.code, 1);
    let failed: Vec<_> = r.laws().into_iter().filter(|l| l["status"] == "fail").collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["law"], "interchange");
    assert!(failed[0]["counterexample"].is_string());
}

#[test]
fn input_errors_exit_two() {
    let r = permcat(&["validate", &fixture("invalid/non_associative.json")]);
    assert_eq!(r.code, 2);
    assert!(r.records()[0]["error"]["message"].as_str().unwrap().contains("(a, a, b)"));

    let r = permcat(&["validate", "no/such/file.json"]);
    assert_eq!(r.code, 2);

    let r = permcat(&["factor", &fixture("deloop_z3.json")]);
    assert_eq!(r.code, 2, "a category is not a functor");
}

#[test]
fn unknown_flags_and_subcommands_exit_two() {
    assert_eq!(permcat(&["validate", &fixture("z2.json"), "--frobnicate"]).code, 2);
    assert_eq!(permcat(&["transmogrify"]).code, 2);
    assert_eq!(permcat(&[]).code, 2);
}

#[test]
fn json_flag_silences_the_human_summary() {
    let r = permcat(&["validate", &fixture("deloop_z3.json"), "--json"]);
    assert_eq!(r.code, 0);
    assert!(r.stderr.is_empty());
    assert!(!r.stdout.is_empty());
}

#[test]
fn fixtures_dir_resolves_relative_inputs() {
    let dir = fixture("");
    let r = permcat(&["--fixtures-dir", &dir, "validate", "deloop_z3.json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
}

#[test]
fn generation_is_deterministic() {
    for family in ["category", "functor", "cofibration", "square"] {
        let a = permcat(&["gen", family, "--seed", "1", "--count", "2"]);
        let b = permcat(&["gen", family, "--seed", "1", "--count", "2"]);
        assert_eq!(a.code, 0);
        assert_eq!(a.stdout, b.stdout, "{family}");
        let c = permcat(&["gen", family, "--seed", "2", "--count", "2"]);
        assert_eq!(c.code, 0);
    }
}

#[test]
fn generated_squares_feed_the_pushout_command() {
    let g = permcat(&["gen", "square", "--seed", "5", "--count", "2", "--depth", "2"]);
    assert_eq!(g.code, 0);
    let dir = std::env::temp_dir().join(format!("permcat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (i, inst) in g.documents().iter().enumerate() {
        assert_eq!(inst["kind"], "instance");
        let inner = parse(&inst["body"]["document"].to_string()).unwrap();
        let path = dir.join(format!("square{i}.json"));
        std::fs::write(&path, serialize(&inner)).unwrap();
        let r = permcat(&["pushout", path.to_str().unwrap(), "--depth", "2"]);
        assert_eq!(r.code, 0, "{}", r.stderr);
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn properness_reports_every_instance() {
    let r = permcat(&["properness", "--count", "3", "--seed", "7", "--depth", "2"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    for i in 0..3 {
        let prefix = format!("instance{i}/");
        assert!(r.laws().iter().any(|l| l["law"].as_str().unwrap().starts_with(&prefix)));
    }
}

#[test]
fn the_binary_uses_the_same_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_permcat");
    let ok = Command::new(bin).args(["validate", &fixture("deloop_z3.json")]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin).args(["retract", &fixture("not_a_cofibration.json"), "--depth", "6"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let usage = Command::new(bin).args(["validate", "--nope"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}
