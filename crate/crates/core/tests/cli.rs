use std::process::{Command, Output};

use kgrass::cli::{OutputRecord, EXIT_FAILURE, EXIT_MISMATCH, EXIT_NOT_PRIME_POWER, EXIT_PARSE};
use kgrass::kronecker_model::KroneckerDescriptor;
use kgrass::qbinom::LaurentPoly;

fn kgrass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kgrass"))
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

fn schema() -> jsonschema::Validator {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/output.schema.json");
    let schema: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

fn json_ok(args: &[&str]) -> serde_json::Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = kgrass(&full);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    let validator = schema();
    let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{args:?} violates the schema: {errors:?}");
    v
}

#[test]
fn count_examples() {
    for (module, dim, expected) in [
        ("P3", "2,1", "q^2 + q + 1"),
        ("R(p1,[2])", "1,1", "1"),
        ("P0 + I0", "1,1", "1"),
        ("2*P0", "1,0", "q + 1"),
        ("R(p1,[1]) + R(p2,[1])", "1,1", "2"),
    ] {
        let o = kgrass(&["count", "-m", module, "-d", dim]);
        assert!(o.status.success(), "{module}: {}", stderr(&o));
        assert_eq!(stdout(&o), format!("{expected}\n"));
    }
}

#[test]
fn polynomial_output_round_trips() {
    let o = kgrass(&["count", "-m", "P1 + R(p,[2,1]) + I1", "-d", "3,3"]);
    let text = stdout(&o);
    let p: LaurentPoly = text.trim().parse().unwrap();
    assert_eq!(p.to_string(), text.trim());
}

#[test]
fn euler_flag() {
    let o = kgrass(&["count", "-m", "I1", "-d", "1,1", "--euler"]);
    assert_eq!(stdout(&o), "q + 1\neuler: 2\n");
}

#[test]
fn exit_codes() {
    let o = kgrass(&["count", "-m", "P1 +", "-d", "1,0"]);
    assert_eq!(o.status.code(), Some(EXIT_PARSE));
    assert!(o.stdout.is_empty());
    assert!(stderr(&o).contains("parse error"));

    let o = kgrass(&["count", "-m", "P1", "-d", "1"]);
    assert_eq!(o.status.code(), Some(EXIT_PARSE));

    let o = kgrass(&["hall", "--lambda", "2,x"]);
    assert_eq!(o.status.code(), Some(EXIT_PARSE));

    let o = kgrass(&["count", "-m", "P1", "-d", "1,0", "--at", "10"]);
    assert_eq!(o.status.code(), Some(EXIT_NOT_PRIME_POWER));
    assert_eq!(stdout(&o), "q + 1\nq=10: 11\n");

    let o = kgrass(&["count", "-m", "P1", "-d", "1,0", "--at", "9"]);
    assert!(o.status.success());

    let o = kgrass(&["verify", "-m", "R(p1,[1]) + R(p2,[1]) + R(p3,[1]) + R(p4,[1])", "-p", "2"]);
    assert_eq!(o.status.code(), Some(EXIT_FAILURE));
    assert!(stderr(&o).contains("only 3"), "{}", stderr(&o));
    assert!(o.stdout.is_empty());

    // exit code 4 is reserved for mismatches, which a correct engine never
    // produces; keep the constant distinct from the others
    assert!(![0, EXIT_FAILURE, EXIT_PARSE, EXIT_NOT_PRIME_POWER].contains(&EXIT_MISMATCH));
}

#[test]
fn verify_examples() {
    for (module, p) in [("P2", "2"), ("R(p1@2,[1])", "2"), ("P1 + R(a,[1]) + I0", "3")] {
        let o = kgrass(&["verify", "-m", module, "-p", p]);
        assert!(o.status.success(), "{module}: {}{}", stdout(&o), stderr(&o));
        assert!(!stdout(&o).contains("MISMATCH"));
    }
    let o = kgrass(&["verify", "-m", "P2", "-p", "3", "-d", "2,1"]);
    assert!(stdout(&o).contains("1 of 1 cells match"), "{}", stdout(&o));
}

#[test]
fn table_grids() {
    let v = json_ok(&["table", "-m", "P1"]);
    let recs: Vec<OutputRecord> = serde_json::from_value(v).unwrap();
    assert_eq!(recs.len(), 6);
    let get = |a: i64, b: i64| recs.iter().find(|r| r.a == a && r.b == b).unwrap().polynomial.clone();
    assert_eq!(get(0, 0), "1");
    assert_eq!(get(1, 0), "q + 1");
    assert_eq!(get(2, 0), "1");
    assert_eq!(get(2, 1), "1");

    let recs: Vec<OutputRecord> = serde_json::from_value(json_ok(&["table", "-m", "I0"])).unwrap();
    assert_eq!(recs.iter().map(|r| r.polynomial.as_str()).collect::<Vec<_>>(), ["1", "1"]);

    let recs: Vec<OutputRecord> = serde_json::from_value(json_ok(&["table", "-m", "R(p1,[1])"])).unwrap();
    let get = |a: i64, b: i64| recs.iter().find(|r| r.a == a && r.b == b).unwrap().polynomial.clone();
    assert_eq!((get(0, 0), get(1, 1), get(1, 0), get(0, 1)), ("1".into(), "1".into(), "1".into(), "0".into()));
}

#[test]
fn csv_and_json_agree() {
    let m = "P0 + R(p,[1]) + I1";
    let json: Vec<OutputRecord> = serde_json::from_value(json_ok(&["table", "-m", m])).unwrap();
    let o = kgrass(&["table", "-m", m, "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(o.stdout.as_slice());
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), json.len());
    for (row, rec) in rows.iter().zip(&json) {
        assert_eq!(row.get(0), Some(rec.module.as_str()));
        assert_eq!(row.get(1).unwrap().parse::<i64>().unwrap(), rec.a);
        assert_eq!(row.get(2).unwrap().parse::<i64>().unwrap(), rec.b);
        assert_eq!(row.get(3), Some(rec.polynomial.as_str()));
    }
}

#[test]
fn every_command_emits_schema_valid_json() {
    json_ok(&["count", "-m", "P2 + I1", "-d", "2,2", "--at", "3", "--euler"]);
    json_ok(&["table", "-m", "R(p@2,[1])"]);
    json_ok(&["verify", "-m", "P1 + I1", "-p", "2"]);
    json_ok(&["hall", "--lambda", "2,1", "--mu", "1", "--nu", "1,1"]);
    json_ok(&["homext", "R(p,[2])", "R(p,[1])"]);
}

#[test]
fn hall_examples() {
    for (l, mu, nu, expected) in [("1,1", "1", "1", "x + 1"), ("2", "1", "1", "1"), ("2", "2", "1", "0")] {
        let o = kgrass(&["hall", "--lambda", l, "--mu", mu, "--nu", nu]);
        assert_eq!(stdout(&o), format!("{expected}\n"));
    }
}

#[test]
fn homext_table() {
    assert_eq!(stdout(&kgrass(&["homext", "P1", "I2"])), "hom 3\next 0\n");
    assert_eq!(stdout(&kgrass(&["homext", "R(p,[2])", "P0"])), "hom 0\next 2\n");
}

#[test]
fn no_cache_gives_same_answers() {
    let a = kgrass(&["table", "-m", "P1 + R(p,[1]) + I0"]);
    let b = kgrass(&["table", "-m", "P1 + R(p,[1]) + I0", "--no-cache"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn descriptor_rendering_is_idempotent() {
    for s in ["I1 + P0 + P0", "R(b,[1]) + R(a@2,[2,1]) + 3*P2", "0", "R(p,[1]) + R(p,[2])"] {
        let once: KroneckerDescriptor = s.parse().unwrap();
        let twice: KroneckerDescriptor = once.to_string().parse().unwrap();
        assert_eq!(once, twice);
        assert_eq!(once.to_string(), twice.to_string());
    }
}
