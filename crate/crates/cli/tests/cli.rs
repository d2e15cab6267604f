use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilorbits"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn classify_prints_the_label() {
    assert_eq!(
        stdout(&["classify", "--type", "D", "--rank", "5", "--above", "9,1", "--below", "7,3"]),
        "C_4\n"
    );
    assert_eq!(
        stdout(&["classify", "--type", "C", "--rank", "6", "--above", "6^2", "--below", "6,4,2"]),
        "C_3^*\n"
    );
}

#[test]
fn dual_maps_orbits() {
    assert_eq!(
        stdout(&["dual", "--map", "dls", "--type", "D", "--rank", "5", "--orbit", "3,1^7"]),
        "7,1^3\n"
    );
    assert_eq!(
        stdout(&["dual", "--map", "f", "--type", "D", "--rank", "5", "--orbit", "3,1^7"]),
        "4,1^6\n"
    );
}

#[test]
fn verify_exits_zero_without_violations() {
    let out = run(&[
        "verify",
        "--check",
        "quartets",
        "--type",
        "C",
        "--max-rank",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("0 violations"));
    for check in ["fixtures", "exceptional", "maps", "duality", "lusztig"] {
        assert_eq!(
            run(&["verify", "--check", check, "--max-rank", "6"])
                .status
                .code(),
            Some(0),
            "{check}"
        );
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["classify", "--type", "D"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let bad = run(&[
        "classify", "--type", "D", "--rank", "5", "--above", "9,1", "--below", "1^10",
    ]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty());
    assert!(String::from_utf8_lossy(&bad.stderr).contains("not a covering pair"));
}

#[test]
fn hasse_output_is_repeatable() {
    let args = ["hasse", "--type", "C", "--rank", "6", "--format", "dot"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    assert_eq!(a.matches(" -> ").count(), 36);
    assert!(!a.contains('\r'));
}

#[test]
fn exceptional_json_has_stable_fields() {
    let text = stdout(&["exceptional", "--algebra", "E8", "--format", "json"]);
    assert!(text.starts_with(
        "{\"algebra\":\"E8\",\"rank\":8,\"family\":\"special\",\"form\":\"full\",\"nodes\":["
    ));
    assert!(text.contains("\"label\":\"mu\""));
}

#[test]
fn pretty_labels_are_typeset() {
    let text = stdout(&[
        "classify", "--type", "D", "--rank", "4", "--above", "3^2,1^2", "--below", "2^4",
        "--pretty",
    ]);
    assert_eq!(text, "c^{\\mathrm{sp}}_{2}\n");
}
