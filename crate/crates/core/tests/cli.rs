use std::path::PathBuf;
use std::process::Command;

fn ocvar(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_ocvar")).args(args).output().expect("binary runs");
    (
        output.status.code().expect("exit code"),
        String::from_utf8(output.stdout).unwrap(),
        String::from_utf8(output.stderr).unwrap(),
    )
}

fn scratch_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ocvar-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn partition_command() {
    let (code, out, _) = ocvar(&["partition", "2,1"]);
    assert_eq!(code, 0);
    assert!(out.contains("\ns 1\n"));
    let (code, out, _) = ocvar(&["partition", "1,1,1", "--extend", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("\ns 0\n") && out.contains("extend 2 (1,1,1,1,1)"));
    assert_eq!(ocvar(&["partition", "0,1"]).0, 2);
    assert_eq!(ocvar(&["partition", "5"]).0, 1);
}

#[test]
fn order_command() {
    assert_eq!(ocvar(&["order", "preceq", "2,1", "2,2"]).1, "true\n");
    assert_eq!(ocvar(&["order", "unlhd", "3,1", "2,2"]).1, "false\n");
    assert_eq!(ocvar(&["order", "minimize", "2,1", "2,2", "3,1"]).1, "{(2,1)}\n");
    assert_eq!(ocvar(&["order", "sideways", "2,1"]).0, 2);
}

#[test]
fn transversal_command() {
    let (code, out, _) = ocvar(&["transversal", "2,1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "transversal (2,1): 3 words\naab\naba\nbaa\n");
}

#[test]
fn derive_command() {
    let sys = scratch_file("derive.sys", "aab = aba\naba = baa\n");
    let sys = sys.to_str().unwrap();
    let (code, out, _) = ocvar(&["derive", "aab", "baa", "--system", sys, "--trace"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("DERIVABLE\nlength 2\ndeduction\t"), "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("step\t")).count(), 2);
    assert_eq!(ocvar(&["derive", "aabc", "aacb", "--system", sys]).1, "NOT-DERIVABLE\n");
    let (code, _, err) = ocvar(&["derive", "ab", "aab", "--system", sys]);
    assert_eq!(code, 1);
    assert!(err.contains("not balanced"), "{err}");
    assert_eq!(ocvar(&["derive", "ab", "ba", "--system", "/nonexistent/file"]).0, 2);
}

#[test]
fn classes_command() {
    let sys = scratch_file("classes.sys", "aab = aba\naba = baa\n");
    let (code, out, _) = ocvar(&["classes", "2,1,1", "--system", sys.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("(2,1,1): "));
}

#[test]
fn variety_command() {
    let (code, out, _) = ocvar(&["variety", "greedy", "--s", "2,1", "--bound", "5"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("greedy up to bound 5: true\n"), "{out}");

    let (code, out, _) = ocvar(&["variety", "greedy", "--w", "2,1", "--bound", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("witnesses {(2,1,1)}"));
    assert!(out.ends_with("greedy up to bound 4: false\n"));

    assert_eq!(ocvar(&["variety", "collapses", "--s", "2,1", "--target", "2,1,1"]).1, "true\n");
    assert_eq!(ocvar(&["variety", "reduces", "--target", "2,1"]).1, "false\n");
    assert_eq!(ocvar(&["variety", "reduces", "--s", "2,1"]).0, 2);
    assert_eq!(ocvar(&["variety", "greedy", "--s", "2,1", "--bound", "1"]).0, 1);

    let (code, out, _) = ocvar(&["variety", "decompose", "--s", "2,1", "--bound", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("gamma' {(2,1)}") && out.contains("reconstruction matches: true"), "{out}");
}

#[test]
fn presentation_files_round_trip_through_build() {
    let (code, text, _) = ocvar(&["variety", "build", "--s", "2,1"]);
    assert_eq!(code, 0);
    let file = scratch_file("s21.txt", &text);
    let (code, again, _) = ocvar(&["variety", "build", "--system", file.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(again, text);
    let lying = scratch_file("lying.txt", "#! bound=3 collapses=2,1,1 label=x\naab = aba\n");
    assert_eq!(ocvar(&["variety", "build", "--system", lying.to_str().unwrap()]).0, 1);
}

#[test]
fn verify_command() {
    let (code, out, _) = ocvar(&["verify", "prop-optimum"]);
    assert_eq!(code, 0);
    assert!(out.contains("[PASS] W(2,1) does not give x1x1x2x3 = x1x1x3x2"));
    assert!(!out.contains("[FAIL]"));
    assert_eq!(ocvar(&["verify", "no-such-suite"]).0, 2);
}

#[test]
fn structured_output_is_stable_json() {
    let args = ["--format", "structured", "variety", "decompose", "--s", "2,1", "--s", "1,1", "--bound", "5"];
    let (code, first, _) = ocvar(&args);
    assert_eq!(code, 0);
    assert_eq!(ocvar(&args).1, first);
    let value: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(value["gamma_prime"], serde_json::json!([[1, 1]]));
    assert_eq!(value["reconstruction_ok"], true);
}
