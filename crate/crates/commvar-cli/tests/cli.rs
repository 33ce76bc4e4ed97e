use assert_cmd::Command;
use predicates::prelude::*;

fn commvar() -> Command {
    let mut c = Command::cargo_bin("commvar").unwrap();
    c.env_remove("COMMVAR_SEED");
    c
}

#[test]
fn lower_bound_example() {
    commvar()
        .args(["strata", "lower-bound", "--n", "1", "--m", "5"])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"schema\": \"commvar-report/1\""))
        .stdout(predicate::str::contains("\"name\": \"F\""))
        .stdout(predicate::str::contains("\"computed\": 3"))
        .stdout(predicate::str::contains("\"fail\"").not());
}

#[test]
fn excep_e8_example() {
    commvar()
        .args(["excep", "e8"])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"computed\": 26"))
        .stdout(predicate::str::contains("\"computed\": 32"))
        .stdout(predicate::str::contains("\"fail\"").not());
}

#[test]
fn satake_subdiagrams_example() {
    commvar()
        .args(["satake", "subdiagrams", "--pair", "E6/sl6+sl2", "--connected"])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"name\": \"count\""))
        .stdout(predicate::str::contains("\"computed\": 7"));
}

#[test]
fn reports_are_byte_identical_for_a_fixed_seed() {
    let args = ["liealg", "z2", "--family", "bdi", "--n", "2", "--m", "3", "--samples", "5",
        "--seed", "42"];
    let a = commvar().args(args).output().unwrap();
    let b = commvar().args(args).output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn env_seed_overrides_flag() {
    let out = commvar()
        .args(["strata", "rank-sum", "--n", "1", "--m", "2", "--samples", "5", "--seed", "3"])
        .env("COMMVAR_SEED", "11")
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"seed\": 11"), "{text}");
}

#[test]
fn text_mode_renders_a_table() {
    commvar()
        .args(["strata", "witness", "--n", "2", "--m", "3", "--q", "2", "--text"])
        .assert()
        .success()
        .stdout(predicate::str::contains("all claims pass"))
        .stdout(predicate::str::contains("rk_d1"));
}

#[test]
fn usage_errors_exit_2() {
    commvar().args(["no-such-module"]).assert().code(2);
    commvar().args(["strata", "witness", "--n", "2", "--m", "3", "--q", "9"]).assert().code(2);
    commvar().args(["nilpotent", "build", "--n", "2", "--m", "2", "--jt", "5a"]).assert().code(2);
}

#[test]
fn timing_flag_is_opt_in() {
    let plain = commvar().args(["excep", "e7"]).output().unwrap();
    assert!(!String::from_utf8(plain.stdout).unwrap().contains("elapsed_ms"));
    let timed = commvar().args(["excep", "e7", "--timing"]).output().unwrap();
    assert!(String::from_utf8(timed.stdout).unwrap().contains("elapsed_ms"));
}

#[test]
fn nilpotent_roundtrip_through_flags() {
    commvar()
        .args(["nilpotent", "build", "--n", "3", "--m", "4", "--jt", "2a:2b,3b"])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"jordan_type\""))
        .stdout(predicate::str::contains("\"fail\"").not());
}
