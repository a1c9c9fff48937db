#![allow(dead_code)]

use std::io::Write;
use std::process::{Command, Output, Stdio};

use oddcore::constructions::ConstructionSpec;

pub const BIN: &str = env!("CARGO_BIN_EXE_oddcore");

pub fn oddcore(args: &[&str]) -> Output {
    oddcore_with(args, None, &[])
}

pub fn oddcore_with(args: &[&str], stdin: Option<&[u8]>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(BIN);
    cmd.args(args).env_remove("ODDCORE_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.stdin(if stdin.is_some() { Stdio::piped() } else { Stdio::null() });
    cmd.stdout(Stdio::piped()).stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary runs");
    if let Some(bytes) = stdin {
        child.stdin.take().unwrap().write_all(bytes).unwrap();
    }
    child.wait_with_output().unwrap()
}

pub fn json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

fn selected(spec: &str) -> String {
    let c = spec.parse::<ConstructionSpec>().unwrap().build().unwrap();
    c.selected.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

/// One invocation per subcommand and fixture; every line yields a JSON report.
pub fn matrix() -> Vec<Vec<String>> {
    let g316 = selected("gplus:3,16");
    let g_edge = g316.split(',').take(2).collect::<Vec<_>>().join(",");
    let lines: Vec<String> = vec![
        "generate --format json gplus:3,16".into(),
        "generate --format json bc:2,20".into(),
        "generate --format json blowup:5,2".into(),
        "generate --format json tstar:4,12".into(),
        "generate --format json turan:3,9".into(),
        "generate --format json kab:3,4".into(),
        "check-free --lengths 5,7,9 bc:2,20".into(),
        "check-free --lengths 5,7,9 gplus:3,16".into(),
        "odd-girth bc:2,20".into(),
        "odd-girth kab:3,3".into(),
        "path --from 0 --to 3 --parity odd --max-order 7 blowup:5,2".into(),
        "path --from 0 --to 1 --parity odd --max-order 8 kab:3,3".into(),
        "core --k 5 bc:1,12".into(),
        "core --k 5 gplus:3,16".into(),
        "core --k 5 kab:3,3".into(),
        "core --k 5 --exact gplus:3,8".into(),
        "core --k 5 --exact --plain gplus:2,6".into(),
        "chi blowup:5,2".into(),
        "chi gplus:3,16".into(),
        "kcolor --c 3 gplus:3,16".into(),
        "kcolor --c 4 gplus:3,16".into(),
        "d2 tstar:4,12".into(),
        "gamma2 tstar:4,12".into(),
        "gamma2 --method edge-branching tstar:4,12".into(),
        "verify --target main --r 3 --k 13 gplus:3,16".into(),
        "verify --target main2 --family 3,7,9 bc:2,20".into(),
        "verify --target odd-girth --r 4 bc:2,20".into(),
        format!("verify --target structure --r 3 --k 13 --core {g316} gplus:3,16"),
        "verify --target core-bounds --r 3 --k 13 gplus:3,16".into(),
        "verify --target core-bounds --r 3 --k 13 --mode greedy gplus:3,32".into(),
        format!("verify --target lemma-cn --r 3 --k 13 --path {g_edge} gplus:3,16"),
        "search --seed 7 --iters 150 --r 3 --k 13 --n 16".into(),
        "search --seed 3 --iters 150 --family 3,7,9 --n 12 --runs 2 --workers 2".into(),
        "delta-chi --family 3 --c 2 --n 5".into(),
    ];
    lines.iter().map(|l| l.split_whitespace().map(String::from).collect()).collect()
}
