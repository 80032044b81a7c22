#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

use homalg_cli::workspace::WorkspaceFile;

pub fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    path.to_string_lossy().into_owned()
}

pub fn fixtures() -> Vec<String> {
    let dir: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures"].iter().collect();
    let mut names: Vec<String> = std::fs::read_dir(dir)
        .expect("fixture directory")
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .filter(|n| n.ends_with(".json"))
        .collect();
    names.sort();
    names
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn homalg(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_homalg")).args(args).output().expect("spawn homalg");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

/// One invocation with its expected exit code and stdout lines.
pub struct Case {
    pub fixture: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
    pub lines: &'static [&'static str],
}

pub const CASES: &[Case] = &[
    Case { fixture: "z4_periodic.json", args: &["validate"], code: 0, lines: &["complex P: ok"] },
    Case {
        fixture: "z4_periodic.json",
        args: &["cohomology", "--complex", "P"],
        code: 0,
        lines: &["H^0 ≅ Z/2^1", "H^1 ≅ 0", "H^2 ≅ 0", "H^3 ≅ Z/2^1"],
    },
    Case {
        fixture: "bad_square_d.json",
        args: &["validate"],
        code: 1,
        lines: &["complex X: degree 0: d∘d = [[1]] (expected 0)"],
    },
    Case { fixture: "bad_square_d.json", args: &["cohomology", "--complex", "X"], code: 1, lines: &[] },
    Case { fixture: "dangling.json", args: &["validate"], code: 2, lines: &[] },
    Case {
        fixture: "zero_objects.json",
        args: &["cohomology", "--complex", "X"],
        code: 0,
        lines: &["H^-1 ≅ 0", "H^0 ≅ Z/5^1 (+) Z/5^1", "H^1 ≅ 0"],
    },
    Case { fixture: "zero_objects.json", args: &["validate"], code: 0, lines: &["complex X: ok"] },
    Case {
        fixture: "exact_sequence.json",
        args: &["cohomology", "--complex", "S", "--degrees", "-1..3"],
        code: 0,
        lines: &["H^-1 ≅ 0", "H^0 ≅ 0", "H^1 ≅ 0", "H^2 ≅ 0", "H^3 ≅ 0"],
    },
    Case {
        fixture: "zero_differentials.json",
        args: &["cohomology", "--complex", "X"],
        code: 0,
        lines: &["H^2 ≅ F_3^2", "H^3 ≅ F_3^1"],
    },
    Case {
        fixture: "ext_z4.json",
        args: &["ext", "--M", "Z2", "--N", "Z2", "--degree", "0"],
        code: 0,
        lines: &["Ext^0(Z2, Z2) ≅ Z/2^1"],
    },
    Case {
        fixture: "ext_z4.json",
        args: &["ext", "--M", "Z2", "--N", "Z2", "--degree", "3"],
        code: 0,
        lines: &["Ext^3(Z2, Z2) ≅ Z/2^1"],
    },
    Case {
        fixture: "ext_z4.json",
        args: &["ext", "--M", "M", "--N", "Z4", "--degree", "2"],
        code: 0,
        lines: &["Ext^2(M, Z4) ≅ 0"],
    },
    Case { fixture: "ext_z4.json", args: &["ext", "--M", "Z2", "--N", "Z2", "--degree", "-1"], code: 2, lines: &[] },
    Case { fixture: "ext_z4.json", args: &["ext", "--M", "Z2", "--N", "Q", "--degree", "1"], code: 2, lines: &[] },
    Case {
        fixture: "ext_z4.json",
        args: &["resolve", "--object", "Z2", "--degree", "3"],
        code: 0,
        lines: &[
            "resolution of Z2 ≅ Z/2^1 to degree 3",
            "aug: Z/2^1 -> I^0 = [[2]]",
            "I^0 = Z/2^2",
            "d^0: I^0 -> I^1 = [[2]]",
            "I^1 = Z/2^2",
            "d^1: I^1 -> I^2 = [[2]]",
            "I^2 = Z/2^2",
            "d^2: I^2 -> I^3 = [[2]]",
            "I^3 = Z/2^2",
        ],
    },
    Case {
        fixture: "ext_z4.json",
        args: &["derive", "--functor", "hom", "--with", "Z2", "--object", "M", "--degree", "2"],
        code: 0,
        lines: &["R^2 Hom(Z2, -)(M) ≅ Z/2^1"],
    },
    Case {
        fixture: "ext_z4.json",
        args: &["derive", "--functor", "hom", "--object", "M", "--degree", "1"],
        code: 2,
        lines: &[],
    },
    Case {
        fixture: "ext_z8.json",
        args: &["ext", "--M", "Z2", "--N", "Z4", "--degree", "2"],
        code: 0,
        lines: &["Ext^2(Z2, Z4) ≅ Z/2^1"],
    },
    Case {
        fixture: "ext_z8.json",
        args: &["ext", "--M", "Z4", "--N", "Z8", "--degree", "1"],
        code: 0,
        lines: &["Ext^1(Z4, Z8) ≅ 0"],
    },
    Case {
        fixture: "vect_f5.json",
        args: &["ext", "--M", "V", "--N", "W", "--degree", "0"],
        code: 0,
        lines: &["Ext^0(V, W) ≅ F_5^6"],
    },
    Case {
        fixture: "vect_f5.json",
        args: &["ext", "--M", "V", "--N", "W", "--degree", "1"],
        code: 0,
        lines: &["Ext^1(V, W) ≅ 0"],
    },
    Case {
        fixture: "vect_f5.json",
        args: &["derive", "--functor", "doubling", "--object", "W", "--degree", "0"],
        code: 0,
        lines: &["R^0 Dbl(W) ≅ F_5^6"],
    },
    Case { fixture: "vect_f5.json", args: &["cohomology", "--complex", "Y"], code: 2, lines: &[] },
    Case {
        fixture: "map_square_fails.json",
        args: &["validate"],
        code: 1,
        lines: &["map f: degree 0: ∂∘f = [[3]] but f∘d = [[6]]"],
    },
    Case { fixture: "map_ok.json", args: &["validate"], code: 0, lines: &["map f: ok", "all checks passed"] },
    Case { fixture: "parse_error.json", args: &["validate"], code: 2, lines: &[] },
    Case { fixture: "bad_exponents.json", args: &["fmt"], code: 2, lines: &[] },
];

/// Runs one case and reports the first mismatch.
pub fn check_case(case: &Case) -> Result<(), String> {
    let file = fixture(case.fixture);
    let mut args = vec![case.args[0], file.as_str()];
    args.extend_from_slice(&case.args[1..]);
    let run = homalg(&args);
    let label = format!("{} {:?}", case.fixture, case.args);
    if run.code != case.code {
        return Err(format!("{label}: exit {} (expected {}), stderr: {}", run.code, case.code, run.stderr));
    }
    if case.code == 2 && (run.stderr.trim().is_empty() || !run.stdout.is_empty()) {
        return Err(format!("{label}: input errors belong on stderr only"));
    }
    for line in case.lines {
        if !run.stdout.lines().any(|l| l == *line) {
            return Err(format!("{label}: missing line '{line}' in\n{}", run.stdout));
        }
    }
    Ok(())
}

/// `fmt` output parses, is a fixed point of `fmt`, and survives a parse and
/// serialize cycle unchanged.
pub fn check_round_trip(name: &str) -> Result<(), String> {
    let first = homalg(&["fmt", &fixture(name)]);
    if first.code != 0 {
        return Err(format!("{name}: fmt exited {}", first.code));
    }
    let parsed = WorkspaceFile::parse(&first.stdout).map_err(|e| format!("{name}: {e}"))?;
    if WorkspaceFile::parse(&parsed.to_json()).map_err(|e| e.to_string())? != parsed {
        return Err(format!("{name}: parse . serialize is not the identity"));
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join(name);
    std::fs::write(&path, &first.stdout).map_err(|e| e.to_string())?;
    let second = homalg(&["fmt", path.to_str().unwrap()]);
    if second.stdout != first.stdout {
        return Err(format!("{name}: fmt is not idempotent"));
    }
    Ok(())
}
