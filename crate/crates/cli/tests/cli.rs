use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use lgdot::config::{parse_config, serialize_config, Format, RunConfig, SweepSpec};
use lgdot_core::{DotParameters, SweepAxis};
use proptest::prelude::*;

fn lgdot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lgdot")).args(args).output().unwrap()
}

fn write_config(dir: &Path, text: &str) -> String {
    let path = dir.join("run.cfg");
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn evolve_with_two_steps_writes_two_rows() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    let cfg = write_config(dir.path(), "run.t_max = 100\nrun.t_steps = 2\nrun.formats = csv, json\n");
    let res = lgdot(&["evolve", "--config", &cfg, "--out", out.to_str().unwrap()]);
    assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
    let csv = fs::read_to_string(out.join("evolve.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "t_ps,k_t,k_2t,k_plus,k_minus");
    assert_eq!(lines.len(), 3);
    assert!(lines[2].starts_with("100.0,"));
    assert!(!out.join("evolve.svg").exists());
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(out.join("evolve.json")).unwrap()).unwrap();
    assert_eq!(json["points"].as_array().unwrap().len(), 2);
    // omitted keys are echoed as defaults
    let stderr = String::from_utf8_lossy(&res.stderr);
    assert!(stderr.contains("default: dot.s_fss = 3.0"), "{stderr}");
}

#[test]
fn sweep_writes_curves_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sw");
    let cfg = write_config(
        dir.path(),
        &format!(
            "[run]\nt_max = 600\nt_steps = 61\noutput_dir = {}\nsweep_axis = g_noise\nsweep_values = 0, 1\n",
            out.display()
        ),
    );
    let res = lgdot(&["sweep", "--config", &cfg]);
    assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
    let curves = fs::read_to_string(out.join("sweep.csv")).unwrap();
    assert!(curves.starts_with("g_noise,t_ps,k_t,k_2t,k_plus,k_minus\n"));
    assert_eq!(curves.lines().count(), 1 + 2 * 61);
    let summary = fs::read_to_string(out.join("sweep_summary.csv")).unwrap();
    let rows: Vec<&str> = summary.lines().collect();
    assert_eq!(rows[0], "g_noise,min_k_minus,first_violation_t_ps");
    assert!(!rows[1].ends_with(",none"), "g = 0 violates: {}", rows[1]);
    assert!(rows[2].ends_with(",none"), "g = 1 cannot violate: {}", rows[2]);
    assert!(out.join("sweep.svg").exists() && out.join("sweep.json").exists());
}

#[test]
fn bad_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "dot.s_fss = -1\n");
    let res = lgdot(&["evolve", "--config", &cfg]);
    assert_eq!(res.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&res.stderr);
    assert!(stderr.contains("dot.s_fss") && stderr.contains("-1"), "{stderr}");

    let cfg = write_config(dir.path(), "dot.spin = 1\n");
    let res = lgdot(&["evolve", "--config", &cfg]);
    assert_eq!(res.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&res.stderr).contains("dot.spin"));

    // sweep without an axis
    let cfg = write_config(dir.path(), "run.t_steps = 3\n");
    assert_eq!(lgdot(&["sweep", "--config", &cfg]).status.code(), Some(2));
    assert_eq!(lgdot(&["evolve", "--config", "/nonexistent/run.cfg"]).status.code(), Some(2));
    assert_eq!(lgdot(&["figure", "fig9"]).status.code(), Some(2));
}

#[test]
fn version_flag() {
    let res = lgdot(&["--version"]);
    assert!(res.status.success());
    assert!(String::from_utf8_lossy(&res.stdout).contains(env!("CARGO_PKG_VERSION")));
}

#[test]
fn corrupted_propagator_fails_validation() {
    let res = lgdot(&["validate", "--corrupt-propagator"]);
    assert_eq!(res.status.code(), Some(1));
    let table = String::from_utf8_lossy(&res.stdout);
    assert!(table.lines().any(|l| l.starts_with("[4]") && l.contains("FAIL")), "{table}");
}

fn finite(lo: f64, hi: f64) -> impl Strategy<Value = f64> {
    lo..hi
}

prop_compose! {
    fn run_config()(
        s in finite(0.0, 10.0),
        energies in prop::array::uniform4(finite(-1e3, 1e3)),
        gx in finite(1e-6, 1.0),
        gd in finite(0.0, 1.0),
        gp in finite(0.0, 1e-3),
        temp in finite(0.01, 300.0),
        g in finite(0.0, 5.0),
        w in finite(0.0, 500.0),
        eta in prop::option::of(0.0..=1.0f64),
        t_max in finite(1e-3, 1e5),
        t_steps in 2usize..10_000,
        formats in prop::sample::subsequence(vec![Format::Csv, Format::Json, Format::Svg], 1..=3),
        sweep in prop::option::of((0usize..4, prop::collection::vec(finite(0.01, 100.0), 1..6))),
    ) -> RunConfig {
        RunConfig {
            dot: DotParameters {
                s_fss: s,
                level_energies: energies,
                gamma_x: gx,
                gamma_dephase0: gd,
                gamma_phonon: gp,
                temperature: temp,
                g_noise: g,
                gate_width: w,
                eta_override: eta,
            },
            t_max,
            t_steps,
            output_dir: "results/run 1".into(),
            formats: formats.into_iter().collect(),
            sweep: sweep.map(|(a, values)| SweepSpec { axis: SweepAxis::ALL[a], values }),
        }
    }
}

proptest! {
    #[test]
    fn config_round_trips(cfg in run_config()) {
        let text = serialize_config(&cfg);
        let parsed = parse_config(&text).unwrap();
        prop_assert_eq!(parsed.config, cfg);
    }
}
