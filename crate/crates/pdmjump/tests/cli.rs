//! End-to-end command-line behavior: exit codes, config precedence, CSV
//! shapes, and the documented warnings.

use std::path::PathBuf;
use std::process::Command;

use pdmjump::cli;

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("pdmjump_cli_{}_{name}", std::process::id()))
}

fn run_to_file(args: &[&str], name: &str) -> (i32, String) {
    let out = temp_path(name);
    let mut argv: Vec<String> = vec!["pdmjump".into()];
    argv.extend(args.iter().map(|s| s.to_string()));
    argv.push("--out".into());
    argv.push(out.to_str().unwrap().into());
    let code = cli::run(argv);
    let text = std::fs::read_to_string(&out).unwrap_or_default();
    std::fs::remove_file(&out).ok();
    (code, text)
}

#[test]
fn ordering_list_names_all_presets() {
    let (code, text) = run_to_file(&["ordering", "list"], "list.txt");
    assert_eq!(code, 0);
    for name in [
        "GoraWilliams",
        "BenDanielDuke",
        "ZhuKroemer",
        "LiKuhn",
        "MM",
        "MM1_paper",
        "MM1_derived",
    ] {
        assert!(text.contains(name), "missing {name} in:\n{text}");
    }
}

#[test]
fn ordering_eval_reports_admissibility() {
    let (code, text) = run_to_file(
        &["ordering", "eval", "--alpha", "-0.25", "--beta", "-0.5"],
        "eval.txt",
    );
    assert_eq!(code, 0);
    assert!(text.contains("gamma=-0.25"));
    assert!(text.contains("delta2-admissible on a jump: yes"));

    let (code, text) = run_to_file(
        &["ordering", "eval", "--alpha", "-0.5", "--beta", "0"],
        "eval2.txt",
    );
    assert_eq!(code, 0);
    assert!(text.contains("delta2-admissible on a jump: no"));
}

#[test]
fn ordering_solve_free_particle_returns_mm() {
    let (code, text) = run_to_file(
        &["ordering", "solve", "--constraint", "free-particle"],
        "solve_free.txt",
    );
    assert_eq!(code, 0);
    assert!(text.contains("alpha=-0.25"));
    assert!(text.contains("beta=-0.5"));
}

#[test]
fn ordering_solve_delta2_free_flags_claimed_set() {
    let (code, text) = run_to_file(
        &["ordering", "solve", "--constraint", "delta2-free"],
        "solve_d2.txt",
    );
    assert_eq!(code, 0);
    assert!(text.contains("alpha=-0.25"));
    assert!(text.contains("alpha=0.25"));
    assert!(text.contains("fails constraint: 2G1-G2 = 0.25"), "text:\n{text}");
}

#[test]
fn scatter_analytic_pipeline_mode_uses_derived_coupling() {
    let (code, text) = run_to_file(
        &[
            "scatter", "analytic", "--mu", "1", "--mode", "pipeline", "--format", "csv",
        ],
        "pipeline.csv",
    );
    assert_eq!(code, 0);
    let row = text.lines().nth(1).unwrap();
    let fields: Vec<f64> = row.split(',').map(|f| f.parse().unwrap()).collect();
    // b = G1·U0 = -1/9: R = -2b/(1+b^2) = 9/41, T = (1-b^2)/(1+b^2) = 40/41.
    assert!((fields[2] - 9.0 / 41.0).abs() < 1e-14, "re_r = {}", fields[2]);
    assert!((fields[4] - 40.0 / 41.0).abs() < 1e-14, "re_t = {}", fields[4]);
}

#[test]
fn scatter_oracle_csv_has_k_first_column() {
    let (code, text) = run_to_file(
        &[
            "scatter", "oracle", "--u0", "0.888888", "--a", "0", "--k", "5", "--format", "csv",
        ],
        "oracle.csv",
    );
    assert_eq!(code, 0);
    assert!(text.starts_with("k,u0,re_r,im_r,re_t,im_t,prob_r,prob_t,unitarity_defect\n"));
    assert!(text.lines().nth(1).unwrap().starts_with("5,"));
}

#[test]
fn scatter_numeric_converges_to_sharp_step() {
    let (code, text) = run_to_file(
        &[
            "scatter",
            "numeric",
            "--mu",
            "3",
            "--epsilon",
            "0.01",
            "--energy",
            "1",
            "--segments",
            "8000",
            "--half-width",
            "5",
            "--format",
            "csv",
        ],
        "numeric.csv",
    );
    assert_eq!(code, 0);
    let row = text.lines().nth(1).unwrap();
    let fields: Vec<f64> = row.split(',').map(|f| f.parse().unwrap()).collect();
    // Narrow regularization approaches the bare-step values for m3 = 4:
    // |R| = 1/3, flux transmission 8/9.
    let prob_r = fields[6];
    let prob_t = fields[7];
    assert!((prob_r - 1.0 / 9.0).abs() < 1e-3, "prob_r = {prob_r}");
    assert!((prob_t - 8.0 / 9.0).abs() < 1e-3, "prob_t = {prob_t}");
    assert!(fields[8].abs() < 1e-8);
}

#[test]
fn sweep_mu_three_rows_exact_endpoints() {
    let (code, text) = run_to_file(
        &["sweep", "mu", "--from", "0", "--to", "1", "--steps", "3"],
        "sweep3.csv",
    );
    assert_eq!(code, 0);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    // mu = 0 row is exactly free: u0 = 0, T = 1.
    assert_eq!(lines[1], "0,0,0,0,1,0,0,1,0");
    // mu = 1 row carries 17 significant digits of 4/9.
    assert!(lines[3].starts_with("1,0.44444444444444442,"), "{}", lines[3]);
}

#[test]
fn sweep_mu_empty_gives_header_only() {
    let (code, text) = run_to_file(
        &["sweep", "mu", "--from", "0", "--to", "1", "--steps", "0"],
        "sweep0.csv",
    );
    assert_eq!(code, 0);
    assert_eq!(text, "mu,u0,re_r,im_r,re_t,im_t,prob_r,prob_t,unitarity_defect\n");
}

#[test]
fn sweep_epsilon_emits_numeric_rows() {
    let (code, text) = run_to_file(
        &[
            "sweep", "epsilon", "--mu", "1", "--from", "0.5", "--to", "1", "--steps", "2",
            "--energy", "1",
        ],
        "sweepeps.csv",
    );
    assert_eq!(code, 0);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("epsilon,"));
    for line in &lines[1..] {
        let fields: Vec<f64> = line.split(',').map(|f| f.parse().unwrap()).collect();
        assert!(fields[8].abs() < 1e-8, "defect {}", fields[8]);
        assert!((fields[6] + fields[7] - 1.0 - fields[8]).abs() < 1e-15);
    }
}

#[test]
fn config_file_supplies_values_and_flags_override() {
    let cfg_path = temp_path("settings.conf");
    std::fs::write(&cfg_path, "mu = 1.0\n# comment\nk = 2.0\n").unwrap();

    let out = temp_path("cfg_out.csv");
    let code = cli::run([
        "pdmjump",
        "scatter",
        "analytic",
        "--config",
        cfg_path.to_str().unwrap(),
        "--format",
        "csv",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let from_config = std::fs::read_to_string(&out).unwrap();
    assert!(from_config.lines().nth(1).unwrap().starts_with("1,"));

    // The flag wins over the config value.
    let code = cli::run([
        "pdmjump",
        "scatter",
        "analytic",
        "--config",
        cfg_path.to_str().unwrap(),
        "--mu",
        "0",
        "--format",
        "csv",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let overridden = std::fs::read_to_string(&out).unwrap();
    assert!(overridden.lines().nth(1).unwrap().starts_with("0,0,"));

    std::fs::remove_file(&cfg_path).ok();
    std::fs::remove_file(&out).ok();
}

#[test]
fn config_out_key_redirects_output() {
    let out = temp_path("redirect.csv");
    let cfg_path = temp_path("redirect.conf");
    std::fs::write(
        &cfg_path,
        format!("mu = 0.5\nformat = csv\nout = {}\n", out.to_str().unwrap()),
    )
    .unwrap();
    let code = cli::run([
        "pdmjump",
        "scatter",
        "analytic",
        "--config",
        cfg_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("mu,"));
    std::fs::remove_file(&cfg_path).ok();
    std::fs::remove_file(&out).ok();
}

#[test]
fn usage_errors_exit_2() {
    // Unknown flag.
    assert_eq!(cli::run(["pdmjump", "scatter", "analytic", "--bogus", "1"]), 2);
    // Missing required value.
    assert_eq!(cli::run(["pdmjump", "scatter", "analytic"]), 2);
    assert_eq!(cli::run(["pdmjump", "ordering", "solve"]), 2);
    // Unknown config key.
    let cfg_path = temp_path("bad.conf");
    std::fs::write(&cfg_path, "bogus = 3\n").unwrap();
    assert_eq!(
        cli::run([
            "pdmjump",
            "scatter",
            "analytic",
            "--mu",
            "1",
            "--config",
            cfg_path.to_str().unwrap(),
        ]),
        2
    );
    std::fs::remove_file(&cfg_path).ok();
    // Unreadable config path.
    assert_eq!(
        cli::run([
            "pdmjump",
            "scatter",
            "analytic",
            "--mu",
            "1",
            "--config",
            "/no/such/file.conf",
        ]),
        2
    );
    // Non-finite numeric value.
    assert_eq!(cli::run(["pdmjump", "scatter", "analytic", "--mu", "inf"]), 2);
}

#[test]
fn domain_errors_exit_3() {
    // Mass not positive.
    assert_eq!(cli::run(["pdmjump", "scatter", "analytic", "--mu", "-1.5"]), 3);
    // Totally reflective coupling is singular for the matching oracle.
    assert_eq!(
        cli::run(["pdmjump", "scatter", "oracle", "--u0", "2", "--a", "0", "--k", "1"]),
        3
    );
    // Energy below threshold.
    assert_eq!(
        cli::run([
            "pdmjump", "scatter", "numeric", "--mu", "1", "--epsilon", "0.5", "--energy", "-1",
        ]),
        3
    );
    // Sweep leaving the positive-mass region.
    assert_eq!(
        cli::run(["pdmjump", "sweep", "mu", "--from", "-2", "--to", "1", "--steps", "5"]),
        3
    );
    // Unwritable output path.
    assert_eq!(
        cli::run([
            "pdmjump",
            "ordering",
            "list",
            "--out",
            "/nonexistent_dir_pdmjump/x.csv",
        ]),
        3
    );
}

#[test]
fn binary_reports_single_line_errors() {
    let exe = env!("CARGO_BIN_EXE_pdmjump");

    let output = Command::new(exe)
        .args(["scatter", "analytic", "--mu", "-1.5"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&output.stderr);
    let diagnostic: Vec<&str> = stderr.lines().collect();
    assert_eq!(diagnostic.len(), 1, "stderr was:\n{stderr}");
    assert!(diagnostic[0].starts_with("error:"));

    let output = Command::new(exe)
        .args(["scatter", "analytic", "--nope"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert_eq!(stderr.lines().count(), 1, "stderr was:\n{stderr}");

    // Help goes to stdout and succeeds.
    let output = Command::new(exe).args(["--help"]).output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&output.stdout).contains("pdmjump"));
}

#[test]
fn binary_warns_on_nonpositive_mu() {
    let exe = env!("CARGO_BIN_EXE_pdmjump");
    let output = Command::new(exe)
        .args(["scatter", "analytic", "--mu", "-0.5"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("warning"), "stderr was:\n{stderr}");

    let output = Command::new(exe)
        .args(["scatter", "analytic", "--mu", "0.5"])
        .output()
        .unwrap();
    assert!(String::from_utf8_lossy(&output.stderr).is_empty());
}

#[test]
fn binary_duplicate_config_key_warns() {
    let exe = env!("CARGO_BIN_EXE_pdmjump");
    let cfg_path = temp_path("dup.conf");
    std::fs::write(&cfg_path, "mu = 1\nmu = 2\n").unwrap();
    let output = Command::new(exe)
        .args([
            "scatter",
            "analytic",
            "--config",
            cfg_path.to_str().unwrap(),
            "--format",
            "csv",
        ])
        .output()
        .unwrap();
    std::fs::remove_file(&cfg_path).ok();
    assert_eq!(output.status.code(), Some(0));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("duplicate key `mu`"), "stderr was:\n{stderr}");
    // Last value wins.
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.lines().nth(1).unwrap().starts_with("2,"), "stdout:\n{stdout}");
}
