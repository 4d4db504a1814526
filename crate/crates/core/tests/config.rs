use apstrip::harness::{parse_config, run_experiment, ExperimentConfig, ExperimentId};
use std::path::PathBuf;

fn configs_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("configs")
}

#[test]
fn one_shipped_config_per_experiment() {
    for id in ExperimentId::ALL {
        let path = configs_dir().join(format!("{id}.conf"));
        let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let cfg = parse_config(&text).unwrap();
        assert_eq!(cfg.experiment, id);
    }
}

#[test]
fn printed_config_parses_back() {
    for id in ExperimentId::ALL {
        let cfg = ExperimentConfig::defaults(id);
        let again = parse_config(&cfg.to_text()).unwrap();
        assert_eq!(again, cfg, "{id}");
    }
}

#[test]
fn comments_blank_lines_and_spacing_are_ignored() {
    let a = parse_config("experiment = lemma3\ntau = 1, 2.5\n").unwrap();
    let b = parse_config("# shifts\n\n  experiment=lemma3   # inline\n\ttau =1,2.5\n").unwrap();
    assert_eq!(a, b);
    assert_eq!(a.reals("tau"), &[1.0, 2.5]);
}

#[test]
fn malformed_configs_are_rejected() {
    for text in [
        "",
        "R = 3\n",
        "experiment = lemma1\nR\n",
        "experiment = lemma1\nR = three\n",
        "experiment = lemma1\nR = 1.5\n",
        "experiment = lemma1\nexperiment = lemma2\n",
        "experiment = lemma3\ntau = 0.5\n",
        "experiment = theorem2-rate\nm = \n",
        "experiment = kernel-properties\nh = 0.02\n",
    ] {
        assert!(parse_config(text).is_err(), "{text:?} accepted");
    }
}

#[test]
fn defaults_fill_missing_keys() {
    let cfg = parse_config("experiment = theorem4-separation\np' = 3\n").unwrap();
    assert_eq!(cfg.real("p_prime"), 3.0);
    assert_eq!(cfg.real("p"), 1.0);
    assert_eq!(cfg.real("p0"), 1.5);
}

#[test]
fn metadata_records_the_config() {
    let cfg = parse_config("experiment = lemma2\nq_max = 4\nj_max = 10\n").unwrap();
    let table = run_experiment(&cfg).unwrap();
    assert_eq!(table.metadata.experiment, "lemma2");
    assert!(table.metadata.config.contains("q_max = 4"));
    assert!(table.passed());
}
