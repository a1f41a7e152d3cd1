//! Every example runs to completion and produces sensible output.

#![allow(dead_code)]

mod gamma {
    include!("../examples/gamma.rs");
}
mod polynomials {
    include!("../examples/polynomials.rs");
}
mod spectrum {
    include!("../examples/spectrum.rs");
}
mod wavefunction {
    include!("../examples/wavefunction.rs");
}
mod ladder {
    include!("../examples/ladder.rs");
}
mod free_particle {
    include!("../examples/free_particle.rs");
}
mod verification {
    include!("../examples/verification.rs");
}
mod collapse {
    include!("../examples/collapse.rs");
}
mod figure_data {
    include!("../examples/figure_data.rs");
}

#[test]
fn text_examples_produce_output() {
    for (name, lines) in [
        ("gamma", gamma::run_example().unwrap()),
        ("polynomials", polynomials::run_example().unwrap()),
        ("spectrum", spectrum::run_example().unwrap()),
        ("wavefunction", wavefunction::run_example().unwrap()),
        ("ladder", ladder::run_example().unwrap()),
        ("free_particle", free_particle::run_example().unwrap()),
        ("collapse", collapse::run_example().unwrap()),
    ] {
        assert!(!lines.is_empty(), "{name}");
        assert!(lines.iter().all(|l| !l.contains("NaN")), "{name}: {lines:?}");
    }
}

#[test]
fn verification_example_passes() {
    let reports = verification::run_example().unwrap();
    assert!(reports.len() > 20);
    assert!(reports.iter().all(|r| r.passed), "{reports:?}");
}

#[test]
fn figure_data_example_writes_every_panel() {
    let paths = figure_data::run_example().unwrap();
    assert_eq!(paths.len(), 9);
    assert!(paths.iter().all(|p| p.exists()));
}
