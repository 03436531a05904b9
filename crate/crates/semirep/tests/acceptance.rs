//! The acceptance checklist as an integration suite: one test per
//! criterion, each printing its pass/fail line. The stretch criterion and
//! the full-profile embedding sizes run behind `--ignored`.

use semirep::verify::{run_criterion, Profile, Status, VerifyConfig};

fn run(id: usize) {
    run_with_profile(id, Profile::Quick)
}

fn run_with_profile(id: usize, profile: Profile) {
    let config = VerifyConfig {
        profile,
        ..VerifyConfig::default()
    };
    let outcome = run_criterion(id, &config);
    println!("{outcome}");
    match outcome.status {
        Status::Pass => {}
        Status::Inconclusive if id == 2 => {
            // the 27-vertex search may exhaust its budget without failing
        }
        _ => panic!("criterion {id} {}: {}", outcome.status, outcome.detail),
    }
}

#[test]
fn criterion_01_non_representability() {
    run(1);
}

#[test]
#[ignore = "stretch: up to two hours of search budget"]
fn criterion_02_stretch_27_vertex_search() {
    run_with_profile(2, Profile::Full);
}

#[test]
fn criterion_03_five_vertex_completeness() {
    run(3);
}

#[test]
fn criterion_04_oracle_equivalence() {
    run(4);
}

#[test]
fn criterion_05_coloring_and_triangle_lift() {
    run(5);
}

#[test]
fn criterion_06_sp_pipelines() {
    run(6);
}

#[test]
fn criterion_07_lex_orientations() {
    run(7);
}

#[test]
fn criterion_08_bipartiteness_odd_cycles() {
    run(8);
}

#[test]
fn criterion_09_embedding_pipelines() {
    run(9);
}

#[test]
#[ignore = "stretch: adds the 65k- and 54k-vertex boundary instances"]
fn criterion_09_embedding_pipelines_full() {
    run_with_profile(9, Profile::Full);
}

#[test]
fn criterion_10_template_checksums() {
    run(10);
}

#[test]
fn criterion_11_cluster_example() {
    run(11);
}

#[test]
fn criterion_12_uniform_word_consistency() {
    run(12);
}
