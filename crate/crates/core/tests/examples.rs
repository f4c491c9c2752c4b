mod braid_action {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/braid_action.rs"));
}

mod count_tables {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/count_tables.rs"));
}

mod degree_tables {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/degree_tables.rs"));
}

mod dynkin_diagram {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/dynkin_diagram.rs"));
}

mod e6_orbit {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/e6_orbit.rs"));
}

mod elliptic_orbit {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/elliptic_orbit.rs"));
}

mod jacobi_algebra {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/jacobi_algebra.rs"));
}

mod kappa_extension {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/kappa_extension.rs"));
}

mod lattice_basics {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lattice_basics.rs"));
}

mod ll_fibers {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ll_fibers.rs"));
}

mod ll_map {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ll_map.rs"));
}

mod orbit_counts {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/orbit_counts.rs"));
}

mod polynomial_algebra {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/polynomial_algebra.rs"));
}

mod scorecard {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/scorecard.rs"));
}

mod seed_files {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/seed_files.rs"));
}

mod singularity_catalogue {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/singularity_catalogue.rs"));
}

mod symmetry_checks {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/symmetry_checks.rs"));
}

mod wall_walk {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/wall_walk.rs"));
}

#[test]
fn braid_action_runs() {
    braid_action::run_example().expect("braid_action example should run");
}

#[test]
fn count_tables_runs() {
    count_tables::run_example().expect("count_tables example should run");
}

#[test]
fn degree_tables_runs() {
    degree_tables::run_example().expect("degree_tables example should run");
}

#[test]
fn dynkin_diagram_runs() {
    dynkin_diagram::run_example().expect("dynkin_diagram example should run");
}

#[test]
fn e6_orbit_runs() {
    e6_orbit::run_example().expect("e6_orbit example should run");
}

#[test]
fn elliptic_orbit_runs() {
    elliptic_orbit::run_example().expect("elliptic_orbit example should run");
}

#[test]
fn jacobi_algebra_runs() {
    jacobi_algebra::run_example().expect("jacobi_algebra example should run");
}

#[test]
fn kappa_extension_runs() {
    kappa_extension::run_example().expect("kappa_extension example should run");
}

#[test]
fn lattice_basics_runs() {
    lattice_basics::run_example().expect("lattice_basics example should run");
}

#[test]
fn ll_fibers_runs() {
    ll_fibers::run_example().expect("ll_fibers example should run");
}

#[test]
fn ll_map_runs() {
    ll_map::run_example().expect("ll_map example should run");
}

#[test]
fn orbit_counts_runs() {
    orbit_counts::run_example().expect("orbit_counts example should run");
}

#[test]
fn polynomial_algebra_runs() {
    polynomial_algebra::run_example().expect("polynomial_algebra example should run");
}

#[test]
fn scorecard_runs() {
    scorecard::run_example().expect("scorecard example should run");
}

#[test]
fn seed_files_runs() {
    seed_files::run_example().expect("seed_files example should run");
}

#[test]
fn singularity_catalogue_runs() {
    singularity_catalogue::run_example().expect("singularity_catalogue example should run");
}

#[test]
fn symmetry_checks_runs() {
    symmetry_checks::run_example().expect("symmetry_checks example should run");
}

#[test]
fn wall_walk_runs() {
    wall_walk::run_example().expect("wall_walk example should run");
}
