// Stokes-mode orbit of the simple elliptic singularity Ẽ6 (76545 classes), and
// the budgeted run for Ẽ8, whose orbit is far beyond desk scale.

use stokeslab::braid::{orbit_enumerate, OrbitConfig, OrbitMode};
use stokeslab::lattice::{radical_rank, symmetrized_form};
use stokeslab::singdata::{seed_stokes, SingularityClass};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let et6 = seed_stokes(SingularityClass::Et6)?;
    println!("Ẽ6 seed from {} ({}), radical rank {}", et6.provenance, et6.source, radical_rank(&symmetrized_form(&et6.stokes)));
    let r = orbit_enumerate(&et6.stokes, &OrbitConfig::new(OrbitMode::Stokes).label("Et6"))?;
    println!("Ẽ6 Stokes classes: {} ({:.2}s)", r.count, r.seconds);
    assert_eq!(r.count, 76545);

    let et8 = seed_stokes(SingularityClass::Et8)?;
    let cfg = OrbitConfig::new(OrbitMode::Stokes).label("Et8").budget_states(5_000);
    let r = orbit_enumerate(&et8.stokes, &cfg)?;
    println!("Ẽ8 with a 5000-state budget: {} states, truncated = {} ({:?})", r.count, r.truncated, r.reason);
    assert!(r.truncated);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
