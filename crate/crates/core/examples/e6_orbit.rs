// The E6 orbit: 41472 distinguished bases up to sign, 3456 Stokes matrices up
// to sign conjugation. Runs on all available cores.

use stokeslab::braid::{orbit_enumerate, OrbitConfig, OrbitMode};
use stokeslab::degrees::{deg_ll_simple, stokes_class_count};
use stokeslab::singdata::{seed_stokes, SingularityClass};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let class = SingularityClass::E6;
    let seed = seed_stokes(class)?.stokes;
    let bases = orbit_enumerate(&seed, &OrbitConfig::new(OrbitMode::Bases).label("E6"))?;
    let stokes = orbit_enumerate(&seed, &OrbitConfig::new(OrbitMode::Stokes).label("E6"))?;
    println!("E6 bases:  {} in {:.2}s", bases.count, bases.seconds);
    println!("E6 Stokes: {} in {:.2}s", stokes.count, stokes.seconds);

    // The orbit sizes agree with the closed forms.
    let deg = deg_ll_simple(class)?.deg_ll;
    let classes = stokes_class_count(class)?;
    println!("deg LL = {deg}, Stokes classes = {classes}");
    assert_eq!(deg, bases.count.into());
    assert_eq!(classes, stokes.count.into());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
