// Count distinguished bases and Stokes matrices of the A-series and of D4 by
// closing a seed under the braid and sign groups.

use stokeslab::braid::{orbit_enumerate, OrbitConfig, OrbitMode};
use stokeslab::singdata::{seed_stokes, SingularityClass};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let expected = [("A2", 3, 1), ("A3", 16, 4), ("A4", 125, 25), ("A5", 1296, 216), ("D4", 162, 9)];
    for (name, bases, stokes) in expected {
        let class: SingularityClass = name.parse()?;
        let seed = seed_stokes(class)?;
        let b = orbit_enumerate(&seed.stokes, &OrbitConfig::new(OrbitMode::Bases))?;
        let s = orbit_enumerate(&seed.stokes, &OrbitConfig::new(OrbitMode::Stokes))?;
        println!("{name:>3}: {:>5} bases, {:>4} Stokes matrices  (seed: {})", b.count, s.count, seed.provenance);
        if (b.count, s.count) != (bases, stokes) {
            return Err(format!("{name}: expected {bases}/{stokes}").into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
