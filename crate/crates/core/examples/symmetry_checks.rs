// Symbolic identities for the coordinate symmetries of the D-series and the
// simple elliptic families, plus the negative controls that must fail.

use stokeslab::singdata::{negative_controls, symmetry_data, SingularityClass};
use stokeslab::verify::{check_phi_identity, check_simple_symmetry, check_symmetry, check_unfolding_identity};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for class in SingularityClass::elliptic() {
        for which in ["psi2", "psi3"] {
            let out = check_unfolding_identity(class, which)?;
            println!("{out}");
            assert!(out.passed);
        }
    }
    for mu in 4..=6 {
        let out = check_simple_symmetry(SingularityClass::D(mu), "phi2")?;
        println!("{out}");
        assert!(out.passed);
    }
    for d in symmetry_data(SingularityClass::Et6) {
        let out = check_phi_identity(&d);
        println!("{out}");
        assert!(out.passed);
    }
    for d in negative_controls(SingularityClass::Et8) {
        let out = check_symmetry(&d);
        println!("control {} ({}): passed = {}", d.label, d.note, out.passed);
        assert!(!out.passed);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
