// The κ-extended families of the simple elliptic singularities.

use stokeslab::singdata::{kappa_data, SingularityClass};
use stokeslab::verify::check_kappa_datum;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for class in SingularityClass::elliptic() {
        let d = kappa_data(class).ok_or("missing κ data")?;
        println!("{}: λ = κ^{} family", class.pretty(), d.lambda_power);
        println!("  {}", d.display_in_y());
        let out = check_kappa_datum(&d);
        println!("  {out}");
        assert!(out.passed);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
