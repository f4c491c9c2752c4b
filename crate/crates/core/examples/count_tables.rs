// Stokes-class and basis counts from deg LL and the symmetry group orders.

use stokeslab::degrees::{counts, quotient_degree, u_data};
use stokeslab::singdata::SingularityClass;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // The closed form needs μ ≥ 2 (it gives 1/2 for A1, whose orbit is a single point).
    for class in SingularityClass::catalogue(8).into_iter().filter(|c| c.mu() >= 2) {
        let row = counts(class)?;
        println!("{}", serde_json::to_string(&row)?);
    }
    let ((p, q, r), u2) = u_data(SingularityClass::Et6)?;
    let deg = quotient_degree(SingularityClass::Et6)?;
    println!("Ẽ6: U1 from ({p},{q},{r}), |U2| = {u2}, quotient degree {deg}; 24800580 / {deg} = {}", 24_800_580 / deg);
    assert_eq!(deg, 324);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
