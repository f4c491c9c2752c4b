// Normal forms, weights and unfoldings of the simple and simple elliptic
// singularities.

use stokeslab::polyalg::rat;
use stokeslab::singdata::SingularityClass;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for class in SingularityClass::catalogue(8) {
        let w = class.weights();
        let weights: Vec<String> = w.var_weights.iter().map(|q| q.to_string()).collect();
        println!("{:>4}  μ = {:>2}  f = {:<28} weights ({})", class.pretty(), class.mu(), class.normal_form().to_string(), weights.join(", "));
        assert_eq!(class.normal_form().weighted_degree(&w.var_weights), Some(rat(1, 1)));
    }
    let f = SingularityClass::Et7.unfolding_in(&rat(3, 1));
    println!("\nẼ7 unfolding at λ = 3: {f}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
