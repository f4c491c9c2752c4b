// Degrees of the LL map for all families, and the independent Segre-class
// route for the simple elliptic ones.

use stokeslab::degrees::{deg_c_from_lambda_orders, deg_ll, segre_degree_for, segre_inputs};
use stokeslab::singdata::SingularityClass;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for class in [SingularityClass::A(4), SingularityClass::D(5), SingularityClass::E6, SingularityClass::E7, SingularityClass::E8] {
        let d = deg_ll(class)?;
        println!("{:>4}: deg LL = {:>12} = {}", class.pretty(), d.deg_ll, d.factorization_string());
    }
    for class in SingularityClass::elliptic() {
        let d = deg_ll(class)?;
        let seg = segre_degree_for(class)?;
        let inputs = segre_inputs(class)?;
        println!(
            "{:>4}: deg LL = {:>12} = {:<18} Segre route {seg}  (d = {}, a = {:?})",
            class.pretty(),
            d.deg_ll,
            d.factorization_string(),
            inputs.d,
            inputs.a
        );
        assert_eq!(seg, d.deg_ll.clone().into());
        for (k, v) in deg_c_from_lambda_orders(class)? {
            println!("       k = {k}: −deg C normalised = {v}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
