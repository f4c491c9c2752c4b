// Dimension of the Jacobi algebra, symbolically in λ and at rational values.

use stokeslab::polyalg::rat;
use stokeslab::singdata::SingularityClass;
use stokeslab::verify::{jacobi_dimension, LambdaMode};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for class in SingularityClass::catalogue(8) {
        let dim = jacobi_dimension(class, &LambdaMode::Symbolic)?;
        println!("{:>4}: dim = {dim}, μ = {}", class.pretty(), class.mu());
        assert_eq!(dim, class.mu());
    }
    for q in [rat(-1, 1), rat(1, 2), rat(7, 3)] {
        let dim = jacobi_dimension(SingularityClass::Et8, &LambdaMode::Value(q.clone()))?;
        println!("Ẽ8 at λ = {q}: {dim}");
    }
    // λ = 1 is a degenerate member of the family.
    assert!(jacobi_dimension(SingularityClass::Et8, &LambdaMode::Value(rat(1, 1))).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
