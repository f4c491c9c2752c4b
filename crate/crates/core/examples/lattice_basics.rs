// Stokes matrix, intersection form, monodromy and Picard–Lefschetz reflections
// of the A4 chain.

use num_bigint::BigInt;
use stokeslab::lattice::{
    is_positive_definite, monodromy_from_stokes, monodromy_product, pl_reflect, symmetrized_form, StokesMatrix,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let s = StokesMatrix::chain(4);
    let form = symmetrized_form(&s);
    println!("intersection form I = S + Sᵗ:\n{}", form.0);
    println!("positive definite: {}", is_positive_definite(&form));

    let m = monodromy_from_stokes(&s);
    let order = m.0.multiplicative_order(100).ok_or("monodromy not of finite order")?;
    println!("monodromy M = −S⁻¹Sᵗ has order {order} (Coxeter number μ+1)");
    assert_eq!(order, 5);
    println!("characteristic polynomial: {}", m.0.charpoly());

    // The ordered product of the reflections in the basis vectors is the monodromy.
    let basis: Vec<Vec<BigInt>> = (0..4)
        .map(|i| (0..4).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    assert_eq!(monodromy_product(&form, &basis)?, m);

    let d = &basis[0];
    let b = &basis[1];
    let r = pl_reflect(&form, d, b)?;
    println!("s_δ1(δ2) = {:?}", r.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
