// The exact Lyashko–Looijenga map of A_μ and its discriminant.

use num_complex::Complex64;
use stokeslab::llmap::{critical_values_numeric, discriminant, ll_exact_a, ll_polynomial_a, roots_match, NumericConfig};
use stokeslab::polyalg::rat;
use stokeslab::singdata::SingularityClass;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("LL(A2) = {}", ll_polynomial_a(2)?);
    println!("LL(A3) = {}", ll_polynomial_a(3)?);

    let t = [rat(1, 3), rat(-5, 4), rat(2, 7)];
    let p = ll_exact_a(3, &t)?;
    println!("LL(1/3, −5/4, 2/7) = {p}, discriminant {}", discriminant(&p));

    let tc: Vec<Complex64> = t.iter().map(|q| Complex64::new(num_traits::ToPrimitive::to_f64(q).unwrap(), 0.0)).collect();
    let crit = critical_values_numeric(SingularityClass::A(3), &tc, &NumericConfig::critical())?;
    println!("critical values in good order: {:?}", crit.ordered_values());
    assert!(roots_match(&crit.values, &p.roots()?, 1e-10));

    let degenerate = ll_exact_a(2, &[rat(0, 1), rat(0, 1)])?;
    println!("LL(0, 0) = {degenerate}, on discriminant: {}", discriminant(&degenerate) == rat(0, 1));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
