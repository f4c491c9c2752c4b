// Exact multivariate polynomials over ℚ: parsing, arithmetic, substitution and
// Sylvester resultants.

use stokeslab::polyalg::{parse_poly, resultant, vars, MultiPoly};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let v = vars(&["x", "y"]);
    let p = parse_poly("(x + y)^3 - 3*x*y*(x + y)", Some(&v))?;
    println!("(x+y)³ − 3xy(x+y) = {p}");
    assert_eq!(p, parse_poly("x^3 + y^3", Some(&v))?);

    // The discriminant of the cubic x³ + a x + b eliminates x.
    let w = vars(&["x", "a", "b"]);
    let f = parse_poly("x^3 + a*x + b", Some(&w))?;
    let disc = resultant(&f, &f.partial(0), 0)?;
    println!("Res_x(f, f′) = {disc}");
    assert_eq!(disc, parse_poly("4*a^3 + 27*b^2", Some(&w))?);

    // Substitution x ↦ x − 1 in a circle.
    let c = parse_poly("x^2 + y^2 - 1", Some(&v))?;
    let shifted = c.subst(&[parse_poly("x - 1", Some(&v))?, MultiPoly::var(&v, 1)]);
    println!("shifted circle: {shifted}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
