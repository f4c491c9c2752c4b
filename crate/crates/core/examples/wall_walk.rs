// Walk a loop in the A2 and A3 parameter spaces and record the Stokes walls
// crossed as a braid word.

use num_complex::Complex64 as C;
use stokeslab::braid::{apply_word, sign_canonical_stokes, stokes_of_tuple, VanishingTuple};
use stokeslab::lattice::StokesMatrix;
use stokeslab::llmap::{circle_path, wall_walk_a, WallConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = WallConfig::default();
    let path = circle_path(&[C::new(0.3, 0.1), C::new(0.0, 0.0)], 1, 1.0, 0.1, 64);
    let w = wall_walk_a(2, &path, 8, &cfg)?;
    println!("A2 loop around t2 = 0: {w}");

    let seed = StokesMatrix::chain(2);
    let s = stokes_of_tuple(&apply_word(&VanishingTuple::seed(&seed), &w)?)?;
    assert_eq!(sign_canonical_stokes(&s)?, sign_canonical_stokes(&seed)?);
    println!("acts trivially on the A2 Stokes class (mod sign)");

    let mut path = circle_path(&[C::new(0.2, -0.1), C::new(0.1, 0.05), C::new(0.0, 0.0)], 2, 0.8, 0.1, 48);
    let w3 = wall_walk_a(3, &path, 6, &cfg)?;
    path.reverse();
    let back = wall_walk_a(3, &path, 6, &cfg)?;
    println!("A3 loop: {w3}, reversed: {back}");
    assert_eq!(back, w3.inverse());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
