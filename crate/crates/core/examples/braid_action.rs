// Hurwitz action of the braid group on distinguished bases and the induced
// action on Stokes matrices.

use stokeslab::braid::{apply_word, sign_canonical_stokes, stokes_of_tuple, BraidWord, VanishingTuple};
use stokeslab::lattice::{monodromy_from_stokes, monodromy_product, StokesMatrix};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let seed = StokesMatrix::chain(4);
    let t = VanishingTuple::seed(&seed);

    let w: BraidWord = "[1,2,-3,1]".parse()?;
    let moved = apply_word(&t, &w)?;
    let s = stokes_of_tuple(&moved)?;
    println!("after {w}:\n{}", s.matrix());
    println!("sign-canonical form:\n{}", sign_canonical_stokes(&s)?.matrix());

    // Braid relations hold on the nose.
    let l = apply_word(&t, &BraidWord::new(vec![1, 2, 1]))?;
    let r = apply_word(&t, &BraidWord::new(vec![2, 1, 2]))?;
    assert_eq!(l, r);
    // A word followed by its inverse is the identity.
    assert_eq!(apply_word(&moved, &w.inverse())?, t);
    // The monodromy does not depend on the distinguished basis.
    assert_eq!(monodromy_product(moved.form(), moved.vectors())?, monodromy_from_stokes(&seed));
    println!("braid relations, inverses and monodromy invariance: ok");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
