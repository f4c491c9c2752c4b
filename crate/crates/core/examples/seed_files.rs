// Seeds: built-in chains, Thom–Sebastiani tensor products, shipped JSON data
// and user-supplied seed files.

use std::io::Write;

use stokeslab::lattice::{IntMatrix, StokesMatrix};
use stokeslab::singdata::{load_seed_file, seed_stokes, tensor_stokes, validate_seed, SeedFile, SingularityClass};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for class in SingularityClass::catalogue(8) {
        let r = seed_stokes(class)?;
        validate_seed(class, &r.stokes)?;
        println!("{:>4}: {:<14} {}", class.pretty(), r.provenance.to_string(), r.source);
    }

    // Ẽ7 is the tensor product of two A3 chains.
    let t = tensor_stokes(&[StokesMatrix::chain(3), StokesMatrix::chain(3)])?;
    assert_eq!(t, seed_stokes(SingularityClass::Et7)?.stokes);

    // A D9 seed supplied from a file.
    let mut m = IntMatrix::identity(9);
    for k in 0..7 {
        m[(k, k + 1)] = (-1).into();
    }
    m[(6, 8)] = (-1).into();
    let d9 = StokesMatrix::new(m)?;
    let file = SeedFile { class: "D9".into(), mu: 9, upper: d9.upper(), source: "chain with a fork".into() };
    let dir = std::env::temp_dir().join(format!("stokeslab-seed-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("d9.json");
    std::fs::File::create(&path)?.write_all(serde_json::to_string_pretty(&file)?.as_bytes())?;
    let r = load_seed_file(&path, Some(SingularityClass::D(9)))?;
    println!("D9 from file: provenance {}", r.provenance);
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
