// Coxeter–Dynkin diagrams of shipped seeds as Graphviz DOT.

use stokeslab::lattice::coxeter_dynkin;
use stokeslab::singdata::{seed_stokes, SingularityClass};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for class in [SingularityClass::D(4), SingularityClass::E6, SingularityClass::Et6] {
        let g = coxeter_dynkin(&seed_stokes(class)?.stokes);
        assert!(g.is_connected());
        println!("// {class}: {} vertices, {} edge classes", g.vertices, g.edges.len());
        print!("{}", g.to_dot());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
