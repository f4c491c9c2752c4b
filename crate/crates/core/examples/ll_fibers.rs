// Fibers of the LL map of A2 and A3 over generic targets, counted by
// multistart Newton: 3 and 16 preimages.

use num_complex::Complex64 as C;
use stokeslab::llmap::{ll_fiber_count, NumericConfig, NumericLLPoint};
use stokeslab::singdata::SingularityClass;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let targets = [
        (2, vec![C::new(0.4, 0.9), C::new(-1.1, 0.3)]),
        (3, vec![C::new(0.3, 0.7), C::new(-1.1, 0.2), C::new(0.5, -0.9)]),
    ];
    for (mu, roots) in targets {
        let p = NumericLLPoint::from_roots(&roots);
        let r = ll_fiber_count(SingularityClass::A(mu), &p, &NumericConfig::fiber())?;
        println!("A{mu}: {} preimages (after half the starts: {}, saturated: {})", r.count, r.count_at_half, r.saturated);
        assert_eq!(r.count, (mu + 1).pow(mu as u32 - 1));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
