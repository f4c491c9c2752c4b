// The quick verification scorecard, as printed by `stokeslab scorecard --quick`.

use stokeslab::cli::scorecard;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rows = scorecard(true, false, None);
    for r in &rows {
        println!("{r}");
    }
    let failed = rows.iter().filter(|r| !r.passed).count();
    println!("{} rows, {failed} failed", rows.len());
    if failed > 0 {
        return Err(format!("{failed} scorecard rows failed").into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
