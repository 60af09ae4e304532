//! One PASS/FAIL line per acceptance criterion. `KMCONE_SCALE=quick` runs
//! the reduced configuration.

use kmcone::selfcheck::{run_one, Scale, CRITERIA};

fn main() {
    let scale = match std::env::var("KMCONE_SCALE").as_deref() {
        Ok("quick") => Scale::Quick,
        _ => Scale::Full,
    };
    let only: Option<u32> = std::env::var("KMCONE_ONLY").ok().and_then(|s| s.parse().ok());
    let mut failed = 0;
    for (id, _) in CRITERIA {
        if only.is_some_and(|o| o != id) {
            continue;
        }
        let c = run_one(id, scale);
        println!("{}", c.line());
        if !c.passed {
            failed += 1;
        }
    }
    println!("acceptance: {failed} failed");
    if failed > 0 {
        std::process::exit(1);
    }
}
