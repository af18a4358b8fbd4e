//! The randomized verification harness as a library call: every applicable
//! algorithm against the brute-force oracles, on seeded reproducible
//! matrices, over two very different algebras.
//!
//! ```bash
//! cargo run --example verify_oracles
//! ```

use permanent::cli::{cmd_verify, AlgebraSel};

fn main() {
    for (algebra, max_m, max_n) in [
        (AlgebraSel::Mod(1_000_000_007), 5, 6),
        (AlgebraSel::Mat2z, 4, 5),
        (AlgebraSel::Tropical, 5, 6),
    ] {
        println!("== verify over {algebra} up to {max_m} x {max_n} ==");
        match cmd_verify(algebra, max_m, max_n, 10, 42) {
            Ok(report) => print!("{report}"),
            Err(e) => {
                eprintln!("verification failed (exit {}):\n{}", e.code, e.message);
                std::process::exit(e.code);
            }
        }
        println!();
    }
    println!("the same checks are available from the shell:");
    println!("  perm verify --algebra mod:1000000007 --max-m 5 --max-n 6 --trials 10 --seed 42");
}
