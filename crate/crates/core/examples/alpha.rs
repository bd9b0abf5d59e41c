//! Prints `alpha_l` to the requested number of digits with timing.
//!
//! ```text
//! cargo run --release --example alpha -- 2 50
//! ```

use std::time::Instant;

use borderstat::asymptotics::{alpha_limit, EvalConfig};
use borderstat::Counter;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u32>().expect("integer argument"));
    let alphabet = args.next().unwrap_or(2);
    let digits = args.next().unwrap_or(50);

    let counter = Counter::new(alphabet).expect("alphabet size");
    let config = EvalConfig::default();
    let start = Instant::now();
    let eval = alpha_limit(&counter, digits, &config).expect("within budget");
    println!("alpha_{alphabet} = {}", eval.value.render(digits).unwrap());
    println!("enclosure {}", eval.value);
    println!(
        "{:?}, {:.2?}, {} memo entries",
        eval.method,
        start.elapsed(),
        counter.memo_len()
    );
}
