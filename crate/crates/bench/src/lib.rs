//! Shared helpers for the benchmark targets.

use gagc::code::{GagCode, Message};
use gagc::field::FieldTower;
use gagc::places::{first_places, Divisor};

/// The length-567 code over F_8 used throughout the benchmarks.
pub fn good_example_code(g: usize) -> GagCode {
    let tower = FieldTower::new(2, 3, 6).unwrap();
    let mut places = first_places(&tower, 1, 7);
    places.extend(first_places(&tower, 2, 28));
    places.extend(first_places(&tower, 3, 168));
    GagCode::build(tower, places, Divisor::at_infinity(g)).unwrap()
}

/// A deterministic message for a code.
pub fn sample_message(code: &GagCode, salt: u64) -> Message {
    let q = code.tower().q();
    Message(
        (0..code.k() as u64)
            .map(|i| {
                code.tower()
                    .elem(1, (i.wrapping_mul(0x9e37) ^ salt) % q)
                    .unwrap()
            })
            .collect(),
    )
}
