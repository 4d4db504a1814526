//! The ternary set `I`, its levels and the arithmetic progressions `I(q)`.

use apstrip::separators::{is_in_i, level, progression_for_shift};

fn main() -> apstrip::Result<()> {
    let members: Vec<i64> = (-30..=30).filter(|&n| is_in_i(n)).collect();
    println!("I ∩ [-30, 30] = {members:?}");
    for n in [1, 3, 9, 10, 28, -2, -6] {
        println!("level({n}) = {:?}", level(n));
    }
    for q in [1, 2, -1, 6, 9, -12] {
        let p = progression_for_shift(q)?;
        let first: Vec<i64> = (0..5).map(|j| p.element(j)).collect();
        let leaves: Vec<bool> = first.iter().map(|&n| is_in_i(n) && !is_in_i(n + q)).collect();
        println!("I({q:>3}): start {:>4}, difference {:>3}, first {first:?}, n in I and n+q not: {leaves:?}", p.start, p.difference);
    }
    Ok(())
}
