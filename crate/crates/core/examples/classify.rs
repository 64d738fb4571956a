//! Classification grid of `R_{p,q}` and the period-8 size rule.

use clifford_factor::{classify, Signature};

fn main() {
    for n in 1..=8u32 {
        let row: Vec<String> = (0..=n)
            .rev()
            .map(|p| {
                let (r, s) = classify(Signature::of(p, n - p));
                format!("{r}({s})")
            })
            .collect();
        println!("p+q = {n}: {}", row.join("  "));
    }

    println!();
    for (p, q) in [(1, 0), (0, 1), (2, 1), (0, 2)] {
        let small = Signature::of(p, q);
        let big = Signature::of(p + 8, q);
        let (r0, s0) = classify(small);
        let (r1, s1) = classify(big);
        println!("{small} -> {r0}({s0}),  {big} -> {r1}({s1}),  ratio {}", s1 / s0);
    }
}
