use cpstrata_core::chambers::{enumerate_chambers, Boundary};

fn main() {
    for n in 3..=5 {
        for b in [Boundary::Strict, Boundary::Inclusive] {
            let t = std::time::Instant::now();
            let ch = enumerate_chambers(n, b).unwrap();
            println!("n={n} {b}: {} chambers in {:?}", ch.len(), t.elapsed());
        }
    }
}
