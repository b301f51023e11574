use cpstrata_core::dga::cohomology;
use cpstrata_core::kriz::{kriz_model, KrizParams};

fn main() {
    let t = std::time::Instant::now();
    let rep = cohomology(&kriz_model(KrizParams::new(2, 4).unwrap(), 14)).unwrap();
    println!("{:?} in {:?}", rep.ranks, t.elapsed());
}
