use kmcone::{CartanType, RootData, StructureTable};
use std::time::Instant;
fn main() {
    let args: Vec<String> = std::env::args().collect();
    let t: CartanType = args[1].parse().unwrap();
    let n: usize = args[2].parse().unwrap();
    let s = Instant::now();
    let tab = StructureTable::compute(&RootData::new(t), n).unwrap();
    println!("{} {} ball={} entries={} {:?}", t, n, tab.ball().len(), tab.nonzero_entries().len(), s.elapsed());
}
