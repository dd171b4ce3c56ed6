use chromatic_ramsey::ramsey::enumerate_ramsey_graphs;

fn main() {
    for n in 7..=10usize {
        let t = std::time::Instant::now();
        let fam = enumerate_ramsey_graphs(4, 4, n, 10_000_000).unwrap();
        println!("(4,4,{n}): {} classes in {:?}", fam.len(), t.elapsed());
    }
}
