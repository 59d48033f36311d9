fn main() {
    for n in [9usize, 10] {
        let t0 = std::time::Instant::now();
        let trees = hyperdom::tree::all_trees(n);
        println!("n={} -> {} trees in {:?}", n, trees.len(), t0.elapsed());
    }
}
