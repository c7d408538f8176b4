use super::partition::Partition;

/// The `p`-core: what remains after removing rim hooks of length `p` until none is left.
///
/// Computed on the abacus: each bead (first-column hook length) slides up its runner
/// as far as possible.
pub fn p_core(lambda: &Partition, p: usize) -> Partition {
    assert!(p >= 1, "p must be positive");
    let k = lambda.len();
    let mut occupied = vec![false; lambda.part(1) + k];
    for i in 1..=k {
        occupied[lambda.part(i) + k - i] = true;
    }
    for runner in 0..p {
        let count = (runner..occupied.len())
            .step_by(p)
            .filter(|&x| occupied[x])
            .count();
        for (slot, x) in (runner..occupied.len()).step_by(p).enumerate() {
            occupied[x] = slot < count;
        }
    }
    let mut beads: Vec<usize> = (0..occupied.len()).filter(|&x| occupied[x]).collect();
    beads.sort_unstable_by(|x, y| y.cmp(x));
    let parts = beads
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (k - 1 - i))
        .collect();
    Partition::new(parts).expect("beta-numbers give a partition")
}

/// Number of rim hooks of length `p` removed to reach the core.
pub fn p_weight(lambda: &Partition, p: usize) -> usize {
    (lambda.n() - p_core(lambda, p).n()) / p
}
