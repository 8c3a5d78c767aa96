use super::tree::BinaryTree;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EntropyReport {
    /// Σ lg st(v), in bits.
    pub hst: f64,
    /// Expected value of `hst` for a random BST of the same size.
    pub hn: f64,
    pub per_node: f64,
}

pub fn subtree_entropy(t: &BinaryTree) -> EntropyReport {
    let n = t.len();
    let hst = log2_inverse_probability(t);
    EntropyReport {
        hst,
        hn: model_entropy(n),
        per_node: if n == 0 { 0.0 } else { hst / n as f64 },
    }
}

/// `lg(1/Prob[t])` under the random-BST distribution, which equals Σ lg st(v).
pub fn log2_inverse_probability(t: &BinaryTree) -> f64 {
    (0..t.len()).map(|v| (t.st(v) as f64).log2()).sum()
}

/// Probability that a random BST on `t.len()` nodes has exactly the shape of `t`.
pub fn shape_probability(t: &BinaryTree) -> f64 {
    (0..t.len()).map(|v| 1.0 / t.st(v) as f64).product()
}

/// Expected subtree-size entropy of a random BST with `n` nodes (closed form).
pub fn model_entropy(n: usize) -> f64 {
    if n < 2 {
        return 0.0;
    }
    let s: f64 = (2..n)
        .map(|i| {
            let i = i as f64;
            i.log2() / ((i + 2.0) * (i + 1.0))
        })
        .sum();
    (n as f64).log2() + 2.0 * (n as f64 + 1.0) * s
}

/// `H_0 ..= H_{n_max}` from the defining recurrence, with a running sum.
pub fn model_entropy_table(n_max: usize) -> Vec<f64> {
    let mut h = Vec::with_capacity(n_max + 1);
    let mut sum = 0.0;
    for n in 0..=n_max {
        let v = if n < 2 { 0.0 } else { (n as f64).log2() + 2.0 * sum / n as f64 };
        h.push(v);
        sum += v;
    }
    h
}
