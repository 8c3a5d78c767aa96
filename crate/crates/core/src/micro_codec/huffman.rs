use std::cmp::Reverse;
use std::collections::BinaryHeap;

/// Optimal prefix-code lengths for `freqs` (plain Huffman).
///
/// Ties are broken by symbol index, merged nodes after all leaves in merge
/// order, so the result is deterministic. A single symbol gets length 1.
/// A code of depth `d` needs total weight at least `Fib(d + 2)`, so with
/// `u64` weights no length can exceed 92 and no length limit is needed below 128.
pub fn huffman_lengths(freqs: &[u64]) -> Vec<u8> {
    let m = freqs.len();
    match m {
        0 => return Vec::new(),
        1 => return vec![1],
        _ => {}
    }
    let mut parent = vec![usize::MAX; 2 * m - 1];
    let mut heap: BinaryHeap<Reverse<(u128, usize)>> = freqs.iter().enumerate().map(|(i, &f)| Reverse((f as u128, i))).collect();
    let mut next = m;
    while heap.len() > 1 {
        let Reverse((fa, a)) = heap.pop().unwrap();
        let Reverse((fb, b)) = heap.pop().unwrap();
        parent[a] = next;
        parent[b] = next;
        heap.push(Reverse((fa + fb, next)));
        next += 1;
    }
    // parents always have larger ids, so a descending sweep fills depths top-down
    let mut depth = vec![0u8; 2 * m - 1];
    for v in (0..2 * m - 2).rev() {
        depth[v] = depth[parent[v]] + 1;
    }
    depth.truncate(m);
    depth
}

/// Canonical codewords (MSB-first integers) for the given lengths, assigned in
/// order of (length, symbol index).
pub fn canonical_codes(lengths: &[u8]) -> Vec<u128> {
    let mut order: Vec<usize> = (0..lengths.len()).collect();
    order.sort_by_key(|&i| (lengths[i], i));
    let mut codes = vec![0u128; lengths.len()];
    let mut code = 0u128;
    let mut prev_len = 0u8;
    for (k, &i) in order.iter().enumerate() {
        let len = lengths[i];
        if k > 0 {
            code += 1;
        }
        code <<= len - prev_len;
        prev_len = len;
        codes[i] = code;
    }
    codes
}

pub fn kraft_sum(lengths: &[u8]) -> f64 {
    lengths.iter().map(|&l| (-(l as f64)).exp2()).sum()
}
