use super::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FIG2: [u32; 20] = [20, 11, 19, 8, 6, 18, 14, 16, 4, 3, 12, 10, 9, 7, 13, 5, 17, 15, 1, 2];

#[test]
fn small_array_examples() {
    let t = build_cartesian(&[3, 1, 2]);
    assert_eq!(t.inorder(0), 1);
    assert_eq!(t.inorder(t.left(0).unwrap()), 0);
    assert_eq!(t.inorder(t.right(0).unwrap()), 2);

    let t = build_cartesian(&[1, 2, 3, 4, 5]);
    assert_eq!((0..5).map(|v| t.st(v)).collect::<Vec<_>>(), vec![5, 4, 3, 2, 1]);
    assert!((0..5).all(|v| t.left(v).is_none()));
    assert!(build_cartesian::<u32>(&[]).is_empty());
}

#[test]
fn figure_two_tree() {
    let t = build_cartesian(&FIG2);
    let root = t.node_at_inorder(18);
    assert_eq!(root, 0);
    assert_eq!((t.ls(root), t.st(root)), (18, 20));
    let v = t.node_at_inorder(4);
    assert_eq!((t.ls(v), t.st(v)), (4, 8));
    let pre: Vec<usize> = (0..20).map(|i| t.node_at_inorder(i) + 1).collect();
    assert_eq!(pre, vec![7, 6, 8, 5, 4, 10, 9, 11, 3, 2, 16, 15, 14, 13, 17, 12, 19, 18, 1, 20]);
    let h = subtree_entropy(&t);
    assert!((h.hst - 28.74).abs() < 0.005, "{}", h.hst);
    assert!((h.hn - 29.2209).abs() < 5e-5, "{}", h.hn);
}

#[test]
fn entropy_examples() {
    assert_eq!(subtree_entropy(&shapes::right_path(1)).hst, 0.0);
    let p4 = subtree_entropy(&shapes::left_path(4)).hst;
    assert!((p4 - (24f64).log2()).abs() < 1e-12);
    assert_eq!(model_entropy(0), 0.0);
    assert_eq!(model_entropy(1), 0.0);
    assert!((model_entropy(2) - 1.0).abs() < 1e-15);
}

#[test]
fn closed_form_matches_recurrence() {
    let table = model_entropy_table(5000);
    for n in [2usize, 3, 5, 10, 20, 100, 1234, 5000] {
        let (a, b) = (table[n], model_entropy(n));
        assert!((a - b).abs() <= 1e-9 * b, "n={n}: {a} vs {b}");
    }
    // direct evaluation of the recurrence in its symmetric form
    let mut h = vec![0.0f64; 30];
    for n in 2..30 {
        let s: f64 = (1..=n).map(|i| h[i - 1] + h[n - i]).sum();
        h[n] = (n as f64).log2() + s / n as f64;
        assert!((h[n] - table[n]).abs() < 1e-12);
    }
}

#[test]
fn model_entropy_rate_approaches_limit() {
    // H_n / n converges like O(lg n / n); the gap must shrink toward the constant
    let rate = |n: usize| model_entropy(n) / n as f64;
    let (a, b) = (rate(100_000), rate(10_000_000));
    assert!((b - 1.7363771).abs() < (a - 1.7363771).abs());
    assert!((b - 1.7363771).abs() < 1e-4, "{b}");
}

#[test]
fn shape_probabilities() {
    assert_eq!(shape_probability(&shapes::right_path(1)), 1.0);
    for t in shapes::all_shapes(2) {
        assert_eq!(shape_probability(&t), 0.5);
    }
    assert!((shape_probability(&shapes::balanced(3)) - 1.0 / 3.0).abs() < 1e-15);
    assert!((shape_probability(&shapes::left_path(3)) - 1.0 / 6.0).abs() < 1e-15);
}

#[test]
fn catalan_enumeration_sums_to_one() {
    let catalan = [1usize, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
    for n in 0..=10 {
        let all = shapes::all_shapes(n);
        assert_eq!(all.len(), catalan[n]);
        let total: f64 = all.iter().map(shape_probability).sum();
        assert!((total - 1.0).abs() < 1e-12, "n={n}: {total}");
        // distinct shapes
        let mut strings: Vec<String> = all.iter().map(to_shape_string).collect();
        strings.sort();
        strings.dedup();
        assert_eq!(strings.len(), catalan[n]);
    }
}

#[test]
fn sampler_small_cases() {
    assert!(sample_random_bst(0, 1).is_empty());
    assert_eq!(sample_random_bst(1, 1).len(), 1);
    assert_eq!(sample_random_bst(50, 9), sample_random_bst(50, 9));
    let balanced = to_shape_string(&shapes::balanced(3));
    let mut counts = std::collections::HashMap::new();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let samples = 60_000;
    for _ in 0..samples {
        *counts.entry(to_shape_string(&sample_with(3, &mut rng))).or_insert(0usize) += 1;
    }
    assert_eq!(counts.len(), 5);
    for (shape, c) in counts {
        let f = c as f64 / samples as f64;
        let want = if shape == balanced { 1.0 / 3.0 } else { 1.0 / 6.0 };
        assert!((f - want).abs() < 0.01, "{shape}: {f}");
    }
}

#[test]
fn sampled_mean_entropy_matches_model() {
    let n = 1000;
    let trials = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mean: f64 = (0..trials).map(|_| log2_inverse_probability(&sample_with(n, &mut rng))).sum::<f64>() / trials as f64;
    let h = model_entropy(n);
    assert!((mean - h).abs() < 0.01 * h, "mean {mean} vs {h}");
}

#[test]
fn formats_roundtrip_and_reject_garbage() {
    for n in 0..=6 {
        for t in shapes::all_shapes(n) {
            assert_eq!(parse_shape_string(&to_shape_string(&t)).unwrap(), t);
            assert_eq!(parse_left_sizes(&to_left_sizes_string(&t)).unwrap(), t);
        }
    }
    assert_eq!(to_shape_string(&shapes::right_path(1)), "(..)");
    assert_eq!(to_shape_string(&BinaryTree::empty()), ".");
    assert_eq!(to_shape_string(&build_cartesian(&[1, 2])), "(.(..))");
    for bad in ["", "(", "(.)", "(...)", "(..)(..)", "(..).", "x", "((..)"] {
        assert!(parse_shape_string(bad).is_err(), "{bad:?}");
    }
    assert!(parse_left_sizes("1").is_err());
    assert!(parse_left_sizes("0 2 0").is_err());
    assert!(parse_left_sizes("a").is_err());
}

#[test]
fn from_children_validates() {
    let t = BinaryTree::from_children(&[None, Some(0), None], &[None, Some(2), None]).unwrap();
    assert_eq!(to_shape_string(&t), "((..)(..))");
    assert!(BinaryTree::from_children(&[Some(1), Some(0)], &[None, None]).is_err());
    assert!(BinaryTree::from_children(&[Some(1), None], &[Some(1), None]).is_err());
    assert!(BinaryTree::from_children(&[None, None], &[None, None]).is_err());
}

#[test]
fn stable_ranks_break_ties_by_position() {
    assert_eq!(stable_ranks(&[5, 1, 5, 1]), vec![2, 0, 3, 1]);
    let keys = [2, 0, 0, 1, 0];
    assert_eq!(build_cartesian(&keys), build_cartesian(&stable_ranks(&keys)));
}

fn leftmost_min(a: &[i32], i: usize, j: usize) -> usize {
    (i..=j).fold(i, |m, k| if a[k] < a[m] { k } else { m })
}

fn check_isomorphism(a: &[i32]) {
    let t = build_cartesian(a);
    let d = t.depths();
    for i in 0..a.len() {
        for j in i..a.len() {
            let w = t.lca_by_climbing(&d, t.node_at_inorder(i), t.node_at_inorder(j));
            assert_eq!(t.inorder(w), leftmost_min(a, i, j), "{a:?} [{i},{j}]");
        }
    }
}

#[test]
fn rmq_equals_lca_on_random_arrays() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..30 {
        let n = rng.random_range(1..=256);
        let range = rng.random_range(1..=2 * n as i32);
        let a: Vec<i32> = (0..n).map(|_| rng.random_range(0..range)).collect();
        check_isomorphism(&a);
    }
}

proptest! {
    #[test]
    fn tree_invariants(a in proptest::collection::vec(0i32..20, 0..120)) {
        let t = build_cartesian(&a);
        let n = t.len();
        let mut seen_in = vec![false; n];
        for v in 0..n {
            let l = t.left(v).map_or(0, |c| t.st(c));
            let r = t.right(v).map_or(0, |c| t.st(c));
            prop_assert_eq!(t.st(v), 1 + l + r);
            prop_assert!(t.ls(v) < t.st(v));
            prop_assert_eq!(t.node_at_inorder(t.inorder(v)), v);
            seen_in[t.inorder(v)] = true;
            if v > 0 {
                let p = t.parent(v).unwrap();
                prop_assert!(t.left(p) == Some(v) || t.right(p) == Some(v));
            }
        }
        prop_assert!(seen_in.into_iter().all(|b| b));
        check_isomorphism(&a);
    }
}

#[test]
fn inorder_from_preorder_left_size_and_left_depth() {
    for n in 0..=7 {
        for t in shapes::all_shapes(n) {
            let ld = t.left_depths();
            for v in 0..n {
                assert_eq!(t.inorder(v), v + t.ls(v) - ld[v] as usize);
            }
        }
    }
}
