//! Independent oracles: string-level enumeration and all-pairs Hamming
//! comparison, plain-`u128` recurrences, and the published reference tables.

use fibcube_core::cube_graphs::{check_decomposition, construct, enumerate_k_vertices, enumerate_p_vertices};
use fibcube_core::size_formulas::{
    pcube_size_convolution, pcube_size_iterative, size_convolution, size_iterative, size_linear,
};
use fibcube_core::{golden, kstep_fib, kstep_fib_range, pstep_fib, BigNat, Budget, FamilyTag};

fn all_strings(n: usize) -> Vec<String> {
    (0..1u32 << n)
        .map(|v| if n == 0 { String::new() } else { format!("{v:0n$b}") })
        .collect()
}

fn k_strings(k: usize, n: usize) -> Vec<String> {
    let forbidden = "1".repeat(k);
    all_strings(n).into_iter().filter(|s| !s.contains(&forbidden)).collect()
}

fn p_strings(p: usize, n: usize) -> Vec<String> {
    all_strings(n)
        .into_iter()
        .filter(|s| {
            let ones: Vec<usize> = s.match_indices('1').map(|(i, _)| i).collect();
            ones.windows(2).all(|w| w[1] - w[0] > p)
        })
        .collect()
}

fn all_pairs_edges(vertices: &[String]) -> usize {
    let mut count = 0;
    for (i, a) in vertices.iter().enumerate() {
        for b in &vertices[i + 1..] {
            if a.bytes().zip(b.bytes()).filter(|(x, y)| x != y).count() == 1 {
                count += 1;
            }
        }
    }
    count
}

/// Direct k-term sums in machine integers (valid well before overflow).
fn kstep_u128(k: usize, n_max: usize) -> Vec<u128> {
    let mut f = vec![0u128; k - 1];
    f.push(1);
    while f.len() <= n_max {
        let m = f.len();
        f.push(f[m - k..].iter().sum());
    }
    f.truncate(n_max + 1);
    f
}

#[test]
fn enumeration_matches_string_filter() {
    let b = Budget::default();
    for n in 0..=10 {
        for k in 2..=5 {
            let got: Vec<String> = enumerate_k_vertices(k, n, b).unwrap().iter().map(|w| w.to_string()).collect();
            assert_eq!(got, k_strings(k, n), "k={k} n={n}");
        }
        for p in 1..=4 {
            let got: Vec<String> = enumerate_p_vertices(p, n, b).unwrap().iter().map(|w| w.to_string()).collect();
            assert_eq!(got, p_strings(p, n), "p={p} n={n}");
        }
    }
}

#[test]
fn edge_counts_match_all_pairs_scan() {
    let b = Budget::default();
    for n in 0..=9 {
        for k in 2..=4 {
            let g = construct(FamilyTag::KOrder(k), n, b).unwrap();
            assert_eq!(g.size(), all_pairs_edges(&k_strings(k, n)), "k={k} n={n}");
        }
        for p in 1..=3 {
            let g = construct(FamilyTag::PCube(p), n, b).unwrap();
            assert_eq!(g.size(), all_pairs_edges(&p_strings(p, n)), "p={p} n={n}");
        }
        let q = construct(FamilyTag::Hypercube, n, b).unwrap();
        let expected = if n == 0 { 0 } else { n << (n - 1) };
        assert_eq!(q.size(), expected);
    }
}

#[test]
fn sequence_matches_direct_sums() {
    for k in 2..=8 {
        let direct = kstep_u128(k, 90);
        let ours = kstep_fib_range(k, 90).unwrap();
        for (n, (a, b)) in direct.iter().zip(&ours).enumerate() {
            assert_eq!(BigNat::from(*a), *b, "k={k} n={n}");
        }
    }
}

#[test]
fn reference_tables() {
    for k in golden::K_RANGE {
        for n in 0..=golden::NUMBERS_N_MAX {
            assert_eq!(kstep_fib(k, n).unwrap(), BigNat::from(golden::kstep_number(k, n).unwrap()));
        }
        for n in 0..=golden::SIZES_N_MAX {
            let expected = BigNat::from(golden::edge_count(k, n).unwrap());
            assert_eq!(size_iterative(k, n).unwrap(), expected, "iter k={k} n={n}");
            assert_eq!(size_convolution(k, n).unwrap(), expected, "conv k={k} n={n}");
            if n >= k {
                assert_eq!(size_linear(k, n).unwrap(), expected, "linear k={k} n={n}");
            }
        }
    }
}

#[test]
fn graph_oracle_against_formulas() {
    let b = Budget::default();
    for k in 2..=5 {
        for n in 0..=13 {
            let g = construct(FamilyTag::KOrder(k), n, b).unwrap();
            assert_eq!(BigNat::from(g.order()), kstep_fib(k, n + k).unwrap());
            assert_eq!(BigNat::from(g.size()), size_iterative(k, n).unwrap(), "k={k} n={n}");
        }
    }
    for p in 1..=4 {
        for n in 0..=14 {
            let g = construct(FamilyTag::PCube(p), n, b).unwrap();
            assert_eq!(BigNat::from(g.order()), pstep_fib(p, n + p + 1).unwrap());
            assert_eq!(BigNat::from(g.size()), pcube_size_iterative(p, n).unwrap());
            assert_eq!(BigNat::from(g.size()), pcube_size_convolution(p, n).unwrap());
        }
    }
}

#[test]
fn small_n_special_values() {
    let b = Budget::default();
    for k in 2..=7 {
        for n in 0..k {
            let g = construct(FamilyTag::KOrder(k), n, b).unwrap();
            assert_eq!(g.order(), 1 << n);
            assert_eq!(g.size(), if n == 0 { 0 } else { n << (n - 1) });
        }
        // Q_k minus the vertex 1^k
        let g = construct(FamilyTag::KOrder(k), k, b).unwrap();
        assert_eq!(g.size(), (k << (k - 1)) - k);
    }
}

#[test]
fn decomposition_small_cases() {
    let b = Budget::default();
    for k in 2..=4 {
        for n in k..=9 {
            let r = check_decomposition(k, n, b).unwrap();
            assert!(r.passed(), "k={k} n={n}: {:?}", r.failures);
            assert!(r.disjoint && r.exhaustive);
            assert!(r.blocks.iter().all(|blk| blk.isomorphic));
            for blk in &r.blocks {
                assert_eq!(BigNat::from(blk.size), kstep_fib(k, n - blk.ones - 1 + k).unwrap());
            }
        }
    }
}
