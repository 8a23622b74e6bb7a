//! Published reference values for `k = 2..=5`, embedded so reproduction checks
//! need no external files.

/// `F_n^(k)` for `k = 2..=5` (rows) and `n = 0..=16` (columns).
pub const KSTEP_NUMBERS: [[u64; 17]; 4] = [
    [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 987],
    [0, 0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149, 274, 504, 927, 1705, 3136],
    [0, 0, 0, 1, 1, 2, 4, 8, 15, 29, 56, 108, 208, 401, 773, 1490, 2872],
    [0, 0, 0, 0, 1, 1, 2, 4, 8, 16, 31, 61, 120, 236, 464, 912, 1793],
];

/// `|E(Γ_n^(k))|` for `k = 2..=5` (rows) and `n = 0..=14` (columns).
pub const EDGE_COUNTS: [[u64; 15]; 4] = [
    [0, 1, 2, 5, 10, 20, 38, 71, 130, 235, 420, 744, 1308, 2285, 3970],
    [0, 1, 4, 9, 22, 50, 108, 230, 480, 987, 2008, 4047, 8094, 16084, 31784],
    [0, 1, 4, 12, 28, 67, 154, 344, 752, 1624, 3466, 7327, 15368, 32024, 66356],
    [0, 1, 4, 12, 32, 75, 176, 402, 900, 1984, 4320, 9322, 19956, 42435, 89720],
];

pub const K_RANGE: std::ops::RangeInclusive<usize> = 2..=5;
pub const NUMBERS_N_MAX: usize = 16;
pub const SIZES_N_MAX: usize = 14;

pub fn kstep_number(k: usize, n: usize) -> Option<u64> {
    KSTEP_NUMBERS.get(k.checked_sub(2)?)?.get(n).copied()
}

pub fn edge_count(k: usize, n: usize) -> Option<u64> {
    EDGE_COUNTS.get(k.checked_sub(2)?)?.get(n).copied()
}
