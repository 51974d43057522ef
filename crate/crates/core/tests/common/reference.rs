//! Known-good reference values used as golden data.

/// Derangements of `[8]`: (prefix, count, index range start) on the way to
/// the 1000th member.
pub const DERANGEMENT_8_STEPS: [(&str, u64, u64); 24] = [
    ("1", 0, 0),
    ("2", 2119, 0),
    ("2 1", 265, 0),
    ("2 2", 0, 265),
    ("2 3", 309, 265),
    ("2 4", 309, 574),
    ("2 5", 309, 883),
    ("2 5 1", 53, 883),
    ("2 5 3", 0, 936),
    ("2 5 4", 64, 936),
    ("2 5 4 1", 11, 936),
    ("2 5 4 3", 11, 947),
    ("2 5 4 6", 14, 958),
    ("2 5 4 7", 14, 972),
    ("2 5 4 8", 14, 986),
    ("2 5 4 8 1", 3, 986),
    ("2 5 4 8 3", 3, 989),
    ("2 5 4 8 6", 4, 992),
    ("2 5 4 8 7", 4, 996),
    ("2 5 4 8 7 1", 2, 996),
    ("2 5 4 8 7 3", 2, 998),
    ("2 5 4 8 7 3 1", 1, 998),
    ("2 5 4 8 7 3 6", 1, 999),
    ("2 5 4 8 7 3 6 1", 1, 999),
];

/// Complement sizes listed next to the nonzero derangement rows above.
pub const DERANGEMENT_8_COMPLEMENTS: [(&str, usize); 20] = [
    ("2", 6),
    ("2 1", 6),
    ("2 3", 5),
    ("2 4", 5),
    ("2 5", 5),
    ("2 5 1", 4),
    ("2 5 4", 3),
    ("2 5 4 1", 3),
    ("2 5 4 3", 3),
    ("2 5 4 6", 2),
    ("2 5 4 7", 2),
    ("2 5 4 8", 2),
    ("2 5 4 8 1", 2),
    ("2 5 4 8 3", 2),
    ("2 5 4 8 6", 1),
    ("2 5 4 8 7", 1),
    ("2 5 4 8 7 1", 0),
    ("2 5 4 8 7 3", 0),
    ("2 5 4 8 7 3 1", 0),
    ("2 5 4 8 7 3 6", 0),
];

/// Menage permutations of `[8]`: (prefix, count, index range start) on the
/// way to the 1000th member.
pub const MENAGE_8_STEPS: [(&str, u64, u64); 20] = [
    ("1", 0, 0),
    ("2", 787, 0),
    ("3", 791, 787),
    ("3 1", 0, 787),
    ("3 2", 0, 787),
    ("3 3", 0, 787),
    ("3 4", 159, 787),
    ("3 5", 166, 946),
    ("3 5 1", 24, 946),
    ("3 5 4", 34, 970),
    ("3 5 4 1", 5, 970),
    ("3 5 4 2", 5, 975),
    ("3 5 4 6", 8, 980),
    ("3 5 4 7", 10, 988),
    ("3 5 4 8", 6, 998),
    ("3 5 4 8 1", 1, 998),
    ("3 5 4 8 2", 1, 999),
    ("3 5 4 8 2 1", 0, 999),
    ("3 5 4 8 2 7", 1, 999),
    ("3 5 4 8 2 7 1", 1, 999),
];

/// Lyndon rows: prefix, counts for lengths 1..=12, the transformed series,
/// and the recurrence as (coefficients of a(n), a(n+1), ..., valid from).
pub struct LyndonRow {
    pub prefix: &'static str,
    pub counts: [u64; 12],
    pub transformed: [u64; 12],
    pub coefficients: &'static [u8],
    pub valid_from: usize,
}

pub const LYNDON_ROWS: [LyndonRow; 14] = [
    LyndonRow {
        prefix: "0",
        counts: [1, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335],
        transformed: [1, 1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024],
        coefficients: &[2],
        valid_from: 2,
    },
    LyndonRow {
        prefix: "00",
        counts: [0, 0, 1, 2, 4, 7, 14, 25, 48, 88, 168, 310],
        transformed: [1, 0, 0, 1, 2, 4, 8, 16, 32, 64, 128, 256],
        coefficients: &[2],
        valid_from: 4,
    },
    LyndonRow {
        prefix: "01",
        counts: [0, 1, 1, 1, 2, 2, 4, 5, 8, 11, 18, 25],
        transformed: [1, 0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55],
        coefficients: &[1, 1],
        valid_from: 1,
    },
    LyndonRow {
        prefix: "000",
        counts: [0, 0, 0, 1, 2, 4, 8, 15, 30, 57, 112, 214],
        transformed: [1, 0, 0, 0, 1, 2, 4, 8, 16, 32, 64, 128],
        coefficients: &[2],
        valid_from: 5,
    },
    LyndonRow {
        prefix: "001",
        counts: [0, 0, 1, 1, 2, 3, 6, 10, 18, 31, 56, 96],
        transformed: [1, 0, 0, 1, 1, 2, 4, 7, 13, 24, 44, 81],
        coefficients: &[1, 1, 1],
        valid_from: 1,
    },
    LyndonRow {
        prefix: "010",
        counts: [0, 0, 0, 0, 1, 1, 2, 3, 5, 7, 12, 18],
        transformed: [1, 0, 0, 0, 0, 1, 1, 2, 3, 5, 8, 13],
        coefficients: &[1, 1],
        valid_from: 5,
    },
    LyndonRow {
        prefix: "011",
        counts: [0, 0, 1, 1, 1, 1, 2, 2, 3, 4, 6, 7],
        transformed: [1, 0, 0, 1, 1, 1, 2, 3, 4, 6, 9, 13],
        coefficients: &[1, 0, 1],
        valid_from: 1,
    },
    LyndonRow {
        prefix: "0000",
        counts: [0, 0, 0, 0, 1, 2, 4, 8, 16, 31, 62, 121],
        transformed: [1, 0, 0, 0, 0, 1, 2, 4, 8, 16, 32, 64],
        coefficients: &[2],
        valid_from: 6,
    },
    LyndonRow {
        prefix: "0001",
        counts: [0, 0, 0, 1, 1, 2, 4, 7, 14, 26, 50, 93],
        transformed: [1, 0, 0, 0, 1, 1, 2, 4, 8, 15, 29, 56],
        coefficients: &[1, 1, 1, 1],
        valid_from: 1,
    },
    LyndonRow {
        prefix: "0010",
        counts: [0, 0, 0, 0, 1, 1, 3, 5, 9, 16, 30, 53],
        transformed: [1, 0, 0, 0, 0, 1, 1, 3, 5, 9, 17, 31],
        coefficients: &[1, 1, 1],
        valid_from: 6,
    },
    LyndonRow {
        prefix: "0011",
        counts: [0, 0, 0, 1, 1, 2, 3, 5, 9, 15, 26, 43],
        transformed: [1, 0, 0, 0, 1, 1, 2, 3, 6, 10, 18, 31],
        coefficients: &[1, 0, 1, 1],
        valid_from: 1,
    },
    LyndonRow {
        prefix: "0101",
        counts: [0, 0, 0, 0, 1, 1, 2, 3, 5, 7, 12, 18],
        transformed: [1, 0, 0, 0, 0, 1, 1, 2, 3, 5, 8, 13],
        coefficients: &[1, 1],
        valid_from: 5,
    },
    LyndonRow {
        prefix: "0110",
        counts: [0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 3, 4],
        transformed: [1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 3],
        coefficients: &[1, 0, 1],
        valid_from: 6,
    },
    LyndonRow {
        prefix: "0111",
        counts: [0, 0, 0, 1, 1, 1, 1, 1, 2, 2, 3, 3],
        transformed: [1, 0, 0, 0, 1, 1, 1, 1, 2, 3, 4, 5],
        coefficients: &[1, 0, 0, 1],
        valid_from: 1,
    },
];
