//! Published Temperley–Lieb tables used as references.

/// Nonzero `e_{n,k}` in characteristic 0, `0 ≤ k ≤ n ≤ 16`.
pub const E_CHAR0: &[(u64, u64, i8)] = &[
    (0, 0, 1), (1, 1, 1), (2, 0, -1), (2, 2, 1), (3, 3, 1), (4, 4, 1), (5, 3, -1), (5, 5, 1),
    (6, 0, 1), (6, 2, -1), (6, 6, 1), (7, 7, 1), (8, 0, -1), (8, 2, 1), (8, 6, -1), (8, 8, 1),
    (9, 3, 1), (9, 5, -1), (9, 9, 1), (10, 10, 1), (11, 3, -1), (11, 5, 1), (11, 9, -1),
    (11, 11, 1), (12, 0, 1), (12, 2, -1), (12, 6, 1), (12, 8, -1), (12, 12, 1), (13, 13, 1),
    (14, 0, -1), (14, 2, 1), (14, 6, -1), (14, 8, 1), (14, 12, -1), (14, 14, 1), (15, 3, 1),
    (15, 5, -1), (15, 9, 1), (15, 11, -1), (15, 15, 1), (16, 16, 1),
];

/// Simple dimensions `(n, k, dim)` in characteristic 0, `n ≤ 16`.
pub const DIMS_CHAR0: &[(u64, u64, u64)] = &[
    (0, 0, 1), (1, 1, 1), (2, 0, 1), (2, 2, 1), (3, 1, 1), (3, 3, 1), (4, 0, 1), (4, 2, 3),
    (4, 4, 1), (5, 1, 1), (5, 3, 4), (5, 5, 1), (6, 0, 1), (6, 2, 9), (6, 4, 4), (6, 6, 1),
    (7, 1, 1), (7, 3, 13), (7, 5, 6), (7, 7, 1), (8, 0, 1), (8, 2, 28), (8, 4, 13), (8, 6, 7),
    (8, 8, 1), (9, 1, 1), (9, 3, 41), (9, 5, 27), (9, 7, 7), (9, 9, 1), (10, 0, 1), (10, 2, 90),
    (10, 4, 41), (10, 6, 34), (10, 8, 9), (10, 10, 1), (11, 1, 1), (11, 3, 131), (11, 5, 110),
    (11, 7, 34), (11, 9, 10), (11, 11, 1), (12, 0, 1), (12, 2, 297), (12, 4, 131), (12, 6, 144),
    (12, 8, 54), (12, 10, 10), (12, 12, 1), (13, 1, 1), (13, 3, 428), (13, 5, 429),
    (13, 7, 144), (13, 9, 64), (13, 11, 12), (13, 13, 1), (14, 0, 1), (14, 2, 1001),
    (14, 4, 428), (14, 6, 573), (14, 8, 273), (14, 10, 64), (14, 12, 13), (14, 14, 1),
    (15, 1, 1), (15, 3, 1429), (15, 5, 1638), (15, 7, 573), (15, 9, 337), (15, 11, 90),
    (15, 13, 13), (15, 15, 1), (16, 0, 1), (16, 2, 3432), (16, 4, 1429), (16, 6, 2211),
    (16, 8, 1260), (16, 10, 337), (16, 12, 103), (16, 14, 15), (16, 16, 1),
];

/// Simple dimensions `(n, k, dim)` in characteristic 2, `n ≤ 16`.
pub const DIMS_CHAR2: &[(u64, u64, u64)] = &[
    (0, 0, 1), (1, 1, 1), (2, 0, 1), (2, 2, 1), (3, 1, 1), (3, 3, 1), (4, 0, 1), (4, 2, 3),
    (4, 4, 1), (5, 1, 1), (5, 3, 4), (5, 5, 1), (6, 0, 1), (6, 2, 9), (6, 4, 4), (6, 6, 1),
    (7, 1, 1), (7, 3, 13), (7, 5, 6), (7, 7, 1), (8, 0, 1), (8, 2, 27), (8, 4, 13), (8, 6, 7),
    (8, 8, 1), (9, 1, 1), (9, 3, 40), (9, 5, 27), (9, 7, 7), (9, 9, 1), (10, 0, 1), (10, 2, 81),
    (10, 4, 40), (10, 6, 34), (10, 8, 9), (10, 10, 1), (11, 1, 1), (11, 3, 121), (11, 5, 110),
    (11, 7, 34), (11, 9, 10), (11, 11, 1), (12, 0, 1), (12, 2, 243), (12, 4, 121), (12, 6, 144),
    (12, 8, 54), (12, 10, 10), (12, 12, 1), (13, 1, 1), (13, 3, 364), (13, 5, 429),
    (13, 7, 144), (13, 9, 64), (13, 11, 12), (13, 13, 1), (14, 0, 1), (14, 2, 729),
    (14, 4, 364), (14, 6, 573), (14, 8, 272), (14, 10, 64), (14, 12, 13), (14, 14, 1),
    (15, 1, 1), (15, 3, 1093), (15, 5, 1638), (15, 7, 573), (15, 9, 336), (15, 11, 90),
    (15, 13, 13), (15, 15, 1), (16, 0, 1), (16, 2, 2187), (16, 4, 1093), (16, 6, 2211),
    (16, 8, 1245), (16, 10, 336), (16, 12, 103), (16, 14, 15), (16, 16, 1),
];
