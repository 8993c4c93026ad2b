//! Hand-built 3-simultaneous edge colorings of `K_7` (7 colors) and `K_9`
//! (9 colors). Each row is `(i, j, [c1, c2, c3])` with 1-based vertices.

pub(super) const K7: [(usize, usize, [u32; 3]); 21] = [
    (1, 2, [5, 7, 6]),
    (1, 3, [2, 3, 1]),
    (1, 4, [3, 2, 7]),
    (1, 5, [6, 1, 5]),
    (1, 6, [7, 6, 3]),
    (1, 7, [1, 5, 2]),
    (2, 3, [7, 2, 5]),
    (2, 4, [6, 1, 4]),
    (2, 5, [1, 6, 7]),
    (2, 6, [4, 5, 2]),
    (2, 7, [2, 4, 1]),
    (3, 4, [1, 7, 2]),
    (3, 5, [4, 5, 3]),
    (3, 6, [5, 4, 7]),
    (3, 7, [3, 1, 4]),
    (4, 5, [7, 4, 1]),
    (4, 6, [2, 3, 6]),
    (4, 7, [4, 6, 3]),
    (5, 6, [3, 7, 4]),
    (5, 7, [5, 3, 6]),
    (6, 7, [6, 2, 5]),
];

pub(super) const K9: [(usize, usize, [u32; 3]); 36] = [
    (1, 2, [2, 3, 4]),
    (1, 3, [1, 4, 3]),
    (1, 4, [4, 1, 2]),
    (1, 5, [3, 2, 6]),
    (1, 6, [6, 7, 8]),
    (1, 7, [7, 8, 5]),
    (1, 8, [8, 5, 1]),
    (1, 9, [5, 6, 7]),
    (2, 3, [9, 5, 6]),
    (2, 4, [5, 9, 7]),
    (2, 5, [6, 7, 8]),
    (2, 6, [3, 8, 9]),
    (2, 7, [8, 4, 2]),
    (2, 8, [4, 6, 5]),
    (2, 9, [7, 2, 3]),
    (3, 4, [6, 7, 9]),
    (3, 5, [7, 8, 5]),
    (3, 6, [8, 6, 1]),
    (3, 7, [4, 1, 7]),
    (3, 8, [5, 3, 8]),
    (3, 9, [3, 9, 4]),
    (4, 5, [8, 6, 1]),
    (4, 6, [7, 2, 4]),
    (4, 7, [1, 5, 8]),
    (4, 8, [9, 8, 6]),
    (4, 9, [2, 4, 5]),
    (5, 6, [9, 1, 7]),
    (5, 7, [5, 3, 9]),
    (5, 8, [2, 9, 3]),
    (5, 9, [1, 5, 2]),
    (6, 7, [2, 9, 3]),
    (6, 8, [1, 4, 2]),
    (6, 9, [4, 3, 6]),
    (7, 8, [3, 2, 4]),
    (7, 9, [9, 7, 1]),
    (8, 9, [6, 1, 9]),
];
