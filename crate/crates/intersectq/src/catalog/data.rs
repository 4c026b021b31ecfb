//! Stored generator tables. Entries are numerators over a common denominator
//! of 2; mixed tables carry (rational, sqrt-part) numerator pairs. Complex
//! and quaternionic sources are stored pre-expanded to real rows so every
//! matrix here can be audited entry by entry; the symbolic originals live in
//! the `notes` strings and the test module recomputes the expansions.

pub(super) const E6STAR4_COMPONENTS: [[[(i64, i64); 6]; 6]; 4] = [
    [
        [(0, 0), (0, 2), (0, 0), (0, 0), (0, 0), (0, 0)],
        [(-3, 0), (0, -1), (0, 0), (0, 0), (0, 0), (0, 0)],
        [(0, 0), (0, 0), (0, 0), (0, 2), (0, 0), (0, 0)],
        [(0, 0), (0, 0), (-3, 0), (0, -1), (0, 0), (0, 0)],
        [(0, 0), (0, 0), (0, 0), (0, 0), (0, 0), (0, 2)],
        [(0, 0), (0, 0), (0, 0), (0, 0), (-3, 0), (0, -1)],
    ],
    [
        [(2, 0), (0, 0), (2, 0), (0, 0), (2, 0), (0, 0)],
        [(-1, 0), (0, 1), (-1, 0), (0, 1), (-1, 0), (0, 1)],
        [(2, 0), (0, 0), (-1, 0), (0, 1), (-1, 0), (0, -1)],
        [(-1, 0), (0, 1), (-1, 0), (0, -1), (2, 0), (0, 0)],
        [(2, 0), (0, 0), (-1, 0), (0, -1), (-1, 0), (0, 1)],
        [(-1, 0), (0, 1), (2, 0), (0, 0), (-1, 0), (0, -1)],
    ],
    [
        [(2, 0), (0, 0), (2, 0), (0, 0), (-1, 0), (0, 1)],
        [(-1, 0), (0, 1), (-1, 0), (0, 1), (-1, 0), (0, -1)],
        [(2, 0), (0, 0), (-1, 0), (0, 1), (2, 0), (0, 0)],
        [(-1, 0), (0, 1), (-1, 0), (0, -1), (-1, 0), (0, 1)],
        [(2, 0), (0, 0), (-1, 0), (0, -1), (-1, 0), (0, -1)],
        [(-1, 0), (0, 1), (2, 0), (0, 0), (2, 0), (0, 0)],
    ],
    [
        [(2, 0), (0, 0), (2, 0), (0, 0), (-1, 0), (0, -1)],
        [(-1, 0), (0, 1), (-1, 0), (0, 1), (2, 0), (0, 0)],
        [(2, 0), (0, 0), (-1, 0), (0, 1), (-1, 0), (0, 1)],
        [(-1, 0), (0, 1), (-1, 0), (0, -1), (-1, 0), (0, -1)],
        [(2, 0), (0, 0), (-1, 0), (0, -1), (2, 0), (0, 0)],
        [(-1, 0), (0, 1), (2, 0), (0, 0), (-1, 0), (0, 1)],
    ],
];
pub(super) const E6STAR4_EXPECTED: [[[(i64, i64); 6]; 6]; 1] = [[
    [(6, 0), (0, 0), (0, 0), (0, 0), (0, 0), (0, 0)],
    [(-3, 0), (0, 3), (0, 0), (0, 0), (0, 0), (0, 0)],
    [(0, 0), (0, 0), (6, 0), (0, 0), (0, 0), (0, 0)],
    [(-3, 0), (0, -1), (-3, 0), (0, 1), (0, 0), (0, 0)],
    [(0, 0), (0, 0), (0, 0), (0, 0), (6, 0), (0, 0)],
    [(-3, 0), (0, -1), (0, 0), (0, 0), (-3, 0), (0, 1)],
]];
pub(super) const E8_10_COMPONENTS: [[[(i64, i64); 8]; 8]; 10] = [
    [
        [
            (0, 0),
            (0, 2),
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 0),
        ],
        [
            (-3, 0),
            (0, -1),
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 0),
        ],
        [
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 2),
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 0),
        ],
        [
            (0, 0),
            (0, 0),
            (-3, 0),
            (0, -1),
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 0),
        ],
        [
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 2),
            (0, 0),
            (0, 0),
        ],
        [
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (-3, 0),
            (0, -1),
            (0, 0),
            (0, 0),
        ],
        [
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 2),
        ],
        [
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (-3, 0),
            (0, -1),
        ],
    ],
    [
        [
            (0, 0),
            (0, 0),
            (2, 0),
            (0, 0),
            (-2, 0),
            (0, 0),
            (2, 0),
            (0, 0),
        ],
        [
            (0, 0),
            (0, 0),
            (-1, 0),
            (0, 1),
            (1, 0),
            (0, -1),
            (-1, 0),
            (0, 1),
        ],
        [
            (2, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (-2, 0),
            (0, 0),
            (-2, 0),
            (0, 0),
        ],
        [
            (-1, 0),
            (0, 1),
            (0, 0),
            (0, 0),
            (1, 0),
            (0, -1),
            (1, 0),
            (0, -1),
        ],
        [
            (2, 0),
            (0, 0),
            (-2, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (2, 0),
            (0, 0),
        ],
        [
            (-1, 0),
            (0, 1),
            (1, 0),
            (0, -1),
            (0, 0),
            (0, 0),
            (-1, 0),
            (0, 1),
        ],
        [
            (2, 0),
            (0, 0),
            (2, 0),
            (0, 0),
            (2, 0),
            (0, 0),
            (0, 0),
            (0, 0),
        ],
        [
            (-1, 0),
            (0, 1),
            (-1, 0),
            (0, 1),
            (-1, 0),
            (0, 1),
            (0, 0),
            (0, 0),
        ],
    ],
    [
        [
            (0, 0),
            (0, 0),
            (2, 0),
            (0, 0),
            (-2, 0),
            (0, 0),
            (-1, 0),
            (0, 1),
        ],
        [
            (0, 0),
            (0, 0),
            (-1, 0),
            (0, 1),
            (1, 0),
            (0, -1),
            (-1, 0),
            (0, -1),
        ],
        [
            (2, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (1, 0),
            (0, -1),
            (1, 0),
            (0, 1),
        ],
        [
            (-1, 0),
            (0, 1),
            (0, 0),
            (0, 0),
            (1, 0),
            (0, 1),
            (-2, 0),
            (0, 0),
        ],
        [
            (2, 0),
            (0, 0),
            (1, 0),
            (0, -1),
            (0, 0),
            (0, 0),
            (-1, 0),
            (0, -1),
        ],
        [
            (-1, 0),
            (0, 1),
            (1, 0),
            (0, 1),
            (0, 0),
            (0, 0),
            (2, 0),
            (0, 0),
        ],
        [
            (2, 0),
            (0, 0),
            (-1, 0),
            (0, 1),
            (-1, 0),
            (0, 1),
            (0, 0),
            (0, 0),
        ],
        [
            (-1, 0),
            (0, 1),
            (-1, 0),
            (0, -1),
            (-1, 0),
            (0, -1),
            (0, 0),
            (0, 0),
        ],
    ],
    [
        [
            (0, 0),
            (0, 0),
            (2, 0),
            (0, 0),
            (1, 0),
            (0, -1),
            (-1, 0),
            (0, 1),
        ],
        [
            (0, 0),
            (0, 0),
            (-1, 0),
            (0, 1),
            (1, 0),
            (0, 1),
            (-1, 0),
            (0, -1),
        ],
        [
            (2, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (1, 0),
            (0, -1),
            (1, 0),
            (0, -1),
        ],
        [
            (-1, 0),
            (0, 1),
            (0, 0),
            (0, 0),
            (1, 0),
            (0, 1),
            (1, 0),
            (0, 1),
        ],
        [
            (2, 0),
            (0, 0),
            (-2, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (-1, 0),
            (0, 1),
        ],
        [
            (-1, 0),
            (0, 1),
            (1, 0),
            (0, -1),
            (0, 0),
            (0, 0),
            (-1, 0),
            (0, -1),
        ],
        [
            (2, 0),
            (0, 0),
            (2, 0),
            (0, 0),
            (-1, 0),
            (0, 1),
            (0, 0),
            (0, 0),
        ],
        [
            (-1, 0),
            (0, 1),
            (-1, 0),
            (0, 1),
            (-1, 0),
            (0, -1),
            (0, 0),
            (0, 0),
        ],
    ],
    [
        [
            (0, 0),
            (0, 0),
            (2, 0),
            (0, 0),
            (1, 0),
            (0, -1),
            (-1, 0),
            (0, -1),
        ],
        [
            (0, 0),
            (0, 0),
            (-1, 0),
            (0, 1),
            (1, 0),
            (0, 1),
            (2, 0),
            (0, 0),
        ],
        [
            (2, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (1, 0),
            (0, 1),
            (-2, 0),
            (0, 0),
        ],
        [
            (-1, 0),
            (0, 1),
            (0, 0),
            (0, 0),
            (-2, 0),
            (0, 0),
            (1, 0),
            (0, -1),
        ],
        [
            (2, 0),
            (0, 0),
            (1, 0),
            (0, -1),
            (0, 0),
            (0, 0),
            (2, 0),
            (0, 0),
        ],
        [
            (-1, 0),
            (0, 1),
            (1, 0),
            (0, 1),
            (0, 0),
            (0, 0),
            (-1, 0),
            (0, 1),
        ],
        [
            (2, 0),
            (0, 0),
            (-1, 0),
            (0, 1),
            (-1, 0),
            (0, -1),
            (0, 0),
            (0, 0),
        ],
        [
            (-1, 0),
            (0, 1),
            (-1, 0),
            (0, -1),
            (2, 0),
            (0, 0),
            (0, 0),
            (0, 0),
        ],
    ],
    [
        [
            (0, 0),
            (0, 0),
            (2, 0),
            (0, 0),
            (1, 0),
            (0, -1),
            (2, 0),
            (0, 0),
        ],
        [
            (0, 0),
            (0, 0),
            (-1, 0),
            (0, 1),
            (1, 0),
            (0, 1),
            (-1, 0),
            (0, 1),
        ],
        [
            (2, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (-2, 0),
            (0, 0),
            (1, 0),
            (0, 1),
        ],
        [
            (-1, 0),
            (0, 1),
            (0, 0),
            (0, 0),
            (1, 0),
            (0, -1),
            (-2, 0),
            (0, 0),
        ],
        [
            (2, 0),
            (0, 0),
            (1, 0),
            (0, 1),
            (0, 0),
            (0, 0),
            (-1, 0),
            (0, -1),
        ],
        [
            (-1, 0),
            (0, 1),
            (-2, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (2, 0),
            (0, 0),
        ],
        [
            (2, 0),
            (0, 0),
            (-1, 0),
            (0, -1),
            (2, 0),
            (0, 0),
            (0, 0),
            (0, 0),
        ],
        [
            (-1, 0),
            (0, 1),
            (2, 0),
            (0, 0),
            (-1, 0),
            (0, 1),
            (0, 0),
            (0, 0),
        ],
    ],
    [
        [
            (0, 0),
            (0, 0),
            (2, 0),
            (0, 0),
            (-2, 0),
            (0, 0),
            (-1, 0),
            (0, -1),
        ],
        [
            (0, 0),
            (0, 0),
            (-1, 0),
            (0, 1),
            (1, 0),
            (0, -1),
            (2, 0),
            (0, 0),
        ],
        [
            (2, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (1, 0),
            (0, 1),
            (1, 0),
            (0, -1),
        ],
        [
            (-1, 0),
            (0, 1),
            (0, 0),
            (0, 0),
            (-2, 0),
            (0, 0),
            (1, 0),
            (0, 1),
        ],
        [
            (2, 0),
            (0, 0),
            (1, 0),
            (0, 1),
            (0, 0),
            (0, 0),
            (-1, 0),
            (0, 1),
        ],
        [
            (-1, 0),
            (0, 1),
            (-2, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (-1, 0),
            (0, -1),
        ],
        [
            (2, 0),
            (0, 0),
            (-1, 0),
            (0, -1),
            (-1, 0),
            (0, -1),
            (0, 0),
            (0, 0),
        ],
        [
            (-1, 0),
            (0, 1),
            (2, 0),
            (0, 0),
            (2, 0),
            (0, 0),
            (0, 0),
            (0, 0),
        ],
    ],
    [
        [
            (0, 0),
            (0, 0),
            (2, 0),
            (0, 0),
            (1, 0),
            (0, 1),
            (-1, 0),
            (0, -1),
        ],
        [
            (0, 0),
            (0, 0),
            (-1, 0),
            (0, 1),
            (-2, 0),
            (0, 0),
            (2, 0),
            (0, 0),
        ],
        [
            (2, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (1, 0),
            (0, 1),
            (1, 0),
            (0, 1),
        ],
        [
            (-1, 0),
            (0, 1),
            (0, 0),
            (0, 0),
            (-2, 0),
            (0, 0),
            (-2, 0),
            (0, 0),
        ],
        [
            (2, 0),
            (0, 0),
            (-2, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (-1, 0),
            (0, -1),
        ],
        [
            (-1, 0),
            (0, 1),
            (1, 0),
            (0, -1),
            (0, 0),
            (0, 0),
            (2, 0),
            (0, 0),
        ],
        [
            (2, 0),
            (0, 0),
            (2, 0),
            (0, 0),
            (-1, 0),
            (0, -1),
            (0, 0),
            (0, 0),
        ],
        [
            (-1, 0),
            (0, 1),
            (-1, 0),
            (0, 1),
            (2, 0),
            (0, 0),
            (0, 0),
            (0, 0),
        ],
    ],
    [
        [
            (0, 0),
            (0, 0),
            (2, 0),
            (0, 0),
            (1, 0),
            (0, 1),
            (-1, 0),
            (0, 1),
        ],
        [
            (0, 0),
            (0, 0),
            (-1, 0),
            (0, 1),
            (-2, 0),
            (0, 0),
            (-1, 0),
            (0, -1),
        ],
        [
            (2, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (1, 0),
            (0, -1),
            (-2, 0),
            (0, 0),
        ],
        [
            (-1, 0),
            (0, 1),
            (0, 0),
            (0, 0),
            (1, 0),
            (0, 1),
            (1, 0),
            (0, -1),
        ],
        [
            (2, 0),
            (0, 0),
            (1, 0),
            (0, 1),
            (0, 0),
            (0, 0),
            (2, 0),
            (0, 0),
        ],
        [
            (-1, 0),
            (0, 1),
            (-2, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (-1, 0),
            (0, 1),
        ],
        [
            (2, 0),
            (0, 0),
            (-1, 0),
            (0, -1),
            (-1, 0),
            (0, 1),
            (0, 0),
            (0, 0),
        ],
        [
            (-1, 0),
            (0, 1),
            (2, 0),
            (0, 0),
            (-1, 0),
            (0, -1),
            (0, 0),
            (0, 0),
        ],
    ],
    [
        [
            (0, 0),
            (0, 0),
            (2, 0),
            (0, 0),
            (1, 0),
            (0, 1),
            (2, 0),
            (0, 0),
        ],
        [
            (0, 0),
            (0, 0),
            (-1, 0),
            (0, 1),
            (-2, 0),
            (0, 0),
            (-1, 0),
            (0, 1),
        ],
        [
            (2, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (-2, 0),
            (0, 0),
            (1, 0),
            (0, -1),
        ],
        [
            (-1, 0),
            (0, 1),
            (0, 0),
            (0, 0),
            (1, 0),
            (0, -1),
            (1, 0),
            (0, 1),
        ],
        [
            (2, 0),
            (0, 0),
            (1, 0),
            (0, -1),
            (0, 0),
            (0, 0),
            (-1, 0),
            (0, 1),
        ],
        [
            (-1, 0),
            (0, 1),
            (1, 0),
            (0, 1),
            (0, 0),
            (0, 0),
            (-1, 0),
            (0, -1),
        ],
        [
            (2, 0),
            (0, 0),
            (-1, 0),
            (0, 1),
            (2, 0),
            (0, 0),
            (0, 0),
            (0, 0),
        ],
        [
            (-1, 0),
            (0, 1),
            (-1, 0),
            (0, -1),
            (-1, 0),
            (0, 1),
            (0, 0),
            (0, 0),
        ],
    ],
];
pub(super) const E8_10_EXPECTED: [[[(i64, i64); 8]; 8]; 1] = [[
    [
        (-6, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
    ],
    [
        (3, 0),
        (0, -3),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
    ],
    [
        (0, 0),
        (0, 0),
        (-6, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
    ],
    [
        (0, 0),
        (0, 0),
        (3, 0),
        (0, -3),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
    ],
    [
        (0, 0),
        (0, 2),
        (0, 0),
        (0, 2),
        (0, 0),
        (0, 2),
        (0, 0),
        (0, 0),
    ],
    [
        (-3, 0),
        (0, -1),
        (-3, 0),
        (0, -1),
        (-3, 0),
        (0, -1),
        (0, 0),
        (0, 0),
    ],
    [
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 2),
        (0, 0),
        (0, -2),
        (0, 0),
        (0, 2),
    ],
    [
        (0, 0),
        (0, 0),
        (-3, 0),
        (0, -1),
        (3, 0),
        (0, 1),
        (-3, 0),
        (0, -1),
    ],
]];
pub(super) const E8_10_HOST: [[[(i64, i64); 8]; 8]; 1] = [[
    [
        (0, 0),
        (0, 2),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
    ],
    [
        (-3, 0),
        (0, -1),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
    ],
    [
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 2),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
    ],
    [
        (0, 0),
        (0, 0),
        (-3, 0),
        (0, -1),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
    ],
    [
        (2, 0),
        (0, 0),
        (2, 0),
        (0, 0),
        (2, 0),
        (0, 0),
        (0, 0),
        (0, 0),
    ],
    [
        (-1, 0),
        (0, 1),
        (-1, 0),
        (0, 1),
        (-1, 0),
        (0, 1),
        (0, 0),
        (0, 0),
    ],
    [
        (0, 0),
        (0, 0),
        (2, 0),
        (0, 0),
        (-2, 0),
        (0, 0),
        (2, 0),
        (0, 0),
    ],
    [
        (0, 0),
        (0, 0),
        (-1, 0),
        (0, 1),
        (1, 0),
        (0, -1),
        (-1, 0),
        (0, 1),
    ],
]];
pub(super) const E8_5_COMPONENTS: [[[i64; 8]; 8]; 5] = [
    [
        [2, 2, 0, 0, 0, 0, 0, 0],
        [-2, 2, 0, 0, 0, 0, 0, 0],
        [0, 0, 2, -2, 0, 0, 0, 0],
        [0, 2, 2, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 2, 2, 0, 0],
        [0, 0, 0, 0, -2, 2, 0, 0],
        [0, 0, 0, 0, 0, 0, 2, -2],
        [0, 0, 0, 0, 0, 2, 2, 0],
    ],
    [
        [2, 0, 0, 0, 2, 0, 0, 0],
        [0, 2, 0, 0, 0, 2, 0, 0],
        [0, 0, 2, 0, 0, 0, 2, 0],
        [1, 1, 1, 1, 1, 1, 1, 1],
        [2, 0, 0, 0, -2, 0, 0, 0],
        [0, 2, 0, 0, 0, -2, 0, 0],
        [0, 0, 2, 0, 0, 0, -2, 0],
        [1, 1, 1, 1, -1, -1, -1, -1],
    ],
    [
        [2, 0, 0, 0, 0, 2, 0, 0],
        [0, 2, 0, 0, -2, 0, 0, 0],
        [0, 0, 2, 0, 0, 0, 0, -2],
        [1, 1, 1, 1, -1, 1, 1, -1],
        [2, 0, 0, 0, 0, -2, 0, 0],
        [0, 2, 0, 0, 2, 0, 0, 0],
        [0, 0, 2, 0, 0, 0, 0, 2],
        [1, 1, 1, 1, 1, -1, -1, 1],
    ],
    [
        [2, 0, 0, 0, 0, 0, 2, 0],
        [0, 2, 0, 0, 0, 0, 0, 2],
        [0, 0, 2, 0, -2, 0, 0, 0],
        [1, 1, 1, 1, -1, -1, 1, 1],
        [2, 0, 0, 0, 0, 0, -2, 0],
        [0, 2, 0, 0, 0, 0, 0, -2],
        [0, 0, 2, 0, 2, 0, 0, 0],
        [1, 1, 1, 1, 1, 1, -1, -1],
    ],
    [
        [2, 0, 0, 0, 0, 0, 0, 2],
        [0, 2, 0, 0, 0, 0, -2, 0],
        [0, 0, 2, 0, 0, 2, 0, 0],
        [1, 1, 1, 1, -1, 1, -1, 1],
        [2, 0, 0, 0, 0, 0, 0, -2],
        [0, 2, 0, 0, 0, 0, 2, 0],
        [0, 0, 2, 0, 0, -2, 0, 0],
        [1, 1, 1, 1, 1, -1, 1, -1],
    ],
];
pub(super) const E8_5_EXPECTED: [[[i64; 8]; 8]; 1] = [[
    [4, 0, 0, 0, 0, 0, 0, 0],
    [0, 4, 0, 0, 0, 0, 0, 0],
    [0, 0, 4, 0, 0, 0, 0, 0],
    [-2, -2, -2, 2, 0, 0, 0, 0],
    [0, 0, 0, 0, 4, 0, 0, 0],
    [-2, -2, 0, 0, -2, 2, 0, 0],
    [-2, 0, -2, 0, -2, 0, 2, 0],
    [0, -2, -2, 0, -2, 0, 0, 2],
]];
pub(super) const E8_15_COMPONENTS: [[[i64; 8]; 8]; 15] = [
    [
        [2, 2, 0, 0, 0, 0, 0, 0],
        [2, -2, 0, 0, 0, 0, 0, 0],
        [0, 0, 2, 2, 0, 0, 0, 0],
        [0, 0, 2, -2, 0, 0, 0, 0],
        [0, 0, 0, 0, 2, 2, 0, 0],
        [0, 0, 0, 0, 2, -2, 0, 0],
        [0, 0, 0, 0, 0, 0, 2, 2],
        [0, 0, 0, 0, 0, 0, 2, -2],
    ],
    [
        [2, 0, 2, 0, 0, 0, 0, 0],
        [2, 0, -2, 0, 0, 0, 0, 0],
        [0, 2, 0, 2, 0, 0, 0, 0],
        [0, 2, 0, -2, 0, 0, 0, 0],
        [0, 0, 0, 0, 2, 0, 2, 0],
        [0, 0, 0, 0, 2, 0, -2, 0],
        [0, 0, 0, 0, 0, 2, 0, 2],
        [0, 0, 0, 0, 0, 2, 0, -2],
    ],
    [
        [2, 0, 0, 2, 0, 0, 0, 0],
        [2, 0, 0, -2, 0, 0, 0, 0],
        [0, 2, 2, 0, 0, 0, 0, 0],
        [0, 2, -2, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 2, 0, 0, 2],
        [0, 0, 0, 0, 2, 0, 0, -2],
        [0, 0, 0, 0, 0, 2, 2, 0],
        [0, 0, 0, 0, 0, 2, -2, 0],
    ],
    [
        [2, 0, 0, 0, 2, 0, 0, 0],
        [2, 0, 0, 0, -2, 0, 0, 0],
        [0, 2, 0, 0, 0, 2, 0, 0],
        [0, 2, 0, 0, 0, -2, 0, 0],
        [0, 0, 2, 0, 0, 0, 2, 0],
        [0, 0, 2, 0, 0, 0, -2, 0],
        [0, 0, 0, 2, 0, 0, 0, 2],
        [0, 0, 0, 2, 0, 0, 0, -2],
    ],
    [
        [2, 0, 0, 0, 0, 2, 0, 0],
        [2, 0, 0, 0, 0, -2, 0, 0],
        [0, 2, 0, 0, 2, 0, 0, 0],
        [0, 2, 0, 0, -2, 0, 0, 0],
        [0, 0, 2, 0, 0, 0, 0, 2],
        [0, 0, 2, 0, 0, 0, 0, -2],
        [0, 0, 0, 2, 0, 0, 2, 0],
        [0, 0, 0, 2, 0, 0, -2, 0],
    ],
    [
        [2, 0, 0, 0, 0, 0, 2, 0],
        [2, 0, 0, 0, 0, 0, -2, 0],
        [0, 2, 0, 0, 0, 0, 0, 2],
        [0, 2, 0, 0, 0, 0, 0, -2],
        [0, 0, 2, 0, 2, 0, 0, 0],
        [0, 0, 2, 0, -2, 0, 0, 0],
        [0, 0, 0, 2, 0, 2, 0, 0],
        [0, 0, 0, 2, 0, -2, 0, 0],
    ],
    [
        [2, 0, 0, 0, 0, 0, 0, 2],
        [2, 0, 0, 0, 0, 0, 0, -2],
        [0, 2, 0, 0, 0, 0, 2, 0],
        [0, 2, 0, 0, 0, 0, -2, 0],
        [0, 0, 2, 0, 0, 2, 0, 0],
        [0, 0, 2, 0, 0, -2, 0, 0],
        [0, 0, 0, 2, 2, 0, 0, 0],
        [0, 0, 0, 2, -2, 0, 0, 0],
    ],
    [
        [1, 1, 1, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, -1, -1, -1, -1],
        [1, 1, -1, -1, 1, 1, -1, -1],
        [1, 1, -1, -1, -1, -1, 1, 1],
        [1, -1, 1, -1, 1, -1, 1, -1],
        [1, -1, 1, -1, -1, 1, -1, 1],
        [1, -1, -1, 1, 1, -1, -1, 1],
        [1, -1, -1, 1, -1, 1, 1, -1],
    ],
    [
        [1, 1, 1, 1, 1, 1, -1, -1],
        [1, 1, 1, 1, -1, -1, 1, 1],
        [1, 1, -1, -1, 1, 1, 1, 1],
        [1, 1, -1, -1, -1, -1, -1, -1],
        [1, -1, 1, -1, 1, -1, -1, 1],
        [1, -1, 1, -1, -1, 1, 1, -1],
        [1, -1, -1, 1, 1, -1, 1, -1],
        [1, -1, -1, 1, -1, 1, -1, 1],
    ],
    [
        [1, 1, 1, 1, 1, -1, 1, -1],
        [1, 1, 1, 1, -1, 1, -1, 1],
        [1, 1, -1, -1, 1, -1, -1, 1],
        [1, 1, -1, -1, -1, 1, 1, -1],
        [1, -1, 1, -1, 1, 1, 1, 1],
        [1, -1, 1, -1, -1, -1, -1, -1],
        [1, -1, -1, 1, 1, 1, -1, -1],
        [1, -1, -1, 1, -1, -1, 1, 1],
    ],
    [
        [1, 1, 1, 1, 1, -1, -1, 1],
        [1, 1, 1, 1, -1, 1, 1, -1],
        [1, 1, -1, -1, 1, -1, 1, -1],
        [1, 1, -1, -1, -1, 1, -1, 1],
        [1, -1, 1, -1, 1, 1, -1, -1],
        [1, -1, 1, -1, -1, -1, 1, 1],
        [1, -1, -1, 1, 1, 1, 1, 1],
        [1, -1, -1, 1, -1, -1, -1, -1],
    ],
    [
        [1, 1, 1, -1, 1, 1, 1, -1],
        [1, 1, 1, -1, -1, -1, -1, 1],
        [1, 1, -1, 1, 1, 1, -1, 1],
        [1, 1, -1, 1, -1, -1, 1, -1],
        [1, -1, 1, 1, 1, -1, 1, 1],
        [1, -1, 1, 1, -1, 1, -1, -1],
        [1, -1, -1, -1, 1, -1, -1, -1],
        [1, -1, -1, -1, -1, 1, 1, 1],
    ],
    [
        [1, 1, 1, -1, 1, 1, -1, 1],
        [1, 1, 1, -1, -1, -1, 1, -1],
        [1, 1, -1, 1, 1, 1, 1, -1],
        [1, 1, -1, 1, -1, -1, -1, 1],
        [1, -1, 1, 1, 1, -1, -1, -1],
        [1, -1, 1, 1, -1, 1, 1, 1],
        [1, -1, -1, -1, 1, -1, 1, 1],
        [1, -1, -1, -1, -1, 1, -1, -1],
    ],
    [
        [1, 1, 1, -1, 1, -1, 1, 1],
        [1, 1, 1, -1, -1, 1, -1, -1],
        [1, 1, -1, 1, 1, -1, -1, -1],
        [1, 1, -1, 1, -1, 1, 1, 1],
        [1, -1, 1, 1, 1, 1, 1, -1],
        [1, -1, 1, 1, -1, -1, -1, 1],
        [1, -1, -1, -1, 1, 1, -1, 1],
        [1, -1, -1, -1, -1, -1, 1, -1],
    ],
    [
        [1, 1, 1, -1, 1, -1, -1, -1],
        [1, 1, 1, -1, -1, 1, 1, 1],
        [1, 1, -1, 1, 1, -1, 1, 1],
        [1, 1, -1, 1, -1, 1, -1, -1],
        [1, -1, 1, 1, 1, 1, -1, 1],
        [1, -1, 1, 1, -1, -1, 1, -1],
        [1, -1, -1, -1, 1, 1, 1, -1],
        [1, -1, -1, -1, -1, -1, -1, 1],
    ],
];
pub(super) const E8_15_EXPECTED: [[[i64; 8]; 8]; 1] = [[
    [8, 0, 0, 0, 0, 0, 0, 0],
    [-4, 4, 0, 0, 0, 0, 0, 0],
    [-4, 0, 4, 0, 0, 0, 0, 0],
    [-4, 0, 0, 4, 0, 0, 0, 0],
    [-4, 0, 0, 0, 4, 0, 0, 0],
    [-4, 0, 0, 0, 0, 4, 0, 0],
    [-4, 0, 0, 0, 0, 0, 4, 0],
    [10, -2, -2, -2, -2, -2, -2, 2],
]];
pub(super) const E8_2_EXPECTED: [[[i64; 8]; 8]; 1] = [[
    [8, 0, 0, 0, 0, 0, 0, 0],
    [0, 8, 0, 0, 0, 0, 0, 0],
    [0, 0, 8, 0, 0, 0, 0, 0],
    [-4, -4, -4, 4, 0, 0, 0, 0],
    [0, 0, 0, 0, 8, 0, 0, 0],
    [-4, -4, 0, 0, -4, 4, 0, 0],
    [-4, 0, -4, 0, -4, 0, 4, 0],
    [0, -4, -4, 0, -4, 0, 0, 4],
]];
