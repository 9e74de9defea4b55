//! Published values the verification targets compare against.

/// Connection set used for `D_2n x Z_p`.
pub const DIHEDRAL_CROSS_S: &str = "1,a,b,c,abc";
/// Connection set used for `Q_8 x Z_p`.
pub const Q8_CROSS_S: &str = "1,a,c,abc^-1,bc";

/// 4-cycles through the edges `{1_0, u_1}`.
pub const DIHEDRAL_EDGE_FOUR_CYCLES: &[(&str, usize)] =
    &[("1", 1), ("b", 4), ("a", 3), ("c", 3), ("abc", 3)];

/// Paths `u_1 - 1_0 - b_1` and whether some 4-cycle contains them.
pub const DIHEDRAL_PATHS_THROUGH_B: &[(&str, bool)] = &[("a", true), ("c", false), ("abc", false)];

/// An element shown not to lie in `S^-1 S` for `D_2n x Z_p`.
pub const DIHEDRAL_NOT_IN_DIFFERENCE: &str = "a^2bc";

/// A row of the neighbourhood table: a vertex, and for each neighbour the
/// other vertices adjacent to that neighbour.
pub struct NeighbourhoodRow {
    pub vertex: &'static str,
    pub entries: &'static [(&'static str, &'static [&'static str])],
}

pub const Q8_NEIGHBOURHOODS: &[NeighbourhoodRow] = &[
    NeighbourhoodRow {
        vertex: "1_0",
        entries: &[
            ("1_1", &["a^-1_0", "c^-1_0", "(a^-1bc)_0", "(b^-1c^-1)_0"]),
            ("a_1", &["a_0", "(ac^-1)_0", "(b^-1c)_0", "(abc^-1)_0"]),
            ("c_1", &["c_0", "(a^-1c)_0", "(a^-1bc^2)_0", "b^-1_0"]),
            (
                "(abc^-1)_1",
                &["(abc^-1)_0", "(bc^-1)_0", "(abc^-2)_0", "(a^-1c^-2)_0"],
            ),
            ("(bc)_1", &["(bc)_0", "(a^-1bc)_0", "b_0", "(ac^2)_0"]),
        ],
    },
    NeighbourhoodRow {
        vertex: "c_1",
        entries: &[
            ("c_0", &["(ac)_1", "(c^2)_1", "(ab)_1", "(bc^2)_1"]),
            (
                "(a^-1c)_0",
                &["(a^-1c)_1", "(a^-1c^2)_1", "b^-1_1", "(abc^2)_1"],
            ),
            ("1_0", &["1_1", "a_1", "(abc^-1)_1", "(bc)_1"]),
            (
                "(a^-1bc^2)_0",
                &["(a^-1bc^2)_1", "(bc^2)_1", "(a^-1bc^3)_1", "(a^-1c^3)_1"],
            ),
            ("b^-1_0", &["b^-1_1", "(a^-1b)_1", "(b^-1c)_1", "(ac^-1)_1"]),
        ],
    },
];

/// Full neighbourhoods of two further vertices.
pub const Q8_EXTRA_NEIGHBOURHOODS: &[(&str, &[&str])] = &[
    (
        "b^-1_1",
        &[
            "b^-1_0",
            "(ab)_0",
            "(b^-1c^-1)_0",
            "(a^-1c)_0",
            "(b^2c^-1)_0",
        ],
    ),
    (
        "(bc^2)_1",
        &["(bc^2)_0", "(a^-1bc^2)_0", "(bc)_0", "(ac^3)_0", "c_0"],
    ),
];

/// `S^-1 S` for `Q_8 x Z_p`.
pub const Q8_DIFFERENCE_SET: &[&str] = &[
    "1", "a", "c", "abc^-1", "bc", "a^-1", "a^-1c", "bc^-1", "a^-1bc", "c^-1", "ac^-1", "abc^-2",
    "b", "b^-1c", "a^-1bc^2", "ac^2", "b^-1c^-1", "b^-1", "a^-1c^-2",
];

/// Vertices with exactly two 4-cycles through them.
pub const Q8_TWO_FOUR_CYCLES: &[&str] = &["1_0", "c_1"];

/// The non-vertex-transitive table: row label, atlas name, connection set.
pub const SMALL_TABLE: &[(&str, &str, &str)] = &[
    ("1", "H1", "1,a,b,c,ab,abc"),
    ("2", "H2", "1,a,b,ab,ac,abc"),
    ("3", "H3", "1,a,b,a^5,ab,a^5b"),
    ("4", "H4", "1,a,b,ab"),
    ("5", "H5", "1,a,b,b^-1,ab,ac,bd,abd"),
    ("6", "H6", "1,a,bc,abc"),
    ("7", "H7", "1,a,c,abc"),
    ("8", "H8", "1,a,g"),
    ("9 (p=3)", "H9(3)", "1,a,c,b,ab,cb"),
    ("9 (p=5)", "H9(5)", "1,a,c,b,ab,cb"),
];

/// Dihedral groups whose Haar graphs are all Cayley, and the first that
/// has a non-Cayley one.
pub const DIHEDRAL_ALL_CAYLEY: &[&str] = &["D4", "D6", "D8", "D10"];
pub const DIHEDRAL_FIRST_FAILURE: &str = "D12";

pub const ABELIAN_GROUPS: &[&str] = &[
    "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z2xZ2", "Z2xZ4",
];

pub const DEFAULT_DIHEDRAL_PARAMS: &[(usize, usize)] =
    &[(3, 3), (3, 5), (4, 3), (5, 3), (6, 3), (3, 7)];
pub const DEFAULT_Q8_PRIMES: &[usize] = &[3, 5, 7, 11];
