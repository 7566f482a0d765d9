//! Named forbidden induced subgraphs.
//!
//! The probe-block obstructions `F1..F3`, the block obstructions `B1..B6` and
//! the gluing obstructions `G1..G16` are stored exactly as drawn: a vertex
//! label list (vertex `i` of the graph is `labels[i]`) and the drawn edge
//! chains, each chain `a - b - c` contributing edges `ab` and `bc`. Labels such
//! as `5a`/`5b` are kept verbatim so each entry can be audited against the
//! drawing. The transcription is checked by tests, not trusted: every entry
//! must be rejected by the brute-force oracle, and `B1`, `B3` must match their
//! algebraic descriptions `(K2+K1)⋆2K1` and `2K1⋆2K1⋆2K1`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{join, union, Graph};

use super::OracleError;

fn drawn(labels: &[&str], chains: &[&[&str]]) -> Graph {
    let index = |l: &str| {
        labels
            .iter()
            .position(|&x| x == l)
            .unwrap_or_else(|| panic!("unknown label {l}"))
    };
    let edges = chains
        .iter()
        .flat_map(|c| c.windows(2).map(|w| (index(w[0]), index(w[1]))))
        .collect::<Vec<_>>();
    Graph::from_edges(labels.len(), edges).expect("catalog edges are valid")
}

const L5: [&str; 5] = ["1", "2", "3", "4", "5"];
const L6: [&str; 6] = ["1", "2", "3", "4", "5", "6"];
const L7: [&str; 7] = ["1", "2", "3", "4", "5", "6", "7"];
const L8: [&str; 8] = ["1", "2", "3", "4", "5", "6", "7", "8"];
const L10: [&str; 10] = ["1", "2", "3", "4", "5", "6", "7", "8", "9", "10"];
const L12: [&str; 12] = [
    "1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11", "12",
];
/// G1–G4: a diamond or C4 on 1..4 glued at 4 to a 5-vertex block.
const LG1: [&str; 8] = ["1", "2", "3", "4", "5a", "5b", "6", "7"];
/// G5–G6: F1 on 1a, 1b, 2, 3, 4 glued at 4.
const LG5: [&str; 8] = ["1a", "1b", "2", "3", "4", "5", "6", "7"];
const LG7: [&str; 9] = ["1a", "1b", "2", "3", "4", "5", "6", "7", "8"];

pub fn f1() -> Graph {
    drawn(&L5, &[&["1", "2", "3", "4", "5", "1", "4", "2", "5"]])
}

pub fn f2() -> Graph {
    drawn(
        &L7,
        &[
            &["1", "2", "3", "4", "5", "7", "6", "4", "2"],
            &["1", "3"],
            &["4", "7"],
        ],
    )
}

pub fn f3() -> Graph {
    drawn(
        &L8,
        &[
            &["1", "2", "3", "4", "5", "6", "7", "8", "6"],
            &["1", "3"],
            &["2", "4"],
            &["5", "7"],
        ],
    )
}

/// `B1..B6`; `i` in `1..=6`.
pub fn b(i: usize) -> Graph {
    const RIM: &[&str] = &["1", "2", "3", "4", "5", "6", "1", "4"];
    match i {
        1 => drawn(
            &["1", "2", "34", "5", "6"],
            &[&["1", "2", "34", "5", "6", "1"], &["1", "5"], &["2", "6"]],
        ),
        2 => drawn(&L6, &[RIM, &["3", "6"]]),
        3 => drawn(&L6, &[RIM, &["3", "6"], &["1", "5", "3"], &["4", "2", "6"]]),
        4 => drawn(
            &L6,
            &[&["1", "2", "3", "4", "5", "6", "1", "3", "6", "4", "1"]],
        ),
        5 => drawn(
            &L6,
            &[
                &["1", "2", "3", "4", "5", "6", "1", "3", "6", "4"],
                &["3", "5"],
                &["2", "6"],
            ],
        ),
        6 => drawn(
            &L6,
            &[
                &["1", "2", "3", "4", "5", "6", "1", "3", "6", "4", "1"],
                &["2", "4"],
                &["2", "6"],
            ],
        ),
        _ => panic!("B{i} is not in the catalog"),
    }
}

/// `G1..G16`; `i` in `1..=16`.
pub fn g(i: usize) -> Graph {
    const DIAMOND_1234: &[&str] = &["2", "4", "3", "2", "1", "3"];
    const C4_1234: &[&str] = &["2", "4", "3", "1", "2"];
    // right-hand 5-vertex blocks of G1..G4
    const FAN: [&[&str]; 1] = [&["5a", "4", "6", "7", "5b", "5a", "7", "4", "5b"]];
    const WHEEL: [&[&str]; 2] = [&["5a", "4", "6", "7", "5b", "5a", "6"], &["7", "4", "5b"]];
    // F1 on 1a, 1b, 2, 3, 4
    const F1_LEFT: [&[&str]; 3] = [&["1a", "3"], &["1a", "1b", "2"], &["1b", "3"]];
    const G5_SPINE: &[&str] = &["1a", "2", "3", "4", "5", "7", "6", "4", "2"];
    const G8_SPINE: &[&str] = &["1a", "2", "3", "4", "5", "6", "8", "7", "5"];
    // middle diamond and the two right-hand variants of G10..G12
    const MID: &[&str] = &["4", "5", "7", "6", "4", "7"];
    const TRIANGLE: &[&str] = &["5", "4", "9", "5"];
    match i {
        1 => drawn(&LG1, &[DIAMOND_1234, FAN[0]]),
        2 => drawn(&LG1, &[C4_1234, FAN[0]]),
        3 => drawn(&LG1, &[DIAMOND_1234, WHEEL[0], WHEEL[1]]),
        4 => drawn(&LG1, &[C4_1234, WHEEL[0], WHEEL[1]]),
        5 => drawn(
            &LG5,
            &[G5_SPINE, F1_LEFT[0], &["4", "7"], F1_LEFT[1], F1_LEFT[2]],
        ),
        6 => drawn(&LG5, &[G5_SPINE, F1_LEFT[0], F1_LEFT[1], F1_LEFT[2]]),
        7 => drawn(
            &LG7,
            &[
                G5_SPINE,
                F1_LEFT[0],
                &["4", "7"],
                F1_LEFT[1],
                F1_LEFT[2],
                &["5", "6", "8", "7"],
            ],
        ),
        8 => drawn(
            &LG7,
            &[
                G8_SPINE,
                &["6", "7"],
                F1_LEFT[0],
                &["2", "4"],
                F1_LEFT[1],
                F1_LEFT[2],
            ],
        ),
        9 => drawn(
            &LG7,
            &[G8_SPINE, F1_LEFT[0], &["2", "4"], F1_LEFT[1], F1_LEFT[2]],
        ),
        10 => drawn(
            &L10,
            &[
                &["2", "4", "3", "1", "2", "3"],
                MID,
                &["8", "10", "9", "7", "8", "9"],
            ],
        ),
        11 => drawn(&L10, &[C4_1234, MID, &["8", "10", "9", "7", "8", "9"]]),
        12 => drawn(&L10, &[C4_1234, MID, &["8", "10", "9", "7", "8"]]),
        13 => drawn(
            &L12,
            &[
                DIAMOND_1234,
                TRIANGLE,
                &["6", "7", "8", "5", "6", "8"],
                &["11", "12", "10", "9", "11", "10"],
            ],
        ),
        14 => drawn(
            &L12,
            &[
                C4_1234,
                TRIANGLE,
                &["6", "7", "8", "5", "6", "8"],
                &["11", "12", "10", "9", "11", "10"],
            ],
        ),
        15 => drawn(
            &L12,
            &[
                C4_1234,
                TRIANGLE,
                &["6", "7", "8", "5", "6"],
                &["11", "12", "10", "9", "11", "10"],
            ],
        ),
        16 => drawn(
            &L12,
            &[
                C4_1234,
                TRIANGLE,
                &["6", "7", "8", "5", "6"],
                &["11", "12", "10", "9", "11"],
            ],
        ),
        _ => panic!("G{i} is not in the catalog"),
    }
}

/// C5 plus the chord 1–4: a triangle 0, 1, 4 on top of the square 1-2-3-4.
pub fn house() -> Graph {
    Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)]).unwrap()
}

/// C6 plus the long chord 0–3.
pub fn domino() -> Graph {
    Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap()
}

/// `P4 ⋆ K1`: path 0-1-2-3, apex 4.
pub fn gem() -> Graph {
    join(&Graph::path(4), &Graph::empty(1))
}

/// `K4` minus the edge 2–3; 0 and 1 are the degree-3 vertices.
pub fn diamond() -> Graph {
    Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
}

/// `2K1 ⋆ 2K1 ⋆ 2K1`; antipodal pairs are (0, 1), (2, 3), (4, 5).
pub fn octahedron() -> Graph {
    let e2 = Graph::empty(2);
    join(&join(&e2, &e2), &e2)
}

/// Every catalog name accepted by [`pattern`], excluding parametrized holes.
pub const NAMES: &[&str] = &[
    "F1",
    "F2",
    "F3",
    "B1",
    "B2",
    "B3",
    "B4",
    "B5",
    "B6",
    "G1",
    "G2",
    "G3",
    "G4",
    "G5",
    "G6",
    "G7",
    "G8",
    "G9",
    "G10",
    "G11",
    "G12",
    "G13",
    "G14",
    "G15",
    "G16",
    "house",
    "domino",
    "gem",
    "diamond",
    "P4",
    "2K2",
    "K2+K1",
    "K3+K1",
    "C4",
    "octahedron",
];

/// Looks up a pattern by name. Besides [`NAMES`], `C<l>` and `hole(<l>)`
/// give the chordless cycle on `l >= 3` vertices.
pub fn pattern(name: &str) -> Result<Graph, OracleError> {
    let unknown = || OracleError::UnknownPattern(String::from(name));
    let numbered = |prefix: &str, max: usize| -> Option<usize> {
        name.strip_prefix(prefix)?
            .parse::<usize>()
            .ok()
            .filter(|&i| (1..=max).contains(&i))
    };
    if let Some(i) = numbered("F", 3) {
        return Ok([f1, f2, f3][i - 1]());
    }
    if let Some(i) = numbered("B", 6) {
        return Ok(b(i));
    }
    if let Some(i) = numbered("G", 16) {
        return Ok(g(i));
    }
    let cycle_len = name
        .strip_prefix("hole(")
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| name.strip_prefix('C'))
        .and_then(|l| l.parse::<usize>().ok());
    if let Some(l) = cycle_len {
        return if l >= 3 {
            Ok(Graph::cycle(l))
        } else {
            Err(unknown())
        };
    }
    let k1 = Graph::empty(1);
    let k2 = Graph::complete(2);
    Ok(match name {
        "house" => house(),
        "domino" => domino(),
        "gem" => gem(),
        "diamond" => diamond(),
        "P4" => Graph::path(4),
        "2K2" => union(&k2, &k2),
        "K2+K1" => union(&k2, &k1),
        "K3+K1" => union(&Graph::complete(3), &k1),
        "octahedron" => octahedron(),
        _ => return Err(unknown()),
    })
}

/// Name of the hole on `l` vertices as used in witnesses.
pub fn hole_name(l: usize) -> String {
    format!("C{l}")
}
