//! The bundled worked example: 7 elements, 11 sets, radius 5.
//!
//! Small enough for every exact path (enumeration, brute-force optima) yet
//! rich enough to show seven reachable greedy solutions, two possible
//! optima, and a disconnected cost distribution. Tests and the `fixture`
//! CLI subcommand both run against it; `fixtures/worked_example.json` in
//! the repository root is the same instance in file form.

use crate::model::{IscpInstance, Radius};

/// Builds the worked-example instance.
pub fn worked_example() -> IscpInstance {
    IscpInstance::new(
        7,
        vec![
            vec![3, 5],
            vec![4, 6],
            vec![1, 3],
            vec![2, 3, 4],
            vec![1, 5, 6],
            vec![4, 5, 6],
            vec![1, 4, 6, 7],
            vec![1, 3, 4, 6],
            vec![2, 4, 5, 7],
            vec![1, 3, 6, 7],
            vec![1, 2, 4, 6],
        ],
        vec![
            119.0, 117.0, 124.0, 135.0, 128.0, 130.0, 143.0, 144.0, 144.0, 142.0, 141.0,
        ],
        Radius::Abs { abs: 5.0 },
    )
    .expect("bundled example must validate")
}
