//! Sign-partition lists for n = 2..10 as printed in the literature.

use sign_classes::Partition;

pub const SIGN_LISTS: &[(usize, &[&str])] = &[
    (2, &["2", "1^2"]),
    (3, &["3", "2,1"]),
    (4, &["4", "3,1", "2,1^2"]),
    (5, &["5", "4,1", "3,2", "3,1^2"]),
    (6, &["6", "5,1", "4,2", "4,1^2", "3,2,1"]),
    (7, &["7", "6,1", "5,2", "5,1^2", "4,3", "4,2,1", "3,2,1^2"]),
    (8, &["8", "7,1", "6,2", "6,1^2", "5,3", "5,2,1", "4,3,1"]),
    (9, &["9", "8,1", "7,2", "7,1^2", "6,3", "6,2,1", "5,4", "5,3,1", "5,2,1^2"]),
    (
        10,
        &[
            "10", "9,1", "8,2", "8,1^2", "7,3", "7,2,1", "6,4", "6,3,1", "6,2,1^2", "5,4,1",
            "4,3,2,1",
        ],
    ),
];

pub fn sign_list(n: usize) -> Vec<Partition> {
    SIGN_LISTS
        .iter()
        .find(|(m, _)| *m == n)
        .map(|(_, list)| list.iter().map(|s| s.parse().unwrap()).collect())
        .unwrap()
}
