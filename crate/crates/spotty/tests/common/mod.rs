#![allow(dead_code)]

use spotty::code::{ByteLayout, GeneratorMatrix};
use spotty::weight::DistributionTable;
use spotty::{matrix_file, Polynomial};

pub const EXAMPLE_MATRIX: &str = "\
m=4 b=3 t=2
1 0 0  u+u2 0  0
0 u 0  u2   0  u3
0 0 u2 0    u3 0
";

pub fn example_matrix() -> GeneratorMatrix {
    matrix_file::parse_matrix(EXAMPLE_MATRIX).unwrap()
}

/// Codeword counts per α-vector for the example code, as published.
pub const EXAMPLE_DISTRIBUTION: [([u32; 4], u64); 10] = [
    ([2, 0, 0, 0], 1),
    ([0, 2, 0, 0], 18),
    ([0, 0, 2, 0], 88),
    ([0, 0, 0, 2], 104),
    ([1, 1, 0, 0], 3),
    ([1, 0, 1, 0], 7),
    ([1, 0, 0, 1], 5),
    ([0, 1, 1, 0], 72),
    ([0, 1, 0, 1], 58),
    ([0, 0, 1, 1], 156),
];

pub fn example_distribution() -> DistributionTable {
    DistributionTable::from_entries(
        ByteLayout::new(3, 2, 2).unwrap(),
        EXAMPLE_DISTRIBUTION.iter().map(|(a, c)| (a.to_vec(), *c)),
    )
    .unwrap()
}

/// Byte kernels for b=3, m=4, t=2, as published.
pub fn example_kernels() -> [Polynomial; 4] {
    [
        Polynomial::from_coeffs(&[1, 720, 3375]),
        Polynomial::from_coeffs(&[1, 224, -225]),
        Polynomial::from_coeffs(&[1, -16, 15]),
        Polynomial::from_coeffs(&[1, 0, -1]),
    ]
}

pub fn example_dual_enumerator() -> Polynomial {
    Polynomial::from_coeffs(&[1, 85, 3153, 9707, 19822])
}

/// The example code's enumerator from direct enumeration. The published
/// value prints the last term as 104z^6, which exceeds the maximum weight 4.
pub fn example_enumerator() -> Polynomial {
    Polynomial::from_coeffs(&[1, 10, 183, 214, 104])
}
