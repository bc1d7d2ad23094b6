//! Polynomials exactly as printed in the published displays, LaTeX markup stripped.
//! They are comparison fixtures: computed forms are authoritative.

/// Expanded quartic form, q^4 = +1, as displayed.
pub const QUARTIC_A: &str = concat!(
    "x_0^4-x_1^4+x_2^4-x_3^4 -2x_0^2x_2^2+2x_1^2x_3^2 ",
    "-4x_0^2x_1x_3+4x_1^2x_0x_2-4x_2^2x_1x_3+4x_3^2x_0x_2 ",
);

/// Expanded quartic form, q^4 = -1, as displayed.
pub const QUARTIC_B: &str = concat!(
    "x_0^4+x_1^4+x_2^4+x_3^4+2x_0^2x_2^2+2x_1^2x_3^2 ",
    "+4x_0^2x_1x_3-4x_1^2x_0x_2-4x_2^2x_1x_3+4x_3^2x_0x_2 ",
);

/// Sextic form, q^6 = +1, displayed in z[k] notation.
pub const SEXTIC_A_Z: &str = concat!(
    "z[0]^6 - z[1]^6 + z[2]^6 - z[3]^6 + 6 z[2] z[3]^4 z[4] - 9 z[2]^2 z[3]^2 z[4]^2 + 2 z[2]^3 ",
    "z[4]^3 + z[4]^6 - 6 z[2]^2 z[3]^3 z[5] + 12 z[2]^3 z[3] z[4] z[5] - 6 z[3] z[4]^4 z[5] - 3 ",
    "z[2]^4 z[5]^2 + 9 z[3]^2 z[4]^2 z[5]^2 + 6 z[2] z[4]^3 z[5]^2 - 2 z[3]^3 z[5]^3 - 12 z[2] ",
    "z[3] z[4] z[5]^3 + 3 z[2]^2 z[5]^4 - z[5]^6 - 3 z[0]^4 (z[3]^2 + 2 z[2] z[4] + 2 z[1] ",
    "z[5]) + 3 z[1]^4 (z[4]^2 + 2 z[3] z[5]) + 3 z[1]^2 (3 z[2]^2 z[3]^2 + 2 z[2]^3 z[4] - ",
    "z[4]^4 - 3 z[3]^2 z[5]^2 + 6 z[2] z[4] z[5]^2) - 2 z[1]^3 (z[3]^3 + 6 z[2] z[3] z[4] + 3 ",
    "z[2]^2 z[5] + z[5]^3) + 2 z[0]^3 (z[2]^3 + z[4] (3 z[1]^2 + z[4]^2 + 6 z[3] z[5]) + 3 z[2] ",
    "(2 z[1] z[3] + z[5]^2)) - 6 z[1] (z[2]^4 z[3] - 2 z[2] z[3] z[4]^3 + 3 z[2]^2 z[4]^2 z[5] ",
    "+ (z[4]^2 - z[3] z[5]) (z[3]^3 + z[5]^3)) - 3 z[0]^2 (2 z[1]^3 z[3] - z[3]^4 + 6 z[1] z[3] ",
    "z[4]^2 + 3 z[1]^2 (z[2]^2 - z[5]^2) + 3 z[4]^2 (-z[2]^2 + z[5]^2) + 2 z[3] (3 z[2]^2 z[5] ",
    "+ z[5]^3)) + 6 z[0] (z[1]^4 z[2] + z[2]^3 z[3]^2 - z[2]^4 z[4] + 3 z[1]^2 z[3]^2 z[4] - 2 ",
    "z[1]^3 z[4] z[5] - z[2] (z[4]^4 - 3 z[3]^2 z[5]^2) + z[4] (z[3]^2 z[4]^2 - 2 z[3]^3 z[5] + ",
    "z[5]^4) + 2 z[1] (z[2]^3 z[5] + z[4]^3 z[5] - z[2] (z[3]^3 + z[5]^3))) ",
);

/// Sextic form, q^6 = +1, displayed in x_k notation.
pub const SEXTIC_A_X: &str = concat!(
    "x_0^6 - x_1^6 + 6 x_0 x_1^4 x_2 - 9 x_0^2 x_1^2 x_2^2 + 2 x_0^3 x_2^3 + x_2^6 - 6 x_0^2 ",
    "x_1^3 x_3 + 12 x_0^3 x_1 x_2 x_3 - 6 x_1 x_2^4 x_3 - 3 x_0^4 x_3^2 + 9 x_1^2 x_2^2 x_3^2 + ",
    "6 x_0 x_2^3 x_3^2 - 2 x_1^3 x_3^3 - 12 x_0 x_1 x_2 x_3^3 + 3 x_0^2 x_3^4 - x_3^6 + 6 x_0^3 ",
    "x_1^2 x_4 - 6 x_0^4 x_2 x_4 + 6 x_1^2 x_2^3 x_4 - 6 x_0 x_2^4 x_4 - 12 x_1^3 x_2 x_3 x_4 + ",
    "18 x_0 x_1^2 x_3^2 x_4 + 6 x_2 x_3^4 x_4 + 3 x_1^4 x_4^2 + 9 x_0^2 x_2^2 x_4^2 - 18 x_0^2 ",
    "x_1 x_3 x_4^2 - 9 x_2^2 x_3^2 x_4^2 - 6 x_1 x_3^3 x_4^2 + 2 x_0^3 x_4^3 + 2 x_2^3 x_4^3 + ",
    "12 x_1 x_2 x_3 x_4^3 + 6 x_0 x_3^2 x_4^3 - 3 x_1^2 x_4^4 - 6 x_0 x_2 x_4^4 + x_4^6 - 6 ",
    "x_0^4 x_1 x_5 - 6 x_1^3 x_2^2 x_5 + 12 x_0 x_1 x_2^3 x_5 + 6 x_1^4 x_3 x_5 - 18 x_0^2 ",
    "x_2^2 x_3 x_5 - 6 x_2^2 x_3^3 x_5 + 6 x_1 x_3^4 x_5 - 12 x_0 x_1^3 x_4 x_5 + 12 x_0^3 x_3 ",
    "x_4 x_5 + 12 x_2^3 x_3 x_4 x_5 - 12 x_0 x_3^3 x_4 x_5 - 18 x_1 x_2^2 x_4^2 x_5 + 12 x_0 ",
    "x_1 x_4^3 x_5 - 6 x_3 x_4^4 x_5 + 9 x_0^2 x_1^2 x_5^2 + 6 x_0^3 x_2 x_5^2 - 3 x_2^4 x_5^2 ",
    "- 9 x_1^2 x_3^2 x_5^2 + 18 x_0 x_2 x_3^2 x_5^2 + 18 x_1^2 x_2 x_4 x_5^2 - 9 x_0^2 x_4^2 ",
    "x_5^2 + 9 x_3^2 x_4^2 x_5^2 + 6 x_2 x_4^3 x_5^2 - 2 x_1^3 x_5^3 - 12 x_0 x_1 x_2 x_5^3 - 6 ",
    "x_0^2 x_3 x_5^3 - 2 x_3^3 x_5^3 - 12 x_2 x_3 x_4 x_5^3 - 6 x_1 x_4^2 x_5^3 + 3 x_2^2 x_5^4 ",
    "+ 6 x_1 x_3 x_5^4 + 6 x_0 x_4 x_5^4 - x_5^6 ",
);

/// Sextic form, q^6 = -1, displayed in x_k notation.
pub const SEXTIC_B_X: &str = concat!(
    "x_0^6 + x_1^6 + 6 x_0 x_1^4 x_2 + 9 x_0^2 x_1^2 x_2^2 + 2 x_0^3 x_2^3 + x_2^6 + 6 x_0^2 ",
    "x_1^3 x_3 + 12 x_0^3 x_1 x_2 x_3 - 6 x_1 x_2^4 x_3 + 3 x_0^4 x_3^2 + 9 x_1^2 x_2^2 x_3^2 - ",
    "6 x_0 x_2^3 x_3^2 - 2 x_1^3 x_3^3 + 12 x_0 x_1 x_2 x_3^3 + 3 x_0^2 x_3^4 + x_3^6 + 6 x_0^3 ",
    "x_1^2 x_4 + 6 x_0^4 x_2 x_4 + 6 x_1^2 x_2^3 x_4 + 6 x_0 x_2^4 x_4 - 12 x_1^3 x_2 x_3 x_4 - ",
    "18 x_0 x_1^2 x_3^2 x_4 - 6 x_2 x_3^4 x_4 + 3 x_1^4 x_4^2 + 9 x_0^2 x_2^2 x_4^2 - 18 x_0^2 ",
    "x_1 x_3 x_4^2 + 9 x_2^2 x_3^2 x_4^2 + 6 x_1 x_3^3 x_4^2 - 2 x_0^3 x_4^3 - 2 x_2^3 x_4^3 - ",
    "12 x_1 x_2 x_3 x_4^3 + 6 x_0 x_3^2 x_4^3 + 3 x_1^2 x_4^4 - 6 x_0 x_2 x_4^4 + x_4^6 + 6 ",
    "x_0^4 x_1 x_5 - 6 x_1^3 x_2^2 x_5 - 12 x_0 x_1 x_2^3 x_5 + 6 x_1^4 x_3 x_5 - 18 x_0^2 ",
    "x_2^2 x_3 x_5 + 6 x_2^2 x_3^3 x_5 - 6 x_1 x_3^4 x_5 + 12 x_0 x_1^3 x_4 x_5 - 12 x_0^3 x_3 ",
    "x_4 x_5 - 12 x_2^3 x_3 x_4 x_5 - 12 x_0 x_3^3 x_4 x_5 + 18 x_1 x_2^2 x_4^2 x_5 + 12 x_0 ",
    "x_1 x_4^3 x_5 - 6 x_3 x_4^4 x_5 + 9 x_0^2 x_1^2 x_5^2 - 6 x_0^3 x_2 x_5^2 + 3 x_2^4 x_5^2 ",
    "+ 9 x_1^2 x_3^2 x_5^2 + 18 x_0 x_2 x_3^2 x_5^2 - 18 x_1^2 x_2 x_4 x_5^2 + 9 x_0^2 x_4^2 ",
    "x_5^2 + 9 x_3^2 x_4^2 x_5^2 + 6 x_2 x_4^3 x_5^2 + 2 x_1^3 x_5^3 - 12 x_0 x_1 x_2 x_5^3 + 6 ",
    "x_0^2 x_3 x_5^3 - 2 x_3^3 x_5^3 - 12 x_2 x_3 x_4 x_5^3 - 6 x_1 x_4^2 x_5^3 + 3 x_2^2 x_5^4 ",
    "+ 6 x_1 x_3 x_5^4 - 6 x_0 x_4 x_5^4 + x_5^6 ",
);

/// Sextic form, q^6 = -1, displayed in z[k] notation.
pub const SEXTIC_B_Z: &str = concat!(
    "z[0]^6 + z[1]^6 + z[2]^6 + z[3]^6 - 6 z[2] z[3]^4 z[4] + 9 z[2]^2 z[3]^2 z[4]^2 - 2 z[2]^3 ",
    "z[4]^3 + z[4]^6 + 6 z[2]^2 z[3]^3 z[5] - 12 z[2]^3 z[3] z[4] z[5] - 6 z[3] z[4]^4 z[5] + 3 ",
    "z[2]^4 z[5]^2 + 9 z[3]^2 z[4]^2 z[5]^2 + 6 z[2] z[4]^3 z[5]^2 - 2 z[3]^3 z[5]^3 - 12 z[2] ",
    "z[3] z[4] z[5]^3 + 3 z[2]^2 z[5]^4 + z[5]^6 + 3 z[0]^4 (z[3]^2 + 2 z[2] z[4] + 2 z[1] ",
    "z[5]) + 3 z[1]^4 (z[4]^2 + 2 z[3] z[5]) + 3 z[1]^2 (3 z[2]^2 z[3]^2 + 2 z[2]^3 z[4] + ",
    "z[4]^4 + 3 z[3]^2 z[5]^2 - 6 z[2] z[4] z[5]^2) - 2 z[1]^3 (z[3]^3 + 6 z[2] z[3] z[4] + 3 ",
    "z[2]^2 z[5] - z[5]^3) - 2 z[0]^3 (z[2]^3 - z[4] (-3 z[1]^2 + z[4]^2 + 6 z[3] z[5]) + z[2] ",
    "(6 z[1] z[3] - 3 z[5]^2)) - 6 z[1] (z[2]^4 z[3] + 2 z[2] z[3] z[4]^3 - 3 z[2]^2 z[4]^2 ",
    "z[5] + (-z[4]^2 + z[3] z[5]) (z[3]^3 - z[5]^3)) + 3 z[0]^2 (2 z[1]^3 z[3] + z[3]^4 - 6 ",
    "z[1] z[3] z[4]^2 + 3 z[1]^2 (z[2]^2 + z[5]^2) + 3 z[4]^2 (z[2]^2 + z[5]^2) + z[3] (-6 ",
    "z[2]^2 z[5] + 2 z[5]^3)) - 6 z[0] (z[1]^4 z[2] - z[2]^3 z[3]^2 + z[2]^4 z[4] - 3 z[1]^2 ",
    "z[3]^2 z[4] + 2 z[1]^3 z[4] z[5] - z[2] (z[4]^4 - 3 z[3]^2 z[5]^2) + z[4] (z[3]^2 z[4]^2 - ",
    "2 z[3]^3 z[5] - z[5]^4) - 2 z[1] (z[2]^3 z[5] - z[4]^3 z[5] + z[2] (-z[3]^3 + z[5]^3))) ",
);

/// Sextic product of all conjugates written as a sum of orbits (all signs positive).
pub const SEXTIC_B_SUM: &str = concat!(
    "x_0^6+x_1^6+x_2^6+x_3^6+x_4^6+x_5^6 +x_0^4x_3^2+x_1^4x_4^2+3x_2^4x_5^2 +x_3^4x_0^2+ ",
    "3x_4^4x_1^2+3 x_5^4x_2^2 +x_0^4(x_2x_4+x_1x_5) + x_1^4(x_0x_2+x_3x_5) + ",
    "x_2^4(x_0x_4+x_1x_3) + x_3^4(x_1x_5+x_2x_4) + x_4^4(x_0x_2+x_3x_5) + x_5^4(x_0x_4+x_1x_3) ",
    "+x_0^3x_2^3+x_2^3x_4^3+x_4^3x_0^3+x_1^3x_3^3+x_3^3x_5^3+x_5^3x_1^3 ",
    "+x_0^3(x_1^2x_4+x_5^2x_2+x_1x_2x_3+x_3x_4x_5) + ",
    "x_1^3(x_0^2x_3+x_2^2x_5+x_2x_3x_4+x_0x_4x_5) +x_2^3(x_1^2x_4+x_3^2x_0+x_0x_1x_5+x_3x_4x_5) ",
    "+x_3^3(x_2^2x_5+x_4^2x_1+x_0x_1x_2+x_0x_4x_5) ",
    "+x_4^3(x_3^2x_0+x_5^2x_2+x_1x_2x_3+x_0x_1x_5) ",
    "+x_5^3(x_4^2x_1+x_0^2x_3+x_0x_1x_2+x_2x_3x_4) +x_0^2x_1^2x_2^2 + x_0^2x_2^2x_4^2 + ",
    "x_0^2x_1^2x_5^2 + x_0^2x_4^2x_5^2 + x_1^2x_2^2x_3^2 +x_1^2x_3^2x_5^2 + x_2^2x_3^2x_4^2 + ",
    "x_3^2x_4^2x_5^2 +x_0^2x_2^2x_3x_5 + x_0^2x_3^2x_1x_5 + x_0^2x_3^2x_2x_4 + x_0^2x_4^2x_1x_3 ",
    "+ x_1^2x_3^2x_0x_4 + x_1^2x_5^2x_2x_4 + x_1^2x_4^2x_3x_5 + x_2^2x_4^2x_1x_5 + ",
    "x_2^2x_5^2x_0x_4 + x_3^2x_5^2x_0x_2 +x_0^2x_1x_2x_4x_5 + x_1^2x_0x_2x_3x_5 + ",
    "x_2^2x_0x_1x_3x_4 + x_3^2x_1x_2x_4x_5 + x_4^2x_0x_2x_3x_5 + x_5^2x_0x_1x_3x_4 ",
);

/// Quartic factorization, q^4 = +1.
pub const QUARTIC_A_FACTORED: &str = "(x_0+x_1+x_2+x_3)(x_0+x_2-x_1-x_3)[(x_0-x_2)^2+(x_1-x_3)^2]";

/// Quartic form, q^4 = -1, as a sum of two squares.
pub const QUARTIC_B_SQUARES: &str = "[x_3^2-x_1^2+2x_0x_2]^2+[x_0^2-x_2^2+2x_1x_3]^2";

/// Sextic factors, q^6 = +1, as printed. The two linear factors carry a stray
/// seventh symbol x_6.
pub const SEXTIC_A_FACTORS: [&str; 4] = [
    "(x_0+x_1+x_2+x_3+x_4+x_5+x_6)",
    "(x_0-x_1+x_2-x_3+x_4-x_5+x_6)",
    concat!(
        "[(x_0^2+x_1^2+x_2^2+x_3^2+x_4^2+x_5^2 -x_0x_2-x_0x_4-x_1x_3-x_1x_5-x_2x_4-x_3x_5) ",
        "+(x_0x_1-2x_0x_3+x_0x_5+x_1x_2-2x_1x_4+x_2x_3-2x_2x_5+x_3x_4+x_4x_5)]"
    ),
    concat!(
        "[(x_0^2+x_1^2+x_2^2+x_3^2+x_4^2+x_5^2 -x_0x_2-x_0x_4-x_1x_3-x_1x_5-x_2x_4-x_3x_5) ",
        "-(x_0x_1-2x_0x_3+x_0x_5+x_1x_2-2x_1x_4+x_2x_3-2x_2x_5+x_3x_4+x_4x_5)]"
    ),
];

/// Sign pattern of the displayed 6×6 matrix for q^6 = -1: entry (r, c) is
/// sign·x_{(c − r) mod 6}.
pub const SEXTIC_B_MATRIX_SIGNS: [[i8; 6]; 6] = [
    [1, -1, -1, -1, -1, -1],
    [1, 1, -1, -1, -1, -1],
    [1, 1, 1, -1, -1, -1],
    [1, 1, 1, 1, -1, -1],
    [1, 1, 1, 1, 1, -1],
    [1, 1, 1, 1, 1, 1],
];
