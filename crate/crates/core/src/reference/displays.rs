//! Printed values that the computations are checked against. The
//! expressions use the shorthand of [`crate::algebra::parse`].

/// Realized genus-2 free energy, one label.
pub const W2: &str = "F2 + k ( 1/2 F1'' + 1/2 ( F1' )^2)+ k ^2( 1/8 F0_4 + 1/2 F1' F0''' )+ 5/24 k ^3( F0''' \
     )^2";

/// Realized genus-2 free energy, two labels.
pub const W2_TWO_LABELS: &str =
    "F2 +( 1/2 F1_2_0 + 1/2 ( F1_1_0 )^2) k11 +( 1/2 F1_0_2 + 1/2 ( F1_0_1 )^2) k22 +( 1/8 \
     F0_4_0 + 1/2 F1_1_0 F0_3_0 ) k11 ^2+( 1/8 F0_0_4 + 1/2 F1_0_1 F0_0_3 ) k22 ^2 +( F1_1_1 \
     + F1_1_0 F1_0_1 ) k12 +( 1/2 F0_2_2 + F1_1_0 F0_1_2 + F1_0_1 F0_2_1 ) k12 ^2 +( 1/4 \
     F0_2_2 + 1/2 F1_1_0 F0_1_2 + 1/2 F1_0_1 F0_2_1 ) k11 k22 +( 1/2 F0_3_1 + 3/2 F1_1_0 \
     F0_2_1 + 1/2 F1_0_1 F0_3_0 ) k11 k12 +( 1/2 F0_1_3 + 3/2 F1_0_1 F0_1_2 + 1/2 F1_1_0 \
     F0_0_3 ) k22 k12 + 5/24 ( F0_3_0 )^2 k11 ^3+ 5/24 ( F0_0_3 )^2 k22 ^3+( 1/6 F0_3_0 \
     F0_0_3 + 3/2 F0_2_1 F0_1_2 ) k12 ^3 +( 3/8 ( F0_2_1 )^2+ 1/4 F0_3_0 F0_1_2 ) k11 ^2 k22 \
     +( 3/8 ( F0_1_2 )^2+ 1/4 F0_0_3 F0_2_1 ) k22 ^2 k11 +( 3/2 ( F0_2_1 )^2+ F0_3_0 F0_1_2 ) \
     k11 k12 ^2+( 3/2 ( F0_1_2 )^2+ F0_0_3 F0_2_1 ) k22 k12 ^2 + 5/4 F0_3_0 F0_2_1 k11 ^2 k12 \
     + 5/4 F0_0_3 F0_1_2 k22 ^2 k12 +( 1/4 F0_3_0 F0_0_3 + 9/4 F0_2_1 F0_1_2 ) k11 k22 k12";

pub const W3: &str = "F3 +( 1/2 F2'' + F1' F2' ) k + ( 1/8 F1_4 + 1/4 ( F1'' )^2+ 1/2 F0''' F2' + 1/2 F1' \
     F1''' + 1/2 ( F1' )^2 F1'' ) k ^2 + ( 1/48 F0_6 + 1/4 F0_4 F1'' + 5/12 F0''' F1''' + 1/8 \
     F0_5 F1' + F0''' F1' F1'' + 1/4 F0_4 ( F1' )^2+ 1/6 F0''' ( F1' )^3) k ^3 + ( 1/12 ( \
     F0_4 )^2+ 7/48 F0''' F0_5 + 5/8 ( F0''' )^2 F1'' + 2/3 F0''' F0_4 F1' + 1/2 ( F0''' )^2( \
     F1' )^2) k ^4 + ( 25/48 ( F0''' )^2 F0_4 + 5/8 ( F0''' )^3 F1' ) k ^5+ 5/16 ( F0''' )^4 \
     k ^6";

pub const W4: &str = "F4 +( 1/2 ( F2' )^2+ F1' F3' + 1/2 F3'' ) k + ( F1' F1'' F2' + 1/2 ( F1' )^2 F2'' + 1/2 \
     F1'' F2'' + 1/2 F0''' F3' + 1/2 F1''' F2' + 1/2 F1' F2''' + 1/8 F2_4 ) k ^2 + ( 1/2 ( \
     F1' )^2( F1'' )^2+ 1/6 ( F1'' )^3+ 1/2 F0''' ( F1' )^2 F2' + F0''' F1'' F2' + F0''' F1' \
     F2'' + 1/6 ( F1' )^3 F1''' + F1' F1'' F1''' + 5/24 ( F1''' )^2+ 5/12 F0''' F2''' + 1/2 \
     F0_4 F1' F2' + 1/4 F0_4 F2'' + 1/4 ( F1' )^2 F1_4 + 1/4 F1'' F1_4 + 1/8 F0_5 F2' + 1/8 \
     F1_5 F1' + 1/48 F1_6 ) k ^3 + ( 1/2 F0''' ( F1' )^3 F1'' + 3/2 F0''' F1' ( F1'' )^2+( \
     F0''' )^2 F1' F2' + 5/8 ( F0''' )^2 F2'' + F0''' ( F1' )^2 F1''' + 5/4 F0''' F1'' F1''' \
     + 1/24 F0_4 ( F1' )^4+ 3/4 F0_4 ( F1' )^2 F1'' + 3/8 F0_4 ( F1'' )^2 + 2/3 F0''' F0_4 \
     F2' + 2/3 F0_4 F1' F1''' + 2/3 F0''' F1' F1_4 + 1/6 F0_4 F1_4 + 1/12 F0_5 ( F1' )^3 + \
     3/8 F0_5 F1' F1'' + 7/48 F0_5 F1''' + 7/48 F0''' F1_5 + 1/16 F0_6 ( F1' )^2+ 1/16 F0_6 \
     F1'' + 1/48 F0_7 F1' + 1/384 F0_8 ) k ^4 + ( 1/8 ( F0''' )^2( F1 )^4+2( F0''' )^2( F1' \
     )^2 F1'' + 5/4 ( F0''' )^2( F1'' )^2+ 5/8 ( F0''' )^3 F2' + 15/8 ( F0''' )^2 F1' F1''' + \
     7/12 F0''' F0_4 ( F1' )^3+ 8/3 F0''' F0_4 F1' F1'' + 25/24 F0''' F0_4 F1''' + 1/3 ( F0_4 \
     )^2( F1' )^2+ 1/3 ( F0_4 )^2 F1'' + 25/48 ( F0''' )^2 F1_4 + 25/48 F0''' F0_5 ( F1' )^2 \
     + 7/12 F0''' F0_5 F1'' + 5/16 F0_4 F0_5 F1' + 21/640 ( F0_5 )^2+ 5/24 F0''' F0_6 F1' + \
     5/96 F0_4 F0_6 + 1/32 F0''' F0_7 ) k ^5 + ( 2/3 ( F0''' )^3( F1' )^3+ 25/8 ( F0''' )^3 \
     F1' F1'' + 5/4 ( F0''' )^3 F1''' + 109/48 ( F0''' )^2 F0_4 ( F1' )^2 + 125/48 ( F0''' \
     )^2 F0_4 F1'' + 11/8 F0''' ( F0_4 )^2 F1' + 11/96 ( F0_4 )^3+ 53/48 ( F0''' )^2 F0_5 F1' \
     + 7/12 F0''' F0_4 F0_5 + 113/576 ( F0''' )^2 F0_6 ) k ^6 + ( 25/16 ( F0''' )^4( F1' )^2+ \
     15/8 ( F0''' )^4 F1'' + 185/48 ( F0''' )^3 F0_4 F1' + 445/288 ( F0''' )^2( F0_4 )^2 + \
     161/192 ( F0''' )^3 F0_5 ) k ^7 + ( 15/8 ( F0''' )^5 F1' + 985/384 ( F0''' )^4 F0_4 ) k \
     ^8+ 1105/1152 ( F0''' )^6 k ^9";

/// The kappa^5 term of [`W4`] is printed with (F_1)^4, which is not a term of
/// the expansion. The factor is (F_1')^4.
pub const W4_ERRATUM: (&str, &str) = ("( F1 )^4", "( F1' )^4");

/// One-dimensional gravity, as polynomials in kappa and I_k.
pub const ONE_D: [(u32, &str); 3] = [
    (2, "5/24 I2^2 k^3 + 1/8 I3 k^2"),
    (3, "1/48 I5 k^3 + (1/12 I3^2 + 7/48 I2 I4) k^4 + 25/48 I2^2 I3 k^5 + 5/16 I2^4 k^6"),
    (
        4,
        "1/384 I7 k^4 + (1/32 I2 I6 + 5/96 I3 I5 + 21/640 I4^2) k^5 \
         + (113/576 I2^2 I5 + 11/96 I3^3 + 7/12 I2 I3 I4) k^6 + (445/288 I2^2 I3^2 + 161/192 I2^3 I4) k^7 \
         + 985/384 I2^4 I3 k^8 + 1105/1152 I2^6 k^9",
    ),
];

/// Right-hand side of the genus-4 one-dimensional recursion, equal to
/// 2 dF_4/dkappa.
pub const ONE_D_GENUS_FOUR_RHS: &str = "1/48 I7 k^3 + (5/16 I2 I6 + 25/48 I3 I5 + 21/64 I4^2) k^4 \
     + (113/48 I2^2 I5 + 33/24 I3^3 + 7 I2 I3 I4) k^5 + (3115/144 I2^2 I3^2 + 1127/96 I2^3 I4) k^6 \
     + 985/24 I2^4 I3 k^7 + 1105/64 I2^6 k^8";

pub const AIRY: [(u32, &str); 4] =
    [(2, "5/(48 c^3)"), (3, "5/(64 c^6)"), (4, "1105/(9216 c^9)"), (5, "565/(2048 c^12)")];

/// Airy curve wave-function coefficients S_g = s_g / z^{3g-3}.
pub const AIRY_S: [(u32, (i64, i64)); 3] = [(2, (5, 24)), (3, (5, 16)), (4, (1105, 1152))];

pub const CATALAN: [(u32, &str); 3] = [
    (2, "3/(4 (c^2-1)^2) + 5/(6 (c^2-1)^3)"),
    (3, "5/(2 (c^2-1)^3) + 10/(c^2-1)^4 + 25/(2 (c^2-1)^5) + 5/(c^2-1)^6"),
    (
        4,
        "105/(8 (c^2-1)^4) + 507/(5 (c^2-1)^5) + 6391/(24 (c^2-1)^6) + 767/(2 (c^2-1)^7) \
         + 985/(4 (c^2-1)^8) + 1105/(18 (c^2-1)^9)",
    ),
];

/// Stable graphs with genus-0 vertices counted by T per vertex.
pub const STABLE_COUNT: [(u32, &str); 3] = [
    (2, "1/8 T k^2 + 5/24 T^2 k^3"),
    (3, "1/48 T k^3 + 11/48 T^2 k^4 + 25/48 T^3 k^5 + 5/16 T^4 k^6"),
    (
        4,
        "1/384 T k^4 + 223/1920 T^2 k^5 + 515/576 T^3 k^6 + 1373/576 T^4 k^7 + 985/384 T^5 k^8 \
         + 1105/1152 T^6 k^9",
    ),
];

/// Graph counting, F_g = T p(T) / (m (1-T)^{3g-3}), listed as (g, m, the
/// coefficients of p from T^0 up).
pub const GRAPH_COUNT_FACTORED: [(u32, i64, &[i64]); 5] = [
    (2, 24, &[3, 2]),
    (3, 48, &[1, 8, 6]),
    (4, 5760, &[15, 594, 2624, 2144, 164, -16]),
    (5, 11520, &[3, 465, 6730, 21940, 18940, 3012, -240]),
    (6, 2903040, &[63, 35568, 1349298, 11582816, 31178616, 27897072, 6526912, -266448, -36576, 2304]),
];

/// Graph counting as polynomials in kappa = 1/(1-T).
pub const GRAPH_COUNT_KAPPA: [(u32, &str); 6] = [
    (2, "5/24 k^3 - 7/24 k^2 + 1/12 k"),
    (3, "5/16 k^6 - 35/48 k^5 + 13/24 k^4 - 1/8 k^3"),
    (
        4,
        "1105/1152 k^9 - 1225/384 k^8 + 2273/576 k^7 - 313/144 k^6 + 227/480 k^5 - 17/1440 k^4 \
         - 1/360 k^3",
    ),
    (
        5,
        "565/128 k^12 - 14665/768 k^11 + 76367/2304 k^10 - 11191/384 k^9 + 2557/192 k^8 \
         - 7993/2880 k^7 + 37/320 k^6 + 1/48 k^5",
    ),
    (
        6,
        "82825/3072 k^15 - 441245/3072 k^14 + 493235/1536 k^13 - 16116187/41472 k^12 \
         + 2827135/10368 k^11 - 1884983/17280 k^10 + 567289/25920 k^9 - 7489/6480 k^8 \
         - 10249/60480 k^7 + 47/10080 k^6 + 1/1260 k^5",
    ),
    (
        7,
        "19675/96 k^18 - 7969325/6144 k^17 + 65405005/18432 k^16 - 453853985/82944 k^15 \
         + 215237149/41472 k^14 - 64035527/20736 k^13 + 23126555/20736 k^12 - 11204309/51840 k^11 \
         + 1352989/103680 k^10 + 6481/4032 k^9 - 1927/20160 k^8 - 1/72 k^7",
    ),
];

/// K applied to abstract free energies, as (g, n) of the argument and
/// terms (coefficient, factors) of the right-hand side.
pub const CUT_IDENTITIES: [((u32, u32), &[((i64, i64), &[(u32, u32)])]); 7] = [
    ((0, 4), &[((9, 2), &[(0, 3), (0, 3)])]),
    ((0, 5), &[((12, 1), &[(0, 3), (0, 4)])]),
    ((1, 1), &[((3, 1), &[(0, 3)])]),
    ((1, 2), &[((6, 1), &[(0, 4)]), ((3, 1), &[(1, 1), (0, 3)])]),
    ((1, 3), &[((10, 1), &[(0, 5)]), ((4, 1), &[(1, 1), (0, 4)]), ((6, 1), &[(1, 2), (0, 3)])]),
    ((2, 0), &[((1, 1), &[(1, 2)]), ((1, 2), &[(1, 1), (1, 1)])]),
    ((2, 1), &[((3, 1), &[(1, 3)]), ((2, 1), &[(1, 1), (1, 2)])]),
];
