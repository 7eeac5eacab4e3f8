//! Values transcribed from the published tables.
#![allow(dead_code)]

/// `(N, ℓ_N, k_N)`.
pub const GENUS0_ELL_K: [(u64, u64, u64); 44] = [
    (1, 24, 12),
    (2, 8, 8),
    (3, 12, 12),
    (5, 4, 4),
    (6, 2, 4),
    (7, 12, 12),
    (10, 4, 8),
    (11, 4, 4),
    (13, 12, 12),
    (14, 2, 4),
    (15, 2, 4),
    (17, 4, 4),
    (19, 12, 12),
    (21, 6, 12),
    (22, 2, 4),
    (23, 4, 4),
    (26, 4, 8),
    (29, 4, 4),
    (30, 1, 4),
    (31, 12, 12),
    (33, 2, 4),
    (34, 4, 8),
    (35, 2, 4),
    (38, 2, 4),
    (39, 6, 12),
    (41, 4, 4),
    (42, 1, 4),
    (46, 2, 4),
    (47, 4, 4),
    (51, 2, 4),
    (55, 2, 4),
    (59, 4, 4),
    (62, 2, 4),
    (66, 1, 4),
    (69, 2, 4),
    (70, 1, 4),
    (71, 4, 4),
    (78, 1, 4),
    (87, 2, 4),
    (94, 2, 4),
    (95, 2, 4),
    (105, 1, 4),
    (110, 1, 4),
    (119, 2, 4),
];

/// `(N, ℓ_N, k_N)`.
pub const GENUS1_ELL_K: [(u64, u64, u64); 38] = [
    (37, 12, 12),
    (43, 12, 12),
    (53, 4, 4),
    (57, 6, 12),
    (58, 4, 8),
    (61, 12, 12),
    (65, 2, 4),
    (74, 4, 8),
    (77, 2, 4),
    (79, 12, 12),
    (82, 4, 8),
    (83, 4, 4),
    (86, 2, 4),
    (89, 4, 4),
    (91, 6, 12),
    (101, 4, 4),
    (102, 1, 4),
    (111, 6, 12),
    (114, 1, 4),
    (118, 2, 4),
    (123, 2, 4),
    (130, 2, 8),
    (131, 4, 4),
    (138, 1, 4),
    (141, 2, 4),
    (142, 2, 4),
    (143, 2, 4),
    (145, 2, 4),
    (155, 2, 4),
    (159, 2, 4),
    (174, 1, 4),
    (182, 1, 4),
    (190, 1, 4),
    (195, 1, 4),
    (210, 1, 8),
    (222, 1, 4),
    (231, 1, 4),
    (238, 1, 4),
];

/// `(N, κ)`.
pub const KAPPA_GENUS0: [(u64, u64); 44] = [
    (1, 19),
    (2, 47),
    (3, 48),
    (5, 19),
    (6, 60),
    (7, 19),
    (10, 75),
    (11, 19),
    (13, 19),
    (14, 47),
    (15, 96),
    (17, 19),
    (19, 19),
    (21, 53),
    (22, 47),
    (23, 19),
    (26, 47),
    (29, 19),
    (30, 127),
    (31, 19),
    (33, 48),
    (34, 47),
    (35, 19),
    (38, 47),
    (39, 48),
    (41, 19),
    (42, 108),
    (46, 47),
    (47, 19),
    (51, 48),
    (55, 19),
    (59, 19),
    (62, 47),
    (66, 60),
    (69, 48),
    (70, 181),
    (71, 19),
    (78, 81),
    (87, 48),
    (94, 47),
    (95, 19),
    (105, 181),
    (110, 89),
    (119, 19),
];

/// `(N, κ)`.
pub const KAPPA_GENUS1: [(u64, u64); 38] = [
    (37, 222),
    (43, 194),
    (53, 194),
    (57, 285),
    (58, 194),
    (61, 194),
    (65, 634),
    (74, 222),
    (77, 597),
    (79, 194),
    (82, 194),
    (83, 194),
    (86, 194),
    (89, 194),
    (91, 643),
    (101, 194),
    (102, 194),
    (111, 222),
    (114, 285),
    (118, 194),
    (123, 194),
    (130, 634),
    (131, 194),
    (138, 194),
    (141, 194),
    (142, 194),
    (143, 271),
    (145, 382),
    (155, 382),
    (159, 194),
    (174, 194),
    (182, 643),
    (190, 382),
    (195, 634),
    (210, 599),
    (222, 222),
    (231, 597),
    (238, 599),
];

/// `(N, y, x)` leading terms as `(exponent, coefficient)`.
pub const GENUS1_YX: [(u64, &[(i64, i64)], &[(i64, i64)]); 38] = [
    (
        37,
        &[
            (-3, 1),
            (-1, 3),
            (1, 19),
            (2, 38),
            (3, 93),
            (4, 176),
            (5, 347),
            (6, 630),
            (7, 1139),
        ],
        &[
            (-2, 1),
            (-1, 2),
            (1, 9),
            (2, 18),
            (3, 29),
            (4, 51),
            (5, 82),
            (6, 131),
            (7, 199),
        ],
    ),
    (
        43,
        &[
            (-3, 1),
            (-1, 2),
            (1, 13),
            (2, 24),
            (3, 55),
            (4, 98),
            (5, 186),
            (6, 318),
            (7, 549),
        ],
        &[
            (-2, 1),
            (-1, 2),
            (1, 7),
            (2, 13),
            (3, 20),
            (4, 33),
            (5, 50),
            (6, 77),
            (7, 112),
        ],
    ),
    (
        53,
        &[
            (-3, 1),
            (-1, 3),
            (1, 10),
            (2, 16),
            (3, 33),
            (4, 50),
            (5, 90),
            (6, 140),
            (7, 227),
        ],
        &[
            (-2, 1),
            (-1, 1),
            (1, 4),
            (2, 7),
            (3, 10),
            (4, 17),
            (5, 23),
            (6, 35),
            (7, 48),
        ],
    ),
    (
        57,
        &[
            (-3, 1),
            (-1, 1),
            (1, 6),
            (2, 10),
            (3, 27),
            (4, 36),
            (5, 61),
            (6, 106),
            (7, 156),
        ],
        &[
            (-2, 1),
            (-1, 2),
            (1, 5),
            (2, 8),
            (3, 9),
            (4, 15),
            (5, 23),
            (6, 30),
            (7, 43),
        ],
    ),
    (
        58,
        &[
            (-3, 1),
            (-1, 3),
            (1, 10),
            (2, 10),
            (3, 30),
            (4, 34),
            (5, 72),
            (6, 90),
            (7, 172),
        ],
        &[
            (-2, 1),
            (-1, 1),
            (1, 3),
            (2, 7),
            (3, 7),
            (4, 14),
            (5, 17),
            (6, 29),
            (7, 32),
        ],
    ),
    (
        61,
        &[
            (-3, 1),
            (-1, 2),
            (1, 7),
            (2, 10),
            (3, 22),
            (4, 32),
            (5, 53),
            (6, 80),
            (7, 127),
        ],
        &[
            (-2, 1),
            (-1, 1),
            (1, 3),
            (2, 6),
            (3, 7),
            (4, 11),
            (5, 16),
            (6, 23),
            (7, 30),
        ],
    ),
    (
        65,
        &[
            (-3, 1),
            (-1, 2),
            (1, 7),
            (2, 10),
            (3, 17),
            (4, 24),
            (5, 43),
            (6, 66),
            (7, 102),
        ],
        &[
            (-2, 1),
            (-1, 1),
            (1, 3),
            (2, 4),
            (3, 7),
            (4, 11),
            (5, 13),
            (6, 19),
            (7, 23),
        ],
    ),
    (
        74,
        &[
            (-3, 1),
            (-1, 3),
            (1, 7),
            (2, 6),
            (3, 17),
            (4, 16),
            (5, 35),
            (6, 38),
            (7, 71),
        ],
        &[
            (-2, 1),
            (1, 1),
            (2, 4),
            (3, 3),
            (4, 7),
            (5, 6),
            (6, 13),
            (7, 13),
            (8, 22),
        ],
    ),
    (
        77,
        &[
            (-3, 1),
            (-1, 3),
            (1, 7),
            (2, 6),
            (3, 14),
            (4, 16),
            (5, 28),
            (6, 38),
            (7, 56),
        ],
        &[
            (-2, 1),
            (1, 1),
            (2, 3),
            (3, 3),
            (4, 7),
            (5, 7),
            (6, 10),
            (7, 13),
            (8, 16),
        ],
    ),
    (
        79,
        &[
            (-3, 1),
            (-1, 1),
            (1, 4),
            (2, 5),
            (3, 11),
            (4, 14),
            (5, 23),
            (6, 32),
            (7, 47),
        ],
        &[
            (-2, 1),
            (-1, 1),
            (1, 2),
            (2, 4),
            (3, 4),
            (4, 6),
            (5, 8),
            (6, 11),
            (7, 14),
            (8, 19),
        ],
    ),
    (
        82,
        &[
            (-3, 1),
            (-1, 2),
            (1, 5),
            (2, 4),
            (3, 13),
            (4, 12),
            (5, 24),
            (6, 26),
            (7, 49),
        ],
        &[
            (-2, 1),
            (-1, 1),
            (1, 2),
            (2, 4),
            (3, 3),
            (4, 6),
            (5, 7),
            (6, 11),
            (7, 11),
            (8, 18),
        ],
    ),
    (
        83,
        &[
            (-3, 1),
            (-1, 1),
            (1, 4),
            (2, 5),
            (3, 9),
            (4, 12),
            (5, 20),
            (6, 27),
            (7, 40),
        ],
        &[
            (-2, 1),
            (-1, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 6),
            (5, 7),
            (6, 10),
            (7, 12),
            (8, 16),
        ],
    ),
    (
        86,
        &[
            (-3, 1),
            (-1, 2),
            (1, 5),
            (2, 4),
            (3, 11),
            (4, 10),
            (5, 22),
            (6, 22),
            (7, 41),
        ],
        &[(-2, 1), (1, 1), (2, 3), (3, 2), (4, 5), (5, 4), (6, 9), (7, 8), (8, 14)],
    ),
    (
        89,
        &[
            (-3, 1),
            (-1, 1),
            (1, 3),
            (2, 4),
            (3, 9),
            (4, 10),
            (5, 16),
            (6, 22),
            (7, 32),
        ],
        &[
            (-2, 1),
            (-1, 1),
            (1, 2),
            (2, 3),
            (3, 3),
            (4, 5),
            (5, 6),
            (6, 8),
            (7, 10),
            (8, 13),
        ],
    ),
    (
        91,
        &[(-3, 1), (1, 2), (2, 4), (3, 6), (4, 10), (5, 15), (6, 18), (7, 28)],
        &[
            (-2, 1),
            (-1, 2),
            (1, 3),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 7),
            (6, 10),
            (7, 11),
        ],
    ),
    (
        101,
        &[
            (-3, 1),
            (-1, 2),
            (1, 3),
            (2, 4),
            (3, 7),
            (4, 8),
            (5, 13),
            (6, 16),
            (7, 23),
        ],
        &[(-2, 1), (1, 1), (2, 2), (3, 2), (4, 3), (5, 3), (6, 5), (7, 6), (8, 8)],
    ),
    (
        102,
        &[
            (-3, 1),
            (-1, 1),
            (1, 3),
            (2, 2),
            (3, 8),
            (4, 6),
            (5, 12),
            (6, 14),
            (7, 22),
        ],
        &[
            (-2, 1),
            (-1, 1),
            (1, 1),
            (2, 3),
            (3, 2),
            (4, 4),
            (5, 5),
            (6, 6),
            (7, 6),
            (8, 10),
        ],
    ),
    (
        111,
        &[
            (-3, 1),
            (1, 1),
            (2, 2),
            (3, 6),
            (4, 5),
            (5, 8),
            (6, 12),
            (7, 14),
            (8, 18),
        ],
        &[
            (-2, 1),
            (-1, 2),
            (1, 3),
            (2, 3),
            (3, 2),
            (4, 3),
            (5, 4),
            (6, 5),
            (7, 7),
            (8, 9),
        ],
    ),
    (
        114,
        &[
            (-3, 1),
            (-1, 1),
            (1, 2),
            (2, 2),
            (3, 7),
            (4, 4),
            (5, 9),
            (6, 10),
            (7, 16),
            (8, 16),
        ],
        &[(-2, 1), (1, 1), (2, 2), (3, 1), (4, 3), (5, 1), (6, 4), (7, 5), (8, 6)],
    ),
    (
        118,
        &[
            (-3, 1),
            (-1, 1),
            (1, 3),
            (2, 2),
            (3, 5),
            (4, 4),
            (5, 9),
            (6, 8),
            (7, 15),
            (8, 14),
        ],
        &[
            (-2, 1),
            (-1, 1),
            (1, 1),
            (2, 2),
            (3, 2),
            (4, 3),
            (5, 3),
            (6, 5),
            (7, 4),
            (8, 7),
        ],
    ),
    (
        123,
        &[
            (-3, 1),
            (-1, 1),
            (1, 2),
            (2, 2),
            (3, 5),
            (4, 4),
            (5, 7),
            (6, 10),
            (7, 11),
            (8, 14),
        ],
        &[(-2, 1), (1, 1), (2, 1), (3, 1), (4, 3), (5, 2), (6, 3), (7, 4), (8, 4)],
    ),
    (
        130,
        &[
            (-3, 1),
            (-1, 2),
            (1, 3),
            (2, 2),
            (3, 5),
            (4, 4),
            (5, 7),
            (6, 6),
            (7, 14),
            (8, 10),
        ],
        &[
            (-2, 1),
            (-1, -1),
            (1, -1),
            (2, 2),
            (3, 1),
            (4, 1),
            (5, 1),
            (6, 3),
            (7, 1),
            (8, 5),
            (9, 2),
        ],
    ),
    (
        131,
        &[
            (-3, 1),
            (-1, 1),
            (1, 2),
            (2, 2),
            (3, 4),
            (4, 4),
            (5, 6),
            (6, 7),
            (7, 10),
            (8, 12),
        ],
        &[(-2, 1), (1, 1), (2, 1), (3, 1), (4, 2), (5, 2), (6, 3), (7, 3), (8, 4)],
    ),
    (
        138,
        &[
            (-3, 1),
            (-1, 1),
            (1, 2),
            (2, 1),
            (3, 5),
            (4, 3),
            (5, 5),
            (6, 6),
            (7, 10),
            (8, 8),
        ],
        &[
            (-2, 1),
            (-1, 1),
            (1, 1),
            (2, 2),
            (3, 1),
            (4, 2),
            (5, 3),
            (6, 3),
            (7, 2),
            (8, 5),
        ],
    ),
    (
        141,
        &[
            (-3, 1),
            (-1, 1),
            (1, 1),
            (2, 2),
            (3, 4),
            (4, 3),
            (5, 5),
            (6, 7),
            (7, 8),
            (8, 9),
        ],
        &[(-2, 1), (1, 1), (2, 1), (3, 1), (4, 2), (5, 1), (6, 2), (7, 3), (8, 3)],
    ),
    (
        142,
        &[
            (-3, 1),
            (-1, 1),
            (1, 2),
            (2, 1),
            (3, 4),
            (4, 3),
            (5, 6),
            (6, 5),
            (7, 9),
            (8, 8),
        ],
        &[
            (-2, 1),
            (-1, 1),
            (1, 1),
            (2, 2),
            (3, 1),
            (4, 2),
            (5, 2),
            (6, 3),
            (7, 3),
            (8, 4),
        ],
    ),
    (
        143,
        &[
            (-3, 1),
            (-1, 1),
            (1, 1),
            (2, 2),
            (3, 3),
            (4, 3),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 9),
        ],
        &[(-2, 1), (1, 1), (2, 1), (3, 1), (4, 2), (5, 1), (6, 2), (7, 2), (8, 3)],
    ),
    (
        145,
        &[(-3, 1), (1, 1), (2, 1), (3, 4), (4, 2), (5, 4), (6, 6), (7, 7), (8, 9)],
        &[
            (-2, 1),
            (-1, 1),
            (1, 1),
            (2, 2),
            (3, 1),
            (4, 2),
            (5, 2),
            (6, 2),
            (7, 3),
            (8, 4),
        ],
    ),
    (
        155,
        &[
            (-3, 1),
            (-1, 1),
            (1, 1),
            (2, 2),
            (3, 3),
            (4, 3),
            (5, 4),
            (6, 4),
            (7, 7),
            (8, 7),
        ],
        &[
            (-2, 1),
            (1, 1),
            (2, 1),
            (3, 1),
            (4, 1),
            (5, 1),
            (6, 2),
            (7, 2),
            (8, 3),
            (9, 2),
        ],
    ),
    (
        159,
        &[(-3, 1), (1, 1), (2, 1), (3, 3), (4, 2), (5, 3), (6, 5), (7, 5), (8, 6)],
        &[
            (-2, 1),
            (-1, 1),
            (1, 1),
            (2, 1),
            (3, 1),
            (4, 2),
            (5, 2),
            (6, 2),
            (7, 3),
            (8, 3),
        ],
    ),
    (
        174,
        &[(-3, 1), (1, 1), (2, 1), (3, 3), (4, 1), (5, 3), (6, 3), (7, 4), (8, 4)],
        &[
            (-2, 1),
            (-1, 1),
            (2, 1),
            (3, 1),
            (4, 2),
            (5, 2),
            (6, 2),
            (7, 2),
            (8, 3),
            (9, 2),
        ],
    ),
    (
        182,
        &[(-3, 1), (1, 2), (3, 2), (4, 2), (5, 3), (6, 2), (7, 4), (8, 4), (9, 7)],
        &[
            (-2, 1),
            (1, 1),
            (2, 1),
            (4, 1),
            (5, 1),
            (6, 2),
            (7, 1),
            (8, 2),
            (9, 1),
            (10, 3),
        ],
    ),
    (
        190,
        &[
            (-3, 1),
            (-1, 1),
            (1, 2),
            (2, 1),
            (3, 2),
            (4, 1),
            (5, 3),
            (6, 3),
            (7, 5),
            (8, 3),
        ],
        &[
            (-2, 1),
            (-1, 1),
            (1, 1),
            (2, 1),
            (3, 1),
            (4, 1),
            (5, 1),
            (6, 2),
            (7, 1),
            (8, 3),
            (9, 2),
        ],
    ),
    (
        195,
        &[
            (-3, 1),
            (-1, -1),
            (1, 1),
            (2, 1),
            (3, 2),
            (5, 1),
            (6, 3),
            (7, 3),
            (8, 3),
            (9, 5),
        ],
        &[
            (-2, 1),
            (-1, 1),
            (2, 1),
            (3, 1),
            (4, 2),
            (5, 1),
            (6, 1),
            (7, 2),
            (8, 2),
            (9, 2),
        ],
    ),
    (
        210,
        &[
            (-3, 1),
            (-1, 1),
            (1, 1),
            (3, 3),
            (4, 2),
            (5, 2),
            (6, 2),
            (7, 3),
            (8, 2),
            (9, 6),
        ],
        &[
            (-2, 1),
            (-1, 1),
            (1, 1),
            (2, 2),
            (4, 1),
            (5, 1),
            (6, 1),
            (7, 1),
            (8, 1),
            (9, 2),
            (10, 2),
        ],
    ),
    (
        222,
        &[(-3, 1), (1, 1), (3, 2), (4, 1), (5, 2), (6, 2), (7, 2), (8, 2), (9, 5)],
        &[
            (-2, 1),
            (1, 1),
            (2, 1),
            (4, 1),
            (6, 1),
            (7, 1),
            (8, 1),
            (9, 1),
            (10, 2),
            (11, 1),
        ],
    ),
    (
        231,
        &[(-3, 1), (1, 1), (3, 2), (4, 1), (5, 1), (6, 2), (7, 2), (8, 3), (9, 4)],
        &[
            (-2, 1),
            (1, 1),
            (4, 1),
            (5, 1),
            (6, 1),
            (7, 1),
            (8, 1),
            (9, 1),
            (10, 2),
            (11, 1),
        ],
    ),
    (
        238,
        &[
            (-3, 1),
            (1, 1),
            (2, 1),
            (3, 1),
            (4, 1),
            (5, 2),
            (6, 1),
            (7, 2),
            (8, 1),
            (9, 4),
        ],
        &[
            (-2, 1),
            (-1, 1),
            (3, 1),
            (4, 1),
            (5, 1),
            (6, 2),
            (7, 1),
            (8, 2),
            (9, 1),
            (10, 2),
        ],
    ),
];

/// `(N, y, x, κ)` with coefficients as `(exponent, numerator, denominator)`.
pub const GENUS3_YX: [(u64, &[(i64, i64, i64)], &[(i64, i64, i64)], u64); 31] = [
    (
        97,
        &[
            (-5, 1, 1),
            (-3, 2, 1),
            (-2, 1, 1),
            (-1, 5, 1),
            (1, 14, 1),
            (2, 20, 1),
            (3, 38, 1),
            (4, 54, 1),
            (5, 92, 1),
        ],
        &[
            (-4, 1, 1),
            (-3, 1, 1),
            (-2, 3, 1),
            (-1, 4, 1),
            (1, 11, 1),
            (2, 18, 1),
            (3, 25, 1),
            (4, 39, 1),
        ],
        487,
    ),
    (
        109,
        &[
            (-5, 1, 1),
            (-4, 2, 1),
            (-2, 3, 1),
            (-1, 4, 1),
            (1, 14, 1),
            (2, 25, 1),
            (3, 35, 1),
            (4, 61, 1),
            (5, 89, 1),
        ],
        &[
            (-3, 1, 1),
            (-2, 1, 1),
            (-1, 2, 1),
            (1, 4, 1),
            (2, 5, 1),
            (3, 8, 1),
            (4, 9, 1),
            (5, 13, 1),
            (6, 17, 1),
        ],
        508,
    ),
    (
        113,
        &[
            (-5, 1, 1),
            (-3, 2, 1),
            (-2, 2, 1),
            (-1, 5, 1),
            (1, 13, 1),
            (2, 16, 1),
            (3, 28, 1),
            (4, 38, 1),
            (5, 60, 1),
        ],
        &[
            (-4, 1, 1),
            (-3, 1, 1),
            (-2, 2, 1),
            (-1, 3, 1),
            (1, 7, 1),
            (2, 12, 1),
            (3, 16, 1),
            (4, 24, 1),
            (5, 32, 1),
        ],
        487,
    ),
    (
        127,
        &[
            (-5, 1, 1),
            (-3, 1, 1),
            (-2, 1, 1),
            (-1, 4, 1),
            (1, 7, 1),
            (2, 10, 1),
            (3, 17, 1),
            (4, 22, 1),
            (5, 35, 1),
        ],
        &[
            (-4, 1, 1),
            (-3, 1, 1),
            (-2, 2, 1),
            (-1, 2, 1),
            (1, 6, 1),
            (2, 9, 1),
            (3, 12, 1),
            (4, 18, 1),
            (5, 23, 1),
        ],
        487,
    ),
    (
        139,
        &[
            (-5, 1, 1),
            (-3, 1, 1),
            (-2, 1, 1),
            (-1, 4, 1),
            (1, 7, 1),
            (2, 8, 1),
            (3, 14, 1),
            (4, 17, 1),
            (5, 28, 1),
            (6, 35, 1),
        ],
        &[
            (-4, 1, 1),
            (-3, 1, 1),
            (-2, 2, 1),
            (-1, 2, 1),
            (1, 5, 1),
            (2, 8, 1),
            (3, 10, 1),
            (4, 15, 1),
            (5, 18, 1),
        ],
        487,
    ),
    (
        149,
        &[
            (-5, 1, 1),
            (-3, 1, 1),
            (-2, 2, 1),
            (-1, 3, 1),
            (1, 7, 1),
            (2, 8, 1),
            (3, 12, 1),
            (4, 16, 1),
            (5, 24, 1),
        ],
        &[
            (-4, 1, 1),
            (-3, 1, 1),
            (-2, 1, 1),
            (-1, 2, 1),
            (1, 4, 1),
            (2, 6, 1),
            (3, 8, 1),
            (4, 11, 1),
            (5, 14, 1),
        ],
        487,
    ),
    (
        151,
        &[
            (-5, 1, 1),
            (-4, 1, 1),
            (-2, 1, 1),
            (-1, 3, 1),
            (1, 6, 1),
            (2, 8, 1),
            (3, 12, 1),
            (4, 18, 1),
            (5, 25, 1),
            (6, 33, 1),
        ],
        &[
            (-3, 1, 1),
            (-2, 1, 1),
            (-1, 1, 1),
            (1, 2, 1),
            (2, 3, 1),
            (3, 4, 1),
            (4, 4, 1),
            (5, 6, 1),
            (6, 7, 1),
            (7, 9, 1),
        ],
        508,
    ),
    (
        178,
        &[
            (-5, 1, 1),
            (-3, 2, 1),
            (-1, 3, 1),
            (1, 6, 1),
            (2, 4, 1),
            (3, 11, 1),
            (4, 8, 1),
            (5, 19, 1),
            (6, 16, 1),
        ],
        &[
            (-4, 1, 1),
            (-2, 2, 1),
            (-1, 1, 1),
            (1, 2, 1),
            (2, 5, 1),
            (3, 3, 1),
            (4, 8, 1),
            (5, 6, 1),
            (6, 11, 1),
        ],
        487,
    ),
    (
        179,
        &[
            (-5, 1, 1),
            (-4, 1, 1),
            (-2, 1, 1),
            (-1, 2, 1),
            (1, 4, 1),
            (2, 6, 1),
            (3, 8, 1),
            (4, 12, 1),
            (5, 16, 1),
            (6, 20, 1),
        ],
        &[
            (-3, 1, 1),
            (-2, 1, 1),
            (-1, 1, 1),
            (1, 2, 1),
            (2, 2, 1),
            (3, 3, 1),
            (4, 3, 1),
            (5, 4, 1),
            (6, 5, 1),
            (7, 6, 1),
        ],
        508,
    ),
    (
        183,
        &[
            (-5, 1, 1),
            (-3, 1, 1),
            (-1, 2, 1),
            (1, 3, 1),
            (2, 4, 1),
            (3, 7, 1),
            (4, 7, 1),
            (5, 14, 1),
            (6, 14, 1),
            (7, 19, 1),
        ],
        &[
            (-4, 1, 1),
            (-3, 1, 1),
            (-2, 2, 1),
            (-1, 2, 1),
            (1, 4, 1),
            (2, 5, 1),
            (3, 6, 1),
            (4, 9, 1),
            (5, 9, 1),
        ],
        635,
    ),
    (
        185,
        &[
            (-5, 1, 1),
            (-3, 1, 1),
            (-2, 1, 1),
            (-1, 2, 1),
            (1, 4, 1),
            (2, 4, 1),
            (3, 7, 1),
            (4, 9, 1),
            (5, 14, 1),
            (6, 15, 1),
        ],
        &[
            (-4, 1, 1),
            (-2, 1, 1),
            (1, 2, 1),
            (2, 3, 1),
            (3, 3, 1),
            (4, 4, 1),
            (5, 5, 1),
            (6, 8, 1),
            (7, 9, 1),
            (8, 13, 1),
        ],
        487,
    ),
    (
        187,
        &[
            (-5, 1, 1),
            (-2, 1, 1),
            (-1, 3, 1),
            (1, 3, 1),
            (2, 5, 1),
            (3, 6, 1),
            (4, 6, 1),
            (5, 10, 1),
            (6, 12, 1),
            (7, 18, 1),
        ],
        &[
            (-4, 1, 1),
            (-3, 1, 1),
            (-2, 1, 1),
            (-1, 1, 1),
            (1, 3, 1),
            (2, 3, 1),
            (3, 5, 1),
            (4, 7, 1),
            (5, 8, 1),
        ],
        515,
    ),
    (
        194,
        &[
            (-5, 1, 1),
            (-3, 2, 1),
            (-2, 1, 1),
            (-1, 3, 1),
            (1, 6, 1),
            (2, 4, 1),
            (3, 10, 1),
            (4, 8, 1),
            (5, 16, 1),
            (6, 14, 1),
        ],
        &[
            (-4, 1, 1),
            (-3, 1, 1),
            (-2, 1, 1),
            (-1, 2, 1),
            (1, 3, 1),
            (2, 4, 1),
            (3, 5, 1),
            (4, 7, 1),
            (5, 7, 1),
        ],
        487,
    ),
    (
        203,
        &[
            (-5, 1, 1),
            (-3, 1, 1),
            (-2, 1, 1),
            (-1, 3, 1),
            (1, 4, 1),
            (2, 4, 1),
            (3, 7, 1),
            (4, 7, 1),
            (5, 10, 1),
            (6, 13, 1),
        ],
        &[
            (-4, 1, 1),
            (-3, 1, 1),
            (-2, 1, 1),
            (-1, 1, 1),
            (1, 2, 1),
            (2, 4, 1),
            (3, 4, 1),
            (4, 6, 1),
            (5, 7, 1),
            (6, 8, 1),
        ],
        1015,
    ),
    (
        217,
        &[
            (-5, 1, 1),
            (-3, 2, 1),
            (-2, 1, 1),
            (-1, 3, 1),
            (1, 4, 1),
            (2, 5, 1),
            (3, 7, 1),
            (4, 8, 1),
            (5, 11, 1),
            (6, 12, 1),
        ],
        &[
            (-4, 1, 1),
            (-3, -1, 1),
            (-2, 1, 1),
            (-1, -1, 1),
            (2, 1, 1),
            (4, 2, 1),
            (5, 3, 1),
            (6, 3, 1),
            (7, 3, 1),
            (8, 5, 1),
        ],
        905,
    ),
    (
        239,
        &[
            (-5, 1, 1),
            (-3, 1, 1),
            (-2, 1, 1),
            (-1, 2, 1),
            (1, 3, 1),
            (2, 3, 1),
            (3, 5, 1),
            (4, 5, 1),
            (5, 7, 1),
            (6, 8, 1),
        ],
        &[
            (-4, 1, 1),
            (-3, 1, 1),
            (-2, 1, 1),
            (-1, 1, 1),
            (1, 2, 1),
            (2, 3, 1),
            (3, 3, 1),
            (4, 4, 1),
            (5, 5, 1),
            (6, 6, 1),
        ],
        487,
    ),
    (
        246,
        &[
            (-5, 1, 1),
            (-1, 2, 1),
            (1, 2, 1),
            (2, 2, 1),
            (3, 3, 1),
            (4, 2, 1),
            (5, 6, 1),
            (6, 4, 1),
            (7, 9, 1),
            (8, 8, 1),
        ],
        &[
            (-4, 1, 1),
            (-2, 1, 1),
            (1, 1, 1),
            (2, 2, 1),
            (3, 1, 1),
            (4, 4, 1),
            (5, 2, 1),
            (6, 4, 1),
            (7, 4, 1),
            (8, 7, 1),
        ],
        635,
    ),
    (
        249,
        &[
            (-5, 1, 1),
            (-3, 1, 1),
            (-2, 1, 1),
            (-1, 1, 1),
            (1, 3, 1),
            (2, 2, 1),
            (3, 4, 1),
            (4, 5, 1),
            (5, 6, 1),
            (6, 7, 1),
        ],
        &[
            (-4, 1, 1),
            (-1, 1, 1),
            (1, 1, 1),
            (2, 2, 1),
            (3, 1, 1),
            (4, 2, 1),
            (5, 3, 1),
            (6, 3, 1),
            (7, 3, 1),
            (8, 6, 1),
        ],
        635,
    ),
    (
        258,
        &[
            (-5, 1, 1),
            (-3, 2, 1),
            (-2, 1, 1),
            (-1, 2, 1),
            (1, 4, 1),
            (2, 2, 1),
            (3, 6, 1),
            (4, 5, 1),
            (5, 8, 1),
            (6, 7, 1),
        ],
        &[
            (-4, 1, 1),
            (-3, 1, 1),
            (-2, 1, 1),
            (-1, 1, 1),
            (1, 1, 1),
            (2, 3, 1),
            (3, 3, 1),
            (4, 4, 1),
            (5, 4, 1),
            (6, 5, 1),
        ],
        635,
    ),
    (
        282,
        &[
            (-4, 1, 1),
            (-2, 1, 1),
            (1, 1, 1),
            (2, 2, 1),
            (3, 1, 1),
            (4, 3, 1),
            (5, 1, 1),
            (6, 3, 1),
            (7, 3, 1),
            (8, 5, 1),
            (9, 3, 1),
        ],
        &[
            (-3, 1, 1),
            (-1, 1, 1),
            (1, 1, 1),
            (3, 2, 1),
            (4, 1, 1),
            (5, 1, 1),
            (6, 1, 1),
            (7, 2, 1),
            (8, 1, 1),
            (9, 3, 1),
            (10, 2, 1),
        ],
        282,
    ),
    (
        290,
        &[
            (-5, 1, 1),
            (-3, 1, 1),
            (-1, 1, 1),
            (1, 2, 1),
            (2, 1, 1),
            (3, 3, 1),
            (4, 2, 1),
            (5, 6, 1),
            (6, 4, 1),
            (7, 7, 1),
            (8, 5, 1),
        ],
        &[
            (-4, 1, 1),
            (-2, 2, 1),
            (-1, 1, 1),
            (1, 1, 1),
            (2, 3, 1),
            (3, 1, 1),
            (4, 4, 1),
            (5, 2, 1),
            (6, 3, 1),
            (7, 3, 1),
        ],
        487,
    ),
    (
        295,
        &[
            (-5, 1, 1),
            (-1, 1, 1),
            (1, 1, 1),
            (2, 1, 1),
            (3, 2, 1),
            (4, 2, 1),
            (5, 4, 1),
            (6, 3, 1),
            (7, 4, 1),
            (8, 5, 1),
            (9, 6, 1),
        ],
        &[
            (-4, 1, 1),
            (-3, 1, 1),
            (-2, 1, 1),
            (-1, 1, 1),
            (1, 2, 1),
            (2, 2, 1),
            (3, 2, 1),
            (4, 3, 1),
            (5, 3, 1),
            (6, 4, 1),
        ],
        487,
    ),
    (
        303,
        &[
            (-5, 1, 1),
            (-2, 1, 1),
            (-1, 1, 1),
            (1, 2, 1),
            (2, 1, 1),
            (3, 2, 1),
            (4, 3, 1),
            (5, 3, 1),
            (6, 3, 1),
            (7, 6, 1),
            (8, 5, 1),
        ],
        &[
            (-4, 1, 1),
            (-3, 1, 1),
            (-1, 1, 1),
            (1, 1, 1),
            (2, 2, 1),
            (3, 2, 1),
            (4, 2, 1),
            (5, 3, 1),
            (6, 3, 1),
            (7, 3, 1),
        ],
        635,
    ),
    (
        310,
        &[
            (-5, 1, 1),
            (-1, 1, 1),
            (1, 1, 1),
            (2, 1, 1),
            (3, 2, 1),
            (4, 1, 1),
            (5, 4, 1),
            (6, 2, 1),
            (7, 5, 1),
            (8, 4, 1),
            (9, 6, 1),
        ],
        &[
            (-4, 1, 1),
            (-2, 1, 1),
            (1, 1, 1),
            (2, 2, 1),
            (3, 1, 1),
            (4, 2, 1),
            (5, 1, 1),
            (6, 3, 1),
            (7, 2, 1),
            (8, 4, 1),
        ],
        487,
    ),
    (
        318,
        &[
            (-5, 1, 1),
            (-3, 1, 1),
            (-2, -1, 1),
            (-1, 1, 1),
            (1, 2, 1),
            (2, 1, 1),
            (3, 3, 1),
            (4, 1, 1),
            (5, 4, 1),
            (6, 2, 1),
            (7, 5, 1),
        ],
        &[
            (-4, 1, 1),
            (-2, 2, 1),
            (-1, 1, 1),
            (1, 1, 1),
            (2, 2, 1),
            (3, 1, 1),
            (4, 3, 1),
            (5, 2, 1),
            (6, 3, 1),
            (7, 3, 1),
        ],
        635,
    ),
    (
        329,
        &[
            (-5, 1, 1),
            (-2, 1, 1),
            (-1, 1, 1),
            (1, 2, 1),
            (2, 2, 1),
            (3, 1, 1),
            (4, 2, 1),
            (5, 3, 1),
            (6, 3, 1),
            (7, 4, 1),
            (8, 4, 1),
        ],
        &[
            (-4, 1, 1),
            (-3, 1, 1),
            (-1, 1, 1),
            (1, 1, 1),
            (2, 1, 1),
            (3, 2, 1),
            (4, 2, 1),
            (5, 2, 1),
            (6, 3, 1),
            (7, 3, 1),
        ],
        905,
    ),
    (
        429,
        &[
            (-5, 1, 1),
            (-2, 1, 1),
            (-1, 1, 1),
            (1, 2, 1),
            (2, 1, 1),
            (3, 1, 1),
            (4, 1, 1),
            (5, 2, 1),
            (6, 1, 1),
            (7, 3, 1),
            (8, 2, 1),
        ],
        &[
            (-4, 1, 1),
            (-3, 1, 1),
            (2, 1, 1),
            (3, 1, 1),
            (4, 1, 1),
            (5, 1, 1),
            (6, 2, 1),
            (7, 2, 1),
            (8, 3, 1),
            (9, 2, 1),
        ],
        1187,
    ),
    (
        430,
        &[
            (-5, 1, 1),
            (-3, 1, 1),
            (-1, 1, 1),
            (1, 1, 1),
            (2, 1, 1),
            (3, 2, 1),
            (4, 1, 1),
            (5, 3, 1),
            (6, 1, 1),
            (7, 3, 1),
            (8, 2, 1),
        ],
        &[
            (-4, 1, 1),
            (-3, -1, 1),
            (-2, 1, 1),
            (4, 1, 1),
            (6, 2, 1),
            (8, 2, 1),
            (10, 2, 1),
            (11, 1, 1),
            (12, 2, 1),
        ],
        487,
    ),
    (
        455,
        &[
            (-5, 1, 1),
            (-3, -1, 1),
            (-2, 1, 1),
            (1, 1, 1),
            (2, 1, 1),
            (5, 2, 1),
            (6, 1, 1),
            (7, 1, 1),
            (8, 2, 1),
            (9, 1, 1),
            (10, 2, 1),
        ],
        &[
            (-4, 1, 1),
            (-3, -1, 1),
            (-2, 1, 1),
            (1, 1, 1),
            (2, 1, 1),
            (4, 1, 1),
            (8, 2, 1),
            (9, 1, 1),
            (10, 1, 1),
            (11, 1, 1),
        ],
        1129,
    ),
    (
        462,
        &[
            (-5, 1, 1),
            (-3, 1, 1),
            (-1, 1, 1),
            (1, 1, 1),
            (2, 1, 1),
            (3, 2, 1),
            (4, 1, 1),
            (5, 3, 1),
            (6, 1, 1),
            (7, 2, 1),
            (8, 2, 1),
        ],
        &[
            (-4, 1, 1),
            (-2, 1, 1),
            (1, 1, 1),
            (2, 1, 1),
            (4, 1, 1),
            (5, 1, 1),
            (6, 1, 1),
            (7, 1, 1),
            (8, 2, 1),
            (9, 1, 1),
            (10, 3, 1),
        ],
        1680,
    ),
    (
        510,
        &[
            (-5, 1, 1),
            (-3, 1, 2),
            (-2, 1, 2),
            (1, 1, 1),
            (3, 1, 1),
            (4, 3, 2),
            (5, 2, 1),
            (6, 1, 1),
            (7, 2, 1),
            (8, 1, 2),
        ],
        &[
            (-4, 1, 1),
            (-3, 1, 2),
            (-2, 1, 2),
            (2, 1, 1),
            (3, 1, 1),
            (4, 3, 2),
            (5, 1, 1),
            (6, 1, 1),
            (8, 3, 2),
            (9, 1, 1),
        ],
        635,
    ),
];

pub const RELATIONS_GENUS1: [(u64, &str); 38] = [
    (37, "y^2 - x^3 + 6xy - 6x^2 + 41y + 49x + 300 = 0"),
    (43, "y^2 - x^3 + 6xy - 4x^2 + 33y + 43x + 192 = 0"),
    (53, "y^2 - x^3 + 3xy - 6x^2 + 16y + x + 42 = 0"),
    (57, "y^2 - x^3 + 6xy - 2x^2 + 25y + 37x + 114 = 0"),
    (58, "y^2 - x^3 + 3xy - 6x^2 + 13y - 2x + 24 = 0"),
    (61, "y^2 - x^3 + 3xy - 4x^2 + 12y + 7x + 30 = 0"),
    (65, "y^2 - x^3 + 3xy - 4x^2 + 12y + x + 18 = 0"),
    (74, "y^2 - x^3 - 6x^2 + 3y - 11x - 4 = 0"),
    (77, "y^2 - x^3 - 6x^2 + 3y - 14x - 10 = 0"),
    (79, "y^2 - x^3 + 3xy - 2x^2 + 8y + 8x + 15 = 0"),
    (82, "y^2 - x^3 + 3xy - 4x^2 + 9y + 2x + 14 = 0"),
    (83, "y^2 - x^3 + 3xy - 2x^2 + 8y + 5x + 12 = 0"),
    (86, "y^2 - x^3 - 4x^2 + 3y - 5x = 0"),
    (89, "y^2 - x^3 + 3xy - 2x^2 + 8y + 7x + 14 = 0"),
    (91, "y^2 - x^3 + 6xy + 17y + 23x + 42 = 0"),
    (101, "y^2 - x^3 - 4x^2 + 3y - 4x + 2 = 0"),
    (102, "y^2 - x^3 + 3xy - 2x^2 + 5y + 4x + 6 = 0"),
    (111, "y^2 - x^3 + 6xy + 17y + 25x + 48 = 0"),
    (114, "y^2 - x^3 - 2x^2 + 3y + x + 2 = 0"),
    (118, "y^2 - x^3 + 3xy - 2x^2 + 5y + x + 2 = 0"),
    (123, "y^2 - x^3 - 2x^2 + 3y - 2x + 2 = 0"),
    (130, "y^2 - x^3 - 3xy - 4x^2 - 6y - 3x + 2 = 0"),
    (131, "y^2 - x^3 - 2x^2 + 3y - 2x + 1 = 0"),
    (138, "y^2 - x^3 + 3xy - 2x^2 + 5y + 3x + 4 = 0"),
    (141, "y^2 - x^3 - 2x^2 + 3y + 3 = 0"),
    (142, "y^2 - x^3 + 3xy - 2x^2 + 5y + 3x + 6 = 0"),
    (143, "y^2 - x^3 - 2x^2 + 3y + 5 = 0"),
    (145, "y^2 - x^3 + 3xy + 4y + 7x + 4 = 0"),
    (155, "y^2 - x^3 - 2x^2 + 3y + 2 = 0"),
    (159, "y^2 - x^3 + 3xy + 4y + 4x + 3 = 0"),
    (174, "y^2 - x^3 + 3xy + y + x = 0"),
    (182, "y^2 - x^3 + 3y - x + 2 = 0"),
    (190, "y^2 - x^3 + 3xy - 2x^2 + 5y = 0"),
    (195, "y^2 - x^3 + 3xy + 2x^2 + x = 0"),
    (210, "y^2 - x^3 + 3xy - 2x^2 + 5y + 5x + 10 = 0"),
    (222, "y^2 - x^3 + 3y + x + 2 = 0"),
    (231, "y^2 - x^3 + 3y - 2x + 2 = 0"),
    (238, "y^2 - x^3 + 3xy + y - 2x - 2 = 0"),
];

pub const RELATIONS_GENUS2: [(u64, &str); 39] = [
    (
        67,
        "y^3 - x^4 + 4y^2x + 5yx^2 - 15x^3 + 47y^2 + 121yx - 34x^2 + 724y + 602x + 3348 = 0",
    ),
    (
        73,
        "y^3 - x^4 + 4y^2x + 5yx^2 - 15x^3 + 43y^2 + 111yx - 39x^2 + 606y + 467x + 2508 = 0",
    ),
    (
        85,
        "y^3 - x^4 + 4y^2x + 8yx^2 - 7x^3 + 28y^2 + 88yx + 31x^2 + 277y + 367x + 864 = 0",
    ),
    (
        93,
        "y^3 - x^4 - 5yx^2 - 9x^3 + 16y^2 - 27yx - 57x^2 + 49y - 189x - 66 = 0",
    ),
    (
        103,
        "y^3 - x^4 - 5yx^2 - 9x^3 + 16y^2 - 21yx - 60x^2 + 65y - 164x + 18 = 0",
    ),
    (
        106,
        "y^3 - x^4 + 4y^2x + 4yx^2 - 7x^3 + 22y^2 + 55yx + 4x^2 + 158y + 160x + 360 = 0",
    ),
    (
        107,
        "y^3 - x^4 + 4y^2x + 7yx^2 - 5x^3 + 19y^2 + 58yx + 20x^2 + 128y + 164x + 272 = 0",
    ),
    (
        115,
        "y^3 - x^4 - 5yx^2 - 9x^3 + 16y^2 - 15yx - 59x^2 + 79y - 105x + 120 = 0",
    ),
    (
        122,
        "y^3 - x^4 + 2yx^2 - 3x^3 + 12y^2 + 3yx + 6x^2 + 48y + 12x + 64 = 0",
    ),
    (
        129,
        "y^3 - x^4 + 4y^2x - 10x^3 + 13y^2 + 21yx - 34x^2 + 48y - 18x + 36 = 0",
    ),
    (
        133,
        "y^3 - x^4 - 4y^2x - 7yx^2 - 3x^3 - 3y^2 - 77yx - 47x^2 - 84y - 243x - 198 = 0",
    ),
    (
        134,
        "y^3 - x^4 + 4y^2x + 3yx^2 - 5x^3 + 15y^2 + 35yx + 2x^2 + 72y + 66x + 108 = 0",
    ),
    (
        146,
        "y^3 - x^4 + 4y^2x + 3yx^2 - 5x^3 + 11y^2 + 27yx + 3x^2 + 40y + 43x + 48 = 0",
    ),
    (
        154,
        "y^3 - x^4 + 4y^2x + 3yx^2 - 2x^3 + 10y^2 + 29yx + 18x^2 + 33y + 49x + 36 = 0",
    ),
    (
        158,
        "y^3 - x^4 - 2yx^2 - 3x^3 + 10y^2 - 3yx - 11x^2 + 31y - 13x + 28 = 0",
    ),
    (161, "y^3 - x^4 + yx^2 - 3x^3 + 4y^2 - 3yx - x^2 = 0"),
    (165, "y^3 - x^4 - 2yx^2 - 3x^3 + 10y^2 - 3yx - 8x^2 + 27y - 3x + 18 = 0"),
    (166, "y^3 - x^4 - 2yx^2 - 3x^3 + 10y^2 - 3yx - 8x^2 + 34y - 8x + 40 = 0"),
    (
        167,
        "y^3 - x^4 + 4y^2x + 3yx^2 - 5x^3 + 11y^2 + 23yx - 6x^2 + 35y + 15x + 25 = 0",
    ),
    (
        170,
        "y^3 - x^4 + 4y^2x + 6yx^2 - 3x^3 + 10y^2 + 26yx + 7x^2 + 25y + 21x = 0",
    ),
    (177, "y^3 - x^4 + yx^2 - 3x^3 + 4y^2 - x^2 + 5y + 2 = 0"),
    (186, "y^3 - x^4 + yx^2 - 3x^3 + 4y^2 + 3yx - x^2 + 5y + 3x + 2 = 0"),
    (191, "y^3 - x^4 + yx^2 - 3x^3 + 4y^2 - 2x^2 + 4y - x + 1 = 0"),
    (205, "y^3 - x^4 + yx^2 - 3x^3 + 4y^2 + x^2 + y + 4x - 2 = 0"),
    (206, "y^3 - x^4 + yx^2 - 3x^3 + 4y^2 + 3yx - 2x^2 + 7y + 2x + 4 = 0"),
    (
        209,
        "y^3 - x^4 + 4y^2x + 6yx^2 + 5y^2 + 17yx + 13x^2 + 11y + 22x + 10 = 0",
    ),
    (213, "y^3 - x^4 + yx^2 - 3x^3 + 4y^2 + 3yx - 2x^2 + 6y + 3x + 3 = 0"),
    (
        215,
        "y^3 - x^4 - 4y^2x - 4yx^2 - 2x^3 - y^2 - 33yx - 32x^2 + y - 52x - 21 = 0",
    ),
    (
        221,
        "y^3 - x^4 - 4y^2x + 3yx^2 - x^3 + 5y^2 - 14yx + 6x^2 + 8y - 8x + 4 = 0",
    ),
    (230, "y^3 - x^4 + yx^2 - 3x^3 + 4y^2 + 3yx + x^2 + 7y + 7x + 4 = 0"),
    (
        255,
        "y^3 - x^4 + 4y^2x - 4yx^2 - 7x^3 - 2y^2 + 7yx - 20x^2 - 17y + 7x + 18 = 0",
    ),
    (
        266,
        "y^3 - x^4 - 4y^2x + 7yx^2 - x^3 + 5y^2 - 17yx + 11x^2 + 10y - 15x + 6 = 0",
    ),
    (285, "y^3 - x^4 + yx^2 + 4y^2 - 3yx + 4x^2 + 6y - 6x + 3 = 0"),
    (286, "y^3 - x^4 + yx^2 + 4y^2 - 3yx + 5y - 3x + 2 = 0"),
    (
        287,
        "y^3 - x^4 + 4y^2x + 3yx^2 - 5x^3 + 7y^2 + 14yx - 9x^2 + 11y - 7x - 6 = 0",
    ),
    (
        299,
        "y^3 - x^4 + 4y^2x + 5yx^2 - x^3 + 5y^2 + 11yx + 3x^2 + 2y - 6x - 12 = 0",
    ),
    (330, "y^3 - x^4 + 4yx^2 - 3x^3 - 2y^2 + 9yx - 2x^2 + 3y + 3x + 6 = 0"),
    (357, "y^3 - x^4 + 4yx^2 - 2y^2 - 3yx + x^2 - 3x + 3 = 0"),
    (390, "y^3 - x^4 - 4y^2x - 4yx^2 + x^3 - 27yx - 16x^2 + 18y + 56 = 0"),
];

pub const RELATIONS_GENUS3: [(u64, &str); 31] = [
    (97, "y^4 - x^5 + 5y^3x + 12y^2x^2 + 17yx^3 - 27x^4 + 64y^3 + 280y^2x + 545yx^2 - 128x^3 + 1685y^2 + 5965yx + 2558x^2 + 22370y + 31654x + 102984 = 0"),
    (109, "y^3 - x^5 - yx^3 + 13y^2x - 17x^4 + 49yx^2 + 59y^2 - 32x^3 + 494yx + 743x^2 + 1146y + 4461x + 7254 = 0"),
    (113, "y^4 - x^5 + 5y^3x + 7y^2x^2 + 3yx^3 - 26x^4 + 50y^3 + 162y^2x + 129yx^2 - 252x^3 + 870y^2 + 1629yx - 878x^2 + 6279y + 1397x + 12108 = 0"),
    (127, "y^4 - x^5 + 5y^3x + 11y^2x^2 + 9yx^3 - 21x^4 + 39y^3 + 160y^2x + 209yx^2 - 139x^3 + 598y^2 + 1580yx - 63x^2 + 3968y + 2600x + 7344 = 0"),
    (139, "y^4 - x^5 + 5y^3x + 11y^2x^2 + 9yx^3 - 21x^4 + 34y^3 + 140y^2x + 179yx^2 - 151x^3 + 455y^2 + 1176yx - 321x^2 + 2574y + 782x + 3084 = 0"),
    (149, "y^4 - x^5 + 5y^3x + 6y^2x^2 - 18x^4 + 30y^3 + 87y^2x + 33yx^2 - 130x^3 + 289y^2 + 364yx - 426x^2 + 988y - 412x + 468 = 0"),
    (151, "y^3 - x^5 + 2yx^3 + 4y^2x - 4x^4 + 12yx^2 + 19y^2 + 7x^3 + 55yx + 62x^2 + 118y + 176x + 240 = 0"),
    (178, "y^4 - x^5 + 2y^2x^2 + 5yx^3 - 12x^4 + 6y^3 + 8y^2x + 44yx^2 - 44x^3 + 19y^2 + 117yx - 32x^2 + 106y + 97x + 132 = 0"),
    (179, "y^3 - x^5 + 2yx^3 + 4y^2x - 4x^4 + 15yx^2 + 13y^2 + 8x^3 + 49yx + 69x^2 + 62y + 142x + 108 = 0"),
    (183, "y^4 - x^5 + 5y^3x + 11y^2x^2 + 13yx^3 - 10x^4 + 24y^3 + 101y^2x + 171yx^2 + 6x^3 + 228y^2 + 739yx + 376x^2 + 1045y + 1435x + 1650 = 0"),
    (185, "y^4 - x^5 + y^2x^2 - 4yx^3 - 8x^4 + 12y^3 + y^2x - 11yx^2 - 38x^3 + 52y^2 - 16yx - 84x^2 + 87y - 89x + 28 = 0"),
    (187, "y^4 - x^5 + 5y^3x + 10y^2x^2 + 6yx^3 - 15x^4 + 20y^3 + 71y^2x + 60yx^2 - 95x^3 + 132y^2 + 203yx - 319x^2 + 234y - 570x - 432 = 0"),
    (194, "y^4 - x^5 + 5y^3x + 2y^2x^2 - 3yx^3 - 11x^4 + 28y^3 + 44y^2x - 13yx^2 - 50x^3 + 165y^2 + 77yx - 112x^2 + 342y - 42x + 216 = 0"),
    (203, "y^4 - x^5 + 5y^3x + 6y^2x^2 - yx^3 - 15x^4 + 16y^3 + 47y^2x + 9yx^2 - 90x^3 + 87y^2 + 82yx - 262x^2 + 144y - 359x - 173 = 0"),
    (217, "y^4 - x^5 - 5y^3x + 2y^2x^2 - 5x^4 - 5y^3 - 38y^2x - yx^2 - 4x^3 - 97y^2 - 125yx - 22x^2 - 324y - 187x - 309 = 0"),
    (239, "y^4 - x^5 + 5y^3x + 6y^2x^2 - yx^3 - 11x^4 + 15y^3 + 45y^2x + 13yx^2 - 52x^3 + 73y^2 + 86yx - 115x^2 + 114y - 107x - 26 = 0"),
    (246, "y^4 - x^5 + 5y^2x^2 - 8x^4 + 5y^3 + 19y^2x + 7yx^2 - 22x^3 + 15y^2 + 14yx - 24x^2 - 5y - 9x = 0"),
    (249, "y^4 - x^5 - 4y^2x^2 + yx^3 - 2x^4 + 8y^3 - 6y^2x - 12yx^2 + x^3 + 22y^2 - 20yx - 7x^2 + 24y - 14x + 9 = 0"),
    (258, "y^4 - x^5 + 5y^3x + 2y^2x^2 - 8yx^3 - 7x^4 + 11y^3 + 20y^2x - 21yx^2 - 29x^3 + 36y^2 + 7yx - 56x^2 + 46y - 26x + 20 = 0"),
    (282, "y^3 - x^4 + yx^2 + 4y^2 - 3yx + 4x^2 + 3y - 3x = 0"),
    (290, "y^4 - x^5 + 6y^2x^2 + 5yx^3 - 6x^4 - 2y^3 + 24y^2x + 36yx^2 + 5x^3 + 15y^2 + 77yx + 72x^2 + 62y + 94x + 32 = 0"),
    (295, "y^4 - x^5 + 5y^3x + 10y^2x^2 + 10yx^3 - 4x^4 + 12y^3 + 46y^2x + 65yx^2 + 9x^3 + 51y^2 + 136yx + 64x^2 + 90y + 99x + 47 = 0"),
    (303, "y^4 - x^5 + 5y^3x + 5y^2x^2 + yx^3 - 7x^4 + 11y^3 + 23y^2x + 12yx^2 - 17x^3 + 27y^2 + 34yx - 11x^2 + 28y + 16x + 20 = 0"),
    (310, "y^4 - x^5 + 5y^2x^2 - 4x^4 + 5y^3 + 17y^2x + 11yx^2 - 2x^3 + 23y^2 + 40yx + 10x^2 + 45y + 23x + 26 = 0"),
    (318, "y^4 - x^5 + 6y^2x^2 + 9yx^3 - 6x^4 - 6y^3 + 10y^2x + 56yx^2 - 2x^3 + 9y^2 + 123yx + 26x^2 + 100y + 23x - 24 = 0"),
    (329, "y^4 - x^5 + 5y^3x + 5y^2x^2 + yx^3 - 7x^4 + 11y^3 + 18y^2x - 2yx^2 - 20x^3 + 18y^2 - 17yx - 31x^2 - 18y - 28x - 12 = 0"),
    (429, "y^4 - x^5 + 5y^3x + 5y^2x^2 - 4yx^3 - 7x^4 + y^3 - 4y^2x - 23yx^2 - 21x^3 - 3y^2 - 21yx - 22x^2 - 6y - 8x = 0"),
    (430, "y^4 - x^5 - 5y^3x + 6y^2x^2 + 2yx^3 - 4x^4 - 5y^2x + 11yx^2 - 5x^3 - 2y^2 + 8yx - 4x^2 - 8y + 6x = 0"),
    (455, "y^4 - x^5 - 5y^3x + 14y^2x^2 - 16yx^3 + 7x^4 + 3y^3 - 7y^2x + 13yx^2 + 2x^3 - 6y^2 + 30yx - 47x^2 - 27y + 66x - 27 = 0"),
    (462, "y^4 - x^5 + y^2x^2 - 4x^4 + 5y^3 + 3y^2x - yx^2 - 8x^3 + 5y^2 + 4yx - 20x^2 - 11y - 19x - 24 = 0"),
    (510, "w^5 - 5w^4v + 4w^4 + 10w^3v^2 - 6w^3v - 3w^3 - 10w^2v^3 - 4w^2v^2 + 46w^2v - 23w^2 + 5wv^4 + 34wv^3 - 75wv^2 + 97wv - 5w - v^5 + 4v^4 + 45v^3 - 78v^2 + 50v + 30 = 0"),
];
