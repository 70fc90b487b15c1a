//! Matrices exactly as printed in the source article, row by row.

#![allow(dead_code)]

/// Riordan array (1/(1-x), x/(1-x)^2), first display.
pub const A085478_M: &[&[i64]] = &[
    &[1, 0, 0, 0, 0, 0, 0],
    &[1, 1, 0, 0, 0, 0, 0],
    &[1, 3, 1, 0, 0, 0, 0],
    &[1, 6, 5, 1, 0, 0, 0],
    &[1, 10, 15, 7, 1, 0, 0],
    &[1, 15, 35, 28, 9, 1, 0],
    &[1, 21, 70, 84, 45, 11, 1],
];

/// its production matrix.
pub const A085478_P: &[&[i64]] = &[
    &[1, 1, 0, 0, 0, 0, 0],
    &[0, 2, 1, 0, 0, 0, 0],
    &[0, -1, 2, 1, 0, 0, 0],
    &[0, 2, -1, 2, 1, 0, 0],
    &[0, -5, 2, -1, 2, 1, 0],
    &[0, 14, -5, 2, -1, 2, 1],
    &[0, -42, 14, -5, 2, -1, 2],
];

/// M^{-1} times M with two top rows removed.
pub const A085478_INV_TIMES_TWO_ROWS_REMOVED: &[&[i64]] = &[
    &[1, 3, 1, 0, 0, 0, 0],
    &[0, 3, 4, 1, 0, 0, 0],
    &[0, -2, 2, 4, 1, 0, 0],
    &[0, 4, 0, 2, 4, 1, 0],
    &[0, -10, -1, 0, 2, 4, 1],
    &[0, 28, 4, -1, 0, 2, 4],
    &[0, -84, -14, 4, -1, 0, 2],
];

/// second production matrix.
pub const A085478_P2: &[&[i64]] = &[
    &[3, 1, 0, 0, 0, 0, 0],
    &[3, 4, 1, 0, 0, 0, 0],
    &[-2, 2, 4, 1, 0, 0, 0],
    &[4, 0, 2, 4, 1, 0, 0],
    &[-10, -1, 0, 2, 4, 1, 0],
    &[28, 4, -1, 0, 2, 4, 1],
    &[-84, -14, 4, -1, 0, 2, 4],
];

/// second production matrix, repeated display.
pub const A085478_P2_AGAIN: &[&[i64]] = &[
    &[3, 1, 0, 0, 0, 0, 0],
    &[3, 4, 1, 0, 0, 0, 0],
    &[-2, 2, 4, 1, 0, 0, 0],
    &[4, 0, 2, 4, 1, 0, 0],
    &[-10, -1, 0, 2, 4, 1, 0],
    &[28, 4, -1, 0, 2, 4, 1],
    &[-84, -14, 4, -1, 0, 2, 4],
];

/// matrix produced by the second production matrix (left side of the product identity).
pub const A085478_M2: &[&[i64]] = &[
    &[1, 0, 0, 0, 0, 0],
    &[3, 1, 0, 0, 0, 0],
    &[12, 7, 1, 0, 0, 0],
    &[55, 42, 11, 1, 0, 0],
    &[273, 245, 88, 15, 1, 0],
    &[1428, 1428, 627, 150, 19, 1],
];

/// left factor ((1-x)^2, x(1-x)^2)^{-1} of the product identity.
pub const A092276_N: &[&[i64]] = &[
    &[1, 0, 0, 0, 0, 0],
    &[2, 1, 0, 0, 0, 0],
    &[7, 4, 1, 0, 0, 0],
    &[30, 18, 6, 1, 0, 0],
    &[143, 88, 33, 8, 1, 0],
    &[728, 455, 182, 52, 10, 1],
];

/// right factor of the product identity.
pub const A085478_M_6: &[&[i64]] = &[
    &[1, 0, 0, 0, 0, 0],
    &[1, 1, 0, 0, 0, 0],
    &[1, 3, 1, 0, 0, 0],
    &[1, 6, 5, 1, 0, 0],
    &[1, 10, 15, 7, 1, 0],
    &[1, 15, 35, 28, 9, 1],
];

/// M^{-1} times M with three top rows removed.
pub const A085478_INV_TIMES_THREE_ROWS_REMOVED: &[&[i64]] = &[
    &[1, 6, 5, 1, 0, 0, 0],
    &[0, 4, 10, 6, 1, 0, 0],
    &[0, -3, 0, 9, 6, 1, 0],
    &[0, 6, 5, 2, 9, 6, 1],
    &[0, -15, -14, 0, 2, 9, 6],
    &[0, 42, 41, 0, 0, 2, 9],
    &[0, -126, -126, -1, 0, 0, 2],
];

/// third production matrix.
pub const A085478_P3: &[&[i64]] = &[
    &[5, 1, 0, 0, 0, 0, 0, 0],
    &[10, 6, 1, 0, 0, 0, 0, 0],
    &[0, 9, 6, 1, 0, 0, 0, 0],
    &[5, 2, 9, 6, 1, 0, 0, 0],
    &[-14, 0, 2, 9, 6, 1, 0, 0],
    &[41, 0, 0, 2, 9, 6, 1, 0],
    &[-126, -1, 0, 0, 2, 9, 6, 1],
    &[402, 6, -1, 0, 0, 2, 9, 6],
];

/// matrix produced by the third production matrix.
pub const A085478_M3: &[&[i64]] = &[
    &[1, 0, 0, 0, 0, 0, 0, 0],
    &[5, 1, 0, 0, 0, 0, 0, 0],
    &[35, 11, 1, 0, 0, 0, 0, 0],
    &[285, 110, 17, 1, 0, 0, 0, 0],
    &[2530, 1100, 221, 23, 1, 0, 0, 0],
    &[23751, 11165, 2635, 368, 29, 1, 0, 0],
    &[231880, 115192, 30345, 5106, 551, 35, 1, 0],
    &[2330445, 1206348, 344318, 66010, 8729, 770, 41, 1],
];

/// Catalan array (c(x), x c(x)).
pub const CATALAN_M: &[&[i64]] = &[
    &[1, 0, 0, 0, 0, 0, 0],
    &[1, 1, 0, 0, 0, 0, 0],
    &[2, 2, 1, 0, 0, 0, 0],
    &[5, 5, 3, 1, 0, 0, 0],
    &[14, 14, 9, 4, 1, 0, 0],
    &[42, 42, 28, 14, 5, 1, 0],
    &[132, 132, 90, 48, 20, 6, 1],
];

/// second production matrix of the Catalan array.
pub const CATALAN_P2: &[&[i64]] = &[
    &[2, 1, 0, 0, 0, 0],
    &[3, 2, 1, 0, 0, 0],
    &[4, 3, 2, 1, 0, 0],
    &[5, 4, 3, 2, 1, 0],
    &[6, 5, 4, 3, 2, 1],
    &[7, 6, 5, 4, 3, 2],
];

/// A092276, produced by it.
pub const CATALAN_M2: &[&[i64]] = &[
    &[1, 0, 0, 0, 0, 0],
    &[2, 1, 0, 0, 0, 0],
    &[7, 4, 1, 0, 0, 0],
    &[30, 18, 6, 1, 0, 0],
    &[143, 88, 33, 8, 1, 0],
    &[728, 455, 182, 52, 10, 1],
];

/// third production matrix of the Catalan array.
pub const CATALAN_P3: &[&[i64]] = &[
    &[3, 1, 0, 0, 0, 0, 0],
    &[6, 3, 1, 0, 0, 0, 0],
    &[10, 6, 3, 1, 0, 0, 0],
    &[15, 10, 6, 3, 1, 0, 0],
    &[21, 15, 10, 6, 3, 1, 0],
    &[28, 21, 15, 10, 6, 3, 1],
    &[36, 28, 21, 15, 10, 6, 3],
];

/// matrix produced by it.
pub const CATALAN_M3: &[&[i64]] = &[
    &[1, 0, 0, 0, 0, 0, 0],
    &[3, 1, 0, 0, 0, 0, 0],
    &[15, 6, 1, 0, 0, 0, 0],
    &[91, 39, 9, 1, 0, 0, 0],
    &[612, 272, 72, 12, 1, 0, 0],
    &[4389, 1995, 570, 114, 15, 1, 0],
    &[32890, 15180, 4554, 1012, 165, 18, 1],
];

/// fourth production matrix of the Catalan array.
pub const CATALAN_P4: &[&[i64]] = &[
    &[4, 1, 0, 0, 0, 0, 0],
    &[10, 4, 1, 0, 0, 0, 0],
    &[20, 10, 4, 1, 0, 0, 0],
    &[35, 20, 10, 4, 1, 0, 0],
    &[56, 35, 20, 10, 4, 1, 0],
    &[84, 56, 35, 20, 10, 4, 1],
    &[120, 84, 56, 35, 20, 10, 4],
];

/// matrix produced by it.
pub const CATALAN_M4: &[&[i64]] = &[
    &[1, 0, 0, 0, 0, 0, 0],
    &[4, 1, 0, 0, 0, 0, 0],
    &[26, 8, 1, 0, 0, 0, 0],
    &[204, 68, 12, 1, 0, 0, 0],
    &[1771, 616, 126, 16, 1, 0, 0],
    &[16380, 5850, 1300, 200, 20, 1, 0],
    &[158224, 57536, 13485, 2320, 290, 24, 1],
];
