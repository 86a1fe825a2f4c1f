// Rows of the small-case tables, transcribed verbatim.
// `(t, s, vanes)`; for t = 1 the two shared vanes are listed separately.

pub(super) const ROWS: &[(u32, u32, &[&[u32]])] = &[
    (1, 2, &[&[0, 9, 1, 11]]),
    (1, 3, &[&[0, 11, 1, 15], &[0, 12, 4, 13]]),
    (1, 4, &[&[0, 13, 1, 19], &[0, 14, 4, 15], &[0, 16, 8, 17]]),
    (1, 5, &[&[0, 15, 1, 19], &[0, 16, 4, 17], &[0, 20, 11, 22], &[0, 21, 13, 23]]),
    (1, 6, &[&[0, 17, 1, 21], &[0, 18, 4, 19], &[0, 22, 12, 25], &[0, 23, 14, 26], &[0, 24, 16, 27]]),
    (1, 7, &[&[0, 19, 1, 21], &[0, 22, 10, 27], &[0, 23, 12, 28], &[0, 24, 14, 29], &[0, 25, 16, 30], &[0, 26, 18, 31]]),
    (1, 8, &[&[0, 23, 1, 39], &[0, 24, 10, 31], &[0, 25, 12, 32], &[0, 26, 14, 33], &[0, 27, 16, 34], &[0, 28, 18, 35], &[0, 29, 20, 36], &[0, 30, 22, 37]]),
    (1, 9, &[&[0, 23, 1, 39], &[0, 24, 10, 31], &[0, 25, 12, 32], &[0, 26, 14, 33], &[0, 27, 16, 34], &[0, 28, 18, 35], &[0, 29, 20, 36], &[0, 30, 22, 37]]),
    (1, 10, &[&[0, 23, 1, 41], &[0, 42, 4, 43], &[0, 24, 10, 31], &[0, 25, 12, 32], &[0, 26, 14, 33], &[0, 27, 16, 34], &[0, 28, 18, 35], &[0, 29, 20, 36], &[0, 30, 22, 37], &[0, 3, 2, 6], &[0, 5, 7]]),
    (1, 11, &[&[0, 28, 13, 36], &[0, 29, 15, 37], &[0, 30, 17, 38], &[0, 44, 18, 45], &[0, 31, 19, 39], &[0, 32, 21, 40], &[0, 46, 22, 47], &[0, 33, 23, 41], &[0, 34, 25, 42], &[0, 35, 27, 43]]),
    (1, 12, &[&[0, 34, 26, 39], &[0, 33, 24, 38], &[0, 32, 22, 37], &[0, 31, 20, 36], &[0, 30, 18, 35], &[0, 45, 27, 51], &[0, 44, 25, 50], &[0, 43, 23, 49], &[0, 42, 21, 48], &[0, 41, 19, 47], &[0, 40, 17, 46]]),
    (1, 13, &[&[0, 38, 26, 43], &[0, 37, 24, 42], &[0, 36, 22, 41], &[0, 35, 20, 40], &[0, 34, 18, 39], &[0, 49, 27, 55], &[0, 48, 25, 54], &[0, 47, 23, 53], &[0, 46, 21, 52], &[0, 45, 19, 51], &[0, 44, 17, 50]]),
    (1, 14, &[&[0, 42, 26, 47], &[0, 41, 24, 46], &[0, 40, 22, 45], &[0, 39, 20, 44], &[0, 38, 18, 43], &[0, 53, 27, 59], &[0, 52, 25, 58], &[0, 51, 23, 57], &[0, 50, 21, 56], &[0, 49, 19, 55], &[0, 48, 17, 54]]),
    (1, 15, &[&[0, 55, 1, 59], &[0, 56, 4, 57], &[0, 60, 10, 61], &[0, 28, 13, 36], &[0, 62, 14, 63], &[0, 29, 15, 37], &[0, 30, 17, 38], &[0, 44, 18, 45], &[0, 31, 19, 39], &[0, 32, 21, 40], &[0, 46, 22, 47], &[0, 33, 23, 41], &[0, 34, 25, 42], &[0, 35, 27, 43]]),
    (1, 16, &[&[0, 44, 36, 51], &[0, 43, 34, 50], &[0, 42, 32, 49], &[0, 41, 30, 48], &[0, 40, 28, 47], &[0, 39, 26, 46], &[0, 38, 24, 45], &[0, 59, 37, 67], &[0, 58, 35, 66], &[0, 57, 33, 65], &[0, 56, 31, 64], &[0, 55, 29, 63], &[0, 54, 27, 62], &[0, 53, 25, 61], &[0, 52, 23, 60]]),
    (1, 17, &[&[0, 48, 36, 55], &[0, 47, 34, 54], &[0, 46, 32, 53], &[0, 45, 30, 52], &[0, 44, 28, 51], &[0, 43, 26, 50], &[0, 42, 24, 49], &[0, 63, 37, 71], &[0, 62, 35, 70], &[0, 61, 33, 69], &[0, 60, 31, 68], &[0, 59, 29, 67], &[0, 58, 27, 66], &[0, 57, 25, 65], &[0, 56, 23, 64]]),
    (1, 18, &[&[0, 52, 36, 59], &[0, 51, 34, 58], &[0, 50, 32, 57], &[0, 49, 30, 56], &[0, 48, 28, 55], &[0, 47, 26, 54], &[0, 46, 24, 53], &[0, 67, 37, 75], &[0, 66, 35, 74], &[0, 65, 33, 73], &[0, 64, 31, 72], &[0, 63, 29, 71], &[0, 62, 27, 70], &[0, 61, 25, 69], &[0, 60, 23, 68]]),
    (1, 19, &[&[0, 56, 36, 63], &[0, 55, 34, 62], &[0, 54, 32, 61], &[0, 53, 30, 60], &[0, 52, 28, 59], &[0, 51, 26, 58], &[0, 50, 24, 57], &[0, 71, 37, 79], &[0, 70, 35, 78], &[0, 69, 33, 77], &[0, 68, 31, 76], &[0, 67, 29, 75], &[0, 66, 27, 74], &[0, 65, 25, 73], &[0, 64, 23, 72]]),
    (1, 20, &[&[0, 61, 1, 80], &[0, 81, 4, 82], &[0, 73, 9, 83], &[0, 65, 10, 69], &[0, 66, 12, 70], &[0, 75, 13, 76], &[0, 67, 14, 71], &[0, 68, 16, 72], &[0, 40, 17, 46], &[0, 30, 18, 35], &[0, 41, 19, 47], &[0, 31, 20, 36], &[0, 42, 21, 48], &[0, 32, 22, 37], &[0, 43, 23, 49], &[0, 33, 24, 38], &[0, 44, 25, 50], &[0, 34, 26, 39], &[0, 45, 27, 51]]),
    (2, 1, &[&[0, 5, 2, 6], &[0, 7, 8], &[0, 9, 11]]),
    (2, 2, &[&[0, 10, 1, 12], &[0, 5, 2, 6], &[0, 7, 8], &[0, 15, 13]]),
    (2, 3, &[&[0, 12, 1, 16], &[0, 13, 4, 14], &[0, 5, 2, 6], &[0, 7, 8], &[0, 19, 17]]),
    (2, 4, &[&[0, 14, 1, 20], &[0, 15, 4, 16], &[0, 17, 8, 18], &[0, 5, 2, 6], &[0, 7, 8], &[0, 23, 21]]),
    (2, 5, &[&[0, 16, 1, 20], &[0, 17, 4, 18], &[0, 21, 11, 23], &[0, 22, 13, 24], &[0, 5, 2, 6], &[0, 7, 8], &[0, 27, 25]]),
    (2, 6, &[&[0, 18, 1, 22], &[0, 19, 4, 20], &[0, 23, 12, 26], &[0, 24, 14, 27], &[0, 25, 16, 28], &[0, 5, 2, 6], &[0, 7, 8], &[0, 31, 29]]),
    (2, 7, &[&[0, 20, 1, 22], &[0, 23, 10, 28], &[0, 24, 12, 29], &[0, 25, 14, 30], &[0, 26, 16, 31], &[0, 27, 18, 32], &[0, 5, 2, 6], &[0, 7, 8], &[0, 33, 35]]),
    (2, 8, &[&[0, 25, 16, 28], &[0, 24, 14, 27], &[0, 23, 12, 26], &[0, 32, 17, 36], &[0, 31, 15, 35], &[0, 30, 13, 34], &[0, 29, 11, 33], &[0, 5, 2, 6], &[0, 7, 8], &[0, 39, 37]]),
    (2, 9, &[&[0, 24, 1, 40], &[0, 25, 10, 32], &[0, 26, 12, 33], &[0, 27, 14, 34], &[0, 28, 16, 35], &[0, 29, 18, 36], &[0, 30, 20, 37], &[0, 31, 22, 38], &[0, 5, 2, 6], &[0, 7, 8], &[0, 43, 41]]),
    (2, 10, &[&[0, 24, 1, 42], &[0, 43, 4, 44], &[0, 25, 10, 32], &[0, 26, 12, 33], &[0, 27, 14, 34], &[0, 28, 16, 35], &[0, 29, 18, 36], &[0, 30, 20, 37], &[0, 31, 22, 38], &[0, 5, 2, 6], &[0, 7, 8], &[0, 47, 45]]),
    (2, 11, &[&[0, 29, 13, 37], &[0, 30, 15, 38], &[0, 31, 17, 39], &[0, 45, 18, 46], &[0, 32, 19, 40], &[0, 33, 21, 41], &[0, 47, 22, 48], &[0, 34, 23, 42], &[0, 35, 25, 43], &[0, 36, 27, 44], &[0, 5, 2, 6], &[0, 7, 8], &[0, 51, 49]]),
    (2, 12, &[&[0, 35, 26, 40], &[0, 34, 24, 39], &[0, 33, 22, 38], &[0, 32, 20, 37], &[0, 31, 18, 36], &[0, 46, 27, 52], &[0, 45, 25, 51], &[0, 44, 23, 50], &[0, 43, 21, 49], &[0, 42, 19, 48], &[0, 41, 17, 47], &[0, 5, 2, 6], &[0, 7, 8], &[0, 55, 53]]),
    (2, 13, &[&[0, 39, 26, 44], &[0, 38, 24, 43], &[0, 37, 22, 42], &[0, 36, 20, 41], &[0, 35, 18, 40], &[0, 50, 27, 56], &[0, 49, 25, 55], &[0, 48, 23, 54], &[0, 47, 21, 53], &[0, 46, 19, 52], &[0, 45, 17, 51], &[0, 10, 1, 12], &[0, 5, 2, 6], &[0, 7, 8], &[0, 59, 57]]),
    (2, 14, &[&[0, 43, 26, 48], &[0, 42, 24, 47], &[0, 41, 22, 46], &[0, 40, 20, 45], &[0, 39, 18, 44], &[0, 54, 27, 60], &[0, 53, 25, 59], &[0, 52, 23, 58], &[0, 51, 21, 57], &[0, 50, 19, 56], &[0, 49, 17, 55], &[0, 12, 1, 16], &[0, 13, 4, 14], &[0, 5, 2, 6], &[0, 7, 8], &[0, 63, 61]]),
    (2, 15, &[&[0, 56, 1, 60], &[0, 57, 4, 58], &[0, 61, 10, 62], &[0, 29, 13, 37], &[0, 63, 14, 64], &[0, 30, 15, 38], &[0, 31, 17, 39], &[0, 45, 18, 46], &[0, 32, 19, 40], &[0, 33, 21, 41], &[0, 47, 22, 48], &[0, 34, 23, 42], &[0, 35, 25, 43], &[0, 36, 27, 44], &[0, 5, 2, 6], &[0, 7, 8], &[0, 67, 65]]),
    (2, 16, &[&[0, 45, 36, 52], &[0, 44, 34, 51], &[0, 43, 32, 50], &[0, 42, 30, 49], &[0, 41, 28, 48], &[0, 40, 26, 47], &[0, 39, 24, 46], &[0, 60, 37, 68], &[0, 59, 35, 67], &[0, 58, 33, 66], &[0, 57, 31, 65], &[0, 56, 29, 64], &[0, 55, 27, 63], &[0, 54, 25, 62], &[0, 53, 23, 61], &[0, 5, 2, 6], &[0, 7, 8], &[0, 71, 69]]),
    (2, 17, &[&[0, 49, 36, 56], &[0, 48, 34, 55], &[0, 47, 32, 54], &[0, 46, 30, 53], &[0, 45, 28, 52], &[0, 44, 26, 51], &[0, 43, 24, 50], &[0, 64, 37, 72], &[0, 63, 35, 71], &[0, 62, 33, 70], &[0, 61, 31, 69], &[0, 60, 29, 68], &[0, 59, 27, 67], &[0, 58, 25, 66], &[0, 57, 23, 65], &[0, 10, 1, 12], &[0, 5, 2, 6], &[0, 7, 8], &[0, 75, 73]]),
    (2, 18, &[&[0, 53, 36, 60], &[0, 52, 34, 59], &[0, 51, 32, 58], &[0, 50, 30, 57], &[0, 49, 28, 56], &[0, 48, 26, 55], &[0, 47, 24, 54], &[0, 68, 37, 76], &[0, 67, 35, 75], &[0, 66, 33, 74], &[0, 65, 31, 73], &[0, 64, 29, 72], &[0, 63, 27, 71], &[0, 62, 25, 70], &[0, 61, 23, 69], &[0, 12, 1, 16], &[0, 13, 4, 14], &[0, 5, 2, 6], &[0, 7, 8], &[0, 79, 77]]),
    (2, 19, &[&[0, 57, 36, 64], &[0, 56, 34, 63], &[0, 55, 32, 62], &[0, 54, 30, 61], &[0, 53, 28, 60], &[0, 52, 26, 59], &[0, 51, 24, 58], &[0, 72, 37, 80], &[0, 71, 35, 79], &[0, 70, 33, 78], &[0, 69, 31, 77], &[0, 68, 29, 76], &[0, 67, 27, 75], &[0, 66, 25, 74], &[0, 65, 23, 73], &[0, 14, 1, 20], &[0, 15, 4, 16], &[0, 17, 8, 18], &[0, 5, 2, 6], &[0, 7, 8], &[0, 83, 81]]),
    (2, 20, &[&[0, 62, 1, 81], &[0, 82, 4, 83], &[0, 74, 9, 84], &[0, 66, 10, 70], &[0, 67, 12, 71], &[0, 76, 13, 77], &[0, 68, 14, 72], &[0, 69, 16, 73], &[0, 41, 17, 47], &[0, 31, 18, 36], &[0, 42, 19, 48], &[0, 32, 20, 37], &[0, 43, 21, 49], &[0, 33, 22, 38], &[0, 44, 23, 50], &[0, 34, 24, 39], &[0, 45, 25, 51], &[0, 35, 26, 40], &[0, 46, 27, 52], &[0, 5, 2, 6], &[0, 7, 8], &[0, 87, 85]]),
    (3, 1, &[&[0, 8, 2, 9], &[0, 3, 5], &[0, 11, 12], &[0, 10, 14]]),
    (3, 2, &[&[0, 11, 1, 13], &[0, 8, 2, 9], &[0, 3, 5], &[0, 14, 18], &[0, 15, 16]]),
    (3, 3, &[&[0, 13, 1, 17], &[0, 14, 4, 15], &[0, 8, 2, 9], &[0, 3, 5], &[0, 22, 18], &[0, 20, 19]]),
    (3, 4, &[&[0, 15, 1, 19], &[0, 16, 4, 17], &[0, 20, 10, 21], &[0, 8, 2, 9], &[0, 3, 5], &[0, 26, 22], &[0, 24, 23]]),
    (3, 5, &[&[0, 17, 1, 21], &[0, 18, 4, 19], &[0, 22, 11, 24], &[0, 23, 13, 25], &[0, 8, 2, 9], &[0, 3, 5], &[0, 30, 26], &[0, 28, 27]]),
    (3, 6, &[&[0, 19, 1, 23], &[0, 20, 4, 21], &[0, 24, 12, 27], &[0, 25, 14, 28], &[0, 26, 16, 29], &[0, 8, 2, 9], &[0, 3, 5], &[0, 34, 30], &[0, 32, 31]]),
    (3, 7, &[&[0, 21, 1, 23], &[0, 24, 10, 29], &[0, 25, 12, 30], &[0, 26, 14, 31], &[0, 27, 16, 32], &[0, 28, 18, 33], &[0, 8, 2, 9], &[0, 3, 5], &[0, 38, 34], &[0, 36, 35]]),
    (3, 8, &[&[0, 26, 16, 29], &[0, 25, 14, 28], &[0, 24, 12, 27], &[0, 33, 17, 37], &[0, 32, 15, 36], &[0, 31, 13, 35], &[0, 30, 11, 34], &[0, 8, 2, 9], &[0, 3, 5], &[0, 42, 38], &[0, 40, 39]]),
    (3, 9, &[&[0, 25, 1, 41], &[0, 26, 10, 33], &[0, 27, 12, 34], &[0, 28, 14, 35], &[0, 29, 16, 36], &[0, 30, 18, 37], &[0, 31, 20, 38], &[0, 32, 22, 39], &[0, 8, 2, 9], &[0, 3, 5], &[0, 46, 42], &[0, 44, 43]]),
    (3, 10, &[&[0, 25, 1, 43], &[0, 44, 4, 45], &[0, 26, 10, 33], &[0, 27, 12, 34], &[0, 28, 14, 35], &[0, 29, 16, 36], &[0, 30, 18, 37], &[0, 31, 20, 38], &[0, 32, 22, 39], &[0, 8, 2, 9], &[0, 3, 5], &[0, 50, 46], &[0, 48, 47]]),
    (3, 11, &[&[0, 30, 13, 38], &[0, 31, 15, 39], &[0, 32, 17, 40], &[0, 46, 18, 47], &[0, 33, 19, 41], &[0, 34, 21, 42], &[0, 48, 22, 49], &[0, 35, 23, 43], &[0, 36, 25, 44], &[0, 37, 27, 45], &[0, 8, 2, 9], &[0, 3, 5], &[0, 54, 50], &[0, 52, 51]]),
    (3, 12, &[&[0, 36, 26, 41], &[0, 35, 24, 40], &[0, 34, 22, 39], &[0, 33, 20, 38], &[0, 32, 18, 37], &[0, 47, 27, 53], &[0, 46, 25, 52], &[0, 45, 23, 51], &[0, 44, 21, 50], &[0, 43, 19, 49], &[0, 42, 17, 48], &[0, 8, 2, 9], &[0, 3, 5], &[0, 58, 54], &[0, 56, 55]]),
    (3, 13, &[&[0, 40, 26, 45], &[0, 39, 24, 44], &[0, 38, 22, 43], &[0, 37, 20, 42], &[0, 36, 18, 41], &[0, 51, 27, 57], &[0, 50, 25, 56], &[0, 49, 23, 55], &[0, 48, 21, 54], &[0, 47, 19, 53], &[0, 46, 17, 52], &[0, 11, 1, 13], &[0, 8, 2, 9], &[0, 3, 5], &[0, 59, 60], &[0, 58, 62]]),
    (3, 14, &[&[0, 55, 1, 59], &[0, 56, 4, 57], &[0, 60, 10, 61], &[0, 30, 13, 38], &[0, 31, 15, 39], &[0, 32, 17, 40], &[0, 46, 18, 47], &[0, 33, 19, 41], &[0, 34, 21, 42], &[0, 48, 22, 49], &[0, 35, 23, 43], &[0, 36, 25, 44], &[0, 37, 27, 45], &[0, 8, 2, 9], &[0, 3, 5], &[0, 66, 62], &[0, 64, 63]]),
    (3, 15, &[&[0, 57, 1, 61], &[0, 58, 4, 59], &[0, 62, 10, 63], &[0, 30, 13, 38], &[0, 64, 14, 65], &[0, 31, 15, 39], &[0, 32, 17, 40], &[0, 46, 18, 47], &[0, 33, 19, 41], &[0, 34, 21, 42], &[0, 48, 22, 49], &[0, 35, 23, 43], &[0, 36, 25, 44], &[0, 37, 27, 45], &[0, 8, 2, 9], &[0, 3, 5], &[0, 70, 66], &[0, 68, 67]]),
    (3, 16, &[&[0, 46, 36, 53], &[0, 45, 34, 52], &[0, 44, 32, 51], &[0, 43, 30, 50], &[0, 42, 28, 49], &[0, 41, 26, 48], &[0, 40, 24, 47], &[0, 61, 37, 69], &[0, 60, 35, 68], &[0, 59, 33, 67], &[0, 58, 31, 66], &[0, 57, 29, 65], &[0, 56, 27, 64], &[0, 55, 25, 63], &[0, 54, 23, 62], &[0, 8, 2, 9], &[0, 3, 5], &[0, 71, 72], &[0, 70, 74]]),
    (3, 17, &[&[0, 50, 36, 57], &[0, 49, 34, 56], &[0, 48, 32, 55], &[0, 47, 30, 54], &[0, 46, 28, 53], &[0, 45, 26, 52], &[0, 44, 24, 51], &[0, 65, 37, 73], &[0, 64, 35, 72], &[0, 63, 33, 71], &[0, 62, 31, 70], &[0, 61, 29, 69], &[0, 60, 27, 68], &[0, 59, 25, 67], &[0, 58, 23, 66], &[0, 11, 1, 13], &[0, 8, 2, 9], &[0, 3, 5], &[0, 78, 74], &[0, 76, 75]]),
    (3, 18, &[&[0, 54, 36, 61], &[0, 53, 34, 60], &[0, 52, 32, 59], &[0, 51, 30, 58], &[0, 50, 28, 57], &[0, 49, 26, 56], &[0, 48, 24, 55], &[0, 69, 37, 77], &[0, 68, 35, 76], &[0, 67, 33, 75], &[0, 66, 31, 74], &[0, 65, 29, 73], &[0, 64, 27, 72], &[0, 63, 25, 71], &[0, 62, 23, 70], &[0, 13, 1, 17], &[0, 14, 4, 15], &[0, 8, 2, 9], &[0, 3, 5], &[0, 78, 82], &[0, 79, 80]]),
    (3, 19, &[&[0, 58, 36, 65], &[0, 57, 34, 64], &[0, 56, 32, 63], &[0, 55, 30, 62], &[0, 54, 28, 61], &[0, 53, 26, 60], &[0, 52, 24, 59], &[0, 73, 37, 81], &[0, 72, 35, 80], &[0, 71, 33, 79], &[0, 70, 31, 78], &[0, 69, 29, 77], &[0, 68, 27, 76], &[0, 67, 25, 75], &[0, 66, 23, 74], &[0, 15, 1, 19], &[0, 16, 4, 17], &[0, 20, 10, 21], &[0, 8, 2, 9], &[0, 3, 5], &[0, 82, 86], &[0, 84, 83]]),
];
