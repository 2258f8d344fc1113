//! Embedded exact data for the specialized Vamos polynomial.

pub const H4: &str = "x1^2*x2^2 + 4*(x1 + x2 + x3 + x4)*(x1*x2*x3 + x1*x2*x4 + x1*x3*x4 + x2*x3*x4)";

pub const E: [i64; 4] = [1, 1, 0, 0];

pub const F: [&str; 9] = [
    "x1^2*x2",
    "x1*x2^2",
    "x1*x2*x3",
    "x1*x2*x4",
    "x3^2*x4 + x3*x4^2 + x1*x3*x4 + x2*x3*x4",
    "x2^2*x4 + x2*x4^2 + x2*x3*x4",
    "x1^2*x4 + x1*x4^2 - x2*x3*x4 + x1*x3*x4 + x2*x3*x4",
    "x2^2*x3 + x2*x3^2 + x2*x3*x4",
    "x1*x3*x4 + x2*x3*x4 + x1^2*x3 + x1*x3^2 - x2*x3*x4",
];

pub const A1: [[i64; 9]; 9] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 2, 4, 4, 2, 3, 0, 3, 0],
    [0, 4, 15, 10, 4, 9, 0, 12, 0],
    [0, 4, 10, 15, 4, 12, 0, 7, 0],
    [0, 2, 4, 4, 8, 4, 0, 4, 0],
    [0, 3, 9, 12, 4, 12, 0, 8, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 3, 12, 7, 4, 8, 0, 12, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub const A2: [[i64; 9]; 9] = [
    [2, 0, 4, 4, 0, 0, 3, 0, 3],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [4, 0, 15, 12, 4, 0, 9, 0, 12],
    [4, 0, 12, 15, 4, 0, 12, 0, 9],
    [0, 0, 4, 4, 8, 0, 4, 0, 4],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [3, 0, 9, 12, 4, 0, 12, 0, 8],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [3, 0, 12, 9, 4, 0, 8, 0, 12],
];

pub const A3: [[i64; 9]; 9] = [
    [5, 4, 5, 13, 0, 3, 4, 0, 0],
    [4, 5, 5, 13, 0, 4, 3, 0, 0],
    [5, 5, 8, 16, 0, 4, 4, 0, 0],
    [13, 13, 16, 66, 0, 24, 24, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [3, 4, 4, 24, 0, 12, 8, 0, 0],
    [4, 3, 4, 24, 0, 8, 12, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub const A4: [[i64; 9]; 9] = [
    [5, 4, 13, 5, 0, 0, 0, 5, 4],
    [4, 5, 11, 5, 0, 0, 0, 4, 3],
    [13, 11, 62, 14, 0, 0, 0, 24, 24],
    [5, 5, 14, 8, 0, 0, 0, 4, 4],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [5, 4, 24, 4, 0, 0, 0, 12, 8],
    [4, 3, 24, 4, 0, 0, 0, 8, 12],
];

/// Cofactor in `det A(x) = DET_FACTOR * q * h4`.
pub const Q: &str = "13684*x1^4*x2 + 44736*x1^3*x2^2 + 43092*x1^2*x2^3 + 12672*x1*x2^4 \
    + 20526*x1^4*x3 + 137404*x1^3*x2*x3 + 234086*x1^2*x2^2*x3 \
    + 130140*x1*x2^3*x3 + 19008*x2^4*x3 + 81141*x1^3*x3^2 \
    + 298281*x1^2*x2*x3^2 + 294753*x1*x2^2*x3^2 + 78381*x2^3*x3^2 \
    + 95004*x1^2*x3^3 + 202680*x1*x2*x3^3 + 97308*x2^2*x3^3 \
    + 34560*x1*x3^4 + 34560*x2*x3^4 + 20526*x1^4*x4 + 143132*x1^3*x2*x4 \
    + 245302*x1^2*x2^2*x4 + 136668*x1*x2^3*x4 + 19008*x2^4*x4 \
    + 177646*x1^3*x3*x4 + 653482*x1^2*x2*x3*x4 + 644798*x1*x2^2*x3*x4 \
    + 170010*x2^3*x3*x4 + 335962*x1^2*x3^2*x4 + 716864*x1*x2*x3^2*x4 \
    + 339546*x2^2*x3^2*x4 + 197328*x1*x3^3*x4 + 198864*x2*x3^3*x4 \
    + 23040*x3^4*x4 + 89733*x1^3*x4^2 + 328001*x1^2*x2*x4^2 \
    + 326473*x1*x2^2*x4^2 + 88173*x2^3*x4^2 + 347858*x1^2*x3*x4^2 \
    + 740512*x1*x2*x3*x4^2 + 353442*x2^2*x3*x4^2 + 335416*x1*x3^2*x4^2 \
    + 339032*x2*x3^2*x4^2 + 74736*x3^3*x4^2 + 105780*x1^2*x4^3 \
    + 222664*x1*x2*x4^3 + 109284*x2^2*x4^3 + 206192*x1*x3*x4^3 \
    + 208528*x2*x3*x4^3 + 77088*x3^2*x4^3 + 37320*x1*x4^4 \
    + 37320*x2*x4^4 + 24880*x3*x4^4";

pub const DET_FACTOR: i64 = 8;

/// `A(x) f = h4 g`: recovered once by exact division and frozen here.
pub const G: [i64; 9] = [2, 2, 8, 8, 2, 3, 3, 3, 3];

/// Lower bound on the eigenvalues of `A(e)`, as `(num, den)`.
pub const EIGEN_THRESHOLD: (i64, i64) = (1, 2);

/// Generators of the polyhedral cone sandwiched between the two hyperbolicity cones.
pub const GENERATORS: [[&str; 4]; 17] = [
    ["-1", "1", "1", "1"],
    ["0", "0", "0", "1"],
    ["0", "0", "1", "0"],
    ["0", "1", "0", "0"],
    ["97158", "349054", "-97158", "48579"],
    ["1254295", "2286243", "-1254295", "902667"],
    ["34467702748869", "51220867444589", "-18850428895115", "5520895984119"],
    ["1", "-1", "1", "1"],
    ["1", "1", "1", "-1"],
    ["76", "76", "-76", "73"],
    ["32149601920763", "39439133903061", "-22184781006392", "12291366169158"],
    ["1478583187", "1478583187", "-505711185", "9637592"],
    ["473101680550746783", "382880146087171841", "-281753287537197912", "164863532879193083"],
    ["22235654601", "14731327813", "-14731327813", "11162908487"],
    [
        "18796049082090475406192769",
        "12642631651257529231647001",
        "-7218443413613218522402055",
        "2253174647395531583889791",
    ],
    ["85691768955272442", "22716939987422258", "-22716939987422258", "11358469993711129"],
    ["1", "0", "0", "0"],
];
