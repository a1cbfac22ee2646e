//! Displays transcribed as text. Constants: `b1 b2 b3 d1 d2 g`, with `b` the
//! common value of `b1 = b3`. Equations are stored as `lhs - (rhs)`.

/// Structural equations in `t1..t15`.
pub const STRUCTURAL: [&str; 10] = [
    "d1*t14*t1 - (b1*(2/b2)*t13*t2 - t11*t4)",
    "d1*t7*t8 - (-t13*t2 + b2*(2/b1)*t11*t4)",
    "d2*t3*t2 - (-t9*t8 + b2*(2/b3)*t5*t4)",
    "d2*t14*t15 - (b3*(2/b2)*t9*t8 - t5*t4)",
    "g*t9*t1 - (b1*d2*t10*t2 - (2/b3)*t12*t4)",
    "g*t7*t15 - (-b3*t10*t2 + (3/d2)*(2/b1)*t12*t4)",
    "g*t3*t1 - (-b3*t10*t8 + (3/d1)*(2/b1)*t6*t4)",
    "g*t13*t15 - (b1*d1*t10*t8 - (2/b3)*t6*t4)",
    "b2*g*t5*t1 - (d2*(3/d1)*t6*t2 - t12*t8)",
    "b2*g*t11*t15 - (-t6*t2 + d1*(3/d2)*t12*t8)",
];

/// `M`, columns `t3 t5 t6 t7 t9 t10 t11 t12 t13 t14`.
pub const M: [[&str; 10]; 10] = [
    [
        "0",
        "0",
        "0",
        "0",
        "0",
        "0",
        "-t4",
        "0",
        "b1*(2/b2)*t2",
        "-d1*t1",
    ],
    [
        "0",
        "0",
        "0",
        "d1*t8",
        "0",
        "0",
        "-b2*(2/b1)*t4",
        "0",
        "t2",
        "0",
    ],
    [
        "-d2*t2",
        "b2*(2/b3)*t4",
        "0",
        "0",
        "-t8",
        "0",
        "0",
        "0",
        "0",
        "0",
    ],
    [
        "0",
        "t4",
        "0",
        "0",
        "-b3*(2/b2)*t8",
        "0",
        "0",
        "0",
        "0",
        "d2*t15",
    ],
    [
        "0",
        "0",
        "0",
        "0",
        "g*t1",
        "-b1*d2*t2",
        "0",
        "(2/b3)*t4",
        "0",
        "0",
    ],
    [
        "0",
        "0",
        "0",
        "g*t15",
        "0",
        "b3*t2",
        "0",
        "-(3/d2)*(2/b1)*t4",
        "0",
        "0",
    ],
    [
        "g*t1",
        "0",
        "-(3/d1)*(2/b1)*t4",
        "0",
        "0",
        "b3*t8",
        "0",
        "0",
        "0",
        "0",
    ],
    [
        "0",
        "0",
        "(2/b3)*t4",
        "0",
        "0",
        "-b1*d1*t8",
        "0",
        "0",
        "g*t15",
        "0",
    ],
    [
        "0",
        "-b2*g*t1",
        "d2*(3/d1)*t2",
        "0",
        "0",
        "0",
        "0",
        "-t8",
        "0",
        "0",
    ],
    [
        "0",
        "0",
        "t2",
        "0",
        "0",
        "0",
        "b2*g*t15",
        "-d1*(3/d2)*t8",
        "0",
        "0",
    ],
];

pub const DET_M12: &str = "(2/b1)*(2/b3)*(b1 - b3)^2*b2*g^3*d2^2*t1*t15^3*t2^2*t4*t8^2";

/// `𝓜`, columns `t1 t2 t4 t8 t15`; defined when `b1 = b3`.
pub const CAL_M: [[&str; 5]; 10] = [
    ["-d1*t14", "b*(2/b2)*t13", "-t11", "0", "0"],
    ["0", "t13", "-(2/b)*b2*t11", "d1*t7", "0"],
    ["0", "d2*t3", "-(2/b)*b2*t5", "t9", "0"],
    ["0", "0", "t5", "-(2/b2)*b*t9", "d2*t14"],
    ["g*t9", "-b*d2*t10", "(2/b)*t12", "0", "0"],
    ["0", "b*t10", "-(2/b)*(3/d2)*t12", "0", "g*t7"],
    ["g*t3", "0", "-(2/b)*(3/d1)*t6", "b*t10", "0"],
    ["0", "0", "(2/b)*t6", "-b*d1*t10", "-g*t13"],
    ["b2*g*t5", "-d2*(3/d1)*t6", "0", "t12", "0"],
    ["0", "t6", "0", "-d1*(3/d2)*t12", "b2*g*t11"],
];

pub const F_PLUS: &str = "b1*b2*t10*t11 - t6*t7 + (3/d2)*t12*t13";
pub const F_MINUS: &str = "b1*b2*t10*t11 - t6*t7 - (3/d2)*t12*t13";

/// Claimed 5×5 minors of `𝓜`, keyed by their row sets.
pub const CATALOG: [(&str, [usize; 5], &str); 6] = [
    ("D23468", [2, 3, 4, 6, 8], "-(2/b1)*g*d2^2*(b1*b2*t5*t10 - t3*t12 - (3/d1)*t6*t9)^2*t14"),
    (
        "D45679",
        [4, 5, 6, 7, 9],
        "-4*(b1*b2*t10*t11 - t6*t7 + (3/d2)*t12*t13)*(d1*t3*t12 - t6*t9)*g^2*t10",
    ),
    (
        "D01589",
        [0, 1, 5, 8, 9],
        "-(b1*b2*t10*t11 - t6*t7 - (3/d2)*t12*t13)*(g*t5*t7 - (2/b1)*t12*t14)*b2*g*d1*t11",
    ),
    (
        "D14589",
        [1, 4, 5, 8, 9],
        "-(2/b1)*(b1*b2*t10*t11 - t6*t7 - (3/d2)*t12*t13)*(d1*t5*t7 - t9*t11)*b2*g^2*t12",
    ),
    (
        "D03579",
        [0, 3, 5, 7, 9],
        "-(b1*b2*t10*t11 - t6*t7 + (3/d2)*t12*t13)*(b1*d1*t5*t10 - (4/b2)*t6*t9)*d1*g*t14",
    ),
    (
        "D01579",
        [0, 1, 5, 7, 9],
        "-(2/b1)*(b1*b2*t10*t11 - t6*t7 + (3/d2)*t12*t13)*(b1*b2*t10*t11 - t6*t7 - (3/d2)*t12*t13)*g*d1^2*t14",
    ),
];

/// Normalisation of the first type.
pub const TYPE1_SUBS: [(&str, &str); 4] = [
    ("t3", "1"),
    ("t12", "1"),
    ("t9", "d1/t6"),
    ("t10", "(2/b1)*(2/b2)/t5"),
];

pub const TYPE1_MINORS: [(&str, [usize; 5], &str); 2] = [
    (
        "D02457",
        [0, 2, 4, 5, 7],
        "(2/b1)*(2/b2)*(g*t11 - g*(3/d2)*t5*t13 + (4/b1)*t6*t14)*(d2*t6*t7 + t13)*g^2*d1^2/(t5*t6^2)",
    ),
    ("D14679", [1, 4, 6, 7, 9], "(8/b1)*(t5*t6*t7 - 4*t11 + (3/d2)*t5*t13)*(d2*t11 + t5*t13)*g^2/t5^2"),
];

/// Factors of the two minors above that vanish; the cofactors are positive.
pub const TYPE1_VANISHING: [(&str, &str); 2] = [
    ("t14", "g*t11 - g*(3/d2)*t5*t13 + (4/b1)*t6*t14"),
    ("t7", "t5*t6*t7 - 4*t11 + (3/d2)*t5*t13"),
];

pub const TYPE1_SOLVED: [(&str, &str); 2] = [
    ("t7", "(4*d2*t11 - 3*t5*t13)/(d2*t5*t6)"),
    ("t14", "(3*b1*g*t5*t13 - b1*g*d2*t11)/(4*d2*t6)"),
];

pub const TYPE1_M0156_ROWS: [usize; 4] = [0, 1, 5, 6];

pub const TYPE1_M0156: [[&str; 5]; 4] = [
    ["b1*g*(t11 - (3/d2)*t5*t13)/4", "2*b1*t13", "-t11", "0", "0"],
    [
        "0",
        "-t13",
        "(2/b1)*b2*t11",
        "(-4*t11 + (3/d2)*t5*t13)*d1/(t5*t6)",
        "0",
    ],
    [
        "0",
        "4/(b2*t5)",
        "-(2/b1)*(3/d2)",
        "0",
        "g*(4*t11 - (3/d2)*t5*t13)/(t5*t6)",
    ],
    ["g", "0", "-(3/d1)*(2/b1)*t6", "4/(b2*t5)", "0"],
];

pub const TYPE1_M0156_DEL3: &str =
    "36*(4*d2*t11 - 3*t13*t5)*(d2*t11 - t5*t13)*g*t13/(b2*d2^2*t5^2*t6)";

pub const TYPE1_M3467_ROWS: [usize; 4] = [3, 4, 6, 7];

pub const TYPE1_M3467: [[&str; 5]; 4] = [
    [
        "0",
        "0",
        "t5",
        "-(2/b2)*b1*d1/t6",
        "-(d2*t11 - 3*t5*t13)*b1*g/(4*t6)",
    ],
    ["g*d1/t6", "-4*d2/(b2*t5)", "2/b1", "0", "0"],
    ["g", "0", "-(3/d1)*(2/b1)*t6", "4/(b2*t5)", "0"],
    ["0", "0", "(2/b1)*t6", "-4*d1/(b2*t5)", "-g*t13"],
];

pub const TYPE1_M3467_DEL3: &str = "-4*(d2*t11 - 5*t5*t13)*b1*g^2*d1*d2/(b2^2*t5^2*t6)";

/// Linear forms in `(t11, t5*t13)` available from each 4×4 minor.
pub const TYPE1_FORMS_A: [&str; 2] = ["4*t11 - (3/d2)*t5*t13", "d2*t11 - t5*t13"];
pub const TYPE1_FORMS_B: [&str; 1] = ["d2*t11 - 5*t5*t13"];

/// Normalisation of the second type.
pub const TYPE2_SUBS: [(&str, &str); 4] = [
    ("t5", "1"),
    ("t7", "1"),
    ("t11", "d1/t9"),
    ("t14", "g/((2/b1)*t12)"),
];

pub const TYPE2_MINORS: [(&str, [usize; 5], &str); 3] = [
    ("D24689", [2, 4, 6, 8, 9], "2*(b1*b2*t10 - t12*t3 - (3/d1)*t6*t9)^2*b2*g^2*d2/(b1*t9)"),
    (
        "D26789",
        [2, 6, 7, 8, 9],
        "2*(b1*b2*t10 - t12*t3 - (3/d1)*t6*t9)*(d1*d2*t3 + t9*t13)*b2*g^2*t6/(b1*t9)",
    ),
    (
        "D04567",
        [0, 4, 5, 6, 7],
        "(b1*b2*d1*d2*t10 - 4*t12*t13*t9)*(d1*d2*t12*t3 + 3*t12*t13*t9 + 2*d2*t6*t9)*b1*g^2*t10/(b2*d2*t12*t9)",
    ),
];

pub const TYPE2_T10: &str = "(2/b1)*(2/b2)*t9*t12*t13/(d1*d2)";
pub const TYPE2_T6: &str = "(b1*b2*t10 - t12*t3)/((3/d1)*t9)";

pub const TYPE2_FINAL: [(&str, [usize; 5], &str); 2] = [
    (
        "D34689",
        [3, 4, 6, 8, 9],
        "-8*(d1*d2*t3 - 4*t9*t13)*(d1*d2*t3 - 7*t9*t13)*g^2*t12^2/(3*d1*d2*t9)",
    ),
    (
        "D25789",
        [2, 5, 7, 8, 9],
        "4*(5*d1*d2*t3 - 8*t9*t13)*(d1*d2*t3 - 25*t9*t13)*b2*g^2*t12^2/(9*b1*d2^2*t9)",
    ),
];

/// Linear forms in `(t3, t9*t13)` available from each final minor.
pub const TYPE2_FORMS_A: [&str; 2] = ["d1*d2*t3 - 4*t9*t13", "d1*d2*t3 - 7*t9*t13"];
pub const TYPE2_FORMS_B: [&str; 2] = ["5*d1*d2*t3 - 8*t9*t13", "d1*d2*t3 - 25*t9*t13"];

/// Skew 4×4 systems of the five quadruples, `s0..s31` for the first two and
/// `r0..r15` (pairs of `s` deleted) for the rest.
pub const PF_B5: [[&str; 4]; 4] = [
    [
        "0",
        "b1*s2*s7*s18*s23",
        "-b2*s1*s11*s17*s27",
        "b1*s2*s13*s18*s29 - b2*s4*s11*s20*s27",
    ],
    [
        "-b1*s2*s7*s18*s23",
        "0",
        "b1*s7*s8*s23*s24 + b2*s1*s14*s17*s30",
        "-b2*s4*s14*s20*s30",
    ],
    [
        "b2*s1*s11*s17*s27",
        "-b1*s7*s8*s23*s24 - b2*s1*s14*s17*s30",
        "0",
        "b1*s8*s13*s24*s29",
    ],
    [
        "-b1*s2*s13*s18*s29 + b2*s4*s11*s20*s27",
        "b2*s4*s14*s20*s30",
        "-b1*s8*s13*s24*s29",
        "0",
    ],
];

pub const PF_B1: [[&str; 4]; 4] = [
    [
        "0",
        "b2*s4*s5*s14*s15",
        "-b3*s2*s3*s22*s23",
        "b2*s4*s5*s26*s27 - b3*s8*s9*s22*s23",
    ],
    [
        "-b2*s4*s5*s14*s15",
        "0",
        "b2*s14*s15*s16*s17 + b3*s2*s3*s28*s29",
        "-b3*s8*s9*s28*s29",
    ],
    [
        "b3*s2*s3*s22*s23",
        "-b2*s14*s15*s16*s17 - b3*s2*s3*s28*s29",
        "0",
        "b2*s16*s17*s26*s27",
    ],
    [
        "-b2*s4*s5*s26*s27 + b3*s8*s9*s22*s23",
        "b3*s8*s9*s28*s29",
        "-b2*s16*s17*s26*s27",
        "0",
    ],
];

pub const PF_B4: [[&str; 4]; 4] = [
    [
        "0",
        "b1*r2*r7",
        "-(3/d2)*r1*r11",
        "b1*b3*r2*r13 - (3/d2)*r4*r11",
    ],
    [
        "-b1*r2*r7",
        "0",
        "b1*(2/b3)*r7*r8 + (3/d2)*r1*r14",
        "-(3/d2)*r4*r14",
    ],
    [
        "(3/d2)*r1*r11",
        "-(3/d2)*r1*r14 - b1*(2/b3)*r7*r8",
        "0",
        "b1*r8*r13",
    ],
    [
        "-b1*b3*r2*r13 + (3/d2)*r4*r11",
        "(3/d2)*r4*r14",
        "-b1*r8*r13",
        "0",
    ],
];

pub const PF_B2: [[&str; 4]; 4] = [
    [
        "0",
        "(3/d1)*r2*r7",
        "-b3*r1*r11",
        "(3/d1)*r2*r13 - b1*b3*r4*r11",
    ],
    [
        "-(3/d1)*r2*r7",
        "0",
        "(3/d1)*r7*r8 + (2/b1)*b3*r1*r14",
        "-b3*r4*r14",
    ],
    [
        "b3*r1*r11",
        "-(3/d1)*r7*r8 - (2/b1)*b3*r1*r14",
        "0",
        "(3/d1)*r8*r13",
    ],
    [
        "b3*r4*r11 - (3/d1)*r2*r13",
        "b3*r4*r14",
        "-(3/d1)*r8*r13",
        "0",
    ],
];

pub const PF_B3: [[&str; 4]; 4] = [
    [
        "0",
        "d2*r2*r7",
        "-d1*r1*r11",
        "(2/b2)*(d2*r2*r13 - d1*r4*r11)/2",
    ],
    [
        "-d2*r2*r7",
        "0",
        "b2*(d2*r7*r8 + d1*r1*r14)/2",
        "-d1*r4*r14",
    ],
    [
        "d1*r1*r11",
        "b2*(-d1*r1*r14 - d2*r7*r8)/2",
        "0",
        "d2*r8*r13",
    ],
    [
        "(2/b2)*(-d2*r2*r13 + d1*r4*r11)/2",
        "d1*r4*r14",
        "-d2*r8*r13",
        "0",
    ],
];

/// Pfaffian equations in `s0..s31`.
pub const PF_EQ_B5: &str = "s1*s14*s17*s30*(s2*s13*s18*s29 - b2*(2/b1)*s4*s11*s20*s27) \
    - s7*s8*s23*s24*(s4*s11*s20*s27 - b1*(2/b2)*s2*s13*s18*s29)";
pub const PF_EQ_B1: &str = "s2*s3*s28*s29*(s4*s5*s26*s27 - b3*(2/b2)*s8*s9*s22*s23) \
    - s14*s15*s16*s17*(s8*s9*s22*s23 - b2*(2/b3)*s4*s5*s26*s27)";
pub const PF_EQ_B4: &str = "s1*s9*s22*s30*((3/d2)*(2/b1)*s4*s12*s19*s27 - b3*s2*s10*s21*s29) \
    - s7*s15*s16*s24*(b1*d2*s2*s10*s21*s29 - (2/b3)*s4*s12*s19*s27)";
pub const PF_EQ_B2: &str = "s1*s3*s28*s30*((2/b3)*s4*s6*s25*s27 - b1*d1*s8*s10*s21*s23) \
    - s13*s15*s16*s18*(b3*s8*s10*s21*s23 - (2/b1)*(3/d1)*s4*s6*s25*s27)";
pub const PF_EQ_B3: &str = "s1*s5*s26*s30*(s2*s6*s25*s29 - d1*(3/d2)*s8*s12*s19*s23) \
    - s11*s15*s16*s20*(s8*s12*s19*s23 - d2*(3/d1)*s2*s6*s25*s29)";

/// Relations and closed forms of the calibrated quadruples in `r0..r15`.
pub struct Calibration {
    pub label: &'static str,
    pub relations: [&'static str; 8],
    pub formulas: [(&'static str, &'static str); 8],
    pub ratio: &'static str,
}

pub const CAL_B4: Calibration = Calibration {
    label: "B4",
    relations: [
        "b1*r0*r8 - (r3*r11 - r6*r14)",
        "b1*r2*r10 - (r1*r9 + r4*r12)",
        "b1*r5*r13 - (r3*r11 + r6*r14)",
        "b1*r7*r15 - (r4*r12 - r1*r9)",
        "(3/d2)*r0*r1 - ((2/b3)*r6*r7 - r12*r13)",
        "(3/d2)*r4*r5 - (b3*r2*r3 + r8*r9)",
        "(3/d2)*r10*r11 - (r6*r7 + b3*r12*r13)",
        "(3/d2)*r14*r15 - ((2/b3)*r8*r9 - r2*r3)",
    ],
    formulas: [
        ("r13", "((2/b3)*r4*r11 + g*r1*r14)/(b1*d2*r2)"),
        ("r8", "((4/g)*r4*r11 - b3*r1*r14)/(b1*d2*r7)"),
        ("r0", "(2*r9*r11 - b3*g*r12*r14)/(b1*b3*r2)"),
        ("r5", "((4/g)*r9*r11 - b3*r12*r14)/(b1*r7)"),
        ("r10", "(r4*r12 + r1*r9)/(b1*r2)"),
        ("r15", "(r4*r12 - r1*r9)/(b1*r7)"),
        (
            "r3",
            "((r1*r14 + (4/g)*(2/b3)*r4*r11)*r9 - 3*r4*r14*r12)/(b1*d2*r2*r7)",
        ),
        (
            "r6",
            "(3*r1*r11*r9 + (r4*r11 - b3*g*r1*r14)*r12)/(b1*d2*r2*r7)",
        ),
    ],
    ratio: "g",
};

pub const CAL_B2: Calibration = Calibration {
    label: "B2",
    relations: [
        "(3/d1)*r0*r8 - (-(2/b1)*r6*r14 + r3*r11)",
        "(3/d1)*r2*r10 - (r1*r9 + b1*r4*r12)",
        "(3/d1)*r5*r13 - (b1*r3*r11 + r6*r14)",
        "(3/d1)*r7*r15 - (-(2/b1)*r1*r9 + r4*r12)",
        "b3*r0*r1 - (r6*r7 - r12*r13)",
        "b3*r4*r5 - (r2*r3 + r8*r9)",
        "b3*r10*r11 - (r6*r7 + r12*r13)",
        "b3*r14*r15 - (r8*r9 - r2*r3)",
    ],
    formulas: [
        ("r13", "(b1*r4*r11 + g*r1*r14)/((2/b3)*(3/d1)*r2)"),
        ("r8", "((4/g)*r4*r11 - (2/b1)*r1*r14)/((2/b3)*(3/d1)*r7)"),
        ("r0", "(r9*r11 - g*r12*r14)/((3/d1)*r2)"),
        ("r5", "((4/g)*r9*r11 - r12*r14)/((3/d1)*r7)"),
        ("r10", "(b1*r4*r12 + r1*r9)/r2"),
        ("r15", "(r4*r12 - (2/b1)*r1*r9)/r7"),
        (
            "r3",
            "(((2/b1)*r1*r14 + (4/g)*r4*r11)*r9 - 2*r4*r14*r12)/((2/b3)*(3/d1)*r2*r7)",
        ),
        (
            "r6",
            "(2*r1*r11*r9 + (b1*r4*r11 - g*r1*r14)*r12)/((2/b3)*(3/d1)*r2*r7)",
        ),
    ],
    ratio: "g/b1",
};

pub const CAL_B3: Calibration = Calibration {
    label: "B3",
    relations: [
        "(3/d1)*r0*r8 - ((2/b2)*r3*r11 - r6*r14)",
        "(3/d1)*r2*r10 - (b2*r1*r9 + r4*r12)",
        "(3/d1)*r5*r13 - (r3*r11 + b2*r6*r14)",
        "(3/d1)*r7*r15 - ((2/b2)*r4*r12 - r1*r9)",
        "(3/d2)*r0*r1 - (-(2/b2)*r12*r13 + r6*r7)",
        "(3/d2)*r4*r5 - (r2*r3 + b2*r8*r9)",
        "(3/d2)*r10*r11 - (b2*r6*r7 + r12*r13)",
        "(3/d2)*r14*r15 - (-(2/b2)*r2*r3 + r8*r9)",
    ],
    formulas: [
        ("r13", "(r4*r11 + b2*g*r1*r14)/(d2*(3/d1)*r2)"),
        ("r8", "((2/b2)*(4/g)*r4*r11 - r1*r14)/(d2*r7)"),
        ("r0", "(r9*r11 - g*r12*r14)/((3/d1)*r2)"),
        ("r5", "((4/g)*r9*r11 - r12*r14)/((3/d1)*r7)"),
        ("r10", "(r4*r12 + b2*r1*r9)/((3/d1)*r2)"),
        ("r15", "((2/b2)*r4*r12 - r1*r9)/((3/d1)*r7)"),
        (
            "r3",
            "((b2*r1*r14 + (4/g)*r4*r11)*r9 - 3*r4*r14*r12)/(d2*(3/d1)*r2*r7)",
        ),
        (
            "r6",
            "(3*r1*r11*r9 + ((2/b2)*r4*r11 - g*r1*r14)*r12)/(d2*(3/d1)*r2*r7)",
        ),
    ],
    ratio: "g",
};

/// `(v - w)` at positions `(0, 3)` over the `u`-difference at `(0, 1)`.
pub const CAL_RATIO: &str = "(r0*r2*r4*r6 - r9*r11*r13*r15)/(r1*r5*r9*r13 - r2*r6*r10*r14)";
