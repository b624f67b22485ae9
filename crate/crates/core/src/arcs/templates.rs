//! Base cycles for `k`-ARCS(2k+1) and `k`-ARCS(6k+1), written the way they
//! are tabulated: concatenations of fixed pairs and runs indexed by `i`.
//!
//! Coordinates are plain integers here and are reduced modulo `u` only when
//! the cycle is materialized.

/// One template entry: `None` is infinity.
pub(crate) type Pt = Option<(i64, u32)>;

pub(crate) const INF: Pt = None;

pub(crate) fn p(x: i64, j: u32) -> Pt {
    Some((x, j))
}

/// Number of terms of `start, start+step, ...` up to and including `end`.
/// A range whose end lies one step before its start is empty.
pub(crate) fn span(start: i64, end: i64, step: i64) -> i64 {
    let diff = end - start;
    assert!(diff % step == 0, "run {start}..{end} is not reachable by {step}");
    let c = diff / step + 1;
    assert!(c >= 0, "run {start}..{end} step {step} has negative length");
    c
}

/// Concatenates `block(i)` for `i = 0..count`.
pub(crate) fn run(count: i64, block: impl Fn(i64) -> Vec<Pt>) -> Vec<Pt> {
    (0..count).flat_map(block).collect()
}

fn cat(parts: Vec<Vec<Pt>>) -> Vec<Pt> {
    parts.concat()
}

/// Two base cycles over `Z_k x Z_2` plus infinity, missing `(0,1)`.
/// Returns `(d, subcase, cycles)`.
pub(crate) fn two_k_plus_one(k: i64) -> (i64, &'static str, Vec<Vec<Pt>>) {
    if k % 4 == 1 {
        let n = (k - 1) / 4;
        let c1 = cat(vec![
            run(n, |i| vec![p(n - i, 0), p(-(n - i), 1)]),
            vec![p(0, 0)],
            run(n, |i| vec![p(1 + i, 1), p(-(1 + i), 0)]),
        ]);
        let c2 = cat(vec![
            vec![INF],
            run(n, |i| vec![p(-(2 * n - i), 0), p(2 * n - i, 0)]),
            run(n, |i| vec![p(n + 1 + i, 1), p(-(n + 1 + i), 1)]),
        ]);
        (2 * n, "k=1 mod 4", vec![c1, c2])
    } else {
        let n = (k - 3) / 4;
        let c1 = cat(vec![
            run(n, |i| vec![p(-(2 + 2 * i), 0), p(2 + 2 * i, 1)]),
            run(n, |i| vec![p(2 * n - 2 * i, 0), p(-(2 * n - 2 * i), 1)]),
            vec![p(-1, 0), p(1, 1), p(0, 0)],
        ]);
        let c2 = cat(vec![
            vec![INF],
            run(n, |i| vec![p(2 * n + 1 - 2 * i, 0), p(-(2 * n + 1 - 2 * i), 0)]),
            vec![p(1, 0), p(-1, 1)],
            run(n, |i| vec![p(3 + 2 * i, 1), p(-(3 + 2 * i), 1)]),
        ]);
        (2, "k=3 mod 4", vec![c1, c2])
    }
}

/// Six base cycles over `Z_{3k} x Z_2` plus infinity, missing `(0,1)`.
/// Returns `(subcase, cycles)`.
pub(crate) fn six_k_plus_one(k: i64) -> (String, Vec<Vec<Pt>>) {
    if k % 4 == 1 {
        six_k_plus_one_1mod4(k)
    } else {
        six_k_plus_one_3mod4(k)
    }
}

fn six_k_plus_one_1mod4(k: i64) -> (String, Vec<Vec<Pt>>) {
    let n = (k - 1) / 4;
    let c1 = cat(vec![
        run(span(3 * n + 1, 5 * n, 1), |i| {
            vec![p(3 * n + 1 + i, 0), p(-(3 * n + 1 + i), 0)]
        }),
        vec![p(5 * n + 3, 0)],
    ]);
    let c2 = cat(vec![
        run(span(3 * n + 1, 5 * n, 1), |i| {
            vec![p(3 * n + 1 + i, 1), p(-(3 * n + 1 + i), 1)]
        }),
        vec![p(5 * n + 3, 1)],
    ]);
    let c3 = cat(vec![
        run(span(n + 1, 3 * n, 1), |i| vec![p(n + 1 + i, 0), p(-(n + 1 + i), 1)]),
        vec![p(-n, 0)],
    ]);
    let c4 = cat(vec![
        run(span(n + 1, 3 * n, 1), |i| vec![p(n + 1 + i, 1), p(-(n + 1 + i), 0)]),
        vec![p(-n, 1)],
    ]);

    let (tag, c5, c6) = match k {
        9 => (
            "special k=9".to_string(),
            vec![INF, p(2, 1), p(1, 1), p(-1, 1), p(1, 0), p(-13, 1), p(0, 0), p(-1, 0), p(2, 0)],
            vec![
                p(-13, 0), p(-11, 0), p(11, 1), p(12, 0), p(-12, 1), p(-12, 0), p(12, 1), p(11, 0),
                p(-11, 1),
            ],
        ),
        13 => (
            "special k=13".to_string(),
            vec![
                INF, p(3, 1), p(-2, 1), p(2, 1), p(1, 1), p(-1, 1), p(1, 0), p(-19, 1), p(0, 0),
                p(-1, 0), p(2, 0), p(-2, 0), p(3, 0),
            ],
            vec![
                p(-19, 0), p(-17, 0), p(17, 1), p(16, 0), p(-16, 1), p(-18, 0), p(-18, 1),
                p(17, 0), p(-17, 1), p(19, 0), p(16, 1), p(-16, 0), p(19, 1),
            ],
        ),
        17 => (
            "special k=17".to_string(),
            vec![
                INF, p(4, 1), p(-3, 1), p(3, 1), p(-2, 1), p(2, 1), p(1, 1), p(-1, 1), p(1, 0),
                p(-25, 1), p(0, 0), p(-1, 0), p(2, 0), p(-2, 0), p(3, 0), p(-3, 0), p(4, 0),
            ],
            vec![
                p(-25, 0), p(-23, 0), p(22, 1), p(-22, 0), p(24, 1), p(25, 0), p(21, 1),
                p(-21, 0), p(-24, 1), p(-24, 0), p(-21, 1), p(21, 0), p(25, 1), p(24, 0),
                p(-22, 1), p(22, 0), p(-23, 1),
            ],
        ),
        _ => {
            let c5 = cat(vec![
                vec![INF, p(n, 1)],
                run(span(n - 1, 2, -1), |i| vec![p(-(n - 1 - i), 1), p(n - 1 - i, 1)]),
                vec![p(1, 1), p(-1, 1)],
                vec![p(1, 0), p(-(6 * n + 1), 1), p(0, 0), p(-1, 0)],
                run(span(2, n - 1, 1), |i| vec![p(2 + i, 0), p(-(2 + i), 0)]),
                vec![p(n, 0)],
            ]);
            let (tag, c6) = match k % 12 {
                1 => ("k=1 mod 12", c6_1mod12(n)),
                5 => ("k=5 mod 12", c6_5mod12(n)),
                _ => ("k=9 mod 12", c6_9mod12(n)),
            };
            (tag.to_string(), c5, c6)
        }
    };
    (tag, vec![c1, c2, c3, c4, c5, c6])
}

fn c6_1mod12(n: i64) -> Vec<Pt> {
    let c = span(6 * n - 5, 5 * n + 4, -3);
    cat(vec![
        vec![p(-(6 * n + 1), 0), p(-(6 * n - 1), 0)],
        run(c, |i| vec![p(6 * n - 5 - 3 * i, 1), p(-(6 * n - 4 - 3 * i), 0)]),
        vec![p(5 * n + 1, 1), p(-(5 * n + 1), 0)],
        run(span(5 * n + 6, 6 * n - 3, 3), |i| {
            vec![p(5 * n + 6 + 3 * i, 1), p(-(5 * n + 4 + 3 * i), 0)]
        }),
        vec![
            p(6 * n + 1, 1), p(-(6 * n - 2), 0), p(6 * n - 1, 1), p(6 * n, 0), p(-6 * n, 1),
            p(6 * n - 2, 0),
        ],
        run(span(6 * n - 3, 5 * n + 6, -3), |i| {
            vec![p(-(6 * n - 3 - 3 * i), 1), p(6 * n - 4 - 3 * i, 0)]
        }),
        vec![
            p(-(5 * n + 3), 1), p(5 * n + 2, 0), p(-(5 * n + 2), 1), p(-(5 * n + 2), 0),
            p(5 * n + 2, 1), p(-(5 * n + 3), 0),
        ],
        run(span(5 * n + 5, 6 * n - 4, 3), |i| {
            vec![p(5 * n + 5 + 3 * i, 1), p(-(5 * n + 6 + 3 * i), 0)]
        }),
        vec![
            p(6 * n - 2, 1), p(-6 * n, 0), p(6 * n, 1), p(6 * n - 1, 0), p(-(6 * n - 2), 1),
            p(6 * n + 1, 0),
        ],
        run(span(6 * n - 5, 5 * n + 4, -3), |i| {
            vec![p(-(6 * n - 5 - 3 * i), 1), p(6 * n - 3 - 3 * i, 0)]
        }),
        vec![p(-(5 * n + 1), 1), p(5 * n + 1, 0)],
        run(span(5 * n + 5, 6 * n - 4, 3), |i| {
            vec![p(-(5 * n + 5 + 3 * i), 1), p(5 * n + 4 + 3 * i, 0)]
        }),
        vec![p(-(6 * n - 1), 1)],
    ])
}

fn c6_5mod12(n: i64) -> Vec<Pt> {
    cat(vec![
        vec![p(-(6 * n + 1), 0), p(-(6 * n - 1), 0)],
        run(span(6 * n - 6, 5 * n + 4, -3), |i| {
            vec![p(6 * n - 6 - 3 * i, 1), p(-(6 * n - 5 - 3 * i), 0)]
        }),
        vec![p(5 * n + 1, 1), p(-(5 * n + 1), 0)],
        run(span(5 * n + 6, 6 * n - 4, 3), |i| {
            vec![p(5 * n + 6 + 3 * i, 1), p(-(5 * n + 4 + 3 * i), 0)]
        }),
        vec![
            p(6 * n - 2, 1), p(-6 * n, 0), p(6 * n, 1), p(6 * n - 1, 0), p(-(6 * n - 3), 1),
            p(6 * n - 3, 0), p(-(6 * n - 2), 1), p(6 * n + 1, 0),
        ],
        run(span(6 * n - 4, 5 * n + 6, -3), |i| {
            vec![p(-(6 * n - 4 - 3 * i), 1), p(6 * n - 5 - 3 * i, 0)]
        }),
        vec![
            p(-(5 * n + 3), 1), p(5 * n + 2, 0), p(-(5 * n + 2), 1), p(-(5 * n + 2), 0),
            p(5 * n + 2, 1), p(-(5 * n + 3), 0),
        ],
        run(span(5 * n + 5, 6 * n - 5, 3), |i| {
            vec![p(5 * n + 5 + 3 * i, 1), p(-(5 * n + 6 + 3 * i), 0)]
        }),
        vec![
            p(6 * n + 1, 1), p(-(6 * n - 2), 0), p(6 * n - 3, 1), p(-(6 * n - 3), 0),
            p(6 * n - 1, 1), p(6 * n, 0), p(-6 * n, 1), p(6 * n - 2, 0),
        ],
        run(span(6 * n - 6, 5 * n + 4, -3), |i| {
            vec![p(-(6 * n - 6 - 3 * i), 1), p(6 * n - 4 - 3 * i, 0)]
        }),
        vec![p(-(5 * n + 1), 1), p(5 * n + 1, 0)],
        run(span(5 * n + 5, 6 * n - 5, 3), |i| {
            vec![p(-(5 * n + 5 + 3 * i), 1), p(5 * n + 4 + 3 * i, 0)]
        }),
        vec![p(-(6 * n - 1), 1)],
    ])
}

fn c6_9mod12(n: i64) -> Vec<Pt> {
    cat(vec![
        vec![
            p(-(6 * n + 1), 0), p(-(6 * n - 1), 0), p(6 * n - 1, 1), p(6 * n, 0), p(-6 * n, 1),
        ],
        run(span(6 * n - 4, 5 * n + 4, -3), |i| {
            vec![p(6 * n - 4 - 3 * i, 0), p(-(6 * n - 3 - 3 * i), 1)]
        }),
        vec![p(5 * n + 1, 0), p(-(5 * n + 1), 1)],
        run(span(5 * n + 6, 6 * n - 2, 3), |i| {
            vec![p(5 * n + 6 + 3 * i, 0), p(-(5 * n + 4 + 3 * i), 1)]
        }),
        vec![p(6 * n + 1, 0)],
        run(span(6 * n - 2, 5 * n + 6, -3), |i| {
            vec![p(-(6 * n - 2 - 3 * i), 1), p(6 * n - 3 - 3 * i, 0)]
        }),
        vec![
            p(-(5 * n + 3), 1), p(5 * n + 2, 0), p(-(5 * n + 2), 1), p(-(5 * n + 2), 0),
            p(5 * n + 2, 1), p(-(5 * n + 3), 0),
        ],
        run(span(5 * n + 5, 6 * n - 3, 3), |i| {
            vec![p(5 * n + 5 + 3 * i, 1), p(-(5 * n + 6 + 3 * i), 0)]
        }),
        vec![p(6 * n + 1, 1)],
        run(span(6 * n - 4, 5 * n + 4, -3), |i| {
            vec![p(-(6 * n - 4 - 3 * i), 0), p(6 * n - 2 - 3 * i, 1)]
        }),
        vec![p(-(5 * n + 1), 0), p(5 * n + 1, 1)],
        run(span(5 * n + 5, 6 * n - 3, 3), |i| {
            vec![p(-(5 * n + 5 + 3 * i), 0), p(5 * n + 4 + 3 * i, 1)]
        }),
        vec![p(-6 * n, 0), p(6 * n, 1), p(6 * n - 1, 0), p(-(6 * n - 1), 1)],
    ])
}

fn six_k_plus_one_3mod4(k: i64) -> (String, Vec<Vec<Pt>>) {
    let n = (k - 3) / 4;
    let c1 = cat(vec![
        run(span(n + 2, 3 * n + 2, 1), |i| vec![p(n + 2 + i, 0), p(-(n + 2 + i), 0)]),
        vec![p(-(n - 1), 0)],
    ]);
    let c2 = cat(vec![
        run(span(n + 2, 3 * n + 2, 1), |i| vec![p(n + 2 + i, 1), p(-(n + 2 + i), 1)]),
        vec![p(-(n - 1), 1)],
    ]);
    let c3 = cat(vec![
        run(span(5 * n + 3, 3 * n + 3, -1), |i| {
            vec![p(5 * n + 3 - i, 0), p(-(5 * n + 3 - i), 1)]
        }),
        vec![p(-(5 * n + 4), 0)],
    ]);
    let c4 = cat(vec![
        run(span(5 * n + 3, 3 * n + 3, -1), |i| {
            vec![p(5 * n + 3 - i, 1), p(-(5 * n + 3 - i), 0)]
        }),
        vec![p(-(5 * n + 4), 1)],
    ]);

    let (tag, c5, c6) = match k {
        11 => (
            "special k=11".to_string(),
            vec![
                INF, p(-2, 1), p(2, 1), p(1, 1), p(3, 1), p(-3, 0), p(-3, 1), p(3, 0), p(1, 0),
                p(-2, 0), p(2, 0),
            ],
            vec![
                p(16, 0), p(-16, 0), p(15, 1), p(-15, 0), p(14, 1), p(15, 0), p(-15, 1), p(14, 0),
                p(16, 1), p(0, 0), p(-16, 1),
            ],
        ),
        15 => (
            "special k=15".to_string(),
            vec![
                INF, p(2, 1), p(3, 1), p(-3, 1), p(1, 1), p(-1, 1), p(4, 1), p(-4, 0), p(-4, 1),
                p(4, 0), p(1, 0), p(-1, 0), p(3, 0), p(-3, 0), p(2, 0),
            ],
            vec![
                p(22, 0), p(-22, 0), p(21, 1), p(-21, 0), p(20, 1), p(-20, 0), p(19, 1), p(20, 0),
                p(-20, 1), p(19, 0), p(-22, 1), p(0, 0), p(22, 1), p(21, 0), p(-21, 1),
            ],
        ),
        19 => (
            "special k=19".to_string(),
            vec![
                INF, p(-2, 1), p(2, 1), p(1, 1), p(3, 1), p(-4, 1), p(4, 1), p(-1, 1), p(5, 1),
                p(-5, 0), p(-5, 1), p(5, 0), p(-2, 0), p(1, 0), p(3, 0), p(-1, 0), p(4, 0),
                p(-4, 0), p(2, 0),
            ],
            vec![
                p(28, 0), p(-28, 0), p(27, 1), p(-27, 0), p(26, 1), p(-26, 0), p(25, 1),
                p(-25, 0), p(24, 1), p(25, 0), p(-25, 1), p(24, 0), p(-27, 1), p(27, 0),
                p(-26, 1), p(26, 0), p(28, 1), p(0, 0), p(-28, 1),
            ],
        ),
        _ => {
            let (t5, c5) = match k % 12 {
                3 => ("C5 k=3 mod 12", c5_3mod12(n)),
                7 => ("C5 k=7 mod 12", c5_7mod12(n)),
                _ => ("C5 k=11 mod 12", c5_11mod12(n)),
            };
            let (t6, c6) = if k % 8 == 3 {
                ("C6 k=3 mod 8", c6_3mod8(n))
            } else {
                ("C6 k=7 mod 8", c6_7mod8(n))
            };
            (format!("{t5}, {t6}"), c5, c6)
        }
    };
    (tag, vec![c1, c2, c3, c4, c5, c6])
}

fn c5_3mod12(n: i64) -> Vec<Pt> {
    cat(vec![
        vec![INF],
        vec![p(2, 1), p(3, 1), p(-3, 1), p(1, 1), p(-1, 1), p(4, 1)],
        run(span(4, n - 2, 3), |i| {
            vec![
                p(-(4 + 3 * i), 1), p(6 + 3 * i, 1), p(-(6 + 3 * i), 1), p(5 + 3 * i, 1),
                p(-(2 + 3 * i), 1), p(7 + 3 * i, 1),
            ]
        }),
        vec![p(-(n + 1), 0), p(-(n + 1), 1)],
        run(span(n + 1, 7, -3), |i| {
            vec![
                p(n + 1 - 3 * i, 0), p(-(n - 4 - 3 * i), 0), p(n - 1 - 3 * i, 0),
                p(-(n - 3 * i), 0), p(n - 3 * i, 0), p(-(n - 2 - 3 * i), 0),
            ]
        }),
        vec![p(4, 0)],
        vec![p(1, 0), p(-1, 0), p(3, 0), p(-3, 0), p(2, 0)],
    ])
}

fn c5_7mod12(n: i64) -> Vec<Pt> {
    cat(vec![
        vec![INF],
        vec![p(-2, 1), p(2, 1), p(1, 1), p(3, 1), p(-4, 1), p(4, 1), p(-1, 1), p(5, 1)],
        run(span(7, n, 3), |i| {
            vec![
                p(-(7 + 3 * i), 1), p(7 + 3 * i, 1), p(-(3 + 3 * i), 1), p(6 + 3 * i, 1),
                p(-(5 + 3 * i), 1), p(8 + 3 * i, 1),
            ]
        }),
        vec![p(-(n + 1), 0), p(-(n + 1), 1)],
        run(span(n + 1, 8, -3), |i| {
            vec![
                p(n + 1 - 3 * i, 0), p(-(n - 2 - 3 * i), 0), p(n - 1 - 3 * i, 0),
                p(-(n - 4 - 3 * i), 0), p(n - 3 * i, 0), p(-(n - 3 * i), 0),
            ]
        }),
        vec![p(5, 0)],
        vec![p(-1, 0), p(4, 0), p(-4, 0), p(3, 0), p(1, 0), p(-2, 0), p(2, 0)],
    ])
}

fn c5_11mod12(n: i64) -> Vec<Pt> {
    cat(vec![
        vec![INF],
        vec![p(-2, 1), p(2, 1), p(1, 1), p(3, 1)],
        run(span(5, n, 3), |i| {
            vec![
                p(-(5 + 3 * i), 1), p(5 + 3 * i, 1), p(-(1 + 3 * i), 1), p(4 + 3 * i, 1),
                p(-(3 + 3 * i), 1), p(6 + 3 * i, 1),
            ]
        }),
        vec![p(-(n + 1), 0), p(-(n + 1), 1)],
        run(span(n + 1, 6, -3), |i| {
            vec![
                p(n + 1 - 3 * i, 0), p(-(n - 2 - 3 * i), 0), p(n - 1 - 3 * i, 0),
                p(-(n - 4 - 3 * i), 0), p(n - 3 * i, 0), p(-(n - 3 * i), 0),
            ]
        }),
        vec![p(3, 0), p(1, 0), p(-2, 0), p(2, 0)],
    ])
}

fn c6_head(n: i64) -> Vec<Pt> {
    cat(vec![
        vec![p(6 * n + 4, 0), p(-(6 * n + 4), 0)],
        run(span(6 * n + 3, 5 * n + 5, -1), |i| {
            vec![p(6 * n + 3 - i, 1), p(-(6 * n + 3 - i), 0)]
        }),
        vec![p(5 * n + 4, 1), p(5 * n + 5, 0), p(-(5 * n + 5), 1), p(5 * n + 4, 0)],
    ])
}

fn c6_block(i: i64, n: i64) -> Vec<Pt> {
    vec![
        p(-(5 * n + 7 + 2 * i), 1),
        p(5 * n + 7 + 2 * i, 0),
        p(-(5 * n + 6 + 2 * i), 1),
        p(5 * n + 6 + 2 * i, 0),
    ]
}

fn c6_3mod8(n: i64) -> Vec<Pt> {
    cat(vec![
        c6_head(n),
        run(span(5 * n + 7, 6 * n + 3, 2), |i| c6_block(i, n)),
        vec![p(6 * n + 4, 1), p(0, 0), p(-(6 * n + 4), 1)],
    ])
}

fn c6_7mod8(n: i64) -> Vec<Pt> {
    cat(vec![
        c6_head(n),
        run(span(5 * n + 7, 6 * n + 2, 2), |i| c6_block(i, n)),
        vec![
            p(-(6 * n + 4), 1), p(0, 0), p(6 * n + 4, 1), p(6 * n + 3, 0), p(-(6 * n + 3), 1),
        ],
    ])
}
