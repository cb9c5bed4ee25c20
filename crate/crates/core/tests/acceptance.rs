//! Acceptance suite: one test per release criterion, each printing a single
//! pass line (visible with `--nocapture`). The reference tables are frozen
//! copies of independently published values; they must never be regenerated
//! from this crate's own code.

use std::collections::{HashMap, HashSet};
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use descents::bijections::{bij01, bij01_inv, bij02, star};
use descents::closed::{binom, coefficient, factorial, omega_prod, omega_sum, FormulaId};
use descents::identities::{run_suite, SuiteLimits};
use descents::oracle::{all_permutations, Oracle};
use descents::perm::{des_left, des_right, Direction, StatConfig};
use descents::recursion::{poly_a_chain, poly_b_chain};

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn pass(criterion: usize, label: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed <= budget,
        "criterion {criterion} exceeded budget: {elapsed:?} > {budget:?}"
    );
    println!("criterion {criterion} ({label}): pass in {elapsed:?}");
}

/// Left-statistic polynomials for k = 3, lengths 1..=15, as coefficient
/// lists in increasing degree.
const A3_TABLE: [&[i64]; 15] = [
    &[1],
    &[2],
    &[2, 4],
    &[12, 12],
    &[72, 48],
    &[72, 456, 192],
    &[960, 3120, 960],
    &[10800, 23760, 5760],
    &[10800, 133920, 183600, 34560],
    &[241920, 1572480, 1572480, 241920],
    &[4233600, 18869760, 14878080, 1935360],
    &[4233600, 84309120, 233331840, 141644160, 15482880],
    &[139345920, 1478373120, 2991582720, 1478373120, 139345920],
    &[3429216000, 25202016000, 40334112000, 16819488000, 1393459200],
    &[
        3429216000,
        98413056000,
        448628544000,
        551287296000,
        191981664000,
        13934592000,
    ],
];

/// Right-statistic polynomials for k = 3, lengths 1..=12, split into the
/// flag-off and flag-on parts.
const B3_TABLE: [(&[i64], &[i64]); 12] = [
    (&[1], &[]),
    (&[2], &[]),
    (&[4], &[2]),
    (&[12, 6], &[6]),
    (&[48, 48], &[24]),
    (&[192, 288], &[168, 72]),
    (&[960, 2280, 360], &[840, 600]),
    (&[5760, 18720, 5760], &[5040, 5040]),
    (&[34560, 142560, 64800], &[41040, 69120, 10800]),
    (&[241920, 1285200, 937440, 75600], &[287280, 635040, 166320]),
    (
        &[1935360, 12579840, 12579840, 1935360],
        &[2298240, 6289920, 2298240],
    ),
    (
        &[15482880, 119024640, 150958080, 33868800],
        &[22619520, 82373760, 50440320, 4233600],
    ),
];

#[test]
fn criterion_1_left_table_k3() {
    let started = Instant::now();
    let chain = poly_a_chain(3, 15);
    for (i, row) in A3_TABLE.iter().enumerate() {
        let got = &chain[i + 1];
        assert_eq!(
            got.degree().map_or(0, |d| d + 1),
            row.len(),
            "length {}",
            i + 1
        );
        for (d, &c) in row.iter().enumerate() {
            assert_eq!(got.coeff(d), big(c), "length {} degree {d}", i + 1);
        }
    }
    pass(1, "left table k=3 lengths 1..=15", started, Duration::from_secs(1));
}

#[test]
fn criterion_2_right_table_k3() {
    let started = Instant::now();
    let chain = poly_b_chain(3, 12);
    for (i, (z0, z1)) in B3_TABLE.iter().enumerate() {
        let got = &chain[i + 1];
        for (part, want) in [(&got.z0, z0), (&got.z1, z1)] {
            assert_eq!(part.degree().map_or(0, |d| d + 1), want.len(), "length {}", i + 1);
            for (d, &c) in want.iter().enumerate() {
                assert_eq!(part.coeff(d), big(c), "length {} degree {d}", i + 1);
            }
            assert!(part.coeff(want.len()) == big(0));
        }
    }
    pass(2, "right table k=3 lengths 1..=12", started, Duration::from_secs(1));
}

#[test]
fn criterion_3_four_methods_agree() {
    let started = Instant::now();
    let oracle = Oracle::new();
    for k in 2..=5usize {
        let a_chain = poly_a_chain(k, 10);
        let b_chain = poly_b_chain(k, 10);
        for len in 1..=10usize {
            let (n, j) = (len / k, len % k);
            let a = oracle.poly_a(k, len).unwrap();
            let b = oracle.poly_b(k, len).unwrap();
            assert_eq!(a, a_chain[len], "A chain k={k} len={len}");
            assert_eq!(b, b_chain[len], "B chain k={k} len={len}");
            for d in 0..=(len / k) as i64 {
                let au = a.coeff(d as usize);
                for id in [FormulaId::AInclExcl, FormulaId::ADual] {
                    assert_eq!(
                        coefficient(id, k, n, j, d).unwrap(),
                        au,
                        "{id:?} k={k} len={len} d={d}"
                    );
                }
                let bu = b.at_z1().coeff(d as usize);
                for id in [FormulaId::BTotalDual, FormulaId::BTotalInclExcl] {
                    assert_eq!(
                        coefficient(id, k, n, j, d).unwrap(),
                        bu,
                        "{id:?} k={k} len={len} d={d}"
                    );
                }
                assert_eq!(
                    coefficient(FormulaId::B0Form, k, n, j, d).unwrap(),
                    b.z0.coeff(d as usize),
                    "B0 k={k} len={len} d={d}"
                );
                assert_eq!(
                    coefficient(FormulaId::B1Form, k, n, j, d).unwrap(),
                    b.z1.coeff(d as usize),
                    "B1 k={k} len={len} d={d}"
                );
            }
        }
    }
    pass(3, "oracle = recursion = closed forms", started, Duration::from_secs(120));
}

#[test]
fn criterion_4_k2_product_forms() {
    let started = Instant::now();
    let oracle = Oracle::new();
    for len in 1..=8usize {
        let a = oracle.poly_a(2, len).unwrap();
        let n = (len / 2) as i64;
        for s in 0..=n {
            let want = if len % 2 == 0 {
                binom(n, s).pow(2) * factorial(n as usize).pow(2)
            } else {
                // (s+1) divides the square form exactly at odd lengths.
                let num = binom(n, s).pow(2) * factorial(n as usize + 1).pow(2);
                assert_eq!(&num % (s + 1), big(0));
                num / (s + 1)
            };
            assert_eq!(a.coeff(s as usize), want, "len={len} s={s}");
        }
    }
    pass(4, "k=2 product forms lengths 1..=8", started, Duration::from_secs(1));
}

#[test]
fn criterion_5_identity_suites() {
    let started = Instant::now();
    let reports = run_suite(SuiteLimits::default());
    assert_eq!(reports.len(), 10);
    for report in &reports {
        assert!(report.checks_run > 0, "{} ran nothing", report.suite);
        assert!(report.ok(), "{report:?}");
    }
    pass(5, "identity suites at full bounds", started, Duration::from_secs(30));
}

#[test]
fn criterion_6_omega_forms_agree() {
    let started = Instant::now();
    for k in 2..=6usize {
        for n in 1..=20usize {
            for r in 0..=20i64 {
                assert_eq!(omega_sum(k, n, r), omega_prod(k, n, r), "k={k} n={n} r={r}");
            }
        }
        for r in 0..=20i64 {
            assert_eq!(omega_sum(k, 1, r), big(1), "k={k} r={r}");
        }
    }
    pass(6, "omega sum/product forms", started, Duration::from_secs(5));
}

#[test]
fn criterion_7_spot_value() {
    let started = Instant::now();
    let v = coefficient(FormulaId::AInclExcl, 3, 5, 0, 4).unwrap();
    assert_eq!(v, big(191981664000));
    let q = v / factorial(10);
    assert_eq!(q, big(52905));
    let mut rest = 52905i64;
    let mut factors = Vec::new();
    let mut p = 2i64;
    while p * p <= rest {
        while rest % p == 0 {
            factors.push(p);
            rest /= p;
        }
        p += 1;
    }
    if rest > 1 {
        factors.push(rest);
    }
    assert_eq!(factors, vec![3, 5, 3527]);
    pass(7, "normalized spot value 52905 = 3*5*3527", started, Duration::from_secs(1));
}

#[test]
fn criterion_8_bijection_properties() {
    let started = Instant::now();
    let oracle = Oracle::new();
    // Star transports the left statistic to the right one at lengths one
    // below a multiple of k.
    for k in 2..=4usize {
        let left = StatConfig::multiples_of(k, Direction::FirstElement).unwrap();
        let right = StatConfig::multiples_of(k, Direction::SecondElement).unwrap();
        for len in (1..=8).filter(|l| (l + 1) % k == 0) {
            for p in all_permutations(len) {
                assert_eq!(des_left(&p, &left), des_right(&star(&p), &right));
            }
        }
    }
    // bij01 and bij02 at lengths two below a multiple of k.
    for k in 3..=5usize {
        let left = StatConfig::multiples_of(k, Direction::FirstElement).unwrap();
        let right = StatConfig::multiples_of(k, Direction::SecondElement).unwrap();
        for len in (1..=8).filter(|l| (l + 2) % k == 0) {
            let n = (len + 2) / k - 1;
            let mut images = HashSet::new();
            let mut counts: HashMap<(usize, bool), u64> = HashMap::new();
            for p in all_permutations(len) {
                let image = bij01(&p, k).unwrap();
                assert_eq!(bij01_inv(&image, k).unwrap(), p);
                assert_eq!(des_left(&image, &left), n - des_left(&p, &left));
                let j = des_left(&p, &left);
                let (refined, flag) = bij02(&p, k).unwrap();
                let expected = if flag { j - 1 } else { j };
                assert_eq!(des_right(&refined, &right), expected);
                assert!(images.insert((image.values().to_vec(), refined.values().to_vec())));
                *counts.entry((expected, flag)).or_default() += 1;
            }
            let b = oracle.poly_b(k, len).unwrap();
            for d in 0..=len / k {
                for (flag, part) in [(false, &b.z0), (true, &b.z1)] {
                    let got = counts.get(&(d, flag)).copied().unwrap_or(0);
                    assert_eq!(part.coeff(d), got.into(), "k={k} len={len} d={d} flag={flag}");
                }
            }
        }
    }
    pass(8, "bijection properties lengths <= 8", started, Duration::from_secs(60));
}

#[test]
fn criterion_9_oracle_is_deterministic_across_job_counts() {
    let started = Instant::now();
    let single = Oracle::new().with_jobs(1);
    for jobs in [2, 3, 8] {
        let multi = Oracle::new().with_jobs(jobs);
        for k in [2usize, 3, 5] {
            for len in [1usize, 5, 9] {
                assert_eq!(
                    single.poly_a(k, len).unwrap(),
                    multi.poly_a(k, len).unwrap(),
                    "A k={k} len={len} jobs={jobs}"
                );
                assert_eq!(
                    single.poly_b(k, len).unwrap(),
                    multi.poly_b(k, len).unwrap(),
                    "B k={k} len={len} jobs={jobs}"
                );
            }
        }
    }
    pass(9, "deterministic parallel oracle", started, Duration::from_secs(60));
}
