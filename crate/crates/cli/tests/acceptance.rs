//! Acceptance suite for the benchmark harness: the cut method must beat
//! brute force on the largest phenylene instance with identical values.
//! Run with `-- --nocapture` to see the PASS line and the measured times.

use hypercut_cli::bench::{run_bench, to_csv, BenchConfig, Family, CSV_HEADER};

#[test]
fn c10_bench_phenylene_cut_beats_brute_at_32() {
    let cfg = BenchConfig {
        families: vec![Family::Phenylene],
        phenylene_n: vec![8, 16, 32],
        repeats: 9,
        seed: 0,
    };
    let records = run_bench(&cfg).expect("bench runs");
    assert_eq!(records.len(), 6, "two methods per instance");

    for n in [8u128, 16, 32] {
        let params = format!("n={n}");
        let of = |method: &str| {
            records
                .iter()
                .find(|r| r.params == params && r.method == method)
                .unwrap_or_else(|| panic!("missing {method} row for {params}"))
        };
        let brute = of("brute");
        let general = of("general");
        let expected = 12 * n.pow(3) + 6 * n.pow(2) - 3 * n;
        assert_eq!(brute.wiener, expected, "{params} brute");
        assert_eq!(general.wiener, expected, "{params} general");
        assert_eq!(brute.n_vertices, 6 * n as usize);
        if n == 32 {
            assert!(
                general.nanos < brute.nanos,
                "cut method must beat brute force at n=32: general {} ns vs brute {} ns",
                general.nanos,
                brute.nanos
            );
            println!(
                "criterion 10 (bench, n=32): general {} ns < brute {} ns: PASS",
                general.nanos, brute.nanos
            );
        }
    }

    let csv = to_csv(&records);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    assert_eq!(lines.count(), 6);
    for line in csv.lines().skip(1) {
        assert_eq!(line.split(',').count(), 7, "fixed column count: {line}");
    }
}

#[test]
fn bench_default_grid_is_consistent() {
    let cfg = BenchConfig {
        repeats: 1,
        ..BenchConfig::default()
    };
    let records = run_bench(&cfg).expect("bench runs");
    // cube 6 instances, phenylene 7, hypertree 3; two methods each
    assert_eq!(records.len(), 2 * (6 + 7 + 3));
    for pair in records.chunks(2) {
        assert_eq!(pair[0].wiener, pair[1].wiener, "{}", pair[0].params);
        assert_eq!(pair[0].method, "brute");
    }
}
