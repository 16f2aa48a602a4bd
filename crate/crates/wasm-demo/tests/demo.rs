use maxseg::oracle::brute_force_partition;
use maxseg::WeightedSequence;
use maxseg_wasm::demo::DemoSequence;

#[test]
fn parses_numbers_and_pairs() {
    let s = DemoSequence::parse_numbers("3, -1 4:2\n1.5:0.5").unwrap();
    assert_eq!(s.len(), 4);
    assert_eq!(s.values(), vec![3.0, -1.0, 4.0, 1.5]);
    assert_eq!(s.weights(), vec![1.0, 1.0, 2.0, 0.5]);
    assert!(DemoSequence::parse_numbers("1 x").is_err());
    assert!(DemoSequence::parse_numbers("  ").is_err());
}

#[test]
fn densest_segment() {
    let s = DemoSequence::parse_numbers("0 0 1 1 1 1").unwrap();
    let seg = s.densest("2", "3").unwrap();
    assert_eq!((seg.start, seg.end), (3, 4));
    assert_eq!(seg.density, "1.000000000");
    assert_eq!(seg.algorithm, "uniform-lu");

    let seg = s.densest("1.5", "max").unwrap();
    assert_eq!((seg.start, seg.end, seg.width.as_str()), (3, 4, "2"));
    assert!(s.densest("7", "").is_err());
    assert!(s.densest("0", "").is_err());
}

#[test]
fn dna_scan() {
    let s = DemoSequence::parse_dna(">x\nATAT\nGCGC\nATAT\n", "gc").unwrap();
    assert_eq!(s.len(), 12);
    let seg = s.densest("3", "6").unwrap();
    assert_eq!((seg.start, seg.end), (5, 7));
    let h = DemoSequence::parse_dna("ATGC", "huang:0.25").unwrap();
    assert_eq!(h.values(), vec![-0.25, -0.25, 0.75, 0.75]);
    assert!(DemoSequence::parse_dna("ACGT", "bogus").is_err());
}

#[test]
fn partition_matches_oracle() {
    let cases = [
        "9 5 3 4",
        "1 2 3 4 5",
        "5 4 3 2 1",
        "3 -1 4 1 -5 9 2 -6 5 3",
        "2:1 6:2 3:1 -4:3 1:1",
        "7",
    ];
    for text in cases {
        let s = DemoSequence::parse_numbers(text).unwrap();
        let blocks = s.partition().unwrap();
        let pairs: Vec<(i64, i64)> = text
            .split_whitespace()
            .map(|t| match t.split_once(':') {
                Some((v, w)) => (v.parse().unwrap(), w.parse().unwrap()),
                None => (t.parse().unwrap(), 1),
            })
            .collect();
        let seq = WeightedSequence::from_pairs(&pairs).unwrap();
        assert_eq!(
            blocks,
            brute_force_partition(&seq, 1, seq.len()).unwrap(),
            "{text}"
        );
        let d = s.block_densities(&blocks).unwrap();
        assert!(d.windows(2).all(|w| w[0] > w[1]), "{text}: {d:?}");
    }
}
