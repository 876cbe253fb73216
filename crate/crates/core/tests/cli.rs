use std::io::Write;

use icfl::alphabet::{Order, OrderedAlphabet, Word};
use icfl::cli::{parse_records, run, EXIT_NOT_APPLICABLE, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION};
use icfl::factorization::{Factorization, FactorizationKind};
use icfl::icfl::{icfl, is_grouping};
use icfl::lyndon::cfl;
use proptest::prelude::*;

fn call(args: &[&str], stdin: &[u8]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("icfl").chain(args.iter().copied());
    let code = run(argv, &mut &stdin[..], &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn factorize_examples() {
    let (code, out, _) = call(&["factorize", "--kind", "icfl", "dabadabdabdadac"], b"");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("icfl: daba | dabdab | dadac"));

    let (code, out, _) = call(&["factorize", "--kind", "icfl", "x"], b"");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("icfl: x\n"));

    let (_, out, _) = call(&["factorize", "--kind", "cfl", "banana"], b"");
    assert!(out.contains("cfl: b | an | an | a"));

    let (_, out, _) = call(&["factorize", "--kind", "icfl", "aaaaaaaaaaaabbab"], b"");
    assert!(out.contains("runs: (aaaaaaaaaaaa) (bbab)"));
}

#[test]
fn factorize_reads_stdin_and_files() {
    let (code, out, _) = call(&["factorize", "--kind", "cfl"], b"banana\r\n");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("word: banana (6 symbols)"));

    let path = std::env::temp_dir().join(format!("icfl-cli-{}.txt", std::process::id()));
    std::fs::File::create(&path).unwrap().write_all(b"dabadabdabdadac\n").unwrap();
    let (code, out, _) = call(&["factorize", "--kind", "icfl", "--file", path.to_str().unwrap()], b"");
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("daba | dabdab | dadac"));

    assert_eq!(call(&["factorize", "--file", "/nonexistent/icfl"], b"").0, EXIT_USAGE);
    assert_eq!(call(&["factorize", "--file", "x", "word"], b"").0, EXIT_USAGE);
    assert_eq!(call(&["factorize"], b"\n").0, EXIT_USAGE);
}

#[test]
fn oversized_input_is_rejected() {
    let big = vec![b'a'; (64 << 20) + 1];
    let (code, _, err) = call(&["factorize", "--kind", "cfl"], &big);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("64 MiB"), "{err}");
}

#[test]
fn custom_order() {
    let (code, out, _) = call(&["factorize", "--kind", "cfl", "--order", "dcba", "dabadabdabdadac"], b"");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("cfl: daba | dab | dab | dadac"), "{out}");
    assert_eq!(call(&["factorize", "--order", "abca", "abc"], b"").0, EXIT_USAGE);
}

fn round_trip(text: &str, order: Option<&str>) {
    let mut args = vec!["factorize", "--format", "records"];
    if let Some(o) = order {
        args.extend(["--order", o]);
    }
    args.push(text);
    let (code, out, _) = call(&args, b"");
    assert_eq!(code, EXIT_OK);
    let records = parse_records(&out).unwrap();

    let alphabet = match order {
        Some(o) => std::sync::Arc::new(OrderedAlphabet::with_priority(o.as_bytes()).unwrap()),
        None => OrderedAlphabet::shared_bytes(),
    };
    let w = Word::new(&alphabet, text.as_bytes()).unwrap();
    for kind in [FactorizationKind::Cfl, FactorizationKind::CflIn, FactorizationKind::Icfl] {
        let rows: Vec<_> = records.iter().filter(|r| r.kind == kind.name()).collect();
        let cuts: Vec<usize> = rows.iter().map(|r| r.end).collect();
        let rebuilt = Factorization::from_cuts(w.clone(), &cuts, kind).unwrap();
        rebuilt.certify().unwrap();
        for r in &rows {
            assert_eq!(rebuilt.factor(r.index).unwrap().to_bytes(), r.bytes);
        }
        let expected = match kind {
            FactorizationKind::Cfl => cfl(&w, Order::Normal).unwrap(),
            FactorizationKind::CflIn => cfl(&w, Order::Inverse).unwrap(),
            _ => icfl(&w).unwrap(),
        };
        assert_eq!(rebuilt.cuts(), expected.cuts());
    }
    let witness: Vec<usize> = std::iter::once(0)
        .chain(records.iter().filter(|r| r.kind == "witness").map(|r| r.end))
        .collect();
    let base = cfl(&w, Order::Inverse).unwrap();
    let expected = is_grouping(&icfl(&w).unwrap(), &base).unwrap().unwrap();
    assert_eq!(witness, expected.boundaries);
}

#[test]
fn records_round_trip_examples() {
    round_trip("dabadabdabdadac", None);
    round_trip("a\tb\\c\"d'e", None);
    round_trip("zyxzyxw", Some("zyx"));
}

proptest! {
    #[test]
    fn records_round_trip(bytes in proptest::collection::vec(b'a'..=b'd', 1..40)) {
        round_trip(std::str::from_utf8(&bytes).unwrap(), None);
    }

    #[test]
    fn output_is_deterministic(bytes in proptest::collection::vec(b'a'..=b'c', 2..30)) {
        let text = std::str::from_utf8(&bytes).unwrap();
        let first = call(&["bound", "--seed", "7", text], b"");
        let second = call(&["bound", "--seed", "7", text], b"");
        prop_assert_eq!(first, second);
    }
}

#[test]
fn verify_single_suite() {
    let (code, out, _) = call(&["verify", "--suite", "border-prefix", "--max-len", "8"], b"");
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("border-prefix") && out.contains("all suites passed"));

    let (code, out, _) = call(
        &["verify", "--suite", "icfl", "--suite", "cfl", "--alphabet-size", "3", "--max-len", "5"],
        b"",
    );
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("K=3 n≤5"));

    let (code, out, _) = call(&["verify", "--suite", "overlap-cases", "--max-len", "6"], b"");
    assert_eq!(code, EXIT_VIOLATION);
    assert!(out.contains("first counterexample"));

    let (code, _, err) = call(&["verify", "--suite", "bogus"], b"");
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("border-prefix"));
    assert_eq!(call(&["verify", "--alphabet-size", "0"], b"").0, EXIT_USAGE);
}

#[test]
fn bound_examples() {
    let (code, out, _) = call(&["bound", "dabadabdabdadac"], b"");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("M = 11 (|m_2 m_3|)"));
    assert!(out.contains("max observed LCP = 5"));
    assert!(out.contains("method: exhaustive"));

    let (code, out, _) = call(&["bound", "aaaaaaaaaaaabbab"], b"");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("M = 16"));

    let (code, _, err) = call(&["bound", "dcba"], b"");
    assert_eq!(code, EXIT_NOT_APPLICABLE);
    assert!(err.contains("bound not defined"));
}

#[test]
fn overlap_examples() {
    let (code, out, _) = call(&["overlap", "aba", "bab"], b"");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("case 1"));

    let (code, out, _) = call(&["overlap", "aaaa", "aaaa", "--overlap-len", "3"], b"");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("case 2"), "{out}");
    assert!(out.contains("also matches case 3"), "{out}");

    let (code, out, _) = call(&["overlap", "abab", "abab", "--overlap-len", "4"], b"");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("covers a whole word"), "{out}");

    let (code, out, _) = call(&["overlap", "aababa", "bababb", "--overlap-len", "4"], b"");
    assert_eq!(code, EXIT_VIOLATION);
    assert!(out.contains("no case holds"));

    let (code, _, err) = call(&["overlap", "abc", "xyz"], b"");
    assert_eq!(code, EXIT_NOT_APPLICABLE);
    assert!(err.contains("no overlap"));
    assert_eq!(call(&["overlap", "ab", "ba", "--overlap-len", "2"], b"").0, EXIT_USAGE);
}
