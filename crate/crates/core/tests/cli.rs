use swisscheese::cli::{run, EXIT_EMPTY_DOMAIN, EXIT_OK, EXIT_USAGE};

fn call(args: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("swisscheese").chain(args.split_whitespace());
    let status = run(argv, &mut out, &mut err);
    (
        status,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn count_single_size() {
    let (status, out, _) = call("count --family linear --size natural --class all --n 8");
    assert_eq!(status, EXIT_OK);
    assert_eq!(out, "8\t16\n");
}

#[test]
fn count_upto_lists_every_size() {
    let (status, out, _) = call("count --family affine --size var0 --class all --n 6 --upto");
    assert_eq!(status, EXIT_OK);
    assert_eq!(out, "0\t0\n1\t1\n2\t2\n3\t8\n4\t29\n5\t140\n6\t661\n");
}

#[test]
fn count_open_characteristic() {
    let (status, out, _) =
        call("count --family linear --size natural --class all --n 3 --characteristic 1");
    assert_eq!(status, EXIT_OK);
    assert_eq!(out, "3\t2\n");
}

#[test]
fn enumerate_affine_seven() {
    let (status, out, _) = call("enum --family affine --size natural --class all --n 7");
    assert_eq!(status, EXIT_OK);
    assert_eq!(out.lines().count(), 25);
    for line in out.lines() {
        line.parse::<swisscheese::Term>().unwrap();
    }
}

#[test]
fn enumerate_open_prints_holes() {
    let (status, out, _) =
        call("enum --family linear --size natural --class all --n 3 --characteristic 1");
    assert_eq!(status, EXIT_OK);
    assert_eq!(out, "(\\0 [0])\n([0] \\0)\n");
}

#[test]
fn named_output_needs_closed_terms() {
    let (status, _, err) = call(
        "enum --family linear --size natural --class all --n 3 --characteristic 1 --format named",
    );
    assert_eq!(status, EXIT_USAGE);
    assert!(err.contains("closed"));
}

#[test]
fn sampling_is_repeatable() {
    let line = "sample --family linear --size natural --class all --n 12 --count 20 --seed 42";
    let (status, first, _) = call(line);
    assert_eq!(status, EXIT_OK);
    assert_eq!(first.lines().count(), 20);
    let (_, second, _) = call(line);
    assert_eq!(first, second);
    let (_, other, _) =
        call("sample --family linear --size natural --class all --n 12 --count 20 --seed 43");
    assert_ne!(first, other);
}

#[test]
fn sampling_an_empty_size() {
    let (status, out, err) = call("sample --family linear --size natural --class all --n 3 --count 1 --seed 0");
    assert_eq!(status, EXIT_EMPTY_DOMAIN);
    assert!(out.is_empty());
    assert!(!err.is_empty());
}

#[test]
fn bad_arguments() {
    assert_eq!(call("count --bogus").0, EXIT_USAGE);
    assert_eq!(call("count --family linear --size natural --class all").0, EXIT_USAGE);
    assert_eq!(call("count --family cubic --size natural --class all --n 3").0, EXIT_USAGE);
    assert_eq!(
        call("count --family linear --size natural --class all --n 3 --characteristic x").0,
        EXIT_USAGE
    );
    assert_eq!(call("").0, EXIT_USAGE);
}

#[test]
fn help_goes_to_stdout() {
    let (status, out, _) = call("--help");
    assert_eq!(status, EXIT_OK);
    assert!(out.contains("count"));
}

#[test]
fn verify_and_oracle() {
    let (status, out, _) = call("verify --max-n 20");
    assert_eq!(status, EXIT_OK);
    assert_eq!(out.lines().count(), 8);
    assert!(out.lines().all(|l| l.ends_with("PASS")));

    let (status, out, _) = call("oracle --family affine --size natural --class nf --n 10");
    assert_eq!(status, EXIT_OK);
    assert_eq!(out, "10\t77\n");
}
