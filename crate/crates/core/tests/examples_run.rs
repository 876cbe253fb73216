macro_rules! example {
    ($module:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(factorize, "factorize.rs");
example!(bre_groupings, "bre_groupings.rs");
example!(borders, "borders.rs");
example!(suffix_sorting, "suffix_sorting.rs");
example!(lcp_bound, "lcp_bound.rs");
example!(overlap, "overlap.rs");
example!(verify_sweep, "verify_sweep.rs");

#[test]
fn examples_run() {
    factorize::run_example().expect("factorize");
    bre_groupings::run_example().expect("bre_groupings");
    borders::run_example().expect("borders");
    suffix_sorting::run_example().expect("suffix_sorting");
    lcp_bound::run_example().expect("lcp_bound");
    overlap::run_example().expect("overlap");
    verify_sweep::run_example().expect("verify_sweep");
}
