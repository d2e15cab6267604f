use nilorbits::render::verify_figures;

#[test]
fn classical_figures_match_fixtures() {
    let r = verify_figures().unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(r.checked, 16);
}
