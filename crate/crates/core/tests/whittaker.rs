use zastava_core::demazure::{
    build_affine, demazure_character, frozen_conventions, global_weyl_character, resolve_convention,
};
use zastava_core::exactalg::format::{character_text, parse_character};
use zastava_core::fixtures;
use zastava_core::rootdata::{build_folding, WeightVector};
use zastava_core::toda::{eigencheck, lattice_apply, parse_operator, solve_whittaker, WhittakerTable};

#[test]
fn bundled_operator_round_trips() {
    let op = fixtures::a1_toda();
    assert_eq!(op.to_json_string(), fixtures::A1_TODA);
    assert_eq!(parse_operator(&op.to_json_string()).unwrap(), op);
}

#[test]
fn conventions_file_matches_resolution() {
    let frozen = frozen_conventions();
    assert_eq!(frozen.len(), 4);
    for (label, record) in frozen {
        let f = build_folding(label.parse().unwrap());
        assert_eq!(resolve_convention(&f, 3).unwrap(), record, "{label}");
    }
}

#[test]
fn a1_solve_matches_demazure_route() {
    let op = fixtures::a1_toda();
    let f = op.folding();
    let a = build_affine(&f).unwrap();
    let conv = frozen_conventions()["A1"].sign_convention;
    let table = solve_whittaker(&op, 6).unwrap();
    assert_eq!(table.len(), 7);
    for m in 0..=6 {
        let lambda = WeightVector(vec![m]);
        let psi_hat = demazure_character(&a, &f, &lambda, conv).unwrap();
        let global = global_weyl_character(&f, &psi_hat, &lambda);
        let solved = table.get(&[m]).unwrap();
        assert!(solved.rc_equal(&global), "m = {m}: {} vs {}", character_text(&solved), character_text(&global));
    }
}

#[test]
fn lattice_apply_at_origin() {
    let op = fixtures::a1_toda();
    let table = solve_whittaker(&op, 2).unwrap();
    let r = lattice_apply(&op, &table, &WeightVector(vec![0])).unwrap();
    assert!(r.rc_equal(&parse_character("z1^-1 + z1", 1).unwrap()));
}

#[test]
fn eigencheck_box_four_passes() {
    let op = fixtures::a1_toda();
    let table = solve_whittaker(&op, 5).unwrap();
    let report = eigencheck(&op, &table, 4).unwrap();
    assert!(report.passed());
    assert_eq!(report.checked.len(), 5);
}

#[test]
fn eigencheck_needs_the_next_entry() {
    let op = fixtures::a1_toda();
    let table = solve_whittaker(&op, 2).unwrap();
    assert!(eigencheck(&op, &table, 2).is_err());
    let empty = WhittakerTable::new(1, 0);
    assert!(eigencheck(&op, &empty, 0).is_err());
}
