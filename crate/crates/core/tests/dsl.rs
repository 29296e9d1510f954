use poset_tense::dsl::{self, json, Instance};
use poset_tense::fixtures::{example_one, EXAMPLE_ONE_TEXT};
use poset_tense::residuated::ResiduatedPoset;
use poset_tense::TimeFrame;

#[test]
fn example_file_matches_the_fixture() {
    let inst = dsl::parse(EXAMPLE_ONE_TEXT).unwrap();
    let ex = example_one();
    assert_eq!(inst.poset("A").unwrap(), &ex.poset);
    assert_eq!(inst.frame("T").unwrap(), &ex.frame);
    assert_eq!(inst.prop("r").unwrap().values, ex.r);
}

#[test]
fn serialized_text_parses_back_to_the_same_instance() {
    let mut inst = dsl::parse(EXAMPLE_ONE_TEXT).unwrap();
    inst.add_family("B", &["p", "q"]);
    let cube = ResiduatedPoset::boolean_cube(2);
    inst.add_poset("C", cube.base().clone());
    inst.add_residuated("R", "C", cube);
    inst.add_frame("U", TimeFrame::identity(2));
    let text = dsl::serialize(&inst);
    let back = dsl::parse(&text).unwrap();
    assert_eq!(back, inst);
    assert_eq!(dsl::serialize(&back), text);
}

#[test]
fn json_mirrors_the_text_form() {
    let inst = dsl::parse(EXAMPLE_ONE_TEXT).unwrap();
    let j = json::to_json(&inst);
    assert_eq!(j.posets[0].elements.len(), 9);
    assert_eq!(j.frames[0].rel.len(), 6);
    assert_eq!(j.props[2].values, ["a", "b", "b"]);
    let v: serde_json::Value = serde_json::from_str(&json::to_json_string(&inst)).unwrap();
    assert_eq!(v["posets"][0]["involution"].as_array().unwrap().len(), 9);
}

#[test]
fn errors_carry_line_and_column() {
    let err = dsl::parse("poset A {\n  elements: 0 1;\n  covers: 0<2;\n}\n").unwrap_err();
    assert_eq!(err.location().line, 3);
    assert!(err.is_syntax());
    let empty = dsl::parse("").unwrap();
    assert_eq!(empty, Instance::new());
}
