use std::fs;

use formagraph::catalog::{builtin, builtin_entries, ingest};
use formagraph::{Error, GroupSpec};

fn write_spec(dir: &tempfile::TempDir, name: &str, text: &str) -> std::path::PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

#[test]
fn permutation_file_builds_s3() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_spec(
        &dir,
        "s3.json",
        r#"{"type":"permutation","degree":3,"generators":[[1,0,2],[1,2,0]]}"#,
    );
    let g = ingest(&path).unwrap();
    assert_eq!(g.order(), 6);
    assert_eq!(g.content_hash(), builtin("S3").unwrap().content_hash());
    assert!(matches!(g.recipe(), GroupSpec::Permutation { degree: 3, .. }));
}

#[test]
fn non_bijective_generator_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_spec(
        &dir,
        "bad.json",
        r#"{"type":"permutation","degree":3,"generators":[[0,0,2]]}"#,
    );
    assert!(matches!(ingest(&path), Err(Error::InvalidPermutation(_))));
}

#[test]
fn syntax_errors_carry_a_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_spec(&dir, "broken.json", "{\n  \"type\": \"permutation\",\n  \"degree\": ,\n}");
    match ingest(&path) {
        Err(Error::Parse { line, column, .. }) => {
            assert_eq!(line, 3);
            assert!(column > 0);
        }
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn unknown_fields_are_rejected() {
    let err = GroupSpec::from_json(r#"{"type":"table","table":[[0]],"extra":1}"#).unwrap_err();
    assert!(matches!(err, Error::Parse { .. }));
}

#[test]
fn missing_file_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    assert!(matches!(ingest(&dir.path().join("absent.json")), Err(Error::Io(_))));
}

#[test]
fn semidirect_file_reproduces_t100() {
    // c acts on C5 × C5 by (x, y) ↦ (2x, 3y); index of (x, y) is 5x + y
    let action: Vec<usize> = (0..25).map(|n| (2 * (n / 5) % 5) * 5 + (3 * (n % 5)) % 5).collect();
    let spec = format!(
        r#"{{"type":"semidirect",
            "normal":{{"type":"direct","factors":[{{"type":"builtin","name":"C5"}},{{"type":"builtin","name":"C5"}}]}},
            "acting":{{"type":"builtin","name":"C4"}},
            "action":[{action:?}]}}"#
    );
    let dir = tempfile::tempdir().unwrap();
    let g = ingest(&write_spec(&dir, "t100.json", &spec)).unwrap();
    assert_eq!(g.order(), 100);
    assert_eq!(g.content_hash(), builtin("T100").unwrap().content_hash());
}

#[test]
fn non_automorphism_action_is_rejected() {
    let spec = r#"{"type":"semidirect",
        "normal":{"type":"builtin","name":"C3"},
        "acting":{"type":"builtin","name":"C2"},
        "action":[[1,0,2]]}"#;
    let err = GroupSpec::from_json(spec).unwrap().build().unwrap_err();
    assert!(matches!(err, Error::NotAnAutomorphism { .. }), "{err:?}");
}

#[test]
fn builtin_specs_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for e in builtin_entries().into_iter().filter(|e| e.expected_order <= 200) {
        let g = builtin(&e.name).unwrap();
        assert_eq!(g.order(), e.expected_order, "{}", e.name);
        let path = write_spec(&dir, &format!("{}.json", e.name), &g.recipe().to_json());
        let h = ingest(&path).unwrap();
        assert_eq!(h.content_hash(), g.content_hash(), "{}", e.name);
    }
}

#[test]
fn table_spec_round_trips_a_product() {
    let g = builtin("S3xC2").unwrap();
    let table: Vec<Vec<usize>> = g.elements().map(|x| g.row(x).collect()).collect();
    let h = GroupSpec::Table { table }.build().unwrap();
    assert_eq!(h.content_hash(), g.content_hash());
}
