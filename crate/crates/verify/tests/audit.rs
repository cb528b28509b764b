use std::fs;
use std::path::Path;

use meltdown_verify::audit_no_intrinsics;

fn write(root: &Path, rel: &str, text: &str) {
    let path = root.join(rel);
    fs::create_dir_all(path.parent().unwrap()).unwrap();
    fs::write(path, text).unwrap();
}

#[test]
fn seeded_violation_is_reported_with_location() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "src/lib.rs", "pub mod engine;\n");
    write(
        dir.path(),
        "src/engine.rs",
        "pub fn log(y: f64) -> f64 {\n    let r = y.sqrt();\n    r\n}\n",
    );
    let v = audit_no_intrinsics(dir.path()).unwrap();
    assert_eq!(v.len(), 1, "{v:?}");
    assert!(v[0].file.ends_with("src/engine.rs"));
    assert_eq!(v[0].line, 2);
    assert_eq!(v[0].text, "let r = y.sqrt();");
}

#[test]
fn test_directories_and_cfg_test_are_exempt() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "tests/oracle.rs", "fn f() { 2f64.ln(); }\n");
    write(dir.path(), "benches/b.rs", "fn f() { 2f64.exp(); }\n");
    write(
        dir.path(),
        "src/lib.rs",
        "pub fn f() {}\n\n#[cfg(test)]\nmod tests {\n    #[test]\n    fn t() {\n        assert!(2f64.sqrt() > 1.0);\n    }\n}\n",
    );
    assert!(audit_no_intrinsics(dir.path()).unwrap().is_empty());
}

#[test]
fn clean_tree_and_non_rust_files() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "src/lib.rs",
        "pub fn half(x: f64) -> f64 { x / 2.0 }\n",
    );
    write(dir.path(), "notes.md", "x.sqrt() is banned\n");
    assert!(audit_no_intrinsics(dir.path()).unwrap().is_empty());
}

#[test]
fn missing_root_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    assert!(audit_no_intrinsics(&dir.path().join("absent")).is_err());
}

#[test]
fn workspace_library_sources_are_clean() {
    let crates = Path::new(env!("CARGO_MANIFEST_DIR")).join("..");
    for name in ["core", "cli", "bench"] {
        let v = audit_no_intrinsics(&crates.join(name)).unwrap();
        assert!(v.is_empty(), "{name}: {v:?}");
    }
    // the oracle module is supposed to trip the audit
    assert!(!audit_no_intrinsics(&crates.join("verify/src"))
        .unwrap()
        .is_empty());
}
