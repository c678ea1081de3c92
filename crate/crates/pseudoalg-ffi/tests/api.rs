//! The C interface, exercised from Rust and from a small C program.

use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use pseudoalg_ffi::*;

const VIRASORO: &str = "algebra virasoro\nrank 1\nbracket e0 e0 : e0 <- s|1 - 1|s\n";

fn parse(text: &str) -> (PaStatus, *mut PaAlgebra) {
    let c = CString::new(text).unwrap();
    let mut a = ptr::null_mut();
    let st = unsafe { pa_algebra_parse(c.as_ptr(), &mut a) };
    (st, a)
}

fn last_error() -> String {
    let p = pa_last_error();
    assert!(!p.is_null(), "an error message is set");
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { pa_string_free(p) };
    s
}

#[test]
fn parse_check_and_render() {
    let (st, a) = parse(VIRASORO);
    assert_eq!(st, PaStatus::Ok);
    assert!(pa_last_error().is_null());
    unsafe {
        assert_eq!(pa_algebra_rank(a), 1);
        let (mut skew, mut jac) = (-1, -1);
        assert_eq!(pa_algebra_check(a, &mut skew, &mut jac), PaStatus::Ok);
        assert_eq!((skew, jac), (1, 1));
        let mut cls = PaClassification::NotLeibniz;
        assert_eq!(pa_algebra_classify(a, &mut cls), PaStatus::Ok);
        assert_eq!(cls, PaClassification::Lie);

        let mut out = ptr::null_mut();
        assert_eq!(pa_algebra_to_lambda(a, PaSignConvention::Canonical as i32, 0, &mut out), PaStatus::Ok);
        assert!(take_string(out).contains("[e0 _λ e0] = (2λ - ∂) e0"));
        assert_eq!(pa_algebra_to_lambda(a, PaSignConvention::Reverse as i32, 1, &mut out), PaStatus::Ok);
        assert!(take_string(out).contains("paper-reverse"));

        assert_eq!(pa_algebra_print(a, &mut out), PaStatus::Ok);
        let text = take_string(out);
        let (st, b) = parse(&text);
        assert_eq!(st, PaStatus::Ok);
        assert_eq!(pa_algebra_print(b, &mut out), PaStatus::Ok);
        assert_eq!(take_string(out), text);
        pa_algebra_free(b);
        pa_algebra_free(a);
    }
}

#[test]
fn catalog_families() {
    let id = CString::new("mtype-B").unwrap();
    let params = CString::new("lambda1=1/2; kappa1=0\nw01=1;a=0").unwrap();
    let mut a = ptr::null_mut();
    unsafe {
        assert_eq!(pa_algebra_from_family(id.as_ptr(), params.as_ptr(), &mut a), PaStatus::Ok);
        assert_eq!(pa_algebra_rank(a), 3);
        let mut cls = PaClassification::NotLeibniz;
        assert_eq!(pa_algebra_classify(a, &mut cls), PaStatus::Ok);
        assert_eq!(cls, PaClassification::Lie);
        pa_algebra_free(a);

        let bad = CString::new("no-such-family").unwrap();
        assert_eq!(pa_algebra_from_family(bad.as_ptr(), ptr::null(), &mut a), PaStatus::Catalog);
        assert!(a.is_null());
        assert!(last_error().contains("no-such-family"));

        let missing = CString::new("lambda1=1/2").unwrap();
        assert_eq!(pa_algebra_from_family(id.as_ptr(), missing.as_ptr(), &mut a), PaStatus::Catalog);
        assert!(last_error().contains("missing parameter"));
    }
}

#[test]
fn errors_are_reported_not_raised() {
    let (st, a) = parse("algebra x\nrank 1\nbracket e0 e0 : e0 <- s|\n");
    assert_eq!(st, PaStatus::Parse);
    assert!(a.is_null());
    assert!(last_error().contains("line 3"));

    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(pa_algebra_parse(ptr::null(), &mut a), PaStatus::NullArgument);
        let bytes = [0xffu8, 0];
        assert_eq!(pa_algebra_parse(bytes.as_ptr().cast(), &mut a), PaStatus::InvalidUtf8);
        let c = CString::new(VIRASORO).unwrap();
        assert_eq!(pa_algebra_parse(c.as_ptr(), ptr::null_mut()), PaStatus::NullArgument);

        let mut cls = PaClassification::Lie;
        assert_eq!(pa_algebra_classify(ptr::null(), &mut cls), PaStatus::NullArgument);
        assert_eq!(pa_algebra_check(ptr::null(), ptr::null_mut(), ptr::null_mut()), PaStatus::NullArgument);
        assert_eq!(pa_algebra_rank(ptr::null()), 0);

        let (_, v) = parse(VIRASORO);
        let mut out = ptr::null_mut();
        assert_eq!(pa_algebra_to_lambda(v, 7, 0, &mut out), PaStatus::InvalidArgument);
        assert!(out.is_null());
        assert!(last_error().contains("sign convention"));
        pa_algebra_free(v);
        pa_algebra_free(ptr::null_mut());
        pa_string_free(ptr::null_mut());
    }
    let version = unsafe { CStr::from_ptr(pa_version()) }.to_str().unwrap();
    assert_eq!(version, env!("CARGO_PKG_VERSION"));
}

/// Directory holding the built `libpseudoalg_ffi` artifacts.
fn artifact_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_program_links_and_runs() {
    let lib = artifact_dir().join("libpseudoalg_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("static library or C compiler unavailable; skipping");
        return;
    }
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let tmp = std::env::temp_dir().join(format!("pseudoalg-ffi-check-{}", std::process::id()));
    let status = Command::new("cc")
        .arg(dir.join("examples/check.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&tmp)
        .status()
        .unwrap();
    assert!(status.success(), "C example failed to build");

    let pa = dir.join("../pseudoalg/data/examples/virasoro.pa");
    let out = Command::new(&tmp).arg(&pa).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("rank 1, lie\n"), "{text}");
    assert!(text.contains("(2*lam - d) e0"), "{text}");

    let out = Command::new(&tmp).args(["--family", "nope", ""]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error 4"));
    let _ = std::fs::remove_file(&tmp);
}
