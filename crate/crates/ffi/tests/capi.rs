use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use flagorbits_ffi::*;

fn parse(s: &str) -> *mut FoSignature {
    let text = CString::new(s).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { fo_signature_parse(text.as_ptr(), &mut out) },
        FoStatus::Ok
    );
    out
}

fn last_error() -> String {
    let p = fo_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn classify_round_trip() {
    let sigs = [parse("A:1,inf"), parse("A:4,inf,7"), parse("A:inf,inf,2")];
    let ptrs: Vec<*const FoSignature> = sigs.iter().map(|p| *p as *const _).collect();
    let mut v = ptr::null_mut();
    let mut large = false;
    let mut finite = false;
    let mut json = ptr::null_mut();
    unsafe {
        assert_eq!(fo_signature_is_large(sigs[0], &mut large), FoStatus::Ok);
        assert!(large);
        assert_eq!(fo_classify(ptrs.as_ptr(), ptrs.len(), &mut v), FoStatus::Ok);
        assert_eq!(fo_verdict_is_finite(v, &mut finite), FoStatus::Ok);
        assert!(finite);
        assert_eq!(fo_verdict_to_json(v, &mut json), FoStatus::Ok);
        assert_eq!(
            CStr::from_ptr(json).to_str().unwrap(),
            r#"{"decision":"finite","witness":{"row":"GL-5","perm":[0,1,2]}}"#
        );
        fo_string_free(json);
        fo_verdict_free(v);
        for s in sigs {
            fo_signature_free(s);
        }
    }
    assert!(fo_last_error().is_null());
}

#[test]
fn infinite_verdict() {
    let sigs = [parse("C:inf,inf"), parse("C:inf,inf")];
    let ptrs: Vec<*const FoSignature> = sigs.iter().map(|p| *p as *const _).collect();
    let mut v = ptr::null_mut();
    let mut finite = true;
    unsafe {
        assert_eq!(fo_classify(ptrs.as_ptr(), 2, &mut v), FoStatus::Ok);
        assert_eq!(fo_verdict_is_finite(v, &mut finite), FoStatus::Ok);
        assert!(!finite);
        fo_verdict_free(v);
        sigs.into_iter().for_each(|s| fo_signature_free(s));
    }
}

#[test]
fn mixed_types_are_rejected() {
    let sigs = [parse("A:1,inf"), parse("C:1,inf,1")];
    let ptrs: Vec<*const FoSignature> = sigs.iter().map(|p| *p as *const _).collect();
    let mut v = ptr::null_mut();
    unsafe {
        assert_eq!(
            fo_classify(ptrs.as_ptr(), 2, &mut v),
            FoStatus::InvalidArgument
        );
        assert!(v.is_null());
        sigs.into_iter().for_each(|s| fo_signature_free(s));
    }
    assert!(!last_error().is_empty());
}

#[test]
fn parse_errors() {
    let mut out = ptr::null_mut();
    let bad = CString::new("C:0,inf").unwrap();
    unsafe {
        assert_eq!(
            fo_signature_parse(bad.as_ptr(), &mut out),
            FoStatus::InvalidArgument
        );
        assert!(out.is_null());
        assert_eq!(
            fo_signature_parse(ptr::null(), &mut out),
            FoStatus::NullPointer
        );
        let not_utf8 = [0xffu8, 0];
        assert_eq!(
            fo_signature_parse(not_utf8.as_ptr().cast(), &mut out),
            FoStatus::InvalidUtf8
        );
        fo_signature_free(ptr::null_mut());
    }
    assert!(last_error().contains("text"));
}

#[test]
fn count_double() {
    let c = [1u32, 3];
    let d = [2u32, 2];
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(
            fo_count_double(c.as_ptr(), 2, d.as_ptr(), 2, &mut out),
            FoStatus::Ok
        );
        assert_eq!(CStr::from_ptr(out).to_str().unwrap(), "2");
        fo_string_free(out);
        assert_eq!(
            fo_count_double(c.as_ptr(), 2, d.as_ptr(), 1, &mut out),
            FoStatus::InvalidArgument
        );
    }
}

#[test]
fn enumerate_orbits() {
    let dims = [1usize, 2, 1, 2];
    let lens = [2usize, 2];
    let (mut orbits, mut points) = (0u64, 0u64);
    unsafe {
        let st = fo_enumerate_orbits(
            b'A' as _,
            dims.as_ptr(),
            lens.as_ptr(),
            2,
            2,
            1000,
            &mut orbits,
            &mut points,
        );
        assert_eq!(st, FoStatus::Ok);
        assert_eq!((orbits, points), (2, 49));
        let st = fo_enumerate_orbits(
            b'A' as _,
            dims.as_ptr(),
            lens.as_ptr(),
            2,
            2,
            10,
            &mut orbits,
            &mut points,
        );
        assert_eq!(st, FoStatus::BudgetExceeded);
        let st = fo_enumerate_orbits(
            b'A' as _,
            dims.as_ptr(),
            lens.as_ptr(),
            2,
            7,
            1000,
            &mut orbits,
            &mut points,
        );
        assert_eq!(st, FoStatus::InvalidArgument);
    }
}

fn target_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_the_header() {
    let lib = target_dir().join("libflagorbits_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler or static library");
        return;
    }
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("capi_smoke");
    let status = Command::new("cc")
        .arg(root.join("tests/smoke.c"))
        .arg("-I")
        .arg(root.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout), "finite 2 49\n");
}
