use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use berger_lab_ffi::*;

fn last_error() -> String {
    let p = bl_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { bl_string_free(p) };
    s
}

#[test]
fn handles_round_trip() {
    unsafe {
        let mut space = ptr::null_mut();
        assert_eq!(bl_space_new(1, 2, 1, &mut space), BlStatus::Ok);
        let mut n = 0usize;
        assert_eq!(bl_space_real_dim(space, &mut n), BlStatus::Ok);
        assert_eq!(n, 12);

        let name = CString::new("sp1+sp_w").unwrap();
        let mut alg = ptr::null_mut();
        assert_eq!(bl_algebra_new(space, name.as_ptr(), &mut alg), BlStatus::Ok);
        assert_eq!(bl_algebra_dim(alg, &mut n), BlStatus::Ok);
        assert_eq!(n, 17);

        let mut curv = ptr::null_mut();
        assert_eq!(bl_curvature_space_new(alg, &mut curv), BlStatus::Ok);
        assert_eq!(bl_curvature_space_dim(curv, &mut n), BlStatus::Ok);
        assert_eq!(n, 43);

        let mut json = ptr::null_mut();
        assert_eq!(bl_curvature_space_to_json(curv, &mut json), BlStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["algebra"], "sp1+sp_w");
        assert_eq!(v["dim"], 43);
        assert_eq!(v["basis"].as_array().unwrap().len(), 43);

        bl_curvature_space_free(curv);
        bl_algebra_free(alg);
        bl_space_free(space);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut space = ptr::null_mut();
        assert_eq!(bl_space_new(1, 1, 2, &mut space), BlStatus::InvalidSignature);
        assert!(space.is_null());
        assert!(last_error().contains("isotropic dimension"));

        assert_eq!(bl_space_new(1, 1, 0, ptr::null_mut()), BlStatus::NullPointer);

        assert_eq!(bl_space_new(1, 1, 0, &mut space), BlStatus::Ok);
        let mut alg = ptr::null_mut();
        let h0 = CString::new("h0").unwrap();
        // h0 needs the split space r = s = t.
        assert_eq!(bl_algebra_new(space, h0.as_ptr(), &mut alg), BlStatus::InvalidSignature);
        let sp = CString::new("sp").unwrap();
        assert_eq!(bl_algebra_new(space, sp.as_ptr(), &mut alg), BlStatus::Ok);
        let (mut a, mut b) = (0usize, 0usize);
        assert_eq!(bl_prolongation_dims(alg, &mut a, &mut b), BlStatus::NoIsotropicSubspace);
        bl_algebra_free(alg);
        bl_space_free(space);

        assert_eq!(bl_space_new(1, 1, 1, &mut space), BlStatus::Ok);
        assert_eq!(bl_algebra_new(space, sp.as_ptr(), &mut alg), BlStatus::Ok);
        assert_eq!(bl_prolongation_dims(alg, &mut a, &mut b), BlStatus::DoesNotPreserve);
        assert_eq!(bl_algebra_dim(ptr::null(), &mut a), BlStatus::NullPointer);
        bl_algebra_free(alg);
        bl_space_free(space);

        // Freeing NULL is a no-op.
        bl_space_free(ptr::null_mut());
        bl_string_free(ptr::null_mut());
    }
}

#[test]
fn verify_paper_report() {
    unsafe {
        let mut json = ptr::null_mut();
        let mut all = true;
        assert_eq!(bl_verify_paper_json(3, &mut json, &mut all), BlStatus::InvalidArgument);
        assert_eq!(bl_verify_paper_json(1, &mut json, &mut all), BlStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["checks"].as_array().unwrap().len(), 12);
        // P4's stated scalar value is not reproduced.
        assert!(!all);
        assert_eq!(v["summary"]["fail"], 1);
    }
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(bl_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

/// Compiles `tests/c/smoke.c` against the generated header and the static
/// library. Skipped when no C compiler or static library is available.
#[test]
fn c_program_links_against_header() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = manifest.join("include/berger_lab.h");
    assert!(header.exists(), "header is generated by the build script");
    // target/<profile>/deps/abi-<hash> -> target/<profile>
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libberger_lab_ffi.a");
    if !lib.exists() {
        eprintln!("skipping: {} not built", lib.display());
        return;
    }
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let dir = tempfile::tempdir().unwrap();
    let bin = dir.path().join("smoke");
    let status = Command::new(&cc)
        .arg("-std=c11")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status();
    match status {
        Err(e) => eprintln!("skipping: cannot run {cc}: {e}"),
        Ok(s) => {
            assert!(s.success(), "C compilation failed");
            let out = Command::new(&bin).output().unwrap();
            assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
            assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok "));
        }
    }
}
