//! C ABI for `berger_lab`.
//!
//! Objects cross the boundary as opaque handles created by `bl_*_new` and
//! released by the matching `bl_*_free`. Every fallible function returns a
//! [`BlStatus`]; on failure a message is available from [`bl_last_error`]
//! until the next failing call on the same thread. Strings returned through
//! out-parameters are owned by the caller and released with
//! [`bl_string_free`]. Panics never cross the boundary; they are reported
//! as [`BlStatus::Internal`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use berger_lab::berger::BergerReport;
use berger_lab::context::Context;
use berger_lab::curvature::{bianchi_kernel, CurvatureSpace};
use berger_lab::harness::{run_suite, SuiteOptions};
use berger_lab::liealg::{build_algebra, LieAlgebra};
use berger_lab::prolong::{first_prolongation, second_prolongation, LinearAlgebra};
use berger_lab::quatspace::QuaternionicSpace;
use berger_lab::Error;

/// Result code of every fallible call.
#[repr(i32)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidSignature = 3,
    UnknownAlgebra = 4,
    NoIsotropicSubspace = 5,
    DoesNotPreserve = 6,
    Internal = 7,
}

/// A pseudo-quaternionic-Hermitian space `ℍ^{r,s}` with Witt index `t`.
pub struct BlSpace {
    inner: Arc<QuaternionicSpace>,
}

/// A registered matrix Lie algebra on a space.
pub struct BlAlgebra {
    inner: Arc<LieAlgebra>,
}

/// The space of algebraic curvature tensors of an algebra.
pub struct BlCurvatureSpace {
    inner: CurvatureSpace,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

type Outcome = Result<(), (BlStatus, String)>;

fn from_error(e: Error) -> (BlStatus, String) {
    let status = match e {
        Error::InvalidSignature(_) => BlStatus::InvalidSignature,
        Error::UnknownAlgebra(_) => BlStatus::UnknownAlgebra,
        Error::NoIsotropicSubspace(_) => BlStatus::NoIsotropicSubspace,
        Error::DoesNotPreserve => BlStatus::DoesNotPreserve,
        _ => BlStatus::Internal,
    };
    (status, e.to_string())
}

fn null(what: &str) -> (BlStatus, String) {
    (BlStatus::NullPointer, format!("{what} is NULL"))
}

fn guard(f: impl FnOnce() -> Outcome) -> BlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BlStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            BlStatus::Internal
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (BlStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Outcome {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON has no NUL bytes").into_raw()
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn bl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn bl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string obtained from this library that has not
/// been freed.
#[no_mangle]
pub unsafe extern "C" fn bl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates `ℍ^{r,s}` with Witt index `t ≤ min(r, s)`.
///
/// # Safety
/// `out` must be NULL or valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn bl_space_new(r: usize, s: usize, t: usize, out: *mut *mut BlSpace) -> BlStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let inner = Arc::new(QuaternionicSpace::new(r, s, t).map_err(from_error)?);
        write_out(out, Box::into_raw(Box::new(BlSpace { inner })), "out")
    })
}

/// # Safety
/// `space` must be NULL or a handle from [`bl_space_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bl_space_free(space: *mut BlSpace) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

/// Real dimension `4(r + s)`.
///
/// # Safety
/// `space` must be a live handle; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn bl_space_real_dim(space: *const BlSpace, out: *mut usize) -> BlStatus {
    guard(|| {
        let space = deref(space, "space")?;
        write_out(out, space.inner.real_dim(), "out")
    })
}

/// Builds a registered algebra (`sp`, `sp_w`, `sp1`, `glq`, `h0`,
/// `sp1+sp`, `sp1+sp_w`) on a space.
///
/// # Safety
/// `space` must be a live handle, `name` a NUL-terminated string and
/// `out` valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn bl_algebra_new(
    space: *const BlSpace,
    name: *const c_char,
    out: *mut *mut BlAlgebra,
) -> BlStatus {
    guard(|| {
        let space = deref(space, "space")?;
        if name.is_null() {
            return Err(null("name"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let name = CStr::from_ptr(name)
            .to_str()
            .map_err(|_| (BlStatus::InvalidArgument, "algebra name is not UTF-8".to_string()))?;
        let inner = Arc::new(build_algebra(name, &space.inner).map_err(from_error)?);
        write_out(out, Box::into_raw(Box::new(BlAlgebra { inner })), "out")
    })
}

/// # Safety
/// `algebra` must be NULL or a handle from [`bl_algebra_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bl_algebra_free(algebra: *mut BlAlgebra) {
    if !algebra.is_null() {
        drop(Box::from_raw(algebra));
    }
}

/// # Safety
/// `algebra` must be a live handle; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn bl_algebra_dim(algebra: *const BlAlgebra, out: *mut usize) -> BlStatus {
    guard(|| {
        let algebra = deref(algebra, "algebra")?;
        write_out(out, algebra.inner.dim(), "out")
    })
}

/// Dimensions of the first and second prolongations of the algebra
/// restricted to the isotropic subspace `W`.
///
/// # Safety
/// `algebra` must be a live handle; `first` and `second` must be valid for
/// writing.
#[no_mangle]
pub unsafe extern "C" fn bl_prolongation_dims(
    algebra: *const BlAlgebra,
    first: *mut usize,
    second: *mut usize,
) -> BlStatus {
    guard(|| {
        let algebra = deref(algebra, "algebra")?;
        if first.is_null() || second.is_null() {
            return Err(null("output pointer"));
        }
        let w = algebra.inner.space().isotropic_subspace_w().map_err(from_error)?;
        let lin = LinearAlgebra::restricted(&algebra.inner, &w).map_err(from_error)?;
        let p1 = first_prolongation(&lin);
        let p2 = second_prolongation(&lin, &p1);
        write_out(first, p1.dim(), "first")?;
        write_out(second, p2.dim(), "second")
    })
}

/// Computes the space of algebraic curvature tensors of `algebra`.
///
/// # Safety
/// `algebra` must be a live handle; `out` must be valid for writing one
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn bl_curvature_space_new(
    algebra: *const BlAlgebra,
    out: *mut *mut BlCurvatureSpace,
) -> BlStatus {
    guard(|| {
        let algebra = deref(algebra, "algebra")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let inner = bianchi_kernel(&algebra.inner);
        write_out(out, Box::into_raw(Box::new(BlCurvatureSpace { inner })), "out")
    })
}

/// # Safety
/// `space` must be NULL or a handle from [`bl_curvature_space_new`] not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn bl_curvature_space_free(space: *mut BlCurvatureSpace) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

/// # Safety
/// `space` must be a live handle; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn bl_curvature_space_dim(space: *const BlCurvatureSpace, out: *mut usize) -> BlStatus {
    guard(|| {
        let space = deref(space, "space")?;
        write_out(out, space.inner.dim(), "out")
    })
}

/// The space as JSON `{algebra, dim, basis}` with rationals as strings.
/// Free the result with [`bl_string_free`].
///
/// # Safety
/// `space` must be a live handle; `out` must be valid for writing one
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn bl_curvature_space_to_json(space: *const BlCurvatureSpace, out: *mut *mut c_char) -> BlStatus {
    guard(|| {
        let space = deref(space, "space")?;
        let json = serde_json::to_string(&space.inner.to_record()).map_err(|e| (BlStatus::Internal, e.to_string()))?;
        write_out(out, to_c_string(json), "out")
    })
}

/// Berger closure report of the curvature space's algebra, as JSON.
/// Free the result with [`bl_string_free`].
///
/// # Safety
/// `space` must be a live handle; `out` must be valid for writing one
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn bl_berger_report_json(space: *const BlCurvatureSpace, out: *mut *mut c_char) -> BlStatus {
    guard(|| {
        let space = deref(space, "space")?;
        let report = BergerReport::of(&space.inner);
        let json = serde_json::to_string(&report).map_err(|e| (BlStatus::Internal, e.to_string()))?;
        write_out(out, to_c_string(json), "out")
    })
}

/// Runs the verification suite at `tier` (1 or 2) and returns the JSON
/// report. `all_passed` receives whether every check passed; failing checks
/// are not an error status.
///
/// # Safety
/// `out` must be valid for writing one pointer; `all_passed` must be NULL or
/// valid for writing.
#[no_mangle]
pub unsafe extern "C" fn bl_verify_paper_json(tier: u8, out: *mut *mut c_char, all_passed: *mut bool) -> BlStatus {
    guard(|| {
        if !(1..=2).contains(&tier) {
            return Err((BlStatus::InvalidArgument, format!("tier must be 1 or 2, got {tier}")));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let opts = SuiteOptions {
            tier,
            ..SuiteOptions::default()
        };
        let report = run_suite(&mut Context::new(), &opts).map_err(from_error)?;
        if !all_passed.is_null() {
            all_passed.write(report.all_passed());
        }
        let json = serde_json::to_string_pretty(&report).map_err(|e| (BlStatus::Internal, e.to_string()))?;
        write_out(out, to_c_string(json), "out")
    })
}
