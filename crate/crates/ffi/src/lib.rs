//! C ABI for the flatdelta library.
//!
//! Handles are opaque pointers created and freed here; every function
//! returns an [`FdStatus`] and writes results through out-pointers. Counts
//! and entries cross the boundary as `int64_t`, JSON as NUL-terminated
//! strings owned by the library (release them with [`fd_string_free`]).
//! Passing `0` for a `max_candidates` argument selects the default
//! enumeration budget. The C header is generated into
//! `include/flatdelta.h` at build time.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_bigint::BigInt;

use flatdelta::counting::{count_interior_points, count_lattice_points, CountBudget};
use flatdelta::ehrhart::{delta_by_counting, delta_from_box, DeltaVector, FlatPattern};
use flatdelta::error::Error;
use flatdelta::flat::{is_realizable, realize};
use flatdelta::json::{DeltaJson, PairReportJson, SimplexJson};
use flatdelta::polytope::Simplex;
use flatdelta::verify::verify_pair;

/// Result of every C API call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FdStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Arguments were outside the domain of the operation.
    InvalidArgument = 2,
    /// The vertices do not span a full-dimensional simplex.
    Degenerate = 3,
    /// The requested flat pattern has more leading than trailing zeros.
    NotRealizable = 4,
    /// Enumeration exceeded its candidate budget.
    BudgetExceeded = 5,
    /// A string was not valid UTF-8 or not valid JSON for the schema.
    ParseError = 6,
    /// A value does not fit the fixed-width result type.
    Overflow = 7,
    /// An internal invariant failed.
    Internal = 8,
}

/// Opaque simplex handle.
pub struct FdSimplex(Simplex);

/// Opaque delta-vector handle.
pub struct FdDelta(DeltaVector);

fn status_of(e: &Error) -> FdStatus {
    match e {
        Error::Degenerate => FdStatus::Degenerate,
        Error::NotRealizable { .. } => FdStatus::NotRealizable,
        Error::BudgetExceeded { .. } => FdStatus::BudgetExceeded,
        Error::Unrepresentable(_) => FdStatus::Overflow,
        _ => FdStatus::InvalidArgument,
    }
}

fn budget_from(max_candidates: u64) -> CountBudget {
    if max_candidates == 0 {
        CountBudget::default()
    } else {
        CountBudget::new(max_candidates)
    }
}

fn guarded(f: impl FnOnce() -> FdStatus) -> FdStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(FdStatus::Internal)
}

/// # Safety
/// `ptr` must be null or a pointer previously returned through an
/// out-parameter of this library, not yet freed.
unsafe fn write_out<T>(out: *mut T, value: T) -> FdStatus {
    if out.is_null() {
        return FdStatus::NullPointer;
    }
    unsafe { out.write(value) };
    FdStatus::Ok
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, FdStatus> {
    if ptr.is_null() {
        return Err(FdStatus::NullPointer);
    }
    unsafe { CStr::from_ptr(ptr) }
        .to_str()
        .map_err(|_| FdStatus::ParseError)
}

fn into_c_string(text: String) -> Result<*mut c_char, FdStatus> {
    CString::new(text)
        .map(CString::into_raw)
        .map_err(|_| FdStatus::Internal)
}

unsafe fn deref<'a, T>(ptr: *const T) -> Result<&'a T, FdStatus> {
    if ptr.is_null() {
        return Err(FdStatus::NullPointer);
    }
    Ok(unsafe { &*ptr })
}

fn to_i64(value: &BigInt) -> Result<i64, FdStatus> {
    i64::try_from(value).map_err(|_| FdStatus::Overflow)
}

macro_rules! ffi_try {
    ($expr:expr) => {
        match $expr {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

fn ffi_err(e: Error) -> FdStatus {
    status_of(&e)
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string pointer returned by this library, not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn fd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Release a simplex handle. Null is ignored.
///
/// # Safety
/// `s` must be null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fd_simplex_free(s: *mut FdSimplex) {
    if !s.is_null() {
        drop(unsafe { Box::from_raw(s) });
    }
}

/// Release a delta-vector handle. Null is ignored.
///
/// # Safety
/// `d` must be null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fd_delta_free(d: *mut FdDelta) {
    if !d.is_null() {
        drop(unsafe { Box::from_raw(d) });
    }
}

/// Parse a simplex from its JSON form
/// `{"dim": d, "vertices": [[int, ...], ...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fd_simplex_from_json(
    json: *const c_char,
    out: *mut *mut FdSimplex,
) -> FdStatus {
    guarded(|| {
        let text = ffi_try!(unsafe { read_str(json) });
        let wire: SimplexJson = match serde_json::from_str(text) {
            Ok(w) => w,
            Err(_) => return FdStatus::ParseError,
        };
        let simplex = match wire.to_simplex() {
            Ok(s) => s,
            Err(e) => return ffi_err(e),
        };
        unsafe { write_out(out, Box::into_raw(Box::new(FdSimplex(simplex)))) }
    })
}

/// Serialize a simplex to its JSON form.
///
/// # Safety
/// `s` must be a live simplex handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fd_simplex_to_json(
    s: *const FdSimplex,
    out: *mut *mut c_char,
) -> FdStatus {
    guarded(|| {
        let simplex = ffi_try!(unsafe { deref(s) });
        let wire = match SimplexJson::from_simplex(&simplex.0) {
            Ok(w) => w,
            Err(e) => return ffi_err(e),
        };
        let text = match serde_json::to_string(&wire) {
            Ok(t) => t,
            Err(_) => return FdStatus::Internal,
        };
        let raw = ffi_try!(into_c_string(text));
        unsafe { write_out(out, raw) }
    })
}

/// The standard simplex `conv(0, e_1, ..., e_dim)`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fd_simplex_unit(dim: usize, out: *mut *mut FdSimplex) -> FdStatus {
    guarded(|| {
        if dim == 0 {
            return FdStatus::InvalidArgument;
        }
        unsafe { write_out(out, Box::into_raw(Box::new(FdSimplex(Simplex::unit(dim))))) }
    })
}

/// The pyramid over a simplex (appends a zero to its delta-vector).
///
/// # Safety
/// `s` must be a live simplex handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fd_simplex_pyramid(
    s: *const FdSimplex,
    out: *mut *mut FdSimplex,
) -> FdStatus {
    guarded(|| {
        let simplex = ffi_try!(unsafe { deref(s) });
        let pyramid = simplex.0.pyramid();
        unsafe { write_out(out, Box::into_raw(Box::new(FdSimplex(pyramid)))) }
    })
}

/// Dimension of a simplex.
///
/// # Safety
/// `s` must be a live simplex handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fd_simplex_dim(s: *const FdSimplex, out: *mut usize) -> FdStatus {
    guarded(|| {
        let simplex = ffi_try!(unsafe { deref(s) });
        unsafe { write_out(out, simplex.0.dim()) }
    })
}

/// Normalized volume (the absolute edge determinant).
///
/// # Safety
/// `s` must be a live simplex handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fd_simplex_normalized_volume(
    s: *const FdSimplex,
    out: *mut i64,
) -> FdStatus {
    guarded(|| {
        let simplex = ffi_try!(unsafe { deref(s) });
        let volume = ffi_try!(to_i64(&simplex.0.normalized_volume()));
        unsafe { write_out(out, volume) }
    })
}

/// Count lattice points of the `dilation`-th dilate; with `interior` set,
/// only strictly interior points (requires `dilation >= 1`).
///
/// # Safety
/// `s` must be a live simplex handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fd_simplex_count(
    s: *const FdSimplex,
    dilation: u64,
    interior: bool,
    max_candidates: u64,
    out: *mut i64,
) -> FdStatus {
    guarded(|| {
        let simplex = ffi_try!(unsafe { deref(s) });
        if interior && dilation == 0 {
            return FdStatus::InvalidArgument;
        }
        let budget = budget_from(max_candidates);
        let count = if interior {
            count_interior_points(&simplex.0, dilation, &budget)
        } else {
            count_lattice_points(&simplex.0, dilation, &budget)
        };
        let count = match count {
            Ok(c) => c,
            Err(e) => return ffi_err(e),
        };
        let value = ffi_try!(to_i64(&count));
        unsafe { write_out(out, value) }
    })
}

/// Whether the flat pattern `(1, 0^leading, level..., 0^trailing)` is the
/// delta-vector of some lattice polytope.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fd_is_realizable(
    dim: usize,
    leading_zeros: usize,
    trailing_zeros: usize,
    level: u64,
    out: *mut bool,
) -> FdStatus {
    guarded(|| {
        let pattern = match FlatPattern::new(dim, leading_zeros, trailing_zeros, level) {
            Ok(p) => p,
            Err(e) => return ffi_err(e),
        };
        unsafe { write_out(out, is_realizable(&pattern)) }
    })
}

/// Build a simplex realizing the flat pattern; fails with
/// `FD_STATUS_NOT_REALIZABLE` when `leading_zeros > trailing_zeros`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fd_realize_flat(
    dim: usize,
    leading_zeros: usize,
    trailing_zeros: usize,
    level: u64,
    max_candidates: u64,
    out: *mut *mut FdSimplex,
) -> FdStatus {
    guarded(|| {
        let pattern = match FlatPattern::new(dim, leading_zeros, trailing_zeros, level) {
            Ok(p) => p,
            Err(e) => return ffi_err(e),
        };
        match realize(&pattern, &budget_from(max_candidates)) {
            Ok((simplex, _recipe)) => unsafe {
                write_out(out, Box::into_raw(Box::new(FdSimplex(simplex))))
            },
            Err(e) => ffi_err(e),
        }
    })
}

/// Parse a delta-vector from its JSON form `{"d": d, "delta": [1, ...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fd_delta_from_json(
    json: *const c_char,
    out: *mut *mut FdDelta,
) -> FdStatus {
    guarded(|| {
        let text = ffi_try!(unsafe { read_str(json) });
        let wire: DeltaJson = match serde_json::from_str(text) {
            Ok(w) => w,
            Err(_) => return FdStatus::ParseError,
        };
        match wire.to_delta() {
            Ok(delta) => unsafe { write_out(out, Box::into_raw(Box::new(FdDelta(delta)))) },
            Err(e) => ffi_err(e),
        }
    })
}

/// Serialize a delta-vector to its JSON form.
///
/// # Safety
/// `d` must be a live delta handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fd_delta_to_json(d: *const FdDelta, out: *mut *mut c_char) -> FdStatus {
    guarded(|| {
        let delta = ffi_try!(unsafe { deref(d) });
        let wire = match DeltaJson::from_delta(&delta.0) {
            Ok(w) => w,
            Err(e) => return ffi_err(e),
        };
        let text = match serde_json::to_string(&wire) {
            Ok(t) => t,
            Err(_) => return FdStatus::Internal,
        };
        let raw = ffi_try!(into_c_string(text));
        unsafe { write_out(out, raw) }
    })
}

/// Delta-vector by counting dilations `0..=dim`.
///
/// # Safety
/// `s` must be a live simplex handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fd_delta_by_counting(
    s: *const FdSimplex,
    max_candidates: u64,
    out: *mut *mut FdDelta,
) -> FdStatus {
    guarded(|| {
        let simplex = ffi_try!(unsafe { deref(s) });
        match delta_by_counting(&simplex.0, &budget_from(max_candidates)) {
            Ok(delta) => unsafe { write_out(out, Box::into_raw(Box::new(FdDelta(delta)))) },
            Err(e) => ffi_err(e),
        }
    })
}

/// Delta-vector as the degree distribution of the half-open parallelepiped.
///
/// # Safety
/// `s` must be a live simplex handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fd_delta_from_box_points(
    s: *const FdSimplex,
    max_candidates: u64,
    out: *mut *mut FdDelta,
) -> FdStatus {
    guarded(|| {
        let simplex = ffi_try!(unsafe { deref(s) });
        match delta_from_box(&simplex.0, &budget_from(max_candidates)) {
            Ok(delta) => unsafe { write_out(out, Box::into_raw(Box::new(FdDelta(delta)))) },
            Err(e) => ffi_err(e),
        }
    })
}

/// Dimension `d` of a delta-vector (it has `d + 1` entries).
///
/// # Safety
/// `d` must be a live delta handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fd_delta_dim(d: *const FdDelta, out: *mut usize) -> FdStatus {
    guarded(|| {
        let delta = ffi_try!(unsafe { deref(d) });
        unsafe { write_out(out, delta.0.dim()) }
    })
}

/// One entry of a delta-vector.
///
/// # Safety
/// `d` must be a live delta handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fd_delta_entry(
    d: *const FdDelta,
    index: usize,
    out: *mut i64,
) -> FdStatus {
    guarded(|| {
        let delta = ffi_try!(unsafe { deref(d) });
        let Some(entry) = delta.0.entries().get(index) else {
            return FdStatus::InvalidArgument;
        };
        let value = ffi_try!(to_i64(entry));
        unsafe { write_out(out, value) }
    })
}

/// Evaluate the counting polynomial at any integer dilation.
///
/// # Safety
/// `d` must be a live delta handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fd_delta_ehrhart(
    d: *const FdDelta,
    dilation: i64,
    out: *mut i64,
) -> FdStatus {
    guarded(|| {
        let delta = ffi_try!(unsafe { deref(d) });
        let value = ffi_try!(to_i64(&delta.0.ehrhart_at(&BigInt::from(dilation))));
        unsafe { write_out(out, value) }
    })
}

/// Interior count at a positive dilation via reciprocity.
///
/// # Safety
/// `d` must be a live delta handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fd_delta_interior(
    d: *const FdDelta,
    dilation: u64,
    out: *mut i64,
) -> FdStatus {
    guarded(|| {
        let delta = ffi_try!(unsafe { deref(d) });
        if dilation == 0 {
            return FdStatus::InvalidArgument;
        }
        let value = ffi_try!(to_i64(&delta.0.interior_at(dilation)));
        unsafe { write_out(out, value) }
    })
}

/// Check the prefix/suffix inequality. On a violation `out_holds` is set to
/// false and `out_witness` (if non-null) receives the first failing index.
///
/// # Safety
/// `d` must be a live delta handle; `out_holds` must be a valid pointer;
/// `out_witness` may be null.
#[no_mangle]
pub unsafe extern "C" fn fd_delta_stanley_holds(
    d: *const FdDelta,
    out_holds: *mut bool,
    out_witness: *mut usize,
) -> FdStatus {
    guarded(|| {
        let delta = ffi_try!(unsafe { deref(d) });
        match delta.0.stanley_violation() {
            None => unsafe { write_out(out_holds, true) },
            Some(i) => {
                if !out_witness.is_null() {
                    unsafe { out_witness.write(i) };
                }
                unsafe { write_out(out_holds, false) }
            }
        }
    })
}

/// Check the trailing-sum inequality; same contract as
/// [`fd_delta_stanley_holds`].
///
/// # Safety
/// `d` must be a live delta handle; `out_holds` must be a valid pointer;
/// `out_witness` may be null.
#[no_mangle]
pub unsafe extern "C" fn fd_delta_hibi_holds(
    d: *const FdDelta,
    out_holds: *mut bool,
    out_witness: *mut usize,
) -> FdStatus {
    guarded(|| {
        let delta = ffi_try!(unsafe { deref(d) });
        match delta.0.hibi_violation() {
            None => unsafe { write_out(out_holds, true) },
            Some(i) => {
                if !out_witness.is_null() {
                    unsafe { out_witness.write(i) };
                }
                unsafe { write_out(out_holds, false) }
            }
        }
    })
}

/// Recognize the flat shape `(1, 0^k, a, ..., a, 0^l)`. When the vector is
/// flat, `out_is_flat` is set to true and the pattern parameters are
/// written; otherwise only `out_is_flat` is set (to false).
///
/// # Safety
/// `d` must be a live delta handle; `out_is_flat` must be a valid pointer;
/// the parameter out-pointers may be null.
#[no_mangle]
pub unsafe extern "C" fn fd_delta_classify_flat(
    d: *const FdDelta,
    out_leading: *mut usize,
    out_trailing: *mut usize,
    out_level: *mut u64,
    out_is_flat: *mut bool,
) -> FdStatus {
    guarded(|| {
        let delta = ffi_try!(unsafe { deref(d) });
        match delta.0.classify_flat() {
            Some(p) => {
                if !out_leading.is_null() {
                    unsafe { out_leading.write(p.leading_zeros) };
                }
                if !out_trailing.is_null() {
                    unsafe { out_trailing.write(p.trailing_zeros) };
                }
                if !out_level.is_null() {
                    unsafe { out_level.write(p.level) };
                }
                unsafe { write_out(out_is_flat, true) }
            }
            None => unsafe { write_out(out_is_flat, false) },
        }
    })
}

/// Verify by direct counting that two simplices agree in lattice-point
/// counts for dilations `1..=counts_agree` and interior counts for
/// `1..=interiors_agree`, then strictly diverge in both. `out_report_json`
/// (if non-null) receives the full report.
///
/// # Safety
/// `p` and `q` must be live simplex handles; `out_passed` must be a valid
/// pointer; `out_report_json` may be null.
#[no_mangle]
pub unsafe extern "C" fn fd_verify_pair(
    p: *const FdSimplex,
    q: *const FdSimplex,
    counts_agree: usize,
    interiors_agree: usize,
    max_candidates: u64,
    out_passed: *mut bool,
    out_report_json: *mut *mut c_char,
) -> FdStatus {
    guarded(|| {
        let left = ffi_try!(unsafe { deref(p) });
        let right = ffi_try!(unsafe { deref(q) });
        let report = match verify_pair(
            &left.0,
            &right.0,
            counts_agree,
            interiors_agree,
            &budget_from(max_candidates),
        ) {
            Ok(r) => r,
            Err(e) => return ffi_err(e),
        };
        if !out_report_json.is_null() {
            let wire = match PairReportJson::from_report(&report) {
                Ok(w) => w,
                Err(e) => return ffi_err(e),
            };
            let text = match serde_json::to_string(&wire) {
                Ok(t) => t,
                Err(_) => return FdStatus::Internal,
            };
            let raw = ffi_try!(into_c_string(text));
            unsafe { out_report_json.write(raw) };
        }
        unsafe { write_out(out_passed, report.passed) }
    })
}
