//! C ABI over the tpnf library.
//!
//! Algebras travel as opaque handles; structured results travel as JSON
//! strings with the same schemas the `tpnf` CLI prints. Every fallible
//! function returns a [`TpnfStatus`]; on failure the thread-local message
//! from [`tpnf_last_error_message`] describes what went wrong. Strings
//! returned through `char **` out-parameters are owned by the library and
//! must be released with [`tpnf_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use tpnf::classify::{are_isomorphic, canonical_form, classification_table, shift_reduce};
use tpnf::doc::{
    parse_alpha_csv, AlgebraDocument, CanonicalDoc, ChecksDoc, IsomorphismDocument, ReportDocument,
    SolutionDoc, TableDocument, TranscriptDoc,
};
use tpnf::error::Error;
use tpnf::identities::{check_all, is_poisson, is_transposed_poisson};
use tpnf::nullfiliform::build_mu0;
use tpnf::tensor::{AlgebraPair, BilinearMap};
use tpnf::tp::{build_tp_bracket, solve_bracket_space, SolveMode};

/// Result of every fallible call in this interface.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TpnfStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The input was rejected (bad dimension, index, rational literal, ...).
    InvalidInput = 3,
    /// A bracket was not a member of the parameterized family.
    NotInFamily = 4,
    /// An internal invariant failed; please report.
    Internal = 5,
}

/// Identity set to require in [`tpnf_algebra_verify`].
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TpnfExpect {
    /// Report the checks without requiring any of them.
    None = 0,
    /// Require the Poisson axioms (Leibniz compatibility).
    Poisson = 1,
    /// Require the transposed Poisson axioms.
    Transposed = 2,
}

/// Compatibility identity for [`tpnf_solve`].
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TpnfSolveMode {
    Transposed = 0,
    Poisson = 1,
}

/// Opaque algebra handle: a product tensor plus an optional bracket.
pub struct TpnfAlgebra {
    dot: BilinearMap,
    bracket: Option<BilinearMap>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(err: &Error) -> TpnfStatus {
    match err {
        Error::NotInFamily { .. } => TpnfStatus::NotInFamily,
        _ => TpnfStatus::InvalidInput,
    }
}

fn fail(err: &Error) -> TpnfStatus {
    set_error(&err.to_string());
    status_of(err)
}

/// Run a closure at the FFI boundary, converting panics into a status.
fn guarded<F: FnOnce() -> TpnfStatus>(f: F) -> TpnfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            TpnfStatus::Internal
        }
    }
}

/// # Safety
/// `s` must be null or a valid nul-terminated string.
unsafe fn utf8_arg<'a>(s: *const c_char) -> Result<&'a str, TpnfStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(TpnfStatus::NullArgument);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        TpnfStatus::InvalidUtf8
    })
}

fn write_string(out: *mut *mut c_char, text: String) -> TpnfStatus {
    let sanitized = text.replace('\0', " ");
    match CString::new(sanitized) {
        Ok(cstring) => {
            unsafe { *out = cstring.into_raw() };
            TpnfStatus::Ok
        }
        Err(_) => {
            set_error("result contained an interior nul byte");
            TpnfStatus::Internal
        }
    }
}

fn write_handle(out: *mut *mut TpnfAlgebra, algebra: TpnfAlgebra) -> TpnfStatus {
    unsafe { *out = Box::into_raw(Box::new(algebra)) };
    TpnfStatus::Ok
}

/// Message describing the most recent failure on this thread. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn tpnf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must have been returned by a `tpnf_*` function and not freed yet.
#[no_mangle]
pub unsafe extern "C" fn tpnf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Release an algebra handle. Null is ignored.
///
/// # Safety
/// `alg` must have been returned by this library and not freed yet.
#[no_mangle]
pub unsafe extern "C" fn tpnf_algebra_free(alg: *mut TpnfAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Construct the null-filiform product algebra of dimension `dim`
/// (1..=64), without a bracket.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tpnf_algebra_mu0(dim: usize, out: *mut *mut TpnfAlgebra) -> TpnfStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null out pointer");
            return TpnfStatus::NullArgument;
        }
        match build_mu0(dim) {
            Ok(dot) => write_handle(out, TpnfAlgebra { dot, bracket: None }),
            Err(e) => fail(&e),
        }
    })
}

/// Construct the algebra together with the family bracket for the
/// comma-separated parameters `alpha_2..alpha_n` (e.g. `"1,0,-2/3"`).
///
/// # Safety
/// `alpha_csv` must be a valid nul-terminated string and `out` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn tpnf_algebra_tp(
    dim: usize,
    alpha_csv: *const c_char,
    out: *mut *mut TpnfAlgebra,
) -> TpnfStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null out pointer");
            return TpnfStatus::NullArgument;
        }
        let text = match utf8_arg(alpha_csv) {
            Ok(t) => t,
            Err(status) => return status,
        };
        let params = match parse_alpha_csv(dim, text, "alpha") {
            Ok(p) => p,
            Err(e) => return fail(&e),
        };
        let dot = match build_mu0(dim) {
            Ok(d) => d,
            Err(e) => return fail(&e),
        };
        let bracket = build_tp_bracket(&params);
        write_handle(
            out,
            TpnfAlgebra {
                dot,
                bracket: Some(bracket),
            },
        )
    })
}

/// Parse an algebra document (the CLI's JSON schema) into a handle.
///
/// # Safety
/// `json` must be a valid nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tpnf_algebra_from_json(
    json: *const c_char,
    out: *mut *mut TpnfAlgebra,
) -> TpnfStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null out pointer");
            return TpnfStatus::NullArgument;
        }
        let text = match utf8_arg(json) {
            Ok(t) => t,
            Err(status) => return status,
        };
        let doc = match AlgebraDocument::parse(text) {
            Ok(d) => d,
            Err(e) => return fail(&e),
        };
        match doc.to_maps() {
            Ok((dot, bracket)) => write_handle(out, TpnfAlgebra { dot, bracket }),
            Err(e) => fail(&e),
        }
    })
}

/// Serialize a handle back to its JSON document.
///
/// # Safety
/// `alg` must be a live handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tpnf_algebra_to_json(
    alg: *const TpnfAlgebra,
    out_json: *mut *mut c_char,
) -> TpnfStatus {
    guarded(|| {
        if alg.is_null() || out_json.is_null() {
            set_error("null argument");
            return TpnfStatus::NullArgument;
        }
        let alg = &*alg;
        let doc = AlgebraDocument::from_parts(&alg.dot, alg.bracket.as_ref(), None);
        write_string(out_json, doc.emit())
    })
}

/// Dimension of the underlying space; 0 for a null handle.
///
/// # Safety
/// `alg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tpnf_algebra_dim(alg: *const TpnfAlgebra) -> usize {
    if alg.is_null() {
        return 0;
    }
    (*alg).dot.dim()
}

/// Run the identity checks on a handle (a missing bracket counts as the
/// zero bracket). `out_holds` receives whether the expectation holds;
/// `out_json` (optional, may be null) receives the full checks report.
///
/// # Safety
/// `alg` must be a live handle; `out_holds` must be valid; `out_json`
/// must be null or valid.
#[no_mangle]
pub unsafe extern "C" fn tpnf_algebra_verify(
    alg: *const TpnfAlgebra,
    expect: TpnfExpect,
    out_holds: *mut bool,
    out_json: *mut *mut c_char,
) -> TpnfStatus {
    guarded(|| {
        if alg.is_null() || out_holds.is_null() {
            set_error("null argument");
            return TpnfStatus::NullArgument;
        }
        let alg = &*alg;
        let bracket = match &alg.bracket {
            Some(b) => b.clone(),
            None => match BilinearMap::zero(alg.dot.dim()) {
                Ok(z) => z,
                Err(e) => return fail(&e),
            },
        };
        let pair = match AlgebraPair::new(alg.dot.clone(), bracket) {
            Ok(p) => p,
            Err(e) => return fail(&e),
        };
        let holds = match expect {
            TpnfExpect::None => true,
            TpnfExpect::Poisson => is_poisson(&pair),
            TpnfExpect::Transposed => is_transposed_poisson(&pair),
        };
        *out_holds = holds;
        if !out_json.is_null() {
            let report = ReportDocument {
                checks: Some(ChecksDoc::from(&check_all(&pair))),
                ..ReportDocument::default()
            };
            return write_string(out_json, report.emit());
        }
        TpnfStatus::Ok
    })
}

/// Solve for all compatible antisymmetric brackets in dimension `dim`
/// (2..=10). The result JSON matches the CLI's `solve` output.
///
/// # Safety
/// `out_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tpnf_solve(
    dim: usize,
    mode: TpnfSolveMode,
    out_json: *mut *mut c_char,
) -> TpnfStatus {
    guarded(|| {
        if out_json.is_null() {
            set_error("null out pointer");
            return TpnfStatus::NullArgument;
        }
        let mode = match mode {
            TpnfSolveMode::Transposed => SolveMode::Transposed,
            TpnfSolveMode::Poisson => SolveMode::Poisson,
        };
        match solve_bracket_space(dim, mode) {
            Ok(sol) => {
                let report = ReportDocument {
                    solution: Some(SolutionDoc::from(&sol)),
                    ..ReportDocument::default()
                };
                write_string(out_json, report.emit())
            }
            Err(e) => fail(&e),
        }
    })
}

/// Canonical form and reduction transcript for the comma-separated family
/// parameters. The result JSON matches the CLI's `classify` output.
///
/// # Safety
/// `alpha_csv` must be a valid nul-terminated string and `out_json` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tpnf_classify(
    dim: usize,
    alpha_csv: *const c_char,
    out_json: *mut *mut c_char,
) -> TpnfStatus {
    guarded(|| {
        if out_json.is_null() {
            set_error("null out pointer");
            return TpnfStatus::NullArgument;
        }
        let text = match utf8_arg(alpha_csv) {
            Ok(t) => t,
            Err(status) => return status,
        };
        let params = match parse_alpha_csv(dim, text, "alpha") {
            Ok(p) => p,
            Err(e) => return fail(&e),
        };
        let form = canonical_form(&params);
        let transcript = if params.is_zero() {
            None
        } else {
            match shift_reduce(&params) {
                Ok((_, t)) => Some(t),
                Err(e) => return fail(&e),
            }
        };
        let report = ReportDocument {
            canonical: Some(CanonicalDoc::from(&form)),
            transcript: transcript.as_ref().map(TranscriptDoc::from),
            ..ReportDocument::default()
        };
        write_string(out_json, report.emit())
    })
}

/// Decide isomorphism of two parameter vectors. `out_isomorphic` receives
/// the verdict; `out_json` (optional, may be null) receives the full
/// result including a rational witness when one exists.
///
/// # Safety
/// The string arguments must be valid nul-terminated strings;
/// `out_isomorphic` must be valid; `out_json` must be null or valid.
#[no_mangle]
pub unsafe extern "C" fn tpnf_isomorphic(
    dim: usize,
    alpha_a_csv: *const c_char,
    alpha_b_csv: *const c_char,
    out_isomorphic: *mut bool,
    out_json: *mut *mut c_char,
) -> TpnfStatus {
    guarded(|| {
        if out_isomorphic.is_null() {
            set_error("null out pointer");
            return TpnfStatus::NullArgument;
        }
        let text_a = match utf8_arg(alpha_a_csv) {
            Ok(t) => t,
            Err(status) => return status,
        };
        let text_b = match utf8_arg(alpha_b_csv) {
            Ok(t) => t,
            Err(status) => return status,
        };
        let a = match parse_alpha_csv(dim, text_a, "alpha_a") {
            Ok(p) => p,
            Err(e) => return fail(&e),
        };
        let b = match parse_alpha_csv(dim, text_b, "alpha_b") {
            Ok(p) => p,
            Err(e) => return fail(&e),
        };
        match are_isomorphic(&a, &b) {
            Ok((iso, witness)) => {
                *out_isomorphic = iso;
                if !out_json.is_null() {
                    return write_string(
                        out_json,
                        IsomorphismDocument::new(iso, witness.as_ref()).emit(),
                    );
                }
                TpnfStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// The classification family table for dimension `dim` (2..=64), as the
/// CLI's `table` JSON.
///
/// # Safety
/// `out_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tpnf_table(dim: usize, out_json: *mut *mut c_char) -> TpnfStatus {
    guarded(|| {
        if out_json.is_null() {
            set_error("null out pointer");
            return TpnfStatus::NullArgument;
        }
        match classification_table(dim) {
            Ok(families) => write_string(out_json, TableDocument::new(dim, &families).emit()),
            Err(e) => fail(&e),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;
    use std::ptr;

    fn cstr(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    unsafe fn take_string(p: *mut c_char) -> String {
        assert!(!p.is_null());
        let s = CStr::from_ptr(p).to_str().unwrap().to_string();
        tpnf_string_free(p);
        s
    }

    #[test]
    fn mu0_roundtrip_through_handles() {
        unsafe {
            let mut handle: *mut TpnfAlgebra = ptr::null_mut();
            assert_eq!(tpnf_algebra_mu0(3, &mut handle), TpnfStatus::Ok);
            assert_eq!(tpnf_algebra_dim(handle), 3);
            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(tpnf_algebra_to_json(handle, &mut json), TpnfStatus::Ok);
            let text = take_string(json);
            let mut back: *mut TpnfAlgebra = ptr::null_mut();
            assert_eq!(
                tpnf_algebra_from_json(cstr(&text).as_ptr(), &mut back),
                TpnfStatus::Ok
            );
            assert_eq!((*back).dot, (*handle).dot);
            tpnf_algebra_free(handle);
            tpnf_algebra_free(back);
        }
    }

    #[test]
    fn invalid_dimension_reports_error() {
        unsafe {
            let mut handle: *mut TpnfAlgebra = ptr::null_mut();
            assert_eq!(tpnf_algebra_mu0(0, &mut handle), TpnfStatus::InvalidInput);
            let msg = CStr::from_ptr(tpnf_last_error_message())
                .to_str()
                .unwrap()
                .to_string();
            assert!(msg.contains("dimension"), "{msg}");
        }
    }

    #[test]
    fn verify_tp_bracket_is_transposed_not_poisson() {
        unsafe {
            let mut handle: *mut TpnfAlgebra = ptr::null_mut();
            let alpha = cstr("1,0,0");
            assert_eq!(
                tpnf_algebra_tp(4, alpha.as_ptr(), &mut handle),
                TpnfStatus::Ok
            );
            let mut holds = false;
            assert_eq!(
                tpnf_algebra_verify(handle, TpnfExpect::Transposed, &mut holds, ptr::null_mut()),
                TpnfStatus::Ok
            );
            assert!(holds);
            assert_eq!(
                tpnf_algebra_verify(handle, TpnfExpect::Poisson, &mut holds, ptr::null_mut()),
                TpnfStatus::Ok
            );
            assert!(!holds);
            tpnf_algebra_free(handle);
        }
    }

    #[test]
    fn solve_and_classify_json() {
        unsafe {
            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(
                tpnf_solve(4, TpnfSolveMode::Poisson, &mut json),
                TpnfStatus::Ok
            );
            let text = take_string(json);
            assert!(text.contains("\"dimension\":0"), "{text}");

            let alpha = cstr("0,0,3,4");
            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(tpnf_classify(5, alpha.as_ptr(), &mut json), TpnfStatus::Ok);
            let text = take_string(json);
            assert!(text.contains("\"tag\":\"S\""), "{text}");
            assert!(text.contains("\"modulus\":\"4/9\""), "{text}");
        }
    }

    #[test]
    fn isomorphic_with_witness() {
        unsafe {
            let a = cstr("2,5");
            let b = cstr("1,0");
            let mut iso = false;
            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(
                tpnf_isomorphic(3, a.as_ptr(), b.as_ptr(), &mut iso, &mut json),
                TpnfStatus::Ok
            );
            assert!(iso);
            let text = take_string(json);
            assert!(text.contains("\"witness\""), "{text}");
        }
    }

    #[test]
    fn table_json_families() {
        unsafe {
            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(tpnf_table(7, &mut json), TpnfStatus::Ok);
            let text = take_string(json);
            assert!(text.contains("\"tag\":\"S3\""), "{text}");
        }
    }

    #[test]
    fn null_arguments_are_rejected() {
        unsafe {
            assert_eq!(
                tpnf_algebra_mu0(3, ptr::null_mut()),
                TpnfStatus::NullArgument
            );
            let mut handle: *mut TpnfAlgebra = ptr::null_mut();
            assert_eq!(
                tpnf_algebra_tp(3, ptr::null(), &mut handle),
                TpnfStatus::NullArgument
            );
            assert_eq!(tpnf_algebra_dim(ptr::null()), 0);
            tpnf_string_free(ptr::null_mut());
            tpnf_algebra_free(ptr::null_mut());
        }
    }

    #[test]
    fn generated_header_exists_with_expected_symbols() {
        let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("include/tpnf.h");
        let text = std::fs::read_to_string(header).expect("header generated at build time");
        for needle in [
            "typedef struct TpnfAlgebra TpnfAlgebra;",
            "tpnf_algebra_mu0",
            "tpnf_solve",
            "tpnf_classify",
            "tpnf_isomorphic",
            "tpnf_string_free",
            "TPNF_STATUS_OK",
        ] {
            assert!(text.contains(needle), "header misses {needle}");
        }
    }
}
