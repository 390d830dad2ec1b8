//! C ABI over the `ocws` library.
//!
//! Codes live behind an opaque `OcwsCode` handle. Every function returns an
//! `OcwsStatus`; on failure `ocws_last_error` describes the problem. Strings
//! returned through out-parameters are owned by the caller and must be
//! released with `ocws_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::time::Duration;

use ocws::bits::format_zstring;
use ocws::{Error, Graph, PauliOperator, SearchConfig, SearchMode};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OcwsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    TooLarge = 5,
    SearchFailed = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OcwsSearchMode {
    Exact = 0,
    Greedy = 1,
}

/// Residuals of the dense-state correction check.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct OcwsOracleReport {
    pub max_off_block: f64,
    pub max_block_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Opaque code handle.
pub struct OcwsCode(ocws::OcwsCode);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let message = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = message);
}

type Failure = (OcwsStatus, String);

fn classify(e: Error) -> Failure {
    let status = match e {
        Error::Parse { .. } => OcwsStatus::ParseError,
        Error::TooLarge { .. } | Error::QubitCount(_) => OcwsStatus::TooLarge,
        Error::TargetNotMet { .. } | Error::Unverified { .. } => OcwsStatus::SearchFailed,
        _ => OcwsStatus::InvalidArgument,
    };
    (status, e.to_string())
}

fn null(what: &str) -> Failure {
    (OcwsStatus::NullPointer, format!("{what} is null"))
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> OcwsStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            OcwsStatus::Ok
        }
        Ok(Err((status, message))) => {
            set_last_error(&message);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            OcwsStatus::Panic
        }
    }
}

unsafe fn code_ref<'a>(code: *const OcwsCode) -> Result<&'a ocws::OcwsCode, Failure> {
    // SAFETY: the caller passes a handle obtained from this library or null.
    unsafe { code.as_ref() }
        .map(|c| &c.0)
        .ok_or_else(|| null("code"))
}

unsafe fn str_arg<'a>(text: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if text.is_null() {
        return Err(null(what));
    }
    // SAFETY: non-null and, per the contract, NUL-terminated.
    unsafe { CStr::from_ptr(text) }.to_str().map_err(|_| {
        (
            OcwsStatus::InvalidUtf8,
            format!("{what} is not valid UTF-8"),
        )
    })
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    // SAFETY: non-null and, per the contract, valid for writes.
    unsafe { out.write(value) };
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message for the last failing call on this thread; empty after success.
/// Valid until the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn ocws_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Parses a code file. On success `*out` receives a handle to free with
/// `ocws_code_free`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ocws_code_parse(
    text: *const c_char,
    out: *mut *mut OcwsCode,
) -> OcwsStatus {
    guard(|| {
        let text = unsafe { str_arg(text, "text") }?;
        if out.is_null() {
            return Err(null("out"));
        }
        let code = ocws::parse_code_file(text).map_err(classify)?;
        unsafe { write_out(out, Box::into_raw(Box::new(OcwsCode(code))), "out") }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `code` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ocws_code_free(code: *mut OcwsCode) {
    if !code.is_null() {
        // SAFETY: created by Box::into_raw in this crate.
        drop(unsafe { Box::from_raw(code) });
    }
}

/// Qubit count, number of words and number of gauge qubits.
///
/// # Safety
/// `code` must be a live handle; the out pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ocws_code_params(
    code: *const OcwsCode,
    n: *mut usize,
    k: *mut usize,
    r: *mut usize,
) -> OcwsStatus {
    guard(|| {
        let code = unsafe { code_ref(code) }?;
        unsafe {
            write_out(n, code.n(), "n")?;
            write_out(k, code.dimension(), "k")?;
            write_out(r, code.r(), "r")
        }
    })
}

/// Canonical code-file text.
///
/// # Safety
/// `code` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ocws_code_write(
    code: *const OcwsCode,
    out: *mut *mut c_char,
) -> OcwsStatus {
    guard(|| {
        let code = unsafe { code_ref(code) }?;
        unsafe { write_out(out, owned_string(ocws::write_code_file(code)), "out") }
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ocws_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: created by CString::into_raw in this crate.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Largest `d` such that every nonidentity Pauli of weight below `d` is
/// detected; `n + 1` if every Pauli is.
///
/// # Safety
/// `code` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ocws_certify_distance(
    code: *const OcwsCode,
    out: *mut usize,
) -> OcwsStatus {
    guard(|| {
        let code = unsafe { code_ref(code) }?;
        unsafe { write_out(out, ocws::certify_distance(code), "out") }
    })
}

/// Whether every Pauli of weight at most `t` is correctable.
///
/// # Safety
/// `code` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ocws_corrects_weight(
    code: *const OcwsCode,
    t: usize,
    out: *mut bool,
) -> OcwsStatus {
    guard(|| {
        let code = unsafe { code_ref(code) }?;
        unsafe { write_out(out, ocws::corrects_weight(code, t), "out") }
    })
}

/// Same question as `ocws_corrects_weight`, decided on induced classical errors.
///
/// # Safety
/// `code` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ocws_classical_route_corrects(
    code: *const OcwsCode,
    t: usize,
    out: *mut bool,
) -> OcwsStatus {
    guard(|| {
        let code = unsafe { code_ref(code) }?;
        unsafe { write_out(out, ocws::classical_route_corrects(code, t), "out") }
    })
}

/// Number of distinct gauge-reduced induced errors over weight `<= weight`.
///
/// # Safety
/// `code` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ocws_induced_class_count(
    code: *const OcwsCode,
    weight: usize,
    out: *mut usize,
) -> OcwsStatus {
    guard(|| {
        let code = unsafe { code_ref(code) }?;
        unsafe { write_out(out, ocws::induced_error_set(code, weight).len(), "out") }
    })
}

/// Raw and gauge-reduced induced Z-strings of a Pauli string such as
/// `"IXIII"`. Either out pointer may be null to skip it.
///
/// # Safety
/// `code` must be a live handle, `pauli` NUL-terminated, and non-null out
/// pointers valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ocws_induce(
    code: *const OcwsCode,
    pauli: *const c_char,
    raw_out: *mut *mut c_char,
    reduced_out: *mut *mut c_char,
) -> OcwsStatus {
    guard(|| {
        let code = unsafe { code_ref(code) }?;
        let e: PauliOperator = unsafe { str_arg(pauli, "pauli") }?
            .parse()
            .map_err(classify)?;
        let raw = ocws::induce(code.graph(), &e).map_err(classify)?;
        let n = code.n();
        if !raw_out.is_null() {
            unsafe { raw_out.write(owned_string(format_zstring(raw, n))) };
        }
        if !reduced_out.is_null() {
            unsafe {
                reduced_out.write(owned_string(format_zstring(
                    ocws::gauge_reduce(code, raw),
                    n,
                )))
            };
        }
        Ok(())
    })
}

/// Dense-state check over all ordered pairs of Paulis of weight `<= weight`
/// (identity included).
///
/// # Safety
/// `code` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ocws_oracle_check(
    code: *const OcwsCode,
    weight: usize,
    tol: f64,
    out: *mut OcwsOracleReport,
) -> OcwsStatus {
    guard(|| {
        let code = unsafe { code_ref(code) }?;
        if !(tol.is_finite() && tol >= 0.0) {
            return Err((
                OcwsStatus::InvalidArgument,
                "tol must be a non-negative number".into(),
            ));
        }
        let errors: Vec<PauliOperator> = ocws::enumerate_paulis(code.n(), weight, true).collect();
        let report = ocws::oqec_check(code, &errors, tol).map_err(classify)?;
        let report = OcwsOracleReport {
            max_off_block: report.max_off_block,
            max_block_deviation: report.max_block_deviation,
            tolerance: report.tolerance,
            pass: report.pass,
        };
        unsafe { write_out(out, report, "out") }
    })
}

/// Word-set search on the `n`-ring. `target_k == 0` means no target and
/// `budget_seconds <= 0` means no time limit. The result is re-verified
/// before it is returned.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ocws_search_ring(
    n: usize,
    r: usize,
    distance: usize,
    target_k: usize,
    mode: OcwsSearchMode,
    budget_seconds: f64,
    seed: u64,
    out: *mut *mut OcwsCode,
) -> OcwsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let mut config = SearchConfig::new(Graph::ring(n).map_err(classify)?, r, distance);
        config.target_k = (target_k > 0).then_some(target_k);
        config.mode = match mode {
            OcwsSearchMode::Exact => SearchMode::Exact,
            OcwsSearchMode::Greedy => SearchMode::Greedy,
        };
        config.time_budget = (budget_seconds.is_finite() && budget_seconds > 0.0)
            .then(|| Duration::from_secs_f64(budget_seconds));
        config.seed = seed;
        let outcome = ocws::search_code(&config).map_err(classify)?;
        unsafe { write_out(out, Box::into_raw(Box::new(OcwsCode(outcome.code))), "out") }
    })
}
