//! C ABI over the sameorder library: build a group from a spec string or a
//! generator file, read its order spectrum and nse, and run named checks.
//!
//! Conventions: every function that can fail returns an `so_status`;
//! out-parameters are written only on `SO_OK`. Handles returned through
//! `so_group_build`/`so_group_ingest` are owned by the caller and released
//! with `so_group_free`. All functions are panic-safe (a caught panic
//! reports `SO_PANIC`). Handles are not thread-safe; confine each to one
//! thread or lock externally.

#![allow(non_camel_case_types)]
#![allow(clippy::missing_safety_doc)]

use sameorder::checks::{run_group_check, BuiltEntry};
use sameorder::constructions::GroupRecipe;
use sameorder::error::Error;
use sameorder::group::DEFAULT_CAP;
use sameorder::report::CheckStatus;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;

#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum so_status {
    SO_OK = 0,
    SO_PARSE_ERROR = 1,
    SO_PARAM_ERROR = 2,
    SO_BUILD_ERROR = 3,
    SO_ORDER_GATE_ERROR = 4,
    SO_CAP_EXCEEDED = 5,
    SO_UNKNOWN_CHECK = 6,
    SO_IO_ERROR = 7,
    SO_NULL_ARGUMENT = 8,
    SO_INVALID_UTF8 = 9,
    SO_INDEX_OUT_OF_RANGE = 10,
    SO_BUFFER_TOO_SMALL = 11,
    SO_PANIC = 12,
}

#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum so_check_outcome {
    SO_CHECK_PASS = 0,
    SO_CHECK_FAIL = 1,
    SO_CHECK_NOT_APPLICABLE = 2,
    SO_CHECK_SKIPPED = 3,
}

/// Opaque handle: one built group with its spectrum.
pub struct so_group {
    entry: BuiltEntry,
    spectrum: Vec<(u64, u64)>,
    nse: Vec<u64>,
    name: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_last_error(msg: &str) {
    let clean: String = msg.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(clean).unwrap());
}

fn status_of(err: &Error) -> so_status {
    match err {
        Error::Parse(_) => so_status::SO_PARSE_ERROR,
        Error::Params(_) => so_status::SO_PARAM_ERROR,
        Error::Build(_) => so_status::SO_BUILD_ERROR,
        Error::OrderGate { .. } => so_status::SO_ORDER_GATE_ERROR,
        Error::CapExceeded { .. } => so_status::SO_CAP_EXCEEDED,
        Error::UnknownCheck(_) => so_status::SO_UNKNOWN_CHECK,
        Error::Io { .. } => so_status::SO_IO_ERROR,
    }
}

fn fail(err: &Error) -> so_status {
    set_last_error(&err.to_string());
    status_of(err)
}

fn guard(f: impl FnOnce() -> so_status) -> so_status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_last_error("internal panic");
            so_status::SO_PANIC
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, so_status> {
    if p.is_null() {
        return Err(so_status::SO_NULL_ARGUMENT);
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| so_status::SO_INVALID_UTF8)
}

fn wrap(entry: BuiltEntry) -> *mut so_group {
    let spectrum: Vec<(u64, u64)> = entry
        .spec
        .counts()
        .iter()
        .map(|(&t, &c)| (t, c))
        .collect();
    let nse = entry.spec.nse();
    let name = CString::new(entry.recipe.name.clone()).unwrap_or_default();
    Box::into_raw(Box::new(so_group {
        entry,
        spectrum,
        nse,
        name,
    }))
}

fn build_common(
    recipe: GroupRecipe,
    data_dir: Option<&str>,
    cap: usize,
    out: *mut *mut so_group,
) -> so_status {
    let cap = if cap == 0 { DEFAULT_CAP } else { cap };
    let dir = Path::new(data_dir.unwrap_or("./data"));
    match BuiltEntry::build(recipe, dir, cap) {
        Ok(entry) => {
            unsafe { *out = wrap(entry) };
            so_status::SO_OK
        }
        Err(e) => fail(&e),
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn so_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn so_status_describe(status: so_status) -> *const c_char {
    let s: &'static str = match status {
        so_status::SO_OK => "ok\0",
        so_status::SO_PARSE_ERROR => "unrecognized group spec or input syntax\0",
        so_status::SO_PARAM_ERROR => "parameter outside the supported family\0",
        so_status::SO_BUILD_ERROR => "group construction failed\0",
        so_status::SO_ORDER_GATE_ERROR => "enumerated order contradicts the expected order\0",
        so_status::SO_CAP_EXCEEDED => "enumeration cap exceeded\0",
        so_status::SO_UNKNOWN_CHECK => "unknown check id\0",
        so_status::SO_IO_ERROR => "file not readable\0",
        so_status::SO_NULL_ARGUMENT => "null argument\0",
        so_status::SO_INVALID_UTF8 => "argument is not valid UTF-8\0",
        so_status::SO_INDEX_OUT_OF_RANGE => "index out of range\0",
        so_status::SO_BUFFER_TOO_SMALL => "buffer too small\0",
        so_status::SO_PANIC => "internal panic\0",
    };
    s.as_ptr() as *const c_char
}

/// Copy the most recent error message for this thread into `buf`
/// (NUL-terminated, truncated to `len` bytes).
#[no_mangle]
pub unsafe extern "C" fn so_last_error_message(buf: *mut c_char, len: usize) -> so_status {
    if buf.is_null() || len == 0 {
        return so_status::SO_NULL_ARGUMENT;
    }
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        let bytes = msg.as_bytes();
        let n = bytes.len().min(len - 1);
        std::ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, n);
        *buf.add(n) = 0;
        if n < bytes.len() {
            so_status::SO_BUFFER_TOO_SMALL
        } else {
            so_status::SO_OK
        }
    })
}

/// Build a group from a spec string (`"A5"`, `"L2(7)"`, `"Sz(8)"`,
/// `"file:path"`, ...). `data_dir` may be NULL for the default `./data`;
/// `cap` = 0 uses the default enumeration cap. On success `*out` owns the
/// handle.
#[no_mangle]
pub unsafe extern "C" fn so_group_build(
    spec: *const c_char,
    data_dir: *const c_char,
    cap: usize,
    out: *mut *mut so_group,
) -> so_status {
    guard(|| {
        if out.is_null() {
            return so_status::SO_NULL_ARGUMENT;
        }
        let spec = match read_str(spec) {
            Ok(s) => s,
            Err(e) => return e,
        };
        let dir = if data_dir.is_null() {
            None
        } else {
            match read_str(data_dir) {
                Ok(s) => Some(s),
                Err(e) => return e,
            }
        };
        let recipe = match GroupRecipe::parse(spec) {
            Ok(r) => r,
            Err(e) => return fail(&e),
        };
        build_common(recipe, dir, cap, out)
    })
}

/// Build a group from a generator file. `expected_order` = 0 skips the
/// order gate.
#[no_mangle]
pub unsafe extern "C" fn so_group_ingest(
    path: *const c_char,
    expected_order: u64,
    cap: usize,
    out: *mut *mut so_group,
) -> so_status {
    guard(|| {
        if out.is_null() {
            return so_status::SO_NULL_ARGUMENT;
        }
        let path = match read_str(path) {
            Ok(s) => s,
            Err(e) => return e,
        };
        let mut recipe = match GroupRecipe::parse(&format!("file:{path}")) {
            Ok(r) => r,
            Err(e) => return fail(&e),
        };
        if expected_order > 0 {
            recipe.expected_order = Some(expected_order);
        }
        build_common(recipe, None, cap, out)
    })
}

/// Release a handle. NULL is a no-op.
#[no_mangle]
pub unsafe extern "C" fn so_group_free(g: *mut so_group) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// |G|; 0 for a NULL handle.
#[no_mangle]
pub unsafe extern "C" fn so_group_order(g: *const so_group) -> u64 {
    g.as_ref().map_or(0, |g| g.entry.group.order())
}

/// The group's display name, NUL-terminated, truncated to `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn so_group_name(
    g: *const so_group,
    buf: *mut c_char,
    len: usize,
) -> so_status {
    let Some(g) = g.as_ref() else {
        return so_status::SO_NULL_ARGUMENT;
    };
    if buf.is_null() || len == 0 {
        return so_status::SO_NULL_ARGUMENT;
    }
    let bytes = g.name.as_bytes();
    let n = bytes.len().min(len - 1);
    std::ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, n);
    *buf.add(n) = 0;
    if n < bytes.len() {
        so_status::SO_BUFFER_TOO_SMALL
    } else {
        so_status::SO_OK
    }
}

/// Number of distinct element orders (spectrum entries).
#[no_mangle]
pub unsafe extern "C" fn so_spectrum_size(g: *const so_group) -> usize {
    g.as_ref().map_or(0, |g| g.spectrum.len())
}

/// Read spectrum entry `index` (ascending by element order) into
/// `order_out`/`count_out`.
#[no_mangle]
pub unsafe extern "C" fn so_spectrum_entry(
    g: *const so_group,
    index: usize,
    order_out: *mut u64,
    count_out: *mut u64,
) -> so_status {
    let Some(g) = g.as_ref() else {
        return so_status::SO_NULL_ARGUMENT;
    };
    if order_out.is_null() || count_out.is_null() {
        return so_status::SO_NULL_ARGUMENT;
    }
    let Some(&(t, c)) = g.spectrum.get(index) else {
        return so_status::SO_INDEX_OUT_OF_RANGE;
    };
    *order_out = t;
    *count_out = c;
    so_status::SO_OK
}

/// |nse(G)|.
#[no_mangle]
pub unsafe extern "C" fn so_nse_size(g: *const so_group) -> usize {
    g.as_ref().map_or(0, |g| g.nse.len())
}

/// Read nse entry `index` (ascending).
#[no_mangle]
pub unsafe extern "C" fn so_nse_entry(
    g: *const so_group,
    index: usize,
    out: *mut u64,
) -> so_status {
    let Some(g) = g.as_ref() else {
        return so_status::SO_NULL_ARGUMENT;
    };
    if out.is_null() {
        return so_status::SO_NULL_ARGUMENT;
    }
    let Some(&v) = g.nse.get(index) else {
        return so_status::SO_INDEX_OUT_OF_RANGE;
    };
    *out = v;
    so_status::SO_OK
}

/// Run one per-group check (`"frobenius"`, `"shen-bound"`, ...) and write
/// its outcome.
#[no_mangle]
pub unsafe extern "C" fn so_check_run(
    g: *const so_group,
    check_id: *const c_char,
    outcome_out: *mut so_check_outcome,
) -> so_status {
    guard(|| {
        let Some(g) = g.as_ref() else {
            return so_status::SO_NULL_ARGUMENT;
        };
        if outcome_out.is_null() {
            return so_status::SO_NULL_ARGUMENT;
        }
        let id = match read_str(check_id) {
            Ok(s) => s,
            Err(e) => return e,
        };
        match run_group_check(id, &g.entry) {
            Ok(result) => {
                set_last_error(&result.details);
                *outcome_out = match result.status {
                    CheckStatus::Pass => so_check_outcome::SO_CHECK_PASS,
                    CheckStatus::Fail => so_check_outcome::SO_CHECK_FAIL,
                    CheckStatus::NotApplicable => so_check_outcome::SO_CHECK_NOT_APPLICABLE,
                    CheckStatus::Skipped => so_check_outcome::SO_CHECK_SKIPPED,
                };
                so_status::SO_OK
            }
            Err(e) => fail(&e),
        }
    })
}
