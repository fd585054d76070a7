//! C interface. Instances and results are opaque handles; data crosses as JSON text.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use boundrep::model::json::instance_from_json;
use boundrep::model::{GraphClass, Instance};
use boundrep::outcome::{outcome_value, solve};

pub const BR_OK: i32 = 0;
pub const BR_UNSAT: i32 = 1;
pub const BR_ERR_NULL: i32 = -1;
pub const BR_ERR_UTF8: i32 = -2;
pub const BR_ERR_PARSE: i32 = -3;
pub const BR_ERR_CLASS: i32 = -4;
pub const BR_ERR_PANIC: i32 = -5;

/// Parsed instance.
pub struct BrInstance {
    inner: Instance,
}

/// Solver answer with its JSON document.
pub struct BrResult {
    sat: bool,
    json: CString,
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, i32> {
    if s.is_null() {
        return Err(BR_ERR_NULL);
    }
    CStr::from_ptr(s).to_str().map_err(|_| BR_ERR_UTF8)
}

fn guarded(f: impl FnOnce() -> i32) -> i32 {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(BR_ERR_PANIC)
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn br_status_message(code: i32) -> *const c_char {
    let s: &'static CStr = match code {
        BR_OK => c"sat",
        BR_UNSAT => c"unsat",
        BR_ERR_NULL => c"null pointer argument",
        BR_ERR_UTF8 => c"argument is not valid UTF-8",
        BR_ERR_PARSE => c"malformed instance",
        BR_ERR_CLASS => c"unknown graph class",
        BR_ERR_PANIC => c"internal error",
        _ => c"unknown status",
    };
    s.as_ptr()
}

/// Parses an instance document into `*out`. The caller frees it with `br_instance_free`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn br_instance_from_json(json: *const c_char, out: *mut *mut BrInstance) -> i32 {
    if out.is_null() {
        return BR_ERR_NULL;
    }
    *out = ptr::null_mut();
    guarded(|| {
        let s = match text(json) {
            Ok(s) => s,
            Err(c) => return c,
        };
        match instance_from_json(s) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(BrInstance { inner }));
                BR_OK
            }
            Err(_) => BR_ERR_PARSE,
        }
    })
}

/// # Safety
/// `inst` must come from `br_instance_from_json` and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn br_instance_free(inst: *mut BrInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Vertex count, 0 for null.
///
/// # Safety
/// `inst` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn br_instance_vertex_count(inst: *const BrInstance) -> usize {
    inst.as_ref().map_or(0, |i| i.inner.n())
}

/// Switches the class: `"int"` or `"proper-int"`.
///
/// # Safety
/// `inst` must be a live handle and `class` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn br_instance_set_class(inst: *mut BrInstance, class: *const c_char) -> i32 {
    let Some(inst) = inst.as_mut() else {
        return BR_ERR_NULL;
    };
    let s = match text(class) {
        Ok(s) => s,
        Err(c) => return c,
    };
    match s.parse::<GraphClass>() {
        Ok(c) => {
            inst.inner.class = c;
            BR_OK
        }
        Err(_) => BR_ERR_CLASS,
    }
}

/// Solves for the instance's class. Returns `BR_OK` or `BR_UNSAT` with `*out` set either way.
///
/// # Safety
/// `inst` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn br_solve(inst: *const BrInstance, out: *mut *mut BrResult) -> i32 {
    if out.is_null() {
        return BR_ERR_NULL;
    }
    *out = ptr::null_mut();
    let Some(inst) = inst.as_ref() else {
        return BR_ERR_NULL;
    };
    guarded(|| {
        let outcome = solve(&inst.inner);
        let sat = outcome.is_ok();
        let json = CString::new(outcome_value(&outcome).to_string()).expect("JSON has no NUL");
        *out = Box::into_raw(Box::new(BrResult { sat, json }));
        if sat {
            BR_OK
        } else {
            BR_UNSAT
        }
    })
}

/// # Safety
/// `res` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn br_result_is_sat(res: *const BrResult) -> bool {
    res.as_ref().is_some_and(|r| r.sat)
}

/// JSON answer, owned by the result and valid until `br_result_free`.
///
/// # Safety
/// `res` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn br_result_json(res: *const BrResult) -> *const c_char {
    res.as_ref().map_or(ptr::null(), |r| r.json.as_ptr())
}

/// # Safety
/// `res` must come from `br_solve` and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn br_result_free(res: *mut BrResult) {
    if !res.is_null() {
        drop(Box::from_raw(res));
    }
}
