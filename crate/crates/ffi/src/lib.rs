//! C ABI for the twisted-demazure character library.
//!
//! The interface is handle-based: [`tdm_module_new_demazure`] and
//! [`tdm_module_new_weyl`] construct an opaque [`TdmModule`], accessors read
//! scalar facts or render the canonical JSON document, and
//! [`tdm_module_free`] releases the handle.  Every fallible entry point
//! returns a status code: `0` on success, the library's stable error codes
//! (10–24) for domain failures, and the small codes below for contract
//! violations at the boundary.  The most recent failure message is kept in
//! thread-local storage and can be read with [`tdm_last_error_message`].
//!
//! All strings crossing the boundary are NUL-terminated UTF-8.  Strings
//! returned by this library must be released with [`tdm_string_free`];
//! pointers returned by [`tdm_last_error_message`] are borrowed and only
//! valid until the next failing call on the same thread.

#![deny(missing_docs)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use twisted_demazure::demazure::{demazure_d, DemazureResult};
use twisted_demazure::json::{module_output, to_json_string};
use twisted_demazure::rat::{parse_rat, rat};
use twisted_demazure::weyl::weyl_char;
use twisted_demazure::{AffineData, Error};

/// Status code: success.
pub const TDM_OK: i32 = 0;
/// Status code: a required pointer argument was NULL.
pub const TDM_ERR_NULL_POINTER: i32 = 1;
/// Status code: a string argument was not valid UTF-8.
pub const TDM_ERR_INVALID_UTF8: i32 = 2;
/// Status code: a computation panicked; the handle state is unchanged.
pub const TDM_ERR_PANIC: i32 = 3;

/// Opaque handle to a computed module (its exact character together with the
/// algebra it lives over).
pub struct TdmModule {
    data: AffineData,
    result: DemazureResult,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " "))
        .unwrap_or_else(|_| CString::new("invalid error message").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn fail(code: i32, msg: String) -> i32 {
    set_last_error(msg);
    code
}

fn fail_err(e: Error) -> i32 {
    let code = e.code();
    set_last_error(e.to_string());
    code
}

/// Reads a borrowed C string argument.
///
/// # Safety
/// `ptr` must be NULL or point to a NUL-terminated buffer.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, i32> {
    if ptr.is_null() {
        return Err(fail(TDM_ERR_NULL_POINTER, "NULL string argument".into()));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| fail(TDM_ERR_INVALID_UTF8, "string argument is not UTF-8".into()))
}

/// Reads a borrowed integer-slice argument; a NULL pointer is allowed only
/// for an empty slice.
///
/// # Safety
/// If `len > 0`, `ptr` must point to `len` readable `i64` values.
unsafe fn read_weight<'a>(ptr: *const i64, len: usize) -> Result<&'a [i64], i32> {
    if len == 0 {
        return Ok(&[]);
    }
    if ptr.is_null() {
        return Err(fail(TDM_ERR_NULL_POINTER, "NULL weight argument".into()));
    }
    Ok(std::slice::from_raw_parts(ptr, len))
}

fn guarded(body: impl FnOnce() -> i32) -> i32 {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(code) => code,
        Err(_) => fail(TDM_ERR_PANIC, "internal panic".into()),
    }
}

/// Returns the most recent error message on this thread, or NULL if no call
/// has failed yet.  The pointer is borrowed: it stays valid until the next
/// failing call on the same thread and must not be freed.
#[no_mangle]
pub extern "C" fn tdm_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null(), |c| c.as_ptr())
    })
}

/// Computes the Demazure module `D(level, λ)` and stores a new handle in
/// `*out`.
///
/// `type_name` is an algebra name such as `"A4(2)"` or `"D4(3)"`; `level` is
/// a rational literal such as `"1"` or `"3/2"`; `weight`/`weight_len`
/// describe the coefficient vector of λ on the fundamental weights of the
/// finite subalgebra.  On failure, `*out` is untouched and the status code
/// identifies the violated precondition.
///
/// # Safety
/// `type_name` and `level` must be NUL-terminated; `weight` must point to
/// `weight_len` values (see [`read_weight`]); `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tdm_module_new_demazure(
    type_name: *const c_char,
    level: *const c_char,
    weight: *const i64,
    weight_len: usize,
    out: *mut *mut TdmModule,
) -> i32 {
    guarded(|| {
        if out.is_null() {
            return fail(TDM_ERR_NULL_POINTER, "NULL output argument".into());
        }
        let type_name = match read_str(type_name) {
            Ok(s) => s,
            Err(code) => return code,
        };
        let level = match read_str(level) {
            Ok(s) => s,
            Err(code) => return code,
        };
        let weight = match read_weight(weight, weight_len) {
            Ok(w) => w,
            Err(code) => return code,
        };
        let built = (|| {
            let data = AffineData::parse(type_name)?;
            let k = parse_rat(level)?;
            let lambda: Vec<_> = weight.iter().map(|&m| rat(m as i128)).collect();
            let result = demazure_d(&data, k, &lambda)?;
            Ok::<_, Error>(TdmModule { data, result })
        })();
        match built {
            Ok(module) => {
                *out = Box::into_raw(Box::new(module));
                TDM_OK
            }
            Err(e) => fail_err(e),
        }
    })
}

/// Computes the graded Weyl module `W(λ)` at the distinguished level and
/// stores a new handle in `*out`.
///
/// # Safety
/// Same contracts as [`tdm_module_new_demazure`], minus the level string.
#[no_mangle]
pub unsafe extern "C" fn tdm_module_new_weyl(
    type_name: *const c_char,
    weight: *const i64,
    weight_len: usize,
    out: *mut *mut TdmModule,
) -> i32 {
    guarded(|| {
        if out.is_null() {
            return fail(TDM_ERR_NULL_POINTER, "NULL output argument".into());
        }
        let type_name = match read_str(type_name) {
            Ok(s) => s,
            Err(code) => return code,
        };
        let weight = match read_weight(weight, weight_len) {
            Ok(w) => w,
            Err(code) => return code,
        };
        let built = (|| {
            let data = AffineData::parse(type_name)?;
            let lambda: Vec<_> = weight.iter().map(|&m| rat(m as i128)).collect();
            let report = weyl_char(&data, &lambda)?;
            Ok::<_, Error>(TdmModule { data, result: report.demazure })
        })();
        match built {
            Ok(module) => {
                *out = Box::into_raw(Box::new(module));
                TDM_OK
            }
            Err(e) => fail_err(e),
        }
    })
}

/// Writes the module's dimension to `*out`.
///
/// # Safety
/// `module` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn tdm_module_dimension(
    module: *const TdmModule,
    out: *mut u64,
) -> i32 {
    guarded(|| {
        if module.is_null() || out.is_null() {
            return fail(TDM_ERR_NULL_POINTER, "NULL argument".into());
        }
        match u64::try_from((*module).result.dimension()) {
            Ok(dim) => {
                *out = dim;
                TDM_OK
            }
            Err(_) => fail_err(Error::Overflow("dimension exceeds u64".into())),
        }
    })
}

/// Writes the number of distinct exponents in the character to `*out`.
///
/// # Safety
/// `module` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn tdm_module_num_weights(
    module: *const TdmModule,
    out: *mut usize,
) -> i32 {
    guarded(|| {
        if module.is_null() || out.is_null() {
            return fail(TDM_ERR_NULL_POINTER, "NULL argument".into());
        }
        *out = (*module).result.character.terms().count();
        TDM_OK
    })
}

/// Renders the module as the canonical JSON document and stores a freshly
/// allocated NUL-terminated string in `*out`.  Release it with
/// [`tdm_string_free`].
///
/// # Safety
/// `module` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn tdm_module_json(
    module: *const TdmModule,
    out: *mut *mut c_char,
) -> i32 {
    guarded(|| {
        if module.is_null() || out.is_null() {
            return fail(TDM_ERR_NULL_POINTER, "NULL argument".into());
        }
        let m = &*module;
        let rendered = module_output(&m.data, &m.result).and_then(|obj| to_json_string(&obj));
        match rendered {
            Ok(s) => match CString::new(s) {
                Ok(c) => {
                    *out = c.into_raw();
                    TDM_OK
                }
                Err(_) => fail(TDM_ERR_INVALID_UTF8, "interior NUL in JSON".into()),
            },
            Err(e) => fail_err(e),
        }
    })
}

/// Releases a string allocated by this library.  NULL is a no-op.
///
/// # Safety
/// `s` must be NULL or a pointer previously returned via [`tdm_module_json`],
/// and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tdm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Releases a module handle.  NULL is a no-op.
///
/// # Safety
/// `module` must be NULL or a live handle from this library, and must not be
/// used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tdm_module_free(module: *mut TdmModule) {
    if !module.is_null() {
        drop(Box::from_raw(module));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cstr(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    #[test]
    fn demazure_round_trip_through_the_c_abi() {
        let ty = cstr("A2(2)");
        let level = cstr("1/2");
        let weight = [1i64];
        let mut handle: *mut TdmModule = ptr::null_mut();
        let code = unsafe {
            tdm_module_new_demazure(ty.as_ptr(), level.as_ptr(), weight.as_ptr(), 1, &mut handle)
        };
        assert_eq!(code, TDM_OK);
        assert!(!handle.is_null());

        let mut dim = 0u64;
        assert_eq!(unsafe { tdm_module_dimension(handle, &mut dim) }, TDM_OK);
        assert_eq!(dim, 2);

        let mut json: *mut c_char = ptr::null_mut();
        assert_eq!(unsafe { tdm_module_json(handle, &mut json) }, TDM_OK);
        let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_owned();
        assert!(text.contains("\"dimension\": 2"), "json: {text}");
        assert!(text.contains("\"level\": \"1/2\""), "json: {text}");
        unsafe { tdm_string_free(json) };
        unsafe { tdm_module_free(handle) };
    }

    #[test]
    fn weyl_handle_reports_dimension() {
        let ty = cstr("D4(3)");
        let weight = [1i64, 0];
        let mut handle: *mut TdmModule = ptr::null_mut();
        let code =
            unsafe { tdm_module_new_weyl(ty.as_ptr(), weight.as_ptr(), 2, &mut handle) };
        assert_eq!(code, TDM_OK);
        let mut dim = 0u64;
        assert_eq!(unsafe { tdm_module_dimension(handle, &mut dim) }, TDM_OK);
        assert_eq!(dim, 29);
        unsafe { tdm_module_free(handle) };
    }

    #[test]
    fn domain_errors_surface_stable_codes_and_messages() {
        let ty = cstr("Z9(5)");
        let level = cstr("1");
        let mut handle: *mut TdmModule = ptr::null_mut();
        let code = unsafe {
            tdm_module_new_demazure(ty.as_ptr(), level.as_ptr(), ptr::null(), 0, &mut handle)
        };
        assert_eq!(code, Error::UnsupportedType(String::new()).code());
        assert!(handle.is_null());
        let msg = unsafe { CStr::from_ptr(tdm_last_error_message()) };
        assert!(msg.to_str().unwrap().contains("unsupported type"));

        let ty = cstr("A4(2)");
        let weight = [0i64, 2];
        let code =
            unsafe { tdm_module_new_weyl(ty.as_ptr(), weight.as_ptr(), 2, &mut handle) };
        assert_eq!(code, Error::UnsupportedEvenCase(String::new()).code());
    }

    #[test]
    fn boundary_violations_are_reported_not_crashed() {
        let mut handle: *mut TdmModule = ptr::null_mut();
        let code = unsafe {
            tdm_module_new_demazure(
                ptr::null(),
                ptr::null(),
                ptr::null(),
                0,
                &mut handle,
            )
        };
        assert_eq!(code, TDM_ERR_NULL_POINTER);
        let mut dim = 0u64;
        assert_eq!(
            unsafe { tdm_module_dimension(ptr::null(), &mut dim) },
            TDM_ERR_NULL_POINTER
        );
        unsafe { tdm_module_free(ptr::null_mut()) };
        unsafe { tdm_string_free(ptr::null_mut()) };
    }
}
