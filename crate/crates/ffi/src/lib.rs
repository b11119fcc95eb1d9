//! C ABI over `spinmtc`.
//!
//! Categories live behind an opaque `SpinmtcCategory` handle. Every call
//! returns a `SpinmtcStatus`; on failure `spinmtc_last_error` describes what
//! went wrong on the calling thread. Strings handed out by the library are
//! JSON reports and must be released with `spinmtc_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use serde_json::{json, Value};
use spinmtc::clifford::{self, CliffordKind, CliffordStructure};
use spinmtc::fusion::{self, FusionData};
use spinmtc::minimal::{self, MinimalModelSpec};
use spinmtc::spinfunctor::{self, SpinSphereSpec};
use spinmtc::{builtin, verma, Error};

/// Result of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpinmtcStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    InvalidUtf8 = 2,
    /// Unparseable data, unknown label or key, invalid parameters.
    Malformed = 3,
    /// The input parsed but a structural check failed; any report was
    /// still written.
    CheckFailed = 4,
    /// A bug inside the library; the message is in `spinmtc_last_error`.
    Internal = 5,
}

/// Opaque handle to a category.
pub struct SpinmtcCategory {
    data: FusionData,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(SpinmtcStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match spinmtc::cli::exit_code(&e) {
            2 => SpinmtcStatus::Malformed,
            _ => SpinmtcStatus::CheckFailed,
        };
        Failure(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<SpinmtcStatus, Failure>) -> SpinmtcStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err(Failure(s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            SpinmtcStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(SpinmtcStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(SpinmtcStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn opt_str_arg<'a>(p: *const c_char, what: &str) -> Result<Option<&'a str>, Failure> {
    if p.is_null() {
        Ok(None)
    } else {
        str_arg(p, what).map(Some)
    }
}

unsafe fn category<'a>(p: *const SpinmtcCategory) -> Result<&'a FusionData, Failure> {
    p.as_ref()
        .map(|c| &c.data)
        .ok_or_else(|| Failure(SpinmtcStatus::NullArgument, "category is null".into()))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(SpinmtcStatus::NullArgument, "output pointer is null".into()));
    }
    let c = CString::new(s).map_err(|_| Failure(SpinmtcStatus::Internal, "NUL in output".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn put_json(out: *mut *mut c_char, v: &Value) -> Result<(), Failure> {
    put_string(out, serde_json::to_string(v).expect("serializable"))
}

unsafe fn put_category(out: *mut *mut SpinmtcCategory, data: FusionData) -> Result<SpinmtcStatus, Failure> {
    if out.is_null() {
        return Err(Failure(SpinmtcStatus::NullArgument, "output pointer is null".into()));
    }
    *out = Box::into_raw(Box::new(SpinmtcCategory { data }));
    Ok(SpinmtcStatus::Ok)
}

fn status_for(ok: bool) -> SpinmtcStatus {
    if ok {
        SpinmtcStatus::Ok
    } else {
        SpinmtcStatus::CheckFailed
    }
}

/// Message for the last failed call on this thread, or "" after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn spinmtc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn spinmtc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn spinmtc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse a fusion data file.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spinmtc_category_from_json(
    json: *const c_char,
    out: *mut *mut SpinmtcCategory,
) -> SpinmtcStatus {
    guard(|| {
        let text = str_arg(json, "json")?;
        put_category(out, FusionData::from_json(text)?)
    })
}

/// One of "trivial", "fermion", "dirac", "toric", "fibonacci".
///
/// # Safety
/// `key` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spinmtc_category_builtin(key: *const c_char, out: *mut *mut SpinmtcCategory) -> SpinmtcStatus {
    guard(|| put_category(out, builtin::builtin(str_arg(key, "key")?)?))
}

/// Deligne product `a ⊠ b` as a new handle.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spinmtc_category_product(
    a: *const SpinmtcCategory,
    b: *const SpinmtcCategory,
    out: *mut *mut SpinmtcCategory,
) -> SpinmtcStatus {
    guard(|| put_category(out, fusion::deligne_product(category(a)?, category(b)?)))
}

/// # Safety
/// `c` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn spinmtc_category_free(c: *mut SpinmtcCategory) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of labels.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spinmtc_category_len(c: *const SpinmtcCategory, out: *mut usize) -> SpinmtcStatus {
    guard(|| {
        let d = category(c)?;
        if out.is_null() {
            return Err(Failure(SpinmtcStatus::NullArgument, "output pointer is null".into()));
        }
        *out = d.len();
        Ok(SpinmtcStatus::Ok)
    })
}

/// The category as a fusion data file.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spinmtc_category_to_json(c: *const SpinmtcCategory, out: *mut *mut c_char) -> SpinmtcStatus {
    guard(|| {
        put_string(out, category(c)?.to_json())?;
        Ok(SpinmtcStatus::Ok)
    })
}

/// Axiom report; `CHECK_FAILED` if any axiom fails.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spinmtc_validate(c: *const SpinmtcCategory, out: *mut *mut c_char) -> SpinmtcStatus {
    guard(|| {
        let report = fusion::validate(category(c)?);
        put_json(out, &serde_json::to_value(&report).expect("serializable"))?;
        Ok(status_for(report.is_valid()))
    })
}

/// Exact s-matrix and the `s² = αC` check.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spinmtc_smatrix(c: *const SpinmtcCategory, out: *mut *mut c_char) -> SpinmtcStatus {
    guard(|| {
        let d = category(c)?;
        let s = fusion::compute_smatrix(d)?;
        let chk = fusion::check_s_squared(&s, d);
        put_json(out, &json!({"labels": d.labels(), "s": s.data, "s_squared": chk}))?;
        Ok(status_for(chk.holds))
    })
}

unsafe fn pick_vminus(d: &FusionData, vminus: *const c_char) -> Result<usize, Failure> {
    Ok(clifford::choose_vminus(d, opt_str_arg(vminus, "vminus")?)?)
}

/// NS/R classification and block checks. `vminus` may be null when the
/// category has a single candidate.
///
/// # Safety
/// `c` must be a live handle, `vminus` null or a NUL-terminated string,
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn spinmtc_classify(
    c: *const SpinmtcCategory,
    vminus: *const c_char,
    out: *mut *mut c_char,
) -> SpinmtcStatus {
    guard(|| {
        let d = category(c)?;
        let vm = pick_vminus(d, vminus)?;
        let st = CliffordStructure::new(d, vm)?;
        if st.kind() == CliffordKind::PreCliffordSqrt {
            put_json(out, &json!({"vminus": d.label(vm), "kind": st.kind()}))?;
            return Ok(SpinmtcStatus::Ok);
        }
        let cls = clifford::classify_labels(d, vm)?;
        let blocks = clifford::verify_block_structure(d, &cls, &fusion::compute_smatrix(d)?);
        put_json(
            out,
            &json!({
                "vminus": d.label(vm),
                "kind": st.kind(),
                "classification": cls.named(d),
                "blocks": blocks,
            }),
        )?;
        Ok(status_for(blocks.all_pass))
    })
}

/// Torus dimensions written to `out[0..4]` in the order AA, AP, PA, PP.
///
/// # Safety
/// `c` must be a live handle, `vminus` null or a NUL-terminated string,
/// `out` must point to four writable `uint64_t`.
#[no_mangle]
pub unsafe extern "C" fn spinmtc_torus_dims(
    c: *const SpinmtcCategory,
    vminus: *const c_char,
    out: *mut u64,
) -> SpinmtcStatus {
    guard(|| {
        let d = category(c)?;
        if out.is_null() {
            return Err(Failure(SpinmtcStatus::NullArgument, "output pointer is null".into()));
        }
        let cls = clifford::classify_labels(d, pick_vminus(d, vminus)?)?;
        let t = spinfunctor::torus_dims(&cls);
        for (i, k) in ["AA", "AP", "PA", "PP"].iter().enumerate() {
            *out.add(i) = t.get(k);
        }
        Ok(SpinmtcStatus::Ok)
    })
}

/// Sphere report for comma-separated boundary labels.
///
/// # Safety
/// `c` must be a live handle, `vminus` null or a NUL-terminated string,
/// `labels` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn spinmtc_sphere(
    c: *const SpinmtcCategory,
    vminus: *const c_char,
    labels: *const c_char,
    out: *mut *mut c_char,
) -> SpinmtcStatus {
    guard(|| {
        let d = category(c)?;
        let names: Vec<&str> = str_arg(labels, "labels")?.split(',').map(str::trim).collect();
        let cls = clifford::classify_labels(d, pick_vminus(d, vminus)?)?;
        let spec = SpinSphereSpec::from_names(d, &cls, &names)?;
        put_json(
            out,
            &serde_json::to_value(spinfunctor::sphere_report(&spec)?).expect("serializable"),
        )?;
        Ok(SpinmtcStatus::Ok)
    })
}

/// Label table of the minimal model SM(p,q).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spinmtc_minimal(p: i64, q: i64, out: *mut *mut c_char) -> SpinmtcStatus {
    guard(|| {
        let report = minimal::minimal_report(&MinimalModelSpec::new(p, q)?)?;
        put_json(out, &serde_json::to_value(report).expect("serializable"))?;
        Ok(SpinmtcStatus::Ok)
    })
}

/// Singular vector of SM(p,q) at degree (p−1)(q−1)/2; `CHECK_FAILED` if
/// its leading term does not have the expected shape.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spinmtc_singvec(p: i64, q: i64, out: *mut *mut c_char) -> SpinmtcStatus {
    guard(|| {
        let r = verma::verify_minimal_singular(p, q)?;
        put_json(out, &serde_json::to_value(&r).expect("serializable"))?;
        Ok(status_for(r.space_dim == 1 && r.shape_matches))
    })
}
