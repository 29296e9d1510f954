//! C ABI over `poset-tense`.
//!
//! Instances are opaque handles created by [`pt_instance_parse`] and released
//! with [`pt_instance_free`]. Every fallible call returns a [`PtStatus`];
//! on failure [`pt_last_error`] describes the problem. Strings handed out
//! through `char **out` parameters are owned by the caller and must be
//! released with [`pt_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use poset_tense::dsl::{self, json, Instance};
use poset_tense::poset::DEFAULT_ENUM_CAP;
use poset_tense::suites::{self, InputCase, SuiteConfig};
use poset_tense::tense::{apply_tense, compose};
use poset_tense::{display, TenseOp};

/// Operator code for `P`, accepted by [`pt_tense`] and [`pt_compose`].
pub const PT_OP_P: u32 = 0;
/// Operator code for `F`.
pub const PT_OP_F: u32 = 1;
/// Operator code for `H`.
pub const PT_OP_H: u32 = 2;
/// Operator code for `G`.
pub const PT_OP_G: u32 = 3;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PtStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    /// Malformed text or an unknown name.
    ParseError = 3,
    /// Well-formed input describing an invalid structure.
    ValidationError = 4,
    /// A property suite found a counterexample.
    Counterexample = 5,
    UnknownOperator = 6,
    Internal = 7,
}

/// A parsed instance file.
pub struct PtInstance {
    inner: Instance,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

type Fallible<T> = Result<T, (PtStatus, String)>;

/// Runs `body`, converting errors and panics into a status.
fn guard(body: impl FnOnce() -> Fallible<PtStatus>) -> PtStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(status)) => status,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            PtStatus::Internal
        }
    }
}

unsafe fn text<'a>(s: *const c_char) -> Fallible<&'a str> {
    if s.is_null() {
        return Err((PtStatus::NullArgument, "null string argument".into()));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| (PtStatus::InvalidUtf8, e.to_string()))
}

unsafe fn instance<'a>(h: *const PtInstance) -> Fallible<&'a Instance> {
    h.as_ref()
        .map(|h| &h.inner)
        .ok_or((PtStatus::NullArgument, "null instance handle".into()))
}

unsafe fn hand_out(out: *mut *mut c_char, s: String) -> Fallible<PtStatus> {
    if out.is_null() {
        return Err((PtStatus::NullArgument, "null output pointer".into()));
    }
    let c = CString::new(s).map_err(|e| (PtStatus::Internal, e.to_string()))?;
    *out = c.into_raw();
    Ok(PtStatus::Ok)
}

fn op(code: u32) -> Fallible<TenseOp> {
    TenseOp::ALL
        .get(code as usize)
        .copied()
        .ok_or((PtStatus::UnknownOperator, format!("operator code {code} is not one of 0..=3")))
}

/// Message of the last failed call on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned through an output parameter. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn pt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses instance text into a new handle stored in `*out`.
///
/// # Safety
/// `src` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pt_instance_parse(src: *const c_char, out: *mut *mut PtInstance) -> PtStatus {
    guard(|| {
        let src = text(src)?;
        if out.is_null() {
            return Err((PtStatus::NullArgument, "null output pointer".into()));
        }
        let inner = dsl::parse(src).map_err(|e| {
            let status = if e.is_syntax() { PtStatus::ParseError } else { PtStatus::ValidationError };
            (status, e.to_string())
        })?;
        *out = Box::into_raw(Box::new(PtInstance { inner }));
        Ok(PtStatus::Ok)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `h` must come from [`pt_instance_parse`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn pt_instance_free(h: *mut PtInstance) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Canonical instance text.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pt_instance_serialize(h: *const PtInstance, out: *mut *mut c_char) -> PtStatus {
    guard(|| hand_out(out, dsl::serialize(instance(h)?)))
}

/// The instance as JSON.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pt_instance_to_json(h: *const PtInstance, out: *mut *mut c_char) -> PtStatus {
    guard(|| hand_out(out, json::to_json_string(instance(h)?)))
}

/// Validates every declared structure. Returns `VALIDATION_ERROR` if any is
/// invalid; `*report` (if not null) receives the per-item JSON array.
///
/// # Safety
/// `h` must be a live handle; `report` may be null.
#[no_mangle]
pub unsafe extern "C" fn pt_instance_check(h: *const PtInstance, report: *mut *mut c_char) -> PtStatus {
    guard(|| {
        let items = instance(h)?.validate(DEFAULT_ENUM_CAP);
        if !report.is_null() {
            let s = serde_json_string(&items)?;
            hand_out(report, s)?;
        }
        match items.iter().find(|i| !i.ok) {
            None => Ok(PtStatus::Ok),
            Some(i) => Err((PtStatus::ValidationError, format!("{} {}: {}", i.kind, i.name, i.detail))),
        }
    })
}

fn serde_json_string<T: serde::Serialize>(v: &T) -> Fallible<String> {
    serde_json::to_string(v).map_err(|e| (PtStatus::Internal, e.to_string()))
}

unsafe fn evaluate(
    h: *const PtInstance,
    family: *const c_char,
    outer: Option<u32>,
    inner: u32,
    out: *mut *mut c_char,
) -> Fallible<PtStatus> {
    let inst = instance(h)?;
    let spec = text(family)?;
    let (_, fam) = inst.resolve_family(spec).map_err(|e| (PtStatus::ParseError, e))?;
    let (pn, fname) = inst
        .family_owner(spec)
        .ok_or((PtStatus::ParseError, format!("no prop declared for `{spec}`")))?;
    let p = inst.poset(&pn).expect("resolved prop has a poset");
    let f = inst.frame(&fname).expect("resolved prop has a frame");
    let y = op(inner)?;
    let traj = match outer {
        None => apply_tense(y, p, f, &fam),
        Some(x) => compose(op(x)?, y, p, f, &fam),
    }
    .map_err(|e| (PtStatus::ValidationError, e.to_string()))?;
    hand_out(out, display::trajectory(p, &traj))
}

/// `op(family)` rendered as labelled antichains, e.g. `[a, {e,f}, {e,f}]`.
/// `family` is a declared family, a prop name, or an inline list `{p,q}`.
///
/// # Safety
/// `h` must be a live handle, `family` a NUL-terminated string, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn pt_tense(h: *const PtInstance, family: *const c_char, op: u32, out: *mut *mut c_char) -> PtStatus {
    guard(|| evaluate(h, family, None, op, out))
}

/// `(outer * inner)(family)`, rendered like [`pt_tense`].
///
/// # Safety
/// As for [`pt_tense`].
#[no_mangle]
pub unsafe extern "C" fn pt_compose(
    h: *const PtInstance,
    family: *const c_char,
    outer: u32,
    inner: u32,
    out: *mut *mut c_char,
) -> PtStatus {
    guard(|| evaluate(h, family, Some(outer), inner, out))
}

/// Runs comma-separated property suites (`"all"` for every suite) and
/// stores the JSON report in `*report`. `input` may be null; otherwise its
/// cases run before the generated ones. Returns `COUNTEREXAMPLE` when any
/// property fails; the report is written either way.
///
/// # Safety
/// `suite_list` must be a NUL-terminated string, `input` null or a live handle,
/// `report` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pt_verify(
    suite_list: *const c_char,
    seed: u64,
    cases: usize,
    input: *const PtInstance,
    report: *mut *mut c_char,
) -> PtStatus {
    guard(|| {
        let names: Vec<&str> = text(suite_list)?.split(',').map(str::trim).collect();
        let inputs = if input.is_null() {
            Vec::new()
        } else {
            InputCase::from_instance(instance(input)?)
        };
        let cfg = SuiteConfig {
            seed,
            cases,
            inputs,
            ..SuiteConfig::default()
        };
        let r = suites::run_suites(&names, &cfg).map_err(|e| (PtStatus::ParseError, e.to_string()))?;
        hand_out(report, r.to_json())?;
        if r.passed() {
            Ok(PtStatus::Ok)
        } else {
            Err((PtStatus::Counterexample, format!("{} properties failed", r.failed_properties())))
        }
    })
}
