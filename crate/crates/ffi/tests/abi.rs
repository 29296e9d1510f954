use std::ffi::{c_char, CStr, CString};
use std::ptr;

use poset_tense::fixtures::EXAMPLE_ONE_TEXT;
use poset_tense_ffi::*;

fn parse(src: &str) -> (PtStatus, *mut PtInstance) {
    let src = CString::new(src).unwrap();
    let mut h = ptr::null_mut();
    let status = unsafe { pt_instance_parse(src.as_ptr(), &mut h) };
    (status, h)
}

fn take(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { pt_string_free(s) };
    out
}

fn last_error() -> String {
    let e = pt_last_error();
    assert!(!e.is_null());
    unsafe { CStr::from_ptr(e) }.to_str().unwrap().to_string()
}

#[test]
fn evaluates_operators_on_the_example() {
    let (status, h) = parse(EXAMPLE_ONE_TEXT);
    assert_eq!(status, PtStatus::Ok);
    let r = CString::new("r").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { pt_tense(h, r.as_ptr(), PT_OP_P, &mut out) }, PtStatus::Ok);
    assert_eq!(take(out), "[a, {e,f}, {e,f}]");
    assert_eq!(unsafe { pt_compose(h, r.as_ptr(), PT_OP_P, PT_OP_P, &mut out) }, PtStatus::Ok);
    assert_eq!(take(out), "[a, 1, 1]");
    let p = CString::new("p").unwrap();
    assert_eq!(unsafe { pt_tense(h, p.as_ptr(), PT_OP_G, &mut out) }, PtStatus::Ok);
    assert_eq!(take(out), "[b, b, e]");
    unsafe { pt_instance_free(h) };
}

#[test]
fn reports_errors_by_status() {
    let (status, h) = parse("poset A { elements 0 1 }");
    assert_eq!(status, PtStatus::ParseError);
    assert!(h.is_null());
    assert!(last_error().contains("parse error"));

    let (status, _) = parse("poset A { elements: 0 a 1; covers: 0<a, a<0, a<1; }");
    assert_eq!(status, PtStatus::ValidationError);
    assert!(last_error().contains("cycle"));

    let (_, h) = parse(EXAMPLE_ONE_TEXT);
    let r = CString::new("r").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { pt_tense(h, r.as_ptr(), 9, &mut out) }, PtStatus::UnknownOperator);
    let nope = CString::new("nope").unwrap();
    assert_eq!(unsafe { pt_tense(h, nope.as_ptr(), PT_OP_P, &mut out) }, PtStatus::ParseError);
    assert_eq!(unsafe { pt_tense(ptr::null(), r.as_ptr(), PT_OP_P, &mut out) }, PtStatus::NullArgument);
    assert_eq!(unsafe { pt_tense(h, r.as_ptr(), PT_OP_P, ptr::null_mut()) }, PtStatus::NullArgument);
    unsafe { pt_instance_free(h) };
}

#[test]
fn checks_and_exports_instances() {
    let (_, h) = parse(EXAMPLE_ONE_TEXT);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { pt_instance_check(h, &mut out) }, PtStatus::Ok);
    assert!(take(out).contains("\"ok\":true"));
    assert_eq!(unsafe { pt_instance_serialize(h, &mut out) }, PtStatus::Ok);
    let text = take(out);
    let (status, back) = parse(&text);
    assert_eq!(status, PtStatus::Ok);
    assert_eq!(unsafe { pt_instance_to_json(back, &mut out) }, PtStatus::Ok);
    assert!(take(out).contains("\"posets\""));
    unsafe {
        pt_instance_free(back);
        pt_instance_free(h);
    }

    let (_, bad) = parse("poset A { elements: 0 1; covers: 0<1; }\nframe T { points: 1 2; rel: 1->2; }");
    assert_eq!(unsafe { pt_instance_check(bad, ptr::null_mut()) }, PtStatus::ValidationError);
    assert!(last_error().contains("non-serial"));
    unsafe { pt_instance_free(bad) };
}

#[test]
fn verify_returns_json_reports() {
    let (_, h) = parse(EXAMPLE_ONE_TEXT);
    let suites = CString::new("th1, th5").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { pt_verify(suites.as_ptr(), 7, 10, h, &mut out) }, PtStatus::Ok);
    let report = take(out);
    assert!(report.contains("\"seed\": 7"));
    let unknown = CString::new("nope").unwrap();
    assert_eq!(unsafe { pt_verify(unknown.as_ptr(), 0, 1, ptr::null(), &mut out) }, PtStatus::ParseError);
    unsafe { pt_instance_free(h) };
}

#[test]
fn null_frees_are_ignored() {
    unsafe {
        pt_instance_free(ptr::null_mut());
        pt_string_free(ptr::null_mut());
    }
}
