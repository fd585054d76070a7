use std::ffi::{CStr, CString};
use std::ptr;

use boundrep_ffi::*;

const FIG1: &str = r#"{"n":3,"edges":[[0,1],[0,2],[1,2]],"class":"int","bounds":[
  {"L":[0,0],"R":[3,3]},{"L":[0,0],"R":[3,3]},{"L":[1,1],"R":[2,2]}]}"#;

fn parse(s: &str) -> (i32, *mut BrInstance) {
    let c = CString::new(s).unwrap();
    let mut inst = ptr::null_mut();
    let code = unsafe { br_instance_from_json(c.as_ptr(), &mut inst) };
    (code, inst)
}

#[test]
fn solve_both_classes() {
    let (code, inst) = parse(FIG1);
    assert_eq!(code, BR_OK);
    unsafe {
        assert_eq!(br_instance_vertex_count(inst), 3);
        let mut res = ptr::null_mut();
        assert_eq!(br_solve(inst, &mut res), BR_OK);
        assert!(br_result_is_sat(res));
        let json = CStr::from_ptr(br_result_json(res)).to_str().unwrap();
        assert!(json.contains("\"sat\""), "{json}");
        br_result_free(res);

        let class = CString::new("proper-int").unwrap();
        assert_eq!(br_instance_set_class(inst, class.as_ptr()), BR_OK);
        let mut res = ptr::null_mut();
        assert_eq!(br_solve(inst, &mut res), BR_UNSAT);
        assert!(!br_result_is_sat(res));
        br_result_free(res);
        br_instance_free(inst);
    }
}

#[test]
fn error_codes() {
    let (code, inst) = parse("{not json");
    assert_eq!(code, BR_ERR_PARSE);
    assert!(inst.is_null());
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(br_instance_from_json(ptr::null(), &mut out), BR_ERR_NULL);
        assert_eq!(br_instance_from_json(c"{}".as_ptr(), ptr::null_mut()), BR_ERR_NULL);
        let bad = [0xffu8, 0];
        assert_eq!(br_instance_from_json(bad.as_ptr().cast(), &mut out), BR_ERR_UTF8);
        let mut res = ptr::null_mut();
        assert_eq!(br_solve(ptr::null(), &mut res), BR_ERR_NULL);
        assert!(res.is_null());
        assert!(!br_result_is_sat(ptr::null()));
        assert!(br_result_json(ptr::null()).is_null());
        assert_eq!(br_instance_vertex_count(ptr::null()), 0);
        br_instance_free(ptr::null_mut());
        br_result_free(ptr::null_mut());

        let (_, inst) = parse(FIG1);
        assert_eq!(br_instance_set_class(inst, c"chordal".as_ptr()), BR_ERR_CLASS);
        br_instance_free(inst);

        for c in [BR_OK, BR_UNSAT, BR_ERR_NULL, BR_ERR_UTF8, BR_ERR_PARSE, BR_ERR_CLASS, BR_ERR_PANIC, 99] {
            assert!(!CStr::from_ptr(br_status_message(c)).to_bytes().is_empty());
        }
    }
}

#[test]
fn header_declares_the_api() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/boundrep.h")).unwrap();
    for name in ["br_instance_from_json", "br_solve", "br_result_json", "br_result_free", "typedef struct BrInstance BrInstance"] {
        assert!(h.contains(name), "{name}");
    }
}
