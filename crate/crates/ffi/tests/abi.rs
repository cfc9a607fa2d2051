use std::ffi::{c_char, CStr, CString};
use std::ptr;

use vtsa_ffi::*;

fn last_error() -> String {
    let mut needed = 0usize;
    unsafe { vtsa_last_error_message(ptr::null_mut(), 0, &mut needed) };
    let mut buf = vec![0 as c_char; needed];
    assert_eq!(unsafe { vtsa_last_error_message(buf.as_mut_ptr(), buf.len(), ptr::null_mut()) }, VTSA_OK);
    unsafe { CStr::from_ptr(buf.as_ptr()) }.to_string_lossy().into_owned()
}

fn read_string(f: impl Fn(*mut c_char, usize, *mut usize) -> i32) -> String {
    let mut needed = 0usize;
    assert_eq!(f(ptr::null_mut(), 0, &mut needed), VTSA_OK);
    let mut buf = vec![0 as c_char; needed];
    assert_eq!(f(buf.as_mut_ptr(), buf.len(), ptr::null_mut()), VTSA_OK);
    unsafe { CStr::from_ptr(buf.as_ptr()) }.to_string_lossy().into_owned()
}

fn example(name: &str, params: &[(&str, u64)]) -> *mut VtsaPair {
    let name = CString::new(name).unwrap();
    let keys: Vec<CString> = params.iter().map(|(k, _)| CString::new(*k).unwrap()).collect();
    let key_ptrs: Vec<*const c_char> = keys.iter().map(|k| k.as_ptr()).collect();
    let values: Vec<u64> = params.iter().map(|&(_, v)| v).collect();
    let mut pair = ptr::null_mut();
    let code = unsafe { vtsa_example(name.as_ptr(), key_ptrs.as_ptr(), values.as_ptr(), params.len(), &mut pair) };
    assert_eq!(code, VTSA_OK, "{}", last_error());
    pair
}

fn cycle_pair(n: u32) -> (*mut VtsaGraph, *mut VtsaGroup) {
    let edges: Vec<u32> = (0..n).flat_map(|i| [i, (i + 1) % n]).collect();
    let rotation: Vec<u32> = (0..n).map(|i| (i + 1) % n).collect();
    let (mut graph, mut group) = (ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(vtsa_graph_from_edges(n as usize, edges.as_ptr(), n as usize, &mut graph), VTSA_OK);
        assert_eq!(vtsa_group_from_images(n as usize, rotation.as_ptr(), 1, &mut group), VTSA_OK);
    }
    (graph, group)
}

#[test]
fn group_order_and_membership() {
    let images = [1u32, 2, 3, 4, 0, 1, 0, 2, 3, 4];
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(vtsa_group_from_images(5, images.as_ptr(), 2, &mut g), VTSA_OK);
        assert_eq!(read_string(|b, l, n| vtsa_group_order(g, b, l, n)), "120");
        let mut degree = 0;
        assert_eq!(vtsa_group_degree(g, &mut degree), VTSA_OK);
        assert_eq!(degree, 5);
        let mut inside = false;
        assert_eq!(vtsa_group_contains(g, [4u32, 3, 2, 1, 0].as_ptr(), &mut inside), VTSA_OK);
        assert!(inside);
        vtsa_group_free(g);
    }
}

#[test]
fn small_buffer_is_reported() {
    let src = CString::new("degree 5\n1 2 3 4 0\n1 0 2 3 4\n").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(vtsa_group_parse(src.as_ptr(), &mut g), VTSA_OK);
        let mut buf = [0 as c_char; 3];
        let mut needed = 0;
        assert_eq!(vtsa_group_order(g, buf.as_mut_ptr(), buf.len(), &mut needed), VTSA_ERR_BUFFER_TOO_SMALL);
        assert_eq!(needed, 4);
        vtsa_group_free(g);
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(vtsa_group_degree(ptr::null(), ptr::null_mut()), VTSA_ERR_NULL_POINTER);
        assert!(last_error().contains("null"));
        let bad = CString::new("degree 3\n0 1 2\n0 0 1\n").unwrap();
        assert_eq!(vtsa_group_parse(bad.as_ptr(), &mut g), VTSA_ERR_PARSE);
        assert!(last_error().contains("line 3"), "{}", last_error());
        assert!(g.is_null());
        let not_perm = [0u32, 0, 1];
        assert_eq!(vtsa_group_from_images(3, not_perm.as_ptr(), 1, &mut g), VTSA_ERR_INVALID_ARGUMENT);
    }
}

#[test]
fn pair_validation_diagnoses() {
    let (graph, group) = cycle_pair(6);
    let mut pair = ptr::null_mut();
    unsafe {
        assert_eq!(vtsa_pair_new(graph, group, 1, &mut pair), VTSA_ERR_INVALID_ARGUMENT);
        assert!(last_error().contains("valency 2 exceeds"), "{}", last_error());
        assert_eq!(vtsa_pair_new(graph, group, 2, &mut pair), VTSA_OK);
        let mut profile = VtsaProfile::default();
        assert_eq!(vtsa_pair_profile(pair, &mut profile), VTSA_OK);
        assert!(!profile.quasiprimitive);
        assert_eq!(profile.max_normal_orbits, 3);
        vtsa_pair_free(pair);
        vtsa_graph_free(graph);
        vtsa_group_free(group);
    }
}

#[test]
fn hamming_reduces_to_k5() {
    let pair = example("hamming", &[]);
    let mut r = ptr::null_mut();
    unsafe {
        assert_eq!(vtsa_pair_reduce(pair, &mut r), VTSA_OK, "{}", last_error());
        let mut outcome = -1;
        assert_eq!(vtsa_reduction_outcome(r, &mut outcome), VTSA_OK);
        assert_eq!(outcome, VTSA_OUTCOME_REDUCED_QP);
        assert_eq!(read_string(|b, l, n| vtsa_reduction_route(r, b, l, n)), "product_action");
        let json: serde_json::Value = serde_json::from_str(&read_string(|b, l, n| vtsa_reduction_json(r, b, l, n))).unwrap();
        assert_eq!(json["outcome"]["summary"]["stabiliser_order"], "12");
        let mut lambda = ptr::null_mut();
        assert_eq!(vtsa_reduction_pair(r, 0, &mut lambda), VTSA_OK);
        let (mut vertices, mut valency) = (0, 0);
        assert_eq!(vtsa_pair_vertices(lambda, &mut vertices), VTSA_OK);
        assert_eq!(vtsa_pair_valency(lambda, &mut valency), VTSA_OK);
        assert_eq!((vertices, valency), (5, 4));
        assert_eq!(vtsa_reduction_pair(r, 1, &mut lambda), VTSA_ERR_INVALID_ARGUMENT);
        vtsa_pair_free(lambda);
        vtsa_reduction_free(r);
        vtsa_pair_free(pair);
    }
}

#[test]
fn k33_splits_into_two_pairs() {
    let pair = example("biqp_product", &[]);
    let mut r = ptr::null_mut();
    unsafe {
        assert_eq!(vtsa_pair_reduce(pair, &mut r), VTSA_OK, "{}", last_error());
        let mut outcome = -1;
        assert_eq!(vtsa_reduction_outcome(r, &mut outcome), VTSA_OK);
        assert!(outcome == VTSA_OUTCOME_REDUCED_BIQP || outcome == VTSA_OUTCOME_BOUNDED, "{outcome}");
        vtsa_reduction_free(r);
        vtsa_pair_free(pair);
    }
}

#[test]
fn local_action_json() {
    let pair = example("petersen", &[]);
    unsafe {
        let json: serde_json::Value =
            serde_json::from_str(&read_string(|b, l, n| vtsa_pair_local_json(pair, 3, b, l, n))).unwrap();
        assert_eq!(json["induced_order"], "6");
        assert_eq!(json["flags"]["two_transitive"], true);
        let mut needed = 0;
        assert_eq!(vtsa_pair_local_json(pair, 10, ptr::null_mut(), 0, &mut needed), VTSA_ERR_INVALID_ARGUMENT);
        vtsa_pair_free(pair);
    }
}

#[test]
fn example_parameters_pass_through() {
    let pair = example("ex1", &[("n", 6)]);
    let mut group = ptr::null_mut();
    unsafe {
        let mut vertices = 0;
        assert_eq!(vtsa_pair_vertices(pair, &mut vertices), VTSA_OK);
        assert_eq!(vertices, 12);
        assert_eq!(vtsa_pair_group(pair, &mut group), VTSA_OK);
        assert_eq!(read_string(|b, l, n| vtsa_group_order(group, b, l, n)), (64u64 * 12).to_string());
        vtsa_group_free(group);
        vtsa_pair_free(pair);
    }
}

#[test]
fn bound_comparison() {
    let e = CString::new("(fact (mul 3 (fact 3)))").unwrap();
    let mut out = -1;
    unsafe {
        let at = CString::new("6402373705728000").unwrap();
        assert_eq!(vtsa_bound_compare(e.as_ptr(), at.as_ptr(), &mut out), VTSA_OK);
        assert_eq!(out, VTSA_CMP_LESS_OR_EQUAL);
        let above = CString::new("6402373705728001").unwrap();
        assert_eq!(vtsa_bound_compare(e.as_ptr(), above.as_ptr(), &mut out), VTSA_OK);
        assert_eq!(out, VTSA_CMP_GREATER);
        let junk = CString::new("-4").unwrap();
        assert_eq!(vtsa_bound_compare(e.as_ptr(), junk.as_ptr(), &mut out), VTSA_ERR_PARSE);
    }
}

#[test]
fn null_handles_free_quietly() {
    unsafe {
        vtsa_group_free(ptr::null_mut());
        vtsa_graph_free(ptr::null_mut());
        vtsa_pair_free(ptr::null_mut());
        vtsa_reduction_free(ptr::null_mut());
    }
    let v = unsafe { CStr::from_ptr(vtsa_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/vtsa.h")).unwrap();
    let src = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exports: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .filter_map(|rest| rest.split('(').next())
        .collect();
    assert!(exports.len() > 20);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = which_cc() else { return };
    let dir = tempfile::TempDir::new().unwrap();
    let file = dir.path().join("probe.c");
    std::fs::write(&file, "#include \"vtsa.h\"\nint main(void) { VtsaProfile p; (void)p; return VTSA_OK; }\n").unwrap();
    let status = std::process::Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(concat!(env!("CARGO_MANIFEST_DIR"), "/include"))
        .arg(&file)
        .status()
        .unwrap();
    assert!(status.success());
}

fn which_cc() -> Result<&'static str, ()> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| std::process::Command::new(c).arg("--version").output().is_ok_and(|o| o.status.success()))
        .ok_or(())
}
