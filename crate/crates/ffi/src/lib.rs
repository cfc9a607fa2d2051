//! C ABI over the `vtsa` library.
//!
//! Every fallible call returns an `i32` status (`VTSA_OK` on success) and
//! writes results through out-pointers. Objects are opaque handles that the
//! caller releases with the matching `*_free` function. After a failure the
//! message is available from [`vtsa_last_error_message`] on the same thread.
//!
//! Strings are copied into caller buffers: pass a buffer and its length, and
//! optionally a `needed` pointer that receives the length including the
//! terminating NUL. A null buffer only reports the length.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigUint;
use vtsa::bounds::expr::{cmp_bound, CmpResult, EvalConfig};
use vtsa::catalog;
use vtsa::group::profile::qp_profile;
use vtsa::local::local_action;
use vtsa::structure::{self, Outcome, ReductionResult};
use vtsa::{io, validate_pair, Graph, PermGroup, Permutation, VTPair};

pub const VTSA_OK: i32 = 0;
pub const VTSA_ERR_NULL_POINTER: i32 = 1;
pub const VTSA_ERR_INVALID_ARGUMENT: i32 = 2;
pub const VTSA_ERR_PARSE: i32 = 3;
pub const VTSA_ERR_PRECONDITION: i32 = 4;
pub const VTSA_ERR_RESOURCE: i32 = 5;
pub const VTSA_ERR_ASSERTION: i32 = 6;
pub const VTSA_ERR_IO: i32 = 7;
pub const VTSA_ERR_BUFFER_TOO_SMALL: i32 = 8;
pub const VTSA_ERR_PANIC: i32 = 9;

pub const VTSA_OUTCOME_BOUNDED: i32 = 0;
pub const VTSA_OUTCOME_REDUCED_QP: i32 = 1;
pub const VTSA_OUTCOME_REDUCED_BIQP: i32 = 2;
pub const VTSA_OUTCOME_UNCLASSIFIED: i32 = 3;

pub const VTSA_CMP_LESS_OR_EQUAL: i32 = 0;
pub const VTSA_CMP_GREATER: i32 = 1;
pub const VTSA_CMP_UNDECIDED: i32 = 2;

/// A permutation group.
pub struct VtsaGroup(PermGroup);

/// A simple graph.
pub struct VtsaGraph(Graph);

/// A validated graph-group pair.
pub struct VtsaPair(VTPair);

/// The result of running the reduction on a pair.
pub struct VtsaReduction(ReductionResult);

/// Structural profile of the group of a pair.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VtsaProfile {
    pub quasiprimitive: bool,
    pub biquasiprimitive: bool,
    pub semiprimitive: bool,
    pub max_normal_orbits: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Fail {
    code: i32,
    msg: String,
}

impl Fail {
    fn new(code: i32, msg: impl Into<String>) -> Self {
        Fail { code, msg: msg.into() }
    }

    fn null(what: &str) -> Self {
        Fail::new(VTSA_ERR_NULL_POINTER, format!("{what} is null"))
    }
}

impl From<vtsa::Error> for Fail {
    fn from(e: vtsa::Error) -> Self {
        use vtsa::Error as E;
        let code = match &e {
            E::Parse { .. } => VTSA_ERR_PARSE,
            E::Precondition(_) => VTSA_ERR_PRECONDITION,
            E::Resource { .. } => VTSA_ERR_RESOURCE,
            E::Assertion(_) => VTSA_ERR_ASSERTION,
            E::Io(_) => VTSA_ERR_IO,
            _ => VTSA_ERR_INVALID_ARGUMENT,
        };
        Fail::new(code, e.to_string())
    }
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> i32 {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => VTSA_OK,
        Ok(Err(fail)) => {
            set_last_error(&fail.msg);
            fail.code
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(&format!("panic: {msg}"));
            VTSA_ERR_PANIC
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail::null(what))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_handle<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::null("output pointer"));
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::new(VTSA_ERR_INVALID_ARGUMENT, format!("{what} is not valid UTF-8")))
}

unsafe fn slice<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(Fail::null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn copy_out(s: &str, buf: *mut c_char, len: usize, needed: *mut usize) -> Result<(), Fail> {
    let total = s.len() + 1;
    if !needed.is_null() {
        needed.write(total);
    }
    if buf.is_null() {
        return Ok(());
    }
    if len < total {
        return Err(Fail::new(
            VTSA_ERR_BUFFER_TOO_SMALL,
            format!("buffer holds {len} bytes, {total} needed"),
        ));
    }
    std::ptr::copy_nonoverlapping(s.as_ptr(), buf.cast::<u8>(), s.len());
    buf.add(s.len()).write(0);
    Ok(())
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String, Fail> {
    serde_json::to_string(v).map_err(|e| Fail::new(VTSA_ERR_ASSERTION, e.to_string()))
}

/// Version string of the library, statically allocated.
#[no_mangle]
pub extern "C" fn vtsa_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Copies the last error message raised on this thread.
///
/// # Safety
/// `buf` must be null or valid for `len` bytes; `needed` must be null or valid.
#[no_mangle]
pub unsafe extern "C" fn vtsa_last_error_message(buf: *mut c_char, len: usize, needed: *mut usize) -> i32 {
    let msg = LAST_ERROR.with(|e| e.borrow().as_ref().map(|c| c.to_string_lossy().into_owned()));
    let msg = msg.unwrap_or_default();
    match copy_out(&msg, buf, len, needed) {
        Ok(()) => VTSA_OK,
        Err(f) => f.code,
    }
}

/// Seeds the randomised phase of group computations. Results do not depend on it.
#[no_mangle]
pub extern "C" fn vtsa_set_seed(seed: u64) {
    vtsa::group::set_seed(seed);
}

/// Builds a group of the given degree from `count` generators laid out
/// consecutively in `images`, each as `degree` point images.
///
/// # Safety
/// `images` must hold `degree * count` values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn vtsa_group_from_images(
    degree: usize,
    images: *const u32,
    count: usize,
    out: *mut *mut VtsaGroup,
) -> i32 {
    guard(|| {
        let len = degree
            .checked_mul(count)
            .ok_or_else(|| Fail::new(VTSA_ERR_INVALID_ARGUMENT, "degree * count overflows"))?;
        let all = slice(images, len, "images")?;
        let gens = if degree == 0 {
            Vec::new()
        } else {
            all.chunks(degree)
                .map(|c| Permutation::from_images(c.to_vec()))
                .collect::<vtsa::Result<Vec<_>>>()?
        };
        put_handle(out, VtsaGroup(PermGroup::new(degree, gens)?))
    })
}

/// Parses a group in the text format used by `.group` files.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn vtsa_group_parse(src: *const c_char, out: *mut *mut VtsaGroup) -> i32 {
    guard(|| put_handle(out, VtsaGroup(io::parse_group(text(src, "src")?)?)))
}

/// # Safety
/// `group` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn vtsa_group_free(group: *mut VtsaGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn vtsa_group_degree(group: *const VtsaGroup, out: *mut usize) -> i32 {
    guard(|| put(out, deref(group, "group")?.0.degree()))
}

/// Group order as a decimal string.
///
/// # Safety
/// `group` must be valid; `buf` must be null or valid for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn vtsa_group_order(
    group: *const VtsaGroup,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> i32 {
    guard(|| copy_out(&deref(group, "group")?.0.order().to_string(), buf, len, needed))
}

/// Whether the permutation with images `images[0..degree]` lies in the group.
///
/// # Safety
/// `images` must hold the group's degree many values.
#[no_mangle]
pub unsafe extern "C" fn vtsa_group_contains(group: *const VtsaGroup, images: *const u32, out: *mut bool) -> i32 {
    guard(|| {
        let g = &deref(group, "group")?.0;
        let p = Permutation::from_images(slice(images, g.degree(), "images")?.to_vec())?;
        if p.degree() != g.degree() {
            return Err(Fail::new(VTSA_ERR_INVALID_ARGUMENT, "degree mismatch"));
        }
        put(out, g.contains(&p))
    })
}

/// Builds an undirected graph on `n` vertices from `count` edges given as
/// consecutive vertex pairs in `edges`.
///
/// # Safety
/// `edges` must hold `2 * count` values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn vtsa_graph_from_edges(
    n: usize,
    edges: *const u32,
    count: usize,
    out: *mut *mut VtsaGraph,
) -> i32 {
    guard(|| {
        let len = count
            .checked_mul(2)
            .ok_or_else(|| Fail::new(VTSA_ERR_INVALID_ARGUMENT, "edge count overflows"))?;
        let flat = slice(edges, len, "edges")?;
        let pairs: Vec<(u32, u32)> = flat.chunks(2).map(|e| (e[0], e[1])).collect();
        put_handle(out, VtsaGraph(Graph::from_edges(n, &pairs, false)?))
    })
}

/// Parses a graph in the text format used by `.graph` files.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn vtsa_graph_parse(src: *const c_char, out: *mut *mut VtsaGraph) -> i32 {
    guard(|| put_handle(out, VtsaGraph(io::parse_graph(text(src, "src")?)?)))
}

/// # Safety
/// `graph` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn vtsa_graph_free(graph: *mut VtsaGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn vtsa_graph_order(graph: *const VtsaGraph, out: *mut usize) -> i32 {
    guard(|| put(out, deref(graph, "graph")?.0.order()))
}

/// Validates a pair. The graph and group are copied, so the caller still owns
/// and frees its handles.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn vtsa_pair_new(
    graph: *const VtsaGraph,
    group: *const VtsaGroup,
    d: usize,
    out: *mut *mut VtsaPair,
) -> i32 {
    guard(|| {
        let graph = deref(graph, "graph")?.0.clone();
        let group = deref(group, "group")?.0.clone();
        let pair = validate_pair(graph, group, d).map_err(vtsa::Error::from)?;
        put_handle(out, VtsaPair(pair))
    })
}

/// Reads and validates a `.pair` file.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn vtsa_pair_read(path: *const c_char, out: *mut *mut VtsaPair) -> i32 {
    guard(|| put_handle(out, VtsaPair(io::read_pair(Path::new(text(path, "path")?))?)))
}

/// Builds a catalogue example. `keys` and `values` give `count` integer
/// parameters such as `n` or `k`; pass zero for the defaults.
///
/// # Safety
/// `name` must be a NUL-terminated string; `keys` and `values` must hold
/// `count` entries; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn vtsa_example(
    name: *const c_char,
    keys: *const *const c_char,
    values: *const u64,
    count: usize,
    out: *mut *mut VtsaPair,
) -> i32 {
    guard(|| {
        let name = text(name, "name")?;
        let keys = slice(keys, count, "keys")?;
        let values = slice(values, count, "values")?;
        let mut params = BTreeMap::new();
        for (&k, &v) in keys.iter().zip(values) {
            params.insert(text(k, "key")?.to_string(), v);
        }
        let built = catalog::build_example(name, &params, catalog::DEFAULT_MAX_POINTS)?;
        put_handle(out, VtsaPair(built.pair))
    })
}

/// # Safety
/// `pair` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn vtsa_pair_free(pair: *mut VtsaPair) {
    if !pair.is_null() {
        drop(Box::from_raw(pair));
    }
}

/// Number of vertices.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn vtsa_pair_vertices(pair: *const VtsaPair, out: *mut usize) -> i32 {
    guard(|| put(out, deref(pair, "pair")?.0.graph.order()))
}

/// Valency of the graph.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn vtsa_pair_valency(pair: *const VtsaPair, out: *mut usize) -> i32 {
    guard(|| put(out, deref(pair, "pair")?.0.valency()))
}

/// A copy of the pair's group.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn vtsa_pair_group(pair: *const VtsaPair, out: *mut *mut VtsaGroup) -> i32 {
    guard(|| put_handle(out, VtsaGroup(deref(pair, "pair")?.0.group.clone())))
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn vtsa_pair_profile(pair: *const VtsaPair, out: *mut VtsaProfile) -> i32 {
    guard(|| {
        let p = qp_profile(&deref(pair, "pair")?.0.group)?;
        put(
            out,
            VtsaProfile {
                quasiprimitive: p.quasiprimitive,
                biquasiprimitive: p.biquasiprimitive,
                semiprimitive: p.semiprimitive,
                max_normal_orbits: p.max_normal_orbits,
            },
        )
    })
}

/// Local action at `vertex` as a JSON object.
///
/// # Safety
/// `pair` must be valid; `buf` must be null or valid for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn vtsa_pair_local_json(
    pair: *const VtsaPair,
    vertex: u32,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> i32 {
    guard(|| {
        let report = local_action(&deref(pair, "pair")?.0, vertex)?;
        copy_out(&to_json(&report)?, buf, len, needed)
    })
}

/// Runs the reduction appropriate to the pair's profile.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn vtsa_pair_reduce(pair: *const VtsaPair, out: *mut *mut VtsaReduction) -> i32 {
    guard(|| put_handle(out, VtsaReduction(structure::reduce(&deref(pair, "pair")?.0, None)?)))
}

/// # Safety
/// `reduction` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn vtsa_reduction_free(reduction: *mut VtsaReduction) {
    if !reduction.is_null() {
        drop(Box::from_raw(reduction));
    }
}

/// One of the `VTSA_OUTCOME_*` values.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn vtsa_reduction_outcome(reduction: *const VtsaReduction, out: *mut i32) -> i32 {
    guard(|| {
        let code = match deref(reduction, "reduction")?.0.outcome {
            Outcome::Bounded { .. } => VTSA_OUTCOME_BOUNDED,
            Outcome::ReducedQp { .. } => VTSA_OUTCOME_REDUCED_QP,
            Outcome::ReducedBiqp { .. } => VTSA_OUTCOME_REDUCED_BIQP,
            Outcome::Unclassified { .. } => VTSA_OUTCOME_UNCLASSIFIED,
        };
        put(out, code)
    })
}

/// Name of the route the reduction took.
///
/// # Safety
/// `reduction` must be valid; `buf` must be null or valid for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn vtsa_reduction_route(
    reduction: *const VtsaReduction,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> i32 {
    guard(|| copy_out(&deref(reduction, "reduction")?.0.route, buf, len, needed))
}

/// Route, outcome and check trace as a JSON object.
///
/// # Safety
/// `reduction` must be valid; `buf` must be null or valid for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn vtsa_reduction_json(
    reduction: *const VtsaReduction,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> i32 {
    guard(|| copy_out(&to_json(&deref(reduction, "reduction")?.0)?, buf, len, needed))
}

/// The `index`-th reduced pair: one for a quasiprimitive reduction, two for a
/// bi-quasiprimitive one.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn vtsa_reduction_pair(
    reduction: *const VtsaReduction,
    index: usize,
    out: *mut *mut VtsaPair,
) -> i32 {
    guard(|| {
        let pair = match (&deref(reduction, "reduction")?.0.outcome, index) {
            (Outcome::ReducedQp { lambda, .. }, 0) => lambda,
            (Outcome::ReducedBiqp { lambda_r, .. }, 0) => lambda_r,
            (Outcome::ReducedBiqp { lambda_s, .. }, 1) => lambda_s,
            _ => return Err(Fail::new(VTSA_ERR_INVALID_ARGUMENT, format!("no reduced pair at index {index}"))),
        };
        put_handle(out, VtsaPair(pair.clone()))
    })
}

/// Compares a bound expression against a decimal integer. Writes one of the
/// `VTSA_CMP_*` values.
///
/// # Safety
/// `expr` and `value` must be NUL-terminated strings; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn vtsa_bound_compare(expr: *const c_char, value: *const c_char, out: *mut i32) -> i32 {
    guard(|| {
        let e = vtsa::bounds::expr::parse(text(expr, "expr")?)?;
        let raw = text(value, "value")?;
        let v = BigUint::from_str(raw.trim())
            .map_err(|_| Fail::new(VTSA_ERR_PARSE, format!("not a non-negative integer: {raw}")))?;
        let code = match cmp_bound(&e, &v, &EvalConfig::default()) {
            CmpResult::LessOrEqual => VTSA_CMP_LESS_OR_EQUAL,
            CmpResult::Greater => VTSA_CMP_GREATER,
            CmpResult::Undecided => VTSA_CMP_UNDECIDED,
        };
        put(out, code)
    })
}
