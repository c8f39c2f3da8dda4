//! C ABI over `cubenet`.
//!
//! Every fallible function returns a [`CubenetStatus`] and writes results
//! through out-pointers. On failure, [`cubenet_last_error`] returns a message
//! for the calling thread. Handles and strings returned by this library must
//! be released with the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use cubenet::congestion::{pairwise_congestion_par, paradox_metrics_from, CongestionEvent};
use cubenet::equilibrium::{
    best_response, kt_verify, sample_best_response, Allocation, PlayerProblem,
};
use cubenet::network::{LinkKind, Network, NetworkSelector, DEFAULT_NODE_CAP};
use cubenet::report::{events_csv, summary_doc, verify_paper};
use cubenet::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubenetStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed input: selector, JSON, or a violated problem constraint.
    InvalidInput = 3,
    /// The requested network exceeds the node cap.
    SizeLimit = 4,
    Precondition = 5,
    OutOfRange = 6,
    Internal = 7,
}

/// Link kinds in census order.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubenetLinkKind {
    Unit = 0,
    PlanarDiagonal = 1,
    SpatialDiagonal = 2,
    LongPlanarDiagonal = 3,
    LongSpatialDiagonal = 4,
    LongEdge = 5,
    Other = 6,
}

/// Number of entries written by [`cubenet_network_census`].
pub const CUBENET_LINK_KIND_COUNT: usize = 7;

impl From<LinkKind> for CubenetLinkKind {
    fn from(k: LinkKind) -> Self {
        match k {
            LinkKind::Unit => CubenetLinkKind::Unit,
            LinkKind::PlanarDiagonal => CubenetLinkKind::PlanarDiagonal,
            LinkKind::SpatialDiagonal => CubenetLinkKind::SpatialDiagonal,
            LinkKind::LongPlanarDiagonal => CubenetLinkKind::LongPlanarDiagonal,
            LinkKind::LongSpatialDiagonal => CubenetLinkKind::LongSpatialDiagonal,
            LinkKind::LongEdge => CubenetLinkKind::LongEdge,
            LinkKind::Other => CubenetLinkKind::Other,
        }
    }
}

/// Opaque complete network.
pub struct CubenetNetwork {
    net: Network,
}

/// Opaque result of a pairwise congestion sweep.
pub struct CubenetCongestion {
    net: Network,
    events: Vec<CongestionEvent>,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CubenetCongestionCounts {
    pub point_events: usize,
    pub line_events: usize,
    pub full_events: usize,
    pub point_coordinates: usize,
    pub links_total: usize,
    pub links_congested: usize,
    pub external_events: usize,
    pub full_nodes: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("nul bytes removed"));
}

struct Failure(CubenetStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::NodeCap { .. } => CubenetStatus::SizeLimit,
            Error::Precondition(_) => CubenetStatus::Precondition,
            Error::Io(_) => CubenetStatus::Internal,
            _ => CubenetStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure(CubenetStatus::InvalidInput, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(CubenetStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics into a status plus last-error text.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> CubenetStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CubenetStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            CubenetStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(CubenetStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s)
        .map_err(|_| Failure(CubenetStatus::Internal, "nul byte in output".into()))?;
    write_out(out, c.into_raw(), "out")
}

unsafe fn network<'a>(h: *const CubenetNetwork) -> Result<&'a Network, Failure> {
    h.as_ref().map(|h| &h.net).ok_or_else(|| null("network"))
}

unsafe fn congestion<'a>(h: *const CubenetCongestion) -> Result<&'a CubenetCongestion, Failure> {
    h.as_ref().ok_or_else(|| null("congestion"))
}

/// Message describing the last failure on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cubenet_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, statically allocated.
#[no_mangle]
pub extern "C" fn cubenet_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn cubenet_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the network named by `selector` (for example `cube` or
/// `lattice:3,3,3`). A `node_cap` of 0 selects the default cap.
///
/// # Safety
/// `selector` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cubenet_network_build(
    selector: *const c_char,
    node_cap: usize,
    out: *mut *mut CubenetNetwork,
) -> CubenetStatus {
    guard(|| {
        let sel: NetworkSelector = read_str(selector, "selector")?.parse()?;
        let cap = if node_cap == 0 {
            DEFAULT_NODE_CAP
        } else {
            node_cap
        };
        let net = sel.build(cap)?;
        write_out(out, Box::into_raw(Box::new(CubenetNetwork { net })), "out")
    })
}

/// Parses a network JSON document.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cubenet_network_from_json(
    json: *const c_char,
    out: *mut *mut CubenetNetwork,
) -> CubenetStatus {
    guard(|| {
        let net = Network::from_json(read_str(json, "json")?)?;
        write_out(out, Box::into_raw(Box::new(CubenetNetwork { net })), "out")
    })
}

/// # Safety
/// `net` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn cubenet_network_free(net: *mut CubenetNetwork) {
    if !net.is_null() {
        drop(Box::from_raw(net));
    }
}

/// # Safety
/// `net` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cubenet_network_node_count(
    net: *const CubenetNetwork,
    out: *mut usize,
) -> CubenetStatus {
    guard(|| write_out(out, network(net)?.nodes().len(), "out"))
}

/// # Safety
/// `net` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cubenet_network_link_count(
    net: *const CubenetNetwork,
    out: *mut usize,
) -> CubenetStatus {
    guard(|| write_out(out, network(net)?.links().len(), "out"))
}

/// Writes the lattice coordinates of node `index` into `out[0..3]`.
///
/// # Safety
/// `net` must be a live handle; `out` must point to three writable values.
#[no_mangle]
pub unsafe extern "C" fn cubenet_network_node(
    net: *const CubenetNetwork,
    index: usize,
    out: *mut i64,
) -> CubenetStatus {
    guard(|| {
        let node = network(net)?
            .nodes()
            .get(index)
            .ok_or_else(|| Failure(CubenetStatus::OutOfRange, format!("node {index}")))?;
        if out.is_null() {
            return Err(null("out"));
        }
        for (k, c) in node.coords().into_iter().enumerate() {
            out.add(k).write(c);
        }
        Ok(())
    })
}

/// Writes the endpoint node indices and the kind of link `index`.
///
/// # Safety
/// `net` must be a live handle; the out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn cubenet_network_link(
    net: *const CubenetNetwork,
    index: usize,
    out_a: *mut usize,
    out_b: *mut usize,
    out_kind: *mut CubenetLinkKind,
) -> CubenetStatus {
    guard(|| {
        let net = network(net)?;
        let link = net
            .links()
            .get(index)
            .ok_or_else(|| Failure(CubenetStatus::OutOfRange, format!("link {index}")))?;
        let (a, b) = link.endpoints();
        write_out(
            out_a,
            net.node_index(a).expect("endpoint is a node"),
            "out_a",
        )?;
        write_out(
            out_b,
            net.node_index(b).expect("endpoint is a node"),
            "out_b",
        )?;
        write_out(out_kind, link.kind().into(), "out_kind")
    })
}

/// Writes link counts per kind, indexed by [`CubenetLinkKind`].
///
/// # Safety
/// `net` must be a live handle; `counts` must point to `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn cubenet_network_census(
    net: *const CubenetNetwork,
    counts: *mut usize,
    len: usize,
) -> CubenetStatus {
    guard(|| {
        let census = network(net)?.link_census();
        if counts.is_null() {
            return Err(null("counts"));
        }
        if len < CUBENET_LINK_KIND_COUNT {
            return Err(Failure(
                CubenetStatus::OutOfRange,
                format!("census needs {CUBENET_LINK_KIND_COUNT} slots, got {len}"),
            ));
        }
        for kind in LinkKind::ALL {
            let slot = CubenetLinkKind::from(kind) as usize;
            counts
                .add(slot)
                .write(census.get(&kind).copied().unwrap_or(0));
        }
        Ok(())
    })
}

/// Serializes the network as JSON. Free the result with
/// [`cubenet_string_free`].
///
/// # Safety
/// `net` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cubenet_network_to_json(
    net: *const CubenetNetwork,
    out: *mut *mut c_char,
) -> CubenetStatus {
    guard(|| write_string(out, network(net)?.to_json()))
}

/// Classifies every link pair of `net`.
///
/// # Safety
/// `net` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cubenet_congestion_analyze(
    net: *const CubenetNetwork,
    out: *mut *mut CubenetCongestion,
) -> CubenetStatus {
    guard(|| {
        let net = network(net)?.clone();
        let events = pairwise_congestion_par(&net);
        write_out(
            out,
            Box::into_raw(Box::new(CubenetCongestion { net, events })),
            "out",
        )
    })
}

/// # Safety
/// `c` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn cubenet_congestion_free(c: *mut CubenetCongestion) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cubenet_congestion_counts(
    c: *const CubenetCongestion,
    out: *mut CubenetCongestionCounts,
) -> CubenetStatus {
    guard(|| {
        let c = congestion(c)?;
        let m = paradox_metrics_from(&c.net, &c.events);
        let counts = CubenetCongestionCounts {
            point_events: m.point_events,
            line_events: m.line_events,
            full_events: m.full_events,
            point_coordinates: m.point_coordinate_count,
            links_total: m.links_total,
            links_congested: m.links_congested,
            external_events: m.external_count,
            full_nodes: m.full_nodes.len(),
        };
        write_out(out, counts, "out")
    })
}

/// Summary JSON of the sweep, as written by the `congestion` command.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cubenet_congestion_summary_json(
    c: *const CubenetCongestion,
    out: *mut *mut c_char,
) -> CubenetStatus {
    guard(|| {
        let c = congestion(c)?;
        let doc = summary_doc(&c.net, &c.events)?;
        write_string(out, serde_json::to_string_pretty(&doc)? + "\n")
    })
}

/// One CSV row per congestion event.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cubenet_congestion_events_csv(
    c: *const CubenetCongestion,
    out: *mut *mut c_char,
) -> CubenetStatus {
    guard(|| {
        let c = congestion(c)?;
        write_string(out, events_csv(&c.net, &c.events)?)
    })
}

/// Best response of one player problem given as JSON.
///
/// # Safety
/// `problem_json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cubenet_best_response_json(
    problem_json: *const c_char,
    out: *mut *mut c_char,
) -> CubenetStatus {
    guard(|| {
        let p: PlayerProblem = serde_json::from_str(read_str(problem_json, "problem_json")?)?;
        write_string(out, serde_json::to_string(&best_response(&p))?)
    })
}

/// Kuhn-Tucker report of an allocation (`{"x_self": .., "x": [..]}`).
///
/// # Safety
/// Both inputs must be nul-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cubenet_kt_verify_json(
    problem_json: *const c_char,
    allocation_json: *const c_char,
    out: *mut *mut c_char,
) -> CubenetStatus {
    guard(|| {
        let p: PlayerProblem = serde_json::from_str(read_str(problem_json, "problem_json")?)?;
        let x: Allocation = serde_json::from_str(read_str(allocation_json, "allocation_json")?)?;
        write_string(out, serde_json::to_string(&kt_verify(&p, &x))?)
    })
}

/// Seeded uniform draw among the best responses.
///
/// # Safety
/// `problem_json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cubenet_sample_best_response_json(
    problem_json: *const c_char,
    seed: u64,
    out: *mut *mut c_char,
) -> CubenetStatus {
    guard(|| {
        let p: PlayerProblem = serde_json::from_str(read_str(problem_json, "problem_json")?)?;
        write_string(out, serde_json::to_string(&sample_best_response(&p, seed))?)
    })
}

/// Runs the published-count checks. `out_pass` receives the overall
/// verdict; `out_json`, when not null, receives the full report.
///
/// # Safety
/// `out_pass` must be writable; `out_json` must be writable or null.
#[no_mangle]
pub unsafe extern "C" fn cubenet_verify_paper(
    out_pass: *mut bool,
    out_json: *mut *mut c_char,
) -> CubenetStatus {
    guard(|| {
        let report = verify_paper();
        write_out(out_pass, report.pass, "out_pass")?;
        if !out_json.is_null() {
            write_string(out_json, serde_json::to_string_pretty(&report)?)?;
        }
        Ok(())
    })
}
