//! C ABI for guard2d: opaque handles, integer status codes, JSON documents
//! in and out.
//!
//! Usage pattern from C:
//!
//! ```c
//! Guard2dProblem *problem = NULL;
//! if (guard2d_problem_parse(json, &problem) != GUARD2D_STATUS_OK) {
//!     fprintf(stderr, "%s\n", guard2d_last_error());
//!     return 1;
//! }
//! Guard2dSolution *solution = NULL;
//! guard2d_solve(problem, GUARD2D_METHOD_ILP, 0, 0, &solution);
//! double r = guard2d_solution_radius(solution);
//! char *doc = guard2d_solution_to_json(solution);
//! ...
//! guard2d_string_free(doc);
//! guard2d_solution_free(solution);
//! guard2d_problem_free(problem);
//! ```
//!
//! Every function tolerates NULL handles (reporting
//! `GUARD2D_STATUS_NULL_ARGUMENT` where a status is returned); strings
//! returned by the library must be released with [`guard2d_string_free`].
//! Details for the most recent failure on the current thread are available
//! via [`guard2d_last_error`].

use guard2d::ilp::IlpOptions;
use guard2d::instances::{load_problem, save_deployment, Problem};
use guard2d::{verify_cover, Deployment, Error, Method, SampleSet};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Guard2dStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    BudgetExhausted = 5,
    SolveFailed = 6,
    IndexOutOfRange = 7,
}

/// Solver selector for [`guard2d_solve`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Guard2dMethod {
    Cont = 0,
    Gonzalez = 1,
    Ilp = 2,
}

/// Opaque parsed problem document.
pub struct Guard2dProblem {
    inner: Problem,
}

/// Opaque solved deployment plus the sample set it covers.
pub struct Guard2dSolution {
    deployment: Deployment,
    samples: SampleSet,
    problem: Problem,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let cleaned: String = message.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(cleaned).unwrap_or_default();
    });
}

fn status_of(err: &Error) -> Guard2dStatus {
    match err {
        Error::BudgetExhausted => Guard2dStatus::BudgetExhausted,
        Error::Parse(_) => Guard2dStatus::ParseError,
        _ => Guard2dStatus::SolveFailed,
    }
}

/// Message describing the most recent error on this thread. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn guard2d_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Parses a UTF-8 problem document into a handle stored in `out`.
///
/// # Safety
/// `json` must point to a NUL-terminated string and `out` to writable
/// pointer storage; both are only borrowed for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn guard2d_problem_parse(
    json: *const c_char,
    out: *mut *mut Guard2dProblem,
) -> Guard2dStatus {
    if json.is_null() || out.is_null() {
        set_last_error("null argument");
        return Guard2dStatus::NullArgument;
    }
    let text = match CStr::from_ptr(json).to_str() {
        Ok(t) => t,
        Err(e) => {
            set_last_error(&format!("problem document is not UTF-8: {e}"));
            return Guard2dStatus::InvalidUtf8;
        }
    };
    match load_problem(text) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(Guard2dProblem { inner }));
            Guard2dStatus::Ok
        }
        Err(e) => {
            set_last_error(&e.to_string());
            *out = ptr::null_mut();
            Guard2dStatus::ParseError
        }
    }
}

/// Releases a problem handle. NULL is ignored.
///
/// # Safety
/// `p` must come from [`guard2d_problem_parse`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn guard2d_problem_free(p: *mut Guard2dProblem) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Sensor count stored in the problem document; 0 for NULL.
///
/// # Safety
/// `p` must be a live problem handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn guard2d_problem_k(p: *const Guard2dProblem) -> usize {
    if p.is_null() {
        return 0;
    }
    (*p).inner.k
}

/// Solves a problem with the selected method. `node_budget = 0` keeps the
/// default. On success `out` receives a solution handle.
///
/// # Safety
/// `problem` must be a live problem handle and `out` writable pointer
/// storage.
#[no_mangle]
pub unsafe extern "C" fn guard2d_solve(
    problem: *const Guard2dProblem,
    method: Guard2dMethod,
    seed: u64,
    node_budget: u64,
    out: *mut *mut Guard2dSolution,
) -> Guard2dStatus {
    if problem.is_null() || out.is_null() {
        set_last_error("null argument");
        return Guard2dStatus::NullArgument;
    }
    *out = ptr::null_mut();
    let problem = &(*problem).inner;
    let method = match method {
        Guard2dMethod::Cont => Method::Cont,
        Guard2dMethod::Gonzalez => Method::Gonzalez,
        Guard2dMethod::Ilp => Method::Ilp,
    };
    if method == Method::Cont && problem.mode == guard2d::SampleKind::Region {
        set_last_error("method 'cont' requires a perimeter-mode problem");
        return Guard2dStatus::InvalidArgument;
    }
    let mut opts = IlpOptions {
        seed,
        ..IlpOptions::default()
    };
    if node_budget > 0 {
        opts.node_budget = node_budget;
    }
    match guard2d::solve_problem(problem, method, seed, &opts) {
        Ok((deployment, samples)) => {
            *out = Box::into_raw(Box::new(Guard2dSolution {
                deployment,
                samples,
                problem: problem.clone(),
            }));
            Guard2dStatus::Ok
        }
        Err(e) => {
            set_last_error(&e.to_string());
            status_of(&e)
        }
    }
}

/// Releases a solution handle. NULL is ignored.
///
/// # Safety
/// `s` must come from [`guard2d_solve`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn guard2d_solution_free(s: *mut Guard2dSolution) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Achieved common sensing radius; NaN for a NULL handle.
///
/// # Safety
/// `s` must be a live solution handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn guard2d_solution_radius(s: *const Guard2dSolution) -> f64 {
    if s.is_null() {
        return f64::NAN;
    }
    (*s).deployment.radius
}

/// Number of deployed sensors; 0 for a NULL handle.
///
/// # Safety
/// `s` must be a live solution handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn guard2d_solution_center_count(s: *const Guard2dSolution) -> usize {
    if s.is_null() {
        return 0;
    }
    (*s).deployment.centers.len()
}

/// Writes the i-th sensor position into `x`/`y`.
///
/// # Safety
/// `s` must be a live solution handle; `x` and `y` must be writable.
#[no_mangle]
pub unsafe extern "C" fn guard2d_solution_center(
    s: *const Guard2dSolution,
    index: usize,
    x: *mut f64,
    y: *mut f64,
) -> Guard2dStatus {
    if s.is_null() || x.is_null() || y.is_null() {
        set_last_error("null argument");
        return Guard2dStatus::NullArgument;
    }
    let centers = &(*s).deployment.centers;
    match centers.get(index) {
        Some(c) => {
            *x = c.x;
            *y = c.y;
            Guard2dStatus::Ok
        }
        None => {
            set_last_error(&format!(
                "center index {index} out of range ({} centers)",
                centers.len()
            ));
            Guard2dStatus::IndexOutOfRange
        }
    }
}

/// 1 when the deployment covers every sample within its radius, else 0.
///
/// # Safety
/// `s` must be a live solution handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn guard2d_solution_verified(s: *const Guard2dSolution) -> i32 {
    if s.is_null() {
        return 0;
    }
    let sol = &*s;
    match verify_cover(&sol.deployment, &sol.samples) {
        Ok(report) => report.ok as i32,
        Err(_) => 0,
    }
}

/// Solution document (JSON, includes the verification summary) as a newly
/// allocated string; NULL on failure. Free with [`guard2d_string_free`].
///
/// # Safety
/// `s` must be a live solution handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn guard2d_solution_to_json(s: *const Guard2dSolution) -> *mut c_char {
    if s.is_null() {
        set_last_error("null argument");
        return ptr::null_mut();
    }
    let sol = &*s;
    match save_deployment(&sol.deployment, &sol.samples) {
        Ok(doc) => CString::new(doc).map_or(ptr::null_mut(), CString::into_raw),
        Err(e) => {
            set_last_error(&e.to_string());
            ptr::null_mut()
        }
    }
}

/// SVG rendering of the solution over its workspace as a newly allocated
/// string; samples drawn when `include_samples` is nonzero. Free with
/// [`guard2d_string_free`].
///
/// # Safety
/// `s` must be a live solution handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn guard2d_solution_render_svg(
    s: *const Guard2dSolution,
    include_samples: i32,
) -> *mut c_char {
    if s.is_null() {
        set_last_error("null argument");
        return ptr::null_mut();
    }
    let sol = &*s;
    let svg = guard2d::svg::render(
        &sol.problem.polygon,
        &sol.deployment,
        (include_samples != 0).then_some(&sol.samples),
    );
    CString::new(svg).map_or(ptr::null_mut(), CString::into_raw)
}

/// Releases a string produced by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from a guard2d function returning `char*` and not be freed
/// twice.
#[no_mangle]
pub unsafe extern "C" fn guard2d_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
