//! guard2d — near-optimal deployment of k circular-range sensors guarding
//! the perimeter or interior of polygonal workspaces, minimizing the largest
//! sensing radius any sensor needs.
//!
//! Three solvers share the same discretize-then-search skeleton:
//!
//! - [`cont`] — perimeter guarding where each disc covers one contiguous
//!   boundary run: an exact feasibility check per radius plus binary search,
//!   converging to within `epsilon` of the optimum over the samples.
//! - [`gonzalez`] — farthest-first traversal, the classic fast
//!   2-approximation, usable on perimeter and region samples alike.
//! - [`ilp`] — candidate centers restricted to a grid and an exact set-cover
//!   feasibility solver driven by binary search; near-optimal for both
//!   perimeter and region guarding at the cost of grid resolution.
//!
//! [`sampling`] turns geometry into finite sample sets, [`instances`]
//! generates benchmark polygons and reads/writes the problem and solution
//! documents, [`svg`] draws solutions, and [`bench`] times the solvers on
//! random instances.

pub mod bench;
pub mod cont;
pub mod deployment;
pub mod error;
pub mod geom;
pub mod gonzalez;
pub mod ilp;
pub mod instances;
pub mod sampling;
pub mod svg;

pub use deployment::{Deployment, Method};
pub use error::{Error, Result};
pub use geom::{
    cell_intersects_polygon, min_enclosing_disc, point_in_polygon, Component, Disc, Point2,
    PolygonSet, Ring,
};
pub use ilp::{
    build_cover_model, solve_feasibility, solve_ilp_perimeter, solve_ilp_region, verify_cover,
    BranchAndBound, CoverModel, FeasibilityOutcome, FeasibilitySolver, FeasibilityStatus,
    IlpOptions, VerifyReport,
};
pub use instances::{
    load_deployment, load_problem, plus_polygon, random_simple_polygon, save_deployment,
    save_problem, InstanceSpec, Problem,
};
pub use sampling::{
    candidate_centers, sample_perimeter, sample_region, GridSpec, SampleKind, SampleSet,
};

/// Runs the chosen solver on a problem and returns the deployment together
/// with the sample set it was solved over (the set verification and the
/// solution document refer to). The `cont` method requires perimeter mode.
pub fn solve_problem(
    problem: &instances::Problem,
    method: Method,
    seed: u64,
    opts: &IlpOptions,
) -> Result<(Deployment, SampleSet)> {
    let k = problem.k;
    let epsilon = problem.epsilon;
    match (method, problem.mode) {
        (Method::Cont, SampleKind::Region) => Err(Error::PerimeterSamplesRequired),
        (Method::Cont, SampleKind::Perimeter) => {
            let samples = sample_perimeter(&problem.polygon, epsilon)?;
            let r_hi = problem.polygon.perimeter_length() / (2.0 * k as f64);
            let dep = cont::solve_on_samples(&samples, k, r_hi, epsilon, seed)?;
            Ok((dep, samples))
        }
        (Method::Gonzalez, SampleKind::Perimeter) => {
            let samples = sample_perimeter(&problem.polygon, epsilon)?;
            let dep = gonzalez::farthest_first(&samples, k, 0)?;
            Ok((dep, samples))
        }
        (Method::Gonzalez, SampleKind::Region) => {
            let samples = sample_region(&problem.polygon, epsilon)?.0;
            let dep = gonzalez::farthest_first(&samples, k, 0)?;
            Ok((dep, samples))
        }
        (Method::Ilp, SampleKind::Perimeter) => {
            let samples = sample_perimeter(&problem.polygon, epsilon)?;
            let dep =
                ilp::solve_ilp_perimeter_on_samples(&problem.polygon, &samples, k, epsilon, opts)?;
            Ok((dep, samples))
        }
        (Method::Ilp, SampleKind::Region) => {
            let (samples, grid) = sample_region(&problem.polygon, epsilon)?;
            let dep = ilp::solve_ilp_region_on_samples(
                &problem.polygon,
                &samples,
                &grid,
                k,
                epsilon,
                opts,
            )?;
            Ok((dep, samples))
        }
    }
}
