#pragma once
#include "lipkit/spaces/boundary_function.hpp"
#include "lipkit/spaces/grid_function.hpp"

namespace lipkit {

// Boundary-value extraction by extrapolated interior averages: at each
// boundary sample the field is interpolated at three layers along the inward
// normal (spacing layer * grid h) and Richardson-extrapolated to the wall,
// removing the O(t) and O(t^2) bias of a nearest-layer copy. Throws a
// resolution error (std::runtime_error) when an interpolation stencil has no
// interior support.
struct TraceOptions {
  double layer = 1.5;  // layer spacing in units of the grid step
};

BoundaryFunction trace(const GridFunction& U, int comp = 0,
                       const TraceOptions& opt = {});

// Whitney array of extrapolated boundary values of all derivatives of order
// <= m-1 (finite-difference fields of U, same extrapolation per member).
// Requires U.max_order() >= m-1.
WhitneyArray higher_trace(const GridFunction& U, int m, const TraceOptions& opt = {});

}  // namespace lipkit
