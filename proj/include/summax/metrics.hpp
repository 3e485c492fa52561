#pragma once

#include <vector>

#include "summax/step_function.hpp"

namespace summax {

// Exact uniform distance sup_t |f(t) - g(t)| over the merged jump grid.
double d_uniform(const StepFunction& f, const StepFunction& g);

// M2 distance: Hausdorff distance in the max-norm between the completed
// graphs of f and g, accurate to +/- tol. Computed by bisection on eps with
// an exact inclusion test per eps (see m2_within); symmetric by construction
// and exactly zero for equal inputs.
double d_m2(const StepFunction& f, const StepFunction& g, double tol);

// Exact decision: Hausdorff distance <= eps?
bool m2_within(const StepFunction& f, const StepFunction& g, double eps);

// Product (weak) form: max over coordinates of d_m2.
double d_product_m2(const MultiPath& f, const MultiPath& g, double tol);
bool product_m2_within(const MultiPath& f, const MultiPath& g, double eps);

}  // namespace summax
