#ifndef SPHDES_CORE_CONSTRUCT_HPP
#define SPHDES_CORE_CONSTRUCT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "core/sphere.hpp"

namespace sphdes {

struct ConstructOptions {
    int t = 1;                // target strength
    std::size_t n = 0;        // point count; must be >= lower_bound(t)
    int starts = 20;          // independent random starts
    std::uint64_t seed = 0;   // start i draws its initial design from seed + i
    long max_iters = 20000;   // per-start iteration cap
    double tol = 1e-10;       // residual target
    double armijo_c = 1e-4;   // sufficient-decrease constant
    double initial_step = 1.0;
};

struct ConstructOutcome {
    Design design;
    double residual = 0.0; // total A_t achieved
    long iterations = 0;   // iterations spent in the winning run
    int start_index = 0;
    bool converged = false; // residual <= tol
};

/// The first-moment residual A_t = sum_{l=1..t} r_l with r_l the cubature
/// residuals; zero exactly when the design is a spherical t-design.
double objective(const Design& design, int t);

/// The same quantity through the kernel identity
///   A_t = (1/n^2) sum_{i,j} sum_{l=1..t} (2l+1) P_l(x_i . x_j),
/// defined for arbitrary (not necessarily unit) vectors. This is the function
/// the optimizer minimizes; both forms agree on unit points.
double kernel_objective(std::span<const Vec3> points, int t);

/// Gradient of kernel_objective with respect to the raw coordinates.
void kernel_gradient(std::span<const Vec3> points, int t, std::span<Vec3> grad);

/// Multi-start minimization of A_t: per start, tangent-projected gradient
/// descent with Armijo backtracking, points renormalized after every step.
/// The winner is the lexicographic (residual, start_index) minimum over all
/// starts, so the result is deterministic. Never throws on non-convergence;
/// the flag reports it. Throws std::invalid_argument when n < lower_bound(t).
ConstructOutcome minimize(const ConstructOptions& opts);

/// Single local run started from the given design; the residual never
/// increases across accepted steps.
ConstructOutcome refine(const Design& design, int t, const ConstructOptions& opts);

} // namespace sphdes

#endif
