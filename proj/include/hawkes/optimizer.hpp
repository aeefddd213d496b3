#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace hawkes {

/// Objective for minimization. Writes the gradient into `gradient` when it is
/// non-empty. May return +infinity or NaN outside its domain; the line search
/// treats such points as rejected.
using Objective = std::function<double(std::span<const double> x, std::span<double> gradient)>;

struct OptimizerOptions {
    std::size_t max_iterations{500};
    /// Stop when |f_k - f_{k+1}| <= relative_tolerance * max(1, |f_{k+1}|).
    double relative_tolerance{1e-8};
    /// Stop when max_i |g_i| <= gradient_tolerance.
    double gradient_tolerance{1e-6};
};

struct OptimizerResult {
    std::vector<double> x;
    double value{0.0};
    bool converged{false};
    std::size_t iterations{0};
    std::size_t evaluations{0};
    /// True when the quasi-Newton phase gave up and the simplex method finished the job.
    bool used_simplex{false};
};

/// BFGS on the inverse Hessian with a strong-Wolfe line search. When the line
/// search fails twice in a row (once after a Hessian reset) the search
/// continues from the current point with Nelder-Mead.
[[nodiscard]] OptimizerResult minimize_bfgs(const Objective& objective, std::vector<double> start,
                                            const OptimizerOptions& options = {});

/// Nelder-Mead on function values only. `initial_step` sets the simplex size.
[[nodiscard]] OptimizerResult minimize_nelder_mead(const Objective& objective, std::vector<double> start,
                                                   const OptimizerOptions& options = {},
                                                   double initial_step = 0.1);

}  // namespace hawkes
