#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "hawkes/core.hpp"

namespace hawkes {

// Average intensity phi(t) = E[lambda(t)] of the process started from an
// empty history at t = 0. Its Laplace transform is
//
//   phi~(s) = (mu / s) * R(s) / D(s),   R(s) = prod_m (s + beta_m),
//   D(s) = R(s) - sum_m alpha_m prod_{k != m} (s + beta_k),
//
// so with simple poles phi(t) = mu * sum_i A_i exp(s_i t), s_1 = 0.

/// Poles s_i and residue coefficients A_i (to be multiplied by mu).
/// poles[0] is exactly zero; complex entries come in conjugate pairs.
struct PartialFractionExpansion {
    std::vector<std::complex<double>> poles;
    std::vector<std::complex<double>> coefficients;

    [[nodiscard]] std::size_t order() const noexcept { return poles.size(); }

    /// sum_i A_i exp(s_i t), real part.
    [[nodiscard]] double normalized_value(double t) const;

    /// integral_0^T of normalized_value, in closed form.
    [[nodiscard]] double normalized_integral(double horizon) const;

    /// sum_i A_i as a complex number; equals 1 for an exact expansion.
    [[nodiscard]] std::complex<double> coefficient_sum() const;
};

/// phi(t) represented by a partial-fraction expansion.
class MeanIntensityCurve {
public:
    MeanIntensityCurve(PartialFractionExpansion expansion, double mu)
        : expansion_(std::move(expansion)), mu_(mu) {}

    [[nodiscard]] double operator()(double t) const { return mu_ * expansion_.normalized_value(t); }
    [[nodiscard]] double expected_count(double horizon) const {
        return mu_ * expansion_.normalized_integral(horizon);
    }
    /// mu * A_1, the t -> infinity level.
    [[nodiscard]] double stationary_level() const { return mu_ * expansion_.coefficients.front().real(); }

    [[nodiscard]] const PartialFractionExpansion& expansion() const noexcept { return expansion_; }
    [[nodiscard]] double mu() const noexcept { return mu_; }

private:
    PartialFractionExpansion expansion_;
    double mu_;
};

/// Lambda = mu / (1 - n). Throws std::domain_error when n >= 1.
[[nodiscard]] double stationary_mean_intensity(const HawkesModel& model);

/// Explicit two-pole expansion for P = 1. Throws std::domain_error when
/// |beta - alpha| is below the removable-singularity threshold.
[[nodiscard]] PartialFractionExpansion expansion_p1(const HawkesModel& model);

/// Explicit three-pole expansion for P = 2 via gamma and xi.
/// Throws std::domain_error for a non-stationary model and
/// MultipleRootError when xi vanishes.
[[nodiscard]] PartialFractionExpansion expansion_p2(const HawkesModel& model);

/// Expansion for any order: roots of D(s) from companion-matrix eigenvalues,
/// refined by Newton steps, residues R(s_i) / (s_i D'(s_i)).
/// Throws MultipleRootError or RootFindingError.
[[nodiscard]] PartialFractionExpansion expansion_general(const HawkesModel& model);

/// phi(t) for P = 1; falls back to mu (1 + alpha t) when beta ~ alpha.
[[nodiscard]] double mean_intensity_p1(const HawkesModel& model, double t);

/// phi(t) for P = 2; falls back to the Volterra solver on a double root.
[[nodiscard]] double mean_intensity_p2(const HawkesModel& model, double t);

/// phi(t) for any order; falls back to the Volterra solver on a multiple root.
[[nodiscard]] double mean_intensity_general(const HawkesModel& model, double t);

/// E[N(T)] = integral_0^T phi.
[[nodiscard]] double expected_count(const HawkesModel& model, double horizon);

/// Nodes t_j = j * step, j = 0 .. points - 1.
struct UniformGrid {
    double step{0.0};
    std::size_t points{0};

    [[nodiscard]] double node(std::size_t j) const noexcept { return static_cast<double>(j) * step; }
    /// Grid over [0, t_max] with `intervals` equal steps.
    [[nodiscard]] static UniformGrid spanning(double t_max, std::size_t intervals);
};

/// Solves phi(t) = mu + sum_m alpha_m int_0^t exp(-beta_m (t - u)) phi(u) du
/// by product integration: phi is piecewise linear between nodes and each
/// exponential is integrated exactly against it. O(h^2).
[[nodiscard]] std::vector<double> volterra_mean_intensity(const HawkesModel& model, const UniformGrid& grid);

/// Cumulative trapezoidal integral of the Volterra solution on the grid.
[[nodiscard]] std::vector<double> volterra_expected_count(const HawkesModel& model, const UniformGrid& grid);

}  // namespace hawkes
