#include "hawkes/mean_intensity.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hawkes/errors.hpp"

namespace hawkes {

namespace {

using Complex = std::complex<double>;
using Polynomial = std::vector<double>;  // ascending powers

constexpr double kP1SingularThreshold = 1e-10;
constexpr double kMultipleRootTolerance = 1e-8;
constexpr std::size_t kMinVolterraIntervals = 2000;
constexpr std::size_t kMaxVolterraIntervals = 5'000'000;

Polynomial multiply_linear(const Polynomial& p, double root_shift) {
    // p(s) * (s + root_shift)
    Polynomial out(p.size() + 1, 0.0);
    for (std::size_t k = 0; k < p.size(); ++k) {
        out[k] += root_shift * p[k];
        out[k + 1] += p[k];
    }
    return out;
}

template <typename T>
T horner(const Polynomial& p, T z) {
    T value = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) value = value * z + *it;
    return value;
}

Polynomial derivative(const Polynomial& p) {
    Polynomial d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(static_cast<double>(k) * p[k]);
    if (d.empty()) d.push_back(0.0);
    return d;
}

// (exp(z) - 1) / z without cancellation near zero.
Complex exprel(Complex z) {
    if (std::abs(z) < 1e-4) {
        return 1.0 + z / 2.0 + z * z / 6.0 + z * z * z / 24.0;
    }
    if (z.imag() == 0.0) return std::expm1(z.real()) / z.real();
    return (std::exp(z) - 1.0) / z;
}

void require_stationary(const HawkesModel& model, const char* what) {
    if (!(branching_ratio(model) < 1.0)) {
        throw std::domain_error(std::string(what) + ": branching ratio must be < 1");
    }
}

std::size_t volterra_intervals_for(const HawkesModel& model, double t) {
    double beta_max = 0.0;
    for (const auto& term : model.terms()) beta_max = std::max(beta_max, term.beta);
    const double wanted = std::ceil(20.0 * beta_max * t);
    return std::clamp(static_cast<std::size_t>(std::max(wanted, 0.0)), kMinVolterraIntervals,
                      kMaxVolterraIntervals);
}

double volterra_at(const HawkesModel& model, double t) {
    if (t <= 0.0) return model.mu();
    const auto grid = UniformGrid::spanning(t, volterra_intervals_for(model, t));
    return volterra_mean_intensity(model, grid).back();
}

double volterra_count_at(const HawkesModel& model, double horizon) {
    if (horizon <= 0.0) return 0.0;
    const auto grid = UniformGrid::spanning(horizon, volterra_intervals_for(model, horizon));
    return volterra_expected_count(model, grid).back();
}

// 1 - exp(-x)(1 + x) scaled by 1/x^2, stable for small x.
double second_moment_weight(double x) {
    if (x < 1e-2) {
        // sum_{k>=2} (-1)^k (k-1)/k! x^(k-2)
        double sum = 0.0;
        double power = 1.0;
        double factorial = 2.0;
        for (int k = 2; k < 12; ++k) {
            sum += ((k % 2 == 0) ? 1.0 : -1.0) * (k - 1) / factorial * power;
            power *= x;
            factorial *= (k + 1);
        }
        return sum;
    }
    return (-std::expm1(-x) - x * std::exp(-x)) / (x * x);
}

}  // namespace

double PartialFractionExpansion::normalized_value(double t) const {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < poles.size(); ++i) sum += coefficients[i] * std::exp(poles[i] * t);
    return sum.real();
}

double PartialFractionExpansion::normalized_integral(double horizon) const {
    if (horizon <= 0.0) return 0.0;
    Complex sum = 0.0;
    for (std::size_t i = 0; i < poles.size(); ++i) {
        sum += coefficients[i] * horizon * exprel(poles[i] * horizon);
    }
    return sum.real();
}

Complex PartialFractionExpansion::coefficient_sum() const {
    Complex sum = 0.0;
    for (const auto& a : coefficients) sum += a;
    return sum;
}

double stationary_mean_intensity(const HawkesModel& model) {
    require_stationary(model, "stationary_mean_intensity");
    return model.mu() / (1.0 - branching_ratio(model));
}

PartialFractionExpansion expansion_p1(const HawkesModel& model) {
    if (model.order() != 1) throw std::invalid_argument("expansion_p1: model order must be 1");
    const auto [alpha, beta] = model.terms().front();
    const double gap = beta - alpha;
    if (std::abs(gap) < kP1SingularThreshold * beta) {
        throw std::domain_error("expansion_p1: beta == alpha, no simple-pole expansion");
    }
    return {{0.0, -gap}, {beta / gap, -alpha / gap}};
}

PartialFractionExpansion expansion_p2(const HawkesModel& model) {
    if (model.order() != 2) throw std::invalid_argument("expansion_p2: model order must be 2");
    require_stationary(model, "expansion_p2");
    const auto terms = model.terms();
    const double a1 = terms[0].alpha;
    const double a2 = terms[1].alpha;
    const double b1 = terms[0].beta;
    const double b2 = terms[1].beta;

    const double constant = b1 * b2 - a1 * b2 - a2 * b1;  // = s_2 s_3 > 0
    const double gamma = a1 + a2 - b1 - b2;               // = s_2 + s_3 < 0
    const Complex xi = std::sqrt(Complex(gamma * gamma - 4.0 * constant, 0.0));
    if (std::abs(xi) < kMultipleRootTolerance * std::max(1.0, std::abs(gamma))) {
        throw MultipleRootError("expansion_p2: double root (xi == 0)");
    }
    // s_2 = (gamma - xi)/2 carries no cancellation since gamma < 0; the other
    // root follows from s_2 s_3 = constant.
    const Complex s2 = 0.5 * (gamma - xi);
    const Complex s3 = constant / s2;
    const Complex diff = s2 - s3;  // = -xi

    const double a_1 = b1 * b2 / constant;
    const Complex a_2 = (s2 + b1) * (s2 + b2) / (s2 * diff);
    const Complex a_3 = (s3 + b1) * (s3 + b2) / (s3 * -diff);
    return {{0.0, s2, s3}, {a_1, a_2, a_3}};
}

PartialFractionExpansion expansion_general(const HawkesModel& model) {
    require_stationary(model, "expansion_general");
    const auto terms = model.terms();
    const std::size_t order = terms.size();
    if (order == 0) return {{0.0}, {1.0}};

    Polynomial numerator{1.0};
    for (const auto& t : terms) numerator = multiply_linear(numerator, t.beta);
    Polynomial denominator = numerator;
    for (std::size_t m = 0; m < order; ++m) {
        Polynomial others{1.0};
        for (std::size_t k = 0; k < order; ++k) {
            if (k != m) others = multiply_linear(others, terms[k].beta);
        }
        for (std::size_t k = 0; k < others.size(); ++k) denominator[k] -= terms[m].alpha * others[k];
    }
    const Polynomial slope = derivative(denominator);

    // Companion matrix of the monic denominator in the scaled variable z = s / scale.
    const double scale = terms.back().beta;
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(order, order);
    for (std::size_t i = 1; i < order; ++i) companion(i, i - 1) = 1.0;
    for (std::size_t k = 0; k < order; ++k) {
        companion(k, order - 1) = -denominator[k] * std::pow(scale, static_cast<double>(k) - order);
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() != Eigen::Success) {
        throw RootFindingError("expansion_general: eigenvalue iteration failed");
    }

    std::vector<Complex> roots;
    roots.reserve(order);
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        Complex root = solver.eigenvalues()[i] * scale;
        for (int iter = 0; iter < 50; ++iter) {
            const Complex d = horner(slope, root);
            if (d == 0.0) break;
            const Complex step = horner(denominator, root) / d;
            root -= step;
            if (std::abs(step) <= 1e-15 * std::abs(root)) break;
        }
        if (!std::isfinite(root.real()) || !std::isfinite(root.imag())) {
            throw RootFindingError("expansion_general: non-finite root");
        }
        if (std::abs(root.imag()) <= 1e-14 * std::abs(root)) root.imag(0.0);
        roots.push_back(root);
    }

    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (!(roots[i].real() < 0.0)) {
            throw RootFindingError("expansion_general: pole with non-negative real part");
        }
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            const double tol = kMultipleRootTolerance * std::max(1.0, std::abs(roots[i]));
            if (std::abs(roots[i] - roots[j]) < tol) {
                throw MultipleRootError("expansion_general: repeated pole");
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() > b.real() : a.imag() < b.imag();
    });

    PartialFractionExpansion expansion;
    expansion.poles.push_back(0.0);
    expansion.coefficients.push_back(horner(numerator, 0.0) / horner(denominator, 0.0));
    for (const auto& root : roots) {
        expansion.poles.push_back(root);
        expansion.coefficients.push_back(horner(numerator, root) / (root * horner(slope, root)));
    }
    return expansion;
}

double mean_intensity_p1(const HawkesModel& model, double t) {
    if (model.order() != 1) throw std::invalid_argument("mean_intensity_p1: model order must be 1");
    const auto [alpha, beta] = model.terms().front();
    if (std::abs(beta - alpha) < kP1SingularThreshold * beta) {
        return model.mu() * (1.0 + alpha * t);
    }
    return model.mu() / (beta - alpha) * (beta - alpha * std::exp(-(beta - alpha) * t));
}

double mean_intensity_p2(const HawkesModel& model, double t) {
    try {
        return MeanIntensityCurve(expansion_p2(model), model.mu())(t);
    } catch (const MultipleRootError&) {
        return volterra_at(model, t);
    }
}

double mean_intensity_general(const HawkesModel& model, double t) {
    try {
        return MeanIntensityCurve(expansion_general(model), model.mu())(t);
    } catch (const MultipleRootError&) {
        return volterra_at(model, t);
    }
}

double expected_count(const HawkesModel& model, double horizon) {
    if (horizon < 0.0) throw std::invalid_argument("expected_count: horizon must be non-negative");
    try {
        return MeanIntensityCurve(expansion_general(model), model.mu()).expected_count(horizon);
    } catch (const MultipleRootError&) {
        return volterra_count_at(model, horizon);
    }
}

UniformGrid UniformGrid::spanning(double t_max, std::size_t intervals) {
    if (!(t_max > 0.0) || intervals == 0) {
        throw std::invalid_argument("UniformGrid: need t_max > 0 and at least one interval");
    }
    return {t_max / static_cast<double>(intervals), intervals + 1};
}

std::vector<double> volterra_mean_intensity(const HawkesModel& model, const UniformGrid& grid) {
    if (!(grid.step > 0.0) || grid.points == 0) {
        throw std::invalid_argument("volterra_mean_intensity: grid needs step > 0 and nodes");
    }
    const auto terms = model.terms();
    const std::size_t order = terms.size();
    const double h = grid.step;

    // Over one step, int_0^h exp(-beta tau) (1 - tau/h) dtau = h * w_new and
    // int_0^h exp(-beta tau) (tau/h) dtau = h * w_old.
    std::vector<double> decay(order), w_old(order), w_new(order), history(order, 0.0);
    double implicit = 0.0;
    for (std::size_t m = 0; m < order; ++m) {
        const double x = terms[m].beta * h;
        decay[m] = std::exp(-x);
        const double first = x > 0.0 ? -std::expm1(-x) / x : 1.0;
        w_old[m] = second_moment_weight(x);
        w_new[m] = first - w_old[m];
        implicit += terms[m].alpha * h * w_new[m];
    }
    if (!(implicit < 1.0)) {
        throw std::invalid_argument("volterra_mean_intensity: step too large for kernel mass");
    }

    std::vector<double> phi(grid.points);
    phi[0] = model.mu();
    for (std::size_t j = 1; j < grid.points; ++j) {
        double explicit_part = model.mu();
        for (std::size_t m = 0; m < order; ++m) {
            history[m] = decay[m] * history[m] + h * w_old[m] * phi[j - 1];
            explicit_part += terms[m].alpha * history[m];
        }
        phi[j] = explicit_part / (1.0 - implicit);
        for (std::size_t m = 0; m < order; ++m) history[m] += h * w_new[m] * phi[j];
    }
    return phi;
}

std::vector<double> volterra_expected_count(const HawkesModel& model, const UniformGrid& grid) {
    const auto phi = volterra_mean_intensity(model, grid);
    std::vector<double> count(phi.size(), 0.0);
    for (std::size_t j = 1; j < phi.size(); ++j) {
        count[j] = count[j - 1] + 0.5 * grid.step * (phi[j - 1] + phi[j]);
    }
    return count;
}

}  // namespace hawkes
