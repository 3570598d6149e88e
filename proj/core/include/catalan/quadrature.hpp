#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature on finite intervals and on the
// half-line [0, inf) through the fixed map t = tan(theta)/2.

#include <cstdint>
#include <functional>
#include <stdexcept>

namespace catalan {

struct ToleranceSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    std::int64_t max_evaluations = 1'000'000;
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::int64_t evaluations = 0;
    bool converged = false;
};

using Integrand = std::function<double(double)>;

class InvalidInterval : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidTolerance : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The integrand returned NaN or an infinity at a node.
class NonFiniteSample : public std::runtime_error {
public:
    NonFiniteSample(double x, double fx);
    double x() const noexcept { return x_; }
    double fx() const noexcept { return fx_; }

private:
    double x_;
    double fx_;
};

/// Nodes used by one application of the base rule.
inline constexpr std::int64_t kRuleEvaluations = 15;

/// Integrates f over [lo, hi].
///
/// Starts from one 15-point Kronrod estimate and repeatedly bisects the
/// interval with the largest error estimate. Each interval's estimate is
/// |K15 - G7| raised to a roundoff floor of 50 eps |f|-integral. Stops when
/// the summed estimate is <= max(abs_tol, rel_tol |value|) or when another
/// bisection would exceed max_evaluations; in the latter case `converged` is
/// false and the best estimate so far is returned.
///
/// Interval sums are accumulated in position order, so results do not depend
/// on the order of refinement.
[[nodiscard]] QuadratureResult integrate_finite(const Integrand& f, double lo, double hi,
                                                const ToleranceSpec& tol = {});

/// Integrates f over [0, inf) by substituting t = tan(theta)/2,
/// dt = sec^2(theta)/2 dtheta, and integrating over [0, pi/2].
///
/// Under the map t^2 + 1/4 = sec^2(theta)/4. A transformed sample of the
/// form 0 * inf is taken as its limit 0.
///
/// Before integrating, the transformed integrand is sampled at pi/2 - 1e-4
/// and pi/2 - 1e-8. Growth by more than 10^3 between the two means it has no
/// finite limit at pi/2 (f decays slower than t^-2) and raises
/// NonFiniteSample. The two probes count toward `evaluations`.
[[nodiscard]] QuadratureResult integrate_half_line(const Integrand& f, const ToleranceSpec& tol = {});

/// The transformed integrand used by integrate_half_line, exposed for tests.
[[nodiscard]] double half_line_transformed(const Integrand& f, double theta);

}  // namespace catalan
