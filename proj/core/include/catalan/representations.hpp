#pragma once

// Six integral representations of the Catalan numbers and the weight
// functions that tell them apart.
//
// Half-line family, kernel t^2/(t^2+1/4)^2 on [0, inf), x = 1/sqrt(t^2+1/4):
//   R0  C_n = (2/pi) int t^2/(t^2+1/4)^(n+2) dt
//   R1  C_n = (1/pi) int t^2/(t^2+1/4)^2 [(2-x)^(n-1) + (2+x)^(n-1)] dt              n >= 1
//   R2  C_n = (n+2)/(2(n-1)pi) int t^2/(t^2+1/4)^(5/2) [(2+x)^(n-1) - (2-x)^(n-1)] dt  n >= 2
//
// Unit-interval family, kernel sqrt(1-t^2) on [-1, 1]:
//   B0  C_n = 2^(2n+1)/pi int t^(2n) sqrt(1-t^2) dt
//   B1  C_n = 2^(n-1)/pi int sqrt(1-t^2) [(1-t)^(n-1) + (1+t)^(n-1)] dt
//   B2  C_n = 2^(n-1)(n+2)/(pi(n-1)) int t sqrt(1-t^2) [(t+1)^(n-1) - (1-t)^(n-1)] dt  n >= 2
//
// R1/B1 come from inserting R0/B0 into Touchard's identity, R2/B2 from
// Callan's k-weighted variant; the even-index binomial folds in exact.hpp
// collapse the resulting finite sums.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "catalan/exact.hpp"
#include "catalan/quadrature.hpp"

namespace catalan {

enum class RepresentationId { R0, R1, R2, B0, B1, B2 };
enum class IntegrationDomain { half_line, symmetric_unit };

inline constexpr std::array<RepresentationId, 6> kAllRepresentations = {
    RepresentationId::R0, RepresentationId::R1, RepresentationId::R2,
    RepresentationId::B0, RepresentationId::B1, RepresentationId::B2,
};

/// Largest n evaluated by default; above this double precision no longer
/// guarantees the 1e-8 agreement with exact values.
inline constexpr int kDefaultMaxN = 30;

struct RepresentationSpec {
    RepresentationId id;
    int n_min;
    IntegrationDomain domain;
    /// Constant in front of the integral.
    double (*prefactor)(int n);
    /// Integrand without the prefactor.
    double (*integrand)(int n, double t);
};

[[nodiscard]] const RepresentationSpec& representation_spec(RepresentationId id);
[[nodiscard]] std::string_view to_string(RepresentationId id);
[[nodiscard]] RepresentationId parse_representation(std::string_view name);

struct EvaluationRecord {
    std::string_view label;  // representation or weight id
    int n = 0;
    double estimate = 0.0;
    /// Quadrature error estimate scaled by the prefactor.
    double estimate_error = 0.0;
    ExactInteger exact;
    double rel_error = 0.0;
    /// The raw integral, before the prefactor.
    QuadratureResult quadrature;
};

/// Integrates f over a representation domain. The half-line goes through
/// integrate_half_line; [-1, 1] is mapped by t = sin(phi), dt = cos(phi) dphi,
/// which absorbs the square-root endpoint behaviour of the unit-interval
/// integrands.
[[nodiscard]] QuadratureResult integrate_on_domain(IntegrationDomain domain, const Integrand& f,
                                                   const ToleranceSpec& tol = {});

/// Integrates representation `id` at `n` and compares with C_n.
/// Throws DomainError when n < n_min(id) or n > max_n.
[[nodiscard]] EvaluationRecord evaluate_representation(RepresentationId id, int n, const ToleranceSpec& tol = {},
                                                       int max_n = kDefaultMaxN);

enum class WeightId { f1, f2, f3, g1, g2, g3 };
enum class WeightFamily { f, g };

[[nodiscard]] std::string_view to_string(WeightId id);
[[nodiscard]] WeightId parse_weight(std::string_view name);
[[nodiscard]] WeightFamily parse_family(std::string_view name);
[[nodiscard]] int weight_n_min(WeightId id);

/// Weight value at t.
///
/// f_i multiply the kernel (2/pi) t^2/(t^2+1/4)^2 on [0, inf) and g_i the
/// kernel (2/pi) sqrt(1-t^2) on [-1, 1]; each pairing integrates to C_n.
/// g-family arguments must lie in [-1, 1].
[[nodiscard]] double evaluate_weight(WeightId id, int n, double t);

/// Integrates kernel * weight and compares with C_n.
[[nodiscard]] EvaluationRecord weight_identity_check(WeightId id, int n, const ToleranceSpec& tol = {},
                                                     int max_n = kDefaultMaxN);

class NoBracket : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct IntersectionRoot {
    double t = 0.0;
    double residual = 0.0;  // |f1(t) - f2(t)|
    bool converged = false;
};

struct IntersectionReport {
    int n = 0;
    double t_lo = 0.0;
    double t_hi = 0.0;
    /// Points in the uniform scan of [t_lo, t_hi].
    int scan_points = 0;
    /// Sign changes of f1 - f2 seen by the scan.
    int sign_changes = 0;
    /// One refined root per sign change, in increasing t.
    std::vector<IntersectionRoot> roots;
};

inline constexpr int kIntersectionScanPoints = 10'000;
inline constexpr double kDefaultBracketLo = 1e-6;
inline constexpr double kDefaultBracketHi = 10.0;

/// Locates where f1 and f2 cross on [t_lo, t_hi].
///
/// f1 - f2 is scanned at kIntersectionScanPoints uniform points and every
/// sign change is refined by bisection until the residual drops below `tol`
/// or the bracket reaches machine resolution. Requires n >= 2 and opposite
/// signs at the bracket ends (NoBracket otherwise).
[[nodiscard]] IntersectionReport find_f_intersection(int n, double t_lo = kDefaultBracketLo,
                                                     double t_hi = kDefaultBracketHi, double tol = 1e-10);

struct WeightSample {
    double t;
    std::array<double, 3> w;
};

/// `samples` points t_i = (lo (m-i) + hi i) / m, m = samples - 1, with the
/// three weights of `family` at each. Symmetric ranges give exactly negated
/// paired points.
[[nodiscard]] std::vector<WeightSample> sample_weights(WeightFamily family, int n, double lo, double hi,
                                                       int samples);

}  // namespace catalan
