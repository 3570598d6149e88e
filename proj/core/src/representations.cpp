#include "catalan/representations.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace catalan {

namespace {

using std::numbers::pi;

// x = 1/sqrt(t^2 + 1/4), ranges over (0, 2].
double inv_root(double t) {
    return 1.0 / std::sqrt(t * t + 0.25);
}

double unit_kernel(double t) {
    return std::sqrt((1.0 - t) * (1.0 + t));
}

double r0_prefactor(int) {
    return 2.0 / pi;
}
double r0_integrand(int n, double t) {
    const double t2 = t * t;
    return t2 / std::pow(t2 + 0.25, n + 2);
}

double r1_prefactor(int) {
    return 1.0 / pi;
}
double r1_integrand(int n, double t) {
    const double u = t * t + 0.25;
    const double x = inv_root(t);
    return t * t / (u * u) * (std::pow(2.0 - x, n - 1) + std::pow(2.0 + x, n - 1));
}

double r2_prefactor(int n) {
    return (n + 2.0) / (2.0 * (n - 1.0) * pi);
}
double r2_integrand(int n, double t) {
    const double u = t * t + 0.25;
    const double x = inv_root(t);
    return t * t * x / (u * u) * (std::pow(2.0 + x, n - 1) - std::pow(2.0 - x, n - 1));
}

double b0_prefactor(int n) {
    return std::ldexp(1.0, 2 * n + 1) / pi;
}
double b0_integrand(int n, double t) {
    return std::pow(t, 2 * n) * unit_kernel(t);
}

double b1_prefactor(int n) {
    return std::ldexp(1.0, n - 1) / pi;
}
double b1_integrand(int n, double t) {
    return unit_kernel(t) * (std::pow(1.0 - t, n - 1) + std::pow(1.0 + t, n - 1));
}

double b2_prefactor(int n) {
    return std::ldexp(1.0, n - 1) * (n + 2.0) / (pi * (n - 1.0));
}
double b2_integrand(int n, double t) {
    return t * unit_kernel(t) * (std::pow(t + 1.0, n - 1) - std::pow(1.0 - t, n - 1));
}

constexpr std::array<RepresentationSpec, 6> kSpecs = {{
    {RepresentationId::R0, 0, IntegrationDomain::half_line, r0_prefactor, r0_integrand},
    {RepresentationId::R1, 1, IntegrationDomain::half_line, r1_prefactor, r1_integrand},
    {RepresentationId::R2, 2, IntegrationDomain::half_line, r2_prefactor, r2_integrand},
    {RepresentationId::B0, 0, IntegrationDomain::symmetric_unit, b0_prefactor, b0_integrand},
    {RepresentationId::B1, 0, IntegrationDomain::symmetric_unit, b1_prefactor, b1_integrand},
    {RepresentationId::B2, 2, IntegrationDomain::symmetric_unit, b2_prefactor, b2_integrand},
}};

constexpr std::array<std::string_view, 6> kRepNames = {"R0", "R1", "R2", "B0", "B1", "B2"};
constexpr std::array<std::string_view, 6> kWeightNames = {"f1", "f2", "f3", "g1", "g2", "g3"};

void check_n(std::string_view label, int n, int n_min, int max_n) {
    if (n < n_min) {
        throw DomainError(std::string(label) + " requires n >= " + std::to_string(n_min) + ", got " +
                          std::to_string(n));
    }
    if (n > max_n) {
        throw DomainError(std::string(label) + " is supported up to n = " + std::to_string(max_n) + ", got " +
                          std::to_string(n));
    }
}

EvaluationRecord make_record(std::string_view label, int n, double prefactor, const QuadratureResult& q) {
    EvaluationRecord rec;
    rec.label = label;
    rec.n = n;
    rec.quadrature = q;
    rec.estimate = prefactor * q.value;
    rec.estimate_error = prefactor * q.abs_error_estimate;
    rec.exact = catalan_number(static_cast<std::uint32_t>(n));
    const double exact = rec.exact.get_d();
    rec.rel_error = std::abs(rec.estimate - exact) / exact;
    return rec;
}

bool is_f_family(WeightId id) {
    return id == WeightId::f1 || id == WeightId::f2 || id == WeightId::f3;
}

}  // namespace

const RepresentationSpec& representation_spec(RepresentationId id) {
    return kSpecs[static_cast<std::size_t>(id)];
}

std::string_view to_string(RepresentationId id) {
    return kRepNames[static_cast<std::size_t>(id)];
}

RepresentationId parse_representation(std::string_view name) {
    for (std::size_t i = 0; i < kRepNames.size(); ++i) {
        if (kRepNames[i] == name) {
            return static_cast<RepresentationId>(i);
        }
    }
    throw DomainError("unknown representation '" + std::string(name) + "' (expected R0, R1, R2, B0, B1 or B2)");
}

QuadratureResult integrate_on_domain(IntegrationDomain domain, const Integrand& f, const ToleranceSpec& tol) {
    if (domain == IntegrationDomain::half_line) {
        return integrate_half_line(f, tol);
    }
    return integrate_finite([&f](double phi) { return f(std::sin(phi)) * std::cos(phi); }, -pi / 2, pi / 2, tol);
}

EvaluationRecord evaluate_representation(RepresentationId id, int n, const ToleranceSpec& tol, int max_n) {
    const auto& spec = representation_spec(id);
    check_n(to_string(id), n, spec.n_min, max_n);

    const QuadratureResult q =
        integrate_on_domain(spec.domain, [&spec, n](double t) { return spec.integrand(n, t); }, tol);
    return make_record(to_string(id), n, spec.prefactor(n), q);
}

std::string_view to_string(WeightId id) {
    return kWeightNames[static_cast<std::size_t>(id)];
}

WeightId parse_weight(std::string_view name) {
    for (std::size_t i = 0; i < kWeightNames.size(); ++i) {
        if (kWeightNames[i] == name) {
            return static_cast<WeightId>(i);
        }
    }
    throw DomainError("unknown weight '" + std::string(name) + "' (expected f1, f2, f3, g1, g2 or g3)");
}

WeightFamily parse_family(std::string_view name) {
    if (name == "f") {
        return WeightFamily::f;
    }
    if (name == "g") {
        return WeightFamily::g;
    }
    throw DomainError("unknown weight family '" + std::string(name) + "' (expected f or g)");
}

int weight_n_min(WeightId id) {
    return (id == WeightId::f3 || id == WeightId::g3) ? 2 : 1;
}

double evaluate_weight(WeightId id, int n, double t) {
    if (n < weight_n_min(id)) {
        throw DomainError(std::string(to_string(id)) + " requires n >= " + std::to_string(weight_n_min(id)) +
                          ", got " + std::to_string(n));
    }
    if (!is_f_family(id) && !(t >= -1.0 && t <= 1.0)) {
        throw DomainError(std::string(to_string(id)) + " is defined on [-1, 1], got t = " + std::to_string(t));
    }
    switch (id) {
        case WeightId::f1:
            return std::pow(t * t + 0.25, -n);
        case WeightId::f2: {
            const double x = inv_root(t);
            return 0.5 * (std::pow(2.0 - x, n - 1) + std::pow(2.0 + x, n - 1));
        }
        case WeightId::f3: {
            const double x = inv_root(t);
            return (n + 2.0) / (4.0 * (n - 1.0)) * x * (std::pow(2.0 + x, n - 1) - std::pow(2.0 - x, n - 1));
        }
        case WeightId::g1:
            return std::pow(2.0 * t, 2 * n);
        case WeightId::g2:
            return std::ldexp(1.0, n - 2) * (std::pow(1.0 - t, n - 1) + std::pow(1.0 + t, n - 1));
        case WeightId::g3:
            return std::ldexp(1.0, n - 2) * (n + 2.0) / (n - 1.0) * t *
                   (std::pow(t + 1.0, n - 1) - std::pow(1.0 - t, n - 1));
    }
    return 0.0;
}

EvaluationRecord weight_identity_check(WeightId id, int n, const ToleranceSpec& tol, int max_n) {
    check_n(to_string(id), n, weight_n_min(id), max_n);
    QuadratureResult q;
    if (is_f_family(id)) {
        q = integrate_on_domain(
            IntegrationDomain::half_line,
            [id, n](double t) {
                const double u = t * t + 0.25;
                return t * t / (u * u) * evaluate_weight(id, n, t);
            },
            tol);
    } else {
        q = integrate_on_domain(
            IntegrationDomain::symmetric_unit,
            [id, n](double t) { return unit_kernel(t) * evaluate_weight(id, n, t); }, tol);
    }
    return make_record(to_string(id), n, 2.0 / pi, q);
}

IntersectionReport find_f_intersection(int n, double t_lo, double t_hi, double tol) {
    if (n < 2) {
        throw DomainError("intersection search requires n >= 2, got " + std::to_string(n));
    }
    if (!(t_lo < t_hi) || !std::isfinite(t_lo) || !std::isfinite(t_hi)) {
        throw InvalidInterval("intersection bracket requires finite t_lo < t_hi");
    }
    auto gap = [n](double t) { return evaluate_weight(WeightId::f1, n, t) - evaluate_weight(WeightId::f2, n, t); };
    auto sign = [](double v) { return (v > 0.0) - (v < 0.0); };

    const int s_lo = sign(gap(t_lo));
    const int s_hi = sign(gap(t_hi));
    if (s_lo == s_hi || s_lo == 0 || s_hi == 0) {
        throw NoBracket("f1 - f2 has the same sign at t = " + std::to_string(t_lo) + " and t = " +
                        std::to_string(t_hi) + " for n = " + std::to_string(n));
    }

    IntersectionReport report;
    report.n = n;
    report.t_lo = t_lo;
    report.t_hi = t_hi;
    report.scan_points = kIntersectionScanPoints;

    const int m = kIntersectionScanPoints - 1;
    double prev_t = t_lo;
    int prev_sign = s_lo;
    for (int i = 1; i <= m; ++i) {
        const double t = (t_lo * (m - i) + t_hi * i) / m;
        const int s = sign(gap(t));
        if (s == 0) {
            continue;
        }
        if (s != prev_sign) {
            ++report.sign_changes;

            double a = prev_t;
            double b = t;
            IntersectionRoot best{a, std::abs(gap(a)), false};
            const double gb = std::abs(gap(b));
            if (gb < best.residual) {
                best = {b, gb, false};
            }
            while (best.residual >= tol) {
                const double mid = 0.5 * (a + b);
                if (!(a < mid && mid < b)) {
                    break;
                }
                const double gm = gap(mid);
                if (std::abs(gm) < best.residual) {
                    best = {mid, std::abs(gm), false};
                }
                if (sign(gm) == prev_sign) {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            best.converged = best.residual < tol;
            report.roots.push_back(best);
        }
        prev_t = t;
        prev_sign = s;
    }
    return report;
}

std::vector<WeightSample> sample_weights(WeightFamily family, int n, double lo, double hi, int samples) {
    if (samples < 2) {
        throw DomainError("need at least 2 samples, got " + std::to_string(samples));
    }
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw InvalidInterval("sample range requires finite lo < hi");
    }
    const std::array<WeightId, 3> ids = family == WeightFamily::f
                                            ? std::array{WeightId::f1, WeightId::f2, WeightId::f3}
                                            : std::array{WeightId::g1, WeightId::g2, WeightId::g3};
    if (n < weight_n_min(ids[2])) {
        throw DomainError(std::string(to_string(ids[2])) + " requires n >= 2, got " + std::to_string(n));
    }

    std::vector<WeightSample> rows;
    rows.reserve(static_cast<std::size_t>(samples));
    const int m = samples - 1;
    for (int i = 0; i <= m; ++i) {
        const double t = (lo * (m - i) + hi * i) / m;
        rows.push_back({t, {evaluate_weight(ids[0], n, t), evaluate_weight(ids[1], n, t), evaluate_weight(ids[2], n, t)}});
    }
    return rows;
}

}  // namespace catalan
