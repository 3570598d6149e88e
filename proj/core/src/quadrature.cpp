#include "catalan/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

namespace catalan {

NonFiniteSample::NonFiniteSample(double x, double fx)
    : std::runtime_error("non-finite integrand sample f(" + std::to_string(x) + ") = " + std::to_string(fx)),
      x_(x),
      fx_(fx) {}

namespace {

// Kronrod 15-point abscissae; odd indices are the 7 Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

constexpr double kEps = std::numeric_limits<double>::epsilon();

constexpr std::int64_t kEndpointProbes = 2;
constexpr double kEndpointProbeNear = 1e-4;
constexpr double kEndpointProbeFar = 1e-8;
constexpr double kEndpointGrowthLimit = 1e3;

struct Segment {
    double lo;
    double hi;
    double value;
    double error;
};

double sample(const Integrand& f, double x) {
    const double fx = f(x);
    if (!std::isfinite(fx)) {
        throw NonFiniteSample(x, fx);
    }
    return fx;
}

Segment apply_rule(const Integrand& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    const double fc = sample(f, center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    double abs_sum = std::abs(fc) * kWgk[7];

    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = sample(f, center - dx);
        const double f2 = sample(f, center + dx);
        kronrod += kWgk[j] * (f1 + f2);
        abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) {
            gauss += kWg[j / 2] * (f1 + f2);
        }
    }

    const double value = kronrod * half;
    const double roundoff = 50.0 * kEps * abs_sum * std::abs(half);
    const double error = std::max(std::abs((kronrod - gauss) * half), roundoff);
    return {lo, hi, value, error};
}

void check_tolerance(const ToleranceSpec& tol) {
    if (!(tol.abs_tol > 0.0) || !(tol.rel_tol > 0.0)) {
        throw InvalidTolerance("abs_tol and rel_tol must be positive");
    }
    if (tol.max_evaluations < kRuleEvaluations) {
        throw InvalidTolerance("max_evaluations must allow one 15-point rule application");
    }
}

double target(const ToleranceSpec& tol, double value) {
    return std::max(tol.abs_tol, tol.rel_tol * std::abs(value));
}

}  // namespace

QuadratureResult integrate_finite(const Integrand& f, double lo, double hi, const ToleranceSpec& tol) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw InvalidInterval("integration interval requires finite lo < hi, got [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "]");
    }
    check_tolerance(tol);

    std::vector<Segment> segments;
    segments.push_back(apply_rule(f, lo, hi));
    std::int64_t evaluations = kRuleEvaluations;

    auto worse = [&segments](std::size_t a, std::size_t b) {
        if (segments[a].error != segments[b].error) {
            return segments[a].error < segments[b].error;
        }
        return segments[a].lo > segments[b].lo;
    };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(worse)> heap(worse);
    heap.push(0);

    double total = segments[0].value;
    double total_error = segments[0].error;

    // Recompute totals in position order.
    auto assemble = [&segments, &total, &total_error] {
        std::vector<const Segment*> order;
        order.reserve(segments.size());
        for (const auto& s : segments) {
            order.push_back(&s);
        }
        std::sort(order.begin(), order.end(), [](const Segment* a, const Segment* b) { return a->lo < b->lo; });
        total = 0.0;
        total_error = 0.0;
        for (const auto* s : order) {
            total += s->value;
            total_error += s->error;
        }
    };

    bool converged = false;
    while (true) {
        if (total_error <= target(tol, total)) {
            assemble();
            if (total_error <= target(tol, total)) {
                converged = true;
                break;
            }
        }
        if (evaluations + 2 * kRuleEvaluations > tol.max_evaluations) {
            break;
        }
        const std::size_t worst = heap.top();
        const Segment parent = segments[worst];
        const double mid = 0.5 * (parent.lo + parent.hi);
        if (!(parent.lo < mid && mid < parent.hi)) {
            // interval exhausted at machine resolution
            break;
        }
        heap.pop();
        Segment left = apply_rule(f, parent.lo, mid);
        Segment right = apply_rule(f, mid, parent.hi);
        evaluations += 2 * kRuleEvaluations;

        total += left.value + right.value - parent.value;
        total_error += left.error + right.error - parent.error;

        segments[worst] = left;
        segments.push_back(right);
        heap.push(worst);
        heap.push(segments.size() - 1);
    }

    if (!converged) {
        assemble();
    }
    return {total, total_error, evaluations, converged};
}

double half_line_transformed(const Integrand& f, double theta) {
    const double c = std::cos(theta);
    if (c <= 0.0) {
        return 0.0;
    }
    const double t = 0.5 * std::tan(theta);
    const double ft = f(t);
    if (ft == 0.0) {
        return 0.0;
    }
    return ft * (0.5 / (c * c));
}

QuadratureResult integrate_half_line(const Integrand& f, const ToleranceSpec& tol) {
    check_tolerance(tol);
    auto g = [&f](double theta) { return half_line_transformed(f, theta); };

    // The theta interval stops at the double just below pi/2, so a divergent
    // integrand would still give a finite (meaningless) integral. Probe the
    // approach to the endpoint and reject growth that has no finite limit.
    constexpr double kHalfPi = std::numbers::pi / 2.0;
    const double near = sample(g, kHalfPi - kEndpointProbeNear);
    const double far = sample(g, kHalfPi - kEndpointProbeFar);
    if (std::abs(far) > kEndpointGrowthLimit * std::max(std::abs(near), std::numeric_limits<double>::min())) {
        throw NonFiniteSample(std::numeric_limits<double>::infinity(), far);
    }

    ToleranceSpec inner = tol;
    inner.max_evaluations -= kEndpointProbes;
    if (inner.max_evaluations < kRuleEvaluations) {
        throw InvalidTolerance("max_evaluations must allow one 15-point rule application plus the endpoint probes");
    }
    QuadratureResult r = integrate_finite(g, 0.0, kHalfPi, inner);
    r.evaluations += kEndpointProbes;
    return r;
}

}  // namespace catalan
