#include "catalan/exact.hpp"

#include <algorithm>
#include <future>
#include <limits>

namespace catalan {

namespace {

// Row n of Pascal's triangle.
std::vector<ExactInteger> binomial_row(std::uint32_t n) {
    std::vector<ExactInteger> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (std::uint32_t j = 0; j < n; ++j) {
        row[j + 1] = row[j] * (n - j);
        mpz_divexact_ui(row[j + 1].get_mpz_t(), row[j + 1].get_mpz_t(), j + 1);
    }
    return row;
}

ExactInteger pow2(std::uint32_t e) {
    ExactInteger r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

// Touchard sum given C_0..C_{n/2}.
ExactInteger touchard_sum(std::uint32_t n, const std::vector<ExactInteger>& cat) {
    const auto row = binomial_row(n);
    ExactInteger sum = 0;
    for (std::uint32_t k = 0; 2 * k <= n; ++k) {
        sum += row[2 * k] * cat[k] * pow2(n - 2 * k);
    }
    return sum;
}

// Callan sum given C_0..C_{n/2}; n > 1.
ExactRational callan_sum(std::uint32_t n, const std::vector<ExactInteger>& cat) {
    const auto row = binomial_row(n);
    ExactInteger weighted = 0;
    for (std::uint32_t k = 0; 2 * k <= n; ++k) {
        weighted += row[2 * k] * cat[k] * pow2(n - 2 * k) * k;
    }
    // common factor (n+2) / (n(n-1)) of every term
    ExactInteger den = ExactInteger(n) * (n - 1);
    ExactRational result(weighted * (n + 2), den);
    result.canonicalize();
    return result;
}

std::uint32_t checked_index(std::int64_t n) {
    if (n < 0 || n > std::numeric_limits<std::uint32_t>::max() / 2 - 2) {
        throw DomainError("index out of range: " + std::to_string(n));
    }
    return static_cast<std::uint32_t>(n);
}

void check_against_closed(const ExactRational& sum, const ExactRational& closed, const char* which) {
    if (sum != closed) {
        throw ClosedFormMismatch(std::string(which) + ": sum " + sum.get_str() + " != closed form " +
                                 closed.get_str());
    }
}

}  // namespace

ExactInteger catalan_number(std::uint32_t n) {
    ExactInteger c = binomial(2 * n, n);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), n + 1UL);
    return c;
}

std::vector<ExactInteger> catalan_table(std::uint32_t count) {
    std::vector<ExactInteger> table;
    table.reserve(count);
    ExactInteger c = 1;
    for (std::uint32_t n = 0; n < count; ++n) {
        table.push_back(c);
        c *= 4UL * n + 2;
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), n + 2UL);
    }
    return table;
}

ExactInteger binomial(std::uint32_t n, std::uint32_t k) {
    if (k > n) {
        return 0;
    }
    ExactInteger r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

ExactInteger touchard_rhs(std::uint32_t n) {
    return touchard_sum(n, catalan_table(n / 2 + 1));
}

ExactRational callan_rhs(std::int64_t n) {
    if (n <= 1) {
        throw DomainError("Callan identity requires n > 1, got " + std::to_string(n));
    }
    const auto m = checked_index(n);
    return callan_sum(m, catalan_table(m / 2 + 1));
}

ExactRational rational_pow(const ExactRational& q, std::uint32_t e) {
    ExactRational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), q.get_num_mpz_t(), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), q.get_den_mpz_t(), e);
    // q is canonical, so powers of coprime parts stay coprime
    return r;
}

std::optional<ExactRational> exact_sqrt(const ExactRational& a) {
    if (sgn(a) < 0) {
        return std::nullopt;
    }
    const auto& num = a.get_num();
    const auto& den = a.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
        return std::nullopt;
    }
    ExactRational r(sqrt(num), sqrt(den));
    r.canonicalize();
    return r;
}

ExactRational fold_even_closed(const ExactRational& r, const ExactRational& b, std::uint32_t n) {
    return (rational_pow(ExactRational(b - r), n) + rational_pow(ExactRational(b + r), n)) / 2;
}

ExactRational fold_even_weighted_closed(const ExactRational& r, const ExactRational& b, std::uint32_t n) {
    if (n == 0) {
        return 0;
    }
    ExactRational diff = rational_pow(ExactRational(b + r), n - 1) - rational_pow(ExactRational(b - r), n - 1);
    return ExactRational(n) * r / 4 * diff;
}

ExactRational fold_even_square_closed(const ExactRational& a, const ExactRational& b, std::uint32_t n) {
    return (rational_pow(ExactRational(a + b), n) + rational_pow(ExactRational(b - a), n)) / 2;
}

ExactRational fold_even_square_weighted_closed(const ExactRational& a, const ExactRational& b,
                                               std::uint32_t n) {
    if (n == 0) {
        return 0;
    }
    ExactRational diff = rational_pow(ExactRational(a + b), n - 1) - rational_pow(ExactRational(b - a), n - 1);
    return ExactRational(n) * a / 4 * diff;
}

namespace {

// sum_k binom(n,2k) w(k) x^k b^(n-2k), with x = a or a^2 and w(k) = 1 or k.
ExactRational even_fold_sum(const ExactRational& x, const ExactRational& b, std::uint32_t n, bool k_weighted) {
    const auto row = binomial_row(n);
    ExactRational sum = 0;
    for (std::uint32_t k = 0; 2 * k <= n; ++k) {
        if (k_weighted && k == 0) {
            continue;
        }
        ExactRational term = rational_pow(x, k) * rational_pow(b, n - 2 * k);
        term *= row[2 * k];
        if (k_weighted) {
            term *= k;
        }
        sum += term;
    }
    return sum;
}

}  // namespace

FoldResult fold_even(const ExactRational& a, const ExactRational& b, std::uint32_t n) {
    FoldResult out{even_fold_sum(a, b, n, false), false};
    if (auto r = exact_sqrt(a)) {
        check_against_closed(out.sum, fold_even_closed(*r, b, n), "fold_even");
        out.closed_form_checked = true;
    }
    return out;
}

FoldResult fold_even_weighted(const ExactRational& a, const ExactRational& b, std::uint32_t n) {
    FoldResult out{even_fold_sum(a, b, n, true), false};
    if (auto r = exact_sqrt(a)) {
        check_against_closed(out.sum, fold_even_weighted_closed(*r, b, n), "fold_even_weighted");
        out.closed_form_checked = true;
    }
    return out;
}

ExactRational fold_even_square(const ExactRational& a, const ExactRational& b, std::uint32_t n) {
    ExactRational sum = even_fold_sum(ExactRational(a * a), b, n, false);
    check_against_closed(sum, fold_even_square_closed(a, b, n), "fold_even_square");
    return sum;
}

ExactRational fold_even_square_weighted(const ExactRational& a, const ExactRational& b, std::uint32_t n) {
    ExactRational sum = even_fold_sum(ExactRational(a * a), b, n, true);
    check_against_closed(sum, fold_even_square_weighted_closed(a, b, n), "fold_even_square_weighted");
    return sum;
}

std::string_view to_string(Identity id) {
    switch (id) {
        case Identity::touchard:
            return "touchard";
        case Identity::callan:
            return "callan";
    }
    return "?";
}

Identity parse_identity(std::string_view name) {
    if (name == "touchard") {
        return Identity::touchard;
    }
    if (name == "callan") {
        return Identity::callan;
    }
    throw DomainError("unknown identity '" + std::string(name) + "' (expected touchard or callan)");
}

namespace {

IdentityReport sweep(Identity identity, std::uint32_t lo, std::uint32_t hi, const std::vector<ExactInteger>& cat) {
    IdentityReport report;
    report.identity = identity;
    report.n_min = lo;
    report.n_max = hi;
    for (std::uint32_t n = lo; n <= hi; ++n) {
        if (identity == Identity::touchard) {
            ExactInteger rhs = touchard_sum(n, cat);
            if (rhs != cat[n + 1]) {
                report.failures.push_back({n, ExactRational(cat[n + 1]), ExactRational(rhs)});
            }
        } else {
            ExactRational rhs = callan_sum(n, cat);
            if (rhs.get_den() != 1) {
                report.all_integral = false;
            }
            if (rhs != cat[n]) {
                report.failures.push_back({n, ExactRational(cat[n]), rhs});
            }
        }
    }
    report.all_passed = report.failures.empty();
    return report;
}

}  // namespace

IdentityReport verify_identity(Identity identity, std::int64_t n_min, std::int64_t n_max, unsigned workers) {
    if (n_min > n_max) {
        throw DomainError("empty range: n_min " + std::to_string(n_min) + " > n_max " + std::to_string(n_max));
    }
    if (identity == Identity::callan && n_min <= 1) {
        throw DomainError("Callan identity requires n > 1, got n_min = " + std::to_string(n_min));
    }
    const auto lo = checked_index(n_min);
    const auto hi = checked_index(n_max);
    const auto cat = catalan_table(hi + 2);

    workers = std::clamp(workers, 1U, hi - lo + 1);
    if (workers == 1) {
        return sweep(identity, lo, hi, cat);
    }

    const std::uint32_t span = hi - lo + 1;
    std::vector<std::future<IdentityReport>> parts;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint32_t a = lo + static_cast<std::uint32_t>(std::uint64_t{span} * w / workers);
        const std::uint32_t b = lo + static_cast<std::uint32_t>(std::uint64_t{span} * (w + 1) / workers) - 1;
        parts.push_back(std::async(std::launch::async, [=, &cat] { return sweep(identity, a, b, cat); }));
    }

    IdentityReport merged;
    merged.identity = identity;
    merged.n_min = lo;
    merged.n_max = hi;
    for (auto& part : parts) {
        auto r = part.get();
        merged.all_integral = merged.all_integral && r.all_integral;
        for (auto& f : r.failures) {
            merged.failures.push_back(std::move(f));
        }
    }
    merged.all_passed = merged.failures.empty();
    return merged;
}

}  // namespace catalan
