#pragma once

// Exact big-integer computation of Catalan numbers, binomial coefficients,
// the Touchard and Callan identities, and the four even-index binomial folds.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace catalan {

using ExactInteger = mpz_class;
using ExactRational = mpq_class;

/// Thrown when an argument lies outside an operation's mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Thrown when an explicit fold sum disagrees with its closed form.
/// Seeing this means a bug, not bad input.
class ClosedFormMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// C_n = binom(2n, n) / (n + 1).
[[nodiscard]] ExactInteger catalan_number(std::uint32_t n);

/// C_0 .. C_count-1, built with the ratio recurrence C_{n+1} = C_n (4n+2)/(n+2).
[[nodiscard]] std::vector<ExactInteger> catalan_table(std::uint32_t count);

/// binom(n, k); zero when k > n.
[[nodiscard]] ExactInteger binomial(std::uint32_t n, std::uint32_t k);

/// Sum_{k=0}^{floor(n/2)} binom(n, 2k) C_k 2^(n-2k). Equals C_{n+1}.
[[nodiscard]] ExactInteger touchard_rhs(std::uint32_t n);

/// Sum_{k=0}^{floor(n/2)} 2^(n-2k) binom(n, 2k) C_k k(n+2)/(n(n-1)).
///
/// The k = 0 term carries the factor k and vanishes, so starting at k = 0 or
/// k = 1 gives the same sum. The result is reduced; it is an integer equal to
/// C_n. Throws DomainError for n <= 1.
[[nodiscard]] ExactRational callan_rhs(std::int64_t n);

// Even-index binomial folds.
//
//   fold_even                  sum binom(n,2k)     a^k  b^(n-2k) = ((b-r)^n + (b+r)^n)/2,         r = sqrt(a)
//   fold_even_weighted         sum binom(n,2k)   k a^k  b^(n-2k) = (n r/4)((b+r)^(n-1) - (b-r)^(n-1))
//   fold_even_square           sum binom(n,2k)    a^2k  b^(n-2k) = ((a+b)^n + (b-a)^n)/2
//   fold_even_square_weighted  sum binom(n,2k)  k a^2k  b^(n-2k) = (n a/4)((a+b)^(n-1) - (b-a)^(n-1))
//
// Every fold computes the explicit sum. The closed form is then evaluated
// and compared exactly; a mismatch throws ClosedFormMismatch. The a^k forms
// can only be checked when a is the square of a rational.

struct FoldResult {
    ExactRational sum;
    /// False when a had no exact rational square root (the requires-sqrt case).
    bool closed_form_checked = false;
};

[[nodiscard]] FoldResult fold_even(const ExactRational& a, const ExactRational& b, std::uint32_t n);
[[nodiscard]] FoldResult fold_even_weighted(const ExactRational& a, const ExactRational& b, std::uint32_t n);
[[nodiscard]] ExactRational fold_even_square(const ExactRational& a, const ExactRational& b, std::uint32_t n);
[[nodiscard]] ExactRational fold_even_square_weighted(const ExactRational& a, const ExactRational& b,
                                                      std::uint32_t n);

// Closed forms on their own, taking the square root r where one is needed.
[[nodiscard]] ExactRational fold_even_closed(const ExactRational& r, const ExactRational& b, std::uint32_t n);
[[nodiscard]] ExactRational fold_even_weighted_closed(const ExactRational& r, const ExactRational& b,
                                                      std::uint32_t n);
[[nodiscard]] ExactRational fold_even_square_closed(const ExactRational& a, const ExactRational& b,
                                                    std::uint32_t n);
[[nodiscard]] ExactRational fold_even_square_weighted_closed(const ExactRational& a, const ExactRational& b,
                                                             std::uint32_t n);

/// Exact square root of a nonnegative rational, if p/q has one.
[[nodiscard]] std::optional<ExactRational> exact_sqrt(const ExactRational& a);

/// q^e for a rational base and machine exponent.
[[nodiscard]] ExactRational rational_pow(const ExactRational& q, std::uint32_t e);

enum class Identity { touchard, callan };

[[nodiscard]] std::string_view to_string(Identity id);
[[nodiscard]] Identity parse_identity(std::string_view name);

struct IdentityFailure {
    std::int64_t n = 0;
    ExactRational lhs;
    ExactRational rhs;
};

struct IdentityReport {
    Identity identity = Identity::touchard;
    std::int64_t n_min = 0;
    std::int64_t n_max = 0;
    std::vector<IdentityFailure> failures;
    bool all_passed = true;
    /// Callan only: every rhs reduced to an integer.
    bool all_integral = true;
};

/// Exact sweep of n_min..n_max (inclusive). Touchard compares C_{n+1} with
/// touchard_rhs(n); Callan compares C_n with callan_rhs(n) and requires n_min > 1.
/// `workers` > 1 splits the range; failures are merged by ascending n.
[[nodiscard]] IdentityReport verify_identity(Identity identity, std::int64_t n_min, std::int64_t n_max,
                                             unsigned workers = 1);

}  // namespace catalan
