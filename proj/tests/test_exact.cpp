#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalan/exact.hpp"
#include "oracles.hpp"

using namespace catalan;

TEST_CASE("catalan: small values") {
    CHECK(catalan_number(0) == 1);
    CHECK(catalan_number(3) == 5);
    // Segner oracle gives C_10 = 16796
    const auto segner = oracle::segner_catalan(11);
    CHECK(segner[10] == 16796);
    CHECK(catalan_number(10) == segner[10]);
}

TEST_CASE("catalan: matches Segner recurrence up to 200") {
    const auto segner = oracle::segner_catalan(201);
    for (std::uint32_t n = 0; n <= 200; ++n) {
        REQUIRE(catalan_number(n) == segner[n]);
    }
}

TEST_CASE("catalan: ratio recurrence (n+2) C_{n+1} = (4n+2) C_n for n <= 500") {
    const auto table = catalan_table(502);
    for (std::uint32_t n = 0; n <= 500; ++n) {
        REQUIRE(catalan_number(n) == table[n]);
        REQUIRE(catalan_number(n + 1) * (n + 2) == catalan_number(n) * (4 * n + 2));
    }
}

TEST_CASE("binomial: examples and Pascal oracle") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(0, 0) == 1);

    const auto tri = oracle::pascal(100);
    CHECK(oracle::pascal(30)[30][15] == 155117520);
    CHECK(binomial(30, 15) == 155117520);
    for (std::uint32_t n = 0; n <= 100; ++n) {
        for (std::uint32_t k = 0; k <= n; ++k) {
            REQUIRE(binomial(n, k) == tri[n][k]);
        }
    }
}

TEST_CASE("binomial: Pascal rule for 1 <= k <= n <= 100") {
    for (std::uint32_t n = 1; n <= 100; ++n) {
        for (std::uint32_t k = 1; k <= n; ++k) {
            REQUIRE(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}

TEST_CASE("touchard_rhs: examples") {
    CHECK(touchard_rhs(0) == 1);
    // terms 16 + 24 + 2
    CHECK(touchard_rhs(4) == 42);
    CHECK(touchard_rhs(6) == 429);
    CHECK(touchard_rhs(6) == catalan_number(7));
}

TEST_CASE("touchard_rhs equals C_{n+1} for n in [0, 500]") {
    const auto segner = oracle::segner_catalan(502);
    for (std::uint32_t n = 0; n <= 500; ++n) {
        REQUIRE(touchard_rhs(n) == segner[n + 1]);
    }
}

TEST_CASE("callan_rhs: examples and domain") {
    CHECK(callan_rhs(2) == 2);
    // terms 12 + 2
    CHECK(callan_rhs(4) == 14);
    CHECK_THROWS_AS((void)callan_rhs(1), DomainError);
    CHECK_THROWS_AS((void)callan_rhs(0), DomainError);
    CHECK_THROWS_AS((void)callan_rhs(-3), DomainError);
}

TEST_CASE("callan_rhs is an integer equal to C_n for n in [2, 500]") {
    for (std::int64_t n = 2; n <= 500; ++n) {
        const auto rhs = callan_rhs(n);
        REQUIRE(rhs.get_den() == 1);
        REQUIRE(rhs == catalan_number(static_cast<std::uint32_t>(n)));
    }
}

TEST_CASE("callan: the printed (n+2)/(n(n+1)) prefactor would not reproduce C_n") {
    // Same k-weighted sum with n(n+1) in the denominator instead of n(n-1).
    for (std::uint32_t n : {3U, 4U, 10U}) {
        const auto tri = oracle::pascal(n);
        const auto cat = oracle::segner_catalan(n + 1);
        mpz_class s = 0;
        for (std::uint32_t k = 0; 2 * k <= n; ++k) {
            s += tri[n][2 * k] * cat[k] * k * (mpz_class(1) << (n - 2 * k));
        }
        mpq_class wrong(s * (n + 2), mpz_class(n) * (n + 1));
        wrong.canonicalize();
        CHECK(wrong != cat[n]);
        mpq_class right(s * (n + 2), mpz_class(n) * (n - 1));
        right.canonicalize();
        CHECK(right == cat[n]);
    }
}

TEST_CASE("fold_even: examples") {
    auto r = fold_even(1, 2, 3);
    CHECK(r.sum == 14);
    CHECK(r.closed_form_checked);

    r = fold_even(0, 2, 5);
    CHECK(r.sum == 32);
    CHECK(r.closed_form_checked);

    // oracle: 81 + 6*4*9 + 16 = 313; closed form (1^4 + 5^4)/2 = 313
    const auto tri = oracle::pascal(4);
    CHECK(oracle::even_binomial_terms(4, 3, 4, false, tri) == 313);
    r = fold_even(4, 3, 4);
    CHECK(r.sum == 313);
    CHECK(r.closed_form_checked);

    r = fold_even(2, 1, 4);  // sqrt(2) is irrational
    CHECK(r.sum == oracle::even_binomial_terms(2, 1, 4, false, tri));
    CHECK_FALSE(r.closed_form_checked);
}

TEST_CASE("fold_even_weighted: examples") {
    auto r = fold_even_weighted(1, 2, 3);
    CHECK(r.sum == 6);
    CHECK(r.closed_form_checked);

    CHECK(fold_even_weighted(mpq_class(7, 3), -5, 0).sum == 0);
    CHECK(fold_even_weighted(9, mpq_class(1, 2), 0).sum == 0);

    // oracle: k=1 gives 6, k=2 gives 2; closed form (4/4)(2^3 - 0^3) = 8
    const auto tri = oracle::pascal(4);
    CHECK(oracle::even_binomial_terms(1, 1, 4, true, tri) == 8);
    r = fold_even_weighted(1, 1, 4);
    CHECK(r.sum == 8);
    CHECK(r.closed_form_checked);
}

TEST_CASE("fold_even_square: examples") {
    CHECK(fold_even_square(1, 1, 2) == 2);
    CHECK(fold_even_square(0, 3, 3) == 27);
    CHECK(fold_even_square(2, 1, 4) == 41);
}

TEST_CASE("fold_even_square_weighted: examples") {
    CHECK(fold_even_square_weighted(1, 1, 2) == 1);
    CHECK(fold_even_square_weighted(mpq_class(-3, 7), 11, 1) == 0);
    // oracle: k=1 term 3*1*4*1 = 12; closed form (3*2/4)(3^2 - (-1)^2) = 12
    const auto tri = oracle::pascal(3);
    CHECK(oracle::even_binomial_terms(4, 1, 3, true, tri) == 12);
    CHECK(fold_even_square_weighted(2, 1, 3) == 12);
}

TEST_CASE("folds: property, sums match term oracle and closed forms") {
    oracle::RationalGen gen(0x70c4a7d);
    const auto tri = oracle::pascal(64);
    for (int trial = 0; trial < 50; ++trial) {
        const mpq_class r = gen.root();
        const mpq_class a_sq = r * r;
        const mpq_class a = gen.any();
        const mpq_class b = gen.any();
        for (std::uint32_t n = 0; n <= 64; ++n) {
            const auto fe = fold_even(a_sq, b, n);
            REQUIRE(fe.closed_form_checked);
            REQUIRE(fe.sum == oracle::even_binomial_terms(a_sq, b, n, false, tri));
            REQUIRE(fe.sum == fold_even_closed(r, b, n));

            const auto fw = fold_even_weighted(a_sq, b, n);
            REQUIRE(fw.closed_form_checked);
            REQUIRE(fw.sum == oracle::even_binomial_terms(a_sq, b, n, true, tri));

            REQUIRE(fold_even_square(a, b, n) == oracle::even_binomial_terms(a * a, b, n, false, tri));
            REQUIRE(fold_even_square_weighted(a, b, n) == oracle::even_binomial_terms(a * a, b, n, true, tri));
        }
    }
}

TEST_CASE("exact_sqrt") {
    CHECK(exact_sqrt(mpq_class(9, 4)) == mpq_class(3, 2));
    CHECK(exact_sqrt(0) == mpq_class(0));
    CHECK_FALSE(exact_sqrt(2).has_value());
    CHECK_FALSE(exact_sqrt(mpq_class(1, 3)).has_value());
    CHECK_FALSE(exact_sqrt(-4).has_value());
}

TEST_CASE("verify_identity: sweeps and errors") {
    auto t = verify_identity(Identity::touchard, 0, 100);
    CHECK(t.all_passed);
    CHECK(t.failures.empty());
    CHECK(t.n_min == 0);
    CHECK(t.n_max == 100);

    auto c = verify_identity(Identity::callan, 2, 100);
    CHECK(c.all_passed);
    CHECK(c.all_integral);

    CHECK_THROWS_AS((void)verify_identity(Identity::callan, 0, 10), DomainError);
    CHECK_THROWS_AS((void)verify_identity(Identity::touchard, 10, 5), DomainError);
    CHECK_THROWS_AS((void)verify_identity(Identity::touchard, -1, 5), DomainError);
}

TEST_CASE("verify_identity: partitioned sweep matches sequential") {
    for (unsigned workers : {2U, 3U, 7U, 64U}) {
        auto r = verify_identity(Identity::callan, 2, 300, workers);
        CHECK(r.all_passed);
        CHECK(r.n_min == 2);
        CHECK(r.n_max == 300);
    }
    auto single = verify_identity(Identity::touchard, 5, 5, 4);
    CHECK(single.all_passed);
}

TEST_CASE("identity names") {
    CHECK(parse_identity("touchard") == Identity::touchard);
    CHECK(parse_identity("callan") == Identity::callan);
    CHECK(to_string(Identity::callan) == "callan");
    CHECK_THROWS_AS((void)parse_identity("segner"), DomainError);
}
