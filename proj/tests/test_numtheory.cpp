#include "gk/numtheory.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace gk;

namespace {

// trial division, the independent primality oracle
bool prime_by_trial_division(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("is_prime matches trial division up to 20000") {
    for (std::uint64_t n = 0; n <= 20000; ++n) REQUIRE(is_prime(n) == prime_by_trial_division(n));
}

TEST_CASE("is_prime on the named values") {
    CHECK(is_prime(4561));
    CHECK(is_prime(127));
    CHECK(is_prime(1741));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    // Mersenne values on both sides of 2^64, still below the certified bound
    CHECK(is_prime(pow(Integer(2), 61) - 1));
    CHECK_FALSE(is_prime(pow(Integer(2), 67) - 1));
}

TEST_CASE("aks fallback agrees with trial division on small inputs") {
    for (std::uint64_t n : {2ull, 3ull, 31ull, 91ull, 97ull, 561ull, 1024ull})
        CHECK(detail::aks_is_prime(n) == prime_by_trial_division(n));
}

TEST_CASE("factorize on the named values") {
    CHECK(factorize(124).factors == std::map<Integer, unsigned>{{2, 2}, {31, 1}});
    CHECK(factorize(82).factors == std::map<Integer, unsigned>{{2, 1}, {41, 1}});
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(-1).factors.empty());
    CHECK(factorize(-124).factors == std::map<Integer, unsigned>{{2, 2}, {31, 1}});
    CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("factorize reassembles |n|") {
    std::mt19937_64 rng(20240517);
    for (int trial = 0; trial < 200; ++trial) {
        const Integer n = Integer(rng() % 1000000007) + 1;
        const Factorization f = factorize(n);
        REQUIRE(f.reassemble() == n);
        for (const auto& [p, e] : f.factors) REQUIRE(is_prime(p));
    }
    // a few two-large-prime composites beyond the trial bound
    const Integer a("1000003"), b("999999999989");
    CHECK(factorize(a * b).reassemble() == a * b);
    CHECK(factorize(pow(Integer(10), 16) + 61).reassemble() == pow(Integer(10), 16) + 61);
}

TEST_CASE("factorize effort cap raises instead of looping") {
    FactorConfig cfg;
    cfg.max_rho_iterations = 4;
    const Integer hard = Integer("1000003") * Integer("1000033");
    CHECK_THROWS_AS(factorize(hard, cfg), FactorEffortError);
}

TEST_CASE("pi_part and copart") {
    CHECK(pi_part(24, {2}) == 8);
    CHECK(pi_part(24, {3, 5}) == 3);
    CHECK(pi_part(78126, {2, 3}) == 6);
    CHECK(pi_part(-24, {2}) == 8);
    CHECK(pi_copart(24, {2}) == 3);
    CHECK_THROWS_AS(pi_part(0, {2}), std::domain_error);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Integer n = Integer(rng() % 100000000) + 2;
        const PrimeSet pi{2, 3, 5, 7};
        const Integer part = pi_part(n, pi), co = pi_copart(n, pi);
        REQUIRE(part * co == n);
        REQUIRE(gcd(part, co) == 1);
    }
}

TEST_CASE("mult_order on the named values") {
    CHECK(mult_order(41, 5) == 20);
    CHECK(mult_order(31, 7) == 15);
    CHECK(mult_order(2, 7) == 2);
    CHECK(mult_order(2, 5) == 1);
    CHECK(mult_order(2, -3) == 1);
    CHECK(mult_order(19, 5) == 9);
    CHECK(mult_order(4561, 7) == 2280);
    CHECK_THROWS_AS(mult_order(5, 10), std::domain_error);
    CHECK_THROWS_AS(mult_order(2, 4), std::domain_error);
    CHECK_THROWS_AS(mult_order(9, 2), std::domain_error);
}

TEST_CASE("mult_order divides r-1 and is minimal") {
    std::mt19937_64 rng(99);
    const std::vector<int> primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    for (int r : primes) {
        for (int trial = 0; trial < 8; ++trial) {
            Integer a = Integer(rng() % 1000) - 500;
            if (mod(a, r) == 0) a += 1;
            const Integer e = mult_order(r, a);
            REQUIRE((Integer(r) - 1) % e == 0);
            REQUIRE(powm(mod(a, r), e, r) == 1);
            for (Integer d = 1; d < e; ++d)
                if (e % d == 0) REQUIRE(powm(mod(a, r), d, r) != 1);
        }
    }
}

TEST_CASE("verify_lte on the stated examples") {
    CHECK(verify_lte(4, 6, 3, Sign::plus) == std::optional<bool>(true));
    CHECK(verify_lte(5, 4, 2, Sign::plus) == std::optional<bool>(true));
    // r = 2 with eps*a - 1 not divisible by 4: no clause applies
    CHECK(verify_lte(7, 4, 2, Sign::plus) == std::nullopt);
    CHECK(verify_lte(2, 3, 7, Sign::plus) == std::optional<bool>(true));  // 7 | 2^3-1 via clause 2
    CHECK_THROWS_AS(verify_lte(1, 4, 3, Sign::plus), std::domain_error);
}

TEST_CASE("verify_lte sweep holds for every applicable input") {
    for (int a = 2; a <= 20; ++a)
        for (unsigned m = 2; m <= 20; ++m)
            for (int r : {2, 3, 5, 7, 11, 13})
                for (Sign eps : {Sign::plus, Sign::minus}) {
                    const auto res = verify_lte(a, m, r, eps);
                    if (res) REQUIRE(*res);
                }
}
