#include "gk/cyclo.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace gk;

namespace {

std::vector<Integer> coeffs(std::initializer_list<long> v) { return std::vector<Integer>(v.begin(), v.end()); }

}  // namespace

TEST_CASE("cyclotomic coefficient vectors") {
    CHECK(cyclotomic(1).coefficients == coeffs({-1, 1}));
    CHECK(cyclotomic(2).coefficients == coeffs({1, 1}));
    CHECK(cyclotomic(9).coefficients == coeffs({1, 0, 0, 1, 0, 0, 1}));
    CHECK(cyclotomic(12).coefficients == coeffs({1, 0, -1, 0, 1}));
    CHECK(cyclotomic(15).coefficients == coeffs({1, -1, 0, 1, -1, 1, 0, -1, 1}));
    CHECK(cyclotomic(105).coefficients[7] == -2);  // first coefficient outside {-1,0,1}
    CHECK_THROWS_AS(cyclotomic(0), std::domain_error);
}

TEST_CASE("product over divisors reassembles x^m - 1") {
    for (unsigned m = 1; m <= 200; ++m) {
        poly::Coeffs prod{Integer(1)};
        for (unsigned d = 1; d <= m; ++d)
            if (m % d == 0) prod = poly::mul(prod, cyclotomic(d).coefficients);
        poly::Coeffs expect(m + 1, Integer(0));
        expect.front() = -1;
        expect.back() = 1;
        REQUIRE(prod == expect);
    }
}

TEST_CASE("argument negation identity for odd m") {
    for (unsigned m = 3; m <= 199; m += 2)
        REQUIRE(cyclotomic(2 * m).coefficients == poly::negate_argument(cyclotomic(m).coefficients));
}

TEST_CASE("prime-composition identity") {
    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u}) {
        for (unsigned m = 1; m <= 50; ++m) {
            const auto composed = poly::compose_power(cyclotomic(m).coefficients, p);
            if (m % p == 0)
                REQUIRE(cyclotomic(p * m).coefficients == composed);
            else
                REQUIRE(poly::mul(cyclotomic(p * m).coefficients, cyclotomic(m).coefficients) == composed);
        }
    }
}

TEST_CASE("eval_cyclotomic") {
    CHECK(eval_cyclotomic(7, 2) == 127);
    CHECK(eval_cyclotomic(2, -5) == -4);
    CHECK(eval_cyclotomic(30, 2) == 331);
    CHECK(eval_cyclotomic(1, 10) == 9);
}

TEST_CASE("primitive divisors") {
    CHECK(primitive_divisors(2, 7) == PrimeSet{127});
    CHECK(primitive_divisors(5, 2) == PrimeSet{3});
    CHECK(primitive_divisors(2, 6).empty());
    CHECK(primitive_divisors(-2, 3).empty());
    CHECK(primitive_divisors(2, 15) == PrimeSet{151});
    CHECK(primitive_divisors(5, 1) == PrimeSet{2});  // 5 = 1 (mod 4)
    CHECK(primitive_divisors(7, 2) == PrimeSet{2});  // 7 = 3 (mod 4)
    CHECK(primitive_divisors(7, 1) == PrimeSet{3});
    CHECK_THROWS_AS(primitive_divisors(1, 3), std::domain_error);
}

TEST_CASE("zsigmondy exceptions match emptiness of R_i") {
    for (int sign : {1, -1})
        for (int mag = 2; mag <= 20; ++mag)
            for (unsigned i = 1; i <= 14; ++i) {
                const Integer a = sign * mag;
                REQUIRE(zsigmondy_exceptional(a, i) == primitive_divisors(a, i).empty());
            }
}

TEST_CASE("greatest primitive divisor on the named values") {
    CHECK(greatest_primitive_divisor(5, 4) == 13);
    CHECK(greatest_primitive_divisor(7, 1) == 3);
    CHECK(greatest_primitive_divisor(5, 9) == 15751);
    CHECK(greatest_primitive_divisor(2, 15) == 151);
    CHECK(greatest_primitive_divisor(2, 6) == 1);   // exceptional pair
    CHECK(greatest_primitive_divisor(-2, 3) == 1);  // exceptional pair
    CHECK(greatest_primitive_divisor(2, 1) == 1);
    CHECK(greatest_primitive_divisor(-3, 2) == 1);
}

TEST_CASE("k_i equals the R_i-part of a^i - 1") {
    for (int sign : {1, -1}) {
        for (int mag = 2; mag <= 12; ++mag) {
            const Integer a = sign * mag;
            for (unsigned i = 1; i <= 12; ++i) {
                if (i == 2) continue;
                REQUIRE(greatest_primitive_divisor(a, i) == pi_part(pow(a, i) - 1, primitive_divisors(a, i)));
            }
        }
    }
}

TEST_CASE("k_i(a) = k_2i(-a) for odd i") {
    for (int sign : {1, -1})
        for (int mag = 2; mag <= 20; ++mag)
            for (unsigned i = 1; i <= 17; i += 2) {
                const Integer a = sign * mag;
                REQUIRE(greatest_primitive_divisor(a, i) == greatest_primitive_divisor(-a, 2 * i));
            }
}

TEST_CASE("k_i are pairwise coprime in i") {
    for (int sign : {1, -1})
        for (int mag = 2; mag <= 10; ++mag)
            for (unsigned i = 1; i <= 14; ++i)
                for (unsigned j = i + 1; j <= 14; ++j) {
                    const Integer a = sign * mag;
                    REQUIRE(gcd(greatest_primitive_divisor(a, i), greatest_primitive_divisor(a, j)) == 1);
                }
}

TEST_CASE("lemma10_check on the named items") {
    const Lemma10Result r8 = lemma10_check(8, 10);
    CHECK(r8.exact_holds);
    CHECK(r8.lower_holds);
    CHECK(r8.upper_holds);
    CHECK(r8.product == 9901);

    const Lemma10Result r3 = lemma10_check(3, 5);
    CHECK(r3.exact_holds);
    CHECK(r3.lower_holds);
    CHECK(r3.upper_holds);
    CHECK(r3.product == 13);

    const Lemma10Result r9 = lemma10_check(9, 2);
    CHECK_FALSE(r9.exact_holds);
    REQUIRE(r9.swapped_exact_holds.has_value());
    CHECK(*r9.swapped_exact_holds);
    CHECK(r9.lower_holds);
    CHECK(r9.upper_holds);
    CHECK(r9.k_values == std::vector<std::pair<unsigned, Integer>>{{15, 151}, {30, 331}});

    CHECK_THROWS_AS(lemma10_check(12, 5), std::domain_error);
    CHECK_THROWS_AS(lemma10_check(3, 1), std::domain_error);
}

TEST_CASE("lemma10_check over a modest sweep") {
    for (int n = 2; n <= 60; ++n) {
        for (unsigned item = 1; item <= 11; ++item) {
            const Lemma10Result r = lemma10_check(item, n);
            REQUIRE(r.lower_holds);
            REQUIRE(r.upper_holds);
            if (item == 9) {
                REQUIRE_FALSE(r.exact_holds);
                REQUIRE(*r.swapped_exact_holds);
            } else {
                REQUIRE(r.exact_holds);
            }
        }
    }
}
