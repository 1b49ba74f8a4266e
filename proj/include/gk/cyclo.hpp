#pragma once

#include "gk/numtheory.hpp"

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace gk {

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
struct CycloPolynomial {
    unsigned index = 0;
    std::vector<Integer> coefficients;

    unsigned degree() const { return static_cast<unsigned>(coefficients.size()) - 1; }

    Integer operator()(const Integer& a) const {
        Integer v = 0;
        for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) v = v * a + *it;
        return v;
    }
};

namespace poly {

using Coeffs = std::vector<Integer>;

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
    Coeffs c(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

// a *= (x^d - 1)
inline void mul_binomial(Coeffs& a, unsigned d) {
    Coeffs c(a.size() + d, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        c[i + d] += a[i];
        c[i] -= a[i];
    }
    a = std::move(c);
}

// a /= (x^d - 1), exact. Synthetic division from the top coefficient.
inline void div_binomial(Coeffs& a, unsigned d) {
    Coeffs q(a.size() - d, Integer(0));
    for (std::size_t k = a.size(); k-- > d;) {
        q[k - d] = a[k];
        a[k - d] += a[k];
        a[k] = 0;
    }
    for (unsigned i = 0; i < d; ++i)
        if (a[i] != 0) throw std::logic_error("div_binomial: remainder is nonzero");
    a = std::move(q);
}

// b(x) = a(x^p)
inline Coeffs compose_power(const Coeffs& a, unsigned p) {
    Coeffs b((a.size() - 1) * p + 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) b[i * p] = a[i];
    return b;
}

inline Coeffs negate_argument(const Coeffs& a) {
    Coeffs b = a;
    for (std::size_t i = 1; i < b.size(); i += 2) b[i] = -b[i];
    return b;
}

}  // namespace poly

namespace detail {

inline int moebius(unsigned n) {
    int mu = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

inline unsigned totient(unsigned n) {
    unsigned phi = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        phi -= phi / p;
        while (n % p == 0) n /= p;
    }
    if (n > 1) phi -= phi / n;
    return phi;
}

inline std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> d;
    for (unsigned i = 1; i * i <= n; ++i) {
        if (n % i) continue;
        d.push_back(i);
        if (i != n / i) d.push_back(n / i);
    }
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace detail

/// Phi_m as an exact coefficient vector via the Moebius product
/// Phi_m(x) = prod_{d|m} (x^d - 1)^{mu(m/d)}. Memoized; copies returned.
inline CycloPolynomial cyclotomic(unsigned m) {
    if (m == 0) throw std::domain_error("cyclotomic: m must be positive");
    static std::map<unsigned, CycloPolynomial> memo;
    static std::mutex memo_mutex;
    {
        std::lock_guard lock(memo_mutex);
        if (auto it = memo.find(m); it != memo.end()) return it->second;
    }
    poly::Coeffs acc{Integer(1)};
    std::vector<unsigned> denominators;
    for (unsigned d : detail::divisors(m)) {
        switch (detail::moebius(m / d)) {
            case 1: poly::mul_binomial(acc, d); break;
            case -1: denominators.push_back(d); break;
            default: break;
        }
    }
    for (unsigned d : denominators) poly::div_binomial(acc, d);
    CycloPolynomial result{m, std::move(acc)};
    if (result.degree() != detail::totient(m)) throw std::logic_error("cyclotomic: degree != phi(m)");
    std::lock_guard lock(memo_mutex);
    return memo.emplace(m, std::move(result)).first->second;
}

/// Phi_m(a), exact Horner evaluation.
inline Integer eval_cyclotomic(unsigned m, const Integer& a) { return cyclotomic(m)(a); }

/// True iff (a, i) admits no primitive prime divisor of a^i - 1.
inline bool zsigmondy_exceptional(const Integer& a, unsigned i) {
    static const std::array<std::pair<int, unsigned>, 6> exceptions{
        {{2, 1}, {2, 6}, {-2, 2}, {-2, 3}, {3, 1}, {-3, 2}}};
    for (const auto& [ea, ei] : exceptions)
        if (a == ea && i == ei) return true;
    return false;
}

/// R_i(a): primes r dividing a^i - 1 with e(r, a) = i. Every such prime
/// divides Phi_i(a), so that value is factored and filtered by order.
inline PrimeSet primitive_divisors(const Integer& a, unsigned i) {
    if (abs(a) < 2) throw std::domain_error("primitive_divisors: |a| must exceed 1");
    if (i == 0) throw std::domain_error("primitive_divisors: i must be positive");
    const Integer v = eval_cyclotomic(i, a);
    PrimeSet out;
    if (abs(v) <= 1) return out;
    for (const auto& [r, e] : factorize(v).factors) {
        if (r == 2) {
            if (mod(a, 2) == 1 && mult_order(r, a) == i) out.insert(r);
        } else if (mult_order(r, a) == i) {
            out.insert(r);
        }
    }
    return out;
}

/// k_i(a), the greatest primitive divisor of a^i - 1. For i > 2 this is
/// |Phi_i(a)| / (r, Phi_{i_{r'}}(a)) with r the greatest prime divisor of i;
/// k_1 follows the a mod 4 convention and k_2(a) = k_1(-a).
inline Integer greatest_primitive_divisor(const Integer& a, unsigned i) {
    if (abs(a) < 2) throw std::domain_error("greatest_primitive_divisor: |a| must exceed 1");
    if (i == 0) throw std::domain_error("greatest_primitive_divisor: i must be positive");
    if (i == 1) {
        const Integer d = abs(a - 1);
        return mod(a, 4) == 3 ? Integer(d / 2) : d;
    }
    if (i == 2) return greatest_primitive_divisor(-a, 1);
    unsigned rest = i, r = 1;
    for (unsigned p = 2; p * p <= rest; ++p) {
        while (rest % p == 0) {
            rest /= p;
            r = p;
        }
    }
    if (rest > 1) r = rest;
    unsigned i_rp = i;
    while (i_rp % r == 0) i_rp /= r;
    const Integer numerator = abs(eval_cyclotomic(i, a));
    const Integer g = gcd(Integer(r), abs(eval_cyclotomic(i_rp, a)));
    if (numerator % g != 0) throw std::logic_error("greatest_primitive_divisor: gcd correction does not divide");
    return numerator / g;
}

/// One item of the k_i estimation lemma: the closed-form identity checked
/// against greatest_primitive_divisor, and both product bounds decided by
/// integer cross-multiplication. Item 9 also evaluates the index-swapped
/// assignment of the two printed formulas.
struct Lemma10Result {
    unsigned item = 0;
    bool exact_holds = false;
    bool lower_holds = false;
    bool upper_holds = false;
    std::optional<bool> swapped_exact_holds;
    Integer product;
    std::vector<std::pair<unsigned, Integer>> k_values;
};

inline Lemma10Result lemma10_check(unsigned item, const Integer& n) {
    if (item < 1 || item > 11) throw std::domain_error("lemma10_check: item must be 1..11");
    if (n < 2) throw std::domain_error("lemma10_check: n must be >= 2");

    struct Bound {
        unsigned exponent;
        long lower_num, lower_den;
        long upper_num, upper_den;
    };
    const auto k = [&](unsigned i) { return greatest_primitive_divisor(n, i); };
    const Integer g2m = gcd(Integer(2), n - 1);
    const Integer g3m = gcd(Integer(3), n - 1);
    const Integer g3p = gcd(Integer(3), n + 1);
    const Integer g7m = gcd(Integer(7), n - 1);
    const Integer g7p = gcd(Integer(7), n + 1);

    Lemma10Result res;
    res.item = item;
    std::vector<unsigned> indices;
    bool exact = false;
    Bound b{};
    switch (item) {
        case 1:
            indices = {1, 2};
            exact = k(1) * k(2) == (n * n - 1) / g2m;
            b = {2, 1, 4, 1, 1};
            break;
        case 2:
            indices = {3, 6};
            exact = k(3) * k(6) == (pow(n, 4) + n * n + 1) / gcd(Integer(3), n * n - 1);
            b = {4, 1, 3, 5, 4};
            break;
        case 3:
            indices = {4};
            exact = k(4) == (n * n + 1) / g2m;
            b = {2, 1, 2, 5, 4};
            break;
        case 4:
            indices = {5, 10};
            exact = k(5) * k(10) == (pow(n, 8) + pow(n, 6) + pow(n, 4) + n * n + 1) / gcd(Integer(5), n * n - 1);
            b = {8, 1, 5, 4, 3};
            break;
        case 5:
            indices = {7, 14};
            exact = k(7) == (pow(n, 6) + pow(n, 5) + pow(n, 4) + pow(n, 3) + n * n + n + 1) / g7m &&
                    k(14) == (pow(n, 6) - pow(n, 5) + pow(n, 4) - pow(n, 3) + n * n - n + 1) / g7p;
            b = {12, 1, 7, 3, 2};
            break;
        case 6:
            indices = {8};
            exact = k(8) == (pow(n, 4) + 1) / g2m;
            b = {4, 1, 2, 17, 16};
            break;
        case 7:
            indices = {9, 18};
            exact = k(9) == (pow(n, 6) + pow(n, 3) + 1) / g3m && k(18) == (pow(n, 6) - pow(n, 3) + 1) / g3p;
            b = {12, 1, 3, 65, 64};
            break;
        case 8:
            indices = {12};
            exact = k(12) == pow(n, 4) - n * n + 1;
            b = {4, 3, 4, 1, 1};
            break;
        case 9: {
            indices = {15, 30};
            const Integer plus = pow(n, 8) + pow(n, 7) - pow(n, 5) - pow(n, 4) - pow(n, 3) + n + 1;
            const Integer minus = pow(n, 8) - pow(n, 7) + pow(n, 5) - pow(n, 4) + pow(n, 3) - n + 1;
            exact = k(15) == plus && k(30) == minus;
            res.swapped_exact_holds = k(15) == minus && k(30) == plus;
            b = {16, 3, 4, 1, 1};
            break;
        }
        case 10:
            indices = {20};
            exact = k(20) == (pow(n, 8) - pow(n, 6) + pow(n, 4) - n * n + 1) / gcd(Integer(5), n * n + 1);
            b = {8, 4, 25, 1, 1};
            break;
        case 11:
            indices = {24};
            exact = k(24) == pow(n, 8) - pow(n, 4) + 1;
            b = {8, 15, 16, 1, 1};
            break;
    }
    res.exact_holds = exact;
    res.product = 1;
    for (unsigned i : indices) {
        Integer ki = k(i);
        res.product *= ki;
        res.k_values.emplace_back(i, std::move(ki));
    }
    const Integer ne = pow(n, b.exponent);
    res.lower_holds = b.lower_num * ne <= b.lower_den * res.product;
    res.upper_holds = b.upper_den * res.product <= b.upper_num * ne;
    return res;
}

}  // namespace gk
