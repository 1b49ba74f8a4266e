#pragma once

#include "gk/integer.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace gk {

using PrimeSet = std::set<Integer>;

/// Thrown when the factorization effort cap is exhausted. The result would be
/// incomplete, so no partial answer is returned.
struct FactorEffortError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FactorConfig {
    unsigned trial_bound = 10000;
    // Total Pollard-Brent iterations allowed for one factorize() call.
    std::uint64_t max_rho_iterations = std::uint64_t(1) << 28;
};

/// Complete factorization of |value| as prime -> exponent.
struct Factorization {
    Integer value;
    std::map<Integer, unsigned> factors;

    Integer reassemble() const {
        Integer n = 1;
        for (const auto& [p, e] : factors)
            for (unsigned i = 0; i < e; ++i) n *= p;
        return n;
    }
    PrimeSet prime_set() const {
        PrimeSet s;
        for (const auto& [p, e] : factors) s.insert(p);
        return s;
    }
};

namespace detail {

inline const std::vector<std::uint32_t>& small_primes(std::uint32_t bound = 10000) {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> sieve(10001, true);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= 10000; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= 10000; j += i) sieve[j] = false;
        }
        return out;
    }();
    (void)bound;
    return primes;
}

inline bool strong_probable_prime(const Integer& n, const Integer& base) {
    Integer b = mod(base, n);
    if (b == 0) return true;
    Integer d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    Integer x = powm(b, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

// Integer floor of the k-th root.
inline Integer iroot(const Integer& n, unsigned k) {
    if (n < 2) return n;
    unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    Integer x = Integer(1) << (bits / k + 1);
    while (true) {
        // Newton step for x^k = n, rounded down.
        Integer xk1 = pow(x, k - 1);
        Integer y = ((k - 1) * x * xk1 + n) / (k * xk1);
        if (y >= x) break;
        x = y;
    }
    while (pow(x, k) > n) --x;
    return x;
}

inline bool is_perfect_power(const Integer& n) {
    if (n < 4) return false;
    unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    for (unsigned k = 2; k <= bits; ++k) {
        Integer r = iroot(n, k);
        if (pow(r, k) == n) return true;
    }
    return false;
}

// AKS primality test, the unconditional fallback for inputs above the proven
// Miller-Rabin bound. Slow, but it is only reached for n >= ~3.3e24.
inline bool aks_is_prime(const Integer& n) {
    if (n < 2) return false;
    if (is_perfect_power(n)) return false;
    const unsigned log2n = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    const std::uint64_t limit = std::uint64_t(log2n) * log2n;

    std::uint64_t r = 2;
    for (;; ++r) {
        Integer g = gcd(Integer(r), n);
        if (g == n) continue;  // r is a multiple of n; only for tiny n
        if (g > 1) return false;
        std::uint64_t ord = 0;
        Integer x = mod(n, Integer(r));
        Integer acc = 1;
        for (std::uint64_t k = 1; k <= limit + 1; ++k) {
            acc = (acc * x) % r;
            if (acc == 1) {
                ord = k;
                break;
            }
        }
        if (ord == 0 || ord > limit) break;
    }
    if (n <= r) return true;

    // phi(r) for the witness count
    std::uint64_t phi = r, m = r;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        phi -= phi / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) phi -= phi / m;

    std::uint64_t wit = 0;
    {
        std::uint64_t s = 0;
        while (s * s <= phi) ++s;
        wit = s * log2n;
    }

    // (X + a)^n == X^(n mod r) + a over Z_n[X]/(X^r - 1)
    const auto polymulmod = [&](const std::vector<Integer>& A, const std::vector<Integer>& B) {
        std::vector<Integer> C(r, Integer(0));
        for (std::uint64_t i = 0; i < r; ++i) {
            if (A[i] == 0) continue;
            for (std::uint64_t j = 0; j < r; ++j) {
                if (B[j] == 0) continue;
                std::uint64_t k = i + j;
                if (k >= r) k -= r;
                C[k] = (C[k] + A[i] * B[j]) % n;
            }
        }
        return C;
    };
    for (std::uint64_t a = 1; a <= wit; ++a) {
        std::vector<Integer> base(r, Integer(0)), acc(r, Integer(0));
        base[1 % r] = 1;
        base[0] = a;
        acc[0] = 1;
        Integer exp = n;
        while (exp > 0) {
            if ((exp & 1) != 0) acc = polymulmod(acc, base);
            base = polymulmod(base, base);
            exp >>= 1;
        }
        std::vector<Integer> expect(r, Integer(0));
        expect[static_cast<std::uint64_t>(mod(n, Integer(r)))] = 1;
        expect[0] = (expect[0] + a) % n;
        if (acc != expect) return false;
    }
    return true;
}

// First 13 primes certify Miller-Rabin below this bound (Sorenson & Webster).
inline const Integer& miller_rabin_certified_bound() {
    static const Integer bound("3317044064679887385961981");
    return bound;
}

inline Integer pollard_brent(const Integer& n, unsigned c, std::uint64_t& budget) {
    // Brent's cycle variant with batched gcds; deterministic parameters.
    Integer y = 2, g = 1, q = 1, x = 0, ys = 0;
    const std::uint64_t batch = 128;
    std::uint64_t r = 1;
    const auto f = [&](const Integer& v) { return (v * v + c) % n; };
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = f(y);
        for (std::uint64_t k = 0; k < r && g == 1; k += batch) {
            ys = y;
            const std::uint64_t steps = std::min(batch, r - k);
            for (std::uint64_t i = 0; i < steps; ++i) {
                y = f(y);
                q = (q * abs(x - y)) % n;
            }
            if (budget < steps) throw FactorEffortError("factorization effort cap exceeded (incomplete)");
            budget -= steps;
            g = gcd(q, n);
        }
        r <<= 1;
    }
    if (g == n) {
        // Backtrack one step at a time.
        do {
            ys = f(ys);
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    return g == n ? Integer(0) : g;
}

}  // namespace detail

/// Deterministic primality test, exact for every input. Below the published
/// 13-base bound this is plain Miller-Rabin; above it the AKS fallback runs.
inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u}) {
        if (n % p == 0) return n == p;
    }
    if (n < 53 * 53) return true;
    for (std::uint32_t b : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u}) {
        if (!detail::strong_probable_prime(n, b)) return false;
    }
    if (n < detail::miller_rabin_certified_bound()) return true;
    return detail::aks_is_prime(n);
}

/// Complete factorization of |n|, n != 0. Trial division up to the configured
/// bound, then Pollard-Brent with deterministic parameters. If the iteration
/// cap runs out a FactorEffortError is thrown; there is no partial answer.
inline Factorization factorize(const Integer& n, const FactorConfig& cfg = {}) {
    if (n == 0) throw std::domain_error("factorize: n must be nonzero");
    Factorization out;
    out.value = n;
    Integer w = abs(n);
    for (std::uint32_t p : detail::small_primes(cfg.trial_bound)) {
        if (p > cfg.trial_bound) break;
        if (Integer(p) * p > w) break;
        while (w % p == 0) {
            w /= p;
            ++out.factors[p];
        }
    }
    if (w == 1) return out;

    std::uint64_t budget = cfg.max_rho_iterations;
    std::vector<Integer> stack{w};
    while (!stack.empty()) {
        Integer m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_prime(m)) {
            ++out.factors[m];
            continue;
        }
        Integer d = 0;
        for (unsigned c = 1; d == 0; ++c) d = detail::pollard_brent(m, c, budget);
        stack.push_back(d);
        stack.push_back(m / d);
    }
    return out;
}

/// n_pi: the largest positive divisor d of n with every prime of d in pi.
inline Integer pi_part(const Integer& n, const PrimeSet& pi) {
    if (n == 0) throw std::domain_error("pi_part: n must be nonzero");
    Integer w = abs(n), part = 1;
    for (const Integer& p : pi) {
        while (w % p == 0) {
            w /= p;
            part *= p;
        }
    }
    return part;
}

/// n_{pi'} = |n| / n_pi.
inline Integer pi_copart(const Integer& n, const PrimeSet& pi) { return abs(n) / pi_part(n, pi); }

/// {r}-part of n for a single prime r.
inline Integer r_part(const Integer& n, const Integer& r) { return pi_part(n, PrimeSet{r}); }

/// e(r, a): multiplicative order of a modulo an odd prime r, computed through
/// the factorization of r-1. For r = 2 and odd a the standing convention is
/// e(2, a) = 1 when a = 1 (mod 4) and e(2, a) = 2 otherwise.
inline Integer mult_order(const Integer& r, const Integer& a) {
    if (r == 2) {
        if (mod(a, 2) == 0) throw std::domain_error("mult_order: a must be odd for r = 2");
        return mod(a, 4) == 1 ? 1 : 2;
    }
    if (r < 2 || !is_prime(r)) throw std::domain_error("mult_order: r must be prime");
    Integer base = mod(a, r);
    if (base == 0) throw std::domain_error("mult_order: r divides a");
    Integer e = r - 1;
    for (const auto& [p, k] : factorize(r - 1).factors) {
        for (unsigned i = 0; i < k; ++i) {
            if (e % p != 0) break;
            if (powm(base, e / p, r) == 1)
                e /= p;
            else
                break;
        }
    }
    return e;
}

/// Checks the lifting-the-exponent identities for x = eps*a, m > 1, prime r:
///   odd r | x-1      =>  (x^m - 1)_{r} = m_{r} * (x - 1)_{r}
///   odd r | x^m - 1  =>  r | x^{m_{r'}} - 1
///   4 | x-1          =>  (x^m - 1)_{2} = m_{2} * (x - 1)_{2}
/// Every clause whose hypothesis holds is evaluated literally on both sides.
/// Returns nullopt when no clause applies.
inline std::optional<bool> verify_lte(const Integer& a, unsigned m, const Integer& r, Sign eps) {
    if (abs(a) < 2) throw std::domain_error("verify_lte: |a| must exceed 1");
    if (m < 2) throw std::domain_error("verify_lte: m must exceed 1");
    if (!is_prime(r)) throw std::domain_error("verify_lte: r must be prime");
    const Integer x = sign_value(eps) * a;
    const Integer xm1 = pow(x, m) - 1;
    bool applicable = false, ok = true;
    if (r > 2) {
        if (mod(x - 1, r) == 0) {
            applicable = true;
            ok = ok && r_part(xm1, r) == r_part(Integer(m), r) * r_part(x - 1, r);
        }
        if (mod(xm1, r) == 0) {
            applicable = true;
            Integer m_rp = Integer(m) / r_part(Integer(m), r);
            ok = ok && mod(pow(x, static_cast<unsigned>(m_rp)) - 1, r) == 0;
        }
    } else if (mod(x - 1, 4) == 0) {
        applicable = true;
        ok = ok && r_part(xm1, 2) == r_part(Integer(m), 2) * r_part(x - 1, 2);
    }
    if (!applicable) return std::nullopt;
    return ok;
}

}  // namespace gk
