/*
   Copyright 2026 The chaincodes authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CHAINCODES_ARITH_HPP
#define CHAINCODES_ARITH_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "chaincodes/errors.hpp"

namespace chaincodes {

// Elementary number theory at desk scale (arguments comfortably below 2^32
// unless noted). Everything is by trial division; no probabilistic shortcuts.

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            std::uint32_t e = 0;
            while (n % d == 0) n /= d, ++e;
            fs.emplace_back(d, e);
        }
    }
    if (n > 1) fs.emplace_back(n, 1);
    return fs;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (const auto& [p, e] : factorize(n)) ps.push_back(p);
    return ps;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> ds;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (const auto& [p, e] : factorize(n)) r -= r / p;
    return r;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % mod);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    if (mod == 1) return 0;
    std::uint64_t r = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, mod);
        base = mul_mod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

/// Smallest i > 0 with a^i = 1 (mod n); requires gcd(a, n) = 1.
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
    if (n == 0) throw InputError("multiplicative_order: zero modulus");
    if (n == 1) return 1;
    if (std::gcd(a % n, n) != 1) throw InputError("multiplicative_order: arguments not coprime");
    std::uint64_t x = a % n, i = 1;
    while (x != 1) {
        x = mul_mod(x, a % n, n);
        if (++i > n) throw InputError("multiplicative_order: no order found");
    }
    return i;
}

/// b^-1 mod n for gcd(b, n) = 1.
inline std::uint64_t inverse_mod(std::uint64_t b, std::uint64_t n) {
    if (n == 1) return 0;
    std::int64_t t = 0, newt = 1, r = static_cast<std::int64_t>(n), newr = static_cast<std::int64_t>(b % n);
    while (newr != 0) {
        std::int64_t qq = r / newr;
        t = std::exchange(newt, t - qq * newt);
        r = std::exchange(newr, r - qq * newr);
    }
    if (r != 1) throw InputError("inverse_mod: arguments not coprime");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(n) : t);
}

/// q = p^n for prime p; returns {p, n} or throws.
inline std::pair<std::uint64_t, std::uint32_t> prime_power_decompose(std::uint64_t q) {
    if (q < 2) throw InputError("prime power expected, got " + std::to_string(q));
    auto fs = factorize(q);
    if (fs.size() != 1) throw InputError(std::to_string(q) + " is not a prime power");
    return {fs[0].first, fs[0].second};
}

/// base^exp, throwing once the result would exceed `limit`.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit,
                                 const char* what = "checked_pow overflow") {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base) throw BoundError(what);
        r *= base;
        if (r > limit) throw BoundError(what);
    }
    return r;
}

}  // namespace chaincodes

#endif  // CHAINCODES_ARITH_HPP
