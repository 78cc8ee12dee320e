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

#include "chaincodes/chain_ring.hpp"

#include <algorithm>
#include <cstdlib>

#include "chaincodes/arith.hpp"

namespace chaincodes {

std::string to_string(RingFamily f) {
    return f == RingFamily::GaloisRing ? "galois-ring" : "equal-characteristic";
}

RingFamily ring_family_from_string(const std::string& name) {
    if (name == "galois-ring" || name == "galois") return RingFamily::GaloisRing;
    if (name == "equal-characteristic" || name == "eqchar") return RingFamily::EqualCharacteristic;
    throw InputError("unknown ring family '" + name + "'");
}

namespace {

// ---- F_p[x] helpers for the canonical modulus search --------------------

using Poly = std::vector<std::uint64_t>;  // ascending coefficients mod p

Poly poly_trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    std::size_t deg = f.size() - 1;
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
    for (std::size_t k = c.size(); k-- > deg;) {
        std::uint64_t t = c[k];
        if (t == 0) continue;
        c[k] = 0;
        for (std::size_t i = 0; i < deg; ++i)
            c[k - deg + i] = (c[k - deg + i] + mul_mod((p - f[i] % p) % p, t, p)) % p;
    }
    c.resize(deg, 0);
    return c;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    std::size_t deg = f.size() - 1;
    Poly r(deg, 0);
    r[0] = 1 % p;
    base.resize(std::max(base.size(), deg), 0);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
    a = poly_trim(std::move(a));
    Poly g = poly_trim(b);
    if (g.empty()) throw InputError("polynomial division by zero");
    std::uint64_t lead_inv = inverse_mod(g.back(), p);
    while (a.size() >= g.size()) {
        std::uint64_t coef = mul_mod(a.back(), lead_inv, p);
        std::size_t shift = a.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i)
            a[shift + i] = (a[shift + i] + (p - mul_mod(coef, g[i], p)) % p) % p;
        a = poly_trim(std::move(a));
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
    std::size_t e = f.size() - 1;
    Poly x = {0, 1};
    std::uint64_t pe = 1;
    for (std::size_t i = 0; i < e; ++i) pe *= p;
    Poly xp = poly_powmod(x, pe, f, p);
    Poly xr = poly_mod(x, f, p);
    if (poly_trim(xp) != poly_trim(xr)) return false;
    for (std::uint64_t r : prime_divisors(e)) {
        std::uint64_t per = 1;
        for (std::size_t i = 0; i < e / r; ++i) per *= p;
        Poly g = poly_powmod(x, per, f, p);
        // g - x
        g.resize(std::max<std::size_t>(g.size(), 2), 0);
        g[1] = (g[1] + p - 1) % p;
        Poly d = poly_gcd(f, g, p);
        if (d.size() > 1) return false;
    }
    return true;
}

bool is_primitive(const Poly& f, std::uint64_t p) {
    if (f[0] == 0) return false;
    if (!is_irreducible(f, p)) return false;
    std::size_t e = f.size() - 1;
    std::uint64_t pe = 1;
    for (std::size_t i = 0; i < e; ++i) pe *= p;
    Poly x = {0, 1};
    for (std::uint64_t r : prime_divisors(pe - 1)) {
        Poly g = poly_powmod(x, (pe - 1) / r, f, p);
        Poly one = {1};
        if (poly_trim(g) == one) return false;
    }
    return true;
}

/// First monic primitive polynomial of degree e over F_p, coefficient vector
/// enumerated as an ascending base-p integer with the constant term least
/// significant.
Poly canonical_primitive(std::uint64_t p, std::uint32_t e) {
    if (e == 0) throw InputError("extension degree must be positive");
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (count > (1ull << 62) / p) throw BoundError("modulus search space too large");
        count *= p;
    }
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly f(e + 1, 0);
        std::uint64_t v = idx;
        for (std::uint32_t i = 0; i < e; ++i) {
            f[i] = v % p;
            v /= p;
        }
        f[e] = 1;
        if (f[0] == 0) continue;
        if (is_primitive(f, p)) return f;
    }
    throw InputError("no primitive polynomial found");  // unreachable for prime p
}

std::uint32_t max_ring_bits() {
    std::uint32_t bits = 30;
    if (const char* env = std::getenv("CHAINCODES_MAX_RING_BITS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v >= 4 && v <= 62) bits = static_cast<std::uint32_t>(v);
    }
    return bits;
}

}  // namespace

RingPtr ChainRing::make(std::uint64_t p, std::uint32_t n, std::uint32_t s, std::uint32_t m,
                        RingFamily family) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    if (n == 0 || s == 0 || m == 0) throw InputError("n, s, m must all be at least 1");
    std::uint32_t bits = max_ring_bits();
    std::uint64_t limit = bits >= 63 ? ~0ull : (1ull << bits);

    auto ring = std::shared_ptr<ChainRing>(new ChainRing());
    ring->p_ = p;
    ring->n_ = n;
    ring->s_ = s;
    ring->m_ = m;
    ring->family_ = family;
    ring->deg_ = n * m;
    ring->size_ = checked_pow(p, static_cast<std::uint64_t>(s) * n * m, limit,
                              "ring size p^(s*n*m) exceeds the configured bound "
                              "(override with CHAINCODES_MAX_RING_BITS)");
    ring->q_ = checked_pow(p, n, limit);
    ring->qm_ = checked_pow(p, static_cast<std::uint64_t>(n) * m, limit);
    ring->coeff_mod_ = family == RingFamily::GaloisRing ? checked_pow(p, s, limit) : p;

    Poly g = canonical_primitive(p, ring->deg_);
    ring->modulus_.assign(g.begin(), g.end());  // coefficient-wise lift for GaloisRing

    // ξ = ω(x̄): the Teichmüller lift of the primitive residue generates Γ(S)*.
    Elem x = ring->zero();
    if (ring->deg_ == 1) {
        // x ≡ −g_0 in the quotient
        std::uint64_t c = ring->coeff_mod_ - (g[0] % ring->coeff_mod_);
        x[0] = c % ring->coeff_mod_;
    } else {
        x[1] = 1;
    }
    ring->xi_ = ring->teichmuller(x);

    std::uint64_t ord = ring->qm_ - 1;
    if (!ring->is_zero(ring->sub(ring->pow(ring->xi_, ord), ring->one())))
        throw std::logic_error("xi^(q^m-1) != 1");
    for (std::uint64_t r : prime_divisors(ord))
        if (ring->is_zero(ring->sub(ring->pow(ring->xi_, ord / r), ring->one())))
            throw std::logic_error("xi has order smaller than q^m-1");
    return ring;
}

std::uint64_t ChainRing::base_size() const {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < s_; ++i) r *= q_;
    return r;
}

void ChainRing::check_elem(const Elem& a) const {
    std::size_t want = family_ == RingFamily::GaloisRing ? deg_ : static_cast<std::size_t>(s_) * deg_;
    if (a.size() != want) throw InputError("element has wrong coefficient count");
}

Elem ChainRing::zero() const {
    return Elem(family_ == RingFamily::GaloisRing ? deg_ : static_cast<std::size_t>(s_) * deg_, 0);
}

Elem ChainRing::one() const {
    Elem a = zero();
    a[0] = 1 % coeff_mod_;
    return a;
}

Elem ChainRing::theta() const {
    Elem a = zero();
    if (family_ == RingFamily::GaloisRing) {
        a[0] = p_ % coeff_mod_;  // 0 when s = 1
    } else if (s_ > 1) {
        a[deg_] = 1;  // the element u
    }
    return a;
}

Elem ChainRing::from_int(std::uint64_t v) const {
    Elem a = zero();
    a[0] = family_ == RingFamily::GaloisRing ? v % coeff_mod_ : v % p_;
    return a;
}

bool ChainRing::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](std::uint64_t c) { return c == 0; });
}

Elem ChainRing::add(const Elem& a, const Elem& b) const {
    check_elem(a);
    check_elem(b);
    Elem c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % coeff_mod_;
    return c;
}

Elem ChainRing::sub(const Elem& a, const Elem& b) const {
    check_elem(a);
    check_elem(b);
    Elem c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + coeff_mod_ - b[i]) % coeff_mod_;
    return c;
}

Elem ChainRing::neg(const Elem& a) const { return sub(zero(), a); }

Elem ChainRing::field_mul(const Elem& a, const Elem& b) const {
    // a, b are single blocks of deg_ coefficients mod p
    std::vector<std::uint64_t> c(2 * deg_ - 1, 0);
    for (std::size_t i = 0; i < deg_; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < deg_; ++j) c[i + j] = (c[i + j] + mul_mod(a[i], b[j], p_)) % p_;
    }
    for (std::size_t k = c.size(); k-- > deg_;) {
        std::uint64_t t = c[k];
        if (t == 0) continue;
        c[k] = 0;
        for (std::size_t i = 0; i < deg_; ++i)
            c[k - deg_ + i] = (c[k - deg_ + i] + mul_mod((p_ - modulus_[i] % p_) % p_, t, p_)) % p_;
    }
    c.resize(deg_);
    return c;
}

Elem ChainRing::mul(const Elem& a, const Elem& b) const {
    check_elem(a);
    check_elem(b);
    if (family_ == RingFamily::GaloisRing) {
        std::vector<std::uint64_t> c(2 * deg_ - 1, 0);
        for (std::size_t i = 0; i < deg_; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < deg_; ++j)
                c[i + j] = (c[i + j] + static_cast<__uint128_t>(a[i]) * b[j]) % coeff_mod_;
        }
        for (std::size_t k = c.size(); k-- > deg_;) {
            std::uint64_t t = c[k];
            if (t == 0) continue;
            c[k] = 0;
            for (std::size_t i = 0; i < deg_; ++i)
                c[k - deg_ + i] = static_cast<std::uint64_t>(
                    (c[k - deg_ + i] +
                     static_cast<__uint128_t>(coeff_mod_ - modulus_[i] % coeff_mod_) * t) %
                    coeff_mod_);
        }
        c.resize(deg_);
        return c;
    }
    // u-block convolution truncated at u^s
    Elem c = zero();
    for (std::uint32_t i = 0; i < s_; ++i) {
        Elem ai(a.begin() + i * deg_, a.begin() + (i + 1) * deg_);
        if (std::all_of(ai.begin(), ai.end(), [](std::uint64_t v) { return v == 0; })) continue;
        for (std::uint32_t j = 0; i + j < s_; ++j) {
            Elem bj(b.begin() + j * deg_, b.begin() + (j + 1) * deg_);
            Elem prod = field_mul(ai, bj);
            for (std::size_t k = 0; k < deg_; ++k) {
                std::size_t pos = (i + j) * deg_ + k;
                c[pos] = (c[pos] + prod[k]) % p_;
            }
        }
    }
    return c;
}

Elem ChainRing::pow(const Elem& a, std::uint64_t e) const {
    Elem r = one();
    Elem base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Elem ChainRing::inverse(const Elem& a) const {
    if (!is_unit(a)) throw InputError("cannot invert a non-unit");
    std::uint64_t units = size_ - size_ / qm_;
    Elem inv = pow(a, units - 1);
    if (!is_zero(sub(mul(a, inv), one()))) throw std::logic_error("unit inverse failed");
    return inv;
}

std::uint32_t ChainRing::valuation(const Elem& a) const {
    check_elem(a);
    if (family_ == RingFamily::GaloisRing) {
        std::uint32_t v = s_;
        for (std::uint64_t c : a) {
            if (c == 0) continue;
            std::uint32_t vc = 0;
            while (c % p_ == 0) c /= p_, ++vc;
            v = std::min(v, vc);
        }
        return v;
    }
    for (std::uint32_t j = 0; j < s_; ++j)
        for (std::size_t k = 0; k < deg_; ++k)
            if (a[j * deg_ + k] != 0) return j;
    return s_;
}

Elem ChainRing::teichmuller(const Elem& a) const {
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i + 1 < s_; ++i) e *= qm_;
    return pow(a, e);
}

std::vector<Elem> ChainRing::teich_digits(const Elem& a) const {
    check_elem(a);
    std::vector<Elem> digits;
    digits.reserve(s_);
    if (family_ == RingFamily::EqualCharacteristic) {
        for (std::uint32_t j = 0; j < s_; ++j) {
            Elem d = zero();
            std::copy(a.begin() + j * deg_, a.begin() + (j + 1) * deg_, d.begin());
            digits.push_back(std::move(d));
        }
        return digits;
    }
    Elem b = a;
    for (std::uint32_t j = 0; j < s_; ++j) {
        Elem g = teichmuller(b);
        digits.push_back(g);
        if (j + 1 == s_) break;
        Elem r = sub(b, g);  // all coefficients divisible by p
        for (auto& c : r) c /= p_;
        b = std::move(r);
    }
    return digits;
}

Elem ChainRing::from_digits(const std::vector<Elem>& digits) const {
    Elem a = zero();
    for (std::uint32_t j = 0; j < digits.size() && j < s_; ++j)
        a = add(a, theta_mul(digits[j], j));
    return a;
}

Elem ChainRing::theta_mul(const Elem& a, std::uint32_t t) const {
    check_elem(a);
    if (t == 0) return a;
    if (t >= s_) return zero();
    if (family_ == RingFamily::GaloisRing) {
        std::uint64_t pt = 1;
        for (std::uint32_t i = 0; i < t; ++i) pt *= p_;
        Elem c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            c[i] = static_cast<std::uint64_t>((static_cast<__uint128_t>(a[i]) * pt) % coeff_mod_);
        return c;
    }
    Elem c = zero();
    for (std::uint32_t j = 0; j + t < s_; ++j)
        std::copy(a.begin() + j * deg_, a.begin() + (j + 1) * deg_, c.begin() + (j + t) * deg_);
    return c;
}

Elem ChainRing::theta_shift_down(const Elem& a, std::uint32_t t) const {
    if (t == 0) return a;
    if (t >= s_) {
        if (!is_zero(a)) throw InputError("theta_shift_down: valuation too small");
        return zero();
    }
    if (valuation(a) < t) throw InputError("theta_shift_down: valuation too small");
    std::vector<Elem> digits = teich_digits(a);
    std::vector<Elem> shifted(digits.begin() + t, digits.end());
    return from_digits(shifted);
}

Elem ChainRing::frobenius(const Elem& a, std::uint32_t k) const {
    k %= m_;
    if (k == 0) return a;
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i < k; ++i) e *= q_;
    std::vector<Elem> digits = teich_digits(a);
    for (auto& g : digits) g = pow(g, e);
    return from_digits(digits);
}

Elem ChainRing::trace(const Elem& a) const {
    Elem t = a;
    Elem cur = a;
    for (std::uint32_t i = 1; i < m_; ++i) {
        cur = frobenius(cur, 1);
        t = add(t, cur);
    }
    return t;
}

bool ChainRing::in_base(const Elem& a) const { return frobenius(a, 1) == a; }

RingPtr ChainRing::residue_field() const { return make(p_, n_, 1, m_, family_); }

Elem ChainRing::residue(const Elem& a) const {
    check_elem(a);
    Elem r(deg_, 0);
    for (std::size_t i = 0; i < deg_; ++i) r[i] = a[i] % p_;
    return r;
}

Elem ChainRing::root_of_unity(std::uint64_t ell) const {
    if (ell == 0) throw InputError("root order must be positive");
    if ((qm_ - 1) % ell != 0)
        throw InputError("no order-" + std::to_string(ell) + " root of unity: " +
                         std::to_string(ell) + " does not divide q^m-1 = " + std::to_string(qm_ - 1));
    return pow(xi_, (qm_ - 1) / ell);
}

std::vector<Elem> ChainRing::teich_set(bool base_only) const {
    std::uint64_t count = base_only ? q_ : qm_;
    std::uint64_t step = base_only ? (qm_ - 1) / (q_ - 1) : 1;
    std::vector<Elem> out;
    out.reserve(count);
    out.push_back(zero());
    Elem g = pow(xi_, step);
    Elem cur = one();
    for (std::uint64_t j = 0; j + 1 < count; ++j) {
        out.push_back(cur);
        cur = mul(cur, g);
    }
    return out;
}

std::vector<Elem> ChainRing::all_elements(std::uint64_t limit) const {
    if (size_ > limit) throw BoundError("ring too large to enumerate");
    std::vector<Elem> out;
    out.reserve(size_);
    for (std::uint64_t idx = 0; idx < size_; ++idx) out.push_back(decode(idx));
    return out;
}

std::vector<Elem> ChainRing::base_elements(std::uint64_t limit) const {
    std::uint64_t total = base_size();
    if (total > limit) throw BoundError("base subring too large to enumerate");
    std::vector<Elem> gamma = teich_set(true);
    std::vector<Elem> out;
    out.reserve(total);
    std::vector<std::size_t> idx(s_, 0);
    while (true) {
        std::vector<Elem> digits;
        digits.reserve(s_);
        for (std::uint32_t j = 0; j < s_; ++j) digits.push_back(gamma[idx[j]]);
        out.push_back(from_digits(digits));
        std::uint32_t pos = 0;
        while (pos < s_ && ++idx[pos] == gamma.size()) idx[pos++] = 0;
        if (pos == s_) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t ChainRing::encode(const Elem& a) const {
    check_elem(a);
    std::uint64_t idx = 0;
    for (std::size_t i = a.size(); i-- > 0;) idx = idx * coeff_mod_ + a[i];
    return idx;
}

Elem ChainRing::decode(std::uint64_t idx) const {
    Elem a = zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = idx % coeff_mod_;
        idx /= coeff_mod_;
    }
    if (idx != 0) throw InputError("element index out of range");
    return a;
}

Elem ChainRing::random_element(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint64_t> dist(0, coeff_mod_ - 1);
    Elem a = zero();
    for (auto& c : a) c = dist(rng);
    return a;
}

nlohmann::json ChainRing::to_json() const {
    return nlohmann::json{{"p", p_},
                          {"n", n_},
                          {"s", s_},
                          {"m", m_},
                          {"family", to_string(family_)},
                          {"modulus", modulus_}};
}

RingPtr ChainRing::from_json(const nlohmann::json& j) {
    RingPtr ring = make(j.at("p").get<std::uint64_t>(), j.at("n").get<std::uint32_t>(),
                        j.at("s").get<std::uint32_t>(), j.at("m").get<std::uint32_t>(),
                        ring_family_from_string(j.at("family").get<std::string>()));
    if (j.contains("modulus") && j.at("modulus").get<std::vector<std::uint64_t>>() != ring->modulus())
        throw InputError("modulus in descriptor is not the canonical modulus");
    return ring;
}

nlohmann::json ChainRing::elem_to_json(const Elem& a) const {
    check_elem(a);
    return nlohmann::json(a);
}

Elem ChainRing::elem_from_json(const nlohmann::json& j) const {
    Elem a;
    try {
        a = j.get<Elem>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed element JSON: ") + e.what());
    }
    check_elem(a);
    for (std::uint64_t c : a)
        if (c >= coeff_mod_) throw InputError("element coefficient out of range");
    return a;
}

}  // namespace chaincodes
