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

#ifndef CHAINCODES_CHAIN_RING_HPP
#define CHAINCODES_CHAIN_RING_HPP

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chaincodes/errors.hpp"

namespace chaincodes {

/// Two realizations of a finite chain ring of invariants (q, s):
///   GaloisRing          — GR(p^s, nm) = Z_{p^s}[x]/(f), θ = p;
///   EqualCharacteristic — F_{q^m}[u]/(u^s), θ = u.
enum class RingFamily { GaloisRing, EqualCharacteristic };

std::string to_string(RingFamily f);
RingFamily ring_family_from_string(const std::string& name);

class ChainRing;
using RingPtr = std::shared_ptr<const ChainRing>;

/// Ring element in canonical reduced coefficient form. For GaloisRing:
/// nm coefficients in [0, p^s). For EqualCharacteristic: s·nm coefficients
/// in [0, p), grouped in s blocks of nm (one field element per power of u).
using Elem = std::vector<std::uint64_t>;

/// The Galois extension S of degree m over a base chain ring R of invariants
/// (q, s), q = p^n, in the single-tower representation: only S is concrete;
/// R is the subring fixed by the relative Frobenius σ: ξ ↦ ξ^q. S itself is
/// a chain ring of invariants (q^m, s).
///
/// All element operations are pure; a ChainRing is immutable and shareable.
class ChainRing {
   public:
    /// Deterministic construction: the modulus is the lexicographically first
    /// monic primitive polynomial over F_p of degree n·m (coefficient vector
    /// read as a base-p integer, constant term least significant), lifted
    /// coefficient-wise for the GaloisRing family.
    ///
    /// Throws InputError for non-prime p and BoundError when |S| = p^{s·n·m}
    /// exceeds 2^bits with bits from CHAINCODES_MAX_RING_BITS (default 30).
    static RingPtr make(std::uint64_t p, std::uint32_t n, std::uint32_t s, std::uint32_t m,
                        RingFamily family = RingFamily::GaloisRing);

    std::uint64_t p() const { return p_; }
    std::uint32_t n() const { return n_; }
    std::uint32_t s() const { return s_; }
    std::uint32_t m() const { return m_; }
    RingFamily family() const { return family_; }
    std::uint64_t q() const { return q_; }    // residue size of the base ring R
    std::uint64_t qm() const { return qm_; }  // residue size of S
    std::uint64_t size() const { return size_; }
    std::uint64_t base_size() const;  // |R| = q^s
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    // -- elements ---------------------------------------------------------
    Elem zero() const;
    Elem one() const;
    Elem theta() const;                      // generator of the maximal ideal
    Elem xi() const { return xi_; }          // generator of Γ(S)*, order q^m − 1
    Elem from_int(std::uint64_t v) const;    // v · 1
    bool is_zero(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, std::uint64_t e) const;
    /// Inverse of a unit; throws InputError on non-units.
    Elem inverse(const Elem& a) const;

    /// θ-valuation in {0, …, s}; s exactly for 0.
    std::uint32_t valuation(const Elem& a) const;
    bool is_unit(const Elem& a) const { return valuation(a) == 0; }

    /// ω(a) = a^{(q^m)^{s−1}}: the unique Teichmüller element ≡ a (mod θ).
    Elem teichmuller(const Elem& a) const;
    /// θ-adic digits (γ_0, …, γ_{s−1}), each in Γ(S); Σ γ_j θ^j = a exactly.
    std::vector<Elem> teich_digits(const Elem& a) const;
    Elem from_digits(const std::vector<Elem>& digits) const;
    /// a · θ^t.
    Elem theta_mul(const Elem& a, std::uint32_t t) const;
    /// The digit shift Σ_j γ_{t+j} θ^j; requires v(a) ≥ t. Exact division by
    /// θ^t that stays in the σ-fixed subring when a does.
    Elem theta_shift_down(const Elem& a, std::uint32_t t) const;

    /// σ^k with σ the relative Frobenius of S over R (acts as γ ↦ γ^q on digits).
    Elem frobenius(const Elem& a, std::uint32_t k = 1) const;
    /// Tr(a) = Σ_{i<m} σ^i(a); lands in R.
    Elem trace(const Elem& a) const;
    /// Membership in R (the σ-fixed subring).
    bool in_base(const Elem& a) const;

    /// The residue field F_{q^m} as a chain ring with s = 1.
    RingPtr residue_field() const;
    /// π(a) as an element of residue_field().
    Elem residue(const Elem& a) const;

    /// η = ξ^{(q^m−1)/ℓ} of multiplicative order exactly ℓ; requires ℓ | q^m−1.
    Elem root_of_unity(std::uint64_t ell) const;

    // -- enumeration, encoding, serialization ------------------------------
    /// Γ(S) (all Teichmüller elements) or Γ(R) = Γ(S) ∩ R, zero first, then
    /// ascending powers of the relevant generator.
    std::vector<Elem> teich_set(bool base_only) const;
    /// Every element of S; throws BoundError when |S| > limit.
    std::vector<Elem> all_elements(std::uint64_t limit = (1ull << 20)) const;
    /// Every element of R = q^s digit combinations.
    std::vector<Elem> base_elements(std::uint64_t limit = (1ull << 20)) const;

    std::uint64_t encode(const Elem& a) const;  // mixed-radix index, < |S|
    Elem decode(std::uint64_t idx) const;
    Elem random_element(std::mt19937_64& rng) const;

    nlohmann::json to_json() const;
    static RingPtr from_json(const nlohmann::json& j);
    nlohmann::json elem_to_json(const Elem& a) const;
    Elem elem_from_json(const nlohmann::json& j) const;

   private:
    ChainRing() = default;
    void check_elem(const Elem& a) const;
    Elem field_mul(const Elem& a, const Elem& b) const;  // EqualCharacteristic block product

    std::uint64_t p_ = 0;
    std::uint32_t n_ = 0, s_ = 0, m_ = 0;
    RingFamily family_ = RingFamily::GaloisRing;
    std::uint32_t deg_ = 0;          // n·m
    std::uint64_t q_ = 0, qm_ = 0;   // p^n, p^{nm}
    std::uint64_t coeff_mod_ = 0;    // p^s (GaloisRing) or p (EqualCharacteristic)
    std::uint64_t size_ = 0;         // p^{s·n·m}
    std::vector<std::uint64_t> modulus_;  // monic, degree nm
    Elem xi_;
};

}  // namespace chaincodes

#endif  // CHAINCODES_CHAIN_RING_HPP
