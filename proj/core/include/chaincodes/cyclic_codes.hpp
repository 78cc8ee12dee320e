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

#ifndef CHAINCODES_CYCLIC_CODES_HPP
#define CHAINCODES_CYCLIC_CODES_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chaincodes/chain_linalg.hpp"
#include "chaincodes/chain_ring.hpp"
#include "chaincodes/cyclotomic.hpp"

namespace chaincodes {

/// Everything needed to evaluate codes of length ℓ over the base chain ring R
/// of invariants (q, s): the degree-m extension S (m = ord_ℓ(q)), and the
/// order-ℓ root of unity η = ξ^{(q^m−1)/ℓ}.
struct CodeContext {
    RingPtr S;
    CycContext cyc;
    Elem eta;

    static CodeContext make(std::uint64_t p, std::uint32_t n, std::uint32_t s, std::uint64_t ell,
                            RingFamily family = RingFamily::GaloisRing);

    std::uint64_t length() const { return cyc.ell; }
    /// η^e with e reduced mod ℓ.
    Elem eta_pow(std::uint64_t e) const;
};

/// W_A: rows (1, η^a, …, η^{(ℓ−1)a}) for a ∈ A. Generator matrix of the free
/// S-module L_η(S;A) of rank |A|.
RMatrix poly_code_matrix(const CodeContext& ctx, const ResidueSet& a);

/// Reduced generator matrix of the trace code C_η(R;A) = Tr(L_η(S;A)):
/// rows Tr(ξ^i η^{z·j}) for coset representatives z of C_q(A) and i < m,
/// standard-form reduced. Free of rank |C_q(A)| over R.
RMatrix trace_code_matrix(const CodeContext& ctx, const ResidueSet& a);

/// BCH-style bound from the partition alone: δ+1 for the longest interval δ
/// inside complement(∪_{t<s}(−A_t)); 0 for the zero code.
std::uint64_t bch_bound(const CycContext& cyc, const CycPartition& part);

/// A cyclic R-linear code, represented by its defining (q,s)-cyclotomic
/// partition. The generator matrix ⊕_t θ^t·C_η(R;A_t) is materialized lazily;
/// materialization verifies the type law type = (|A_0|,…,|A_{s−1}|).
class CyclicCode {
   public:
    CyclicCode(CodeContext ctx, CycPartition part);

    const CodeContext& context() const { return ctx_; }
    const CycPartition& partition() const { return part_; }

    RMatrix generator_matrix() const;
    const StandardForm& standard() const;

    std::vector<std::uint64_t> type() const;  // from the partition
    std::uint64_t rank() const;
    std::uint64_t cardinality_exp() const;    // |C| = q^exp
    std::uint64_t bch() const { return bch_bound(ctx_.cyc, part_); }
    std::uint64_t min_weight(std::uint64_t max_words = (1ull << 24)) const;

    CyclicCode sum(const CyclicCode& other) const;
    CyclicCode intersect(const CyclicCode& other) const;
    CyclicCode dual() const;

    struct Flags {
        bool self_dual = false;
        bool self_orthogonal = false;
        bool free_code = false;
    };
    /// self_dual: A_t = −A_{s−t}. self_orthogonal: λ(r)+λ(rep(−r)) ≥ s,
    /// cross-checked against pairwise generator inner products.
    Flags flags() const;

    /// Decomposition into irreducibles θ^{t_z}·C_η(R;{z}): pairs (t_z, z)
    /// for representatives with level < s.
    std::vector<std::pair<std::uint32_t, std::uint64_t>> irreducible_components() const;

   private:
    CodeContext ctx_;
    CycPartition part_;
    mutable std::shared_ptr<const StandardForm> sf_;
};

CyclicCode build_code(const CodeContext& ctx, const CycPartition& part);

/// Inverse of build_code: recovers the defining partition of a shift-closed
/// span via the intersection oracle C ∩ C_η(R;{z}) = θ^{t_z}·C_η(R;{z}).
/// Throws NotCyclicError when span(g) is not closed under the cyclic shift.
CycPartition identify_partition(const CodeContext& ctx, const RMatrix& g);

/// Galois machinery on S-linear codes (reduced generator matrices).
struct GaloisOps {
    RMatrix closure;      // Σ_i σ^i(B), over S
    RMatrix trace;        // Tr(B), over R
    RMatrix restriction;  // B ∩ R^ℓ, over R (σ-fixedness constraints)
    RMatrix extension;    // S-span of B's rows
};
GaloisOps galois_ops(const CodeContext& ctx, const RMatrix& b);

/// Ext_S(C): the S-span of an R-code's generating rows (reduced).
RMatrix extension_matrix(const CodeContext& ctx, const RMatrix& base_code);

/// The ψ_z diagnostics of the irreducible-component machinery.
struct PsiCheck {
    std::uint64_t z = 0;
    std::uint64_t coset_size = 0;   // m_z
    std::uint64_t image_rank = 0;
    bool injective = false;         // rank m_z with unit pivots
    bool r_linear = false;
    bool intertwines_shift = false; // ψ_z ∘ (·ζ) = τ_1 ∘ ψ_z, ζ = η^{−z}
};
PsiCheck psi_z_check(const CodeContext& ctx, std::uint64_t z);

/// The even-q MDS/self-orthogonal pair over S itself (R = S, m = 1, ℓ = q−1,
/// d = (ℓ+1)/2, A = {1,…,d−1}): L(A^◇) is MDS of rank d and weight d;
/// L(A) ⊆ L(A)^⊥ = L(A^◇) is the self-orthogonal member.
struct MdsReport {
    std::uint64_t q = 0;
    std::uint32_t s = 0;
    std::uint64_t ell = 0, d = 0;
    ResidueSet a, a_dual;
    std::uint64_t rank = 0;          // of L(A^◇)
    std::uint64_t min_weight = 0;    // of L(A^◇)
    std::uint64_t singleton = 0;     // ℓ − rank + 1
    bool mds = false;
    bool dual_pair_ok = false;       // L(A)^⊥ = L(A^◇) = L(A) ⊕ 1 (kernel oracle)
    bool a_self_orthogonal = false;  // all pairwise inner products of W_A rows vanish
    Elem ones_self_product;          // 1·1ᵀ = ℓ·1, the obstruction for W_{A^◇}
    std::string note;
};
MdsReport mds_family(std::uint64_t p, std::uint32_t n, std::uint32_t s,
                     RingFamily family = RingFamily::GaloisRing,
                     std::uint64_t weight_bound = (1ull << 24));

/// All partitions with A_t = −A_{s−t}; empty when s is odd (the coset of 0 is
/// self-opposite, so level s/2 would be forced). Sorted by partition string.
std::vector<CycPartition> enumerate_self_dual(const CodeContext& ctx,
                                              std::uint64_t max_codes = (1ull << 20));

/// One catalog row.
struct CodeReport {
    std::string label;  // optional display label (golden data)
    std::string partition;
    std::vector<std::uint64_t> type;
    std::uint64_t rank = 0;
    std::uint64_t card_exponent = 0;
    std::string cardinality;  // exact decimal
    std::uint64_t bch = 0;
    std::optional<std::uint64_t> min_weight;
    bool self_dual = false;
    bool self_orthogonal = false;
    bool free_code = false;
};

CodeReport make_report(const CyclicCode& code, bool with_weight = false,
                       std::uint64_t weight_bound = (1ull << 24));

/// One report per (q,s)-cyclotomic partition, sorted by partition string;
/// exactly (s+1)^{|Σ_ℓ(q)|} of them. Throws BoundError past max_codes.
std::vector<CodeReport> enumerate_all(const CodeContext& ctx, std::uint64_t max_codes = 4096,
                                      bool with_weights = false,
                                      std::uint64_t weight_bound = (1ull << 24));

}  // namespace chaincodes

#endif  // CHAINCODES_CYCLIC_CODES_HPP
