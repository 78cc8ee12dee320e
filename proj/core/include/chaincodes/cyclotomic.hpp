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

#ifndef CHAINCODES_CYCLOTOMIC_HPP
#define CHAINCODES_CYCLOTOMIC_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "chaincodes/errors.hpp"

namespace chaincodes {

using Residue = std::uint64_t;

/// A subset of Σ_ℓ = {0, …, ℓ−1}, kept sorted and duplicate-free.
using ResidueSet = std::vector<Residue>;

/// Combinatorial context: length ℓ, residue field size q (a prime power),
/// nilpotency index s, and m = ord_ℓ(q). Requires gcd(ℓ, q) = 1.
struct CycContext {
    std::uint64_t ell = 0;
    std::uint64_t q = 0;
    std::uint32_t s = 0;
    std::uint32_t m = 0;

    static CycContext make(std::uint64_t ell, std::uint64_t q, std::uint32_t s);

    bool operator==(const CycContext&) const = default;
};

// --- sets -------------------------------------------------------------

/// Normalizes an arbitrary list of residues into a ResidueSet; throws on
/// out-of-range members.
ResidueSet make_set(const CycContext& ctx, std::vector<Residue> members);

/// u·A mod ℓ.
ResidueSet multiply_set(const CycContext& ctx, Residue u, const ResidueSet& a);

/// Smallest q-closed superset ∪_i q^i·A. Idempotent and monotone.
ResidueSet q_closure(const CycContext& ctx, const ResidueSet& a);

bool is_q_closed(const CycContext& ctx, const ResidueSet& a);

ResidueSet set_union(const ResidueSet& a, const ResidueSet& b);
ResidueSet set_intersection(const ResidueSet& a, const ResidueSet& b);
ResidueSet set_difference(const ResidueSet& a, const ResidueSet& b);
bool set_contains(const ResidueSet& a, Residue z);

/// −A = {ℓ−z mod ℓ}.
ResidueSet opposite(const CycContext& ctx, const ResidueSet& a);
/// Σ_ℓ \ A.
ResidueSet complement(const CycContext& ctx, const ResidueSet& a);
/// A^◇ = complement(−A); an involution.
ResidueSet set_dual(const CycContext& ctx, const ResidueSet& a);

enum class SetTransform { Opposite, Complement, Dual };
ResidueSet set_transform(const CycContext& ctx, const ResidueSet& a, SetTransform kind);

// --- cosets -----------------------------------------------------------

struct CosetTable {
    std::vector<ResidueSet> cosets;  // sorted by representative
    ResidueSet representatives;      // minimum element of each coset, ascending
};

/// q-cyclotomic cosets modulo ℓ. Pairwise disjoint, covering Σ_ℓ.
CosetTable cosets(const CycContext& ctx);

/// Representative (minimum element) of the coset containing z.
Residue coset_rep(const CycContext& ctx, Residue z);

/// |Σ_ℓ(q)| by the divisor formula Σ_{d|ℓ} φ(d)/ord_d(q). Throws if some
/// term fails to divide evenly (it never does; the check is deliberate).
std::uint64_t coset_count_formula(const CycContext& ctx);

// --- intervals ----------------------------------------------------------

/// The set {u·a, u·(a+1), …, u·(a+δ−1)} mod ℓ with gcd(u, ℓ) = 1.
struct Interval {
    Residue start = 0;       // a
    Residue multiplier = 1;  // u
    std::uint64_t length = 0;

    ResidueSet materialize(const CycContext& ctx) const;
};

/// Interval of maximal length contained in A; scans every unit multiplier
/// and every circular run. Ties break toward the smallest (u, a).
Interval longest_interval(const CycContext& ctx, const ResidueSet& a);

// --- (q,s)-cyclotomic partitions ---------------------------------------

/// A level map λ: Σ_ℓ(q) → {0, …, s}; equivalently the tuple
/// (A_0, …, A_s) with A_t the union of the cosets at level t.
class CycPartition {
   public:
    CycPartition() = default;

    /// Builds from an explicit level map. Keys must be exactly the coset
    /// representatives; missing keys are rejected here (the text format is
    /// where defaulting lives).
    static CycPartition make(const CycContext& ctx, const std::map<Residue, std::uint32_t>& levels);

    /// All representatives at level s: the zero code's partition (∅,…,∅,Σ_ℓ).
    static CycPartition zero(const CycContext& ctx);
    /// All representatives at level 0: the full space (Σ_ℓ,∅,…,∅).
    static CycPartition full(const CycContext& ctx);

    /// Parses "rep=level,rep=level,…". Omitted representatives default to
    /// level s. Duplicates, unknown representatives and levels > s are errors.
    static CycPartition parse(const CycContext& ctx, std::string_view text);

    /// Canonical text form: every representative, ascending, "rep=level".
    /// parse(to_string()) reproduces the partition exactly.
    std::string to_string() const;

    const CycContext& context() const { return ctx_; }
    const ResidueSet& representatives() const { return reps_; }
    std::uint32_t level_of(Residue rep) const;

    /// A_t as a residue set (materialized on demand).
    ResidueSet level_set(std::uint32_t t) const;

    /// λ_⊔ = min(λ, λ'); the defining greedy recursion C_t = (A_t ∪ B_t) \ ∪_{u<t} C_u
    /// assigns each coset to its minimal level, which is exactly this.
    CycPartition join(const CycPartition& other) const;
    /// Dual of the join of the duals.
    CycPartition meet(const CycPartition& other) const;
    /// (−A_s, …, −A_0): λ^⊥(r) = s − λ(rep(−r)). An involution.
    CycPartition dual() const;

    bool operator==(const CycPartition&) const = default;

   private:
    CycContext ctx_;
    ResidueSet reps_;                   // sorted coset representatives
    std::vector<std::uint32_t> levels_; // parallel to reps_
};

/// ψ: A ↦ (A, ∅, …, ∅, complement(A)) for q-closed A.
CycPartition partition_embed(const CycContext& ctx, const ResidueSet& a);
/// φ: Ā ↦ A_0.
ResidueSet partition_project(const CycPartition& p);

}  // namespace chaincodes

#endif  // CHAINCODES_CYCLOTOMIC_HPP
