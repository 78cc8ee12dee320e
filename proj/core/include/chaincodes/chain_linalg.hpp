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

#ifndef CHAINCODES_CHAIN_LINALG_HPP
#define CHAINCODES_CHAIN_LINALG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "chaincodes/chain_ring.hpp"

namespace chaincodes {

/// Which ring the row span is taken over, in the single-tower representation:
/// Base = the σ-fixed subring R (entries must lie in R), Extension = all of S.
enum class Scalars { Base, Extension };

using RowVec = std::vector<Elem>;

struct RMatrix {
    RingPtr ring;
    Scalars scalars = Scalars::Extension;
    std::size_t cols = 0;
    std::vector<RowVec> rows;

    std::size_t row_count() const { return rows.size(); }
    static RMatrix zero(RingPtr ring, std::size_t rows, std::size_t cols, Scalars sc);
    static RMatrix identity(RingPtr ring, std::size_t k, Scalars sc);
    /// Stacks two matrices over the same ring/scalars.
    static RMatrix stack(const RMatrix& a, const RMatrix& b);
};

/// Residue size of the scalar ring (q for Base, q^m for Extension).
std::uint64_t scalar_q(const RMatrix& g);

/// Row-reduced presentation with pivots of minimal θ-valuation (ties to the
/// smallest column, then row). Row i has pivot θ^{t_i} at pivot_col[i], the
/// column is zero below and reduced mod θ^{t_i} above; pivot valuations are
/// non-decreasing. `type[t]` counts pivots of valuation t < s.
struct StandardForm {
    RMatrix mat;
    std::vector<std::size_t> pivot_col;
    std::vector<std::uint32_t> pivot_val;
    std::vector<std::size_t> col_perm;  // standard-position k ↦ original column
    std::vector<std::uint64_t> type;    // size s
    std::size_t rank() const { return pivot_col.size(); }
};

StandardForm standard_form(const RMatrix& g);

/// Greedy reduction of w against the standard form; true iff w ∈ row span.
bool span_member(const StandardForm& sf, const RowVec& w);
bool span_subset(const StandardForm& inner, const StandardForm& outer);
bool span_equal(const StandardForm& a, const StandardForm& b);

/// Generator matrix of {x : G·xᵀ = 0} over the matrix's scalar ring, by
/// Smith-style diagonalization with recorded column operations. Serves as the
/// independent dual oracle throughout.
RMatrix kernel(const RMatrix& g);

/// Generator matrix of Annih_C(θ) = {c ∈ C : θc = 0}: the θ^{s−1}-scaled
/// unit-normalized pivot rows. Rank equals the rank of C.
RMatrix annihilator_matrix(const StandardForm& sf);

/// π applied entrywise, then row-reduced over the residue field. The result
/// lives over ring->residue_field(); its rank is k_0.
RMatrix residue_matrix(const RMatrix& g);

/// Type of the dual code: (ℓ−k, k_{s−1}, …, k_1).
std::vector<std::uint64_t> dual_type(const std::vector<std::uint64_t>& type, std::uint64_t ell);

/// Σ_t (s−t)·k_t, so that |C| = q_scalars^exponent.
std::uint64_t cardinality_exponent(std::uint32_t s, const std::vector<std::uint64_t>& type);
/// Exact decimal string for q^e.
std::string pow_decimal(std::uint64_t base, std::uint64_t exp);

/// Minimum Hamming weight via annihilator enumeration (q^rank words); exact
/// for the whole code. Zero code reports 0. Throws BoundError past max_words.
std::uint64_t min_weight(const RMatrix& g, std::uint64_t max_words = (1ull << 24));

/// All codewords of the span (cardinality-many, no duplicates).
std::vector<RowVec> enumerate_span(const StandardForm& sf, std::uint64_t max_words = (1ull << 24));

/// Sorted encoded codeword set, for exact set comparisons between spans.
std::vector<std::vector<std::uint64_t>> span_word_set(const StandardForm& sf,
                                                      std::uint64_t max_words = (1ull << 24));

/// JSON: a matrix is an array of rows, each row an array of element
/// coefficient arrays. Round-trips are bit-exact.
nlohmann::json matrix_to_json(const RMatrix& g);
RMatrix matrix_from_json(RingPtr ring, const nlohmann::json& j, Scalars sc = Scalars::Extension);

/// Standard-form report: {type, rank, pivot_cols, pivot_vals, col_perm}
/// with the permutation as a 0-indexed array.
nlohmann::ordered_json standard_form_report(const StandardForm& sf);

// Row/vector helpers shared by the code layers.
RowVec row_zero(const RingPtr& ring, std::size_t cols);
RowVec row_add(const RingPtr& ring, const RowVec& a, const RowVec& b);
RowVec row_scale(const RingPtr& ring, const Elem& c, const RowVec& a);
RowVec row_theta_mul(const RingPtr& ring, const RowVec& a, std::uint32_t t);
bool row_is_zero(const RingPtr& ring, const RowVec& a);
std::uint64_t row_weight(const RingPtr& ring, const RowVec& a);
Elem inner_product(const RingPtr& ring, const RowVec& a, const RowVec& b);
/// Cyclic shift (c_0, …, c_{ℓ−1}) ↦ (c_{ℓ−1}, c_0, …, c_{ℓ−2}).
RowVec cyclic_shift(const RowVec& a);
std::vector<std::uint64_t> encode_row(const RingPtr& ring, const RowVec& a);

}  // namespace chaincodes

#endif  // CHAINCODES_CHAIN_LINALG_HPP
