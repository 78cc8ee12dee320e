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

#include "chaincodes/chain_linalg.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

namespace chaincodes {

namespace {

bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && a->p() == b->p() && a->n() == b->n() && a->s() == b->s() &&
                      a->m() == b->m() && a->family() == b->family());
}

/// Digits ≥ t of b reassembled in place (the part divisible by θ^t).
Elem high_part(const RingPtr& ring, const Elem& b, std::uint32_t t) {
    std::vector<Elem> digits = ring->teich_digits(b);
    for (std::uint32_t j = 0; j < t && j < digits.size(); ++j) digits[j] = ring->zero();
    return ring->from_digits(digits);
}

}  // namespace

RowVec row_zero(const RingPtr& ring, std::size_t cols) { return RowVec(cols, ring->zero()); }

RowVec row_add(const RingPtr& ring, const RowVec& a, const RowVec& b) {
    RowVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = ring->add(a[i], b[i]);
    return c;
}

RowVec row_scale(const RingPtr& ring, const Elem& c, const RowVec& a) {
    RowVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring->mul(c, a[i]);
    return out;
}

RowVec row_theta_mul(const RingPtr& ring, const RowVec& a, std::uint32_t t) {
    RowVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring->theta_mul(a[i], t);
    return out;
}

bool row_is_zero(const RingPtr& ring, const RowVec& a) {
    return std::all_of(a.begin(), a.end(), [&](const Elem& e) { return ring->is_zero(e); });
}

std::uint64_t row_weight(const RingPtr& ring, const RowVec& a) {
    std::uint64_t w = 0;
    for (const Elem& e : a)
        if (!ring->is_zero(e)) ++w;
    return w;
}

Elem inner_product(const RingPtr& ring, const RowVec& a, const RowVec& b) {
    Elem acc = ring->zero();
    for (std::size_t i = 0; i < a.size(); ++i) acc = ring->add(acc, ring->mul(a[i], b[i]));
    return acc;
}

RowVec cyclic_shift(const RowVec& a) {
    if (a.empty()) return a;
    RowVec out(a.size());
    out[0] = a.back();
    std::copy(a.begin(), a.end() - 1, out.begin() + 1);
    return out;
}

std::vector<std::uint64_t> encode_row(const RingPtr& ring, const RowVec& a) {
    std::vector<std::uint64_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring->encode(a[i]);
    return out;
}

RMatrix RMatrix::zero(RingPtr ring, std::size_t rows, std::size_t cols, Scalars sc) {
    RMatrix m;
    m.ring = std::move(ring);
    m.scalars = sc;
    m.cols = cols;
    m.rows.assign(rows, RowVec(cols, m.ring->zero()));
    return m;
}

RMatrix RMatrix::identity(RingPtr ring, std::size_t k, Scalars sc) {
    RMatrix m = zero(std::move(ring), k, k, sc);
    for (std::size_t i = 0; i < k; ++i) m.rows[i][i] = m.ring->one();
    return m;
}

RMatrix RMatrix::stack(const RMatrix& a, const RMatrix& b) {
    if (!same_ring(a.ring, b.ring) || a.scalars != b.scalars || a.cols != b.cols)
        throw InputError("matrix stack: incompatible operands");
    RMatrix m = a;
    m.rows.insert(m.rows.end(), b.rows.begin(), b.rows.end());
    return m;
}

std::uint64_t scalar_q(const RMatrix& g) {
    return g.scalars == Scalars::Base ? g.ring->q() : g.ring->qm();
}

StandardForm standard_form(const RMatrix& g) {
    const RingPtr& ring = g.ring;
    const std::uint32_t s = ring->s();
    std::vector<RowVec> work = g.rows;
    std::vector<bool> row_done(work.size(), false);
    std::vector<bool> col_done(g.cols, false);

    std::vector<std::size_t> order;  // work-row indices in pivot order
    StandardForm sf;
    sf.mat.ring = ring;
    sf.mat.scalars = g.scalars;
    sf.mat.cols = g.cols;
    sf.type.assign(s, 0);

    while (true) {
        std::uint32_t best_val = s;
        std::size_t best_row = 0, best_col = 0;
        bool found = false;
        for (std::size_t j = 0; j < g.cols; ++j) {
            if (col_done[j]) continue;
            for (std::size_t i = 0; i < work.size(); ++i) {
                if (row_done[i]) continue;
                std::uint32_t v = ring->valuation(work[i][j]);
                if (v < best_val) {
                    best_val = v;
                    best_row = i;
                    best_col = j;
                    found = true;
                }
            }
            // a valuation-0 pivot in the smallest eligible column wins outright
            if (found && best_val == 0) break;
        }
        if (!found) break;
        const std::size_t i = best_row, j = best_col;
        const std::uint32_t t = best_val;
        Elem unit = ring->theta_shift_down(work[i][j], t);
        work[i] = row_scale(ring, ring->inverse(unit), work[i]);
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (r == i) continue;
            const Elem& b = work[r][j];
            if (ring->is_zero(b)) continue;
            Elem hi = high_part(ring, b, t);
            if (ring->is_zero(hi)) continue;
            Elem lambda = ring->theta_shift_down(hi, t);
            RowVec scaled = row_scale(ring, lambda, work[i]);
            for (std::size_t c = 0; c < g.cols; ++c) work[r][c] = ring->sub(work[r][c], scaled[c]);
        }
        row_done[i] = true;
        col_done[j] = true;
        order.push_back(i);
        sf.pivot_col.push_back(j);
        sf.pivot_val.push_back(t);
        sf.type[t] += 1;
    }

    for (std::size_t i : order) sf.mat.rows.push_back(std::move(work[i]));
    sf.col_perm = sf.pivot_col;
    for (std::size_t j = 0; j < g.cols; ++j)
        if (std::find(sf.pivot_col.begin(), sf.pivot_col.end(), j) == sf.pivot_col.end())
            sf.col_perm.push_back(j);
    return sf;
}

bool span_member(const StandardForm& sf, const RowVec& w) {
    const RingPtr& ring = sf.mat.ring;
    if (w.size() != sf.mat.cols) throw InputError("span_member: length mismatch");
    RowVec r = w;
    for (std::size_t i = 0; i < sf.rank(); ++i) {
        const Elem& b = r[sf.pivot_col[i]];
        if (ring->is_zero(b)) continue;
        if (ring->valuation(b) < sf.pivot_val[i]) return false;
        Elem lambda = ring->theta_shift_down(b, sf.pivot_val[i]);
        RowVec scaled = row_scale(ring, lambda, sf.mat.rows[i]);
        for (std::size_t c = 0; c < r.size(); ++c) r[c] = ring->sub(r[c], scaled[c]);
    }
    return row_is_zero(ring, r);
}

bool span_subset(const StandardForm& inner, const StandardForm& outer) {
    for (const RowVec& row : inner.mat.rows)
        if (!span_member(outer, row)) return false;
    return true;
}

bool span_equal(const StandardForm& a, const StandardForm& b) {
    return span_subset(a, b) && span_subset(b, a);
}

RMatrix kernel(const RMatrix& g) {
    const RingPtr& ring = g.ring;
    const std::uint32_t s = ring->s();
    const std::size_t L = g.cols;
    std::vector<RowVec> work = g.rows;
    std::vector<RowVec> q(L, RowVec(L, ring->zero()));
    for (std::size_t i = 0; i < L; ++i) q[i][i] = ring->one();

    const std::size_t maxrank = std::min(work.size(), L);
    std::vector<std::uint32_t> diag;
    std::size_t pos = 0;
    while (pos < maxrank) {
        std::uint32_t best_val = s;
        std::size_t best_row = pos, best_col = pos;
        bool found = false;
        for (std::size_t j = pos; j < L && !(found && best_val == 0); ++j)
            for (std::size_t i = pos; i < work.size(); ++i) {
                std::uint32_t v = ring->valuation(work[i][j]);
                if (v < best_val) {
                    best_val = v;
                    best_row = i;
                    best_col = j;
                    found = true;
                    if (v == 0) break;
                }
            }
        if (!found) break;
        std::swap(work[pos], work[best_row]);
        if (best_col != pos) {
            for (auto& row : work) std::swap(row[pos], row[best_col]);
            for (auto& row : q) std::swap(row[pos], row[best_col]);
        }
        const std::uint32_t t = best_val;
        Elem unit = ring->theta_shift_down(work[pos][pos], t);
        work[pos] = row_scale(ring, ring->inverse(unit), work[pos]);
        // clear the column below
        for (std::size_t r = pos + 1; r < work.size(); ++r) {
            const Elem& b = work[r][pos];
            if (ring->is_zero(b)) continue;
            Elem lambda = ring->theta_shift_down(b, t);
            RowVec scaled = row_scale(ring, lambda, work[pos]);
            for (std::size_t c = 0; c < L; ++c) work[r][c] = ring->sub(work[r][c], scaled[c]);
        }
        // clear the row to the right with column operations, mirrored on q
        for (std::size_t c = pos + 1; c < L; ++c) {
            const Elem& b = work[pos][c];
            if (ring->is_zero(b)) continue;
            Elem lambda = ring->theta_shift_down(b, t);
            for (std::size_t r = 0; r < work.size(); ++r)
                work[r][c] = ring->sub(work[r][c], ring->mul(lambda, work[r][pos]));
            for (std::size_t r = 0; r < L; ++r)
                q[r][c] = ring->sub(q[r][c], ring->mul(lambda, q[r][pos]));
        }
        diag.push_back(t);
        ++pos;
    }

    RMatrix ker;
    ker.ring = ring;
    ker.scalars = g.scalars;
    ker.cols = L;
    auto q_column = [&](std::size_t c) {
        RowVec col(L);
        for (std::size_t r = 0; r < L; ++r) col[r] = q[r][c];
        return col;
    };
    for (std::size_t i = 0; i < diag.size(); ++i)
        if (diag[i] > 0) ker.rows.push_back(row_theta_mul(ring, q_column(i), s - diag[i]));
    for (std::size_t c = diag.size(); c < L; ++c) ker.rows.push_back(q_column(c));
    return ker;
}

RMatrix annihilator_matrix(const StandardForm& sf) {
    const RingPtr& ring = sf.mat.ring;
    const std::uint32_t s = ring->s();
    RMatrix out;
    out.ring = ring;
    out.scalars = sf.mat.scalars;
    out.cols = sf.mat.cols;
    for (std::size_t i = 0; i < sf.rank(); ++i) {
        RowVec unitized(sf.mat.cols);
        for (std::size_t c = 0; c < sf.mat.cols; ++c)
            unitized[c] = ring->theta_shift_down(sf.mat.rows[i][c], sf.pivot_val[i]);
        out.rows.push_back(row_theta_mul(ring, unitized, s - 1));
    }
    return out;
}

RMatrix residue_matrix(const RMatrix& g) {
    RingPtr rf = g.ring->residue_field();
    RMatrix pm;
    pm.ring = rf;
    pm.scalars = g.scalars;
    pm.cols = g.cols;
    for (const RowVec& row : g.rows) {
        RowVec r(row.size());
        for (std::size_t c = 0; c < row.size(); ++c) r[c] = g.ring->residue(row[c]);
        pm.rows.push_back(std::move(r));
    }
    return standard_form(pm).mat;
}

std::vector<std::uint64_t> dual_type(const std::vector<std::uint64_t>& type, std::uint64_t ell) {
    std::uint64_t k = 0;
    for (std::uint64_t kt : type) k += kt;
    if (k > ell) throw InputError("rank exceeds length");
    std::vector<std::uint64_t> out;
    out.push_back(ell - k);
    for (std::size_t t = type.size(); t-- > 1;) out.push_back(type[t]);
    return out;
}

std::uint64_t cardinality_exponent(std::uint32_t s, const std::vector<std::uint64_t>& type) {
    std::uint64_t e = 0;
    for (std::size_t t = 0; t < type.size(); ++t) e += (s - t) * type[t];
    return e;
}

std::string pow_decimal(std::uint64_t base, std::uint64_t exp) {
    namespace mp = boost::multiprecision;
    mp::cpp_int r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) r *= base;
    return r.str();
}

namespace {

void weight_dfs(const RingPtr& ring, const std::vector<std::vector<RowVec>>& scaled,
                std::size_t depth, RowVec& word, bool nonzero, std::uint64_t& best) {
    if (depth == scaled.size()) {
        if (nonzero) best = std::min(best, row_weight(ring, word));
        return;
    }
    weight_dfs(ring, scaled, depth + 1, word, nonzero, best);  // coefficient 0
    for (const RowVec& add : scaled[depth]) {
        RowVec next = row_add(ring, word, add);
        weight_dfs(ring, scaled, depth + 1, next, true, best);
    }
}

}  // namespace

std::uint64_t min_weight(const RMatrix& g, std::uint64_t max_words) {
    StandardForm sf = standard_form(g);
    const RingPtr& ring = g.ring;
    const std::size_t k = sf.rank();
    if (k == 0) return 0;  // zero code, by catalog convention
    const std::uint64_t qsc = scalar_q(g);
    std::uint64_t words = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (words > max_words / qsc)
            throw BoundError("min_weight enumeration of " + std::to_string(k) + " rows over q=" +
                             std::to_string(qsc) + " exceeds the configured bound");
        words *= qsc;
    }
    RMatrix ann = annihilator_matrix(sf);
    std::vector<Elem> gamma = ring->teich_set(g.scalars == Scalars::Base);
    std::vector<std::vector<RowVec>> scaled(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t gi = 1; gi < gamma.size(); ++gi)
            scaled[i].push_back(row_scale(ring, gamma[gi], ann.rows[i]));
    std::uint64_t best = ~0ull;
    RowVec word = row_zero(ring, g.cols);
    weight_dfs(ring, scaled, 0, word, false, best);
    return best;
}

namespace {

void span_dfs(const RingPtr& ring, const StandardForm& sf,
              const std::vector<std::vector<Elem>>& coeffs, std::size_t depth, const RowVec& word,
              std::vector<RowVec>& out) {
    if (depth == sf.rank()) {
        out.push_back(word);
        return;
    }
    for (const Elem& c : coeffs[depth]) {
        if (ring->is_zero(c)) {
            span_dfs(ring, sf, coeffs, depth + 1, word, out);
        } else {
            RowVec next = row_add(ring, word, row_scale(ring, c, sf.mat.rows[depth]));
            span_dfs(ring, sf, coeffs, depth + 1, next, out);
        }
    }
}

}  // namespace

std::vector<RowVec> enumerate_span(const StandardForm& sf, std::uint64_t max_words) {
    const RingPtr& ring = sf.mat.ring;
    const std::uint32_t s = ring->s();
    const std::uint64_t qsc = scalar_q(sf.mat);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < sf.rank(); ++i) {
        std::uint32_t digits = s - sf.pivot_val[i];
        for (std::uint32_t d = 0; d < digits; ++d) {
            if (total > max_words / qsc) throw BoundError("span enumeration exceeds the configured bound");
            total *= qsc;
        }
    }
    // per-row coefficient lists: all Σ_{j<s−t_i} γ_j θ^j
    std::vector<Elem> gamma = ring->teich_set(sf.mat.scalars == Scalars::Base);
    std::vector<std::vector<Elem>> coeffs(sf.rank());
    for (std::size_t i = 0; i < sf.rank(); ++i) {
        std::uint32_t digits = s - sf.pivot_val[i];
        std::vector<std::size_t> idx(digits, 0);
        while (true) {
            std::vector<Elem> ds;
            for (std::uint32_t d = 0; d < digits; ++d) ds.push_back(gamma[idx[d]]);
            coeffs[i].push_back(ring->from_digits(ds));
            std::uint32_t posn = 0;
            while (posn < digits && ++idx[posn] == gamma.size()) idx[posn++] = 0;
            if (posn == digits) break;
        }
    }
    std::vector<RowVec> out;
    out.reserve(total);
    RowVec word = row_zero(ring, sf.mat.cols);
    span_dfs(ring, sf, coeffs, 0, word, out);
    return out;
}

std::vector<std::vector<std::uint64_t>> span_word_set(const StandardForm& sf, std::uint64_t max_words) {
    std::vector<std::vector<std::uint64_t>> out;
    for (const RowVec& w : enumerate_span(sf, max_words)) out.push_back(encode_row(sf.mat.ring, w));
    std::sort(out.begin(), out.end());
    return out;
}

nlohmann::json matrix_to_json(const RMatrix& g) {
    nlohmann::json rows = nlohmann::json::array();
    for (const RowVec& row : g.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const Elem& e : row) r.push_back(g.ring->elem_to_json(e));
        rows.push_back(std::move(r));
    }
    return rows;
}

RMatrix matrix_from_json(RingPtr ring, const nlohmann::json& j, Scalars sc) {
    if (!j.is_array()) throw InputError("matrix JSON must be an array of rows");
    RMatrix g;
    g.ring = std::move(ring);
    g.scalars = sc;
    for (const auto& jrow : j) {
        RowVec row;
        for (const auto& je : jrow) row.push_back(g.ring->elem_from_json(je));
        if (!g.rows.empty() && row.size() != g.cols) throw InputError("ragged matrix JSON");
        g.cols = row.size();
        g.rows.push_back(std::move(row));
    }
    return g;
}

nlohmann::ordered_json standard_form_report(const StandardForm& sf) {
    nlohmann::ordered_json j;
    j["type"] = sf.type;
    j["rank"] = sf.rank();
    j["pivot_cols"] = sf.pivot_col;
    j["pivot_vals"] = sf.pivot_val;
    j["col_perm"] = sf.col_perm;
    return j;
}

}  // namespace chaincodes
