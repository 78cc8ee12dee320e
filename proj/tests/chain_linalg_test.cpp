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
#include <random>
#include <set>

#include "gtest/gtest.h"

using namespace chaincodes;

namespace {

RingPtr z4() { return ChainRing::make(2, 1, 2, 1); }
RingPtr z8() { return ChainRing::make(2, 1, 3, 1); }

RMatrix from_ints(const RingPtr& ring, std::vector<std::vector<std::uint64_t>> grid,
                  Scalars sc = Scalars::Base) {
    RMatrix m;
    m.ring = ring;
    m.scalars = sc;
    m.cols = grid.empty() ? 0 : grid[0].size();
    for (const auto& row : grid) {
        RowVec r;
        for (std::uint64_t v : row) r.push_back(ring->from_int(v));
        m.rows.push_back(std::move(r));
    }
    return m;
}

// The worked Z8 generator matrix in standard form, type (1,1,1).
RMatrix z8_example() {
    return from_ints(z8(), {{1, 1, 3, 4, 0, 5}, {0, 2, 2, 6, 4, 0}, {0, 0, 4, 0, 4, 4}});
}

// brute-force span by closing over scalar multiples and sums (small cases)
std::set<std::vector<std::uint64_t>> brute_span(const RMatrix& g) {
    const RingPtr& ring = g.ring;
    std::set<std::vector<std::uint64_t>> words;
    std::vector<RowVec> frontier = {row_zero(ring, g.cols)};
    words.insert(encode_row(ring, frontier[0]));
    bool grew = true;
    std::vector<Elem> scalars;
    if (g.scalars == Scalars::Base) {
        scalars = ring->base_elements();
    } else {
        scalars = ring->all_elements();
    }
    while (grew) {
        grew = false;
        std::vector<std::vector<std::uint64_t>> snapshot(words.begin(), words.end());
        for (const auto& enc : snapshot) {
            RowVec w(g.cols);
            for (std::size_t i = 0; i < g.cols; ++i) w[i] = ring->decode(enc[i]);
            for (const RowVec& row : g.rows)
                for (const Elem& c : scalars) {
                    RowVec nxt = row_add(ring, w, row_scale(ring, c, row));
                    if (words.insert(encode_row(ring, nxt)).second) grew = true;
                }
        }
    }
    return words;
}

RMatrix random_matrix(const RingPtr& ring, std::size_t rows, std::size_t cols,
                      std::mt19937_64& rng, Scalars sc = Scalars::Base) {
    RMatrix m;
    m.ring = ring;
    m.scalars = sc;
    m.cols = cols;
    for (std::size_t r = 0; r < rows; ++r) {
        RowVec row(cols);
        for (auto& e : row) {
            e = ring->random_element(rng);
            if (sc == Scalars::Base) {
                // project into the fixed subring by taking a base element
                std::vector<Elem> base = ring->base_elements();
                e = base[rng() % base.size()];
            }
        }
        m.rows.push_back(std::move(row));
    }
    return m;
}

}  // namespace

TEST(StandardFormTest, Z8WorkedExample) {
    StandardForm sf = standard_form(z8_example());
    EXPECT_EQ(sf.type, (std::vector<std::uint64_t>{1, 1, 1}));
    EXPECT_EQ(sf.rank(), 3u);
    EXPECT_EQ(sf.pivot_val, (std::vector<std::uint32_t>{0, 1, 2}));
}

TEST(StandardFormTest, IdentityAndThetaBlocks) {
    RingPtr r = z4();
    StandardForm id = standard_form(RMatrix::identity(r, 4, Scalars::Base));
    EXPECT_EQ(id.type, (std::vector<std::uint64_t>{4, 0}));

    StandardForm tw = standard_form(from_ints(r, {{2, 0}, {0, 2}}));
    EXPECT_EQ(tw.type, (std::vector<std::uint64_t>{0, 2}));

    StandardForm zero = standard_form(from_ints(r, {{0, 0, 0}}));
    EXPECT_EQ(zero.rank(), 0u);
    EXPECT_EQ(zero.type, (std::vector<std::uint64_t>{0, 0}));
}

TEST(StandardFormTest, TypeInvariantUnderRowOperations) {
    std::mt19937_64 rng(31);
    for (RingPtr ring : {z4(), z8()}) {
        std::vector<Elem> base = ring->base_elements();
        for (int trial = 0; trial < 20; ++trial) {
            RMatrix g = random_matrix(ring, 3, 5, rng);
            StandardForm sf = standard_form(g);
            // random invertible row operations: permute, scale by units, add multiples
            RMatrix mixed = g;
            for (int op = 0; op < 10; ++op) {
                std::size_t i = rng() % mixed.rows.size();
                std::size_t j = rng() % mixed.rows.size();
                switch (rng() % 3) {
                    case 0:
                        std::swap(mixed.rows[i], mixed.rows[j]);
                        break;
                    case 1: {
                        Elem u;
                        do {
                            u = base[rng() % base.size()];
                        } while (!ring->is_unit(u));
                        mixed.rows[i] = row_scale(ring, u, mixed.rows[i]);
                        break;
                    }
                    default:
                        if (i != j)
                            mixed.rows[i] = row_add(
                                ring, mixed.rows[i],
                                row_scale(ring, base[rng() % base.size()], mixed.rows[j]));
                }
            }
            StandardForm sf2 = standard_form(mixed);
            EXPECT_EQ(sf.type, sf2.type);
            EXPECT_TRUE(span_equal(sf, sf2));
        }
    }
}

TEST(StandardFormTest, SpanPreserved) {
    std::mt19937_64 rng(37);
    RingPtr ring = z4();
    for (int trial = 0; trial < 10; ++trial) {
        RMatrix g = random_matrix(ring, 3, 4, rng);
        StandardForm sf = standard_form(g);
        std::set<std::vector<std::uint64_t>> direct = brute_span(g);
        std::set<std::vector<std::uint64_t>> reduced = brute_span(sf.mat);
        EXPECT_EQ(direct, reduced);
        // enumerate_span agrees with the brute-force closure
        std::vector<std::vector<std::uint64_t>> enumerated = span_word_set(sf);
        EXPECT_EQ(enumerated.size(), direct.size());
        EXPECT_TRUE(std::equal(enumerated.begin(), enumerated.end(), direct.begin()));
        // cardinality law |C| = q^Σ(s−t)k_t
        EXPECT_EQ(std::to_string(direct.size()),
                  pow_decimal(scalar_q(g), cardinality_exponent(ring->s(), sf.type)));
    }
}

TEST(StandardFormTest, ColumnPermutationRecorded) {
    RingPtr r = z4();
    RMatrix g = from_ints(r, {{0, 2, 1}});
    StandardForm sf = standard_form(g);
    ASSERT_EQ(sf.rank(), 1u);
    EXPECT_EQ(sf.pivot_col[0], 2u);  // unit pivot in column 2
    EXPECT_EQ(sf.col_perm.size(), 3u);
    EXPECT_EQ(sf.col_perm[0], 2u);
    std::vector<std::size_t> sorted = sf.col_perm;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Cardinality, Examples) {
    EXPECT_EQ(pow_decimal(2, cardinality_exponent(2, {1, 3})), "32");   // 2^5
    EXPECT_EQ(pow_decimal(2, cardinality_exponent(2, {0, 0})), "1");
    EXPECT_EQ(pow_decimal(2, cardinality_exponent(2, {7, 0})), "16384");  // 2^14
    EXPECT_EQ(pow_decimal(3, 40), "12157665459056928801");               // exceeds 2^63
}

TEST(DualType, Law) {
    EXPECT_EQ(dual_type({1, 3}, 7), (std::vector<std::uint64_t>{3, 3}));
    EXPECT_EQ(dual_type({7, 0}, 7), (std::vector<std::uint64_t>{0, 0}));
    EXPECT_EQ(dual_type({0, 0}, 7), (std::vector<std::uint64_t>{7, 0}));
    // involution
    std::vector<std::uint64_t> t{2, 1, 1};
    EXPECT_EQ(dual_type(dual_type(t, 6), 6), t);
    EXPECT_THROW(dual_type({5, 3}, 7), InputError);
}

TEST(Kernel, SmallExamples) {
    RingPtr r = z4();
    RMatrix id2 = RMatrix::identity(r, 2, Scalars::Base);
    EXPECT_EQ(standard_form(kernel(id2)).rank(), 0u);

    RMatrix two = from_ints(r, {{2}});
    RMatrix k = kernel(two);
    StandardForm ksf = standard_form(k);
    ASSERT_EQ(ksf.rank(), 1u);
    EXPECT_TRUE(span_member(ksf, {r->from_int(2)}));
    EXPECT_FALSE(span_member(ksf, {r->from_int(1)}));

    RMatrix ones = from_ints(r, {{1, 1}});
    StandardForm kk = standard_form(kernel(ones));
    ASSERT_EQ(kk.rank(), 1u);
    EXPECT_TRUE(span_member(kk, {r->one(), r->from_int(3)}));  // span{(1,3)}
    EXPECT_EQ(kk.type, (std::vector<std::uint64_t>{1, 0}));
}

TEST(Kernel, DualityLawsOnRandomSpans) {
    std::mt19937_64 rng(41);
    RingPtr ring = z4();
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t ell = 3 + rng() % 4;  // lengths 3..6
        RMatrix g = random_matrix(ring, 2 + rng() % 2, ell, rng);
        StandardForm sf = standard_form(g);
        RMatrix k = kernel(g);
        StandardForm ksf = standard_form(k);

        // type of the dual
        EXPECT_EQ(ksf.type, dual_type(sf.type, ell));
        // kernel ∘ kernel recovers the span
        EXPECT_TRUE(span_equal(standard_form(kernel(k)), sf));
        // every kernel word is orthogonal to every generator
        for (const RowVec& a : sf.mat.rows)
            for (const RowVec& b : ksf.mat.rows)
                EXPECT_TRUE(ring->is_zero(inner_product(ring, a, b)));

        // (A+B)^⊥ = A^⊥ ∩ B^⊥ via enumerated word sets
        RMatrix h = random_matrix(ring, 2, ell, rng);
        StandardForm sum_sf = standard_form(RMatrix::stack(g, h));
        auto words_sum_dual = span_word_set(standard_form(kernel(sum_sf.mat)));
        auto wa = span_word_set(standard_form(kernel(g)));
        auto wb = span_word_set(standard_form(kernel(h)));
        std::vector<std::vector<std::uint64_t>> inter;
        std::set_intersection(wa.begin(), wa.end(), wb.begin(), wb.end(),
                              std::back_inserter(inter));
        EXPECT_EQ(words_sum_dual, inter);

        // (A ∩ B)^⊥ = A^⊥ + B^⊥: intersection as enumerated sets, sum by stack
        auto words_a = span_word_set(sf);
        auto words_b = span_word_set(standard_form(h));
        std::vector<std::vector<std::uint64_t>> span_inter;
        std::set_intersection(words_a.begin(), words_a.end(), words_b.begin(), words_b.end(),
                              std::back_inserter(span_inter));
        RMatrix inter_dual_sum = RMatrix::stack(kernel(g), kernel(h));
        auto lhs = span_word_set(standard_form(kernel(inter_dual_sum)));
        EXPECT_EQ(lhs, span_inter);
    }
}

TEST(Annihilator, Z8WorkedExample) {
    StandardForm sf = standard_form(z8_example());
    RMatrix ann = annihilator_matrix(sf);
    ASSERT_EQ(ann.rows.size(), 3u);
    RingPtr r = ann.ring;
    for (const RowVec& row : ann.rows) {
        for (const Elem& e : row) EXPECT_TRUE(r->is_zero(e) || r->valuation(e) == 2u);
        EXPECT_TRUE(row_is_zero(r, row_theta_mul(r, row, 1)));  // killed by θ
        EXPECT_TRUE(span_member(sf, row));                      // inside the code
    }
    // wt(C) = wt(Annih) = 3 for this example
    EXPECT_EQ(min_weight(z8_example()), 3u);
}

TEST(Annihilator, FreeCodeAndZero) {
    RingPtr r = z4();
    RMatrix g = from_ints(r, {{1, 1, 1}});
    StandardForm sf = standard_form(g);
    RMatrix ann = annihilator_matrix(sf);
    ASSERT_EQ(ann.rows.size(), 1u);
    EXPECT_EQ(ann.rows[0], row_theta_mul(r, sf.mat.rows[0], 1));

    StandardForm zero = standard_form(from_ints(r, {{0, 0}}));
    EXPECT_EQ(annihilator_matrix(zero).rows.size(), 0u);
}

TEST(ResidueCode, Examples) {
    RingPtr r = z4();
    RMatrix id = RMatrix::identity(r, 2, Scalars::Base);
    RMatrix res = residue_matrix(id);
    EXPECT_EQ(res.rows.size(), 2u);
    EXPECT_EQ(res.ring->size(), 2u);  // over F_2

    RMatrix twos = from_ints(r, {{2, 2}});
    EXPECT_EQ(residue_matrix(twos).rows.size(), 0u);  // zero code

    RMatrix z8ex = z8_example();
    RMatrix res8 = residue_matrix(z8ex);
    EXPECT_EQ(res8.rows.size(), 1u);  // dim = k_0 = 1
}

TEST(MinWeight, AnnihilatorRouteMatchesFullEnumeration) {
    std::mt19937_64 rng(43);
    RingPtr ring = z4();
    for (int trial = 0; trial < 12; ++trial) {
        RMatrix g = random_matrix(ring, 2 + rng() % 2, 4 + rng() % 3, rng);
        StandardForm sf = standard_form(g);
        if (sf.rank() == 0) continue;
        std::uint64_t via_ann = min_weight(g);
        // direct enumeration of the whole code
        std::uint64_t direct = ~0ull;
        for (const RowVec& w : enumerate_span(sf)) {
            std::uint64_t wt = row_weight(ring, w);
            if (wt > 0) direct = std::min(direct, wt);
        }
        EXPECT_EQ(via_ann, direct);
    }
}

TEST(MinWeight, ConventionsAndBounds) {
    RingPtr r = z4();
    // repetition code of length 7
    RMatrix rep = from_ints(r, {{1, 1, 1, 1, 1, 1, 1}});
    EXPECT_EQ(min_weight(rep), 7u);
    // full space
    EXPECT_EQ(min_weight(RMatrix::identity(r, 7, Scalars::Base)), 1u);
    // zero code reports 0 by convention
    EXPECT_EQ(min_weight(from_ints(r, {{0, 0}})), 0u);
    // bound enforcement
    EXPECT_THROW(min_weight(RMatrix::identity(r, 7, Scalars::Base), 16), BoundError);
}

TEST(RowHelpers, ShiftAndEncode) {
    RingPtr r = z4();
    RowVec v = {r->from_int(1), r->from_int(2), r->from_int(3)};
    RowVec shifted = cyclic_shift(v);
    EXPECT_EQ(shifted[0], r->from_int(3));
    EXPECT_EQ(shifted[1], r->from_int(1));
    EXPECT_EQ(encode_row(r, v), (std::vector<std::uint64_t>{1, 2, 3}));
    EXPECT_EQ(row_weight(r, v), 3u);
}
