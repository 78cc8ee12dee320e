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

#include <cstdlib>
#include <random>
#include <set>

#include "chaincodes/arith.hpp"
#include "gtest/gtest.h"

using namespace chaincodes;

namespace {

RingPtr z4() { return ChainRing::make(2, 1, 2, 1); }
RingPtr gr4_3() { return ChainRing::make(2, 1, 2, 3); }  // GR(4,3) over Z4

}  // namespace

TEST(MakeRing, Z4) {
    RingPtr r = z4();
    EXPECT_EQ(r->size(), 4u);
    EXPECT_EQ(r->q(), 2u);
    EXPECT_EQ(r->qm(), 2u);
    // Γ(Z4) = {0, 1}, forced by b² = b
    std::vector<Elem> gamma = r->teich_set(false);
    ASSERT_EQ(gamma.size(), 2u);
    EXPECT_TRUE(r->is_zero(gamma[0]));
    EXPECT_EQ(gamma[1], r->one());
    EXPECT_EQ(r->xi(), r->one());
}

TEST(MakeRing, GR43CanonicalModulus) {
    RingPtr s = gr4_3();
    // canonical primitive cubic over F_2 is x^3 + x + 1, lifted coefficient-wise
    EXPECT_EQ(s->modulus(), (std::vector<std::uint64_t>{1, 1, 0, 1}));
    EXPECT_EQ(s->size(), 64u);
    EXPECT_EQ(s->qm(), 8u);
    // ξ has order 7
    Elem xi = s->xi();
    EXPECT_EQ(s->pow(xi, 7), s->one());
    EXPECT_NE(s->pow(xi, 1), s->one());
    // ξ³ + ξ + 1 vanishes mod 2 (the modulus lifts x³+x+1)
    Elem v = s->add(s->add(s->pow(xi, 3), xi), s->one());
    EXPECT_GE(s->valuation(v), 1u);
}

TEST(MakeRing, FieldCase) {
    RingPtr f8 = ChainRing::make(2, 1, 1, 3);  // F_8 as a degenerate chain ring
    EXPECT_EQ(f8->size(), 8u);
    EXPECT_TRUE(f8->is_zero(f8->theta()));
    EXPECT_EQ(f8->pow(f8->xi(), 7), f8->one());
    std::vector<Elem> gamma = f8->teich_set(false);
    EXPECT_EQ(gamma.size(), 8u);  // whole field
}

TEST(MakeRing, ErrorsAndBounds) {
    EXPECT_THROW(ChainRing::make(4, 1, 2, 1), InputError);  // 4 not prime
    EXPECT_THROW(ChainRing::make(2, 1, 0, 1), InputError);
    EXPECT_THROW(ChainRing::make(2, 1, 31, 1), BoundError);  // 2^31 > 2^30 default
    setenv("CHAINCODES_MAX_RING_BITS", "34", 1);
    EXPECT_NO_THROW(ChainRing::make(2, 1, 31, 1));
    unsetenv("CHAINCODES_MAX_RING_BITS");
    EXPECT_THROW(ChainRing::make(2, 1, 31, 1), BoundError);
}

TEST(Arithmetic, BasicLaws) {
    RingPtr s = gr4_3();
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Elem a = s->random_element(rng);
        Elem b = s->random_element(rng);
        Elem c = s->random_element(rng);
        EXPECT_TRUE(s->is_zero(s->add(a, s->neg(a))));
        EXPECT_EQ(s->mul(a, b), s->mul(b, a));
        EXPECT_EQ(s->mul(a, s->add(b, c)), s->add(s->mul(a, b), s->mul(a, c)));
        EXPECT_EQ(s->mul(s->mul(a, b), c), s->mul(a, s->mul(b, c)));
        EXPECT_EQ(std::min<std::uint32_t>(s->valuation(a) + s->valuation(b), s->s()),
                  s->valuation(s->mul(a, b)));
    }
}

TEST(Arithmetic, Z4Units) {
    RingPtr r = z4();
    Elem three = r->from_int(3);
    EXPECT_EQ(r->mul(three, three), r->one());  // 3 is self-inverse
    EXPECT_EQ(r->inverse(three), three);
    EXPECT_THROW(r->inverse(r->from_int(2)), InputError);
    EXPECT_THROW(r->inverse(r->zero()), InputError);
}

TEST(Teichmuller, Examples) {
    RingPtr r = z4();
    EXPECT_EQ(r->teichmuller(r->one()), r->one());
    EXPECT_EQ(r->teichmuller(r->from_int(3)), r->one());  // 3 ≡ 1 (mod 2)
    EXPECT_TRUE(r->is_zero(r->teichmuller(r->from_int(2))));

    RingPtr s = gr4_3();
    Elem xi = s->xi();
    Elem xi_plus_2 = s->add(xi, s->from_int(2));
    EXPECT_EQ(s->teichmuller(xi_plus_2), xi);  // ω picks the Γ-element mod θ
    std::mt19937_64 rng(11);
    for (int i = 0; i < 30; ++i) {
        Elem a = s->random_element(rng);
        Elem w = s->teichmuller(a);
        EXPECT_EQ(s->pow(w, s->qm()), w);           // in Γ(S)
        EXPECT_EQ(s->teichmuller(w), w);            // idempotent
        EXPECT_GE(s->valuation(s->sub(a, w)), 1u);  // congruent mod θ
    }
}

TEST(TeichDigits, ReconstructionExact) {
    RingPtr r = z4();
    std::vector<Elem> d3 = r->teich_digits(r->from_int(3));
    ASSERT_EQ(d3.size(), 2u);
    EXPECT_EQ(d3[0], r->one());
    EXPECT_EQ(d3[1], r->one());  // 3 = 1 + 2·1
    EXPECT_TRUE(r->is_zero(r->teich_digits(r->zero())[0]));

    RingPtr s = gr4_3();
    Elem two_xi = s->theta_mul(s->xi(), 1);
    std::vector<Elem> d = s->teich_digits(two_xi);
    EXPECT_TRUE(s->is_zero(d[0]));
    EXPECT_EQ(d[1], s->xi());

    for (const Elem& a : s->all_elements()) {
        std::vector<Elem> digits = s->teich_digits(a);
        for (const Elem& g : digits) EXPECT_EQ(s->pow(g, s->qm()), g);
        EXPECT_EQ(s->from_digits(digits), a);
    }
}

TEST(TeichDigits, ShiftDownStaysInBase) {
    RingPtr s = gr4_3();
    for (const Elem& a : s->base_elements()) {
        for (std::uint32_t t = 1; t <= s->valuation(a); ++t) {
            if (t >= s->s()) break;
            Elem down = s->theta_shift_down(a, t);
            EXPECT_TRUE(s->in_base(down));
            EXPECT_EQ(s->theta_mul(down, t), a);
        }
    }
    EXPECT_THROW(s->theta_shift_down(s->one(), 1), InputError);
}

TEST(Frobenius, GeneratorAndOrder) {
    RingPtr s = gr4_3();
    Elem xi = s->xi();
    EXPECT_EQ(s->frobenius(xi, 1), s->mul(xi, xi));  // ξ ↦ ξ^q, q = 2
    EXPECT_EQ(s->frobenius(s->one(), 1), s->one());
    for (const Elem& a : s->all_elements()) {
        EXPECT_EQ(s->frobenius(a, 3), a);  // σ^m = id, m = 3
        EXPECT_EQ(s->frobenius(s->frobenius(a, 1), 2), s->frobenius(a, 3));
    }
    // σ is a ring homomorphism
    std::mt19937_64 rng(13);
    for (int i = 0; i < 30; ++i) {
        Elem a = s->random_element(rng), b = s->random_element(rng);
        EXPECT_EQ(s->frobenius(s->mul(a, b), 1), s->mul(s->frobenius(a, 1), s->frobenius(b, 1)));
        EXPECT_EQ(s->frobenius(s->add(a, b), 1), s->add(s->frobenius(a, 1), s->frobenius(b, 1)));
    }
}

TEST(Frobenius, FixedSubringSize) {
    // #fixed points = q^s for every tested ring
    struct Case {
        std::uint64_t p;
        std::uint32_t n, s, m;
    };
    for (Case c : {Case{2, 1, 2, 3}, Case{2, 1, 2, 2}, Case{3, 1, 2, 2}, Case{2, 2, 2, 2}}) {
        RingPtr s = ChainRing::make(c.p, c.n, c.s, c.m);
        std::uint64_t fixed = 0;
        for (const Elem& a : s->all_elements())
            if (s->in_base(a)) ++fixed;
        EXPECT_EQ(fixed, s->base_size()) << "p=" << c.p << " n=" << c.n;
        EXPECT_EQ(s->base_elements().size(), s->base_size());
        for (const Elem& a : s->base_elements()) EXPECT_TRUE(s->in_base(a));
    }
}

TEST(Trace, ExamplesAndLaws) {
    RingPtr s = gr4_3();
    EXPECT_EQ(s->trace(s->one()), s->from_int(3));  // m copies of 1
    Elem tr_xi = s->trace(s->xi());
    EXPECT_TRUE(s->in_base(tr_xi));
    EXPECT_GE(s->valuation(tr_xi), 1u);  // field trace of a root of x³+x+1 is 0

    std::mt19937_64 rng(17);
    Elem theta = s->theta();
    for (int i = 0; i < 40; ++i) {
        Elem a = s->random_element(rng), b = s->random_element(rng);
        EXPECT_TRUE(s->in_base(s->trace(a)));
        EXPECT_EQ(s->trace(s->add(a, b)), s->add(s->trace(a), s->trace(b)));
        EXPECT_EQ(s->trace(s->frobenius(a, 1)), s->trace(a));
        EXPECT_EQ(s->trace(s->mul(theta, a)), s->mul(theta, s->trace(a)));
    }
}

TEST(Trace, SurjectiveAndNondegenerate) {
    for (RingPtr s : {gr4_3(), ChainRing::make(3, 1, 2, 2)}) {
        std::set<Elem> image;
        for (const Elem& a : s->all_elements()) image.insert(s->trace(a));
        std::set<Elem> base;
        for (const Elem& a : s->base_elements()) base.insert(a);
        EXPECT_EQ(image, base);  // Tr(S) = R

        for (const Elem& b : s->all_elements()) {
            if (s->is_zero(b)) continue;
            bool hit = false;
            for (const Elem& a : s->all_elements())
                if (!s->is_zero(s->trace(s->mul(a, b)))) {
                    hit = true;
                    break;
                }
            EXPECT_TRUE(hit);  // nondegenerate pairing
        }
    }
}

TEST(Residue, Epimorphism) {
    RingPtr r = z4();
    RingPtr f2 = r->residue_field();
    EXPECT_EQ(f2->size(), 2u);
    EXPECT_TRUE(f2->is_zero(r->residue(r->from_int(2))));
    EXPECT_EQ(r->residue(r->from_int(3)), f2->one());

    RingPtr s = gr4_3();
    RingPtr f8 = s->residue_field();
    Elem pi_xi = s->residue(s->xi());
    // image of ξ has order 7 in F_8*
    EXPECT_EQ(f8->pow(pi_xi, 7), f8->one());
    EXPECT_NE(pi_xi, f8->one());
    std::mt19937_64 rng(19);
    for (int i = 0; i < 30; ++i) {
        Elem a = s->random_element(rng), b = s->random_element(rng);
        EXPECT_EQ(s->residue(s->mul(a, b)), f8->mul(s->residue(a), s->residue(b)));
        EXPECT_EQ(s->residue(s->add(a, b)), f8->add(s->residue(a), s->residue(b)));
    }
    EXPECT_TRUE(f8->is_zero(s->residue(s->theta())));  // kernel = θS
}

TEST(RootOfUnity, OrderAndPowerSums) {
    RingPtr s = gr4_3();
    Elem eta = s->root_of_unity(7);
    EXPECT_EQ(eta, s->xi());  // (2³−1)/7 = 1
    EXPECT_EQ(s->pow(eta, 7), s->one());
    EXPECT_NE(s->pow(eta, 1), s->one());
    // Σ_j η^{ij} = 0 for i ≠ 0 (mod 7)
    for (std::uint64_t i = 1; i < 7; ++i) {
        Elem sum = s->zero();
        for (std::uint64_t j = 0; j < 7; ++j) sum = s->add(sum, s->pow(eta, (i * j) % 7));
        EXPECT_TRUE(s->is_zero(sum)) << "i=" << i;
    }
    EXPECT_THROW(s->root_of_unity(5), InputError);  // 5 ∤ 7

    RingPtr f8 = ChainRing::make(2, 1, 1, 3);
    Elem g = f8->root_of_unity(7);
    EXPECT_EQ(f8->pow(g, 7), f8->one());
    EXPECT_NE(g, f8->one());
}

TEST(EqualCharacteristic, SameInvariants) {
    // S = F_4[u]/(u²) over R = F_2[u]/(u²): invariants (2,2), m = 2
    RingPtr s = ChainRing::make(2, 1, 2, 2, RingFamily::EqualCharacteristic);
    EXPECT_EQ(s->size(), 16u);
    EXPECT_EQ(s->qm(), 4u);
    Elem theta = s->theta();
    EXPECT_EQ(s->valuation(theta), 1u);
    EXPECT_TRUE(s->is_zero(s->mul(theta, theta)));  // u² = 0
    EXPECT_EQ(s->pow(s->xi(), 3), s->one());

    std::uint64_t fixed = 0;
    for (const Elem& a : s->all_elements()) {
        EXPECT_EQ(s->frobenius(a, 2), a);
        if (s->in_base(a)) ++fixed;
        EXPECT_EQ(s->from_digits(s->teich_digits(a)), a);
        EXPECT_TRUE(s->in_base(s->trace(a)));
    }
    EXPECT_EQ(fixed, 4u);  // q^s = 2²

    std::set<Elem> image;
    for (const Elem& a : s->all_elements()) image.insert(s->trace(a));
    EXPECT_EQ(image.size(), 4u);  // trace surjective onto R

    Elem eta = s->root_of_unity(3);
    Elem sum = s->zero();
    for (int j = 0; j < 3; ++j) sum = s->add(sum, s->pow(eta, j));
    EXPECT_TRUE(s->is_zero(sum));
}

TEST(Serialization, BitExactRoundTrip) {
    for (RingPtr s : {gr4_3(), ChainRing::make(3, 1, 2, 2),
                      ChainRing::make(2, 1, 2, 2, RingFamily::EqualCharacteristic)}) {
        nlohmann::json j = s->to_json();
        RingPtr back = ChainRing::from_json(j);
        EXPECT_EQ(back->to_json(), j);
        std::mt19937_64 rng(23);
        for (int i = 0; i < 20; ++i) {
            Elem a = s->random_element(rng);
            EXPECT_EQ(s->elem_from_json(s->elem_to_json(a)), a);
        }
    }
    nlohmann::json j = gr4_3()->to_json();
    j["modulus"] = std::vector<std::uint64_t>{1, 0, 1, 1};  // not canonical
    EXPECT_THROW(ChainRing::from_json(j), InputError);
}

TEST(Encoding, RoundTrip) {
    RingPtr s = gr4_3();
    for (std::uint64_t idx = 0; idx < s->size(); ++idx) {
        EXPECT_EQ(s->encode(s->decode(idx)), idx);
    }
    EXPECT_THROW(s->decode(s->size()), InputError);
}
