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

#include "chaincodes/cyclic_codes.hpp"

#include <algorithm>
#include <thread>

#include "chaincodes/arith.hpp"

namespace chaincodes {

CodeContext CodeContext::make(std::uint64_t p, std::uint32_t n, std::uint32_t s, std::uint64_t ell,
                              RingFamily family) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < n; ++i) q *= p;
    CodeContext ctx;
    ctx.cyc = CycContext::make(ell, q, s);
    ctx.S = ChainRing::make(p, n, s, ctx.cyc.m, family);
    ctx.eta = ctx.S->root_of_unity(ell);
    return ctx;
}

Elem CodeContext::eta_pow(std::uint64_t e) const { return S->pow(eta, e % cyc.ell); }

RMatrix poly_code_matrix(const CodeContext& ctx, const ResidueSet& a) {
    ResidueSet set = make_set(ctx.cyc, a);
    const std::uint64_t ell = ctx.cyc.ell;
    RMatrix w;
    w.ring = ctx.S;
    w.scalars = Scalars::Extension;
    w.cols = ell;
    for (Residue z : set) {
        RowVec row(ell);
        Elem step = ctx.eta_pow(z);
        Elem cur = ctx.S->one();
        for (std::uint64_t j = 0; j < ell; ++j) {
            row[j] = cur;
            cur = ctx.S->mul(cur, step);
        }
        w.rows.push_back(std::move(row));
    }
    return w;
}

RMatrix trace_code_matrix(const CodeContext& ctx, const ResidueSet& a) {
    const RingPtr& S = ctx.S;
    const std::uint64_t ell = ctx.cyc.ell;
    ResidueSet closed = q_closure(ctx.cyc, a);
    RMatrix gen;
    gen.ring = S;
    gen.scalars = Scalars::Base;
    gen.cols = ell;
    for (Residue z : closed) {
        if (coset_rep(ctx.cyc, z) != z) continue;  // orbit rows are redundant
        Elem step = ctx.eta_pow(z);
        for (std::uint32_t i = 0; i < ctx.cyc.m; ++i) {
            Elem b = S->pow(S->xi(), i);
            RowVec row(ell);
            Elem cur = b;
            for (std::uint64_t j = 0; j < ell; ++j) {
                row[j] = S->trace(cur);
                cur = S->mul(cur, step);
            }
            gen.rows.push_back(std::move(row));
        }
    }
    StandardForm sf = standard_form(gen);
    if (sf.rank() != closed.size())
        throw std::logic_error("trace code rank " + std::to_string(sf.rank()) +
                               " differs from |C_q(A)| = " + std::to_string(closed.size()));
    return sf.mat;
}

std::uint64_t bch_bound(const CycContext& cyc, const CycPartition& part) {
    bool zero_code = true;
    ResidueSet neg_union;
    for (std::uint32_t t = 0; t < cyc.s; ++t) {
        ResidueSet at = part.level_set(t);
        if (!at.empty()) zero_code = false;
        neg_union = set_union(neg_union, opposite(cyc, at));
    }
    if (zero_code) return 0;
    ResidueSet d = complement(cyc, neg_union);
    return longest_interval(cyc, d).length + 1;
}

CyclicCode::CyclicCode(CodeContext ctx, CycPartition part)
    : ctx_(std::move(ctx)), part_(std::move(part)) {
    if (part_.context() != ctx_.cyc) throw InputError("partition does not match the code context");
}

CyclicCode build_code(const CodeContext& ctx, const CycPartition& part) {
    return CyclicCode(ctx, part);
}

RMatrix CyclicCode::generator_matrix() const {
    RMatrix gen;
    gen.ring = ctx_.S;
    gen.scalars = Scalars::Base;
    gen.cols = ctx_.cyc.ell;
    for (std::uint32_t t = 0; t < ctx_.cyc.s; ++t) {
        ResidueSet at = part_.level_set(t);
        if (at.empty()) continue;
        RMatrix comp = trace_code_matrix(ctx_, at);
        for (const RowVec& row : comp.rows)
            gen.rows.push_back(row_theta_mul(ctx_.S, row, t));
    }
    return gen;
}

const StandardForm& CyclicCode::standard() const {
    if (!sf_) {
        auto sf = std::make_shared<StandardForm>(standard_form(generator_matrix()));
        if (sf->type != type())
            throw std::logic_error("standard-form type disagrees with the partition type law");
        sf_ = std::move(sf);
    }
    return *sf_;
}

std::vector<std::uint64_t> CyclicCode::type() const {
    std::vector<std::uint64_t> t(ctx_.cyc.s, 0);
    for (std::uint32_t lev = 0; lev < ctx_.cyc.s; ++lev) t[lev] = part_.level_set(lev).size();
    return t;
}

std::uint64_t CyclicCode::rank() const {
    std::uint64_t k = 0;
    for (std::uint64_t kt : type()) k += kt;
    return k;
}

std::uint64_t CyclicCode::cardinality_exp() const {
    return cardinality_exponent(ctx_.cyc.s, type());
}

std::uint64_t CyclicCode::min_weight(std::uint64_t max_words) const {
    if (rank() == 0) return 0;
    return chaincodes::min_weight(standard().mat, max_words);
}

CyclicCode CyclicCode::sum(const CyclicCode& other) const {
    return CyclicCode(ctx_, part_.join(other.part_));
}

CyclicCode CyclicCode::intersect(const CyclicCode& other) const {
    return CyclicCode(ctx_, part_.meet(other.part_));
}

CyclicCode CyclicCode::dual() const { return CyclicCode(ctx_, part_.dual()); }

CyclicCode::Flags CyclicCode::flags() const {
    Flags f;
    f.self_dual = part_ == part_.dual();
    f.self_orthogonal = part_.meet(part_.dual()) == part_;
    f.free_code = true;
    for (std::uint32_t t = 1; t < ctx_.cyc.s; ++t)
        if (!part_.level_set(t).empty()) f.free_code = false;
    // cross-check self-orthogonality on the materialized generators
    const StandardForm& sf = standard();
    bool products_vanish = true;
    for (std::size_t i = 0; i < sf.rank() && products_vanish; ++i)
        for (std::size_t j = i; j < sf.rank(); ++j)
            if (!ctx_.S->is_zero(inner_product(ctx_.S, sf.mat.rows[i], sf.mat.rows[j]))) {
                products_vanish = false;
                break;
            }
    if (products_vanish != f.self_orthogonal)
        throw std::logic_error("partition-level self-orthogonality disagrees with inner products");
    return f;
}

std::vector<std::pair<std::uint32_t, std::uint64_t>> CyclicCode::irreducible_components() const {
    std::vector<std::pair<std::uint32_t, std::uint64_t>> out;
    for (Residue rep : part_.representatives()) {
        std::uint32_t t = part_.level_of(rep);
        if (t < ctx_.cyc.s) out.emplace_back(t, rep);
    }
    return out;
}

CycPartition identify_partition(const CodeContext& ctx, const RMatrix& g) {
    if (g.cols != ctx.cyc.ell) throw InputError("matrix length does not match the context");
    if (g.scalars != Scalars::Base)
        throw InputError("identify_partition expects a code over the base ring R");
    StandardForm sf = standard_form(g);
    for (const RowVec& row : sf.mat.rows)
        if (!span_member(sf, cyclic_shift(row)))
            throw NotCyclicError("span is not closed under the cyclic shift");

    RMatrix g_dual = kernel(sf.mat);
    std::map<Residue, std::uint32_t> levels;
    for (Residue rep : cosets(ctx.cyc).representatives) {
        RMatrix mz = trace_code_matrix(ctx, {rep});
        RMatrix mz_dual = kernel(mz);
        RMatrix inter = kernel(RMatrix::stack(g_dual, mz_dual));  // C ∩ C_η(R;{z})
        StandardForm isf = standard_form(inter);
        if (isf.rank() == 0) {
            levels[rep] = ctx.cyc.s;
            continue;
        }
        std::uint32_t t = isf.pivot_val[0];
        for (std::uint32_t v : isf.pivot_val)
            if (v != t) throw std::logic_error("component intersection is not θ^t-homogeneous");
        levels[rep] = t;
    }
    CycPartition part = CycPartition::make(ctx.cyc, levels);
    if (!span_equal(CyclicCode(ctx, part).standard(), sf))
        throw std::logic_error("identified partition does not rebuild the input span");
    return part;
}

namespace {

RMatrix frobenius_matrix(const CodeContext& ctx, const RMatrix& b, std::uint32_t k) {
    RMatrix out = b;
    for (auto& row : out.rows)
        for (auto& e : row) e = ctx.S->frobenius(e, k);
    return out;
}

// ---- flattening over the prime-parameter chain ring B0 ------------------
// S^ℓ, viewed coefficient-wise in the x-power basis, is a free module of
// rank ℓ·E over B0 (Z_{p^s} resp. F_p[u]/(u^s)). σ−1 is a B0-linear map;
// the restriction B ∩ R^ℓ is the intersection of the flattened span with
// ker(σ−1), both computed through the kernel oracle.
struct Flattener {
    RingPtr S;
    RingPtr B0;
    std::uint32_t E;  // n·m
    std::uint32_t s;

    explicit Flattener(const RingPtr& ring)
        : S(ring),
          B0(ChainRing::make(ring->p(), 1, ring->s(), 1, ring->family())),
          E(ring->n() * ring->m()),
          s(ring->s()) {}

    std::vector<Elem> flatten_elem(const Elem& a) const {
        std::vector<Elem> out;
        out.reserve(E);
        if (S->family() == RingFamily::GaloisRing) {
            for (std::uint32_t i = 0; i < E; ++i) {
                Elem c = B0->zero();
                c[0] = a[i];
                out.push_back(std::move(c));
            }
        } else {
            for (std::uint32_t i = 0; i < E; ++i) {
                Elem c = B0->zero();  // s blocks of one coefficient
                for (std::uint32_t j = 0; j < s; ++j) c[j] = a[j * E + i];
                out.push_back(std::move(c));
            }
        }
        return out;
    }

    Elem unflatten_elem(const std::vector<Elem>& flat, std::size_t offset) const {
        Elem a = S->zero();
        if (S->family() == RingFamily::GaloisRing) {
            for (std::uint32_t i = 0; i < E; ++i) a[i] = flat[offset + i][0];
        } else {
            for (std::uint32_t i = 0; i < E; ++i)
                for (std::uint32_t j = 0; j < s; ++j) a[j * E + i] = flat[offset + i][j];
        }
        return a;
    }

    RowVec flatten_row(const RowVec& row) const {
        RowVec out;
        out.reserve(row.size() * E);
        for (const Elem& e : row)
            for (Elem& c : flatten_elem(e)) out.push_back(std::move(c));
        return out;
    }

    RowVec unflatten_row(const RowVec& flat, std::size_t ell) const {
        RowVec out(ell);
        for (std::size_t pos = 0; pos < ell; ++pos) {
            std::vector<Elem> slice(flat.begin() + pos * E, flat.begin() + (pos + 1) * E);
            out[pos] = unflatten_elem(slice, 0);
        }
        return out;
    }
};

}  // namespace

GaloisOps galois_ops(const CodeContext& ctx, const RMatrix& b) {
    if (b.scalars != Scalars::Extension) throw InputError("galois_ops expects an S-linear code");
    const RingPtr& S = ctx.S;
    const std::uint32_t m = ctx.cyc.m;
    GaloisOps ops;

    RMatrix closure_stack = b;
    for (std::uint32_t i = 1; i < m; ++i)
        closure_stack = RMatrix::stack(closure_stack, frobenius_matrix(ctx, b, i));
    ops.closure = standard_form(closure_stack).mat;

    RMatrix tr;
    tr.ring = S;
    tr.scalars = Scalars::Base;
    tr.cols = b.cols;
    for (const RowVec& row : b.rows)
        for (std::uint32_t i = 0; i < m; ++i) {
            Elem xi_i = S->pow(S->xi(), i);
            RowVec traced(row.size());
            for (std::size_t c = 0; c < row.size(); ++c) traced[c] = S->trace(S->mul(xi_i, row[c]));
            tr.rows.push_back(std::move(traced));
        }
    ops.trace = standard_form(tr).mat;

    // restriction: flatten, intersect with ker(σ−1)
    Flattener fl(S);
    const std::size_t ell = b.cols;
    const std::size_t dim = ell * fl.E;

    RMatrix flat_b;
    flat_b.ring = fl.B0;
    flat_b.scalars = Scalars::Extension;
    flat_b.cols = dim;
    for (const RowVec& row : b.rows) {
        for (std::uint32_t i = 0; i < fl.E; ++i) {
            Elem xi_i = S->pow(S->xi(), i);
            RowVec scaled = row_scale(S, xi_i, row);
            flat_b.rows.push_back(fl.flatten_row(scaled));
        }
    }

    RMatrix sigma_m = RMatrix::zero(fl.B0, dim, dim, Scalars::Extension);
    for (std::size_t pos = 0; pos < ell; ++pos)
        for (std::uint32_t i = 0; i < fl.E; ++i) {
            Elem basis = S->zero();
            basis[i] = 1;  // x^i (block 0 for equal characteristic)
            Elem image = S->sub(S->frobenius(basis, 1), basis);
            std::vector<Elem> flat = fl.flatten_elem(image);
            for (std::uint32_t r = 0; r < fl.E; ++r)
                sigma_m.rows[pos * fl.E + r][pos * fl.E + i] = flat[r];
        }

    RMatrix fixed = kernel(sigma_m);  // flatten(R^ℓ)
    RMatrix inter = kernel(RMatrix::stack(kernel(flat_b), kernel(fixed)));
    RMatrix res;
    res.ring = S;
    res.scalars = Scalars::Base;
    res.cols = ell;
    for (const RowVec& frow : inter.rows) {
        RowVec row = fl.unflatten_row(frow, ell);
        for (const Elem& e : row)
            if (!S->in_base(e)) throw std::logic_error("restriction row left the fixed subring");
        res.rows.push_back(std::move(row));
    }
    ops.restriction = standard_form(res).mat;

    RMatrix ext = b;
    ext.scalars = Scalars::Extension;
    ops.extension = standard_form(ext).mat;
    return ops;
}

RMatrix extension_matrix(const CodeContext& ctx, const RMatrix& base_code) {
    if (base_code.cols != ctx.cyc.ell) throw InputError("matrix length does not match the context");
    RMatrix ext = base_code;
    ext.scalars = Scalars::Extension;
    return standard_form(ext).mat;
}

PsiCheck psi_z_check(const CodeContext& ctx, std::uint64_t z) {
    const RingPtr& S = ctx.S;
    const std::uint64_t ell = ctx.cyc.ell;
    PsiCheck out;
    out.z = z % ell;
    out.coset_size = q_closure(ctx.cyc, {out.z}).size();

    Elem eta_z = ctx.eta_pow(out.z);
    auto psi = [&](const Elem& a) {
        RowVec row(ell);
        Elem cur = a;
        for (std::uint64_t j = 0; j < ell; ++j) {
            row[j] = S->trace(cur);
            cur = S->mul(cur, eta_z);
        }
        return row;
    };

    // basis of R[η^z]: powers (η^z)^i, i < m_z
    std::vector<Elem> basis;
    Elem cur = S->one();
    for (std::uint64_t i = 0; i < out.coset_size; ++i) {
        basis.push_back(cur);
        cur = S->mul(cur, eta_z);
    }

    RMatrix image;
    image.ring = S;
    image.scalars = Scalars::Base;
    image.cols = ell;
    for (const Elem& a : basis) image.rows.push_back(psi(a));
    StandardForm sf = standard_form(image);
    out.image_rank = sf.rank();
    out.injective = sf.rank() == out.coset_size &&
                    std::all_of(sf.pivot_val.begin(), sf.pivot_val.end(),
                                [](std::uint32_t v) { return v == 0; });

    // R-linearity: ψ(θa + b) = θψ(a) + ψ(b) on basis pairs
    out.r_linear = true;
    Elem theta = S->theta();
    for (std::size_t i = 0; i < basis.size() && out.r_linear; ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Elem combo = S->add(S->mul(theta, basis[i]), basis[j]);
            RowVec lhs = psi(combo);
            RowVec rhs = row_add(S, row_theta_mul(S, psi(basis[i]), 1), psi(basis[j]));
            if (encode_row(S, lhs) != encode_row(S, rhs)) {
                out.r_linear = false;
                break;
            }
        }

    // ψ_z(a·ζ) = τ_1(ψ_z(a)) with ζ = η^{−z}
    Elem zeta = ctx.eta_pow(out.z == 0 ? 0 : ell - out.z);
    out.intertwines_shift = true;
    for (const Elem& a : basis) {
        RowVec lhs = psi(S->mul(a, zeta));
        RowVec rhs = cyclic_shift(psi(a));
        if (encode_row(S, lhs) != encode_row(S, rhs)) {
            out.intertwines_shift = false;
            break;
        }
    }
    return out;
}

MdsReport mds_family(std::uint64_t p, std::uint32_t n, std::uint32_t s, RingFamily family,
                     std::uint64_t weight_bound) {
    if (p != 2) throw InputError("the MDS family requires even q = 2^n");
    MdsReport rep;
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < n; ++i) q *= p;
    rep.q = q;
    rep.s = s;
    rep.ell = q - 1;
    if (rep.ell < 1) throw InputError("q must be at least 4 for a nonempty family");
    rep.d = (rep.ell + 1) / 2;

    CodeContext ctx = CodeContext::make(p, n, s, rep.ell, family);  // m = 1: R = S
    for (std::uint64_t z = 1; z < rep.d; ++z) rep.a.push_back(z);
    rep.a_dual = set_dual(ctx.cyc, rep.a);
    ResidueSet expected = set_union(rep.a, ResidueSet{0});
    if (rep.a_dual != expected) throw std::logic_error("A^dual != A ∪ {0}");

    RMatrix wa = poly_code_matrix(ctx, rep.a);
    RMatrix wad = poly_code_matrix(ctx, rep.a_dual);
    StandardForm sf_ad = standard_form(wad);
    rep.rank = sf_ad.rank();
    rep.singleton = rep.ell - rep.rank + 1;
    rep.min_weight = min_weight(wad, weight_bound);
    rep.mds = rep.min_weight == rep.singleton;

    // L(A)^⊥ = L(A^◇) by the kernel oracle, and L(A^◇) = L(A) ⊕ 1
    StandardForm sf_ker = standard_form(kernel(wa));
    RMatrix ones;
    ones.ring = ctx.S;
    ones.scalars = Scalars::Extension;
    ones.cols = rep.ell;
    ones.rows.push_back(RowVec(rep.ell, ctx.S->one()));
    StandardForm sf_sum = standard_form(RMatrix::stack(wa, ones));
    rep.dual_pair_ok = span_equal(sf_ker, sf_ad) && span_equal(sf_sum, sf_ad) &&
                       standard_form(wa).rank() + 1 == rep.rank;

    rep.a_self_orthogonal = true;
    for (std::size_t i = 0; i < wa.rows.size(); ++i)
        for (std::size_t j = i; j < wa.rows.size(); ++j)
            if (!ctx.S->is_zero(inner_product(ctx.S, wa.rows[i], wa.rows[j])))
                rep.a_self_orthogonal = false;
    rep.ones_self_product = inner_product(ctx.S, ones.rows[0], ones.rows[0]);
    rep.note =
        "length = q^m - 1 = |Γ(S)*| (largest admissible: an order-L root of unity needs L | q^m-1); "
        "L(A_dual) carries the MDS parameters, L(A) ⊆ L(A)^⊥ = L(A_dual) is the self-orthogonal "
        "member (the all-ones generator has self product L·1 ≠ 0).";
    return rep;
}

std::vector<CycPartition> enumerate_self_dual(const CodeContext& ctx, std::uint64_t max_codes) {
    const std::uint32_t s = ctx.cyc.s;
    std::vector<CycPartition> out;
    if (s % 2 != 0) return out;  // rep 0 is self-opposite: λ(0) = s/2 needs even s

    ResidueSet reps = cosets(ctx.cyc).representatives;
    std::vector<std::pair<Residue, Residue>> pairs;  // (rep, opposite rep), rep < opposite
    std::vector<Residue> selfpaired;
    for (Residue r : reps) {
        Residue opp = coset_rep(ctx.cyc, r == 0 ? 0 : ctx.cyc.ell - r);
        if (opp == r)
            selfpaired.push_back(r);
        else if (r < opp)
            pairs.emplace_back(r, opp);
    }
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (total > max_codes / (s + 1)) throw BoundError("self-dual enumeration exceeds the bound");
        total *= s + 1;
    }
    std::vector<std::uint32_t> choice(pairs.size(), 0);
    while (true) {
        std::map<Residue, std::uint32_t> levels;
        for (Residue r : selfpaired) levels[r] = s / 2;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            levels[pairs[i].first] = choice[i];
            levels[pairs[i].second] = s - choice[i];
        }
        out.push_back(CycPartition::make(ctx.cyc, levels));
        std::size_t pos = 0;
        while (pos < choice.size() && ++choice[pos] == s + 1) choice[pos++] = 0;
        if (pos == choice.size()) break;
    }
    std::sort(out.begin(), out.end(), [](const CycPartition& a, const CycPartition& b) {
        return a.to_string() < b.to_string();
    });
    return out;
}

CodeReport make_report(const CyclicCode& code, bool with_weight, std::uint64_t weight_bound) {
    CodeReport rep;
    rep.partition = code.partition().to_string();
    rep.type = code.type();
    rep.rank = code.rank();
    rep.card_exponent = code.cardinality_exp();
    rep.cardinality = pow_decimal(code.context().cyc.q, rep.card_exponent);
    rep.bch = code.bch();
    CyclicCode::Flags f = code.flags();
    rep.self_dual = f.self_dual;
    rep.self_orthogonal = f.self_orthogonal;
    rep.free_code = f.free_code;
    if (with_weight) rep.min_weight = code.min_weight(weight_bound);
    return rep;
}

std::vector<CodeReport> enumerate_all(const CodeContext& ctx, std::uint64_t max_codes,
                                      bool with_weights, std::uint64_t weight_bound) {
    ResidueSet reps = cosets(ctx.cyc).representatives;
    const std::uint32_t s = ctx.cyc.s;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (total > max_codes / (s + 1))
            throw BoundError("catalog of (s+1)^" + std::to_string(reps.size()) +
                             " codes exceeds the configured bound");
        total *= s + 1;
    }

    // partition index -> level map, little-endian base (s+1)
    auto report_at = [&](std::uint64_t idx) {
        std::map<Residue, std::uint32_t> levels;
        for (std::size_t i = 0; i < reps.size(); ++i) {
            levels[reps[i]] = static_cast<std::uint32_t>(idx % (s + 1));
            idx /= s + 1;
        }
        CyclicCode code(ctx, CycPartition::make(ctx.cyc, levels));
        return make_report(code, with_weights, weight_bound);
    };

    std::vector<CodeReport> out(total);
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    if (workers > 8) workers = 8;
    if (total < 64 || workers == 1) {
        for (std::uint64_t i = 0; i < total; ++i) out[i] = report_at(i);
    } else {
        // each worker writes a disjoint slice; the final sort merges deterministically
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        std::uint64_t chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t lo = w * chunk, hi = std::min(total, lo + chunk);
            pool.emplace_back([&, lo, hi, w] {
                try {
                    for (std::uint64_t i = lo; i < hi; ++i) out[i] = report_at(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    std::sort(out.begin(), out.end(),
              [](const CodeReport& a, const CodeReport& b) { return a.partition < b.partition; });
    return out;
}

}  // namespace chaincodes
