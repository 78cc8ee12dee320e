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

#include "chaincodes/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "chaincodes/arith.hpp"

namespace chaincodes {

CycContext CycContext::make(std::uint64_t ell, std::uint64_t q, std::uint32_t s) {
    if (ell == 0) throw InputError("length must be positive");
    if (ell > (1ull << 24)) throw BoundError("length " + std::to_string(ell) + " exceeds the desk-scale bound 2^24");
    if (s == 0) throw InputError("nilpotency index must be at least 1");
    prime_power_decompose(q);  // validates q
    if (std::gcd(ell, q) != 1)
        throw InputError("gcd(length, q) must be 1 (got length=" + std::to_string(ell) +
                         ", q=" + std::to_string(q) + ")");
    CycContext ctx;
    ctx.ell = ell;
    ctx.q = q;
    ctx.s = s;
    ctx.m = static_cast<std::uint32_t>(multiplicative_order(q % ell == 0 ? 1 : q % ell, ell));
    return ctx;
}

ResidueSet make_set(const CycContext& ctx, std::vector<Residue> members) {
    for (Residue z : members)
        if (z >= ctx.ell) throw InputError("residue " + std::to_string(z) + " out of range [0," +
                                           std::to_string(ctx.ell) + ")");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

ResidueSet multiply_set(const CycContext& ctx, Residue u, const ResidueSet& a) {
    ResidueSet out;
    out.reserve(a.size());
    for (Residue z : a) out.push_back(mul_mod(u % ctx.ell, z, ctx.ell));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ResidueSet q_closure(const CycContext& ctx, const ResidueSet& a) {
    ResidueSet checked = make_set(ctx, a);
    std::vector<bool> in(ctx.ell, false);
    std::vector<Residue> stack(checked.begin(), checked.end());
    for (Residue z : stack) in[z] = true;
    while (!stack.empty()) {
        Residue z = stack.back();
        stack.pop_back();
        Residue w = mul_mod(ctx.q % ctx.ell, z, ctx.ell);
        if (!in[w]) {
            in[w] = true;
            stack.push_back(w);
        }
    }
    ResidueSet out;
    for (Residue z = 0; z < ctx.ell; ++z)
        if (in[z]) out.push_back(z);
    return out;
}

bool is_q_closed(const CycContext& ctx, const ResidueSet& a) {
    return multiply_set(ctx, ctx.q % ctx.ell, a) == a;
}

ResidueSet set_union(const ResidueSet& a, const ResidueSet& b) {
    ResidueSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ResidueSet set_intersection(const ResidueSet& a, const ResidueSet& b) {
    ResidueSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ResidueSet set_difference(const ResidueSet& a, const ResidueSet& b) {
    ResidueSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const ResidueSet& a, Residue z) {
    return std::binary_search(a.begin(), a.end(), z);
}

ResidueSet opposite(const CycContext& ctx, const ResidueSet& a) {
    ResidueSet out;
    out.reserve(a.size());
    for (Residue z : a) out.push_back(z == 0 ? 0 : ctx.ell - z);
    std::sort(out.begin(), out.end());
    return out;
}

ResidueSet complement(const CycContext& ctx, const ResidueSet& a) {
    ResidueSet out;
    out.reserve(ctx.ell - a.size());
    auto it = a.begin();
    for (Residue z = 0; z < ctx.ell; ++z) {
        if (it != a.end() && *it == z)
            ++it;
        else
            out.push_back(z);
    }
    return out;
}

ResidueSet set_dual(const CycContext& ctx, const ResidueSet& a) {
    return complement(ctx, opposite(ctx, a));
}

ResidueSet set_transform(const CycContext& ctx, const ResidueSet& a, SetTransform kind) {
    switch (kind) {
        case SetTransform::Opposite: return opposite(ctx, a);
        case SetTransform::Complement: return complement(ctx, a);
        case SetTransform::Dual: return set_dual(ctx, a);
    }
    throw InputError("unknown set transform");
}

CosetTable cosets(const CycContext& ctx) {
    CosetTable table;
    std::vector<bool> seen(ctx.ell, false);
    for (Residue z = 0; z < ctx.ell; ++z) {
        if (seen[z]) continue;
        ResidueSet orbit;
        Residue w = z;
        do {
            orbit.push_back(w);
            seen[w] = true;
            w = mul_mod(ctx.q % ctx.ell, w, ctx.ell);
        } while (w != z);
        std::sort(orbit.begin(), orbit.end());
        table.representatives.push_back(z);  // z is minimal: scan order
        table.cosets.push_back(std::move(orbit));
    }
    return table;
}

Residue coset_rep(const CycContext& ctx, Residue z) {
    z %= ctx.ell;
    Residue rep = z, w = z;
    do {
        w = mul_mod(ctx.q % ctx.ell, w, ctx.ell);
        rep = std::min(rep, w);
    } while (w != z);
    return rep;
}

std::uint64_t coset_count_formula(const CycContext& ctx) {
    std::uint64_t total = 0;
    for (std::uint64_t d : divisors(ctx.ell)) {
        std::uint64_t phi = euler_phi(d);
        std::uint64_t ord = multiplicative_order(d == 1 ? 1 : ctx.q % d, d);
        if (phi % ord != 0)
            throw InputError("coset count term phi(" + std::to_string(d) + ")/ord is not integral");
        total += phi / ord;
    }
    return total;
}

ResidueSet Interval::materialize(const CycContext& ctx) const {
    ResidueSet out;
    for (std::uint64_t i = 0; i < length; ++i)
        out.push_back(mul_mod(multiplier % ctx.ell, (start + i) % ctx.ell, ctx.ell));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Interval longest_interval(const CycContext& ctx, const ResidueSet& a) {
    if (ctx.ell == 1) return Interval{0, 0, static_cast<std::uint64_t>(a.size())};
    Interval best{0, 1, 0};
    if (a.empty()) return best;
    std::vector<bool> in(ctx.ell, false);
    std::vector<bool> member(ctx.ell, false);
    for (Residue z : a) member[z] = true;

    for (Residue u = 1; u < ctx.ell; ++u) {
        if (std::gcd(u, ctx.ell) != 1) continue;
        Residue uinv = inverse_mod(u, ctx.ell);
        // b = u^-1·A; a run {a, a+1, …} in b corresponds to the interval u·{a, …} ⊆ A.
        std::fill(in.begin(), in.end(), false);
        for (Residue z = 0; z < ctx.ell; ++z)
            if (member[z]) in[mul_mod(uinv, z, ctx.ell)] = true;
        if (a.size() == ctx.ell) {
            if (best.length < ctx.ell) best = Interval{0, u, ctx.ell};
            break;
        }
        // circular runs: start just after a gap
        for (Residue start = 0; start < ctx.ell; ++start) {
            if (!in[start]) continue;
            if (in[(start + ctx.ell - 1) % ctx.ell]) continue;  // not a run head
            std::uint64_t len = 0;
            while (in[(start + len) % ctx.ell]) ++len;
            if (len > best.length) best = Interval{start, u, len};
        }
    }
    return best;
}

CycPartition CycPartition::make(const CycContext& ctx, const std::map<Residue, std::uint32_t>& levels) {
    CosetTable table = cosets(ctx);
    CycPartition p;
    p.ctx_ = ctx;
    p.reps_ = table.representatives;
    p.levels_.resize(p.reps_.size());
    if (levels.size() != p.reps_.size())
        throw InputError("level map must assign exactly the coset representatives");
    for (std::size_t i = 0; i < p.reps_.size(); ++i) {
        auto it = levels.find(p.reps_[i]);
        if (it == levels.end())
            throw InputError("missing level for representative " + std::to_string(p.reps_[i]));
        if (it->second > ctx.s)
            throw InputError("level " + std::to_string(it->second) + " out of range [0," +
                             std::to_string(ctx.s) + "]");
        p.levels_[i] = it->second;
    }
    return p;
}

CycPartition CycPartition::zero(const CycContext& ctx) {
    CycPartition p;
    p.ctx_ = ctx;
    p.reps_ = cosets(ctx).representatives;
    p.levels_.assign(p.reps_.size(), ctx.s);
    return p;
}

CycPartition CycPartition::full(const CycContext& ctx) {
    CycPartition p = zero(ctx);
    std::fill(p.levels_.begin(), p.levels_.end(), 0u);
    return p;
}

namespace {
std::string trim(std::string_view v) {
    std::size_t b = v.find_first_not_of(" \t");
    std::size_t e = v.find_last_not_of(" \t");
    if (b == std::string_view::npos) return "";
    return std::string(v.substr(b, e - b + 1));
}
}  // namespace

CycPartition CycPartition::parse(const CycContext& ctx, std::string_view text) {
    CycPartition p = zero(ctx);  // omitted reps default to level s
    std::vector<bool> assigned(p.reps_.size(), false);
    std::string_view rest = text;
    while (!rest.empty()) {
        std::size_t comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        std::string entry = trim(item);
        if (entry.empty()) {
            if (comma == std::string_view::npos && item.empty()) break;
            throw InputError("empty entry in partition string");
        }
        std::size_t eq = entry.find('=');
        if (eq == std::string::npos) throw InputError("expected rep=level, got '" + entry + "'");
        std::uint64_t rep = 0, level = 0;
        try {
            rep = std::stoull(trim(entry.substr(0, eq)));
            level = std::stoull(trim(entry.substr(eq + 1)));
        } catch (const std::exception&) {
            throw InputError("malformed partition entry '" + entry + "'");
        }
        auto it = std::lower_bound(p.reps_.begin(), p.reps_.end(), rep);
        if (it == p.reps_.end() || *it != rep)
            throw InputError(std::to_string(rep) + " is not a coset representative");
        std::size_t idx = static_cast<std::size_t>(it - p.reps_.begin());
        if (assigned[idx]) throw InputError("duplicate representative " + std::to_string(rep));
        if (level > ctx.s)
            throw InputError("level " + std::to_string(level) + " out of range [0," +
                             std::to_string(ctx.s) + "]");
        assigned[idx] = true;
        p.levels_[idx] = static_cast<std::uint32_t>(level);
    }
    return p;
}

std::string CycPartition::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < reps_.size(); ++i) {
        if (i) os << ',';
        os << reps_[i] << '=' << levels_[i];
    }
    return os.str();
}

std::uint32_t CycPartition::level_of(Residue rep) const {
    auto it = std::lower_bound(reps_.begin(), reps_.end(), rep);
    if (it == reps_.end() || *it != rep)
        throw InputError(std::to_string(rep) + " is not a coset representative");
    return levels_[static_cast<std::size_t>(it - reps_.begin())];
}

ResidueSet CycPartition::level_set(std::uint32_t t) const {
    ResidueSet seed;
    for (std::size_t i = 0; i < reps_.size(); ++i)
        if (levels_[i] == t) seed.push_back(reps_[i]);
    return q_closure(ctx_, seed);
}

CycPartition CycPartition::join(const CycPartition& other) const {
    if (ctx_ != other.ctx_) throw InputError("partition join: context mismatch");
    CycPartition out = *this;
    for (std::size_t i = 0; i < levels_.size(); ++i)
        out.levels_[i] = std::min(levels_[i], other.levels_[i]);
    return out;
}

CycPartition CycPartition::meet(const CycPartition& other) const {
    if (ctx_ != other.ctx_) throw InputError("partition meet: context mismatch");
    return dual().join(other.dual()).dual();
}

CycPartition CycPartition::dual() const {
    CycPartition out = *this;
    for (std::size_t i = 0; i < reps_.size(); ++i) {
        Residue neg = reps_[i] == 0 ? 0 : ctx_.ell - reps_[i];
        out.levels_[i] = ctx_.s - level_of(coset_rep(ctx_, neg));
    }
    return out;
}

CycPartition partition_embed(const CycContext& ctx, const ResidueSet& a) {
    if (!is_q_closed(ctx, a)) throw InputError("partition_embed requires a q-closed set");
    CycPartition p = CycPartition::zero(ctx);
    std::map<Residue, std::uint32_t> levels;
    for (Residue rep : p.representatives()) levels[rep] = set_contains(a, rep) ? 0 : ctx.s;
    return CycPartition::make(ctx, levels);
}

ResidueSet partition_project(const CycPartition& p) { return p.level_set(0); }

}  // namespace chaincodes
