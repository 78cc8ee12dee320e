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

// chaincodes: build, classify and verify cyclic linear codes over finite
// chain rings. Exit codes: 0 success, 1 verification mismatch, 2 usage
// error, 3 resource bound exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "chaincodes/arith.hpp"
#include "chaincodes/catalog.hpp"
#include "chaincodes/cyclic_codes.hpp"

namespace cc = chaincodes;

namespace {

struct CliConfig {
    std::uint64_t p = 0;
    std::uint32_t n = 1;
    std::uint32_t s = 1;
    std::uint64_t q = 0;  // alternative to --p/--n
    std::string family = "galois-ring";
    std::uint64_t length = 0;
    std::string format = "table";
    std::uint64_t seed = 20260809;
    std::uint64_t max_enum = 4096;
    std::uint64_t max_weight_enum = 1ull << 24;

    void resolve_ring_params() {
        if (q != 0) {
            auto [pp, nn] = cc::prime_power_decompose(q);
            p = pp;
            n = nn;
        }
        if (p == 0) throw cc::InputError("ring parameters missing: give --p (and --n) or --q");
    }

    std::uint64_t qval() const {
        std::uint64_t v = 1;
        for (std::uint32_t i = 0; i < n; ++i) v *= p;
        return v;
    }

    cc::RingFamily ring_family() const { return cc::ring_family_from_string(family); }

    cc::CodeContext context() const {
        return cc::CodeContext::make(p, n, s, length, ring_family());
    }
};

void add_ring_options(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("--p", cfg.p, "prime p of the base ring");
    cmd->add_option("--n", cfg.n, "q = p^n (default n = 1)");
    cmd->add_option("--s", cfg.s, "nilpotency index s (default 1: a field)");
    cmd->add_option("--q", cfg.q, "residue field size q = p^n (alternative to --p/--n)")
        ->excludes("--p")
        ->excludes("--n");
    cmd->add_option("--family", cfg.family,
                    "chain ring family: galois-ring | equal-characteristic")
        ->check(CLI::IsMember({"galois-ring", "equal-characteristic"}));
}

void add_common_options(CLI::App* cmd, CliConfig& cfg) {
    add_ring_options(cmd, cfg);
    cmd->add_option("--length", cfg.length, "code length (coprime to q)");
    cmd->add_option("--format", cfg.format, "output format: table | csv | json | markdown")
        ->check(CLI::IsMember({"table", "csv", "json", "markdown"}));
    cmd->add_option("--seed", cfg.seed, "seed for randomized property commands");
    cmd->add_option("--max-enum", cfg.max_enum, "catalog size bound");
    cmd->add_option("--max-weight-enum", cfg.max_weight_enum,
                    "codeword enumeration bound for minimum-weight search");
}

void print_single_report(const cc::CodeReport& rep, const CliConfig& cfg) {
    cc::OutputFormat fmt = cc::output_format_from_string(cfg.format);
    if (fmt == cc::OutputFormat::Table) {
        std::cout << "partition: " << rep.partition << '\n';
        std::cout << "type: " << cc::type_string(rep.type) << '\n';
        std::cout << "rank: " << rep.rank << '\n';
        std::cout << "cardinality: " << cc::cardinality_expr(cfg.qval(), rep.card_exponent)
                  << " = " << rep.cardinality << '\n';
        std::cout << "bch_bound: " << rep.bch << '\n';
        if (rep.min_weight) std::cout << "min_weight: " << *rep.min_weight << '\n';
        std::cout << "self_dual: " << (rep.self_dual ? "true" : "false") << '\n';
        std::cout << "self_orthogonal: " << (rep.self_orthogonal ? "true" : "false") << '\n';
        std::cout << "free: " << (rep.free_code ? "true" : "false") << '\n';
    } else if (fmt == cc::OutputFormat::Json) {
        std::cout << cc::report_to_json(rep).dump(2) << '\n';
    } else {
        std::cout << cc::format_reports({rep}, fmt, cfg.qval());
    }
}

int cmd_cosets(CliConfig& cfg) {
    cfg.resolve_ring_params();
    if (cfg.length == 0) throw cc::InputError("--length is required");
    cc::CycContext ctx = cc::CycContext::make(cfg.length, cfg.qval(), std::max(1u, cfg.s));
    cc::CosetTable table = cc::cosets(ctx);
    std::uint64_t formula = cc::coset_count_formula(ctx);
    std::cout << "ell=" << ctx.ell << " q=" << ctx.q << " ord_ell(q)=" << ctx.m
              << " cosets=" << table.representatives.size() << " divisor_formula=" << formula
              << '\n';
    std::cout << "rep  size  opposite  elements\n";
    for (std::size_t i = 0; i < table.cosets.size(); ++i) {
        cc::Residue rep = table.representatives[i];
        cc::Residue opp = cc::coset_rep(ctx, rep == 0 ? 0 : ctx.ell - rep);
        std::ostringstream elems;
        elems << '{';
        for (std::size_t j = 0; j < table.cosets[i].size(); ++j) {
            if (j) elems << ',';
            elems << table.cosets[i][j];
        }
        elems << '}';
        std::cout << rep << "  " << table.cosets[i].size() << "  " << opp << "  " << elems.str()
                  << '\n';
    }
    return 0;
}

int cmd_ring_info(CliConfig& cfg, std::uint32_t m_opt) {
    cfg.resolve_ring_params();
    std::uint32_t m = m_opt;
    if (cfg.length != 0)
        m = static_cast<std::uint32_t>(
            cc::multiplicative_order(cfg.qval() % cfg.length == 0 ? 1 : cfg.qval() % cfg.length,
                                     cfg.length));
    cc::RingPtr ring = cc::ChainRing::make(cfg.p, cfg.n, cfg.s, m, cfg.ring_family());
    nlohmann::ordered_json j;
    j["descriptor"] = ring->to_json();
    j["size"] = ring->size();
    j["teichmuller_size"] = ring->qm();
    j["base_subring_size"] = ring->base_size();
    j["xi"] = ring->elem_to_json(ring->xi());
    if (cfg.length != 0) {
        cc::Elem eta = ring->root_of_unity(cfg.length);
        j["eta"] = ring->elem_to_json(eta);
        j["eta_order"] = cfg.length;
    }
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_info(CliConfig& cfg, const std::string& partition, bool with_weight) {
    cfg.resolve_ring_params();
    cc::CodeContext ctx = cfg.context();
    cc::CyclicCode code(ctx, cc::CycPartition::parse(ctx.cyc, partition));
    cc::CodeReport rep = cc::make_report(code, with_weight, cfg.max_weight_enum);
    print_single_report(rep, cfg);
    return 0;
}

int cmd_algebra(CliConfig& cfg, const std::string& op, const std::vector<std::string>& parts) {
    cfg.resolve_ring_params();
    cc::CodeContext ctx = cfg.context();
    std::size_t want = op == "dual" ? 1 : 2;
    if (parts.size() != want)
        throw cc::InputError("op '" + op + "' needs " + std::to_string(want) + " partition(s), got " +
                             std::to_string(parts.size()));
    cc::CyclicCode a(ctx, cc::CycPartition::parse(ctx.cyc, parts[0]));
    cc::CyclicCode result = a;
    if (op == "dual") {
        result = a.dual();
    } else {
        cc::CyclicCode b(ctx, cc::CycPartition::parse(ctx.cyc, parts[1]));
        result = op == "sum" ? a.sum(b) : a.intersect(b);
    }
    if (cc::output_format_from_string(cfg.format) == cc::OutputFormat::Table)
        std::cout << "op: " << op << '\n';
    print_single_report(cc::make_report(result), cfg);
    return 0;
}

int cmd_enumerate(CliConfig& cfg, bool with_weights) {
    cfg.resolve_ring_params();
    cc::CodeContext ctx = cfg.context();
    std::vector<cc::CodeReport> reports =
        cc::enumerate_all(ctx, cfg.max_enum, with_weights, cfg.max_weight_enum);
    std::cout << cc::format_reports(reports, cc::output_format_from_string(cfg.format), cfg.qval());
    return 0;
}

int cmd_verify(CliConfig& cfg, const std::string& golden_path, bool identities_only) {
    // defaults to the bundled Z4 length-7 catalog when no ring is given
    if (cfg.p == 0 && cfg.q == 0) {
        cfg.p = 2;
        cfg.n = 1;
        cfg.s = 2;
    }
    if (cfg.length == 0) cfg.length = 7;
    cfg.resolve_ring_params();
    cc::CodeContext ctx = cfg.context();

    bool ok = true;
    if (!identities_only) {
        std::string csv;
        if (golden_path.empty()) {
            if (ctx.cyc.q != 2 || ctx.cyc.s != 2 || ctx.cyc.ell != 7)
                throw cc::InputError(
                    "bundled golden data covers the Z4 length-7 catalog only; pass --golden");
            csv = cc::golden_z4_len7_csv();
        } else {
            std::ifstream in(golden_path);
            if (!in) throw cc::InputError("cannot open golden file '" + golden_path + "'");
            std::ostringstream buf;
            buf << in.rdbuf();
            csv = buf.str();
        }
        cc::VerifyResult res = cc::verify_catalog(ctx, cc::parse_golden_csv(csv), cfg.max_enum);
        std::cout << "catalog: " << res.rows_matched << "/" << res.rows_expected
                  << " rows match\n";
        for (const cc::VerifyDiff& d : res.diffs)
            std::cout << "MISMATCH partition=" << d.partition << " field=" << d.field
                      << " expected=" << d.expected << " actual=" << d.actual << '\n';
        ok = ok && res.pass;
    }
    if (ctx.cyc.q == 2 && ctx.cyc.s == 2 && ctx.cyc.ell == 7) {
        for (const cc::IdentityResult& id : cc::verify_identities(ctx)) {
            bool pass = id.partition_ok && id.codeword_ok;
            std::cout << "identity " << id.name << ": " << (pass ? "PASS" : "FAIL") << '\n';
            ok = ok && pass;
        }
    } else if (identities_only) {
        throw cc::InputError("the identity suite is defined for the Z4 length-7 catalog");
    }
    std::cout << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? 0 : 1;
}

int cmd_mds(CliConfig& cfg) {
    cfg.resolve_ring_params();
    cc::MdsReport rep = cc::mds_family(cfg.p, cfg.n, cfg.s, cfg.ring_family(), cfg.max_weight_enum);
    cc::OutputFormat fmt = cc::output_format_from_string(cfg.format);
    if (fmt == cc::OutputFormat::Json) {
        nlohmann::ordered_json j;
        j["q"] = rep.q;
        j["s"] = rep.s;
        j["length"] = rep.ell;
        j["d"] = rep.d;
        j["a"] = rep.a;
        j["a_dual"] = rep.a_dual;
        j["rank"] = rep.rank;
        j["min_weight"] = rep.min_weight;
        j["singleton"] = rep.singleton;
        j["mds"] = rep.mds;
        j["dual_pair_ok"] = rep.dual_pair_ok;
        j["a_self_orthogonal"] = rep.a_self_orthogonal;
        j["ones_self_product"] = rep.ones_self_product;
        j["note"] = rep.note;
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    auto set_str = [](const cc::ResidueSet& s) {
        std::ostringstream os;
        os << '{';
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) os << ',';
            os << s[i];
        }
        os << '}';
        return os.str();
    };
    std::cout << "q=" << rep.q << " s=" << rep.s << " length=" << rep.ell << " d=" << rep.d << '\n';
    std::cout << "A: " << set_str(rep.a) << '\n';
    std::cout << "A_dual: " << set_str(rep.a_dual) << '\n';
    std::cout << "rank: " << rep.rank << '\n';
    std::cout << "min_weight: " << rep.min_weight << " (singleton bound " << rep.singleton << ")\n";
    std::cout << "mds: " << (rep.mds ? "true" : "false") << '\n';
    std::cout << "dual_pair (L(A)^perp = L(A_dual) = L(A) + ones): "
              << (rep.dual_pair_ok ? "true" : "false") << '\n';
    std::cout << "L(A) self_orthogonal: " << (rep.a_self_orthogonal ? "true" : "false") << '\n';
    std::cout << "note: " << rep.note << '\n';
    return 0;
}

int cmd_selfdual(CliConfig& cfg) {
    cfg.resolve_ring_params();
    cc::CodeContext ctx = cfg.context();
    std::vector<cc::CycPartition> parts = cc::enumerate_self_dual(ctx, cfg.max_enum);
    std::vector<cc::CodeReport> reports;
    std::size_t verified = 0;
    for (const cc::CycPartition& p : parts) {
        cc::CyclicCode code(ctx, p);
        // kernel oracle: C = C^⊥ as spans
        if (cc::span_equal(cc::standard_form(cc::kernel(code.standard().mat)), code.standard()))
            ++verified;
        reports.push_back(cc::make_report(code));
    }
    cc::OutputFormat fmt = cc::output_format_from_string(cfg.format);
    std::cout << cc::format_reports(reports, fmt, cfg.qval());
    if (fmt == cc::OutputFormat::Table)
        std::cout << "self-dual codes: " << reports.size() << " (kernel oracle verified "
                  << verified << ")\n";
    return verified == reports.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic linear codes over finite chain rings"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string partition;
    std::vector<std::string> partitions;
    bool with_weight = false;
    bool with_weights = false;
    bool identities_only = false;
    std::string op;
    std::string golden_path;
    std::uint32_t m_opt = 1;

    CLI::App* cosets = app.add_subcommand("cosets", "print the q-cyclotomic cosets modulo length");
    add_common_options(cosets, cfg);

    CLI::App* ring_info = app.add_subcommand("ring-info", "print the ring descriptor and facts");
    add_common_options(ring_info, cfg);
    ring_info->add_option("--m", m_opt, "extension degree (ignored when --length is given)");

    CLI::App* info = app.add_subcommand("info", "report one cyclic code given its partition");
    add_common_options(info, cfg);
    info->add_option("--partition", partition, "level map rep=level,... (missing reps default to s)")
        ->required();
    info->add_flag("--min-weight", with_weight, "also compute the exact minimum weight");

    CLI::App* algebra = app.add_subcommand("algebra", "sum/meet/dual on defining partitions");
    add_common_options(algebra, cfg);
    algebra->add_option("--op", op, "sum | meet | dual")
        ->required()
        ->check(CLI::IsMember({"sum", "meet", "dual"}));
    algebra->add_option("--partition", partitions, "operand partition (repeat for binary ops)")
        ->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "emit the full catalog of cyclic codes");
    add_common_options(enumerate, cfg);
    enumerate->add_flag("--with-weights", with_weights, "brute-force minimum weights");

    CLI::App* verify = app.add_subcommand("verify", "check the catalog against golden data");
    add_common_options(verify, cfg);
    verify->add_option("--golden", golden_path, "golden CSV (default: bundled Z4 length-7 table)");
    verify->add_flag("--identities-only", identities_only, "only run the algebra identities");

    CLI::App* mds = app.add_subcommand("mds", "build the even-q MDS/self-orthogonal pair");
    add_common_options(mds, cfg);

    CLI::App* selfdual = app.add_subcommand("selfdual", "enumerate self-dual cyclic codes");
    add_common_options(selfdual, cfg);

    try {
        app.parse(argc, argv);
        if (cosets->parsed()) return cmd_cosets(cfg);
        if (ring_info->parsed()) return cmd_ring_info(cfg, m_opt);
        if (info->parsed()) return cmd_info(cfg, partition, with_weight);
        if (algebra->parsed()) return cmd_algebra(cfg, op, partitions);
        if (enumerate->parsed()) return cmd_enumerate(cfg, with_weights);
        if (verify->parsed()) return cmd_verify(cfg, golden_path, identities_only);
        if (mds->parsed()) return cmd_mds(cfg);
        if (selfdual->parsed()) return cmd_selfdual(cfg);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const cc::BoundError& e) {
        std::cerr << "resource bound: " << e.what() << '\n';
        return 3;
    } catch (const cc::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
