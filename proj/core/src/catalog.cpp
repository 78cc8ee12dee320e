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

#include "chaincodes/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace chaincodes {

const std::string& golden_z4_len7_csv() {
    static const std::string csv =
        "label,partition,type,cardinality,bch_bound\n"
        "C_0,\"0=2,1=2,3=2\",\"(0,0)\",1,0\n"
        "C_1,\"0=1,1=2,3=2\",\"(0,1)\",2^1,7\n"
        "C_2,\"0=0,1=2,3=2\",\"(1,0)\",2^2,7\n"
        "C_3,\"0=2,1=2,3=1\",\"(0,3)\",2^3,4\n"
        "C_4,\"0=2,1=1,3=2\",\"(0,3)\",2^3,4\n"
        "C_5,\"0=1,1=2,3=1\",\"(0,4)\",2^4,3\n"
        "C_6,\"0=1,1=1,3=2\",\"(0,4)\",2^4,3\n"
        "C_7,\"0=0,1=2,3=1\",\"(1,3)\",2^5,3\n"
        "C_8,\"0=0,1=1,3=2\",\"(1,3)\",2^5,3\n"
        "C_9,\"0=2,1=1,3=1\",\"(0,6)\",2^6,2\n"
        "C_10,\"0=2,1=2,3=0\",\"(3,0)\",2^6,4\n"
        "C_11,\"0=2,1=0,3=2\",\"(3,0)\",2^6,4\n"
        "C_12,\"0=1,1=0,3=2\",\"(3,1)\",2^7,3\n"
        "C_13,\"0=1,1=2,3=0\",\"(3,1)\",2^7,3\n"
        "C_14,\"0=1,1=1,3=1\",\"(0,7)\",2^7,1\n"
        "C_15,\"0=0,1=0,3=2\",\"(4,0)\",2^8,3\n"
        "C_16,\"0=0,1=2,3=0\",\"(4,0)\",2^8,3\n"
        "C_17,\"0=0,1=1,3=1\",\"(1,6)\",2^8,1\n"
        "C_18,\"0=2,1=1,3=0\",\"(3,3)\",2^9,2\n"
        "C_19,\"0=2,1=0,3=1\",\"(3,3)\",2^9,2\n"
        "C_20,\"0=1,1=0,3=1\",\"(3,4)\",2^10,1\n"
        "C_21,\"0=1,1=1,3=0\",\"(3,4)\",2^10,1\n"
        "C_22,\"0=0,1=1,3=0\",\"(4,3)\",2^11,1\n"
        "C_23,\"0=1,1=0,3=0\",\"(6,1)\",2^13,1\n"
        "C_24,\"0=0,1=0,3=1\",\"(4,3)\",2^11,1\n"
        "C_25,\"0=2,1=0,3=0\",\"(6,0)\",2^12,2\n"
        "C_26,\"0=0,1=0,3=0\",\"(7,0)\",2^14,1\n";
    return csv;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

}  // namespace

std::vector<GoldenRow> parse_golden_csv(const std::string& text) {
    std::vector<GoldenRow> rows;
    std::istringstream is(text);
    std::string line;
    bool header = true;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<std::string> f = split_csv_line(line);
        if (f.size() != 5) throw InputError("golden row needs 5 fields, got: " + line);
        GoldenRow row;
        row.label = f[0];
        row.partition = f[1];
        row.type = f[2];
        row.cardinality = f[3];
        try {
            row.bch = std::stoull(f[4]);
        } catch (const std::exception&) {
            throw InputError("malformed bch_bound in golden row: " + line);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string type_string(const std::vector<std::uint64_t>& type) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < type.size(); ++i) {
        if (i) os << ',';
        os << type[i];
    }
    os << ')';
    return os.str();
}

std::string cardinality_expr(std::uint64_t q, std::uint64_t exp) {
    if (exp == 0) return "1";
    return std::to_string(q) + "^" + std::to_string(exp);
}

OutputFormat output_format_from_string(const std::string& name) {
    if (name == "table") return OutputFormat::Table;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    if (name == "markdown" || name == "md") return OutputFormat::Markdown;
    throw InputError("unknown output format '" + name + "'");
}

nlohmann::ordered_json report_to_json(const CodeReport& rep) {
    nlohmann::ordered_json j;
    if (!rep.label.empty()) j["label"] = rep.label;
    j["partition"] = rep.partition;
    j["type"] = rep.type;
    j["rank"] = rep.rank;
    j["cardinality"] = rep.cardinality;
    j["bch_bound"] = rep.bch;
    if (rep.min_weight) j["min_weight"] = *rep.min_weight;
    j["self_dual"] = rep.self_dual;
    j["self_orthogonal"] = rep.self_orthogonal;
    j["free"] = rep.free_code;
    return j;
}

namespace {

const char* kCsvHeader =
    "partition,type,rank,cardinality,bch_bound,min_weight,self_dual,self_orthogonal,free";

std::vector<std::string> report_cells(const CodeReport& r) {
    return {r.partition,
            type_string(r.type),
            std::to_string(r.rank),
            r.cardinality,
            std::to_string(r.bch),
            r.min_weight ? std::to_string(*r.min_weight) : "",
            r.self_dual ? "true" : "false",
            r.self_orthogonal ? "true" : "false",
            r.free_code ? "true" : "false"};
}

}  // namespace

std::string format_reports(const std::vector<CodeReport>& reports, OutputFormat fmt,
                           std::uint64_t q) {
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::Csv: {
            os << kCsvHeader << '\n';
            for (const CodeReport& r : reports) {
                std::vector<std::string> cells = report_cells(r);
                os << csv_quote(cells[0]) << ',' << csv_quote(cells[1]);
                for (std::size_t i = 2; i < cells.size(); ++i) os << ',' << cells[i];
                os << '\n';
            }
            break;
        }
        case OutputFormat::Json: {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const CodeReport& r : reports) arr.push_back(report_to_json(r));
            os << arr.dump(2) << '\n';
            break;
        }
        case OutputFormat::Markdown: {
            os << "| partition | type | rank | cardinality | bch_bound | min_weight | self_dual "
                  "| self_orthogonal | free |\n";
            os << "|---|---|---|---|---|---|---|---|---|\n";
            for (const CodeReport& r : reports) {
                std::vector<std::string> cells = report_cells(r);
                os << "| ";
                for (std::size_t i = 0; i < cells.size(); ++i) {
                    os << (cells[i].empty() ? "-" : cells[i]);
                    os << (i + 1 == cells.size() ? " |" : " | ");
                }
                os << '\n';
            }
            break;
        }
        case OutputFormat::Table: {
            std::vector<std::string> header = {"partition", "type",    "rank",
                                               "cardinality", "bch",   "min_wt",
                                               "self_dual", "self_orth", "free"};
            std::vector<std::vector<std::string>> grid;
            for (const CodeReport& r : reports) {
                std::vector<std::string> cells = report_cells(r);
                cells[3] = cardinality_expr(q, r.card_exponent) + " = " + r.cardinality;
                if (!r.label.empty()) cells[0] = r.label + " " + cells[0];
                grid.push_back(cells);
            }
            std::vector<std::size_t> width(header.size());
            for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
            for (const auto& row : grid)
                for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
            auto emit = [&](const std::vector<std::string>& row) {
                for (std::size_t i = 0; i < row.size(); ++i) {
                    os << row[i];
                    if (i + 1 < row.size()) os << std::string(width[i] - row[i].size() + 2, ' ');
                }
                os << '\n';
            };
            emit(header);
            for (const auto& row : grid) emit(row);
            break;
        }
    }
    return os.str();
}

VerifyResult verify_catalog(const CodeContext& ctx, const std::vector<GoldenRow>& golden,
                            std::uint64_t max_codes) {
    VerifyResult res;
    res.rows_expected = golden.size();
    std::vector<CodeReport> reports = enumerate_all(ctx, max_codes, false);
    std::map<std::string, const CodeReport*> by_partition;
    for (const CodeReport& r : reports) by_partition[r.partition] = &r;

    if (reports.size() != golden.size())
        res.diffs.push_back({"", "row_count", std::to_string(golden.size()),
                             std::to_string(reports.size())});

    for (const GoldenRow& g : golden) {
        auto it = by_partition.find(g.partition);
        if (it == by_partition.end()) {
            res.diffs.push_back({g.partition, "presence", "present", "missing"});
            continue;
        }
        const CodeReport& r = *it->second;
        bool ok = true;
        if (type_string(r.type) != g.type) {
            res.diffs.push_back({g.partition, "type", g.type, type_string(r.type)});
            ok = false;
        }
        std::string expr = cardinality_expr(ctx.cyc.q, r.card_exponent);
        if (g.cardinality != expr && g.cardinality != r.cardinality) {
            res.diffs.push_back({g.partition, "cardinality", g.cardinality, expr});
            ok = false;
        }
        if (g.bch != r.bch) {
            res.diffs.push_back(
                {g.partition, "bch_bound", std::to_string(g.bch), std::to_string(r.bch)});
            ok = false;
        }
        if (ok) ++res.rows_matched;
    }
    res.pass = res.diffs.empty() && res.rows_matched == golden.size();
    return res;
}

std::vector<IdentityResult> verify_identities(const CodeContext& ctx, std::uint64_t word_bound) {
    if (ctx.cyc.q != 2 || ctx.cyc.s != 2 || ctx.cyc.ell != 7)
        throw InputError("the identity suite is defined for the Z4 length-7 catalog");

    auto code = [&](const char* text) {
        return CyclicCode(ctx, CycPartition::parse(ctx.cyc, text));
    };
    CyclicCode c6 = code("0=1,1=1,3=2");
    CyclicCode c8 = code("0=0,1=1,3=2");
    CyclicCode c12 = code("0=1,1=0,3=2");
    CyclicCode c15 = code("0=0,1=0,3=2");
    CyclicCode c19 = code("0=2,1=0,3=1");
    CyclicCode c20 = code("0=1,1=0,3=1");

    auto words = [&](const StandardForm& sf) { return span_word_set(sf, word_bound); };
    std::vector<IdentityResult> out;

    {
        IdentityResult r{"C8 + C12 = C15", false, false};
        r.partition_ok = c8.sum(c12).partition() == c15.partition();
        StandardForm sum_sf = standard_form(RMatrix::stack(c8.standard().mat, c12.standard().mat));
        r.codeword_ok = words(sum_sf) == words(c15.standard());
        out.push_back(r);
    }
    {
        IdentityResult r{"C19 + C12 = C20", false, false};
        r.partition_ok = c19.sum(c12).partition() == c20.partition();
        StandardForm sum_sf = standard_form(RMatrix::stack(c19.standard().mat, c12.standard().mat));
        r.codeword_ok = words(sum_sf) == words(c20.standard());
        out.push_back(r);
    }
    {
        IdentityResult r{"C8^perp = C19", false, false};
        r.partition_ok = c8.dual().partition() == c19.partition();
        r.codeword_ok = words(standard_form(kernel(c8.standard().mat))) == words(c19.standard());
        out.push_back(r);
    }
    {
        IdentityResult r{"C12^perp = C12", false, false};
        r.partition_ok = c12.dual().partition() == c12.partition();
        r.codeword_ok = words(standard_form(kernel(c12.standard().mat))) == words(c12.standard());
        out.push_back(r);
    }
    {
        IdentityResult r{"C8 ∩ C12 = C6", false, false};
        r.partition_ok = c8.intersect(c12).partition() == c6.partition();
        std::vector<std::vector<std::uint64_t>> w8 = words(c8.standard());
        std::vector<std::vector<std::uint64_t>> w12 = words(c12.standard());
        std::vector<std::vector<std::uint64_t>> inter;
        std::set_intersection(w8.begin(), w8.end(), w12.begin(), w12.end(),
                              std::back_inserter(inter));
        r.codeword_ok = inter == words(c6.standard());
        out.push_back(r);
    }
    return out;
}

}  // namespace chaincodes
