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

#ifndef CHAINCODES_CATALOG_HPP
#define CHAINCODES_CATALOG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chaincodes/cyclic_codes.hpp"

namespace chaincodes {

// ---- golden reference data ----------------------------------------------

/// A reference catalog row, keyed by partition string. Cardinality is either
/// a power expression "q^e" or a plain decimal.
struct GoldenRow {
    std::string label;
    std::string partition;
    std::string type;         // "(k0,k1,...)"
    std::string cardinality;  // "2^5" or "32" or "1"
    std::uint64_t bch = 0;
};

/// The bundled catalog of the 27 cyclic Z4-linear codes of length 7
/// (CSV text, label/partition/type/cardinality/bch_bound).
const std::string& golden_z4_len7_csv();

std::vector<GoldenRow> parse_golden_csv(const std::string& text);

// ---- formatting ----------------------------------------------------------

std::string type_string(const std::vector<std::uint64_t>& type);
/// "q^e" for e > 0, "1" for e = 0.
std::string cardinality_expr(std::uint64_t q, std::uint64_t exp);

enum class OutputFormat { Table, Csv, Json, Markdown };
OutputFormat output_format_from_string(const std::string& name);

nlohmann::ordered_json report_to_json(const CodeReport& rep);
/// Renders a catalog in the chosen format; q is the base residue size used
/// for the q^e column in human-readable formats.
std::string format_reports(const std::vector<CodeReport>& reports, OutputFormat fmt,
                           std::uint64_t q);

// ---- verification ---------------------------------------------------------

struct VerifyDiff {
    std::string partition;
    std::string field;
    std::string expected;
    std::string actual;
};

struct VerifyResult {
    bool pass = false;
    std::size_t rows_expected = 0;
    std::size_t rows_matched = 0;
    std::vector<VerifyDiff> diffs;
};

/// Recomputes the catalog for ctx and diffs type/cardinality/BCH columns
/// against the golden rows, keyed by partition.
VerifyResult verify_catalog(const CodeContext& ctx, const std::vector<GoldenRow>& golden,
                            std::uint64_t max_codes = 4096);

struct IdentityResult {
    std::string name;
    bool partition_ok = false;
    bool codeword_ok = false;
};

/// The worked algebra identities of the Z4 length-7 catalog
/// (C8+C12=C15, C19+C12=C20, C8⊥=C19, C12⊥=C12, C8∩C12=C6), checked at the
/// partition level and on enumerated codeword sets.
std::vector<IdentityResult> verify_identities(const CodeContext& ctx,
                                              std::uint64_t word_bound = (1ull << 12));

}  // namespace chaincodes

#endif  // CHAINCODES_CATALOG_HPP
