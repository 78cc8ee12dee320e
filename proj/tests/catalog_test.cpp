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

#include "gtest/gtest.h"

using namespace chaincodes;

namespace {
CodeContext z4_7() { return CodeContext::make(2, 1, 2, 7); }
}  // namespace

TEST(Golden, ParseBundledCatalog) {
    std::vector<GoldenRow> rows = parse_golden_csv(golden_z4_len7_csv());
    ASSERT_EQ(rows.size(), 27u);
    EXPECT_EQ(rows[0].label, "C_0");
    EXPECT_EQ(rows[0].partition, "0=2,1=2,3=2");
    EXPECT_EQ(rows[0].cardinality, "1");
    EXPECT_EQ(rows[0].bch, 0u);
    EXPECT_EQ(rows[8].label, "C_8");
    EXPECT_EQ(rows[8].type, "(1,3)");
    EXPECT_EQ(rows[8].cardinality, "2^5");
    EXPECT_THROW(parse_golden_csv("label,partition\nC_0,\"0=2\"\n"), InputError);
}

TEST(Golden, VerifyCatalogPasses) {
    VerifyResult res = verify_catalog(z4_7(), parse_golden_csv(golden_z4_len7_csv()));
    EXPECT_TRUE(res.pass);
    EXPECT_EQ(res.rows_matched, 27u);
    EXPECT_TRUE(res.diffs.empty());
}

TEST(Golden, CorruptedRowIsNamed) {
    std::vector<GoldenRow> rows = parse_golden_csv(golden_z4_len7_csv());
    for (GoldenRow& r : rows)
        if (r.label == "C_8") r.cardinality = "2^6";  // inject a fault
    VerifyResult res = verify_catalog(z4_7(), rows);
    EXPECT_FALSE(res.pass);
    ASSERT_EQ(res.diffs.size(), 1u);
    EXPECT_EQ(res.diffs[0].partition, "0=0,1=1,3=2");
    EXPECT_EQ(res.diffs[0].field, "cardinality");
    EXPECT_EQ(res.diffs[0].expected, "2^6");
    EXPECT_EQ(res.diffs[0].actual, "2^5");
}

TEST(Golden, IdentitySuite) {
    std::vector<IdentityResult> ids = verify_identities(z4_7());
    ASSERT_EQ(ids.size(), 5u);
    for (const IdentityResult& id : ids) {
        EXPECT_TRUE(id.partition_ok) << id.name;
        EXPECT_TRUE(id.codeword_ok) << id.name;
    }
    EXPECT_THROW(verify_identities(CodeContext::make(2, 1, 2, 3)), InputError);
}

TEST(Format, TypeAndCardinality) {
    EXPECT_EQ(type_string({1, 3}), "(1,3)");
    EXPECT_EQ(type_string({0}), "(0)");
    EXPECT_EQ(cardinality_expr(2, 5), "2^5");
    EXPECT_EQ(cardinality_expr(2, 0), "1");
    EXPECT_THROW(output_format_from_string("yaml"), InputError);
}

TEST(Format, CsvAndJsonShapes) {
    CodeContext ctx = z4_7();
    CyclicCode c8(ctx, CycPartition::parse(ctx.cyc, "0=0,1=1,3=2"));
    CodeReport rep = make_report(c8, true);
    rep.label = "C_8";

    std::string csv = format_reports({rep}, OutputFormat::Csv, 2);
    EXPECT_NE(csv.find("partition,type,rank,cardinality,bch_bound,min_weight,self_dual,"
                       "self_orthogonal,free"),
              std::string::npos);
    EXPECT_NE(csv.find("\"0=0,1=1,3=2\",\"(1,3)\",4,32,3,3,false,false,false"), std::string::npos);

    nlohmann::ordered_json j = report_to_json(rep);
    EXPECT_EQ(j["label"], "C_8");
    EXPECT_EQ(j["partition"], "0=0,1=1,3=2");
    EXPECT_EQ(j["type"], (std::vector<std::uint64_t>{1, 3}));
    EXPECT_EQ(j["rank"], 4);
    EXPECT_EQ(j["cardinality"], "32");
    EXPECT_EQ(j["bch_bound"], 3);
    EXPECT_EQ(j["min_weight"], 3);
    EXPECT_EQ(j["free"], false);

    std::string md = format_reports({rep}, OutputFormat::Markdown, 2);
    EXPECT_NE(md.find("| partition |"), std::string::npos);
    std::string table = format_reports({rep}, OutputFormat::Table, 2);
    EXPECT_NE(table.find("2^5 = 32"), std::string::npos);
}
