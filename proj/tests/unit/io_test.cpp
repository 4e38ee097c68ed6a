#include "rmspectrum/io.hpp"

#include <gtest/gtest.h>

using namespace rmspec;

TEST(IoTest, HistogramCsv) {
    WeightHistogram h;
    h.m = 3;
    h.counts = {{2, 5}, {10, 1}};
    EXPECT_EQ(histogram_csv(h), "weight,count\n2,5\n10,1\n");
    EXPECT_EQ(histogram_csv(WeightHistogram{}), "weight,count\n");
}

TEST(IoTest, MetadataJson) {
    WeightHistogram h;
    h.m = 4;
    h.total = 12;
    h.complete = true;
    const auto text = histogram_metadata_json(h, {"full", 2, 0.5});
    EXPECT_NE(text.find("\"convention\": \"ordered\""), std::string::npos);
    EXPECT_NE(text.find("\"total\": 12"), std::string::npos);
    EXPECT_NE(text.find("\"threads\": 2"), std::string::npos);
    EXPECT_EQ(text.back(), '\n');
}

TEST(IoTest, SpectrumJson) {
    SpectrumSet s;
    s.r = 1;
    s.m = 2;
    s.add(0, {Provenance::Source::Axiom, ""});
    s.add(2, {Provenance::Source::Witness, "w"});
    const auto text = spectrum_json(s);
    EXPECT_NE(text.find("\"0\": \"axiom\""), std::string::npos);
    EXPECT_NE(text.find("\"2\": \"witness:w\""), std::string::npos);
    EXPECT_NE(text.find("\"weights\": [\n    0,\n    2\n  ]"), std::string::npos);
}

TEST(IoTest, CatalogJsonListsEveryEntry) {
    const auto text = catalog_json();
    for (const auto& e : witness_catalog()) {
        EXPECT_NE(text.find("\"name\": \"" + e.name + "\""), std::string::npos) << e.name;
    }
}
