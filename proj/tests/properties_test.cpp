#include <gtest/gtest.h>

#include "lexicrosswalk/lexicrosswalk.hpp"
#include "support/generators.hpp"

using namespace lexicrosswalk;

TEST(Properties, EqualStructuralIsAnEquivalenceRelation) {
    std::vector<LexicalResource> pool;
    for (std::uint32_t seed = 1; seed <= 8; ++seed)
        pool.push_back(generators::random_resource(seed, generators::full_caps()));

    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 300; ++i) {
        const LexicalResource& a = pool[pick(rng)];
        const LexicalResource& b = pool[pick(rng)];
        const LexicalResource& c = pool[pick(rng)];
        EXPECT_TRUE(equal_structural(a, a));
        EXPECT_EQ(equal_structural(a, b), equal_structural(b, a));
        if (equal_structural(a, b) && equal_structural(b, c))
            EXPECT_TRUE(equal_structural(a, c));
        EXPECT_EQ(equal_structural(a, b), !structural_diff(a, b).has_value());
    }
}

TEST(Properties, FsAndMixedRoundTripRandomModels) {
    FsDialectOptions opts;
    opts.emit_dcr_attrs = true;
    for (std::uint32_t seed = 1; seed <= 100; ++seed) {
        SCOPED_TRACE(seed);
        const LexicalResource model =
            generators::random_resource(seed, generators::full_caps());
        ASSERT_FALSE(has_errors(validate_model(model)));

        const auto [via_fs, fs_findings] = parse_fs(emit_fs(model, opts));
        EXPECT_TRUE(fs_findings.empty());
        EXPECT_TRUE(equal_structural(via_fs, model))
            << structural_diff(via_fs, model).value_or("");

        const auto [via_mixed, mixed_findings] = parse_mixed(emit_mixed(model, opts));
        EXPECT_TRUE(mixed_findings.empty());
        EXPECT_TRUE(equal_structural(via_mixed, model))
            << structural_diff(via_mixed, model).value_or("");
    }
}

TEST(Properties, LegacyRoundTripsItsRepresentableSubset) {
    LegacyDialectOptions opts;
    opts.emit_dcr_attrs = true;
    for (std::uint32_t seed = 1; seed <= 100; ++seed) {
        SCOPED_TRACE(seed);
        const LexicalResource model =
            generators::random_resource(seed, generators::legacy_caps());
        const auto [back, findings] = parse_legacy_lmf(emit_legacy_lmf(model, opts));
        EXPECT_TRUE(findings.empty());
        EXPECT_TRUE(equal_structural(back, model))
            << structural_diff(back, model).value_or("");
    }
}

TEST(Properties, TeiRoundTripsItsRepresentableSubsetInBothStyles) {
    for (std::uint32_t seed = 1; seed <= 100; ++seed) {
        const LexicalResource model = generators::random_resource(seed, generators::tei_caps());
        for (GrammarStyle style : {GrammarStyle::GramGrp, GrammarStyle::FeatureStructure}) {
            SCOPED_TRACE(testing::Message() << "seed " << seed << " style " << int(style));
            TeiEmitOptions opts;
            opts.grammar_style = style;
            opts.emit_dcr_attrs = true;
            const auto [back, findings] = parse_tei(emit_tei(model, opts));
            EXPECT_TRUE(findings.empty());
            EXPECT_TRUE(equal_structural(back, model))
                << structural_diff(back, model).value_or("");
        }
    }
}

TEST(Properties, SerializedEmissionsSurviveTheWire) {
    for (std::uint32_t seed = 1; seed <= 40; ++seed) {
        SCOPED_TRACE(seed);
        const LexicalResource model =
            generators::random_resource(seed, generators::full_caps());
        const xml::Node emitted = emit_mixed(model);
        const std::string bytes =
            xml::serialize_xml(emitted, serialize_options_for(Dialect::Mixed));
        EXPECT_TRUE(xml::canonical_equal(xml::parse_xml(bytes), emitted));
    }
}

TEST(Properties, ValidatorAcceptsRandomTeiEmissions) {
    for (std::uint32_t seed = 1; seed <= 60; ++seed) {
        SCOPED_TRACE(seed);
        const LexicalResource model = generators::random_resource(seed, generators::tei_caps());
        const std::vector<Finding> findings = validate_tei_document(emit_tei(model));
        EXPECT_FALSE(has_errors(findings));
    }
}
