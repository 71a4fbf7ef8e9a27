#include <gtest/gtest.h>

#include <set>

#include "lexicrosswalk/validator.hpp"
#include "support/fixtures.hpp"
#include "support/test_util.hpp"

using namespace lexicrosswalk;
using test_util::read_fixture;

namespace {

std::vector<Finding> validate_str(const std::string& xml_text,
                                  std::optional<std::set<std::string>> enabled = std::nullopt) {
    return validate_tei_document(xml::parse_xml(xml_text), enabled);
}

int count_rule(const std::vector<Finding>& fs, std::string_view rule) {
    int n = 0;
    for (const Finding& f : fs)
        if (f.rule_id == rule) ++n;
    return n;
}

}  // namespace

TEST(RuleCatalogue, WellFormed) {
    const std::vector<Rule>& rules = rule_catalogue();
    EXPECT_GE(rules.size(), 7u);
    std::set<std::string> ids;
    for (const Rule& r : rules) {
        EXPECT_TRUE(ids.insert(r.id).second) << "duplicate " << r.id;
        EXPECT_FALSE(r.description.empty());
        EXPECT_FALSE(r.rationale.empty());
    }
    for (const Rule& r : rules)
        if (r.id == "R1-SENSE-REQUIRED") EXPECT_EQ(r.severity, Severity::Error);
}

TEST(ValidateTei, CompliantClergymanListing) {
    EXPECT_TRUE(validate_str(read_fixture("clergyman.tei.xml")).empty());
    EXPECT_TRUE(validate_str(read_fixture("clergyman.tei-fs.xml")).empty());
    EXPECT_TRUE(validate_str(read_fixture("corenet.concept.tei.xml")).empty());
}

TEST(ValidateTei, R1SenseRequired) {
    const std::vector<Finding> findings = validate_str("<entry><def>x</def></entry>");
    ASSERT_EQ(findings.size(), 1u);
    EXPECT_EQ(findings[0].rule_id, "R1-SENSE-REQUIRED");
    EXPECT_EQ(findings[0].path, "/entry[1]/def[1]");
    EXPECT_EQ(findings[0].severity, Severity::Error);

    EXPECT_TRUE(validate_str("<entry><sense><def>x</def></sense></entry>").empty());
}

TEST(ValidateTei, R2VoidGramGrp) {
    const std::vector<Finding> findings =
        validate_str("<entry><form><orth>a</orth><gramGrp/></form></entry>");
    ASSERT_EQ(findings.size(), 1u);
    EXPECT_EQ(findings[0].rule_id, "R2-NO-VOID-GRAMGRP");
    EXPECT_EQ(findings[0].severity, Severity::Warning);

    EXPECT_TRUE(
        validate_str("<entry><form><orth>a</orth><gramGrp><pos>noun</pos></gramGrp></form>"
                     "</entry>")
            .empty());
}

TEST(ValidateTei, R3TransientConstructs) {
    const std::vector<Finding> findings =
        validate_str("<body><entryFree/><dictScrap/><entry><form><orth>a</orth></form>"
                     "</entry></body>");
    EXPECT_EQ(count_rule(findings, "R3-ENTRY-ONLY"), 2);
}

TEST(ValidateTei, R8AlternativeEntryIsInfo) {
    const std::vector<Finding> findings =
        validate_str("<superEntry><hom><entry><form><orth>a</orth></form></entry></hom>"
                     "</superEntry>");
    EXPECT_EQ(count_rule(findings, "R8-ALTERNATIVE-ENTRY"), 2);
    for (const Finding& f : findings)
        if (f.rule_id == "R8-ALTERNATIVE-ENTRY") EXPECT_EQ(f.severity, Severity::Info);
}

TEST(ValidateTei, R4FormAndGrammarWrappers) {
    const std::vector<Finding> orth = validate_str("<entry><orth>loose</orth></entry>");
    EXPECT_EQ(count_rule(orth, "R4-FORM-WRAPPER"), 1);

    const std::vector<Finding> pos =
        validate_str("<entry><form><orth>a</orth><pos>noun</pos></form></entry>");
    EXPECT_EQ(count_rule(pos, "R4-FORM-WRAPPER"), 1);

    EXPECT_TRUE(validate_str("<entry><form><orth>a</orth><fs type=\"grammar\">"
                             "<f name=\"pos\">noun</f></fs></form></entry>")
                    .empty());
}

TEST(ValidateTei, R5CitQuote) {
    const std::vector<Finding> none =
        validate_str("<entry><sense><cit type=\"example\"><bibl>x</bibl></cit></sense>"
                     "</entry>");
    EXPECT_EQ(count_rule(none, "R5-CIT-QUOTE"), 1);

    const std::vector<Finding> two = validate_str(
        "<entry><sense><cit><quote>a</quote><quote>b</quote></cit></sense></entry>");
    EXPECT_EQ(count_rule(two, "R5-CIT-QUOTE"), 1);

    EXPECT_TRUE(validate_str("<entry><sense><cit><q>a</q></cit></sense></entry>").empty());
}

TEST(ValidateTei, R6LmfAnchor) {
    const std::string misplaced =
        "<tei:entry xmlns:tei=\"http://www.tei-c.org/ns/1.0\" "
        "xmlns:lmf=\"http://www.iso.org/ns/LMF\">"
        "<lmf:syntacticBehaviour/></tei:entry>";
    const std::vector<Finding> findings = validate_str(misplaced);
    ASSERT_EQ(count_rule(findings, "R6-LMF-ANCHOR"), 1);

    const std::string anchored =
        "<tei:entry xmlns:tei=\"http://www.tei-c.org/ns/1.0\" "
        "xmlns:lmf=\"http://www.iso.org/ns/LMF\"><tei:sense>"
        "<lmf:syntacticBehaviour><lmf:subcategorizationFrame><lmf:syntacticArgument>"
        "<lmf:syntacticFunction>N1</lmf:syntacticFunction></lmf:syntacticArgument>"
        "</lmf:subcategorizationFrame></lmf:syntacticBehaviour></tei:sense></tei:entry>";
    EXPECT_TRUE(validate_str(anchored).empty());

    const std::string stray =
        "<tei:entry xmlns:tei=\"http://www.tei-c.org/ns/1.0\" "
        "xmlns:lmf=\"http://www.iso.org/ns/LMF\"><tei:sense>"
        "<lmf:collocation>x</lmf:collocation></tei:sense></tei:entry>";
    EXPECT_EQ(count_rule(validate_str(stray), "R6-LMF-ANCHOR"), 1);
}

TEST(ValidateTei, R7DuplicateIds) {
    const std::vector<Finding> findings = validate_str(
        "<body><entry xml:id=\"e1\"><form><orth>a</orth></form></entry>"
        "<entry xml:id=\"e1\"><form><orth>b</orth></form></entry></body>");
    ASSERT_EQ(count_rule(findings, "R7-ENTRY-ID-UNIQUE"), 1);
    for (const Finding& f : findings)
        if (f.rule_id == "R7-ENTRY-ID-UNIQUE") EXPECT_EQ(f.path, "/body[1]/entry[2]");

    EXPECT_TRUE(validate_str("<body><entry xml:id=\"e1\"><form><orth>a</orth></form>"
                             "</entry><entry xml:id=\"e2\"><form><orth>b</orth></form>"
                             "</entry></body>")
                    .empty());
}

TEST(ValidateTei, EnabledSubsetAndMonotonicity) {
    const std::string doc =
        "<entry><def>x</def><form><orth>a</orth><gramGrp/></form></entry>";
    const std::vector<Finding> all = validate_str(doc);
    const std::vector<Finding> only_r1 = validate_str(doc, std::set<std::string>{"R1-SENSE-REQUIRED"});
    EXPECT_EQ(only_r1.size(), 1u);
    EXPECT_EQ(only_r1[0].rule_id, "R1-SENSE-REQUIRED");
    // Monotonicity: findings of the subset appear in the full run.
    for (const Finding& f : only_r1)
        EXPECT_NE(std::find(all.begin(), all.end(), f), all.end());
    EXPECT_GE(all.size(), only_r1.size());
}

TEST(ValidateTei, DeterministicAndSorted) {
    const std::string doc =
        "<body><entry><def>x</def></entry><entry><gramGrp/><def>y</def></entry></body>";
    const std::vector<Finding> a = validate_str(doc);
    const std::vector<Finding> b = validate_str(doc);
    EXPECT_EQ(a, b);
    std::size_t first = a.size(), second = a.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].path.starts_with("/body[1]/entry[1]") && first == a.size()) first = i;
        if (a[i].path.starts_with("/body[1]/entry[2]") && second == a.size()) second = i;
    }
    EXPECT_LT(first, second);
}

TEST(ValidateTei, EmittedDocumentsAreErrorFree) {
    for (const fixtures::Fixture& fx : fixtures::corpus()) {
        for (GrammarStyle style : {GrammarStyle::GramGrp, GrammarStyle::FeatureStructure}) {
            SCOPED_TRACE(fx.name);
            TeiEmitOptions opts;
            opts.grammar_style = style;
            const std::vector<Finding> findings =
                validate_tei_document(emit_tei(fx.model, opts));
            EXPECT_FALSE(has_errors(findings));
        }
    }
}
