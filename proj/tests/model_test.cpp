#include <gtest/gtest.h>

#include "lexicrosswalk/model.hpp"
#include "support/fixtures.hpp"

using namespace lexicrosswalk;

namespace {

bool has_rule(const std::vector<Finding>& fs, std::string_view rule) {
    for (const Finding& f : fs)
        if (f.rule_id == rule) return true;
    return false;
}

const Finding* find_rule(const std::vector<Finding>& fs, std::string_view rule) {
    for (const Finding& f : fs)
        if (f.rule_id == rule) return &f;
    return nullptr;
}

}  // namespace

TEST(ValidateModel, ClergymanIsValid) {
    EXPECT_TRUE(validate_model(fixtures::clergyman_mixed_variant()).empty());
    EXPECT_TRUE(validate_model(fixtures::clergyman_fs_variant()).empty());
}

TEST(ValidateModel, LemmaOnlyEntryIsValid) {
    LexicalEntry e;
    e.lemma = fixtures::form(FormRole::lemma(), {fixtures::rep("alone")});
    LexicalResource r;
    r.lexicons.push_back({"en", {e}});
    EXPECT_TRUE(validate_model(r).empty());
}

TEST(ValidateModel, MissingLemmaIsFlaggedAtEntryPath) {
    const std::vector<Finding> findings = validate_model(fixtures::lemmaless());
    const Finding* f = find_rule(findings, "M-LEMMA-MISSING");
    ASSERT_NE(f, nullptr);
    EXPECT_EQ(f->severity, Severity::Warning);
    EXPECT_EQ(f->path, "/lexicons[1]/entries[1]");
}

TEST(ValidateModel, EmptyFormAndWrittenForm) {
    LexicalEntry e;
    Form empty_form;
    empty_form.role = FormRole::lemma();
    e.lemma = empty_form;
    Form blank = fixtures::form(FormRole::word_form(), {fixtures::rep("")});
    e.other_forms = {blank};
    LexicalResource r;
    r.lexicons.push_back({"en", {e}});
    const std::vector<Finding> findings = validate_model(r);
    EXPECT_TRUE(has_rule(findings, "M-EMPTY-FORM"));
    EXPECT_TRUE(has_rule(findings, "M-EMPTY-WRITTEN-FORM"));
    EXPECT_TRUE(has_errors(findings));
}

TEST(ValidateModel, LemmaRoleInOtherFormsIsError) {
    LexicalEntry e;
    e.other_forms = {fixtures::form(FormRole::lemma(), {fixtures::rep("dup")})};
    LexicalResource r;
    r.lexicons.push_back({"en", {e}});
    EXPECT_TRUE(has_rule(validate_model(r), "M-LEMMA-IN-OTHER-FORMS"));
}

TEST(ValidateModel, SpanInvariants) {
    AnnotatedText bad_range("short");
    SpanAnnotation s;
    s.start = 2;
    s.end = 99;
    s.kind = "hi";
    bad_range.spans = {s};

    AnnotatedText overlap("abcdefgh");
    SpanAnnotation a{0, 4, "x", {}};
    SpanAnnotation b{2, 6, "y", {}};
    overlap.spans = {a, b};

    AnnotatedText nested("abcdefgh");
    SpanAnnotation outer{0, 6, "x", {}};
    SpanAnnotation inner{2, 4, "y", {}};
    nested.spans = {outer, inner};

    Sense sense;
    sense.definitions = {bad_range, overlap, nested};
    LexicalEntry e;
    e.lemma = fixtures::form(FormRole::lemma(), {fixtures::rep("w")});
    e.senses = {sense};
    LexicalResource r;
    r.lexicons.push_back({"en", {e}});

    const std::vector<Finding> findings = validate_model(r);
    EXPECT_TRUE(has_rule(findings, "M-SPAN-RANGE"));
    EXPECT_TRUE(has_rule(findings, "M-SPAN-OVERLAP"));
    int span_findings = 0;
    for (const Finding& f : findings)
        if (f.rule_id.starts_with("M-SPAN")) ++span_findings;
    EXPECT_EQ(span_findings, 2) << "strict nesting must not be flagged";
}

TEST(ValidateModel, SpanOffsetsCountCodePoints) {
    // 8 code points, many more bytes.
    AnnotatedText t("héllo ça");
    SpanAnnotation s{6, 8, "hi", {}};
    t.spans = {s};
    Sense sense;
    sense.definitions = {t};
    LexicalEntry e;
    e.lemma = fixtures::form(FormRole::lemma(), {fixtures::rep("w")});
    e.senses = {sense};
    LexicalResource r;
    r.lexicons.push_back({"en", {e}});
    EXPECT_FALSE(has_rule(validate_model(r), "M-SPAN-RANGE"));
}

TEST(ValidateModel, SenseDepthLimit) {
    Sense deep;
    for (int i = 0; i < 9; ++i) {
        Sense parent;
        parent.subsenses = {deep};
        deep = parent;
    }
    LexicalEntry e;
    e.lemma = fixtures::form(FormRole::lemma(), {fixtures::rep("w")});
    e.senses = {deep};
    LexicalResource r;
    r.lexicons.push_back({"en", {e}});
    EXPECT_TRUE(has_rule(validate_model(r), "M-SENSE-DEPTH"));

    ValidateOptions roomy;
    roomy.max_sense_depth = 20;
    EXPECT_FALSE(has_rule(validate_model(r, roomy), "M-SENSE-DEPTH"));
}

TEST(ValidateModel, EmptySyntaxPartsAreErrors) {
    Sense s;
    SyntacticBehaviour empty_behaviour;
    SyntacticBehaviour empty_frame;
    empty_frame.frames = {SubcategorizationFrame{}};
    s.syntactic_behaviours = {empty_behaviour, empty_frame};
    LexicalEntry e;
    e.lemma = fixtures::form(FormRole::lemma(), {fixtures::rep("w")});
    e.senses = {s};
    LexicalResource r;
    r.lexicons.push_back({"en", {e}});
    const std::vector<Finding> findings = validate_model(r);
    EXPECT_TRUE(has_rule(findings, "M-EMPTY-BEHAVIOUR"));
    EXPECT_TRUE(has_rule(findings, "M-EMPTY-FRAME"));
}

TEST(ValidateModel, CorpusHasNoErrorSeverityFindings) {
    for (const fixtures::Fixture& fx : fixtures::corpus()) {
        SCOPED_TRACE(fx.name);
        EXPECT_FALSE(has_errors(validate_model(fx.model)));
    }
}

TEST(EqualStructural, Reflexive) {
    for (const fixtures::Fixture& fx : fixtures::corpus()) {
        SCOPED_TRACE(fx.name);
        EXPECT_TRUE(equal_structural(fx.model, fx.model));
    }
}

TEST(EqualStructural, OrderSensitive) {
    LexicalResource a = fixtures::clergyman_mixed_variant();
    LexicalResource b = a;
    std::swap(b.lexicons[0].entries[0].other_forms[0], b.lexicons[0].entries[0].other_forms[1]);
    EXPECT_FALSE(equal_structural(a, b));
    const auto diff = structural_diff(a, b);
    ASSERT_TRUE(diff.has_value());
    EXPECT_NE(diff->find("otherForms"), std::string::npos);
}

TEST(EqualStructural, OptionalPresenceMatters) {
    LexicalResource a = fixtures::quote_horrifier();
    LexicalResource b = a;
    b.lexicons[0].entries[0].senses[0].quotations[0].quote.lang_tag.reset();
    EXPECT_FALSE(equal_structural(a, b));
}

TEST(StructuralDiff, NamesTheFirstDivergence) {
    LexicalResource a = fixtures::corenet_syntax();
    LexicalResource b = a;
    b.lexicons[0]
        .entries[0]
        .senses[0]
        .syntactic_behaviours[0]
        .frames[0]
        .arguments[0]
        .function = "N2";
    const auto diff = structural_diff(a, b);
    ASSERT_TRUE(diff.has_value());
    EXPECT_EQ(*diff,
              "/lexicons[1]/entries[1]/senses[1]/syntacticBehaviours[1]/frames[1]/"
              "arguments[1]/function");
}
