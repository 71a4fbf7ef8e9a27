#ifndef LEXICROSSWALK_TESTS_FIXTURES_HPP
#define LEXICROSSWALK_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "lexicrosswalk/lexicrosswalk.hpp"

// The model fixture corpus. The clergyman entry exists in three variants
// because the published listings disagree on lexicon metadata (language code
// and global information) while sharing identical entry content; language
// codes are opaque here, so each variant is golden-checked against its own
// listing.

namespace fixtures {

using namespace lexicrosswalk;

inline Feature feat(std::string_view name, std::string_view value) {
    return Feature(name, value);
}

inline FormRepresentation rep(std::string_view written) {
    return {std::string(written), std::nullopt, std::nullopt};
}

inline FormRepresentation rep(std::string_view written, std::string_view lang,
                              std::string_view label) {
    return {std::string(written), std::string(lang), std::string(label)};
}

inline Form form(FormRole role, std::vector<FormRepresentation> reps,
                 std::vector<Feature> grammar = {}) {
    Form f;
    f.role = std::move(role);
    f.representations = std::move(reps);
    f.grammar = std::move(grammar);
    return f;
}

inline ExternalRef wordnet_ref(std::string_view idno, LocalizedText gloss) {
    ExternalRef r;
    r.scheme = "wordnet";
    r.idno = std::string(idno);
    r.gloss = std::move(gloss);
    return r;
}

inline std::size_t cp_index_of(const std::string& text, const std::string& needle) {
    const std::size_t byte = text.find(needle);
    return lexicrosswalk::detail::utf8_length(std::string_view(text).substr(0, byte));
}

inline LexicalEntry clergyman_entry() {
    LexicalEntry e;
    e.entry_grammar = {feat("partOfSpeech", "commonNoun")};
    e.lemma = form(FormRole::lemma(), {rep("clergyman")});
    e.other_forms = {
        form(FormRole::word_form(), {rep("clergyman")}, {feat("grammaticalNumber", "singular")}),
        form(FormRole::word_form(), {rep("clergymen")}, {feat("grammaticalNumber", "plural")}),
    };
    return e;
}

inline LexicalResource clergyman_fs_variant() {
    LexicalResource r;
    r.lexicons.push_back({"en", {clergyman_entry()}});
    return r;
}

inline LexicalResource clergyman_mixed_variant() {
    LexicalResource r;
    r.global_info = {feat("languageCoding", "ISO 639-3")};
    r.lexicons.push_back({"eng", {clergyman_entry()}});
    return r;
}

inline LexicalResource clergyman_tei_variant() {
    LexicalResource r;
    r.lexicons.push_back({"", {clergyman_entry()}});
    return r;
}

inline LexicalResource chida() {
    LexicalEntry e;
    e.other_forms = {form(FormRole::other(""),
                          {rep("치다", "ko-Hang", "standard"), rep("chida", "ko-Latn", "transliterated")})};
    LexicalResource r;
    r.lexicons.push_back({"", {e}});
    return r;
}

inline LexicalResource corenet_concept() {
    Sense sub1;
    sub1.label = "1";
    sub1.external_refs = {wordnet_ref("1221282691", LocalizedText("치기"))};
    Sense sub2;
    sub2.label = "2";
    sub2.external_refs = {wordnet_ref("1221282691", LocalizedText("치기"))};

    Sense top;
    top.label = "3";
    top.grammar = {feat("subcategorization", "vt")};
    top.subsenses = {sub1, sub2};

    LexicalEntry e;
    e.other_forms = {
        form(FormRole::other(""), {{"치다", std::nullopt, std::string("한글")},
                                   {"chida", std::nullopt, std::string("Romanization")}})};
    e.senses = {top};
    LexicalResource r;
    r.lexicons.push_back({"", {e}});
    return r;
}

inline LexicalResource corenet_syntax() {
    SyntacticArgument arg;
    arg.function = "N1";
    arg.collocates = {{"이/가", "particle", std::string("ko")}};
    arg.glosses = {LocalizedText("눈보라", "ko")};
    arg.semantic_ref = wordnet_ref("12231214", LocalizedText("눈", "ko"));

    SubcategorizationFrame frame;
    frame.arguments = {arg};
    SyntacticBehaviour behaviour;
    behaviour.frames = {frame};

    Sense s;
    s.glosses = {LocalizedText("ふぶく", "ja")};
    s.syntactic_behaviours = {behaviour};

    LexicalEntry e;
    e.senses = {s};
    LexicalResource r;
    r.lexicons.push_back({"", {e}});
    return r;
}

inline Quotation translation(std::string_view text, std::vector<Feature> refinements = {}) {
    Quotation q;
    q.kind = QuotationKind::translation();
    q.quote = LocalizedText(text, "fr");
    q.refinements = std::move(refinements);
    return q;
}

inline LexicalResource quote_horrifier() {
    Sense s;
    s.quotations = {translation("horrifier")};
    LexicalEntry e;
    e.lemma = form(FormRole::lemma(), {rep("horrify")});
    e.senses = {s};
    LexicalResource r;
    r.lexicons.push_back({"", {e}});
    return r;
}

inline LexicalResource quote_habilleur() {
    Sense s;
    s.quotations = {translation("habilleur", {feat("grammaticalGender", "m")})};
    LexicalEntry e;
    e.lemma = form(FormRole::lemma(), {rep("dresser")});
    e.senses = {s};
    LexicalResource r;
    r.lexicons.push_back({"", {e}});
    return r;
}

inline LexicalResource quote_horrified() {
    Quotation example;
    example.kind = QuotationKind::example();
    example.quote = LocalizedText("she was horrified at the expense.");
    example.sub_quotations = {translation("elle était horrifiée par la dépense.")};

    Sense s;
    s.quotations = {example};
    LexicalEntry e;
    e.lemma = form(FormRole::lemma(), {rep("horrify")});
    e.senses = {s};
    LexicalResource r;
    r.lexicons.push_back({"", {e}});
    return r;
}

inline LexicalResource dresser() {
    Sense theat;
    theat.label = "a";
    theat.grammar = {feat("usageDomain", "theatre")};
    theat.quotations = {translation("habilleur", {feat("grammaticalGender", "m")})};

    Sense tool;
    tool.label = "b";
    tool.quotations = {translation("raboteuse", {feat("grammaticalGender", "f"),
                                                 feat("usageDomain", "wood")})};

    LexicalEntry e;
    e.entry_grammar = {feat("partOfSpeech", "commonNoun")};
    e.lemma = form(FormRole::lemma(), {rep("dresser")});
    e.senses = {theat, tool};
    LexicalResource r;
    r.lexicons.push_back({"en", {e}});
    return r;
}

inline LexicalResource geogname_definition() {
    const std::string text =
        "Orchidée épiphyte, originaire d'Amérique tropicale, et dont l'espèce la plus "
        "connue est très recherchée pour l'élégance de ses fleurs mauves à grand labelle "
        "en cornet onduleux.";
    AnnotatedText def(text);
    SpanAnnotation span;
    span.start = cp_index_of(text, "Amérique tropicale");
    span.end = span.start + lexicrosswalk::detail::utf8_length("Amérique tropicale");
    span.kind = "geogName";
    def.spans = {span};

    Sense s;
    s.definitions = {def};
    LexicalEntry e;
    e.lemma = form(FormRole::lemma(), {rep("cattleya")});
    e.senses = {s};
    LexicalResource r;
    r.lexicons.push_back({"", {e}});
    return r;
}

inline LexicalResource valeur() {
    Quotation q;
    q.kind = QuotationKind::example();
    q.quote = LocalizedText("La valeur n'attend pas le nombre des années");
    q.source_ref = "Corneille";

    Sense s;
    s.label = "2";
    s.definitions = {AnnotatedText("Vaillance, bravoure")};
    s.quotations = {q};
    LexicalEntry e;
    e.entry_grammar = {feat("partOfSpeech", "commonNoun")};
    e.lemma = form(FormRole::lemma(), {rep("valeur")}, {feat("grammaticalGender", "f")});
    e.senses = {s};
    LexicalResource r;
    r.lexicons.push_back({"", {e}});
    return r;
}

inline LexicalResource registry_rich() {
    Feature pos("partOfSpeech", "commonNoun");
    pos.category.registry_id = "http://hdl.example.org/11459/DC-1345";
    pos.value_registry_id = "http://hdl.example.org/11459/DC-1256";

    LexicalEntry en_entry;
    en_entry.id = "E1";
    en_entry.entry_grammar = {pos};
    en_entry.lemma = form(FormRole::lemma(), {rep("book")});
    Sense s;
    s.label = "1";
    s.definitions = {AnnotatedText("a written work")};
    en_entry.senses = {s};

    LexicalEntry fr_entry;
    fr_entry.id = "E2";
    fr_entry.lemma = form(FormRole::lemma(), {rep("livre")});

    LexicalResource r;
    r.global_info = {feat("languageCoding", "ISO 639-3")};
    r.lexicons.push_back({"eng", {en_entry}});
    r.lexicons.push_back({"fra", {fr_entry}});
    return r;
}

inline LexicalResource minimal_lexicon() {
    LexicalResource r;
    r.lexicons.push_back({"en", {}});
    return r;
}

inline LexicalResource lemmaless() {
    LexicalEntry e;
    e.other_forms = {form(FormRole::word_form(), {rep("clergymen")},
                          {feat("grammaticalNumber", "plural")})};
    LexicalResource r;
    r.lexicons.push_back({"", {e}});
    return r;
}

inline LexicalResource deep_subsenses() {
    Sense leaf;
    leaf.label = "②";
    leaf.definitions = {AnnotatedText("to strike with a tool")};
    Sense mid;
    mid.label = "①";
    mid.subsenses = {leaf};
    Sense top;
    top.label = "3";
    top.subsenses = {mid};

    LexicalEntry e;
    e.lemma = form(FormRole::lemma(), {rep("치다")});
    e.senses = {top};
    LexicalResource r;
    r.lexicons.push_back({"", {e}});
    return r;
}

inline LexicalResource full_form_verb() {
    LexicalEntry e;
    e.entry_grammar = {feat("partOfSpeech", "verb")};
    e.lemma = form(FormRole::lemma(), {rep("aller")});
    e.other_forms = {
        form(FormRole::word_form(), {rep("vais")},
             {feat("grammaticalNumber", "singular"), feat("person", "first"),
              feat("tense", "present"), feat("mood", "indicative")}),
        form(FormRole::word_form(), {rep("allons")},
             {feat("grammaticalNumber", "plural"), feat("person", "first"),
              feat("tense", "present"), feat("mood", "indicative")}),
        form(FormRole::other("variant"), {rep("aller")}, {feat("register", "standard")}),
    };
    Sense s;
    s.definitions = {AnnotatedText("to go")};
    e.senses = {s};
    LexicalResource r;
    r.lexicons.push_back({"", {e}});
    return r;
}

struct Fixture {
    std::string name;
    LexicalResource model;
    /// Dialects for which parse(emit(model)) must reproduce the model.
    std::vector<Dialect> roundtrip_dialects;
    /// Dialects whose emission must raise UnrepresentableError.
    std::vector<Dialect> fatal_dialects;
};

inline const std::vector<Fixture>& corpus() {
    using enum Dialect;
    static const std::vector<Fixture> all = {
        {"clergyman-fs", clergyman_fs_variant(), {LegacyLmf, Fs, Mixed}, {}},
        {"clergyman-mixed", clergyman_mixed_variant(), {LegacyLmf, Fs, Mixed}, {}},
        {"clergyman-tei", clergyman_tei_variant(), {LegacyLmf, Fs, Mixed, TeiDict}, {}},
        {"chida", chida(), {LegacyLmf, Fs, Mixed, TeiDict}, {}},
        {"corenet-concept", corenet_concept(), {Fs, Mixed, TeiDict}, {}},
        {"corenet-syntax", corenet_syntax(), {Fs, Mixed, TeiDict}, {}},
        {"quote-horrifier", quote_horrifier(), {LegacyLmf, Fs, Mixed, TeiDict}, {}},
        {"quote-habilleur", quote_habilleur(), {LegacyLmf, Fs, Mixed, TeiDict}, {}},
        {"quote-horrified", quote_horrified(), {Fs, Mixed, TeiDict}, {LegacyLmf}},
        {"dresser", dresser(), {LegacyLmf, Fs, Mixed}, {}},
        {"geogname-definition", geogname_definition(), {Fs, Mixed, TeiDict}, {}},
        {"valeur", valeur(), {LegacyLmf, Fs, Mixed, TeiDict}, {}},
        {"registry-rich", registry_rich(), {LegacyLmf, Fs, Mixed}, {}},
        {"minimal-lexicon", minimal_lexicon(), {LegacyLmf, Fs, Mixed}, {}},
        {"lemmaless", lemmaless(), {LegacyLmf, Fs, Mixed, TeiDict}, {}},
        {"deep-subsenses", deep_subsenses(), {LegacyLmf, Fs, Mixed, TeiDict}, {}},
        {"full-form-verb", full_form_verb(), {LegacyLmf, Fs, Mixed, TeiDict}, {}},
    };
    return all;
}

}  // namespace fixtures

#endif  // LEXICROSSWALK_TESTS_FIXTURES_HPP
