#ifndef LEXICROSSWALK_MODEL_HPP
#define LEXICROSSWALK_MODEL_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexicrosswalk/detail/unicode.hpp"
#include "lexicrosswalk/diagnostics.hpp"

namespace lexicrosswalk {

// ---------------------------------------------------------------------------
// Canonical, dialect-independent lexicon model. All values are immutable
// after construction by convention; everything compares structurally.
// ---------------------------------------------------------------------------

/// Reference to a data category: a token name plus an optional opaque
/// registry PID.
struct DataCategoryRef {
    std::string name;
    std::optional<std::string> registry_id;

    DataCategoryRef() = default;
    DataCategoryRef(std::string_view name_) : name(name_) {}
    DataCategoryRef(std::string_view name_, std::string registry)
        : name(name_), registry_id(std::move(registry)) {}

    friend bool operator==(const DataCategoryRef&, const DataCategoryRef&) = default;
};

/// Elementary descriptor: a category with a symbolic (or free-text) value.
struct Feature {
    DataCategoryRef category;
    std::string value;
    std::optional<std::string> value_registry_id;

    Feature() = default;
    Feature(std::string_view name, std::string_view value_)
        : category(name), value(value_) {}
    Feature(DataCategoryRef category_, std::string value_,
            std::optional<std::string> value_registry = std::nullopt)
        : category(std::move(category_)),
          value(std::move(value_)),
          value_registry_id(std::move(value_registry)) {}

    friend bool operator==(const Feature&, const Feature&) = default;
};

/// One written view of a form (per script, transliteration, ...).
struct FormRepresentation {
    std::string written_form;
    std::optional<std::string> lang_tag;
    std::optional<std::string> orth_label;

    friend bool operator==(const FormRepresentation&, const FormRepresentation&) = default;
};

struct FormRole {
    enum class Kind { Lemma, WordForm, Other };

    Kind kind = Kind::WordForm;
    std::string label;  // meaningful for Other only

    static FormRole lemma() { return {Kind::Lemma, {}}; }
    static FormRole word_form() { return {Kind::WordForm, {}}; }
    static FormRole other(std::string label) { return {Kind::Other, std::move(label)}; }

    bool is_lemma() const { return kind == Kind::Lemma; }

    friend bool operator==(const FormRole&, const FormRole&) = default;
};

/// A morphological object of an entry with one or more representations and
/// attached grammatical features.
struct Form {
    FormRole role;
    std::vector<FormRepresentation> representations;
    std::vector<Feature> grammar;

    friend bool operator==(const Form&, const Form&) = default;
};

struct LocalizedText {
    std::string text;
    std::optional<std::string> lang_tag;

    LocalizedText() = default;
    LocalizedText(std::string_view text_) : text(text_) {}
    LocalizedText(std::string_view text_, std::string lang)
        : text(text_), lang_tag(std::move(lang)) {}

    friend bool operator==(const LocalizedText&, const LocalizedText&) = default;
};

struct ExternalRef {
    std::string scheme;
    std::string idno;
    std::optional<LocalizedText> gloss;

    friend bool operator==(const ExternalRef&, const ExternalRef&) = default;
};

/// Inline annotation over [start, end) in code points.
struct SpanAnnotation {
    std::size_t start = 0;
    std::size_t end = 0;
    std::string kind;
    std::map<std::string, std::string> attrs;

    friend bool operator==(const SpanAnnotation&, const SpanAnnotation&) = default;
};

/// Text with inline annotations; spans are non-overlapping or strictly nested.
struct AnnotatedText {
    std::string text;
    std::vector<SpanAnnotation> spans;

    AnnotatedText() = default;
    AnnotatedText(std::string_view text_) : text(text_) {}

    friend bool operator==(const AnnotatedText&, const AnnotatedText&) = default;
};

struct QuotationKind {
    enum class Kind { Example, Translation, Other };

    Kind kind = Kind::Example;
    std::string label;  // Other only

    static QuotationKind example() { return {Kind::Example, {}}; }
    static QuotationKind translation() { return {Kind::Translation, {}}; }
    static QuotationKind other(std::string label) { return {Kind::Other, std::move(label)}; }

    friend bool operator==(const QuotationKind&, const QuotationKind&) = default;
};

/// Quote plus refinements, recursively nestable (translations of examples).
struct Quotation {
    QuotationKind kind;
    LocalizedText quote;
    std::vector<Feature> refinements;
    std::vector<Quotation> sub_quotations;
    std::optional<std::string> source_ref;

    friend bool operator==(const Quotation&, const Quotation&) = default;
};

struct Collocate {
    std::string text;
    std::string kind;
    std::optional<std::string> lang_tag;

    friend bool operator==(const Collocate&, const Collocate&) = default;
};

struct SyntacticArgument {
    std::string function;
    std::vector<Collocate> collocates;
    std::vector<LocalizedText> glosses;
    std::optional<ExternalRef> semantic_ref;

    friend bool operator==(const SyntacticArgument&, const SyntacticArgument&) = default;
};

struct SubcategorizationFrame {
    std::vector<SyntacticArgument> arguments;

    friend bool operator==(const SubcategorizationFrame&, const SubcategorizationFrame&) = default;
};

struct SyntacticBehaviour {
    std::vector<SubcategorizationFrame> frames;

    friend bool operator==(const SyntacticBehaviour&, const SyntacticBehaviour&) = default;
};

/// Aggregates everything attached to one sense. Labels are stored verbatim
/// (including non-ASCII enumeration such as circled digits).
struct Sense {
    std::optional<std::string> label;
    std::vector<Feature> grammar;
    std::vector<AnnotatedText> definitions;
    std::vector<LocalizedText> glosses;
    std::vector<ExternalRef> external_refs;
    std::vector<Quotation> quotations;
    std::vector<Sense> subsenses;
    std::vector<SyntacticBehaviour> syntactic_behaviours;

    friend bool operator==(const Sense&, const Sense&) = default;
};

struct LexicalEntry {
    std::optional<std::string> id;
    std::vector<Feature> entry_grammar;  // entry-level descriptors (partOfSpeech, ...)
    std::optional<Form> lemma;
    std::vector<Form> other_forms;  // roles WordForm / Other only
    std::vector<Sense> senses;

    friend bool operator==(const LexicalEntry&, const LexicalEntry&) = default;
};

struct Lexicon {
    std::string language;
    std::vector<LexicalEntry> entries;

    friend bool operator==(const Lexicon&, const Lexicon&) = default;
};

struct LexicalResource {
    std::vector<Feature> global_info;
    std::vector<Lexicon> lexicons;

    friend bool operator==(const LexicalResource&, const LexicalResource&) = default;
};

// ---------------------------------------------------------------------------
// Structural equality and diff
// ---------------------------------------------------------------------------

/// True iff the two resources are identical trees: same field values, same
/// list orders; optional fields compare by presence and value.
inline bool equal_structural(const LexicalResource& a, const LexicalResource& b) {
    return a == b;
}

namespace detail {

inline std::string idx(const std::string& base, std::string_view field, std::size_t i) {
    return base + "/" + std::string(field) + "[" + std::to_string(i + 1) + "]";
}

template <typename T>
std::optional<std::string> diff_value(const T& a, const T& b, const std::string& path);

template <typename T>
std::optional<std::string> diff_vector(const std::vector<T>& a, const std::vector<T>& b,
                                       const std::string& path, std::string_view field) {
    if (a.size() != b.size())
        return path + "/" + std::string(field) + " (length " + std::to_string(a.size()) +
               " vs " + std::to_string(b.size()) + ")";
    for (std::size_t i = 0; i < a.size(); ++i)
        if (auto d = diff_value(a[i], b[i], idx(path, field, i))) return d;
    return std::nullopt;
}

template <typename T>
std::optional<std::string> diff_optional(const std::optional<T>& a, const std::optional<T>& b,
                                         const std::string& path, std::string_view field) {
    if (a.has_value() != b.has_value())
        return path + "/" + std::string(field) + " (presence differs)";
    if (!a) return std::nullopt;
    return diff_value(*a, *b, path + "/" + std::string(field));
}

template <typename T>
std::optional<std::string> diff_scalar(const T& a, const T& b, const std::string& path) {
    if (a == b) return std::nullopt;
    return path;
}

template <typename T>
std::optional<std::string> diff_value(const T& a, const T& b, const std::string& path) {
    if constexpr (std::is_same_v<T, std::string>) {
        return diff_scalar(a, b, path);
    } else if constexpr (std::is_same_v<T, Feature> || std::is_same_v<T, FormRepresentation> ||
                  std::is_same_v<T, LocalizedText> || std::is_same_v<T, SpanAnnotation> ||
                  std::is_same_v<T, Collocate> || std::is_same_v<T, ExternalRef>) {
        return diff_scalar(a, b, path);
    } else if constexpr (std::is_same_v<T, AnnotatedText>) {
        if (a.text != b.text) return path + "/text";
        return diff_vector(a.spans, b.spans, path, "spans");
    } else if constexpr (std::is_same_v<T, Form>) {
        if (a.role != b.role) return path + "/role";
        if (auto d = diff_vector(a.representations, b.representations, path, "representations"))
            return d;
        return diff_vector(a.grammar, b.grammar, path, "grammar");
    } else if constexpr (std::is_same_v<T, Quotation>) {
        if (a.kind != b.kind) return path + "/kind";
        if (a.quote != b.quote) return path + "/quote";
        if (auto d = diff_vector(a.refinements, b.refinements, path, "refinements")) return d;
        if (auto d = diff_optional(a.source_ref, b.source_ref, path, "sourceRef")) return d;
        return diff_vector(a.sub_quotations, b.sub_quotations, path, "subQuotations");
    } else if constexpr (std::is_same_v<T, SyntacticArgument>) {
        if (a.function != b.function) return path + "/function";
        if (auto d = diff_vector(a.collocates, b.collocates, path, "collocates")) return d;
        if (auto d = diff_vector(a.glosses, b.glosses, path, "glosses")) return d;
        return diff_optional(a.semantic_ref, b.semantic_ref, path, "semanticRef");
    } else if constexpr (std::is_same_v<T, SubcategorizationFrame>) {
        return diff_vector(a.arguments, b.arguments, path, "arguments");
    } else if constexpr (std::is_same_v<T, SyntacticBehaviour>) {
        return diff_vector(a.frames, b.frames, path, "frames");
    } else if constexpr (std::is_same_v<T, Sense>) {
        if (auto d = diff_optional(a.label, b.label, path, "label")) return d;
        if (auto d = diff_vector(a.grammar, b.grammar, path, "grammar")) return d;
        if (auto d = diff_vector(a.definitions, b.definitions, path, "definitions")) return d;
        if (auto d = diff_vector(a.glosses, b.glosses, path, "glosses")) return d;
        if (auto d = diff_vector(a.external_refs, b.external_refs, path, "externalRefs")) return d;
        if (auto d = diff_vector(a.quotations, b.quotations, path, "quotations")) return d;
        if (auto d = diff_vector(a.subsenses, b.subsenses, path, "subsenses")) return d;
        return diff_vector(a.syntactic_behaviours, b.syntactic_behaviours, path,
                           "syntacticBehaviours");
    } else if constexpr (std::is_same_v<T, LexicalEntry>) {
        if (auto d = diff_optional(a.id, b.id, path, "id")) return d;
        if (auto d = diff_vector(a.entry_grammar, b.entry_grammar, path, "entryGrammar")) return d;
        if (auto d = diff_optional(a.lemma, b.lemma, path, "lemma")) return d;
        if (auto d = diff_vector(a.other_forms, b.other_forms, path, "otherForms")) return d;
        return diff_vector(a.senses, b.senses, path, "senses");
    } else if constexpr (std::is_same_v<T, Lexicon>) {
        if (a.language != b.language)
            return path + "/language ('" + a.language + "' vs '" + b.language + "')";
        return diff_vector(a.entries, b.entries, path, "entries");
    } else {
        static_assert(std::is_same_v<T, LexicalResource>);
        if (auto d = diff_vector(a.global_info, b.global_info, path, "globalInfo")) return d;
        return diff_vector(a.lexicons, b.lexicons, path, "lexicons");
    }
}

}  // namespace detail

/// Path of the first structural divergence, or nullopt when equal.
inline std::optional<std::string> structural_diff(const LexicalResource& a,
                                                  const LexicalResource& b) {
    return detail::diff_value(a, b, "");
}

// ---------------------------------------------------------------------------
// Model validation
// ---------------------------------------------------------------------------

struct ValidateOptions {
    std::size_t max_sense_depth = 8;
};

namespace detail {

class ModelValidator {
public:
    explicit ModelValidator(const ValidateOptions& opts) : opts_(opts) {}

    std::vector<Finding> run(const LexicalResource& r) {
        if (r.lexicons.empty()) error("M-NO-LEXICON", "", "resource has no lexicon");
        features(r.global_info, "/globalInfo");
        for (std::size_t i = 0; i < r.lexicons.size(); ++i)
            lexicon(r.lexicons[i], idx("", "lexicons", i));
        return std::move(findings_);
    }

private:
    const ValidateOptions& opts_;
    std::vector<Finding> findings_;

    void add(std::string rule, Severity sev, const std::string& path, std::string msg) {
        findings_.push_back({std::move(rule), sev, path.empty() ? "/" : path, std::move(msg)});
    }
    void error(std::string rule, const std::string& path, std::string msg) {
        add(std::move(rule), Severity::Error, path, std::move(msg));
    }
    void warn(std::string rule, const std::string& path, std::string msg) {
        add(std::move(rule), Severity::Warning, path, std::move(msg));
    }

    static bool has_ws(std::string_view s) {
        return s.find_first_of(" \t\n\r") != std::string_view::npos;
    }

    void feature(const Feature& f, const std::string& path) {
        if (f.category.name.empty() || has_ws(f.category.name))
            error("M-CATEGORY-NAME", path,
                  "category name must be a non-empty whitespace-free token");
        if (f.value.empty())
            error("M-EMPTY-FEATURE-VALUE", path,
                  "feature '" + f.category.name + "' has an empty value");
    }

    void features(const std::vector<Feature>& fs, const std::string& path) {
        for (std::size_t i = 0; i < fs.size(); ++i) feature(fs[i], idx(path, "features", i));
    }

    void localized(const LocalizedText& t, const std::string& path) {
        if (t.text.empty()) error("M-EMPTY-TEXT", path, "text must be non-empty");
    }

    void lexicon(const Lexicon& lx, const std::string& path) {
        if (lx.language.empty())
            warn("M-NO-LANGUAGE", path, "lexicon has no language");
        for (std::size_t i = 0; i < lx.entries.size(); ++i)
            entry(lx.entries[i], idx(path, "entries", i));
    }

    void entry(const LexicalEntry& e, const std::string& path) {
        features(e.entry_grammar, path + "/entryGrammar");
        if (e.lemma) {
            if (!e.lemma->role.is_lemma())
                error("M-LEMMA-IN-OTHER-FORMS", path + "/lemma",
                      "the lemma slot must hold a Lemma-role form");
            form(*e.lemma, path + "/lemma");
        } else {
            warn("M-LEMMA-MISSING", path, "entry has no lemma form");
        }
        for (std::size_t i = 0; i < e.other_forms.size(); ++i) {
            const std::string fp = idx(path, "otherForms", i);
            if (e.other_forms[i].role.is_lemma())
                error("M-LEMMA-IN-OTHER-FORMS", fp,
                      "at most one Lemma form is allowed per entry");
            form(e.other_forms[i], fp);
        }
        for (std::size_t i = 0; i < e.senses.size(); ++i)
            sense(e.senses[i], idx(path, "senses", i), 1);
    }

    void form(const Form& f, const std::string& path) {
        if (f.representations.empty())
            error("M-EMPTY-FORM", path, "form has no representation");
        for (std::size_t i = 0; i < f.representations.size(); ++i) {
            if (f.representations[i].written_form.empty())
                error("M-EMPTY-WRITTEN-FORM", idx(path, "representations", i),
                      "writtenForm must be non-empty");
        }
        features(f.grammar, path + "/grammar");
    }

    void annotated(const AnnotatedText& t, const std::string& path) {
        if (t.text.empty()) error("M-EMPTY-TEXT", path, "definition text must be non-empty");
        const std::size_t len = lexicrosswalk::detail::utf8_length(t.text);
        for (std::size_t i = 0; i < t.spans.size(); ++i) {
            const SpanAnnotation& s = t.spans[i];
            const std::string sp = idx(path, "spans", i);
            if (!(s.start < s.end) || s.end > len)
                error("M-SPAN-RANGE", sp,
                      "span [" + std::to_string(s.start) + "," + std::to_string(s.end) +
                          ") out of range for text of length " + std::to_string(len));
            if (s.kind.empty() || has_ws(s.kind))
                error("M-CATEGORY-NAME", sp, "span kind must be a whitespace-free token");
        }
        for (std::size_t i = 0; i < t.spans.size(); ++i) {
            for (std::size_t j = i + 1; j < t.spans.size(); ++j) {
                const SpanAnnotation& a = t.spans[i];
                const SpanAnnotation& b = t.spans[j];
                const bool intersect = a.start < b.end && b.start < a.end;
                const bool a_in_b = b.start <= a.start && a.end <= b.end;
                const bool b_in_a = a.start <= b.start && b.end <= a.end;
                if (intersect && !a_in_b && !b_in_a)
                    error("M-SPAN-OVERLAP", idx(path, "spans", j),
                          "span partially overlaps an earlier span");
            }
        }
    }

    void quotation(const Quotation& q, const std::string& path) {
        localized(q.quote, path + "/quote");
        features(q.refinements, path + "/refinements");
        for (std::size_t i = 0; i < q.sub_quotations.size(); ++i)
            quotation(q.sub_quotations[i], idx(path, "subQuotations", i));
    }

    void behaviour(const SyntacticBehaviour& sb, const std::string& path) {
        if (sb.frames.empty()) error("M-EMPTY-BEHAVIOUR", path, "behaviour has no frame");
        for (std::size_t i = 0; i < sb.frames.size(); ++i) {
            const std::string fp = idx(path, "frames", i);
            const SubcategorizationFrame& fr = sb.frames[i];
            if (fr.arguments.empty()) error("M-EMPTY-FRAME", fp, "frame has no argument");
            for (std::size_t j = 0; j < fr.arguments.size(); ++j) {
                const std::string ap = idx(fp, "arguments", j);
                const SyntacticArgument& arg = fr.arguments[j];
                if (arg.function.empty())
                    error("M-EMPTY-FUNCTION", ap, "syntactic function must be non-empty");
                for (std::size_t k = 0; k < arg.glosses.size(); ++k)
                    localized(arg.glosses[k], idx(ap, "glosses", k));
                if (arg.semantic_ref) external_ref(*arg.semantic_ref, ap + "/semanticRef");
            }
        }
    }

    void external_ref(const ExternalRef& r, const std::string& path) {
        if (r.idno.empty()) error("M-EMPTY-IDNO", path, "external reference has no idno");
        if (r.gloss) localized(*r.gloss, path + "/gloss");
    }

    void sense(const Sense& s, const std::string& path, std::size_t depth) {
        if (depth > opts_.max_sense_depth) {
            error("M-SENSE-DEPTH", path,
                  "subsense nesting exceeds the configured maximum of " +
                      std::to_string(opts_.max_sense_depth));
            return;
        }
        features(s.grammar, path + "/grammar");
        for (std::size_t i = 0; i < s.definitions.size(); ++i)
            annotated(s.definitions[i], idx(path, "definitions", i));
        for (std::size_t i = 0; i < s.glosses.size(); ++i)
            localized(s.glosses[i], idx(path, "glosses", i));
        for (std::size_t i = 0; i < s.external_refs.size(); ++i)
            external_ref(s.external_refs[i], idx(path, "externalRefs", i));
        for (std::size_t i = 0; i < s.quotations.size(); ++i)
            quotation(s.quotations[i], idx(path, "quotations", i));
        for (std::size_t i = 0; i < s.subsenses.size(); ++i)
            sense(s.subsenses[i], idx(path, "subsenses", i), depth + 1);
        for (std::size_t i = 0; i < s.syntactic_behaviours.size(); ++i)
            behaviour(s.syntactic_behaviours[i], idx(path, "syntacticBehaviours", i));
    }
};

}  // namespace detail

/// Checks every model invariant and returns one finding per violation
/// (rule ids use the "M-" prefix). An empty list means model-valid.
inline std::vector<Finding> validate_model(const LexicalResource& resource,
                                           const ValidateOptions& opts = {}) {
    return detail::ModelValidator(opts).run(resource);
}

}  // namespace lexicrosswalk

#endif  // LEXICROSSWALK_MODEL_HPP
