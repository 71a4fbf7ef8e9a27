#ifndef LEXICROSSWALK_CROSSWALK_HPP
#define LEXICROSSWALK_CROSSWALK_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexicrosswalk/fs_dialect.hpp"
#include "lexicrosswalk/legacy_lmf.hpp"
#include "lexicrosswalk/model.hpp"
#include "lexicrosswalk/tei_dialect.hpp"
#include "lexicrosswalk/xml.hpp"

// Orchestrates dialect-to-dialect conversion: every conversion passes through
// the canonical model (one model, n dialects), never XML to XML directly.

namespace lexicrosswalk {

enum class Dialect { LegacyLmf, Fs, Mixed, TeiDict };

inline const char* to_string(Dialect d) {
    switch (d) {
        case Dialect::LegacyLmf: return "legacy-lmf";
        case Dialect::Fs: return "fs";
        case Dialect::Mixed: return "mixed";
        case Dialect::TeiDict: return "tei";
    }
    return "?";
}

inline std::optional<Dialect> dialect_from_string(std::string_view s) {
    if (s == "legacy-lmf") return Dialect::LegacyLmf;
    if (s == "fs") return Dialect::Fs;
    if (s == "mixed") return Dialect::Mixed;
    if (s == "tei") return Dialect::TeiDict;
    return std::nullopt;
}

struct DialectOptions {
    LegacyDialectOptions legacy;
    FsDialectOptions fs;
    TeiEmitOptions tei;
    /// Extra namespace-to-prefix bindings applied on top of the dialect's
    /// defaults during serialization.
    std::map<std::string, std::string> prefix_overrides;
};

struct ConversionReport {
    Dialect input = Dialect::TeiDict;
    Dialect output = Dialect::TeiDict;
    std::vector<Finding> parse_findings;  // dialect findings plus model validation
    std::vector<std::string> emit_loss_notes;
    std::optional<std::string> unrepresentable;
    bool ok = false;
};

inline std::pair<LexicalResource, std::vector<Finding>> parse_dialect(const xml::Node& doc,
                                                                      Dialect dialect) {
    switch (dialect) {
        case Dialect::LegacyLmf: return parse_legacy_lmf(doc);
        case Dialect::Fs: return parse_fs(doc);
        case Dialect::Mixed: return parse_mixed(doc);
        case Dialect::TeiDict: return parse_tei(doc);
    }
    throw DialectError("unknown dialect");
}

inline xml::Node emit_dialect(const LexicalResource& r, Dialect dialect,
                              const DialectOptions& opts = {}) {
    switch (dialect) {
        case Dialect::LegacyLmf: return emit_legacy_lmf(r, opts.legacy);
        case Dialect::Fs: return emit_fs(r, opts.fs);
        case Dialect::Mixed: return emit_mixed(r, opts.fs);
        case Dialect::TeiDict: return emit_tei(r, opts.tei);
    }
    throw DialectError("unknown dialect");
}

/// Serialization prefixes matching each dialect's conventions: the TEI and
/// fs dialects bind TEI as the default namespace, the mixed dialect uses the
/// tei prefix on descriptors, the legacy dialect has no namespace of its own.
inline xml::SerializeOptions serialize_options_for(Dialect dialect) {
    xml::SerializeOptions opts;
    switch (dialect) {
        case Dialect::Fs:
        case Dialect::TeiDict:
            opts.prefixes = xml::default_prefixes();
            break;
        case Dialect::Mixed:
        case Dialect::LegacyLmf:
            opts.prefixes = {{std::string(xml::tei_ns), "tei"},
                             {std::string(xml::lmf_ns), "lmf"},
                             {std::string(xml::dcr_ns), "dcr"}};
            break;
    }
    return opts;
}

namespace detail {

class LossScanner {
public:
    LossScanner(Dialect target) : target_(target) {}

    std::vector<std::string> scan(const LexicalResource& r) {
        if (target_ == Dialect::Fs || target_ == Dialect::Mixed) return {};
        if (target_ == Dialect::TeiDict) {
            for (std::size_t li = 0; li < r.lexicons.size(); ++li) {
                const std::string lp = idx("", "lexicons", li);
                if (!r.lexicons[li].language.empty())
                    note(lp + ": lexicon language '" + r.lexicons[li].language +
                         "' has no carrier in a bare TEI fragment");
            }
            if (!r.global_info.empty())
                note("/globalInfo: resource-level descriptors have no TEI carrier");
            if (r.lexicons.size() > 1)
                note("/lexicons: lexicon boundaries are flattened into one entry sequence");
            for (std::size_t li = 0; li < r.lexicons.size(); ++li)
                for (std::size_t ei = 0; ei < r.lexicons[li].entries.size(); ++ei)
                    tei_entry(r.lexicons[li].entries[ei],
                              idx(idx("", "lexicons", li), "entries", ei));
            return std::move(notes_);
        }
        // Legacy target.
        for (std::size_t li = 0; li < r.lexicons.size(); ++li)
            for (std::size_t ei = 0; ei < r.lexicons[li].entries.size(); ++ei) {
                const std::string ep = idx(idx("", "lexicons", li), "entries", ei);
                for (std::size_t si = 0; si < r.lexicons[li].entries[ei].senses.size(); ++si)
                    legacy_sense(r.lexicons[li].entries[ei].senses[si],
                                 idx(ep, "senses", si));
            }
        return std::move(notes_);
    }

private:
    Dialect target_;
    std::vector<std::string> notes_;

    static std::string idx(const std::string& base, std::string_view field, std::size_t i) {
        return base + "/" + std::string(field) + "[" + std::to_string(i + 1) + "]";
    }

    void note(std::string msg) { notes_.push_back(std::move(msg)); }

    void tei_entry(const LexicalEntry& e, const std::string& path) {
        if (e.lemma) {
            for (const Feature& f : e.entry_grammar)
                if (f.category.name != "partOfSpeech")
                    note(path + ": entry-level feature '" + f.category.name +
                         "' relocates into the lemma form and re-parses at form level");
            for (const Feature& f : e.lemma->grammar)
                if (f.category.name == "partOfSpeech")
                    note(path + "/lemma: partOfSpeech on the lemma form re-parses at entry "
                                "level");
        }
    }

    void legacy_sense(const Sense& s, const std::string& path) {
        for (std::size_t i = 0; i < s.definitions.size(); ++i)
            if (!s.definitions[i].spans.empty())
                note(idx(path, "definitions", i) +
                     ": inline annotations have no legacy carrier");
        if (!s.glosses.empty())
            note(path + "/glosses: sense glosses have no legacy carrier");
        if (!s.external_refs.empty())
            note(path + "/externalRefs: external references have no legacy carrier");
        for (std::size_t bi = 0; bi < s.syntactic_behaviours.size(); ++bi) {
            const SyntacticBehaviour& b = s.syntactic_behaviours[bi];
            for (const SubcategorizationFrame& fr : b.frames)
                for (const SyntacticArgument& a : fr.arguments)
                    if (!a.collocates.empty() || !a.glosses.empty() || a.semantic_ref)
                        note(idx(path, "syntacticBehaviours", bi) +
                             ": argument collocates, glosses and semantic references have "
                             "no legacy carrier");
        }
        for (std::size_t i = 0; i < s.subsenses.size(); ++i)
            legacy_sense(s.subsenses[i], idx(path, "subsenses", i));
    }
};

}  // namespace detail

/// Enumerates model content the target dialect cannot carry (re-parsing the
/// emission would not reproduce the model). Fatal cases (nested quotations
/// into legacy) surface as UnrepresentableError at emission, not here.
inline std::vector<std::string> loss_notes(const LexicalResource& r, Dialect target) {
    return detail::LossScanner(target).scan(r);
}

/// Parses `bytes` as the from-dialect, validates the model, emits it as the
/// to-dialect and serializes deterministically. Identity conversions still
/// normalize through the model. XML and dialect errors propagate; an
/// unrepresentable emission is reported, not thrown.
inline std::pair<std::string, ConversionReport> convert(std::string_view bytes, Dialect from,
                                                        Dialect to,
                                                        const DialectOptions& opts = {}) {
    ConversionReport report;
    report.input = from;
    report.output = to;

    xml::Node doc = xml::parse_xml(bytes);
    auto [model, findings] = parse_dialect(doc, from);
    report.parse_findings = std::move(findings);
    for (Finding& f : validate_model(model)) report.parse_findings.push_back(std::move(f));
    report.emit_loss_notes = loss_notes(model, to);

    std::string out;
    try {
        xml::Node emitted = emit_dialect(model, to, opts);
        xml::SerializeOptions ser = serialize_options_for(to);
        for (const auto& [uri, prefix] : opts.prefix_overrides) ser.prefixes[uri] = prefix;
        out = xml::serialize_xml(emitted, ser);
    } catch (const UnrepresentableError& e) {
        report.unrepresentable = e.what();
    }
    report.ok = !has_errors(report.parse_findings) && !report.unrepresentable;
    return {std::move(out), std::move(report)};
}

struct RoundtripResult {
    bool ok = false;
    /// First structural divergence (model path) or the blocking error.
    std::optional<std::string> divergence;
};

/// Checks that the via-dialect preserves the model of `bytes`: the document
/// is parsed, pushed through `via` and back, and the two models compared.
/// Emissions run with dcr attributes enabled so registry ids survive.
inline RoundtripResult roundtrip_check(std::string_view bytes, Dialect from, Dialect via) {
    DialectOptions opts;
    opts.legacy.emit_dcr_attrs = true;
    opts.fs.emit_dcr_attrs = true;
    opts.tei.emit_dcr_attrs = true;

    xml::Node doc = xml::parse_xml(bytes);
    LexicalResource original = parse_dialect(doc, from).first;
    try {
        const std::string via_bytes =
            xml::serialize_xml(emit_dialect(original, via, opts), serialize_options_for(via));
        LexicalResource via_model = parse_dialect(xml::parse_xml(via_bytes), via).first;
        const std::string back_bytes =
            xml::serialize_xml(emit_dialect(via_model, from, opts), serialize_options_for(from));
        LexicalResource back = parse_dialect(xml::parse_xml(back_bytes), from).first;
        if (auto diff = structural_diff(original, back)) return {false, diff};
        return {true, std::nullopt};
    } catch (const UnrepresentableError& e) {
        return {false, std::string(e.what())};
    }
}

}  // namespace lexicrosswalk

#endif  // LEXICROSSWALK_CROSSWALK_HPP
