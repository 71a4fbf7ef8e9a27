#ifndef LEXICROSSWALK_VALIDATOR_HPP
#define LEXICROSSWALK_VALIDATOR_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lexicrosswalk/detail/skeleton.hpp"
#include "lexicrosswalk/diagnostics.hpp"
#include "lexicrosswalk/tei_dialect.hpp"
#include "lexicrosswalk/xml.hpp"

// Rule engine over TEI dictionary documents (pre-conversion). Findings are
// advisory; validation never mutates the document.

namespace lexicrosswalk {

struct Rule {
    std::string id;
    Severity severity = Severity::Warning;
    std::string description;
    std::string rationale;
};

/// The registered rule catalogue, each rule with the normative rationale it
/// enforces.
inline const std::vector<Rule>& rule_catalogue() {
    static const std::vector<Rule> rules = {
        {"R1-SENSE-REQUIRED", Severity::Error,
         "no <def>, <cit> or <usg> as direct children of <entry>",
         "<sense> is mandatory for the representation of semantic content, even when an "
         "entry records a single sense"},
        {"R2-NO-VOID-GRAMGRP", Severity::Warning,
         "<gramGrp> must have at least one element child",
         "void elements should be avoided in the absence of further information"},
        {"R3-ENTRY-ONLY", Severity::Warning,
         "<entryFree> and <dictScrap> are not used",
         "the alternative entry constructs are transient objects tied to specific "
         "workflows; only <entry> carries interchange data"},
        {"R4-FORM-WRAPPER", Severity::Error,
         "<orth> sits inside <form>; grammar elements sit inside <gramGrp> or "
         "<fs type=\"grammar\">",
         "systematic use of <form> and <gramGrp> keeps form and grammatical "
         "information addressable"},
        {"R5-CIT-QUOTE", Severity::Error,
         "every <cit> contains exactly one <quote> (or <q>)",
         "a quotation comprises one language excerpt carried by a <quote> element"},
        {"R6-LMF-ANCHOR", Severity::Error,
         "LMF-namespace elements appear only as the syntax crystal anchored under <sense>",
         "the extension anchors the syntax crystal inside <sense> and avoids introducing "
         "new elements into other constructs"},
        {"R7-ENTRY-ID-UNIQUE", Severity::Error, "@xml:id values are unique in the document",
         "entry identifiers must be unambiguous targets for cross-references"},
        {"R8-ALTERNATIVE-ENTRY", Severity::Info,
         "<hom> and <superEntry> are flagged as outside the mapped subset",
         "homograph grouping is legitimate encoding but has no counterpart in the mapped "
         "meta-model subset"},
    };
    return rules;
}

namespace detail {

class TeiRuleEngine {
public:
    TeiRuleEngine(const xml::Node& doc, const std::optional<std::set<std::string>>& enabled)
        : enabled_(enabled) {
        for (const Rule& r : rule_catalogue()) severity_of_[r.id] = r.severity;
        walk(doc, "/" + doc.name.local + "[1]", nullptr, false);
        std::sort(findings_.begin(), findings_.end(), [](const Finding& a, const Finding& b) {
            if (a.path != b.path) return path_less(a.path, b.path);
            return a.rule_id < b.rule_id;
        });
    }

    std::vector<Finding> take() { return std::move(findings_); }

private:
    const std::optional<std::set<std::string>>& enabled_;
    std::map<std::string, Severity> severity_of_;
    std::vector<Finding> findings_;
    std::map<std::string, std::string> seen_ids_;  // xml:id -> first path

    // Component-wise path order: segment name, then numeric sibling index.
    static bool path_less(const std::string& a, const std::string& b) {
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            std::size_t ae = a.find('/', i + 1);
            std::size_t be = b.find('/', j + 1);
            if (ae == std::string::npos) ae = a.size();
            if (be == std::string::npos) be = b.size();
            std::string_view sa(a.data() + i, ae - i);
            std::string_view sb(b.data() + j, be - j);
            if (sa != sb) {
                auto split = [](std::string_view s) {
                    std::size_t br = s.find('[');
                    long idx = 0;
                    std::string_view name = s;
                    if (br != std::string_view::npos) {
                        name = s.substr(0, br);
                        idx = std::atol(std::string(s.substr(br + 1)).c_str());
                    }
                    return std::pair<std::string_view, long>(name, idx);
                };
                auto [na, ia] = split(sa);
                auto [nb, ib] = split(sb);
                if (na != nb) return na < nb;
                return ia < ib;
            }
            i = ae;
            j = be;
        }
        return a.size() < b.size();
    }

    void report(const std::string& rule_id, const std::string& path, std::string message) {
        if (enabled_ && !enabled_->count(rule_id)) return;
        findings_.push_back({rule_id, severity_of_.at(rule_id), path, std::move(message)});
    }

    static bool tei_local(const xml::Node& el, std::string_view local) {
        return detail::is_tei(el, local);
    }

    static bool is_grammar_container(const xml::Node& el) {
        return tei_local(el, "gramGrp") || detail::is_grammar_fs(el);
    }

    static bool is_grammar_leaf(const xml::Node& el) {
        if (!el.is_element()) return false;
        if (!(el.name.ns.empty() || el.name.ns == xml::tei_ns)) return false;
        const std::string& l = el.name.local;
        return l == "pos" || l == "number" || l == "gen" || l == "subc" || l == "gram";
    }

    void walk(const xml::Node& el, const std::string& path, const xml::Node* parent,
              bool inside_form) {
        check_ids(el, path);
        check_entry_content(el, path);
        check_gramgrp(el, path);
        check_transient(el, path);
        check_wrappers(el, path, parent, inside_form);
        check_cit(el, path);
        check_lmf(el, path, parent);

        const bool form_scope = inside_form || tei_local(el, "form");
        detail::SiblingCounter counter;
        for (const xml::Node& c : el.children) {
            if (!c.is_element()) continue;
            walk(c, detail::child_path(path, c.name.local, counter.next(c.name.local)), &el,
                 form_scope);
        }
    }

    void check_ids(const xml::Node& el, const std::string& path) {
        const std::string* id = el.attr(xml::QName{xml::xmlns_ns, "id"});
        if (!id) return;
        auto [it, inserted] = seen_ids_.emplace(*id, path);
        if (!inserted)
            report("R7-ENTRY-ID-UNIQUE", path,
                   "xml:id '" + *id + "' already used at " + it->second);
    }

    void check_entry_content(const xml::Node& el, const std::string& path) {
        if (!tei_local(el, "entry")) return;
        detail::SiblingCounter counter;
        for (const xml::Node& c : el.children) {
            if (!c.is_element()) continue;
            const std::string cpath =
                detail::child_path(path, c.name.local, counter.next(c.name.local));
            if (tei_local(c, "def") || tei_local(c, "cit") || tei_local(c, "usg"))
                report("R1-SENSE-REQUIRED", cpath,
                       "<" + c.name.local + "> must sit inside a <sense>");
        }
    }

    void check_gramgrp(const xml::Node& el, const std::string& path) {
        if (!tei_local(el, "gramGrp")) return;
        if (!el.has_element_children())
            report("R2-NO-VOID-GRAMGRP", path, "empty <gramGrp>; omit the block instead");
    }

    void check_transient(const xml::Node& el, const std::string& path) {
        if (tei_local(el, "entryFree") || tei_local(el, "dictScrap"))
            report("R3-ENTRY-ONLY", path,
                   "<" + el.name.local + "> is a transient construct; use <entry>");
        if (tei_local(el, "hom") || tei_local(el, "superEntry"))
            report("R8-ALTERNATIVE-ENTRY", path,
                   "<" + el.name.local + "> is outside the mapped entry subset");
    }

    void check_wrappers(const xml::Node& el, const std::string& path, const xml::Node* parent,
                        bool inside_form) {
        if (tei_local(el, "orth")) {
            if (!inside_form)
                report("R4-FORM-WRAPPER", path, "<orth> must be a descendant of <form>");
        }
        if (is_grammar_leaf(el)) {
            if (!parent || !is_grammar_container(*parent))
                report("R4-FORM-WRAPPER", path,
                       "<" + el.name.local +
                           "> must sit inside <gramGrp> or <fs type=\"grammar\">");
        }
    }

    void check_cit(const xml::Node& el, const std::string& path) {
        if (!tei_local(el, "cit")) return;
        int quotes = 0;
        for (const xml::Node& c : el.children)
            if (tei_local(c, "quote") || tei_local(c, "q")) ++quotes;
        if (quotes != 1)
            report("R5-CIT-QUOTE", path,
                   "<cit> must contain exactly one <quote>, found " + std::to_string(quotes));
    }

    void check_lmf(const xml::Node& el, const std::string& path, const xml::Node* parent) {
        if (el.name.ns != xml::lmf_ns) return;
        const std::string& l = el.name.local;
        const bool anchored =
            (l == "syntacticBehaviour" && parent && tei_local(*parent, "sense")) ||
            (l == "subcategorizationFrame" && parent &&
             detail::is_lmf(*parent, "syntacticBehaviour")) ||
            (l == "syntacticArgument" && parent &&
             detail::is_lmf(*parent, "subcategorizationFrame")) ||
            (l == "syntacticFunction" && parent &&
             detail::is_lmf(*parent, "syntacticArgument"));
        if (!anchored)
            report("R6-LMF-ANCHOR", path,
                   "LMF element '" + l + "' outside the sanctioned syntax crystal anchoring");
    }
};

}  // namespace detail

/// Checks the document against every enabled rule (default: all) and returns
/// the findings sorted by path, then rule id. Deterministic and total.
inline std::vector<Finding> validate_tei_document(
    const xml::Node& doc, const std::optional<std::set<std::string>>& enabled = std::nullopt) {
    return detail::TeiRuleEngine(doc, enabled).take();
}

}  // namespace lexicrosswalk

#endif  // LEXICROSSWALK_VALIDATOR_HPP
