#ifndef LEXICROSSWALK_DETAIL_SKELETON_HPP
#define LEXICROSSWALK_DETAIL_SKELETON_HPP

#include <charconv>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexicrosswalk/model.hpp"
#include "lexicrosswalk/xml.hpp"

// The legacy, fs and mixed dialects share one abstract serialization: a tree
// of components (named after meta-model classes) carrying elementary
// descriptors. They differ only in how a component and a descriptor are
// rendered as XML. This header holds the shared component tree and the
// model <-> component-tree mapping; the dialect headers render and read it.

namespace lexicrosswalk::detail {

struct ComponentNode {
    std::string name;
    std::string path;  // XML path when produced by a reader; model path when built
    std::optional<std::string> id;
    std::vector<Feature> descriptors;
    std::vector<ComponentNode> children;

    ComponentNode() = default;
    explicit ComponentNode(std::string name_) : name(std::move(name_)) {}

    ComponentNode& child(std::string name_) {
        children.emplace_back(std::move(name_));
        return children.back();
    }

    void descriptor(std::string_view name_, std::string_view value) {
        descriptors.emplace_back(name_, value);
    }

    const Feature* find_descriptor(std::string_view name_) const {
        for (const Feature& f : descriptors)
            if (f.category.name == name_) return &f;
        return nullptr;
    }
};

/// What a skeleton dialect can carry. The legacy preset reflects a dialect
/// without quotation, annotation, gloss, external-reference or collocation
/// constructs; everything it cannot carry is silently dropped here and
/// reported as loss notes by the crosswalk engine.
struct SkeletonCaps {
    bool quotation_package = true;  // false: flat Definition carrier, nesting is fatal
    bool keep_annotations = true;
    bool keep_sense_glosses = true;
    bool keep_external_refs = true;
    bool keep_argument_extras = true;
};

inline SkeletonCaps full_caps() { return {}; }

inline SkeletonCaps legacy_caps() {
    return {.quotation_package = false,
            .keep_annotations = false,
            .keep_sense_glosses = false,
            .keep_external_refs = false,
            .keep_argument_extras = false};
}

inline const std::set<std::string, std::less<>>& skeleton_component_names() {
    static const std::set<std::string, std::less<>> names = {
        "LexicalResource", "GlobalInformation", "Lexicon",          "LexicalEntry",
        "Lemma",           "WordForm",          "FormRepresentation", "Sense",
        "Definition",      "Annotation",        "Gloss",             "ExternalRef",
        "Quotation",       "Quote",             "Refinement",        "SyntacticBehaviour",
        "SubcategorizationFrame", "SyntacticArgument", "Collocate"};
    return names;
}

inline const std::set<std::string, std::less<>>& legacy_component_names() {
    static const std::set<std::string, std::less<>> names = {
        "LexicalResource", "GlobalInformation", "Lexicon", "LexicalEntry",
        "Lemma",           "WordForm",          "FormRepresentation", "Sense",
        "Definition",      "SyntacticBehaviour", "SubcategorizationFrame",
        "SyntacticArgument"};
    return names;
}

inline std::string kind_token(const QuotationKind& k) {
    switch (k.kind) {
        case QuotationKind::Kind::Example: return "example";
        case QuotationKind::Kind::Translation: return "translation";
        case QuotationKind::Kind::Other: return k.label;
    }
    return {};
}

inline QuotationKind kind_from_token(std::string_view token) {
    if (token == "example") return QuotationKind::example();
    if (token == "translation") return QuotationKind::translation();
    return QuotationKind::other(std::string(token));
}

inline void read_dcr_attrs(const xml::Node& el, Feature& f) {
    if (const std::string* d = el.attr(xml::QName{xml::dcr_ns, "datcat"}))
        f.category.registry_id = *d;
    if (const std::string* v = el.attr(xml::QName{xml::dcr_ns, "valueDatcat"}))
        f.value_registry_id = *v;
}

inline void write_dcr_attrs(const Feature& f, bool enabled, xml::Node& el) {
    if (!enabled) return;
    if (f.category.registry_id)
        el.set_attr(xml::QName{xml::dcr_ns, "datcat"}, *f.category.registry_id);
    if (f.value_registry_id)
        el.set_attr(xml::QName{xml::dcr_ns, "valueDatcat"}, *f.value_registry_id);
}

inline std::string child_path(const std::string& parent, std::string_view local,
                              std::size_t same_name_index) {
    return parent + "/" + std::string(local) + "[" + std::to_string(same_name_index) + "]";
}

/// Counts same-name element siblings while walking children in order.
class SiblingCounter {
public:
    std::size_t next(const std::string& local) { return ++counts_[local]; }

private:
    std::map<std::string, std::size_t> counts_;
};

// ---------------------------------------------------------------------------
// model -> component tree
// ---------------------------------------------------------------------------

class ComponentBuilder {
public:
    explicit ComponentBuilder(const SkeletonCaps& caps) : caps_(caps) {}

    ComponentNode build(const LexicalResource& r) {
        ComponentNode root("LexicalResource");
        ComponentNode& global = root.child("GlobalInformation");
        global.descriptors = r.global_info;
        for (std::size_t i = 0; i < r.lexicons.size(); ++i)
            root.children.push_back(lexicon(r.lexicons[i], idx("", "lexicons", i)));
        return root;
    }

private:
    const SkeletonCaps& caps_;

    static std::string idx(const std::string& base, std::string_view field, std::size_t i) {
        return base + "/" + std::string(field) + "[" + std::to_string(i + 1) + "]";
    }

    ComponentNode lexicon(const Lexicon& lx, const std::string& path) {
        ComponentNode node("Lexicon");
        if (!lx.language.empty()) node.descriptor("language", lx.language);
        for (std::size_t i = 0; i < lx.entries.size(); ++i)
            node.children.push_back(entry(lx.entries[i], idx(path, "entries", i)));
        return node;
    }

    ComponentNode entry(const LexicalEntry& e, const std::string& path) {
        ComponentNode node("LexicalEntry");
        node.id = e.id;
        node.descriptors = e.entry_grammar;
        if (e.lemma) node.children.push_back(form(*e.lemma, path + "/lemma"));
        for (std::size_t i = 0; i < e.other_forms.size(); ++i)
            node.children.push_back(form(e.other_forms[i], idx(path, "otherForms", i)));
        for (std::size_t i = 0; i < e.senses.size(); ++i)
            node.children.push_back(sense(e.senses[i], idx(path, "senses", i)));
        return node;
    }

    ComponentNode form(const Form& f, const std::string& path) {
        ComponentNode node(f.role.is_lemma() ? "Lemma" : "WordForm");
        if (f.role.kind == FormRole::Kind::Other) node.descriptor("formType", f.role.label);
        const bool inline_rep = f.representations.size() == 1 &&
                                !f.representations[0].lang_tag &&
                                !f.representations[0].orth_label;
        if (inline_rep) node.descriptor("writtenForm", f.representations[0].written_form);
        for (const Feature& g : f.grammar) node.descriptors.push_back(g);
        if (!inline_rep) {
            for (const FormRepresentation& rep : f.representations) {
                ComponentNode& rc = node.child("FormRepresentation");
                rc.descriptor("writtenForm", rep.written_form);
                if (rep.lang_tag) rc.descriptor("language", *rep.lang_tag);
                if (rep.orth_label) rc.descriptor("orthographyName", *rep.orth_label);
            }
        }
        (void)path;
        return node;
    }

    ComponentNode sense(const Sense& s, const std::string& path) {
        ComponentNode node("Sense");
        if (s.label) node.descriptor("senseNumber", *s.label);
        for (const Feature& g : s.grammar) node.descriptors.push_back(g);
        for (std::size_t i = 0; i < s.definitions.size(); ++i)
            node.children.push_back(definition(s.definitions[i]));
        if (caps_.keep_sense_glosses)
            for (const LocalizedText& g : s.glosses) node.children.push_back(gloss(g));
        if (caps_.keep_external_refs)
            for (const ExternalRef& r : s.external_refs)
                node.children.push_back(external_ref(r));
        for (std::size_t i = 0; i < s.quotations.size(); ++i)
            node.children.push_back(
                quotation(s.quotations[i], idx(path, "quotations", i)));
        for (std::size_t i = 0; i < s.subsenses.size(); ++i)
            node.children.push_back(sense(s.subsenses[i], idx(path, "subsenses", i)));
        for (const SyntacticBehaviour& b : s.syntactic_behaviours)
            node.children.push_back(behaviour(b));
        return node;
    }

    ComponentNode definition(const AnnotatedText& d) {
        ComponentNode node("Definition");
        node.descriptor("text", d.text);
        if (caps_.keep_annotations) {
            for (const SpanAnnotation& sp : d.spans) {
                ComponentNode& a = node.child("Annotation");
                a.descriptor("start", std::to_string(sp.start));
                a.descriptor("end", std::to_string(sp.end));
                a.descriptor("element", sp.kind);
                for (const auto& [k, v] : sp.attrs) a.descriptor("@" + k, v);
            }
        }
        return node;
    }

    ComponentNode gloss(const LocalizedText& g) {
        ComponentNode node("Gloss");
        node.descriptor("text", g.text);
        if (g.lang_tag) node.descriptor("language", *g.lang_tag);
        return node;
    }

    ComponentNode external_ref(const ExternalRef& r) {
        ComponentNode node("ExternalRef");
        if (!r.scheme.empty()) node.descriptor("externalSystem", r.scheme);
        node.descriptor("externalReference", r.idno);
        if (r.gloss) node.children.push_back(gloss(*r.gloss));
        return node;
    }

    ComponentNode quotation(const Quotation& q, const std::string& path) {
        if (caps_.quotation_package) {
            ComponentNode node("Quotation");
            node.descriptor("kind", kind_token(q.kind));
            if (q.source_ref) node.descriptor("source", *q.source_ref);
            ComponentNode& quote = node.child("Quote");
            quote.descriptor("text", q.quote.text);
            if (q.quote.lang_tag) quote.descriptor("language", *q.quote.lang_tag);
            if (!q.refinements.empty()) {
                ComponentNode& ref = node.child("Refinement");
                ref.descriptors = q.refinements;
            }
            for (std::size_t i = 0; i < q.sub_quotations.size(); ++i)
                node.children.push_back(
                    quotation(q.sub_quotations[i], idx(path, "subQuotations", i)));
            return node;
        }
        // Flat statement carrier: no quotation construct exists in the legacy
        // dialect, so nesting cannot be represented.
        if (!q.sub_quotations.empty())
            throw UnrepresentableError(path, "nested quotation cannot be carried");
        ComponentNode node("Definition");
        node.descriptor("quotationKind", kind_token(q.kind));
        node.descriptor("text", q.quote.text);
        if (q.quote.lang_tag) node.descriptor("language", *q.quote.lang_tag);
        if (q.source_ref) node.descriptor("source", *q.source_ref);
        for (const Feature& f : q.refinements) node.descriptors.push_back(f);
        return node;
    }

    ComponentNode behaviour(const SyntacticBehaviour& b) {
        ComponentNode node("SyntacticBehaviour");
        for (const SubcategorizationFrame& fr : b.frames) {
            ComponentNode& fc = node.child("SubcategorizationFrame");
            for (const SyntacticArgument& arg : fr.arguments) {
                ComponentNode& ac = fc.child("SyntacticArgument");
                ac.descriptor("syntacticFunction", arg.function);
                if (caps_.keep_argument_extras) {
                    for (const Collocate& c : arg.collocates) {
                        ComponentNode& cc = ac.child("Collocate");
                        cc.descriptor("text", c.text);
                        if (!c.kind.empty()) cc.descriptor("type", c.kind);
                        if (c.lang_tag) cc.descriptor("language", *c.lang_tag);
                    }
                    for (const LocalizedText& g : arg.glosses) ac.children.push_back(gloss(g));
                    if (arg.semantic_ref) ac.children.push_back(external_ref(*arg.semantic_ref));
                }
            }
        }
        return node;
    }
};

inline ComponentNode resource_to_components(const LexicalResource& r, const SkeletonCaps& caps) {
    return ComponentBuilder(caps).build(r);
}

// ---------------------------------------------------------------------------
// component tree -> model
// ---------------------------------------------------------------------------

class ComponentReader {
public:
    ComponentReader(std::string finding_prefix, std::vector<Finding>& findings)
        : prefix_(std::move(finding_prefix)), findings_(findings) {}

    LexicalResource read(const ComponentNode& root) {
        LexicalResource r;
        // Descriptors directly on the resource have no home of their own;
        // the nearest feature list is the global information block.
        for (const Feature& f : root.descriptors) r.global_info.push_back(f);
        for (const ComponentNode& c : root.children) {
            if (c.name == "GlobalInformation") {
                for (const Feature& f : c.descriptors) r.global_info.push_back(f);
                for (const ComponentNode& sub : c.children) misplaced(sub);
            } else if (c.name == "Lexicon") {
                r.lexicons.push_back(lexicon(c, r.global_info));
            } else {
                misplaced(c);
            }
        }
        return r;
    }

private:
    std::string prefix_;
    std::vector<Finding>& findings_;

    void warn(std::string_view rule, const std::string& path, std::string msg) {
        findings_.push_back(
            {prefix_ + std::string(rule), Severity::Warning, path, std::move(msg)});
    }

    void misplaced(const ComponentNode& c) {
        warn("-MISPLACED-COMPONENT", c.path,
             "component '" + c.name + "' is not expected here and was skipped");
    }

    static std::optional<std::size_t> to_index(std::string_view s) {
        std::size_t value = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
        return value;
    }

    Lexicon lexicon(const ComponentNode& node, std::vector<Feature>& global_sink) {
        Lexicon lx;
        for (const Feature& f : node.descriptors) {
            if (f.category.name == "language" && lx.language.empty())
                lx.language = f.value;
            else
                global_sink.push_back(f);
        }
        for (const ComponentNode& c : node.children) {
            if (c.name == "LexicalEntry")
                lx.entries.push_back(entry(c));
            else
                misplaced(c);
        }
        return lx;
    }

    LexicalEntry entry(const ComponentNode& node) {
        LexicalEntry e;
        e.id = node.id;
        e.entry_grammar = node.descriptors;
        for (const ComponentNode& c : node.children) {
            if (c.name == "Lemma") {
                Form f = form(c, /*is_lemma=*/true);
                if (!e.lemma) {
                    e.lemma = std::move(f);
                } else {
                    warn("-EXTRA-LEMMA", c.path,
                         "entry already has a lemma; keeping this form with a labelled role");
                    f.role = FormRole::other("lemma");
                    e.other_forms.push_back(std::move(f));
                }
            } else if (c.name == "WordForm") {
                e.other_forms.push_back(form(c, false));
            } else if (c.name == "Sense") {
                e.senses.push_back(sense(c));
            } else {
                misplaced(c);
            }
        }
        return e;
    }

    Form form(const ComponentNode& node, bool is_lemma) {
        Form f;
        f.role = is_lemma ? FormRole::lemma() : FormRole::word_form();
        for (const Feature& d : node.descriptors) {
            const std::string& n = d.category.name;
            if (n == "formType" && !is_lemma) {
                f.role = FormRole::other(d.value);
            } else if (n == "writtenForm") {
                f.representations.push_back({d.value, std::nullopt, std::nullopt});
            } else if (n == "language" && !f.representations.empty()) {
                f.representations.back().lang_tag = d.value;
            } else if (n == "orthographyName" && !f.representations.empty()) {
                f.representations.back().orth_label = d.value;
            } else {
                f.grammar.push_back(d);
            }
        }
        for (const ComponentNode& c : node.children) {
            if (c.name == "FormRepresentation") {
                FormRepresentation rep;
                for (const Feature& d : c.descriptors) {
                    const std::string& n = d.category.name;
                    if (n == "writtenForm")
                        rep.written_form = d.value;
                    else if (n == "language")
                        rep.lang_tag = d.value;
                    else if (n == "orthographyName")
                        rep.orth_label = d.value;
                    else
                        f.grammar.push_back(d);
                }
                f.representations.push_back(std::move(rep));
            } else {
                misplaced(c);
            }
        }
        return f;
    }

    Sense sense(const ComponentNode& node) {
        Sense s;
        for (const Feature& d : node.descriptors) {
            if (d.category.name == "senseNumber" && !s.label)
                s.label = d.value;
            else
                s.grammar.push_back(d);
        }
        for (const ComponentNode& c : node.children) {
            if (c.name == "Definition") {
                if (c.find_descriptor("quotationKind"))
                    s.quotations.push_back(quotation_from_carrier(c, s.grammar));
                else
                    s.definitions.push_back(definition(c, s.grammar));
            } else if (c.name == "Gloss") {
                s.glosses.push_back(gloss(c, s.grammar));
            } else if (c.name == "ExternalRef") {
                s.external_refs.push_back(external_ref(c, s.grammar));
            } else if (c.name == "Quotation") {
                s.quotations.push_back(quotation_from_package(c));
            } else if (c.name == "Sense") {
                s.subsenses.push_back(sense(c));
            } else if (c.name == "SyntacticBehaviour") {
                s.syntactic_behaviours.push_back(behaviour(c, s.grammar));
            } else {
                misplaced(c);
            }
        }
        return s;
    }

    AnnotatedText definition(const ComponentNode& node, std::vector<Feature>& sink) {
        AnnotatedText d;
        bool have_text = false;
        for (const Feature& f : node.descriptors) {
            if (f.category.name == "text" && !have_text) {
                d.text = f.value;
                have_text = true;
            } else {
                sink.push_back(f);
            }
        }
        for (const ComponentNode& c : node.children) {
            if (c.name != "Annotation") {
                misplaced(c);
                continue;
            }
            SpanAnnotation span;
            bool ok = true;
            for (const Feature& f : c.descriptors) {
                const std::string& n = f.category.name;
                if (n == "start") {
                    if (auto v = to_index(f.value))
                        span.start = *v;
                    else
                        ok = false;
                } else if (n == "end") {
                    if (auto v = to_index(f.value))
                        span.end = *v;
                    else
                        ok = false;
                } else if (n == "element") {
                    span.kind = f.value;
                } else if (n.size() > 1 && n[0] == '@') {
                    span.attrs[n.substr(1)] = f.value;
                } else {
                    span.attrs[n] = f.value;
                }
            }
            if (!ok || span.kind.empty()) {
                warn("-BAD-ANNOTATION", c.path,
                     "annotation needs numeric start/end and an element name; skipped");
                continue;
            }
            d.spans.push_back(std::move(span));
        }
        return d;
    }

    LocalizedText gloss(const ComponentNode& node, std::vector<Feature>& sink) {
        LocalizedText g;
        for (const Feature& f : node.descriptors) {
            if (f.category.name == "text")
                g.text = f.value;
            else if (f.category.name == "language")
                g.lang_tag = f.value;
            else
                sink.push_back(f);
        }
        for (const ComponentNode& c : node.children) misplaced(c);
        return g;
    }

    ExternalRef external_ref(const ComponentNode& node, std::vector<Feature>& sink) {
        ExternalRef r;
        for (const Feature& f : node.descriptors) {
            if (f.category.name == "externalSystem")
                r.scheme = f.value;
            else if (f.category.name == "externalReference")
                r.idno = f.value;
            else
                sink.push_back(f);
        }
        for (const ComponentNode& c : node.children) {
            if (c.name == "Gloss" && !r.gloss)
                r.gloss = gloss(c, sink);
            else
                misplaced(c);
        }
        return r;
    }

    Quotation quotation_from_carrier(const ComponentNode& node, std::vector<Feature>& sink) {
        (void)sink;
        Quotation q;
        for (const Feature& f : node.descriptors) {
            const std::string& n = f.category.name;
            if (n == "quotationKind")
                q.kind = kind_from_token(f.value);
            else if (n == "text" && q.quote.text.empty())
                q.quote.text = f.value;
            else if (n == "language" && !q.quote.lang_tag)
                q.quote.lang_tag = f.value;
            else if (n == "source" && !q.source_ref)
                q.source_ref = f.value;
            else
                q.refinements.push_back(f);
        }
        for (const ComponentNode& c : node.children) misplaced(c);
        return q;
    }

    Quotation quotation_from_package(const ComponentNode& node) {
        Quotation q;
        q.kind = QuotationKind::other("");
        for (const Feature& f : node.descriptors) {
            const std::string& n = f.category.name;
            if (n == "kind")
                q.kind = kind_from_token(f.value);
            else if (n == "source" && !q.source_ref)
                q.source_ref = f.value;
            else
                q.refinements.push_back(f);
        }
        bool have_quote = false;
        for (const ComponentNode& c : node.children) {
            if (c.name == "Quote") {
                if (have_quote) {
                    warn("-EXTRA-QUOTE", c.path, "quotation already has a quote; skipped");
                    continue;
                }
                have_quote = true;
                for (const Feature& f : c.descriptors) {
                    if (f.category.name == "text")
                        q.quote.text = f.value;
                    else if (f.category.name == "language")
                        q.quote.lang_tag = f.value;
                    else
                        q.refinements.push_back(f);
                }
            } else if (c.name == "Refinement") {
                for (const Feature& f : c.descriptors) q.refinements.push_back(f);
            } else if (c.name == "Quotation") {
                q.sub_quotations.push_back(quotation_from_package(c));
            } else {
                misplaced(c);
            }
        }
        return q;
    }

    SyntacticBehaviour behaviour(const ComponentNode& node, std::vector<Feature>& sink) {
        SyntacticBehaviour b;
        for (const Feature& f : node.descriptors) sink.push_back(f);
        for (const ComponentNode& c : node.children) {
            if (c.name != "SubcategorizationFrame") {
                misplaced(c);
                continue;
            }
            SubcategorizationFrame frame;
            for (const Feature& f : c.descriptors) sink.push_back(f);
            for (const ComponentNode& ac : c.children) {
                if (ac.name != "SyntacticArgument") {
                    misplaced(ac);
                    continue;
                }
                SyntacticArgument arg;
                for (const Feature& f : ac.descriptors) {
                    if (f.category.name == "syntacticFunction" && arg.function.empty())
                        arg.function = f.value;
                    else
                        sink.push_back(f);
                }
                for (const ComponentNode& cc : ac.children) {
                    if (cc.name == "Collocate") {
                        Collocate col;
                        for (const Feature& f : cc.descriptors) {
                            if (f.category.name == "text")
                                col.text = f.value;
                            else if (f.category.name == "type")
                                col.kind = f.value;
                            else if (f.category.name == "language")
                                col.lang_tag = f.value;
                            else
                                sink.push_back(f);
                        }
                        arg.collocates.push_back(std::move(col));
                    } else if (cc.name == "Gloss") {
                        arg.glosses.push_back(gloss(cc, sink));
                    } else if (cc.name == "ExternalRef") {
                        if (!arg.semantic_ref)
                            arg.semantic_ref = external_ref(cc, sink);
                        else
                            misplaced(cc);
                    } else {
                        misplaced(cc);
                    }
                }
                frame.arguments.push_back(std::move(arg));
            }
            b.frames.push_back(std::move(frame));
        }
        return b;
    }
};

inline LexicalResource components_to_resource(const ComponentNode& root,
                                              std::string finding_prefix,
                                              std::vector<Finding>& findings) {
    return ComponentReader(std::move(finding_prefix), findings).read(root);
}

}  // namespace lexicrosswalk::detail

#endif  // LEXICROSSWALK_DETAIL_SKELETON_HPP
