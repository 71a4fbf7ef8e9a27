#ifndef LEXICROSSWALK_TEI_DIALECT_HPP
#define LEXICROSSWALK_TEI_DIALECT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexicrosswalk/detail/unicode.hpp"
#include "lexicrosswalk/detail/skeleton.hpp"
#include "lexicrosswalk/model.hpp"
#include "lexicrosswalk/xml.hpp"

// TEI Dictionaries serialization: <entry>/<form>/<gramGrp>/<sense> plus the
// <cit> quotation crystal and the LMF-namespace syntax extension anchored
// under <sense>.

namespace lexicrosswalk {

enum class GrammarStyle { GramGrp, FeatureStructure };

struct TeiEmitOptions {
    GrammarStyle grammar_style = GrammarStyle::GramGrp;
    bool emit_dcr_attrs = false;
    /// Wrap the output in a minimal TEI document with a stub header.
    bool wrap_tei = false;
};

/// One row of the descriptor mapping table. Generic rows are realized as
/// <gram type="...">; the non-generic rows are bijective.
struct DescriptorMapping {
    std::string category_name;
    std::string tei_element;
    bool is_generic = false;

    friend bool operator==(const DescriptorMapping&, const DescriptorMapping&) = default;
};

/// Component-level mapping rows (entry and form wrappers).
struct ComponentMapping {
    std::string component;
    std::string tei_element;
    std::optional<std::string> type_attr;
};

inline const std::vector<ComponentMapping>& component_element_mappings() {
    static const std::vector<ComponentMapping> rows = {
        {"LexicalEntry", "entry", std::nullopt},
        {"Lemma", "form", "lemma"},
        {"WordForm", "form", "inflected"},
    };
    return rows;
}

/// Maps a data category to its TEI grammar element: dedicated rows for
/// partOfSpeech, grammaticalNumber, grammaticalGender, subcategorization and
/// writtenForm; everything else falls back to the generic <gram>.
inline DescriptorMapping map_descriptor_to_tei(const DataCategoryRef& category) {
    const std::string& n = category.name;
    if (n == "partOfSpeech") return {n, "pos", false};
    if (n == "grammaticalNumber") return {n, "number", false};
    if (n == "grammaticalGender") return {n, "gen", false};
    if (n == "subcategorization") return {n, "subc", false};
    if (n == "writtenForm") return {n, "orth", false};
    return {n, "gram", true};
}

/// Exact inverse of map_descriptor_to_tei. <gram> requires a type attribute;
/// any other unknown element maps to a category of the same name.
inline DataCategoryRef map_tei_to_descriptor(std::string_view element_local,
                                             const std::optional<std::string>& type_attr) {
    if (element_local == "pos") return DataCategoryRef("partOfSpeech");
    if (element_local == "number") return DataCategoryRef("grammaticalNumber");
    if (element_local == "gen") return DataCategoryRef("grammaticalGender");
    if (element_local == "subc") return DataCategoryRef("subcategorization");
    if (element_local == "orth") return DataCategoryRef("writtenForm");
    if (element_local == "gram") {
        if (!type_attr || type_attr->empty())
            throw MappingError("<gram> without a type attribute cannot be mapped");
        return DataCategoryRef(*type_attr);
    }
    return DataCategoryRef(element_local);
}

namespace detail {

inline bool is_tei(const xml::Node& el, std::string_view local) {
    return el.is_element() && el.name.local == local &&
           (el.name.ns.empty() || el.name.ns == xml::tei_ns);
}

inline bool is_lmf(const xml::Node& el, std::string_view local) {
    return el.is_element() && el.name.local == local && el.name.ns == xml::lmf_ns;
}

inline bool is_grammar_fs(const xml::Node& el) {
    if (!is_tei(el, "fs")) return false;
    const std::string* type = el.attr("type");
    return type && *type == "grammar";
}

inline const xml::QName xml_lang_attr() { return {xml::xmlns_ns, "lang"}; }
inline const xml::QName xml_id_attr() { return {xml::xmlns_ns, "id"}; }

inline std::string effective_lang(const xml::Node& el, const std::string& inherited) {
    if (const std::string* own = el.attr(xml_lang_attr())) return *own;
    return inherited;
}

// --- emission ---------------------------------------------------------------

class TeiEmitter {
public:
    explicit TeiEmitter(const TeiEmitOptions& opts) : opts_(opts) {}

    xml::Node emit(const LexicalResource& r) const {
        std::vector<xml::Node> entries;
        for (const Lexicon& lx : r.lexicons)
            for (const LexicalEntry& e : lx.entries) entries.push_back(entry_node(e));

        if (opts_.wrap_tei) return wrap(std::move(entries));
        if (entries.size() == 1) return std::move(entries[0]);
        xml::Node body = xml::Node::element({xml::tei_ns, "body"});
        for (xml::Node& e : entries) body.add_child(std::move(e));
        return body;
    }

private:
    const TeiEmitOptions& opts_;

    static xml::Node tei(std::string_view local) {
        return xml::Node::element({xml::tei_ns, local});
    }

    xml::Node wrap(std::vector<xml::Node> entries) const {
        xml::Node root = tei("TEI");
        xml::Node& header = root.add_element({xml::tei_ns, "teiHeader"});
        xml::Node& file_desc = header.add_element({xml::tei_ns, "fileDesc"});
        file_desc.add_element({xml::tei_ns, "titleStmt"})
            .add_element({xml::tei_ns, "title"})
            .add_text("Lexical resource");
        file_desc.add_element({xml::tei_ns, "publicationStmt"})
            .add_element({xml::tei_ns, "p"})
            .add_text("Unpublished conversion output.");
        file_desc.add_element({xml::tei_ns, "sourceDesc"})
            .add_element({xml::tei_ns, "p"})
            .add_text("Converted lexical data.");
        xml::Node& body = root.add_element({xml::tei_ns, "text"})
                              .add_element({xml::tei_ns, "body"});
        for (xml::Node& e : entries) body.add_child(std::move(e));
        return root;
    }

    xml::Node descriptor_element(const Feature& f) const {
        const DescriptorMapping m = map_descriptor_to_tei(f.category);
        xml::Node el = tei(m.tei_element);
        if (m.is_generic) el.set_attr({"", "type"}, f.category.name);
        el.add_text(f.value);
        write_dcr_attrs(f, opts_.emit_dcr_attrs, el);
        return el;
    }

    xml::Node fs_feature_element(const Feature& f) const {
        const DescriptorMapping m = map_descriptor_to_tei(f.category);
        xml::Node el = tei("f");
        el.set_attr({"", "name"}, m.is_generic ? f.category.name : m.tei_element);
        el.add_text(f.value);
        write_dcr_attrs(f, opts_.emit_dcr_attrs, el);
        return el;
    }

    xml::Node usg_element(const Feature& f) const {
        xml::Node el = tei("usg");
        el.set_attr({"", "type"}, "dom");
        el.add_text(f.value);
        write_dcr_attrs(f, opts_.emit_dcr_attrs, el);
        return el;
    }

    // Renders features as one grammar block. When `usg_context` is set
    // (sense content and quotation refinements), usageDomain features render
    // as <usg> elements after the block; elsewhere they fall back to <gram>.
    // An empty feature list emits nothing: void blocks are avoided.
    void append_grammar(xml::Node& parent, const std::vector<Feature>& feats,
                        bool usg_context) const {
        std::vector<const Feature*> block;
        std::vector<const Feature*> usage;
        for (const Feature& f : feats) {
            if (usg_context && f.category.name == "usageDomain")
                usage.push_back(&f);
            else
                block.push_back(&f);
        }
        if (!block.empty()) {
            if (opts_.grammar_style == GrammarStyle::GramGrp) {
                xml::Node& grp = parent.add_element({xml::tei_ns, "gramGrp"});
                for (const Feature* f : block) grp.add_child(descriptor_element(*f));
            } else {
                xml::Node& fs = parent.add_element({xml::tei_ns, "fs"});
                fs.set_attr({"", "type"}, "grammar");
                for (const Feature* f : block) fs.add_child(fs_feature_element(*f));
            }
        }
        for (const Feature* f : usage) parent.add_child(usg_element(*f));
    }

    xml::Node entry_node(const LexicalEntry& e) const {
        xml::Node entry = tei("entry");
        if (e.id) entry.set_attr(xml_id_attr(), *e.id);
        if (e.lemma) entry.add_child(form_node(*e.lemma, e.entry_grammar));
        for (const Form& f : e.other_forms) entry.add_child(form_node(f, {}));
        // Entry-level grammar normally relocates into the lemma form; with no
        // lemma it keeps its own block directly under <entry>.
        if (!e.lemma) append_grammar(entry, e.entry_grammar, false);
        for (const Sense& s : e.senses) entry.add_child(sense_node(s));
        return entry;
    }

    xml::Node form_node(const Form& f, const std::vector<Feature>& relocated) const {
        xml::Node form = tei("form");
        switch (f.role.kind) {
            case FormRole::Kind::Lemma: form.set_attr({"", "type"}, "lemma"); break;
            case FormRole::Kind::WordForm: form.set_attr({"", "type"}, "inflected"); break;
            case FormRole::Kind::Other:
                if (!f.role.label.empty()) form.set_attr({"", "type"}, f.role.label);
                break;
        }
        for (const FormRepresentation& rep : f.representations) {
            xml::Node& orth = form.add_element({xml::tei_ns, "orth"});
            if (rep.orth_label) orth.set_attr({"", "type"}, *rep.orth_label);
            if (rep.lang_tag) orth.set_attr(xml_lang_attr(), *rep.lang_tag);
            orth.add_text(rep.written_form);
        }
        std::vector<Feature> grammar = relocated;
        grammar.insert(grammar.end(), f.grammar.begin(), f.grammar.end());
        append_grammar(form, grammar, false);
        return form;
    }

    xml::Node sense_node(const Sense& s) const {
        xml::Node sense = tei("sense");
        if (s.label) sense.set_attr({"", "n"}, *s.label);
        append_grammar(sense, s.grammar, true);
        for (const AnnotatedText& d : s.definitions) sense.add_child(def_node(d));
        for (const LocalizedText& g : s.glosses) sense.add_child(gloss_node(g));
        for (const ExternalRef& r : s.external_refs) sense.add_child(ref_node(r));
        for (const Quotation& q : s.quotations) sense.add_child(cit_node(q));
        for (const Sense& sub : s.subsenses) sense.add_child(sense_node(sub));
        for (const SyntacticBehaviour& b : s.syntactic_behaviours)
            sense.add_child(behaviour_node(b));
        return sense;
    }

    static xml::QName span_attr_name(const std::string& key) {
        if (key.starts_with("xml:")) return {xml::xmlns_ns, key.substr(4)};
        return {"", key};
    }

    // Renders annotated text with spans as inline elements. Spans are
    // non-overlapping or strictly nested (model-validated), so a recursive
    // outer-to-inner rendering is well defined.
    xml::Node def_node(const AnnotatedText& d) const {
        // Code-point index -> byte offset table (one extra entry for the end).
        std::vector<std::size_t> cp_byte;
        for (std::size_t b = 0; b < d.text.size();
             b += lexicrosswalk::detail::utf8_seq_len(d.text, b))
            cp_byte.push_back(b);
        cp_byte.push_back(d.text.size());

        const std::size_t cp_count = cp_byte.size() - 1;
        std::vector<const SpanAnnotation*> spans;
        for (const SpanAnnotation& s : d.spans)
            if (s.start < s.end && s.end <= cp_count) spans.push_back(&s);
        std::sort(spans.begin(), spans.end(), [](const auto* a, const auto* b) {
            if (a->start != b->start) return a->start < b->start;
            return a->end > b->end;
        });

        xml::Node def = tei("def");
        render_spans(def, d.text, cp_byte, spans, 0, cp_byte.size() - 1);
        return def;
    }

    void render_spans(xml::Node& parent, const std::string& text,
                      const std::vector<std::size_t>& cp_byte,
                      const std::vector<const SpanAnnotation*>& spans, std::size_t lo,
                      std::size_t hi) const {
        auto slice = [&](std::size_t from, std::size_t to) {
            return text.substr(cp_byte[from], cp_byte[to] - cp_byte[from]);
        };
        std::size_t pos = lo;
        std::size_t i = 0;
        while (i < spans.size()) {
            const SpanAnnotation* outer = spans[i];
            std::vector<const SpanAnnotation*> inner;
            std::size_t j = i + 1;
            while (j < spans.size() && spans[j]->start < outer->end) inner.push_back(spans[j++]);
            parent.add_text(slice(pos, outer->start));
            xml::Node el = tei(outer->kind);
            for (const auto& [k, v] : outer->attrs) el.set_attr(span_attr_name(k), v);
            render_spans(el, text, cp_byte, inner, outer->start, outer->end);
            parent.add_child(std::move(el));
            pos = outer->end;
            i = j;
        }
        parent.add_text(slice(pos, hi));
    }

    xml::Node gloss_node(const LocalizedText& g) const {
        xml::Node gloss = tei("gloss");
        if (g.lang_tag) gloss.set_attr(xml_lang_attr(), *g.lang_tag);
        gloss.add_text(g.text);
        return gloss;
    }

    xml::Node ref_node(const ExternalRef& r) const {
        xml::Node ref = tei("ref");
        if (!r.scheme.empty()) ref.set_attr({"", "type"}, r.scheme);
        ref.add_element({xml::tei_ns, "idno"}).add_text(r.idno);
        if (r.gloss) ref.add_child(gloss_node(*r.gloss));
        return ref;
    }

    xml::Node cit_node(const Quotation& q) const {
        xml::Node cit = tei("cit");
        const std::string kind = kind_token(q.kind);
        if (!kind.empty()) cit.set_attr({"", "type"}, kind);
        if (q.quote.lang_tag) cit.set_attr(xml_lang_attr(), *q.quote.lang_tag);
        cit.add_element({xml::tei_ns, "quote"}).add_text(q.quote.text);
        append_grammar(cit, q.refinements, true);
        for (const Quotation& sub : q.sub_quotations) cit.add_child(cit_node(sub));
        if (q.source_ref) cit.add_element({xml::tei_ns, "bibl"}).add_text(*q.source_ref);
        return cit;
    }

    xml::Node behaviour_node(const SyntacticBehaviour& b) const {
        xml::Node sb = xml::Node::element({xml::lmf_ns, "syntacticBehaviour"});
        for (const SubcategorizationFrame& fr : b.frames) {
            xml::Node& frame = sb.add_element({xml::lmf_ns, "subcategorizationFrame"});
            for (const SyntacticArgument& arg : fr.arguments) {
                xml::Node& ac = frame.add_element({xml::lmf_ns, "syntacticArgument"});
                ac.add_element({xml::lmf_ns, "syntacticFunction"}).add_text(arg.function);
                for (const Collocate& c : arg.collocates) {
                    xml::Node& colloc = ac.add_element({xml::tei_ns, "colloc"});
                    if (!c.kind.empty()) colloc.set_attr({"", "type"}, c.kind);
                    if (c.lang_tag) colloc.set_attr(xml_lang_attr(), *c.lang_tag);
                    colloc.add_text(c.text);
                }
                for (const LocalizedText& g : arg.glosses) ac.add_child(gloss_node(g));
                if (arg.semantic_ref) ac.add_child(ref_node(*arg.semantic_ref));
            }
        }
        return sb;
    }
};

// --- parsing ----------------------------------------------------------------

class TeiParser {
public:
    std::pair<LexicalResource, std::vector<Finding>> parse(const xml::Node& doc) {
        const std::string root_path = "/" + doc.name.local + "[1]";
        doc_lang_ = effective_lang(doc, "");
        collect_entries(doc, root_path, doc_lang_);
        if (entries_.empty())
            throw DialectError("document contains no <entry> element");
        LexicalResource r;
        Lexicon lx;
        lx.language = doc_lang_;
        lx.entries = std::move(entries_);
        r.lexicons.push_back(std::move(lx));
        return {std::move(r), std::move(findings_)};
    }

private:
    std::vector<Finding> findings_;
    std::vector<LexicalEntry> entries_;
    std::string doc_lang_;

    void add(std::string rule, Severity sev, const std::string& path, std::string msg) {
        findings_.push_back({std::move(rule), sev, path, std::move(msg)});
    }

    static bool is_transient(const xml::Node& el) {
        return is_tei(el, "entryFree") || is_tei(el, "dictScrap") ||
               is_tei(el, "superEntry") || is_tei(el, "hom");
    }

    void collect_entries(const xml::Node& el, const std::string& path,
                         const std::string& lang) {
        if (is_transient(el)) {
            add("T-TRANSIENT-CONSTRUCT", Severity::Warning, path,
                "'" + el.name.local + "' is outside the supported entry mapping; skipped");
            return;
        }
        if (is_tei(el, "entry")) {
            entries_.push_back(parse_entry(el, path, lang));
            return;
        }
        SiblingCounter counter;
        for (const xml::Node& c : el.children) {
            if (!c.is_element()) continue;
            collect_entries(c, child_path(path, c.name.local, counter.next(c.name.local)),
                            effective_lang(c, lang));
        }
    }

    // Grammar blocks: both <gramGrp> and <fs type="grammar"> are accepted.
    bool is_grammar_block(const xml::Node& el) const {
        return is_tei(el, "gramGrp") || is_grammar_fs(el);
    }

    std::vector<Feature> parse_grammar_block(const xml::Node& el, const std::string& path) {
        std::vector<Feature> feats;
        SiblingCounter counter;
        for (const xml::Node& c : el.children) {
            if (!c.is_element()) continue;
            const std::string cpath = child_path(path, c.name.local, counter.next(c.name.local));
            if (is_tei(el, "gramGrp")) {
                std::optional<std::string> type;
                if (const std::string* t = c.attr("type")) type = *t;
                try {
                    Feature f(map_tei_to_descriptor(c.name.local, type), c.text_content());
                    read_dcr_attrs(c, f);
                    feats.push_back(std::move(f));
                } catch (const MappingError&) {
                    add("T-UNKNOWN-ELEMENT", Severity::Warning, cpath,
                        "<gram> without a type attribute; skipped");
                }
            } else {
                if (!is_tei(c, "f")) {
                    add("T-UNKNOWN-ELEMENT", Severity::Warning, cpath,
                        "unexpected element in grammar feature structure; skipped");
                    continue;
                }
                const std::string* name = c.attr("name");
                if (!name || name->empty()) {
                    add("T-UNKNOWN-ELEMENT", Severity::Warning, cpath,
                        "f element without a name; skipped");
                    continue;
                }
                Feature f(map_tei_to_descriptor(*name, std::nullopt), c.text_content());
                read_dcr_attrs(c, f);
                feats.push_back(std::move(f));
            }
        }
        return feats;
    }

    Feature usage_feature(const xml::Node& usg) {
        Feature f("usageDomain", usg.text_content());
        read_dcr_attrs(usg, f);
        return f;
    }

    LexicalEntry parse_entry(const xml::Node& el, const std::string& path,
                             const std::string& inherited) {
        const std::string lang = effective_lang(el, inherited);
        LexicalEntry e;
        if (const std::string* id = el.attr(xml_id_attr())) e.id = *id;

        std::vector<Form> forms;
        Sense implicit;
        bool has_implicit = false;
        SiblingCounter counter;
        for (const xml::Node& c : el.children) {
            if (!c.is_element()) continue;
            const std::string cpath = child_path(path, c.name.local, counter.next(c.name.local));
            const std::string clang = effective_lang(c, lang);
            if (is_tei(c, "form")) {
                forms.push_back(parse_form(c, cpath, clang));
            } else if (is_grammar_block(c)) {
                std::vector<Feature> fs = parse_grammar_block(c, cpath);
                e.entry_grammar.insert(e.entry_grammar.end(), fs.begin(), fs.end());
            } else if (is_tei(c, "sense")) {
                e.senses.push_back(parse_sense(c, cpath, clang));
            } else if (is_tei(c, "def") || is_tei(c, "cit") || is_tei(c, "usg")) {
                // Sense content directly under <entry>: adopt it into a
                // synthesized sense.
                add("T-IMPLICIT-SENSE", Severity::Warning, cpath,
                    "sense content directly under <entry>; adopted into a synthesized sense");
                has_implicit = true;
                if (is_tei(c, "def"))
                    implicit.definitions.push_back(parse_def(c));
                else if (is_tei(c, "cit"))
                    implicit.quotations.push_back(parse_cit(c, cpath, clang));
                else
                    implicit.grammar.push_back(usage_feature(c));
            } else if (is_transient(c)) {
                add("T-TRANSIENT-CONSTRUCT", Severity::Warning, cpath,
                    "'" + c.name.local + "' is outside the supported entry mapping; skipped");
            } else {
                add("T-UNKNOWN-ELEMENT", Severity::Warning, cpath,
                    "unsupported element '" + c.name.local + "' under <entry>; skipped");
            }
        }

        for (Form& f : forms) {
            if (f.role.is_lemma() && !e.lemma) {
                e.lemma = std::move(f);
            } else if (f.role.is_lemma()) {
                add("T-EXTRA-LEMMA", Severity::Warning, path,
                    "entry has more than one lemma form; extra kept with a labelled role");
                f.role = FormRole::other("lemma");
                e.other_forms.push_back(std::move(f));
            } else {
                e.other_forms.push_back(std::move(f));
            }
        }
        // Inverse of the relocation rule: partOfSpeech found in the lemma
        // form's grammar block belongs to the entry.
        if (e.lemma) {
            std::vector<Feature> kept;
            for (Feature& f : e.lemma->grammar) {
                if (f.category.name == "partOfSpeech")
                    e.entry_grammar.push_back(std::move(f));
                else
                    kept.push_back(std::move(f));
            }
            e.lemma->grammar = std::move(kept);
        }
        if (has_implicit) e.senses.push_back(std::move(implicit));
        return e;
    }

    Form parse_form(const xml::Node& el, const std::string& path, const std::string& lang) {
        Form f;
        if (const std::string* type = el.attr("type")) {
            if (*type == "lemma")
                f.role = FormRole::lemma();
            else if (*type == "inflected")
                f.role = FormRole::word_form();
            else
                f.role = FormRole::other(*type);
        } else {
            f.role = FormRole::other("");
        }
        SiblingCounter counter;
        for (const xml::Node& c : el.children) {
            if (!c.is_element()) continue;
            const std::string cpath = child_path(path, c.name.local, counter.next(c.name.local));
            const std::string clang = effective_lang(c, lang);
            if (is_tei(c, "orth")) {
                FormRepresentation rep;
                rep.written_form = c.text_content();
                if (!clang.empty()) rep.lang_tag = clang;
                if (const std::string* t = c.attr("type")) rep.orth_label = *t;
                f.representations.push_back(std::move(rep));
            } else if (is_grammar_block(c)) {
                std::vector<Feature> fs = parse_grammar_block(c, cpath);
                f.grammar.insert(f.grammar.end(), fs.begin(), fs.end());
            } else {
                add("T-UNKNOWN-ELEMENT", Severity::Warning, cpath,
                    "unsupported element '" + c.name.local + "' under <form>; skipped");
            }
        }
        return f;
    }

    Sense parse_sense(const xml::Node& el, const std::string& path, const std::string& lang) {
        Sense s;
        if (const std::string* n = el.attr("n")) s.label = *n;
        SiblingCounter counter;
        for (const xml::Node& c : el.children) {
            if (!c.is_element()) continue;
            const std::string cpath = child_path(path, c.name.local, counter.next(c.name.local));
            const std::string clang = effective_lang(c, lang);
            if (is_grammar_block(c)) {
                std::vector<Feature> fs = parse_grammar_block(c, cpath);
                s.grammar.insert(s.grammar.end(), fs.begin(), fs.end());
            } else if (is_tei(c, "usg")) {
                s.grammar.push_back(usage_feature(c));
            } else if (is_tei(c, "def")) {
                s.definitions.push_back(parse_def(c));
            } else if (is_tei(c, "gloss")) {
                LocalizedText g(c.text_content());
                if (!clang.empty()) g.lang_tag = clang;
                // A bare gloss in a language other than the document's is a
                // translation in disguise; normalize it into the quotation
                // model. Requires a known document language on both sides.
                if (!doc_lang_.empty() && g.lang_tag && *g.lang_tag != doc_lang_) {
                    add("T-GLOSS-AS-TRANSLATION", Severity::Info, cpath,
                        "bare gloss in '" + *g.lang_tag +
                            "' normalized to a translation quotation");
                    Quotation q;
                    q.kind = QuotationKind::translation();
                    q.quote = std::move(g);
                    s.quotations.push_back(std::move(q));
                } else {
                    s.glosses.push_back(std::move(g));
                }
            } else if (is_tei(c, "ref")) {
                s.external_refs.push_back(parse_ref(c, cpath, clang));
            } else if (is_tei(c, "cit")) {
                s.quotations.push_back(parse_cit(c, cpath, clang));
            } else if (is_tei(c, "sense")) {
                s.subsenses.push_back(parse_sense(c, cpath, clang));
            } else if (is_lmf(c, "syntacticBehaviour")) {
                s.syntactic_behaviours.push_back(parse_behaviour(c, cpath, clang));
            } else {
                add("T-UNKNOWN-ELEMENT", Severity::Warning, cpath,
                    "unsupported element '" + c.name.local + "' under <sense>; skipped");
            }
        }
        return s;
    }

    static std::string span_attr_key(const xml::QName& q) {
        if (q.ns == xml::xmlns_ns) return "xml:" + q.local;
        return q.local;
    }

    AnnotatedText parse_def(const xml::Node& el) {
        AnnotatedText d;
        std::size_t cp = 0;
        collect_annotated(el, d, cp);
        return d;
    }

    void collect_annotated(const xml::Node& el, AnnotatedText& into, std::size_t& cp) {
        for (const xml::Node& c : el.children) {
            if (c.is_text()) {
                into.text += c.text;
                cp += lexicrosswalk::detail::utf8_length(c.text);
                continue;
            }
            SpanAnnotation span;
            span.start = cp;
            span.kind = c.name.local;
            for (const auto& [q, v] : c.attrs) span.attrs[span_attr_key(q)] = v;
            const std::size_t index = into.spans.size();
            into.spans.push_back(span);
            collect_annotated(c, into, cp);
            into.spans[index].end = cp;
        }
    }

    ExternalRef parse_ref(const xml::Node& el, const std::string& path,
                          const std::string& lang) {
        ExternalRef r;
        if (const std::string* type = el.attr("type")) r.scheme = *type;
        SiblingCounter counter;
        for (const xml::Node& c : el.children) {
            if (!c.is_element()) continue;
            const std::string cpath = child_path(path, c.name.local, counter.next(c.name.local));
            const std::string clang = effective_lang(c, lang);
            if (is_tei(c, "idno") && r.idno.empty()) {
                r.idno = c.text_content();
            } else if (is_tei(c, "gloss") && !r.gloss) {
                LocalizedText g(c.text_content());
                if (!clang.empty()) g.lang_tag = clang;
                r.gloss = std::move(g);
            } else {
                add("T-UNKNOWN-ELEMENT", Severity::Warning, cpath,
                    "unsupported element '" + c.name.local + "' under <ref>; skipped");
            }
        }
        return r;
    }

    Quotation parse_cit(const xml::Node& el, const std::string& path,
                        const std::string& inherited) {
        const std::string lang = effective_lang(el, inherited);
        Quotation q;
        if (const std::string* type = el.attr("type")) {
            if (*type == "example")
                q.kind = QuotationKind::example();
            else if (*type == "translation")
                q.kind = QuotationKind::translation();
            else
                q.kind = QuotationKind::other(*type);
        } else {
            q.kind = QuotationKind::other("");
        }
        bool have_quote = false;
        SiblingCounter counter;
        for (const xml::Node& c : el.children) {
            if (!c.is_element()) continue;
            const std::string cpath = child_path(path, c.name.local, counter.next(c.name.local));
            const std::string clang = effective_lang(c, lang);
            if (is_tei(c, "quote") || is_tei(c, "q")) {
                if (have_quote) {
                    add("T-EXTRA-QUOTE", Severity::Warning, cpath,
                        "quotation already has a quote; extra skipped");
                    continue;
                }
                have_quote = true;
                q.quote.text = c.text_content();
                if (!clang.empty()) q.quote.lang_tag = clang;
            } else if (is_grammar_block(c)) {
                std::vector<Feature> fs = parse_grammar_block(c, cpath);
                q.refinements.insert(q.refinements.end(), fs.begin(), fs.end());
            } else if (is_tei(c, "usg")) {
                q.refinements.push_back(usage_feature(c));
            } else if (is_tei(c, "bibl")) {
                if (!q.source_ref) q.source_ref = c.text_content();
            } else if (is_tei(c, "cit")) {
                q.sub_quotations.push_back(parse_cit(c, cpath, clang));
            } else {
                add("T-UNKNOWN-ELEMENT", Severity::Warning, cpath,
                    "unsupported element '" + c.name.local + "' under <cit>; skipped");
            }
        }
        return q;
    }

    SyntacticBehaviour parse_behaviour(const xml::Node& el, const std::string& path,
                                       const std::string& lang) {
        SyntacticBehaviour b;
        SiblingCounter counter;
        for (const xml::Node& c : el.children) {
            if (!c.is_element()) continue;
            const std::string cpath = child_path(path, c.name.local, counter.next(c.name.local));
            if (is_lmf(c, "subcategorizationFrame")) {
                b.frames.push_back(parse_frame(c, cpath, effective_lang(c, lang)));
            } else {
                add("T-UNKNOWN-ELEMENT", Severity::Warning, cpath,
                    "unsupported element under syntacticBehaviour; skipped");
            }
        }
        return b;
    }

    SubcategorizationFrame parse_frame(const xml::Node& el, const std::string& path,
                                       const std::string& lang) {
        SubcategorizationFrame fr;
        SiblingCounter counter;
        for (const xml::Node& c : el.children) {
            if (!c.is_element()) continue;
            const std::string cpath = child_path(path, c.name.local, counter.next(c.name.local));
            if (is_lmf(c, "syntacticArgument")) {
                fr.arguments.push_back(parse_argument(c, cpath, effective_lang(c, lang)));
            } else {
                add("T-UNKNOWN-ELEMENT", Severity::Warning, cpath,
                    "unsupported element under subcategorizationFrame; skipped");
            }
        }
        return fr;
    }

    // The argument content model admits exactly the four shown child kinds:
    // lmf:syntacticFunction, tei:colloc, tei:gloss and tei:ref.
    SyntacticArgument parse_argument(const xml::Node& el, const std::string& path,
                                     const std::string& lang) {
        SyntacticArgument arg;
        SiblingCounter counter;
        for (const xml::Node& c : el.children) {
            if (!c.is_element()) continue;
            const std::string cpath = child_path(path, c.name.local, counter.next(c.name.local));
            const std::string clang = effective_lang(c, lang);
            if (is_lmf(c, "syntacticFunction")) {
                if (arg.function.empty()) arg.function = c.text_content();
            } else if (is_tei(c, "colloc")) {
                Collocate col;
                col.text = c.text_content();
                if (const std::string* t = c.attr("type")) col.kind = *t;
                if (!clang.empty()) col.lang_tag = clang;
                arg.collocates.push_back(std::move(col));
            } else if (is_tei(c, "gloss")) {
                LocalizedText g(c.text_content());
                if (!clang.empty()) g.lang_tag = clang;
                arg.glosses.push_back(std::move(g));
            } else if (is_tei(c, "ref")) {
                if (!arg.semantic_ref) {
                    arg.semantic_ref = parse_ref(c, cpath, clang);
                } else {
                    add("T-UNKNOWN-ARG-CHILD", Severity::Warning, cpath,
                        "argument already has a semantic reference; skipped");
                }
            } else {
                add("T-UNKNOWN-ARG-CHILD", Severity::Warning, cpath,
                    "element '" + c.name.local + "' is not an admitted argument child; skipped");
            }
        }
        return arg;
    }
};

}  // namespace detail

/// Emits the TEI Dictionaries dialect. One entry yields a bare <entry> root;
/// several yield a <body> fragment; wrap_tei adds a minimal TEI document.
/// Lexicon language and resource-level global information have no carrier in
/// this dialect (the engine reports the loss).
inline xml::Node emit_tei(const LexicalResource& resource, const TeiEmitOptions& opts = {}) {
    return detail::TeiEmitter(opts).emit(resource);
}

/// Parses a TEI dictionary fragment or document: any TEI wrapper is
/// traversed, a bare <entry> root is accepted. The document's effective
/// root xml:lang becomes the lexicon language.
inline std::pair<LexicalResource, std::vector<Finding>> parse_tei(const xml::Node& doc) {
    return detail::TeiParser().parse(doc);
}

}  // namespace lexicrosswalk

#endif  // LEXICROSSWALK_TEI_DIALECT_HPP
