#ifndef LEXICROSSWALK_LEGACY_LMF_HPP
#define LEXICROSSWALK_LEGACY_LMF_HPP

#include <string>
#include <utility>
#include <vector>

#include "lexicrosswalk/detail/skeleton.hpp"
#include "lexicrosswalk/model.hpp"
#include "lexicrosswalk/xml.hpp"

// Annex-style LMF serialization: components are elements named after
// meta-model classes, descriptors are <feat att="..." val="..."/> children,
// everything lives in no namespace.

namespace lexicrosswalk {

struct LegacyDialectOptions {
    bool emit_dcr_attrs = false;
};

namespace detail {

inline ComponentNode read_legacy_component(const xml::Node& el, const std::string& path,
                                           std::vector<Finding>& findings) {
    ComponentNode node(el.name.local);
    node.path = path;
    if (const std::string* id = el.attr("id")) node.id = *id;
    SiblingCounter counter;
    for (const xml::Node& c : el.children) {
        if (!c.is_element()) continue;
        const std::string& local = c.name.local;
        const std::string cpath = child_path(path, local, counter.next(local));
        if (local == "feat") {
            const std::string* att = c.attr("att");
            const std::string* val = c.attr("val");
            if (!att || att->empty() || !val) {
                findings.push_back({"L-BAD-FEAT", Severity::Warning, cpath,
                                    "feat needs att and val attributes; skipped"});
                continue;
            }
            Feature f(*att, *val);
            read_dcr_attrs(c, f);
            node.descriptors.push_back(std::move(f));
        } else if (legacy_component_names().count(local)) {
            node.children.push_back(read_legacy_component(c, cpath, findings));
        } else {
            findings.push_back({"L-UNKNOWN-COMPONENT", Severity::Warning, cpath,
                                "unknown component '" + local + "' skipped"});
        }
    }
    return node;
}

inline xml::Node render_legacy_component(const ComponentNode& node,
                                         const LegacyDialectOptions& opts) {
    xml::Node el = xml::Node::element(xml::QName{"", node.name});
    if (node.id) el.set_attr(xml::QName{"", "id"}, *node.id);
    for (const Feature& f : node.descriptors) {
        xml::Node& feat = el.add_element(xml::QName{"", "feat"});
        feat.set_attr(xml::QName{"", "att"}, f.category.name);
        feat.set_attr(xml::QName{"", "val"}, f.value);
        write_dcr_attrs(f, opts.emit_dcr_attrs, feat);
    }
    for (const ComponentNode& c : node.children)
        el.add_child(render_legacy_component(c, opts));
    return el;
}

}  // namespace detail

/// Reads an annex-style document. The root must be <LexicalResource>; a
/// non-empty root namespace is tolerated with Finding L-NS.
inline std::pair<LexicalResource, std::vector<Finding>> parse_legacy_lmf(const xml::Node& doc) {
    if (doc.name.local != "LexicalResource")
        throw DialectError("expected root element LexicalResource, found '" + doc.name.local +
                           "'");
    std::vector<Finding> findings;
    if (!doc.name.ns.empty())
        findings.push_back({"L-NS", Severity::Warning, "/LexicalResource[1]",
                            "root namespace '" + doc.name.ns + "' ignored"});
    detail::ComponentNode tree =
        detail::read_legacy_component(doc, "/LexicalResource[1]", findings);
    LexicalResource r = detail::components_to_resource(tree, "L", findings);
    return {std::move(r), std::move(findings)};
}

/// Inverse of parse_legacy_lmf on the representable subset. Definition span
/// annotations, sense glosses, external references and argument details have
/// no carrier in this dialect and are dropped; the crosswalk engine
/// enumerates such losses. Nested quotations raise UnrepresentableError.
inline xml::Node emit_legacy_lmf(const LexicalResource& resource,
                                 const LegacyDialectOptions& opts = {}) {
    detail::ComponentNode tree =
        detail::resource_to_components(resource, detail::legacy_caps());
    return detail::render_legacy_component(tree, opts);
}

}  // namespace lexicrosswalk

#endif  // LEXICROSSWALK_LEGACY_LMF_HPP
