#ifndef LEXICROSSWALK_FS_DIALECT_HPP
#define LEXICROSSWALK_FS_DIALECT_HPP

#include <string>
#include <utility>
#include <vector>

#include "lexicrosswalk/detail/skeleton.hpp"
#include "lexicrosswalk/model.hpp"
#include "lexicrosswalk/xml.hpp"

// The two feature-structure serializations:
//   - pure fs: components become <f name="X"><fs>...</fs></f>, descriptors
//     become <f name="x">value</f>, everything in the TEI namespace;
//   - mixed: the component skeleton keeps its element names (no namespace)
//     while descriptors use the TEI <f> syntax.
// Feature values use the simplified untyped form (plain text content).

namespace lexicrosswalk {

struct FsDialectOptions {
    bool emit_dcr_attrs = false;
};

namespace detail {

inline bool is_tei_or_none(const xml::QName& q) {
    return q.ns.empty() || q.ns == xml::tei_ns;
}

// --- pure fs --------------------------------------------------------------

inline xml::Node render_fs_body(const ComponentNode& node, const FsDialectOptions& opts) {
    xml::Node fs = xml::Node::element(xml::QName{xml::tei_ns, "fs"});
    if (node.id) fs.set_attr(xml::QName{xml::xmlns_ns, "id"}, *node.id);
    for (const Feature& d : node.descriptors) {
        xml::Node& f = fs.add_element(xml::QName{xml::tei_ns, "f"});
        f.set_attr(xml::QName{"", "name"}, d.category.name);
        f.add_text(d.value);
        write_dcr_attrs(d, opts.emit_dcr_attrs, f);
    }
    for (const ComponentNode& c : node.children) {
        xml::Node& f = fs.add_element(xml::QName{xml::tei_ns, "f"});
        f.set_attr(xml::QName{"", "name"}, c.name);
        f.add_child(render_fs_body(c, opts));
    }
    return fs;
}

// Harvests elementary descriptors out of an unknown component so the data
// survives as plain grammar features.
inline void harvest_fs_descriptors(const xml::Node& fs, ComponentNode& into) {
    for (const xml::Node& f : fs.children) {
        if (!f.is_element() || f.name.local != "f") continue;
        const std::string* name = f.attr("name");
        if (!name || name->empty()) continue;
        const xml::Node* inner = nullptr;
        for (const xml::Node& c : f.children)
            if (c.is_element() && c.name.local == "fs") inner = &c;
        if (inner) {
            harvest_fs_descriptors(*inner, into);
        } else {
            Feature feat(*name, f.text_content());
            read_dcr_attrs(f, feat);
            into.descriptors.push_back(std::move(feat));
        }
    }
}

inline ComponentNode read_fs_component(const xml::Node& fs, std::string component_name,
                                       const std::string& path,
                                       std::vector<Finding>& findings) {
    ComponentNode node(std::move(component_name));
    node.path = path;
    if (const std::string* id = fs.attr(xml::QName{xml::xmlns_ns, "id"})) node.id = *id;
    SiblingCounter counter;
    for (const xml::Node& c : fs.children) {
        if (!c.is_element()) continue;
        const std::string cpath = child_path(path, c.name.local, counter.next(c.name.local));
        if (c.name.local != "f" || !is_tei_or_none(c.name)) {
            findings.push_back({"F-UNKNOWN-COMPONENT", Severity::Warning, cpath,
                                "unexpected element '" + c.name.local + "' skipped"});
            continue;
        }
        const std::string* name = c.attr("name");
        if (!name || name->empty()) {
            findings.push_back({"F-UNKNOWN-COMPONENT", Severity::Warning, cpath,
                                "f element without a name; skipped"});
            continue;
        }
        const xml::Node* inner_fs = nullptr;
        bool has_text = false;
        int fs_count = 0;
        for (const xml::Node& fc : c.children) {
            if (fc.is_element() && fc.name.local == "fs" && is_tei_or_none(fc.name)) {
                inner_fs = &fc;
                ++fs_count;
            } else if (fc.is_element()) {
                findings.push_back({"F-UNKNOWN-COMPONENT", Severity::Warning, cpath,
                                    "unexpected element '" + fc.name.local +
                                        "' inside f; ignored"});
            } else if (fc.is_text() && !xml::detail::is_all_ws(fc.text)) {
                has_text = true;
            }
        }
        if (inner_fs && has_text)
            throw StructureError("f '" + *name + "' at " + cpath +
                                 " mixes text and fs content");
        if (fs_count > 1)
            throw StructureError("f '" + *name + "' at " + cpath +
                                 " has more than one feature-structure child");
        if (inner_fs) {
            if (skeleton_component_names().count(*name)) {
                node.children.push_back(read_fs_component(
                    *inner_fs, *name, cpath, findings));
            } else {
                findings.push_back({"F-UNKNOWN-COMPONENT", Severity::Warning, cpath,
                                    "unknown component '" + *name +
                                        "'; elementary features preserved"});
                harvest_fs_descriptors(*inner_fs, node);
            }
        } else {
            Feature feat(*name, c.text_content());
            read_dcr_attrs(c, feat);
            node.descriptors.push_back(std::move(feat));
        }
    }
    return node;
}

// --- mixed ----------------------------------------------------------------

inline xml::Node render_mixed_component(const ComponentNode& node,
                                        const FsDialectOptions& opts) {
    xml::Node el = xml::Node::element(xml::QName{"", node.name});
    if (node.id) el.set_attr(xml::QName{"", "id"}, *node.id);
    for (const Feature& d : node.descriptors) {
        xml::Node& f = el.add_element(xml::QName{xml::tei_ns, "f"});
        f.set_attr(xml::QName{"", "name"}, d.category.name);
        f.add_text(d.value);
        write_dcr_attrs(d, opts.emit_dcr_attrs, f);
    }
    for (const ComponentNode& c : node.children)
        el.add_child(render_mixed_component(c, opts));
    return el;
}

inline ComponentNode read_mixed_component(const xml::Node& el, const std::string& path,
                                          std::vector<Finding>& findings) {
    ComponentNode node(el.name.local);
    node.path = path;
    if (const std::string* id = el.attr("id")) node.id = *id;
    SiblingCounter counter;
    for (const xml::Node& c : el.children) {
        if (!c.is_element()) continue;
        const std::string& local = c.name.local;
        const std::string cpath = child_path(path, local, counter.next(local));
        if (local == "f") {
            if (c.name.ns.empty())
                findings.push_back({"X-F-NAMESPACE", Severity::Warning, cpath,
                                    "descriptor f is not in the TEI namespace; accepted"});
            const std::string* name = c.attr("name");
            if (!name || name->empty()) {
                findings.push_back({"X-UNKNOWN-COMPONENT", Severity::Warning, cpath,
                                    "f element without a name; skipped"});
                continue;
            }
            Feature feat(*name, c.text_content());
            read_dcr_attrs(c, feat);
            node.descriptors.push_back(std::move(feat));
        } else if (c.name.ns.empty() && skeleton_component_names().count(local)) {
            node.children.push_back(read_mixed_component(c, cpath, findings));
        } else {
            findings.push_back({"X-UNKNOWN-COMPONENT", Severity::Warning, cpath,
                                "unknown component '" + local + "' skipped"});
        }
    }
    return node;
}

inline void flag_missing_language(const ComponentNode& node, std::vector<Finding>& findings) {
    if (node.name == "Lexicon" && !node.find_descriptor("language"))
        findings.push_back({"F-NO-LANGUAGE", Severity::Warning, node.path,
                            "lexicon carries no language descriptor"});
    for (const ComponentNode& c : node.children) flag_missing_language(c, findings);
}

}  // namespace detail

/// Emits the pure feature-structure dialect. A resource with one lexicon and
/// no global information collapses to a single <fs type="Lexicon"> root;
/// anything larger is wrapped in <fs type="LexicalResource">.
inline xml::Node emit_fs(const LexicalResource& resource, const FsDialectOptions& opts = {}) {
    detail::ComponentNode tree = detail::resource_to_components(resource, detail::full_caps());
    const bool global_empty =
        !tree.children.empty() && tree.children[0].name == "GlobalInformation" &&
        tree.children[0].descriptors.empty();
    if (global_empty && tree.children.size() == 2 && tree.children[1].name == "Lexicon") {
        xml::Node root = detail::render_fs_body(tree.children[1], opts);
        root.set_attr(xml::QName{"", "type"}, "Lexicon");
        return root;
    }
    detail::ComponentNode wrapper("LexicalResource");
    wrapper.id = tree.id;
    wrapper.descriptors = tree.descriptors;
    for (detail::ComponentNode& c : tree.children) {
        if (c.name == "GlobalInformation" && c.descriptors.empty() && c.children.empty())
            continue;
        wrapper.children.push_back(std::move(c));
    }
    xml::Node root = detail::render_fs_body(wrapper, opts);
    root.set_attr(xml::QName{"", "type"}, "LexicalResource");
    return root;
}

/// Parses the pure feature-structure dialect. The root must be an <fs> typed
/// "Lexicon" or "LexicalResource".
inline std::pair<LexicalResource, std::vector<Finding>> parse_fs(const xml::Node& doc) {
    if (doc.name.local != "fs" || !detail::is_tei_or_none(doc.name))
        throw DialectError("expected an fs root element, found '" + doc.name.local + "'");
    const std::string* type = doc.attr("type");
    if (!type || (*type != "Lexicon" && *type != "LexicalResource"))
        throw DialectError("root fs must be typed Lexicon or LexicalResource");
    std::vector<Finding> findings;
    detail::ComponentNode tree;
    if (*type == "Lexicon") {
        tree = detail::ComponentNode("LexicalResource");
        tree.path = "/fs[1]";
        tree.children.push_back(
            detail::read_fs_component(doc, "Lexicon", "/fs[1]", findings));
    } else {
        tree = detail::read_fs_component(doc, "LexicalResource", "/fs[1]", findings);
    }
    detail::flag_missing_language(tree, findings);
    LexicalResource r = detail::components_to_resource(tree, "F", findings);
    return {std::move(r), std::move(findings)};
}

/// Emits the mixed dialect: component skeleton in no namespace, descriptors
/// as TEI <f> elements. GlobalInformation is always present.
inline xml::Node emit_mixed(const LexicalResource& resource, const FsDialectOptions& opts = {}) {
    detail::ComponentNode tree = detail::resource_to_components(resource, detail::full_caps());
    return detail::render_mixed_component(tree, opts);
}

/// Parses the mixed dialect; the root must be <LexicalResource> in no
/// namespace.
inline std::pair<LexicalResource, std::vector<Finding>> parse_mixed(const xml::Node& doc) {
    if (doc.name.local != "LexicalResource" || !doc.name.ns.empty())
        throw DialectError("expected a no-namespace LexicalResource root, found '" +
                           doc.name.local + "'");
    std::vector<Finding> findings;
    detail::ComponentNode tree =
        detail::read_mixed_component(doc, "/LexicalResource[1]", findings);
    LexicalResource r = detail::components_to_resource(tree, "X", findings);
    return {std::move(r), std::move(findings)};
}

}  // namespace lexicrosswalk

#endif  // LEXICROSSWALK_FS_DIALECT_HPP
