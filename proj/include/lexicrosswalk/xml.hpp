#ifndef LEXICROSSWALK_XML_HPP
#define LEXICROSSWALK_XML_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexicrosswalk/detail/unicode.hpp"
#include "lexicrosswalk/diagnostics.hpp"

namespace lexicrosswalk::xml {

inline constexpr std::string_view tei_ns = "http://www.tei-c.org/ns/1.0";
inline constexpr std::string_view lmf_ns = "http://www.iso.org/ns/LMF";
inline constexpr std::string_view dcr_ns = "http://www.isocat.org/ns/dcr";
inline constexpr std::string_view xmlns_ns = "http://www.w3.org/XML/1998/namespace";

/// Namespace-qualified name. `ns` is the resolved namespace URI ("" = none).
struct QName {
    std::string ns;
    std::string local;

    QName() = default;
    QName(std::string_view local_) : local(local_) {}
    QName(std::string_view ns_, std::string_view local_) : ns(ns_), local(local_) {}

    friend bool operator==(const QName&, const QName&) = default;
    friend auto operator<=>(const QName&, const QName&) = default;
};

/// One node of a parsed document: either an element (name, attributes,
/// children) or a text run. Attribute and child order is source order;
/// namespace declarations are resolved away during parsing and re-derived
/// during serialization.
struct Node {
    enum class Kind { Element, Text };

    Kind kind = Kind::Element;
    QName name;
    std::vector<std::pair<QName, std::string>> attrs;
    std::vector<Node> children;
    std::string text;

    static Node element(QName name) {
        Node n;
        n.kind = Kind::Element;
        n.name = std::move(name);
        return n;
    }

    static Node text_node(std::string s) {
        Node n;
        n.kind = Kind::Text;
        n.text = std::move(s);
        return n;
    }

    bool is_element() const { return kind == Kind::Element; }
    bool is_text() const { return kind == Kind::Text; }

    const std::string* attr(const QName& q) const {
        for (const auto& [k, v] : attrs)
            if (k == q) return &v;
        return nullptr;
    }

    /// Attribute in no namespace.
    const std::string* attr(std::string_view local) const { return attr(QName{"", local}); }

    void set_attr(QName q, std::string value) {
        for (auto& [k, v] : attrs) {
            if (k == q) {
                v = std::move(value);
                return;
            }
        }
        attrs.emplace_back(std::move(q), std::move(value));
    }

    Node& add_child(Node child) {
        children.push_back(std::move(child));
        return children.back();
    }

    Node& add_element(QName q) { return add_child(element(std::move(q))); }

    void add_text(std::string s) {
        if (s.empty()) return;
        children.push_back(text_node(std::move(s)));
    }

    bool has_element_children() const {
        for (const Node& c : children)
            if (c.is_element()) return true;
        return false;
    }

    /// Concatenated text of this subtree.
    std::string text_content() const {
        std::string out;
        collect_text(out);
        return out;
    }

    friend bool operator==(const Node&, const Node&) = default;

private:
    void collect_text(std::string& out) const {
        if (is_text()) {
            out += text;
            return;
        }
        for (const Node& c : children) c.collect_text(out);
    }
};

struct SerializeOptions {
    /// Spaces per nesting level; 0 disables pretty printing entirely.
    int indent = 2;
    /// Namespace URI -> prefix ("" selects the default namespace).
    std::map<std::string, std::string> prefixes;
    /// Invent nsN prefixes for unmapped URIs instead of raising PrefixError.
    bool auto_assign_prefixes = true;
    bool xml_declaration = true;
};

inline std::map<std::string, std::string> default_prefixes() {
    return {{std::string(tei_ns), ""},
            {std::string(lmf_ns), "lmf"},
            {std::string(dcr_ns), "dcr"}};
}

namespace detail {

inline bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

inline bool is_all_ws(std::string_view s) {
    for (char c : s)
        if (!is_ws(c)) return false;
    return true;
}

inline bool is_name_start(unsigned char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_' || c == ':' || c >= 0x80;
}

inline bool is_name_char(unsigned char c) {
    return is_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
}

class Parser {
public:
    explicit Parser(std::string text) : in_(std::move(text)) {}

    Node run() {
        skip_misc();
        if (at_end()) fail("document contains no root element");
        if (peek() != '<') fail("expected root element");
        Node root = parse_element();
        skip_misc();
        if (!at_end()) fail("content after root element");
        return root;
    }

private:
    std::string in_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    // Namespace scopes; each frame maps prefix -> URI for declarations made
    // on one element.
    std::vector<std::vector<std::pair<std::string, std::string>>> ns_stack_;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }

    bool at_end() const { return pos_ >= in_.size(); }
    char peek() const { return in_[pos_]; }
    bool starts_with(std::string_view s) const { return in_.compare(pos_, s.size(), s) == 0; }

    char advance() {
        char c = in_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void expect(char c, const char* what) {
        if (at_end() || peek() != c) fail(std::string("expected ") + what);
        advance();
    }

    void skip_ws() {
        while (!at_end() && is_ws(peek())) advance();
    }

    void skip_until(std::string_view marker, const char* what) {
        while (!at_end()) {
            if (starts_with(marker)) {
                for (std::size_t i = 0; i < marker.size(); ++i) advance();
                return;
            }
            advance();
        }
        fail(std::string("unterminated ") + what);
    }

    void skip_doctype() {
        // "<!DOCTYPE" already consumed up to "<!"; skip to matching '>',
        // tolerating an internal subset in brackets.
        int bracket = 0;
        while (!at_end()) {
            char c = advance();
            if (c == '[')
                ++bracket;
            else if (c == ']')
                --bracket;
            else if (c == '>' && bracket <= 0)
                return;
        }
        fail("unterminated DOCTYPE");
    }

    // Comments, PIs, the XML declaration and DOCTYPE are discarded.
    void skip_misc() {
        for (;;) {
            skip_ws();
            if (at_end()) return;
            if (starts_with("<?")) {
                advance();
                advance();
                skip_until("?>", "processing instruction");
            } else if (starts_with("<!--")) {
                for (int i = 0; i < 4; ++i) advance();
                skip_until("-->", "comment");
            } else if (starts_with("<!DOCTYPE")) {
                for (int i = 0; i < 9; ++i) advance();
                skip_doctype();
            } else {
                return;
            }
        }
    }

    std::string parse_name() {
        if (at_end() || !is_name_start(static_cast<unsigned char>(peek())))
            fail("expected a name");
        std::string name;
        while (!at_end() && is_name_char(static_cast<unsigned char>(peek())))
            name += advance();
        return name;
    }

    std::string expand_reference() {
        // Positioned just past '&'.
        std::size_t semi = in_.find(';', pos_);
        if (semi == std::string::npos || semi - pos_ > 12) fail("unterminated reference");
        std::string body = in_.substr(pos_, semi - pos_);
        while (pos_ <= semi) advance();
        if (body == "lt") return "<";
        if (body == "gt") return ">";
        if (body == "amp") return "&";
        if (body == "apos") return "'";
        if (body == "quot") return "\"";
        if (!body.empty() && body[0] == '#') {
            std::uint32_t cp = 0;
            bool ok = body.size() > 1;
            if (body[1] == 'x' || body[1] == 'X') {
                ok = body.size() > 2;
                for (std::size_t i = 2; ok && i < body.size(); ++i) {
                    char c = body[i];
                    std::uint32_t d;
                    if (c >= '0' && c <= '9')
                        d = static_cast<std::uint32_t>(c - '0');
                    else if (c >= 'a' && c <= 'f')
                        d = static_cast<std::uint32_t>(c - 'a' + 10);
                    else if (c >= 'A' && c <= 'F')
                        d = static_cast<std::uint32_t>(c - 'A' + 10);
                    else {
                        ok = false;
                        break;
                    }
                    cp = cp * 16 + d;
                    if (cp > 0x10FFFF) ok = false;
                }
            } else {
                for (std::size_t i = 1; ok && i < body.size(); ++i) {
                    char c = body[i];
                    if (c < '0' || c > '9') {
                        ok = false;
                        break;
                    }
                    cp = cp * 10 + static_cast<std::uint32_t>(c - '0');
                    if (cp > 0x10FFFF) ok = false;
                }
            }
            if (!ok || !lexicrosswalk::detail::valid_scalar_value(cp))
                fail("invalid character reference &" + body + ";");
            std::string out;
            lexicrosswalk::detail::append_utf8(out, cp);
            return out;
        }
        // No DTD processing: only the five built-in entities are allowed.
        fail("undefined entity &" + body + ";");
    }

    std::string parse_attr_value() {
        if (at_end() || (peek() != '"' && peek() != '\'')) fail("expected quoted attribute value");
        char quote = advance();
        std::string value;
        for (;;) {
            if (at_end()) fail("unterminated attribute value");
            char c = peek();
            if (c == quote) {
                advance();
                break;
            }
            if (c == '<') fail("'<' in attribute value");
            if (c == '&') {
                advance();
                value += expand_reference();
                continue;
            }
            advance();
            // Attribute-value normalization: whitespace becomes a space.
            value += (c == '\n' || c == '\t') ? ' ' : c;
        }
        return value;
    }

    std::string lookup_prefix(const std::string& prefix) {
        for (auto frame = ns_stack_.rbegin(); frame != ns_stack_.rend(); ++frame)
            for (auto decl = frame->rbegin(); decl != frame->rend(); ++decl)
                if (decl->first == prefix) return decl->second;
        if (prefix.empty()) return "";
        if (prefix == "xml") return std::string(xmlns_ns);
        fail("undeclared namespace prefix '" + prefix + "'");
    }

    QName resolve(const std::string& raw, bool is_attr) {
        std::size_t colon = raw.find(':');
        if (colon == std::string::npos) {
            // Unprefixed attributes are in no namespace.
            if (is_attr) return QName{"", raw};
            return QName{lookup_prefix(""), raw};
        }
        if (raw.find(':', colon + 1) != std::string::npos) fail("multiple colons in name");
        std::string prefix = raw.substr(0, colon);
        std::string local = raw.substr(colon + 1);
        if (prefix.empty() || local.empty()) fail("malformed qualified name '" + raw + "'");
        return QName{lookup_prefix(prefix), local};
    }

    Node parse_element() {
        expect('<', "'<'");
        std::string raw_name = parse_name();
        std::vector<std::pair<std::string, std::string>> raw_attrs;
        bool self_closing = false;
        for (;;) {
            bool had_ws = !at_end() && is_ws(peek());
            skip_ws();
            if (at_end()) fail("unterminated start tag");
            if (peek() == '>') {
                advance();
                break;
            }
            if (starts_with("/>")) {
                advance();
                advance();
                self_closing = true;
                break;
            }
            if (!had_ws) fail("expected whitespace before attribute");
            std::string attr_name = parse_name();
            skip_ws();
            expect('=', "'='");
            skip_ws();
            raw_attrs.emplace_back(std::move(attr_name), parse_attr_value());
        }

        // Collect namespace declarations before resolving any name.
        ns_stack_.emplace_back();
        for (const auto& [k, v] : raw_attrs) {
            if (k == "xmlns")
                ns_stack_.back().emplace_back("", v);
            else if (k.starts_with("xmlns:"))
                ns_stack_.back().emplace_back(k.substr(6), v);
        }

        Node node = Node::element(resolve(raw_name, false));
        for (const auto& [k, v] : raw_attrs) {
            if (k == "xmlns" || k.starts_with("xmlns:")) continue;
            QName q = resolve(k, true);
            if (node.attr(q)) fail("duplicate attribute '" + k + "'");
            node.attrs.emplace_back(std::move(q), v);
        }

        if (!self_closing) parse_content(node, raw_name);
        ns_stack_.pop_back();
        return node;
    }

    void parse_content(Node& node, const std::string& open_name) {
        std::string text;
        auto flush = [&] {
            if (!text.empty()) {
                node.add_text(std::move(text));
                text.clear();
            }
        };
        for (;;) {
            if (at_end()) fail("unexpected end of input inside <" + open_name + ">");
            char c = peek();
            if (c == '<') {
                if (starts_with("</")) {
                    flush();
                    advance();
                    advance();
                    std::string close_name = parse_name();
                    if (close_name != open_name)
                        fail("mismatched end tag </" + close_name + ">, expected </" +
                             open_name + ">");
                    skip_ws();
                    expect('>', "'>'");
                    return;
                }
                if (starts_with("<!--")) {
                    for (int i = 0; i < 4; ++i) advance();
                    skip_until("-->", "comment");
                    continue;
                }
                if (starts_with("<![CDATA[")) {
                    for (int i = 0; i < 9; ++i) advance();
                    std::size_t end = in_.find("]]>", pos_);
                    if (end == std::string::npos) fail("unterminated CDATA section");
                    while (pos_ < end) text += advance();
                    for (int i = 0; i < 3; ++i) advance();
                    continue;
                }
                if (starts_with("<?")) {
                    advance();
                    advance();
                    skip_until("?>", "processing instruction");
                    continue;
                }
                if (starts_with("<!")) fail("unexpected markup declaration in content");
                flush();
                node.add_child(parse_element());
                continue;
            }
            if (c == '&') {
                advance();
                text += expand_reference();
                continue;
            }
            advance();
            text += c;
        }
    }
};

inline void escape_text(std::string_view s, std::string& out) {
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
}

inline void escape_attr(std::string_view s, std::string& out) {
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '"': out += "&quot;"; break;
            case '\n': out += "&#10;"; break;
            case '\t': out += "&#9;"; break;
            default: out += c;
        }
    }
}

inline void collect_namespaces(const Node& n, std::set<std::string>& element_ns,
                               std::set<std::string>& attr_ns) {
    if (!n.is_element()) return;
    element_ns.insert(n.name.ns);
    for (const auto& [q, v] : n.attrs)
        if (!q.ns.empty() && q.ns != xmlns_ns) attr_ns.insert(q.ns);
    for (const Node& c : n.children) collect_namespaces(c, element_ns, attr_ns);
}

class Serializer {
public:
    Serializer(const SerializeOptions& opts) : opts_(opts) {}

    std::string run(const Node& root) {
        if (!root.is_element()) throw PrefixError("root must be an element");
        assign_prefixes(root);
        std::string out;
        if (opts_.xml_declaration) out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        write_element(root, 0, out, /*declare_ns=*/true, /*current_default=*/"");
        if (opts_.indent > 0) out += '\n';
        return out;
    }

private:
    const SerializeOptions& opts_;
    std::map<std::string, std::string> prefix_of_;  // ns uri -> prefix

    void assign_prefixes(const Node& root) {
        std::set<std::string> element_ns, attr_ns;
        collect_namespaces(root, element_ns, attr_ns);
        element_ns.erase("");

        std::set<std::string> used_prefixes;
        for (const auto& [uri, prefix] : opts_.prefixes) used_prefixes.insert(prefix);

        int counter = 0;
        auto invent = [&] {
            std::string p;
            do p = "ns" + std::to_string(++counter);
            while (used_prefixes.count(p));
            used_prefixes.insert(p);
            return p;
        };

        std::set<std::string> all;
        all.insert(element_ns.begin(), element_ns.end());
        all.insert(attr_ns.begin(), attr_ns.end());
        for (const std::string& uri : all) {
            if (uri == xmlns_ns) continue;
            auto it = opts_.prefixes.find(uri);
            if (it != opts_.prefixes.end()) {
                prefix_of_[uri] = it->second;
            } else if (opts_.auto_assign_prefixes) {
                prefix_of_[uri] = invent();
            } else {
                throw PrefixError("no prefix declared for namespace '" + uri + "'");
            }
        }
        // Attributes cannot use the default namespace; give such URIs an
        // auxiliary prefix as well.
        for (const std::string& uri : attr_ns) {
            if (uri == xmlns_ns) continue;
            if (prefix_of_[uri].empty()) {
                if (!opts_.auto_assign_prefixes)
                    throw PrefixError("namespace '" + uri +
                                      "' is used on attributes but mapped to the default prefix");
                attr_prefix_of_[uri] = invent();
            }
        }
    }

    std::map<std::string, std::string> attr_prefix_of_;

    std::string element_tag(const QName& q, const std::string& current_default) const {
        if (q.ns.empty() || q.ns == current_default) return q.local;
        auto it = prefix_of_.find(q.ns);
        const std::string& p = it->second;
        if (p.empty()) return q.local;  // handled via default re-declaration
        return p + ":" + q.local;
    }

    std::string attr_tag(const QName& q) const {
        if (q.ns.empty()) return q.local;
        if (q.ns == xmlns_ns) return "xml:" + q.local;
        auto aux = attr_prefix_of_.find(q.ns);
        const std::string& p =
            aux != attr_prefix_of_.end() ? aux->second : prefix_of_.at(q.ns);
        return p + ":" + q.local;
    }

    void write_ns_declarations(std::string& out) const {
        // Prefixed declarations gather on the root, sorted by prefix; the
        // default namespace is declared on the first element that uses it.
        std::vector<std::pair<std::string, std::string>> decls;  // prefix, uri
        for (const auto& [uri, prefix] : prefix_of_)
            if (!prefix.empty()) decls.emplace_back(prefix, uri);
        for (const auto& [uri, prefix] : attr_prefix_of_) decls.emplace_back(prefix, uri);
        std::sort(decls.begin(), decls.end());
        for (const auto& [prefix, uri] : decls) {
            out += " xmlns:" + prefix + "=\"";
            escape_attr(uri, out);
            out += '"';
        }
    }

    void write_element(const Node& n, int depth, std::string& out, bool declare_ns,
                       std::string current_default) {
        // An element outside any namespace must escape an active default
        // namespace; an element whose namespace maps to the default prefix
        // must (re-)activate it.
        std::string extra_decl;
        if (n.name.ns.empty()) {
            if (!current_default.empty()) {
                extra_decl = " xmlns=\"\"";
                current_default.clear();
            }
        } else if (prefix_of_.count(n.name.ns) && prefix_of_.at(n.name.ns).empty() &&
                   current_default != n.name.ns) {
            extra_decl = " xmlns=\"";
            escape_attr(n.name.ns, extra_decl);
            extra_decl += '"';
            current_default = n.name.ns;
        }

        const std::string tag = element_tag(n.name, current_default);
        out += '<';
        out += tag;
        if (declare_ns) write_ns_declarations(out);
        out += extra_decl;

        auto sorted = n.attrs;
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [q, v] : sorted) {
            out += ' ';
            out += attr_tag(q);
            out += "=\"";
            escape_attr(v, out);
            out += '"';
        }

        if (n.children.empty()) {
            out += "/>";
            return;
        }
        out += '>';

        bool any_text = false;
        for (const Node& c : n.children)
            if (c.is_text()) any_text = true;
        const bool pretty = opts_.indent > 0 && !any_text;

        for (const Node& c : n.children) {
            if (pretty) {
                out += '\n';
                out.append(static_cast<std::size_t>((depth + 1) * opts_.indent), ' ');
            }
            if (c.is_text())
                escape_text(c.text, out);
            else
                write_element(c, depth + 1, out, false, current_default);
        }
        if (pretty) {
            out += '\n';
            out.append(static_cast<std::size_t>(depth * opts_.indent), ' ');
        }
        out += "</";
        out += tag;
        out += '>';
    }
};

}  // namespace detail

/// Parses a complete UTF-8 document and returns its root element with all
/// prefixes resolved to namespace URIs. Comments, processing instructions and
/// DOCTYPE are discarded; entity references beyond the five built-ins are
/// rejected; whitespace-only text is preserved.
inline Node parse_xml(std::string_view bytes) {
    if (auto bad = lexicrosswalk::detail::find_invalid_utf8(bytes))
        throw EncodingError("invalid UTF-8 at byte offset " + std::to_string(*bad));
    // Strip a UTF-8 BOM and normalize line endings.
    if (bytes.size() >= 3 && bytes.substr(0, 3) == "\xEF\xBB\xBF") bytes.remove_prefix(3);
    std::string text;
    text.reserve(bytes.size());
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        if (bytes[i] == '\r') {
            text += '\n';
            if (i + 1 < bytes.size() && bytes[i + 1] == '\n') ++i;
        } else {
            text += bytes[i];
        }
    }
    return detail::Parser(std::move(text)).run();
}

/// Deterministic serialization: attributes sorted by (namespace, local name),
/// stable prefix assignment, namespace declarations gathered on the root.
inline std::string serialize_xml(const Node& node, const SerializeOptions& opts) {
    return detail::Serializer(opts).run(node);
}

inline std::string serialize_xml(const Node& node) {
    SerializeOptions opts;
    opts.prefixes = default_prefixes();
    return serialize_xml(node, opts);
}

/// Canonical form: attributes sorted, adjacent text merged, and
/// whitespace-only text dropped from elements that also have element
/// children. Mixed content with non-whitespace text is kept verbatim.
inline Node canonicalize(const Node& node) {
    if (node.is_text()) return node;
    Node out = Node::element(node.name);
    out.attrs = node.attrs;
    std::sort(out.attrs.begin(), out.attrs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<Node> merged;
    for (const Node& c : node.children) {
        if (c.is_text() && !merged.empty() && merged.back().is_text())
            merged.back().text += c.text;
        else
            merged.push_back(c);
    }
    bool has_elements = false;
    bool has_real_text = false;
    for (const Node& c : merged) {
        if (c.is_element()) has_elements = true;
        if (c.is_text() && !detail::is_all_ws(c.text)) has_real_text = true;
    }
    for (const Node& c : merged) {
        if (c.is_text()) {
            if (has_elements && !has_real_text) continue;  // indentation noise
            out.children.push_back(c);
        } else {
            out.children.push_back(canonicalize(c));
        }
    }
    return out;
}

namespace detail {

inline std::optional<std::string> canonical_diff_impl(const Node& a, const Node& b,
                                                      const std::string& path) {
    if (a.kind != b.kind) return path + " (node kind differs)";
    if (a.is_text()) {
        if (a.text != b.text) return path + " (text differs: '" + a.text + "' vs '" + b.text + "')";
        return std::nullopt;
    }
    if (a.name != b.name)
        return path + " (element name differs: " + a.name.local + " vs " + b.name.local + ")";
    if (a.attrs != b.attrs) return path + " (attributes differ)";
    if (a.children.size() != b.children.size())
        return path + " (child count differs: " + std::to_string(a.children.size()) + " vs " +
               std::to_string(b.children.size()) + ")";
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        const Node& ca = a.children[i];
        std::string sub = path + "/";
        sub += ca.is_element() ? ca.name.local : std::string("#text");
        sub += "[" + std::to_string(i + 1) + "]";
        if (auto d = canonical_diff_impl(ca, b.children[i], sub)) return d;
    }
    return std::nullopt;
}

}  // namespace detail

/// Path of the first difference between the canonical forms, or nullopt when
/// canonically equal. Prefix spellings are irrelevant by construction (names
/// are already URI-resolved).
inline std::optional<std::string> canonical_diff(const Node& a, const Node& b) {
    return detail::canonical_diff_impl(canonicalize(a), canonicalize(b),
                                       "/" + a.name.local);
}

inline bool canonical_equal(const Node& a, const Node& b) {
    return !canonical_diff(a, b).has_value();
}

}  // namespace lexicrosswalk::xml

#endif  // LEXICROSSWALK_XML_HPP
