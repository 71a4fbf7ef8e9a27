#ifndef LEXICROSSWALK_DIAGNOSTICS_HPP
#define LEXICROSSWALK_DIAGNOSTICS_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lexicrosswalk {

enum class Severity { Error, Warning, Info };

inline const char* to_string(Severity s) {
    switch (s) {
        case Severity::Error: return "ERROR";
        case Severity::Warning: return "WARNING";
        case Severity::Info: return "INFO";
    }
    return "UNKNOWN";
}

/// One diagnostic produced by a parser, the model validator or the
/// compliance validator. `path` is a slash-separated element path with
/// 1-based same-name sibling indices, e.g. "/entry[1]/def[1]".
struct Finding {
    std::string rule_id;
    Severity severity = Severity::Warning;
    std::string path;
    std::string message;

    friend bool operator==(const Finding&, const Finding&) = default;
};

inline Finding make_finding(std::string rule_id, Severity severity, std::string path,
                            std::string message) {
    return Finding{std::move(rule_id), severity, std::move(path), std::move(message)};
}

inline bool has_errors(const std::vector<Finding>& findings) {
    for (const Finding& f : findings)
        if (f.severity == Severity::Error) return true;
    return false;
}

/// Renders a finding as the line format shared with the CLI:
/// "SEVERITY RULE_ID PATH: MESSAGE".
inline std::string to_line(const Finding& f) {
    std::string line = to_string(f.severity);
    line += ' ';
    line += f.rule_id;
    line += ' ';
    line += f.path;
    line += ": ";
    line += f.message;
    return line;
}

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed XML input.
struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(int line_, int column_, const std::string& message)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(column_) +
                ": " + message),
          line(line_),
          column(column_) {}
};

/// Input is not valid UTF-8.
struct EncodingError : Error {
    using Error::Error;
};

/// Document is well-formed XML but not the requested dialect.
struct DialectError : Error {
    using Error::Error;
};

/// Feature-structure nesting violation (an <f> mixing text and <fs> content).
struct StructureError : Error {
    using Error::Error;
};

/// A TEI grammar element cannot be mapped back to a descriptor.
struct MappingError : Error {
    using Error::Error;
};

/// A namespace URI has no declared prefix and auto-assignment is off.
struct PrefixError : Error {
    using Error::Error;
};

/// The target dialect cannot carry the given model content.
struct UnrepresentableError : Error {
    std::string model_path;
    UnrepresentableError(std::string model_path_, const std::string& what_)
        : Error(what_ + " at " + model_path_), model_path(std::move(model_path_)) {}
};

}  // namespace lexicrosswalk

#endif  // LEXICROSSWALK_DIAGNOSTICS_HPP
