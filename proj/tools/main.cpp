// lexicrosswalk: convert, validate and round-trip-check lexical XML dialects.
//
// Exit codes: 0 success / no error findings; 1 error-severity findings or an
// unrepresentable conversion; 2 usage or I/O error; 3 XML or dialect parse
// error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lexicrosswalk/lexicrosswalk.hpp"

namespace {

using namespace lexicrosswalk;

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;

std::optional<std::string> read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool write_file(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return static_cast<bool>(std::cout);
    }
    std::ofstream out(path, std::ios::binary);
    out << content;
    return static_cast<bool>(out);
}

// LEXICROSSWALK_PREFIXES holds comma-separated uri=prefix overrides.
std::map<std::string, std::string> env_prefixes() {
    std::map<std::string, std::string> out;
    const char* env = std::getenv("LEXICROSSWALK_PREFIXES");
    if (!env) return out;
    std::string spec(env);
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t comma = spec.find(',', pos);
        if (comma == std::string::npos) comma = spec.size();
        std::string item = spec.substr(pos, comma - pos);
        pos = comma + 1;
        std::size_t eq = item.rfind('=');
        if (eq == std::string::npos || eq == 0) continue;
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

struct DialectFlag {
    std::string name;
    Dialect value = Dialect::TeiDict;
};

bool set_dialect(DialectFlag& flag) {
    if (auto d = dialect_from_string(flag.name)) {
        flag.value = *d;
        return true;
    }
    std::cerr << "unknown dialect '" << flag.name
              << "' (expected legacy-lmf, fs, mixed or tei)\n";
    return false;
}

std::string output_path_for(const std::string& input, Dialect to) {
    const std::string suffix = std::string(".") + to_string(to) + ".xml";
    if (input.size() > 4 && input.ends_with(".xml"))
        return input.substr(0, input.size() - 4) + suffix;
    return input + suffix;
}

int worst(int a, int b) {
    // Parse failures dominate, then findings.
    if (a == kExitParse || b == kExitParse) return kExitParse;
    if (a == kExitUsage || b == kExitUsage) return kExitUsage;
    return std::max(a, b);
}

int run_convert(const DialectFlag& from, const DialectFlag& to, const std::string& style,
                bool dcr, bool wrap, const std::string& out_path,
                const std::vector<std::string>& inputs) {
    DialectOptions opts;
    opts.legacy.emit_dcr_attrs = dcr;
    opts.fs.emit_dcr_attrs = dcr;
    opts.tei.emit_dcr_attrs = dcr;
    opts.tei.wrap_tei = wrap;
    opts.tei.grammar_style =
        style == "fs" ? GrammarStyle::FeatureStructure : GrammarStyle::GramGrp;
    opts.prefix_overrides = env_prefixes();

    if (!out_path.empty() && inputs.size() > 1) {
        std::cerr << "--out is only valid with a single input\n";
        return kExitUsage;
    }

    int exit_code = kExitOk;
    for (const std::string& input : inputs) {
        auto bytes = read_file(input);
        if (!bytes) {
            std::cerr << input << ": cannot read file\n";
            return kExitUsage;
        }
        try {
            auto [out, report] = convert(*bytes, from.value, to.value, opts);
            for (const Finding& f : report.parse_findings)
                std::cerr << input << ": " << to_line(f) << "\n";
            for (const std::string& note : report.emit_loss_notes)
                std::cerr << input << ": LOSS " << note << "\n";
            if (report.unrepresentable) {
                std::cerr << input << ": UNREPRESENTABLE " << *report.unrepresentable << "\n";
                exit_code = worst(exit_code, kExitFindings);
                continue;
            }
            const std::string target =
                out_path.empty() ? output_path_for(input, to.value) : out_path;
            if (!write_file(target, out)) {
                std::cerr << target << ": cannot write file\n";
                return kExitUsage;
            }
            if (!report.ok) exit_code = worst(exit_code, kExitFindings);
        } catch (const ParseError& e) {
            std::cerr << input << ": " << e.what() << "\n";
            exit_code = worst(exit_code, kExitParse);
        } catch (const EncodingError& e) {
            std::cerr << input << ": " << e.what() << "\n";
            exit_code = worst(exit_code, kExitParse);
        } catch (const DialectError& e) {
            std::cerr << input << ": " << e.what() << "\n";
            exit_code = worst(exit_code, kExitParse);
        } catch (const Error& e) {
            std::cerr << input << ": " << e.what() << "\n";
            exit_code = worst(exit_code, kExitFindings);
        }
    }
    return exit_code;
}

int run_validate(const std::string& rules_csv, const std::string& format,
                 const std::vector<std::string>& inputs) {
    std::optional<std::set<std::string>> enabled;
    if (!rules_csv.empty()) {
        enabled.emplace();
        std::size_t pos = 0;
        while (pos < rules_csv.size()) {
            std::size_t comma = rules_csv.find(',', pos);
            if (comma == std::string::npos) comma = rules_csv.size();
            if (comma > pos) enabled->insert(rules_csv.substr(pos, comma - pos));
            pos = comma + 1;
        }
    }

    int exit_code = kExitOk;
    nlohmann::json json_findings = nlohmann::json::array();
    for (const std::string& input : inputs) {
        auto bytes = read_file(input);
        if (!bytes) {
            std::cerr << input << ": cannot read file\n";
            return kExitUsage;
        }
        try {
            const xml::Node doc = xml::parse_xml(*bytes);
            const std::vector<Finding> findings = validate_tei_document(doc, enabled);
            for (const Finding& f : findings) {
                if (f.severity == Severity::Error) exit_code = worst(exit_code, kExitFindings);
                if (format == "json")
                    json_findings.push_back({{"ruleId", f.rule_id},
                                             {"severity", to_string(f.severity)},
                                             {"path", f.path},
                                             {"message", f.message}});
                else
                    std::cout << to_line(f) << "\n";
            }
        } catch (const Error& e) {
            std::cerr << input << ": " << e.what() << "\n";
            exit_code = worst(exit_code, kExitParse);
        }
    }
    if (format == "json") std::cout << json_findings.dump(2) << "\n";
    return exit_code;
}

int run_roundtrip(const DialectFlag& from, const DialectFlag& via,
                  const std::vector<std::string>& inputs) {
    int exit_code = kExitOk;
    for (const std::string& input : inputs) {
        auto bytes = read_file(input);
        if (!bytes) {
            std::cerr << input << ": cannot read file\n";
            return kExitUsage;
        }
        try {
            const RoundtripResult result = roundtrip_check(*bytes, from.value, via.value);
            if (result.ok) {
                std::cout << "OK " << input << "\n";
            } else {
                std::cout << "FAIL " << input << ": "
                          << result.divergence.value_or("model diverges") << "\n";
                exit_code = worst(exit_code, kExitFindings);
            }
        } catch (const Error& e) {
            std::cerr << input << ": " << e.what() << "\n";
            exit_code = worst(exit_code, kExitParse);
        }
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Crosswalks between lexical XML dialects (legacy-lmf, fs, mixed, tei)"};
    app.require_subcommand(1);

    DialectFlag from, to, via;
    std::string style = "gramgrp";
    std::string out_path;
    std::string rules_csv;
    std::string format = "text";
    bool dcr = false;
    bool wrap = false;
    std::vector<std::string> inputs;

    CLI::App* convert_cmd = app.add_subcommand("convert", "Convert between dialects");
    convert_cmd->add_option("--from", from.name, "input dialect")->required();
    convert_cmd->add_option("--to", to.name, "output dialect")->required();
    convert_cmd->add_option("--grammar-style", style, "TEI grammar style: gramgrp or fs")
        ->check(CLI::IsMember({"gramgrp", "fs"}));
    convert_cmd->add_flag("--dcr", dcr, "emit data-category registry attributes");
    convert_cmd->add_flag("--wrap-tei", wrap, "wrap TEI output in a document with a stub header");
    convert_cmd->add_option("--out", out_path, "output path (single input; '-' for stdout)");
    convert_cmd->add_option("inputs", inputs, "input files")->required();

    CLI::App* validate_cmd = app.add_subcommand("validate", "Check TEI dictionary compliance");
    validate_cmd->add_option("--rules", rules_csv, "comma-separated rule ids to enable");
    validate_cmd->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    validate_cmd->add_option("inputs", inputs, "input files")->required();

    CLI::App* roundtrip_cmd =
        app.add_subcommand("roundtrip", "Check that a via-dialect preserves the model");
    roundtrip_cmd->add_option("--from", from.name, "input dialect")->required();
    roundtrip_cmd->add_option("--via", via.name, "intermediate dialect")->required();
    roundtrip_cmd->add_option("inputs", inputs, "input files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (convert_cmd->parsed()) {
        if (!set_dialect(from) || !set_dialect(to)) return kExitUsage;
        return run_convert(from, to, style, dcr, wrap, out_path, inputs);
    }
    if (validate_cmd->parsed()) return run_validate(rules_csv, format, inputs);
    if (roundtrip_cmd->parsed()) {
        if (!set_dialect(from) || !set_dialect(via)) return kExitUsage;
        return run_roundtrip(from, via, inputs);
    }
    return kExitUsage;
}
