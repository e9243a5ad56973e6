#pragma once

#include <optional>
#include <string>
#include <vector>

#include "profgen/generator.hpp"

namespace profgen {

struct Diagnostic {
    int line = 0;
    int col = 0;
    std::string code;
    std::string message;
    bool is_error = true;
};

struct ParseDiagnostics {
    std::vector<Diagnostic> entries;

    bool ok() const {
        for (const auto& d : entries)
            if (d.is_error) return false;
        return true;
    }
    void error(int line, int col, std::string code, std::string msg) {
        entries.push_back({line, col, std::move(code), std::move(msg), true});
    }
    void warn(int line, int col, std::string code, std::string msg) {
        entries.push_back({line, col, std::move(code), std::move(msg), false});
    }
};

struct ParseResult {
    std::optional<DisorderSpec> spec;  // present iff no errors
    ParseDiagnostics diagnostics;
};

enum class SpecFormat { Canonical, Dsl };

// Structured line-oriented format with explicit variant tags.
ParseResult parse_canonical(const std::string& text,
                            const std::string& default_name = "disorder");

// Bracket/brace notation: criteria as bracketed lists, sets in braces,
// requirement triples in parentheses, '#' comments to end of line.
ParseResult parse_dsl(const std::string& text,
                      const std::string& default_name = "disorder");

// Picks the format by inspecting the text.
ParseResult parse_auto(const std::string& text,
                       const std::string& default_name = "disorder");

// Parses one generator expression in DSL notation (a single bracketed
// criterion, e.g. "[{a,b,c}, 2]").
ParseResult parse_dsl_generator(const std::string& text);

std::string serialize(const DisorderSpec& d, SpecFormat format);

// DSL rendering of a single generator / generator list.
std::string to_dsl(const Generator& g);
std::string to_dsl(const std::vector<Generator>& gs);

bool valid_symptom_name(const std::string& name);

}  // namespace profgen
