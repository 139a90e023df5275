#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "morse/complex.hpp"

namespace morse {

enum class FileFormat { Text, Json };

/// Raised for unreadable or malformed complex files. `line()` is 1-based for
/// the text format and 0 when no line applies.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0) : std::runtime_error(what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Text: one facet per line, whitespace separated positive ids; '#' comments
// and blank lines are skipped. Json: {"facets": [[...], ...]}.
SimplicialComplex read_complex(std::istream& in, FileFormat format);
SimplicialComplex read_complex_string(const std::string& data, FileFormat format);

/// Format from the extension (.json) or, failing that, the first
/// non-whitespace character.
SimplicialComplex read_complex_file(const std::filesystem::path& path);

/// Canonical output: facets in lexicographic order, vertices ascending.
void write_complex(std::ostream& out, const SimplicialComplex& complex, FileFormat format);
std::string write_complex_string(const SimplicialComplex& complex, FileFormat format);

}  // namespace morse
