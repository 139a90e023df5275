#include "morse/complex_io.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <system_error>

#include <json.hpp>

namespace morse {

namespace {

std::vector<std::vector<Vertex>> parse_text(std::istream& in) {
    std::vector<std::vector<Vertex>> facets;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::vector<Vertex> facet;
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) {
            unsigned long long value = 0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || ptr != tok.data() + tok.size())
                throw ParseError("line " + std::to_string(lineno) + ": non-integer token '" + tok + "'", lineno);
            if (value == 0 || value > std::numeric_limits<Vertex>::max())
                throw ParseError("line " + std::to_string(lineno) + ": vertex id out of range '" + tok + "'", lineno);
            facet.push_back(static_cast<Vertex>(value));
        }
        facets.push_back(std::move(facet));
    }
    if (facets.empty()) throw ParseError("no facets in input");
    return facets;
}

std::vector<std::vector<Vertex>> parse_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("facets") || !doc["facets"].is_array())
        throw ParseError("JSON complex must be an object with a \"facets\" array");
    std::vector<std::vector<Vertex>> facets;
    for (const auto& entry : doc["facets"]) {
        if (!entry.is_array()) throw ParseError("each facet must be an array of integers");
        std::vector<Vertex> facet;
        for (const auto& v : entry) {
            if (!v.is_number_integer()) throw ParseError("non-integer vertex id in JSON facet");
            const auto value = v.get<long long>();
            if (value <= 0 || static_cast<unsigned long long>(value) > std::numeric_limits<Vertex>::max())
                throw ParseError("vertex id out of range: " + std::to_string(value));
            facet.push_back(static_cast<Vertex>(value));
        }
        facets.push_back(std::move(facet));
    }
    if (facets.empty()) throw ParseError("no facets in input");
    return facets;
}

SimplicialComplex build(std::vector<std::vector<Vertex>> facets) {
    try {
        return SimplicialComplex::from_facets(facets);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

SimplicialComplex read_complex(std::istream& in, FileFormat format) {
    return build(format == FileFormat::Json ? parse_json(in) : parse_text(in));
}

SimplicialComplex read_complex_string(const std::string& data, FileFormat format) {
    std::istringstream in(data);
    return read_complex(in, format);
}

SimplicialComplex read_complex_file(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) throw ParseError("not a readable file: " + path.string());
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    FileFormat format = FileFormat::Text;
    if (path.extension() == ".json") {
        format = FileFormat::Json;
    } else {
        const auto first = data.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && data[first] == '{') format = FileFormat::Json;
    }
    return read_complex_string(data, format);
}

void write_complex(std::ostream& out, const SimplicialComplex& complex, FileFormat format) {
    if (format == FileFormat::Json) {
        nlohmann::json doc = {{"facets", complex.facet_lists()}};
        out << doc.dump() << '\n';
        return;
    }
    for (const Face& f : complex.facets()) {
        const auto v = f.vertices();
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
        out << '\n';
    }
}

std::string write_complex_string(const SimplicialComplex& complex, FileFormat format) {
    std::ostringstream out;
    write_complex(out, complex, format);
    return out.str();
}

}  // namespace morse
