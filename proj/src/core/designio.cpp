#include "core/designio.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace sphdes {

namespace {

struct Token {
    double value;
    int line;
    int column;
};

bool blank(std::string_view s) {
    return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

std::string_view strip_cr(std::string_view line) {
    while (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

} // namespace

DesignFile parse_design(std::string_view text) {
    DesignFile file;
    std::vector<Token> tokens;
    int fields_per_line = -1;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = strip_cr(text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos));
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        if (!line.empty() && line.front() == '#') {
            file.comments.emplace_back(line);
            continue;
        }
        if (blank(line)) continue;

        int fields = 0;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            if (i >= line.size()) break;
            const std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
            const std::string word(line.substr(start, i - start));
            char* end = nullptr;
            const double v = std::strtod(word.c_str(), &end);
            if (end != word.c_str() + word.size() || word.empty())
                throw ParseError("line " + std::to_string(line_no) + ", column " +
                                     std::to_string(start + 1) + ": not a number: '" + word + "'",
                                 line_no, static_cast<int>(start + 1));
            tokens.push_back({v, line_no, static_cast<int>(start + 1)});
            ++fields;
        }
        if (fields_per_line == -1) {
            if (fields != 1 && fields != 3)
                throw ParseError("line " + std::to_string(line_no) + ": expected 1 or 3 fields, got " +
                                     std::to_string(fields),
                                 line_no);
            fields_per_line = fields;
        } else if (fields != fields_per_line) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                                 std::to_string(fields_per_line) + " fields as on earlier lines, got " +
                                 std::to_string(fields),
                             line_no);
        }
    }

    if (tokens.empty()) throw ParseError("no data lines", line_no);
    file.format = fields_per_line == 3 ? DesignFormat::triples : DesignFormat::flat;
    if (tokens.size() % 3 != 0)
        throw ParseError("coordinate count " + std::to_string(tokens.size()) +
                             " is not divisible by 3",
                         tokens.back().line);

    const std::size_t n = tokens.size() / 3;
    file.design.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3 v{tokens[3 * i].value, tokens[3 * i + 1].value, tokens[3 * i + 2].value};
        const double len = norm(v);
        if (!(std::abs(len - 1.0) <= 1e-6)) // NaN-safe: non-finite norms fail too
            throw ParseError("point " + std::to_string(i + 1) + " (line " +
                                 std::to_string(tokens[3 * i].line) + ") has norm " +
                                 std::to_string(len) + ", farther than 1e-6 from the unit sphere",
                             tokens[3 * i].line);
        file.design.points.push_back(SpherePoint::from_vector(v));
    }
    return file;
}

std::string write_design(const Design& design, int precision, DesignFormat format) {
    if (precision < 6 || precision > 17)
        throw std::invalid_argument("write_design: precision must lie in [6, 17]");
    char buf[64];
    std::string out;
    out.reserve(design.points.size() * 3 * 26);
    const char* sep = format == DesignFormat::triples ? " " : "\n";
    for (const SpherePoint& p : design.points) {
        const double coords[3] = {p.x(), p.y(), p.z()};
        for (int c = 0; c < 3; ++c) {
            std::snprintf(buf, sizeof buf, "%.*g", precision, coords[c]);
            out += buf;
            out += (c < 2) ? sep : "\n";
        }
    }
    return out;
}

} // namespace sphdes
