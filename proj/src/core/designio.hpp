#ifndef SPHDES_CORE_DESIGNIO_HPP
#define SPHDES_CORE_DESIGNIO_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "core/sphere.hpp"

namespace sphdes {

/// Malformed point-set text; the message carries line (and column) numbers.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line, int column = 0)
        : std::runtime_error(what), line(line), column(column) {}
    int line;
    int column;
};

enum class DesignFormat { triples, flat };

struct DesignFile {
    DesignFormat format = DesignFormat::triples;
    std::vector<std::string> comments; // '#' header lines, preserved verbatim
    Design design;
};

/// Parses the catalog point-set formats. Lines starting with '#' and blank
/// lines are skipped; the remaining lines must either all carry three numeric
/// fields (triples: x y z per line) or all carry one (flat: coordinates in
/// x,y,z,x,y,z,... order). Vectors whose norm deviates from 1 by more than
/// 1e-6 are rejected; smaller deviations are normalized away.
DesignFile parse_design(std::string_view text);

/// Deterministic text form, one of the two formats above, with `precision`
/// significant digits (6..17). The default 17 round-trips doubles exactly.
std::string write_design(const Design& design, int precision = 17,
                         DesignFormat format = DesignFormat::triples);

} // namespace sphdes

#endif
