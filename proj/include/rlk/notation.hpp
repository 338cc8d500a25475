#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rlk/contfrac.hpp"

namespace rlk {

/// Syntax error in twist notation; column is 1-based into the source text.
class NotationError : public std::invalid_argument {
public:
    NotationError(std::size_t column, const std::string& what)
        : std::invalid_argument("column " + std::to_string(column) + ": " + what),
          column_(column) {}

    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

/**
 * Parses twist notation: signed decimal integers separated by commas or
 * whitespace, optionally wrapped in "C(...)" or "[...]".  "C(2,3,-2)",
 * "[2, 3, -2]" and "2 3 -2" all give [2, 3, -2]; "C()" and "[]" give the
 * empty sequence.  Zero quotients after the first are rejected.
 */
ContinuedFraction parse_notation(std::string_view text);

}  // namespace rlk
