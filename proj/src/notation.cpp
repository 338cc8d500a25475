#include "rlk/notation.hpp"

#include <cctype>
#include <vector>

namespace rlk {

namespace {

bool is_sep(char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); }

}  // namespace

ContinuedFraction parse_notation(std::string_view text) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (begin == end) throw NotationError(1, "empty notation");

    // Strip an optional C(...) or [...] wrapper.
    if (end - begin >= 2 && (text[begin] == 'C' || text[begin] == 'c') &&
        text[begin + 1] == '(') {
        if (text[end - 1] != ')') throw NotationError(end, "expected ')'");
        begin += 2;
        --end;
    } else if (text[begin] == '[') {
        if (text[end - 1] != ']') throw NotationError(end, "expected ']'");
        ++begin;
        --end;
    }

    std::vector<Int> quotients;
    std::size_t i = begin;
    while (true) {
        while (i < end && is_sep(text[i])) ++i;
        if (i >= end) break;
        std::size_t start = i;
        if (text[i] == '+' || text[i] == '-') ++i;
        std::size_t digits = i;
        while (i < end && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits) throw NotationError(i + 1, "expected integer");
        if (i < end && !is_sep(text[i]))
            throw NotationError(i + 1, std::string("unexpected character '") + text[i] + "'");
        Int q(std::string(text.substr(start, i - start)), 10);
        if (q == 0 && !quotients.empty())
            throw NotationError(start + 1,
                                "zero quotient is only allowed in the first position");
        quotients.push_back(std::move(q));
    }
    return ContinuedFraction(std::move(quotients));
}

}  // namespace rlk
