// pattern_parse.cpp
// Recursive-descent parser for the CLI pattern grammar:
//   pattern ::= term { term }
//   term    ::= [+|-] ( [digits] "X" digits | digits )
// A term without "X" is the constant; at most one is allowed. Whitespace
// is ignored everywhere. An omitted coefficient means 1.

#include "cfgsg/errors.hpp"
#include "cfgsg/semigroup.hpp"

#include <cctype>
#include <map>

namespace cfgsg {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return text[pos];
    }
    char take() {
        skip_ws();
        return text[pos++];
    }
    bool at_digit() { return !done() && std::isdigit(static_cast<unsigned char>(peek())); }

    Int digits() {
        skip_ws();
        Int value = 0;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > (Int{1} << 40))
                fail(ErrorCode::InvalidPattern, "number too large in pattern");
            ++pos;
        }
        if (pos == start) fail(ErrorCode::InvalidPattern, "expected digits in pattern");
        return value;
    }
};

} // namespace

LinearPattern parse_pattern(const std::string& text) {
    Cursor cur{text};
    std::map<Int, Int> coeff_by_index;
    std::optional<Int> constant;
    bool first = true;

    while (!cur.done()) {
        Int sign = 1;
        char c = cur.peek();
        if (c == '+' || c == '-') {
            sign = (c == '-') ? -1 : 1;
            cur.take();
        } else if (!first) {
            fail(ErrorCode::InvalidPattern,
                 std::string("expected '+' or '-' before term, got '") + c + "'");
        }
        first = false;

        bool has_number = cur.at_digit();
        Int number = has_number ? cur.digits() : 1;

        if (!cur.done() && (cur.peek() == 'X' || cur.peek() == 'x')) {
            cur.take();
            Int index = cur.digits();
            if (index < 1) fail(ErrorCode::InvalidPattern, "variable indices start at 1");
            Int coeff = sign * number;
            if (coeff == 0) fail(ErrorCode::InvalidPattern, "zero coefficient for X" + std::to_string(index));
            if (!coeff_by_index.emplace(index, coeff).second)
                fail(ErrorCode::InvalidPattern, "X" + std::to_string(index) + " appears twice");
        } else {
            if (!has_number)
                fail(ErrorCode::InvalidPattern, "dangling sign without term");
            if (constant)
                fail(ErrorCode::InvalidPattern, "more than one constant term");
            constant = sign * number;
        }
    }

    if (coeff_by_index.empty())
        fail(ErrorCode::InvalidPattern, "pattern needs at least one variable term");

    Int n = static_cast<Int>(coeff_by_index.size());
    LinearPattern p;
    p.constant = constant.value_or(0);
    for (Int i = 1; i <= n; ++i) {
        auto it = coeff_by_index.find(i);
        if (it == coeff_by_index.end())
            fail(ErrorCode::InvalidPattern,
                 "variable indices must be contiguous 1.." + std::to_string(n) +
                 "; X" + std::to_string(i) + " is missing");
        p.coefficients.push_back(it->second);
    }
    p.validate();
    return p;
}

} // namespace cfgsg
