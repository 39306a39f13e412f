// semigroup.hpp
// Exact numerical-semigroup arithmetic: construction from generators,
// invariants (conductor, genus, multiplicity, gaps) and admission checking
// for linear non-homogeneous patterns.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cfgsg {

using Int = std::int64_t;

// A numerical semigroup: additively closed subset of the non-negative
// integers containing 0 with finite complement. Immutable after
// construction; safe to share across concurrent readers.
class NumericalSemigroup {
public:
    // Builds the semigroup generated by `gens`. The input may be redundant;
    // the stored generator list is reduced to the minimal generating set.
    // Throws EmptyGenerators / NonCoprimeGenerators.
    static NumericalSemigroup from_generators(const std::vector<Int>& gens);

    // Minimal generating set, sorted ascending.
    const std::vector<Int>& generators() const { return generators_; }

    // Least c such that every integer >= c is a member.
    Int conductor() const { return conductor_; }

    // Number of gaps (all of which lie below the conductor).
    Int genus() const { return genus_; }

    // Smallest non-zero member.
    Int multiplicity() const { return multiplicity_; }

    // Membership test; negative integers are never members.
    bool contains(Int x) const;

    // All non-members in increasing order; size equals genus().
    std::vector<Int> gaps() const;

private:
    NumericalSemigroup() = default;

    std::vector<Int> generators_;
    Int conductor_ = 0;
    Int genus_ = 0;
    Int multiplicity_ = 0;
    std::vector<bool> membership_;  // indices 0..conductor
};

// Conductor of <a,b> for coprime a,b >= 2, via c = (a-1)(b-1).
Int two_generator_conductor(Int a, Int b);

// A linear pattern p(X1..Xn) = sum(coefficients[i] * X_{i+1}) + constant
// with every coefficient non-zero.
struct LinearPattern {
    std::vector<Int> coefficients;
    Int constant = 0;

    std::size_t length() const { return coefficients.size(); }

    // Rejects empty patterns and zero coefficients (InvalidPattern).
    void validate() const;

    // Renders in the CLI grammar, e.g. "X1+X2-1" or "2X1-X2+3".
    std::string to_string() const;
};

// Parses the CLI pattern grammar: sum of terms [+|-][c]X<i> plus at most
// one integer constant; whitespace insensitive; omitted coefficient is 1;
// indices must be 1..n, each used exactly once. Throws InvalidPattern.
LinearPattern parse_pattern(const std::string& text);

// Outcome of an exhaustive pattern check over the element window
// [multiplicity, conductor + B], B = |constant| + sum|coeff| * (conductor+1).
// When the coefficient sum is >= 1 an admission inside the window settles
// the question; otherwise the verdict only covers the window.
struct PatternCheck {
    bool admitted = false;
    bool conclusive = false;          // admission extends beyond the window
    Int window_lo = 0;
    Int window_hi = 0;
    std::vector<Int> counterexample;  // non-increasing tuple, empty if admitted
    Int value = 0;                    // p(counterexample), meaningful on failure
};

// Checks whether S admits the pattern. include_zero adds 0 to the checked
// element set (the literal reading of quantifying over all members).
// Returns the lexicographically first violating non-increasing tuple.
PatternCheck admits_pattern(const NumericalSemigroup& S, const LinearPattern& p,
                            bool include_zero = false);

} // namespace cfgsg
