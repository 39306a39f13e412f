#include "cfgsg/semigroup.hpp"

#include "cfgsg/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cfgsg {

namespace {

// Additive DP sieve over [0, limit]: member[x] iff x is a sum of generators.
std::vector<bool> sieve_membership(const std::vector<Int>& gens, Int limit) {
    std::vector<bool> member(static_cast<std::size_t>(limit) + 1, false);
    member[0] = true;
    for (Int x = 1; x <= limit; ++x) {
        for (Int g : gens) {
            if (g <= x && member[static_cast<std::size_t>(x - g)]) {
                member[static_cast<std::size_t>(x)] = true;
                break;
            }
        }
    }
    return member;
}

// A run of `mult` consecutive members starting at t proves every integer
// >= t is a member. Returns the earliest such t, or nullopt.
std::optional<Int> confirmed_tail(const std::vector<bool>& member, Int mult) {
    Int run = 0;
    for (Int x = 0; x < static_cast<Int>(member.size()); ++x) {
        run = member[static_cast<std::size_t>(x)] ? run + 1 : 0;
        if (run == mult) return x - mult + 1;
    }
    return std::nullopt;
}

} // namespace

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<Int>& gens_in) {
    if (gens_in.empty()) fail(ErrorCode::EmptyGenerators, "generator list is empty");

    std::set<Int> uniq;
    for (Int g : gens_in) {
        if (g <= 0)
            fail(ErrorCode::InvalidArgument, "generators must be positive, got " + std::to_string(g));
        uniq.insert(g);
    }
    std::vector<Int> gens(uniq.begin(), uniq.end());

    Int d = 0;
    for (Int g : gens) d = std::gcd(d, g);
    if (d != 1)
        fail(ErrorCode::NonCoprimeGenerators,
             "gcd of generators is " + std::to_string(d) + ", complement would be infinite");

    const Int mult = gens.front();

    // Sieve until the conductor is confirmed by a full multiplicity-length
    // run of members. (min-1)(max-1) bounds the conductor whenever the
    // smallest and largest generators are coprime; doubling covers the rest.
    Int limit = std::max<Int>((gens.front() - 1) * (gens.back() - 1), 1);
    std::vector<bool> member;
    Int tail = 0;
    for (;;) {
        member = sieve_membership(gens, limit);
        if (auto t = confirmed_tail(member, mult)) {
            tail = *t;
            break;
        }
        limit *= 2;
    }

    NumericalSemigroup S;
    S.multiplicity_ = mult;

    Int last_gap = -1;
    for (Int x = 1; x < tail; ++x)
        if (!member[static_cast<std::size_t>(x)]) {
            ++S.genus_;
            last_gap = x;
        }
    S.conductor_ = last_gap + 1;

    S.membership_.assign(member.begin(), member.begin() + S.conductor_ + 1);

    // Minimal generators: non-zero members that are not a sum of two
    // non-zero members. All of them lie in [m, c+m-1].
    for (Int x = mult; x < S.conductor_ + mult; ++x) {
        if (!S.contains(x)) continue;
        bool decomposable = false;
        for (Int a = mult; a <= x - mult; ++a) {
            if (S.contains(a) && S.contains(x - a)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) S.generators_.push_back(x);
    }
    return S;
}

bool NumericalSemigroup::contains(Int x) const {
    if (x < 0) return false;
    if (x >= conductor_) return true;
    return membership_[static_cast<std::size_t>(x)];
}

std::vector<Int> NumericalSemigroup::gaps() const {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(genus_));
    for (Int x = 1; x < conductor_; ++x)
        if (!membership_[static_cast<std::size_t>(x)]) out.push_back(x);
    return out;
}

Int two_generator_conductor(Int a, Int b) {
    if (a < 2 || b < 2)
        fail(ErrorCode::InvalidArgument, "both generators must be >= 2");
    if (std::gcd(a, b) != 1)
        fail(ErrorCode::NonCoprimeGenerators,
             "gcd(" + std::to_string(a) + "," + std::to_string(b) + ") != 1");
    return (a - 1) * (b - 1);
}

void LinearPattern::validate() const {
    if (coefficients.empty())
        fail(ErrorCode::InvalidPattern, "pattern needs at least one variable");
    for (Int c : coefficients)
        if (c == 0) fail(ErrorCode::InvalidPattern, "pattern coefficients must be non-zero");
}

std::string LinearPattern::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        Int c = coefficients[i];
        if (i == 0) {
            if (c < 0) out += '-';
        } else {
            out += (c < 0) ? '-' : '+';
        }
        Int a = c < 0 ? -c : c;
        if (a != 1) out += std::to_string(a);
        out += 'X';
        out += std::to_string(i + 1);
    }
    if (constant != 0) {
        out += (constant < 0) ? '-' : '+';
        out += std::to_string(constant < 0 ? -constant : constant);
    }
    return out;
}

namespace {

// Enumerates non-increasing tuples over `elems` (sorted ascending) in
// lexicographic order and stops at the first violation.
struct PatternSearch {
    const NumericalSemigroup& S;
    const LinearPattern& p;
    const std::vector<Int>& elems;
    std::vector<Int> tuple;

    bool violation(PatternCheck& out) {
        return descend(0, 0, static_cast<Int>(elems.size()) - 1, out);
    }

    // pos: variable index; acc: partial sum; hi: max element index usable
    // (keeps the tuple non-increasing).
    bool descend(std::size_t pos, Int acc, Int hi, PatternCheck& out) {
        if (pos == p.coefficients.size()) {
            Int value = acc + p.constant;
            if (value < 0 || !S.contains(value)) {
                out.counterexample = tuple;
                out.value = value;
                return true;
            }
            return false;
        }
        for (Int idx = 0; idx <= hi; ++idx) {
            Int s = elems[static_cast<std::size_t>(idx)];
            tuple.push_back(s);
            if (descend(pos + 1, acc + p.coefficients[pos] * s, idx, out)) return true;
            tuple.pop_back();
        }
        return false;
    }
};

} // namespace

PatternCheck admits_pattern(const NumericalSemigroup& S, const LinearPattern& p,
                            bool include_zero) {
    p.validate();

    Int coeff_abs_sum = 0;
    Int coeff_sum = 0;
    for (Int c : p.coefficients) {
        coeff_abs_sum += c < 0 ? -c : c;
        coeff_sum += c;
    }
    const Int c = S.conductor();
    const Int window_hi = c + (p.constant < 0 ? -p.constant : p.constant)
                            + coeff_abs_sum * (c + 1);

    std::vector<Int> elems;
    if (include_zero) elems.push_back(0);
    for (Int x = S.multiplicity(); x <= window_hi; ++x)
        if (S.contains(x)) elems.push_back(x);

    PatternCheck out;
    out.window_lo = include_zero ? 0 : S.multiplicity();
    out.window_hi = window_hi;
    // Violations with an element beyond the window are dominated by one
    // inside it when the coefficient sum is at least 1.
    out.conclusive = coeff_sum >= 1;

    PatternSearch search{S, p, elems, {}};
    out.admitted = !search.violation(out);
    if (out.admitted) {
        out.counterexample.clear();
        out.value = 0;
    } else {
        out.conclusive = true;  // a concrete counterexample always settles it
    }
    return out;
}

} // namespace cfgsg
