#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rswt/errors.hpp"

namespace rswt {

// A quadratic rotation-symmetric function given as a sum of monomial
// generators x_1*x_{t_i}, one per offset t_i.  Offsets are kept strictly
// decreasing; duplicates are rejected (a duplicated generator cancels over
// GF(2) and leaves a degenerate function).
class QuadraticRS {
public:
    // Empty placeholder; real values come from from_offsets/parse_function.
    QuadraticRS() = default;

    static QuadraticRS from_offsets(std::vector<int> offsets);

    const std::vector<int>& offsets() const { return offsets_; }
    int m() const { return static_cast<int>(offsets_.size()); }
    int t1() const { return offsets_.front(); }
    // T = t_1 - 1: drives the rules matrix size 2^T + 1.
    int T() const { return offsets_.front() - 1; }

    // Canonical spec text, e.g. "(1,4)+(1,3)+(1,2)".
    std::string to_spec() const;

    bool operator==(const QuadraticRS&) const = default;

private:
    std::vector<int> offsets_; // strictly decreasing, each >= 2
};

// Parses "(1,t1)+(1,t2)+...+(1,tm)".  Whitespace-insensitive.
// Throws ParseError on malformed text, t < 2, duplicates, or empty input.
QuadraticRS parse_function(std::string_view spec);

// A concrete instance f_n in n variables.  Requires n >= t_1 so every
// generator index stays within 1..n before wrapping.
struct FunctionInstance {
    FunctionInstance(QuadraticRS q_, int n_);

    QuadraticRS q;
    int n;
};

// Evaluates f(x) over GF(2).  x holds n bits, x[j] = x_{j+1}.
// All n cyclic shifts of each generator are summed; indices wrap mod n.
int evaluate(const FunctionInstance& f, std::span<const uint8_t> x);

// Mask form: bit j of mask is x_{j+1}.  Requires n <= 62.
int evaluate_mask(const FunctionInstance& f, uint64_t mask);

} // namespace rswt
