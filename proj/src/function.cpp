#include "rswt/function.hpp"

#include <algorithm>
#include <cctype>

namespace rswt {

QuadraticRS QuadraticRS::from_offsets(std::vector<int> offsets) {
    if (offsets.empty())
        throw ParseError("function needs at least one generator offset");
    for (int t : offsets)
        if (t < 2)
            throw ParseError("generator offset must be >= 2, got " + std::to_string(t));
    std::sort(offsets.begin(), offsets.end(), std::greater<int>());
    for (size_t i = 1; i < offsets.size(); ++i)
        if (offsets[i] == offsets[i - 1])
            throw ParseError("duplicate generator offset " + std::to_string(offsets[i]) +
                             " (the duplicated pair cancels over GF(2))");
    QuadraticRS q;
    q.offsets_ = std::move(offsets);
    return q;
}

std::string QuadraticRS::to_spec() const {
    std::string s;
    for (size_t i = 0; i < offsets_.size(); ++i) {
        if (i) s += '+';
        s += "(1," + std::to_string(offsets_[i]) + ')';
    }
    return s;
}

QuadraticRS parse_function(std::string_view spec) {
    std::string text;
    text.reserve(spec.size());
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    if (text.empty()) throw ParseError("empty function spec");

    std::vector<int> offsets;
    size_t pos = 0;
    while (true) {
        if (pos >= text.size() || text[pos] != '(')
            throw ParseError("expected '(' at position " + std::to_string(pos) + " in '" +
                             std::string(spec) + "'");
        size_t close = text.find(')', pos);
        if (close == std::string::npos)
            throw ParseError("unbalanced '(' in '" + std::string(spec) + "'");
        std::string_view body(text.data() + pos + 1, close - pos - 1);
        size_t comma = body.find(',');
        if (comma == std::string_view::npos)
            throw ParseError("generator must look like (1,t): '" + std::string(body) + "'");
        std::string_view first = body.substr(0, comma);
        std::string_view second = body.substr(comma + 1);
        if (first != "1")
            throw ParseError("only quadratic generators (1,t) are supported, got (" +
                             std::string(body) + ")");
        if (second.empty() ||
            !std::all_of(second.begin(), second.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("offset is not a positive integer: '" + std::string(second) + "'");
        if (second.size() > 6) throw ParseError("offset out of range: '" + std::string(second) + "'");
        int t = std::stoi(std::string(second));
        if (t < 2)
            throw ParseError("generator offset must be >= 2, got " + std::to_string(t));
        offsets.push_back(t);

        pos = close + 1;
        if (pos == text.size()) break;
        if (text[pos] != '+')
            throw ParseError("expected '+' between generators in '" + std::string(spec) + "'");
        ++pos;
    }
    return QuadraticRS::from_offsets(std::move(offsets));
}

FunctionInstance::FunctionInstance(QuadraticRS q_, int n_) : q(std::move(q_)), n(n_) {
    if (n < q.t1())
        throw ParseError("instance needs n >= t_1 = " + std::to_string(q.t1()) + ", got n = " +
                         std::to_string(n));
    if (n > 62) throw CapExceeded("n > 62 is not representable in the mask evaluator");
}

int evaluate(const FunctionInstance& f, std::span<const uint8_t> x) {
    if (static_cast<int>(x.size()) != f.n)
        throw ParseError("input length " + std::to_string(x.size()) + " != n = " +
                         std::to_string(f.n));
    const int n = f.n;
    int acc = 0;
    for (int t : f.q.offsets()) {
        const int k = t - 1;
        for (int j = 0; j < n; ++j) acc ^= (x[j] & x[(j + k) % n]) & 1;
    }
    return acc;
}

int evaluate_mask(const FunctionInstance& f, uint64_t mask) {
    const int n = f.n;
    const uint64_t all = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
    mask &= all;
    int acc = 0;
    for (int t : f.q.offsets()) {
        const int k = t - 1;
        const uint64_t rot = ((mask >> k) | (mask << (n - k))) & all;
        acc ^= __builtin_popcountll(mask & rot) & 1;
    }
    return acc;
}

} // namespace rswt
