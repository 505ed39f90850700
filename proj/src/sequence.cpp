#include "rotgen/sequence.hpp"

#include <stdexcept>
#include <string>

namespace rotgen {

namespace {

void require_cap(int n, int cap, const char* what) {
    if (n > cap)
        throw std::length_error(std::string(what) + ": order " + std::to_string(n) +
                                " exceeds materialization cap " + std::to_string(cap));
}

// Shared frame of the three blockwise operators: validate 1 < i < n for
// every value, then expand each into its block.
template <typename BlockFn>
RotationSeq expand(const RotationSeq& s, int n, const char* what, BlockFn&& emit) {
    for (int v : s.values) {
        if (v <= 1 || v >= n)
            throw std::invalid_argument(std::string(what) + ": value " + std::to_string(v) +
                                        " outside 1 < i < " + std::to_string(n));
    }
    RotationSeq out;
    out.order_n = n;
    out.values.reserve(s.values.size() * static_cast<std::size_t>(n));
    for (int v : s.values) emit(out.values, v);
    return out;
}

}  // namespace

RotationSeq make_sequence(std::vector<int> values, int order_n) {
    if (order_n < 2) throw std::invalid_argument("sequence order must be >= 2");
    for (int v : values) {
        if (v < 2 || v > order_n)
            throw std::invalid_argument("sequence value " + std::to_string(v) +
                                        " outside 2.." + std::to_string(order_n));
    }
    return RotationSeq{std::move(values), order_n};
}

RotationSeq reuse(const RotationSeq& s, int n) {
    return expand(s, n, "reuse", [n](std::vector<int>& out, int i) {
        out.insert(out.end(), static_cast<std::size_t>(n - 1), n);
        out.push_back(n - i + 1);
    });
}

RotationSeq recycle(const RotationSeq& s, int n) {
    return expand(s, n, "recycle", [n](std::vector<int>& out, int i) {
        out.push_back(n);
        out.push_back(n);
        out.insert(out.end(), static_cast<std::size_t>(i - 1), n - 1);
        out.insert(out.end(), static_cast<std::size_t>(n - i - 1), n);
    });
}

RotationSeq step(const RotationSeq& s, int n) {
    return expand(s, n, "step", [n](std::vector<int>& out, int i) {
        out.insert(out.end(), static_cast<std::size_t>(n - 1), n);
        out.push_back(i);
    });
}

RotationSeq corbett(int n, int cap) {
    if (n < 2) throw std::invalid_argument("corbett requires n >= 2");
    require_cap(n, cap, "corbett");
    RotationSeq s = make_sequence({2, 2}, 2);
    for (int m = 3; m <= n; ++m) s = reuse(s, m);
    return s;
}

RotationSeq staircase(int n, int cap) {
    if (n < 2) throw std::invalid_argument("staircase requires n >= 2");
    require_cap(n, cap, "staircase");
    RotationSeq s = make_sequence({2, 2}, 2);
    for (int m = 3; m <= n; ++m) s = step(s, m);
    return s;
}

RotationSeq recycled_corbett(int n, int cap) {
    if (n < 3) throw std::invalid_argument("recycled_corbett requires n >= 3");
    require_cap(n, cap, "recycled_corbett");
    return recycle(corbett(n - 1, cap), n);
}

RotationSeq reuse_recycled_corbett(int n, int cap) {
    if (n < 4) throw std::invalid_argument("reuse_recycled_corbett requires n >= 4");
    require_cap(n, cap, "reuse_recycled_corbett");
    return reuse(recycled_corbett(n - 1, cap), n);
}

GeneratorSet alphabet(const RotationSeq& s) {
    return GeneratorSet(s.values.begin(), s.values.end());
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial domain is 0..20");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

}  // namespace rotgen
