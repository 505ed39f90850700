#include "rotgen/successor.hpp"

#include <algorithm>
#include <stdexcept>

namespace rotgen {

namespace {

// Longest prefix of `w` matching top, top-1, top-2, ...
int descending_prefix_run(std::span<const int> w, int top) {
    int len = 0;
    while (len < static_cast<int>(w.size()) && w[static_cast<std::size_t>(len)] == top - len)
        ++len;
    return len;
}

// Longest suffix of `w` matching ..., 3, 2, 1.
int ascending_suffix_run(std::span<const int> w) {
    const int size = static_cast<int>(w.size());
    int len = 0;
    while (len < size && w[static_cast<std::size_t>(size - 1 - len)] == len + 1)
        ++len;
    return len;
}

// gamma with its k-th symbol (1-based) moved to the front, order preserved.
std::vector<int> front_symbol(const std::vector<int>& gamma, int k) {
    std::vector<int> out;
    out.reserve(gamma.size());
    out.push_back(gamma[static_cast<std::size_t>(k) - 1]);
    for (std::size_t j = 0; j < gamma.size(); ++j)
        if (j != static_cast<std::size_t>(k) - 1) out.push_back(gamma[j]);
    return out;
}

}  // namespace

RunLengths run_lengths(const Permutation& p) {
    const int n = p.order();
    if (n < 2) throw std::invalid_argument("run lengths require order >= 2");
    const std::span<const int> window(p.symbols().data() + 1,
                                      static_cast<std::size_t>(n) - 1);
    return {descending_prefix_run(window, n), ascending_suffix_run(window)};
}

SuccessorStep corbett_successor(const Permutation& p) {
    const auto [x, y] = run_lengths(p);
    const int k = (x > y) ? y + 2 : p.order() - x;
    return {prefix_rotate(p, k), k};
}

const char* locator_case_name(LocatorCase c) {
    switch (c) {
        case LocatorCase::trivial_first: return "trivial-first";
        case LocatorCase::trivial_last: return "trivial-last";
        case LocatorCase::trivial_second_last: return "trivial-second-last";
        case LocatorCase::b_tail: return "b-tail";
        case LocatorCase::suffix_run: return "suffix-run";
        case LocatorCase::prefix_run: return "prefix-run";
    }
    return "?";
}

LocateResult locate_predecessor(const Permutation& t) {
    const int big = t.order();  // n + 1
    if (big < 4) throw std::invalid_argument("locate_predecessor requires order >= 4");
    const int n = big - 1;
    const auto& ts = t.symbols();
    const int pos0 = static_cast<int>(std::find(ts.begin(), ts.end(), big) - ts.begin());

    // t = a_i..a_n (n+1) b_1..b_{i-1} around the largest symbol.
    const int i = big - pos0;
    const std::vector<int> a(ts.begin(), ts.begin() + pos0);
    const std::vector<int> b(ts.begin() + pos0 + 1, ts.end());

    LocatorContext ctx;
    ctx.i = i;
    ctx.gamma = b;
    ctx.gamma.insert(ctx.gamma.end(), a.begin(), a.end());
    ctx.p = (n + 1) / 2 - 1;
    ctx.q = n / 2 - 1;

    const std::span<const int> g(ctx.gamma);
    ctx.x_b = descending_prefix_run(g.first(static_cast<std::size_t>(std::max(i - 2, 0))), n);
    ctx.y_a = ascending_suffix_run(g.last(a.size()));
    ctx.x_prime = descending_prefix_run(g.first(static_cast<std::size_t>(std::max(ctx.p, 0))), n);
    ctx.y_prime = ascending_suffix_run(g.last(static_cast<std::size_t>(std::max(ctx.q, 0))));

    std::vector<int> alpha_symbols;
    if (pos0 == 0) {
        ctx.chosen = LocatorCase::trivial_first;
        alpha_symbols = b;
    } else if (pos0 == big - 1) {
        ctx.chosen = LocatorCase::trivial_last;
        alpha_symbols = a;
    } else if (pos0 == big - 2) {
        ctx.chosen = LocatorCase::trivial_second_last;
        alpha_symbols.reserve(static_cast<std::size_t>(n));
        alpha_symbols.push_back(b.front());
        alpha_symbols.insert(alpha_symbols.end(), a.begin(), a.end());
    } else if (ctx.x_b <= ctx.y_a) {
        ctx.chosen = LocatorCase::b_tail;
        alpha_symbols = front_symbol(ctx.gamma, i - 1);
    } else if (ctx.x_prime > ctx.y_prime) {
        ctx.chosen = LocatorCase::suffix_run;
        alpha_symbols = front_symbol(ctx.gamma, ctx.y_prime + 2);
    } else {
        ctx.chosen = LocatorCase::prefix_run;
        alpha_symbols = front_symbol(ctx.gamma, n - ctx.x_prime);
    }

    Permutation alpha(std::move(alpha_symbols));
    ctx.rotation = corbett_successor(alpha).rotation;

    // Walk alpha's recycled block and find t in it. Block entries start at
    // (n+1) alpha and follow n+1, n+1, (rotation-1 copies of n), then n+1.
    std::vector<int> rotations;
    rotations.reserve(static_cast<std::size_t>(big));
    rotations.push_back(big);
    rotations.push_back(big);
    rotations.insert(rotations.end(), static_cast<std::size_t>(ctx.rotation - 1), big - 1);
    rotations.insert(rotations.end(), static_cast<std::size_t>(n - ctx.rotation), big);

    std::vector<int> cur;
    cur.reserve(static_cast<std::size_t>(big));
    cur.push_back(big);
    cur.insert(cur.end(), alpha.symbols().begin(), alpha.symbols().end());
    int entry = -1;
    for (int e = 0; e < big; ++e) {
        if (cur == ts) {
            entry = e;
            break;
        }
        std::rotate(cur.begin(), cur.begin() + 1,
                    cur.begin() + rotations[static_cast<std::size_t>(e)]);
    }
    if (entry < 0)
        throw std::logic_error("selected block does not contain the target permutation");
    ctx.block_entry = entry;

    return {std::move(alpha), std::move(ctx)};
}

}  // namespace rotgen
