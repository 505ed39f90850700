#include "rotgen/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace rotgen {

namespace {

void validate_symbols(const std::vector<int>& symbols) {
    const int n = static_cast<int>(symbols.size());
    if (n < 1) throw std::invalid_argument("permutation order must be >= 1");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : symbols) {
        if (v < 1 || v > n)
            throw std::invalid_argument("symbol " + std::to_string(v) +
                                        " outside 1.." + std::to_string(n));
        if (seen[static_cast<std::size_t>(v) - 1])
            throw std::invalid_argument("duplicate symbol " + std::to_string(v));
        seen[static_cast<std::size_t>(v) - 1] = true;
    }
}

}  // namespace

Permutation::Permutation(std::vector<int> symbols) : symbols_(std::move(symbols)) {
    validate_symbols(symbols_);
}

Permutation Permutation::descending(int n) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
    std::vector<int> s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(s));
}

Permutation Permutation::parse(std::string_view text) {
    std::string trimmed(text);
    const auto first = trimmed.find_first_not_of(" \t\r\n");
    const auto last = trimmed.find_last_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("empty permutation text");
    trimmed = trimmed.substr(first, last - first + 1);

    std::vector<int> symbols;
    if (trimmed.find_first_of(" \t") != std::string::npos) {
        std::istringstream in(trimmed);
        int v = 0;
        while (in >> v) symbols.push_back(v);
        if (!in.eof()) throw std::invalid_argument("malformed permutation text: " + trimmed);
    } else {
        // Compact digit form, one symbol per character; only sound for n <= 9.
        for (char c : trimmed) {
            if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
                throw std::invalid_argument("malformed permutation text: " + trimmed);
            symbols.push_back(c - '0');
        }
    }
    return Permutation(std::move(symbols));
}

std::string Permutation::str(bool compact) const {
    std::string out;
    if (compact) {
        if (order() > 9)
            throw std::invalid_argument("compact form requires order <= 9");
        for (int v : symbols_) out.push_back(static_cast<char>('0' + v));
        return out;
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(symbols_[i]);
    }
    return out;
}

std::uint64_t Permutation::rank() const { return perm_rank(symbols_); }

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    return os << p.str();
}

std::uint64_t perm_rank(std::span<const int> symbols) {
    const std::size_t n = symbols.size();
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
        int smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            smaller += symbols[j] < symbols[i];
        r = r * (n - i) + static_cast<std::uint64_t>(smaller);
    }
    return r;
}

Permutation prefix_rotate(const Permutation& p, int k) {
    const int n = p.order();
    if (k < 2 || k > n)
        throw std::out_of_range("prefix rotation length " + std::to_string(k) +
                                " outside 2.." + std::to_string(n));
    std::vector<int> s = p.symbols();
    std::rotate(s.begin(), s.begin() + 1, s.begin() + k);
    return Permutation(std::move(s));
}

Permutation suffix_rotate(const Permutation& p, int i) {
    const int n = p.order();
    if (i < 2 || i > n)
        throw std::out_of_range("suffix rotation length " + std::to_string(i) +
                                " outside 2.." + std::to_string(n));
    std::vector<int> s = p.symbols();
    std::rotate(s.end() - i, s.end() - 1, s.end());
    return Permutation(std::move(s));
}

Permutation modified_prefix_rotate(const Permutation& p, int i) {
    const int n = p.order();
    if (i < 2 || i > n - 1)
        throw std::out_of_range("modified prefix rotation length " + std::to_string(i) +
                                " outside 2.." + std::to_string(n - 1));
    std::vector<int> s = p.symbols();
    std::rotate(s.begin() + 1, s.begin() + 2, s.begin() + 1 + i);
    return Permutation(std::move(s));
}

Permutation double_reverse(const Permutation& p) {
    const int n = p.order();
    const auto& s = p.symbols();
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = n - s[static_cast<std::size_t>(n - 1 - i)] + 1;
    return Permutation(std::move(out));
}

PermList double_reverse_list(const PermList& list) {
    PermList out;
    out.cyclic = list.cyclic;
    out.items.reserve(list.items.size());
    for (const auto& p : list.items) out.items.push_back(double_reverse(p));
    return out;
}

void walk_sequence(const Permutation& p, std::span<const int> values,
                   bool include_last,
                   const std::function<void(const Permutation&)>& visit) {
    const int n = p.order();
    std::vector<int> cur = p.symbols();
    for (std::size_t idx = 0; idx < values.size(); ++idx) {
        visit(Permutation(cur));
        const int k = values[idx];
        if (k < 2 || k > n)
            throw std::out_of_range("rotation value " + std::to_string(k) +
                                    " at index " + std::to_string(idx) +
                                    " outside 2.." + std::to_string(n));
        std::rotate(cur.begin(), cur.begin() + 1, cur.begin() + k);
    }
    if (include_last) visit(Permutation(std::move(cur)));
}

PermList apply_sequence(const Permutation& p, std::span<const int> values,
                        bool include_last, int cap) {
    if (p.order() > cap)
        throw std::length_error("order " + std::to_string(p.order()) +
                                " exceeds materialization cap " + std::to_string(cap));
    PermList out;
    out.items.reserve(values.size() + 1);
    walk_sequence(p, values, true,
                  [&out](const Permutation& q) { out.items.push_back(q); });
    const bool wraps = out.items.front() == out.items.back();
    if (!include_last) {
        out.items.pop_back();
        out.cyclic = wraps;
    }
    return out;
}

QuotientResult quotient(const PermList& list, int x) {
    QuotientResult out;
    out.cyclic = list.cyclic;
    if (list.items.empty()) {
        out.canonical = true;
        return out;
    }
    const int n = list.order();
    if (x < 1 || x > n)
        throw std::invalid_argument("quotient symbol " + std::to_string(x) +
                                    " outside 1.." + std::to_string(n));
    out.canonical = (x == n);
    for (const auto& p : list.items) {
        if (p.at(1) != x) continue;
        out.rows.emplace_back(p.symbols().begin() + 1, p.symbols().end());
    }
    return out;
}

PermList QuotientResult::as_list() const {
    if (!canonical)
        throw std::logic_error("quotient rows are not permutations of a contiguous range");
    PermList out;
    out.cyclic = cyclic;
    out.items.reserve(rows.size());
    for (const auto& row : rows) out.items.emplace_back(row);
    return out;
}

bool is_periodic(const PermList& list, int x) {
    if (list.items.empty()) throw std::invalid_argument("empty list");
    const int n = list.order();
    if (x < 1 || x > n)
        throw std::invalid_argument("symbol " + std::to_string(x) + " not present");
    auto position = [x](const Permutation& p) {
        const auto& s = p.symbols();
        const auto it = std::find(s.begin(), s.end(), x);
        return static_cast<int>(it - s.begin()) + 1;
    };
    int prev = position(list.items.front());
    for (std::size_t k = 1; k < list.items.size(); ++k) {
        const int cur = position(list.items[k]);
        const int want = (prev == 1) ? n : prev - 1;
        if (cur != want) return false;
        prev = cur;
    }
    return true;
}

}  // namespace rotgen
