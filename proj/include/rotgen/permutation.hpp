#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

// Core permutation algebra: one-line permutations of 1..n and the three
// rotation moves used throughout the library, plus list utilities (quotient,
// double-reverse, periodicity) needed by the sequence lemmas.

namespace rotgen {

/// Materializing operations refuse orders above this cap unless the caller
/// passes a larger one explicitly; n! entries get out of hand quickly.
inline constexpr int kMaterializeCap = 12;

/// A permutation of the symbols 1..n in one-line notation.
/// Symbol positions are 1-based at the interface. Immutable once built.
class Permutation {
public:
    /// Validates that `symbols` is a bijection on 1..n; throws
    /// std::invalid_argument otherwise.
    explicit Permutation(std::vector<int> symbols);

    /// The descending permutation n n-1 ... 1.
    static Permutation descending(int n);

    /// Parses "4 3 2 1" (space-separated) or "4321" (compact digits,
    /// only valid for n <= 9).
    static Permutation parse(std::string_view text);

    int order() const { return static_cast<int>(symbols_.size()); }

    /// 1-based access: at(1) is the first symbol.
    int at(int pos) const { return symbols_[static_cast<std::size_t>(pos) - 1]; }

    const std::vector<int>& symbols() const { return symbols_; }

    /// Space-separated text, or a compact digit string when requested
    /// (compact requires n <= 9).
    std::string str(bool compact = false) const;

    /// Rank in [0, n!) under the factorial number system.
    std::uint64_t rank() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> symbols_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Rank of a raw symbol vector, same ordering as Permutation::rank().
std::uint64_t perm_rank(std::span<const int> symbols);

/// An ordered list of equal-order permutations. `cyclic` records whether the
/// list is asserted to wrap around (the step from last back to first is part
/// of the walk it came from).
struct PermList {
    std::vector<Permutation> items;
    bool cyclic = false;

    int order() const { return items.empty() ? 0 : items.front().order(); }
    std::size_t size() const { return items.size(); }
    bool operator==(const PermList&) const = default;
};

/// sigma_k: the first k symbols rotate one position left. 2 <= k <= n.
Permutation prefix_rotate(const Permutation& p, int k);

/// sigma-hat_i: the last symbol jumps left to position n-i+1 and the i-1
/// symbols it crossed shift one place right. 2 <= i <= n; i = n is the
/// inverse of the full-length prefix rotation.
Permutation suffix_rotate(const Permutation& p, int i);

/// sigma-prime_i: positions 2..i+1 rotate one place left, the first symbol
/// stays put. 2 <= i <= n-1.
Permutation modified_prefix_rotate(const Permutation& p, int i);

/// Reverses the symbol order and complements each value x -> n-x+1.
/// An involution; the descending permutation is a fixed point.
Permutation double_reverse(const Permutation& p);
PermList double_reverse_list(const PermList& list);

/// The walk beta_0 = p, beta_t = prefix_rotate(beta_{t-1}, values[t-1]).
/// With include_last the list has |values|+1 entries; without it the final
/// entry is dropped (for a Hamilton sequence it equals the start) and
/// `cyclic` records whether it did wrap. Orders above `cap` are refused
/// with std::length_error.
PermList apply_sequence(const Permutation& p, std::span<const int> values,
                        bool include_last, int cap = kMaterializeCap);

/// Streaming form of apply_sequence: visit(beta_t) for each entry in order,
/// nothing materialized. Same include_last convention, no order cap.
void walk_sequence(const Permutation& p, std::span<const int> values,
                   bool include_last,
                   const std::function<void(const Permutation&)>& visit);

/// Quotient of a list by a symbol x: keep the strings beginning with x and
/// strip that leading x. The rows form permutations of 1..n-1 only when
/// x = n; quotients by other symbols are permitted but flagged, since no
/// relabeling is performed.
struct QuotientResult {
    std::vector<std::vector<int>> rows;
    bool canonical = false;
    bool cyclic = false;

    /// The rows as a PermList; throws std::logic_error unless canonical.
    PermList as_list() const;
};
QuotientResult quotient(const PermList& list, int x);

/// True iff the position of x decreases by exactly one (cyclically) between
/// every pair of successive entries. x must occur in the permutations.
bool is_periodic(const PermList& list, int x);

}  // namespace rotgen
