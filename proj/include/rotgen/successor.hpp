#pragma once

#include <vector>

#include "rotgen/permutation.hpp"

// Memoryless navigation of the corbett cycle: the next rotation is computed
// from the current permutation alone, and for the recycled cycle one order
// up, the block owner of an arbitrary permutation is recovered in closed
// form from the position of its largest symbol and four run lengths.

namespace rotgen {

/// Run lengths over the window a_2..a_n of a permutation a_1..a_n:
///   x: longest prefix of the window matching n, n-1, n-2, ...
///   y: longest suffix of the window matching ..., 3, 2, 1 (the run must
///      reach the symbol 1; otherwise y = 0).
struct RunLengths {
    int x = 0;
    int y = 0;
};

/// Requires order >= 2.
RunLengths run_lengths(const Permutation& p);

struct SuccessorStep {
    Permutation next;
    int rotation;  ///< the k of the prefix rotation applied
};

/// The successor of p along corbett(n): prefix_rotate by y+2 when x > y,
/// by n-x otherwise. Iterating from n n-1 ... 1 reproduces the whole cycle.
SuccessorStep corbett_successor(const Permutation& p);

enum class LocatorCase {
    trivial_first,        ///< largest symbol leads: block start
    trivial_last,         ///< largest symbol trails: second block entry
    trivial_second_last,  ///< third block entry
    b_tail,               ///< x_b <= y_a: last b symbol fronts gamma
    suffix_run,           ///< x_b > y_a, x' > y': gamma symbol y'+2 fronts
    prefix_run,           ///< x_b > y_a, x' <= y': gamma symbol n-x' fronts
};

const char* locator_case_name(LocatorCase c);

/// Working data of locate_predecessor. Writing t = a_i..a_n (n+1) b_1..b_{i-1}
/// around the largest symbol, gamma is b_1..b_{i-1} a_i..a_n (a permutation
/// of 1..n) and the four run lengths are measured on windows of gamma:
/// x_b on g_1..g_{i-2}, y_a on g_i..g_n, x' on g_1..g_p, y' on the final q
/// symbols, with p = ceil(n/2)-1 and q = floor(n/2)-1. Empty windows give
/// run length 0.
struct LocatorContext {
    std::vector<int> gamma;
    int i = 0;  ///< split index of t around the largest symbol
    int p = 0;
    int q = 0;
    int x_b = 0;
    int y_a = 0;
    int x_prime = 0;
    int y_prime = 0;
    LocatorCase chosen = LocatorCase::trivial_first;
    int rotation = 0;     ///< corbett arc out of alpha
    int block_entry = 0;  ///< index of t within alpha's recycled block, 0-based
};

struct LocateResult {
    Permutation alpha;
    LocatorContext ctx;
};

/// For t of order n+1 >= 4, returns the order-n corbett-cycle node alpha
/// whose recycled block contains t, chosen by the closed-form case analysis;
/// block_entry records where in the block t sits. alpha always carries
/// a_i..a_n as a suffix. Verified internally: if the selected block does not
/// contain t a std::logic_error is thrown.
LocateResult locate_predecessor(const Permutation& t);

}  // namespace rotgen
