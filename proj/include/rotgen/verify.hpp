#pragma once

#include <cstdint>
#include <optional>

#include "rotgen/permutation.hpp"
#include "rotgen/sequence.hpp"

// Brute-force verification: Hamiltonicity audits of rotation sequences,
// exhaustive checks of the rotation identities and quotient lemmas that
// justify the constructions, and the shorthand-prefix cycle.

namespace rotgen {

/// Full audits key a table by permutation rank, so orders above this are
/// refused (10! is ~3.6M entries; 11! would not fit comfortably).
inline constexpr int kAuditCap = 10;

struct VerifyReport {
    std::int64_t total_visited = 0;
    std::int64_t distinct_visited = 0;

    struct Duplicate {
        Permutation perm;
        std::int64_t first_index;
        std::int64_t second_index;
    };
    /// The first revisit event along the walk, if any.
    std::optional<Duplicate> first_duplicate;

    bool cyclic = false;       ///< walk returned to its start
    GeneratorSet alphabet;     ///< distinct rotation values used
    bool hamiltonian = false;  ///< distinct = total = n! and cyclic
    int order = 0;
};

/// Walks s from `start` (default n n-1 ... 1) and reports what happened.
/// |s| = n! is expected for a Hamilton sequence but not required; the report
/// reflects reality. Failure is data, not an exception. Requires
/// 1 <= n <= kAuditCap and every value in 2..n.
VerifyReport check_hamilton(const RotationSeq& s, int n);
VerifyReport check_hamilton(const RotationSeq& s, int n, const Permutation& start);

/// Quotienting the recycled walk by n recovers the original walk one order
/// down: quotient(alpha_n (*) recycle(s, n), n) = alpha_{n-1} (*) s, both
/// sides excluding their final entry. Values of s must lie in 2..n-1.
bool check_lemma1(const RotationSeq& s, int n);

/// Quotienting the reused walk by n recovers the double-reverse of the
/// original walk: quotient(alpha_n (*) reuse(s, n), n) =
/// double_reverse_list(alpha_{n-1} (*) s), both sides including their final
/// entry. Values of s must lie in 2..n-1.
bool check_lemma2(const RotationSeq& s, int n);

/// The two rotation identities behind reuse and recycle, checked for every
/// permutation of 1..n (n <= 6) or a fixed random sample (n > 6), for all
/// i in 2..n-1:
///   sigma_n^(n-1) then sigma_(n-i+1)            equals suffix_rotate(., i)
///   sigma_n^2, sigma_(n-1)^(i-1), sigma_n^(n-i-1) equals
///                                       modified_prefix_rotate(., i)
/// Requires n >= 3.
bool check_identities(int n);

/// Reproduces the boundary of the recycle operator: a particular Hamilton
/// sequence for order 4 whose recycled lift is not Hamiltonian, and whose
/// reuse-then-recycle lift is not Hamiltonian either. recycle preserves
/// Hamiltonicity of the corbett sequences but not of Hamilton sequences in
/// general. The classic witness in the recycled walk is 45312, visited
/// twice; the walk hits an earlier revisit too, which first_duplicate
/// reports.
struct CounterexampleReport {
    RotationSeq base;                ///< the order-4 Hamilton sequence
    VerifyReport base_report;        ///< hamiltonian
    VerifyReport recycle5_report;    ///< not hamiltonian
    VerifyReport reuse5_recycle6_report;  ///< not hamiltonian

    /// Walk positions of 45312 in the recycled walk; two of them.
    std::vector<std::int64_t> witness_positions;

    bool reproduced() const;
};
CounterexampleReport counterexample_demo();

/// The circular string of first symbols along the {m-1,m}-restricted Gray
/// code, length m!. Every circular window of m-1 symbols is the shorthand
/// prefix of a distinct permutation of 1..m; the property is audited before
/// returning and its failure (a generator bug) throws std::logic_error.
/// Requires 3 <= m <= kAuditCap.
std::vector<int> sp_cycle(int m);

}  // namespace rotgen
