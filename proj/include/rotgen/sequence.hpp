#pragma once

#include <set>
#include <vector>

#include "rotgen/permutation.hpp"

// Rotation-sequence builders. A sequence lists prefix-rotation lengths; the
// three blockwise operators lift a sequence over order n-1 to one over order
// n, and iterating them yields the length-n! Hamilton sequences for the full
// rotator graph and its {n-1,n} / {2,3,n} restrictions.

namespace rotgen {

using GeneratorSet = std::set<int>;

/// A finite sequence of rotation lengths over an ambient order: every value
/// lies in 2..order_n. Applied left to right by apply_sequence.
struct RotationSeq {
    std::vector<int> values;
    int order_n = 0;

    std::size_t size() const { return values.size(); }
    bool operator==(const RotationSeq&) const = default;
};

/// Validates every value against 2..order_n; throws std::invalid_argument.
RotationSeq make_sequence(std::vector<int> values, int order_n);

// Blockwise operators. Every input value i must satisfy 1 < i < n; each
// expands to a block of n values (output length n * |s|).

/// i -> (n-1 copies of n), n-i+1
RotationSeq reuse(const RotationSeq& s, int n);

/// i -> n, n, (i-1 copies of n-1), (n-i-1 copies of n)
RotationSeq recycle(const RotationSeq& s, int n);

/// i -> (n-1 copies of n), i
RotationSeq step(const RotationSeq& s, int n);

// Length-n! constructions. Builders materialize; orders above `cap` are
// refused with std::length_error (pass a larger cap to override).

/// reuse-iterated from 2,2. Hamilton sequence for the full rotator graph;
/// alphabet {2..n}. Requires n >= 2.
RotationSeq corbett(int n, int cap = kMaterializeCap);

/// step-iterated from 2,2: the plain mixed-radix staircase that indexes the
/// loopless stepper. Requires n >= 2.
RotationSeq staircase(int n, int cap = kMaterializeCap);

/// recycle(corbett(n-1), n). Hamilton sequence for the {n-1,n}-restricted
/// rotator graph; alphabet {n-1,n}. Requires n >= 3.
RotationSeq recycled_corbett(int n, int cap = kMaterializeCap);

/// reuse(recycled_corbett(n-1), n). Hamilton sequence for the {2,3,n}-
/// restricted rotator graph; alphabet within {2,3,n}. Requires n >= 4.
RotationSeq reuse_recycled_corbett(int n, int cap = kMaterializeCap);

/// The set of distinct values used by s.
GeneratorSet alphabet(const RotationSeq& s);

/// n! as an unsigned 64-bit count; requires 0 <= n <= 20.
std::uint64_t factorial(int n);

}  // namespace rotgen
