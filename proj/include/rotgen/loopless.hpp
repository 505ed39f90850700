#pragma once

#include <vector>

#include "rotgen/sequence.hpp"

// Loopless generation. A focus-pointer stepper walks the mixed-radix word
// a_1..a_n (digit a_j counts 0..n-j-1) and emits one focus index per step in
// O(1) worst case; skins over the emitted index reproduce the staircase and
// corbett sequences value by value, and block skins reproduce the recycled
// variants block by block, so arbitrarily large sequences stream without
// being materialized.

namespace rotgen {

/// One stepper advance.
struct StepEvent {
    int j;      ///< focus index consumed, 1..n
    int r;      ///< table value r_j (the corbett rotation for this step)
    bool last;  ///< true when j = n; the stepper is finished afterwards
};

/// The rotation table r_1..r_n = n, 2, n-1, 3, n-2, ... (interleaving n
/// down-steps with 2 up-steps); the final two entries both equal
/// ceil((n+1)/2). Entry r_j is the corbett value paired with staircase
/// value n-j+1.
std::vector<int> rotation_table(int n);

/// Focus-pointer stepper. State is two arrays: digits a_1..a_n (all zero
/// initially) and focus pointers f_1..f_n (initially the identity). Each
/// step reads j = f_1, emits it, then advances digit a_j, passing the focus
/// along when the digit overflows. Exactly n! steps occur before done().
class FocusStepper {
public:
    /// Requires n >= 2.
    explicit FocusStepper(int n);

    int order() const { return n_; }
    bool done() const { return done_; }
    const std::vector<int>& digits() const { return a_; }
    const std::vector<int>& focus() const { return f_; }
    const std::vector<int>& table() const { return r_; }

    /// Advances one step; throws std::logic_error once done().
    StepEvent step();

    /// Count of elementary state reads/writes performed by the most recent
    /// step(). Bounded by a constant independent of n.
    int last_step_ops() const { return last_step_ops_; }

    /// Returns to the freshly constructed state.
    void reset();

private:
    int n_;
    bool done_ = false;
    int last_step_ops_ = 0;
    std::vector<int> a_;
    std::vector<int> f_;
    std::vector<int> r_;
};

/// Streams corbett(n) one value per pull, n >= 2.
class CorbettStream {
public:
    explicit CorbettStream(int n) : stepper_(n) {}
    bool done() const { return stepper_.done(); }
    int order() const { return stepper_.order(); }
    int next() { return stepper_.step().r; }
    void reset() { stepper_.reset(); }

private:
    FocusStepper stepper_;
};

/// Streams staircase(n) one value per pull, n >= 2. In raw mode the final
/// value is emitted as 1 (the stepper's last focus is j = n, and n-j+1 = 1)
/// instead of the 2 that closes the recursive staircase; the default mode
/// patches that final value so the stream matches staircase(n) exactly.
class StaircaseStream {
public:
    explicit StaircaseStream(int n, bool raw = false) : stepper_(n), raw_(raw) {}
    bool done() const { return stepper_.done(); }
    int order() const { return stepper_.order(); }
    int next();
    void reset() { stepper_.reset(); }

private:
    FocusStepper stepper_;
    bool raw_;
};

enum class BlockKind {
    recycle,        ///< blocks of recycled_corbett(m), length m each
    reuse_recycle,  ///< blocks of reuse_recycled_corbett(m), length (m-1)*m
};

/// Streams the recycled constructions block by block: a stepper of a lower
/// order drives the walk and each StepEvent expands, via a table built once
/// at construction, to one block of the order-m output sequence.
class BlockStream {
public:
    /// Blocks of recycled_corbett(m); stepper order m-1. Requires m >= 3.
    static BlockStream recycled(int m);

    /// Blocks of reuse_recycled_corbett(m); stepper order m-2. Requires m >= 4.
    static BlockStream reuse_recycled(int m);

    bool done() const { return stepper_.done(); }
    BlockKind kind() const { return kind_; }
    int target_order() const { return m_; }
    int stepper_order() const { return stepper_.order(); }
    int block_length() const;

    /// The next block's values; the reference stays valid until the next
    /// call. Throws std::logic_error once done().
    const std::vector<int>& next();

    void reset() { stepper_.reset(); }

private:
    BlockStream(BlockKind kind, int m, int stepper_order);

    FocusStepper stepper_;
    BlockKind kind_;
    int m_;
    std::vector<std::vector<int>> blocks_;  // indexed by focus j-1
};

}  // namespace rotgen
