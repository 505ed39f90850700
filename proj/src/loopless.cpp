#include "rotgen/loopless.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace rotgen {

std::vector<int> rotation_table(int n) {
    if (n < 2) throw std::invalid_argument("rotation table requires n >= 2");
    std::vector<int> r(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
        r[static_cast<std::size_t>(j) - 1] = (j % 2 == 1) ? n - (j - 1) / 2 : j / 2 + 1;
    return r;
}

FocusStepper::FocusStepper(int n)
    : n_(n),
      a_(static_cast<std::size_t>(n >= 2 ? n : 0), 0),
      f_(static_cast<std::size_t>(n >= 2 ? n : 0)),
      r_(rotation_table(n)) {
    std::iota(f_.begin(), f_.end(), 1);
}

void FocusStepper::reset() {
    std::fill(a_.begin(), a_.end(), 0);
    std::iota(f_.begin(), f_.end(), 1);
    done_ = false;
    last_step_ops_ = 0;
}

StepEvent FocusStepper::step() {
    if (done_) throw std::logic_error("step() called on a finished stepper");
    // Elementary reads/writes of a_/f_/r_ are tallied per branch; the totals
    // are constants, independent of n.
    const int j = f_[0];
    const int value = r_[static_cast<std::size_t>(j) - 1];
    if (j == n_) {
        done_ = true;
        last_step_ops_ = 2;  // read f_1, read r_j
        return {j, value, true};
    }
    f_[0] = 1;
    const int aj = a_[static_cast<std::size_t>(j) - 1] + 1;
    if (aj == n_ - j) {
        a_[static_cast<std::size_t>(j) - 1] = 0;
        f_[static_cast<std::size_t>(j) - 1] = f_[static_cast<std::size_t>(j)];
        f_[static_cast<std::size_t>(j)] = j + 1;
        // read f_1, read r_j, write f_1, read a_j, write a_j,
        // read f_{j+1}, write f_j, write f_{j+1}
        last_step_ops_ = 8;
    } else {
        a_[static_cast<std::size_t>(j) - 1] = aj;
        // read f_1, read r_j, write f_1, read a_j, write a_j
        last_step_ops_ = 5;
    }
    return {j, value, false};
}

int StaircaseStream::next() {
    const StepEvent e = stepper_.step();
    if (e.last && !raw_) return 2;  // the recursive staircase closes with 2
    return stepper_.order() - e.j + 1;
}

BlockStream::BlockStream(BlockKind kind, int m, int stepper_order)
    : stepper_(stepper_order), kind_(kind), m_(m) {
    const int n = stepper_order;
    blocks_.resize(static_cast<std::size_t>(n));
    const auto& table = stepper_.table();
    for (int j = 1; j <= n; ++j) {
        const int r = table[static_cast<std::size_t>(j) - 1];
        auto& block = blocks_[static_cast<std::size_t>(j) - 1];
        if (kind == BlockKind::recycle) {
            // m, m, (r-1 copies of m-1), (n-r copies of m)
            block.reserve(static_cast<std::size_t>(m));
            block.push_back(m);
            block.push_back(m);
            block.insert(block.end(), static_cast<std::size_t>(r - 1), m - 1);
            block.insert(block.end(), static_cast<std::size_t>(n - r), m);
        } else {
            // the recycle block one order down, with every value i expanded
            // to (m-1 copies of m), m-i+1
            block.reserve(static_cast<std::size_t>((m - 1) * m));
            auto run_then = [this, &block](int tail) {
                block.insert(block.end(), static_cast<std::size_t>(m_ - 1), m_);
                block.push_back(tail);
            };
            run_then(2);
            run_then(2);
            for (int k = 0; k < r - 1; ++k) run_then(3);
            for (int k = 0; k < n - r; ++k) run_then(2);
        }
    }
}

BlockStream BlockStream::recycled(int m) {
    if (m < 3) throw std::invalid_argument("recycled block stream requires m >= 3");
    return BlockStream(BlockKind::recycle, m, m - 1);
}

BlockStream BlockStream::reuse_recycled(int m) {
    if (m < 4) throw std::invalid_argument("reuse-recycled block stream requires m >= 4");
    return BlockStream(BlockKind::reuse_recycle, m, m - 2);
}

int BlockStream::block_length() const {
    return kind_ == BlockKind::recycle ? m_ : (m_ - 1) * m_;
}

const std::vector<int>& BlockStream::next() {
    const StepEvent e = stepper_.step();
    return blocks_[static_cast<std::size_t>(e.j) - 1];
}

}  // namespace rotgen
