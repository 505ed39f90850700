#include "rotgen/verify.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace rotgen {

namespace {

void require_audit_order(int n, const char* what) {
    if (n > kAuditCap)
        throw std::length_error(std::string(what) + ": order " + std::to_string(n) +
                                " exceeds audit cap " + std::to_string(kAuditCap));
}

}  // namespace

VerifyReport check_hamilton(const RotationSeq& s, int n) {
    return check_hamilton(s, n, Permutation::descending(n));
}

VerifyReport check_hamilton(const RotationSeq& s, int n, const Permutation& start) {
    if (n < 1) throw std::invalid_argument("check_hamilton requires n >= 1");
    require_audit_order(n, "check_hamilton");
    if (start.order() != n)
        throw std::invalid_argument("start permutation order does not match n");
    for (int v : s.values) {
        if (v < 2 || v > n)
            throw std::invalid_argument("rotation value " + std::to_string(v) +
                                        " outside 2.." + std::to_string(n));
    }

    VerifyReport report;
    report.order = n;
    report.alphabet = alphabet(s);

    const std::uint64_t target = factorial(n);
    // visit_at[rank] = index of the first visit + 1, or 0 when unvisited.
    std::vector<std::int64_t> visit_at(target, 0);

    std::vector<int> cur = start.symbols();
    for (std::size_t idx = 0; idx < s.values.size(); ++idx) {
        const std::uint64_t r = perm_rank(cur);
        ++report.total_visited;
        if (visit_at[r] == 0) {
            visit_at[r] = static_cast<std::int64_t>(idx) + 1;
            ++report.distinct_visited;
        } else if (!report.first_duplicate) {
            report.first_duplicate = VerifyReport::Duplicate{
                Permutation(cur), visit_at[r] - 1, static_cast<std::int64_t>(idx)};
        }
        std::rotate(cur.begin(), cur.begin() + 1, cur.begin() + s.values[idx]);
    }
    report.cyclic = (cur == start.symbols());
    report.hamiltonian = report.cyclic &&
                         report.total_visited == static_cast<std::int64_t>(target) &&
                         report.distinct_visited == static_cast<std::int64_t>(target);
    return report;
}

bool check_lemma1(const RotationSeq& s, int n) {
    if (n < 3) throw std::invalid_argument("check_lemma1 requires n >= 3");
    const auto lifted = apply_sequence(Permutation::descending(n),
                                       recycle(s, n).values, false);
    const auto reduced = quotient(lifted, n).as_list();
    const auto direct = apply_sequence(Permutation::descending(n - 1), s.values, false);
    return reduced.items == direct.items;
}

bool check_lemma2(const RotationSeq& s, int n) {
    if (n < 3) throw std::invalid_argument("check_lemma2 requires n >= 3");
    const auto lifted = apply_sequence(Permutation::descending(n),
                                       reuse(s, n).values, true);
    const auto reduced = quotient(lifted, n).as_list();
    const auto direct = apply_sequence(Permutation::descending(n - 1), s.values, true);
    return reduced.items == double_reverse_list(direct).items;
}

bool check_identities(int n) {
    if (n < 3) throw std::invalid_argument("check_identities requires n >= 3");

    auto holds_for = [n](const Permutation& p) {
        for (int i = 2; i <= n - 1; ++i) {
            Permutation lhs = p;
            for (int rep = 0; rep < n - 1; ++rep) lhs = prefix_rotate(lhs, n);
            lhs = prefix_rotate(lhs, n - i + 1);
            if (lhs != suffix_rotate(p, i)) return false;

            Permutation rhs = prefix_rotate(prefix_rotate(p, n), n);
            for (int rep = 0; rep < i - 1; ++rep) rhs = prefix_rotate(rhs, n - 1);
            for (int rep = 0; rep < n - i - 1; ++rep) rhs = prefix_rotate(rhs, n);
            if (rhs != modified_prefix_rotate(p, i)) return false;
        }
        return true;
    };

    if (n <= 6) {
        std::vector<int> symbols(static_cast<std::size_t>(n));
        std::iota(symbols.begin(), symbols.end(), 1);
        do {
            if (!holds_for(Permutation(symbols))) return false;
        } while (std::next_permutation(symbols.begin(), symbols.end()));
        return true;
    }
    std::mt19937 rng(0x5eed);
    std::vector<int> symbols(static_cast<std::size_t>(n));
    std::iota(symbols.begin(), symbols.end(), 1);
    for (int trial = 0; trial < 200; ++trial) {
        std::shuffle(symbols.begin(), symbols.end(), rng);
        if (!holds_for(Permutation(symbols))) return false;
    }
    return true;
}

bool CounterexampleReport::reproduced() const {
    return base_report.hamiltonian && !recycle5_report.hamiltonian &&
           recycle5_report.first_duplicate.has_value() &&
           witness_positions.size() == 2 && !reuse5_recycle6_report.hamiltonian;
}

CounterexampleReport counterexample_demo() {
    CounterexampleReport out{
        make_sequence({4, 3, 3, 2, 3, 4, 2, 3, 4, 2, 3, 3,
                       4, 4, 2, 3, 3, 2, 3, 4, 4, 4, 3, 4},
                      4),
        {}, {}, {}, {}};
    out.base_report = check_hamilton(out.base, 4);
    const RotationSeq lifted = recycle(out.base, 5);
    out.recycle5_report = check_hamilton(lifted, 5);
    out.reuse5_recycle6_report = check_hamilton(recycle(reuse(out.base, 5), 6), 6);

    const Permutation witness = Permutation::parse("45312");
    std::int64_t at = 0;
    walk_sequence(Permutation::descending(5), lifted.values, false,
                  [&](const Permutation& p) {
                      if (p == witness) out.witness_positions.push_back(at);
                      ++at;
                  });
    return out;
}

std::vector<int> sp_cycle(int m) {
    if (m < 3) throw std::invalid_argument("sp_cycle requires m >= 3");
    require_audit_order(m, "sp_cycle");

    const RotationSeq d = recycled_corbett(m);
    const std::uint64_t total = factorial(m);
    std::vector<int> first;
    first.reserve(total);

    std::vector<int> cur(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) cur[static_cast<std::size_t>(i)] = m - i;
    for (int v : d.values) {
        first.push_back(cur.front());
        std::rotate(cur.begin(), cur.begin() + 1, cur.begin() + v);
    }

    // Audit: every circular (m-1)-window must name a distinct permutation
    // of 1..m once completed with its missing symbol.
    std::vector<bool> seen(total, false);
    std::vector<int> window(static_cast<std::size_t>(m));
    const unsigned full_mask = ((1u << m) - 1u) << 1;
    for (std::uint64_t w = 0; w < total; ++w) {
        unsigned mask = 0;
        for (int off = 0; off < m - 1; ++off) {
            const int sym = first[(w + static_cast<std::uint64_t>(off)) % total];
            const unsigned bit = 1u << sym;
            if (mask & bit) throw std::logic_error("sp_cycle: window repeats a symbol");
            mask |= bit;
            window[static_cast<std::size_t>(off)] = sym;
        }
        const unsigned missing_bit = full_mask & ~mask;
        window[static_cast<std::size_t>(m) - 1] =
            static_cast<int>(std::countr_zero(missing_bit));
        const std::uint64_t r = perm_rank(window);
        if (seen[r]) throw std::logic_error("sp_cycle: windows are not distinct");
        seen[r] = true;
    }
    return first;
}

}  // namespace rotgen
