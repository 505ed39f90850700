// rotgen: generate, stream and verify Hamilton sequences and cyclic Gray
// codes on rotator graphs and their restricted variants.
//
// Exit codes: 0 success / property verified, 1 verification failure,
// 2 usage or domain error.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rotgen/loopless.hpp"
#include "rotgen/sequence.hpp"
#include "rotgen/successor.hpp"
#include "rotgen/verify.hpp"

namespace {

using namespace rotgen;

enum class Family { corbett, staircase, recycled, reuse_recycled };

Family parse_family(const std::string& name) {
    if (name == "corbett") return Family::corbett;
    if (name == "staircase") return Family::staircase;
    if (name == "recycled") return Family::recycled;
    if (name == "reuse-recycled") return Family::reuse_recycled;
    throw CLI::ValidationError("--family", "unknown family: " + name);
}

int family_min_order(Family f) {
    switch (f) {
        case Family::corbett:
        case Family::staircase: return 2;
        case Family::recycled: return 3;
        case Family::reuse_recycled: return 4;
    }
    return 2;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::corbett: return "corbett";
        case Family::staircase: return "staircase";
        case Family::recycled: return "recycled";
        case Family::reuse_recycled: return "reuse-recycled";
    }
    return "?";
}

// The n <= kMaterializeCap guard, raised by --force or the ROTGEN_GUARD
// environment variable.
int effective_cap(bool force, int n) {
    int cap = kMaterializeCap;
    if (const char* env = std::getenv("ROTGEN_GUARD")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 2)
            cap = static_cast<int>(v);
        else
            std::cerr << "warning: ignoring malformed ROTGEN_GUARD value\n";
    }
    if (force && n > cap) cap = n;
    return cap;
}

RotationSeq build_sequence(Family f, int n, int cap) {
    switch (f) {
        case Family::corbett: return corbett(n, cap);
        case Family::staircase: return staircase(n, cap);
        case Family::recycled: return recycled_corbett(n, cap);
        case Family::reuse_recycled: return reuse_recycled_corbett(n, cap);
    }
    throw std::logic_error("unreachable");
}

// One value per pull for any family, backed by the loopless stepper.
class FamilyValueStream {
public:
    FamilyValueStream(Family f, int n) {
        switch (f) {
            case Family::corbett: corbett_.emplace(n); break;
            case Family::staircase: staircase_.emplace(n); break;
            case Family::recycled: blocks_.emplace(BlockStream::recycled(n)); break;
            case Family::reuse_recycled:
                blocks_.emplace(BlockStream::reuse_recycled(n));
                break;
        }
    }

    bool done() const {
        if (corbett_) return corbett_->done();
        if (staircase_) return staircase_->done();
        return blocks_->done() && (!block_ || offset_ >= block_->size());
    }

    int next() {
        if (corbett_) return corbett_->next();
        if (staircase_) return staircase_->next();
        if (!block_ || offset_ >= block_->size()) {
            block_ = &blocks_->next();
            offset_ = 0;
        }
        return (*block_)[offset_++];
    }

private:
    std::optional<CorbettStream> corbett_;
    std::optional<StaircaseStream> staircase_;
    std::optional<BlockStream> blocks_;
    const std::vector<int>* block_ = nullptr;
    std::size_t offset_ = 0;
};

class OutputBuffer {
public:
    ~OutputBuffer() { flush(); }
    void append(const std::string& text) {
        buf_ += text;
        if (buf_.size() > (1u << 16)) flush();
    }
    void append(char c) {
        buf_.push_back(c);
        if (buf_.size() > (1u << 16)) flush();
    }
    void flush() {
        if (!buf_.empty()) {
            std::cout.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
            buf_.clear();
        }
    }

private:
    std::string buf_;
};

std::string perm_text(const std::vector<int>& symbols, bool compact) {
    std::string out;
    if (compact) {
        for (int v : symbols) out.push_back(static_cast<char>('0' + v));
        return out;
    }
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(symbols[i]);
    }
    return out;
}

// Permutation rendering inside key=value records: compact digits when the
// order allows, comma-separated otherwise.
std::string kv_perm(const std::vector<int>& symbols) {
    if (symbols.size() <= 9) return perm_text(symbols, true);
    std::string out;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(symbols[i]);
    }
    return out;
}

std::string set_text(const GeneratorSet& s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out.push_back(',');
        out += std::to_string(v);
        first = false;
    }
    out.push_back('}');
    return out;
}

struct GenOptions {
    std::string family_name;
    int n = 0;
    std::string format = "values";
    std::int64_t limit = -1;
    bool stream_value = false;
    bool stream_given = false;
    bool lines = false;
    bool compact = false;
    bool force = false;
};

int run_gen(const GenOptions& o) {
    const Family family = parse_family(o.family_name);
    if (o.n < family_min_order(family)) {
        std::cerr << "error: family " << family_name(family) << " requires n >= "
                  << family_min_order(family) << '\n';
        return 2;
    }
    const bool block_family =
        family == Family::recycled || family == Family::reuse_recycled;
    if (o.format == "blocks" && !block_family) {
        std::cerr << "error: --format blocks requires a block family "
                     "(recycled, reuse-recycled)\n";
        return 2;
    }
    if (o.compact && o.format != "perms") {
        std::cerr << "error: --compact applies to --format perms\n";
        return 2;
    }
    if (o.compact && o.n > 9) {
        std::cerr << "error: --compact requires n <= 9\n";
        return 2;
    }
    const bool streaming = o.stream_given ? o.stream_value : o.n >= 10;
    const bool limited = o.limit >= 0;
    std::uint64_t budget = limited ? static_cast<std::uint64_t>(o.limit) : 0;

    std::optional<RotationSeq> seq;
    if (!streaming) seq = build_sequence(family, o.n, effective_cap(o.force, o.n));

    OutputBuffer out;

    if (o.format == "values") {
        std::uint64_t emitted = 0;
        auto emit = [&](int v) {
            if (o.lines) {
                out.append(std::to_string(v));
                out.append('\n');
            } else {
                if (emitted) out.append(',');
                out.append(std::to_string(v));
            }
            ++emitted;
        };
        if (streaming) {
            FamilyValueStream vs(family, o.n);
            while (!vs.done() && (!limited || emitted < budget)) emit(vs.next());
        } else {
            for (int v : seq->values) {
                if (limited && emitted >= budget) break;
                emit(v);
            }
        }
        if (!o.lines && emitted) out.append('\n');
        return 0;
    }

    if (o.format == "blocks") {
        std::uint64_t emitted = 0;
        auto emit = [&](std::span<const int> block) {
            std::string line;
            for (std::size_t i = 0; i < block.size(); ++i) {
                if (i) line.push_back(',');
                line += std::to_string(block[i]);
            }
            line.push_back('\n');
            out.append(line);
            ++emitted;
        };
        if (streaming) {
            BlockStream bs = family == Family::recycled
                                 ? BlockStream::recycled(o.n)
                                 : BlockStream::reuse_recycled(o.n);
            while (!bs.done() && (!limited || emitted < budget)) emit(bs.next());
        } else {
            const std::size_t len = family == Family::recycled
                                        ? static_cast<std::size_t>(o.n)
                                        : static_cast<std::size_t>(o.n) * (o.n - 1);
            for (std::size_t at = 0; at + len <= seq->values.size(); at += len) {
                if (limited && emitted >= budget) break;
                emit(std::span<const int>(seq->values).subspan(at, len));
            }
        }
        return 0;
    }

    if (o.format == "perms") {
        std::vector<int> cur(static_cast<std::size_t>(o.n));
        for (int i = 0; i < o.n; ++i) cur[static_cast<std::size_t>(i)] = o.n - i;
        std::uint64_t emitted = 0;
        auto emit_current = [&] {
            out.append(perm_text(cur, o.compact));
            out.append('\n');
            ++emitted;
        };
        auto advance = [&](int v) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.begin() + v);
        };
        if (streaming) {
            FamilyValueStream vs(family, o.n);
            while (!vs.done() && (!limited || emitted < budget)) {
                emit_current();
                advance(vs.next());
            }
        } else {
            for (int v : seq->values) {
                if (limited && emitted >= budget) break;
                emit_current();
                advance(v);
            }
        }
        return 0;
    }

    std::cerr << "error: unknown --format " << o.format << '\n';
    return 2;
}

struct VerifyOptions {
    std::string family_name;
    int n = 0;
    std::string start_text;
    bool force = false;
};

int run_verify(const VerifyOptions& o) {
    const Family family = parse_family(o.family_name);
    if (o.n < family_min_order(family)) {
        std::cerr << "error: family " << family_name(family) << " requires n >= "
                  << family_min_order(family) << '\n';
        return 2;
    }
    const Permutation start = o.start_text.empty()
                                  ? Permutation::descending(o.n)
                                  : Permutation::parse(o.start_text);
    if (start.order() != o.n) {
        std::cerr << "error: --start order does not match n\n";
        return 2;
    }
    const RotationSeq seq = build_sequence(family, o.n, effective_cap(o.force, o.n));
    const VerifyReport report = check_hamilton(seq, o.n, start);

    std::cout << family_name(family) << " n=" << o.n << " start="
              << kv_perm(start.symbols()) << ": "
              << (report.hamiltonian ? "HAMILTONIAN" : "NOT HAMILTONIAN") << '\n';
    std::cout << "hamiltonian=" << (report.hamiltonian ? "true" : "false") << '\n';
    std::cout << "order=" << report.order << '\n';
    std::cout << "total_visited=" << report.total_visited << '\n';
    std::cout << "distinct_visited=" << report.distinct_visited << '\n';
    std::cout << "cyclic=" << (report.cyclic ? "true" : "false") << '\n';
    std::cout << "alphabet=" << set_text(report.alphabet) << '\n';
    if (report.first_duplicate) {
        std::cout << "first_duplicate=" << kv_perm(report.first_duplicate->perm.symbols())
                  << '\n';
        std::cout << "first_index=" << report.first_duplicate->first_index << '\n';
        std::cout << "second_index=" << report.first_duplicate->second_index << '\n';
    }
    return report.hamiltonian ? 0 : 1;
}

int run_successor(const std::string& perm_text_arg) {
    const Permutation p = Permutation::parse(perm_text_arg);
    const SuccessorStep s = corbett_successor(p);
    const bool compact =
        perm_text_arg.find_first_of(" \t") == std::string::npos && p.order() <= 9;
    std::cout << s.next.str(compact) << " via sigma_" << s.rotation << '\n';
    return 0;
}

int run_locate(const std::string& perm_text_arg) {
    const Permutation t = Permutation::parse(perm_text_arg);
    const LocateResult r = locate_predecessor(t);
    std::cout << "alpha=" << kv_perm(r.alpha.symbols())
              << " case=" << locator_case_name(r.ctx.chosen)
              << " i=" << r.ctx.i
              << " rotation=" << r.ctx.rotation
              << " block_entry=" << r.ctx.block_entry
              << " gamma=" << kv_perm(r.ctx.gamma)
              << " p=" << r.ctx.p
              << " q=" << r.ctx.q
              << " x_b=" << r.ctx.x_b
              << " y_a=" << r.ctx.y_a
              << " x_prime=" << r.ctx.x_prime
              << " y_prime=" << r.ctx.y_prime << '\n';
    return 0;
}

int run_spcycle(int m, bool compact) {
    if (compact && m > 9) {
        std::cerr << "error: --compact requires n <= 9\n";
        return 2;
    }
    const std::vector<int> cycle = sp_cycle(m);
    std::string line;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (compact) {
            line.push_back(static_cast<char>('0' + cycle[i]));
        } else {
            if (i) line.push_back(',');
            line += std::to_string(cycle[i]);
        }
    }
    line.push_back('\n');
    std::cout << line;
    return 0;
}

int run_demo() {
    const CounterexampleReport demo = counterexample_demo();
    std::cout << "base: n=4 length=" << demo.base.size()
              << " hamiltonian=" << (demo.base_report.hamiltonian ? "true" : "false")
              << '\n';
    std::cout << "recycle5: hamiltonian="
              << (demo.recycle5_report.hamiltonian ? "true" : "false");
    if (demo.recycle5_report.first_duplicate) {
        const auto& dup = *demo.recycle5_report.first_duplicate;
        std::cout << " first_duplicate=" << kv_perm(dup.perm.symbols())
                  << " first_index=" << dup.first_index
                  << " second_index=" << dup.second_index;
    }
    std::cout << '\n';
    std::cout << "recycle5_witness: perm=45312 positions=";
    for (std::size_t i = 0; i < demo.witness_positions.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << demo.witness_positions[i];
    }
    std::cout << '\n';
    std::cout << "recycle6_reuse5: hamiltonian="
              << (demo.reuse5_recycle6_report.hamiltonian ? "true" : "false") << '\n';
    const bool ok = demo.reproduced();
    std::cout << "reproduced=" << (ok ? "true" : "false") << '\n';
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);

    CLI::App app{"Hamilton sequences and cyclic Gray codes on rotator graphs"};
    app.require_subcommand(1);

    const std::vector<std::string> families = {"corbett", "staircase", "recycled",
                                               "reuse-recycled"};

    GenOptions gen_opts;
    CLI::App* gen = app.add_subcommand("gen", "emit a sequence, its blocks, or its Gray code");
    gen->add_option("--family", gen_opts.family_name, "sequence family")
        ->required()
        ->check(CLI::IsMember(families));
    gen->add_option("-n,--order", gen_opts.n, "permutation order")->required();
    gen->add_option("--format", gen_opts.format, "values | blocks | perms")
        ->check(CLI::IsMember({"values", "blocks", "perms"}));
    gen->add_option("--limit", gen_opts.limit, "emit at most this many items");
    auto* stream_flag = gen->add_flag("--stream,!--no-stream", gen_opts.stream_value,
                                      "loopless streaming generation (default for n >= 10)");
    gen->add_flag("--lines", gen_opts.lines, "one value per line (values format)");
    gen->add_flag("--compact", gen_opts.compact, "digit-string permutations (n <= 9)");
    gen->add_flag("--force", gen_opts.force, "override the materialization cap");

    VerifyOptions verify_opts;
    CLI::App* verify = app.add_subcommand("verify", "audit a family's walk for Hamiltonicity");
    verify->add_option("--family", verify_opts.family_name, "sequence family")
        ->required()
        ->check(CLI::IsMember(families));
    verify->add_option("-n,--order", verify_opts.n, "permutation order")->required();
    verify->add_option("--start", verify_opts.start_text,
                       "start permutation (default n n-1 ... 1)");
    verify->add_flag("--force", verify_opts.force, "override the materialization cap");

    std::string successor_perm;
    CLI::App* successor = app.add_subcommand("successor",
                                             "next permutation along the corbett cycle");
    successor->add_option("--perm", successor_perm, "current permutation")->required();

    std::string locate_perm;
    CLI::App* locate = app.add_subcommand(
        "locate", "owner of a permutation's block in the recycled cycle one order down");
    locate->add_option("--perm", locate_perm, "permutation of order >= 4")->required();

    int spcycle_n = 0;
    bool spcycle_compact = false;
    CLI::App* spcycle = app.add_subcommand("spcycle",
                                           "shorthand-prefix cycle of the recycled Gray code");
    spcycle->add_option("-n,--order", spcycle_n, "permutation order (3..10)")->required();
    spcycle->add_flag("--compact", spcycle_compact, "digit string output (n <= 9)");

    CLI::App* demo = app.add_subcommand(
        "demo-counterexample", "recycle does not preserve Hamiltonicity in general");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        gen_opts.stream_given = stream_flag->count() > 0;
        if (gen->parsed()) return run_gen(gen_opts);
        if (verify->parsed()) return run_verify(verify_opts);
        if (successor->parsed()) return run_successor(successor_perm);
        if (locate->parsed()) return run_locate(locate_perm);
        if (spcycle->parsed()) return run_spcycle(spcycle_n, spcycle_compact);
        if (demo->parsed()) return run_demo();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
