#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "gridmatch/errors.hpp"
#include "gridmatch/instance.hpp"

namespace gridmatch {

struct SolverConfig {
    bool pruning_counts = true;         // suffix digit-count pruning
    bool pruning_connectivity = false;  // flood-fill reachability pruning
    std::optional<std::uint64_t> node_budget;
    bool deterministic = true;  // fixed start order, lowest-start witness wins
    bool parallel = false;      // split work across start cells
};

enum class SolveStatus : unsigned char { solved, unsolvable, unknown };

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::solved: return "solvable";
        case SolveStatus::unsolvable: return "unsolvable";
        case SolveStatus::unknown: return "unknown";
    }
    return "unknown";
}

struct SolveOutcome {
    SolveStatus status = SolveStatus::unsolvable;
    std::optional<CellPath> path;
    std::uint64_t nodes_expanded = 0;
    std::chrono::nanoseconds elapsed{0};

    bool solvable() const { return status == SolveStatus::solved; }
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(elapsed).count();
    }
};

namespace detail {

// Immutable per-instance tables shared by all search workers.
struct MatchPlan {
    int rows = 0;
    int cols = 0;
    int total = 0;
    std::vector<unsigned char> visitable;
    std::vector<char> digit;
    std::vector<std::vector<int>> adj;  // visitable king neighbors, fixed order
    std::string seq;
    std::vector<int> suffix_zero;  // zeros in seq[i..)
    std::vector<int> suffix_one;
    std::vector<int> starts;  // row-major cells whose digit matches seq[0]
    int total_zero = 0;
    int total_one = 0;

    MatchPlan(const DigitMatrix& m, const BitSequence& s) {
        rows = m.rows();
        cols = m.cols();
        total = rows * cols;
        visitable.assign(static_cast<std::size_t>(total), 0);
        digit.assign(static_cast<std::size_t>(total), '2');
        adj.resize(static_cast<std::size_t>(total));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                const Cell& cell = m.at(r, c);
                const std::size_t idx = static_cast<std::size_t>(r * cols + c);
                digit[idx] = cell.digit;
                if (!cell.visitable()) continue;
                visitable[idx] = 1;
                if (cell.kind == CellKind::zero)
                    ++total_zero;
                else
                    ++total_one;
                for (auto [dr, dc] : kKingSteps) {
                    Coord nb{r + dr, c + dc};
                    if (m.in_bounds(nb) && m.at(nb).visitable()) adj[idx].push_back(m.index(nb));
                }
            }
        seq = s.str();
        const std::size_t n = seq.size();
        suffix_zero.assign(n + 1, 0);
        suffix_one.assign(n + 1, 0);
        for (std::size_t i = n; i-- > 0;) {
            suffix_zero[i] = suffix_zero[i + 1] + (seq[i] == '0');
            suffix_one[i] = suffix_one[i + 1] + (seq[i] == '1');
        }
        if (!seq.empty())
            for (int idx = 0; idx < total; ++idx)
                if (visitable[static_cast<std::size_t>(idx)] &&
                    digit[static_cast<std::size_t>(idx)] == seq[0])
                    starts.push_back(idx);
    }

    CellPath to_cell_path(const std::vector<int>& flat) const {
        CellPath p;
        p.steps.reserve(flat.size());
        for (int idx : flat) p.steps.push_back({idx / cols, idx % cols});
        return p;
    }
};

// One backtracking search over the subtree rooted at a single start cell.
// Workers share only the node counter, the budget flag, and the index of the
// best successful start seen so far (for cancellation).
struct MatchWorker {
    const MatchPlan& plan;
    const SolverConfig& cfg;
    std::atomic<std::uint64_t>& nodes;
    std::atomic<bool>& budget_hit;
    std::atomic<int>& best_start;
    int my_start_pos = 0;  // position in plan.starts, used for cancellation

    std::vector<unsigned char> visited;
    std::vector<int> path;
    int rem_zero = 0;
    int rem_one = 0;
    // flood-fill scratch
    std::vector<unsigned char> seen;
    std::vector<int> stack;

    MatchWorker(const MatchPlan& p, const SolverConfig& c, std::atomic<std::uint64_t>& n,
                std::atomic<bool>& bh, std::atomic<int>& bs)
        : plan(p), cfg(c), nodes(n), budget_hit(bh), best_start(bs) {
        visited.assign(static_cast<std::size_t>(plan.total), 0);
        seen.assign(static_cast<std::size_t>(plan.total), 0);
    }

    bool cancelled() const {
        const int best = best_start.load(std::memory_order_relaxed);
        return cfg.deterministic ? best < my_start_pos : best != INT_MAX;
    }

    bool connectivity_ok(int head, int need_zero, int need_one) {
        std::fill(seen.begin(), seen.end(), 0);
        stack.clear();
        seen[static_cast<std::size_t>(head)] = 1;
        stack.push_back(head);
        int reach_zero = 0, reach_one = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : plan.adj[static_cast<std::size_t>(u)]) {
                if (seen[static_cast<std::size_t>(v)] || visited[static_cast<std::size_t>(v)])
                    continue;
                seen[static_cast<std::size_t>(v)] = 1;
                if (plan.digit[static_cast<std::size_t>(v)] == '0')
                    ++reach_zero;
                else
                    ++reach_one;
                if (reach_zero >= need_zero && reach_one >= need_one) return true;
                stack.push_back(v);
            }
        }
        return reach_zero >= need_zero && reach_one >= need_one;
    }

    // Places `cell` as the match for seq[idx]; returns true when a full
    // match was completed below this placement.
    bool extend(std::size_t idx, int cell) {
        const std::uint64_t seen_nodes = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (cfg.node_budget && seen_nodes > *cfg.node_budget) {
            budget_hit.store(true, std::memory_order_relaxed);
            return false;
        }
        visited[static_cast<std::size_t>(cell)] = 1;
        path.push_back(cell);
        if (plan.digit[static_cast<std::size_t>(cell)] == '0')
            --rem_zero;
        else
            --rem_one;

        bool done = false;
        const std::size_t next = idx + 1;
        if (next == plan.seq.size()) {
            done = true;
        } else if (!budget_hit.load(std::memory_order_relaxed) && !cancelled()) {
            bool prune = false;
            if (cfg.pruning_counts &&
                (rem_zero < plan.suffix_zero[next] || rem_one < plan.suffix_one[next]))
                prune = true;
            if (!prune && cfg.pruning_connectivity &&
                !connectivity_ok(cell, plan.suffix_zero[next], plan.suffix_one[next]))
                prune = true;
            if (!prune) {
                const char want = plan.seq[next];
                for (int v : plan.adj[static_cast<std::size_t>(cell)]) {
                    if (visited[static_cast<std::size_t>(v)]) continue;
                    if (plan.digit[static_cast<std::size_t>(v)] != want) continue;
                    if (extend(next, v)) {
                        done = true;
                        break;
                    }
                    if (budget_hit.load(std::memory_order_relaxed) || cancelled()) break;
                }
            }
        }

        if (!done) {
            path.pop_back();
            visited[static_cast<std::size_t>(cell)] = 0;
            if (plan.digit[static_cast<std::size_t>(cell)] == '0')
                ++rem_zero;
            else
                ++rem_one;
        }
        return done;
    }

    // Runs the full subtree for plan.starts[pos]; returns the witness if found.
    std::optional<CellPath> run(int pos) {
        my_start_pos = pos;
        std::fill(visited.begin(), visited.end(), 0);
        path.clear();
        rem_zero = plan.total_zero;
        rem_one = plan.total_one;
        if (extend(0, plan.starts[static_cast<std::size_t>(pos)]))
            return plan.to_cell_path(path);
        return std::nullopt;
    }
};

}  // namespace detail

// Exact decision search for a simple king-move path spelling S in M.
// Exhaustive (no false negatives) whenever no node budget is set; an
// exhausted budget yields SolveStatus::unknown instead of a wrong answer.
inline SolveOutcome solve(const DigitMatrix& m, const BitSequence& s,
                          const SolverConfig& cfg = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    SolveOutcome out;
    detail::MatchPlan plan(m, s);
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> budget_hit{false};
    std::atomic<int> best_start{INT_MAX};

    if (s.empty()) {
        // The empty sequence is matched by the empty path.
        out.status = SolveStatus::solved;
        out.path = CellPath{};
        out.elapsed = std::chrono::steady_clock::now() - t0;
        return out;
    }

    const int start_count = static_cast<int>(plan.starts.size());
    std::vector<std::optional<CellPath>> wins(static_cast<std::size_t>(start_count));

    if (!cfg.parallel || start_count <= 1) {
        detail::MatchWorker worker(plan, cfg, nodes, budget_hit, best_start);
        for (int pos = 0; pos < start_count; ++pos) {
            if (auto found = worker.run(pos)) {
                best_start.store(pos, std::memory_order_relaxed);
                wins[static_cast<std::size_t>(pos)] = std::move(found);
                break;
            }
            if (budget_hit.load(std::memory_order_relaxed)) break;
        }
    } else {
        std::atomic<int> next_pos{0};
        unsigned hw = std::thread::hardware_concurrency();
        const unsigned n_threads =
            std::min<unsigned>(hw == 0 ? 2 : hw, static_cast<unsigned>(start_count));
        std::mutex wins_mutex;
        auto body = [&] {
            detail::MatchWorker worker(plan, cfg, nodes, budget_hit, best_start);
            while (true) {
                const int pos = next_pos.fetch_add(1, std::memory_order_relaxed);
                if (pos >= start_count) return;
                if (budget_hit.load(std::memory_order_relaxed)) return;
                if (cfg.deterministic) {
                    if (best_start.load(std::memory_order_relaxed) < pos) return;
                } else if (best_start.load(std::memory_order_relaxed) != INT_MAX) {
                    return;
                }
                if (auto found = worker.run(pos)) {
                    std::scoped_lock lock(wins_mutex);
                    int cur = best_start.load(std::memory_order_relaxed);
                    while (pos < cur && !best_start.compare_exchange_weak(
                                            cur, pos, std::memory_order_relaxed)) {
                    }
                    wins[static_cast<std::size_t>(pos)] = std::move(found);
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(body);
        for (auto& th : pool) th.join();
    }

    out.nodes_expanded = nodes.load(std::memory_order_relaxed);
    for (auto& w : wins) {
        if (w) {
            out.status = SolveStatus::solved;
            out.path = std::move(w);
            break;
        }
    }
    if (!out.path)
        out.status =
            budget_hit.load(std::memory_order_relaxed) ? SolveStatus::unknown : SolveStatus::unsolvable;
    out.elapsed = std::chrono::steady_clock::now() - t0;
    return out;
}

// Independent ground truth: plain depth-first search from every cell, no
// pruning, no budget, single-threaded. Intended for short sequences only.
inline SolveOutcome brute_force_solve(const DigitMatrix& m, const BitSequence& s) {
    const auto t0 = std::chrono::steady_clock::now();
    SolveOutcome out;
    out.nodes_expanded = 0;

    if (s.empty()) {
        out.status = SolveStatus::solved;
        out.path = CellPath{};
        out.elapsed = std::chrono::steady_clock::now() - t0;
        return out;
    }

    std::vector<unsigned char> visited(static_cast<std::size_t>(m.rows()) * m.cols(), 0);
    std::vector<Coord> trail;

    auto dfs = [&](auto&& self, Coord at, std::size_t idx) -> bool {
        ++out.nodes_expanded;
        visited[static_cast<std::size_t>(m.index(at))] = 1;
        trail.push_back(at);
        if (idx + 1 == s.size()) return true;
        for (Coord nb : neighbors(m, at)) {
            if (visited[static_cast<std::size_t>(m.index(nb))]) continue;
            const Cell& cell = m.at(nb);
            if (!cell.visitable() || cell.digit != s.symbol(idx + 1)) continue;
            if (self(self, nb, idx + 1)) return true;
        }
        trail.pop_back();
        visited[static_cast<std::size_t>(m.index(at))] = 0;
        return false;
    };

    for (int r = 0; r < m.rows() && !out.path; ++r)
        for (int c = 0; c < m.cols(); ++c) {
            const Cell& cell = m.at(r, c);
            if (!cell.visitable() || cell.digit != s.symbol(0)) continue;
            if (dfs(dfs, Coord{r, c}, 0)) {
                out.status = SolveStatus::solved;
                out.path = CellPath{trail};
                break;
            }
        }
    if (!out.path) out.status = SolveStatus::unsolvable;
    out.elapsed = std::chrono::steady_clock::now() - t0;
    return out;
}

// Number of distinct matching paths (a path and its reversal count as two).
// Exhaustive enumeration; tiny instances only.
inline std::uint64_t count_matching_paths(const DigitMatrix& m, const BitSequence& s) {
    if (s.empty()) return 1;  // the empty path
    std::vector<unsigned char> visited(static_cast<std::size_t>(m.rows()) * m.cols(), 0);
    std::uint64_t count = 0;

    auto dfs = [&](auto&& self, Coord at, std::size_t idx) -> void {
        visited[static_cast<std::size_t>(m.index(at))] = 1;
        if (idx + 1 == s.size()) {
            ++count;
        } else {
            for (Coord nb : neighbors(m, at)) {
                if (visited[static_cast<std::size_t>(m.index(nb))]) continue;
                const Cell& cell = m.at(nb);
                if (!cell.visitable() || cell.digit != s.symbol(idx + 1)) continue;
                self(self, nb, idx + 1);
            }
        }
        visited[static_cast<std::size_t>(m.index(at))] = 0;
    };

    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            const Cell& cell = m.at(r, c);
            if (!cell.visitable() || cell.digit != s.symbol(0)) continue;
            dfs(dfs, Coord{r, c}, 0);
        }
    return count;
}

// Maximal runs of identical symbols, in order of appearance.
inline std::vector<std::string> sequence_runs(const BitSequence& s) {
    std::vector<std::string> runs;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (runs.empty() || runs.back().back() != s.symbol(i))
            runs.emplace_back(1, s.symbol(i));
        else
            runs.back() += s.symbol(i);
    }
    return runs;
}

struct RunPermutationOutcome {
    SolveStatus status = SolveStatus::unsolvable;
    std::vector<std::size_t> run_order;  // permutation of run indices, set when solved
    std::optional<BitSequence> permuted_sequence;
    std::optional<CellPath> path;
    std::uint64_t nodes_expanded = 0;
    std::chrono::nanoseconds elapsed{0};

    bool solvable() const { return status == SolveStatus::solved; }
};

inline constexpr std::size_t kDefaultRunGuard = 8;

// Splits S into maximal runs of identical digits and tries every ordering of
// those runs, returning the first ordering whose concatenation is matched.
inline RunPermutationOutcome solve_run_permutation(const DigitMatrix& m, const BitSequence& s,
                                                   const SolverConfig& cfg = {},
                                                   std::size_t max_runs = kDefaultRunGuard) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::string> runs = sequence_runs(s);
    if (runs.size() > max_runs)
        throw TooManyRuns("sequence has " + std::to_string(runs.size()) +
                          " runs, guard is " + std::to_string(max_runs) +
                          " (raise the guard to override)");

    RunPermutationOutcome out;
    std::vector<std::size_t> perm(runs.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;

    std::vector<std::string> tried;  // identical concatenations need only one attempt
    bool saw_unknown = false;
    do {
        std::string candidate;
        candidate.reserve(s.size());
        for (std::size_t i : perm) candidate += runs[i];
        if (std::find(tried.begin(), tried.end(), candidate) != tried.end()) continue;
        tried.push_back(candidate);

        SolveOutcome attempt = solve(m, BitSequence(candidate), cfg);
        out.nodes_expanded += attempt.nodes_expanded;
        if (attempt.status == SolveStatus::solved) {
            out.status = SolveStatus::solved;
            out.run_order = perm;
            out.permuted_sequence = BitSequence(candidate);
            out.path = std::move(attempt.path);
            break;
        }
        if (attempt.status == SolveStatus::unknown) saw_unknown = true;
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (out.status != SolveStatus::solved && saw_unknown) out.status = SolveStatus::unknown;
    out.elapsed = std::chrono::steady_clock::now() - t0;
    return out;
}

}  // namespace gridmatch
