#include "tempnet/louvain.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "tempnet/modularity.hpp"

namespace tempnet {

namespace {

// Move rule for the local-moving phase. Greedy takes the steepest improving
// move (ties to the lowest community id); weighted picks among all strictly
// improving moves with probability proportional to the improvement. Greedy
// is fast and stable but cannot leave some basins no matter the visit order;
// weighted runs can, at the cost of occasionally settling on a slightly
// different optimum. cluster_best mixes both kinds of run.
enum class MovePolicy { greedy, weighted };

// Shared helper for both phases: given candidate (community, connection mass)
// pairs plus the mass toward the current community with the node removed,
// pick a target per the policy, or stay put when nothing improves. The
// seeded generator keeps every run reproducible.
int choose_move(int current, double base_gain, double threshold, MovePolicy policy,
                std::vector<std::pair<int, double>>& candidates, std::mt19937_64& rng,
                std::vector<std::pair<int, double>>& improving) {
    std::sort(candidates.begin(), candidates.end());
    improving.clear();
    int prev = -1;
    double total = 0.0;
    for (const auto& [d, g] : candidates) {
        if (d == current || d == prev) continue;
        prev = d;
        double delta = g - base_gain;
        if (delta > threshold) {
            improving.emplace_back(d, delta);
            total += delta;
        }
    }
    if (improving.empty()) return current;
    if (policy == MovePolicy::greedy) {
        int best = current;
        double best_delta = 0.0;
        for (const auto& [d, delta] : improving)
            if (delta > best_delta) {
                best = d;
                best_delta = delta;
            }
        return best;
    }
    double r = std::uniform_real_distribution<double>(0.0, total)(rng);
    for (const auto& [d, delta] : improving) {
        if (r < delta) return d;
        r -= delta;
    }
    return improving.back().first;
}

// First-phase state: flat nodes are (vertex, slice) pairs with the per-slice
// null model and coupling edges handled explicitly.
class FlatMover {
public:
    FlatMover(const SliceStack& stack)
        : stack_(stack),
          n_(stack.n_vertices()),
          S_(stack.n_slices()),
          N_(static_cast<size_t>(stack.n_vertices()) * static_cast<size_t>(stack.n_slices())) {
        deg_.resize(N_);
        two_m_.resize(static_cast<size_t>(S_));
        for (int s = 0; s < S_; ++s) {
            const Snapshot& g = stack.slice(s);
            two_m_[static_cast<size_t>(s)] = 2.0 * static_cast<double>(g.m());
            for (int i = 0; i < n_; ++i)
                deg_[flat(i, s)] = static_cast<double>(g.degrees()[static_cast<size_t>(i)]);
        }
        comm_.resize(N_);
        std::iota(comm_.begin(), comm_.end(), 0);
        comm_size_.assign(N_, 1);
        tot_.assign(N_ * static_cast<size_t>(S_), 0.0);
        for (size_t u = 0; u < N_; ++u)
            tot_[static_cast<size_t>(comm_[u]) * static_cast<size_t>(S_) + u / static_cast<size_t>(n_)] = deg_[u];
        wbuf_.assign(N_, 0.0);
    }

    size_t flat(int i, int s) const {
        return static_cast<size_t>(s) * static_cast<size_t>(n_) + static_cast<size_t>(i);
    }

    // Runs sweeps until a full sweep makes no move. Returns whether any node
    // moved at all.
    bool local_moving(std::mt19937_64& rng, double min_gain, MovePolicy policy) {
        std::vector<size_t> order(N_);
        std::iota(order.begin(), order.end(), 0);
        bool any = false;
        bool moved;
        do {
            moved = false;
            std::shuffle(order.begin(), order.end(), rng);
            for (size_t u : order)
                if (try_move(u, min_gain, policy, rng)) moved = true;
            any = any || moved;
        } while (moved);
        return any;
    }

    // Community ids renumbered 0..C-1 in order of first appearance.
    std::vector<int> compact_assignment(int& n_comms) const {
        std::vector<int> remap(N_, -1);
        std::vector<int> out(N_);
        int next = 0;
        for (size_t u = 0; u < N_; ++u) {
            int c = comm_[u];
            if (remap[static_cast<size_t>(c)] == -1) remap[static_cast<size_t>(c)] = next++;
            out[u] = remap[static_cast<size_t>(c)];
        }
        n_comms = next;
        return out;
    }

private:
    bool try_move(size_t u, double min_gain, MovePolicy policy, std::mt19937_64& rng) {
        const int s = static_cast<int>(u) / n_;
        const int i = static_cast<int>(u) % n_;
        const int c = comm_[u];
        const double k = deg_[u];

        touched_.clear();
        auto add = [&](int d, double w) {
            if (wbuf_[static_cast<size_t>(d)] == 0.0) touched_.push_back(d);
            wbuf_[static_cast<size_t>(d)] += w;
        };
        for (int j : stack_.slice(s).adjacency()[static_cast<size_t>(i)])
            add(comm_[flat(j, s)], 1.0);
        const double cw = stack_.coupling();
        if (cw > 0.0) {
            if (s > 0) add(comm_[flat(i, s - 1)], cw);
            if (s + 1 < S_) add(comm_[flat(i, s + 1)], cw);
        }
        if (wbuf_[static_cast<size_t>(c)] == 0.0) touched_.push_back(c);  // ensure base term exists

        // remove u from its community
        tot_at(c, s) -= k;
        comm_size_[static_cast<size_t>(c)]--;

        auto gain = [&](int d) {
            return wbuf_[static_cast<size_t>(d)] - k * tot_at(d, s) / two_m_[static_cast<size_t>(s)];
        };
        candidates_.clear();
        for (int d : touched_) candidates_.emplace_back(d, gain(d));
        if (comm_size_[static_cast<size_t>(c)] > 0 && !free_.empty())
            candidates_.emplace_back(free_.back(), 0.0);
        const double base = gain(c);
        int target = choose_move(c, base, min_gain * stack_.mu(), policy, candidates_, rng,
                                 improving_);

        for (int d : touched_) wbuf_[static_cast<size_t>(d)] = 0.0;

        bool move = target != c;
        int dest = target;
        if (move && !free_.empty() && dest == free_.back()) free_.pop_back();
        comm_[u] = dest;
        tot_at(dest, s) += k;
        comm_size_[static_cast<size_t>(dest)]++;
        if (move && comm_size_[static_cast<size_t>(c)] == 0) free_.push_back(c);
        return move;
    }

    double& tot_at(int c, int s) {
        return tot_[static_cast<size_t>(c) * static_cast<size_t>(S_) + static_cast<size_t>(s)];
    }

    const SliceStack& stack_;
    int n_, S_;
    size_t N_;
    std::vector<double> deg_, two_m_, tot_, wbuf_;
    std::vector<int> comm_, comm_size_, touched_, free_;
    std::vector<std::pair<int, double>> improving_;
    std::vector<std::pair<int, double>> candidates_;
};

// Dense symmetric condensed quality matrix for the aggregation levels.
struct Condensed {
    int n = 0;
    std::vector<double> w;  // n x n, row-major, includes self-loops

    double& at(int a, int b) { return w[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)]; }
    double at(int a, int b) const { return w[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)]; }
};

Condensed condense(const SliceStack& stack, const std::vector<int>& assign, int n_comms) {
    const int n = stack.n_vertices();
    const int S = stack.n_slices();
    Condensed W;
    W.n = n_comms;
    W.w.assign(static_cast<size_t>(n_comms) * static_cast<size_t>(n_comms), 0.0);
    auto super = [&](int i, int s) {
        return assign[static_cast<size_t>(s) * static_cast<size_t>(n) + static_cast<size_t>(i)];
    };
    std::vector<double> ks(static_cast<size_t>(n_comms));
    std::vector<int> present;
    for (int s = 0; s < S; ++s) {
        const Snapshot& g = stack.slice(s);
        const double two_m = 2.0 * static_cast<double>(g.m());
        std::fill(ks.begin(), ks.end(), 0.0);
        present.clear();
        for (int i = 0; i < n; ++i) {
            int c = super(i, s);
            if (ks[static_cast<size_t>(c)] == 0.0 && g.degrees()[static_cast<size_t>(i)] > 0)
                present.push_back(c);
            ks[static_cast<size_t>(c)] += static_cast<double>(g.degrees()[static_cast<size_t>(i)]);
        }
        for (const auto& [u, v] : g.edges()) {
            int cu = super(u, s), cv = super(v, s);
            W.at(cu, cv) += 1.0;
            W.at(cv, cu) += 1.0;
        }
        for (int a : present)
            for (int b : present)
                W.at(a, b) -= ks[static_cast<size_t>(a)] * ks[static_cast<size_t>(b)] / two_m;
    }
    const double cw = stack.coupling();
    if (cw > 0.0)
        for (int s = 0; s + 1 < S; ++s)
            for (int i = 0; i < n; ++i) {
                int a = super(i, s), b = super(i, s + 1);
                W.at(a, b) += cw;
                W.at(b, a) += cw;
            }
    return W;
}

// Local moving on the condensed matrix; gain toward a community is just the
// summed matrix weight. Returns the compacted assignment, or an empty vector
// if no node moved.
std::vector<int> condensed_moving(const Condensed& W, std::mt19937_64& rng, double mu,
                                  double min_gain, MovePolicy policy, int& n_comms) {
    const int M = W.n;
    std::vector<int> comm(static_cast<size_t>(M));
    std::iota(comm.begin(), comm.end(), 0);
    std::vector<int> comm_size(static_cast<size_t>(M), 1);
    std::vector<int> free_ids;
    std::vector<double> wbuf(static_cast<size_t>(M), 0.0);
    std::vector<int> touched;
    std::vector<std::pair<int, double>> improving;
    std::vector<std::pair<int, double>> candidates;
    std::vector<int> order(static_cast<size_t>(M));
    std::iota(order.begin(), order.end(), 0);

    bool any = false, moved;
    do {
        moved = false;
        std::shuffle(order.begin(), order.end(), rng);
        for (int x : order) {
            const int c = comm[static_cast<size_t>(x)];
            touched.clear();
            for (int y = 0; y < M; ++y) {
                if (y == x) continue;
                double wxy = W.at(x, y);
                if (wxy == 0.0) continue;
                int d = comm[static_cast<size_t>(y)];
                if (wbuf[static_cast<size_t>(d)] == 0.0) touched.push_back(d);
                wbuf[static_cast<size_t>(d)] += wxy;
            }
            if (wbuf[static_cast<size_t>(c)] == 0.0) touched.push_back(c);
            comm_size[static_cast<size_t>(c)]--;
            candidates.clear();
            for (int d : touched) candidates.emplace_back(d, wbuf[static_cast<size_t>(d)]);
            if (comm_size[static_cast<size_t>(c)] > 0 && !free_ids.empty())
                candidates.emplace_back(free_ids.back(), 0.0);
            int target = choose_move(c, wbuf[static_cast<size_t>(c)], min_gain * mu, policy,
                                     candidates, rng, improving);
            for (int d : touched) wbuf[static_cast<size_t>(d)] = 0.0;

            bool move = target != c;
            int dest = target;
            if (move && !free_ids.empty() && dest == free_ids.back()) free_ids.pop_back();
            comm[static_cast<size_t>(x)] = dest;
            comm_size[static_cast<size_t>(dest)]++;
            if (move && comm_size[static_cast<size_t>(c)] == 0) free_ids.push_back(c);
            if (move) moved = true;
        }
        any = any || moved;
    } while (moved);

    if (!any) return {};
    std::vector<int> remap(static_cast<size_t>(M), -1);
    std::vector<int> out(static_cast<size_t>(M));
    int next = 0;
    for (int x = 0; x < M; ++x) {
        if (remap[static_cast<size_t>(comm[static_cast<size_t>(x)])] == -1)
            remap[static_cast<size_t>(comm[static_cast<size_t>(x)])] = next++;
        out[static_cast<size_t>(x)] = remap[static_cast<size_t>(comm[static_cast<size_t>(x)])];
    }
    n_comms = next;
    return out;
}

Condensed contract(const Condensed& W, const std::vector<int>& assign, int n_comms) {
    Condensed out;
    out.n = n_comms;
    out.w.assign(static_cast<size_t>(n_comms) * static_cast<size_t>(n_comms), 0.0);
    for (int a = 0; a < W.n; ++a)
        for (int b = 0; b < W.n; ++b)
            out.at(assign[static_cast<size_t>(a)], assign[static_cast<size_t>(b)]) += W.at(a, b);
    return out;
}

Partition make_partition(const SliceStack& stack, const std::vector<int>& assign) {
    Partition p(stack.n_vertices(), stack.n_slices());
    p.labels = assign;
    return p;
}

}  // namespace

ClusterResult cluster_run(const SliceStack& stack, std::uint64_t seed, const OptimizerConfig& cfg,
                          MovePolicy policy) {
    for (int s = 0; s < stack.n_slices(); ++s)
        if (stack.slice(s).m() < 1)
            throw std::invalid_argument("modularity undefined: empty slice " + std::to_string(s));

    std::mt19937_64 rng(seed);
    ClusterResult res;

    const size_t N = static_cast<size_t>(stack.n_vertices()) * static_cast<size_t>(stack.n_slices());
    std::vector<int> assign(N);
    std::iota(assign.begin(), assign.end(), 0);
    res.pass_quality.push_back(modularity_multislice(stack, make_partition(stack, assign)));

    // pass 1: flat nodes with explicit per-slice null model
    FlatMover mover(stack);
    bool moved = mover.local_moving(rng, cfg.min_gain, policy);
    int n_comms = static_cast<int>(N);
    if (moved) {
        assign = mover.compact_assignment(n_comms);
        res.pass_quality.push_back(modularity_multislice(stack, make_partition(stack, assign)));

        // subsequent passes on the condensed quality matrix
        Condensed W = condense(stack, assign, n_comms);
        for (int pass = 2; pass <= cfg.max_passes && W.n > 1; ++pass) {
            int n_next = 0;
            std::vector<int> level = condensed_moving(W, rng, stack.mu(), cfg.min_gain, policy,
                                                      n_next);
            if (level.empty()) break;
            for (auto& a : assign) a = level[static_cast<size_t>(a)];
            W = contract(W, level, n_next);
            res.pass_quality.push_back(modularity_multislice(stack, make_partition(stack, assign)));
        }
    }

    res.partition = make_partition(stack, assign);
    res.quality = modularity_multislice(stack, res.partition);
    return res;
}

ClusterResult cluster_once(const SliceStack& stack, std::uint64_t seed,
                           const OptimizerConfig& cfg) {
    return cluster_run(stack, seed, cfg, MovePolicy::greedy);
}

ClusterResult cluster_best(const SliceStack& stack, const OptimizerConfig& cfg) {
    if (cfg.runs < 1) throw std::invalid_argument("cluster_best: runs must be >= 1");
    // Every fourth run (starting with run 0) moves greedily; the rest use
    // weighted random moves. The strict quality comparison keeps the earliest
    // best run, so a weighted run only displaces a greedy one by strictly
    // beating it.
    ClusterResult best;
    for (int run = 0; run < cfg.runs; ++run) {
        MovePolicy policy = run % 4 == 0 ? MovePolicy::greedy : MovePolicy::weighted;
        ClusterResult r =
            cluster_run(stack, cfg.seed + static_cast<std::uint64_t>(run), cfg, policy);
        if (run == 0 || r.quality > best.quality) best = std::move(r);
    }
    return best;
}

}  // namespace tempnet
