// Chip-firing machinery on banana trees: firing moves, q-reduction via
// burning passes, rank, and brute-force gonality oracles for small
// instances.
#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "banana/graph.hpp"

namespace banana {

struct Divisor {
    std::vector<long long> chips;

    long long degree() const {
        long long d = 0;
        for (long long c : chips) d += c;
        return d;
    }

    bool is_effective() const {
        for (long long c : chips)
            if (c < 0) return false;
        return true;
    }

    long long operator()(int v) const { return chips[static_cast<size_t>(v)]; }

    bool operator==(const Divisor& o) const { return chips == o.chips; }
    bool operator<(const Divisor& o) const { return chips < o.chips; }
};

inline Divisor zero_divisor(const BananaTree& g) {
    return Divisor{std::vector<long long>(static_cast<size_t>(g.num_vertices()), 0)};
}

using FiringSet = std::vector<char>;  // membership flags indexed by vertex id

// Fire every vertex of S at once: one chip crosses every edge from S to its
// complement. Degree is preserved; legality is a separate predicate.
inline Divisor fire_set(const BananaTree& g, const Divisor& d, const FiringSet& s) {
    Divisor out = d;
    for (const auto& b : g.bunches()) {
        if (s[static_cast<size_t>(b.u)] && !s[static_cast<size_t>(b.v)]) {
            out.chips[static_cast<size_t>(b.u)] -= b.mult;
            out.chips[static_cast<size_t>(b.v)] += b.mult;
        } else if (s[static_cast<size_t>(b.v)] && !s[static_cast<size_t>(b.u)]) {
            out.chips[static_cast<size_t>(b.v)] -= b.mult;
            out.chips[static_cast<size_t>(b.u)] += b.mult;
        }
    }
    return out;
}

inline bool is_legal_firing(const BananaTree& g, const Divisor& d, const FiringSet& s) {
    return d.is_effective() && fire_set(g, d, s).is_effective();
}

namespace detail {

// BFS order from root plus parent pointers and parent bunch multiplicity.
struct RootedView {
    std::vector<int> order;
    std::vector<int> parent;
    std::vector<long long> parent_mult;
};

inline RootedView root_at(const BananaTree& g, int q) {
    int n = g.num_vertices();
    RootedView r;
    r.parent.assign(static_cast<size_t>(n), -1);
    r.parent_mult.assign(static_cast<size_t>(n), 0);
    std::deque<int> queue{q};
    std::vector<char> vis(static_cast<size_t>(n), 0);
    vis[static_cast<size_t>(q)] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        r.order.push_back(v);
        for (const auto& [w, m] : g.neighbors(v))
            if (!vis[static_cast<size_t>(w)]) {
                vis[static_cast<size_t>(w)] = 1;
                r.parent[static_cast<size_t>(w)] = v;
                r.parent_mult[static_cast<size_t>(w)] = m;
                queue.push_back(w);
            }
    }
    return r;
}

// One burning pass from q: v != q burns once its edges to burnt vertices
// exceed its chip count. Returns the burnt flags.
inline std::vector<char> burn(const BananaTree& g, const Divisor& d, int q) {
    int n = g.num_vertices();
    std::vector<char> burnt(static_cast<size_t>(n), 0);
    burnt[static_cast<size_t>(q)] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (burnt[static_cast<size_t>(v)]) continue;
            long long incoming = 0;
            for (const auto& [w, m] : g.neighbors(v))
                if (burnt[static_cast<size_t>(w)]) incoming += m;
            if (incoming > d(v)) {
                burnt[static_cast<size_t>(v)] = 1;
                changed = true;
            }
        }
    }
    return burnt;
}

}  // namespace detail

// The unique q-reduced divisor equivalent to d. Phase 1 clears debt off q by
// pushing chips down from the q side, deepest vertices first; phase 2 fires
// each maximal unburnt set until everything burns.
inline Divisor dhar_reduce(const BananaTree& g, const Divisor& d, int q) {
    int n = g.num_vertices();
    Divisor out = d;
    auto rooted = detail::root_at(g, q);
    for (auto it = rooted.order.rbegin(); it != rooted.order.rend(); ++it) {
        int v = *it;
        if (v == q || out(v) >= 0) continue;
        long long a = rooted.parent_mult[static_cast<size_t>(v)];
        long long t = (-out(v) + a - 1) / a;
        out.chips[static_cast<size_t>(v)] += t * a;
        out.chips[static_cast<size_t>(rooted.parent[static_cast<size_t>(v)])] -= t * a;
    }
    while (true) {
        auto burnt = detail::burn(g, out, q);
        bool all = true;
        for (int v = 0; v < n; ++v)
            if (!burnt[static_cast<size_t>(v)]) all = false;
        if (all) break;
        FiringSet s(static_cast<size_t>(n), 0);
        for (int v = 0; v < n; ++v) s[static_cast<size_t>(v)] = !burnt[static_cast<size_t>(v)];
        out = fire_set(g, out, s);
    }
    return out;
}

inline bool is_q_reduced(const BananaTree& g, const Divisor& d, int q) {
    for (int v = 0; v < g.num_vertices(); ++v)
        if (v != q && d(v) < 0) return false;
    auto burnt = detail::burn(g, d, q);
    for (char b : burnt)
        if (!b) return false;
    return true;
}

inline bool equivalent(const BananaTree& g, const Divisor& a, const Divisor& b) {
    if (a.degree() != b.degree()) return false;
    return dhar_reduce(g, a, 0) == dhar_reduce(g, b, 0);
}

// d is equivalent to an effective divisor iff its q-reduced form has no debt
// left on q.
inline bool effective_equivalent(const BananaTree& g, const Divisor& d) {
    if (d.degree() < 0) return false;
    return dhar_reduce(g, d, 0)(0) >= 0;
}

// Effective d has positive rank iff every vertex can be given a chip.
inline bool has_positive_rank(const BananaTree& g, const Divisor& d) {
    for (int v = 0; v < g.num_vertices(); ++v)
        if (dhar_reduce(g, d, v)(v) < 1) return false;
    return true;
}

struct OracleLimits {
    int max_vertices = 9;
    long long max_degree = 12;
};

namespace detail {

// Enumerate effective divisors of the given degree, lexicographic by vertex
// id (stars and bars). Stops early when fn returns true.
template <class Fn>
bool for_each_effective(int n, long long degree, Fn&& fn) {
    Divisor d{std::vector<long long>(static_cast<size_t>(n), 0)};
    std::function<bool(int, long long)> go = [&](int v, long long left) -> bool {
        if (v == n - 1) {
            d.chips[static_cast<size_t>(v)] = left;
            return fn(d);
        }
        for (long long c = left; c >= 0; --c) {
            d.chips[static_cast<size_t>(v)] = c;
            if (go(v + 1, left - c)) return true;
        }
        return false;
    };
    return go(0, degree);
}

}  // namespace detail

// rank(d): -1 if not equivalent to effective, else the largest r such that
// subtracting any effective degree-r divisor leaves an effective class.
// Memoized on q-reduced forms; degree-capped to keep the recursion honest.
inline long long rank(const BananaTree& g, const Divisor& d,
                      const OracleLimits& limits = {}) {
    if (d.degree() > limits.max_degree)
        throw std::runtime_error("rank: divisor degree exceeds the configured cap");
    std::map<std::vector<long long>, long long> memo;
    std::function<long long(const Divisor&)> go = [&](const Divisor& cur) -> long long {
        if (cur.degree() < 0) return -1;
        Divisor red = dhar_reduce(g, cur, 0);
        auto it = memo.find(red.chips);
        if (it != memo.end()) return it->second;
        long long result;
        if (red(0) < 0) {
            result = -1;
        } else {
            long long best = -1;
            bool first = true;
            for (int v = 0; v < g.num_vertices(); ++v) {
                Divisor next = red;
                next.chips[static_cast<size_t>(v)] -= 1;
                long long sub = go(next);
                if (first || sub < best) {
                    best = sub;
                    first = false;
                }
                if (best == -1) break;
            }
            result = 1 + best;
        }
        memo[red.chips] = result;
        return result;
    };
    return go(d);
}

// rank(d) >= r, decided directly from the definition.
inline bool rank_at_least(const BananaTree& g, const Divisor& d, long long r) {
    if (r <= 0) return effective_equivalent(g, d);
    return !detail::for_each_effective(g.num_vertices(), r, [&](const Divisor& e) {
        Divisor diff = d;
        for (size_t i = 0; i < diff.chips.size(); ++i) diff.chips[i] -= e.chips[i];
        return !effective_equivalent(g, diff);  // stop on a witness of failure
    });
}

struct GonalityWitness {
    long long gonality = 0;
    Divisor witness;
};

// Smallest degree of a positive-rank effective divisor, by enumeration with
// increasing degree. A chip on every vertex always works, so this halts at
// degree <= n.
inline GonalityWitness gonality_oracle(const BananaTree& g, const OracleLimits& limits = {}) {
    int n = g.num_vertices();
    if (n > limits.max_vertices)
        throw std::runtime_error("gonality oracle: graph exceeds the configured vertex cap");
    for (long long d = 1;; ++d) {
        GonalityWitness found;
        bool ok = detail::for_each_effective(n, d, [&](const Divisor& cand) {
            if (has_positive_rank(g, cand)) {
                found = {d, cand};
                return true;
            }
            return false;
        });
        if (ok) return found;
    }
}

// Smallest degree of a divisor of rank at least r.
inline long long gon_r_oracle(const BananaTree& g, long long r, const OracleLimits& limits = {}) {
    int n = g.num_vertices();
    if (n > limits.max_vertices)
        throw std::runtime_error("gonality oracle: graph exceeds the configured vertex cap");
    if (r < 1) throw std::invalid_argument("gon_r: r must be positive");
    for (long long d = r;; ++d) {
        if (d > limits.max_degree)
            throw std::runtime_error("gon_r oracle: search degree exceeds the configured cap");
        bool found = detail::for_each_effective(n, d, [&](const Divisor& cand) {
            return rank_at_least(g, cand, r);
        });
        if (found) return d;
    }
}

// BFS over effective divisors under legal adjacency moves; true iff `to` is
// reachable from `from`. Test utility for small instances.
inline bool adjacency_reachable(const BananaTree& g, const Divisor& from, const Divisor& to,
                                size_t state_cap = 2000000) {
    if (!from.is_effective() || !to.is_effective()) return false;
    if (from.degree() != to.degree()) return false;
    std::set<std::vector<long long>> seen{from.chips};
    std::deque<Divisor> queue{from};
    while (!queue.empty()) {
        Divisor cur = queue.front();
        queue.pop_front();
        if (cur == to) return true;
        for (const auto& b : g.bunches()) {
            for (auto [src, dst] : {std::pair{b.u, b.v}, std::pair{b.v, b.u}}) {
                if (cur(src) < b.mult) continue;
                Divisor next = cur;
                next.chips[static_cast<size_t>(src)] -= b.mult;
                next.chips[static_cast<size_t>(dst)] += b.mult;
                if (seen.insert(next.chips).second) queue.push_back(next);
            }
        }
        if (seen.size() > state_cap)
            throw std::runtime_error("adjacency_reachable: state space cap exceeded");
    }
    return false;
}

// Adjacency move from v to w: fire the component of v in the graph minus
// the (v,w) bunch, moving |E(v,w)| chips from v to w.
inline Divisor adjacency_move(const BananaTree& g, const Divisor& d, int from, int to) {
    if (g.mult(from, to) == 0) throw std::invalid_argument("adjacency move needs adjacent vertices");
    // Component of `from` once the (from,to) bunch is removed.
    FiringSet s(static_cast<size_t>(g.num_vertices()), 0);
    std::vector<int> stack{from};
    s[static_cast<size_t>(from)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [w, m] : g.neighbors(v)) {
            (void)m;
            if ((v == from && w == to) || (v == to && w == from)) continue;
            if (!s[static_cast<size_t>(w)]) {
                s[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return fire_set(g, d, s);
}

inline bool is_legal_adjacency_move(const BananaTree& g, const Divisor& d, int from, int to) {
    long long m = g.mult(from, to);
    if (m == 0) throw std::invalid_argument("adjacency move needs adjacent vertices");
    return d.is_effective() && d(from) >= m;
}

}  // namespace banana
