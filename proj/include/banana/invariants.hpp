// Closed-form invariants for banana trees: scramble number = screewidth
// (with witnesses), banana-star gonality and scramble number, monoculture
// gonality, the Brill-Noether bound, and the edge-deletion gap construction.
#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "banana/divisor.hpp"
#include "banana/graph.hpp"
#include "banana/path_dp.hpp"

namespace banana {

// sn(G) = scw(G) = the largest k such that some connected subgraph has at
// least k vertices with every internal bunch of size at least k. Scans k
// downward; k = 1 always qualifies.
inline long long scramble_screewidth(const BananaTree& g) {
    long long max_mult = 1;
    for (const auto& b : g.bunches()) max_mult = std::max(max_mult, b.mult);
    long long top = std::min<long long>(g.num_vertices(), max_mult + 1);
    for (long long k = top; k > 1; --k) {
        // Components of the subgraph kept by bunches of size >= k.
        std::vector<int> rep(static_cast<size_t>(g.num_vertices()));
        std::iota(rep.begin(), rep.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (rep[static_cast<size_t>(x)] != x)
                x = rep[static_cast<size_t>(x)] = rep[static_cast<size_t>(rep[static_cast<size_t>(x)])];
            return x;
        };
        for (const auto& b : g.bunches())
            if (b.mult >= k) rep[static_cast<size_t>(find(b.u))] = find(b.v);
        std::vector<long long> size(static_cast<size_t>(g.num_vertices()), 0);
        for (int v = 0; v < g.num_vertices(); ++v) ++size[static_cast<size_t>(find(v))];
        if (*std::max_element(size.begin(), size.end()) >= k) return k;
    }
    return 1;
}

// Singleton-egg scramble witnessing the scramble number: the vertices of a
// component of the >= k subgraph with at least k vertices.
struct ScrambleWitness {
    std::vector<int> eggs;  // vertex ids, each a singleton egg
    long long claimed_order = 1;
};

inline ScrambleWitness scramble_witness(const BananaTree& g) {
    long long k = scramble_screewidth(g);
    std::vector<int> rep(static_cast<size_t>(g.num_vertices()));
    std::iota(rep.begin(), rep.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (rep[static_cast<size_t>(x)] != x)
            x = rep[static_cast<size_t>(x)] = rep[static_cast<size_t>(rep[static_cast<size_t>(x)])];
        return x;
    };
    for (const auto& b : g.bunches())
        if (b.mult >= k) rep[static_cast<size_t>(find(b.u))] = find(b.v);
    std::vector<long long> size(static_cast<size_t>(g.num_vertices()), 0);
    for (int v = 0; v < g.num_vertices(); ++v) ++size[static_cast<size_t>(find(v))];
    int root = -1;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (size[static_cast<size_t>(find(v))] >= k) {
            root = find(v);
            break;
        }
    ScrambleWitness w;
    w.claimed_order = k;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (find(v) == root) w.eggs.push_back(v);
    return w;
}

// Independent check of a singleton-egg scramble on a tree: the eggs must
// induce a connected subtree with every internal bunch of size at least the
// claimed order, and there must be at least that many eggs. (Hitting number
// = egg count; smallest egg-cut = smallest internal bunch.)
inline bool check_scramble_witness(const BananaTree& g, const ScrambleWitness& w) {
    if (w.eggs.empty() || static_cast<long long>(w.eggs.size()) < w.claimed_order) return false;
    std::vector<char> in(static_cast<size_t>(g.num_vertices()), 0);
    for (int v : w.eggs) in[static_cast<size_t>(v)] = 1;
    // Connectivity of the induced subtree.
    std::vector<char> vis(static_cast<size_t>(g.num_vertices()), 0);
    std::vector<int> stack{w.eggs.front()};
    vis[static_cast<size_t>(w.eggs.front())] = 1;
    size_t reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [u, m] : g.neighbors(v)) {
            (void)m;
            if (in[static_cast<size_t>(u)] && !vis[static_cast<size_t>(u)]) {
                vis[static_cast<size_t>(u)] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    if (reached != w.eggs.size()) return false;
    if (w.eggs.size() > 1) {
        for (const auto& b : g.bunches())
            if (in[static_cast<size_t>(b.u)] && in[static_cast<size_t>(b.v)] &&
                b.mult < w.claimed_order)
                return false;
    }
    return true;
}

// Tree-cut decomposition as a bag partition; on a banana tree each bag is a
// connected subtree and adjacent bags are linked by a single bunch.
struct TreeCutDecomposition {
    std::vector<std::vector<int>> bags;  // partition of the vertex set
};

// Width computed directly from the bags: max over bag sizes and over the
// multiplicities of bunches crossing between bags.
inline long long tcd_width(const BananaTree& g, const TreeCutDecomposition& t) {
    std::vector<int> bag_of(static_cast<size_t>(g.num_vertices()), -1);
    for (size_t i = 0; i < t.bags.size(); ++i)
        for (int v : t.bags[i]) bag_of[static_cast<size_t>(v)] = static_cast<int>(i);
    for (int v = 0; v < g.num_vertices(); ++v)
        if (bag_of[static_cast<size_t>(v)] < 0)
            throw std::invalid_argument("tree-cut decomposition must cover every vertex");
    long long width = 0;
    for (const auto& bag : t.bags)
        width = std::max(width, static_cast<long long>(bag.size()));
    for (const auto& b : g.bunches())
        if (bag_of[static_cast<size_t>(b.u)] != bag_of[static_cast<size_t>(b.v)])
            width = std::max(width, b.mult);
    return width;
}

// Build a width-k decomposition by BFS from the lowest-id leaf, merging a
// neighbor into the current bag iff the connecting bunch has more than k
// edges.
inline TreeCutDecomposition tcd_witness(const BananaTree& g) {
    long long k = scramble_screewidth(g);
    int n = g.num_vertices();
    int start = 0;
    if (n > 1) {
        std::vector<int> deg(static_cast<size_t>(n), 0);
        for (const auto& b : g.bunches()) {
            ++deg[static_cast<size_t>(b.u)];
            ++deg[static_cast<size_t>(b.v)];
        }
        while (deg[static_cast<size_t>(start)] != 1) ++start;
    }
    TreeCutDecomposition t;
    std::vector<int> bag_of(static_cast<size_t>(n), -1);
    t.bags.push_back({start});
    bag_of[static_cast<size_t>(start)] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (const auto& [w, m] : g.neighbors(v)) {
            if (bag_of[static_cast<size_t>(w)] >= 0) continue;
            if (m > k) {
                bag_of[static_cast<size_t>(w)] = bag_of[static_cast<size_t>(v)];
            } else {
                bag_of[static_cast<size_t>(w)] = static_cast<int>(t.bags.size());
                t.bags.emplace_back();
            }
            t.bags[static_cast<size_t>(bag_of[static_cast<size_t>(w)])].push_back(w);
            queue.push_back(w);
        }
    }
    return t;
}

// gon(S) = min over j of (leaves with bunches larger than a_{j+1}) + a_{j+1},
// with a_{k+1} taken to be 1.
inline long long star_gonality(const BananaStar& s) {
    long long best = -1;
    long long covered = 0;
    for (size_t j = 0; j <= s.classes.size(); ++j) {
        long long next_a = j < s.classes.size() ? s.classes[j].first : 1;
        long long cand = covered + next_a;
        if (best < 0 || cand < best) best = cand;
        if (j < s.classes.size()) covered += s.classes[j].second;
    }
    return best;
}

// sn(S) = max over l of min(a_l, 1 + r_1 + ... + r_l).
inline long long star_scramble(const BananaStar& s) {
    long long best = 1;
    long long count = 0;
    for (const auto& [a, r] : s.classes) {
        count += r;
        best = std::max(best, std::min(a, 1 + count));
    }
    return best;
}

struct MonocultureGonality {
    long long value = 1;  // lcm of the pattern
    bool exact = false;   // true when the path is long enough to force it
};

// gon(B_{A;n}) = lcm(A) whenever n >= s * lcm(A)^2; below that the lcm is
// only an upper bound.
inline MonocultureGonality monoculture_gonality(const MonocultureSpec& spec) {
    if (spec.pattern.empty()) throw std::invalid_argument("monoculture pattern must be nonempty");
    long long l = 1;
    for (long long a : spec.pattern) l = std::lcm(l, a);
    long long s = static_cast<long long>(spec.pattern.size());
    return {l, spec.n >= s * l * l};
}

inline long long bn_bound(long long genus) { return (genus + 3) / 2; }

struct BnCheck {
    long long gonality = 0;
    long long genus = 0;
    long long bound = 0;
    bool holds = false;
    bool equality = false;
    // Equality forces small bunches. The often-quoted threshold of 4 is too
    // tight: B_(2,5,2) has genus 6, gonality 4 = floor((6+3)/2), and a bunch
    // of 5 (a floor absorbs the odd bunch). The threshold 5 survives an
    // exhaustive scan of paths (<= 7 vertices, sizes <= 9), stars and trees.
    bool max_bunch_ok = false;  // equality implies largest bunch <= 5
};

inline BnCheck bn_check_from(long long gonality, const BananaTree& g) {
    BnCheck c;
    c.gonality = gonality;
    c.genus = genus(g);
    c.bound = bn_bound(c.genus);
    c.holds = gonality <= c.bound;
    c.equality = gonality == c.bound;
    long long max_mult = 0;
    for (const auto& b : g.bunches()) max_mult = std::max(max_mult, b.mult);
    c.max_bunch_ok = !c.equality || max_mult <= 5;
    return c;
}

// Gonality by the best available route: path DP, star formula, or the
// brute-force oracle for small trees.
inline long long gonality_auto(const BananaTree& g, const OracleLimits& limits = {}) {
    if (auto p = as_path(g)) return gonality_dp(*p).gonality;
    if (auto s = as_star(g)) return star_gonality(*s);
    if (g.num_vertices() <= limits.max_vertices) return gonality_oracle(g, limits).gonality;
    throw std::runtime_error(
        "gonality: tree is neither a path nor a star and exceeds the oracle size cap");
}

inline BnCheck bn_check(const BananaTree& g, const OracleLimits& limits = {}) {
    return bn_check_from(gonality_auto(g, limits), g);
}

// Edge-deletion gap instance: a monoculture whose gonality rises by exactly
// r when one edge is removed from the central large bunch.
struct GapConstruction {
    long long r = 0;
    long long a = 0;
    long long b = 0;
    long long n = 0;           // bunch count of the path
    long long bunch_index = 0; // 0-based; the bunch between v_i and v_{i+1}
    BananaPath before;
    BananaPath after;
    long long expected_before = 0;
    long long expected_after = 0;
};

namespace detail {

inline bool is_prime(long long x) {
    if (x < 2) return false;
    for (long long d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

}  // namespace detail

inline GapConstruction construct_gap(long long r) {
    if (r < 1) throw std::invalid_argument("gap size must be positive");
    GapConstruction out;
    out.r = r;
    if (r == 1) {
        out.a = 3;
        out.b = 3;
        out.n = 3;
        out.bunch_index = 1;
        out.before = make_path({3, 3, 3});
        out.after = make_path({3, 2, 3});
        out.expected_before = 3;
        out.expected_after = 4;
        return out;
    }
    // Smallest a with r <= floor((a-1)/2) and r not dividing a-1, then the
    // smallest prime b congruent to r mod (a-1) with b dividing neither a
    // nor a-1.
    long long a = 2 * r + 1;
    while ((a - 1) % r == 0) ++a;
    long long b = 2;
    while (!(detail::is_prime(b) && b % (a - 1) == r % (a - 1) && a % b != 0 && (a - 1) % b != 0))
        ++b;
    out.a = a;
    out.b = b;
    out.n = 4 * a * a * b * b + 1;
    out.bunch_index = 2 * a * a * b * b;  // the central a-bunch
    out.before = make_monoculture({{a, b}, out.n});
    out.after = delete_edge(out.before, static_cast<int>(out.bunch_index));
    out.expected_before = a * b;
    out.expected_after = a * b + r;
    return out;
}

// Per-graph invariant summary.
struct InvariantReport {
    std::optional<long long> gonality;
    long long sn_scw = 1;
    long long genus = 0;
    long long lcm = 1;
    long long bn = 0;
    std::optional<bool> bn_equality;
    long long max_bunch = 0;
    std::optional<Divisor> witness;
    std::optional<ScrambleWitness> scramble;
};

inline InvariantReport invariant_report(const BananaTree& g, const OracleLimits& limits = {},
                                        bool want_witnesses = false) {
    InvariantReport rep;
    rep.sn_scw = scramble_screewidth(g);
    rep.genus = genus(g);
    rep.lcm = lcm_bound(g);
    rep.bn = bn_bound(rep.genus);
    for (const auto& b : g.bunches()) rep.max_bunch = std::max(rep.max_bunch, b.mult);
    if (auto p = as_path(g)) {
        DpResult dp = gonality_dp(*p);
        rep.gonality = dp.gonality;
        if (want_witnesses) rep.witness = dp.witness;
    } else if (auto s = as_star(g)) {
        rep.gonality = star_gonality(*s);
    } else if (g.num_vertices() <= limits.max_vertices) {
        auto gw = gonality_oracle(g, limits);
        rep.gonality = gw.gonality;
        if (want_witnesses) rep.witness = gw.witness;
    }
    if (rep.gonality) rep.bn_equality = *rep.gonality == rep.bn;
    if (want_witnesses) rep.scramble = scramble_witness(g);
    return rep;
}

}  // namespace banana
