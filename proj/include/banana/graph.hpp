// Banana trees: multigraphs whose underlying simple graph is a tree.
// Vertices are dense ids 0..n-1; parallel edges between a vertex pair form
// an edge bunch with a multiplicity.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <tuple>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace banana {

struct Bunch {
    int u = 0;
    int v = 0;
    long long mult = 1;
};

class BananaTree {
public:
    BananaTree() : n_(1) {}

    BananaTree(int n_vertices, std::vector<Bunch> bunches)
        : n_(n_vertices), bunches_(std::move(bunches)) {
        validate();
        build_adjacency();
    }

    int num_vertices() const { return n_; }
    const std::vector<Bunch>& bunches() const { return bunches_; }

    // (neighbor id, bunch multiplicity) pairs for v.
    const std::vector<std::pair<int, long long>>& neighbors(int v) const {
        return adj_[v];
    }

    // Multiplicity of the bunch between u and v, 0 if not adjacent.
    long long mult(int u, int v) const {
        for (const auto& [w, m] : adj_[u])
            if (w == v) return m;
        return 0;
    }

    long long num_edges() const {
        long long e = 0;
        for (const auto& b : bunches_) e += b.mult;
        return e;
    }

    bool operator==(const BananaTree& o) const {
        if (n_ != o.n_) return false;
        auto key = [](const Bunch& b) {
            return std::tuple{std::min(b.u, b.v), std::max(b.u, b.v), b.mult};
        };
        std::vector<std::tuple<int, int, long long>> a, c;
        for (const auto& b : bunches_) a.push_back(key(b));
        for (const auto& b : o.bunches_) c.push_back(key(b));
        std::sort(a.begin(), a.end());
        std::sort(c.begin(), c.end());
        return a == c;
    }

private:
    void validate() {
        if (n_ < 1) throw std::invalid_argument("banana tree needs at least one vertex");
        if (static_cast<int>(bunches_.size()) != n_ - 1)
            throw std::invalid_argument("a banana tree on n vertices has exactly n-1 bunches");
        std::vector<std::pair<int, int>> seen;
        for (const auto& b : bunches_) {
            if (b.u < 0 || b.u >= n_ || b.v < 0 || b.v >= n_)
                throw std::invalid_argument("bunch endpoint out of range");
            if (b.u == b.v) throw std::invalid_argument("loops are not allowed");
            if (b.mult < 1) throw std::invalid_argument("bunch multiplicity must be positive");
            seen.emplace_back(std::min(b.u, b.v), std::max(b.u, b.v));
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw std::invalid_argument("repeated vertex pair");
        // n-1 distinct simple edges: connectivity <=> tree.
        std::vector<std::vector<int>> sadj(n_);
        for (const auto& b : bunches_) {
            sadj[b.u].push_back(b.v);
            sadj[b.v].push_back(b.u);
        }
        std::vector<char> vis(n_, 0);
        std::vector<int> stack{0};
        vis[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : sadj[v])
                if (!vis[w]) {
                    vis[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        if (count != n_)
            throw std::invalid_argument("underlying simple graph is not connected");
    }

    void build_adjacency() {
        adj_.assign(n_, {});
        for (const auto& b : bunches_) {
            adj_[b.u].emplace_back(b.v, b.mult);
            adj_[b.v].emplace_back(b.u, b.mult);
        }
    }

    int n_;
    std::vector<Bunch> bunches_;
    std::vector<std::vector<std::pair<int, long long>>> adj_;
};

// Banana path B_A: vertex v_{i-1} -- v_i carries sizes[i-1] edges.
// An empty size sequence is the single-vertex graph.
struct BananaPath {
    std::vector<long long> sizes;

    int num_vertices() const { return static_cast<int>(sizes.size()) + 1; }

    BananaTree to_tree() const {
        std::vector<Bunch> bunches;
        for (int i = 0; i < static_cast<int>(sizes.size()); ++i)
            bunches.push_back({i, i + 1, sizes[i]});
        return BananaTree(num_vertices(), std::move(bunches));
    }

    BananaPath reversed() const {
        BananaPath r = *this;
        std::reverse(r.sizes.begin(), r.sizes.end());
        return r;
    }

    bool operator==(const BananaPath& o) const { return sizes == o.sizes; }
};

inline BananaPath make_path(std::vector<long long> sizes) {
    for (long long a : sizes)
        if (a < 1) throw std::invalid_argument("bunch sizes must be positive");
    return BananaPath{std::move(sizes)};
}

// Monoculture B_{A;n}: bunch i (1-based) has size pattern[(i-1) mod s].
struct MonocultureSpec {
    std::vector<long long> pattern;
    long long n = 0;
};

inline BananaPath make_monoculture(const MonocultureSpec& spec) {
    if (spec.pattern.empty()) throw std::invalid_argument("monoculture pattern must be nonempty");
    if (spec.n < 0) throw std::invalid_argument("monoculture length must be nonnegative");
    std::vector<long long> sizes;
    sizes.reserve(static_cast<size_t>(spec.n));
    for (long long i = 0; i < spec.n; ++i)
        sizes.push_back(spec.pattern[static_cast<size_t>(i % spec.pattern.size())]);
    return make_path(std::move(sizes));
}

// Banana star S_{(a_1^{r_1},...,a_k^{r_k})}: center vertex 0, classes with
// strictly decreasing bunch sizes a_1 > a_2 > ... > a_k.
struct BananaStar {
    // (bunch size, count) pairs.
    std::vector<std::pair<long long, long long>> classes;

    long long num_leaves() const {
        long long t = 0;
        for (const auto& [a, r] : classes) t += r;
        return t;
    }
};

inline BananaStar make_star(std::vector<std::pair<long long, long long>> classes) {
    for (size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].first < 1 || classes[i].second < 1)
            throw std::invalid_argument("star classes need positive size and count");
        if (i > 0 && classes[i].first >= classes[i - 1].first)
            throw std::invalid_argument("star class sizes must be strictly decreasing");
    }
    return BananaStar{std::move(classes)};
}

inline BananaTree star_to_tree(const BananaStar& s) {
    std::vector<Bunch> bunches;
    int next = 1;
    for (const auto& [a, r] : s.classes)
        for (long long i = 0; i < r; ++i)
            bunches.push_back({0, next++, a});
    return BananaTree(next, std::move(bunches));
}

inline long long genus(const BananaTree& g) {
    return g.num_edges() - g.num_vertices() + 1;
}

inline long long genus(const BananaPath& p) { return genus(p.to_tree()); }

// Contract every solitary (mult 1) bunch. A simple tree collapses to a
// single vertex. New ids are dense, ordered by smallest original member.
inline BananaTree ripen(const BananaTree& g) {
    int n = g.num_vertices();
    std::vector<int> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (rep[x] != x) x = rep[x] = rep[rep[x]];
        return x;
    };
    for (const auto& b : g.bunches())
        if (b.mult == 1) rep[std::max(find(b.u), find(b.v))] = std::min(find(b.u), find(b.v));
    std::vector<int> newid(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (find(v) == v) newid[v] = next++;
    std::vector<Bunch> bunches;
    for (const auto& b : g.bunches())
        if (b.mult > 1) bunches.push_back({newid[find(b.u)], newid[find(b.v)], b.mult});
    return BananaTree(next, std::move(bunches));
}

inline BananaPath ripen(const BananaPath& p) {
    std::vector<long long> sizes;
    for (long long a : p.sizes)
        if (a > 1) sizes.push_back(a);
    return BananaPath{std::move(sizes)};
}

// Remove one edge from the bunch at the given index. Refuses a mult-1 bunch
// (that would disconnect the graph).
inline BananaTree delete_edge(const BananaTree& g, int bunch_index) {
    if (bunch_index < 0 || bunch_index >= static_cast<int>(g.bunches().size()))
        throw std::invalid_argument("bunch index out of range");
    auto bunches = g.bunches();
    if (bunches[static_cast<size_t>(bunch_index)].mult < 2)
        throw std::invalid_argument("deleting the last edge of a bunch would disconnect the graph");
    bunches[static_cast<size_t>(bunch_index)].mult -= 1;
    return BananaTree(g.num_vertices(), std::move(bunches));
}

inline BananaPath delete_edge(const BananaPath& p, int bunch_index) {
    if (bunch_index < 0 || bunch_index >= static_cast<int>(p.sizes.size()))
        throw std::invalid_argument("bunch index out of range");
    if (p.sizes[static_cast<size_t>(bunch_index)] < 2)
        throw std::invalid_argument("deleting the last edge of a bunch would disconnect the graph");
    BananaPath q = p;
    q.sizes[static_cast<size_t>(bunch_index)] -= 1;
    return q;
}

// Repeatedly remove any bunch whose multiplicity exceeds the vertex count of
// the piece it lies in (leftmost first). Chips are never usefully sent
// across such a bunch, so the gonality of the path is the sum over pieces.
inline std::vector<BananaPath> split_heavy(const BananaPath& p) {
    std::vector<BananaPath> out;
    std::function<void(const std::vector<long long>&)> go =
        [&](const std::vector<long long>& sizes) {
            long long verts = static_cast<long long>(sizes.size()) + 1;
            for (size_t i = 0; i < sizes.size(); ++i) {
                if (sizes[i] > verts) {
                    go(std::vector<long long>(sizes.begin(), sizes.begin() + static_cast<long>(i)));
                    go(std::vector<long long>(sizes.begin() + static_cast<long>(i) + 1, sizes.end()));
                    return;
                }
            }
            out.push_back(BananaPath{sizes});
        };
    go(p.sizes);
    return out;
}

inline long long lcm_bound(const BananaTree& g) {
    long long l = 1;
    for (const auto& b : g.bunches()) l = std::lcm(l, b.mult);
    return l;
}

inline long long lcm_bound(const BananaPath& p) {
    long long l = 1;
    for (long long a : p.sizes) l = std::lcm(l, a);
    return l;
}

// Lexicographic minimum of the size sequence and its reversal; used to
// count paths up to reversal.
inline BananaPath canonical_path(const BananaPath& p) {
    BananaPath r = p.reversed();
    return r.sizes < p.sizes ? r : p;
}

// The underlying simple path with v_i at id i, if the tree is a path.
inline std::optional<BananaPath> as_path(const BananaTree& g) {
    int n = g.num_vertices();
    if (n == 1) return BananaPath{};
    std::vector<int> deg(n, 0);
    for (const auto& b : g.bunches()) {
        ++deg[b.u];
        ++deg[b.v];
    }
    for (int v = 0; v < n; ++v)
        if (deg[v] > 2) return std::nullopt;
    int start = 0;
    while (deg[start] != 1) ++start;
    std::vector<long long> sizes;
    int prev = -1, cur = start;
    for (int step = 0; step + 1 < n; ++step) {
        for (const auto& [w, m] : g.neighbors(cur))
            if (w != prev) {
                sizes.push_back(m);
                prev = cur;
                cur = w;
                break;
            }
    }
    return BananaPath{std::move(sizes)};
}

// Star view (center adjacent to all others), if the tree is a star with
// at least 3 vertices or exactly 2 vertices.
inline std::optional<BananaStar> as_star(const BananaTree& g) {
    int n = g.num_vertices();
    if (n == 1) return std::nullopt;
    std::vector<int> deg(n, 0);
    for (const auto& b : g.bunches()) {
        ++deg[b.u];
        ++deg[b.v];
    }
    int center = 0;
    while (center < n && deg[center] != n - 1) ++center;
    if (center == n) return std::nullopt;
    std::vector<long long> mults;
    for (const auto& [w, m] : g.neighbors(center)) {
        (void)w;
        mults.push_back(m);
    }
    std::sort(mults.rbegin(), mults.rend());
    std::vector<std::pair<long long, long long>> classes;
    for (long long m : mults) {
        if (!classes.empty() && classes.back().first == m)
            ++classes.back().second;
        else
            classes.emplace_back(m, 1);
    }
    return make_star(std::move(classes));
}

}  // namespace banana
