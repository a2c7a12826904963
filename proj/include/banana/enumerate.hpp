// Exhaustive enumeration of small banana paths: the gonality distribution
// table and the higher-gonality conjecture check.
//
// The enumeration domain for V vertices draws bunch sizes from {2,...,V+1}
// (V+1 standing in for any size larger than V; crossing such a bunch never
// helps a degree-<=V divisor) and counts paths up to reversal. The number
// of classes is (V^(V-1) + V^ceil((V-1)/2)) / 2.
#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <thread>
#include <vector>

#include "banana/divisor.hpp"
#include "banana/graph.hpp"
#include "banana/invariants.hpp"
#include "banana/path_dp.hpp"

namespace banana {

inline long long enumeration_class_count(int vertices) {
    int len = vertices - 1;
    long long all = 1, half = 1;
    for (int i = 0; i < len; ++i) all *= vertices;
    for (int i = 0; i < (len + 1) / 2; ++i) half *= vertices;
    return (all + half) / 2;
}

// Visit every canonical (A <= reverse(A)) size sequence of the given length
// over [min_size, max_size], in lexicographic order.
template <class Fn>
void for_each_canonical_path(int length, long long min_size, long long max_size, Fn&& fn) {
    if (length == 0) {
        fn(BananaPath{});
        return;
    }
    std::vector<long long> sizes(static_cast<size_t>(length), min_size);
    while (true) {
        std::vector<long long> rev(sizes.rbegin(), sizes.rend());
        if (sizes <= rev) fn(BananaPath{sizes});
        int i = length - 1;
        while (i >= 0 && sizes[static_cast<size_t>(i)] == max_size) {
            sizes[static_cast<size_t>(i)] = min_size;
            --i;
        }
        if (i < 0) break;
        ++sizes[static_cast<size_t>(i)];
    }
}

// All banana trees on up to four vertices with bunch sizes in
// [1, max_mult]: each underlying tree shape (path, and the star on four
// vertices) with every multiplicity assignment.
template <class Fn>
void for_each_small_tree(int n, long long max_mult, Fn&& fn) {
    std::vector<std::vector<std::pair<int, int>>> shapes;
    if (n == 1) shapes.push_back({});
    if (n == 2) shapes.push_back({{0, 1}});
    if (n == 3) shapes.push_back({{0, 1}, {1, 2}});
    if (n == 4) {
        shapes.push_back({{0, 1}, {1, 2}, {2, 3}});  // path
        shapes.push_back({{0, 1}, {0, 2}, {0, 3}});  // star
    }
    for (const auto& shape : shapes) {
        std::vector<long long> mults(shape.size(), 1);
        std::function<void(size_t)> go = [&](size_t i) {
            if (i == shape.size()) {
                std::vector<Bunch> bunches;
                for (size_t j = 0; j < shape.size(); ++j)
                    bunches.push_back({shape[j].first, shape[j].second, mults[j]});
                fn(BananaTree(n, bunches));
                return;
            }
            for (long long m = 1; m <= max_mult; ++m) {
                mults[i] = m;
                go(i + 1);
            }
        };
        go(0);
    }
}

// All banana stars with at most max_leaves leaves and bunch sizes at most
// max_size (classes strictly decreasing).
template <class Fn>
void for_each_small_star(long long max_leaves, long long max_size, Fn&& fn) {
    std::vector<std::pair<long long, long long>> classes;
    std::function<void(long long, long long)> go = [&](long long next_size, long long leaves_left) {
        if (!classes.empty()) fn(make_star(classes));
        for (long long a = next_size; a >= 1; --a) {
            for (long long r = 1; r <= leaves_left; ++r) {
                classes.emplace_back(a, r);
                go(a - 1, leaves_left - r);
                classes.pop_back();
            }
        }
    };
    go(max_size, max_leaves);
}

struct Table1Row {
    int vertices = 0;
    std::map<long long, long long> counts;  // gonality -> number of classes
    long long total = 0;
};

// Gonality distribution over the enumeration domain for one vertex count.
// Workers tally disjoint index ranges; the merge is a plain sum, so the
// result is independent of the job count.
inline Table1Row table1_row(int vertices, int jobs = 1) {
    if (vertices < 2) throw std::invalid_argument("table rows start at 2 vertices");
    int length = vertices - 1;
    long long min_size = 2, max_size = vertices + 1;
    long long span = max_size - min_size + 1;
    long long total_seqs = 1;
    for (int i = 0; i < length; ++i) total_seqs *= span;

    auto decode = [&](long long index) {
        std::vector<long long> sizes(static_cast<size_t>(length));
        for (int i = length - 1; i >= 0; --i) {
            sizes[static_cast<size_t>(i)] = min_size + index % span;
            index /= span;
        }
        return sizes;
    };

    jobs = std::max(1, jobs);
    std::vector<std::map<long long, long long>> tallies(static_cast<size_t>(jobs));
    auto work = [&](int job) {
        long long lo = total_seqs * job / jobs;
        long long hi = total_seqs * (job + 1) / jobs;
        for (long long idx = lo; idx < hi; ++idx) {
            std::vector<long long> sizes = decode(idx);
            std::vector<long long> rev(sizes.rbegin(), sizes.rend());
            if (rev < sizes) continue;
            ++tallies[static_cast<size_t>(job)][gonality_dp(BananaPath{sizes}).gonality];
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j) threads.emplace_back(work, j);
        for (auto& t : threads) t.join();
    }
    Table1Row row;
    row.vertices = vertices;
    for (const auto& tally : tallies)
        for (const auto& [gon, count] : tally) {
            row.counts[gon] += count;
            row.total += count;
        }
    return row;
}

struct ConjectureRecord {
    BananaPath graph;
    long long gon1 = 0;
    long long gon2 = 0;
    long long gon3 = 0;  // only filled when triggered and gon1 >= 2
    long long genus = 0;
    bool triggered = false;  // gon2 == gon1 + 1
    bool claim_genus_ok = true;     // genus == gon1 choose 2
    bool claim_gon3_ok = true;      // gon3 == 2 * gon1
};

// Check the higher-gonality conjecture over all canonical ripe paths with
// the given bounds. gon2/gon3 go through the brute-force oracle.
inline std::vector<ConjectureRecord> check_conjecture(int max_vertices, long long max_bunch,
                                                      const OracleLimits& limits = {}) {
    std::vector<ConjectureRecord> out;
    for (int v = 2; v <= max_vertices; ++v) {
        for_each_canonical_path(v - 1, 2, max_bunch, [&](const BananaPath& p) {
            ConjectureRecord rec;
            rec.graph = p;
            rec.genus = genus(p);
            rec.gon1 = gonality_dp(p).gonality;
            BananaTree tree = p.to_tree();
            rec.gon2 = gon_r_oracle(tree, 2, limits);
            rec.triggered = rec.gon2 == rec.gon1 + 1;
            if (rec.triggered) {
                rec.claim_genus_ok = rec.genus == rec.gon1 * (rec.gon1 - 1) / 2;
                if (rec.gon1 >= 2) {
                    rec.gon3 = gon_r_oracle(tree, 3, limits);
                    rec.claim_gon3_ok = rec.gon3 == 2 * rec.gon1;
                }
            }
            out.push_back(std::move(rec));
        });
    }
    return out;
}

}  // namespace banana
