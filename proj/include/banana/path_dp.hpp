// Gonality of banana paths via the f(suffix, k) recursion with sparse
// memoization, heavy-bunch splitting, and witness reconstruction.
//
// f(P, i, k) is the least number of extra chips needed on the suffix of P
// starting at vertex i to reach a positive-rank divisor, given k free chips
// already sitting on vertex i. f(P, 0, 0) is the gonality of P.
#pragma once

#include <chrono>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "banana/divisor.hpp"
#include "banana/graph.hpp"

namespace banana {

// Sparse (suffix index, k) -> f table. Values are functions of the key, so
// rewrites are idempotent.
class MemoTable {
public:
    bool get(int i, long long k, long long& value) const {
        auto it = entries_.find(key(i, k));
        if (it == entries_.end()) return false;
        value = it->second;
        return true;
    }

    void put(int i, long long k, long long value) { entries_[key(i, k)] = value; }

    size_t size() const { return entries_.size(); }
    void clear() { entries_.clear(); }

private:
    static uint64_t key(int i, long long k) {
        return (static_cast<uint64_t>(static_cast<uint32_t>(i)) << 32) |
               static_cast<uint64_t>(static_cast<uint32_t>(k));
    }
    std::unordered_map<uint64_t, long long> entries_;
};

namespace detail {

struct DpRules {
    const std::vector<long long>& sizes;  // the piece's bunch sizes
    long long cap;                        // k >= cap  =>  f = 0, when sound
    bool cap_sound;                       // all bunches fit in the piece

    explicit DpRules(const BananaPath& piece)
        : sizes(piece.sizes),
          cap(static_cast<long long>(piece.num_vertices()) *
                  static_cast<long long>(piece.num_vertices()) +
              1),
          cap_sound(true) {
        for (long long a : sizes)
            if (a > piece.num_vertices()) cap_sound = false;
    }

    int last() const { return static_cast<int>(sizes.size()); }
    bool capped(long long k) const { return cap_sound && k >= cap; }
};

}  // namespace detail

// f for the suffix starting at vertex i, with k free chips on that vertex.
// Evaluated iteratively: a discovery pass collects the reachable (i, k)
// states, then values are filled backwards from the right end.
inline long long f_value(const BananaPath& piece, int i, long long k, MemoTable& memo) {
    if (i < 0 || i > static_cast<int>(piece.sizes.size()))
        throw std::invalid_argument("suffix index out of range");
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    detail::DpRules rules(piece);
    if (rules.capped(k)) return 0;
    {
        long long v;
        if (memo.get(i, k, v)) return v;
    }

    // Children of (j, k'): both k=0 branches use k'=0 and k'=a; the k>0
    // branches use the nearest multiples of a around k'.
    auto children = [&](int j, long long kk, long long out[2]) {
        long long a = piece.sizes[static_cast<size_t>(j)];
        if (kk == 0) {
            out[0] = 0;
            out[1] = a;
        } else {
            out[0] = a * (kk / a);
            out[1] = a * ((kk + a - 1) / a);
        }
    };

    std::vector<std::vector<long long>> needed(piece.sizes.size() + 1);
    needed[static_cast<size_t>(i)].push_back(k);
    for (int j = i; j < rules.last(); ++j) {
        std::vector<long long>& level = needed[static_cast<size_t>(j)];
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
        for (long long kk : level) {
            long long skip;
            if (memo.get(j, kk, skip)) continue;
            long long ch[2];
            children(j, kk, ch);
            for (long long c : ch)
                if (!rules.capped(c)) needed[static_cast<size_t>(j) + 1].push_back(c);
        }
    }

    auto lookup = [&](int j, long long kk) -> long long {
        if (rules.capped(kk)) return 0;
        long long v;
        if (!memo.get(j, kk, v))
            throw std::logic_error("f_value: missing memo entry");
        return v;
    };

    for (int j = rules.last(); j >= i; --j) {
        std::vector<long long>& level = needed[static_cast<size_t>(j)];
        if (j == rules.last()) {
            std::sort(level.begin(), level.end());
            level.erase(std::unique(level.begin(), level.end()), level.end());
        }
        for (long long kk : level) {
            long long existing;
            if (memo.get(j, kk, existing)) continue;
            long long value;
            if (j == rules.last()) {
                value = kk == 0 ? 1 : 0;
            } else {
                long long a = piece.sizes[static_cast<size_t>(j)];
                long long ch[2];
                children(j, kk, ch);
                if (kk == 0)
                    value = std::min(1 + lookup(j + 1, ch[0]), a + lookup(j + 1, ch[1]));
                else
                    value = std::min(lookup(j + 1, ch[0]),
                                     ch[1] - kk + lookup(j + 1, ch[1]));
            }
            memo.put(j, kk, value);
        }
    }
    long long result;
    memo.get(i, k, result);
    return result;
}

struct DpStats {
    size_t states = 0;
    double seconds = 0;
};

struct DpResult {
    long long gonality = 0;
    std::vector<long long> piece_gonalities;
    Divisor witness;  // over the full path's vertices
    DpStats stats;
};

namespace detail {

// Replay the argmin branches of one piece, writing chips into the witness at
// the given vertex offset. Ties prefer the place-a-chip branch.
inline void replay_witness(const BananaPath& piece, MemoTable& memo, int offset,
                           Divisor& witness) {
    DpRules rules(piece);
    auto f = [&](int j, long long kk) -> long long {
        if (rules.capped(kk)) return 0;
        long long v;
        if (memo.get(j, kk, v)) return v;
        return f_value(piece, j, kk, memo);
    };
    int j = 0;
    long long k = 0;
    while (true) {
        size_t slot = static_cast<size_t>(offset + j);
        if (j == rules.last()) {
            if (k == 0) witness.chips[slot] += 1;
            return;
        }
        long long a = piece.sizes[static_cast<size_t>(j)];
        if (k == 0) {
            long long one = 1 + f(j + 1, 0);
            long long carry = a + f(j + 1, a);
            if (one <= carry) {
                witness.chips[slot] += 1;
                k = 0;
            } else {
                witness.chips[slot] += a;
                k = a;
            }
        } else {
            long long down = a * (k / a);
            long long up = a * ((k + a - 1) / a);
            long long keep = f(j + 1, down);
            long long top_up = up - k + f(j + 1, up);
            if (keep <= top_up) {
                k = down;
            } else {
                witness.chips[slot] += up - k;
                k = up;
            }
        }
        ++j;
    }
}

}  // namespace detail

// Gonality of a banana path: split off heavy bunches, then sum f over the
// pieces. The witness replays the argmin choices piece by piece.
inline DpResult gonality_dp(const BananaPath& p) {
    auto t0 = std::chrono::steady_clock::now();
    DpResult result;
    result.witness = Divisor{std::vector<long long>(static_cast<size_t>(p.num_vertices()), 0)};
    int offset = 0;
    for (const BananaPath& piece : split_heavy(p)) {
        MemoTable memo;
        long long gon = f_value(piece, 0, 0, memo);
        detail::replay_witness(piece, memo, offset, result.witness);
        result.piece_gonalities.push_back(gon);
        result.gonality += gon;
        result.stats.states += memo.size();
        offset += piece.num_vertices();
    }
    result.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

inline Divisor witness_divisor(const BananaPath& p, const DpResult& r) {
    (void)p;
    return r.witness;
}

// f(P, 0, k) for k in [0, k_max], sharing one memo table.
inline std::vector<long long> f_profile(const BananaPath& p, long long k_max) {
    MemoTable memo;
    std::vector<long long> out;
    for (long long k = 0; k <= k_max; ++k) out.push_back(f_value(p, 0, k, memo));
    return out;
}

// Polynomial positive-rank check on a path: for each target vertex, greedily
// sweep chips inward from both ends and test that a chip lands on it.
// Sweeping toward v yields exactly the v-reduced divisor on a path.
inline bool positive_rank_path(const BananaPath& p, const Divisor& d) {
    if (!d.is_effective()) throw std::invalid_argument("positive_rank_path needs an effective divisor");
    int n = p.num_vertices();
    // inward[v] = chips deliverable to v from the left; likewise from the right.
    std::vector<long long> from_left(static_cast<size_t>(n), 0);
    std::vector<long long> from_right(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        long long carry = 0;
        for (int i = 0; i < v; ++i) {
            long long a = p.sizes[static_cast<size_t>(i)];
            carry = a * ((d(i) + carry) / a);
        }
        from_left[static_cast<size_t>(v)] = carry;
        carry = 0;
        for (int i = n - 1; i > v; --i) {
            long long a = p.sizes[static_cast<size_t>(i) - 1];
            carry = a * ((d(i) + carry) / a);
        }
        from_right[static_cast<size_t>(v)] = carry;
    }
    for (int v = 0; v < n; ++v)
        if (d(v) + from_left[static_cast<size_t>(v)] + from_right[static_cast<size_t>(v)] < 1)
            return false;
    return true;
}

}  // namespace banana
