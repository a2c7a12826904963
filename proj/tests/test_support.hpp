// Shared test helpers: brute-force oracles independent of the library's
// fast paths.
#pragma once

#include "banana/divisor.hpp"
#include "banana/graph.hpp"

namespace banana::testing {

// Minimum degree of an effective divisor D with positive rank of D + k*v0,
// straight from the definition. Independent oracle for the path recursion.
inline long long f_oracle(const BananaPath& p, long long k) {
    BananaTree g = p.to_tree();
    for (long long d = 0;; ++d) {
        bool found = detail::for_each_effective(g.num_vertices(), d, [&](const Divisor& cand) {
            Divisor boosted = cand;
            boosted.chips[0] += k;
            return has_positive_rank(g, boosted);
        });
        if (found) return d;
    }
}

}  // namespace banana::testing
