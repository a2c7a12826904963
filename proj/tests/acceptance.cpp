// Acceptance suite: end-to-end checks of the headline results, printed one
// pass/fail line each. Exit code 0 only if every check passes.
#include <chrono>
#include <cstdio>
#include <map>
#include <vector>

#include "banana/enumerate.hpp"
#include "banana/invariants.hpp"
#include "banana/io.hpp"
#include "banana/path_dp.hpp"
#include "test_support.hpp"

using namespace banana;

namespace {

int failures = 0;

void report(int id, const char* what, bool ok) {
    std::printf("%s  criterion %d: %s\n", ok ? "PASS" : "FAIL", id, what);
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Worked examples, exact, under a second.
void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = gonality_dp(make_path({3, 3, 3})).gonality == 3 &&
              gonality_dp(make_path({3, 2, 3})).gonality == 4;
    MemoTable memo;
    BananaPath b23 = make_path({2, 3});
    ok = ok && f_value(b23, 0, 0, memo) == 3 && f_value(b23, 0, 3, memo) == 1;
    ok = ok && seconds_since(t0) < 1.0;
    report(1, "worked path examples, exact, < 1 s", ok);
}

// 2. Gap construction for r = 2: the 7058-vertex monoculture, 42 -> 44.
void criterion_2() {
    auto t0 = std::chrono::steady_clock::now();
    GapConstruction g = construct_gap(2);
    bool ok = g.a == 6 && g.b == 7 && g.n == 7057;
    ok = ok && gonality_dp(g.before).gonality == 42;
    ok = ok && gonality_dp(g.after).gonality == 44;
    ok = ok && seconds_since(t0) < 60.0;
    report(2, "edge deletion gap r=2 on B_{(6,7);7057}: 42 -> 44, < 60 s", ok);
}

// 3. Gonality distribution rows up to 6 vertices.
void criterion_3() {
    auto t0 = std::chrono::steady_clock::now();
    std::map<int, std::map<long long, long long>> expected = {
        {2, {{2, 2}}},
        {3, {{2, 1}, {3, 5}}},
        {4, {{2, 1}, {3, 6}, {4, 33}}},
        {5, {{2, 1}, {3, 9}, {4, 60}, {5, 255}}},
        {6, {{2, 1}, {3, 13}, {4, 149}, {5, 655}, {6, 3178}}},
    };
    bool ok = true;
    for (const auto& [v, counts] : expected) {
        Table1Row row = table1_row(v);
        ok = ok && row.counts == counts && row.total == enumeration_class_count(v);
    }
    ok = ok && seconds_since(t0) < 300.0;
    report(3, "gonality distribution rows for 2-6 vertices, < 5 min", ok);
}

// 4. DP == brute-force oracle on all canonical ripe paths, V <= 5, sizes <= 6.
void criterion_4() {
    bool ok = true;
    for (int v = 1; v <= 5 && ok; ++v) {
        for_each_canonical_path(v - 1, 2, 6, [&](const BananaPath& p) {
            if (gonality_dp(p).gonality != gonality_oracle(p.to_tree()).gonality) ok = false;
        });
    }
    report(4, "dp matches oracle on all ripe paths, V<=5, sizes<=6", ok);
}

// 5. Closed forms match the oracle: stars and exact monocultures.
void criterion_5() {
    bool ok = true;
    for_each_small_star(5, 4, [&](const BananaStar& s) {
        if (star_gonality(s) != gonality_oracle(star_to_tree(s)).gonality) ok = false;
    });
    for (auto pattern : std::vector<std::vector<long long>>{{2}, {1, 2}, {2, 2}}) {
        long long l = 1;
        for (long long a : pattern) l = std::lcm(l, a);
        long long n = static_cast<long long>(pattern.size()) * l * l;
        if (n + 1 > 9) continue;
        MonocultureSpec spec{pattern, n};
        auto mg = monoculture_gonality(spec);
        if (!mg.exact || mg.value != gonality_oracle(make_monoculture(spec).to_tree()).gonality)
            ok = false;
    }
    report(5, "star formula and exact monocultures match the oracle", ok);
}

// 6. sn/scw <= gonality <= min(lcm, |V|), with validated witnesses, over the
// graphs of criteria 3-5.
void criterion_6() {
    bool ok = true;
    auto check_graph = [&](const BananaTree& g, long long gon) {
        long long k = scramble_screewidth(g);
        if (k > gon || gon > std::min<long long>(lcm_bound(g), g.num_vertices())) ok = false;
        ScrambleWitness w = scramble_witness(g);
        if (w.claimed_order != k || !check_scramble_witness(g, w)) ok = false;
        if (tcd_width(g, tcd_witness(g)) != k) ok = false;
    };
    for (int v = 2; v <= 6; ++v)
        for_each_canonical_path(v - 1, 2, v + 1, [&](const BananaPath& p) {
            check_graph(p.to_tree(), gonality_dp(p).gonality);
        });
    for_each_small_star(5, 4, [&](const BananaStar& s) {
        check_graph(star_to_tree(s), star_gonality(s));
    });
    report(6, "invariant chain sn/scw <= gon <= min(lcm, |V|) with valid witnesses", ok);
}

// 7. Brill-Noether bound on every enumerated graph; equality needs bunches
// <= 5 (B_(2,5,2) attains the bound with a bunch of 5, so 4 is too tight).
void criterion_7() {
    bool ok = true;
    for (int v = 1; v <= 6; ++v)
        for_each_canonical_path(v - 1, 2, v + 1, [&](const BananaPath& p) {
            BnCheck c = bn_check_from(gonality_dp(p).gonality, p.to_tree());
            if (!c.holds || !c.max_bunch_ok) ok = false;
        });
    for_each_small_star(5, 4, [&](const BananaStar& s) {
        BnCheck c = bn_check(star_to_tree(s));
        if (!c.holds || !c.max_bunch_ok) ok = false;
    });
    report(7, "Brill-Noether bound holds; equality only with bunches <= 5", ok);
}

// 8. Higher-gonality conjecture: zero counterexamples, V <= 5, sizes <= 5.
void criterion_8() {
    bool ok = true;
    for (const auto& rec : check_conjecture(5, 5))
        if (rec.triggered && (!rec.claim_genus_ok || !rec.claim_gon3_ok)) ok = false;
    report(8, "higher-gonality conjecture: no counterexample, V<=5, sizes<=5", ok);
}

// 9. Dhar equivalence agrees with adjacency-move reachability on all
// effective pairs of degree <= 4, trees with <= 4 vertices, bunches <= 3.
void criterion_9() {
    bool ok = true;
    for (int n = 1; n <= 4; ++n) {
        for_each_small_tree(n, 3, [&](const BananaTree& g) {
            for (long long deg = 0; deg <= 4 && ok; ++deg) {
                std::vector<Divisor> all;
                detail::for_each_effective(g.num_vertices(), deg, [&](const Divisor& d) {
                    all.push_back(d);
                    return false;
                });
                for (const auto& a : all)
                    for (const auto& b : all)
                        if (equivalent(g, a, b) != adjacency_reachable(g, a, b)) ok = false;
            }
        });
    }
    report(9, "dhar equivalence == adjacency reachability on small trees", ok);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all criteria passed\n");
    return failures ? 1 : 0;
}
