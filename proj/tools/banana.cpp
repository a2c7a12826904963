// Command-line surface: gonality and invariant reports, the exhaustive
// gonality distribution, the conjecture checker, the edge-deletion gap
// construction, and a self-test harness.
//
// Exit codes: 0 success, 1 property/verification failure, 2 usage error.
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "banana/enumerate.hpp"
#include "banana/invariants.hpp"
#include "banana/io.hpp"
#include "banana/path_dp.hpp"

using json = nlohmann::json;
using namespace banana;

namespace {

struct GlobalOpts {
    std::string format = "tsv";
    long long seed = 0;  // reserved for randomized extensions; outputs are deterministic
};

std::string describe_graph(const BananaTree& g) {
    if (auto p = as_path(g)) {
        std::string s = "path:";
        for (size_t i = 0; i < p->sizes.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(p->sizes[i]);
        }
        return s;
    }
    return to_bt1(g);
}

json report_to_json(const BananaTree& g, const InvariantReport& rep, const DpStats* stats) {
    json out;
    out["graph"] = describe_graph(g);
    if (rep.gonality) out["gonality"] = *rep.gonality;
    out["sn_scw"] = rep.sn_scw;
    out["genus"] = rep.genus;
    out["lcm_bound"] = rep.lcm;
    out["bn_bound"] = rep.bn;
    if (rep.bn_equality) out["bn_equality"] = *rep.bn_equality;
    if (rep.witness) out["witness"] = format_divisor(*rep.witness);
    if (rep.scramble) {
        out["scramble_witness"] = {{"order", rep.scramble->claimed_order},
                                   {"eggs", rep.scramble->eggs}};
    }
    if (stats) out["stats"] = {{"states", stats->states}, {"seconds", stats->seconds}};
    return out;
}

int cmd_gonality(const GlobalOpts& opts, const std::string& spec, bool oracle_check,
                 bool want_witness) {
    BananaTree g = parse_graph_spec(spec);
    long long gon;
    std::optional<Divisor> witness;
    DpStats stats;
    bool have_stats = false;
    std::string route;
    if (auto p = as_path(g)) {
        DpResult r = gonality_dp(*p);
        gon = r.gonality;
        witness = r.witness;
        stats = r.stats;
        have_stats = true;
        route = "path-dp";
    } else if (auto s = as_star(g)) {
        gon = star_gonality(*s);
        route = "star-formula";
    } else if (g.num_vertices() <= OracleLimits{}.max_vertices) {
        auto gw = gonality_oracle(g);
        gon = gw.gonality;
        witness = gw.witness;
        route = "oracle";
    } else {
        std::cerr << "error: tree is neither a path nor a star, and has too many vertices "
                     "for the brute-force search\n";
        return 2;
    }
    if (want_witness && !witness && g.num_vertices() <= OracleLimits{}.max_vertices)
        witness = gonality_oracle(g).witness;
    if (oracle_check) {
        long long check = gonality_oracle(g).gonality;
        if (check != gon) {
            std::cerr << "VERIFICATION FAILED: " << route << " gave " << gon << ", oracle gave "
                      << check << "\n";
            return 1;
        }
    }
    if (opts.format == "json") {
        json out;
        out["graph"] = describe_graph(g);
        out["gonality"] = gon;
        out["route"] = route;
        if (oracle_check) out["oracle_checked"] = true;
        if (want_witness && witness) out["witness"] = format_divisor(*witness);
        if (have_stats) out["stats"] = {{"states", stats.states}, {"seconds", stats.seconds}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << gon << "\n";
        if (want_witness && witness) std::cout << format_divisor(*witness) << "\n";
    }
    return 0;
}

int cmd_invariants(const GlobalOpts& opts, const std::string& spec, bool want_witness) {
    BananaTree g = parse_graph_spec(spec);
    InvariantReport rep = invariant_report(g, OracleLimits{}, want_witness);
    if (opts.format == "json") {
        std::cout << report_to_json(g, rep, nullptr).dump(2) << "\n";
    } else {
        std::cout << "graph\t" << describe_graph(g) << "\n";
        if (rep.gonality) std::cout << "gonality\t" << *rep.gonality << "\n";
        std::cout << "sn_scw\t" << rep.sn_scw << "\n";
        std::cout << "genus\t" << rep.genus << "\n";
        std::cout << "lcm_bound\t" << rep.lcm << "\n";
        std::cout << "bn_bound\t" << rep.bn << "\n";
        std::cout << "max_bunch\t" << rep.max_bunch << "\n";
        if (rep.witness) std::cout << "witness\t" << format_divisor(*rep.witness) << "\n";
    }
    return 0;
}

int cmd_table1(const GlobalOpts& opts, int max_vertices, int jobs) {
    std::vector<Table1Row> rows;
    for (int v = 2; v <= max_vertices; ++v) rows.push_back(table1_row(v, jobs));
    if (opts.format == "json") {
        json out = json::array();
        for (const auto& row : rows) {
            json counts = json::object();
            for (const auto& [gon, count] : row.counts) counts[std::to_string(gon)] = count;
            out.push_back({{"vertices", row.vertices}, {"counts", counts}, {"total", row.total}});
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "vertices";
        for (int gon = 2; gon <= max_vertices; ++gon) std::cout << "\t" << gon;
        std::cout << "\n";
        for (const auto& row : rows) {
            std::cout << row.vertices;
            for (int gon = 2; gon <= max_vertices; ++gon) {
                auto it = row.counts.find(gon);
                std::cout << "\t" << (it == row.counts.end() ? 0 : it->second);
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_conjecture(const GlobalOpts& opts, int max_vertices, long long max_bunch,
                   bool unsafe_large) {
    if (!unsafe_large && (max_vertices > 5 || max_bunch > 5)) {
        std::cerr << "error: ranges beyond V<=5, bunches<=5 need --unsafe-large "
                     "(the rank oracle is exponential in degree)\n";
        return 2;
    }
    auto records = check_conjecture(max_vertices, max_bunch);
    long long triggered = 0, violations = 0;
    json recs = json::array();
    for (const auto& rec : records) {
        if (rec.triggered) ++triggered;
        bool bad = rec.triggered && (!rec.claim_genus_ok || !rec.claim_gon3_ok);
        if (bad) ++violations;
        if (opts.format == "json") {
            json r;
            r["graph"] = describe_graph(rec.graph.to_tree());
            r["gon1"] = rec.gon1;
            r["gon2"] = rec.gon2;
            r["genus"] = rec.genus;
            r["triggered"] = rec.triggered;
            if (rec.triggered) {
                r["gon3"] = rec.gon3;
                r["claim_genus_ok"] = rec.claim_genus_ok;
                r["claim_gon3_ok"] = rec.claim_gon3_ok;
            }
            recs.push_back(std::move(r));
        } else if (bad) {
            std::cout << "COUNTEREXAMPLE\t" << describe_graph(rec.graph.to_tree()) << "\n";
        }
    }
    if (opts.format == "json") {
        json out;
        out["records"] = std::move(recs);
        out["graphs"] = records.size();
        out["triggered"] = triggered;
        out["counterexamples"] = violations;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "graphs\t" << records.size() << "\n";
        std::cout << "triggered\t" << triggered << "\n";
        std::cout << "counterexamples\t" << violations << "\n";
    }
    return violations ? 1 : 0;
}

int cmd_construct_gap(const GlobalOpts& opts, long long r, bool verify) {
    GapConstruction g = construct_gap(r);
    long long got_before = -1, got_after = -1;
    bool verified = false, ok = true;
    if (verify) {
        got_before = gonality_dp(g.before).gonality;
        got_after = gonality_dp(g.after).gonality;
        verified = true;
        ok = got_before == g.expected_before && got_after == g.expected_after;
    }
    if (opts.format == "json") {
        json out;
        out["r"] = g.r;
        out["a"] = g.a;
        out["b"] = g.b;
        out["n"] = g.n;
        out["bunch_index"] = g.bunch_index;
        out["between_vertices"] = {g.bunch_index, g.bunch_index + 1};
        out["gon_before"] = g.expected_before;
        out["gon_after"] = g.expected_after;
        if (verified) {
            out["verified"] = ok;
            out["dp_before"] = got_before;
            out["dp_after"] = got_after;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "r\t" << g.r << "\na\t" << g.a << "\nb\t" << g.b << "\nn\t" << g.n
                  << "\nbunch_index\t" << g.bunch_index << "\ngon_before\t" << g.expected_before
                  << "\ngon_after\t" << g.expected_after << "\n";
        if (verified)
            std::cout << "verified\t" << (ok ? "yes" : "NO") << "\t(dp: " << got_before << " -> "
                      << got_after << ")\n";
    }
    if (verify && !ok) {
        std::cerr << "VERIFICATION FAILED: dp disagrees with the construction\n";
        return 1;
    }
    return 0;
}

// Exhaustive cross-validation suites; prints the first counterexample found.
int cmd_selftest(const std::string& level) {
    int max_path_vertices = level == "full" ? 5 : 4;
    long long max_bunch = level == "full" ? 6 : 4;
    long long failures = 0;

    for (int v = 1; v <= max_path_vertices; ++v) {
        for_each_canonical_path(v - 1, 2, max_bunch, [&](const BananaPath& p) {
            long long dp = gonality_dp(p).gonality;
            long long oracle = gonality_oracle(p.to_tree()).gonality;
            if (dp != oracle && failures++ == 0)
                std::cout << "dp/oracle mismatch on " << describe_graph(p.to_tree()) << ": " << dp
                          << " vs " << oracle << "\n";
            BananaTree g = p.to_tree();
            long long k = scramble_screewidth(g);
            ScrambleWitness w = scramble_witness(g);
            if ((w.claimed_order != k || !check_scramble_witness(g, w) ||
                 tcd_width(g, tcd_witness(g)) != k) &&
                failures++ == 0)
                std::cout << "witness failure on " << describe_graph(g) << "\n";
        });
    }

    // Dhar equivalence vs adjacency reachability on tiny trees.
    for_each_small_tree(3, 3, [&](const BananaTree& g) {
        for (long long deg = 0; deg <= 3; ++deg) {
            std::vector<Divisor> all;
            detail::for_each_effective(g.num_vertices(), deg, [&](const Divisor& d) {
                all.push_back(d);
                return false;
            });
            for (const auto& a : all)
                for (const auto& b : all)
                    if (equivalent(g, a, b) != adjacency_reachable(g, a, b) && failures++ == 0)
                        std::cout << "equivalence mismatch on " << describe_graph(g) << " between "
                                  << format_divisor(a) << " and " << format_divisor(b) << "\n";
        }
    });

    if (level == "full") {
        long long stars_checked = 0;
        for_each_small_star(5, 4, [&](const BananaStar& s) {
            ++stars_checked;
            BananaTree g = star_to_tree(s);
            if (star_gonality(s) != gonality_oracle(g).gonality && failures++ == 0)
                std::cout << "star formula mismatch on " << describe_graph(g) << "\n";
        });
        (void)stars_checked;
    }

    if (failures) {
        std::cout << "selftest FAILED (" << failures << " violation(s))\n";
        return 1;
    }
    std::cout << "selftest passed (" << level << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chip-firing invariants of banana trees"};
    app.require_subcommand(1);
    GlobalOpts opts;
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"tsv", "json"}));
    app.add_option("--seed", opts.seed, "seed for randomized extensions (outputs are deterministic)");

    std::string graph_spec;
    bool oracle_check = false, want_witness = false;
    auto* gon = app.add_subcommand("gonality", "gonality of a banana tree")->fallthrough();
    gon->add_option("graph", graph_spec, "path:..., star:..., bt1 text, or a file")->required();
    gon->add_flag("--oracle-check", oracle_check, "cross-check against the brute-force oracle");
    gon->add_flag("--witness", want_witness, "print a minimum-degree positive-rank divisor");

    std::string inv_spec;
    bool inv_witness = false;
    auto* inv = app.add_subcommand("invariants", "full invariant report")->fallthrough();
    inv->add_option("graph", inv_spec, "path:..., star:..., bt1 text, or a file")->required();
    inv->add_flag("--witness", inv_witness, "include witnesses");

    int t1_max = 6, t1_jobs = 1;
    auto* t1 = app.add_subcommand("table1", "gonality distribution over small banana paths")->fallthrough();
    t1->add_option("--max-vertices", t1_max, "largest vertex count")->check(CLI::Range(2, 8));
    t1->add_option("--jobs", t1_jobs, "worker threads")->check(CLI::PositiveNumber);

    int cj_max = 5;
    long long cj_bunch = 5;
    bool cj_unsafe = false;
    auto* cj = app.add_subcommand("conjecture", "higher-gonality conjecture check")->fallthrough();
    cj->add_option("--max-vertices", cj_max, "largest vertex count");
    cj->add_option("--max-bunch", cj_bunch, "largest bunch size");
    cj->add_flag("--unsafe-large", cj_unsafe, "allow ranges beyond the default caps");

    long long gap_r = 1;
    bool gap_verify = false;
    auto* gap = app.add_subcommand("construct-gap", "graph whose gonality rises by r on edge deletion")->fallthrough();
    gap->add_option("--r", gap_r, "gap size")->required()->check(CLI::PositiveNumber);
    gap->add_flag("--verify", gap_verify, "verify both gonalities with the dp");

    std::string st_level = "quick";
    auto* st = app.add_subcommand("selftest", "cross-validation suites")->fallthrough();
    st->add_option("--level", st_level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gon->parsed()) return cmd_gonality(opts, graph_spec, oracle_check, want_witness);
        if (inv->parsed()) return cmd_invariants(opts, inv_spec, inv_witness);
        if (t1->parsed()) return cmd_table1(opts, t1_max, t1_jobs);
        if (cj->parsed()) return cmd_conjecture(opts, cj_max, cj_bunch, cj_unsafe);
        if (gap->parsed()) return cmd_construct_gap(opts, gap_r, gap_verify);
        if (st->parsed()) return cmd_selftest(st_level);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
