// Text formats: the "banana-tree v1" file format, path/star shorthands, and
// the comma-separated divisor form.
//
//   bt1 <n_vertices>          path:3,2,3          star:4^1,3^3,2^3,1^2
//   <u> <v> <mult>  (per bunch)                   d:3,0,0,1
#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "banana/divisor.hpp"
#include "banana/graph.hpp"

namespace banana {

namespace detail {

inline long long parse_ll(const std::string& item) {
    size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(item, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer: '" + item + "'");
    }
    if (pos != item.size()) throw std::invalid_argument("bad integer: '" + item + "'");
    return v;
}

inline std::vector<long long> parse_int_list(const std::string& text, char sep) {
    std::vector<long long> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        if (item.empty()) continue;
        out.push_back(parse_ll(item));
    }
    return out;
}

}  // namespace detail

inline BananaPath parse_path_spec(const std::string& body) {
    return make_path(detail::parse_int_list(body, ','));
}

// "4^1,3^3,2^3,1^2"; a bare size means count 1.
inline BananaStar parse_star_spec(const std::string& body) {
    std::vector<std::pair<long long, long long>> classes;
    std::string item;
    std::istringstream in(body);
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto caret = item.find('^');
        long long a, r = 1;
        if (caret == std::string::npos) {
            a = detail::parse_ll(item);
        } else {
            a = detail::parse_ll(item.substr(0, caret));
            r = detail::parse_ll(item.substr(caret + 1));
        }
        classes.emplace_back(a, r);
    }
    return make_star(std::move(classes));
}

inline BananaTree parse_bt1(std::istream& in) {
    std::string tag;
    int n = 0;
    if (!(in >> tag >> n) || tag != "bt1")
        throw std::invalid_argument("expected 'bt1 <n_vertices>' header");
    std::vector<Bunch> bunches;
    int u, v;
    long long m;
    while (in >> u >> v >> m) bunches.push_back({u, v, m});
    return BananaTree(n, std::move(bunches));
}

inline std::string to_bt1(const BananaTree& g) {
    std::ostringstream out;
    out << "bt1 " << g.num_vertices() << "\n";
    for (const auto& b : g.bunches()) out << b.u << " " << b.v << " " << b.mult << "\n";
    return out.str();
}

// Accepts path:/star: shorthand, inline bt1 text, or a file name.
inline BananaTree parse_graph_spec(const std::string& spec) {
    if (spec.rfind("path:", 0) == 0) return parse_path_spec(spec.substr(5)).to_tree();
    if (spec.rfind("star:", 0) == 0) return star_to_tree(parse_star_spec(spec.substr(5)));
    if (spec.rfind("bt1", 0) == 0) {
        std::istringstream in(spec);
        return parse_bt1(in);
    }
    std::ifstream file(spec);
    if (!file) throw std::invalid_argument("cannot open graph file: " + spec);
    return parse_bt1(file);
}

// "d:3,0,0,1" or bare "3,0,0,1", aligned with vertex ids.
inline Divisor parse_divisor_spec(const std::string& spec) {
    std::string body = spec.rfind("d:", 0) == 0 ? spec.substr(2) : spec;
    return Divisor{detail::parse_int_list(body, ',')};
}

inline std::string format_divisor(const Divisor& d) {
    std::ostringstream out;
    out << "d:";
    for (size_t i = 0; i < d.chips.size(); ++i) {
        if (i) out << ",";
        out << d.chips[i];
    }
    return out.str();
}

}  // namespace banana
