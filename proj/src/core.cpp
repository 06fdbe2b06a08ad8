#include "tempnet/core.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace tempnet {

Snapshot Snapshot::from_edges(int n_vertices, std::vector<std::pair<int, int>> edges) {
    Snapshot g;
    g.n_vertices_ = n_vertices;
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("snapshot: self-loop on vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices)
            throw std::invalid_argument("snapshot: vertex id out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges_ = std::move(edges);
    g.degrees_.assign(static_cast<size_t>(n_vertices), 0);
    g.adj_.assign(static_cast<size_t>(n_vertices), {});
    for (const auto& [u, v] : g.edges_) {
        g.degrees_[static_cast<size_t>(u)]++;
        g.degrees_[static_cast<size_t>(v)]++;
        g.adj_[static_cast<size_t>(u)].push_back(v);
        g.adj_[static_cast<size_t>(v)].push_back(u);
    }
    return g;
}

bool Snapshot::has_edge(int u, int v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

SliceStack SliceStack::from_slices(std::vector<Snapshot> slices, double coupling) {
    if (slices.empty()) throw std::invalid_argument("slice stack: no slices");
    if (coupling < 0) throw std::invalid_argument("slice stack: negative coupling");
    SliceStack st;
    st.n_vertices_ = slices.front().n_vertices();
    for (const auto& g : slices)
        if (g.n_vertices() != st.n_vertices_)
            throw std::invalid_argument("slice stack: slices disagree on vertex count");
    st.coupling_ = coupling;
    double mu = 0.0;
    for (const auto& g : slices) mu += static_cast<double>(g.m());
    mu += coupling * static_cast<double>(st.n_vertices_) * static_cast<double>(slices.size() - 1);
    st.mu_ = mu;
    st.slices_ = std::move(slices);
    return st;
}

ContactSequence parse_contacts(std::istream& in) {
    ContactSequence cs;
    std::string line;
    long line_no = 0;
    int max_id = -1;
    double t_min = std::numeric_limits<double>::infinity();
    double t_max = -std::numeric_limits<double>::infinity();
    while (std::getline(in, line)) {
        ++line_no;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#' || line[pos] == '%') continue;
        std::istringstream ls(line);
        long long u, v;
        double t;
        if (!(ls >> u >> v >> t))
            throw ParseError("line " + std::to_string(line_no) + ": expected \"u v t\"");
        std::string rest;
        if (ls >> rest)
            throw ParseError("line " + std::to_string(line_no) + ": trailing field \"" + rest + "\"");
        if (u < 0 || v < 0)
            throw ParseError("line " + std::to_string(line_no) + ": negative vertex id");
        if (u == v)
            throw ParseError("line " + std::to_string(line_no) + ": self-loop on vertex " + std::to_string(u));
        if (!std::isfinite(t))
            throw ParseError("line " + std::to_string(line_no) + ": non-finite timestamp");
        Contact c{static_cast<int>(u), static_cast<int>(v), t};
        if (c.u > c.v) std::swap(c.u, c.v);
        cs.events.push_back(c);
        max_id = std::max(max_id, c.v);
        t_min = std::min(t_min, t);
        t_max = std::max(t_max, t);
    }
    if (cs.events.empty()) throw ParseError("no events");
    cs.n_vertices = max_id + 1;
    cs.t_min = t_min;
    cs.t_max = t_max;
    return cs;
}

ContactSequence parse_contacts_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_contacts(in);
}

SliceStack slice(const ContactSequence& cs, int n_slices, double coupling) {
    if (n_slices < 1) throw std::invalid_argument("slice: n_slices must be >= 1");
    if (cs.events.empty()) throw std::invalid_argument("slice: empty contact sequence");
    const double span = cs.t_max - cs.t_min;
    std::vector<std::vector<std::pair<int, int>>> buckets(static_cast<size_t>(n_slices));
    for (const auto& e : cs.events) {
        int s = 0;
        if (span > 0) {
            s = static_cast<int>(std::floor(static_cast<double>(n_slices) * (e.t - cs.t_min) / span));
            s = std::clamp(s, 0, n_slices - 1);
        }
        buckets[static_cast<size_t>(s)].emplace_back(e.u, e.v);
    }
    std::vector<Snapshot> slices;
    slices.reserve(static_cast<size_t>(n_slices));
    for (auto& b : buckets) slices.push_back(Snapshot::from_edges(cs.n_vertices, std::move(b)));
    return SliceStack::from_slices(std::move(slices), coupling);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace tempnet
