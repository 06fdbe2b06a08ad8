#include "tempnet/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace tempnet {

void write_contacts(const ContactSequence& cs, std::ostream& out) {
    char buf[64];
    for (const auto& e : cs.events) {
        std::snprintf(buf, sizeof(buf), "%.17g", e.t);
        out << e.u << ' ' << e.v << ' ' << buf << '\n';
    }
}

void write_partition(const Partition& p, std::ostream& out) {
    for (int s = 0; s < p.n_slices; ++s)
        for (int v = 0; v < p.n_vertices; ++v)
            out << v << ' ' << s << ' ' << p.at(v, s) << '\n';
}

Partition read_partition(std::istream& in) {
    std::map<std::pair<int, int>, int> entries;
    std::string line;
    long line_no = 0;
    int max_v = -1, max_s = -1;
    while (std::getline(in, line)) {
        ++line_no;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#' || line[pos] == '%') continue;
        std::istringstream ls(line);
        int v, s, label;
        if (!(ls >> v >> s >> label) || v < 0 || s < 0)
            throw ParseError("line " + std::to_string(line_no) + ": expected \"vertex slice label\"");
        entries[{v, s}] = label;
        max_v = std::max(max_v, v);
        max_s = std::max(max_s, s);
    }
    if (entries.empty()) throw ParseError("no partition entries");
    Partition p(max_v + 1, max_s + 1);
    std::vector<bool> seen(p.size(), false);
    for (const auto& [vs, label] : entries) {
        p.at(vs.first, vs.second) = label;
        seen[p.flat(vs.first, vs.second)] = true;
    }
    for (size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            throw ParseError("partition does not cover every (vertex, slice) pair");
    return p;
}

Partition read_partition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_partition(in);
}

}  // namespace tempnet
