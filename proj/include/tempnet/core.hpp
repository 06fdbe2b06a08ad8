#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tempnet {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One undirected timestamped contact. (u,v,t) and (v,u,t) are the same event;
// we normalize to u < v on construction.
struct Contact {
    int u = 0;
    int v = 0;
    double t = 0.0;
};

struct ContactSequence {
    std::vector<Contact> events;
    int n_vertices = 0;
    double t_min = 0.0;
    double t_max = 0.0;
};

// Static simple undirected graph, the content of one time slice.
class Snapshot {
public:
    Snapshot() = default;

    // Edges are normalized to u < v, sorted and deduplicated. Self-loops throw.
    static Snapshot from_edges(int n_vertices, std::vector<std::pair<int, int>> edges);

    int n_vertices() const { return n_vertices_; }
    long m() const { return static_cast<long>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }
    bool has_edge(int u, int v) const;

private:
    int n_vertices_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> degrees_;
    std::vector<std::vector<int>> adj_;
};

// Ordered sequence of slices on a shared vertex set, with uniform coupling
// between copies of the same vertex in consecutive slices.
class SliceStack {
public:
    SliceStack() = default;

    // All slices must share the vertex count; coupling must be >= 0.
    static SliceStack from_slices(std::vector<Snapshot> slices, double coupling = 1.0);

    int n_vertices() const { return n_vertices_; }
    int n_slices() const { return static_cast<int>(slices_.size()); }
    const std::vector<Snapshot>& slices() const { return slices_; }
    const Snapshot& slice(int s) const { return slices_[static_cast<size_t>(s)]; }
    double coupling() const { return coupling_; }

    // Total normalizer: sum of intra-slice edge counts plus one coupling
    // contribution per vertex per consecutive slice pair.
    double mu() const { return mu_; }

private:
    std::vector<Snapshot> slices_;
    int n_vertices_ = 0;
    double coupling_ = 1.0;
    double mu_ = 0.0;
};

// Community labels for every (vertex, slice) pair. Labels are opaque ids;
// only equality matters.
struct Partition {
    int n_vertices = 0;
    int n_slices = 0;
    std::vector<int> labels;  // flat index s * n_vertices + i

    Partition() = default;
    Partition(int n, int S, int fill = 0)
        : n_vertices(n), n_slices(S),
          labels(static_cast<size_t>(n) * static_cast<size_t>(S), fill) {}

    size_t flat(int v, int s) const {
        return static_cast<size_t>(s) * static_cast<size_t>(n_vertices) + static_cast<size_t>(v);
    }
    int at(int v, int s) const { return labels[flat(v, s)]; }
    int& at(int v, int s) { return labels[flat(v, s)]; }
    size_t size() const { return labels.size(); }
};

// Planted community assignment at a reference slicing, used by generators
// and NMI validation.
struct GroundTruth {
    Partition partition;
    int reference_slices() const { return partition.n_slices; }
};

// Reads "u v t" lines; '#' and '%' start comment lines. Exact duplicate
// events are retained, they only collapse at slicing.
ContactSequence parse_contacts(std::istream& in);
ContactSequence parse_contacts_file(const std::string& path);

// Splits [t_min, t_max] into n_slices equal-width windows; an event at time t
// lands in slice floor(S*(t - t_min)/(t_max - t_min)), clamped to S-1.
// Repeated contacts inside a window collapse to one simple edge.
SliceStack slice(const ContactSequence& cs, int n_slices, double coupling = 1.0);

// splitmix64-style stream splitting, used everywhere a seed is derived.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace tempnet
