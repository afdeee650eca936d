#ifndef TCN_GRAPH_HPP
#define TCN_GRAPH_HPP

// Residue graphs over square-free integers, partition parity, and the
// F_2 Laplace matrix.
//
// A partition {V1, V2} is encoded by the indicator of V1. It is even iff
// L * 1_{V1} = 0 over F_2: for v in V1, #{v -> V2} = d_v - (A 1_{V1})_v,
// and for v in V2, #{v -> V1} = (A 1_{V1})_v, which is (L 1_{V1})_v since
// the diagonal term vanishes off V1.

#include <bit>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "tcn/arith.hpp"
#include "tcn/gf2.hpp"

namespace tcn {

class EmptyVertexSet : public std::invalid_argument {
public:
    EmptyVertexSet() : std::invalid_argument("residue graph would have no vertices") {}
};

class BadInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class TooManyVertices : public std::invalid_argument {
public:
    TooManyVertices() : std::invalid_argument("exhaustive partition sweep is capped at 20 vertices") {}
};

/// Either the sign vertex -1 or a prime.
class VertexLabel {
public:
    static VertexLabel minus_one() { return VertexLabel(-1); }
    static VertexLabel prime(u64 p) { return VertexLabel(static_cast<i64>(p)); }

    bool is_minus_one() const noexcept { return value_ == -1; }
    /// -1 or the prime itself.
    i64 value() const noexcept { return value_; }
    SquareClass as_class() const { return is_minus_one() ? SquareClass::minus_one() : SquareClass(false, {static_cast<u64>(value_)}); }
    std::string to_string() const { return std::to_string(value_); }

    friend bool operator==(const VertexLabel&, const VertexLabel&) = default;

private:
    explicit VertexLabel(i64 v) : value_(v) {}
    i64 value_;
};

enum class GraphSource { Unified, GotoG, GotoSmall };

struct GraphDescriptor {
    GraphSource source;
    i64 parameter;  // m for Unified, n for the Goto graphs
    std::string to_string() const {
        switch (source) {
            case GraphSource::Unified: return "G(" + std::to_string(parameter) + ")";
            case GraphSource::GotoG: return "G_goto(" + std::to_string(-3 * parameter) + ")";
            case GraphSource::GotoSmall: return "g(" + std::to_string(parameter) + ")";
        }
        return {};
    }
};

class ResidueGraph {
public:
    ResidueGraph(std::vector<VertexLabel> labels, MatrixF2 adj, GraphDescriptor source)
        : labels_(std::move(labels)), adj_(std::move(adj)), source_(source) {
        if (adj_.rows() != labels_.size() || adj_.cols() != labels_.size())
            throw std::invalid_argument("ResidueGraph: adjacency size mismatch");
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (adj_.get(i, i)) throw std::invalid_argument("ResidueGraph: self-loop");
    }

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<VertexLabel>& labels() const noexcept { return labels_; }
    const MatrixF2& adjacency() const noexcept { return adj_; }
    const GraphDescriptor& source() const noexcept { return source_; }
    bool has_arc(std::size_t i, std::size_t j) const { return adj_.get(i, j); }
    BitVec all_mask() const { return size() == 64 ? ~BitVec{0} : (BitVec{1} << size()) - 1; }

    /// Index of the vertex with the given label value, or -1.
    int index_of(i64 label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i].value() == label) return static_cast<int>(i);
        return -1;
    }

    /// Mask of the vertices whose labels appear in `values`; unknown labels are ignored.
    BitVec mask_of(const std::vector<i64>& values) const {
        BitVec m = 0;
        for (i64 v : values) {
            const int i = index_of(v);
            if (i >= 0) m |= BitVec{1} << i;
        }
        return m;
    }

    /// L = D - A over F_2.
    MatrixF2 laplacian() const {
        MatrixF2 l = adj_;
        for (std::size_t i = 0; i < size(); ++i)
            if (std::popcount(adj_.row(i)) & 1) l.set(i, i, true);
        return l;
    }

    std::vector<std::pair<std::size_t, std::size_t>> arcs() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j)
                if (adj_.get(i, j)) out.emplace_back(i, j);
        return out;
    }

    /// Square class d(S) = product of the labels in S.
    SquareClass product(BitVec mask) const {
        SquareClass d;
        for (std::size_t i = 0; i < size(); ++i)
            if (mask >> i & 1U) d = d * labels_[i].as_class();
        return d;
    }

private:
    std::vector<VertexLabel> labels_;
    MatrixF2 adj_;
    GraphDescriptor source_;
};

namespace detail {

inline std::vector<VertexLabel> labels_for(bool with_minus_one, bool with_three, const std::vector<u64>& primes) {
    std::vector<VertexLabel> v;
    if (with_minus_one) v.push_back(VertexLabel::minus_one());
    if (with_three) v.push_back(VertexLabel::prime(3));
    for (u64 p : primes) v.push_back(VertexLabel::prime(p));
    return v;
}

template <class SourceRule>
MatrixF2 residue_arcs(const std::vector<VertexLabel>& v, SourceRule qualifies) {
    MatrixF2 adj(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_minus_one() || !qualifies(static_cast<u64>(v[i].value()))) continue;
        const u64 p = static_cast<u64>(v[i].value());
        for (std::size_t j = 0; j < v.size(); ++j)
            if (j != i && legendre(v[j].value(), p) == -1) adj.set(i, j, true);
    }
    return adj;
}

inline std::vector<u64> coprime6_primes(u64 n, const char* what) {
    if (n < 5 || n % 2 == 0 || n % 3 == 0) throw BadInput(std::string(what) + ": need gcd(n,6)=1 and n >= 5");
    try {
        return factor_square_free(n);
    } catch (const NotSquareFree&) {
        throw BadInput(std::string(what) + ": n must be square-free");
    }
}

}  // namespace detail

/// G(m): vertices are the primes of |m| (ascending) plus -1 first when m<0;
/// arc p -> v for every vertex p = 1 (mod 3) and v != p with (v/p) = -1.
inline ResidueGraph build_unified(const SquareClass& m) {
    if (m.is_identity()) throw EmptyVertexSet();
    if (m.support().size() + (m.negative() ? 1 : 0) > MatrixF2::kMaxDim) throw TooManyVertices();
    auto labels = detail::labels_for(m.negative(), false, m.support());
    auto adj = detail::residue_arcs(labels, [](u64 p) { return p % 3 == 1; });
    return {std::move(labels), std::move(adj), {GraphSource::Unified, m.representative()}};
}

inline ResidueGraph build_unified(i64 m) { return build_unified(SquareClass::of(m)); }

/// Goto's G(-3n): vertices {-1, 3, p_1..p_t}, arcs out of every p_i.
inline ResidueGraph build_goto_G(u64 n) {
    const auto primes = detail::coprime6_primes(n, "build_goto_G");
    auto labels = detail::labels_for(true, true, primes);
    auto adj = detail::residue_arcs(labels, [](u64 p) { return p >= 5; });
    return {std::move(labels), std::move(adj), {GraphSource::GotoG, static_cast<i64>(n)}};
}

/// Goto's g(n): vertices {-1, p_1..p_t}; p_i -> p_j iff (p_j/p_i) = -1;
/// both arcs p_i <-> -1 iff (-1/p_i) = -1.
inline ResidueGraph build_goto_g(u64 n) {
    const auto primes = detail::coprime6_primes(n, "build_goto_g");
    auto labels = detail::labels_for(true, false, primes);
    MatrixF2 adj(labels.size(), labels.size());
    for (std::size_t i = 1; i < labels.size(); ++i) {
        const u64 p = static_cast<u64>(labels[i].value());
        if (legendre(-1, p) == -1) {
            adj.set(i, 0, true);
            adj.set(0, i, true);
        }
        for (std::size_t j = 1; j < labels.size(); ++j)
            if (j != i && legendre(labels[j].value(), p) == -1) adj.set(i, j, true);
    }
    return {std::move(labels), std::move(adj), {GraphSource::GotoSmall, static_cast<i64>(n)}};
}

/// An unordered partition {V1, V2}, stored by V1 with vertex 0 always in V2.
class Partition {
public:
    /// Canonicalizes an arbitrary side mask over `vertices` vertices.
    static Partition from_side(BitVec side, std::size_t vertices) {
        const BitVec all = vertices == 64 ? ~BitVec{0} : (BitVec{1} << vertices) - 1;
        side &= all;
        if (side & 1U) side = all & ~side;
        return Partition(side, vertices);
    }
    static Partition trivial(std::size_t vertices) { return Partition(0, vertices); }

    BitVec side1() const noexcept { return side1_; }
    BitVec side2() const noexcept { return all() & ~side1_; }
    std::size_t vertices() const noexcept { return vertices_; }
    bool is_trivial() const noexcept { return side1_ == 0; }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    Partition(BitVec s, std::size_t m) : side1_(s), vertices_(m) {}
    BitVec all() const { return vertices_ == 64 ? ~BitVec{0} : (BitVec{1} << vertices_) - 1; }
    BitVec side1_;
    std::size_t vertices_;
};

inline Partition partition_delta(const Partition& a, const Partition& b) {
    if (a.vertices() != b.vertices()) throw std::invalid_argument("partition_delta: vertex sets differ");
    return Partition::from_side(a.side1() ^ b.side1(), a.vertices());
}

/// Odd iff some vertex sends an odd number of arcs to the other side.
inline bool is_odd_partition(const ResidueGraph& g, const Partition& pi) {
    if (pi.vertices() != g.size()) throw std::invalid_argument("is_odd_partition: partition is over a different vertex set");
    const BitVec s1 = pi.side1(), s2 = pi.side2();
    for (std::size_t i = 0; i < g.size(); ++i) {
        const BitVec other = (s1 >> i & 1U) ? s2 : s1;
        if (std::popcount(g.adjacency().row(i) & other) & 1) return true;
    }
    return false;
}

/// Closed form 2^(m - rank L - 1). The empty graph has one (trivial) partition.
inline u64 even_partition_count(const ResidueGraph& g) {
    if (g.size() == 0) return 1;
    const std::size_t l = rank_f2(g.laplacian());
    return u64{1} << (g.size() - l - 1);
}

/// Exhaustive count over all 2^(m-1) partitions.
inline u64 even_partition_count_exhaustive(const ResidueGraph& g) {
    if (g.size() > 20) throw TooManyVertices();
    if (g.size() == 0) return 1;
    u64 count = 0;
    for (BitVec s = 0; s < (BitVec{1} << g.size()); s += 2) {
        if (!is_odd_partition(g, Partition::from_side(s, g.size()))) ++count;
    }
    return count;
}

inline bool is_odd_graph(const ResidueGraph& g) {
    if (g.size() == 0) return true;
    return rank_f2(g.laplacian()) == g.size() - 1;
}

inline bool is_odd_graph_exhaustive(const ResidueGraph& g) { return even_partition_count_exhaustive(g) == 1; }

/// One side of a partition as seen by a constraint filter.
struct SideView {
    const ResidueGraph* graph;
    BitVec mask;
    SquareClass d;  // d(side): product of labels, -1 contributes the sign

    bool empty() const noexcept { return mask == 0; }
    /// True iff every vertex of this side carries one of `labels`.
    bool within(const std::vector<i64>& labels) const { return (mask & ~graph->mask_of(labels)) == 0; }
    bool contains(i64 label) const {
        const int i = graph->index_of(label);
        return i >= 0 && (mask >> i & 1U);
    }
};

using PartitionFilter = std::function<bool(const SideView& side, const SideView& other)>;

/// True iff every nontrivial partition that (a) has a side S with
/// filter(S, complement) and (b) has no side whose label set equals an
/// exception is odd.
inline bool check_constrained_oddness(const ResidueGraph& g, const PartitionFilter& filter,
                                      const std::vector<std::vector<i64>>& exceptions = {}) {
    if (g.size() > 20) throw TooManyVertices();
    const std::size_t m = g.size();
    if (m < 2) return true;
    std::vector<BitVec> excluded;
    for (const auto& e : exceptions) {
        const BitVec mask = g.mask_of(e);
        if (std::popcount(mask) == static_cast<int>(e.size())) excluded.push_back(mask);
    }
    for (BitVec s = 2; s < (BitVec{1} << m); s += 2) {
        const Partition pi = Partition::from_side(s, m);
        const BitVec a = pi.side1(), b = pi.side2();
        bool skip = false;
        for (BitVec e : excluded) skip = skip || e == a || e == b;
        if (skip) continue;
        const SideView va{&g, a, g.product(a)};
        const SideView vb{&g, b, g.product(b)};
        if (!filter(va, vb) && !filter(vb, va)) continue;
        if (!is_odd_partition(g, pi)) return false;
    }
    return true;
}

inline std::string to_dot(const ResidueGraph& g) {
    std::ostringstream os;
    os << "digraph \"" << g.source().to_string() << "\" {\n";
    for (std::size_t i = 0; i < g.size(); ++i) os << "  v" << i << " [label=\"" << g.labels()[i].to_string() << "\"];\n";
    for (const auto& [i, j] : g.arcs()) os << "  v" << i << " -> v" << j << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace tcn

#endif
