#include "frc/oracle.hpp"

#include <algorithm>

namespace frc {

StaticComplex StaticComplex::from_filtration(const Filtration& filt, double cutoff) {
    StaticComplex cx(filt.node_count, filt.max_dim);
    for (const Simplex& f : filt.faces) {
        if (f.weight > cutoff) break;  // sorted stream
        cx.add_face(f.nodes);
    }
    return cx;
}

void StaticComplex::add_face(std::span<const NodeId> nodes) {
    const int d = static_cast<int>(nodes.size()) - 1;
    if (d < 0 || d > max_dim()) throw InputError("face dimension outside the complex's range");
    FaceKey key(nodes.begin(), nodes.end());
    if (!std::is_sorted(key.begin(), key.end())) throw InputError("face nodes must be ascending");
    if (members_[static_cast<std::size_t>(d)].insert(key).second)
        faces_[static_cast<std::size_t>(d)].push_back(std::move(key));
    adjacency_.clear();
}

void StaticComplex::build_adjacency() const {
    adjacency_.assign(static_cast<std::size_t>(node_count_), {});
    if (max_dim() < 1) return;
    for (const FaceKey& e : faces_[1]) {
        adjacency_[e[0]].push_back(e[1]);
        adjacency_[e[1]].push_back(e[0]);
    }
    for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

std::vector<NodeId> StaticComplex::common_neighbours(std::span<const NodeId> gamma) const {
    if (adjacency_.empty()) build_adjacency();
    std::vector<NodeId> acc(adjacency_[gamma[0]]);
    std::vector<NodeId> next;
    for (std::size_t i = 1; i < gamma.size(); ++i) {
        next.clear();
        const auto& a = adjacency_[gamma[i]];
        std::set_intersection(acc.begin(), acc.end(), a.begin(), a.end(), std::back_inserter(next));
        acc.swap(next);
    }
    return acc;
}

namespace {

// Number of shared nodes of two ascending node lists.
std::size_t shared_count(const FaceKey& a, const FaceKey& b) {
    std::size_t i = 0, j = 0, n = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (b[j] < a[i])
            ++j;
        else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

FaceKey merged(const FaceKey& a, const FaceKey& b) {
    FaceKey u;
    u.reserve(a.size() + 1);
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
}

bool contains_subset(const FaceKey& big, const FaceKey& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

NeighbourClassification classify_neighbours(const StaticComplex& cx, std::span<const NodeId> alpha) {
    if (!cx.contains(alpha)) throw InputError("face is not part of the complex");
    const int d = static_cast<int>(alpha.size()) - 1;
    const FaceKey a(alpha.begin(), alpha.end());

    NeighbourClassification out;
    for (const FaceKey& b : cx.faces(d)) {
        if (b == a) continue;
        if (shared_count(a, b) != static_cast<std::size_t>(d)) continue;
        // The union is the only candidate common (d+1)-face of the pair.
        if (cx.contains(merged(a, b)))
            out.transverse.push_back(b);
        else
            out.parallel.push_back(b);
    }
    for (const FaceKey& h : cx.faces(d + 1))
        if (contains_subset(h, a)) out.higher.push_back(h);
    return out;
}

std::int64_t frc_definition(const StaticComplex& cx, std::span<const NodeId> alpha) {
    const int d = static_cast<int>(alpha.size()) - 1;
    if (d < 1) throw InputError("curvature is defined for faces of dimension >= 1");
    const NeighbourClassification nc = classify_neighbours(cx, alpha);
    return static_cast<std::int64_t>(nc.higher.size()) + (d + 1) -
           static_cast<std::int64_t>(nc.parallel.size());
}

Rational global_frc(const StaticComplex& cx, int d) {
    const auto& faces = cx.faces(d);
    if (faces.empty()) return Rational::zero();
    std::int64_t sum = 0;
    for (const FaceKey& f : faces) sum += frc_definition(cx, f);
    return Rational(sum, static_cast<std::int64_t>(faces.size()));
}

Rational local_frc(const StaticComplex& cx, NodeId x, int d) {
    if (x >= static_cast<NodeId>(cx.node_count())) throw InputError("node id out of range");
    const auto& faces = cx.faces(d);
    if (faces.empty()) return Rational::zero();
    std::int64_t sum = 0;
    for (const FaceKey& f : faces)
        if (std::binary_search(f.begin(), f.end(), x)) sum += frc_definition(cx, f);
    return Rational(sum, (d + 1) * static_cast<std::int64_t>(faces.size()));
}

OracleSnapshot oracle_snapshot(const StaticComplex& cx, int d) {
    OracleSnapshot snap;
    snap.node_sum.assign(static_cast<std::size_t>(cx.node_count()), 0);
    for (const FaceKey& f : cx.faces(d)) {
        const std::int64_t frc = frc_definition(cx, f);
        ++snap.face_count;
        snap.global_sum += frc;
        for (NodeId x : f) snap.node_sum[x] += frc;
    }
    return snap;
}

}  // namespace frc
