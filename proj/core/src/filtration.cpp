#include "frc/filtration.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <thread>

namespace frc {

int resolve_enumeration_threads(int requested) {
    int t = requested;
    if (t <= 0) {
        if (const char* env = std::getenv("FRC_THREADS")) {
            t = std::atoi(env);
        }
    }
    if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
    return std::max(1, t);
}

namespace {

// Expands cliques rooted at `root` by common neighbours with higher node id.
// adj[u] holds the neighbours v > u with dist(u, v) <= max_dist, ascending.
// Cost is proportional to the number of emitted faces times clique size.
void expand_root(NodeId root, const DistanceMatrix& dist, const std::vector<std::vector<NodeId>>& adj,
                 std::size_t max_nodes, std::vector<Simplex>& out) {
    struct Frame {
        std::vector<NodeId> candidates;
        std::size_t next = 0;
    };

    std::vector<NodeId> clique{root};
    double clique_weight = 0.0;
    out.push_back({clique, 0.0});
    if (max_nodes == 1) return;

    std::vector<Frame> stack;
    std::vector<double> weights{0.0};
    stack.push_back({adj[root], 0});

    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next >= top.candidates.size()) {
            stack.pop_back();
            clique.pop_back();
            weights.pop_back();
            if (!weights.empty()) clique_weight = weights.back();
            continue;
        }
        const NodeId c = top.candidates[top.next++];

        double w = clique_weight;
        for (NodeId x : clique) w = std::max(w, dist.at(x, c));

        clique.push_back(c);
        out.push_back({clique, w});

        if (clique.size() < max_nodes) {
            // Survivors: candidates after c that are also neighbours of c.
            Frame next;
            const std::vector<NodeId>& cn = adj[c];
            std::set_intersection(top.candidates.begin() + static_cast<std::ptrdiff_t>(top.next),
                                  top.candidates.end(), cn.begin(), cn.end(),
                                  std::back_inserter(next.candidates));
            clique_weight = w;
            weights.push_back(w);
            stack.push_back(std::move(next));
        } else {
            clique.pop_back();
        }
    }
}

}  // namespace

Filtration enumerate_vr_filtration(const DistanceMatrix& dist, int d_max, double max_dist,
                                   int threads) {
    if (d_max < 1) throw InputError("d_max must be >= 1");
    if (std::isnan(max_dist) || max_dist < 0.0)
        throw InputError("max_dist must be a non-negative number");

    const std::int64_t m = dist.size();
    const std::size_t max_nodes = static_cast<std::size_t>(d_max) + 2;

    std::vector<std::vector<NodeId>> adj(static_cast<std::size_t>(m));
    for (std::int64_t u = 0; u < m; ++u)
        for (std::int64_t v = u + 1; v < m; ++v)
            if (dist.at(u, v) <= max_dist) adj[static_cast<std::size_t>(u)].push_back(static_cast<NodeId>(v));

    const int workers = std::min<int>(resolve_enumeration_threads(threads), static_cast<int>(m));
    std::vector<std::vector<Simplex>> chunks(static_cast<std::size_t>(workers));

    if (workers == 1) {
        for (std::int64_t u = 0; u < m; ++u)
            expand_root(static_cast<NodeId>(u), dist, adj, max_nodes, chunks[0]);
    } else {
        std::vector<std::future<void>> tasks;
        for (int w = 0; w < workers; ++w) {
            tasks.push_back(std::async(std::launch::async, [&, w] {
                for (std::int64_t u = w; u < m; u += workers)
                    expand_root(static_cast<NodeId>(u), dist, adj, max_nodes, chunks[static_cast<std::size_t>(w)]);
            }));
        }
        for (auto& t : tasks) t.get();
    }

    Filtration filt;
    filt.max_dim = d_max + 1;
    filt.max_dist = max_dist;
    filt.node_count = m;
    std::size_t total = 0;
    for (const auto& c : chunks) total += c.size();
    filt.faces.reserve(total);
    for (auto& c : chunks)
        filt.faces.insert(filt.faces.end(), std::make_move_iterator(c.begin()),
                          std::make_move_iterator(c.end()));

    std::sort(filt.faces.begin(), filt.faces.end(), face_less);
    return filt;
}

}  // namespace frc
