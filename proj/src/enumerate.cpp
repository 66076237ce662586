#include "nglab/enumerate.hpp"

#include <array>
#include <map>
#include <utility>

namespace nglab {

namespace {

void check_enumeration_order(int n) {
    if (n < 0 || n > kMaxEnumerationVertices)
        throw guard_error("graph enumeration is guarded at n <= 8");
}

// Lexicographic minimization of the edge-bit sequence over all
// relabelings. Assigning positions in ascending order fixes the key
// prefix C(k,2) bits at a time, so branches whose prefix already
// exceeds the incumbent are cut.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g)
        : g_(g), n_(g.order()), total_bits_(n_ * (n_ - 1) / 2) {}

    std::pair<std::uint64_t, std::array<int, 8>> run() {
        std::array<int, 8> perm{};
        dfs(0, 0, 0, perm);
        return {best_, best_perm_};
    }

private:
    void dfs(int pos, std::uint64_t prefix, int bits, std::array<int, 8>& perm) {
        if (have_best_ && prefix > (best_ >> (total_bits_ - bits))) return;
        if (pos == n_) {
            if (!have_best_ || prefix < best_) {
                best_ = prefix;
                best_perm_ = perm;
                have_best_ = true;
            }
            return;
        }
        for (int cand = 0; cand < n_; ++cand) {
            if (used_.contains(cand)) continue;
            std::uint64_t extended = prefix;
            for (int i = 0; i < pos; ++i)
                extended = (extended << 1) | (g_.has_edge(perm[i], cand) ? 1 : 0);
            perm[pos] = cand;
            used_.add(cand);
            dfs(pos + 1, extended, bits + pos, perm);
            used_.remove(cand);
        }
    }

    const Graph& g_;
    int n_;
    int total_bits_;
    VertexSet used_;
    std::uint64_t best_ = 0;
    std::array<int, 8> best_perm_{};
    bool have_best_ = false;
};

std::pair<std::uint64_t, Graph> canonicalize(const Graph& g) {
    check_enumeration_order(g.order());
    const int n = g.order();
    auto [key, perm] = CanonicalSearch(g).run();
    Graph canon(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(perm[i], perm[j])) canon.add_edge(i, j);
    return {key, canon};
}

}  // namespace

int edge_pair_index(int u, int v) {
    if (u == v) throw std::invalid_argument("edge requires distinct endpoints");
    if (u > v) std::swap(u, v);
    return v * (v - 1) / 2 + u;
}

std::uint64_t labeled_graph_count(int n) {
    check_enumeration_order(n);
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    check_enumeration_order(n);
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if ((mask >> edge_pair_index(u, v)) & 1) g.add_edge(u, v);
    return g;
}

std::uint64_t edge_mask(const Graph& g) {
    const int n = g.order();
    if (n > kMaxEnumerationVertices) throw guard_error("edge masks are guarded at n <= 8");
    std::uint64_t mask = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (g.has_edge(u, v)) mask |= std::uint64_t{1} << edge_pair_index(u, v);
    return mask;
}

std::uint64_t canonical_key(const Graph& g) {
    return canonicalize(g).first;
}

Graph canonical_form(const Graph& g) {
    return canonicalize(g).second;
}

std::vector<Graph> nonisomorphic_graphs(int n) {
    check_enumeration_order(n);
    std::vector<Graph> reps = {Graph(0)};
    for (int k = 1; k <= n; ++k) {
        std::map<std::uint64_t, Graph> classes;
        for (const Graph& rep : reps) {
            const std::uint64_t attachments = std::uint64_t{1} << (k - 1);
            for (std::uint64_t att = 0; att < attachments; ++att) {
                Graph extended(k);
                for (int u = 0; u < k - 1; ++u)
                    for (int v = u + 1; v < k - 1; ++v)
                        if (rep.has_edge(u, v)) extended.add_edge(u, v);
                for (int u : VertexSet(att)) extended.add_edge(u, k - 1);
                auto [key, canon] = canonicalize(extended);
                classes.emplace(key, std::move(canon));
            }
        }
        reps.clear();
        reps.reserve(classes.size());
        for (auto& [key, canon] : classes) reps.push_back(std::move(canon));
    }
    return reps;
}

void enumerate_graphs(int n, bool dedup, const std::function<void(const Graph&)>& f) {
    if (dedup) {
        for (const Graph& g : nonisomorphic_graphs(n)) f(g);
    } else {
        for_each_labeled_graph(n, [&](const Graph& g) { f(g); });
    }
}

}  // namespace nglab
