#include "nglab/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace nglab {

int max_color(const Coloring& c) {
    int r = 0;
    for (int color : c) r = std::max(r, color);
    return r;
}

void AutomorphismSet::add(std::span<const std::uint8_t> images) {
    if (static_cast<int>(images.size()) != degree_)
        throw std::invalid_argument("permutation length does not match group degree");
    flat_.insert(flat_.end(), images.begin(), images.end());
    ++count_;
}

void AutomorphismSet::add_identity() {
    std::vector<std::uint8_t> id(static_cast<std::size_t>(degree_));
    std::iota(id.begin(), id.end(), std::uint8_t{0});
    add(id);
}

bool AutomorphismSet::is_identity(std::span<const std::uint8_t> p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i) return false;
    return true;
}

namespace {

std::uint64_t bit(int v) {
    return std::uint64_t{1} << v;
}

// Sequential branch and bound: vertices in descending-degree order,
// colors tried ascending, greedy clique as the lower bound and greedy
// first-fit as the initial incumbent.
class ChromaticSolver {
public:
    explicit ChromaticSolver(const Graph& g) : g_(g), n_(g.order()) {
        if (n_ > kMaxChromaticVertices)
            throw guard_error("chromatic search is guarded at n <= 16");
    }

    std::pair<int, Coloring> solve() {
        if (n_ == 0) return {0, {}};
        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return g_.degree(a) > g_.degree(b); });

        VertexSet clique;
        for (int v : order_)
            if ((g_.neighbors(v) & clique) == clique) clique.add(v);
        lower_ = clique.count();

        best_.assign(static_cast<std::size_t>(n_), 0);
        best_count_ = 0;
        for (int v : order_) {
            int c = 1;
            while (true) {
                bool conflict = false;
                for (int w : g_.neighbors(v))
                    if (best_[static_cast<std::size_t>(w)] == c) {
                        conflict = true;
                        break;
                    }
                if (!conflict) break;
                ++c;
            }
            best_[static_cast<std::size_t>(v)] = c;
            best_count_ = std::max(best_count_, c);
        }

        if (best_count_ > lower_) {
            current_.assign(static_cast<std::size_t>(n_), 0);
            color_masks_.assign(static_cast<std::size_t>(n_) + 2, 0);
            dfs(0, 0);
        }
        return {best_count_, best_};
    }

private:
    void dfs(int pos, int used) {
        if (best_count_ == lower_ || used >= best_count_) return;
        if (pos == n_) {
            best_count_ = used;
            best_ = current_;
            return;
        }
        const int v = order_[static_cast<std::size_t>(pos)];
        const std::uint64_t nbrs = g_.neighbors(v).bits;
        const int cap = std::min(used + 1, best_count_ - 1);
        for (int c = 1; c <= cap; ++c) {
            if (color_masks_[static_cast<std::size_t>(c)] & nbrs) continue;
            current_[static_cast<std::size_t>(v)] = c;
            color_masks_[static_cast<std::size_t>(c)] |= bit(v);
            dfs(pos + 1, std::max(used, c));
            color_masks_[static_cast<std::size_t>(c)] &= ~bit(v);
        }
        current_[static_cast<std::size_t>(v)] = 0;
    }

    const Graph& g_;
    int n_;
    int lower_ = 0;
    int best_count_ = 0;
    std::vector<int> order_;
    Coloring best_;
    Coloring current_;
    std::vector<std::uint64_t> color_masks_;
};

class AutomorphismSearch {
public:
    AutomorphismSearch(const Graph& g, VertexSet fixed)
        : g_(g), n_(g.order()), fixed_(fixed & g.vertices()), out_(g.order()) {
        // a vertex whose degree is unique is fixed by every automorphism
        for (int v = 0; v < n_; ++v) {
            int same = 0;
            for (int w = 0; w < n_; ++w)
                if (g_.degree(w) == g_.degree(v)) ++same;
            if (same == 1) fixed_.add(v);
        }
        if (n_ - fixed_.count() > kMaxAutomorphismFreeVertices)
            throw guard_error("automorphism search is guarded at 10 non-fixed vertices");
    }

    AutomorphismSet run() {
        if (n_ == 0) {
            out_.add_identity();
            return std::move(out_);
        }
        for (int v : fixed_) order_.push_back(v);
        for (int v = 0; v < n_; ++v)
            if (!fixed_.contains(v)) order_.push_back(v);
        img_.assign(static_cast<std::size_t>(n_), 0);
        dfs(0);
        return std::move(out_);
    }

private:
    void dfs(int pos) {
        if (pos == n_) {
            out_.add(img_);
            return;
        }
        const int v = order_[static_cast<std::size_t>(pos)];
        if (fixed_.contains(v)) {
            if (consistent(pos, v, v)) {
                img_[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(v);
                dfs(pos + 1);
            }
            return;
        }
        for (int w = 0; w < n_; ++w) {
            if (used_.contains(w) || fixed_.contains(w)) continue;
            if (g_.degree(w) != g_.degree(v)) continue;
            if (!consistent(pos, v, w)) continue;
            img_[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(w);
            used_.add(w);
            dfs(pos + 1);
            used_.remove(w);
        }
    }

    bool consistent(int pos, int v, int w) const {
        for (int i = 0; i < pos; ++i) {
            const int u = order_[static_cast<std::size_t>(i)];
            if (g_.has_edge(v, u) != g_.has_edge(w, img_[static_cast<std::size_t>(u)])) return false;
        }
        return true;
    }

    const Graph& g_;
    int n_;
    VertexSet fixed_;
    VertexSet used_;
    std::vector<int> order_;
    std::vector<std::uint8_t> img_;
    AutomorphismSet out_;
};

// Enumerates colorings in canonical form (colors first used in increasing
// order), which is exhaustive up to color permutation; properness and the
// distinguishing property are both invariant under recoloring, so each
// candidate class is tested once. Only colorings whose maximum color is
// exactly `r` are tested, since smaller maxima were covered at lower r.
class DistinguishingSearch {
public:
    DistinguishingSearch(const Graph& g, const AutomorphismSet& auts, bool proper)
        : g_(g), auts_(auts), n_(g.order()), proper_(proper) {
        if (n_ > kMaxDistinguishingVertices)
            throw guard_error("distinguishing search is guarded at n <= 12");
        if (auts.degree() != n_)
            throw std::invalid_argument("automorphism group degree does not match graph order");
    }

    bool exists(int r) {
        r_ = r;
        coloring_.assign(static_cast<std::size_t>(n_), 0);
        color_masks_.assign(static_cast<std::size_t>(r_) + 1, 0);
        return dfs(0, 0);
    }

private:
    bool dfs(int pos, int used) {
        if (pos == n_) return used == r_ && is_distinguishing(g_, coloring_, auts_);
        // not enough vertices left to reach color r
        if (r_ - used > n_ - pos) return false;
        const std::uint64_t nbrs = g_.neighbors(pos).bits;
        const int cap = std::min(used + 1, r_);
        for (int c = 1; c <= cap; ++c) {
            if (proper_ && (color_masks_[static_cast<std::size_t>(c)] & nbrs)) continue;
            coloring_[static_cast<std::size_t>(pos)] = c;
            color_masks_[static_cast<std::size_t>(c)] |= bit(pos);
            if (dfs(pos + 1, std::max(used, c))) return true;
            color_masks_[static_cast<std::size_t>(c)] &= ~bit(pos);
        }
        coloring_[static_cast<std::size_t>(pos)] = 0;
        return false;
    }

    const Graph& g_;
    const AutomorphismSet& auts_;
    int n_;
    bool proper_;
    int r_ = 0;
    Coloring coloring_;
    std::vector<std::uint64_t> color_masks_;
};

bool group_is_trivial(const AutomorphismSet& auts) {
    for (std::size_t i = 0; i < auts.size(); ++i)
        if (!AutomorphismSet::is_identity(auts.perm(i))) return false;
    return true;
}

}  // namespace

int chromatic_number(const Graph& g) {
    return ChromaticSolver(g).solve().first;
}

Coloring optimal_coloring(const Graph& g) {
    return ChromaticSolver(g).solve().second;
}

AutomorphismSet automorphisms(const Graph& g) {
    return AutomorphismSearch(g, VertexSet()).run();
}

AutomorphismSet restricted_automorphisms(const Graph& g, VertexSet fixed) {
    if (!fixed.subset_of(g.vertices())) throw std::out_of_range("fixed set not contained in graph");
    return AutomorphismSearch(g, fixed).run();
}

AutomorphismSet restrict_to(const AutomorphismSet& auts, VertexSet keep) {
    std::vector<int> rank(64, -1);
    int next = 0;
    for (int v : keep) rank[static_cast<std::size_t>(v)] = next++;

    AutomorphismSet out(next);
    std::vector<std::uint8_t> local(static_cast<std::size_t>(next));
    for (std::size_t i = 0; i < auts.size(); ++i) {
        const auto p = auts.perm(i);
        for (int v : keep) {
            const int image = p[static_cast<std::size_t>(v)];
            if (!keep.contains(image))
                throw std::invalid_argument("group element does not stabilize the vertex set");
            local[static_cast<std::size_t>(rank[static_cast<std::size_t>(v)])] =
                static_cast<std::uint8_t>(rank[static_cast<std::size_t>(image)]);
        }
        out.add(local);
    }
    return out;
}

bool is_distinguishing(const Graph& g, const Coloring& c, const AutomorphismSet& auts) {
    const int n = g.order();
    if (static_cast<int>(c.size()) != n || auts.degree() != n)
        throw std::invalid_argument("coloring or group does not match graph order");
    for (std::size_t i = 0; i < auts.size(); ++i) {
        const auto p = auts.perm(i);
        bool moved_color = false;
        bool identity = true;
        for (int v = 0; v < n; ++v) {
            const int w = p[static_cast<std::size_t>(v)];
            if (w != v) identity = false;
            if (c[static_cast<std::size_t>(w)] != c[static_cast<std::size_t>(v)]) {
                moved_color = true;
                break;
            }
        }
        if (!moved_color && !identity) return false;
    }
    return true;
}

int distinguishing_number(const Graph& g, const AutomorphismSet& auts) {
    const int n = g.order();
    if (n == 0) return 0;
    if (group_is_trivial(auts)) return 1;
    DistinguishingSearch search(g, auts, /*proper=*/false);
    for (int r = 1; r <= n; ++r)
        if (search.exists(r)) return r;
    return n;  // unreachable: the all-distinct coloring is distinguishing
}

int distinguishing_chromatic_number(const Graph& g, const AutomorphismSet& auts) {
    const int n = g.order();
    if (n == 0) return 0;
    DistinguishingSearch search(g, auts, /*proper=*/true);
    for (int r = chromatic_number(g); r <= n; ++r)
        if (search.exists(r)) return r;
    return n;  // unreachable: the all-distinct coloring is proper and distinguishing
}

bool is_color_critical(const Graph& g, int v) {
    return chromatic_number(remove_vertex(g, v)) < chromatic_number(g);
}

}  // namespace nglab
