#include "lrca/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lrca {

void RecoveringGraph::validate() const {
    if (sets.size() != n) throw std::invalid_argument("one set list per vertex required");
    for (std::size_t i = 1; i < caps.size(); ++i)
        if (caps[i - 1] > caps[i]) throw std::invalid_argument("caps must ascend");
    for (int c : caps)
        if (c < 1) throw std::invalid_argument("caps must be >= 1");
    for (std::size_t v = 0; v < n; ++v) {
        if (sets[v].size() != caps.size())
            throw std::invalid_argument("every vertex needs t recovering sets");
        std::set<std::size_t> seen;
        for (std::size_t j = 0; j < sets[v].size(); ++j) {
            const auto& R = sets[v][j];
            if (R.empty()) throw std::invalid_argument("recovering sets must be nonempty");
            if ((int)R.size() > caps[j])
                throw std::invalid_argument("recovering set exceeds its cap");
            for (std::size_t u : R) {
                if (u >= n) throw std::invalid_argument("recovering set member out of range");
                if (u == v) throw std::invalid_argument("recovering set contains its own vertex");
                if (!seen.insert(u).second)
                    throw std::invalid_argument("recovering sets of one vertex must be disjoint");
            }
        }
    }
}

RecoveringGraph make_recovering_graph(std::size_t n, std::vector<int> caps,
                                      std::vector<std::vector<std::vector<std::size_t>>> sets) {
    RecoveringGraph g;
    g.n = n;
    g.caps = std::move(caps);
    g.sets = std::move(sets);
    for (auto& per_vertex : g.sets)
        for (auto& R : per_vertex) std::sort(R.begin(), R.end());
    g.validate();
    return g;
}

RecoveringGraph recovering_graph(const EvaluationCode& code) {
    // order colors by block size so the caps ascend
    std::vector<std::size_t> order(code.families.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return code.families[a].partition.max_block_size() <
               code.families[b].partition.max_block_size();
    });

    RecoveringGraph g;
    g.n = (std::size_t)code.n();
    for (std::size_t idx : order)
        g.caps.push_back((int)code.families[idx].partition.max_block_size() - 1);

    std::vector<std::size_t> point_index(code.field->size());
    for (std::size_t i = 0; i < code.points.size(); ++i) point_index[code.points[i]] = i;

    g.sets.resize(g.n);
    for (std::size_t v = 0; v < g.n; ++v) {
        for (std::size_t idx : order) {
            const auto& part = code.families[idx].partition;
            const auto& block = part.blocks[part.block_index_of(code.points[v])];
            std::vector<std::size_t> R;
            for (Elem e : block)
                if (e != code.points[v]) R.push_back(point_index[e]);
            std::sort(R.begin(), R.end());
            g.sets[v].push_back(std::move(R));
        }
    }
    g.validate();
    return g;
}

namespace {

std::vector<char> closure_mask(const RecoveringGraph& g, const std::vector<std::size_t>& S) {
    std::vector<char> colored(g.n, 0);
    for (std::size_t v : S) {
        if (v >= g.n) throw std::out_of_range("vertex out of range");
        colored[v] = 1;
    }
    // rounds of coloring; the fixed point does not depend on the round order
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < g.n; ++v) {
            if (colored[v]) continue;
            for (const auto& R : g.sets[v]) {
                bool full = true;
                for (std::size_t u : R)
                    if (!colored[u]) {
                        full = false;
                        break;
                    }
                if (full) {
                    colored[v] = 1;
                    changed = true;
                    break;
                }
            }
        }
    }
    return colored;
}

} // namespace

std::vector<std::size_t> closure(const RecoveringGraph& g, const std::vector<std::size_t>& S) {
    auto colored = closure_mask(g, S);
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < g.n; ++v)
        if (colored[v]) out.push_back(v);
    return out;
}

Rational expansion_ratio(const RecoveringGraph& g, const std::vector<std::size_t>& S) {
    if (S.empty()) throw std::invalid_argument("expansion ratio needs a nonempty set");
    std::set<std::size_t> uniq(S.begin(), S.end());
    return Rational((long long)closure(g, S).size(), (long long)uniq.size());
}

namespace {

// Working view for the expanding-set recursion: per-vertex lists of surviving
// recovering sets tagged with their color cap. Sets are dropped whole - never
// shrunk - so any closure reached here is also a closure in the original graph.
struct GraphView {
    std::vector<char> active;
    std::vector<std::vector<std::pair<int, std::vector<std::size_t>>>> sets;
};

GraphView view_of(const RecoveringGraph& g) {
    GraphView w;
    w.active.assign(g.n, 1);
    w.sets.resize(g.n);
    for (std::size_t v = 0; v < g.n; ++v)
        for (std::size_t j = 0; j < g.sets[v].size(); ++j)
            w.sets[v].emplace_back(g.caps[j], g.sets[v][j]);
    return w;
}

bool set_usable(const GraphView& w, const std::vector<std::size_t>& R) {
    for (std::size_t u : R)
        if (!w.active[u]) return false;
    return true;
}

std::vector<char> view_closure(const GraphView& w, const std::vector<std::size_t>& S) {
    std::vector<char> colored(w.active.size(), 0);
    for (std::size_t v : S) colored[v] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < w.active.size(); ++v) {
            if (!w.active[v] || colored[v]) continue;
            for (const auto& [cap, R] : w.sets[v]) {
                bool full = !R.empty();
                for (std::size_t u : R)
                    if (!w.active[u] || !colored[u]) {
                        full = false;
                        break;
                    }
                if (full) {
                    colored[v] = 1;
                    changed = true;
                    break;
                }
            }
        }
    }
    return colored;
}

// Index of v's smallest usable recovering set, preferring small caps first.
int smallest_set_index(const GraphView& w, std::size_t v) {
    int best = -1;
    for (std::size_t j = 0; j < w.sets[v].size(); ++j) {
        if (!set_usable(w, w.sets[v][j].second)) continue;
        if (best < 0) {
            best = (int)j;
            continue;
        }
        const auto& [cb, rb] = w.sets[v][(std::size_t)best];
        const auto& [cj, rj] = w.sets[v][j];
        if (cj < cb || (cj == cb && rj.size() < rb.size())) best = (int)j;
    }
    return best;
}

std::vector<std::size_t> expand_rec(const GraphView& w, std::size_t v) {
    int pick = smallest_set_index(w, v);
    if (pick < 0) return {v}; // no usable set left: t = 0 base case

    std::vector<std::size_t> members = w.sets[v][(std::size_t)pick].second;

    // remove v; every other vertex loses the sets through v, or its smallest
    // set when none pass through v
    GraphView pruned = w;
    pruned.active[v] = 0;
    for (std::size_t u = 0; u < pruned.active.size(); ++u) {
        if (!pruned.active[u]) continue;
        auto& list = pruned.sets[u];
        std::vector<std::pair<int, std::vector<std::size_t>>> kept;
        bool removed_any = false;
        for (auto& entry : list) {
            if (std::binary_search(entry.second.begin(), entry.second.end(), v))
                removed_any = true;
            else
                kept.push_back(std::move(entry));
        }
        list = std::move(kept);
        if (!removed_any && !list.empty()) {
            // smallest among u's remaining sets, by (cap, size)
            std::size_t best = 0;
            for (std::size_t j = 1; j < list.size(); ++j) {
                if (list[j].first < list[best].first ||
                    (list[j].first == list[best].first &&
                     list[j].second.size() < list[best].second.size()))
                    best = j;
            }
            list.erase(list.begin() + (std::ptrdiff_t)best);
        }
    }

    std::vector<std::size_t> S;
    std::vector<char> swallowed(pruned.active.size(), 0);
    for (std::size_t vi : members) {
        if (!pruned.active[vi] || swallowed[vi]) continue;
        GraphView induced = pruned;
        for (std::size_t u = 0; u < induced.active.size(); ++u)
            if (swallowed[u]) induced.active[u] = 0;
        for (std::size_t u = 0; u < induced.active.size(); ++u) {
            if (!induced.active[u]) continue;
            auto& list = induced.sets[u];
            list.erase(std::remove_if(list.begin(), list.end(),
                                      [&](const auto& e) { return !set_usable(induced, e.second); }),
                       list.end());
        }
        std::vector<std::size_t> Si = expand_rec(induced, vi);
        auto cl = view_closure(induced, Si);
        for (std::size_t u = 0; u < cl.size(); ++u)
            if (cl[u]) swallowed[u] = 1;
        S.insert(S.end(), Si.begin(), Si.end());
    }
    if (S.empty()) S.push_back(v);
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    return S;
}

} // namespace

std::vector<std::size_t> find_expanding_set(const RecoveringGraph& g, std::size_t v) {
    if (v >= g.n) throw std::out_of_range("vertex out of range");
    if (g.t() == 0) return {v};
    return expand_rec(view_of(g), v);
}

} // namespace lrca
