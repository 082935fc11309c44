#include "strata/twisted.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace strata {

namespace {

struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

// Edge comparison: +1 if end-0 vertex sits above, -1 if below, 0 horizontal.
int edge_direction(const std::pair<int, int>& orders) {
    if (orders.first == -1 && orders.second == -1) return 0;
    return orders.first > orders.second ? 1 : -1;
}

}  // namespace

int DualGraph::total_genus() const {
    Int g = 0;
    for (auto& v : vertices) g += v.genus;
    return (int)g + (int)edges.size() - (int)vertices.size() + 1;
}

bool DualGraph::connected() const {
    if (vertices.empty()) return false;
    UF uf((int)vertices.size());
    for (auto& [a, b] : edges) uf.unite(a, b);
    for (int i = 1; i < (int)vertices.size(); ++i)
        if (uf.find(i) != uf.find(0)) return false;
    return true;
}

bool DualGraph::is_tree() const {
    for (auto& [a, b] : edges)
        if (a == b) return false;
    return connected() && edges.size() + 1 == vertices.size();
}

int TwistedConfig::order_at(const EdgeEnd& q) const {
    auto& o = edge_orders.at(q.first);
    return q.second == 0 ? o.first : o.second;
}

int TwistedConfig::end_vertex(const EdgeEnd& q) const {
    auto& e = graph.edges.at(q.first);
    return q.second == 0 ? e.first : e.second;
}

namespace {

void check_config_shape(const TwistedConfig& cfg) {
    const auto& g = cfg.graph;
    if (g.vertices.empty()) throw Error(Errc::ShapeError, "graph has no vertices");
    for (auto& [a, b] : g.edges)
        if (a < 0 || b < 0 || a >= (int)g.vertices.size() || b >= (int)g.vertices.size())
            throw Error(Errc::ShapeError, "edge endpoint out of range");
    if (cfg.edge_orders.size() != g.edges.size())
        throw Error(Errc::ShapeError, "edge_orders must match the edge list");
    std::set<int> marks;
    for (auto& v : g.vertices)
        for (int m : v.markings)
            if (!marks.insert(m).second) throw Error(Errc::ShapeError, "duplicate marking");
    int n = (int)marks.size();
    for (int m : marks)
        if (m < 1 || m > n) throw Error(Errc::ShapeError, "markings must be 1..n");
    for (int m : marks)
        if (!cfg.marking_order.count(m)) throw Error(Errc::ShapeError, "missing marking order");
    for (int m : cfg.zeroed)
        if (!marks.count(m)) throw Error(Errc::ShapeError, "zeroed label is not a marking");
    if (!cfg.level.empty())
        for (int v = 0; v < (int)g.vertices.size(); ++v)
            if (!cfg.level.count(v)) throw Error(Errc::ShapeError, "levels must cover every vertex");
    if (!g.connected()) throw Error(Errc::DisconnectedSurface, "dual graph is disconnected");
}

}  // namespace

std::vector<std::string> validate_twisted(const TwistedConfig& cfg) {
    check_config_shape(cfg);
    const auto& g = cfg.graph;
    std::vector<std::string> out;
    auto fail = [&](int axiom, const std::string& what) {
        std::ostringstream os;
        os << "(" << axiom << ") " << what;
        out.push_back(os.str());
    };

    // (1) per-vertex degree of the twisted canonical divisor.
    for (int v = 0; v < (int)g.vertices.size(); ++v) {
        Int sum = 0;
        for (int m : g.vertices[v].markings) sum += cfg.marking_order.at(m);
        for (int e = 0; e < (int)g.edges.size(); ++e) {
            if (g.edges[e].first == v) sum += cfg.edge_orders[e].first;
            if (g.edges[e].second == v) sum += cfg.edge_orders[e].second;
        }
        Int want = 2 * g.vertices[v].genus - 2;
        if (sum != want) {
            std::ostringstream os;
            os << "vertex " << v << " has order sum " << sum << ", expected " << want;
            fail(1, os.str());
        }
    }

    // (2) node orders sum to -2 on each edge.
    for (int e = 0; e < (int)g.edges.size(); ++e)
        if (cfg.edge_orders[e].first + cfg.edge_orders[e].second != -2) {
            std::ostringstream os;
            os << "edge " << e << " orders sum to " << cfg.edge_orders[e].first + cfg.edge_orders[e].second;
            fail(2, os.str());
        }

    // (3)/(4) all edges between the same component pair compare the same way.
    std::map<std::pair<int, int>, std::set<int>> pair_dirs;
    for (int e = 0; e < (int)g.edges.size(); ++e) {
        auto [a, b] = g.edges[e];
        if (a == b) continue;
        int dir = edge_direction(cfg.edge_orders[e]);
        if (a > b) {
            std::swap(a, b);
            dir = -dir;
        }
        pair_dirs[{a, b}].insert(dir);
    }
    for (auto& [pr, dirs] : pair_dirs) {
        if (dirs.size() <= 1) continue;
        std::ostringstream os;
        os << "components " << pr.first << " and " << pr.second << " meet with inconsistent order";
        fail(dirs.count(0) ? 3 : 4, os.str());
    }

    // (5) no directed loop through a strict comparison: contract the
    // horizontal (~) edges, then the strict edges must be acyclic.
    {
        UF uf((int)g.vertices.size());
        for (int e = 0; e < (int)g.edges.size(); ++e)
            if (edge_direction(cfg.edge_orders[e]) == 0) uf.unite(g.edges[e].first, g.edges[e].second);
        std::map<int, std::vector<int>> succ;  // upper class -> lower classes
        for (int e = 0; e < (int)g.edges.size(); ++e) {
            int dir = edge_direction(cfg.edge_orders[e]);
            if (dir == 0) continue;
            int hi = uf.find(dir > 0 ? g.edges[e].first : g.edges[e].second);
            int lo = uf.find(dir > 0 ? g.edges[e].second : g.edges[e].first);
            if (hi == lo) {
                fail(5, "strict comparison within a ~-equivalence class");
                continue;
            }
            succ[hi].push_back(lo);
        }
        std::map<int, int> state;  // 0 unseen, 1 on stack, 2 done
        bool cyclic = false;
        std::function<void(int)> dfs = [&](int u) {
            state[u] = 1;
            for (int w : succ[u]) {
                if (state[w] == 1) cyclic = true;
                else if (state[w] == 0) dfs(w);
            }
            state[u] = 2;
        };
        for (auto& [u, _] : succ)
            if (state[u] == 0) dfs(u);
        if (cyclic) fail(5, "directed loop of strict comparisons");
    }

    // Level compatibility: order comparison at every edge agrees with levels.
    if (!cfg.level.empty()) {
        for (int e = 0; e < (int)g.edges.size(); ++e) {
            auto [a, b] = g.edges[e];
            int dir = edge_direction(cfg.edge_orders[e]);
            const Rational &la = cfg.level.at(a), &lb = cfg.level.at(b);
            bool ok = dir == 0 ? la == lb : (dir > 0 ? la > lb : la < lb);
            if (!ok) {
                std::ostringstream os;
                os << "(levels) edge " << e << " disagrees with the level assignment";
                out.push_back(os.str());
            }
        }
    }
    return out;
}

namespace {

ComplexQ residue_of(const TwistedConfig& cfg, const EdgeEnd& q) {
    auto it = cfg.residue.find(q);
    return it == cfg.residue.end() ? ComplexQ{} : it->second;
}

void require_full_order(const TwistedConfig& cfg, const std::vector<std::string>& report) {
    if (cfg.level.empty()) throw Error(Errc::NotFullOrder, "no level assignment supplied");
    for (auto& r : report)
        if (r.rfind("(levels)", 0) == 0)
            throw Error(Errc::NotFullOrder, "levels do not refine the partial order: " + r);
}

// Connected components of the subgraph on vertices with level > L, together
// with the GRC residue positions: ends inside Y whose opposite vertex sits
// exactly at level L.
struct AboveComponent {
    std::vector<int> vertices;
    std::vector<EdgeEnd> boundary_ends;
    bool has_nonzeroed_pole = false;
};

std::vector<AboveComponent> components_above(const TwistedConfig& cfg, const Rational& L) {
    const auto& g = cfg.graph;
    int V = (int)g.vertices.size();
    UF uf(V);
    for (int e = 0; e < (int)g.edges.size(); ++e) {
        auto [a, b] = g.edges[e];
        if (cfg.level.at(a) > L && cfg.level.at(b) > L) uf.unite(a, b);
    }
    std::map<int, AboveComponent> comp;
    for (int v = 0; v < V; ++v) {
        if (cfg.level.at(v) <= L) continue;
        auto& c = comp[uf.find(v)];
        c.vertices.push_back(v);
        for (int m : g.vertices[v].markings)
            if (cfg.marking_order.at(m) <= -1 && !cfg.zeroed.count(m)) c.has_nonzeroed_pole = true;
    }
    for (int e = 0; e < (int)g.edges.size(); ++e) {
        auto [a, b] = g.edges[e];
        if (cfg.level.at(a) > L && cfg.level.at(b) == L) comp[uf.find(a)].boundary_ends.push_back({e, 0});
        if (cfg.level.at(b) > L && cfg.level.at(a) == L) comp[uf.find(b)].boundary_ends.push_back({e, 1});
    }
    std::vector<AboveComponent> out;
    for (auto& [_, c] : comp) out.push_back(std::move(c));
    return out;
}

std::vector<Rational> distinct_levels(const TwistedConfig& cfg) {
    std::set<Rational> ls;
    for (auto& [_, l] : cfg.level) ls.insert(l);
    return {ls.begin(), ls.end()};
}

}  // namespace

GrcResult zr_grc_check(const TwistedConfig& cfg) {
    auto report = validate_twisted(cfg);
    require_full_order(cfg, report);
    GrcResult res;

    for (int e = 0; e < (int)cfg.graph.edges.size(); ++e) {
        if (edge_direction(cfg.edge_orders[e]) != 0) continue;
        if (!(residue_of(cfg, {e, 0}) + residue_of(cfg, {e, 1})).zero()) res.bad_horizontal_edges.push_back(e);
    }
    for (int m : cfg.zeroed)
        if (cfg.marking_order.at(m) >= -1) res.bad_zeroed_markings.push_back(m);

    for (const Rational& L : distinct_levels(cfg)) {
        for (auto& Y : components_above(cfg, L)) {
            if (Y.has_nonzeroed_pole) continue;
            ComplexQ sum;
            for (auto& q : Y.boundary_ends) sum = sum + residue_of(cfg, q);
            if (!sum.zero()) res.failing.push_back({L, Y.vertices, sum});
        }
    }
    res.ok = res.bad_horizontal_edges.empty() && res.bad_zeroed_markings.empty() && res.failing.empty();
    return res;
}

namespace {

// Nullspace basis of a homogeneous rational system.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows, int nvars) {
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < nvars && rank < (int)rows.size(); ++col) {
        int piv = -1;
        for (int i = rank; i < (int)rows.size(); ++i)
            if (rows[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        Rational inv = Rational(1) / rows[rank][col];
        for (auto& x : rows[rank]) x *= inv;
        for (int i = 0; i < (int)rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Rational f = rows[i][col];
            for (int j = 0; j < nvars; ++j) rows[i][j] -= f * rows[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(nvars, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int fc = 0; fc < nvars; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> v(nvars, Rational(0));
        v[fc] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -rows[r][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

ResidueSolution solve_residues(const TwistedConfig& cfg) {
    auto report = validate_twisted(cfg);
    require_full_order(cfg, report);
    const auto& g = cfg.graph;
    const int E = (int)g.edges.size();

    // Variables: one per edge end, then one per non-zeroed marked pole.
    std::vector<int> pole_markings;
    for (auto& [m, k] : cfg.marking_order)
        if (k <= -1 && !cfg.zeroed.count(m)) pole_markings.push_back(m);
    const int nvars = 2 * E + (int)pole_markings.size();
    auto end_var = [&](int e, int s) { return 2 * e + s; };
    auto mark_var = [&](int m) {
        return 2 * E + (int)(std::find(pole_markings.begin(), pole_markings.end(), m) - pole_markings.begin());
    };

    std::vector<std::vector<Rational>> rows;
    auto new_row = [&]() -> std::vector<Rational>& {
        rows.emplace_back(nvars, Rational(0));
        return rows.back();
    };
    // Zero residue at zeros/regular points; opposite residues across
    // horizontal nodes.
    for (int e = 0; e < E; ++e) {
        for (int s = 0; s < 2; ++s)
            if (cfg.order_at({e, s}) >= 0) new_row()[end_var(e, s)] = 1;
        if (edge_direction(cfg.edge_orders[e]) == 0) {
            auto& r = new_row();
            r[end_var(e, 0)] = 1;
            r[end_var(e, 1)] = 1;
        }
    }
    // Residue theorem on each component.
    for (int v = 0; v < (int)g.vertices.size(); ++v) {
        auto& r = new_row();
        for (int e = 0; e < E; ++e) {
            if (g.edges[e].first == v) r[end_var(e, 0)] += 1;
            if (g.edges[e].second == v) r[end_var(e, 1)] += 1;
        }
        for (int m : g.vertices[v].markings)
            if (cfg.marking_order.at(m) <= -1 && !cfg.zeroed.count(m)) r[mark_var(m)] += 1;
    }
    // Zero-residue GRC sums.
    for (const Rational& L : distinct_levels(cfg)) {
        for (auto& Y : components_above(cfg, L)) {
            if (Y.has_nonzeroed_pole || Y.boundary_ends.empty()) continue;
            auto& r = new_row();
            for (auto& q : Y.boundary_ends) r[end_var(q.first, q.second)] += 1;
        }
    }

    // Simple poles must carry a nonzero residue.
    std::vector<int> required;
    for (int e = 0; e < E; ++e)
        for (int s = 0; s < 2; ++s)
            if (cfg.order_at({e, s}) == -1) required.push_back(end_var(e, s));
    for (int m : pole_markings)
        if (cfg.marking_order.at(m) == -1) required.push_back(mark_var(m));
    for (auto& [m, k] : cfg.marking_order)
        if (k == -1 && cfg.zeroed.count(m)) return {};  // zeroed simple pole: impossible

    auto basis = nullspace(std::move(rows), nvars);
    for (int rq : required) {
        bool forced_zero = true;
        for (auto& b : basis)
            if (b[rq] != 0) { forced_zero = false; break; }
        if (forced_zero) return {};
    }

    std::vector<Rational> sol(nvars, Rational(0));
    for (Int t = 1;; ++t) {
        std::fill(sol.begin(), sol.end(), Rational(0));
        Rational w(1);
        for (auto& b : basis) {
            for (int j = 0; j < nvars; ++j) sol[j] += w * b[j];
            w *= Rational(t);
        }
        bool good = true;
        for (int rq : required)
            if (sol[rq] == 0) { good = false; break; }
        if (good) break;
    }

    ResidueSolution out;
    out.exists = true;
    for (int e = 0; e < E; ++e)
        for (int s = 0; s < 2; ++s) out.edge_end[{e, s}] = sol[end_var(e, s)];
    for (int m : pole_markings) out.marking[m] = sol[mark_var(m)];
    return out;
}

bool compact_type_second_kind(const Signature& sig, const DualGraph& tree,
                              const std::map<int, int>& marking_order,
                              const std::vector<std::pair<int, int>>& edge_orders) {
    if (!tree.is_tree()) throw Error(Errc::NotATree, "compact type requires a tree dual graph");
    for (int k : sig.entries)
        if (k == -1) throw Error(Errc::InvalidInput, "signature must avoid simple poles");
    TwistedConfig cfg;
    cfg.graph = tree;
    cfg.marking_order = marking_order;
    cfg.edge_orders = edge_orders;
    check_config_shape(cfg);
    for (auto& [m, k] : marking_order) {
        if (m < 1 || m > (int)sig.entries.size() || sig.entries[m - 1] != k)
            throw Error(Errc::InvalidInput, "marking orders must agree with the signature");
    }
    for (auto& [a, b] : edge_orders) {
        if (a + b != -2) throw Error(Errc::InvalidInput, "edge orders must sum to -2");
        if (a == -1 || b == -1) return false;  // a forced simple pole
    }
    for (int v = 0; v < (int)tree.vertices.size(); ++v) {
        Signature comp;
        comp.g = tree.vertices[v].genus;
        for (int m : tree.vertices[v].markings) comp.entries.push_back(marking_order.at(m));
        for (int e = 0; e < (int)tree.edges.size(); ++e) {
            if (tree.edges[e].first == v) comp.entries.push_back(edge_orders[e].first);
            if (tree.edges[e].second == v) comp.entries.push_back(edge_orders[e].second);
        }
        Int deg = 0;
        for (int k : comp.entries) deg += k;
        if (deg != 2 * comp.g - 2) throw Error(Errc::InvalidInput, "component orders violate the degree condition");
        if (zero_residue_empty(comp)) return false;
    }
    return true;
}

int restriction_codim(const Signature& sig, const std::vector<Signature>& components) {
    if (sig.g != 0) throw Error(Errc::InvalidInput, "restriction codimension is a genus-0 statement");
    if (components.empty()) throw Error(Errc::InconsistentSplit, "no components supplied");
    int total = 0;
    for (size_t i = 0; i < components.size(); ++i) {
        if (zero_residue_empty(components[i])) {
            std::ostringstream os;
            os << "component " << i << " is an empty zero-residue stratum";
            throw Error(Errc::EmptyStratum, os.str());
        }
        total += components[i].poles() - 1;
    }
    if (total != sig.poles() - 1)
        throw Error(Errc::InconsistentSplit, "pole counts do not satisfy the splitting identity");
    return total;
}

}  // namespace strata
