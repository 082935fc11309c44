#include "strata/flatgeom.hpp"

#include <algorithm>
#include <numeric>

#include "strata/rational.hpp"

namespace strata {

int ChartData::pole_order(int i) const {
    if (i < 1 || i > r()) throw Error(Errc::PoleIndexOutOfRange, "non-simple pole index out of range");
    return dvec[i] - dvec[i - 1] + 1;
}

namespace {

bool is_permutation_1n(const std::vector<int>& p, int n) {
    if ((int)p.size() != n) return false;
    std::vector<bool> seen(n + 1, false);
    for (int v : p) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

void check_breakpoints(const std::vector<int>& bp, int d, int s, int n, const char* side) {
    if ((int)bp.size() != d + s + 1)
        throw Error(Errc::ShapeError, std::string("breakpoint sequence ") + side + " has wrong length");
    if (bp.front() != 0 || bp.back() != n)
        throw Error(Errc::ShapeError, std::string("breakpoint sequence ") + side + " must run from 0 to n");
    for (size_t i = 1; i < bp.size(); ++i) {
        bool strict = (int)i > d;  // C-domains are nonempty
        if (bp[i] < bp[i - 1] || (strict && bp[i] == bp[i - 1]))
            throw Error(Errc::ShapeError, std::string("breakpoint sequence ") + side + " not monotone");
    }
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Index of the domain containing slot j (1-based) for breakpoints bp.
int domain_of_slot(const std::vector<int>& bp, int j) {
    for (size_t t = 1; t < bp.size(); ++t)
        if (bp[t - 1] < j && j <= bp[t]) return (int)t;  // 1-based domain index
    throw Error(Errc::ShapeError, "slot outside breakpoint range");
}

}  // namespace

void validate_chart(const ChartData& c) {
    if (c.n < 1) throw Error(Errc::ShapeError, "chart needs at least one variable");
    if (c.splus < 0 || c.sminus < 0) throw Error(Errc::ShapeError, "negative simple pole count");
    if (c.dvec.size() < 2 || c.dvec.front() != 0)
        throw Error(Errc::ShapeError, "dvec must start at 0 and contain at least one pole");
    for (size_t i = 1; i < c.dvec.size(); ++i)
        if (c.dvec[i] <= c.dvec[i - 1]) throw Error(Errc::ShapeError, "dvec must be strictly increasing");
    const int d = c.d();
    check_breakpoints(c.nplus, d, c.splus, c.n, "n^+");
    check_breakpoints(c.nminus, d, c.sminus, c.n, "n^-");
    if (!is_permutation_1n(c.pit, c.n)) throw Error(Errc::ShapeError, "pi_t is not a permutation of {1..n}");
    if (!is_permutation_1n(c.pib, c.n)) throw Error(Errc::ShapeError, "pi_b is not a permutation of {1..n}");

    // Connectivity of the glued surface.  Nodes: D_i^+ (i=1..d), C^+_j,
    // D_i^-, C^-_j; the vertical lines of each C-domain self-glue.
    const int top_c = d, bot_d = d + c.splus, bot_c = bot_d + d;
    UnionFind uf(2 * d + c.splus + c.sminus);
    auto top_node = [&](int t) { return t <= d ? t - 1 : top_c + (t - d - 1); };
    auto bot_node = [&](int t) { return t <= d ? bot_d + (t - 1) : bot_c + (t - d - 1); };

    // Each variable is glued between its top and bottom domain.
    std::vector<int> top_slot(c.n + 1), bot_slot(c.n + 1);
    for (int j = 1; j <= c.n; ++j) {
        top_slot[c.pit[j - 1]] = j;
        bot_slot[c.pib[j - 1]] = j;
    }
    for (int v = 1; v <= c.n; ++v)
        uf.unite(top_node(domain_of_slot(c.nplus, top_slot[v])),
                 bot_node(domain_of_slot(c.nminus, bot_slot[v])));

    // Left line of D_i^+ glues to left line of D_i^-.
    for (int i = 1; i <= d; ++i) uf.unite(top_node(i), bot_node(i));
    // Right lines: within the domain group of each non-simple pole the
    // right line of D_i^- meets the right line of D_{i+1}^+, and the group
    // closes up around the pole (last bottom right line to first top one).
    for (int k = 1; k <= c.r(); ++k) {
        const int a = c.dvec[k - 1] + 1, b = c.dvec[k];
        for (int i = a; i < b; ++i) uf.unite(bot_node(i), top_node(i + 1));
        uf.unite(bot_node(b), top_node(a));
    }

    const int root = uf.find(0);
    for (int x = 1; x < (int)uf.parent.size(); ++x)
        if (uf.find(x) != root) throw Error(Errc::DisconnectedSurface, "chart does not glue to a connected surface");
}

int coordinate_count(int g, const std::vector<int>& kappa) {
    if (g < 0) throw Error(Errc::NegativeGenus, "genus must be nonnegative");
    return 2 * g + (int)kappa.size() - 2;
}

namespace {

void add_range(ResidueForm& f, const std::vector<int>& perm, int lo, int hi, int sign) {
    for (int j = lo + 1; j <= hi; ++j) {
        int v = perm[j - 1];
        f.coeff[v] += sign;
        if (f.coeff[v] == 0) f.coeff.erase(v);
    }
}

}  // namespace

ResidueForm residue_form(const ChartData& c, int pole) {
    const int r = c.r(), d = c.d();
    ResidueForm f;
    if (pole >= 1 && pole <= r) {
        add_range(f, c.pit, c.nplus[c.dvec[pole - 1]], c.nplus[c.dvec[pole]], +1);
        add_range(f, c.pib, c.nminus[c.dvec[pole - 1]], c.nminus[c.dvec[pole]], -1);
    } else if (pole > r && pole <= r + c.splus) {
        int j = pole - r;
        add_range(f, c.pit, c.nplus[d + j - 1], c.nplus[d + j], +1);
    } else if (pole > r + c.splus && pole <= r + c.splus + c.sminus) {
        int j = pole - r - c.splus;
        add_range(f, c.pib, c.nminus[d + j - 1], c.nminus[d + j], -1);
    } else {
        throw Error(Errc::PoleIndexOutOfRange, "pole index out of range");
    }
    return f;
}

int zero_residue_rank(const ChartData& c) {
    const int r = c.r();
    std::vector<std::vector<Rational>> rows;
    for (int i = 1; i <= r; ++i) {
        ResidueForm f = residue_form(c, i);
        std::vector<Rational> row(c.n, Rational(0));
        for (auto& [v, coef] : f.coeff) row[v - 1] = coef;
        rows.push_back(std::move(row));
    }
    int rank = 0;
    for (int col = 0; col < c.n && rank < (int)rows.size(); ++col) {
        int piv = -1;
        for (int i = rank; i < (int)rows.size(); ++i)
            if (rows[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int i = 0; i < (int)rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Rational factor = rows[i][col] / rows[rank][col];
            for (int j = col; j < c.n; ++j) rows[i][j] -= factor * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

ChartData random_chart(std::mt19937& rng, int r_max, bool with_simple) {
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int attempt = 0; attempt < 2000; ++attempt) {
        ChartData c;
        int r = uniform(1, std::max(1, r_max));
        c.dvec = {0};
        for (int i = 0; i < r; ++i) c.dvec.push_back(c.dvec.back() + uniform(1, 3));
        const int d = c.d();
        if (with_simple) {
            int s = uniform(2, 3);
            c.splus = uniform(0, s);
            c.sminus = s - c.splus;
        }
        c.n = d + 2 + c.splus + c.sminus + uniform(0, 2);
        auto breakpoints = [&](int s) {
            std::vector<int> bp(d + 1);
            bp[0] = 0;
            bp[d] = c.n - s;  // each C-domain gets exactly one variable
            for (int i = 1; i < d; ++i) bp[i] = uniform(0, c.n - s);
            std::sort(bp.begin(), bp.begin() + d + 1);
            for (int j = 1; j <= s; ++j) bp.push_back(c.n - s + j);
            return bp;
        };
        c.nplus = breakpoints(c.splus);
        c.nminus = breakpoints(c.sminus);
        c.pit.resize(c.n);
        c.pib.resize(c.n);
        std::iota(c.pit.begin(), c.pit.end(), 1);
        std::iota(c.pib.begin(), c.pib.end(), 1);
        std::shuffle(c.pit.begin(), c.pit.end(), rng);
        std::shuffle(c.pib.begin(), c.pib.end(), rng);
        try {
            validate_chart(c);
            return c;
        } catch (const Error&) {
            continue;
        }
    }
    throw Error(Errc::RecursionFailure, "failed to generate a connected random chart");
}

}  // namespace strata
