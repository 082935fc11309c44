#include "strata/picard.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace strata {

Mask full_mask(int n) { return (Mask(1) << n) - 1; }

int mask_size(Mask S) {
    int c = 0;
    while (S) {
        c += S & 1;
        S >>= 1;
    }
    return c;
}

std::vector<int> mask_elements(Mask S) {
    std::vector<int> out;
    for (int j = 1; S; ++j, S >>= 1)
        if (S & 1) out.push_back(j);
    return out;
}

Mask mask_from_elements(const std::vector<int>& elems) {
    Mask S = 0;
    for (int j : elems) {
        if (j < 1 || j > 32) throw Error(Errc::IndexOutOfRange, "marking out of range");
        S |= Mask(1) << (j - 1);
    }
    return S;
}

bool boundary_index_valid(int g, int n, int i, Mask S) {
    if (i < 0 || i > g) return false;
    if (S & ~full_mask(n)) return false;
    int s = mask_size(S);
    if (i == 0 && s < 2) return false;
    if (i == g && n - s < 2) return false;
    return true;
}

BoundaryIndex canonical_boundary(int g, int n, int i, Mask S) {
    if (!boundary_index_valid(g, n, i, S))
        throw Error(Errc::IndexOutOfRange, "invalid boundary index");
    Mask Sc = full_mask(n) & ~S;
    if (2 * i > g || (2 * i == g && !(S & 1))) return BoundaryIndex{g - i, Sc};
    return BoundaryIndex{i, S};
}

std::vector<BoundaryIndex> all_boundary_indices(int g, int n) {
    std::vector<BoundaryIndex> out;
    Mask top = full_mask(n);
    for (int i = 0; 2 * i <= g; ++i) {
        for (Mask S = 0; S <= top; ++S) {
            if (!boundary_index_valid(g, n, i, S)) continue;
            if (2 * i == g && !(S & 1)) continue;  // keep the side with marking 1
            out.push_back(BoundaryIndex{i, S});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rational DivisorClass::get(const BoundaryIndex& b) const {
    auto it = delta.find(b);
    return it == delta.end() ? Rational(0) : it->second;
}

void DivisorClass::add_delta(int i, Mask S, const Rational& c) {
    if (c == 0) return;
    delta[canonical_boundary(g, n, i, S)] += c;
}

void DivisorClass::prune() {
    for (auto it = delta.begin(); it != delta.end();)
        it = (it->second == 0) ? delta.erase(it) : std::next(it);
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    if (g != o.g || n != o.n) throw Error(Errc::DimensionMismatch, "class spaces differ");
    DivisorClass r = *this;
    r.lambda += o.lambda;
    r.delta_irr += o.delta_irr;
    for (int j = 0; j < n; ++j) r.psi[j] += o.psi[j];
    for (const auto& [b, c] : o.delta) r.delta[b] += c;
    r.prune();
    return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    return *this + o * Rational(-1);
}

DivisorClass DivisorClass::operator*(const Rational& c) const {
    DivisorClass r = *this;
    r.lambda *= c;
    r.delta_irr *= c;
    for (auto& x : r.psi) x *= c;
    for (auto& [b, v] : r.delta) v *= c;
    r.prune();
    return r;
}

bool DivisorClass::operator==(const DivisorClass& o) const {
    if (g != o.g || n != o.n || lambda != o.lambda || delta_irr != o.delta_irr || psi != o.psi)
        return false;
    DivisorClass a = *this, b = o;
    a.prune();
    b.prune();
    return a.delta == b.delta;
}

static void append_term(std::ostringstream& os, bool& first, const Rational& c,
                        const std::string& sym) {
    if (c == 0) return;
    Rational a = c < 0 ? Rational(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (a != 1) os << to_string(a) << "*";
    os << sym;
}

std::string DivisorClass::to_text() const {
    std::ostringstream os;
    bool first = true;
    append_term(os, first, lambda, "lambda");
    for (int j = 0; j < n; ++j) append_term(os, first, psi[j], "psi" + std::to_string(j + 1));
    append_term(os, first, delta_irr, "delta_0");
    for (const auto& [b, c] : delta) {
        std::string sym = "delta_{" + std::to_string(b.i) + ":{";
        auto el = mask_elements(b.S);
        for (size_t k = 0; k < el.size(); ++k) sym += (k ? "," : "") + std::to_string(el[k]);
        sym += "}}";
        append_term(os, first, c, sym);
    }
    if (first) os << "0";
    return os.str();
}

std::string DivisorClass::to_latex() const {
    std::ostringstream os;
    bool first = true;
    append_term(os, first, lambda, "\\lambda");
    for (int j = 0; j < n; ++j) append_term(os, first, psi[j], "\\psi_{" + std::to_string(j + 1) + "}");
    append_term(os, first, delta_irr, "\\delta_{0}");
    for (const auto& [b, c] : delta) {
        std::string sym = "\\delta_{" + std::to_string(b.i) + ":\\{";
        auto el = mask_elements(b.S);
        for (size_t k = 0; k < el.size(); ++k) sym += (k ? "," : "") + std::to_string(el[k]);
        sym += "\\}}";
        append_term(os, first, c, sym);
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// class formulas

static void check_thmI_shape(int g, const std::vector<int>& d, int& m) {
    m = 0;
    long long sum = 0;
    for (int di : d) {
        if (di == -1) throw Error(Errc::SignatureShapeError, "simple pole in first-kind data");
        if (di == 0) throw Error(Errc::SignatureShapeError, "zero entry");
        if (di <= -2) ++m;
        sum += di;
    }
    if (m < 1) throw Error(Errc::SignatureShapeError, "at least one pole required");
    if (sum != g - m) throw Error(Errc::SumMismatch, "entries must sum to g - m");
    if (g + m - 2 < 0) throw Error(Errc::SignatureShapeError, "g + m - 2 must be nonnegative");
}

static long long d_of(const std::vector<int>& d, Mask S) {
    long long t = 0;
    for (int j = 0; j < (int)d.size(); ++j)
        if (S >> j & 1) t += d[j];
    return t;
}

static int count_if_mask(const std::vector<int>& d, Mask S, bool (*pred)(int)) {
    int c = 0;
    for (int j = 0; j < (int)d.size(); ++j)
        if ((S >> j & 1) && pred(d[j])) ++c;
    return c;
}

static bool is_pole(int x) { return x < 0; }
static bool is_nonsimple(int x) { return x <= -2; }
static bool is_simple(int x) { return x == -1; }

DivisorClass formula_ZRdivI(int g, const std::vector<int>& d) {
    int n = (int)d.size(), m = 0;
    check_thmI_shape(g, d, m);
    std::vector<int> kappa = d;
    kappa.insert(kappa.end(), g + m - 2, 1);
    if (zero_residue_empty(validate_signature(g, kappa)))
        throw Error(Errc::EmptyStratum, "zero-residue stratum is empty");

    DivisorClass Z(g, n);
    if (g >= 2) {
        Z.lambda = -1;
        for (int j = 0; j < n; ++j) Z.psi[j] = Rational(binom2(Int(d[j]) + 1));
        Z.delta_irr = 0;
        for (const auto& b : all_boundary_indices(g, n)) {
            Int v = Int(d_of(d, b.S)) + count_if_mask(d, b.S, is_pole) - b.i;
            Z.delta[b] = -Rational(binom2(iabs(v) + 1));
        }
    } else if (g == 1) {
        Int lam = -1;
        for (int j = 0; j < n; ++j) lam += binom2(Int(d[j]) + 1);
        Z.lambda = Rational(lam);
        for (const auto& b : all_boundary_indices(1, n)) {
            Int v = Int(d_of(d, b.S)) + count_if_mask(d, b.S, is_pole);
            Int c = binom2(iabs(v) + 1);
            for (int j = 0; j < n; ++j)
                if (b.S >> j & 1) c -= binom2(Int(d[j]) + 1);
            Z.delta[b] = -Rational(c);
        }
    } else {
        for (int j = 0; j < n; ++j) {
            Int fj = Int(d[j]) + (d[j] < 0 ? 1 : 0);
            Z.psi[j] = Rational(iabs(fj), 2);
        }
        for (const auto& b : all_boundary_indices(0, n)) {
            Int v = Int(d_of(d, b.S)) + count_if_mask(d, b.S, is_pole);
            Z.delta[b] = -Rational(iabs(v), 2);
        }
    }
    Z.prune();
    return Z;
}

DivisorClass formula_ZRdivII(int g, const std::vector<int>& d) {
    int n = (int)d.size(), m = 0, k = 0;
    long long sum = 0;
    for (int di : d) {
        if (di == 0) throw Error(Errc::SignatureShapeError, "zero entry");
        if (di == -1) ++k;
        if (di <= -2) ++m;
        sum += di;
    }
    if (k < 2) throw Error(Errc::SignatureShapeError, "at least two simple poles required");
    // class of Z(d, 1^{g+m-1}); with g=0, m=0 there is no padding and d is the
    // full signature
    if (g + m - 1 >= 0) {
        if (sum != g - m - 1) throw Error(Errc::SumMismatch, "entries must sum to g - m - 1");
    } else if (sum != 2LL * g - 2) {
        throw Error(Errc::SumMismatch, "entries must sum to 2g - 2");
    }

    Mask top = full_mask(n);
    DivisorClass Z(g, n);
    if (g >= 2) {
        Z.lambda = -1;
        for (int j = 0; j < n; ++j) Z.psi[j] = Rational(binom2(Int(d[j]) + 1));
        for (const auto& b : all_boundary_indices(g, n)) {
            Mask Sc = top & ~b.S;
            bool splitS = count_if_mask(d, b.S, is_simple) > 0;
            bool splitSc = count_if_mask(d, Sc, is_simple) > 0;
            Int c;
            if (!splitS) {
                Int v = Int(d_of(d, b.S)) + count_if_mask(d, b.S, is_pole) - b.i;
                c = binom2(iabs(v) + 1);
            } else if (!splitSc) {
                Int v = Int(d_of(d, Sc)) + count_if_mask(d, Sc, is_pole) - (g - b.i);
                c = binom2(iabs(v) + 1);
            } else {
                Int v = Int(d_of(d, b.S)) + count_if_mask(d, b.S, is_nonsimple) - b.i + 1;
                c = binom2(v);
            }
            Z.delta[b] = -Rational(c);
        }
    } else if (g == 1) {
        Int lam = -1;
        for (int j = 0; j < n; ++j) lam += binom2(Int(d[j]) + 1);
        Z.lambda = Rational(lam);
        for (const auto& b : all_boundary_indices(1, n)) {
            Mask Sc = top & ~b.S;
            bool splitS = count_if_mask(d, b.S, is_simple) > 0;
            bool splitSc = count_if_mask(d, Sc, is_simple) > 0;
            Int c;
            if (!splitS) {
                Int v = Int(d_of(d, b.S)) + count_if_mask(d, b.S, is_pole);
                c = binom2(iabs(v) + 1);
            } else if (!splitSc) {
                Int v = Int(d_of(d, b.S)) + count_if_mask(d, b.S, is_pole) + 1;
                c = binom2(iabs(v) + 1);
            } else {
                Int v = Int(d_of(d, b.S)) + count_if_mask(d, b.S, is_nonsimple) + k - 1;
                c = binom2(v);
            }
            for (int j = 0; j < n; ++j)
                if (b.S >> j & 1) c -= binom2(Int(d[j]) + 1);
            Z.delta[b] = -Rational(c);
        }
    } else {
        for (int j = 0; j < n; ++j)
            if (d[j] <= -2) Z.psi[j] = Rational(Int(-(d[j] + 1)));
        for (const auto& b : all_boundary_indices(0, n)) {
            for (Mask T : {b.S, Mask(top & ~b.S)}) {
                if (count_if_mask(d, T, is_simple) > 0) continue;
                long long v = d_of(d, T) + count_if_mask(d, T, is_pole);
                if (v < 0) Z.delta[b] = Rational(v);  // -(|v|) since v < 0
            }
        }
    }
    Z.prune();
    return Z;
}

Rational EdgeLabeledGraph::label(int i, int j) const {
    if (i == j) return Rational(0);
    if (i > j) std::swap(i, j);
    auto it = e.find({i, j});
    return it == e.end() ? Rational(0) : it->second;
}

Rational EdgeLabeledGraph::vertex_weight(int i) const {
    Rational t(0);
    for (int j = 1; j <= n; ++j) t += label(i, j);
    return t;
}

Rational EdgeLabeledGraph::cut_weight(Mask S) const {
    Rational t(0);
    for (int i = 1; i <= n; ++i)
        if (S >> (i - 1) & 1)
            for (int j = 1; j <= n; ++j)
                if (!(S >> (j - 1) & 1)) t += label(i, j);
    return t;
}

DivisorClass keel_graph_class(const EdgeLabeledGraph& gamma) {
    int n = gamma.n;
    DivisorClass D(0, n);
    for (int i = 1; i <= n; ++i) D.psi[i - 1] = gamma.vertex_weight(i);
    for (const auto& b : all_boundary_indices(0, n)) D.delta[b] = -gamma.cut_weight(b.S);
    D.prune();
    return D;
}

DivisorClass dcor_class(const std::vector<int>& f) {
    int n = (int)f.size();
    if (n < 3) throw Error(Errc::ShapeError, "need at least three markings");
    if (std::accumulate(f.begin(), f.end(), 0LL) != 0)
        throw Error(Errc::SumNonzero, "ramification orders must sum to zero");
    DivisorClass D(0, n);
    for (int j = 0; j < n; ++j) D.psi[j] = Rational(iabs(Int(f[j])), 2);
    for (const auto& b : all_boundary_indices(0, n)) {
        long long t = 0;
        for (int j = 0; j < n; ++j)
            if (b.S >> j & 1) t += f[j];
        D.delta[b] = -Rational(iabs(Int(t)), 2);
    }
    D.prune();
    return D;
}

// ---------------------------------------------------------------------------
// normal form

namespace {

struct RelationSpace {
    std::vector<BoundaryIndex> keys;
    std::map<BoundaryIndex, int> key_index;          // offset into delta block
    std::vector<std::vector<Rational>> rref;         // reduced rows
    std::vector<int> pivots;
};

// Coordinate layout: [lambda, psi_1..psi_n, delta_0, boundary keys].
// Boundary keys are ordered by (i, |S|, sorted element list).
std::vector<BoundaryIndex> ordered_keys(int g, int n) {
    auto keys = all_boundary_indices(g, n);
    std::sort(keys.begin(), keys.end(), [](const BoundaryIndex& a, const BoundaryIndex& b) {
        if (a.i != b.i) return a.i < b.i;
        int sa = mask_size(a.S), sb = mask_size(b.S);
        if (sa != sb) return sa < sb;
        return mask_elements(a.S) < mask_elements(b.S);
    });
    return keys;
}

void reduce_rows(std::vector<std::vector<Rational>>& rows, std::vector<int>& pivots) {
    size_t dim = rows.empty() ? 0 : rows[0].size();
    size_t r = 0;
    pivots.clear();
    for (size_t col = 0; col < dim && r < rows.size(); ++col) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Rational inv = Rational(1) / rows[r][col];
        for (auto& x : rows[r]) x *= inv;
        for (size_t q = 0; q < rows.size(); ++q) {
            if (q == r || rows[q][col] == 0) continue;
            Rational f = rows[q][col];
            for (size_t c = col; c < dim; ++c) rows[q][c] -= f * rows[r][c];
        }
        pivots.push_back((int)col);
        ++r;
    }
    rows.resize(r);
}

const RelationSpace& relation_space(int g, int n) {
    static std::map<std::pair<int, int>, RelationSpace> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({g, n});
    if (it != cache.end()) return it->second;

    RelationSpace rs;
    rs.keys = ordered_keys(g, n);
    for (int i = 0; i < (int)rs.keys.size(); ++i) rs.key_index[rs.keys[i]] = i;
    size_t dim = 2 + n + rs.keys.size();
    auto idx_delta = [&](const BoundaryIndex& b) { return 2 + n + rs.key_index.at(b); };

    std::vector<std::vector<Rational>> rows;
    if (g == 0) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                // Keel: psi_i + psi_j - sum_{i in S, j not in S} delta_{0:S}
                std::vector<Rational> row(dim, Rational(0));
                row[1 + (i - 1)] = 1;
                row[1 + (j - 1)] = 1;
                for (const auto& b : rs.keys) {
                    bool hi = b.S >> (i - 1) & 1, hj = b.S >> (j - 1) & 1;
                    if (hi != hj) row[idx_delta(b)] -= 1;
                }
                rows.push_back(std::move(row));
            }
    } else if (g == 1) {
        {
            std::vector<Rational> row(dim, Rational(0));
            row[0] = 1;
            row[1 + n] = Rational(-1, 12);
            rows.push_back(std::move(row));
        }
        for (int i = 1; i <= n; ++i) {
            // lambda - psi_i + sum_{i in S} delta_{0:S}
            std::vector<Rational> row(dim, Rational(0));
            row[0] = 1;
            row[1 + (i - 1)] = -1;
            for (const auto& b : rs.keys)
                if (b.S >> (i - 1) & 1) row[idx_delta(b)] += 1;
            rows.push_back(std::move(row));
        }
    } else if (g == 2) {
        std::vector<Rational> row(dim, Rational(0));
        row[0] = 1;
        row[1 + n] = Rational(-1, 10);
        for (const auto& b : rs.keys)
            if (b.i == 1) row[idx_delta(b)] = Rational(-1, 5);
        rows.push_back(std::move(row));
    }
    reduce_rows(rows, rs.pivots);
    rs.rref = std::move(rows);
    return cache.emplace(std::make_pair(g, n), std::move(rs)).first->second;
}

}  // namespace

DivisorClass normal_form(const DivisorClass& D) {
    const RelationSpace& rs = relation_space(D.g, D.n);
    size_t dim = 2 + D.n + rs.keys.size();
    std::vector<Rational> v(dim, Rational(0));
    v[0] = D.lambda;
    for (int j = 0; j < D.n; ++j) v[1 + j] = D.psi[j];
    v[1 + D.n] = D.delta_irr;
    for (const auto& [b, c] : D.delta) v[2 + D.n + rs.key_index.at(b)] = c;

    for (size_t r = 0; r < rs.rref.size(); ++r) {
        int p = rs.pivots[r];
        if (v[p] == 0) continue;
        Rational f = v[p];
        for (size_t c = p; c < dim; ++c) v[c] -= f * rs.rref[r][c];
    }

    DivisorClass R(D.g, D.n);
    R.lambda = v[0];
    for (int j = 0; j < D.n; ++j) R.psi[j] = v[1 + j];
    R.delta_irr = v[1 + D.n];
    for (size_t k = 0; k < rs.keys.size(); ++k)
        if (v[2 + D.n + k] != 0) R.delta[rs.keys[k]] = v[2 + D.n + k];
    return R;
}

bool equals_mod_relations(const DivisorClass& A, const DivisorClass& B) {
    if (A.g != B.g || A.n != B.n) throw Error(Errc::DimensionMismatch, "class spaces differ");
    return normal_form(A - B) == DivisorClass(A.g, A.n);
}

std::optional<DivisorClass> boundary_effective_witness(const std::vector<int>& d) {
    int m = 0;
    check_thmI_shape(0, d, m);
    int n = (int)d.size();
    DivisorClass Z = formula_ZRdivI(0, d);

    std::vector<Int> f(n);
    Int N = 0;
    for (int j = 0; j < n; ++j) {
        f[j] = Int(d[j]) + (d[j] < 0 ? 1 : 0);
        if (f[j] > 0) N += f[j];
    }
    if (N == 0) return std::nullopt;

    EdgeLabeledGraph g2;
    g2.n = n;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Int w = -f[i - 1] * f[j - 1];
            if (w > 0) g2.e[{i, j}] = Rational(w);
        }
    DivisorClass W = Z * Rational(2) - keel_graph_class(g2) * Rational(1, N);
    W.prune();
    return W;
}

DivisorClass pullback_glue(const DivisorClass& D, int h) {
    if (h < 1 || h > D.g) throw Error(Errc::InvalidInput, "need 0 < h <= g");
    int g = D.g - h, n = D.n;
    DivisorClass R(g, n);
    if (g > 0) {
        R.lambda = D.lambda;
        R.delta_irr = D.delta_irr;
    }
    for (int j = 1; j < n; ++j) R.psi[j] = D.psi[j];
    Mask top = full_mask(n);
    for (const auto& [b, c] : D.delta) {
        int i = b.i;
        Mask S = b.S;
        if (!(S & 1)) {  // move marking 1 into S
            i = D.g - i;
            S = top & ~S;
        }
        if (i < h) continue;
        if (i == h && S == 1) {
            R.psi[0] -= c;
            continue;
        }
        R.add_delta(i - h, S, c);
    }
    R.prune();
    return R;
}

RestrictionResult zr_restriction(const std::vector<int>& d, Mask S) {
    int m = 0;
    check_thmI_shape(0, d, m);
    int n = (int)d.size();
    if (S & ~full_mask(n)) throw Error(Errc::IndexOutOfRange, "subset out of range");

    long long dS = d_of(d, S);
    int sminus = count_if_mask(d, S, is_pole);
    Mask Sc = full_mask(n) & ~S;

    RestrictionResult res;
    // Side carrying S: t = s^- - 2, head n_{S,t} = -s^- - d_S.
    {
        RestrictionPiece& p = res.side_S;
        int t = sminus - 2;
        if (t < 0) {
            p.empty = true;
        } else {
            long long head = -2 - t - dS;
            p.kappa.push_back((int)head);
            for (int j = 0; j < n; ++j)
                if (S >> j & 1) p.kappa.push_back(d[j]);
            p.kappa.insert(p.kappa.end(), t, 1);
            if (head == -1) p.empty = true;
        }
    }
    // Side carrying S^c: head -n_{S,s^- - 1} - 2, padding m - s^- - 1 ones.
    {
        RestrictionPiece& p = res.side_Sc;
        int t = m - sminus - 1;
        if (t < 0) {
            p.empty = true;
        } else {
            long long head = dS + sminus - 1;
            p.kappa.push_back((int)head);
            for (int j = 0; j < n; ++j)
                if (Sc >> j & 1) p.kappa.push_back(d[j]);
            p.kappa.insert(p.kappa.end(), t, 1);
            if (head == -1) p.empty = true;
        }
    }
    return res;
}

std::vector<std::string> complement_consistency_report(int g, const std::vector<int>& d,
                                                       bool theorem_two) {
    std::vector<std::string> report;
    int n = (int)d.size();
    Mask top = full_mask(n);
    auto coeff = [&](int i, Mask S) -> Int {
        if (!theorem_two) {
            Int v = Int(d_of(d, S)) + count_if_mask(d, S, is_pole) - i;
            return binom2(iabs(v) + 1);
        }
        Mask Sc = top & ~S;
        bool splitS = count_if_mask(d, S, is_simple) > 0;
        bool splitSc = count_if_mask(d, Sc, is_simple) > 0;
        if (!splitS) {
            Int v = Int(d_of(d, S)) + count_if_mask(d, S, is_pole) - i;
            return binom2(iabs(v) + 1);
        }
        if (!splitSc) {
            Int v = Int(d_of(d, Sc)) + count_if_mask(d, Sc, is_pole) - (g - i);
            return binom2(iabs(v) + 1);
        }
        Int v = Int(d_of(d, S)) + count_if_mask(d, S, is_nonsimple) - i + 1;
        return binom2(v);
    };
    for (const auto& b : all_boundary_indices(g, n)) {
        Int a = coeff(b.i, b.S);
        Int c = coeff(g - b.i, top & ~b.S);
        if (a != c) {
            std::ostringstream os;
            os << "delta_{" << b.i << ":S=" << b.S << "}: " << a.str() << " vs complement "
               << c.str();
            report.push_back(os.str());
        }
    }
    return report;
}

}  // namespace strata
