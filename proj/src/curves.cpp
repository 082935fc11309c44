#include "strata/curves.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace strata {

std::string FCurve::to_text() const {
    std::ostringstream os;
    for (int b = 0; b < 4; ++b) {
        os << (b ? "|" : "");
        auto el = mask_elements(blocks[b]);
        for (size_t k = 0; k < el.size(); ++k) os << (k ? "," : "") << el[k];
    }
    return os.str();
}

std::vector<FCurve> enumerate_fcurves(int n) {
    if (n < 4) throw Error(Errc::InvalidInput, "need at least four markings");
    if (n > 16) throw Error(Errc::InstanceTooLarge, "too many markings");
    std::vector<FCurve> out;
    // assign markings to blocks; block labels canonical by first occurrence
    std::vector<int> assign(n, 0);
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == n) {
            if (used != 4) return;
            FCurve F;
            F.n = n;
            for (int j = 0; j < n; ++j) F.blocks[assign[j]] |= Mask(1) << j;
            out.push_back(F);
            return;
        }
        for (int b = 0; b <= used && b < 4; ++b) {
            assign[pos] = b;
            self(self, pos + 1, std::max(used, b + 1));
        }
    };
    rec(rec, 0, 0);
    return out;
}

namespace {

// weight of delta_{0:S} against an F-curve: +1 when a side is a union of
// two blocks, -1 when a side is a single block (then the other is three),
// 0 when S does not respect the blocks
int fcurve_weight(const FCurve& F, Mask S) {
    int used = 0;
    Mask rest = S;
    for (Mask blk : F.blocks) {
        if ((S & blk) == blk) {
            rest &= ~blk;
            ++used;
        } else if (S & blk) {
            return 0;
        }
    }
    if (rest) return 0;
    return used == 2 ? 1 : -1;
}

Rational pair_fcurve_nf(const DivisorClass& nf, const FCurve& F) {
    Rational total(0);
    for (const auto& [b, coeff] : nf.delta) {
        int w = fcurve_weight(F, b.S);
        if (w) total += coeff * w;
    }
    return total;
}

}  // namespace

Rational pair_fcurve(const DivisorClass& c, const FCurve& F) {
    if (c.g != 0) throw Error(Errc::DimensionMismatch, "F-curve pairing needs genus 0");
    if (c.n != F.n) throw Error(Errc::DimensionMismatch, "marking counts differ");
    return pair_fcurve_nf(normal_form(c), F);
}

FnefResult is_fnef(const DivisorClass& c) {
    FnefResult r;
    DivisorClass nf = normal_form(c);
    for (const auto& F : enumerate_fcurves(c.n)) {
        if (pair_fcurve_nf(nf, F) < 0) {
            r.ok = false;
            r.violations.push_back(F);
        }
    }
    return r;
}

Rational pair_test_curve_last_point(const DivisorClass& c, int i) {
    if (c.g != 0) throw Error(Errc::DimensionMismatch, "test curves live in genus 0");
    if (i < 1 || i > c.n) throw Error(Errc::IndexOutOfRange, "marking out of range");
    Rational t = c.psi[i - 1] * (c.n - 3);
    for (int j = 1; j <= c.n; ++j) {
        if (j == i) continue;
        t += c.psi[j - 1];
        t += c.get(canonical_boundary(0, c.n, 0, mask_from_elements({i, j})));
    }
    return t;
}

Rational pair_test_curve_tail(const DivisorClass& c, int p, int q) {
    if (c.g != 0) throw Error(Errc::DimensionMismatch, "test curves live in genus 0");
    if (p == q || p < 1 || q < 1 || p > c.n || q > c.n)
        throw Error(Errc::IndexOutOfRange, "bad marking pair");
    Rational t(0);
    for (int j = 1; j <= c.n; ++j)
        if (j != p && j != q) t += c.psi[j - 1];
    t += c.get(canonical_boundary(0, c.n, 0, mask_from_elements({p, q}))) * (4 - c.n);
    for (int j = 1; j <= c.n; ++j)
        if (j != p && j != q)
            t += c.get(canonical_boundary(0, c.n, 0, mask_from_elements({p, q, j})));
    return t;
}

// ---------------------------------------------------------------------------
// nef certification

namespace {

std::string d_text(const std::vector<int>& d) {
    std::ostringstream os;
    os << "(";
    for (size_t j = 0; j < d.size(); ++j) os << (j ? "," : "") << d[j];
    os << ")";
    return os.str();
}

NefCert nef_rec(std::vector<int> d, std::map<std::vector<int>, bool>& seen,
                const std::string& path) {
    std::sort(d.begin(), d.end());
    NefCert node;
    node.d = d;
    if (auto it = seen.find(d); it != seen.end()) {
        node.status = "memo";
        return node;
    }
    int n = (int)d.size();
    if (n <= 7) {
        DivisorClass Z;
        try {
            Z = formula_ZRdivI(0, d);
        } catch (const Error& e) {
            if (e.code() == Errc::EmptyStratum) {
                node.status = "empty-leaf";
                seen[d] = true;
                return node;
            }
            throw;
        }
        if (!is_fnef(Z).ok)
            throw Error(Errc::RecursionFailure, "F-nef leaf failed at " + path + d_text(d));
        node.status = "fnef-leaf";
        seen[d] = true;
        return node;
    }

    // interior curves: the class is boundary effective
    try {
        auto W = boundary_effective_witness(d);
        if (W) {
            for (const auto& [b, c] : W->delta)
                if (c < 0)
                    throw Error(Errc::RecursionFailure,
                                "negative witness coefficient at " + path + d_text(d));
        }
    } catch (const Error& e) {
        if (e.code() == Errc::EmptyStratum) {
            node.status = "empty-leaf";
            seen[d] = true;
            return node;
        }
        throw;
    }
    node.status = "boundary-recursion";
    seen[d] = false;  // mark in progress; symmetric restrictions may revisit

    for (const auto& b : all_boundary_indices(0, n)) {
        auto r = zr_restriction(d, b.S);
        for (const auto* piece : {&r.side_S, &r.side_Sc}) {
            if (piece->empty || piece->kappa.empty()) continue;
            // recurse on the retained-marking part; padding 1s are rederived
            std::vector<int> sub;
            int head = piece->kappa[0];
            if (head != 0) sub.push_back(head);
            int npad = 0;
            for (int x : piece->kappa) npad += (x <= -2);
            npad = std::max(0, npad - 2);  // trailing simple zeros
            for (size_t j = 1; j + npad < piece->kappa.size(); ++j)
                sub.push_back(piece->kappa[j]);
            if ((int)sub.size() < 3) continue;  // nothing to certify on M_{0,<4}
            node.children.push_back(
                nef_rec(sub, seen, path + d_text(d) + " -> S=" + d_text(mask_elements(b.S)) + " "));
        }
    }
    seen[d] = true;
    return node;
}

}  // namespace

NefCert nef_certificate(const std::vector<int>& d) {
    if (d.size() > 14) throw Error(Errc::InstanceTooLarge, "signature too long");
    std::map<std::vector<int>, bool> seen;
    return nef_rec(d, seen, "");
}

}  // namespace strata
