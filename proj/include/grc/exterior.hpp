/**
 * @file exterior.hpp
 * @brief Multi-index bookkeeping and exterior-algebra operators over F_q:
 *        compound matrices, Hodge star, the basis-reversal twist, wedge and
 *        interior products.
 *
 * The basis of the grade-l space is {e_I} for I running over the strictly
 * increasing l-tuples in [1, m], always in lexicographic order.  Every
 * matrix built here is expressed in that basis convention.
 */

#ifndef GRC_EXTERIOR_HPP
#define GRC_EXTERIOR_HPP

#include <algorithm>

#include "grc/linalg.hpp"

namespace grc {

/// Strictly increasing tuple of entries in [1, m].
using MultiIndex = std::vector<int>;

inline uint128 binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    uint128 r = 1;
    for (int i = 0; i < k; ++i) r = checked_mul(r, static_cast<uint128>(n - i)) / (i + 1);
    return r;
}

/// All C(m,l) multi-indices in lexicographic order; l = 0 yields [()].
inline std::vector<MultiIndex> multi_index_list(int l, int m) {
    if (l < 0 || l > m) throw std::invalid_argument("multi_index_list: need 0 <= l <= m");
    std::vector<MultiIndex> out;
    MultiIndex cur(l);
    for (int i = 0; i < l; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = l - 1;
        while (i >= 0 && cur[i] == m - l + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < l; ++j) cur[j] = cur[j - 1] + 1;
        if (l == 0) break;
    }
    return out;
}

/// Position of I in the lexicographic list (combinatorial ranking).
inline int multi_index_rank(const MultiIndex& I, int m) {
    const int l = static_cast<int>(I.size());
    long r = 0;
    int prev = 0;
    for (int i = 0; i < l; ++i) {
        for (int v = prev + 1; v < I[i]; ++v)
            r += static_cast<long>(binomial(m - v, l - i - 1));
        prev = I[i];
    }
    return static_cast<int>(r);
}

inline MultiIndex complement_index(const MultiIndex& I, int m) {
    MultiIndex c;
    size_t k = 0;
    for (int v = 1; v <= m; ++v) {
        if (k < I.size() && I[k] == v)
            ++k;
        else
            c.push_back(v);
    }
    return c;
}

/// Sign of the permutation (1..m) -> (I, I^c), by inversion count.
inline int sign_complement(const MultiIndex& I, int m) {
    MultiIndex seq = I;
    MultiIndex c = complement_index(I, m);
    seq.insert(seq.end(), c.begin(), c.end());
    int inversions = 0;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
}

inline FqElem sign_element(const Fq& f, int sign) {
    return sign >= 0 ? f.one() : -f.one();
}

/// Coordinate vector over the canonical basis of the grade-l component.
struct ExteriorVector {
    int l = 0;
    int m = 0;
    std::vector<FqElem> coords;  // length C(m, l), lexicographic order

    ExteriorVector() = default;
    ExteriorVector(const Fq& f, int l_, int m_)
        : l(l_), m(m_), coords(static_cast<size_t>(binomial(m_, l_)), f.zero()) {}

    const Fq& field() const { return coords.front().field(); }

    static ExteriorVector basis(const Fq& f, const MultiIndex& I, int m) {
        ExteriorVector v(f, static_cast<int>(I.size()), m);
        v.coords[multi_index_rank(I, m)] = f.one();
        return v;
    }

    bool is_zero() const {
        for (const FqElem& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }

    bool operator==(const ExteriorVector& o) const {
        return l == o.l && m == o.m && coords == o.coords;
    }

    ExteriorVector operator+(const ExteriorVector& o) const {
        if (l != o.l || m != o.m) throw std::invalid_argument("ExteriorVector: grade mismatch");
        ExteriorVector r(*this);
        for (size_t i = 0; i < coords.size(); ++i) r.coords[i] = r.coords[i] + o.coords[i];
        return r;
    }

    ExteriorVector scaled(const FqElem& c) const {
        ExteriorVector r(*this);
        for (auto& x : r.coords) x = x * c;
        return r;
    }

    /// Scale so the first nonzero coordinate is 1; zero vector unchanged.
    ExteriorVector normalized() const {
        for (const FqElem& c : coords)
            if (!c.is_zero()) return scaled(c.inverse());
        return *this;
    }

    /// "l=..,m=..,q=.." header plus the coordinate list.
    std::string to_string() const {
        std::string s = "l=" + std::to_string(l) + ",m=" + std::to_string(m) +
                        ",q=" + std::to_string(field().size()) + ":";
        for (size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ",";
            s += coords[i].to_string();
        }
        return s;
    }
};

namespace detail {

inline FqElem minor_det(const Matrix& a, const MultiIndex& rows, const MultiIndex& cols) {
    const int l = static_cast<int>(rows.size());
    Matrix sub(a.field(), l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) sub.at(i, j) = a.at(rows[i] - 1, cols[j] - 1);
    return det(sub);
}

}  // namespace detail

/**
 * l-th compound matrix: entry (I, J) is the l x l minor of A on rows I and
 * columns J.  Functorial: compound(AB) = compound(A) compound(B).
 */
inline Matrix compound_matrix(const Matrix& a, int l) {
    if (a.rows() != a.cols()) throw std::invalid_argument("compound_matrix: matrix not square");
    const int m = a.rows();
    if (l < 1 || l > m) throw std::invalid_argument("compound_matrix: need 1 <= l <= m");
    const auto idx = multi_index_list(l, m);
    const int k = static_cast<int>(idx.size());
    Matrix c(a.field(), k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) c.at(i, j) = detail::minor_det(a, idx[i], idx[j]);
    return c;
}

/**
 * Matrix of the Hodge star on grade l in ambient dimension m: the signed
 * basis bijection e_I -> sgn(I I^c) e_{I^c}, written in the canonical bases
 * of the grade-l (domain) and grade-(m-l) (codomain) components.  Squares
 * to (-1)^{l(m-l)} once composed with the star on grade m-l.
 */
inline Matrix hodge_star_matrix(const Fq& f, int l, int m) {
    if (l < 1 || l > m - 1) throw std::invalid_argument("hodge_star_matrix: need 1 <= l <= m-1");
    const auto dom = multi_index_list(l, m);
    const int k = static_cast<int>(dom.size());
    Matrix s(f, k, k);
    for (int j = 0; j < k; ++j) {
        const MultiIndex comp = complement_index(dom[j], m);
        s.at(multi_index_rank(comp, m), j) = sign_element(f, sign_complement(dom[j], m));
    }
    return s;
}

/// The involutive variant (compound of the basis reversal) o (Hodge star),
/// defined for m = 2l; squares to the identity on the nose.
inline Matrix twisted_hodge_star(const Fq& f, int l) {
    const int m = 2 * l;
    return compound_matrix(reversal_matrix(f, m), l) * hodge_star_matrix(f, l, m);
}

/// Wedge product of grade-r and grade-s vectors (bilinear extension of
/// e_I ^ e_J = sgn e_{I u J}).
inline ExteriorVector wedge(const ExteriorVector& u, const ExteriorVector& v) {
    if (u.m != v.m) throw std::invalid_argument("wedge: ambient dimension mismatch");
    if (u.l + v.l > u.m) throw std::invalid_argument("wedge: grade overflow");
    const Fq& f = u.field();
    ExteriorVector r(f, u.l + v.l, u.m);
    const auto ui = multi_index_list(u.l, u.m);
    const auto vi = multi_index_list(v.l, v.m);
    for (size_t a = 0; a < ui.size(); ++a) {
        if (u.coords[a].is_zero()) continue;
        for (size_t b = 0; b < vi.size(); ++b) {
            if (v.coords[b].is_zero()) continue;
            // merge, tracking the parity of the interleaving
            MultiIndex merged;
            merged.reserve(ui[a].size() + vi[b].size());
            size_t i = 0, j = 0;
            int inversions = 0;
            bool zero = false;
            while (i < ui[a].size() || j < vi[b].size()) {
                if (j == vi[b].size() || (i < ui[a].size() && ui[a][i] < vi[b][j])) {
                    merged.push_back(ui[a][i++]);
                } else if (i == ui[a].size() || vi[b][j] < ui[a][i]) {
                    inversions += static_cast<int>(ui[a].size() - i);
                    merged.push_back(vi[b][j++]);
                } else {
                    zero = true;  // repeated factor
                    break;
                }
            }
            if (zero) continue;
            const int rank = multi_index_rank(merged, u.m);
            FqElem term = u.coords[a] * v.coords[b];
            if (inversions % 2) term = -term;
            r.coords[rank] = r.coords[rank] + term;
        }
    }
    return r;
}

/**
 * Interior multiplication by the covector with coefficients `omega` over
 * the dual basis: the contraction satisfying <nu, i_w xi> = <w ^ nu, xi>.
 */
inline ExteriorVector interior_mult(const std::vector<FqElem>& omega, const ExteriorVector& xi) {
    if (xi.l < 1) throw std::invalid_argument("interior_mult: grade must be >= 1");
    if (static_cast<int>(omega.size()) != xi.m)
        throw std::invalid_argument("interior_mult: covector length mismatch");
    const Fq& f = xi.field();
    ExteriorVector r(f, xi.l - 1, xi.m);
    const auto idx = multi_index_list(xi.l, xi.m);
    for (size_t a = 0; a < idx.size(); ++a) {
        if (xi.coords[a].is_zero()) continue;
        for (size_t pos = 0; pos < idx[a].size(); ++pos) {
            const int i = idx[a][pos];
            if (omega[i - 1].is_zero()) continue;
            MultiIndex rest;
            for (size_t t = 0; t < idx[a].size(); ++t)
                if (t != pos) rest.push_back(idx[a][t]);
            FqElem term = omega[i - 1] * xi.coords[a];
            if (pos % 2) term = -term;
            const int rr = multi_index_rank(rest, xi.m);
            r.coords[rr] = r.coords[rr] + term;
        }
    }
    return r;
}

inline ExteriorVector interior_mult_basis(int i, const ExteriorVector& xi) {
    std::vector<FqElem> omega(xi.m, xi.field().zero());
    omega[i - 1] = xi.field().one();
    return interior_mult(omega, xi);
}

/// Apply a matrix operator in the canonical bases; `out_grade` names the
/// grade of the result (-1 keeps the input grade, for endomorphisms).
inline ExteriorVector apply_operator(const Matrix& op, const ExteriorVector& v,
                                     int out_grade = -1) {
    ExteriorVector r = v;
    if (out_grade >= 0) r.l = out_grade;
    r.coords = op.apply(v.coords);
    if (r.coords.size() != static_cast<size_t>(binomial(r.m, r.l)))
        throw std::invalid_argument("apply_operator: grade does not match operator shape");
    return r;
}

}  // namespace grc

#endif  // GRC_EXTERIOR_HPP
