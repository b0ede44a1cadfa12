/**
 * @file grassgeo.hpp
 * @brief Grassmannian and Schubert-divisor geometry over F_q at desk scale:
 *        point enumeration, Plucker images, strata, lines, maximal linear
 *        pieces and their intersection combinatorics.
 *
 * Subspaces are kept in canonical form as full-rank RREF basis matrices;
 * equality of subspaces is equality of those matrices.  Point lists are
 * sorted by (pivot columns, entry codes), and that order is part of the
 * external contract: generator-matrix columns downstream inherit it.
 */

#ifndef GRC_GRASSGEO_HPP
#define GRC_GRASSGEO_HPP

#include <map>
#include <set>

#include "grc/exterior.hpp"

namespace grc {

/// A point of G_r(F_q^m): canonical RREF basis matrix of full rank.
class Subspace {
  public:
    Subspace() = default;

    /// Canonicalize the row space of `rows` (rank may be below rows()).
    static Subspace from_rows(const Matrix& rows) {
        RrefResult r = rref(rows);
        Subspace s;
        s.basis_ = Matrix(rows.field(), r.rank, rows.cols());
        for (int i = 0; i < r.rank; ++i)
            for (int j = 0; j < rows.cols(); ++j) s.basis_.at(i, j) = r.reduced.at(i, j);
        s.pivots_ = r.pivots;
        return s;
    }

    int dim() const { return basis_.rows(); }
    int ambient() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Sort key: pivot columns first, then entry codes row-major.
    std::vector<long> key() const {
        std::vector<long> k;
        k.reserve(pivots_.size() + static_cast<size_t>(basis_.rows()) * basis_.cols());
        for (int p : pivots_) k.push_back(p);
        for (int i = 0; i < basis_.rows(); ++i)
            for (int j = 0; j < basis_.cols(); ++j) k.push_back(basis_.at(i, j).code());
        return k;
    }

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    bool operator<(const Subspace& o) const { return key() < o.key(); }

    bool contains(const Subspace& inner) const {
        Matrix stacked(basis_.field(), dim() + inner.dim(), ambient());
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < ambient(); ++j) stacked.at(i, j) = basis_.at(i, j);
        for (int i = 0; i < inner.dim(); ++i)
            for (int j = 0; j < ambient(); ++j) stacked.at(dim() + i, j) = inner.basis().at(i, j);
        return rank(stacked) == dim();
    }

    /// One basis row per line, rows ';'-separated (entry format per gf).
    std::string to_string() const { return basis_.to_string(); }

  private:
    Matrix basis_;
    std::vector<int> pivots_;
};

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    Matrix stacked(a.basis().field(), a.dim() + b.dim(), a.ambient());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.ambient(); ++j) stacked.at(i, j) = a.basis().at(i, j);
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < a.ambient(); ++j) stacked.at(a.dim() + i, j) = b.basis().at(i, j);
    return Subspace::from_rows(stacked);
}

/// Zassenhaus: row-reduce [A|A; B|0]; rows with vanishing left half carry a
/// basis of the intersection in their right half.
inline Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
    const Fq& f = a.basis().field();
    const int m = a.ambient();
    Matrix z(f, a.dim() + b.dim(), 2 * m);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < m; ++j) {
            z.at(i, j) = a.basis().at(i, j);
            z.at(i, m + j) = a.basis().at(i, j);
        }
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < m; ++j) z.at(a.dim() + i, j) = b.basis().at(i, j);
    RrefResult r = rref(z);
    Matrix rows(f, a.dim() + b.dim(), m);
    int count = 0;
    for (int i = 0; i < r.rank; ++i) {
        bool left_zero = true;
        for (int j = 0; j < m && left_zero; ++j) left_zero = r.reduced.at(i, j).is_zero();
        if (!left_zero) continue;
        for (int j = 0; j < m; ++j) rows.at(count, j) = r.reduced.at(i, m + j);
        ++count;
    }
    Matrix trimmed(f, count, m);
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < m; ++j) trimmed.at(i, j) = rows.at(i, j);
    return Subspace::from_rows(trimmed);
}

/// All points of G_r(F_q^m) via RREF enumeration, sorted canonically.
/// No Grassmannian-range restriction here; r = 0..m are all legal.
inline std::vector<Subspace> enumerate_subspaces(const Fq& f, int r, int m) {
    if (r < 0 || r > m) throw std::invalid_argument("enumerate_subspaces: need 0 <= r <= m");
    std::vector<Subspace> out;
    const long q = f.size();
    for (const MultiIndex& piv : multi_index_list(r, m)) {
        // free slots: entries right of the row's pivot, outside pivot columns
        std::vector<std::pair<int, int>> free_slots;
        for (int i = 0; i < r; ++i)
            for (int j = piv[i]; j < m; ++j) {
                bool is_pivot = false;
                for (int t = 0; t < r; ++t)
                    if (piv[t] - 1 == j) is_pivot = true;
                if (!is_pivot) free_slots.push_back({i, j});
            }
        std::vector<long> vals(free_slots.size(), 0);
        while (true) {
            Matrix b(f, r, m);
            for (int i = 0; i < r; ++i) b.at(i, piv[i] - 1) = f.one();
            for (size_t t = 0; t < free_slots.size(); ++t)
                b.at(free_slots[t].first, free_slots[t].second) = f.from_code(vals[t]);
            out.push_back(Subspace::from_rows(b));
            size_t t = 0;
            while (t < vals.size() && vals[t] == q - 1) vals[t++] = 0;
            if (t == vals.size()) break;
            ++vals[t];
        }
        if (free_slots.empty() && r == 0) break;  // single empty subspace
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Plucker image: maximal minors of the basis in canonical multi-index
/// order, scaled so the first nonzero coordinate is 1.
inline ExteriorVector plucker(const Subspace& gamma) {
    const Fq& f = gamma.basis().field();
    const int l = gamma.dim(), m = gamma.ambient();
    ExteriorVector v(f, l, m);
    MultiIndex rows(l);
    for (int i = 0; i < l; ++i) rows[i] = i + 1;
    const auto cols = multi_index_list(l, m);
    for (size_t j = 0; j < cols.size(); ++j)
        v.coords[j] = detail::minor_det(gamma.basis(), rows, cols[j]);
    if (v.is_zero()) throw std::invalid_argument("plucker: rank-deficient basis");
    return v.normalized();
}

/// dim(gamma n span(e_1..e_{m-l})): the stratum of gamma in the cell
/// decomposition induced by the distinguished coordinate flag.
inline int stratum(const Subspace& gamma, int l, int m) {
    if (gamma.dim() != l) throw std::invalid_argument("stratum: wrong subspace dimension");
    const Fq& f = gamma.basis().field();
    Matrix v(f, m - l, m);
    for (int i = 0; i < m - l; ++i) v.at(i, i) = f.one();
    Subspace vm = Subspace::from_rows(v);
    return gamma.dim() + vm.dim() - subspace_sum(gamma, vm).dim();
}

struct GrassLine {
    Subspace beta;   // dimension l-1
    Subspace delta;  // dimension l+1, containing beta
};

enum class PieceKind {
    Through,            // all gamma containing the anchor (anchor dim l-1)
    Inside,             // all gamma inside the anchor (anchor dim l+1)
    ThroughRestricted,  // gamma with beta c gamma c beta + V_{m-l}
    InsideRestricted,   // gamma with (delta n V_{m-l}) c gamma c delta
};

struct LinearPiece {
    PieceKind kind;
    Subspace anchor;
    std::vector<int> points;  // sorted indices into the point list
    int proj_dim;             // projective dimension of the piece
};

/**
 * Enumerated Grassmannian with index lookups, the divisor/big-cell split
 * and the line/piece machinery built on top of it.  The coordinate flag
 * subspace is span(e_1, ..., e_{m-l}).
 */
class Grassmannian {
  public:
    Grassmannian(const Fq& f, int l, int m) : f_(&f), l_(l), m_(m) {
        if (!(1 < l && l < m)) throw std::invalid_argument("Grassmannian: need 1 < l < m");
        points_ = enumerate_subspaces(f, l, m);
        for (size_t i = 0; i < points_.size(); ++i) {
            index_[points_[i].key()] = static_cast<int>(i);
            ExteriorVector p = plucker(points_[i]);
            plucker_.push_back(p);
            plucker_index_[coords_key(p.coords)] = static_cast<int>(i);
            strata_.push_back(stratum(points_[i], l, m));
        }
    }

    const Fq& field() const { return *f_; }
    int l() const { return l_; }
    int m() const { return m_; }
    int num_points() const { return static_cast<int>(points_.size()); }

    const std::vector<Subspace>& points() const { return points_; }
    const Subspace& point(int i) const { return points_[i]; }
    const ExteriorVector& plucker_of(int i) const { return plucker_[i]; }
    int stratum_of(int i) const { return strata_[i]; }

    int index_of(const Subspace& s) const {
        auto it = index_.find(s.key());
        if (it == index_.end()) throw std::invalid_argument("Grassmannian: not a point");
        return it->second;
    }

    /// Index of the point whose Plucker image is proportional to `v`,
    /// or -1 when `v` is not decomposable.
    int plucker_lookup(const ExteriorVector& v) const {
        if (v.is_zero()) throw std::invalid_argument("plucker_lookup: zero vector");
        auto it = plucker_index_.find(coords_key(v.normalized().coords));
        return it == plucker_index_.end() ? -1 : it->second;
    }

    /// Point indices of the hyperplane section p_{I_0} = 0 (the divisor).
    std::vector<int> schubert_point_indices() const {
        std::vector<int> out;
        for (int i = 0; i < num_points(); ++i)
            if (strata_[i] > 0) out.push_back(i);
        return out;
    }

    std::vector<int> big_cell_indices() const {
        std::vector<int> out;
        for (int i = 0; i < num_points(); ++i)
            if (strata_[i] == 0) out.push_back(i);
        return out;
    }

    std::vector<int> stratum_indices(int i) const {
        std::vector<int> out;
        for (int j = 0; j < num_points(); ++j)
            if (strata_[j] == i) out.push_back(j);
        return out;
    }

    /// Big-cell points in the order of their defining l x (m-l) matrices
    /// (entries read row-major, first entry most significant).
    std::vector<Subspace> big_cell_points() const {
        std::vector<Subspace> out;
        const int a = l_ * (m_ - l_);
        std::vector<long> vals(a, 0);
        const long q = f_->size();
        while (true) {
            Matrix b(*f_, l_, m_);
            for (int i = 0; i < l_; ++i) {
                for (int j = 0; j < m_ - l_; ++j) b.at(i, j) = f_->from_code(vals[i * (m_ - l_) + j]);
                b.at(i, m_ - l_ + i) = f_->one();
            }
            out.push_back(Subspace::from_rows(b));
            int t = a - 1;
            while (t >= 0 && vals[t] == q - 1) vals[t--] = 0;
            if (t < 0) break;
            ++vals[t];
        }
        return out;
    }

    const Subspace& flag_subspace() const {
        if (!flag_) {
            Matrix v(*f_, m_ - l_, m_);
            for (int i = 0; i < m_ - l_; ++i) v.at(i, i) = f_->one();
            flag_ = Subspace::from_rows(v);
        }
        return *flag_;
    }

    /// All lines: one per incident (beta, delta) pair.
    std::vector<GrassLine> all_lines() const {
        std::vector<GrassLine> out;
        const auto betas = enumerate_subspaces(*f_, l_ - 1, m_);
        const auto deltas = enumerate_subspaces(*f_, l_ + 1, m_);
        for (const Subspace& beta : betas)
            for (const Subspace& delta : deltas)
                if (delta.contains(beta)) out.push_back({beta, delta});
        return out;
    }

    /// The q+1 points {gamma : beta c gamma c delta}, as indices.
    std::vector<int> line_points(const GrassLine& line) const {
        if (!line.delta.contains(line.beta))
            throw std::invalid_argument("line_points: non-incident pair");
        return sandwich_points(line.beta, line.delta);
    }

    /// Points gamma with inner c gamma c outer and dim(gamma) = l, via
    /// subspaces of the quotient outer/inner lifted along a complement.
    std::vector<int> sandwich_points(const Subspace& inner, const Subspace& outer) const {
        if (!outer.contains(inner))
            throw std::invalid_argument("sandwich_points: inner not contained in outer");
        const int r = inner.dim(), d = outer.dim();
        if (l_ < r || l_ > d) return {};
        // complement rows extending inner inside outer
        std::vector<int> comp_rows;
        Matrix acc = inner.basis();
        for (int i = 0; i < d; ++i) {
            Matrix trial(*f_, acc.rows() + 1, m_);
            for (int a = 0; a < acc.rows(); ++a)
                for (int j = 0; j < m_; ++j) trial.at(a, j) = acc.at(a, j);
            for (int j = 0; j < m_; ++j) trial.at(acc.rows(), j) = outer.basis().at(i, j);
            if (rank(trial) > acc.rows()) {
                comp_rows.push_back(i);
                acc = trial;
            }
        }
        std::vector<int> out;
        for (const Subspace& qsub : enumerate_subspaces(*f_, l_ - r, d - r)) {
            Matrix ext(*f_, l_, m_);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < m_; ++j) ext.at(i, j) = inner.basis().at(i, j);
            for (int i = 0; i < l_ - r; ++i)
                for (int j = 0; j < m_; ++j) {
                    FqElem v = f_->zero();
                    for (int t = 0; t < d - r; ++t)
                        v = v + qsub.basis().at(i, t) * outer.basis().at(comp_rows[t], j);
                    ext.at(r + i, j) = v;
                }
            out.push_back(index_of(Subspace::from_rows(ext)));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<int> pi_beta(const Subspace& beta) const {
        std::vector<int> out;
        for (int i = 0; i < num_points(); ++i)
            if (points_[i].contains(beta)) out.push_back(i);
        return out;
    }

    std::vector<int> pi_delta(const Subspace& delta) const {
        std::vector<int> out;
        for (int i = 0; i < num_points(); ++i)
            if (delta.contains(points_[i])) out.push_back(i);
        return out;
    }

    /// pi_beta restricted to the divisor: beta c gamma c beta + V_{m-l}.
    std::vector<int> pi_beta_restricted(const Subspace& beta) const {
        return sandwich_points(beta, subspace_sum(beta, flag_subspace()));
    }

    /// pi_delta restricted to the divisor: (delta n V_{m-l}) c gamma c delta.
    std::vector<int> pi_delta_restricted(const Subspace& delta) const {
        return sandwich_intersection_points(delta);
    }

    /// Maximal linear pieces of the whole Grassmannian.
    std::vector<LinearPiece> max_linear_grassmannian() const {
        std::vector<LinearPiece> out;
        for (const Subspace& beta : enumerate_subspaces(*f_, l_ - 1, m_))
            out.push_back({PieceKind::Through, beta, pi_beta(beta), m_ - l_});
        for (const Subspace& delta : enumerate_subspaces(*f_, l_ + 1, m_))
            out.push_back({PieceKind::Inside, delta, pi_delta(delta), l_});
        return out;
    }

    /// Maximal linear pieces of the divisor: the four families with their
    /// flag-intersection constraints.
    std::vector<LinearPiece> max_linear_schubert() const {
        std::vector<LinearPiece> out;
        const Subspace& flag = flag_subspace();
        for (const Subspace& beta : enumerate_subspaces(*f_, l_ - 1, m_)) {
            const int d = subspace_intersection(beta, flag).dim();
            if (d > 0)
                out.push_back({PieceKind::Through, beta, pi_beta(beta), m_ - l_});
            else
                out.push_back(
                    {PieceKind::ThroughRestricted, beta, pi_beta_restricted(beta), m_ - l_ - 1});
        }
        for (const Subspace& delta : enumerate_subspaces(*f_, l_ + 1, m_)) {
            const int d = subspace_intersection(delta, flag).dim();
            if (d > 1)
                out.push_back({PieceKind::Inside, delta, pi_delta(delta), l_});
            else if (d == 1)
                out.push_back(
                    {PieceKind::InsideRestricted, delta, pi_delta_restricted(delta), l_ - 1});
            // d == 0 cannot happen: delta has dimension l+1 > codim of the flag
        }
        return out;
    }

    /// Maximal linear pieces of the middle stratum W_1.
    std::vector<LinearPiece> max_linear_w1() const {
        std::vector<LinearPiece> out;
        const Subspace& flag = flag_subspace();
        for (const Subspace& beta : enumerate_subspaces(*f_, l_ - 1, m_))
            if (subspace_intersection(beta, flag).dim() == 0)
                out.push_back(
                    {PieceKind::ThroughRestricted, beta, pi_beta_restricted(beta), m_ - l_ - 1});
        for (const Subspace& delta : enumerate_subspaces(*f_, l_ + 1, m_))
            if (subspace_intersection(delta, flag).dim() == 1)
                out.push_back(
                    {PieceKind::InsideRestricted, delta, pi_delta_restricted(delta), l_ - 1});
        return out;
    }

    /**
     * The trace on the divisor of the pencil of lines through a big-cell
     * point: union of the restricted through-pieces over beta c gamma,
     * equal to the union of the restricted inside-pieces over delta )
     * gamma.  Both unions are computed, checked equal and checked disjoint.
     */
    std::vector<int> delta_locus(const Subspace& gamma) const {
        if (stratum(gamma, l_, m_) != 0)
            throw std::invalid_argument("delta_locus: point not in the big cell");
        std::vector<int> by_beta, by_delta;
        size_t beta_pieces = 0, delta_pieces = 0;
        for (const Subspace& beta : enumerate_subspaces(*f_, l_ - 1, m_)) {
            if (!gamma.contains(beta)) continue;
            auto pts = pi_beta_restricted(beta);
            by_beta.insert(by_beta.end(), pts.begin(), pts.end());
            ++beta_pieces;
        }
        for (const Subspace& delta : enumerate_subspaces(*f_, l_ + 1, m_)) {
            if (!delta.contains(gamma)) continue;
            auto pts = pi_delta_restricted(delta);
            by_delta.insert(by_delta.end(), pts.begin(), pts.end());
            ++delta_pieces;
        }
        std::sort(by_beta.begin(), by_beta.end());
        std::sort(by_delta.begin(), by_delta.end());
        if (std::adjacent_find(by_beta.begin(), by_beta.end()) != by_beta.end() ||
            std::adjacent_find(by_delta.begin(), by_delta.end()) != by_delta.end())
            throw std::logic_error("delta_locus: unions are not disjoint");
        if (by_beta != by_delta) throw std::logic_error("delta_locus: unions disagree");
        (void)beta_pieces;
        (void)delta_pieces;
        return by_beta;
    }

    /// Projective points of the span of the given coordinate vectors, as
    /// Grassmannian indices; empty optional when the span leaves the
    /// point set (some projective point is not on the Grassmannian).
    std::vector<std::vector<FqElem>> span_projective_points(
        const std::vector<std::vector<FqElem>>& span_basis) const {
        const long q = f_->size();
        const int d = static_cast<int>(span_basis.size());
        const int k = static_cast<int>(span_basis.front().size());
        std::vector<std::vector<FqElem>> out;
        // normalized coefficient patterns: first nonzero coefficient is 1
        std::vector<long> code(d, 0);
        for (int lead = d - 1; lead >= 0; --lead) {
            std::vector<long> tail(lead, 0);
            long total = 1;
            for (int i = 0; i < lead; ++i) total *= q;
            for (long t = 0; t < total; ++t) {
                long c = t;
                for (int i = 0; i < lead; ++i) {
                    tail[i] = c % q;
                    c /= q;
                }
                std::vector<FqElem> v(k, f_->zero());
                for (int j = 0; j < k; ++j) v[j] = span_basis[lead][j];
                for (int i = 0; i < lead; ++i) {
                    if (!tail[i]) continue;
                    const FqElem coeff = f_->from_code(tail[i]);
                    for (int j = 0; j < k; ++j) v[j] = v[j] + coeff * span_basis[i][j];
                }
                out.push_back(std::move(v));
            }
        }
        return out;
    }

  private:
    std::vector<int> sandwich_intersection_points(const Subspace& delta) const {
        return sandwich_points(subspace_intersection(delta, flag_subspace()), delta);
    }

    static std::vector<long> coords_key(const std::vector<FqElem>& coords) {
        std::vector<long> k;
        k.reserve(coords.size());
        for (const FqElem& c : coords) k.push_back(c.code());
        return k;
    }

    const Fq* f_;
    int l_, m_;
    std::vector<Subspace> points_;
    std::vector<ExteriorVector> plucker_;
    std::vector<int> strata_;
    std::map<std::vector<long>, int> index_;
    std::map<std::vector<long>, int> plucker_index_;
    mutable std::optional<Subspace> flag_;
};

/// Spec-facing wrapper with the Grassmannian range restriction.
inline std::vector<Subspace> enumerate_grassmannian(const Fq& f, int l, int m) {
    if (!(1 < l && l < m))
        throw std::invalid_argument("enumerate_grassmannian: need 1 < l < m");
    return enumerate_subspaces(f, l, m);
}

/// Decomposability test by scanning the enumerated Grassmannian.
inline std::optional<Subspace> is_decomposable(const Grassmannian& g, const ExteriorVector& v) {
    int idx = g.plucker_lookup(v);
    if (idx < 0) return std::nullopt;
    return g.point(idx);
}

/**
 * Brute-force maximal-linear-subspace search inside a point set: seed with
 * single points, grow each subspace by any point of the set whose span
 * with the current piece stays inside the set, then keep the unextendable
 * results.  Independent of the family classification it is used to check.
 */
inline std::vector<std::vector<int>> maximal_linear_subspaces_bruteforce(
    const Grassmannian& g, const std::vector<int>& point_set) {
    const Fq& f = g.field();
    std::set<int> sset(point_set.begin(), point_set.end());

    struct Piece {
        Matrix span;             // RREF basis of the linear span in F_q^k
        std::vector<int> points; // sorted point indices
    };

    auto points_of_span = [&](const Matrix& span) -> std::optional<std::vector<int>> {
        std::vector<std::vector<FqElem>> basis;
        for (int i = 0; i < span.rows(); ++i) {
            std::vector<FqElem> row;
            for (int j = 0; j < span.cols(); ++j) row.push_back(span.at(i, j));
            basis.push_back(std::move(row));
        }
        std::vector<int> pts;
        for (const auto& v : g.span_projective_points(basis)) {
            ExteriorVector ev(f, g.l(), g.m());
            ev.coords = v;
            if (ev.is_zero()) continue;
            int idx = g.plucker_lookup(ev);
            if (idx < 0 || !sset.count(idx)) return std::nullopt;
            pts.push_back(idx);
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        return pts;
    };

    std::map<std::vector<long>, Piece> frontier;
    auto span_key = [](const Matrix& span) {
        std::vector<long> k{span.rows()};
        for (int i = 0; i < span.rows(); ++i)
            for (int j = 0; j < span.cols(); ++j) k.push_back(span.at(i, j).code());
        return k;
    };

    for (int p : point_set) {
        Matrix span(f, 1, static_cast<int>(g.plucker_of(p).coords.size()));
        for (size_t j = 0; j < g.plucker_of(p).coords.size(); ++j)
            span.at(0, static_cast<int>(j)) = g.plucker_of(p).coords[j];
        span = Subspace::from_rows(span).basis();
        frontier[span_key(span)] = Piece{span, {p}};
    }

    std::vector<std::vector<int>> maximal;
    std::set<std::vector<int>> emitted;
    while (!frontier.empty()) {
        std::map<std::vector<long>, Piece> next;
        for (const auto& [key, piece] : frontier) {
            bool extended = false;
            for (int p : point_set) {
                if (std::binary_search(piece.points.begin(), piece.points.end(), p)) continue;
                Matrix ext(f, piece.span.rows() + 1, piece.span.cols());
                for (int i = 0; i < piece.span.rows(); ++i)
                    for (int j = 0; j < piece.span.cols(); ++j) ext.at(i, j) = piece.span.at(i, j);
                for (int j = 0; j < piece.span.cols(); ++j)
                    ext.at(piece.span.rows(), j) = g.plucker_of(p).coords[j];
                Subspace s = Subspace::from_rows(ext);
                if (s.dim() != piece.span.rows() + 1) continue;
                auto pts = points_of_span(s.basis());
                if (!pts) continue;
                extended = true;
                auto k2 = span_key(s.basis());
                if (!next.count(k2)) next[k2] = Piece{s.basis(), *pts};
            }
            if (!extended && emitted.insert(piece.points).second) maximal.push_back(piece.points);
        }
        frontier = std::move(next);
    }
    // drop pieces contained in a larger one (possible when a small piece
    // could not grow through a clean chain but sits inside a bigger span)
    std::vector<std::vector<int>> out;
    for (size_t i = 0; i < maximal.size(); ++i) {
        bool contained = false;
        for (size_t j = 0; j < maximal.size() && !contained; ++j) {
            if (i == j || maximal[j].size() <= maximal[i].size()) continue;
            contained = std::includes(maximal[j].begin(), maximal[j].end(), maximal[i].begin(),
                                      maximal[i].end());
        }
        if (!contained) out.push_back(maximal[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace grc

#endif  // GRC_GRASSGEO_HPP
