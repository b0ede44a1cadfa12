/**
 * @file codes.hpp
 * @brief Linear codes from Grassmannian projective systems: construction,
 *        weight enumeration, automorphism membership tests, a permutation-
 *        automorphism search and a semilinear equivalence decision.
 *
 * Column order of every constructed code is the deterministic geometry
 * order from grassgeo; it is part of the external contract.  Enumeration
 * sweeps are guarded (q^k <= 2^20, permutation search n <= 24) and trip a
 * guard_error beyond desk scale.
 */

#ifndef GRC_CODES_HPP
#define GRC_CODES_HPP

#include <functional>

#include "grc/grassgeo.hpp"
#include "grc/perm.hpp"

namespace grc {

struct LinearCode {
    Matrix genmat;  // k x n, full rank, no zero column
    std::vector<std::string> col_labels;
    std::string family;  // construction tag: grassmann | affine | schubert | custom
    int l = 0, m = 0;

    int dim() const { return genmat.rows(); }
    int length() const { return genmat.cols(); }
    const Fq& field() const { return genmat.field(); }

    std::vector<FqElem> column(int j) const {
        std::vector<FqElem> c;
        c.reserve(genmat.rows());
        for (int i = 0; i < genmat.rows(); ++i) c.push_back(genmat.at(i, j));
        return c;
    }
};

namespace detail {

inline void check_code(const LinearCode& c) {
    if (rank(c.genmat) != c.dim()) throw std::logic_error("LinearCode: generator matrix rank deficient");
    for (int j = 0; j < c.length(); ++j) {
        bool zero = true;
        for (int i = 0; i < c.dim() && zero; ++i) zero = c.genmat.at(i, j).is_zero();
        if (zero) throw std::logic_error("LinearCode: zero column (degenerate system)");
    }
}

inline long checked_codeword_count(const LinearCode& c) {
    const long q = c.field().size();
    long total = 1;
    for (int i = 0; i < c.dim(); ++i) {
        if (total > (1L << 20) / q) throw guard_error("codeword sweep beyond desk scale");
        total *= q;
    }
    return total;
}

/// Visits every codeword (including zero) exactly once.
inline void for_each_codeword(const LinearCode& c,
                              const std::function<void(const std::vector<FqElem>&)>& fn) {
    const Fq& f = c.field();
    const long q = f.size();
    const long total = checked_codeword_count(c);
    const int k = c.dim(), n = c.length();
    std::vector<FqElem> word(n, f.zero());
    std::vector<long> msg(k, 0);
    fn(word);
    for (long t = 1; t < total; ++t) {
        // gray-style update: recompute from scratch (desk scale keeps this cheap)
        int d = 0;
        while (msg[d] == q - 1) msg[d++] = 0;
        ++msg[d];
        for (int j = 0; j < n; ++j) word[j] = f.zero();
        for (int i = 0; i < k; ++i) {
            if (!msg[i]) continue;
            const FqElem x = f.from_code(msg[i]);
            for (int j = 0; j < n; ++j) word[j] = word[j] + x * c.genmat.at(i, j);
        }
        fn(word);
    }
}

}  // namespace detail

/// The code of the full Grassmannian system: rows follow the canonical
/// multi-index order, columns the canonical point order.
inline LinearCode grassmann_code(const Grassmannian& g) {
    const int k = static_cast<int>(binomial(g.m(), g.l()));
    LinearCode c;
    c.genmat = Matrix(g.field(), k, g.num_points());
    c.family = "grassmann";
    c.l = g.l();
    c.m = g.m();
    for (int j = 0; j < g.num_points(); ++j) {
        for (int i = 0; i < k; ++i) c.genmat.at(i, j) = g.plucker_of(j).coords[i];
        c.col_labels.push_back(g.point(j).to_string());
    }
    detail::check_code(c);
    return c;
}

/// The big-cell code: row of the distinguished coordinate first (hence the
/// all-ones top row), remaining coordinates in lexicographic order; columns
/// follow the big-cell matrix order and are scaled to make the
/// distinguished coordinate 1.
inline LinearCode affine_grassmann_code(const Grassmannian& g) {
    const int k = static_cast<int>(binomial(g.m(), g.l()));
    const auto cells = g.big_cell_points();
    MultiIndex i0;
    for (int v = g.m() - g.l() + 1; v <= g.m(); ++v) i0.push_back(v);
    const int i0_rank = multi_index_rank(i0, g.m());
    LinearCode c;
    c.genmat = Matrix(g.field(), k, static_cast<int>(cells.size()));
    c.family = "affine";
    c.l = g.l();
    c.m = g.m();
    for (size_t j = 0; j < cells.size(); ++j) {
        ExteriorVector p = plucker(cells[j]);
        const FqElem pivot = p.coords[i0_rank];
        p = p.scaled(pivot.inverse());
        c.genmat.at(0, static_cast<int>(j)) = p.coords[i0_rank];
        int row = 1;
        for (int i = 0; i < k; ++i) {
            if (i == i0_rank) continue;
            c.genmat.at(row++, static_cast<int>(j)) = p.coords[i];
        }
        c.col_labels.push_back(cells[j].to_string());
    }
    detail::check_code(c);
    return c;
}

/// The divisor code: rows are all coordinates except the distinguished one
/// (which vanishes identically on the divisor), columns the divisor points.
inline LinearCode schubert_code(const Grassmannian& g) {
    const int k = static_cast<int>(binomial(g.m(), g.l()));
    MultiIndex i0;
    for (int v = g.m() - g.l() + 1; v <= g.m(); ++v) i0.push_back(v);
    const int i0_rank = multi_index_rank(i0, g.m());
    const auto omega = g.schubert_point_indices();
    LinearCode c;
    c.genmat = Matrix(g.field(), k - 1, static_cast<int>(omega.size()));
    c.family = "schubert";
    c.l = g.l();
    c.m = g.m();
    for (size_t j = 0; j < omega.size(); ++j) {
        const ExteriorVector& p = g.plucker_of(omega[j]);
        if (!p.coords[i0_rank].is_zero())
            throw std::logic_error("schubert_code: point off the divisor hyperplane");
        int row = 0;
        for (int i = 0; i < k; ++i) {
            if (i == i0_rank) continue;
            c.genmat.at(row++, static_cast<int>(j)) = p.coords[i];
        }
        c.col_labels.push_back(g.point(omega[j]).to_string());
    }
    detail::check_code(c);
    return c;
}

inline int codeword_weight(const std::vector<FqElem>& word) {
    int w = 0;
    for (const FqElem& x : word)
        if (!x.is_zero()) ++w;
    return w;
}

/// weight -> number of codewords, over all q^k codewords.
inline std::map<int, long> weight_distribution(const LinearCode& c) {
    std::map<int, long> hist;
    detail::for_each_codeword(c, [&](const std::vector<FqElem>& w) { ++hist[codeword_weight(w)]; });
    return hist;
}

inline int min_distance(const LinearCode& c) {
    int best = c.length() + 1;
    detail::for_each_codeword(c, [&](const std::vector<FqElem>& w) {
        const int wt = codeword_weight(w);
        if (wt > 0 && wt < best) best = wt;
    });
    return best;
}

struct SubcodeWeight {
    long by_support;  // size of the union of the supports
    long by_average;  // (1/q^{r-1}) sum of the weights over the projective subcode
};

/**
 * Weight of the subcode spanned by the rows of `basis` (codewords of `c`),
 * computed both as the support union and through the averaging identity
 * over one-dimensional subcodes.
 */
inline SubcodeWeight subcode_weight(const LinearCode& c, const Matrix& basis) {
    const Fq& f = c.field();
    const int r = basis.rows(), n = c.length();
    if (basis.cols() != n) throw std::invalid_argument("subcode_weight: length mismatch");
    if (rank(basis) != r) throw std::invalid_argument("subcode_weight: dependent basis");
    Matrix stacked(f, c.dim() + r, n);
    for (int i = 0; i < c.dim(); ++i)
        for (int j = 0; j < n; ++j) stacked.at(i, j) = c.genmat.at(i, j);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) stacked.at(c.dim() + i, j) = basis.at(i, j);
    if (rank(stacked) != c.dim())
        throw std::invalid_argument("subcode_weight: rows are not codewords");

    std::vector<char> in_support(n, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j)
            if (!basis.at(i, j).is_zero()) in_support[j] = 1;
    long support = 0;
    for (char b : in_support) support += b;

    // projective representatives: first nonzero coefficient equal to 1
    const long q = f.size();
    long sum = 0;
    for (int lead = 0; lead < r; ++lead) {
        long total = 1;
        for (int i = 0; i < lead; ++i) total *= q;
        for (long t = 0; t < total; ++t) {
            std::vector<FqElem> word(n, f.zero());
            for (int j = 0; j < n; ++j) word[j] = basis.at(lead, j);
            long code = t;
            for (int i = 0; i < lead; ++i) {
                const long digit = code % q;
                code /= q;
                if (!digit) continue;
                const FqElem x = f.from_code(digit);
                for (int j = 0; j < n; ++j) word[j] = word[j] + x * basis.at(i, j);
            }
            sum += codeword_weight(word);
        }
    }
    long denom = 1;
    for (int i = 0; i < r - 1; ++i) denom *= q;
    if (sum % denom != 0) throw std::logic_error("subcode_weight: averaging identity violated");
    return {support, sum / denom};
}

inline bool is_permutation_matrix_shape(const Matrix& m, bool allow_scales) {
    if (m.rows() != m.cols()) return false;
    std::vector<int> row_hits(m.rows(), 0), col_hits(m.cols(), 0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) {
                if (!allow_scales && m.at(i, j) != m.field().one()) return false;
                ++row_hits[i];
                ++col_hits[j];
            }
    for (int i = 0; i < m.rows(); ++i)
        if (row_hits[i] != 1 || col_hits[i] != 1) return false;
    return true;
}

namespace detail {

inline Matrix canonical_rowspace(const Matrix& m) {
    RrefResult r = rref(m);
    Matrix out(m.field(), r.rank, m.cols());
    for (int i = 0; i < r.rank; ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = r.reduced.at(i, j);
    return out;
}

}  // namespace detail

/// sigma preserves the code iff (c_{sigma(1)}, ..., c_{sigma(n)}) stays in
/// the row space for every codeword; tested on the generator matrix.
inline bool is_permutation_automorphism(const LinearCode& c, const Permutation& sigma) {
    if (sigma.degree() != c.length())
        throw std::invalid_argument("is_permutation_automorphism: degree mismatch");
    Matrix g2(c.field(), c.dim(), c.length());
    for (int i = 0; i < c.dim(); ++i)
        for (int j = 0; j < c.length(); ++j) g2.at(i, j) = c.genmat.at(i, sigma(j));
    return detail::canonical_rowspace(g2) == detail::canonical_rowspace(c.genmat);
}

inline bool is_monomial_automorphism(const LinearCode& c, const Matrix& mono) {
    if (!is_permutation_matrix_shape(mono, true))
        throw std::invalid_argument("is_monomial_automorphism: matrix is not monomial");
    Matrix g2 = c.genmat * mono;
    return detail::canonical_rowspace(g2) == detail::canonical_rowspace(c.genmat);
}

/// Checks the map x -> mu(x) . mono (coordinates twisted by the field
/// automorphism, then the monomial matrix applied on the right).
inline bool is_semilinear_automorphism(const LinearCode& c, const Matrix& mono, const FieldAut& mu) {
    if (!is_permutation_matrix_shape(mono, true))
        throw std::invalid_argument("is_semilinear_automorphism: matrix is not monomial");
    Matrix g2 = c.genmat.map_entries(mu) * mono;
    return detail::canonical_rowspace(g2) == detail::canonical_rowspace(c.genmat);
}

struct PunctureResult {
    LinearCode code;
    bool dimension_dropped = false;
};

/// Restrict to the columns not listed in `removed`; rows are replaced by a
/// canonical basis of the restricted row space (dimension drop reported,
/// not raised).
inline PunctureResult puncture(const LinearCode& c, const std::vector<int>& removed) {
    std::vector<char> drop(c.length(), 0);
    for (int j : removed) drop[j] = 1;
    std::vector<int> keep;
    for (int j = 0; j < c.length(); ++j)
        if (!drop[j]) keep.push_back(j);
    Matrix restricted(c.field(), c.dim(), static_cast<int>(keep.size()));
    for (int i = 0; i < c.dim(); ++i)
        for (size_t j = 0; j < keep.size(); ++j) restricted.at(i, static_cast<int>(j)) = c.genmat.at(i, keep[j]);
    PunctureResult out;
    out.code.genmat = detail::canonical_rowspace(restricted);
    out.code.family = "custom";
    out.code.l = c.l;
    out.code.m = c.m;
    for (int j : keep) out.code.col_labels.push_back(c.col_labels.empty() ? "" : c.col_labels[j]);
    out.dimension_dropped = out.code.genmat.rows() < c.dim();
    return out;
}

/**
 * Full permutation automorphism group of the code by backtracking over
 * column assignments.  A column permutation preserves the row space
 * exactly when some invertible U carries column j to column sigma(j) for
 * every j, so the search branches only over the images of a fixed
 * independent column basis (pruned by per-column and pairwise profiles of
 * the codeword values restricted to each weight class); the remaining
 * images are forced by U and resolved through column-equality classes.
 * Generators are collected stabilizer-chain style: identity-first
 * candidate order, orbit pruning along the identity path, first-hit
 * bailout elsewhere, plus the transpositions of duplicate columns.  Large
 * groups come back as a short generator list, not an element enumeration.
 */
inline PermGroup paut_brute_force(const LinearCode& c,
                                  std::vector<Permutation>* out_generators = nullptr) {
    const int n = c.length();
    const int k = c.dim();
    if (n > 24) throw guard_error("paut_brute_force: length beyond search guard");
    const Fq& f = c.field();
    const long q = f.size();

    std::vector<std::vector<long>> words;
    std::vector<int> word_weight;
    detail::for_each_codeword(c, [&](const std::vector<FqElem>& w) {
        std::vector<long> codes(n);
        int wt = 0;
        for (int j = 0; j < n; ++j) {
            codes[j] = w[j].code();
            if (codes[j]) ++wt;
        }
        words.push_back(std::move(codes));
        word_weight.push_back(wt);
    });

    auto hash_counts = [](const std::vector<long>& counts) {
        uint64_t h = 1469598103934665603ull;
        for (long v : counts) {
            h ^= static_cast<uint64_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    };

    // value histograms refined by codeword weight: uniform joint
    // distributions (any two independent columns) become discriminating
    // once restricted to a weight class
    std::vector<uint64_t> col_profile(n);
    for (int j = 0; j < n; ++j) {
        std::vector<long> counts(static_cast<size_t>(q) * (n + 1), 0);
        for (size_t w = 0; w < words.size(); ++w)
            ++counts[word_weight[w] * q + words[w][j]];
        col_profile[j] = hash_counts(counts);
    }
    std::vector<std::vector<uint64_t>> pair_profile(n, std::vector<uint64_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<long> counts(static_cast<size_t>(q) * q * (n + 1), 0);
            for (size_t w = 0; w < words.size(); ++w)
                ++counts[(word_weight[w] * q + words[w][a]) * q + words[w][b]];
            pair_profile[a][b] = hash_counts(counts);
        }

    // column-equality classes; duplicate columns can always be swapped
    std::vector<Permutation> found;
    std::map<std::vector<long>, std::vector<int>> classes;
    for (int j = 0; j < n; ++j) {
        std::vector<long> key;
        for (int i = 0; i < k; ++i) key.push_back(c.genmat.at(i, j).code());
        classes[key].push_back(j);
    }
    for (const auto& [key, members] : classes)
        for (size_t t = 0; t + 1 < members.size(); ++t) {
            std::vector<int> img(n);
            std::iota(img.begin(), img.end(), 0);
            std::swap(img[members[t]], img[members[t + 1]]);
            found.emplace_back(std::move(img));
        }

    // fixed independent column basis
    std::vector<int> basis;
    {
        Matrix acc(f, 0, 0);
        for (int j = 0; j < n && static_cast<int>(basis.size()) < k; ++j) {
            Matrix trial(f, static_cast<int>(basis.size()) + 1, k);
            for (size_t t = 0; t < basis.size(); ++t)
                for (int i = 0; i < k; ++i) trial.at(static_cast<int>(t), i) = c.genmat.at(i, basis[t]);
            for (int i = 0; i < k; ++i) trial.at(static_cast<int>(basis.size()), i) = c.genmat.at(i, j);
            if (rank(trial) == static_cast<int>(basis.size()) + 1) basis.push_back(j);
        }
    }

    std::vector<int> img(k, -1);
    std::vector<char> used(n, 0);

    auto same_orbit = [&](int depth, int a, int b) {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const Permutation& g : found) {
            bool fixes = true;
            for (int i = 0; i < depth && fixes; ++i) fixes = (g(basis[i]) == basis[i]);
            if (!fixes) continue;
            for (int x = 0; x < n; ++x) {
                int ra = find(x), rb = find(g(x));
                if (ra != rb) parent[ra] = rb;
            }
        }
        return find(a) == find(b);
    };

    // with all basis images fixed, U is determined and every other image
    // is forced up to duplicate columns
    auto complete = [&]() -> bool {
        Matrix from(f, k, k), to(f, k, k);
        for (int t = 0; t < k; ++t)
            for (int i = 0; i < k; ++i) {
                from.at(i, t) = c.genmat.at(i, basis[t]);
                to.at(i, t) = c.genmat.at(i, img[t]);
            }
        if (!is_invertible(to)) return false;
        const Matrix u = to * inverse(from);
        std::vector<int> sigma(n, -1);
        std::vector<char> taken(n, 0);
        for (int t = 0; t < k; ++t) {
            sigma[basis[t]] = img[t];
            taken[img[t]] = 1;
        }
        for (int j = 0; j < n; ++j) {
            if (sigma[j] >= 0) continue;
            std::vector<FqElem> col;
            for (int i = 0; i < k; ++i) col.push_back(c.genmat.at(i, j));
            const std::vector<FqElem> w = u.apply(col);
            std::vector<long> key;
            for (const FqElem& x : w) key.push_back(x.code());
            auto it = classes.find(key);
            if (it == classes.end()) return false;
            int chosen = -1;
            for (int cand : it->second)
                if (!taken[cand]) {
                    chosen = cand;
                    break;
                }
            if (chosen < 0) return false;
            taken[chosen] = 1;
            sigma[j] = chosen;
        }
        Permutation p{std::move(sigma)};
        if (!p.is_identity()) found.push_back(p);
        return true;
    };

    std::function<bool(int, bool)> search = [&](int d, bool on_first_path) -> bool {
        if (d == k) return complete();
        const int src = basis[d];
        std::vector<int> candidates;
        if (on_first_path && !used[src]) candidates.push_back(src);
        for (int cand = 0; cand < n; ++cand)
            if (!used[cand] && !(on_first_path && cand == src)) candidates.push_back(cand);
        bool any = false;
        std::vector<int> tried;
        for (int cand : candidates) {
            if (col_profile[cand] != col_profile[src]) continue;
            bool ok = true;
            for (int t = 0; t < d && ok; ++t)
                ok = pair_profile[cand][img[t]] == pair_profile[src][basis[t]] &&
                     pair_profile[img[t]][cand] == pair_profile[basis[t]][src];
            if (!ok) continue;
            // images of independent columns stay independent
            Matrix prefix(f, d + 1, k);
            for (int t = 0; t < d; ++t)
                for (int i = 0; i < k; ++i) prefix.at(t, i) = c.genmat.at(i, img[t]);
            for (int i = 0; i < k; ++i) prefix.at(d, i) = c.genmat.at(i, cand);
            if (rank(prefix) != d + 1) continue;
            if (on_first_path && cand != src) {
                bool pruned = false;
                for (int t : tried)
                    if (same_orbit(d, t, cand)) {
                        pruned = true;
                        break;
                    }
                if (pruned) continue;
                tried.push_back(cand);
            } else if (on_first_path) {
                tried.push_back(cand);
            }
            img[d] = cand;
            used[cand] = 1;
            const bool sub = search(d + 1, on_first_path && cand == src);
            img[d] = -1;
            used[cand] = 0;
            if (sub) {
                any = true;
                if (!on_first_path) return true;
            }
        }
        return any;
    };
    search(0, true);
    if (out_generators) *out_generators = found;
    return PermGroup(n, found);
}

/// A semilinear Hamming isometry carrying one code onto another:
/// T(c)_{sigma(j)} = scale[j] * mu(c_j).
struct EquivalenceWitness {
    FieldAut mu;
    std::vector<int> sigma;
    std::vector<FqElem> scale;
};

inline bool verify_equivalence(const LinearCode& a, const LinearCode& b,
                               const EquivalenceWitness& w) {
    if (a.length() != b.length() || a.dim() != b.dim()) return false;
    const int n = a.length();
    Matrix image(a.field(), a.dim(), n);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < n; ++j) image.at(i, w.sigma[j]) = w.scale[j] * w.mu(a.genmat.at(i, j));
    return detail::canonical_rowspace(image) == detail::canonical_rowspace(b.genmat);
}

namespace detail {

struct EquivSearch {
    const LinearCode* ca;
    const LinearCode* cb;
    const Fq* f;
    FieldAut mu;
    int n, k;
    std::vector<std::vector<FqElem>> xs;  // source columns in matched-basis coordinates
    std::vector<std::vector<FqElem>> ys;  // target columns in matched-basis coordinates
    std::vector<std::vector<int>> supp_x, supp_y;
    std::map<std::vector<int>, std::vector<int>> targets_by_support;
    std::vector<FqElem> pin;  // diagonal scalars
    std::vector<char> pinned;
    std::vector<char> target_used;
    std::vector<int> sigma;
    std::vector<FqElem> scale;  // A mu(col_j) = scale_inv[j] ... stored as s_j
    long nodes = 0, node_cap = 0;

    bool match_rest(const std::vector<int>& order, size_t pos) {
        if (++nodes > node_cap) throw guard_error("codes_equivalent: search cap exceeded");
        if (pos == order.size()) return true;
        // prefer a point whose support touches pinned coordinates
        size_t pick = pos;
        for (size_t t = pos; t < order.size(); ++t) {
            bool touches = false;
            for (int i : supp_x[order[t]])
                if (pinned[i]) touches = true;
            if (touches) {
                pick = t;
                break;
            }
        }
        std::vector<int> ord = order;
        std::swap(ord[pos], ord[pick]);
        const int j = ord[pos];
        auto it = targets_by_support.find(supp_x[j]);
        if (it == targets_by_support.end()) return false;
        for (int t : it->second) {
            if (target_used[t]) continue;
            // need pin_i * x_i = s * y_i on the support, one scalar s
            FqElem s = f->zero();
            bool have_s = false, ok = true;
            for (int i : supp_x[j]) {
                if (!pinned[i]) continue;
                FqElem cand = pin[i] * xs[j][i] / ys[t][i];
                if (!have_s) {
                    s = cand;
                    have_s = true;
                } else if (cand != s) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            if (!have_s) s = f->one();  // fresh support component: normalize
            std::vector<int> newly;
            for (int i : supp_x[j]) {
                if (pinned[i]) continue;
                pin[i] = s * ys[t][i] / xs[j][i];
                pinned[i] = 1;
                newly.push_back(i);
            }
            target_used[t] = 1;
            sigma[j] = t;
            scale[j] = s;
            if (match_rest(ord, pos + 1)) return true;
            target_used[t] = 0;
            sigma[j] = -1;
            for (int i : newly) pinned[i] = 0;
        }
        return false;
    }
};

}  // namespace detail

/**
 * Decides semilinear monomial equivalence and produces a verified witness.
 * Strategy: quick weight-distribution obstruction, then for each field
 * automorphism a backtracking match of a column basis (pruned by zero-pair
 * profiles) followed by diagonal-scalar propagation over the remaining
 * columns with multiplicity bookkeeping.
 */
inline std::optional<EquivalenceWitness> codes_equivalent(const LinearCode& a, const LinearCode& b,
                                                          long node_cap = 4000000) {
    detail::check_code(a);
    detail::check_code(b);
    if (a.length() != b.length() || a.dim() != b.dim() || a.field() != b.field())
        return std::nullopt;
    if (weight_distribution(a) != weight_distribution(b)) return std::nullopt;

    const Fq& f = a.field();
    const int n = a.length(), k = a.dim();
    const long q = f.size();

    // zero-pair profiles, invariant under monomial + Frobenius column maps
    auto zero_pairs = [&](const LinearCode& c) {
        std::vector<std::vector<long>> z(n, std::vector<long>(n, 0));
        detail::for_each_codeword(c, [&](const std::vector<FqElem>& w) {
            std::vector<int> zs;
            for (int j = 0; j < n; ++j)
                if (w[j].is_zero()) zs.push_back(j);
            for (int za_idx : zs)
                for (int zb_idx : zs) ++z[za_idx][zb_idx];
        });
        return z;
    };
    const auto za = zero_pairs(a), zb = zero_pairs(b);
    auto row_hash = [&](const std::vector<std::vector<long>>& z, int i) {
        std::vector<long> sorted = z[i];
        std::sort(sorted.begin(), sorted.end());
        uint64_t h = 1469598103934665603ull;
        for (long v : sorted) {
            h ^= static_cast<uint64_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    };
    std::vector<uint64_t> ha(n), hb(n);
    for (int i = 0; i < n; ++i) {
        ha[i] = row_hash(za, i);
        hb[i] = row_hash(zb, i);
    }

    // greedy independent column basis of a
    std::vector<int> basis_cols;
    for (int j = 0; j < n && static_cast<int>(basis_cols.size()) < k; ++j) {
        Matrix trial(f, static_cast<int>(basis_cols.size()) + 1, k);
        for (size_t t = 0; t < basis_cols.size(); ++t)
            for (int i = 0; i < k; ++i) trial.at(static_cast<int>(t), i) = a.genmat.at(i, basis_cols[t]);
        for (int i = 0; i < k; ++i) trial.at(static_cast<int>(basis_cols.size()), i) = a.genmat.at(i, j);
        if (rank(trial) == static_cast<int>(basis_cols.size()) + 1) basis_cols.push_back(j);
    }

    std::optional<EquivalenceWitness> result;
    for (const FieldAut& mu : field_automorphisms(f)) {
        // backtracking over images of the basis columns
        std::vector<int> img(k, -1);
        std::vector<char> used(n, 0);
        long nodes = 0;

        std::function<bool(int)> assign = [&](int d) -> bool {
            if (++nodes > node_cap) throw guard_error("codes_equivalent: search cap exceeded");
            if (d == k) {
                // basis matched; build coordinates and propagate scalars
                Matrix bmat(f, k, k), bpmat(f, k, k);
                for (int t = 0; t < k; ++t)
                    for (int i = 0; i < k; ++i) {
                        bmat.at(i, t) = mu(a.genmat.at(i, basis_cols[t]));
                        bpmat.at(i, t) = b.genmat.at(i, img[t]);
                    }
                if (!is_invertible(bpmat)) return false;
                const Matrix binv = inverse(bmat), bpinv = inverse(bpmat);

                detail::EquivSearch es;
                es.ca = &a;
                es.cb = &b;
                es.f = &f;
                es.mu = mu;
                es.n = n;
                es.k = k;
                es.node_cap = node_cap;
                es.pin.assign(k, f.zero());
                es.pinned.assign(k, 0);
                es.target_used.assign(n, 0);
                es.sigma.assign(n, -1);
                es.scale.assign(n, f.zero());
                for (int j = 0; j < n; ++j) {
                    std::vector<FqElem> col;
                    for (int i = 0; i < k; ++i) col.push_back(mu(a.genmat.at(i, j)));
                    es.xs.push_back(binv.apply(col));
                    std::vector<FqElem> colb;
                    for (int i = 0; i < k; ++i) colb.push_back(b.genmat.at(i, j));
                    es.ys.push_back(bpinv.apply(colb));
                }
                for (int j = 0; j < n; ++j) {
                    std::vector<int> sx, sy;
                    for (int i = 0; i < k; ++i) {
                        if (!es.xs[j][i].is_zero()) sx.push_back(i);
                        if (!es.ys[j][i].is_zero()) sy.push_back(i);
                    }
                    es.supp_x.push_back(sx);
                    es.supp_y.push_back(sy);
                    es.targets_by_support[sy].push_back(j);
                }
                // pin the basis pairs themselves
                std::vector<int> rest;
                bool ok = true;
                for (int t = 0; t < k && ok; ++t) {
                    es.target_used[img[t]] = 1;
                    es.sigma[basis_cols[t]] = img[t];
                    es.scale[basis_cols[t]] = f.one();
                    // x of basis col t is e_t, y of img[t] is e_t: pin_t free for now
                }
                for (int j = 0; j < n; ++j)
                    if (es.sigma[j] < 0) rest.push_back(j);
                if (!ok) return false;
                try {
                    if (!es.match_rest(rest, 0)) return false;
                } catch (const guard_error&) {
                    throw;
                }
                // assemble and verify
                EquivalenceWitness w;
                w.mu = mu;
                w.sigma = es.sigma;
                w.scale.assign(n, f.one());
                // reconstruct exact column scales: A mu(col_j) = s_j col'_{sigma(j)}
                Matrix diag(f, k, k);
                for (int i = 0; i < k; ++i) diag.at(i, i) = es.pinned[i] ? es.pin[i] : f.one();
                const Matrix amap = bpmat * diag * binv;
                for (int j = 0; j < n; ++j) {
                    std::vector<FqElem> col;
                    for (int i = 0; i < k; ++i) col.push_back(mu(a.genmat.at(i, j)));
                    const std::vector<FqElem> im = amap.apply(col);
                    // find the scalar against the matched target column
                    FqElem s = f.zero();
                    for (int i = 0; i < k; ++i)
                        if (!b.genmat.at(i, w.sigma[j]).is_zero()) {
                            s = im[i] / b.genmat.at(i, w.sigma[j]);
                            break;
                        }
                    if (s.is_zero()) return false;
                    for (int i = 0; i < k; ++i)
                        if (im[i] != s * b.genmat.at(i, w.sigma[j])) return false;
                    w.scale[j] = s.inverse();
                }
                if (!verify_equivalence(a, b, w)) return false;
                result = w;
                return true;
            }
            const int src = basis_cols[d];
            for (int t = 0; t < n; ++t) {
                if (used[t] || hb[t] != ha[src]) continue;
                bool ok = true;
                for (int e = 0; e < d && ok; ++e)
                    ok = (zb[t][img[e]] == za[src][basis_cols[e]] &&
                          zb[img[e]][t] == za[basis_cols[e]][src]);
                if (!ok) continue;
                // images of independent columns must stay independent
                Matrix prefix(f, d + 1, k);
                for (int e = 0; e < d; ++e)
                    for (int i = 0; i < k; ++i) prefix.at(e, i) = b.genmat.at(i, img[e]);
                for (int i = 0; i < k; ++i) prefix.at(d, i) = b.genmat.at(i, t);
                if (rank(prefix) != d + 1) continue;
                img[d] = t;
                used[t] = 1;
                if (assign(d + 1)) return true;
                img[d] = -1;
                used[t] = 0;
            }
            return false;
        };

        result.reset();
        if (assign(0) && result) return result;
    }
    return std::nullopt;
}

}  // namespace grc

#endif  // GRC_CODES_HPP
