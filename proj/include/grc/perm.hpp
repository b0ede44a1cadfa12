/**
 * @file perm.hpp
 * @brief Permutations and exact orders of generated groups (Schreier-Sims).
 *
 * The chain uses deterministic base selection (smallest moved point first)
 * and BFS Schreier trees, so repeated runs produce identical structures.
 * Orders are returned as unsigned 128-bit integers; symmetric groups up to
 * the desk-scale degree bound fit comfortably.
 */

#ifndef GRC_PERM_HPP
#define GRC_PERM_HPP

#include <deque>
#include <numeric>
#include <vector>

#include "grc/linalg.hpp"

namespace grc {

class Permutation {
  public:
    Permutation() = default;

    explicit Permutation(int degree) : img_(degree) {
        std::iota(img_.begin(), img_.end(), 0);
    }

    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<char> seen(img_.size(), 0);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
                throw std::invalid_argument("Permutation: images are not a bijection");
            seen[v] = 1;
        }
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[x]; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    /// Smallest x with sigma(x) != x, or -1 for the identity.
    int smallest_moved() const {
        for (int i = 0; i < degree(); ++i)
            if (img_[i] != i) return i;
        return -1;
    }

    /// (a.compose(b))(x) = a(b(x)).
    Permutation compose(const Permutation& b) const {
        Permutation r;
        r.img_.resize(degree());
        for (int i = 0; i < degree(); ++i) r.img_[i] = img_[b.img_[i]];
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.img_.resize(degree());
        for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
        return r;
    }

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }

    const std::vector<int>& images() const { return img_; }

  private:
    std::vector<int> img_;
};

/**
 * Base and strong generating set for the group generated by a set of
 * permutations.  Supports exact order and membership tests.
 */
class PermGroup {
  public:
    PermGroup(int degree, const std::vector<Permutation>& generators) : degree_(degree) {
        for (const Permutation& g : generators) {
            if (g.degree() != degree) throw std::invalid_argument("PermGroup: degree mismatch");
            add_strong_generator(g);
        }
    }

    int degree() const { return degree_; }

    uint128 order() const {
        uint128 o = 1;
        for (const Level& lv : levels_) o = checked_mul(o, static_cast<uint128>(lv.orbit.size()));
        return o;
    }

    bool contains(const Permutation& g) const {
        if (g.degree() != degree_) return false;
        Permutation h = g;
        size_t stop = sift(0, h);
        (void)stop;
        return h.is_identity();
    }

    size_t base_length() const { return levels_.size(); }

  private:
    struct Level {
        int base = -1;
        std::vector<Permutation> gens;
        std::vector<Permutation> gen_invs;
        std::vector<int> orbit;        // BFS order, orbit[0] == base
        std::vector<int> pos;          // point -> index in orbit, or -1
        std::vector<int> tree_gen;     // point -> generator reaching it
        std::vector<int> tree_parent;  // point -> previous point on its path
        std::deque<std::pair<int, int>> pending;  // (orbit position, gen index)
    };

    // Strips h through levels starting at `from`; h becomes the residue.
    // Returns the level where sifting stopped (== levels_.size() on full strip).
    size_t sift(size_t from, Permutation& h) const {
        for (size_t i = from; i < levels_.size(); ++i) {
            if (h.is_identity()) return i;
            const Level& lv = levels_[i];
            int p = h(lv.base);
            if (p == lv.base) continue;
            if (lv.pos[p] < 0) return i;
            int cur = p;
            while (cur != lv.base) {
                h = lv.gen_invs[lv.tree_gen[cur]].compose(h);
                cur = lv.tree_parent[cur];
            }
        }
        return levels_.size();
    }

    Permutation transversal(const Level& lv, int p) const {
        // u_p with u_p(base) = p, composed along the Schreier tree.
        std::vector<int> path;
        int cur = p;
        while (cur != lv.base) {
            path.push_back(lv.tree_gen[cur]);
            cur = lv.tree_parent[cur];
        }
        Permutation u(degree_);
        for (auto it = path.rbegin(); it != path.rend(); ++it) u = lv.gens[*it].compose(u);
        return u;
    }

    // Appends g to every level from `from` up to the first whose base it
    // moves (the strong generating invariant: deeper generator sets stay
    // inside the groups generated by shallower ones; levels above `from`
    // already generate g), then drains the affected levels, deepest first.
    void add_strong_generator(const Permutation& g, size_t from = 0) {
        if (g.is_identity()) return;
        std::vector<size_t> touched;
        size_t t = from;
        while (true) {
            if (t == levels_.size()) {
                Level lv;
                lv.base = g.smallest_moved();
                lv.pos.assign(degree_, -1);
                lv.tree_gen.assign(degree_, -1);
                lv.tree_parent.assign(degree_, -1);
                lv.orbit.push_back(lv.base);
                lv.pos[lv.base] = 0;
                levels_.push_back(std::move(lv));
            }
            append_generator(levels_[t], g);
            touched.push_back(t);
            if (g(levels_[t].base) != levels_[t].base) break;
            ++t;
        }
        for (auto it = touched.rbegin(); it != touched.rend(); ++it) process(*it);
    }

    void append_generator(Level& lv, const Permutation& g) {
        lv.gens.push_back(g);
        lv.gen_invs.push_back(g.inverse());
        const int gi = static_cast<int>(lv.gens.size()) - 1;
        for (int op = 0; op < static_cast<int>(lv.orbit.size()); ++op) lv.pending.push_back({op, gi});
        extend_orbit(lv);
    }

    void extend_orbit(Level& lv) {
        for (size_t i = 0; i < lv.orbit.size(); ++i) {
            const int x = lv.orbit[i];
            for (size_t t = 0; t < lv.gens.size(); ++t) {
                const int y = lv.gens[t](x);
                if (lv.pos[y] >= 0) continue;
                lv.pos[y] = static_cast<int>(lv.orbit.size());
                lv.tree_gen[y] = static_cast<int>(t);
                lv.tree_parent[y] = x;
                lv.orbit.push_back(y);
                for (size_t s = 0; s < lv.gens.size(); ++s)
                    lv.pending.push_back({lv.pos[y], static_cast<int>(s)});
            }
        }
    }

    void process(size_t l) {
        // re-acquire the level each round: deeper add_generator calls can
        // grow `levels_` and invalidate references
        while (!levels_[l].pending.empty()) {
            auto [op, gi] = levels_[l].pending.front();
            levels_[l].pending.pop_front();
            Permutation h;
            {
                const Level& lv = levels_[l];
                const int p = lv.orbit[op];
                const Permutation& s = lv.gens[gi];
                // Schreier generator u_{s(p)}^{-1} s u_p, which fixes the base
                h = s.compose(transversal(lv, p));
                int cur = s(p);
                while (cur != lv.base) {
                    h = lv.gen_invs[lv.tree_gen[cur]].compose(h);
                    cur = lv.tree_parent[cur];
                }
            }
            if (h.is_identity()) continue;
            sift(l + 1, h);
            if (!h.is_identity()) add_strong_generator(h, l + 1);
        }
    }

    int degree_;
    std::vector<Level> levels_;
};

inline uint128 group_order(int degree, const std::vector<Permutation>& gens) {
    return PermGroup(degree, gens).order();
}

namespace detail {

inline long vector_index(const std::vector<FqElem>& v, long q) {
    long idx = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it) idx = idx * q + it->code();
    return idx;
}

inline std::vector<FqElem> vector_at(const Fq& f, long idx, int k) {
    std::vector<FqElem> v;
    v.reserve(k);
    for (int i = 0; i < k; ++i) {
        v.push_back(f.from_code(idx % f.size()));
        idx /= f.size();
    }
    return v;
}

}  // namespace detail

/**
 * Order of the group generated by semilinear maps on F_q^k, computed from
 * the induced permutations of the q^k - 1 nonzero vectors.  Scalar
 * subgroups are counted; see projective_matrix_group_order for the
 * quotient by F^x.
 */
inline uint128 matrix_group_order(const std::vector<SemilinearMap>& gens, int k) {
    if (gens.empty()) return 1;
    const Fq& f = gens.front().matrix.field();
    const long q = f.size();
    long total = 1;
    for (int i = 0; i < k; ++i) {
        if (total > (1L << 22) / q) throw guard_error("matrix_group_order: q^k beyond desk scale");
        total *= q;
    }
    const int degree = static_cast<int>(total - 1);
    std::vector<Permutation> perms;
    for (const SemilinearMap& g : gens) {
        if (g.matrix.rows() != k || g.matrix.cols() != k)
            throw std::invalid_argument("matrix_group_order: generator has wrong size");
        if (!is_invertible(g.matrix))
            throw std::invalid_argument("matrix_group_order: generator not invertible");
        std::vector<int> images(degree);
        for (long idx = 1; idx < total; ++idx) {
            std::vector<FqElem> v = detail::vector_at(f, idx, k);
            images[idx - 1] = static_cast<int>(detail::vector_index(g.apply(v), q) - 1);
        }
        perms.emplace_back(std::move(images));
    }
    return group_order(degree, perms);
}

/// Same, on projective points (vectors normalized so the first nonzero
/// coordinate is 1), i.e. the image group in PGammaL(k, q).
inline uint128 projective_matrix_group_order(const std::vector<SemilinearMap>& gens, int k) {
    if (gens.empty()) return 1;
    const Fq& f = gens.front().matrix.field();
    const long q = f.size();
    long total = 1;
    for (int i = 0; i < k; ++i) {
        if (total > (1L << 22) / q) throw guard_error("matrix group order: q^k beyond desk scale");
        total *= q;
    }
    auto normalize = [&](std::vector<FqElem> v) {
        for (const FqElem& x : v)
            if (!x.is_zero()) {
                const FqElem inv = x.inverse();
                for (auto& y : v) y = y * inv;
                break;
            }
        return v;
    };
    std::vector<long> rep_index(total, -1);
    std::vector<long> reps;
    for (long idx = 1; idx < total; ++idx) {
        long n = detail::vector_index(normalize(detail::vector_at(f, idx, k)), q);
        if (n == idx) {
            rep_index[idx] = static_cast<long>(reps.size());
            reps.push_back(idx);
        }
    }
    std::vector<Permutation> perms;
    for (const SemilinearMap& g : gens) {
        std::vector<int> images(reps.size());
        for (size_t i = 0; i < reps.size(); ++i) {
            std::vector<FqElem> v = detail::vector_at(f, reps[i], k);
            long n = detail::vector_index(normalize(g.apply(v)), q);
            images[i] = static_cast<int>(rep_index[n]);
        }
        perms.emplace_back(std::move(images));
    }
    return group_order(static_cast<int>(reps.size()), perms);
}

}  // namespace grc

#endif  // GRC_PERM_HPP
