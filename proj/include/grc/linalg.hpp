/**
 * @file linalg.hpp
 * @brief Dense matrices and semilinear maps over F_q, exact throughout.
 */

#ifndef GRC_LINALG_HPP
#define GRC_LINALG_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "grc/gf.hpp"

namespace grc {

using uint128 = unsigned __int128;

inline uint128 checked_mul(uint128 a, uint128 b) {
    if (a != 0 && b > ~static_cast<uint128>(0) / a)
        throw std::overflow_error("order arithmetic overflow");
    return a * b;
}

inline std::string uint128_to_string(uint128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

class Matrix {
  public:
    Matrix() : rows_(0), cols_(0), f_(nullptr) {}

    Matrix(const Fq& f, int rows, int cols)
        : rows_(rows), cols_(cols), f_(&f), a_(static_cast<size_t>(rows) * cols, f.zero()) {}

    static Matrix identity(const Fq& f, int n) {
        Matrix m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Fq& field() const { return *f_; }

    FqElem& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const FqElem& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (size_t i = 0; i < a_.size(); ++i)
            if (a_[i] != o.a_[i]) return false;
        return true;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix: size mismatch in product");
        Matrix r(*f_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const FqElem& aik = at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: size mismatch in sum");
        Matrix r(*this);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] + o.a_[i];
        return r;
    }

    Matrix scaled(const FqElem& c) const {
        Matrix r(*this);
        for (auto& x : r.a_) x = x * c;
        return r;
    }

    Matrix transpose() const {
        Matrix r(*f_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    std::vector<FqElem> apply(const std::vector<FqElem>& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw std::invalid_argument("Matrix: vector size mismatch");
        std::vector<FqElem> r(rows_, f_->zero());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) r[i] = r[i] + at(i, j) * v[j];
        return r;
    }

    /// Row vector times matrix.
    std::vector<FqElem> apply_left(const std::vector<FqElem>& v) const {
        if (static_cast<int>(v.size()) != rows_)
            throw std::invalid_argument("Matrix: vector size mismatch");
        std::vector<FqElem> r(cols_, f_->zero());
        for (int i = 0; i < rows_; ++i) {
            if (v[i].is_zero()) continue;
            for (int j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) r[j] = r[j] + v[i] * at(i, j);
        }
        return r;
    }

    Matrix map_entries(const FieldAut& mu) const {
        Matrix r(*this);
        if (mu.is_identity()) return r;
        for (auto& x : r.a_) x = mu(x);
        return r;
    }

    /// Rows ';'-separated, entries ','-separated, elements per gf format.
    std::string to_string() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            if (i) s += ";";
            for (int j = 0; j < cols_; ++j) {
                if (j) s += ",";
                s += at(i, j).to_string();
            }
        }
        return s;
    }

    static Matrix parse(const Fq& f, const std::string& text);

  private:
    int rows_, cols_;
    const Fq* f_;
    std::vector<FqElem> a_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<int> pivots;
    int rank = 0;
};

inline RrefResult rref(const Matrix& m) {
    RrefResult res{m, {}, 0};
    Matrix& a = res.reduced;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!a.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
        const FqElem inv = a.at(r, c).inverse();
        for (int j = 0; j < m.cols(); ++j) a.at(r, j) = a.at(r, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            const FqElem factor = a.at(i, c);
            for (int j = 0; j < m.cols(); ++j)
                a.at(i, j) = a.at(i, j) - factor * a.at(r, j);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

inline int rank(const Matrix& m) { return rref(m).rank; }

inline FqElem det(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    const Fq& f = m.field();
    Matrix a = m;
    FqElem d = f.one();
    const int n = m.rows();
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!a.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return f.zero();
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
            d = -d;
        }
        d = d * a.at(c, c);
        const FqElem inv = a.at(c, c).inverse();
        for (int i = c + 1; i < n; ++i) {
            if (a.at(i, c).is_zero()) continue;
            const FqElem factor = a.at(i, c) * inv;
            for (int j = c; j < n; ++j) a.at(i, j) = a.at(i, j) - factor * a.at(c, j);
        }
    }
    return d;
}

inline Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const int n = m.rows();
    const Fq& f = m.field();
    Matrix aug(f, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = f.one();
    }
    RrefResult r = rref(aug);
    if (r.rank < n || r.pivots[n - 1] >= n)
        throw std::domain_error("inverse: singular matrix");
    Matrix inv(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = r.reduced.at(i, n + j);
    return inv;
}

inline bool is_invertible(const Matrix& m) {
    return m.rows() == m.cols() && !det(m).is_zero();
}

inline Matrix inverse_transpose(const Matrix& m) { return inverse(m).transpose(); }

/// Basis-reversal permutation matrix e_i -> e_{m-i+1}.
inline Matrix reversal_matrix(const Fq& f, int m) {
    Matrix k(f, m, m);
    for (int i = 0; i < m; ++i) k.at(m - 1 - i, i) = f.one();
    return k;
}

/// A -> kappa A^{-t} kappa^{-1}, defined for even size; maps the standard
/// block-upper-triangular parabolic into itself.
inline Matrix twisted_inverse_transpose(const Matrix& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        throw std::invalid_argument("twisted_inverse_transpose: size must be even");
    Matrix k = reversal_matrix(m.field(), m.rows());
    return k * inverse_transpose(m) * k;
}

/// |GL(m, q)| = prod_{i=0}^{m-1} (q^m - q^i).
inline uint128 gl_order(int m, long q) {
    if (m < 1) throw std::invalid_argument("gl_order: m must be >= 1");
    uint128 qm = 1;
    for (int i = 0; i < m; ++i) qm = checked_mul(qm, static_cast<uint128>(q));
    uint128 order = 1, qi = 1;
    for (int i = 0; i < m; ++i) {
        order = checked_mul(order, qm - qi);
        qi = checked_mul(qi, static_cast<uint128>(q));
    }
    return order;
}

/// |P_{a,b}(q)| = |GL(a,q)| |GL(b,q)| q^{ab}.
inline uint128 parabolic_order(int a, int b, long q) {
    uint128 order = checked_mul(gl_order(a, q), gl_order(b, q));
    for (int i = 0; i < a * b; ++i) order = checked_mul(order, static_cast<uint128>(q));
    return order;
}

/// Invertible matrix paired with a field automorphism, acting as x -> A mu(x).
/// Composition: (A, mu)(B, nu) = (A mu(B), mu nu).
struct SemilinearMap {
    Matrix matrix;
    FieldAut mu;

    SemilinearMap() = default;
    SemilinearMap(Matrix m, FieldAut a) : matrix(std::move(m)), mu(a) {}
    explicit SemilinearMap(Matrix m) : matrix(std::move(m)), mu{0} {}

    std::vector<FqElem> apply(const std::vector<FqElem>& v) const {
        if (mu.is_identity()) return matrix.apply(v);
        std::vector<FqElem> w(v);
        for (auto& x : w) x = mu(x);
        return matrix.apply(w);
    }

    SemilinearMap compose(const SemilinearMap& o) const {
        const int e = matrix.field().degree();
        return SemilinearMap(matrix * o.matrix.map_entries(mu), mu.compose(o.mu, e));
    }
};

inline Matrix Matrix::parse(const Fq& f, const std::string& text) {
    std::vector<std::vector<FqElem>> rows;
    std::stringstream ss(text);
    std::string rowtext;
    while (std::getline(ss, rowtext, ';')) {
        std::vector<FqElem> row;
        // split on top-level commas; extension elements carry brackets
        std::string tok;
        int depth = 0;
        auto flush = [&]() {
            if (tok.empty()) return;
            if (tok.front() == '[') {
                std::vector<int> coeffs;
                std::string num;
                for (char ch : tok)
                    if (ch == '[' || ch == ',' || ch == ']') {
                        if (!num.empty()) coeffs.push_back(std::stoi(num));
                        num.clear();
                    } else
                        num += ch;
                row.push_back(f.element(coeffs));
            } else {
                int v[1] = {std::stoi(tok)};
                row.push_back(f.element(v));
            }
            tok.clear();
        };
        for (char ch : rowtext) {
            if (ch == '[') ++depth;
            if (ch == ']') --depth;
            if (ch == ',' && depth == 0) {
                flush();
            } else
                tok += ch;
        }
        flush();
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("Matrix::parse: empty text");
    Matrix m(f, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw std::invalid_argument("Matrix::parse: ragged rows");
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    }
    return m;
}

}  // namespace grc

#endif  // GRC_LINALG_HPP
