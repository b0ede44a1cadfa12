/**
 * @file gf.hpp
 * @brief Exact arithmetic in finite fields F_q = F_{p^e} at desk scale.
 *
 * A field is described by its characteristic p, extension degree e and a
 * monic irreducible modulus polynomial over F_p.  The modulus is not chosen
 * from a table: it is the lexicographically smallest monic irreducible of
 * degree e (coefficients compared low-degree-first), so fixtures are
 * reproducible without external data.  Elements are dense coefficient
 * vectors reduced mod p and mod the modulus; prime fields are the e = 1
 * case of the same representation.
 *
 * Everything here is immutable after construction and safe to share across
 * threads.
 */

#ifndef GRC_GF_HPP
#define GRC_GF_HPP

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace grc {

class FqElem;

/// Raised when a desk-scale guard (enumeration threshold, search cap) trips.
class guard_error : public std::runtime_error {
  public:
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over F_p as coefficient vectors, low degree first, no
// normalization invariants beyond "coefficients in [0,p)".
using PolyFp = std::vector<int>;

inline PolyFp poly_trim(PolyFp a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline PolyFp poly_mod(PolyFp a, const PolyFp& m, long p) {
    a = poly_trim(std::move(a));
    const int dm = static_cast<int>(m.size()) - 1;  // m monic of degree dm
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int da = static_cast<int>(a.size()) - 1;
        const long c = a[da];
        for (int i = 0; i <= dm; ++i) {
            long v = a[da - dm + i] - c * m[i];
            v %= p;
            if (v < 0) v += p;
            a[da - dm + i] = static_cast<int>(v);
        }
        a = poly_trim(std::move(a));
    }
    return a;
}

inline PolyFp poly_mul_mod(const PolyFp& a, const PolyFp& b, const PolyFp& m, long p) {
    if (a.empty() || b.empty()) return {};
    PolyFp prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<int>((prod[i + j] + 1L * a[i] * b[j]) % p);
    return poly_mod(std::move(prod), m, p);
}

// Trial division by every monic polynomial of degree <= deg(f)/2.
inline bool poly_irreducible(const PolyFp& f, long p) {
    const int df = static_cast<int>(f.size()) - 1;
    if (df <= 0) return false;
    if (df == 1) return true;
    for (int dd = 1; dd <= df / 2; ++dd) {
        long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            PolyFp d(dd + 1, 0);
            long c = code;
            for (int i = 0; i < dd; ++i) {
                d[i] = static_cast<int>(c % p);
                c /= p;
            }
            d[dd] = 1;
            if (poly_mod(f, d, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/**
 * A finite field F_{p^e}.  Cheap to copy conceptually but meant to be
 * constructed once and referenced; elements hold a pointer to their field.
 * Two Fq instances with equal (p, e) are interchangeable since the modulus
 * is deterministic.
 */
class Fq {
  public:
    static constexpr int kMaxDegree = 8;

    Fq(long p, int e) : p_(p), e_(e) {
        if (!detail::is_prime(p)) throw std::invalid_argument("Fq: characteristic must be prime");
        if (e < 1) throw std::invalid_argument("Fq: extension degree must be >= 1");
        if (e > kMaxDegree) throw guard_error("Fq: extension degree beyond desk scale");
        if (p > 251) throw guard_error("Fq: characteristic beyond desk scale");
        q_ = 1;
        for (int i = 0; i < e; ++i) {
            if (q_ > (1L << 30) / p) throw guard_error("Fq: field size beyond desk scale");
            q_ *= p;
        }
        modulus_ = smallest_irreducible(p, e);
    }

    long characteristic() const { return p_; }
    int degree() const { return e_; }
    long size() const { return q_; }

    /// Monic modulus polynomial, coefficients low degree first, length e+1.
    const std::vector<int>& modulus() const { return modulus_; }

    bool operator==(const Fq& other) const { return p_ == other.p_ && e_ == other.e_; }
    bool operator!=(const Fq& other) const { return !(*this == other); }

    FqElem zero() const;
    FqElem one() const;
    /// Element with coefficient encoding v = sum c_i p^i, v in [0, q).
    FqElem from_code(long v) const;
    FqElem element(std::span<const int> coeffs) const;
    /// A fixed generator of the cyclic group F_q^x (smallest by encoding).
    FqElem primitive_element() const;

    std::string to_string() const {
        return "F" + std::to_string(q_);
    }

  private:
    static std::vector<int> smallest_irreducible(long p, int e) {
        if (e == 1) return {0, 1};  // x
        long count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            std::vector<int> f(e + 1, 0);
            long c = code;
            // lexicographic by (c_0, c_1, ...): c_0 varies slowest
            for (int i = e - 1; i >= 0; --i) {
                f[i] = static_cast<int>(c % p);
                c /= p;
            }
            f[e] = 1;
            if (detail::poly_irreducible(f, p)) return f;
        }
        throw std::logic_error("Fq: no irreducible polynomial found");  // unreachable
    }

    long p_;
    int e_;
    long q_;
    std::vector<int> modulus_;
};

/// An element of F_q: e coefficients in [0, p), reduced.
class FqElem {
  public:
    FqElem() : f_(nullptr) { c_.fill(0); }

    FqElem(const Fq* f, std::span<const int> coeffs) : f_(f) {
        c_.fill(0);
        const long p = f->characteristic();
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (i >= static_cast<size_t>(f->degree())) {
                if (coeffs[i] % p != 0)
                    throw std::invalid_argument("FqElem: coefficient vector too long");
                continue;
            }
            long v = coeffs[i] % p;
            if (v < 0) v += p;
            c_[i] = static_cast<uint8_t>(v);
        }
    }

    const Fq& field() const { return *f_; }

    bool is_zero() const {
        for (int i = 0; i < f_->degree(); ++i)
            if (c_[i]) return false;
        return true;
    }

    int coeff(int i) const { return c_[i]; }

    /// Integer encoding sum c_i p^i in [0, q).
    long code() const {
        long v = 0;
        for (int i = f_->degree() - 1; i >= 0; --i) v = v * f_->characteristic() + c_[i];
        return v;
    }

    bool operator==(const FqElem& o) const {
        check_same(o);
        return c_ == o.c_;
    }
    bool operator!=(const FqElem& o) const { return !(*this == o); }

    FqElem operator+(const FqElem& o) const {
        check_same(o);
        FqElem r(*this);
        const long p = f_->characteristic();
        for (int i = 0; i < f_->degree(); ++i) r.c_[i] = static_cast<uint8_t>((c_[i] + o.c_[i]) % p);
        return r;
    }

    FqElem operator-(const FqElem& o) const {
        check_same(o);
        FqElem r(*this);
        const long p = f_->characteristic();
        for (int i = 0; i < f_->degree(); ++i)
            r.c_[i] = static_cast<uint8_t>((c_[i] + p - o.c_[i]) % p);
        return r;
    }

    FqElem operator-() const {
        FqElem r(*this);
        const long p = f_->characteristic();
        for (int i = 0; i < f_->degree(); ++i) r.c_[i] = static_cast<uint8_t>((p - c_[i]) % p);
        return r;
    }

    FqElem operator*(const FqElem& o) const {
        check_same(o);
        const long p = f_->characteristic();
        const int e = f_->degree();
        if (e == 1) {
            FqElem r(*this);
            r.c_[0] = static_cast<uint8_t>((1L * c_[0] * o.c_[0]) % p);
            return r;
        }
        std::array<int, 2 * Fq::kMaxDegree> prod{};
        for (int i = 0; i < e; ++i) {
            if (!c_[i]) continue;
            for (int j = 0; j < e; ++j)
                prod[i + j] = static_cast<int>((prod[i + j] + 1L * c_[i] * o.c_[j]) % p);
        }
        // reduce by the monic modulus
        const std::vector<int>& m = f_->modulus();
        for (int d = 2 * e - 2; d >= e; --d) {
            const long c = prod[d];
            if (!c) continue;
            prod[d] = 0;
            for (int i = 0; i < e; ++i) {
                long v = prod[d - e + i] - c * m[i];
                v %= p;
                if (v < 0) v += p;
                prod[d - e + i] = static_cast<int>(v);
            }
        }
        FqElem r(*this);
        for (int i = 0; i < e; ++i) r.c_[i] = static_cast<uint8_t>(prod[i]);
        return r;
    }

    FqElem inverse() const {
        if (is_zero()) throw std::domain_error("FqElem: inversion of zero");
        return pow(f_->size() - 2);
    }

    FqElem operator/(const FqElem& o) const { return *this * o.inverse(); }

    /// a^n, with negative n handled through the inverse.
    FqElem pow(long n) const {
        if (n < 0) return inverse().pow(-n);
        FqElem base(*this), r = f_->one();
        while (n) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    /// "[c0,c1,...]" for extension fields, bare integer for prime fields.
    std::string to_string() const {
        if (f_->degree() == 1) return std::to_string(c_[0]);
        std::string s = "[";
        for (int i = 0; i < f_->degree(); ++i) {
            if (i) s += ",";
            s += std::to_string(c_[i]);
        }
        return s + "]";
    }

  private:
    friend class Fq;
    void check_same(const FqElem& o) const {
        if (f_ != o.f_ && *f_ != *o.f_) throw std::invalid_argument("FqElem: field mismatch");
    }

    const Fq* f_;
    std::array<uint8_t, Fq::kMaxDegree> c_;
};

inline FqElem Fq::zero() const { return from_code(0); }

inline FqElem Fq::one() const { return from_code(1); }

inline FqElem Fq::from_code(long v) const {
    if (v < 0 || v >= q_) throw std::invalid_argument("Fq: element code out of range");
    FqElem r;
    r.f_ = this;
    for (int i = 0; i < e_; ++i) {
        r.c_[i] = static_cast<uint8_t>(v % p_);
        v /= p_;
    }
    return r;
}

inline FqElem Fq::element(std::span<const int> coeffs) const { return FqElem(this, coeffs); }

inline FqElem Fq::primitive_element() const {
    for (long v = 1; v < q_; ++v) {
        FqElem a = from_code(v);
        bool generates = true;
        FqElem x = a;
        for (long k = 1; k < q_ - 1; ++k) {
            if (x == one()) {
                generates = false;
                break;
            }
            x = x * a;
        }
        if (generates) return a;
    }
    throw std::logic_error("Fq: no primitive element");  // unreachable
}

/// mu: x -> x^{p^j}; composition adds exponents mod e, j = 0 is the identity.
struct FieldAut {
    int exponent = 0;

    FqElem operator()(const FqElem& a) const {
        if (exponent == 0) return a;
        long n = 1;
        for (int i = 0; i < exponent; ++i) n *= a.field().characteristic();
        return a.pow(n);
    }

    FieldAut compose(const FieldAut& o, int field_degree) const {
        return FieldAut{(exponent + o.exponent) % field_degree};
    }

    bool is_identity() const { return exponent == 0; }
};

/// All e automorphisms of F_{p^e}, identity first.
inline std::vector<FieldAut> field_automorphisms(const Fq& f) {
    std::vector<FieldAut> out;
    for (int j = 0; j < f.degree(); ++j) out.push_back(FieldAut{j});
    return out;
}

}  // namespace grc

#endif  // GRC_GF_HPP
