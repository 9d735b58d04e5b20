#pragma once

/// Exact scalar and matrix arithmetic over Z_m.
///
/// Moduli are capped below 2^31 so every product of two reduced residues
/// fits a 64-bit intermediate; only keyspace_size needs an unbounded
/// accumulator. Both prime and composite moduli (e.g. m = 26) are
/// supported. All public matrix/vector indexing is 1-based; storage is
/// row-major 0-based internally.

#include <boost/multiprecision/cpp_int.hpp>

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "thc/error.hpp"
#include "thc/opcount.hpp"

namespace thc {

using Residue = std::uint32_t;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kModulusCap = std::uint64_t{1} << 31;

inline void check_modulus(std::uint64_t m) {
    if (m < 2 || m >= kModulusCap)
        throw InvalidParams("modulus must be in [2, 2^31): " + std::to_string(m));
}

/// Bit-length of a modulus, floor(log2 p) + 1.
inline unsigned zeta(std::uint64_t p) {
    return static_cast<unsigned>(std::bit_width(p));
}

/// Deterministic primality by trial division; cheap for m < 2^31.
inline bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    for (std::uint64_t d = 3; d * d <= m; d += 2)
        if (m % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Scalar ops. The optional tally counts one unit per modular operation.
// ---------------------------------------------------------------------------

inline Residue add_mod(std::uint64_t a, std::uint64_t b, Residue m,
                       OpCount* tally = nullptr) {
    if (tally) ++tally->add;
    return static_cast<Residue>((a % m + b % m) % m);
}

inline Residue sub_mod(std::uint64_t a, std::uint64_t b, Residue m,
                       OpCount* tally = nullptr) {
    if (tally) ++tally->add;
    return static_cast<Residue>((a % m + (m - b % m)) % m);
}

inline Residue mul_mod(std::uint64_t a, std::uint64_t b, Residue m,
                       OpCount* tally = nullptr) {
    if (tally) ++tally->mul;
    return static_cast<Residue>((a % m) * (b % m) % m);
}

/// Modular inverse by the extended Euclidean algorithm.
/// Throws NotInvertible when gcd(a mod m, m) != 1 (including a = 0).
inline Residue mod_inv(std::uint64_t a, Residue m, OpCount* tally = nullptr) {
    check_modulus(m);
    std::int64_t r0 = m, r1 = static_cast<std::int64_t>(a % m);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - q * s1;
        s0 = s1;
        s1 = tmp;
    }
    if (r0 != 1)
        throw NotInvertible("no inverse of " + std::to_string(a) + " mod " +
                            std::to_string(m));
    if (tally) ++tally->inv;
    s0 %= static_cast<std::int64_t>(m);
    if (s0 < 0) s0 += m;
    return static_cast<Residue>(s0);
}

// ---------------------------------------------------------------------------
// Row vectors and matrices over Z_m
// ---------------------------------------------------------------------------

class RowVector {
public:
    RowVector(std::size_t size, Residue modulus)
        : mod_(modulus), e_(size, 0) {
        check_modulus(modulus);
    }

    RowVector(std::initializer_list<std::uint64_t> values, Residue modulus)
        : mod_(modulus) {
        check_modulus(modulus);
        e_.reserve(values.size());
        for (auto v : values) e_.push_back(static_cast<Residue>(v % modulus));
    }

    std::size_t size() const { return e_.size(); }
    Residue modulus() const { return mod_; }

    /// 1-based element access.
    Residue at(std::size_t i) const { return e_[i - 1]; }
    void set(std::size_t i, std::uint64_t v) {
        e_[i - 1] = static_cast<Residue>(v % mod_);
    }

    const std::vector<Residue>& entries() const { return e_; }

    bool operator==(const RowVector&) const = default;

private:
    Residue mod_;
    std::vector<Residue> e_;
};

class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, Residue modulus)
        : rows_(rows), cols_(cols), mod_(modulus), e_(rows * cols, 0) {
        check_modulus(modulus);
        if (rows == 0 || cols == 0)
            throw DimensionMismatch("matrix dimensions must be positive");
    }

    static Matrix identity(std::size_t n, Residue modulus) {
        Matrix m(n, n, modulus);
        for (std::size_t i = 1; i <= n; ++i) m.set(i, i, 1 % modulus);
        return m;
    }

    static Matrix from_rows(
        std::initializer_list<std::initializer_list<std::uint64_t>> rows,
        Residue modulus) {
        const std::size_t r = rows.size();
        const std::size_t c = rows.begin()->size();
        Matrix m(r, c, modulus);
        std::size_t i = 1;
        for (const auto& row : rows) {
            if (row.size() != c)
                throw DimensionMismatch("ragged row in matrix literal");
            std::size_t j = 1;
            for (auto v : row) m.set(i, j++, v);
            ++i;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Residue modulus() const { return mod_; }

    /// 1-based (i, j) element access.
    Residue at(std::size_t i, std::size_t j) const {
        return e_[(i - 1) * cols_ + (j - 1)];
    }
    void set(std::size_t i, std::size_t j, std::uint64_t v) {
        e_[(i - 1) * cols_ + (j - 1)] = static_cast<Residue>(v % mod_);
    }

    RowVector row(std::size_t i) const {
        RowVector r(cols_, mod_);
        for (std::size_t j = 1; j <= cols_; ++j) r.set(j, at(i, j));
        return r;
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_, cols_;
    Residue mod_;
    std::vector<Residue> e_;
};

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.modulus() != b.modulus())
        throw ModulusMismatch("matrix product across different moduli");
    if (a.cols() != b.rows())
        throw DimensionMismatch("inner dimensions disagree");
    const Residue m = a.modulus();
    Matrix c(a.rows(), b.cols(), m);
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= b.cols(); ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 1; k <= a.cols(); ++k)
                acc = (acc + std::uint64_t{a.at(i, k)} * b.at(k, j)) % m;
            c.set(i, j, acc);
        }
    return c;
}

/// Row-vector times matrix. Tally accounting: n*cols multiplications and
/// (n-1)*cols additions (accumulation starts from the first product).
inline RowVector vec_mat_mul(const RowVector& x, const Matrix& k,
                             OpCount* tally = nullptr) {
    if (x.modulus() != k.modulus())
        throw ModulusMismatch("vector/matrix moduli differ");
    if (x.size() != k.rows())
        throw DimensionMismatch("vector length does not match matrix rows");
    const Residue m = x.modulus();
    RowVector y(k.cols(), m);
    for (std::size_t j = 1; j <= k.cols(); ++j) {
        Residue acc = mul_mod(x.at(1), k.at(1, j), m, tally);
        for (std::size_t i = 2; i <= k.rows(); ++i)
            acc = add_mod(acc, mul_mod(x.at(i), k.at(i, j), m, tally), m, tally);
        y.set(j, acc);
    }
    return y;
}

namespace detail {

// Determinant mod a prime via Gaussian elimination.
inline Residue det_prime(Matrix a) {
    const Residue p = a.modulus();
    const std::size_t n = a.rows();
    std::uint64_t det = 1;
    bool negate = false;
    for (std::size_t col = 1; col <= n; ++col) {
        std::size_t pivot = 0;
        for (std::size_t r = col; r <= n; ++r)
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot == 0) return 0;
        if (pivot != col) {
            negate = !negate;
            for (std::size_t j = col; j <= n; ++j) {
                const Residue tmp = a.at(col, j);
                a.set(col, j, a.at(pivot, j));
                a.set(pivot, j, tmp);
            }
        }
        const Residue pv = a.at(col, col);
        det = det * pv % p;
        const Residue pv_inv = mod_inv(pv, p);
        for (std::size_t r = col + 1; r <= n; ++r) {
            const Residue factor = mul_mod(a.at(r, col), pv_inv, p);
            if (factor == 0) continue;
            for (std::size_t j = col; j <= n; ++j)
                a.set(r, j, sub_mod(a.at(r, j), mul_mod(factor, a.at(col, j), p), p));
        }
    }
    if (negate) det = (p - det % p) % p;
    return static_cast<Residue>(det);
}

// Exact integer determinant by fraction-free (Bareiss) elimination, so the
// result can be reduced mod a composite m without dividing by non-units.
inline BigInt det_bareiss(const Matrix& a) {
    const std::size_t n = a.rows();
    std::vector<BigInt> w(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i * n + j] = a.at(i + 1, j + 1);
    auto at = [&](std::size_t i, std::size_t j) -> BigInt& {
        return w[i * n + j];
    };
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t pivot = 0;
            for (std::size_t r = k + 1; r < n; ++r)
                if (at(r, k) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot == 0) return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(at(k, j), at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

inline Residue reduce_bigint(const BigInt& v, Residue m) {
    BigInt r = v % m;
    if (r < 0) r += m;
    return r.convert_to<Residue>();
}

} // namespace detail

/// Determinant mod m. Prime moduli use Gaussian elimination in Z_p;
/// composite moduli take the exact integer determinant (Bareiss) and
/// reduce, avoiding division by zero divisors.
inline Residue mat_det(const Matrix& a) {
    if (a.rows() != a.cols())
        throw DimensionMismatch("determinant of a non-square matrix");
    if (is_prime(a.modulus())) return detail::det_prime(a);
    return detail::reduce_bigint(detail::det_bareiss(a), a.modulus());
}

/// gcd(det A mod m, m) = 1, the invertibility condition over Z_m.
inline bool is_valid_key(const Matrix& a) {
    if (a.rows() != a.cols())
        throw DimensionMismatch("key matrix must be square");
    return std::gcd(std::uint64_t{mat_det(a)}, std::uint64_t{a.modulus()}) == 1;
}

namespace detail {

// Gauss-Jordan inverse over a prime field.
inline Matrix inv_prime(const Matrix& a) {
    const Residue p = a.modulus();
    const std::size_t n = a.rows();
    Matrix w = a;
    Matrix inv = Matrix::identity(n, p);
    for (std::size_t col = 1; col <= n; ++col) {
        std::size_t pivot = 0;
        for (std::size_t r = col; r <= n; ++r)
            if (w.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot == 0) throw NotInvertible("singular matrix mod prime");
        if (pivot != col)
            for (std::size_t j = 1; j <= n; ++j) {
                Residue t = w.at(col, j);
                w.set(col, j, w.at(pivot, j));
                w.set(pivot, j, t);
                t = inv.at(col, j);
                inv.set(col, j, inv.at(pivot, j));
                inv.set(pivot, j, t);
            }
        const Residue pv_inv = mod_inv(w.at(col, col), p);
        for (std::size_t j = 1; j <= n; ++j) {
            w.set(col, j, mul_mod(w.at(col, j), pv_inv, p));
            inv.set(col, j, mul_mod(inv.at(col, j), pv_inv, p));
        }
        for (std::size_t r = 1; r <= n; ++r) {
            if (r == col) continue;
            const Residue factor = w.at(r, col);
            if (factor == 0) continue;
            for (std::size_t j = 1; j <= n; ++j) {
                w.set(r, j, sub_mod(w.at(r, j), mul_mod(factor, w.at(col, j), p), p));
                inv.set(r, j,
                        sub_mod(inv.at(r, j), mul_mod(factor, inv.at(col, j), p), p));
            }
        }
    }
    return inv;
}

// Adjugate inverse for composite moduli: A^{-1} = det^{-1} adj(A), with the
// cofactor minors computed as exact integer determinants.
inline Matrix inv_adjugate(const Matrix& a) {
    const Residue m = a.modulus();
    const std::size_t n = a.rows();
    const Residue det = reduce_bigint(det_bareiss(a), m);
    const Residue det_inv = mod_inv(det, m); // throws NotInvertible on gcd != 1
    Matrix inv(n, n, m);
    if (n == 1) {
        inv.set(1, 1, det_inv);
        return inv;
    }
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            Matrix minor(n - 1, n - 1, m);
            std::size_t mr = 1;
            for (std::size_t r = 1; r <= n; ++r) {
                if (r == i) continue;
                std::size_t mc = 1;
                for (std::size_t c = 1; c <= n; ++c) {
                    if (c == j) continue;
                    minor.set(mr, mc++, a.at(r, c));
                }
                ++mr;
            }
            BigInt cof = det_bareiss(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            // adjugate transposes the cofactor matrix
            inv.set(j, i, mul_mod(reduce_bigint(cof, m), det_inv, m));
        }
    return inv;
}

} // namespace detail

/// Matrix inverse mod m; throws NotInvertible when gcd(det, m) != 1.
inline Matrix mat_inv(const Matrix& a) {
    if (a.rows() != a.cols())
        throw DimensionMismatch("inverse of a non-square matrix");
    if (is_prime(a.modulus())) {
        if (!is_valid_key(a)) throw NotInvertible("matrix not invertible");
        return detail::inv_prime(a);
    }
    return detail::inv_adjugate(a);
}

/// |GL(n, Z_p)| = prod_{k=0}^{n-1} (p^n - p^k), as an unbounded integer.
inline BigInt keyspace_size(std::size_t n, Residue p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    if (n < 1) throw InvalidParams("dimension must be >= 1");
    BigInt pn = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(n));
    BigInt size = 1;
    BigInt pk = 1;
    for (std::size_t k = 0; k < n; ++k) {
        size *= pn - pk;
        pk *= p;
    }
    return size;
}

// ---------------------------------------------------------------------------
// Matrix text format: first line "n m", then n lines of n decimal residues.
// ---------------------------------------------------------------------------

inline std::string format_matrix_text(const Matrix& a) {
    if (a.rows() != a.cols())
        throw DimensionMismatch("matrix text format is for square matrices");
    std::ostringstream out;
    out << a.rows() << ' ' << a.modulus() << '\n';
    for (std::size_t i = 1; i <= a.rows(); ++i) {
        for (std::size_t j = 1; j <= a.cols(); ++j) {
            if (j > 1) out << ' ';
            out << a.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

inline Matrix parse_matrix_text(std::istream& in) {
    std::uint64_t n = 0, m = 0;
    if (!(in >> n >> m)) throw InvalidParams("matrix text: bad header line");
    if (n == 0) throw InvalidParams("matrix text: dimension must be positive");
    check_modulus(m);
    Matrix a(n, n, static_cast<Residue>(m));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            std::uint64_t v;
            if (!(in >> v)) throw InvalidParams("matrix text: missing entries");
            if (v >= m)
                throw InvalidParams("matrix text: entry " + std::to_string(v) +
                                    " not reduced mod " + std::to_string(m));
            a.set(i, j, v);
        }
    return a;
}

} // namespace thc
