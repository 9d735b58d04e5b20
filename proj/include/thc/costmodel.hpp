#pragma once

/// Symbolic per-block operation counts for the four compared schemes, the
/// conventional-cost weights (T_Add = zeta, T_Mul = zeta^2, T_Inv = zeta^3,
/// T_Hash = per-algorithm count), whole-message totals with the ceil(L/n)
/// block factor, and rank/modulus sweeps for plotting.
///
/// The weights instantiate big-O bounds with unit constants, so absolute
/// totals are model-dependent; the sweep shapes (ceiling waves over n,
/// bit-length steps over p) are constant-independent.

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "thc/error.hpp"
#include "thc/hashchain.hpp"
#include "thc/modmath.hpp"
#include "thc/opcount.hpp"

namespace thc {

enum class Scheme { Hill, AffineHill, LinEtAl, Proposed };
enum class Direction { Encrypt, Decrypt };

inline const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Hill: return "hill";
        case Scheme::AffineHill: return "affine";
        case Scheme::LinEtAl: return "lin";
        case Scheme::Proposed: return "proposed";
    }
    throw InvalidParams("unknown scheme");
}

inline const char* direction_name(Direction d) {
    return d == Direction::Encrypt ? "enc" : "dec";
}

/// Per-block symbolic counts.
///
///   scheme        mul        add        inv(dec)  hash
///   hill          n^2        n^2-n      -         -
///   affine        n^2        n^2        -         -
///   lin           n^2+n+3    n^2+4      1         n+1
///   proposed      n^2+2n     n^2+n+1    1         1
///
/// Decryption never includes the one-time key-matrix inversion.
inline OpCount block_cost(Scheme scheme, std::uint64_t n, Direction dir) {
    if (n < 1) throw InvalidParams("dimension must be >= 1");
    OpCount c;
    const std::uint64_t n2 = n * n;
    switch (scheme) {
        case Scheme::Hill:
            c.mul = n2;
            c.add = n2 - n;
            break;
        case Scheme::AffineHill:
            c.mul = n2;
            c.add = n2;
            break;
        case Scheme::LinEtAl:
            c.mul = n2 + n + 3;
            c.add = n2 + 4;
            c.hash = n + 1;
            if (dir == Direction::Decrypt) c.inv = 1;
            break;
        case Scheme::Proposed:
            c.mul = n2 + 2 * n;
            c.add = n2 + n + 1;
            c.hash = 1;
            if (dir == Direction::Decrypt) c.inv = 1;
            break;
    }
    return c;
}

/// Conventional-cost weights for a modulus of bit-length zeta.
struct CostParams {
    unsigned zeta;          // floor(log2 p) + 1
    std::uint64_t hash_ops; // operations per hash invocation

    static CostParams for_modulus(std::uint64_t p, HashAlg alg) {
        if (p < 2) throw InvalidParams("modulus must be >= 2");
        return CostParams{thc::zeta(p), hash_op_cost(alg)};
    }
};

/// Scalar total: mul*zeta^2 + add*zeta + inv*zeta^3 + hash*hash_ops.
inline std::uint64_t weigh(const OpCount& c, const CostParams& cp) {
    const std::uint64_t z = cp.zeta;
    return c.mul * z * z + c.add * z + c.inv * z * z * z + c.hash * cp.hash_ops;
}

/// Whole-message total: ceil(L/n) weighted blocks.
inline std::uint64_t total_cost(Scheme scheme, std::uint64_t letters,
                                std::uint64_t n, std::uint64_t p, HashAlg alg,
                                Direction dir) {
    if (letters == 0) return 0;
    const std::uint64_t blocks = (letters + n - 1) / n;
    return blocks * weigh(block_cost(scheme, n, dir), CostParams::for_modulus(p, alg));
}

using SweepRow = std::pair<std::uint64_t, std::uint64_t>; // (x, total_ops)

/// Totals across key ranks, fixed modulus: the ceil(L/n) factor makes the
/// curve wave instead of growing smoothly.
inline std::vector<SweepRow> sweep_rank(Scheme scheme, std::uint64_t letters,
                                        std::uint64_t p, HashAlg alg,
                                        Direction dir, std::uint64_t n_lo,
                                        std::uint64_t n_hi) {
    if (n_lo < 1 || n_lo > n_hi) throw InvalidParams("bad rank range");
    std::vector<SweepRow> rows;
    rows.reserve(n_hi - n_lo + 1);
    for (std::uint64_t n = n_lo; n <= n_hi; ++n)
        rows.emplace_back(n, total_cost(scheme, letters, n, p, alg, dir));
    return rows;
}

/// Totals across moduli, fixed rank: piecewise constant in p, stepping
/// exactly where the bit-length does, i.e. at powers of two.
inline std::vector<SweepRow> sweep_modulus(Scheme scheme, std::uint64_t letters,
                                           std::uint64_t n, HashAlg alg,
                                           Direction dir, std::uint64_t p_lo,
                                           std::uint64_t p_hi) {
    if (p_lo < 2 || p_lo > p_hi) throw InvalidParams("bad modulus range");
    std::vector<SweepRow> rows;
    rows.reserve(p_hi - p_lo + 1);
    for (std::uint64_t p = p_lo; p <= p_hi; ++p)
        rows.emplace_back(p, total_cost(scheme, letters, n, p, alg, dir));
    return rows;
}

/// Uniform per-block count from an instrumented encryption/decryption
/// trace; zero counts for an empty trace. Every block of one message does
/// identical arithmetic, so a non-uniform trace is an instrumentation bug.
inline OpCount measured_counts(const OpTrace& trace) {
    if (trace.empty()) return OpCount{};
    for (const auto& block : trace)
        if (block != trace.front())
            throw Error("non-uniform per-block operation trace");
    return trace.front();
}

/// CSV rows for external plotting: header `x,scheme,direction,total_ops`,
/// one row per sweep point, LF endings, no quoting.
inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows,
                            Scheme scheme, Direction dir) {
    out << "x,scheme,direction,total_ops\n";
    for (const auto& [x, total] : rows)
        out << x << ',' << scheme_name(scheme) << ',' << direction_name(dir)
            << ',' << total << '\n';
}

} // namespace thc
