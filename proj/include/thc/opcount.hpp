#pragma once

#include <cstdint>
#include <vector>

namespace thc {

/// Tally of scalar modular operations and hash invocations.
///
/// The arithmetic routines accept an optional `OpCount*` and bump the
/// relevant counter once per modular multiplication, addition/subtraction,
/// inversion, or hash call, regardless of operand values. A null tally
/// means no counting.
struct OpCount {
    std::uint64_t mul = 0;
    std::uint64_t add = 0;
    std::uint64_t inv = 0;
    std::uint64_t hash = 0;

    friend OpCount operator+(OpCount a, const OpCount& b) {
        a.mul += b.mul;
        a.add += b.add;
        a.inv += b.inv;
        a.hash += b.hash;
        return a;
    }

    OpCount& operator+=(const OpCount& b) { return *this = *this + b; }

    friend OpCount operator-(OpCount a, const OpCount& b) {
        a.mul -= b.mul;
        a.add -= b.add;
        a.inv -= b.inv;
        a.hash -= b.hash;
        return a;
    }

    bool operator==(const OpCount&) const = default;
};

/// Per-block tallies recorded by an instrumented message encryption or
/// decryption: one entry per processed block, in block order.
using OpTrace = std::vector<OpCount>;

} // namespace thc
