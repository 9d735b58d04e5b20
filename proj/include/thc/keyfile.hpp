#pragma once

/// Plaintext key files: a `p n` header line, a hash-algorithm name line,
/// then the square-matrix text block (its own `n m` header and n rows of
/// n residues). Human-diffable on purpose; the redundant dimensions are
/// cross-checked on load.

#include <istream>
#include <ostream>
#include <string>

#include "thc/corecipher.hpp"
#include "thc/error.hpp"
#include "thc/hashchain.hpp"
#include "thc/modmath.hpp"

namespace thc {

struct KeyFile {
    CipherParams params;
    HashAlg alg;
};

inline void write_key_file(std::ostream& out, const CipherParams& params,
                           HashAlg alg) {
    out << params.p() << ' ' << params.n() << '\n'
        << hash_alg_name(alg) << '\n'
        << format_matrix_text(params.key());
}

inline KeyFile read_key_file(std::istream& in) {
    std::uint64_t p = 0, n = 0;
    if (!(in >> p >> n)) throw InvalidParams("key file: bad `p n` header");
    std::string alg_name;
    if (!(in >> alg_name)) throw InvalidParams("key file: missing hash line");
    const HashAlg alg = hash_alg_from_name(alg_name);
    Matrix key = parse_matrix_text(in);
    if (key.rows() != n || key.modulus() != p)
        throw InvalidParams("key file: matrix header disagrees with `p n`");
    return KeyFile{CipherParams(static_cast<Residue>(p), n, std::move(key)), alg};
}

} // namespace thc
