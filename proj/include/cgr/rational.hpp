#pragma once

#include <gmpxx.h>
#include <string>

#include "cgr/errors.hpp"

namespace cgr {

using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Rat& q) { return sgn(q.get_num()); }
inline int sgn(const Int& z) { return mpz_sgn(z.get_mpz_t()); }

// Parses "p/q" or "p"; canonical form, q > 0.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw io_error("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0) throw io_error("bad rational literal: " + s);
    if (sgn(q.get_den()) == 0) throw io_error("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

} // namespace cgr
