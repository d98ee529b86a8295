#ifndef KNOTPAIR_RATIONAL_HPP
#define KNOTPAIR_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kp {

using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline double to_double(const Rat& r) { return r.get_d(); }

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// lcm of denominators / gcd of numerators, for making integral primitive polys
inline mpz_class den_of(const Rat& r) { return r.get_den(); }
inline mpz_class num_of(const Rat& r) { return r.get_num(); }

} // namespace kp

#endif
