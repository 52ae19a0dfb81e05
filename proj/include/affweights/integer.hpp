#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace affweights {

using Integer = mpz_class;
using Rational = mpq_class;

/// floor(a / b) for b != 0.
inline Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Representative of a modulo m in [0, m), m > 0.
inline Integer amod(const Integer& a, const Integer& m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Integer& x) { return x.get_str(); }

inline std::string to_string(const Rational& q)
{
    return is_integral(q) ? q.get_num().get_str() : q.get_str();
}

/// "a,b,c" for integer sequences; used by CLI output and diagnostics.
inline std::string join(const std::vector<Integer>& xs, const char* sep = ",")
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += sep;
        out += xs[i].get_str();
    }
    return out;
}

} // namespace affweights
