#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace blocklie {

// Exact arithmetic scalars. Everything in this library is a Rat; no
// floating point is ever produced, not even in output files.
using Int = mpz_class;
using Rat = mpq_class;

// mpq_class arithmetic keeps values canonical (lowest terms, positive
// denominator), but two-argument construction does not, so all num/den
// construction goes through here.
inline Rat ratio(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat ratio(long num, long den) { return ratio(Int(num), Int(den)); }

// Parses "n" or "n/d" with optional sign, arbitrary precision.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        Int n;
        if (n.set_str(s, 10) != 0) throw std::invalid_argument("bad integer: " + s);
        return Rat(n);
    }
    Int n, d;
    if (n.set_str(s.substr(0, slash), 10) != 0 || d.set_str(s.substr(slash + 1), 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    return ratio(n, d);
}

// "n" when integral, "n/d" otherwise.
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Rat pow2(int e) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rat(p) : ratio(Int(1), p);
}

} // namespace blocklie
