#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace sod {

/// Exact rational scalar. Every coordinate in the system is a Rat; no
/// floating point appears anywhere in a predicate or a construction.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

inline int sign(const Rat& r) { return r.sign(); }

/// Serializes as "num/den", or just "num" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "num" or "num/den". Rejects zero denominators and garbage.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in \"" + s + "\"");
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal \"" + s + "\"");
    }
}

/// Floor of a rational as an integer.
inline Int rat_floor(const Rat& r) {
    Int q = numerator(r) / denominator(r);
    if (r < Rat(q)) q -= 1;
    return q;
}

/// The rational with the smallest denominator strictly inside (a, b).
/// Used to pick sample points between breakpoints: any interior point is
/// equally valid, and small numerators keep the exact arithmetic fast.
inline Rat simplest_between(const Rat& a, const Rat& b) {
    if (!(a < b)) throw std::invalid_argument("simplest_between: empty interval");
    Int n = rat_floor(a);
    if (b > Rat(n + 1)) return Rat(n + 1);
    if (a == Rat(n)) {
        Int k = rat_floor(1 / (b - a)) + 1;  // n + 1/k lands strictly inside
        return Rat(n) + Rat(Int(1), k);
    }
    return Rat(n) + 1 / simplest_between(1 / (b - Rat(n)), 1 / (a - Rat(n)));
}

}  // namespace sod
