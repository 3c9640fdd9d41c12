// Arbitrary-precision rational scalars and rational intervals.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace hypertop {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) { return Rat(n, d); }

// Parses "n", "-n", or "n/d". Throws on malformed input or zero denominator.
Rat parse_rat(const std::string& s);

// Exact value as a string, "n" or "n/d".
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }
inline int sgn(const Int& z) { return mpz_sgn(z.get_mpz_t()); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// Fixed-point decimal rendering with `digits` places, round-to-nearest.
std::string rat_decimal(const Rat& q, int digits);

inline Rat rat_pow(const Rat& b, unsigned e) {
    Rat r(1);
    Rat x = b;
    while (e) {
        if (e & 1) r *= x;
        x *= x;
        e >>= 1;
    }
    return r;
}

// floor(q) as an integer.
inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// Rational lower/upper bounds of sqrt(q), q >= 0, within 2^-prec_bits.
Rat sqrt_lower(const Rat& q, unsigned prec_bits);
Rat sqrt_upper(const Rat& q, unsigned prec_bits);

// Returns x with x*x == q if q is a perfect rational square, else nullopt-like flag.
bool rat_exact_sqrt(const Rat& q, Rat& out);

// Closed interval [lo, hi] with exact rational endpoints.
struct RatInterval {
    Rat lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
    static RatInterval point(const Rat& v) { return RatInterval(v, v); }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool is_point() const { return lo == hi; }
    // Sign if determined: -1, +1, or 0 when the interval straddles or touches zero.
    int sign() const {
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        return 0;
    }
    bool disjoint(const RatInterval& o) const { return hi < o.lo || o.hi < lo; }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RatInterval operator*(const RatInterval& o) const;
    // Requires o to exclude zero.
    RatInterval operator/(const RatInterval& o) const;
    RatInterval operator-() const { return {-hi, -lo}; }
};

RatInterval iv_sqrt(const RatInterval& v, unsigned prec_bits);

// Deterministic rational sampler: denominators bounded by 2^16.
class RatSampler {
  public:
    explicit RatSampler(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next_u64();
    // Uniform-ish rational in [-bound, bound] with denominator in [1, 2^16].
    Rat next_rat(long bound);
    long next_int(long lo, long hi);

  private:
    std::uint64_t state_;
};

struct HypertopError : std::runtime_error {
    std::string code;
    HypertopError(std::string c, const std::string& msg)
        : std::runtime_error(msg), code(std::move(c)) {}
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw HypertopError(code, msg);
}

}  // namespace hypertop
