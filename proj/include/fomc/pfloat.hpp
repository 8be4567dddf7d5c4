#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fomc/bits.hpp"
#include "fomc/error.hpp"

namespace fomc {

using BigInt = boost::multiprecision::cpp_int;

inline int64_t bitlen(const BigInt& x) {
  if (x == 0) return 0;  // bit-length of 0 is 0
  return static_cast<int64_t>(boost::multiprecision::msb(boost::multiprecision::abs(x))) + 1;
}

inline BigInt pow2(int64_t k) { return BigInt(1) << static_cast<unsigned>(k); }

// Exact dyadic rational: significand * 2^shift, significand odd or exact zero.
struct Dyadic {
  BigInt sig;
  int64_t shift = 0;

  Dyadic() = default;
  Dyadic(BigInt s, int64_t sh) : sig(std::move(s)), shift(sh) { normalize(); }
  explicit Dyadic(long v) : sig(v), shift(0) { normalize(); }

  void normalize() {
    if (sig == 0) {
      shift = 0;
      return;
    }
    unsigned tz = boost::multiprecision::lsb(boost::multiprecision::abs(sig));
    if (tz) {
      sig >>= tz;
      shift += tz;
    }
  }

  bool is_zero() const { return sig == 0; }
  int sign() const { return sig == 0 ? 0 : (sig < 0 ? -1 : 1); }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.sig == 0) return b;
    if (b.sig == 0) return a;
    int64_t sh = std::min(a.shift, b.shift);
    return Dyadic((a.sig << static_cast<unsigned>(a.shift - sh)) + (b.sig << static_cast<unsigned>(b.shift - sh)), sh);
  }
  friend Dyadic operator-(const Dyadic& a) { return Dyadic(-a.sig, a.shift); }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) { return Dyadic(a.sig * b.sig, a.shift + b.shift); }
  friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.sig == b.sig && a.shift == b.shift; }
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return (a - b).sig < 0; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return (a - b).sig <= 0; }

  // floor(log2 |x|); pre: x != 0
  int64_t floor_log2() const { return bitlen(sig) - 1 + shift; }

  double to_double() const {
    double m = sig.convert_to<double>();
    return std::ldexp(m, static_cast<int>(shift));
  }
};

// Exact rational, denominator positive. Heavier than Dyadic; used where
// exact intermediates are genuinely non-dyadic (means, quotients).
struct Rat {
  BigInt num;
  BigInt den = 1;

  Rat() = default;
  Rat(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) { normalize(); }
  explicit Rat(long v) : num(v), den(1) {}
  explicit Rat(const Dyadic& d) {
    num = d.sig;
    den = 1;
    if (d.shift >= 0)
      num <<= static_cast<unsigned>(d.shift);
    else
      den <<= static_cast<unsigned>(-d.shift);
  }

  void normalize() {
    if (den < 0) {
      den = -den;
      num = -num;
    }
    if (num == 0) {
      den = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num), den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_zero() const { return num == 0; }
  int sign() const { return num == 0 ? 0 : (num < 0 ? -1 : 1); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Rat operator-(const Rat& a) { return Rat(-a.num, a.den); }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw DivisionByZero();
    return Rat(a.num * b.den, a.den * b.num);
  }
  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator<(const Rat& a, const Rat& b) { return (a - b).num < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return (a - b).num <= 0; }

  Rat abs() const { return Rat(boost::multiprecision::abs(num), den); }

  // floor(log2 |x|); pre: x != 0
  int64_t floor_log2() const {
    BigInt n = boost::multiprecision::abs(num);
    int64_t e0 = bitlen(n) - bitlen(den);
    // |x| >= 2^e0 ?
    bool ge;
    if (e0 >= 0)
      ge = n >= (den << static_cast<unsigned>(e0));
    else
      ge = (n << static_cast<unsigned>(-e0)) >= den;
    return ge ? e0 : e0 - 1;
  }
};

// Bit budgets of the float datatype: p_m mantissa bits (signed), p_e
// exponent bits, p = p_m + p_e total.
struct PrecisionSpec {
  int pm = 2;
  int pe = 1;

  PrecisionSpec() = default;
  PrecisionSpec(int pm_, int pe_) : pm(pm_), pe(pe_) {
    if (pm < 2 || pe < 1) throw Error(ErrorKind::Precondition, "PrecisionSpec requires p_m >= 2 and p_e >= 1");
    if (pm > 62 || pe > 20) throw Error(ErrorKind::Precondition, "PrecisionSpec exceeds implementation caps");
  }

  int total() const { return pm + pe; }
  // Exponent range: 2^pe values, top end 2^(pe-1) inclusive.
  int64_t emin() const { return -(int64_t(1) << (pe - 1)) + 1; }
  int64_t emax() const { return int64_t(1) << (pe - 1); }

  friend bool operator==(const PrecisionSpec& a, const PrecisionSpec& b) { return a.pm == b.pm && a.pe == b.pe; }
};

// Canonical p-precision float: mantissa of bit-length exactly p_m - 1, or
// the exact zero <0,0>. Every representable value has a unique encoding.
struct PFloat {
  int64_t man = 0;
  int64_t exp = 0;
  PrecisionSpec spec;

  PFloat() = default;
  explicit PFloat(PrecisionSpec s) : man(0), exp(0), spec(s) {}

  static PFloat from_parts(int64_t man, int64_t exp, PrecisionSpec spec) {
    PFloat f;
    f.man = man;
    f.exp = exp;
    f.spec = spec;
    if (!f.is_canonical()) throw Error(ErrorKind::Precondition, "non-canonical PFloat parts");
    return f;
  }

  bool is_canonical() const {
    if (man == 0) return exp == 0;
    int64_t a = man < 0 ? -man : man;
    if (bitlen(BigInt(a)) != spec.pm - 1) return false;
    return exp >= spec.emin() && exp <= spec.emax();
  }

  bool is_zero() const { return man == 0; }
  int sign() const { return man == 0 ? 0 : (man < 0 ? -1 : 1); }

  friend bool operator==(const PFloat& a, const PFloat& b) {
    return a.man == b.man && a.exp == b.exp && a.spec == b.spec;
  }
  friend bool operator!=(const PFloat& a, const PFloat& b) { return !(a == b); }
};

// Exact value m * 2^(e - |m| + 1) where |m| is the bit-length of m.
inline Dyadic value_of(const PFloat& f) {
  if (f.man == 0) return Dyadic();
  int64_t blen = bitlen(BigInt(f.man < 0 ? -f.man : f.man));
  return Dyadic(BigInt(f.man), f.exp - blen + 1);
}

// Smallest positive value representable by a p-precision float in the
// denormal reading used by the precision experiments: 2^-(p_m - 2 + 2^(p_e-1)).
inline Dyadic min_positive(const PrecisionSpec& spec) {
  return Dyadic(BigInt(1), -(int64_t(spec.pm) - 2 + (int64_t(1) << (spec.pe - 1))));
}

namespace detail {

inline PFloat make_zero(PrecisionSpec spec) { return PFloat(spec); }

inline PFloat make_saturated(int sign, PrecisionSpec spec) {
  PFloat f(spec);
  f.man = sign * ((int64_t(1) << (spec.pm - 1)) - 1);
  f.exp = spec.emax();
  return f;
}

inline PFloat make_min_canonical(int sign, PrecisionSpec spec) {
  PFloat f(spec);
  f.man = sign * (int64_t(1) << (spec.pm - 2));
  f.exp = spec.emin();
  return f;
}

}  // namespace detail

// Nearest canonical float; ties round half-to-even on the mantissa grid of
// the lower binade (renormalizing upward when the rounded mantissa
// overflows the binade). Values at or below half the smallest positive
// canonical magnitude flush to exact zero; values past the largest
// magnitude saturate to it.
inline PFloat round_nearest(const Rat& x, const PrecisionSpec& spec) {
  if (x.is_zero()) return detail::make_zero(spec);
  int sign = x.sign();
  Rat a = x.abs();
  int64_t E = a.floor_log2();
  if (E < spec.emin()) {
    // Nearest of {0, min positive canonical}; boundary goes to zero (its
    // mantissa 0 is even).
    Rat half_min(BigInt(1), BigInt(1));
    int64_t he = spec.emin() - 1;
    if (he >= 0)
      half_min = Rat(pow2(he), 1);
    else
      half_min = Rat(1, pow2(-he));
    if (a <= half_min) return detail::make_zero(spec);
    return detail::make_min_canonical(sign, spec);
  }
  if (E > spec.emax()) return detail::make_saturated(sign, spec);
  // m0 = round-half-even(a / 2^(E - pm + 2)) in [2^(pm-2), 2^(pm-1)]
  int64_t sh = E - spec.pm + 2;
  BigInt num = a.num, den = a.den;
  if (sh >= 0)
    den <<= static_cast<unsigned>(sh);
  else
    num <<= static_cast<unsigned>(-sh);
  BigInt q = num / den, r = num % den;
  BigInt twice = r * 2;
  if (twice > den || (twice == den && boost::multiprecision::bit_test(q, 0))) ++q;
  if (q == pow2(spec.pm - 1)) {
    q >>= 1;
    ++E;
    if (E > spec.emax()) return detail::make_saturated(sign, spec);
  }
  PFloat f(spec);
  f.man = sign * q.convert_to<int64_t>();
  f.exp = E;
  return f;
}

inline PFloat round_nearest(const Dyadic& x, const PrecisionSpec& spec) { return round_nearest(Rat(x), spec); }

// Truncate toward zero to the given number of significant bits.
inline Dyadic trunc_sig_bits(const Rat& x, int bits) {
  if (x.is_zero()) return Dyadic();
  Rat a = x.abs();
  int64_t E = a.floor_log2();
  int64_t G = E - bits + 1;
  BigInt num = a.num, den = a.den;
  if (G >= 0)
    den <<= static_cast<unsigned>(G);
  else
    num <<= static_cast<unsigned>(-G);
  BigInt t = num / den;  // floor of positive
  if (x.sign() < 0) t = -t;
  return Dyadic(t, G);
}

enum class ArithOp { Add, Mul, Div };

// p-truncated arithmetic: exact dyadic/rational result, then one rounding.
// Division truncates the exact quotient to p_m + 2 significant bits first.
inline PFloat arith(ArithOp op, const PFloat& a, const PFloat& b) {
  if (!(a.spec == b.spec)) throw Error(ErrorKind::Precondition, "arith operands have different specs");
  const PrecisionSpec& spec = a.spec;
  switch (op) {
    case ArithOp::Add:
      return round_nearest(value_of(a) + value_of(b), spec);
    case ArithOp::Mul:
      return round_nearest(value_of(a) * value_of(b), spec);
    case ArithOp::Div: {
      if (b.is_zero()) throw DivisionByZero();
      Rat q = Rat(value_of(a)) / Rat(value_of(b));
      return round_nearest(Rat(trunc_sig_bits(q, spec.pm + 2)), spec);
    }
  }
  throw Error(ErrorKind::Precondition, "bad ArithOp");
}

// Exact dyadic sum of the whole sequence, rounded once; therefore
// permutation-invariant by construction. Empty sum is zero.
inline PFloat sum_iter(const std::vector<PFloat>& xs, const PrecisionSpec& spec) {
  Dyadic acc;
  for (const auto& x : xs) {
    if (!(x.spec == spec)) throw Error(ErrorKind::Precondition, "sum_iter operands have different specs");
    acc = acc + value_of(x);
  }
  return round_nearest(acc, spec);
}

// Element-wise rounding of an exact probability vector; returns the rounded
// floats and the nonzero count (Proposition-1 experiment).
struct SimplexResult {
  std::vector<PFloat> rounded;
  int64_t nonzero_count = 0;
};

inline SimplexResult approx_simplex(const std::vector<Rat>& a, const PrecisionSpec& spec) {
  Rat sum(0);
  for (const auto& x : a) {
    if (x.sign() < 0) throw InvalidSimplex("simplex entry is negative");
    sum = sum + x;
  }
  if (!(sum == Rat(1))) throw InvalidSimplex("simplex entries do not sum to 1");
  SimplexResult res;
  res.rounded.reserve(a.size());
  for (const auto& x : a) {
    PFloat f = round_nearest(x, spec);
    if (!f.is_zero()) ++res.nonzero_count;
    res.rounded.push_back(f);
  }
  // Proposition 1(1): nonzero count never exceeds 2^(2^p).
  int p = spec.total();
  if (p <= 6 && res.nonzero_count > (int64_t(1) << (int64_t(1) << p)))
    throw Error(ErrorKind::Property, "nonzero count exceeds 2^(2^p)");
  return res;
}

// --- bit encoding (p bits per float) ----------------------------------
//
// Layout, LSB first: bits [0, pm) hold the mantissa in two's complement,
// bits [pm, pm+pe) hold the exponent in excess-(2^(pe-1) - 1). Decoding is
// total: non-canonical mantissa patterns are read through the same value
// formula (bit-length semantics), so any p-bit pattern denotes a value.

inline Bits encode_pfloat(const PFloat& f) {
  const auto& s = f.spec;
  Bits b(static_cast<std::size_t>(s.total()));
  uint64_t mfield = static_cast<uint64_t>(f.man) & ((uint64_t{1} << s.pm) - 1);
  for (int i = 0; i < s.pm; ++i) b[i] = static_cast<uint8_t>((mfield >> i) & 1);
  uint64_t efield = static_cast<uint64_t>(f.exp - s.emin());
  for (int i = 0; i < s.pe; ++i) b[s.pm + i] = static_cast<uint8_t>((efield >> i) & 1);
  return b;
}

inline Dyadic decode_value(const Bits& b, const PrecisionSpec& spec) {
  if (static_cast<int>(b.size()) != spec.total()) throw WidthMismatch("decode_value: wrong bit width");
  int64_t m = 0;
  for (int i = 0; i < spec.pm; ++i)
    if (b[i]) m |= (int64_t(1) << i);
  if (b[spec.pm - 1]) m -= (int64_t(1) << spec.pm);  // sign extend
  int64_t u = 0;
  for (int i = 0; i < spec.pe; ++i)
    if (b[spec.pm + i]) u |= (int64_t(1) << i);
  int64_t e = u + spec.emin();
  if (m == 0) return Dyadic();
  int64_t blen = bitlen(BigInt(m < 0 ? -m : m));
  return Dyadic(BigInt(m), e - blen + 1);
}

inline PFloat decode_round(const Bits& b, const PrecisionSpec& spec) {
  return round_nearest(decode_value(b, spec), spec);
}

// All canonical floats of a spec, ascending by value.
inline std::vector<PFloat> enumerate_canonical(const PrecisionSpec& spec) {
  std::vector<PFloat> out;
  for (int64_t e = spec.emin(); e <= spec.emax(); ++e)
    for (int64_t m = int64_t(1) << (spec.pm - 2); m < (int64_t(1) << (spec.pm - 1)); ++m)
      out.push_back(PFloat::from_parts(-m, e, spec));
  out.push_back(PFloat(spec));
  for (int64_t e = spec.emin(); e <= spec.emax(); ++e)
    for (int64_t m = int64_t(1) << (spec.pm - 2); m < (int64_t(1) << (spec.pm - 1)); ++m)
      out.push_back(PFloat::from_parts(m, e, spec));
  std::sort(out.begin(), out.end(), [](const PFloat& a, const PFloat& b) { return value_of(a) < value_of(b); });
  return out;
}

// --- textual literals: pf(<mantissa-bits>,<exponent-bits>;pm=..,pe=..) ---

namespace detail {

inline std::string int_to_bits_msb(int64_t v, int width) {
  if (v == 0) return "0";
  std::string s;
  bool neg = v < 0;
  uint64_t a = neg ? static_cast<uint64_t>(-v) : static_cast<uint64_t>(v);
  while (a) {
    s.push_back(static_cast<char>('0' + (a & 1)));
    a >>= 1;
  }
  while (static_cast<int>(s.size()) < width) s.push_back('0');
  std::reverse(s.begin(), s.end());
  return neg ? "-" + s : s;
}

inline int64_t bits_msb_to_int(const std::string& s, std::size_t base_off) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && s[i] == '-') {
    neg = true;
    ++i;
  }
  if (i >= s.size()) throw SyntaxError(base_off + i + 1, "binary digits");
  int64_t v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') throw SyntaxError(base_off + i + 1, "binary digit");
    v = (v << 1) | (s[i] - '0');
  }
  return neg ? -v : v;
}

}  // namespace detail

inline std::string format_pf(const PFloat& f) {
  return "pf(" + detail::int_to_bits_msb(f.man, f.man == 0 ? 1 : f.spec.pm - 1) + "," +
         detail::int_to_bits_msb(f.exp, f.spec.pe) + ";pm=" + std::to_string(f.spec.pm) +
         ",pe=" + std::to_string(f.spec.pe) + ")";
}

inline PFloat parse_pf(const std::string& text) {
  auto fail = [&](std::size_t off, const std::string& what) { throw SyntaxError(off, what); };
  if (text.rfind("pf(", 0) != 0) fail(1, "pf(");
  std::size_t comma = text.find(',', 3);
  std::size_t semi = text.find(';', 3);
  std::size_t close = text.rfind(')');
  if (comma == std::string::npos || semi == std::string::npos || close == std::string::npos || !(comma < semi && semi < close))
    fail(text.size(), "pf(bits,bits;pm=..,pe=..)");
  int64_t man = detail::bits_msb_to_int(text.substr(3, comma - 3), 3);
  int64_t exp = detail::bits_msb_to_int(text.substr(comma + 1, semi - comma - 1), comma + 1);
  std::string params = text.substr(semi + 1, close - semi - 1);
  int pm = -1, pe = -1;
  std::size_t pmpos = params.find("pm=");
  std::size_t pepos = params.find("pe=");
  if (pmpos == std::string::npos || pepos == std::string::npos) fail(semi + 2, "pm=..,pe=..");
  pm = std::stoi(params.substr(pmpos + 3));
  pe = std::stoi(params.substr(pepos + 3));
  return PFloat::from_parts(man, exp, PrecisionSpec(pm, pe));
}

// --- algebraic rounding helpers ----------------------------------------

// Truncation of sqrt(r) to `bits` significant bits; pre: r > 0.
inline Dyadic sqrt_trunc(const Rat& r, int bits) {
  if (!(Rat(0) < r)) throw Error(ErrorKind::Precondition, "sqrt_trunc needs a positive argument");
  int64_t E2 = r.floor_log2();
  int64_t E = E2 >= 0 ? E2 / 2 : (E2 - 1) / 2;  // floor(E2 / 2)
  int64_t G = E - bits + 1;
  // v = floor(r / 2^(2G)); sqrt(v) then carries the 2^G scale.
  BigInt num = r.num, den = r.den;
  if (2 * G >= 0)
    den <<= static_cast<unsigned>(2 * G);
  else
    num <<= static_cast<unsigned>(-2 * G);
  BigInt v = num / den;
  BigInt s = boost::multiprecision::sqrt(v);
  return Dyadic(s, G);
}

// Nearest canonical float to x / sqrt(r), decided by exact comparisons of
// squares; pre: r >= 1. Irrational targets have no ties.
inline PFloat round_div_sqrt(const Dyadic& x, int64_t r, const PrecisionSpec& spec) {
  if (r < 1) throw Error(ErrorKind::Precondition, "round_div_sqrt needs r >= 1");
  BigInt rb(r);
  BigInt s = boost::multiprecision::sqrt(rb);
  if (s * s == rb)  // perfect square: exact rational path
    return round_nearest(Rat(x) / Rat(BigInt(s), 1), spec);
  if (x.is_zero()) return detail::make_zero(spec);
  int sign = x.sign();
  Rat y2 = Rat(x) * Rat(x) / Rat(rb, 1);  // y^2, y = |x|/sqrt(r)
  auto y_lt = [&](const Rat& c) {          // y < c, c > 0
    return y2 < c * c;
  };
  auto p2 = [](int64_t e) { return e >= 0 ? Rat(pow2(e), 1) : Rat(1, pow2(-e)); };
  int64_t E2 = y2.floor_log2();
  int64_t E = E2 >= 0 ? E2 / 2 : (E2 - 1) / 2;
  if (E > spec.emax()) return detail::make_saturated(sign, spec);
  if (E < spec.emin()) {
    if (y_lt(p2(spec.emin() - 1))) return detail::make_zero(spec);
    return detail::make_min_canonical(sign, spec);
  }
  // nearest mantissa in [2^(pm-2), 2^(pm-1)] on the grid 2^(E-pm+2):
  // binary search for the smallest m with y < (m + 1/2) g
  Rat g = p2(E - spec.pm + 2);
  int64_t lo = int64_t(1) << (spec.pm - 2), hi = int64_t(1) << (spec.pm - 1);
  int64_t a = lo, b = hi;
  while (a < b) {
    int64_t mid = a + (b - a) / 2;
    if (y_lt(Rat(BigInt(2 * mid + 1), 2) * g))
      b = mid;
    else
      a = mid + 1;
  }
  int64_t m = a;
  if (m == hi) {
    ++E;
    if (E > spec.emax()) return detail::make_saturated(sign, spec);
    m = int64_t(1) << (spec.pm - 2);
  }
  PFloat f(spec);
  f.man = sign * m;
  f.exp = E;
  return f;
}

// p-precision exponential: the Taylor series is summed exactly until the
// tail is provably below the p_m+4 guard grid, truncated to p_m+4
// significant bits, then rounded once.
inline PFloat exp_p(const PFloat& x, const PrecisionSpec& spec) {
  Dyadic v = value_of(x);
  if (v.is_zero()) return round_nearest(Rat(1), spec);
  Rat vr(v);
  Rat sum(1);
  Rat term(1);
  Rat va = vr.abs();
  int64_t vceil = ((va.num + va.den - 1) / va.den).convert_to<int64_t>();
  int guard = spec.pm + 8;
  for (int64_t t = 1;; ++t) {
    term = term * vr / Rat(static_cast<long>(t));
    sum = sum + term;
    if (t >= 2 * vceil + 2) {
      // tail bounded by 2 |term|; stop once it cannot affect the guard grid
      Rat bound = term.abs() * Rat(2);
      Rat scale = sum.abs();
      if (scale.is_zero()) scale = Rat(1, pow2(guard));
      if (bound * Rat(pow2(guard), 1) < scale) break;
    }
    if (t > 10000) throw Error(ErrorKind::Property, "exp_p series failed to converge");
  }
  if (!(Rat(0) < sum)) return detail::make_zero(spec);  // cannot happen for exp, kept as a guard
  return round_nearest(Rat(trunc_sig_bits(sum, spec.pm + 4)), spec);
}

}  // namespace fomc
