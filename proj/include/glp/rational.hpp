#ifndef GLP_RATIONAL_HPP
#define GLP_RATIONAL_HPP

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

// Boost 1.74 under C++20: rational<T> == integer picks the rewritten reversed
// candidate, which calls itself forever. Exact-match overloads win resolution.
namespace boost {
#define GLP_RATIONAL_EQ(I)                                                                                 \
  inline bool operator==(const rational<std::int64_t>& a, I b) {                                         \
    return a.denominator() == 1 && a.numerator() == static_cast<std::int64_t>(b);                        \
  }                                                                                                      \
  inline bool operator==(I b, const rational<std::int64_t>& a) { return a == b; }                        \
  inline bool operator!=(const rational<std::int64_t>& a, I b) { return !(a == b); }                     \
  inline bool operator!=(I b, const rational<std::int64_t>& a) { return !(a == b); }
GLP_RATIONAL_EQ(int)
GLP_RATIONAL_EQ(long)
GLP_RATIONAL_EQ(long long)
#undef GLP_RATIONAL_EQ
}  // namespace boost

namespace glp {

using Rational = boost::rational<std::int64_t>;

inline Rational half(std::int64_t num) { return Rational(num, 2); }

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

// true for integers too
inline bool is_half_integer(const Rational& q) {
  return q.denominator() == 1 || q.denominator() == 2;
}

inline std::int64_t floor_int(const Rational& q) {
  auto n = q.numerator();
  auto d = q.denominator();
  auto f = n / d;
  if ((n % d != 0) && (n < 0)) --f;
  return f;
}

inline std::int64_t ceil_int(const Rational& q) { return -floor_int(-q); }

inline int mod2(std::int64_t v) { return static_cast<int>(((v % 2) + 2) % 2); }

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline Rational parse_rational(std::string_view s) {
  auto bad = [&] { return std::invalid_argument("not a fraction: '" + std::string(s) + "'"); };
  if (s.empty()) throw bad();
  auto parse_int = [&](std::string_view t) -> std::int64_t {
    if (t.empty()) throw bad();
    std::size_t i = 0;
    bool neg = false;
    if (t[0] == '-' || t[0] == '+') {
      neg = t[0] == '-';
      i = 1;
    }
    if (i == t.size()) throw bad();
    std::int64_t v = 0;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') throw bad();
      v = v * 10 + (t[i] - '0');
      if (v > (std::int64_t{1} << 52)) throw bad();
    }
    return neg ? -v : v;
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  auto den = parse_int(s.substr(slash + 1));
  if (den == 0) throw bad();
  return Rational(parse_int(s.substr(0, slash)), den);
}

}  // namespace glp

#endif
