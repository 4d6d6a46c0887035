#include "rational.hpp"

#include <cctype>

#include "errors.hpp"

namespace crs {

namespace {

bool valid_integer(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw InvalidInput("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den))
      throw InvalidInput("malformed rational literal '" + text + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw InvalidInput("zero denominator in '" + text + "'");
    Rat r(n, d);
    r.canonicalize();
    return r;
  }

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() || ip == "-" || ip == "+") ip += "0";
    if (!valid_integer(ip) || fp.empty() || !valid_integer("0" + fp) ||
        fp.find_first_of("+-") != std::string::npos)
      throw InvalidInput("malformed decimal literal '" + text + "'");
    bool neg = ip[0] == '-';
    mpz_class whole(ip);
    mpz_class frac(fp);
    mpz_class den(1);
    for (size_t i = 0; i < fp.size(); ++i) den *= 10;
    mpz_class num = whole * den + (neg ? -frac : frac);
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

  if (!valid_integer(s))
    throw InvalidInput("malformed rational literal '" + text + "'");
  return Rat(mpz_class(s));
}

std::string rat_to_string(const Rat& v) { return v.get_str(); }

std::string rat_to_decimal(const Rat& v, int digits) {
  mpz_class num = v.get_num(), den = v.get_den();
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  mpz_class q = num / den, r = num % den;
  std::string out = sign + q.get_str();
  if (digits <= 0) return out;
  out.push_back('.');
  for (int i = 0; i < digits; ++i) {
    r *= 10;
    mpz_class d = r / den;
    r %= den;
    out += d.get_str();
  }
  return out;
}

Rat pow_rat(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  bool inv = exp < 0;
  unsigned long e = inv ? static_cast<unsigned long>(-(exp + 1)) + 1
                        : static_cast<unsigned long>(exp);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), e);
  Rat r = inv ? Rat(d, n) : Rat(n, d);
  r.canonicalize();
  return r;
}

long ceil_log(const Rat& base, const Rat& p) {
  if (base <= 1) throw InvalidInput("log base must exceed 1");
  if (p <= 0) throw InvalidInput("ceil_log requires a positive argument");
  if (p == 1) return 0;
  if (p < 1) return -floor_log(base, Rat(1) / p);
  // p > 1: bracket with an exact power-of-two climb, then bisect.
  Rat pw = base;
  long hi = 1;
  while (pw < p) {
    pw = pw * pw;
    hi *= 2;
  }
  long lo = hi == 1 ? 0 : hi / 2;  // base^lo < p <= base^hi
  while (hi - lo > 1) {
    long mid = lo + (hi - lo) / 2;
    if (pow_rat(base, mid) >= p)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

long floor_log(const Rat& base, const Rat& x) {
  if (base <= 1) throw InvalidInput("log base must exceed 1");
  if (x <= 0) throw InvalidInput("floor_log requires a positive argument");
  if (x == 1) return 0;
  if (x < 1) return -ceil_log(base, Rat(1) / x);
  Rat pw = base;
  long lo = 1;
  while (pw <= x) {
    pw = pw * pw;
    lo *= 2;
  }
  // base^(lo/2 or 0) <= x < base^lo
  long hi = lo;
  lo = hi == 1 ? 0 : hi / 2;
  if (pow_rat(base, lo) > x) return 0;  // hi was 1, x < base
  while (hi - lo > 1) {
    long mid = lo + (hi - lo) / 2;
    if (pow_rat(base, mid) <= x)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

uint64_t fnv1a64(const void* data, size_t n, uint64_t seed) {
  const auto* p = static_cast<const unsigned char*>(data);
  uint64_t h = seed;
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

uint64_t fnv1a64(const std::string& s, uint64_t seed) {
  return fnv1a64(s.data(), s.size(), seed);
}

}  // namespace crs
