#include "cyclo/rational.hpp"

#include <stdexcept>

namespace cyclo {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

Rat parse_rat(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  Int num, den(1);
  if (num.set_str(s.substr(0, slash), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + std::string(text));
  if (slash != std::string::npos && den.set_str(s.substr(slash + 1), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + std::string(text));
  return make_rat(num, den);
}

double to_double(const Rat& q) { return q.get_d(); }

long floor_log2(const Rat& q) {
  if (sgn(q) == 0) throw std::domain_error("floor_log2 of zero");
  Int n = abs(q.get_num());
  const Int& d = q.get_den();
  long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
  // 2^e <= n/d < 2^(e+2) at this point; tighten.
  auto ge = [&](long k) {  // n/d >= 2^k
    if (k >= 0) {
      Int rhs = d;
      mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<unsigned long>(k));
      return n >= rhs;
    }
    Int lhs = n;
    mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<unsigned long>(-k));
    return lhs >= d;
  };
  while (!ge(e)) --e;
  while (ge(e + 1)) ++e;
  return e;
}

namespace {

// floor(sqrt(q * 4^bits)) as an integer, together with the scale.
Int scaled_isqrt(const Rat& q, unsigned bits) {
  Int t = q.get_num() * q.get_den();
  mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), 2UL * bits);
  Int s;
  mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
  return s;
}

Rat over_den_scale(const Int& s, const Int& den, unsigned bits) {
  Int d = den;
  mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), bits);
  return make_rat(s, d);
}

}  // namespace

Rat sqrt_lower(const Rat& q, unsigned bits) {
  if (sgn(q) < 0) throw std::domain_error("sqrt of negative rational");
  // sqrt(a/b) = sqrt(a*b)/b
  return over_den_scale(scaled_isqrt(q, bits), q.get_den(), bits);
}

Rat sqrt_upper(const Rat& q, unsigned bits) {
  if (sgn(q) < 0) throw std::domain_error("sqrt of negative rational");
  Int s = scaled_isqrt(q, bits);
  Rat r = over_den_scale(s, q.get_den(), bits);
  if (r * r == q) return r;
  return over_den_scale(s + 1, q.get_den(), bits);
}

CRat operator/(const CRat& a, const CRat& b) {
  Rat n = b.norm2();
  if (sgn(n) == 0) throw std::domain_error("complex division by zero");
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

Rat abs_upper(const CRat& z, unsigned bits) { return sqrt_upper(z.norm2(), bits); }
Rat abs_lower(const CRat& z, unsigned bits) { return sqrt_lower(z.norm2(), bits); }

}  // namespace cyclo
