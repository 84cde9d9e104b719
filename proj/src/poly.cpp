#include "cyclo/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cyclo/fp_poly.hpp"

namespace cyclo {

// Callers may pass mpq values built from an unreduced numerator and denominator.
Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Poly::Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, std::size_t k) {
  std::vector<Rat> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Rat Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

const Rat& Poly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

Rat Poly::eval(const Rat& x) const {
  Rat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

CRat Poly::eval(const CRat& z) const {
  CRat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * z;
    acc.re += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (c_.empty()) return {};
  Poly r = *this;
  Rat lc = c_.back();
  for (auto& c : r.c_) c /= lc;
  return r;
}

Poly Poly::compose(const Poly& g) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * g;
    acc += constant(*it);
  }
  return acc;
}

Poly Poly::shift(const Rat& s) const { return compose(Poly{s, Rat(1)}); }

Poly Poly::scale_variable(const Rat& c) const {
  std::vector<Rat> v = c_;
  Rat p(1);
  for (auto& x : v) {
    x *= p;
    p *= c;
  }
  return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    out += cyclo::to_string(c_[i]);
  }
  return out;
}

Poly Poly::parse(std::string_view text) {
  std::vector<Rat> v;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    v.push_back(parse_rat(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Poly(std::move(v));
}

std::string Poly::pretty(std::string_view var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Rat a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (a == 1);
    if (i == 0 || !unit) {
      os << cyclo::to_string(a);
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rat> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rat& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Rat f = r[static_cast<std::size_t>(i)] / lb;
    if (sgn(f) == 0) continue;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * bc[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial does not divide exactly");
  return q;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

ExtendedGcd xgcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b, s0 = Poly::constant(1), s1, t0, t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {};
  Rat lc = r0.leading();
  Rat inv = 1 / lc;
  return {r0 * inv, s0 * inv, t0 * inv};
}

Poly pow(const Poly& p, unsigned k) {
  Poly result = Poly::constant(1), base = p;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

Poly powmod(const Poly& base, unsigned long k, const Poly& m) {
  Poly result = Poly::constant(1) % m, b = base % m;
  while (k) {
    if (k & 1UL) result = (result * b) % m;
    k >>= 1UL;
    if (k) b = (b * b) % m;
  }
  return result;
}

Rat resultant(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Rat(0);
  // res(A, B) = lc(A)^deg B * prod B(alpha); use res(A,B) = (-1)^{mn} res(B,A) and
  // res(B, A) = lc(B)^{deg A - deg R} res(B, R) with R = A mod B.
  Poly A = a, B = b;
  Rat acc(1);
  while (true) {
    int m = A.degree(), n = B.degree();
    if (n == 0) {
      Rat p(1);
      for (int i = 0; i < m; ++i) p *= B.leading();
      return acc * p;
    }
    if (m == 0) {
      Rat p(1);
      for (int i = 0; i < n; ++i) p *= A.leading();
      return acc * p;
    }
    Poly R = A % B;
    if (R.is_zero()) return Rat(0);
    // res(A,B) = (-1)^{mn} lc(B)^{m - deg R} res(B, R)
    if ((m * n) % 2 == 1) acc = -acc;
    Rat lb(1);
    for (int i = 0; i < m - R.degree(); ++i) lb *= B.leading();
    acc *= lb;
    A = std::move(B);
    B = std::move(R);
  }
}

Rat discriminant(const Poly& f) {
  int n = f.degree();
  if (n < 1) throw std::domain_error("discriminant of constant polynomial");
  Rat r = resultant(f, f.derivative()) / f.leading();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  if (f.degree() < 1) return out;
  Poly fm = f.monic();
  Poly d = fm.derivative();
  Poly a = gcd(fm, d);
  Poly b = exact_div(fm, a);
  Poly c = exact_div(d, a);
  Poly e = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly g = gcd(b, e);
    Poly bn = exact_div(b, g);
    if (g.degree() > 0) out.emplace_back(g.monic(), i);
    Poly cn = exact_div(e, g);
    e = cn - bn.derivative();
    b = bn;
    ++i;
  }
  return out;
}

bool is_squarefree(const Poly& f) {
  if (f.degree() <= 1) return true;
  PrimitiveForm pf = primitive_form(f);
  for (std::uint64_t p : first_primes(40)) {
    if (p < 3) continue;
    Int lc = pf.coeffs.back() % static_cast<unsigned long>(p);
    if (lc == 0) continue;
    FpPoly fp = FpPoly::from_integers(pf.coeffs, p);
    if (fp.is_squarefree()) return true;
  }
  Poly fm = f.monic();
  return gcd(fm, fm.derivative()).degree() == 0;
}

Poly cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::domain_error("cyclotomic polynomial of order 0");
  Poly num = Poly::monomial(Rat(1), n) - Poly::constant(1);
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) num = exact_div(num, cyclotomic_polynomial(d));
  return num;
}

PrimitiveForm primitive_form(const Poly& f) {
  if (f.is_zero()) return {Rat(0), {}};
  Int l(1);
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> z;
  z.reserve(f.coeffs().size());
  Int g(0);
  for (const auto& c : f.coeffs()) {
    Int v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    z.push_back(v);
  }
  if (sgn(z.back()) < 0) g = -g;
  for (auto& v : z) v /= g;
  return {make_rat(g, l), std::move(z)};
}

Poly from_integers(const std::vector<Int>& coeffs) {
  std::vector<Rat> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return Poly(std::move(v));
}

Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  // Newton divided differences.
  std::size_t n = xs.size();
  std::vector<Rat> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  Poly acc;
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * Poly{-xs[k], Rat(1)};
    acc += Poly::constant(dd[k]);
  }
  return acc;
}

}  // namespace cyclo
