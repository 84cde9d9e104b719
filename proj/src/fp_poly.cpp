#include "cyclo/fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclo {

std::vector<std::uint64_t> primes_below(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 3) return out;
  std::vector<bool> composite(bound, false);
  for (std::uint64_t i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j < bound; j += i) composite[j] = true;
  }
  return out;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::uint64_t bound = 64;
  while (true) {
    auto ps = primes_below(bound);
    if (ps.size() >= count) {
      ps.resize(count);
      return ps;
    }
    bound *= 2;
  }
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("inverse of zero mod p");
  return powmod(a, p - 2, p);
}

std::uint64_t reduce_mod(const Int& z, std::uint64_t p) {
  Int r = z % static_cast<unsigned long>(p);
  if (sgn(r) < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t reduce_mod(const Rat& q, std::uint64_t p) {
  std::uint64_t d = reduce_mod(Int(q.get_den()), p);
  if (d == 0) throw std::domain_error("denominator divisible by p");
  return mulmod(reduce_mod(Int(q.get_num()), p), invmod(d, p), p);
}

FpPoly::FpPoly(std::vector<std::uint64_t> coeffs, std::uint64_t p) : c_(std::move(coeffs)), p_(p) {
  for (auto& c : c_) c %= p_;
  trim();
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::from_integers(const std::vector<Int>& coeffs, std::uint64_t p) {
  std::vector<std::uint64_t> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.push_back(reduce_mod(c, p));
  return FpPoly(std::move(v), p);
}

FpPoly FpPoly::constant(std::uint64_t c, std::uint64_t p) { return FpPoly({c}, p); }
FpPoly FpPoly::x(std::uint64_t p) { return FpPoly({0, 1}, p); }

FpPoly FpPoly::monic() const {
  if (c_.empty()) return *this;
  return *this * invmod(c_.back(), p_);
}

FpPoly FpPoly::derivative() const {
  std::vector<std::uint64_t> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(mulmod(c_[i], i % p_, p_));
  return FpPoly(std::move(d), p_);
}

bool FpPoly::is_squarefree() const {
  if (degree() <= 0) return true;
  FpPoly d = derivative();
  if (d.is_zero()) return false;
  return gcd(*this, d).degree() == 0;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
  return FpPoly(std::move(v), a.p_);
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (a.coeff(i) + a.p_ - b.coeff(i)) % a.p_;
  return FpPoly(std::move(v), a.p_);
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly({}, a.p_);
  const std::uint64_t p = a.p_;
  std::vector<unsigned __int128> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(a.c_[i]) * b.c_[j];
  std::vector<std::uint64_t> v(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) v[i] = static_cast<std::uint64_t>(acc[i] % p);
  return FpPoly(std::move(v), p);
}

FpPoly operator*(const FpPoly& a, std::uint64_t c) {
  std::vector<std::uint64_t> v = a.c_;
  for (auto& x : v) x = mulmod(x, c, a.p_);
  return FpPoly(std::move(v), a.p_);
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial mod p");
  const std::uint64_t p = a.modulus();
  if (a.degree() < b.degree()) return {FpPoly({}, p), a};
  std::vector<std::uint64_t> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  std::uint64_t inv = invmod(b.leading(), p);
  std::vector<std::uint64_t> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (int i = a.degree(); i >= db; --i) {
    std::uint64_t f = mulmod(r[static_cast<std::size_t>(i)], inv, p);
    if (f == 0) continue;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) {
      auto& t = r[static_cast<std::size_t>(i - db + j)];
      t = (t + p - mulmod(f, bc[static_cast<std::size_t>(j)], p)) % p;
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {FpPoly(std::move(q), p), FpPoly(std::move(r), p)};
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

void xgcd(const FpPoly& a, const FpPoly& b, FpPoly& g, FpPoly& s, FpPoly& t) {
  const std::uint64_t p = a.modulus();
  FpPoly r0 = a, r1 = b, s0 = FpPoly::constant(1, p), s1({}, p), t0({}, p), t1 = FpPoly::constant(1, p);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    FpPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  std::uint64_t inv = r0.is_zero() ? 1 : invmod(r0.leading(), p);
  g = r0 * inv;
  s = s0 * inv;
  t = t0 * inv;
}

FpPoly powmod(const FpPoly& base, const Int& e, const FpPoly& m) {
  const std::uint64_t p = m.modulus();
  FpPoly result = FpPoly::constant(1, p) % m, b = base % m;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

namespace {

FpPoly random_poly(int degree_below, std::uint64_t p, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  std::vector<std::uint64_t> v(static_cast<std::size_t>(degree_below));
  for (auto& c : v) c = dist(rng);
  return FpPoly(std::move(v), p);
}

// Splits f (monic, squarefree, all factors of degree d) into irreducibles.
void equal_degree_split(const FpPoly& f, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const std::uint64_t p = f.modulus();
  while (true) {
    FpPoly a = random_poly(f.degree(), p, rng);
    if (a.degree() <= 0) continue;
    FpPoly g = gcd(f, a);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(divmod(f, g).first.monic(), d, rng, out);
      return;
    }
    FpPoly b;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      FpPoly t = a % f, acc = t;
      for (int i = 1; i < d; ++i) {
        t = (t * t) % f;
        acc = acc + t;
      }
      b = acc;
    } else {
      Int e;
      mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      b = powmod(a, e, f) - FpPoly::constant(1, p);
    }
    g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(divmod(f, g).first.monic(), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<FpPoly> factor_squarefree_mod_p(const FpPoly& f, std::mt19937_64& rng) {
  const std::uint64_t p = f.modulus();
  if (f.is_zero()) throw std::domain_error("factor of zero polynomial");
  if (!f.is_squarefree()) throw std::domain_error("polynomial is not squarefree mod p");
  std::vector<FpPoly> out;
  FpPoly rest = f.monic();
  FpPoly xp = FpPoly::x(p);
  FpPoly h = xp % rest;
  for (int d = 1; rest.degree() >= 2 * d; ++d) {
    h = powmod(h, Int(static_cast<unsigned long>(p)), rest);
    FpPoly g = gcd(rest, h - xp);
    if (g.degree() > 0) {
      equal_degree_split(g, d, rng, out);
      rest = divmod(rest, g).first.monic();
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.push_back(rest);
  std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
  });
  return out;
}

}  // namespace cyclo
