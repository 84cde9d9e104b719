#include "cyclo/factor.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cyclo {

namespace {

constexpr std::uint64_t kSeed = 0x9e3779b97f4a7c15ULL;

using ZVec = std::vector<Int>;

void trim(ZVec& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

ZVec zmod(ZVec a, const Int& m) {
  for (auto& c : a) c = mod(c, m);
  trim(a);
  return a;
}

ZVec zadd(const ZVec& a, const ZVec& b, const Int& m) {
  ZVec r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    Int x = i < a.size() ? a[i] : Int(0);
    if (i < b.size()) x += b[i];
    r[i] = mod(x, m);
  }
  trim(r);
  return r;
}

ZVec zsub(const ZVec& a, const ZVec& b, const Int& m) {
  ZVec r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    Int x = i < a.size() ? a[i] : Int(0);
    if (i < b.size()) x -= b[i];
    r[i] = mod(x, m);
  }
  trim(r);
  return r;
}

ZVec zmul(const ZVec& a, const ZVec& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  ZVec r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return zmod(std::move(r), m);
}

// Division by a monic divisor mod m.
std::pair<ZVec, ZVec> zdivmod(const ZVec& a, const ZVec& b, const Int& m) {
  if (b.empty() || mod(b.back(), m) != 1) throw std::logic_error("zdivmod: divisor must be monic");
  ZVec r = zmod(a, m);
  if (r.size() < b.size()) return {{}, r};
  ZVec q(r.size() - b.size() + 1);
  const std::size_t db = b.size() - 1;
  for (std::size_t i = r.size(); i-- > db;) {
    Int f = r[i];
    if (sgn(f) == 0) continue;
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = mod(r[i - db + j] - f * b[j], m);
  }
  trim(q);
  trim(r);
  return {q, r};
}

ZVec to_z(const FpPoly& f) {
  ZVec r;
  for (auto c : f.coeffs()) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

// One quadratic Hensel step: f = g*h mod m with s*g + t*h = 1 mod m and h monic, lift to m2.
void hensel_step(const ZVec& f, ZVec& g, ZVec& h, ZVec& s, ZVec& t, const Int& m2) {
  ZVec e = zsub(f, zmul(g, h, m2), m2);
  auto [q, r] = zdivmod(zmul(s, e, m2), h, m2);
  ZVec g2 = zadd(zadd(g, zmul(t, e, m2), m2), zmul(q, g, m2), m2);
  ZVec h2 = zadd(h, r, m2);
  ZVec b = zsub(zadd(zmul(s, g2, m2), zmul(t, h2, m2), m2), ZVec{Int(1)}, m2);
  auto [c, d] = zdivmod(zmul(s, b, m2), h2, m2);
  s = zsub(s, d, m2);
  t = zsub(zsub(t, zmul(t, b, m2), m2), zmul(c, g2, m2), m2);
  g = std::move(g2);
  h = std::move(h2);
}

// Lifts monic modular factors of f (mod p) to monic factors mod p^k = target, with f's leading
// coefficient absorbed. f is given mod target.
void multi_lift(const ZVec& f, const std::vector<FpPoly>& facs, std::uint64_t p, const Int& target,
                std::vector<ZVec>& out) {
  if (facs.size() == 1) {
    // f = lc * monic factor; make monic mod target.
    Int inv;
    Int lc = mod(f.back(), target);
    if (mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t()) == 0)
      throw std::logic_error("multi_lift: leading coefficient not invertible");
    ZVec r = f;
    for (auto& c : r) c = mod(c * inv, target);
    trim(r);
    out.push_back(r);
    return;
  }
  std::size_t half = facs.size() / 2;
  std::vector<FpPoly> left(facs.begin(), facs.begin() + static_cast<long>(half));
  std::vector<FpPoly> right(facs.begin() + static_cast<long>(half), facs.end());
  FpPoly gl = FpPoly::constant(reduce_mod(f.back(), p), p), hr = FpPoly::constant(1, p);
  for (const auto& x : left) gl = gl * x;
  for (const auto& x : right) hr = hr * x;
  FpPoly gg, ss, tt;
  xgcd(gl, hr, gg, ss, tt);
  if (gg.degree() != 0) throw std::logic_error("multi_lift: factors not coprime");
  ZVec g = to_z(gl), h = to_z(hr), s = to_z(ss), t = to_z(tt);
  Int m(static_cast<unsigned long>(p));
  while (m < target) {
    Int m2 = m * m;
    if (m2 > target) m2 = target;
    hensel_step(f, g, h, s, t, m2);
    m = m2;
  }
  multi_lift(g, left, p, target, out);
  multi_lift(h, right, p, target, out);
}

Int symmetric(const Int& a, const Int& m) {
  Int r = mod(a, m);
  if (2 * r > m) r -= m;
  return r;
}

Poly primitive_monic(const ZVec& v) {
  std::vector<Rat> c;
  for (const auto& x : v) c.emplace_back(x);
  return Poly(std::move(c));
}

void subsets_rec(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                 std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets_rec(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Poly FactorList::expand() const {
  Poly r = Poly::constant(content);
  for (const auto& [f, e] : factors) r = r * pow(f, static_cast<unsigned>(e));
  return r;
}

std::string FactorList::to_string() const {
  std::ostringstream os;
  os << cyclo::to_string(content);
  for (const auto& [f, e] : factors) {
    os << " * (" << f.pretty() << ")";
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

ModPFactorization factor_mod_p(const Poly& f, std::uint64_t p) {
  PrimitiveForm pf = primitive_form(f);
  if (reduce_mod(pf.coeffs.back(), p) == 0) throw std::domain_error("p divides the leading coefficient");
  FpPoly fp = FpPoly::from_integers(pf.coeffs, p);
  std::mt19937_64 rng(kSeed);
  ModPFactorization out;
  out.prime = p;
  out.factors = factor_squarefree_mod_p(fp, rng);
  for (const auto& g : out.factors) out.pattern.push_back(g.degree());
  std::sort(out.pattern.begin(), out.pattern.end());
  return out;
}

std::optional<std::vector<int>> degree_pattern(const Poly& f, std::uint64_t p) {
  for (const auto& c : f.coeffs())
    if (reduce_mod(Int(c.get_den()), p) == 0) return std::nullopt;
  PrimitiveForm pf = primitive_form(f);
  if (reduce_mod(pf.coeffs.back(), p) == 0) return std::nullopt;
  FpPoly rest = FpPoly::from_integers(pf.coeffs, p).monic();
  if (!rest.is_squarefree()) return std::nullopt;
  std::vector<int> pattern;
  FpPoly xp = FpPoly::x(p), h = xp % rest;
  for (int d = 1; rest.degree() >= 2 * d; ++d) {
    h = powmod(h, Int(static_cast<unsigned long>(p)), rest);
    FpPoly g = gcd(rest, h - xp);
    if (g.degree() > 0) {
      for (int i = 0; i < g.degree() / d; ++i) pattern.push_back(d);
      rest = divmod(rest, g).first.monic();
      h = h % rest;
    }
  }
  if (rest.degree() > 0) pattern.push_back(rest.degree());
  std::sort(pattern.begin(), pattern.end());
  return pattern;
}

std::vector<Poly> factor_squarefree_rational(const Poly& input) {
  if (input.degree() < 1) return {};
  if (input.degree() == 1) return {input.monic()};
  PrimitiveForm pf = primitive_form(input);
  ZVec F = pf.coeffs;

  // Pick the prime with the fewest modular factors among the first good primes.
  std::vector<FpPoly> best;
  std::uint64_t best_p = 0;
  int good = 0;
  std::mt19937_64 rng(kSeed);
  for (std::uint64_t p : first_primes(400)) {
    if (p < 5) continue;
    if (reduce_mod(F.back(), p) == 0) continue;
    FpPoly fp = FpPoly::from_integers(F, p);
    if (!fp.is_squarefree()) continue;
    auto facs = factor_squarefree_mod_p(fp, rng);
    if (best_p == 0 || facs.size() < best.size()) {
      best = facs;
      best_p = p;
    }
    if (best.size() == 1) break;
    if (++good >= 16) break;
  }
  if (best_p == 0) throw std::runtime_error("factor_squarefree_rational: no good prime found");
  if (best.size() == 1) return {input.monic()};

  const std::size_t n = F.size() - 1;
  Int norm2;
  for (const auto& c : F) norm2 += c * c;
  Int norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Int bound = 2 * abs(F.back()) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  Int target(static_cast<unsigned long>(best_p));
  while (target <= 2 * bound) target *= static_cast<unsigned long>(best_p);

  std::vector<ZVec> lifted;
  multi_lift(zmod(F, target), best, best_p, target, lifted);

  std::vector<Poly> found;
  Poly rest = from_integers(F);
  std::vector<std::size_t> alive(lifted.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  std::size_t k = 1;
  while (2 * k <= alive.size()) {
    bool hit = false;
    std::vector<std::vector<std::size_t>> subs;
    std::vector<std::size_t> cur;
    subsets_rec(alive.size(), k, 0, cur, subs);
    Int lc = primitive_form(rest).coeffs.back();
    for (const auto& sub : subs) {
      ZVec cand{Int(lc)};
      for (auto idx : sub) cand = zmul(cand, lifted[alive[idx]], target);
      for (auto& c : cand) c = symmetric(c, target);
      trim(cand);
      Poly g = primitive_monic(primitive_form(primitive_monic(cand)).coeffs);
      auto [q, r] = divmod(rest, g);
      if (!r.is_zero()) continue;
      found.push_back(g.monic());
      rest = q;
      std::vector<std::size_t> next;
      for (std::size_t i = 0; i < alive.size(); ++i)
        if (std::find(sub.begin(), sub.end(), i) == sub.end()) next.push_back(alive[i]);
      alive = std::move(next);
      hit = true;
      break;
    }
    if (!hit) ++k;
  }
  if (rest.degree() > 0) found.push_back(rest.monic());
  std::sort(found.begin(), found.end(), [](const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.to_string() < b.to_string();
  });
  return found;
}

FactorList factor_rational(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("factor_rational: zero polynomial");
  FactorList out;
  out.content = f.leading();
  if (f.degree() == 0) return out;
  std::vector<std::pair<Poly, int>> parts;
  if (is_squarefree(f))
    parts.emplace_back(f.monic(), 1);
  else
    parts = squarefree_decomposition(f);
  for (const auto& [g, e] : parts)
    for (auto& h : factor_squarefree_rational(g)) out.factors.emplace_back(std::move(h), e);
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  auto fl = factor_rational(f);
  return fl.factors.size() == 1 && fl.factors[0].second == 1;
}

std::vector<Rat> rational_roots(const Poly& f) {
  std::vector<Rat> roots;
  if (f.degree() < 1) return roots;
  PrimitiveForm pf = primitive_form(f);
  ZVec c = pf.coeffs;
  // Strip zero roots.
  std::size_t z = 0;
  while (z < c.size() && sgn(c[z]) == 0) ++z;
  if (z > 0) roots.emplace_back(0);
  c.erase(c.begin(), c.begin() + static_cast<long>(z));
  if (c.size() <= 1) return roots;
  auto divisors = [](Int v) {
    v = abs(v);
    std::vector<Int> d;
    for (Int i = 1; i * i <= v; ++i)
      if (v % i == 0) {
        d.push_back(i);
        if (i * i != v) d.push_back(v / i);
      }
    return d;
  };
  Poly g = from_integers(c);
  for (const auto& a : divisors(c.front()))
    for (const auto& b : divisors(c.back()))
      for (int sgnv : {1, -1}) {
        Rat r = make_rat(a * sgnv, b);
        if (sgn(g.eval(r)) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace cyclo
