#include "cyclo/nf_factor.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclo/factor.hpp"

namespace cyclo {

Poly norm_polynomial(const KPoly& f, long s) {
  const FieldPtr& k = f.field();
  const Poly& m = k->min_poly();
  const int n = f.degree() * k->degree();
  std::vector<Rat> xs, ys;
  for (int t = 0; t <= n; ++t) {
    Poly lin{Rat(t), Rat(-s)};
    Poly acc;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
      acc = acc * lin + it->poly();
      if (acc.degree() >= m.degree()) acc = acc % m;
    }
    xs.emplace_back(t);
    ys.push_back(resultant(m, acc));
  }
  return interpolate(xs, ys);
}

KPoly KFactorList::expand() const {
  KPoly r(content.field(), {content});
  for (const auto& g : factors) r = r * g;
  return r;
}

KFactorList factor_over_field(const KPoly& input) {
  if (input.is_zero()) throw std::domain_error("factor_over_field: zero polynomial");
  const FieldPtr& k = input.field();
  KFactorList out;
  out.content = input.leading();
  KPoly f = input.monic();
  if (f.degree() <= 1) {
    if (f.degree() == 1) out.factors.push_back(f);
    return out;
  }
  if (!is_squarefree(f)) throw std::domain_error("factor_over_field: input is not squarefree");
  if (f.is_rational() && k->degree() == 1) {
    for (auto& g : factor_squarefree_rational(f.to_rational())) out.factors.push_back(KPoly::from_rational(k, g));
    return out;
  }
  Poly norm;
  long s = 0;
  for (long step = 0;; ++step) {
    s = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
    norm = norm_polynomial(f, s);
    if (is_squarefree(norm)) break;
    if (step > 60) throw std::runtime_error("factor_over_field: no squarefree norm found");
  }
  out.shift = s;
  auto parts = factor_squarefree_rational(norm);
  if (parts.size() == 1) {
    out.factors.push_back(f);
    return out;
  }
  NFElem shift_elem = k->gen() * Rat(s);
  KPoly rest = f;
  for (const auto& ni : parts) {
    if (rest.degree() <= 0) break;
    KPoly g = gcd(rest, compose_shift_mod(ni, shift_elem, rest));
    if (g.degree() <= 0) continue;
    out.factors.push_back(g);
    rest = divmod(rest, g).first;
  }
  if (rest.degree() > 0) throw std::logic_error("factor_over_field: incomplete factorization");
  std::sort(out.factors.begin(), out.factors.end(), [](const KPoly& a, const KPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.to_string() < b.to_string();
  });
  return out;
}

std::vector<NFElem> roots_in_field(const Poly& f, const FieldPtr& k) {
  std::vector<NFElem> roots;
  for (const auto& [g, e] : factor_rational(f).factors) {
    (void)e;
    if (g.degree() > k->degree() || k->degree() % g.degree() != 0) continue;
    if (g.degree() == 1) {
      roots.push_back(k->from_rat(-g.coeff(0)));
      continue;
    }
    for (const auto& h : factor_over_field(KPoly::from_rational(k, g)).factors)
      if (h.degree() == 1) roots.push_back(-h.coeff(0));
  }
  std::sort(roots.begin(), roots.end(), [](const NFElem& a, const NFElem& b) { return a.poly().to_string() < b.poly().to_string(); });
  return roots;
}

}  // namespace cyclo
