#include "cyclo/subfield.hpp"

#include <cmath>
#include <stdexcept>

#include "cyclo/factor.hpp"
#include "cyclo/linalg.hpp"
#include "cyclo/nf_factor.hpp"

namespace cyclo {

NFElem FieldHom::apply(const NFElem& a) const {
  if (a.field() != from) throw std::invalid_argument("homomorphism applied to an element of another field");
  NFElem acc = to->zero();
  const auto& c = a.poly().coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * image + *it;
  return acc;
}

KPoly FieldHom::apply(const KPoly& p) const {
  std::vector<NFElem> c;
  for (const auto& x : p.coeffs()) c.push_back(apply(x));
  return KPoly(to, std::move(c));
}

std::vector<FieldHom> field_homomorphisms(const FieldPtr& k, const FieldPtr& l) {
  std::vector<FieldHom> out;
  if (l->degree() % k->degree() != 0) return out;
  for (auto& r : roots_in_field(k->min_poly(), l)) out.push_back({k, l, r});
  return out;
}

namespace {

// Known inclusions that avoid factoring over L: the identity, and Q(zeta_d) in Q(zeta_N) for d | N.
std::optional<FieldHom> obvious_embedding(const FieldPtr& k, const FieldPtr& l) {
  if (k == l) return FieldHom{k, l, l->gen()};
  unsigned d = cyclotomic_order(k), n = cyclotomic_order(l);
  if (d == 0 || n == 0 || n % d != 0) return std::nullopt;
  NFElem image = l->gen().pow(static_cast<long>(n / d));
  if (!KPoly::from_rational(l, k->min_poly()).eval(image).is_zero()) return std::nullopt;
  return FieldHom{k, l, image};
}

std::optional<FieldHom> certify_embedding(const FieldPtr& k, const FieldPtr& l, const std::vector<FieldHom>& homs) {
  if (homs.empty()) return std::nullopt;
  // The designated root of K is isolated by its disc; the image must land in it.
  const IsolatedRoot& kr = k->root();
  for (unsigned bits = 64; bits <= 2048; bits *= 2) {
    IsolatedRoot r = refine_root(k->min_poly(), kr, bits);
    bool undecided = false;
    for (const auto& h : homs) {
      auto e = enclose_value(h.image.poly(), l->min_poly(), l->root(), bits);
      Rat d2 = (e.center - r.center).norm2();
      Rat inner = r.isolation - e.radius;
      // Inside the isolation disc: it is the designated root.
      if (sgn(inner) >= 0 && d2 <= inner * inner) return h;
      Rat outer = r.radius + e.radius;
      if (d2 <= outer * outer) undecided = true;
    }
    if (!undecided) return std::nullopt;
  }
  throw std::runtime_error("compatible_embedding: could not separate candidate images");
}

}  // namespace

std::optional<FieldHom> compatible_embedding(const FieldPtr& k, const FieldPtr& l) {
  if (auto h = obvious_embedding(k, l)) {
    if (auto c = certify_embedding(k, l, {*h})) return c;
  }
  return certify_embedding(k, l, field_homomorphisms(k, l));
}

NFElem SubfieldExpression::value() const {
  if (!present() || !hom) throw std::logic_error("subfield expression not present");
  return hom->from->from_coords(coords);
}

SubfieldExpression express_in_subfield(const NFElem& a, const FieldPtr& k) {
  SubfieldExpression out;
  const FieldPtr& l = a.field();
  auto hom = compatible_embedding(k, l);
  if (!hom) {
    out.status = SubfieldExpression::Status::kNoEmbedding;
    return out;
  }
  out.hom = hom;
  SpanReducer<Rat> span(Rat(0), Rat(1));
  NFElem p = l->one();
  for (int i = 0; i < k->degree(); ++i) {
    if (span.add(p.coords())) throw std::logic_error("express_in_subfield: image basis is dependent");
    p = p * hom->image;
  }
  auto c = span.express(a.coords());
  if (!c) {
    out.status = SubfieldExpression::Status::kAbsent;
    return out;
  }
  out.status = SubfieldExpression::Status::kPresent;
  out.coords = *c;
  return out;
}

Extension adjoin_root(const FieldPtr& k, const KPoly& g, std::complex<double> approx, const std::string& name) {
  if (g.field() != k || g.degree() < 1) throw std::invalid_argument("adjoin_root: bad polynomial");
  KPoly gm = g.monic();
  if (gm.degree() == 1) {
    return {k, -gm.coeff(0), {k, k, k->gen()}, 0, true};
  }
  if (!is_squarefree(gm)) throw std::invalid_argument("adjoin_root: polynomial is not squarefree");
  Poly norm;
  long s = 0;
  for (long step = 0;; ++step) {
    s = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
    norm = norm_polynomial(gm, s);
    if (is_squarefree(norm)) break;
    if (step > 60) throw std::runtime_error("adjoin_root: no squarefree norm found");
  }
  // A squarefree norm of an irreducible polynomial is irreducible, and conversely.
  if (!is_irreducible(norm)) throw std::invalid_argument("adjoin_root: polynomial is reducible over the base field");
  std::complex<double> beta0 = k->gen().approx();
  std::complex<double> theta0 = approx + static_cast<double>(s) * beta0;
  FieldPtr m = NField::create(norm.monic(), name, theta0, true);
  NFElem theta = m->gen();
  // beta in M is the common root of m_K(y) and g(theta - s*y, y).
  KPoly mk = KPoly::from_rational(m, k->min_poly());
  KPoly lin(m, {theta, m->from_rat(Rat(-s))});
  KPoly h(m, {});
  for (auto it = gm.coeffs().rbegin(); it != gm.coeffs().rend(); ++it) {
    KPoly c = KPoly::from_rational(m, it->poly());
    // c(y) with y the variable: coefficients of K elements are polynomials in the generator.
    h = h * lin + c;
    if (h.degree() >= mk.degree()) h = h % mk;
  }
  KPoly common = gcd(mk, h);
  if (common.degree() != 1) throw std::logic_error("adjoin_root: generator image not determined");
  NFElem beta = -common.coeff(0);
  NFElem alpha = theta - beta * Rat(s);
  FieldHom base{k, m, beta};
  if (!base.apply(gm).eval(alpha).is_zero()) throw std::logic_error("adjoin_root: adjoined element is not a root");
  if (std::abs(beta.approx() - beta0) > 1e-6 * (1 + std::abs(beta0)))
    throw std::runtime_error("adjoin_root: embedding of the base field not preserved");
  return {m, alpha, base, s, false};
}

std::complex<double> preferred_sqrt(std::complex<double> z) {
  std::complex<double> r = std::sqrt(z);
  const double eps = 1e-12 * (1 + std::abs(r));
  if (r.imag() < -eps || (std::abs(r.imag()) <= eps && r.real() < 0)) r = -r;
  return r;
}

Extension adjoin_sqrt(const FieldPtr& k, const NFElem& a, const std::string& name) {
  if (a.field() != k) throw std::invalid_argument("adjoin_sqrt: element not in field");
  std::complex<double> target = preferred_sqrt(a.approx());
  KPoly g(k, {-a, k->zero(), k->one()});
  if (a.is_zero()) return {k, k->zero(), {k, k, k->gen()}, 0, true};
  auto fl = factor_over_field(g);
  if (fl.factors.size() == 2) {
    NFElem r1 = -fl.factors[0].coeff(0), r2 = -fl.factors[1].coeff(0);
    NFElem pick = std::abs(r1.approx() - target) <= std::abs(r2.approx() - target) ? r1 : r2;
    return {k, pick, {k, k, k->gen()}, 0, true};
  }
  return adjoin_root(k, g, target, name);
}

}  // namespace cyclo
