#include "cyclo/number_field.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "cyclo/factor.hpp"
#include "cyclo/linalg.hpp"

namespace cyclo {

void require_same_field(const NFElem& a, const NFElem& b) {
  if (!a.field() || a.field() != b.field()) throw std::invalid_argument("elements of different number fields");
}

NFElem::NFElem(FieldPtr field, Poly rep) : field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("element without a field");
  rep_ = rep.degree() >= field_->degree() ? rep % field_->min_poly() : std::move(rep);
}

std::vector<Rat> NFElem::coords() const {
  std::vector<Rat> c(static_cast<std::size_t>(field_->degree()));
  for (std::size_t i = 0; i < rep_.coeffs().size(); ++i) c[i] = rep_.coeffs()[i];
  return c;
}

Rat NFElem::rational_value() const {
  if (!is_rational()) throw std::domain_error("element is not rational");
  return rep_.coeff(0);
}

NFElem NFElem::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in number field");
  auto eg = xgcd(rep_, field_->min_poly());
  if (eg.g.degree() != 0) throw std::logic_error("minimal polynomial is reducible");
  return NFElem(field_, eg.s);
}

NFElem NFElem::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  NFElem result = field_->one(), base = *this;
  while (k) {
    if (k & 1L) result = result * base;
    k >>= 1L;
    if (k) base = base * base;
  }
  return result;
}

NFElem operator+(const NFElem& a, const NFElem& b) {
  require_same_field(a, b);
  return NFElem(a.field_, a.rep_ + b.rep_);
}

NFElem operator-(const NFElem& a, const NFElem& b) {
  require_same_field(a, b);
  return NFElem(a.field_, a.rep_ - b.rep_);
}

NFElem operator-(const NFElem& a) { return NFElem(a.field_, -a.rep_); }

NFElem operator*(const NFElem& a, const NFElem& b) {
  require_same_field(a, b);
  return NFElem(a.field_, a.rep_ * b.rep_);
}

NFElem operator/(const NFElem& a, const NFElem& b) {
  require_same_field(a, b);
  return a * b.inverse();
}

NFElem operator*(const NFElem& a, const Rat& c) { return NFElem(a.field_, a.rep_ * c); }

NFElem operator+(const NFElem& a, const Rat& c) { return NFElem(a.field_, a.rep_ + Poly::constant(c)); }

bool operator==(const NFElem& a, const NFElem& b) {
  require_same_field(a, b);
  return a.rep_ == b.rep_;
}

std::complex<double> NFElem::approx() const {
  if (is_rational()) return {rational_value().get_d(), 0.0};
  auto e = enclose_value(rep_, field_->min_poly(), field_->root(), 60);
  return e.center.to_complex();
}

std::string NFElem::to_string() const { return rep_.pretty(field_->name()); }

FieldPtr NField::create_with_root(const Poly& min_poly, std::string name, std::size_t root_index, bool trusted) {
  if (min_poly.degree() < 1 || !min_poly.is_monic()) throw std::invalid_argument("minimal polynomial must be monic");
  if (!trusted && !is_irreducible(min_poly)) throw std::invalid_argument("minimal polynomial is reducible");
  std::shared_ptr<NField> f(new NField());
  f->min_poly_ = min_poly;
  f->name_ = std::move(name);
  f->roots_ = isolate_roots(min_poly, 128);
  if (root_index >= f->roots_.size()) throw std::invalid_argument("root index out of range");
  f->root_index_ = root_index;
  return f;
}

FieldPtr NField::create(const Poly& min_poly, std::string name, std::complex<double> approx, bool trusted) {
  if (min_poly.degree() < 1 || !min_poly.is_monic()) throw std::invalid_argument("minimal polynomial must be monic");
  auto roots = isolate_roots(min_poly, 128);
  int idx = locate_root(roots, approx);
  if (idx < 0) throw std::invalid_argument("designated root is ambiguous");
  return create_with_root(min_poly, std::move(name), static_cast<std::size_t>(idx), trusted);
}

FieldPtr NField::rationals() {
  static const FieldPtr q = create_with_root(Poly{Rat(0), Rat(1)}, "r", 0, true);
  return q;
}

NFElem NField::gen() const { return NFElem(shared_from_this(), Poly::x()); }
NFElem NField::zero() const { return NFElem(shared_from_this(), Poly()); }
NFElem NField::one() const { return NFElem(shared_from_this(), Poly::constant(1)); }
NFElem NField::from_rat(const Rat& q) const { return NFElem(shared_from_this(), Poly::constant(q)); }
NFElem NField::from_poly(const Poly& p) const { return NFElem(shared_from_this(), p); }
NFElem NField::from_coords(const std::vector<Rat>& c) const {
  if (c.size() != static_cast<std::size_t>(degree())) throw std::invalid_argument("coordinate length mismatch");
  return NFElem(shared_from_this(), Poly(c));
}

std::string NField::serialize() const {
  return "min_poly=<" + min_poly_.to_string() + ">; root in " + root().box().to_string();
}

Poly minimal_polynomial(const NFElem& a) {
  const FieldPtr& k = a.field();
  SpanReducer<Rat> span(Rat(0), Rat(1));
  NFElem p = k->one();
  for (int d = 0; d <= k->degree(); ++d) {
    auto dep = span.add(p.coords());
    if (dep) {
      std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
      for (std::size_t i = 0; i < dep->size(); ++i) c[i] = -(*dep)[i];
      c[static_cast<std::size_t>(d)] = 1;
      return Poly(std::move(c));
    }
    p = p * a;
  }
  throw std::logic_error("minimal_polynomial: no dependency found");
}

ComplexBox embed(const NFElem& a, unsigned bits) {
  const FieldPtr& k = a.field();
  if (a.is_rational()) {
    Rat v = a.rational_value();
    return {v, v, Rat(0), Rat(0)};
  }
  auto e = enclose_value(a.poly(), k->min_poly(), k->root(), bits + 1);
  return e.box();
}

namespace {

std::mutex g_cyclo_mu;
std::map<unsigned, FieldPtr> g_cyclo_cache;

}  // namespace

FieldPtr cyclotomic_field(unsigned n) {
  std::lock_guard<std::mutex> lock(g_cyclo_mu);
  auto it = g_cyclo_cache.find(n);
  if (it != g_cyclo_cache.end()) return it->second;
  double ang = 2.0 * M_PI / n;
  FieldPtr f = NField::create(cyclotomic_polynomial(n), "z" + std::to_string(n), {std::cos(ang), std::sin(ang)});
  g_cyclo_cache.emplace(n, f);
  return f;
}

unsigned cyclotomic_order(const FieldPtr& k) {
  std::lock_guard<std::mutex> lock(g_cyclo_mu);
  for (const auto& [n, f] : g_cyclo_cache)
    if (f == k) return n;
  return 0;
}

}  // namespace cyclo
