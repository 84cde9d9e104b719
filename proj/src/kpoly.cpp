#include "cyclo/kpoly.hpp"

#include <stdexcept>

namespace cyclo {

KPoly::KPoly(FieldPtr field, std::vector<NFElem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.field() != field_) throw std::invalid_argument("coefficient from a different field");
  trim();
}

KPoly KPoly::from_rational(FieldPtr field, const Poly& p) {
  std::vector<NFElem> c;
  for (const auto& q : p.coeffs()) c.push_back(field->from_rat(q));
  return KPoly(std::move(field), std::move(c));
}

void KPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

NFElem KPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }

KPoly KPoly::monic() const {
  if (c_.empty()) return *this;
  NFElem inv = c_.back().inverse();
  std::vector<NFElem> c;
  for (const auto& x : c_) c.push_back(x * inv);
  return KPoly(field_, std::move(c));
}

KPoly KPoly::derivative() const {
  std::vector<NFElem> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
  return KPoly(field_, std::move(d));
}

NFElem KPoly::eval(const NFElem& x) const {
  NFElem acc = field_->zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool KPoly::is_rational() const {
  for (const auto& c : c_)
    if (!c.is_rational()) return false;
  return true;
}

Poly KPoly::to_rational() const {
  std::vector<Rat> v;
  for (const auto& c : c_) v.push_back(c.rational_value());
  return Poly(std::move(v));
}

KPoly operator+(const KPoly& a, const KPoly& b) {
  std::vector<NFElem> v;
  for (std::size_t i = 0; i < std::max(a.c_.size(), b.c_.size()); ++i) v.push_back(a.coeff(i) + b.coeff(i));
  return KPoly(a.field_, std::move(v));
}

KPoly operator-(const KPoly& a, const KPoly& b) {
  std::vector<NFElem> v;
  for (std::size_t i = 0; i < std::max(a.c_.size(), b.c_.size()); ++i) v.push_back(a.coeff(i) - b.coeff(i));
  return KPoly(a.field_, std::move(v));
}

KPoly operator*(const KPoly& a, const KPoly& b) {
  if (a.is_zero() || b.is_zero()) return KPoly(a.field_, {});
  // Multiply representatives as rational polynomials and reduce once per coefficient.
  std::vector<Poly> acc(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].poly() * b.c_[j].poly();
  }
  std::vector<NFElem> v;
  for (auto& p : acc) v.push_back(a.field_->from_poly(p));
  return KPoly(a.field_, std::move(v));
}

KPoly operator*(const KPoly& a, const NFElem& c) {
  std::vector<NFElem> v;
  for (const auto& x : a.c_) v.push_back(x * c);
  return KPoly(a.field_, std::move(v));
}

bool operator==(const KPoly& a, const KPoly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

std::string KPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const auto& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (i >= 1) out += "*" + var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::pair<KPoly, KPoly> divmod(const KPoly& a, const KPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  const FieldPtr& k = a.field();
  if (a.degree() < b.degree()) return {KPoly(k, {}), a};
  std::vector<NFElem> r = a.coeffs();
  const int db = b.degree();
  NFElem inv = b.leading().inverse();
  std::vector<NFElem> q(static_cast<std::size_t>(a.degree() - db + 1), k->zero());
  for (int i = a.degree(); i >= db; --i) {
    NFElem f = r[static_cast<std::size_t>(i)] * inv;
    if (f.is_zero()) continue;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] = r[static_cast<std::size_t>(i - db + j)] - f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {KPoly(k, std::move(q)), KPoly(k, std::move(r))};
}

KPoly operator%(const KPoly& a, const KPoly& b) { return divmod(a, b).second; }

KPoly gcd(KPoly a, KPoly b) {
  while (!b.is_zero()) {
    KPoly r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

bool is_squarefree(const KPoly& f) {
  if (f.degree() <= 1) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

KPoly compose_shift_mod(const Poly& p, const NFElem& c, const KPoly& m) {
  const FieldPtr& k = m.field();
  KPoly lin(k, {c, k->one()});
  KPoly acc(k, {});
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * lin + KPoly(k, {k->from_rat(*it)});
    if (acc.degree() >= m.degree()) acc = acc % m;
  }
  return acc;
}

}  // namespace cyclo
