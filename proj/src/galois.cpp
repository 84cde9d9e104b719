#include "cyclo/galois.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cyclo/factor.hpp"
#include "cyclo/nf_factor.hpp"
#include "cyclo/subfield.hpp"

namespace cyclo {

std::string pattern_string(const Pattern& p) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << "}";
  return os.str();
}

std::map<Pattern, PatternStats> frobenius_cycle_types(const Poly& f, std::uint64_t prime_budget) {
  std::map<Pattern, PatternStats> out;
  for (std::uint64_t p : primes_below(prime_budget)) {
    auto pat = degree_pattern(f, p);
    if (!pat) continue;
    auto& st = out[*pat];
    ++st.count;
    if (st.sample_primes.size() < 5) st.sample_primes.push_back(p);
  }
  return out;
}

bool NoncyclotomicityCertificate::recheck(const Poly& f) const {
  auto pat = degree_pattern(f, prime);
  if (!pat || *pat != pattern) return false;
  if (factor_mod_p(f, prime).pattern != pattern) return false;
  return std::set<int>(pattern.begin(), pattern.end()).size() >= 2;
}

std::optional<NoncyclotomicityCertificate> noncyclotomic_witness(const Poly& f, std::uint64_t prime_budget) {
  for (std::uint64_t p : primes_below(prime_budget)) {
    auto pat = degree_pattern(f, p);
    if (!pat) continue;
    if (std::set<int>(pat->begin(), pat->end()).size() >= 2) return NoncyclotomicityCertificate{p, *pat};
  }
  return std::nullopt;
}

namespace {

std::complex<double> approx_eval(const KPoly& g, std::complex<double> z) {
  std::complex<double> acc = 0;
  for (auto it = g.coeffs().rbegin(); it != g.coeffs().rend(); ++it) acc = acc * z + it->approx();
  return acc;
}

}  // namespace

SplittingTower splitting_degree(const Poly& f, std::size_t cap) {
  if (f.degree() < 1) throw std::invalid_argument("splitting_degree: constant polynomial");
  Poly fm = f.monic();
  SplittingTower out;
  FieldPtr cur = NField::create_with_root(fm, "t1", 0);
  out.degree = static_cast<std::size_t>(fm.degree());
  out.steps.push_back(fm.degree());
  out.fields.push_back(fm);
  auto numeric_roots = approximate_roots(fm);

  std::vector<KPoly> pending;
  for (auto& g : factor_over_field(KPoly::from_rational(cur, fm)).factors)
    if (g.degree() > 1) pending.push_back(g);
  int level = 1;
  while (!pending.empty()) {
    std::sort(pending.begin(), pending.end(), [](const KPoly& a, const KPoly& b) { return a.degree() < b.degree(); });
    KPoly g = pending.front();
    if (out.degree * static_cast<std::size_t>(g.degree()) > cap) throw std::runtime_error("splitting_degree: cap exceeded");
    std::complex<double> best = numeric_roots[0];
    double best_val = 1e300;
    for (auto z : numeric_roots) {
      double v = std::abs(approx_eval(g, z));
      if (v < best_val) {
        best_val = v;
        best = z;
      }
    }
    Extension ext = adjoin_root(cur, g, best, "t" + std::to_string(++level));
    out.degree *= static_cast<std::size_t>(g.degree());
    out.steps.push_back(g.degree());
    out.fields.push_back(ext.field->min_poly());
    std::vector<KPoly> next;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      KPoly h = ext.base.apply(pending[i]);
      if (i == 0) {
        KPoly lin(ext.field, {-ext.root, ext.field->one()});
        h = divmod(h, lin).first;
      }
      if (h.degree() <= 1) continue;
      for (auto& q : factor_over_field(h).factors)
        if (q.degree() > 1) next.push_back(q);
    }
    pending = std::move(next);
    cur = ext.field;
  }
  return out;
}

namespace {

std::vector<Perm> named_generators(const std::string& name) {
  if (name == "C2") return {from_cycles(2, {{0, 1}})};
  if (name == "C4") return {from_cycles(4, {{0, 1, 2, 3}})};
  if (name == "V4") return {from_cycles(4, {{0, 1}, {2, 3}}), from_cycles(4, {{0, 2}, {1, 3}})};
  if (name == "D4") return {from_cycles(4, {{0, 1, 2, 3}}), from_cycles(4, {{0, 2}})};
  if (name == "A4") return {from_cycles(4, {{0, 1, 2}}), from_cycles(4, {{0, 1}, {2, 3}})};
  if (name == "S4") return {from_cycles(4, {{0, 1, 2, 3}}), from_cycles(4, {{0, 1}})};
  if (name == "C6") return {from_cycles(6, {{0, 1, 2, 3, 4, 5}})};
  if (name == "S3") return {from_cycles(6, {{0, 1, 2}, {3, 4, 5}}), from_cycles(6, {{0, 3}, {1, 5}, {2, 4}})};
  if (name == "A4xC2") return {from_cycles(6, {{0, 1}}), from_cycles(6, {{0, 2, 4}, {1, 3, 5}})};
  return {};
}

}  // namespace

std::vector<Pattern> group_cycle_types(const std::string& name) {
  std::set<Pattern> types;
  for (const auto& g : generate_group(named_generators(name))) types.insert(cycle_type(g));
  return {types.begin(), types.end()};
}

GaloisReport identify_group(const Poly& f, std::uint64_t prime_budget) {
  GaloisReport r;
  r.poly = f.monic();
  r.splitting_degree = splitting_degree(f).degree;
  r.cycle_types = frobenius_cycle_types(f, prime_budget);
  auto has_part = [&](int k) {
    for (const auto& [pat, st] : r.cycle_types)
      if (std::find(pat.begin(), pat.end(), k) != pat.end()) return true;
    return false;
  };
  const int n = f.degree();
  const std::size_t s = r.splitting_degree;
  if (n == 2 && s == 2) r.group_name = "C2";
  if (n == 4 && s == 8) r.group_name = "D4";
  if (n == 4 && s == 4) r.group_name = has_part(4) ? "C4" : "V4";
  if (n == 4 && s == 12) r.group_name = "A4";
  if (n == 4 && s == 24) r.group_name = "S4";
  if (n == 6 && s == 6) r.group_name = has_part(6) ? "C6" : "S3";
  if (n == 6 && s == 24) {
    if (has_part(4))
      r.group_name = "S4(6)";
    else if (has_part(6))
      r.group_name = "A4xC2";
  }
  if (r.group_name.empty()) {
    r.group_name = "unclassified";
    return r;
  }
  auto gens = named_generators(r.group_name);
  if (!gens.empty()) {
    auto elems = generate_group(gens);
    r.abelian = is_abelian(elems);
    auto types = group_cycle_types(r.group_name);
    r.patterns_realizable = true;
    for (const auto& [pat, st] : r.cycle_types)
      if (std::find(types.begin(), types.end(), pat) == types.end()) r.patterns_realizable = false;
  }
  return r;
}

std::optional<IsomorphismWitness> wreath_isomorphism() {
  std::vector<Perm> wreath{from_cycles(6, {{0, 1}}), from_cycles(6, {{0, 2, 4}, {1, 3, 5}})};
  std::vector<Perm> product{from_cycles(6, {{0, 1}}), from_cycles(6, {{2, 3, 4}}), from_cycles(6, {{2, 3}, {4, 5}})};
  return find_isomorphism(wreath, product);
}

std::vector<RootClass> conjugate_orbit(const Poly& f) {
  Poly fm = f.monic();
  if (!is_irreducible(fm)) throw std::invalid_argument("conjugate_orbit: polynomial is reducible");
  auto roots = isolate_roots(fm);
  std::vector<int> cls(roots.size(), -1);
  std::vector<RootClass> out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (cls[i] >= 0) continue;
    FieldPtr k = NField::create_with_root(fm, "r", i, true);
    RootClass rc;
    rc.field_poly = fm;
    for (const auto& h : factor_over_field(KPoly::from_rational(k, fm)).factors) {
      if (h.degree() != 1) continue;
      int idx = locate_root(roots, (-h.coeff(0)).approx());
      if (idx < 0) throw std::runtime_error("conjugate_orbit: could not match a root");
      rc.roots.push_back(static_cast<std::size_t>(idx));
      cls[static_cast<std::size_t>(idx)] = static_cast<int>(out.size());
    }
    std::sort(rc.roots.begin(), rc.roots.end());
    out.push_back(rc);
  }
  return out;
}

}  // namespace cyclo
