#include "cyclo/center.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cyclo/subfield.hpp"

namespace cyclo {

namespace {

int mod(long a, int n) { return static_cast<int>(((a % n) + n) % n); }

}  // namespace

CenterData CenterData::haagerup() {
  CenterData d;
  d.modulus = 39;
  d.simples = {"1", "pi1", "pi2", "mu1", "mu2", "mu3", "mu4", "mu5", "mu6", "sigma0", "sigma1", "sigma2"};
  d.exponents = {0, 0, 0, 6, -6, 15, -15, 18, -18, 0, 13, -13};
  d.induction["1"] = {"1", "pi1", "pi2", "pi2"};
  d.induction["JW2"] = std::vector<std::string>(d.simples.begin() + 1, d.simples.end());
  return d;
}

CenterData CenterData::parse(std::istream& in) {
  CenterData d;
  d.simples.clear();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string a;
    long b;
    if (!(ls >> a)) continue;
    if (!(ls >> b)) throw std::invalid_argument("center table line " + std::to_string(lineno) + ": expected label and exponent");
    if (a == "modulus") {
      if (b < 1) throw std::invalid_argument("center table: modulus must be positive");
      d.modulus = static_cast<int>(b);
    } else {
      d.simples.push_back(a);
      d.exponents.push_back(static_cast<int>(b));
    }
  }
  return d;
}

std::vector<NFElem> CenterData::t_eigenvalues() const {
  FieldPtr k = cyclotomic_field(static_cast<unsigned>(modulus));
  NFElem z = k->gen();
  std::vector<NFElem> out;
  for (int e : exponents) out.push_back(z.pow(mod(e, modulus)));
  return out;
}

int CenterData::exponent_of(const std::string& label) const {
  for (std::size_t i = 0; i < simples.size(); ++i)
    if (simples[i] == label) return exponents[i];
  throw std::invalid_argument("unknown simple " + label);
}

TFieldReport t_field_check(const CenterData& data) {
  TFieldReport r;
  const int n = data.modulus;
  // Running extended gcd: g = sum combination[i] * exponents[i] + (multiple of n).
  long g = n;
  r.combination.assign(data.exponents.size(), 0);
  for (std::size_t i = 0; i < data.exponents.size(); ++i) {
    long e = mod(data.exponents[i], n);
    if (e == 0) continue;
    long old_r = g, rr = e, old_s = 1, s = 0;
    while (rr != 0) {
      long q = old_r / rr;
      std::tie(old_r, rr) = std::make_pair(rr, old_r - q * rr);
      std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    }
    // old_r = old_s * g + t * e; the previous combination scales by old_s.
    long t = e != 0 ? (old_r - old_s * g) / e : 0;
    for (std::size_t j = 0; j < i; ++j) r.combination[j] = mod(r.combination[j] * old_s, n);
    r.combination[i] = mod(t, n);
    g = old_r;
  }
  r.generated_gcd = static_cast<int>(g);

  FieldPtr big = cyclotomic_field(static_cast<unsigned>(n));
  auto t = data.t_eigenvalues();
  NFElem prod = big->one();
  for (std::size_t i = 0; i < t.size(); ++i)
    if (r.combination[i] != 0) prod = prod * t[i].pow(r.combination[i]);
  NFElem target = big->gen().pow(static_cast<long>(g % n));
  bool combination_ok = prod == target;
  r.product_equals_generator = g == 1 && combination_ok;

  FieldPtr sub = cyclotomic_field(static_cast<unsigned>(n / g));
  auto ex = express_in_subfield(big->gen(), sub);
  r.generator_in_entry_field = ex.present();
  r.pass = g == 1 && r.product_equals_generator && r.generator_in_entry_field;

  std::ostringstream os;
  os << "gcd(exponents, " << n << ") = " << g << "; entries generate " << (n / g == 1 ? std::string("Q") : "Q(zeta" + std::to_string(n / g) + ")");
  if (g == 1) {
    os << "; zeta = prod T^c with c = (";
    for (std::size_t i = 0; i < r.combination.size(); ++i) os << (i ? "," : "") << r.combination[i];
    os << ")";
  }
  r.witness = os.str();
  return r;
}

AveragingReport averaging_projector_identity(int n, const std::vector<NFElem>& eigenvalues, int m) {
  if (n < 1) throw std::invalid_argument("averaging: modulus must be positive");
  FieldPtr k = cyclotomic_field(static_cast<unsigned>(n));
  NFElem z = k->gen();
  std::vector<NFElem> zpow{k->one()};
  for (int i = 1; i < n; ++i) zpow.push_back(zpow.back() * z);
  AveragingReport r;
  r.pass = true;
  for (const auto& theta : eigenvalues) {
    require_same_field(theta, z);
    if (!theta.pow(n).is_one()) throw std::invalid_argument("averaging: eigenvalue is not a root of unity of the given order");
    NFElem sum = k->zero(), th = k->one();
    for (int i = 0; i < n; ++i) {
      sum = sum + zpow[static_cast<std::size_t>(mod(static_cast<long>(m) * i, n))] * th;
      th = th * theta;
    }
    sum = sum * Rat(1, n);
    bool expect = theta == zpow[static_cast<std::size_t>(mod(-static_cast<long>(m), n))];
    r.values.push_back(sum);
    r.expected.push_back(expect);
    if (!(expect ? sum.is_one() : sum.is_zero())) r.pass = false;
  }
  return r;
}

AveragingSweep averaging_sweep(const CenterData& data) {
  AveragingSweep s;
  auto t = data.t_eigenvalues();
  s.roots_of_unity = std::all_of(t.begin(), t.end(), [&](const NFElem& x) { return x.pow(data.modulus).is_one(); });
  FieldPtr k = cyclotomic_field(static_cast<unsigned>(data.modulus));
  std::vector<NFElem> total(t.size(), k->zero());
  for (int m = 0; m < data.modulus; ++m) {
    auto r = averaging_projector_identity(data.modulus, t, m);
    for (std::size_t i = 0; i < t.size(); ++i) {
      ++s.checks;
      if (!(r.expected[i] ? r.values[i].is_one() : r.values[i].is_zero())) ++s.failures;
      total[i] = total[i] + r.values[i];
    }
  }
  s.partition_of_unity = std::all_of(total.begin(), total.end(), [](const NFElem& x) { return x.is_one(); });
  return s;
}

SeparationReport eigenprojector_separation(const CenterData& data) {
  SeparationReport r;
  auto it = data.induction.find("JW2");
  if (it == data.induction.end()) throw std::invalid_argument("separation: no induction data for JW2");
  std::map<int, std::vector<std::string>> by_exp;
  for (const auto& label : it->second) by_exp[mod(data.exponent_of(label), data.modulus)].push_back(label);
  for (const auto& [e, labels] : by_exp) {
    if (labels.size() == 1)
      r.isolated.push_back(labels[0]);
    else
      r.shared[e] = labels;
  }
  std::sort(r.isolated.begin(), r.isolated.end());
  auto unit = data.induction.find("1");
  if (unit != data.induction.end()) {
    r.pi2_in_unit_induction = static_cast<int>(std::count(unit->second.begin(), unit->second.end(), "pi2"));
    r.sigma0_in_unit_induction = static_cast<int>(std::count(unit->second.begin(), unit->second.end(), "sigma0"));
  }
  std::vector<std::string> want{"mu1", "mu2", "mu3", "mu4", "mu5", "mu6", "sigma1", "sigma2"};
  std::sort(want.begin(), want.end());
  std::vector<std::string> trivial{"pi1", "pi2", "sigma0"};
  auto sh = r.shared.find(0);
  r.pass = r.isolated == want && r.shared.size() == 1 && sh != r.shared.end() && sh->second == trivial &&
           r.pi2_in_unit_induction > 0 && r.sigma0_in_unit_induction == 0;
  std::ostringstream os;
  os << "isolated {";
  for (std::size_t i = 0; i < r.isolated.size(); ++i) os << (i ? "," : "") << r.isolated[i];
  os << "}";
  for (const auto& [e, labels] : r.shared) {
    os << "; exponent " << e << " shared by {";
    for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
    os << "}";
  }
  os << "; I(1) has pi2 x" << r.pi2_in_unit_induction << ", sigma0 x" << r.sigma0_in_unit_induction;
  r.witness = os.str();
  return r;
}

QuadraticCoefficientReport quadratic_coefficient_membership() {
  QuadraticCoefficientReport r;
  FieldPtr k = cyclotomic_field(39);
  NFElem z13 = k->gen().pow(3);
  r.gauss_sum = k->zero();
  for (int a = 1; a < 13; ++a) {
    bool residue = false;
    for (int x = 1; x < 13; ++x)
      if (x * x % 13 == a) residue = true;
    NFElem term = z13.pow(a);
    r.gauss_sum = residue ? r.gauss_sum + term : r.gauss_sum - term;
  }
  r.gauss_square = r.gauss_sum * r.gauss_sum == k->from_rat(Rat(13));
  ComplexBox b = embed(r.gauss_sum, 64);
  r.gauss_positive = sgn(b.re_lo) > 0;
  r.coefficient = (r.gauss_sum + Rat(5)) * Rat(1, 18);

  FieldPtr q13 = NField::create(Poly{-13, 0, 1}, "r13", {3.6, 0.0});
  auto ex = express_in_subfield(r.coefficient, q13);
  r.subfield_roundtrip = ex.present() && ex.value() == (q13->gen() + Rat(5)) * Rat(1, 18);
  r.pass = r.gauss_square && r.gauss_positive && r.subfield_roundtrip;
  return r;
}

}  // namespace cyclo
