#include "cyclo/qscalar.hpp"

#include <mutex>
#include <stdexcept>

#include "cyclo/linalg.hpp"

namespace cyclo {

std::string to_string(Convention c) { return c == Convention::kLopsided ? "lopsided" : "spherical"; }
std::string to_string(Shading s) { return s == Shading::kPlus ? "+" : "-"; }
std::string to_string(Side s) { return s == Side::kLeft ? "left" : "right"; }

Poly index_min_poly(int level) {
  if (level == 0) return Poly{3, -5, 1};
  if (level == 1) return Poly{-5, 17, -8, 1};
  throw std::invalid_argument("level must be 0 or 1");
}

namespace {

std::mutex g_mu;

FieldPtr make_index_field(int level) {
  Poly m = index_min_poly(level);
  std::complex<double> best{-1e300, 0};
  for (auto z : approximate_roots(m))
    if (z.real() > best.real()) best = z;
  return NField::create(m, "D", {best.real(), 0.0});
}

}  // namespace

const PlanarParams& PlanarParams::get(int level, Convention convention) {
  static std::map<std::pair<int, int>, std::unique_ptr<PlanarParams>> cache;
  std::lock_guard<std::mutex> lock(g_mu);
  auto key = std::make_pair(level, static_cast<int>(convention));
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;

  auto p = std::make_unique<PlanarParams>();
  auto other = cache.find(std::make_pair(level, 1 - static_cast<int>(convention)));
  if (other != cache.end()) {
    *p = *other->second;
  } else {
    p->level = level;
    p->n = 4 * level + 4;
    p->index_field = make_index_field(level);
    Extension ext = adjoin_sqrt(p->index_field, p->index_field->gen(), "s");
    if (ext.trivial) throw std::logic_error("index is a square in Q(D)");
    p->field = ext.field;
    p->index_to_field = ext.base;
    p->sqrt_d = ext.root;
    p->d = ext.base.apply(p->index_field->gen());
  }
  p->convention = convention;
  if (convention == Convention::kLopsided) {
    p->d_plus = p->d;
    p->d_minus = p->field->one();
  } else {
    p->d_plus = p->sqrt_d;
    p->d_minus = p->sqrt_d;
  }
  const PlanarParams& ref = *p;
  cache.emplace(key, std::move(p));
  return ref;
}

NFElem quantum_int(const PlanarParams& params, int m) {
  if (m < 0) throw std::invalid_argument("quantum_int: negative index");
  static std::map<const NField*, std::vector<NFElem>> memo;
  std::lock_guard<std::mutex> lock(g_mu);
  auto& table = memo[params.field.get()];
  if (table.empty()) {
    table.push_back(params.field->zero());
    table.push_back(params.field->one());
  }
  while (static_cast<int>(table.size()) <= m) {
    std::size_t k = table.size();
    table.push_back(params.sqrt_d * table[k - 1] - table[k - 2]);
  }
  return table[static_cast<std::size_t>(m)];
}

NFElem to_index_field(const PlanarParams& params, const NFElem& x) {
  const FieldPtr& k = params.index_field;
  SpanReducer<Rat> span(Rat(0), Rat(1));
  NFElem p = params.field->one();
  for (int i = 0; i < k->degree(); ++i) {
    span.add(p.coords());
    p = p * params.index_to_field.image;
  }
  auto c = span.express(x.coords());
  if (!c) throw std::domain_error("element does not lie in Q(D)");
  return k->from_coords(*c);
}

bool in_index_field(const PlanarParams& params, const NFElem& x) {
  try {
    NFElem y = to_index_field(params, x);
    return params.index_to_field.apply(y) == x;
  } catch (const std::domain_error&) {
    return false;
  }
}

const ScalarPack& ScalarPack::get(int level) {
  static std::map<int, std::unique_ptr<ScalarPack>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(level);
  if (it != cache.end()) return *it->second;

  auto s = std::make_unique<ScalarPack>();
  const PlanarParams& pp = PlanarParams::get(level, Convention::kLopsided);
  s->level = level;
  s->n = pp.n;
  s->params = &pp;
  s->d_index = pp.index_field->gen();
  const int n = pp.n;
  s->rcheck = quantum_int(pp, n + 2) / quantum_int(pp, n);
  auto ex = express_in_subfield(s->rcheck, pp.index_field);
  if (!ex.present()) throw std::logic_error("branch ratio is not in Q(D)");
  s->rcheck_index = ex.value();
  s->lambda_sq_index = -s->rcheck_index / s->d_index;
  Extension lam = adjoin_sqrt(pp.index_field, s->lambda_sq_index, "l");
  if (lam.trivial) throw std::logic_error("twist scalar already lies in Q(D)");
  s->lambda_field = lam.field;
  s->lambda = lam.root;
  s->index_to_lambda = lam.base;
  for (int m = 1; m <= 2 * n + 3; m += 2)
    if (in_index_field(pp, quantum_int(pp, m))) s->odd_members.push_back(m);
  auto ratio = [&](int a, int b) {
    s->even_ratios["[" + std::to_string(a) + "]/[" + std::to_string(b) + "]"] =
        in_index_field(pp, quantum_int(pp, a) / quantum_int(pp, b));
  };
  ratio(6, 2);
  ratio(n + 2, n);
  ratio(2 * n + 2, n + 2);
  const ScalarPack& ref = *s;
  cache.emplace(level, std::move(s));
  return ref;
}

NFElem jw_trace(const PlanarParams& params, int k, Shading shading, Side side) {
  if (k < 0) throw std::invalid_argument("jw_trace: negative strand count");
  NFElem q = quantum_int(params, k + 1);
  if (params.convention == Convention::kSpherical || k % 2 == 0) return q;
  NFElem right = shading == Shading::kPlus ? q / params.sqrt_d : params.sqrt_d * q;
  if (side == Side::kRight) return right;
  // tr_R = (d_-+ / d_+-) tr_L, so tr_L = (d_+- / d_-+) tr_R.
  const NFElem& own = shading == Shading::kPlus ? params.d_plus : params.d_minus;
  const NFElem& opp = shading == Shading::kPlus ? params.d_minus : params.d_plus;
  return own / opp * right;
}

int trace_rescaling_exponent(int k, Shading shading, Side side) {
  auto shaded = [&](int region) { return (shading == Shading::kMinus) != (region % 2 == 1) ? 1 : 0; };
  int e = shaded(k) - shaded(0);
  return side == Side::kRight ? e : -e;
}

QIntIdentityReport verify_qint_identities(const PlanarParams& params) {
  QIntIdentityReport r;
  const int n = params.n;
  NFElem two = quantum_int(params, 2);
  for (int m = 1; m <= 2 * n + 3; ++m)
    if (two * quantum_int(params, m) != quantum_int(params, m + 1) + quantum_int(params, m - 1))
      r.recurrence_failures.push_back(m);
  r.square_identity = two * two == quantum_int(params, 3) + Rat(1);
  r.product_identity =
      (quantum_int(params, n + 2) - quantum_int(params, n)) * quantum_int(params, n + 1) == quantum_int(params, 2 * n + 2);
  r.ok = r.recurrence_failures.empty() && r.square_identity && r.product_identity;
  return r;
}

}  // namespace cyclo
