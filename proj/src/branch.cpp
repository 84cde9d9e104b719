#include "cyclo/branch.hpp"

#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace cyclo {

std::string to_string(BranchSide s) { return s == BranchSide::kPrincipal ? "principal" : "dual"; }

BranchPresentation BranchPresentation::make(int level, BranchSide side) {
  const ScalarPack& pack = ScalarPack::get(level);
  const PlanarParams& pp = *pack.params;
  BranchPresentation p;
  p.level = level;
  p.n = pack.n;
  p.side = side;
  p.pack = &pack;
  p.field = side == BranchSide::kPrincipal ? pack.lambda_field : pp.index_field;
  if (side == BranchSide::kPrincipal) {
    p.lambda = pack.lambda;
    p.quad_lin = p.field->zero();
    p.quad_const = pack.lambda * pack.lambda;
  } else {
    p.quad_lin = pack.rcheck_index - Rat(1);
    p.quad_const = pack.rcheck_index;
  }
  p.jw_trace_val = p.lift(quantum_int(pp, p.n + 1));
  p.g_trace_val = p.field->zero();
  p.ptr_jw = p.lift(quantum_int(pp, 2) * quantum_int(pp, p.n + 1) / quantum_int(pp, p.n));
  return p;
}

BranchPresentation BranchPresentation::rescaled(const NFElem& s) const {
  BranchPresentation p = *this;
  p.quad_lin = s * quad_lin;
  p.quad_const = s * s * quad_const;
  return p;
}

NFElem BranchPresentation::lift(const NFElem& x) const {
  if (x.field() == field) return x;
  const PlanarParams& pp = *pack->params;
  NFElem in_index = x.field() == pp.index_field ? x : to_index_field(pp, x);
  if (field == pp.index_field) return in_index;
  return pack->index_to_lambda.apply(in_index);
}

BranchElem branch_jw(const BranchPresentation& p) { return {p.field->one(), p.field->zero()}; }
BranchElem branch_gen(const BranchPresentation& p) { return {p.field->zero(), p.field->one()}; }

BranchElem branch_mul(const BranchPresentation& p, const BranchElem& a, const BranchElem& b) {
  NFElem gg = a.g * b.g;
  return {a.jw * b.jw + gg * p.quad_const, a.jw * b.g + a.g * b.jw + gg * p.quad_lin};
}

BranchElem branch_add(const BranchElem& a, const BranchElem& b) { return {a.jw + b.jw, a.g + b.g}; }
BranchElem branch_sub(const BranchElem& a, const BranchElem& b) { return {a.jw - b.jw, a.g - b.g}; }
BranchElem branch_scale(const NFElem& c, const BranchElem& a) { return {c * a.jw, c * a.g}; }

NFElem branch_trace(const BranchPresentation& p, const BranchElem& a) {
  return a.jw * p.jw_trace_val + a.g * p.g_trace_val;
}

NFElem branch_ptr(const BranchPresentation& p, const BranchElem& a) { return a.jw * p.ptr_jw; }

namespace {

bool certified_positive(const NFElem& x) {
  ComplexBox b = embed(x, 64);
  return sgn(b.re_lo) > 0 && sgn(b.im_lo) <= 0 && sgn(b.im_hi) >= 0;
}

}  // namespace

IdempotentPair branch_idempotents(const BranchPresentation& p) {
  IdempotentPair r;
  BranchElem jw = branch_jw(p), g = branch_gen(p);
  if (p.side == BranchSide::kPrincipal) {
    r.first_name = "P";
    r.second_name = "Q";
    NFElem half = p.field->from_rat(Rat(1, 2));
    NFElem gc = half / p.lambda;
    r.first = branch_add(branch_scale(half, jw), branch_scale(gc, g));
    r.second = branch_sub(branch_scale(half, jw), branch_scale(gc, g));
  } else {
    r.first_name = "A";
    r.second_name = "B";
    NFElem rc = p.pack->rcheck_index;
    NFElem c = (rc + Rat(1)).inverse();
    r.first = branch_scale(c, branch_add(jw, g));
    r.second = branch_scale(c, branch_sub(branch_scale(rc, jw), g));
  }
  r.first_idempotent = branch_mul(p, r.first, r.first) == r.first;
  r.second_idempotent = branch_mul(p, r.second, r.second) == r.second;
  BranchElem zero{p.field->zero(), p.field->zero()};
  r.orthogonal = branch_mul(p, r.first, r.second) == zero && branch_mul(p, r.second, r.first) == zero;
  r.complete = branch_add(r.first, r.second) == jw;
  r.trace_first = branch_trace(p, r.first);
  r.trace_second = branch_trace(p, r.second);
  r.positive_traces = certified_positive(r.trace_first) && certified_positive(r.trace_second);
  return r;
}

NFElem twisted_moment(const BranchPresentation& p, int k) {
  if (k < 1) throw std::invalid_argument("twisted_moment: k must be positive");
  NFElem prev = p.jw_trace_val, cur = p.g_trace_val;
  for (int j = 2; j <= k; ++j) {
    NFElem next = p.quad_lin * cur + p.quad_const * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

NFElem normalized_m3_from(const M3Inputs& in) {
  NFElem den = in.theta;
  for (int i = 1; i < in.m; ++i) den = den * in.circle;
  return in.moment_hat / den;
}

M3Inputs rescale_m3_inputs(const M3Inputs& in, const NFElem& b, const NFElem& b2, const NFElem& t, const NFElem& t2) {
  // B_{Y^{2m-2}} and B'_{Y^{2m-2}} use m-1 caps and cups each.
  M3Inputs out = in;
  NFElem bb = b * b2;
  NFElem caps = bb.field()->one();
  for (int i = 1; i < in.m; ++i) caps = caps * bb;
  out.moment_hat = in.moment_hat * caps * t * t2;
  out.theta = in.theta * t * t2;
  out.circle = in.circle * bb;
  return out;
}

M3Report normalized_m3(int level) {
  const ScalarPack& pack = ScalarPack::get(level);
  const PlanarParams& pp = *pack.params;
  BranchPresentation dual = BranchPresentation::make(level, BranchSide::kDual);
  BranchPresentation principal = BranchPresentation::make(level, BranchSide::kPrincipal);
  auto q = [&](int m) { return principal.lift(quantum_int(pp, m)); };
  const int n = pack.n;
  const NFElem& lam = pack.lambda;

  M3Report r;
  r.level = level;
  r.third_moment = principal.lift(twisted_moment(dual, 3));
  NFElem two_sq = principal.lift(quantum_int(pp, 2) * quantum_int(pp, 2));
  r.inputs.moment_hat = r.third_moment / (two_sq * lam * lam * lam);
  r.inputs.theta = q(5) + Rat(1);
  r.inputs.circle = q(3);
  r.inputs.m = n / 2;
  r.m3 = normalized_m3_from(r.inputs);

  NFElem three_pow = q(3);
  for (int i = 0; i < 2 * level; ++i) three_pow = three_pow * q(3);
  r.closed_form = lam * principal.lift(quantum_int(pp, 2 * n + 2) / quantum_int(pp, n + 2)) * two_sq /
                  ((q(5) + Rat(1)) * three_pow);
  r.matches_closed_form = r.m3 == r.closed_form;

  auto ratio = express_in_subfield(r.m3 / lam, pp.index_field);
  r.ratio_in_index_field = ratio.present();
  if (ratio.present()) r.ratio = ratio.value();
  auto direct = express_in_subfield(r.m3, pp.index_field);
  if (direct.status == SubfieldExpression::Status::kNoEmbedding)
    throw std::logic_error("normalized_m3: Q(D) does not embed compatibly");
  r.m3_in_index_field = direct.present();
  return r;
}

TowerAlgebra::TowerAlgebra(BranchPresentation pres, int max_level, std::vector<NFElem> close_loops)
    : pres_(std::move(pres)), max_level_(max_level), loops_(std::move(close_loops)) {
  if (max_level < 0 || static_cast<int>(loops_.size()) < max_level)
    throw std::invalid_argument("TowerAlgebra: one loop value per added strand");
  dims_.push_back(2);
  for (int l = 1; l <= max_level; ++l) dims_.push_back(dims_.back() + dims_.back() * dims_.back());
  cache_.resize(static_cast<std::size_t>(max_level + 1));
}

std::string TowerAlgebra::word(int level, std::size_t i) const {
  if (level == 0) return i == 0 ? "JW" : "G";
  std::size_t lower = dim(level - 1);
  if (i < lower) return "(" + word(level - 1, i) + ")X";
  i -= lower;
  return "(" + word(level - 1, i / lower) + ")X.e.(" + word(level - 1, i % lower) + ")X";
}

TowerAlgebra::Vec TowerAlgebra::zero(int level) const { return Vec(dim(level), pres_.field->zero()); }

TowerAlgebra::Vec TowerAlgebra::from_branch(const BranchElem& a) const { return {a.jw, a.g}; }

TowerAlgebra::Vec TowerAlgebra::add(const Vec& x, const Vec& y) const {
  Vec r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + y[i];
  return r;
}

TowerAlgebra::Vec TowerAlgebra::sub(const Vec& x, const Vec& y) const {
  Vec r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - y[i];
  return r;
}

TowerAlgebra::Vec TowerAlgebra::scale(const NFElem& c, const Vec& x) const {
  Vec r = x;
  for (auto& v : r) v = c * v;
  return r;
}

bool TowerAlgebra::is_zero(const Vec& x) const {
  for (const auto& v : x)
    if (!v.is_zero()) return false;
  return true;
}

TowerAlgebra::Vec TowerAlgebra::plain(int level, const Vec& x) const {
  Vec r = zero(level + 1);
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i];
  return r;
}

TowerAlgebra::Vec TowerAlgebra::sandwich(int level, const Vec& x, const Vec& y) const {
  Vec r = zero(level + 1);
  std::size_t lower = dim(level);
  for (std::size_t i = 0; i < lower; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < lower; ++j)
      if (!y[j].is_zero()) r[lower + i * lower + j] = x[i] * y[j];
  }
  return r;
}

TowerAlgebra::Vec TowerAlgebra::unit_embed(int level, const Vec& lower) const {
  // At level 0 the lower object is a multiple of JW_{n-1}, absorbed as that multiple of JW_n.
  if (level == 0) return {lower[0], pres_.field->zero()};
  return plain(level - 1, lower);
}

const TowerAlgebra::Vec& TowerAlgebra::basis_product(int level, std::size_t i, std::size_t j) const {
  auto& cache = cache_[static_cast<std::size_t>(level)];
  auto key = std::make_pair(i, j);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  Vec r = zero(level);
  if (level == 0) {
    BranchElem a{i == 0 ? pres_.field->one() : pres_.field->zero(), i == 1 ? pres_.field->one() : pres_.field->zero()};
    BranchElem b{j == 0 ? pres_.field->one() : pres_.field->zero(), j == 1 ? pres_.field->one() : pres_.field->zero()};
    r = from_branch(branch_mul(pres_, a, b));
  } else {
    const int lo = level - 1;
    const std::size_t d = dim(lo);
    auto unit = [&](std::size_t k) {
      Vec v = zero(lo);
      v[k] = pres_.field->one();
      return v;
    };
    const bool pi = i < d, pj = j < d;
    if (pi && pj) {
      r = plain(lo, basis_product(lo, i, j));
    } else if (pi) {
      std::size_t b = (j - d) / d, c = (j - d) % d;
      r = sandwich(lo, basis_product(lo, i, b), unit(c));
    } else if (pj) {
      std::size_t a = (i - d) / d, b = (i - d) % d;
      r = sandwich(lo, unit(a), basis_product(lo, b, j));
    } else {
      std::size_t a = (i - d) / d, b = (i - d) % d;
      std::size_t c = (j - d) / d, e = (j - d) % d;
      Vec w = ptr(lo, basis_product(lo, b, c));
      Vec left = mul(lo, unit(a), unit_embed(lo, w));
      r = sandwich(lo, left, unit(e));
    }
  }
  return cache.emplace(key, std::move(r)).first->second;
}

TowerAlgebra::Vec TowerAlgebra::mul(int level, const Vec& x, const Vec& y) const {
  Vec r = zero(level);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero()) continue;
      NFElem c = x[i] * y[j];
      const Vec& p = basis_product(level, i, j);
      for (std::size_t k = 0; k < p.size(); ++k)
        if (!p[k].is_zero()) r[k] = r[k] + c * p[k];
    }
  }
  return r;
}

TowerAlgebra::Vec TowerAlgebra::ptr(int level, const Vec& x) const {
  if (level == 0) return {branch_ptr(pres_, BranchElem{x[0], x[1]})};
  const int lo = level - 1;
  const std::size_t d = dim(lo);
  Vec r = zero(lo);
  const NFElem& loop = loops_[static_cast<std::size_t>(lo)];
  for (std::size_t i = 0; i < d; ++i)
    if (!x[i].is_zero()) r[i] = r[i] + loop * x[i];
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const NFElem& c = x[d + a * d + b];
      if (c.is_zero()) continue;
      const Vec& p = basis_product(lo, a, b);
      for (std::size_t k = 0; k < d; ++k)
        if (!p[k].is_zero()) r[k] = r[k] + c * p[k];
    }
  return r;
}

std::string TowerAlgebra::to_string(int level, const Vec& x) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << x[i].to_string() << ")" << word(level, i);
  }
  return first ? "0" : os.str();
}

TowerStep tower_idempotent(const TowerAlgebra& alg, int level, const TowerAlgebra::Vec& base,
                           const TowerAlgebra::Vec& lower, const NFElem& coefficient) {
  if (level < 1 || level > alg.max_level()) throw std::invalid_argument("tower_idempotent: level out of range");
  const int lo = level - 1;
  TowerStep s;
  s.level = level;
  s.base = base;
  s.coefficient = coefficient;
  TowerAlgebra::Vec pb = alg.ptr(lo, base);
  if (lo == 0) {
    s.base_ptr = pb[0];
  } else {
    // ptr(base) must be a multiple of lower.
    std::size_t k = 0;
    while (k < lower.size() && lower[k].is_zero()) ++k;
    if (k == lower.size()) throw std::invalid_argument("tower_idempotent: zero lower idempotent");
    s.base_ptr = pb[k] / lower[k];
    if (!alg.is_zero(alg.sub(pb, alg.scale(s.base_ptr, lower))))
      throw std::logic_error("tower_idempotent: ptr(base) is not a multiple of the lower idempotent");
  }
  s.coefficient_inverts_ptr = coefficient * s.base_ptr == coefficient.field()->one();
  TowerAlgebra::Vec term = alg.scale(coefficient, alg.sandwich(lo, base, base));
  s.result = alg.sub(alg.plain(lo, base), term);
  s.idempotent = alg.mul(level, s.result, s.result) == s.result;
  s.complement_idempotent = alg.mul(level, term, term) == term;
  s.orthogonal = alg.is_zero(alg.mul(level, s.result, term)) && alg.is_zero(alg.mul(level, term, s.result));
  s.result_ptr = alg.ptr(level, s.result);
  return s;
}

bool TowerReport::ok() const {
  auto good = [](const TowerStep& s) {
    return s.idempotent && s.complement_idempotent && s.orthogonal && s.coefficient_inverts_ptr;
  };
  return good(first) && good(second) && ptr_base_matches && ptr_first_matches;
}

const TowerAlgebra& principal_tower(int level) {
  static std::map<int, std::unique_ptr<TowerAlgebra>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(level);
  if (it != cache.end()) return *it->second;
  BranchPresentation p = BranchPresentation::make(level, BranchSide::kPrincipal);
  // Lopsided: the first added strand closes a shaded loop, the second an unshaded one.
  std::vector<NFElem> loops{p.field->one(), p.lift(p.pack->d_index)};
  auto alg = std::make_unique<TowerAlgebra>(p, 2, loops);
  const TowerAlgebra& ref = *alg;
  cache.emplace(level, std::move(alg));
  return ref;
}

TowerReport tower_idempotents(int level, bool use_q) {
  const TowerAlgebra& alg = principal_tower(level);
  const BranchPresentation& p = alg.presentation();
  const PlanarParams& pp = *p.pack->params;
  const int n = p.n;
  auto q = [&](int m) { return quantum_int(pp, m); };

  IdempotentPair pq = branch_idempotents(p);
  TowerReport r;
  r.level = level;
  r.name = use_q ? "Q" : "P";
  TowerAlgebra::Vec base = alg.from_branch(use_q ? pq.second : pq.first);

  NFElem c1 = p.lift(Rat(2) * q(n) / (q(2) * q(n + 1)));
  NFElem c2 = p.lift(q(2) * q(n + 1) / (q(n + 2) - q(n)));
  r.expected_ptr_base = p.lift(q(2) * q(n + 1) / (Rat(2) * q(n)));
  r.expected_ptr_first = p.lift((q(n + 2) - q(n)) / (q(2) * q(n + 1)));

  r.first = tower_idempotent(alg, 1, base, {}, c1);
  r.ptr_base_matches = r.first.base_ptr == r.expected_ptr_base;
  r.second = tower_idempotent(alg, 2, r.first.result, base, c2);
  r.ptr_first_matches = r.second.base_ptr == r.expected_ptr_first;
  return r;
}

}  // namespace cyclo
