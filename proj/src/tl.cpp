#include "cyclo/tl.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace cyclo {

namespace {

// Position of a boundary point on the boundary circle: bottom left to right, then top right to left.
int cyclic_position(const TLDiagram& d, int point) {
  return point < d.bottom ? point : d.bottom + (d.top - 1 - (point - d.bottom));
}

int point_at(int bottom, int top, int pos) { return pos < bottom ? pos : bottom + (top - 1 - (pos - bottom)); }

}  // namespace

TLDiagram TLDiagram::identity(int k) {
  TLDiagram d{k, k, std::vector<int>(static_cast<std::size_t>(2 * k))};
  for (int i = 0; i < k; ++i) {
    d.partner[static_cast<std::size_t>(i)] = k + i;
    d.partner[static_cast<std::size_t>(k + i)] = i;
  }
  return d;
}

TLDiagram TLDiagram::generator(int k, int i) {
  if (i < 1 || i >= k) throw std::invalid_argument("generator index out of range");
  TLDiagram d = identity(k);
  auto set = [&](int a, int b) {
    d.partner[static_cast<std::size_t>(a)] = b;
    d.partner[static_cast<std::size_t>(b)] = a;
  };
  set(i - 1, i);
  set(k + i - 1, k + i);
  return d;
}

TLDiagram TLDiagram::cup() { return {0, 2, {1, 0}}; }
TLDiagram TLDiagram::cap() { return {2, 0, {1, 0}}; }

bool TLDiagram::is_planar() const {
  const int n = bottom + top;
  if (static_cast<int>(partner.size()) != n || n % 2 != 0) return false;
  std::vector<std::pair<int, int>> arcs;
  for (int p = 0; p < n; ++p) {
    int q = partner[static_cast<std::size_t>(p)];
    if (q < 0 || q >= n || q == p || partner[static_cast<std::size_t>(q)] != p) return false;
    if (p < q) {
      int a = cyclic_position(*this, p), b = cyclic_position(*this, q);
      arcs.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  for (const auto& [a, b] : arcs)
    for (const auto& [c, e] : arcs)
      if (a < c && c < b && b < e) return false;
  return true;
}

int TLDiagram::through_strands() const {
  int c = 0;
  for (int p = 0; p < bottom; ++p)
    if (partner[static_cast<std::size_t>(p)] >= bottom) ++c;
  return c;
}

int TLDiagram::critical_exponent(Shading base) const {
  int k = 0;
  for (int p = 0; p < bottom + top; ++p) {
    int q = partner[static_cast<std::size_t>(p)];
    if (q <= p) continue;
    if (q < bottom) {
      // Maximum: above is region p, below is region p+1.
      if (region_shaded(base, p) && !region_shaded(base, p + 1)) --k;
    } else if (p >= bottom) {
      int i = p - bottom;
      // Minimum: above is region i+1, below is region i.
      if (region_shaded(base, i + 1) && !region_shaded(base, i)) ++k;
    }
  }
  return k;
}

std::string TLDiagram::ascii() const {
  std::ostringstream os;
  auto name = [&](int p) { return p < bottom ? "b" + std::to_string(p) : "t" + std::to_string(p - bottom); };
  os << bottom << "->" << top << ":";
  for (int p = 0; p < bottom + top; ++p) {
    int q = partner[static_cast<std::size_t>(p)];
    if (q > p) os << " " << name(p) << "-" << name(q);
  }
  return os.str();
}

std::vector<TLDiagram> enumerate_diagrams(int bottom, int top) {
  std::vector<TLDiagram> out;
  const int n = bottom + top;
  if (n % 2 != 0) return out;
  std::vector<int> match(static_cast<std::size_t>(n), -1);
  std::function<void(int)> rec = [&](int first) {
    while (first < n && match[static_cast<std::size_t>(first)] >= 0) ++first;
    if (first >= n) {
      TLDiagram d{bottom, top, std::vector<int>(static_cast<std::size_t>(n))};
      for (int pos = 0; pos < n; ++pos)
        d.partner[static_cast<std::size_t>(point_at(bottom, top, pos))] = point_at(bottom, top, match[static_cast<std::size_t>(pos)]);
      out.push_back(d);
      return;
    }
    // Pair first with a later free position leaving an even, self-contained block inside.
    for (int j = first + 1; j < n; j += 2) {
      bool inner_free = true;
      for (int x = first + 1; x < j; ++x)
        if (match[static_cast<std::size_t>(x)] >= 0) inner_free = false;
      if (!inner_free || match[static_cast<std::size_t>(j)] >= 0) continue;
      match[static_cast<std::size_t>(first)] = j;
      match[static_cast<std::size_t>(j)] = first;
      rec(first + 1);
      match[static_cast<std::size_t>(first)] = -1;
      match[static_cast<std::size_t>(j)] = -1;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

DiagramProduct compose_diagrams(const TLDiagram& upper, const TLDiagram& lower, Shading base) {
  if (lower.top != upper.bottom) throw std::invalid_argument("compose: boundary mismatch");
  const int b = lower.bottom, m = lower.top, t = upper.top;
  // Nodes: lower bottom [0,b), middle [b, b+m), upper top [b+m, b+m+t).
  const int total = b + m + t;
  std::vector<int> via_lower(static_cast<std::size_t>(total), -1), via_upper(static_cast<std::size_t>(total), -1);
  for (int p = 0; p < b + m; ++p) via_lower[static_cast<std::size_t>(p)] = lower.partner[static_cast<std::size_t>(p)];
  for (int p = 0; p < m + t; ++p) {
    int q = upper.partner[static_cast<std::size_t>(p)];
    via_upper[static_cast<std::size_t>(b + p)] = b + q;
  }
  DiagramProduct out;
  out.result = TLDiagram{b, t, std::vector<int>(static_cast<std::size_t>(b + t), -1)};
  std::vector<bool> seen(static_cast<std::size_t>(total), false);
  auto outer_index = [&](int node) { return node < b ? node : node - m; };
  auto is_outer = [&](int node) { return node < b || node >= b + m; };
  for (int start = 0; start < total; ++start) {
    if (!is_outer(start) || seen[static_cast<std::size_t>(start)]) continue;
    int cur = start;
    bool use_lower = start < b;
    seen[static_cast<std::size_t>(cur)] = true;
    while (true) {
      int next = use_lower ? via_lower[static_cast<std::size_t>(cur)] : via_upper[static_cast<std::size_t>(cur)];
      seen[static_cast<std::size_t>(next)] = true;
      if (is_outer(next)) {
        out.result.partner[static_cast<std::size_t>(outer_index(start))] = outer_index(next);
        out.result.partner[static_cast<std::size_t>(outer_index(next))] = outer_index(start);
        break;
      }
      cur = next;
      use_lower = !use_lower;
    }
  }
  for (int j = 0; j < m; ++j) {
    int node = b + j;
    if (seen[static_cast<std::size_t>(node)]) continue;
    // A closed loop; j is its leftmost middle point, so its interior starts at region j+1.
    int cur = node;
    bool use_lower = true;
    do {
      seen[static_cast<std::size_t>(cur)] = true;
      cur = use_lower ? via_lower[static_cast<std::size_t>(cur)] : via_upper[static_cast<std::size_t>(cur)];
      use_lower = !use_lower;
    } while (cur != node);
    if (region_shaded(base, j + 1))
      ++out.shaded_loops;
    else
      ++out.unshaded_loops;
  }
  return out;
}

TLMorphism::TLMorphism(const PlanarParams& params, int bottom, int top, Shading base)
    : params_(&params), bottom_(bottom), top_(top), base_(base) {}

TLMorphism TLMorphism::identity(const PlanarParams& params, int k, Shading base) {
  return from_diagram(params, TLDiagram::identity(k), base);
}

TLMorphism TLMorphism::generator(const PlanarParams& params, int k, int i, Shading base) {
  return from_diagram(params, TLDiagram::generator(k, i), base);
}

TLMorphism TLMorphism::from_diagram(const PlanarParams& params, const TLDiagram& d, Shading base) {
  TLMorphism m(params, d.bottom, d.top, base);
  m.add(d, params.field->one());
  return m;
}

NFElem TLMorphism::coefficient(const TLDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? params_->field->zero() : it->second;
}

void TLMorphism::add(const TLDiagram& d, const NFElem& c) {
  if (d.bottom != bottom_ || d.top != top_) throw std::invalid_argument("diagram boundary mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

void require_compatible(const TLMorphism& a, const TLMorphism& b) {
  if (a.bottom() != b.bottom() || a.top() != b.top() || a.base() != b.base() || &a.params() != &b.params())
    throw std::invalid_argument("incompatible morphisms");
}

}  // namespace

TLMorphism operator+(const TLMorphism& a, const TLMorphism& b) {
  require_compatible(a, b);
  TLMorphism r = a;
  for (const auto& [d, c] : b.terms_) r.add(d, c);
  return r;
}

TLMorphism operator-(const TLMorphism& a, const TLMorphism& b) {
  require_compatible(a, b);
  TLMorphism r = a;
  for (const auto& [d, c] : b.terms_) r.add(d, -c);
  return r;
}

TLMorphism operator*(const NFElem& c, const TLMorphism& a) {
  TLMorphism r(*a.params_, a.bottom_, a.top_, a.base_);
  for (const auto& [d, x] : a.terms_) r.add(d, c * x);
  return r;
}

bool operator==(const TLMorphism& a, const TLMorphism& b) {
  if (a.bottom_ != b.bottom_ || a.top_ != b.top_ || a.base_ != b.base_ || a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [d, c] : a.terms_) {
    auto it = b.terms_.find(d);
    if (it == b.terms_.end() || it->second != c) return false;
  }
  return true;
}

NFElem TLMorphism::scalar() const {
  if (bottom_ != 0 || top_ != 0) throw std::invalid_argument("scalar of a morphism with boundary");
  return coefficient(TLDiagram{0, 0, {}});
}

std::string TLMorphism::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")[" << d.ascii() << "]";
  }
  return first ? "0" : os.str();
}

TLMorphism compose(const TLMorphism& f, const TLMorphism& g) {
  if (g.top() != f.bottom()) throw std::invalid_argument("compose: boundary mismatch");
  if (g.base() != f.base() || &f.params() != &g.params()) throw std::invalid_argument("compose: shading mismatch");
  const PlanarParams& pp = f.params();
  TLMorphism r(pp, g.bottom(), f.top(), f.base());
  std::map<TLDiagram, NFElem> acc;
  for (const auto& [df, cf] : f.terms()) {
    for (const auto& [dg, cg] : g.terms()) {
      auto prod = compose_diagrams(df, dg, f.base());
      NFElem c = cf * cg;
      for (int i = 0; i < prod.shaded_loops; ++i) c = c * pp.d_minus;
      for (int i = 0; i < prod.unshaded_loops; ++i) c = c * pp.d_plus;
      r.add(prod.result, c);
    }
  }
  return r;
}

TLMorphism tensor_id_right(const TLMorphism& f) {
  TLMorphism r(f.params(), f.bottom() + 1, f.top() + 1, f.base());
  const int b = f.bottom();
  for (const auto& [d, c] : f.terms()) {
    // Old top point j becomes b+1+j; new bottom b pairs with new top (top index f.top()).
    TLDiagram e{b + 1, d.top + 1, std::vector<int>(static_cast<std::size_t>(b + d.top + 2))};
    auto map_point = [&](int p) { return p < b ? p : p + 1; };
    for (int p = 0; p < b + d.top; ++p) e.partner[static_cast<std::size_t>(map_point(p))] = map_point(d.partner[static_cast<std::size_t>(p)]);
    int nb = b, nt = (b + 1) + d.top;
    e.partner[static_cast<std::size_t>(nb)] = nt;
    e.partner[static_cast<std::size_t>(nt)] = nb;
    r.add(e, c);
  }
  return r;
}

TLMorphism partial_trace(const TLMorphism& f, Side side) {
  const int k = f.bottom();
  if (k != f.top() || k < 1) throw std::invalid_argument("partial_trace: needs a k -> k morphism with k >= 1");
  const PlanarParams& pp = f.params();
  Shading new_base = side == Side::kRight ? f.base() : flip(f.base());
  TLMorphism r(pp, k - 1, k - 1, new_base);
  const int bot = side == Side::kRight ? k - 1 : 0;
  const int topp = k + bot;
  // Interior of a loop closed around the strand: region k on the right, region 0 on the left.
  const bool loop_shaded = region_shaded(f.base(), side == Side::kRight ? k : 0);
  auto reindex = [&](int p) {
    if (p < k) return side == Side::kRight ? p : p - 1;
    int j = p - k;
    return (k - 1) + (side == Side::kRight ? j : j - 1);
  };
  for (const auto& [d, c] : f.terms()) {
    TLDiagram e{k - 1, k - 1, std::vector<int>(static_cast<std::size_t>(2 * (k - 1)), -1)};
    NFElem coeff = c;
    int a = d.partner[static_cast<std::size_t>(bot)], z = d.partner[static_cast<std::size_t>(topp)];
    if (a == topp) {
      coeff = coeff * pp.loop(loop_shaded);
    } else {
      e.partner[static_cast<std::size_t>(reindex(a))] = reindex(z);
      e.partner[static_cast<std::size_t>(reindex(z))] = reindex(a);
    }
    for (int p = 0; p < 2 * k; ++p) {
      if (p == bot || p == topp || p == a || p == z) continue;
      e.partner[static_cast<std::size_t>(reindex(p))] = reindex(d.partner[static_cast<std::size_t>(p)]);
    }
    r.add(e, coeff);
  }
  return r;
}

NFElem full_trace(const TLMorphism& f, Side side) {
  TLMorphism cur = f;
  while (cur.bottom() > 0) cur = partial_trace(cur, side);
  return cur.scalar();
}

JonesWenzl jones_wenzl(const PlanarParams& params, int k, Shading base) {
  if (k < 1) throw std::invalid_argument("jones_wenzl: k must be positive");
  JonesWenzl out{TLMorphism::identity(params, 1, base), {}};
  for (int j = 1; j < k; ++j) {
    TLMorphism x = tensor_id_right(out.jw);
    TLMorphism e = TLMorphism::generator(params, j + 1, j, base);
    TLMorphism xe = compose(x, e);
    TLMorphism xexe = compose(xe, xe);
    // Solve xexe = mu * xe.
    if (xe.is_zero()) throw std::logic_error("jones_wenzl: degenerate recursion");
    const auto& [d0, c0] = *xe.terms().begin();
    NFElem mu = xexe.coefficient(d0) / c0;
    if (!(xexe == mu * xe)) throw std::logic_error("jones_wenzl: absorption is not scalar");
    if (mu.is_zero()) throw std::domain_error("jones_wenzl: vanishing quantum integer");
    NFElem c = mu.inverse();
    out.recursion_coefficients.push_back(c);
    out.jw = x - c * compose(xe, x);
  }
  return out;
}

}  // namespace cyclo
