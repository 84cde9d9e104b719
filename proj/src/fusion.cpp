#include "cyclo/fusion.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

#include "cyclo/factor.hpp"
#include "cyclo/linalg.hpp"

namespace cyclo {

int BipartiteGraph::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  return -1;
}

int BipartiteGraph::add_vertex(const std::string& label) {
  int i = index_of(label);
  if (i >= 0) return i;
  labels.push_back(label);
  return static_cast<int>(labels.size()) - 1;
}

void BipartiteGraph::add_edge(const std::string& a, const std::string& b) {
  int i = add_vertex(a), j = add_vertex(b);
  if (i == j) throw std::invalid_argument("loop edge at " + a);
  edges.emplace_back(i, j);
}

std::vector<std::vector<Rat>> BipartiteGraph::adjacency() const {
  std::vector<std::vector<Rat>> m(labels.size(), std::vector<Rat>(labels.size(), Rat(0)));
  for (auto [a, b] : edges) {
    m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += 1;
    m[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] += 1;
  }
  return m;
}

std::vector<int> BipartiteGraph::depths() const {
  std::vector<int> d(labels.size(), -1);
  if (labels.empty()) return d;
  std::vector<std::vector<int>> nbr(labels.size());
  for (auto [a, b] : edges) {
    nbr[static_cast<std::size_t>(a)].push_back(b);
    nbr[static_cast<std::size_t>(b)].push_back(a);
  }
  std::deque<int> queue{root};
  d[static_cast<std::size_t>(root)] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : nbr[static_cast<std::size_t>(v)])
      if (d[static_cast<std::size_t>(w)] < 0) {
        d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
  }
  return d;
}

bool BipartiteGraph::is_connected() const {
  if (labels.empty()) return false;
  for (int x : depths())
    if (x < 0) return false;
  return true;
}

bool BipartiteGraph::is_bipartite() const {
  auto d = depths();
  for (auto [a, b] : edges) {
    int da = d[static_cast<std::size_t>(a)], db = d[static_cast<std::size_t>(b)];
    if (da < 0 || db < 0 || (da + db) % 2 == 0) return false;
  }
  return true;
}

BipartiteGraph BipartiteGraph::parse(std::istream& in, std::string name) {
  BipartiteGraph g;
  g.name = std::move(name);
  std::string line, root_label;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() == 2 && tok[0] == "root") {
      root_label = tok[1];
      g.add_vertex(root_label);
      continue;
    }
    if (tok.size() != 2) throw std::invalid_argument("graph line " + std::to_string(lineno) + ": expected two labels");
    g.add_edge(tok[0], tok[1]);
  }
  if (g.labels.empty()) throw std::invalid_argument("graph has no vertices");
  g.root = root_label.empty() ? 0 : g.index_of(root_label);
  return g;
}

BipartiteGraph BipartiteGraph::parse_string(const std::string& text, std::string name) {
  std::istringstream in(text);
  return parse(in, std::move(name));
}

std::string BipartiteGraph::to_text() const {
  std::ostringstream os;
  os << "root " << labels[static_cast<std::size_t>(root)] << "\n";
  for (auto [a, b] : edges) os << labels[static_cast<std::size_t>(a)] << " " << labels[static_cast<std::size_t>(b)] << "\n";
  return os.str();
}

namespace {

BipartiteGraph spine(int level, const std::string& name, const std::string& x) {
  const int n = 4 * level + 4;
  BipartiteGraph g;
  g.name = name;
  std::vector<std::string> path{"1", x};
  for (int k = 2; k < n; ++k) path.push_back("JW" + std::to_string(k));
  for (std::size_t i = 0; i + 1 < path.size(); ++i) g.add_edge(path[i], path[i + 1]);
  return g;
}

}  // namespace

BipartiteGraph principal_graph(int level) {
  BipartiteGraph g = spine(level, level == 0 ? "H0 principal" : "H1 principal", "X");
  const std::string branch = "JW" + std::to_string(4 * level + 3);
  for (std::string arm : {"P", "Q"}) {
    g.add_edge(branch, arm);
    g.add_edge(arm, arm + "'");
    g.add_edge(arm + "'", arm + "''");
  }
  return g;
}

BipartiteGraph dual_graph(int level) {
  BipartiteGraph g = spine(level, level == 0 ? "H0 dual" : "H1 dual", "X*");
  const std::string branch = "JW" + std::to_string(4 * level + 3);
  g.add_edge(branch, "A");
  g.add_edge(branch, "B");
  g.add_edge("B", "C");
  g.add_edge("B", "D");
  return g;
}

BipartiteGraph path_graph(int vertices) {
  BipartiteGraph g;
  g.name = "A" + std::to_string(vertices);
  g.add_vertex("v0");
  for (int i = 1; i < vertices; ++i) g.add_edge("v" + std::to_string(i - 1), "v" + std::to_string(i));
  return g;
}

Poly characteristic_polynomial(const std::vector<std::vector<Rat>>& a) {
  const std::size_t n = a.size();
  using Mat = std::vector<std::vector<Rat>>;
  auto mul = [&](const Mat& x, const Mat& y) {
    Mat r(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(x[i][k]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) r[i][j] += x[i][k] * y[k][j];
      }
    return r;
  };
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  Mat m(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    Mat am = mul(a, m);
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = std::move(am);
    Mat t = mul(a, m);
    Rat tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += t[i][i];
    c[n - k] = -tr / Rat(static_cast<long>(k));
  }
  return Poly(c);
}

namespace {

struct LargestReal {
  std::size_t index;  // into isolate_roots order
  ComplexBox box;
};

std::optional<LargestReal> largest_real_root(const Poly& f, unsigned bits) {
  auto roots = isolate_roots(f, bits);
  std::optional<LargestReal> best;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!roots[i].real) continue;
    ComplexBox b = roots[i].box();
    if (!best || b.re_lo > best->box.re_lo) best = LargestReal{i, b};
  }
  return best;
}

}  // namespace

GraphNorm graph_norm(const BipartiteGraph& g) {
  if (!g.is_connected()) throw std::invalid_argument("graph_norm: graph must be connected");
  GraphNorm r;
  r.char_poly = characteristic_polynomial(g.adjacency());
  FactorList fl = factor_rational(r.char_poly);
  // Pick the factor whose largest real root exceeds every other factor's, refining as needed.
  for (unsigned bits = 64; bits <= 4096; bits *= 2) {
    std::vector<std::pair<Poly, LargestReal>> cands;
    for (const auto& [f, mult] : fl.factors) {
      (void)mult;
      auto lr = largest_real_root(f, bits);
      if (lr) cands.emplace_back(f, *lr);
    }
    for (std::size_t i = 0; i < cands.size(); ++i) {
      bool dominates = true;
      for (std::size_t j = 0; j < cands.size(); ++j)
        if (j != i && !(cands[i].second.box.re_lo > cands[j].second.box.re_hi)) dominates = false;
      if (!dominates) continue;
      r.factor = cands[i].first;
      r.field = NField::create_with_root(r.factor, "t", cands[i].second.index, true);
      r.norm = r.field->gen();
      r.norm_sq = r.norm * r.norm;
      return r;
    }
  }
  throw std::runtime_error("graph_norm: could not separate the largest eigenvalue");
}

NFElem graph_norm_squared(const BipartiteGraph& g) { return graph_norm(g).norm_sq; }

PFData pf_dimensions(const BipartiteGraph& g) {
  PFData r;
  r.norm = graph_norm(g);
  const FieldPtr& k = r.norm.field;
  auto adj = g.adjacency();
  const std::size_t n = adj.size();
  std::vector<std::vector<NFElem>> m(n, std::vector<NFElem>(n, k->zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = k->from_rat(adj[i][j]) - (i == j ? r.norm.norm : k->zero());
  auto ns = nullspace<NFElem>(m, k->zero(), k->one());
  if (ns.size() != 1) throw std::logic_error("pf_dimensions: eigenspace is not one-dimensional");
  std::vector<NFElem> v = ns[0];
  NFElem s = v[static_cast<std::size_t>(g.root)].inverse();
  for (auto& x : v) x = x * s;
  r.eigen_equation = true;
  r.all_positive = true;
  for (std::size_t i = 0; i < n; ++i) {
    NFElem av = k->zero();
    for (std::size_t j = 0; j < n; ++j) av = av + v[j] * adj[i][j];
    if (av != r.norm.norm * v[i]) r.eigen_equation = false;
    ComplexBox b = embed(v[i], 64);
    if (!(sgn(b.re_lo) > 0)) r.all_positive = false;
    r.dims.emplace(g.labels[i], v[i]);
  }
  return r;
}

bool same_algebraic_number(const NFElem& a, const NFElem& b) {
  if (minimal_polynomial(a) != minimal_polynomial(b)) return false;
  return embed(a, 64).overlaps(embed(b, 64));
}

}  // namespace cyclo
