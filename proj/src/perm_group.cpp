#include "cyclo/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace cyclo {

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint8_t>(i);
  return r;
}

Perm from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
  Perm p = identity_perm(n);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) p[static_cast<std::size_t>(c[i])] = static_cast<std::uint8_t>(c[(i + 1) % c.size()]);
  return p;
}

int order(const Perm& p) {
  Perm id = identity_perm(p.size()), q = p;
  int k = 1;
  while (q != id) {
    q = compose(p, q);
    ++k;
  }
  return k;
}

std::vector<int> cycle_type(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string cycle_string(const Perm& p) {
  std::ostringstream os;
  std::vector<bool> seen(p.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    os << "(";
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (j != i) os << " ";
      os << j;
    }
    os << ")";
    any = true;
  }
  return any ? os.str() : "()";
}

std::vector<Perm> generate_group(const std::vector<Perm>& gens) {
  if (gens.empty()) return {};
  std::vector<Perm> elems{identity_perm(gens[0].size())};
  std::set<Perm> seen(elems.begin(), elems.end());
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      Perm h = compose(elems[i], g);
      if (seen.insert(h).second) elems.push_back(h);
    }
  return elems;
}

bool is_abelian(const std::vector<Perm>& elements) {
  for (const auto& a : elements)
    for (const auto& b : elements)
      if (compose(a, b) != compose(b, a)) return false;
  return true;
}

namespace {

// Extends a generator assignment to a map on all elements by walking words; nullopt if the
// walk is inconsistent.
std::optional<std::map<Perm, Perm>> extend(const std::vector<Perm>& gens1, const std::vector<Perm>& imgs) {
  std::map<Perm, Perm> phi;
  std::vector<Perm> queue{identity_perm(gens1[0].size())};
  phi[queue[0]] = identity_perm(imgs[0].size());
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t k = 0; k < gens1.size(); ++k) {
      Perm g = compose(queue[i], gens1[k]);
      Perm v = compose(phi[queue[i]], imgs[k]);
      auto it = phi.find(g);
      if (it == phi.end()) {
        phi[g] = v;
        queue.push_back(g);
      } else if (it->second != v) {
        return std::nullopt;
      }
    }
  return phi;
}

}  // namespace

std::optional<IsomorphismWitness> find_isomorphism(const std::vector<Perm>& gens1, const std::vector<Perm>& gens2) {
  auto g1 = generate_group(gens1);
  auto g2 = generate_group(gens2);
  if (g1.size() != g2.size()) return std::nullopt;
  std::vector<std::vector<Perm>> options;
  for (const auto& g : gens1) {
    std::vector<Perm> same;
    for (const auto& h : g2)
      if (order(h) == order(g)) same.push_back(h);
    if (same.empty()) return std::nullopt;
    options.push_back(same);
  }
  std::vector<std::size_t> idx(gens1.size(), 0);
  while (true) {
    std::vector<Perm> imgs;
    for (std::size_t k = 0; k < gens1.size(); ++k) imgs.push_back(options[k][idx[k]]);
    if (auto phi = extend(gens1, imgs)) {
      std::set<Perm> image;
      for (const auto& [a, b] : *phi) image.insert(b);
      bool ok = image.size() == g2.size();
      std::size_t checks = 0;
      for (const auto& a : g1) {
        if (!ok) break;
        for (const auto& b : g1) {
          ++checks;
          if (phi->at(compose(a, b)) != compose(phi->at(a), phi->at(b))) {
            ok = false;
            break;
          }
        }
      }
      if (ok) return IsomorphismWitness{gens1, imgs, checks};
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == options[k].size()) idx[k++] = 0;
    if (k == idx.size()) return std::nullopt;
  }
}

}  // namespace cyclo
