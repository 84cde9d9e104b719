#include "cyclo/roots.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cyclo {

namespace {

struct MC {
  mpf_class re, im;
  explicit MC(unsigned prec) : re(0, prec), im(0, prec) {}
};

void mc_mul(const MC& a, const MC& b, MC& out, mpf_class& t1, mpf_class& t2) {
  t1 = a.re * b.re;
  t2 = a.im * b.im;
  mpf_class r = t1 - t2;
  t1 = a.re * b.im;
  t2 = a.im * b.re;
  out.im = t1 + t2;
  out.re = r;
}

void mc_div(const MC& a, const MC& b, MC& out, unsigned prec) {
  mpf_class n(b.re * b.re + b.im * b.im, prec);
  mpf_class re((a.re * b.re + a.im * b.im) / n, prec);
  mpf_class im((a.im * b.re - a.re * b.im) / n, prec);
  out.re = re;
  out.im = im;
}

Rat to_rat(const mpf_class& f) {
  Rat q;
  mpq_set_f(q.get_mpq_t(), f.get_mpf_t());
  return q;
}

// Rounds q to the nearest multiple of 2^-bits.
Rat round_dyadic(const Rat& q, unsigned bits) {
  Int s = q.get_num();
  mpz_mul_2exp(s.get_mpz_t(), s.get_mpz_t(), bits);
  Int t;
  mpz_fdiv_q(t.get_mpz_t(), s.get_mpz_t(), q.get_den_mpz_t());
  Int d(1);
  mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), bits);
  return make_rat(t, d);
}

CRat round_dyadic(const CRat& z, unsigned bits) { return {round_dyadic(z.re, bits), round_dyadic(z.im, bits)}; }

std::vector<MC> aberth(const Poly& f, unsigned prec) {
  const int n = f.degree();
  std::vector<mpf_class> c;
  for (const auto& q : f.coeffs()) c.emplace_back(q, prec);
  Poly df = f.derivative();
  std::vector<mpf_class> dc;
  for (const auto& q : df.coeffs()) dc.emplace_back(q, prec);

  // Cauchy bound for the initial circle.
  double lc = std::fabs(f.leading().get_d());
  double bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::fabs(f.coeffs()[static_cast<std::size_t>(i)].get_d()) / lc);
  double radius = std::min(1.0 + bound, 1e6) * 0.5 + 0.1;

  std::vector<MC> z;
  for (int k = 0; k < n; ++k) {
    MC m(prec);
    double ang = 2.0 * M_PI * k / n + 0.4;
    m.re = radius * std::cos(ang);
    m.im = radius * std::sin(ang);
    z.push_back(m);
  }
  mpf_class t1(0, prec), t2(0, prec);
  mpf_class tol(1, prec);
  mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), prec - 16);
  MC fv(prec), dv(prec), tmp(prec), ratio(prec), sum(prec), w(prec), diff(prec), inv(prec), one(prec);
  one.re = 1;
  for (int iter = 0; iter < 2000; ++iter) {
    bool done = true;
    for (int i = 0; i < n; ++i) {
      fv.re = c.back();
      fv.im = 0;
      for (int k = n - 1; k >= 0; --k) {
        mc_mul(fv, z[static_cast<std::size_t>(i)], tmp, t1, t2);
        fv.re = tmp.re + c[static_cast<std::size_t>(k)];
        fv.im = tmp.im;
      }
      dv.re = dc.back();
      dv.im = 0;
      for (int k = n - 2; k >= 0; --k) {
        mc_mul(dv, z[static_cast<std::size_t>(i)], tmp, t1, t2);
        dv.re = tmp.re + dc[static_cast<std::size_t>(k)];
        dv.im = tmp.im;
      }
      if (sgn(fv.re) == 0 && sgn(fv.im) == 0) continue;
      if (sgn(dv.re) == 0 && sgn(dv.im) == 0) {
        z[static_cast<std::size_t>(i)].re += mpf_class(1e-3, prec);
        done = false;
        continue;
      }
      mc_div(fv, dv, ratio, prec);
      sum.re = 0;
      sum.im = 0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        diff.re = z[static_cast<std::size_t>(i)].re - z[static_cast<std::size_t>(j)].re;
        diff.im = z[static_cast<std::size_t>(i)].im - z[static_cast<std::size_t>(j)].im;
        if (sgn(diff.re) == 0 && sgn(diff.im) == 0) continue;
        mc_div(one, diff, inv, prec);
        sum.re += inv.re;
        sum.im += inv.im;
      }
      mc_mul(ratio, sum, tmp, t1, t2);
      tmp.re = one.re - tmp.re;
      tmp.im = -tmp.im;
      if (sgn(tmp.re) == 0 && sgn(tmp.im) == 0) continue;
      mc_div(ratio, tmp, w, prec);
      z[static_cast<std::size_t>(i)].re -= w.re;
      z[static_cast<std::size_t>(i)].im -= w.im;
      mpf_class mag(abs(w.re) + abs(w.im), prec);
      mpf_class zm(abs(z[static_cast<std::size_t>(i)].re) + abs(z[static_cast<std::size_t>(i)].im) + 1, prec);
      if (mag > tol * zm) done = false;
    }
    if (done) break;
  }
  return z;
}

Rat lower_abs(const CRat& z) { return abs_lower(z, 64); }
Rat upper_abs(const CRat& z) { return abs_upper(z, 64); }

struct Certified {
  bool ok = false;
  std::vector<IsolatedRoot> roots;
};

Certified certify(const Poly& f, const std::vector<CRat>& z) {
  const std::size_t n = z.size();
  Certified out;
  std::vector<Rat> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    CRat prod(f.leading());
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      CRat d = z[i] - z[j];
      if (d.is_zero()) return out;
      prod = prod * d;
    }
    CRat fv = f.eval(z[i]);
    Rat w2 = fv.norm2() / prod.norm2() * static_cast<long>(n * n);
    r[i] = sqrt_upper(w2, 64);
    if (sgn(r[i]) == 0) {
      // z_i is an exact root; any positive radius below the gaps works.
      r[i] = Rat(1, 1);
      Rat gap;
      bool first = true;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        Rat g = lower_abs(z[i] - z[j]);
        if (first || g < gap) gap = g;
        first = false;
      }
      if (!first) r[i] = gap / 1024;
    }
  }
  Rat three_halves(3, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      Rat s = three_halves * r[i] + r[j];
      if ((z[i] - z[j]).norm2() <= s * s) return out;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    IsolatedRoot root;
    root.center = z[i];
    root.radius = r[i];
    root.isolation = three_halves * r[i];
    root.real = sgn(z[i].im) == 0;
    out.roots.push_back(root);
  }
  out.ok = true;
  return out;
}

Rat pow2(long e) {
  Rat q(1);
  if (e >= 0)
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(e));
  else
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(-e));
  return q;
}

std::vector<CRat> taylor_coefficients(const Poly& g, const CRat& w) {
  std::vector<CRat> a;
  for (const auto& c : g.coeffs()) a.emplace_back(c);
  const std::size_t n = a.size();
  for (std::size_t k = 0; k + 1 < n; ++k)
    for (std::size_t i = n - 1; i > k; --i) a[i - 1] = a[i - 1] + a[i] * w;
  return a;
}

}  // namespace

bool ComplexBox::contains(const CRat& z) const {
  return re_lo <= z.re && z.re <= re_hi && im_lo <= z.im && z.im <= im_hi;
}

bool ComplexBox::contains(std::complex<double> z, double slack) const {
  return re_lo.get_d() - slack <= z.real() && z.real() <= re_hi.get_d() + slack && im_lo.get_d() - slack <= z.imag() &&
         z.imag() <= im_hi.get_d() + slack;
}

bool ComplexBox::overlaps(const ComplexBox& o) const {
  return !(re_hi < o.re_lo || o.re_hi < re_lo || im_hi < o.im_lo || o.im_hi < im_lo);
}

Rat ComplexBox::width() const {
  Rat a = re_hi - re_lo, b = im_hi - im_lo;
  return a < b ? b : a;
}

std::complex<double> ComplexBox::midpoint() const {
  return {Rat((re_lo + re_hi) / 2).get_d(), Rat((im_lo + im_hi) / 2).get_d()};
}

std::string ComplexBox::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << "[" << re_lo.get_d() << ", " << re_hi.get_d() << "] + i[" << im_lo.get_d() << ", " << im_hi.get_d() << "]";
  return os.str();
}

ComplexBox IsolatedRoot::box() const {
  if (real) return {center.re - radius, center.re + radius, Rat(0), Rat(0)};
  return {center.re - radius, center.re + radius, center.im - radius, center.im + radius};
}

ComplexBox Enclosure::box() const {
  return {center.re - radius, center.re + radius, center.im - radius, center.im + radius};
}

std::vector<std::complex<double>> approximate_roots(const Poly& f, unsigned bits) {
  std::vector<std::complex<double>> out;
  if (f.degree() < 1) return out;
  for (const auto& m : aberth(f, bits)) out.emplace_back(m.re.get_d(), m.im.get_d());
  return out;
}

std::vector<IsolatedRoot> isolate_roots(const Poly& f, unsigned bits) {
  if (f.degree() < 1) return {};
  if (!is_squarefree(f)) throw std::domain_error("isolate_roots: polynomial is not squarefree");
  if (f.degree() == 1) {
    IsolatedRoot r;
    r.center = CRat(-f.coeff(0) / f.coeff(1));
    r.radius = 0;
    r.isolation = 1;
    r.real = true;
    return {r};
  }
  Poly g = f.monic();
  for (unsigned prec = std::max(bits, 64U);; prec *= 2) {
    auto approx = aberth(g, prec);
    std::vector<CRat> z;
    Rat snap = pow2(-static_cast<long>(prec / 2));
    for (const auto& m : approx) {
      CRat c = round_dyadic(CRat(to_rat(m.re), to_rat(m.im)), prec);
      if (abs(c.im) < snap) c.im = 0;
      z.push_back(c);
    }
    // Pair complex conjugates so certified roots come out symmetric.
    std::sort(z.begin(), z.end(), [](const CRat& a, const CRat& b) {
      if (a.re != b.re) return a.re < b.re;
      return a.im < b.im;
    });
    auto cert = certify(g, z);
    if (cert.ok) return cert.roots;
    if (prec > (1U << 14)) throw std::runtime_error("isolate_roots: certification did not converge");
  }
}

IsolatedRoot refine_root(const Poly& f, const IsolatedRoot& r, unsigned bits) {
  Rat target = pow2(-static_cast<long>(bits));
  if (r.radius <= target) return r;
  const long n = f.degree();
  Poly df = f.derivative();
  IsolatedRoot cur = r;
  unsigned round_bits = bits + 32;
  for (int step = 0; step < 400; ++step) {
    CRat fv = f.eval(cur.center), dv = df.eval(cur.center);
    if (dv.is_zero()) throw std::runtime_error("refine_root: derivative vanished");
    CRat w = round_dyadic(cur.center - fv / dv, round_bits);
    if (cur.real) w.im = 0;
    CRat fw = f.eval(w), dw = df.eval(w);
    if (dw.is_zero()) throw std::runtime_error("refine_root: derivative vanished");
    Rat rho = fw.is_zero() ? Rat(0) : sqrt_upper(fw.norm2() / dw.norm2() * (n * n), 64);
    Rat shift = upper_abs(w - r.center);
    if (shift + rho <= r.isolation && rho < cur.radius) {
      cur.center = w;
      cur.radius = rho;
      cur.isolation = r.isolation - shift;
      if (cur.radius <= target) return cur;
    } else {
      round_bits += 32;
    }
  }
  throw std::runtime_error("refine_root: no convergence");
}

Enclosure enclose_value(const Poly& g, const Poly& f, const IsolatedRoot& r, unsigned bits) {
  Poly h = g.degree() >= f.degree() ? g % f : g;
  Rat target = pow2(-static_cast<long>(bits));
  if (h.degree() <= 0) return {CRat(h.coeff(0)), Rat(0)};
  unsigned root_bits = bits + 16;
  for (int attempt = 0; attempt < 40; ++attempt, root_bits += 32) {
    IsolatedRoot rr = refine_root(f, r, root_bits);
    auto a = taylor_coefficients(h, rr.center);
    Rat bound, rho_k(1);
    for (std::size_t k = 1; k < a.size(); ++k) {
      rho_k *= rr.radius;
      if (!a[k].is_zero()) bound += upper_abs(a[k]) * rho_k;
    }
    if (bound <= target) return {a[0], bound};
  }
  throw std::runtime_error("enclose_value: no convergence");
}

int locate_root(const std::vector<IsolatedRoot>& roots, std::complex<double> z) {
  int found = -1;
  double best = 1e300;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    double d = std::abs(roots[i].approx() - z);
    if (d < best) {
      best = d;
      found = static_cast<int>(i);
    }
  }
  if (found < 0) return -1;
  // Unambiguous if the nearest is clearly closer than the runner-up.
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (static_cast<int>(i) == found) continue;
    double d = std::abs(roots[i].approx() - z);
    if (d < 4 * best + 1e-12) return -1;
  }
  return found;
}

}  // namespace cyclo
