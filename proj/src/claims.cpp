#include "cyclo/claims.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <chrono>
#include <complex>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cyclo/branch.hpp"
#include "cyclo/center.hpp"
#include "cyclo/fusion.hpp"
#include "cyclo/galois.hpp"
#include "cyclo/nf_factor.hpp"
#include "cyclo/tl.hpp"

namespace cyclo {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kPass: return "pass";
    case ClaimStatus::kFail: return "fail";
    case ClaimStatus::kInconclusive: return "inconclusive";
    case ClaimStatus::kExternalData: return "external-data";
  }
  return "fail";
}

bool glob_match(const std::string& pattern, const std::string& text) {
  return fnmatch(pattern.c_str(), text.c_str(), 0) == 0;
}

namespace {

ClaimOutcome verdict(bool ok, std::string witness) {
  return {ok ? ClaimStatus::kPass : ClaimStatus::kFail, std::move(witness)};
}

std::string complex_str(std::complex<double> z, int digits) {
  double re = std::abs(z.real()) < 1e-20 ? 0.0 : z.real();
  double im = std::abs(z.imag()) < 1e-20 ? 0.0 : z.imag();
  char buf[96];
  if (im == 0.0)
    std::snprintf(buf, sizeof buf, "%.*g", digits, re);
  else if (re == 0.0)
    std::snprintf(buf, sizeof buf, "%.*gi", digits, im);
  else
    std::snprintf(buf, sizeof buf, "%.*g%+.*gi", digits, re, digits, im);
  return buf;
}

std::string approx_str(const NFElem& x) { return complex_str(x.approx(), 10); }

std::string yes(bool b) { return b ? "yes" : "NO"; }

/// Box lies inside re +- tol, im +- tol.
bool box_within(const ComplexBox& b, const Rat& re, const Rat& im, const Rat& tol) {
  return b.re_lo >= re - tol && b.re_hi <= re + tol && b.im_lo >= im - tol && b.im_hi <= im + tol;
}

// Minimal polynomials obtained by eliminating the radicals of the closed forms by hand.
Poly index_oracle(int level) {
  // D0 = (5 + sqrt13)/2.  D1: y = 3 D1 - 8 = 2 Re c with c^3 = 13/2 (-5 - 3 i sqrt3), |c|^2 = 13,
  // so y^3 - 39 y + 65 = 0.
  return level == 0 ? Poly{3, -5, 1} : Poly{-5, 17, -8, 1};
}

Poly lambda_oracle(int level) {
  // lambda0^2 = (1 - sqrt13)/6.  lambda1^2 = -1/5 + 2 Re c, c^3 = (117 - 65 i sqrt3)/2250,
  // |c|^2 = 13/75, so u = lambda1^2 + 1/5 satisfies u^3 - 13/25 u - 13/125 = 0.
  if (level == 0) return Poly{Rat(-1, 3), 0, Rat(-1, 3), 0, 1};
  return Poly{Rat(-1, 5), 0, Rat(-2, 5), 0, Rat(3, 5), 0, 1};
}

NFElem index_from_zeta13(int level) {
  FieldPtr k = cyclotomic_field(13);
  NFElem z = k->gen();
  if (level == 0) {
    NFElem d = k->from_rat(2);
    for (int e : {2, 5, 6, 7, 8, 11}) d = d - z.pow(e);
    return d;
  }
  NFElem d = k->from_rat(3);
  for (int e : {2, 3, 10, 11}) d = d + z.pow(e);
  return d;
}

std::string L(int level, const std::string& rest) { return "L" + std::to_string(level) + "." + rest; }

const PlanarParams& params(int level, Convention c) { return PlanarParams::get(level, c); }

// Claims for one level.
void add_level(std::vector<ClaimDefinition>& reg, int level) {
  const std::string lv = std::to_string(level);
  const std::string dval = level == 0 ? "4.30278" : "4.3772";
  const Rat dnum = level == 0 ? Rat(430278, 100000) : Rat(43772, 10000);
  const Rat lnum = level == 0 ? Rat(658983, 1000000) : Rat(648585, 1000000);

  reg.push_back({L(level, "constants.index"), "intro/constants", "index D embeds near " + dval + " with the expected minimal polynomial",
                 {}, [=](const RunOptions& o) {
                   const ScalarPack& s = ScalarPack::get(level);
                   ComplexBox b = embed(s.d_index, o.precision);
                   bool near = box_within(b, dnum, 0, Rat(1, 10000));
                   Poly mp = minimal_polynomial(s.d_index);
                   bool poly_ok = mp == index_oracle(level);
                   return verdict(near && poly_ok, "D in " + b.to_string() + "; minpoly " + mp.pretty() +
                                                       "; within 1e-4: " + yes(near) + "; matches oracle: " + yes(poly_ok));
                 }});

  reg.push_back({L(level, "constants.lambda"), "intro/constants", "lambda embeds near the stated imaginary value with the expected minimal polynomial",
                 {L(level, "constants.index")}, [=](const RunOptions& o) {
                   const ScalarPack& s = ScalarPack::get(level);
                   ComplexBox b = embed(s.lambda, o.precision);
                   bool near = box_within(b, 0, lnum, Rat(1, 100000));
                   Poly mp = minimal_polynomial(s.lambda);
                   bool poly_ok = mp == lambda_oracle(level);
                   bool sq = s.lambda * s.lambda == s.index_to_lambda.apply(s.lambda_sq_index);
                   return verdict(near && poly_ok && sq, "lambda in " + b.to_string() + "; minpoly " + mp.pretty() +
                                                             "; within 1e-5: " + yes(near) + "; matches oracle: " + yes(poly_ok) +
                                                             "; lambda^2 = -[n+2]/([2]^2[n]): " + yes(sq));
                 }});

  reg.push_back({L(level, "cyclotomic.index"), "intro/constants", "the zeta13 expression for D reduces to D",
                 {L(level, "constants.index")}, [=](const RunOptions&) {
                   NFElem x = index_from_zeta13(level);
                   const ScalarPack& s = ScalarPack::get(level);
                   Poly mp = minimal_polynomial(x);
                   bool same = same_algebraic_number(x, s.d_index);
                   auto ex = express_in_subfield(x, s.params->index_field);
                   bool exact = ex.present() && ex.value() == s.d_index;
                   return verdict(mp == index_oracle(level) && same && exact,
                                  "minpoly " + mp.pretty() + "; intervals overlap: " + yes(same) +
                                      "; equals D under Q(D) -> Q(zeta13): " + yes(exact));
                 }});

  reg.push_back({L(level, "galois.noncyclotomic"), "intro/constants", "lambda is not cyclotomic: an unequal Frobenius degree pattern",
                 {L(level, "constants.lambda")}, [=](const RunOptions& o) {
                   Poly f = lambda_oracle(level);
                   auto cert = noncyclotomic_witness(f, o.budget);
                   if (!cert)
                     return ClaimOutcome{ClaimStatus::kInconclusive, "no unequal pattern below " + std::to_string(o.budget)};
                   bool re = cert->recheck(f);
                   return verdict(re, "p = " + std::to_string(cert->prime) + ", pattern " + pattern_string(cert->pattern) +
                                          "; rechecked in isolation: " + yes(re));
                 }});

  const std::size_t order = level == 0 ? 8 : 24;
  const std::string group = level == 0 ? "D4" : "A4xC2";
  reg.push_back({L(level, "galois.order" + std::to_string(order)), "intro/constants",
                 "Galois closure of Q(lambda) has degree " + std::to_string(order) + ", group " + group,
                 {L(level, "constants.lambda")}, [=](const RunOptions& o) {
                   GaloisReport g = identify_group(lambda_oracle(level), o.budget);
                   std::ostringstream w;
                   w << "splitting degree " << g.splitting_degree << "; group " << g.group_name << "; abelian " << (g.abelian ? "yes" : "no")
                     << "; patterns";
                   for (const auto& [p, st] : g.cycle_types) w << " " << pattern_string(p) << "x" << st.count;
                   w << "; all realizable: " << yes(g.patterns_realizable);
                   return verdict(g.splitting_degree == order && g.group_name == group && !g.abelian && g.patterns_realizable, w.str());
                 }});

  reg.push_back({L(level, "galois.conjugates"), "galois-conjugates", "orbit of Q(lambda) under the Galois group",
                 {L(level, "constants.lambda")}, [=](const RunOptions&) {
                   Poly f = lambda_oracle(level);
                   auto classes = conjugate_orbit(f);
                   auto roots = isolate_roots(f);
                   int home = locate_root(roots, ScalarPack::get(level).lambda.approx());
                   std::ostringstream w;
                   bool sizes_two = true, home_found = false, reals_apart = true;
                   w << classes.size() << " classes:";
                   for (const auto& c : classes) {
                     sizes_two = sizes_two && c.roots.size() == 2;
                     bool has_real = false, has_complex = false;
                     w << " {";
                     for (std::size_t i = 0; i < c.roots.size(); ++i) {
                       const auto& r = roots[c.roots[i]];
                       (r.real ? has_real : has_complex) = true;
                       if (static_cast<int>(c.roots[i]) == home) home_found = true;
                       w << (i ? "," : "") << complex_str(r.approx(), 6);
                     }
                     w << "}";
                     if (has_real && has_complex) reals_apart = false;
                   }
                   bool count_ok = classes.size() == (level == 0 ? 2u : 3u);
                   bool ok = count_ok && sizes_two && home_found && reals_apart;
                   if (level == 0) {
                     // The variant radicand (-1+sqrt13)/2 defines x^4 - x^2 - 3, which has no root in Q(lambda0).
                     bool variant_absent = roots_in_field(Poly{-3, 0, -1, 0, 1}, ScalarPack::get(0).lambda_field).empty();
                     w << "; x^4-x^2-3 has no root in Q(lambda0): " << yes(variant_absent);
                   }
                   w << "; one nontrivial automorphism per field: " << yes(sizes_two);
                   return verdict(ok, w.str());
                 }});

  reg.push_back({L(level, "qint.identities"), "twisted-moments/closed-form", "[2][m] = [m+1]+[m-1], [2]^2 = [3]+1, ([n+2]-[n])[n+1] = [2n+2]",
                 {L(level, "constants.index")}, [=](const RunOptions&) {
                   auto r = verify_qint_identities(params(level, Convention::kLopsided));
                   std::ostringstream w;
                   w << "recurrence failures " << r.recurrence_failures.size() << "; [2]^2=[3]+1: " << yes(r.square_identity)
                     << "; product identity: " << yes(r.product_identity);
                   return verdict(r.ok, w.str());
                 }});

  reg.push_back({L(level, "qint.parity"), "planar-algebras/quantum-integers", "odd [m] and even ratios lie in Q(D)",
                 {L(level, "constants.index")}, [=](const RunOptions&) {
                   const ScalarPack& s = ScalarPack::get(level);
                   const PlanarParams& pp = *s.params;
                   std::vector<int> missing;
                   for (int m = 1; m <= 2 * s.n + 3; m += 2)
                     if (std::find(s.odd_members.begin(), s.odd_members.end(), m) == s.odd_members.end()) missing.push_back(m);
                   bool ratios = std::all_of(s.even_ratios.begin(), s.even_ratios.end(), [](const auto& kv) { return kv.second; });
                   bool positive = true;
                   for (int m = 1; m <= 2 * s.n + 3; ++m) positive = positive && sgn(embed(quantum_int(pp, m), 64).re_lo) > 0;
                   bool even_out = !in_index_field(pp, quantum_int(pp, 2));
                   std::ostringstream w;
                   w << s.odd_members.size() << " odd [m] certified for m <= " << 2 * s.n + 3 << "; ratios";
                   for (const auto& [k, v] : s.even_ratios) w << " " << k << (v ? " in" : " OUT");
                   w << "; [2] outside Q(D): " << yes(even_out) << "; all [m] > 0: " << yes(positive);
                   return verdict(missing.empty() && ratios && positive && even_out, w.str());
                 }});

  reg.push_back({L(level, "tl.jw-idempotents"), "background/lopsided-normalization", "JW_k idempotent and killed by every e_i, k <= 6, all four conventions",
                 {L(level, "qint.identities")}, [=](const RunOptions&) {
                   int checked = 0, bad = 0;
                   std::string first_bad;
                   for (auto conv : {Convention::kLopsided, Convention::kSpherical})
                     for (auto base : {Shading::kPlus, Shading::kMinus}) {
                       const PlanarParams& pp = params(level, conv);
                       for (int k = 1; k <= 6; ++k) {
                         TLMorphism jw = jones_wenzl(pp, k, base).jw;
                         bool ok = compose(jw, jw) == jw;
                         for (int i = 1; i < k; ++i) {
                           TLMorphism e = TLMorphism::generator(pp, k, i, base);
                           ok = ok && compose(e, jw).is_zero() && compose(jw, e).is_zero();
                         }
                         ++checked;
                         if (!ok) {
                           ++bad;
                           if (first_bad.empty()) first_bad = to_string(conv) + " " + to_string(base) + " k=" + std::to_string(k);
                         }
                       }
                     }
                   return verdict(bad == 0, std::to_string(checked) + " idempotents checked; failures " + std::to_string(bad) +
                                                (first_bad.empty() ? "" : " (first " + first_bad + ")"));
                 }});

  reg.push_back({L(level, "tl.jw2-formulas"), "background/lopsided-normalization", "JW2 = id - c e1 with c = 1, 1/[2]^2 (lopsided) and 1/[2] (spherical)",
                 {L(level, "qint.identities")}, [=](const RunOptions&) {
                   std::ostringstream w;
                   bool ok = true;
                   TLDiagram cupcap = TLDiagram::generator(2, 1);
                   for (auto conv : {Convention::kLopsided, Convention::kSpherical})
                     for (auto base : {Shading::kPlus, Shading::kMinus}) {
                       const PlanarParams& pp = params(level, conv);
                       TLMorphism jw = jones_wenzl(pp, 2, base).jw;
                       NFElem two = quantum_int(pp, 2);
                       NFElem want = conv == Convention::kSpherical ? two.inverse()
                                     : base == Shading::kPlus       ? pp.field->one()
                                                                    : (two * two).inverse();
                       NFElem c = -jw.coefficient(cupcap);
                       bool good = c == want && jw.coefficient(TLDiagram::identity(2)).is_one() && jw.terms().size() == 2;
                       ok = ok && good;
                       w << to_string(conv) << " " << to_string(base) << ": c = " << c.to_string() << (good ? "" : " MISMATCH") << "; ";
                     }
                   return verdict(ok, w.str());
                 }});

  reg.push_back({L(level, "tl.trace-table"), "background/lopsided-normalization", "full left and right traces of JW_k match the trace table, k <= 6",
                 {L(level, "tl.jw-idempotents")}, [=](const RunOptions&) {
                   int checked = 0, bad = 0;
                   for (auto conv : {Convention::kLopsided, Convention::kSpherical})
                     for (auto base : {Shading::kPlus, Shading::kMinus}) {
                       const PlanarParams& pp = params(level, conv);
                       for (int k = 1; k <= 6; ++k) {
                         TLMorphism jw = jones_wenzl(pp, k, base).jw;
                         for (auto side : {Side::kLeft, Side::kRight}) {
                           ++checked;
                           if (full_trace(jw, side) != jw_trace(pp, k, base, side)) ++bad;
                         }
                       }
                     }
                   // The table itself: lopsided odd k is [k+1]/[2] for + and [2][k+1] for -.
                   const PlanarParams& lp = params(level, Convention::kLopsided);
                   bool table = jw_trace(lp, 1, Shading::kPlus, Side::kRight).is_one() &&
                                jw_trace(lp, 1, Shading::kMinus, Side::kRight) == lp.d &&
                                jw_trace(lp, 2, Shading::kPlus, Side::kRight) == quantum_int(lp, 3);
                   return verdict(bad == 0 && table, std::to_string(checked) + " traces compared; mismatches " + std::to_string(bad) +
                                                         "; tr(JW1) = 1 (+), D (-): " + yes(table));
                 }});

  reg.push_back({L(level, "tl.left-right"), "background/lopsided-normalization", "left and right traces of odd-strand morphisms differ by d_-+/d_+-",
                 {L(level, "tl.jw-idempotents")}, [=](const RunOptions&) {
                   const PlanarParams& pp = params(level, Convention::kLopsided);
                   int checked = 0, bad = 0;
                   for (auto base : {Shading::kPlus, Shading::kMinus}) {
                     const NFElem& own = base == Shading::kPlus ? pp.d_plus : pp.d_minus;
                     const NFElem& opp = base == Shading::kPlus ? pp.d_minus : pp.d_plus;
                     NFElem ratio = opp / own;
                     for (int k : {1, 3, 5}) {
                       std::vector<TLMorphism> samples{jones_wenzl(pp, k, base).jw};
                       for (const auto& d : enumerate_diagrams(k, k)) samples.push_back(TLMorphism::from_diagram(pp, d, base));
                       for (const auto& f : samples) {
                         ++checked;
                         // tr_R = (d_-+/d_+-) tr_L
                         if (full_trace(f, Side::kRight) != ratio * full_trace(f, Side::kLeft)) ++bad;
                       }
                     }
                   }
                   return verdict(bad == 0, std::to_string(checked) + " odd-strand morphisms; mismatches " + std::to_string(bad));
                 }});

  reg.push_back({L(level, "tl.rescaling"), "background/lopsided-normalization", "lopsided structure constants are spherical ones times x^(critical points), x = D^(-1/2)",
                 {L(level, "tl.jw-idempotents")}, [=](const RunOptions&) {
                   const PlanarParams& lp = params(level, Convention::kLopsided);
                   const PlanarParams& sp = params(level, Convention::kSpherical);
                   NFElem x = lp.sqrt_d.inverse();
                   auto xpow = [&](int e) { return e >= 0 ? x.pow(e) : lp.sqrt_d.pow(-e); };
                   int checked = 0, bad = 0;
                   for (auto base : {Shading::kPlus, Shading::kMinus})
                     for (int a = 0; a <= 4; ++a)
                       for (int b = 0; b <= 4; ++b) {
                         if ((a + b) % 2) continue;
                         for (int c = 0; c <= 4; ++c) {
                           if ((b + c) % 2) continue;
                           for (const auto& lower : enumerate_diagrams(a, b))
                             for (const auto& upper : enumerate_diagrams(b, c)) {
                               auto l = compose(TLMorphism::from_diagram(lp, upper, base), TLMorphism::from_diagram(lp, lower, base));
                               auto s = compose(TLMorphism::from_diagram(sp, upper, base), TLMorphism::from_diagram(sp, lower, base));
                               const auto& [d3, cl] = *l.terms().begin();
                               int e = upper.critical_exponent(base) + lower.critical_exponent(base) - d3.critical_exponent(base);
                               ++checked;
                               if (cl != s.coefficient(d3) * xpow(e)) ++bad;
                             }
                         }
                       }
                   int tbad = 0;
                   for (auto base : {Shading::kPlus, Shading::kMinus})
                     for (int k = 0; k <= 6; ++k)
                       for (auto side : {Side::kLeft, Side::kRight})
                         if (jw_trace(lp, k, base, side) != jw_trace(sp, k, base, side) * xpow(trace_rescaling_exponent(k, base, side))) ++tbad;
                   return verdict(bad == 0 && tbad == 0, std::to_string(checked) + " products of diagrams with <= 4 boundary points per side; mismatches " +
                                                             std::to_string(bad) + "; trace-table rescaling mismatches " + std::to_string(tbad));
                 }});

  reg.push_back({L(level, "branch.principal-idempotents"), "planar-algebras/branch-idempotents", "P and Q idempotent, orthogonal, complete, tr P = tr Q = [n+1]/2",
                 {L(level, "constants.lambda")}, [=](const RunOptions&) {
                   auto p = BranchPresentation::make(level, BranchSide::kPrincipal);
                   auto r = branch_idempotents(p);
                   bool equal = r.trace_first == r.trace_second && r.trace_first == p.jw_trace_val * Rat(1, 2);
                   return verdict(r.ok() && equal, "P^2=P: " + yes(r.first_idempotent) + "; Q^2=Q: " + yes(r.second_idempotent) +
                                                       "; PQ=0: " + yes(r.orthogonal) + "; P+Q=JW: " + yes(r.complete) +
                                                       "; tr P = tr Q = " + approx_str(r.trace_first) + ": " + yes(equal));
                 }});

  reg.push_back({L(level, "branch.dual-idempotents"), "planar-algebras/branch-idempotents", "A and B idempotent, orthogonal, complete, tr B / tr A = r",
                 {L(level, "constants.index")}, [=](const RunOptions&) {
                   auto p = BranchPresentation::make(level, BranchSide::kDual);
                   auto r = branch_idempotents(p);
                   bool ratio = r.trace_second / r.trace_first == p.pack->rcheck_index;
                   return verdict(r.ok() && ratio, "A^2=A: " + yes(r.first_idempotent) + "; B^2=B: " + yes(r.second_idempotent) +
                                                       "; AB=0: " + yes(r.orthogonal) + "; A+B=JW: " + yes(r.complete) + "; tr A = " +
                                                       approx_str(r.trace_first) + ", tr B = " + approx_str(r.trace_second) +
                                                       "; ratio = r = " + r.trace_second.field()->name() + "-element " +
                                                       (r.trace_second / r.trace_first).to_string() + ": " + yes(ratio));
                 }});

  reg.push_back({L(level, "branch.swap-symmetry"), "planar-algebras/branch-idempotents", "rescaling the generator by -1 interchanges P and Q",
                 {L(level, "branch.principal-idempotents")}, [=](const RunOptions&) {
                   auto p = BranchPresentation::make(level, BranchSide::kPrincipal);
                   auto flipped = p.rescaled(p.field->from_rat(-1));
                   auto r = branch_idempotents(p);
                   auto f = branch_idempotents(flipped);
                   // Coordinates in the flipped presentation refer to -G.
                   BranchElem p_back{f.first.jw, -f.first.g}, q_back{f.second.jw, -f.second.g};
                   bool ok = f.ok() && p_back == r.second && q_back == r.first;
                   return verdict(ok, "P(-S) = Q(S): " + yes(p_back == r.second) + "; Q(-S) = P(S): " + yes(q_back == r.first));
                 }});

  reg.push_back({L(level, "branch.tower"), "planar-algebras/tower-idempotents", "P', Q', P'', Q'' idempotent with the stated coefficients; ptr(P), ptr(P') as stated",
                 {L(level, "branch.principal-idempotents")}, [=](const RunOptions&) {
                   std::ostringstream w;
                   bool ok = true;
                   for (bool q : {false, true}) {
                     auto t = tower_idempotents(level, q);
                     ok = ok && t.ok();
                     const std::string a = t.name;
                     w << a << "': idempotent " << yes(t.first.idempotent) << ", coefficient = 1/kappa(" << a << ") "
                       << yes(t.first.coefficient_inverts_ptr) << "; " << a << "'': idempotent " << yes(t.second.idempotent)
                       << ", coefficient = 1/kappa(" << a << "') " << yes(t.second.coefficient_inverts_ptr) << "; ptr(" << a
                       << ") = [2][n+1]/(2[n]) JW: " << yes(t.ptr_base_matches) << "; ptr(" << a
                       << "') = ([n+2]-[n])/([2][n+1]) " << a << ": " << yes(t.ptr_first_matches) << ". ";
                   }
                   return verdict(ok, w.str());
                 }});

  reg.push_back({L(level, "M3.twisted-moments"), "twisted-moments/closed-form", "tr(G^k) = 0, r[n+1], r(r-1)[n+1] for k = 1, 2, 3; recursion to k = 8",
                 {L(level, "branch.dual-idempotents")}, [=](const RunOptions&) {
                   auto p = BranchPresentation::make(level, BranchSide::kDual);
                   const NFElem& r = p.pack->rcheck_index;
                   const NFElem& t = p.jw_trace_val;
                   bool k1 = twisted_moment(p, 1).is_zero();
                   bool k2 = twisted_moment(p, 2) == r * t;
                   bool k3 = twisted_moment(p, 3) == r * (r - Rat(1)) * t;
                   // Powers of G computed by multiplication in the algebra, then traced.
                   bool rec = true;
                   BranchElem g = branch_gen(p), pw = g;
                   for (int k = 1; k <= 8; ++k) {
                     if (branch_trace(p, pw) != twisted_moment(p, k)) rec = false;
                     pw = branch_mul(p, pw, g);
                   }
                   return verdict(k1 && k2 && k3 && rec, "tr G = 0: " + yes(k1) + "; tr G^2 = r[n+1]: " + yes(k2) +
                                                             "; tr G^3 = r(r-1)[n+1] = " + twisted_moment(p, 3).to_string() + ": " +
                                                             yes(k3) + "; powers agree to k=8: " + yes(rec));
                 }});

  reg.push_back({L(level, "M3.closed-form"), "twisted-moments/closed-form", "M3 = lambda [2n+2]/[n+2] [2]^2 / (([5]+1)[3]^(2l+1))",
                 {L(level, "M3.twisted-moments"), L(level, "qint.identities")}, [=](const RunOptions&) {
                   auto r = normalized_m3(level);
                   return verdict(r.matches_closed_form, "M3 = " + approx_str(r.m3) + " = " + r.m3.to_string() +
                                                             "; closed form equal: " + yes(r.matches_closed_form));
                 }});

  reg.push_back({L(level, "M3.field-membership"), "twisted-moments/closed-form", "M3 / lambda lies in Q(D) while M3 does not",
                 {L(level, "M3.closed-form")}, [=](const RunOptions&) {
                   auto r = normalized_m3(level);
                   std::string ratio = r.ratio_in_index_field ? r.ratio.to_string() : "-";
                   return verdict(r.ratio_in_index_field && !r.m3_in_index_field,
                                  "M3/lambda = " + ratio + " in Q(D): " + yes(r.ratio_in_index_field) +
                                      "; M3 outside Q(D): " + yes(!r.m3_in_index_field));
                 }});

  for (bool dual : {false, true}) {
    const std::string which = dual ? "dual" : "principal";
    reg.push_back({L(level, "fusion." + which + "-norm"), "intro/principal-graphs", "squared norm of the " + which + " graph is D",
                   {L(level, "constants.index")}, [=](const RunOptions&) {
                     BipartiteGraph g = dual ? dual_graph(level) : principal_graph(level);
                     GraphNorm gn = graph_norm(g);
                     bool same = same_algebraic_number(gn.norm_sq, ScalarPack::get(level).d_index);
                     auto ex = express_in_subfield(gn.norm_sq, ScalarPack::get(level).params->index_field);
                     bool exact = ex.present() && ex.value() == ScalarPack::get(level).d_index;
                     return verdict(g.is_bipartite() && same && exact,
                                    std::to_string(g.labels.size()) + " vertices; charpoly " + gn.char_poly.pretty() + "; norm factor " +
                                        gn.factor.pretty() + "; norm^2 = D: " + yes(same && exact));
                   }});
  }

  reg.push_back({L(level, "fusion.branch-ratios"), "planar-algebras/branch-idempotents", "dim B / dim A = r on the dual graph, dim P = dim Q on the principal graph",
                 {L(level, "fusion.principal-norm"), L(level, "fusion.dual-norm")}, [=](const RunOptions&) {
                   const ScalarPack& s = ScalarPack::get(level);
                   PFData pd = pf_dimensions(dual_graph(level));
                   PFData pp = pf_dimensions(principal_graph(level));
                   NFElem ratio = pd.dims.at("B") / pd.dims.at("A");
                   auto ex = express_in_subfield(ratio, s.params->index_field);
                   bool dual_ok = ex.present() && ex.value() == s.rcheck_index;
                   bool prin_ok = (pp.dims.at("P") / pp.dims.at("Q")).is_one();
                   bool pf = pd.eigen_equation && pp.eigen_equation && pd.all_positive && pp.all_positive;
                   return verdict(dual_ok && prin_ok && pf, "dim B/dim A = " + approx_str(ratio) + " = r: " + yes(dual_ok) +
                                                                "; dim P/dim Q = 1: " + yes(prin_ok) +
                                                                "; positive eigenvectors: " + yes(pf));
                 }});
}

void add_center(std::vector<ClaimDefinition>& reg) {
  reg.push_back({"H0.center.t-field", "center/T-matrix", "T-matrix entries generate Q(zeta39)", {}, [](const RunOptions&) {
                   auto r = t_field_check(CenterData::haagerup());
                   return verdict(r.pass, r.witness + "; subfield check: " + yes(r.generator_in_entry_field));
                 }});
  reg.push_back({"H0.center.averaging", "center/T-matrix", "eigenvalue averaging gives eigenspace indicators (39 x 12) and sums to 1",
                 {"H0.center.t-field"}, [](const RunOptions&) {
                   auto s = averaging_sweep(CenterData::haagerup());
                   return verdict(s.pass(), std::to_string(s.checks) + " exact checks, failures " + std::to_string(s.failures) +
                                                "; partition of unity: " + yes(s.partition_of_unity) +
                                                "; entries are 39th roots of unity: " + yes(s.roots_of_unity));
                 }});
  reg.push_back({"H0.center.separation", "center/T-matrix", "averaging isolates mu1..mu6, sigma1, sigma2; pi1, pi2, sigma0 share eigenvalue 1",
                 {"H0.center.averaging"}, [](const RunOptions&) {
                   auto r = eigenprojector_separation(CenterData::haagerup());
                   return verdict(r.pass, r.witness);
                 }});
  reg.push_back({"H0.center.quadratic-coefficient", "center/T-matrix", "(5+sqrt13)/18 lies in Q(zeta39)", {"H0.center.t-field"},
                 [](const RunOptions&) {
                   auto r = quadratic_coefficient_membership();
                   return verdict(r.pass, "Gauss sum g over zeta13 = zeta39^3: g^2 = 13: " + yes(r.gauss_square) + ", g > 0: " +
                                              yes(r.gauss_positive) + "; (5+g)/18 = " + approx_str(r.coefficient) +
                                              "; recovered in Q(sqrt13): " + yes(r.subfield_roundtrip));
                 }});
  reg.push_back({"H0.center.s-idempotent", "center/T-matrix", "(5+sqrt13)/18 (1+F) is a projection onto pi1", {"H0.center.quadratic-coefficient"},
                 [](const RunOptions&) {
                   return ClaimOutcome{ClaimStatus::kExternalData,
                                       "relies on S-matrix entries from the literature; only the coefficient's field membership is checked"};
                 }});
}

void add_global(std::vector<ClaimDefinition>& reg) {
  reg.push_back({"L1.galois.wreath", "intro/constants", "Z/2 wr Z/3 is isomorphic to Z/2 x A4", {}, [](const RunOptions&) {
                   auto w = wreath_isomorphism();
                   if (!w) return verdict(false, "no isomorphism found");
                   std::ostringstream os;
                   os << "generators";
                   for (std::size_t i = 0; i < w->source_generators.size(); ++i)
                     os << " " << cycle_string(w->source_generators[i]) << " -> " << cycle_string(w->target_images[i]);
                   os << "; " << w->checked_products << " products checked";
                   return verdict(true, os.str());
                 }});
}

}  // namespace

const std::vector<ClaimDefinition>& claim_registry() {
  static const std::vector<ClaimDefinition> reg = [] {
    std::vector<ClaimDefinition> r;
    add_level(r, 0);
    add_level(r, 1);
    add_global(r);
    add_center(r);
    return r;
  }();
  return reg;
}

std::vector<ClaimReport> run_claims(const std::string& filter, const RunOptions& options) {
  const auto& reg = claim_registry();
  std::vector<const ClaimDefinition*> selected;
  for (const auto& c : reg)
    if (filter.empty() || glob_match(filter, c.id)) selected.push_back(&c);
  bool wildcard = filter.find_first_of("*?[") != std::string::npos;
  if (selected.empty() && !filter.empty() && !wildcard) throw std::invalid_argument("unknown claim id: " + filter);

  // The registry is in dependency order; check it so a reordering cannot slip through.
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < reg.size(); ++i) pos[reg[i].id] = i;
  for (const auto* c : selected)
    for (const auto& d : c->deps) {
      auto it = pos.find(d);
      if (it == pos.end() || it->second >= pos[c->id]) throw std::logic_error("claim registry out of dependency order at " + c->id);
    }

  std::vector<ClaimReport> out;
  for (const auto* c : selected) {
    auto t0 = std::chrono::steady_clock::now();
    ClaimOutcome o;
    try {
      o = c->run(options);
    } catch (const std::exception& e) {
      o = {ClaimStatus::kFail, std::string("error: ") + e.what()};
    }
    auto t1 = std::chrono::steady_clock::now();
    out.push_back({c->id, c->paper_location, o.status, o.witness,
                   static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count())});
  }
  std::sort(out.begin(), out.end(), [](const ClaimReport& a, const ClaimReport& b) { return a.claim_id < b.claim_id; });
  return out;
}

}  // namespace cyclo
