#include "aqecc/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "aqecc/combinators.hpp"
#include "aqecc/families.hpp"
#include "aqecc/symplectic.hpp"
#include "aqecc/tables.hpp"

namespace aqecc {

void VerifyResult::check(bool pass, const std::string& what) {
  ++checks;
  if (!pass) {
    ++failures;
    messages.push_back(what);
  }
}

LinearCode random_code(std::mt19937_64& rng, const FieldPtr& field,
                       std::size_t n, std::size_t max_k) {
  std::uniform_int_distribution<std::size_t> kd(1, max_k);
  std::uniform_int_distribution<GfElem> ed(0, static_cast<GfElem>(field->q() - 1));
  std::size_t rows = kd(rng);
  std::vector<std::vector<GfElem>> g(rows, std::vector<GfElem>(n));
  for (auto& row : g)
    for (auto& e : row) e = ed(rng);
  return LinearCode(field, n, g);
}

CssPair random_css_pair(std::mt19937_64& rng, const FieldPtr& field,
                        std::size_t n, std::size_t max_k1) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    LinearCode c1 = random_code(rng, field, n, max_k1);
    if (c1.k() < 1) continue;
    // a random subcode: random messages re-encoded through C1
    std::uniform_int_distribution<std::size_t> rd(0, c1.k() - 1);
    std::uniform_int_distribution<GfElem> ed(0, static_cast<GfElem>(field->q() - 1));
    std::size_t rows = rd(rng);
    std::vector<std::vector<GfElem>> g;
    for (std::size_t i = 0; i < rows; ++i) {
      std::vector<GfElem> msg(c1.k());
      for (auto& e : msg) e = ed(rng);
      g.push_back(c1.encode(msg));
    }
    LinearCode c2 = g.empty() ? LinearCode::zero(field, n)
                              : LinearCode(field, n, g);
    if (c2.k() < c1.k()) return CssPair(c1, c2);
  }
  throw std::logic_error("failed to sample a strict CSS pair");
}

FieldBasis random_basis(std::mt19937_64& rng, const TowerPtr& tower) {
  std::uniform_int_distribution<GfElem> ed(
      1, static_cast<GfElem>(tower->top()->q() - 1));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<GfElem> elems(tower->degree());
    for (auto& e : elems) e = ed(rng);
    try {
      return FieldBasis(tower, elems);
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::logic_error("failed to sample a basis");
}

namespace {

std::string fmt_code(const LinearCode& c) {
  std::ostringstream os;
  os << "[" << c.n() << "," << c.k() << "]_" << c.field()->q();
  return os.str();
}

// --- field-axioms -----------------------------------------------------------

VerifyResult suite_field_axioms(const VerifyOptions& opt) {
  VerifyResult r;
  r.suite = "field-axioms";
  std::mt19937_64 rng(opt.seed);
  for (std::uint64_t q = 2; q <= opt.max_q; ++q) {
    std::uint64_t v = q;
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d <= v; ++d)
      if (v % d == 0) {
        p = d;
        break;
      }
    std::uint32_t m = 0;
    while (v % p == 0) {
      v /= p;
      ++m;
    }
    if (v != 1) continue;
    auto f = FiniteField::make(p, m, opt.max_q);
    bool distributive = true, inverses = true, frobenius = true;
    for (GfElem a = 0; a < q && distributive; ++a)
      for (GfElem b = 0; b < q && distributive; ++b)
        for (GfElem c = 0; c < q; ++c)
          if (f->mul(a, f->add(b, c)) !=
              f->add(f->mul(a, b), f->mul(a, c))) {
            distributive = false;
            break;
          }
    for (GfElem a = 1; a < q; ++a)
      if (f->mul(a, f->inv(a)) != 1) inverses = false;
    for (GfElem a = 0; a < q; ++a)
      for (GfElem b = 0; b < q; ++b)
        if (f->frobenius(f->add(a, b)) !=
            f->add(f->frobenius(a), f->frobenius(b)))
          frobenius = false;
    r.check(distributive, "distributivity in GF(" + std::to_string(q) + ")");
    r.check(inverses, "inverses in GF(" + std::to_string(q) + ")");
    r.check(frobenius, "Frobenius additivity in GF(" + std::to_string(q) + ")");
    r.check(f->element_order(f->generator()) == q - 1,
            "generator of GF(" + std::to_string(q) + ") is primitive");
    // modulus irreducibility by exhaustive root/factor checks at desk scale
    if (m >= 2 && m <= 4) {
      bool has_root = false;
      auto base = FiniteField::make(p, 1);
      for (GfElem x = 0; x < p; ++x) {
        GfElem acc = 0, xp = 1;
        for (std::size_t i = 0; i < f->modulus().size(); ++i) {
          acc = base->add(acc, base->mul(f->modulus()[i] % p, xp));
          xp = base->mul(xp, x);
        }
        if (acc == 0) has_root = true;
      }
      r.check(!has_root, "modulus of GF(" + std::to_string(q) + ") has no root");
    }
    if (m == 4) {
      // a rootless quartic is reducible only as a product of two quadratics
      bool has_quadratic_factor = false;
      auto base = FiniteField::make(p, 1);
      for (GfElem c1 = 0; c1 < p && !has_quadratic_factor; ++c1)
        for (GfElem c0 = 0; c0 < p; ++c0) {
          std::vector<GfElem> rem(f->modulus().begin(), f->modulus().end());
          for (std::size_t d = rem.size(); d-- > 3;) {
            GfElem lead = rem[d];
            if (lead == 0) continue;
            rem[d] = 0;
            rem[d - 1] = base->sub(rem[d - 1], base->mul(lead, c1));
            rem[d - 2] = base->sub(rem[d - 2], base->mul(lead, c0));
          }
          if (rem[0] == 0 && rem[1] == 0 && rem[2] == 0)
            has_quadratic_factor = true;
        }
      r.check(!has_quadratic_factor,
              "modulus of GF(" + std::to_string(q) + ") has no quadratic factor");
    }
  }
  // towers: traces, dual bases, Gram matrices
  struct TowerSpec {
    std::uint32_t p, s, m;
  };
  const TowerSpec towers[] = {{2, 1, 2}, {2, 1, 3}, {2, 2, 4}, {2, 1, 4},
                              {3, 1, 2}, {3, 1, 3}, {5, 1, 2}, {2, 2, 6}};
  for (const auto& ts : towers) {
    auto bottom = FiniteField::make(ts.p, ts.s);
    auto top = FiniteField::make(ts.p, ts.m);
    auto tower = FieldTower::make(bottom, top);
    const std::uint64_t qb = bottom->q(), qt = top->q();
    // linearity and surjectivity of the trace
    std::set<GfElem> image;
    bool linear = true;
    for (GfElem a = 0; a < qt; ++a) image.insert(tower->trace(a));
    for (int it = 0; it < 200; ++it) {
      GfElem lam = static_cast<GfElem>(rng() % qb);
      GfElem a = static_cast<GfElem>(rng() % qt);
      GfElem b = static_cast<GfElem>(rng() % qt);
      GfElem lhs = tower->trace(top->add(top->mul(tower->embed(lam), a), b));
      GfElem rhs = bottom->add(bottom->mul(lam, tower->trace(a)), tower->trace(b));
      if (lhs != rhs) linear = false;
    }
    r.check(image.size() == qb, "trace onto GF(q)");
    r.check(linear, "trace GF(q)-linearity");
    // dual basis identities on random bases
    for (int it = 0; it < 3; ++it) {
      FieldBasis basis = random_basis(rng, tower);
      FieldBasis db = basis.dual();
      bool delta_ok = true;
      for (std::uint32_t i = 0; i < basis.size(); ++i)
        for (std::uint32_t j = 0; j < basis.size(); ++j) {
          GfElem tr = tower->trace(
              top->mul(basis.elements()[i], db.elements()[j]));
          if (tr != (i == j ? 1u : 0u)) delta_ok = false;
        }
      r.check(delta_ok, "dual basis delta_ij identity");
      r.check(db.dual() == basis, "dual basis involution");
      // Gram of the dual equals the inverse of the Gram
      if (basis.size() <= 3) {
        auto g = basis.gram();
        auto gd = db.gram();
        const std::uint32_t d = basis.size();
        bool inv_ok = true;
        for (std::uint32_t i = 0; i < d; ++i)
          for (std::uint32_t j = 0; j < d; ++j) {
            GfElem acc = 0;
            for (std::uint32_t l = 0; l < d; ++l)
              acc = bottom->add(acc, bottom->mul(g[i][l], gd[l][j]));
            if (acc != (i == j ? 1u : 0u)) inv_ok = false;
          }
        r.check(inv_ok, "Gram(dual) = Gram^{-1}");
      }
      // tr(ab) = c(a)^T M c(b)
      auto g = basis.gram();
      bool gram_ok = true;
      for (int jt = 0; jt < 50; ++jt) {
        GfElem a = static_cast<GfElem>(rng() % qt);
        GfElem b = static_cast<GfElem>(rng() % qt);
        auto ca = basis.coords(a), cb = basis.coords(b);
        GfElem acc = 0;
        for (std::uint32_t i = 0; i < basis.size(); ++i)
          for (std::uint32_t j = 0; j < basis.size(); ++j)
            acc = bottom->add(
                acc, bottom->mul(ca[i], bottom->mul(g[i][j], cb[j])));
        if (acc != tower->trace(top->mul(a, b))) gram_ok = false;
      }
      r.check(gram_ok, "tr(ab) = c(a)^T M c(b)");
    }
    if (tower->degree() == 2) {
      FieldBasis nb = FieldBasis::normal(tower);
      r.check(top->pow(nb.elements()[0], qb) == nb.elements()[1],
              "normal basis conjugate pair");
    }
  }
  return r;
}

// --- dual-expansion -----------------------------------------------------------

VerifyResult suite_dual_expansion(const VerifyOptions& opt) {
  VerifyResult r;
  r.suite = "dual-expansion";
  std::mt19937_64 rng(opt.seed);
  struct Case {
    std::uint32_t p, s, m;
    int trials;
  };
  for (const Case cs : {Case{2, 1, 2, 50}, Case{3, 1, 2, 25}}) {
    auto bottom = FiniteField::make(cs.p, cs.s);
    auto top = FiniteField::make(cs.p, cs.m);
    auto tower = FieldTower::make(bottom, top);
    for (int it = 0; it < cs.trials; ++it) {
      std::size_t n = 2 + rng() % 5;  // n <= 6
      LinearCode c = random_code(rng, top, n, 3);
      FieldBasis basis = random_basis(rng, tower);
      LinearCode lhs = dual(expand(c, basis));
      LinearCode rhs = expand(dual(c), basis.dual());
      r.check(lhs == rhs, "[beta(C)]^perp = beta^perp(C^perp) on " + fmt_code(c));
    }
  }
  return r;
}

// --- lincode-properties ---------------------------------------------------------

VerifyResult suite_lincode_properties(const VerifyOptions& opt) {
  VerifyResult r;
  r.suite = "lincode-properties";
  std::mt19937_64 rng(opt.seed);
  for (std::uint64_t q : {2, 3, 4}) {
    std::uint32_t p = (q == 4) ? 2 : static_cast<std::uint32_t>(q);
    std::uint32_t m = (q == 4) ? 2 : 1;
    auto f = FiniteField::make(p, m);
    for (int it = 0; it < 40; ++it) {
      std::size_t n = 3 + rng() % 5;
      LinearCode c = random_code(rng, f, n, 4);
      LinearCode d = dual(c);
      r.check(dual(d) == c, "dual involution on " + fmt_code(c));
      r.check(c.k() + d.k() == n, "dim(C) + dim(Cperp) = n");
      if (c.k() >= 1) {
        auto rep = min_distance(c, opt.budget);
        r.check(rep.exact() && rep.value <= n - c.k() + 1,
                "Singleton bound on " + fmt_code(c));
        // canonical form survives row scrambling
        std::vector<std::vector<GfElem>> rows;
        for (std::size_t i = 0; i < c.k(); ++i) {
          std::vector<GfElem> msg(c.k());
          for (auto& e : msg) e = static_cast<GfElem>(rng() % q);
          msg[i] = 1;  // keep full rank likely; rank check below
          rows.push_back(c.encode(msg));
        }
        LinearCode scrambled(f, n, rows);
        if (scrambled.k() == c.k())
          r.check(scrambled == c, "canonical form of scrambled generator");
        // relative weight vs absolute distance
        CssPair pr = random_css_pair(rng, f, n, 4);
        auto rel = relative_min_weight(pr.c1(), pr.c2(), opt.budget);
        auto abs = min_distance(pr.c1(), opt.budget);
        r.check(rel.exact() && abs.exact() && rel.value >= abs.value,
                "relative weight >= d(C1)");
        // equality iff some minimum-weight word lies outside C2
        bool outside = false;
        for (const auto& w : all_codewords(pr.c1(), opt.budget)) {
          std::size_t wt = 0;
          for (auto e : w) wt += (e != 0);
          if (wt == abs.value && !pr.c2().contains(w)) outside = true;
        }
        r.check((rel.value == abs.value) == outside,
                "relative = absolute iff witnessed outside C2");
      }
    }
  }
  // expansion properties over GF(4)/GF(2)
  auto f2 = FiniteField::make(2, 1);
  auto f4 = FiniteField::make(2, 2);
  auto tower = FieldTower::make(f2, f4);
  for (int it = 0; it < 30; ++it) {
    std::size_t n = 2 + rng() % 5;
    CssPair pr = random_css_pair(rng, f4, n, 3);
    FieldBasis basis = random_basis(rng, tower);
    LinearCode e1 = expand(pr.c1(), basis);
    LinearCode e2 = expand(pr.c2(), basis);
    r.check(is_subcode(e2, e1), "expansion preserves nesting");
    r.check(e1.k() == 2 * pr.c1().k() && e1.n() == 2 * n,
            "expansion parameters [mn, mk]");
    auto d_top = min_distance(pr.c1(), opt.budget);
    auto d_exp = min_distance(e1, opt.budget);
    if (d_top.exact() && d_exp.exact())
      r.check(d_exp.value >= d_top.value, "expansion keeps d' >= d");
    // expanded codeword set = expansions of codewords
    if (pow_sat(4, pr.c1().k()) <= 4096) {
      std::set<std::vector<GfElem>> expanded_set;
      for (const auto& w : all_codewords(pr.c1(), opt.budget))
        expanded_set.insert(expand_vector(basis, w));
      std::size_t hits = 0;
      for (const auto& w : all_codewords(e1, opt.budget))
        hits += expanded_set.count(w);
      r.check(hits == expanded_set.size() &&
                  expanded_set.size() == pow_sat(4, pr.c1().k()),
              "expanded code is exactly the expanded codeword set");
    }
  }
  // explicit outcomes
  auto zero = LinearCode::zero(f2, 5);
  r.check(min_distance(zero).status == OracleStatus::undefined_zero_code,
          "zero-code distance is a distinct outcome");
  LinearCode big = LinearCode::full(f2, 30);
  Budget tiny{1u << 10, 1};
  r.check(min_distance(big, tiny).status == OracleStatus::budget_exceeded,
          "budget overrun is a typed outcome");
  return r;
}

// --- combinator-laws ------------------------------------------------------------

VerifyResult suite_combinator_laws(const VerifyOptions& opt) {
  VerifyResult r;
  r.suite = "combinator-laws";
  std::mt19937_64 rng(opt.seed);
  auto f2 = FiniteField::make(2, 1);
  auto f3 = FiniteField::make(3, 1);
  for (int it = 0; it < 120; ++it) {
    const FieldPtr& f = (it % 2 == 0) ? f2 : f3;
    std::size_t n = 4 + rng() % 5;
    LinearCode c = random_code(rng, f, n, 4);
    std::size_t i = rng() % n;
    r.check(dual(puncture(c, i)) == shorten(dual(c), i),
            "puncture/shorten duality on " + fmt_code(c));
    LinearCode ext = extend(c);
    r.check(puncture(ext, n) == c, "extend-then-puncture identity");
    r.check(ext.n() == n + 1 && ext.k() == c.k(), "extension parameters");
    if (c.k() >= 1) {
      auto eo = even_odd_weights(c, opt.budget);
      auto de = min_distance(ext, opt.budget);
      std::uint32_t expected =
          std::min(eo.even.value_or(UINT32_MAX),
                   eo.odd ? *eo.odd + 1 : UINT32_MAX);
      r.check(de.exact() && de.value == expected,
              "extended distance = min(d_even, d_odd + 1)");
      auto dmin = min_distance(c, opt.budget);
      r.check(std::min(eo.even.value_or(UINT32_MAX),
                       eo.odd.value_or(UINT32_MAX)) == dmin.value,
              "min(d_even, d_odd) = d");
    }
  }
  // direct sum and (u|u+v) parameter laws
  for (int it = 0; it < 110; ++it) {
    const FieldPtr& f = (it % 2 == 0) ? f2 : f3;
    std::size_t n = 3 + rng() % 3;
    LinearCode a = random_code(rng, f, n, 3);
    LinearCode b = random_code(rng, f, n + rng() % 3, 3);
    LinearCode ds = direct_sum(a, b);
    r.check(ds.n() == a.n() + b.n() && ds.k() == a.k() + b.k(),
            "direct sum dimensions");
    r.check(dual(ds) == direct_sum(dual(a), dual(b)),
            "dual of direct sum = direct sum of duals");
    if (a.k() >= 1 && b.k() >= 1) {
      auto da = min_distance(a, opt.budget), db = min_distance(b, opt.budget);
      auto dd = min_distance(ds, opt.budget);
      r.check(dd.value == std::min(da.value, db.value), "direct sum distance");
    }
    LinearCode c2 = random_code(rng, f, n, 3);
    LinearCode uv = uuv(a, c2);
    r.check(uv.n() == 2 * n && uv.k() == a.k() + c2.k(), "(u|u+v) dimensions");
    if (a.k() >= 1 && c2.k() >= 1) {
      auto da = min_distance(a, opt.budget), d2 = min_distance(c2, opt.budget);
      auto duv = min_distance(uv, opt.budget);
      r.check(duv.value ==
                  std::min<std::uint32_t>(2 * da.value, d2.value),
              "(u|u+v) distance = min{2d1, d2}");
    }
    // dual weight law of the (u|u+v) construction
    LinearCode dual_uv = dual(uv);
    if (dual_uv.k() >= 1) {
      auto dw = min_distance(dual_uv, opt.budget);
      LinearCode a_perp = dual(a), c2_perp = dual(c2);
      std::uint32_t expected = UINT32_MAX;
      if (c2_perp.k() >= 1)
        expected = std::min(expected, 2 * min_distance(c2_perp, opt.budget).value);
      if (a_perp.k() >= 1)
        expected = std::min(expected, min_distance(a_perp, opt.budget).value);
      r.check(dw.value == expected,
              "dual (u|u+v) weight = min{2 d(C2perp), d(C1perp)}");
    }
    // nesting preservation
    CssPair pa = random_css_pair(rng, f, n, 3);
    CssPair pb = random_css_pair(rng, f, n, 3);
    r.check(is_subcode(uuv(pa.c2(), pb.c2()), uuv(pa.c1(), pb.c1())),
            "(C2|C2+C4) inside (C1|C1+C3)");
    std::size_t j = rng() % n;
    r.check(is_subcode(puncture(pa.c2(), j), puncture(pa.c1(), j)),
            "puncturing preserves nesting");
    r.check(is_subcode(extend(pa.c2()), extend(pa.c1())),
            "extension preserves nesting");
  }
  return r;
}

// --- css-soundness ---------------------------------------------------------------

VerifyResult suite_css_soundness(const VerifyOptions& opt) {
  VerifyResult r;
  r.suite = "css-soundness";
  std::mt19937_64 rng(opt.seed);
  auto f2 = FiniteField::make(2, 1);
  auto f3 = FiniteField::make(3, 1);
  auto f4 = FiniteField::make(2, 2);
  auto claim_ok = [&](const TheoremClaim& c) {
    return c.status != ClaimStatus::violated && c.bounds_hold();
  };
  for (int it = 0; it < 30; ++it) {
    const FieldPtr& f = (it % 2 == 0) ? f2 : f3;
    std::size_t n = 4 + rng() % 3;
    CssPair pr = random_css_pair(rng, f, n, 4);
    AqeccParams p = derive(pr, opt.budget);
    r.check(p.k == pr.k(), "k = k1 - k2 bookkeeping");
    auto d1 = min_distance(pr.c1(), opt.budget);
    auto d2p = min_distance(dual(pr.c2()), opt.budget);
    if (p.dz.exact && p.dx.exact && p.pure)
      r.check(*p.pure == (p.dz.value == d1.value && p.dx.value == d2p.value),
              "purity definition");
    if (p.pure.value_or(false) && !p.singleton_ok())
      r.warnings.push_back("quantum Singleton sanity flagged on [[" +
                           std::to_string(p.n) + "," + std::to_string(p.k) +
                           "]]");
    // the five theorem checkers never contradict their oracles
    auto ext = extend_aqecc(pr, opt.budget);
    r.check(claim_ok(ext.claim), "MAINIV claim sound");
    auto pu = puncture_aqecc(pr, rng() % n, opt.budget);
    r.check(claim_ok(pu.claim), "MAINIII claim sound");
    CssPair pr2 = random_css_pair(rng, f, n, 4);
    auto ds = direct_sum_aqecc(pr, pr2, opt.budget);
    r.check(claim_ok(ds.claim), "MAINII claim sound");
    auto uv = uuv_aqecc(pr, pr2, opt.budget);
    r.check(claim_ok(uv.claim), "MAINV claim sound");
  }
  // expansion theorem over GF(4)/GF(2)
  auto tower = FieldTower::make(f2, f4);
  for (int it = 0; it < 15; ++it) {
    std::size_t n = 3 + rng() % 4;
    CssPair pr = random_css_pair(rng, f4, n, 3);
    auto ex = expand_aqecc(pr, random_basis(rng, tower), opt.budget);
    r.check(claim_ok(ex.claim), "MAINI claim sound");
    r.check(ex.params && ex.params->k == 2 * pr.k(), "MAINI k* = m(k1-k2)");
  }
  return r;
}

// --- symplectic-forms -------------------------------------------------------------

VerifyResult suite_symplectic_forms(const VerifyOptions& opt) {
  VerifyResult r;
  r.suite = "symplectic-forms";
  std::mt19937_64 rng(opt.seed);
  for (std::uint64_t q : {2, 3, 4}) {
    std::uint32_t p = (q == 4) ? 2 : static_cast<std::uint32_t>(q);
    std::uint32_t m = (q == 4) ? 2 : 1;
    auto f = FiniteField::make(p, m);
    // n = 1: exhaustive bilinearity + alternating
    std::vector<SympVec> all1;
    for (GfElem a = 0; a < q; ++a)
      for (GfElem b = 0; b < q; ++b) all1.push_back(SympVec{{a}, {b}});
    bool alternating = true, bilinear = true;
    for (const auto& x : all1)
      if (trace_symplectic_form(*f, x, x) != 0) alternating = false;
    auto fp = FiniteField::make(p, 1);
    for (const auto& x : all1)
      for (const auto& y : all1)
        for (const auto& z : all1) {
          SympVec xy{{f->add(x.a[0], y.a[0])}, {f->add(x.b[0], y.b[0])}};
          GfElem lhs = trace_symplectic_form(*f, xy, z);
          GfElem rhs = fp->add(trace_symplectic_form(*f, x, z),
                               trace_symplectic_form(*f, y, z));
          if (lhs != rhs) bilinear = false;
        }
    r.check(alternating, "trace-symplectic form alternating, q=" + std::to_string(q));
    r.check(bilinear, "trace-symplectic form additive, q=" + std::to_string(q));
    // sandwich inequality on random vectors, n = 2
    bool sandwich = true;
    for (int it = 0; it < 200; ++it) {
      SympVec v{{static_cast<GfElem>(rng() % q), static_cast<GfElem>(rng() % q)},
                {static_cast<GfElem>(rng() % q), static_cast<GfElem>(rng() % q)}};
      std::size_t s = swt(v), wx = wt_x(v), wz = wt_z(v);
      if (!(std::max(wx, wz) <= s && s <= wx + wz)) sandwich = false;
    }
    r.check(sandwich, "swt sandwich inequality, q=" + std::to_string(q));
    // duality size identity on random additive codes
    for (int it = 0; it < 20; ++it) {
      std::size_t n = 1 + rng() % 3;
      std::size_t rows = 1 + rng() % (2 * f->m() * n);
      std::vector<std::vector<GfElem>> gens(rows,
                                            std::vector<GfElem>(2 * f->m() * n));
      for (auto& row : gens)
        for (auto& e : row) e = static_cast<GfElem>(rng() % p);
      auto code = AdditiveCode::from_prime_rows(f, n, gens);
      auto dual_code = symplectic_dual(code);
      r.check(code.size() * dual_code.size() ==
                  pow_sat(p, 2 * f->m() * n),
              "|C| |C_dual| = p^{2tn}");
      r.check(symplectic_dual(dual_code) == code, "symplectic dual involution");
    }
  }
  // phi isometry and form correspondence for q = 2, n <= 3
  auto f2 = FiniteField::make(2, 1);
  auto alt = AlternatingSpace::make(f2);
  for (std::size_t n = 1; n <= 3; ++n) {
    bool isometry = true, correspond = true, inverse_ok = true;
    std::vector<SympVec> all;
    for (std::uint64_t bits = 0; bits < (1ull << (2 * n)); ++bits) {
      SympVec v;
      v.a.resize(n);
      v.b.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        v.a[i] = (bits >> i) & 1;
        v.b[i] = (bits >> (n + i)) & 1;
      }
      all.push_back(v);
    }
    for (const auto& v : all) {
      auto img = alt.phi(v);
      std::size_t hw = 0;
      for (auto e : img) hw += (e != 0);
      if (hw != swt(v)) isometry = false;
      auto back = alt.phi_inverse(img);
      if (back.a != v.a || back.b != v.b) inverse_ok = false;
    }
    if (n <= 2) {
      for (const auto& v : all)
        for (const auto& w : all)
          if (trace_symplectic_form(*f2, v, w) !=
              alt.form(alt.phi(v), alt.phi(w)))
            correspond = false;
      r.check(correspond, "phi maps the symplectic form to the alternating form");
    }
    r.check(isometry, "phi weight isometry, n=" + std::to_string(n));
    r.check(inverse_ok, "phi inverse, n=" + std::to_string(n));
  }
  // alternating form is alternating and GF(p)-additive over GF(4), n=1
  {
    bool alternating = true, additive = true;
    auto f4 = FiniteField::make(2, 2);
    auto alt4 = AlternatingSpace::make(f2);
    (void)f4;
    for (GfElem a = 0; a < 4; ++a) {
      std::vector<GfElem> v{a};
      if (alt4.form(v, v) != 0) alternating = false;
      for (GfElem b = 0; b < 4; ++b)
        for (GfElem c = 0; c < 4; ++c) {
          std::vector<GfElem> x{a}, y{b}, z{c};
          std::vector<GfElem> xy{alt4.tower()->top()->add(a, b)};
          if (alt4.form(xy, z) !=
              FiniteField::make(2, 1)->add(alt4.form(x, z), alt4.form(y, z)))
            additive = false;
        }
    }
    r.check(alternating, "trace-alternating form alternating");
    r.check(additive, "trace-alternating form additive");
  }
  // phi_B preserves self-orthogonality on random GF(4) additive codes
  auto f4 = FiniteField::make(2, 2);
  auto tower = FieldTower::make(f2, f4);
  int built = 0;
  for (int attempt = 0; built < 20 && attempt < 4000; ++attempt) {
    std::size_t n = 1 + rng() % 3;
    std::vector<SympVec> gens;
    for (int g = 0; g < 6; ++g) {
      SympVec v;
      v.a.resize(n);
      v.b.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        v.a[i] = static_cast<GfElem>(rng() % 4);
        v.b[i] = static_cast<GfElem>(rng() % 4);
      }
      bool ortho = true;
      for (const auto& kept : gens)
        if (trace_symplectic_form(*f4, v, kept) != 0) ortho = false;
      if (ortho) gens.push_back(v);
    }
    if (gens.empty()) continue;
    AdditiveCode code(f4, n, gens);
    if (!is_self_orthogonal(code)) continue;
    ++built;
    FieldBasis basis = (built % 2 == 0) ? random_basis(rng, tower)
                                        : FieldBasis::polynomial(tower);
    AdditiveCode image = phi_b_expand(code, basis);
    r.check(is_self_orthogonal(image), "phi_B preserves self-orthogonality");
    r.check(image.size() == code.size(), "phi_B preserves |C|");
    bool weights_ok = true;
    for (std::size_t g = 0; g < code.rank(); ++g) {
      SympVec v = code.to_symp(code.prime_generators().row(g));
      SympVec img = image.to_symp(
          phi_b_expand(AdditiveCode(f4, n, {v}), basis).prime_generators().row(0));
      if (wt_x(img) < wt_x(v) || wt_z(img) < wt_z(v)) weights_ok = false;
    }
    r.check(weights_ok, "phi_B does not decrease X/Z weights");
  }
  r.check(built == 20, "constructed 20 self-orthogonal GF(4) samples");
  return r;
}

// --- css-symplectic-agreement -----------------------------------------------------

VerifyResult suite_css_symplectic_agreement(const VerifyOptions& opt) {
  VerifyResult r;
  r.suite = "css-symplectic-agreement";
  std::mt19937_64 rng(opt.seed);
  auto f2 = FiniteField::make(2, 1);
  auto f3 = FiniteField::make(3, 1);
  auto f4 = FiniteField::make(2, 2);
  for (int it = 0; it < 20; ++it) {
    const FieldPtr& f = (it % 3 == 0) ? f3 : (it % 3 == 1 ? f4 : f2);
    std::size_t n = 3 + rng() % 3;
    CssPair pr = random_css_pair(rng, f, n, 3);
    AqeccParams via_css = derive(pr, opt.budget);
    AdditiveCode adc = css_to_additive(pr);
    r.check(is_self_orthogonal(adc), "CSS image is self-orthogonal");
    AqeccParams via_stab = stabilizer_params(adc, opt.budget);
    bool agree = via_css.n == via_stab.n && via_css.k == via_stab.k &&
                 via_css.K == via_stab.K &&
                 via_css.dz.value == via_stab.dz.value &&
                 via_css.dx.value == via_stab.dx.value &&
                 via_css.pure == via_stab.pure;
    r.check(agree, "stabilizer_params agrees with derive()");
  }
  return r;
}

// --- grm-formulas -------------------------------------------------------------------

VerifyResult suite_grm_formulas(const VerifyOptions& opt) {
  VerifyResult r;
  r.suite = "grm-formulas";
  for (std::uint64_t q : {2, 3, 4}) {
    std::uint32_t p = (q == 4) ? 2 : static_cast<std::uint32_t>(q);
    std::uint32_t mdeg = (q == 4) ? 2 : 1;
    auto f = FiniteField::make(p, mdeg);
    for (std::uint32_t m = 1; m <= 3; ++m) {
      for (std::uint32_t alpha = 0; alpha < m * (q - 1); ++alpha) {
        auto [code, spec] = grm(f, m, alpha);
        r.check(code.k() == spec.predicted_k,
                "Eq.(1) dimension, q=" + std::to_string(q) +
                    " m=" + std::to_string(m) + " a=" + std::to_string(alpha));
        if (pow_sat(q, code.k()) <= (1u << 20)) {
          auto d = min_distance(code, opt.budget);
          r.check(d.exact() && d.value == spec.predicted_d,
                  "Eq.(2) distance, q=" + std::to_string(q) +
                      " m=" + std::to_string(m) + " a=" + std::to_string(alpha));
        }
        if (alpha == 0)
          r.check(code.k() == 1 && code.n() == pow_sat(q, m),
                  "order 0 is the repetition code");
        // duality: dual is the GRM code of the dual order
        auto [dual_code, dual_spec] = grm(f, m, spec.alpha_dual);
        r.check(dual(code) == dual_code, "GRM duality identity");
      }
    }
  }
  return r;
}

// --- bch-bound ---------------------------------------------------------------------

VerifyResult suite_bch_bound(const VerifyOptions& opt) {
  VerifyResult r;
  r.suite = "bch-bound";
  struct Case {
    std::uint64_t q;
    std::size_t n;
  };
  for (const Case cs : {Case{2, 7}, Case{2, 15}, Case{3, 8}, Case{3, 26},
                        Case{4, 15}}) {
    std::uint32_t p = (cs.q == 4) ? 2 : static_cast<std::uint32_t>(cs.q);
    std::uint32_t mdeg = (cs.q == 4) ? 2 : 1;
    auto f = FiniteField::make(p, mdeg);
    for (std::uint32_t delta = 2; delta <= cs.n; ++delta) {
      std::pair<LinearCode, BchSpec> built = [&] {
        try {
          return bch(f, cs.n, 1, delta);
        } catch (const std::invalid_argument&) {
          return std::make_pair(LinearCode::zero(f, cs.n), BchSpec{});
        }
      }();
      if (built.first.k() == 0) continue;  // no dimension left at this delta
      const auto& [code, spec] = built;
      r.check(code.k() == cs.n - (spec.gen_poly.size() - 1),
              "dimension = n - deg g at delta=" + std::to_string(delta));
      if (pow_sat(cs.q, code.k()) <= opt.budget.max_codewords) {
        auto d = min_distance(code, opt.budget);
        r.check(d.exact() && d.value >= delta,
                "BCH bound at (q,n,delta)=(" + std::to_string(cs.q) + "," +
                    std::to_string(cs.n) + "," + std::to_string(delta) + ")");
      }
    }
  }
  return r;
}

// --- character-duality ----------------------------------------------------------------

VerifyResult suite_character_duality(const VerifyOptions& opt) {
  VerifyResult r;
  r.suite = "character-duality";
  for (std::uint32_t p : {3u, 5u}) {
    auto f = FiniteField::make(p, 1);
    for (std::uint32_t m = 1; m <= 4; ++m) {
      if ((1u << m) > 16) continue;
      for (std::uint32_t rr = 0; rr < m; ++rr) {
        LinearCode c = character_code(f, rr, m);
        r.check(c.k() == character_dimension(m, rr),
                "character dimension s_m(r)");
        if (pow_sat(p, c.k()) <= (1u << 18)) {
          auto d = min_distance(c, opt.budget);
          r.check(d.exact() && d.value == (1u << (m - rr)),
                  "character distance 2^{m-r}");
        }
        // the dual equals the complement-weight code scaled by (-1)^{wt(x)}
        LinearCode comp = character_code(f, m - rr - 1, m);
        std::vector<std::vector<GfElem>> scaled;
        for (std::size_t row = 0; row < comp.k(); ++row) {
          std::vector<GfElem> v(comp.row(row).begin(), comp.row(row).end());
          for (std::size_t x = 0; x < v.size(); ++x)
            if (__builtin_popcountll(x) % 2 == 1) v[x] = f->neg(v[x]);
          scaled.push_back(std::move(v));
        }
        LinearCode witness(f, comp.n(), scaled);
        r.check(dual(c) == witness,
                "dual of C_q(r,m) is the scaled C_q(m-r-1,m)");
        r.check(dual(c).k() == character_dimension(m, m - rr - 1),
                "dual dimension s_m(m-r-1)");
      }
    }
  }
  return r;
}

// --- qr-properties -----------------------------------------------------------------

VerifyResult suite_qr_properties(const VerifyOptions& opt) {
  VerifyResult r;
  r.suite = "qr-properties";
  struct Case {
    std::uint32_t p_len;
    std::uint32_t p, t;
  };
  for (const Case cs : {Case{5, 2, 2}, Case{7, 2, 1}, Case{11, 3, 1},
                        Case{13, 3, 1}, Case{5, 3, 2}}) {
    auto f = FiniteField::make(cs.p, cs.t);
    QrCodes codes = qr(cs.p_len, f);
    r.check(codes.Q().k() == (cs.p_len + 1) / 2 &&
                codes.C().k() == (cs.p_len + 1) / 2,
            "Q, C dimension (p+1)/2");
    r.check(codes.Qd().k() == (cs.p_len - 1) / 2 &&
                codes.Cd().k() == (cs.p_len - 1) / 2,
            "Q0, C0 dimension (p-1)/2");
    if (cs.p_len % 4 == 1) {
      r.check(codes.Qd() == dual(codes.C()), "Q0 = C^perp when p = 4k+1");
      r.check(codes.Cd() == dual(codes.Q()), "C0 = Q^perp when p = 4k+1");
    } else {
      r.check(codes.Qd() == dual(codes.Q()), "Q0 = Q^perp when p = 4k+3");
    }
    if (pow_sat(f->q(), codes.Q().k()) <= opt.budget.max_codewords) {
      auto d = min_distance(codes.Q(), opt.budget);
      r.check(d.exact() && d.value * d.value >= cs.p_len,
              "square-root bound d^2 >= p");
      if (cs.p_len % 4 == 3)
        r.check(d.value * d.value - d.value + 1 >= cs.p_len,
                "d^2 - d + 1 >= p when p = 4k+3");
    }
  }
  return r;
}

// --- theorem-soundness -----------------------------------------------------------------

VerifyResult suite_theorem_soundness(const VerifyOptions& opt) {
  VerifyResult r;
  r.suite = "theorem-soundness";
  TableCaps caps;
  caps.budget = Budget{1u << 18, opt.budget.threads};
  caps.max_n = 15;
  auto rows = make_table("all", caps);
  std::size_t verified = 0;
  for (const auto& row : rows) {
    r.check(row.claim.status != ClaimStatus::violated,
            row.family + " row never contradicts its oracle");
    if (row.claim.status == ClaimStatus::verified_exact ||
        row.claim.status == ClaimStatus::verified_bound) {
      ++verified;
      r.check(row.claim.bounds_hold(),
              row.family + " verified claim bound <= oracle value");
    }
  }
  r.check(verified > 0, "table sweep produced verified claims");
  return r;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{
      "field-axioms",      "dual-expansion",     "lincode-properties",
      "combinator-laws",   "css-soundness",      "symplectic-forms",
      "css-symplectic-agreement", "grm-formulas", "bch-bound",
      "character-duality", "qr-properties",      "theorem-soundness"};
  return names;
}

VerifyResult run_verify_suite(const std::string& name,
                              const VerifyOptions& options) {
  if (name == "field-axioms") return suite_field_axioms(options);
  if (name == "dual-expansion") return suite_dual_expansion(options);
  if (name == "lincode-properties") return suite_lincode_properties(options);
  if (name == "combinator-laws") return suite_combinator_laws(options);
  if (name == "css-soundness") return suite_css_soundness(options);
  if (name == "symplectic-forms") return suite_symplectic_forms(options);
  if (name == "css-symplectic-agreement")
    return suite_css_symplectic_agreement(options);
  if (name == "grm-formulas") return suite_grm_formulas(options);
  if (name == "bch-bound") return suite_bch_bound(options);
  if (name == "character-duality") return suite_character_duality(options);
  if (name == "qr-properties") return suite_qr_properties(options);
  if (name == "theorem-soundness") return suite_theorem_soundness(options);
  throw std::invalid_argument("unknown verify suite: " + name);
}

std::vector<VerifyResult> run_verify(const std::string& name,
                                     const VerifyOptions& options) {
  std::vector<VerifyResult> out;
  if (name == "all")
    for (const auto& s : verify_suite_names())
      out.push_back(run_verify_suite(s, options));
  else
    out.push_back(run_verify_suite(name, options));
  return out;
}

}  // namespace aqecc
