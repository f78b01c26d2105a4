#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "aqecc/families.hpp"
#include "aqecc/symplectic.hpp"
#include "doctest.h"

using namespace aqecc;

namespace {

CssPair steane() {
  LinearCode h(FiniteField::make(2, 1), 7,
               {{1, 0, 0, 0, 1, 1, 0},
                {0, 1, 0, 0, 1, 0, 1},
                {0, 0, 1, 0, 0, 1, 1},
                {0, 0, 0, 1, 1, 1, 1}});
  return CssPair(h, dual(h));
}

}  // namespace

TEST_CASE("weights of symplectic vectors") {
  SympVec v{{1, 0, 2}, {0, 0, 1}};
  CHECK(swt(v) == 2);
  CHECK(wt_x(v) == 2);
  CHECK(wt_z(v) == 1);
}

TEST_CASE("trace-symplectic form values") {
  auto f2 = FiniteField::make(2, 1);
  CHECK(trace_symplectic_form(*f2, SympVec{{1}, {0}}, SympVec{{0}, {1}}) == 1);
  auto f4 = FiniteField::make(2, 2);
  CHECK(trace_symplectic_form(*f4, SympVec{{2}, {0}}, SympVec{{0}, {2}}) == 1);
  // alternating on random vectors
  for (GfElem a = 0; a < 4; ++a)
    for (GfElem b = 0; b < 4; ++b)
      CHECK(trace_symplectic_form(*f4, SympVec{{a}, {b}}, SympVec{{a}, {b}}) == 0);
}

TEST_CASE("symplectic dual basics") {
  auto f2 = FiniteField::make(2, 1);
  AdditiveCode zero = AdditiveCode::from_prime_rows(f2, 2, {});
  AdditiveCode full = symplectic_dual(zero);
  CHECK(full.rank() == 4);
  AdditiveCode x_only(f2, 1, {SympVec{{1}, {0}}});
  AdditiveCode xd = symplectic_dual(x_only);
  CHECK(xd.rank() == 1);
  CHECK(xd.contains(SympVec{{1}, {0}}));
  CHECK_FALSE(xd.contains(SympVec{{0}, {1}}));
  CHECK(x_only.size() * xd.size() == 4);
  CHECK(symplectic_dual(xd) == x_only);
}

TEST_CASE("CSS image of the Steane pair") {
  AdditiveCode adc = css_to_additive(steane());
  CHECK(adc.n() == 7);
  CHECK(adc.rank() == 6);
  CHECK(is_self_orthogonal(adc));
  AqeccParams p = stabilizer_params(adc);
  CHECK(p.n == 7);
  CHECK(p.K == 2);
  CHECK(p.k == 1);
  CHECK(p.dz.value == 3);
  CHECK(p.dx.value == 3);
  CHECK(p.pure == true);
}

TEST_CASE("K = 1 self-dual toy code") {
  auto f2 = FiniteField::make(2, 1);
  AdditiveCode c(f2, 2, {SympVec{{1, 0}, {1, 0}}, SympVec{{0, 1}, {0, 1}}});
  REQUIRE(is_self_orthogonal(c));
  CHECK(symplectic_dual(c) == c);
  AqeccParams p = stabilizer_params(c);
  CHECK(p.K == 1);
  CHECK(p.k == 0);
  CHECK(p.dz.value == 1);
  CHECK(p.dx.value == 1);
}

TEST_CASE("zero stabilizer gives the full code space") {
  auto f2 = FiniteField::make(2, 1);
  AdditiveCode c = AdditiveCode::from_prime_rows(f2, 3, {});
  AqeccParams p = stabilizer_params(c);
  CHECK(p.K == 8);
  CHECK(p.k == 3);
  CHECK(p.dz.value == 1);
  CHECK(p.dx.value == 1);
}

TEST_CASE("stabilizer parameters require self-orthogonality") {
  auto f2 = FiniteField::make(2, 1);
  AdditiveCode c(f2, 1, {SympVec{{1}, {0}}, SympVec{{0}, {1}}});
  CHECK_THROWS_AS(stabilizer_params(c), std::invalid_argument);
}

TEST_CASE("phi_B expansion of a single quaternary generator") {
  auto f2 = FiniteField::make(2, 1);
  auto f4 = FiniteField::make(2, 2);
  auto tower = FieldTower::make(f2, f4);
  FieldBasis b(tower, {1, 2});
  AdditiveCode toy(f4, 1, {SympVec{{2}, {1}}});  // (w | 1)
  AdditiveCode image = phi_b_expand(toy, b);
  SympVec img = image.to_symp(image.prime_generators().row(0));
  CHECK(img.a == std::vector<GfElem>{0, 1});
  CHECK(img.b == std::vector<GfElem>{0, 1});
  // the zero vector maps to the zero vector
  AdditiveCode z = AdditiveCode::from_prime_rows(f4, 1, {});
  CHECK(phi_b_expand(z, b).rank() == 0);
}

TEST_CASE("phi_B keeps orthogonality on a fixed self-orthogonal code") {
  auto f4 = FiniteField::make(2, 2);
  AdditiveCode c(f4, 2, {SympVec{{1, 0}, {0, 1}}, SympVec{{0, 1}, {1, 0}}});
  REQUIRE(is_self_orthogonal(c));
  auto tower = FieldTower::make(FiniteField::make(2, 1), f4);
  for (const auto& basis : {FieldBasis::polynomial(tower), FieldBasis(tower, {3, 2})}) {
    AdditiveCode image = phi_b_expand(c, basis);
    CHECK(is_self_orthogonal(image));
    CHECK(image.size() == c.size());
    CHECK(image.n() == 4);
  }
}

TEST_CASE("phi map and the trace-alternating form") {
  auto f2 = FiniteField::make(2, 1);
  auto alt = AlternatingSpace::make(f2);
  CHECK(alt.beta() == 2);
  CHECK(alt.beta_conj() == 3);
  CHECK(alt.phi(SympVec{{0}, {0}}) == std::vector<GfElem>{0});
  auto img = alt.phi(SympVec{{1}, {1}});
  CHECK(img == std::vector<GfElem>{1});  // w + w^2 = 1
  CHECK(swt(SympVec{{1}, {1}}) == 1);
  // the specific conjugate pair evaluation
  std::vector<GfElem> v{2}, w{3};
  CHECK(alt.form(v, w) == 1);
  // alternating and additive over all pairs, n = 1
  for (GfElem a = 0; a < 4; ++a) {
    std::vector<GfElem> x{a};
    CHECK(alt.form(x, x) == 0);
  }
  // isometry over every vector with n <= 3 plus inversion
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint64_t bits = 0; bits < (1ull << (2 * n)); ++bits) {
      SympVec vec;
      vec.a.resize(n);
      vec.b.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        vec.a[i] = (bits >> i) & 1;
        vec.b[i] = (bits >> (n + i)) & 1;
      }
      auto image = alt.phi(vec);
      std::size_t hw = 0;
      for (auto e : image) hw += (e != 0);
      CHECK(hw == swt(vec));
      auto back = alt.phi_inverse(image);
      CHECK(back.a == vec.a);
      CHECK(back.b == vec.b);
    }
  }
}

TEST_CASE("expansion theorem at the stabilizer level") {
  auto f4 = FiniteField::make(2, 2);
  QrCodes codes = qr(5, f4);
  CssPair pr(codes.Q(), dual(codes.C()));
  AdditiveCode adc = css_to_additive(pr);
  auto tower = FieldTower::make(FiniteField::make(2, 1), f4);
  AdditiveDerivation d =
      expand_additive_aqecc(adc, FieldBasis::polynomial(tower));
  CHECK(d.claim.theorem == "GenExpa");
  CHECK(d.claim.status == ClaimStatus::verified_exact);
  CHECK(d.params->n == 10);
  CHECK(d.params->K == 4);
  CHECK(d.params->k == 2);
  CHECK(d.params->dz.value >= 3);
  CHECK(d.params->dx.value >= 3);
}

TEST_CASE("stabilizer expansion through a non-prime bottom field") {
  auto f16 = FiniteField::make(2, 4);
  auto f4 = FiniteField::make(2, 2);
  LinearCode c1(f16, 3, {{1, 0, 2}, {0, 1, 3}});
  LinearCode c2(f16, 3, {{1, 0, 2}});
  CssPair pr(c1, c2);
  AdditiveCode adc = css_to_additive(pr);
  REQUIRE(is_self_orthogonal(adc));
  AqeccParams base = stabilizer_params(adc);
  CHECK(base.K == 16);
  CHECK(base.k == 1);
  auto tower = FieldTower::make(f4, f16);
  AdditiveDerivation d =
      expand_additive_aqecc(adc, FieldBasis::polynomial(tower));
  CHECK(d.claim.status == ClaimStatus::verified_exact);
  CHECK(d.params->q == 4);
  CHECK(d.params->n == 6);
  CHECK(d.params->K == 16);
  CHECK(d.params->k == 2);
  CHECK(d.params->dz.value >= base.dz.value);
  CHECK(d.params->dx.value >= base.dx.value);
}

TEST_CASE("puncturing theorem at the stabilizer level") {
  AdditiveCode adc = css_to_additive(steane());
  AdditiveDerivation d = puncture_additive_aqecc(adc, 0);
  CHECK(d.claim.theorem == "MAINNEW");
  CHECK(d.claim.status == ClaimStatus::verified_exact);
  CHECK(d.params->n == 6);
  CHECK(d.params->k == 1);
  CHECK(*d.claim.claimed_dz == 2);
  CHECK(*d.claim.claimed_dx == 2);
  CHECK(d.params->dz.value >= 2);
  CHECK(d.params->dx.value >= 2);
  CHECK(d.params->pure == true);
  // too short
  auto f2 = FiniteField::make(2, 1);
  AdditiveCode one = AdditiveCode::from_prime_rows(f2, 1, {});
  AdditiveDerivation bad = puncture_additive_aqecc(one, 0);
  CHECK(bad.claim.status == ClaimStatus::hypothesis_failed);
}

TEST_CASE("plain coordinate deletion on additive codes") {
  AdditiveCode adc = css_to_additive(steane());
  AdditiveCode p = puncture_additive(adc, 3);
  CHECK(p.n() == 6);
  CHECK_THROWS_AS(puncture_additive(adc, 7), std::invalid_argument);
}
