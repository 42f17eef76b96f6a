#include <doctest.h>

#include "gen.hpp"
#include "supercong/local.hpp"

using namespace supercong;

namespace {

modpoly::Poly eval_ghat_product(const LocalContext& ctx) {
  return modpoly::mul(ctx.ghat(), ctx.cofactor(), ctx.modulus());
}

}  // namespace

TEST_CASE("factorization of Phi_N mod p") {
  auto f = factor_cyclotomic_mod_p(4, 5);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == modpoly::Poly{2, 1});
  CHECK(f[1] == modpoly::Poly{3, 1});
  // 2 is inert in Q(zeta_3), 2 has order 3 mod 7
  CHECK(factor_cyclotomic_mod_p(3, 2).size() == 1);
  auto f7 = factor_cyclotomic_mod_p(7, 2);
  REQUIRE(f7.size() == 2);
  CHECK(f7[0].size() == 4);
  // product of the factors is Phi_N mod p
  for (auto [N, p] : {std::pair{12u, 5ul}, {5u, 11ul}, {15u, 2ul}, {8u, 3ul}}) {
    modpoly::Poly prod{1};
    for (auto& g : factor_cyclotomic_mod_p(N, p)) prod = modpoly::mul(prod, g, Integer(p));
    CHECK(prod == modpoly::reduce(cyclotomic_poly(N), Integer(p)));
  }
}

TEST_CASE("Hensel lift divides Phi_N mod p^M") {
  for (auto [N, p, M] : {std::tuple{4u, 5ul, 2u}, {3u, 2ul, 4u}, {5u, 7ul, 6u}, {12u, 5ul, 5u}, {7u, 2ul, 8u}}) {
    auto ctx = make_local_context(N, p, M);
    CHECK(ctx->modulus() == ipow(p, M));
    CHECK(ctx->residue_degree() == multiplicative_order(p, N));
    CHECK(static_cast<unsigned>(ctx->ghat().size() - 1) == ctx->residue_degree());
    CHECK(eval_ghat_product(*ctx) == modpoly::reduce(cyclotomic_poly(N), ctx->modulus()));
  }
  auto c = make_local_context(4, 5, 2);
  CHECK(c->ghat() == modpoly::Poly{7, 1});
  CHECK(make_local_context(3, 2, 4)->ghat() == modpoly::Poly{1, 1, 1});
  CHECK(make_all_local_contexts(12, 5, 3).size() == 2);
  CHECK(make_all_local_contexts(7, 2, 3).size() == 2);
  CHECK_THROWS_AS(make_local_context(3, 3, 4), std::domain_error);
  CHECK(c->with_precision(6)->ghat()[0] % 25 == 7);
}

TEST_CASE("valuations in local contexts") {
  auto q5 = make_local_context(1, 5, 6);
  CHECK(val_of(CycloElem(1, Rational(3000)), q5) == PValuation::finite(3));
  CHECK(val_of(CycloElem(1, Rational(1, 25)), q5) == PValuation::non_integral(-2));
  CHECK(val_of(CycloElem(1, Rational(2, 7)), q5) == PValuation::finite(0));
  CHECK(val_of(CycloElem(1), q5) == PValuation::at_least(6));
  CHECK(val_of(CycloElem(1, Rational(5 * 5 * 5 * 5 * 5 * 5 * 3)), q5) == PValuation::at_least(6));
  // 1 - zeta_3 is a unit at 2; 2 + 4 zeta_3 has order one
  auto c32 = make_local_context(3, 2, 5);
  CHECK(val_of(CycloElem(3, Rational(1)) - CycloElem::zeta(3), c32) == PValuation::finite(0));
  CHECK(val_of(CycloElem(3, std::vector<Rational>{2, 4}), c32) == PValuation::finite(1));
  CHECK(val_of(CycloElem(3, std::vector<Rational>{Rational(1, 4), 2}), c32) == PValuation::non_integral(-2));
  CHECK_THROWS_AS(embed(CycloElem(1, Rational(1, 5)), q5), std::domain_error);
}

TEST_CASE("PValuation ordering") {
  CHECK(PValuation::finite(2).meets(2));
  CHECK_FALSE(PValuation::finite(1).meets(2));
  CHECK(PValuation::at_least(5).meets(5));
  CHECK_FALSE(PValuation::at_least(4).meets(5));
  CHECK(PValuation::zero().meets(100));
  CHECK_FALSE(PValuation::non_integral(-1).meets(0));
  CHECK(min(PValuation::finite(3), PValuation::at_least(3)) == PValuation::finite(3));
  CHECK(min(PValuation::zero(), PValuation::at_least(4)) == PValuation::at_least(4));
  CHECK(min(PValuation::finite(1), PValuation::non_integral(-1)) == PValuation::non_integral(-1));
  CHECK(PValuation::of_rational(Rational(0), 3) == PValuation::zero());
  CHECK(PValuation::of_rational(Rational(18), 3) == PValuation::finite(2));
}

TEST_CASE("local Frobenius matches the global automorphism") {
  gen::Gen g(0x10ca1);
  for (auto [N, p] : {std::pair{3u, 2ul}, {3u, 5ul}, {4u, 5ul}, {5u, 7ul}, {12u, 5ul}, {7u, 2ul}}) {
    for (auto& ctx : make_all_local_contexts(N, p, 6)) {
      for (int t = 0; t < 20; ++t) {
        auto a = g.p_integral(N, p);
        CHECK(embed(frobenius_global(a, p), ctx) == embed(a, ctx).frobenius());
      }
    }
  }
}

TEST_CASE("embedding is a ring map") {
  gen::Gen g(0xe3bed);
  for (auto [N, p] : {std::pair{3u, 7ul}, {5u, 11ul}, {8u, 3ul}}) {
    auto ctx = make_local_context(N, p, 5);
    for (int t = 0; t < 20; ++t) {
      auto a = g.p_integral(N, p), b = g.p_integral(N, p);
      CHECK(embed(a * b, ctx) == embed(a, ctx) * embed(b, ctx));
      CHECK(embed(a - b, ctx) == embed(a, ctx) - embed(b, ctx));
    }
  }
}

TEST_CASE("rational valuations agree with ord_p") {
  gen::Gen g(0x0bd);
  for (unsigned long p : {2ul, 3ul, 7ul}) {
    auto ctx = make_local_context(1, p, 12);
    for (int t = 0; t < 50; ++t) {
      Rational r = g.nonzero_rational(2000);
      CHECK(val_of(CycloElem(1, r), ctx) == PValuation::of_rational(r, p));
    }
  }
}
