#include "doctest.h"

#include <cstddef>

#include "exactrn/cauchy_schwarz.hpp"
#include "exactrn/errors.hpp"
#include "exactrn/hyper.hpp"
#include "exactrn/random.hpp"
#include "exactrn/surd.hpp"

using namespace exactrn;

namespace {
RatVec rv(std::initializer_list<int> xs) {
  std::vector<Rat> entries;
  for (int x : xs) entries.emplace_back(x);
  return RatVec(std::move(entries));
}

// Dependent pair u = a*v with nonzero v, for equality-case batteries.
std::pair<RatVec, RatVec> dependent_pair(Rng& rng, std::size_t dim, Rat* a_out) {
  RatVec v;
  do {
    v = random_rat_vec(rng, dim, 50);
  } while (zvecp(v));
  Rat a = random_rat(rng, 50);
  if (a_out) *a_out = a;
  return {scalar_mul(a, v), v};
}
}  // namespace

TEST_CASE("squared-inequality gap on known pairs") {
  CHECK(cs1_gap(rv({1, 2}), rv({2, 4})) == Rat(0));
  CHECK(cs1_gap(rv({1, 0}), rv({0, 1})) == Rat(1));
  CHECK(cs1_gap(rv({1, 2}), rv({2, 1})) == Rat(9));
  CHECK(cs1_gap(RatVec{}, RatVec{}) == Rat(0));
  CHECK_THROWS_AS(cs1_gap(rv({1}), rv({1, 2})), DimensionError);
}

TEST_CASE("gap stays nonnegative over random rational pairs") {
  Rng rng(101);
  for (int i = 0; i < 2000; ++i) {
    std::size_t dim = static_cast<std::size_t>(rng.int_between(0, 8));
    RatVec u = random_rat_vec(rng, dim, 100);
    RatVec v = random_rat_vec(rng, dim, 100);
    REQUIRE(cs1_gap(u, v).sign() >= 0);
  }
}

TEST_CASE("gap stays nonnegative over hyperreal pairs") {
  Hyper e = Hyper::eps();
  Vec<Hyper> u({e, Hyper(1)});
  Vec<Hyper> v({Hyper(1), e});
  Hyper one_minus_e2 = Hyper(1) - e * e;
  CHECK(cs1_gap(u, v) == one_minus_e2 * one_minus_e2);
  CHECK(cs1_gap(u, v).sign() > 0);

  Rng rng(102);
  for (int i = 0; i < 800; ++i) {
    std::size_t dim = static_cast<std::size_t>(rng.int_between(0, 6));
    Vec<Hyper> a = random_hyper_vec(rng, dim, 20);
    Vec<Hyper> b = random_hyper_vec(rng, dim, 20);
    REQUIRE(cs1_gap(a, b).sign() >= 0);
  }
}

TEST_CASE("root-form inequality") {
  CHECK(cs2_holds(rv({1, 2}), rv({2, 1})));
  CHECK(cs2_holds(rv({1, 2}), rv({2, 4})));
  CHECK(cs2_holds(RatVec{}, RatVec{}));
  CHECK_THROWS_AS(cs2_holds(rv({1}), rv({1, 2})), DimensionError);

  Rng rng(103);
  for (int i = 0; i < 2000; ++i) {
    std::size_t dim = static_cast<std::size_t>(rng.int_between(0, 8));
    RatVec u = random_rat_vec(rng, dim, 100);
    RatVec v = random_rat_vec(rng, dim, 100);
    REQUIRE(cs2_holds(u, v));
  }
}

TEST_CASE("root-form equality happens exactly on the zero-gap pairs") {
  Rng rng(104);
  for (int i = 0; i < 500; ++i) {
    std::size_t dim = 1 + static_cast<std::size_t>(rng.int_between(0, 5));
    RatVec u, v;
    if (rng.chance(2)) {
      auto pair = dependent_pair(rng, dim, nullptr);
      u = pair.first;
      v = pair.second;
    } else {
      u = random_rat_vec(rng, dim, 60);
      v = random_rat_vec(rng, dim, 60);
    }
    Rat uv = dot(u, v);
    bool root_equality = uv * uv == norm_sq(u) * norm_sq(v);
    REQUIRE(root_equality == cs1_gap(u, v).is_zero());
  }
}

TEST_CASE("classification of known pairs") {
  CsCertificate dep = classify(rv({2, 4}), rv({1, 2}));
  CHECK(dep.kind() == CsCertificate::Kind::Dependent);
  CHECK(dep.witness() == Rat(2));
  CHECK(dep.is_equality_case());
  CHECK(dep.kind_name() == "dependent");

  CsCertificate zu = classify(rv({0, 0}), rv({1, 2}));
  CHECK(zu.kind() == CsCertificate::Kind::ZeroU);
  CHECK(zu.kind_name() == "zero_u");

  CsCertificate zv = classify(rv({1, 2}), rv({0, 0}));
  CHECK(zv.kind() == CsCertificate::Kind::ZeroV);
  CHECK(zv.kind_name() == "zero_v");

  // Both zero: the u check wins.
  CHECK(classify(rv({0, 0}), rv({0, 0})).kind() == CsCertificate::Kind::ZeroU);
  CHECK(classify(RatVec{}, RatVec{}).kind() == CsCertificate::Kind::ZeroU);

  CsCertificate st = classify(rv({1, 2}), rv({2, 1}));
  CHECK(st.kind() == CsCertificate::Kind::Strict);
  CHECK(st.gap() == Rat(9));
  CHECK_FALSE(st.is_equality_case());
  CHECK(st.kind_name() == "strict");

  CHECK_THROWS_AS(st.witness(), LogicFault);
  CHECK_THROWS_AS(dep.gap(), LogicFault);
  CHECK_THROWS_AS(classify(rv({1}), rv({1, 2})), DimensionError);
}

TEST_CASE("dependent witness scales with the pair") {
  Rng rng(105);
  for (int i = 0; i < 400; ++i) {
    std::size_t dim = 1 + static_cast<std::size_t>(rng.int_between(0, 5));
    Rat a;
    auto [u, v] = dependent_pair(rng, dim, &a);
    CsCertificate cert = classify(u, v);
    if (zvecp(u)) {
      CHECK(cert.kind() == CsCertificate::Kind::ZeroU);
      continue;
    }
    REQUIRE(cert.kind() == CsCertificate::Kind::Dependent);
    REQUIRE(cert.witness() == a);

    Rat c = random_rat(rng, 20);
    if (c.is_zero()) continue;
    CsCertificate scaled = classify(scalar_mul(c, u), v);
    REQUIRE(scaled.kind() == CsCertificate::Kind::Dependent);
    REQUIRE(scaled.witness() == c * a);
  }
}

TEST_CASE("certificate verification accepts the classifier and rejects wrong claims") {
  Rng rng(106);
  for (int i = 0; i < 600; ++i) {
    std::size_t dim = static_cast<std::size_t>(rng.int_between(0, 6));
    RatVec u, v;
    if (dim > 0 && rng.chance(3)) {
      auto pair = dependent_pair(rng, dim, nullptr);
      u = pair.first;
      v = pair.second;
    } else {
      u = random_rat_vec(rng, dim, 60);
      v = random_rat_vec(rng, dim, 60);
    }
    REQUIRE(verify_certificate(u, v, classify(u, v)));
  }

  CHECK_FALSE(verify_certificate(rv({1, 2}), rv({1, 2}), CsCertificate::dependent(Rat(2))));
  CHECK_FALSE(verify_certificate(rv({1, 2}), rv({2, 1}), CsCertificate::strict(Rat(8))));
  CHECK_FALSE(verify_certificate(rv({1, 2}), rv({2, 1}), CsCertificate::strict(Rat(-9))));
  CHECK_FALSE(verify_certificate(rv({1, 0}), rv({0, 0}), CsCertificate::zero_u()));
  CHECK_FALSE(verify_certificate(rv({1, 2}), rv({2, 1}), CsCertificate::zero_v()));
  CHECK(verify_certificate(rv({0, 0}), rv({2, 1}), CsCertificate::zero_u()));
  CHECK_THROWS_AS(verify_certificate(rv({1}), rv({1, 2}), CsCertificate::zero_u()),
                  DimensionError);
}

TEST_CASE("first-ratio witness agrees with the projection witness") {
  CHECK(first_ratio_witness(rv({2, 4}), rv({1, 2})) == Rat(2));
  CHECK(first_ratio_witness(rv({5, 7}), rv({0, 2})) == Rat(7, 2));
  CHECK_THROWS_AS(first_ratio_witness(rv({1, 2}), rv({0, 0})), DomainError);

  Rng rng(107);
  for (int i = 0; i < 500; ++i) {
    std::size_t dim = 1 + static_cast<std::size_t>(rng.int_between(0, 5));
    auto [u, v] = dependent_pair(rng, dim, nullptr);
    if (zvecp(u)) continue;
    CsCertificate cert = classify(u, v);
    REQUIRE(cert.kind() == CsCertificate::Kind::Dependent);
    REQUIRE(first_ratio_witness(u, v) == cert.witness());
  }
}

TEST_CASE("replay on a strict pair") {
  ReplayReport rep = replay_proof(rv({1, 2}), rv({2, 1}));
  CHECK_FALSE(rep.zero_v_branch);
  REQUIRE(rep.witness.has_value());
  CHECK(*rep.witness == Rat(4, 5));
  REQUIRE(rep.steps.size() == 4);
  CHECK(rep.steps[0].name == "difference_norm_sq_expansion");
  CHECK(rep.steps[0].lhs == std::variant<Rat, RatVec>(Rat(2)));
  CHECK(rep.steps[1].name == "residual_norm_sq_nonnegative");
  CHECK(rep.steps[1].rhs == std::variant<Rat, RatVec>(Rat(9, 5)));
  CHECK(rep.steps[1].relation == StepRelation::LessEq);
  CHECK(rep.steps[2].name == "residual_norm_sq_value");
  CHECK(rep.steps[2].lhs == std::variant<Rat, RatVec>(Rat(9, 5)));
  CHECK(rep.steps[2].rhs == std::variant<Rat, RatVec>(Rat(9, 5)));
  CHECK(rep.steps[3].name == "squared_inequality");
  CHECK(rep.steps[3].lhs == std::variant<Rat, RatVec>(Rat(16)));
  CHECK(rep.steps[3].rhs == std::variant<Rat, RatVec>(Rat(25)));
  CHECK(rep.all_hold());
}

TEST_CASE("replay on an equality pair recovers the dependence") {
  RatVec v = rv({1, 2});
  ReplayReport rep = replay_proof(v, v);
  REQUIRE(rep.witness.has_value());
  CHECK(*rep.witness == Rat(1));
  REQUIRE(rep.steps.size() == 5);
  CHECK(rep.steps[4].name == "equality_gives_dependence");
  CHECK(rep.steps[4].lhs == std::variant<Rat, RatVec>(v));
  CHECK(rep.steps[4].rhs == std::variant<Rat, RatVec>(v));
  CHECK(rep.all_hold());
}

TEST_CASE("replay collapses on a zero second vector") {
  ReplayReport rep = replay_proof(rv({3, 4}), rv({0, 0}));
  CHECK(rep.zero_v_branch);
  CHECK_FALSE(rep.witness.has_value());
  REQUIRE(rep.steps.size() == 3);
  CHECK(rep.steps[1].name == "zero_v_inner_product");
  CHECK(rep.steps[2].name == "squared_inequality_trivial");
  CHECK(rep.all_hold());
  CHECK_THROWS_AS(replay_proof(rv({1}), rv({1, 2})), DimensionError);
}

TEST_CASE("replay holds on random pairs") {
  Rng rng(108);
  for (int i = 0; i < 1000; ++i) {
    std::size_t dim = static_cast<std::size_t>(rng.int_between(0, 8));
    RatVec u = random_rat_vec(rng, dim, 100);
    RatVec v = random_rat_vec(rng, dim, 100);
    ReplayReport rep = replay_proof(u, v);
    REQUIRE(rep.all_hold());
    REQUIRE(rep.zero_v_branch == zvecp(v));
  }
}

TEST_CASE("triangle inequality on known triples") {
  CHECK(triangle_holds(rv({0, 0}), rv({3, 4}), rv({1, 1})));
  CHECK(triangle_holds(rv({0}), rv({1}), rv({5})));
  CHECK(triangle_holds(RatVec{}, RatVec{}, RatVec{}));
  CHECK_THROWS_AS(triangle_holds(rv({1}), rv({1, 2}), rv({1})), DimensionError);
  CHECK_THROWS_AS(triangle_holds(rv({1}), rv({1}), rv({1, 2})), DimensionError);
}

TEST_CASE("triangle equality picks out points on the segment") {
  CHECK(triangle_equality(rv({0, 0}), rv({3, 3}), rv({1, 1})));
  CHECK(triangle_equality(rv({0, 0}), rv({3, 3}), rv({0, 0})));
  CHECK(triangle_equality(rv({0, 0}), rv({3, 3}), rv({3, 3})));
  CHECK_FALSE(triangle_equality(rv({0, 0}), rv({3, 4}), rv({1, 1})));
  // |x-y| equals the distance difference here, not the sum.
  CHECK_FALSE(triangle_equality(rv({0}), rv({1}), rv({5})));

  Rng rng(109);
  for (int i = 0; i < 400; ++i) {
    std::size_t dim = 1 + static_cast<std::size_t>(rng.int_between(0, 5));
    RatVec x = random_rat_vec(rng, dim, 30);
    RatVec y = random_rat_vec(rng, dim, 30);
    Rat t(rng.int_between(0, 8), 8);
    RatVec z = vec_add(x, scalar_mul(t, vec_sub(y, x)));
    REQUIRE(triangle_equality(x, y, z));
    REQUIRE(triangle_holds(x, y, z));
  }
}

TEST_CASE("triangle holds on random triples") {
  Rng rng(110);
  for (int i = 0; i < 1500; ++i) {
    std::size_t dim = static_cast<std::size_t>(rng.int_between(0, 8));
    RatVec x = random_rat_vec(rng, dim, 100);
    RatVec y = random_rat_vec(rng, dim, 100);
    RatVec z = random_rat_vec(rng, dim, 100);
    REQUIRE(triangle_holds(x, y, z));
  }
}

TEST_CASE("metric axiom report") {
  MetricAxiomsReport rep = metric_axioms_report(rv({0, 0}), rv({3, 4}), rv({1, 1}));
  CHECK(rep.commutative);
  CHECK(rep.positive_definite);
  CHECK(rep.triangle);
  CHECK_FALSE(rep.triangle_is_equality);
  CHECK(rep.all());

  MetricAxiomsReport collinear = metric_axioms_report(rv({0, 0}), rv({3, 3}), rv({1, 1}));
  CHECK(collinear.all());
  CHECK(collinear.triangle_is_equality);

  Rng rng(111);
  for (int i = 0; i < 800; ++i) {
    std::size_t dim = static_cast<std::size_t>(rng.int_between(0, 8));
    RatVec x = random_rat_vec(rng, dim, 100);
    RatVec y = random_rat_vec(rng, dim, 100);
    RatVec z = random_rat_vec(rng, dim, 100);
    REQUIRE(metric_axioms_report(x, y, z).all());
  }
}

TEST_CASE("triangle decision agrees with a root-approximation oracle") {
  // The decision procedure never computes roots; this cross-checks it
  // against 64-bit-tight rational root approximations at dimension 5.
  const unsigned p = 64;
  const Rat tol = Rat(3) / Rat(BigInt(1) << p);
  Rng rng(112);
  for (int i = 0; i < 300; ++i) {
    RatVec x = random_rat_vec(rng, 5, 100);
    RatVec y = random_rat_vec(rng, 5, 100);
    RatVec z = random_rat_vec(rng, 5, 100);
    Rat sum = approx_sqrt(metric_sq(x, z), p) + approx_sqrt(metric_sq(z, y), p);
    Rat direct = approx_sqrt(metric_sq(x, y), p);
    REQUIRE(triangle_holds(x, y, z));
    // A violation visible beyond the approximation error would contradict it.
    REQUIRE(direct <= sum + tol);
  }
}
