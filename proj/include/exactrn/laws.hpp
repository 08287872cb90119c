#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "exactrn/hyper.hpp"
#include "exactrn/random.hpp"
#include "exactrn/rat.hpp"
#include "exactrn/vec.hpp"

namespace exactrn {

/// One checkable algebraic law. The callback draws its own inputs from the
/// stream so a battery is reproducible from (law list, seed) alone.
struct Law {
  std::string name;
  std::function<bool(Rng&, std::size_t dim, std::int64_t magnitude)> check;
};

struct LawResult {
  std::string name;
  std::size_t cases{};
  std::size_t failures{};

  bool passed() const { return failures == 0; }
};

/// Runs one law for `cases` draws, dimension sampled uniformly from
/// [dim_lo, dim_hi] per case.
inline LawResult run_law(const Law& law, Rng rng, std::size_t cases,
                         std::size_t dim_lo, std::size_t dim_hi,
                         std::int64_t magnitude) {
  LawResult result;
  result.name = law.name;
  result.cases = cases;
  for (std::size_t i = 0; i < cases; ++i) {
    std::size_t dim = static_cast<std::size_t>(
        rng.int_between(static_cast<std::int64_t>(dim_lo),
                        static_cast<std::int64_t>(dim_hi)));
    if (!law.check(rng, dim, magnitude)) ++result.failures;
  }
  return result;
}

template <typename S>
struct FieldSample;

template <>
struct FieldSample<Rat> {
  static constexpr const char* name = "rational";
  static Rat scalar(Rng& rng, std::int64_t m) { return random_rat(rng, m); }
  static Vec<Rat> vector(Rng& rng, std::size_t dim, std::int64_t m) {
    return random_rat_vec(rng, dim, m);
  }
};

template <>
struct FieldSample<Hyper> {
  static constexpr const char* name = "hyperreal";
  static Hyper scalar(Rng& rng, std::int64_t m) {
    return random_hyper(rng, m);
  }
  static Vec<Hyper> vector(Rng& rng, std::size_t dim, std::int64_t m) {
    return random_hyper_vec(rng, dim, m);
  }
};

template <typename S>
const char* field_name() {
  return FieldSample<S>::name;
}

/// The vector space and inner product axioms plus the subtraction
/// equivalence, checked as structural equalities of exact values.
template <typename S>
std::vector<Law> vector_space_core_laws() {
  using F = FieldSample<S>;
  std::vector<Law> laws;

  laws.push_back({"add_associativity", [](Rng& g, std::size_t d, std::int64_t m) {
    auto u = F::vector(g, d, m), v = F::vector(g, d, m), w = F::vector(g, d, m);
    return vec_add(vec_add(u, v), w) == vec_add(u, vec_add(v, w));
  }});
  laws.push_back({"add_commutativity", [](Rng& g, std::size_t d, std::int64_t m) {
    auto u = F::vector(g, d, m), v = F::vector(g, d, m);
    return vec_add(u, v) == vec_add(v, u);
  }});
  laws.push_back({"add_identity", [](Rng& g, std::size_t d, std::int64_t m) {
    auto u = F::vector(g, d, m);
    return vec_add(u, Vec<S>::zero(d)) == u;
  }});
  laws.push_back({"add_inverse", [](Rng& g, std::size_t d, std::int64_t m) {
    auto u = F::vector(g, d, m);
    return zvecp(vec_add(u, scalar_mul(S(-1), u)));
  }});
  laws.push_back({"scalar_mul_compatibility", [](Rng& g, std::size_t d, std::int64_t m) {
    auto a = F::scalar(g, m), b = F::scalar(g, m);
    auto u = F::vector(g, d, m);
    return scalar_mul(a, scalar_mul(b, u)) == scalar_mul(a * b, u);
  }});
  laws.push_back({"scalar_mul_identity", [](Rng& g, std::size_t d, std::int64_t m) {
    auto u = F::vector(g, d, m);
    return scalar_mul(S(1), u) == u;
  }});
  laws.push_back({"distributivity_over_vector_add", [](Rng& g, std::size_t d, std::int64_t m) {
    auto a = F::scalar(g, m);
    auto u = F::vector(g, d, m), v = F::vector(g, d, m);
    return scalar_mul(a, vec_add(u, v)) ==
           vec_add(scalar_mul(a, u), scalar_mul(a, v));
  }});
  laws.push_back({"distributivity_over_scalar_add", [](Rng& g, std::size_t d, std::int64_t m) {
    auto a = F::scalar(g, m), b = F::scalar(g, m);
    auto u = F::vector(g, d, m);
    return scalar_mul(a + b, u) ==
           vec_add(scalar_mul(a, u), scalar_mul(b, u));
  }});
  laws.push_back({"dot_linearity_first", [](Rng& g, std::size_t d, std::int64_t m) {
    auto a = F::scalar(g, m);
    auto u = F::vector(g, d, m), v = F::vector(g, d, m), w = F::vector(g, d, m);
    return dot(vec_add(scalar_mul(a, u), v), w) == a * dot(u, w) + dot(v, w);
  }});
  laws.push_back({"dot_commutativity", [](Rng& g, std::size_t d, std::int64_t m) {
    auto u = F::vector(g, d, m), v = F::vector(g, d, m);
    return dot(u, v) == dot(v, u);
  }});
  laws.push_back({"dot_positive_definite", [](Rng& g, std::size_t d, std::int64_t m) {
    auto u = F::vector(g, d, m);
    S q = dot(u, u);
    if (q < S(0)) return false;
    return (q == S(0)) == zvecp(u);
  }});
  laws.push_back({"sub_matches_direct", [](Rng& g, std::size_t d, std::int64_t m) {
    auto u = F::vector(g, d, m), v = F::vector(g, d, m);
    return vec_sub(u, v) == vec_sub_direct(u, v);
  }});

  return laws;
}

/// Derived identities kept alongside the axioms: subtraction
/// anticommutativity, second-slot linearity both directly and through the
/// commutativity chain, and the max_abs sandwich.
template <typename S>
std::vector<Law> vector_space_extra_laws() {
  using F = FieldSample<S>;
  std::vector<Law> laws;

  laws.push_back({"sub_anticommutativity", [](Rng& g, std::size_t d, std::int64_t m) {
    auto u = F::vector(g, d, m), v = F::vector(g, d, m);
    return vec_sub(u, v) == scalar_mul(S(-1), vec_sub(v, u));
  }});
  laws.push_back({"dot_linearity_second", [](Rng& g, std::size_t d, std::int64_t m) {
    auto a = F::scalar(g, m);
    auto u = F::vector(g, d, m), v = F::vector(g, d, m);
    return dot(u, scalar_mul(a, v)) == a * dot(u, v);
  }});
  laws.push_back({"dot_linearity_second_chain", [](Rng& g, std::size_t d, std::int64_t m) {
    auto a = F::scalar(g, m);
    auto u = F::vector(g, d, m), v = F::vector(g, d, m);
    auto av = scalar_mul(a, v);
    // <u,av> = <av,u> = a<v,u> = a<u,v>, link by link.
    return dot(u, av) == dot(av, u) && dot(av, u) == a * dot(v, u) &&
           a * dot(v, u) == a * dot(u, v);
  }});
  laws.push_back({"max_abs_bounds", [](Rng& g, std::size_t d, std::int64_t m) {
    auto z = F::vector(g, d, m);
    S big = max_abs(z);
    if (!(big * big <= norm_sq(z))) return false;
    for (const S& entry : z.entries()) {
      if (!(abs(entry) <= big)) return false;
    }
    return true;
  }});

  return laws;
}

template <typename S>
std::vector<Law> vector_space_laws() {
  auto laws = vector_space_core_laws<S>();
  auto extras = vector_space_extra_laws<S>();
  laws.insert(laws.end(), extras.begin(), extras.end());
  return laws;
}

/// Ordered-field laws of the hyperreal scalar (inversion excluded; the
/// truncated inverse has its own residual law below), plus infinitesimal
/// closure, the standard-part homomorphism, and the squaring equivalence
/// that lets squared metrics stand in for metrics.
inline std::vector<Law> hyper_laws() {
  std::vector<Law> laws;

  laws.push_back({"add_associativity", [](Rng& g, std::size_t, std::int64_t m) {
    Hyper x = random_hyper(g, m), y = random_hyper(g, m), z = random_hyper(g, m);
    return (x + y) + z == x + (y + z);
  }});
  laws.push_back({"add_commutativity", [](Rng& g, std::size_t, std::int64_t m) {
    Hyper x = random_hyper(g, m), y = random_hyper(g, m);
    return x + y == y + x;
  }});
  laws.push_back({"add_identity", [](Rng& g, std::size_t, std::int64_t m) {
    Hyper x = random_hyper(g, m);
    return x + Hyper() == x;
  }});
  laws.push_back({"add_inverse", [](Rng& g, std::size_t, std::int64_t m) {
    Hyper x = random_hyper(g, m);
    return (x + (-x)).is_zero();
  }});
  laws.push_back({"mul_associativity", [](Rng& g, std::size_t, std::int64_t m) {
    Hyper x = random_hyper(g, m), y = random_hyper(g, m), z = random_hyper(g, m);
    return (x * y) * z == x * (y * z);
  }});
  laws.push_back({"mul_commutativity", [](Rng& g, std::size_t, std::int64_t m) {
    Hyper x = random_hyper(g, m), y = random_hyper(g, m);
    return x * y == y * x;
  }});
  laws.push_back({"mul_identity", [](Rng& g, std::size_t, std::int64_t m) {
    Hyper x = random_hyper(g, m);
    return x * Hyper(1) == x;
  }});
  laws.push_back({"distributivity", [](Rng& g, std::size_t, std::int64_t m) {
    Hyper x = random_hyper(g, m), y = random_hyper(g, m), z = random_hyper(g, m);
    return x * (y + z) == x * y + x * z;
  }});
  laws.push_back({"order_translation", [](Rng& g, std::size_t, std::int64_t m) {
    Hyper x = random_hyper(g, m), y = random_hyper(g, m), z = random_hyper(g, m);
    return cmp(x, y) == cmp(x + z, y + z);
  }});
  laws.push_back({"order_mul_positive", [](Rng& g, std::size_t, std::int64_t m) {
    Hyper x = random_hyper(g, m), y = random_hyper(g, m);
    if (!(x.sign() > 0 && y.sign() > 0)) return true;
    return (x * y).sign() > 0;
  }});
  laws.push_back({"order_trichotomy", [](Rng& g, std::size_t, std::int64_t m) {
    Hyper x = random_hyper(g, m), y = random_hyper(g, m);
    int lt = x < y, eq = x == y, gt = x > y;
    return lt + eq + gt == 1;
  }});
  laws.push_back({"order_transitivity", [](Rng& g, std::size_t, std::int64_t m) {
    Hyper x = random_hyper(g, m), y = random_hyper(g, m), z = random_hyper(g, m);
    if (!(x < y && y < z)) return true;
    return x < z;
  }});
  laws.push_back({"small_add_closure", [](Rng& g, std::size_t, std::int64_t m) {
    Hyper x = random_small_hyper(g, m), y = random_small_hyper(g, m);
    return x.is_i_small() && y.is_i_small() && (x + y).is_i_small();
  }});
  laws.push_back({"small_mul_closure", [](Rng& g, std::size_t, std::int64_t m) {
    Hyper x = random_small_hyper(g, m), y = random_small_hyper(g, m);
    return (x * y).is_i_small();
  }});
  laws.push_back({"small_mul_limited_closure", [](Rng& g, std::size_t, std::int64_t m) {
    Hyper x = random_small_hyper(g, m), y = random_limited_hyper(g, m);
    return y.is_i_limited() && (x * y).is_i_small();
  }});
  laws.push_back({"standard_part_additive", [](Rng& g, std::size_t, std::int64_t m) {
    Hyper x = random_limited_hyper(g, m), y = random_limited_hyper(g, m);
    return (x + y).standard_part() == x.standard_part() + y.standard_part();
  }});
  laws.push_back({"standard_part_multiplicative", [](Rng& g, std::size_t, std::int64_t m) {
    Hyper x = random_limited_hyper(g, m), y = random_limited_hyper(g, m);
    return (x * y).standard_part() == x.standard_part() * y.standard_part();
  }});
  laws.push_back({"square_small_equivalence", [](Rng& g, std::size_t, std::int64_t m) {
    Hyper x = abs(random_hyper(g, m));
    return x.is_i_small() == (x * x).is_i_small();
  }});

  return laws;
}

/// x * inverse(x, K) must miss 1 only above exponent K. Zero inputs are
/// resampled, so every case is substantive.
inline Law hyper_inverse_residual_law(int order_k) {
  return {"inverse_residual_order_" + std::to_string(order_k),
          [order_k](Rng& g, std::size_t, std::int64_t m) {
            Hyper x;
            do {
              x = random_hyper(g, m);
            } while (x.is_zero());
            Hyper r = x * x.inverse(order_k) - Hyper(1);
            return r.is_zero() || *r.valuation() > order_k;
          }};
}

}  // namespace exactrn
