#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "exactrn/rat.hpp"
#include "exactrn/surd.hpp"
#include "exactrn/vec.hpp"

namespace exactrn {

using RatVec = Vec<Rat>;

/// Exact slack of the squared inequality: <u,u><v,v> - <u,v>^2. Nonnegative
/// for every pair of equal-dimension vectors, over any ordered scalar field.
template <ScalarField S>
S cs1_gap(const Vec<S>& u, const Vec<S>& v) {
  detail::require_same_dim(u.dim(), v.dim(), "cs1_gap");
  S uv = dot(u, v);
  return dot(u, u) * dot(v, v) - uv * uv;
}

/// Decides |<u,v>| <= ||u||*||v|| in the squared domain (no roots are ever
/// materialized). True on every valid input; a false comparison would be an
/// implementation bug and throws LogicFault instead of returning.
bool cs2_holds(const RatVec& u, const RatVec& v);

/// Witness for the equality case of the squared inequality. Dependent(a)
/// claims u == a*v componentwise; Strict(gap) claims gap == cs1_gap(u,v) > 0.
class CsCertificate {
 public:
  enum class Kind { ZeroU, ZeroV, Dependent, Strict };

  static CsCertificate zero_u() { return CsCertificate(Kind::ZeroU, Rat(0)); }
  static CsCertificate zero_v() { return CsCertificate(Kind::ZeroV, Rat(0)); }
  static CsCertificate dependent(Rat witness) {
    return CsCertificate(Kind::Dependent, std::move(witness));
  }
  static CsCertificate strict(Rat gap) { return CsCertificate(Kind::Strict, std::move(gap)); }

  Kind kind() const { return kind_; }
  bool is_equality_case() const { return kind_ != Kind::Strict; }
  /// Dependence coefficient; only meaningful for Dependent.
  const Rat& witness() const;
  /// Exact positive slack; only meaningful for Strict.
  const Rat& gap() const;

  /// "zero_u" / "zero_v" / "dependent" / "strict".
  std::string kind_name() const;

  bool operator==(const CsCertificate&) const = default;

 private:
  CsCertificate(Kind kind, Rat value) : kind_(kind), value_(std::move(value)) {}

  Kind kind_;
  Rat value_;
};

/// Classifies the equality structure of a pair. Priority when both vectors
/// vanish is ZeroU, then ZeroV; a zero gap on nonzero vectors yields
/// Dependent(dot(u,v)/dot(v,v)) with the claim u == a*v re-checked before
/// returning (failure would be a bug and throws LogicFault).
CsCertificate classify(const RatVec& u, const RatVec& v);

/// Re-derives a certificate's claim from scratch: zero checks, componentwise
/// u == a*v, or gap recomputation with positivity.
bool verify_certificate(const RatVec& u, const RatVec& v, const CsCertificate& cert);

/// Alternative dependence witness: u_i / v_i at the first nonzero entry of v.
/// Used as a cross-check oracle against the computed dot(u,v)/dot(v,v)
/// witness. Requires v != 0.
Rat first_ratio_witness(const RatVec& u, const RatVec& v);

enum class StepRelation { Equal, LessEq };

/// One checked link of the algebraic chain. Values are scalars except for
/// the dependence step, which compares vectors.
struct ReplayStep {
  std::string name;
  std::variant<Rat, RatVec> lhs;
  std::variant<Rat, RatVec> rhs;
  StepRelation relation{StepRelation::Equal};
  bool holds{};
};

/// Concrete replay of the proof chain on one pair: expansion of the squared
/// difference, nonnegativity of the residual at the projection coefficient,
/// its closed form, the rearranged squared inequality, and (in the equality
/// case) the recovered dependence. The zero-v branch collapses to the
/// trivial checks.
struct ReplayReport {
  bool zero_v_branch{};
  std::optional<Rat> witness;  // dot(u,v)/dot(v,v) when v != 0
  std::vector<ReplayStep> steps;

  bool all_hold() const;
};

ReplayReport replay_proof(const RatVec& u, const RatVec& v);

/// Decides d(x,y) <= d(x,z) + d(z,y) through the squared metrics and the
/// exact surd comparison; floats are never involved. True on every valid
/// input (a false result throws LogicFault).
bool triangle_holds(const RatVec& x, const RatVec& y, const RatVec& z);

/// Exact equality case of the triangle inequality (collinear z between x
/// and y).
bool triangle_equality(const RatVec& x, const RatVec& y, const RatVec& z);

struct MetricAxiomsReport {
  bool commutative{};
  bool positive_definite{};
  bool triangle{};
  bool triangle_is_equality{};  // detail, not an axiom

  bool all() const { return commutative && positive_definite && triangle; }
};

/// Checks metric_sq commutativity, positive definiteness (zero exactly on
/// identical points), and the triangle inequality on one triple.
MetricAxiomsReport metric_axioms_report(const RatVec& x, const RatVec& y, const RatVec& z);

std::string relation_symbol(StepRelation rel);
std::string replay_value_str(const std::variant<Rat, RatVec>& value);

}  // namespace exactrn
