#include "exactrn/cauchy_schwarz.hpp"

namespace exactrn {

const Rat& CsCertificate::witness() const {
  if (kind_ != Kind::Dependent) {
    throw LogicFault("witness() on a non-dependent certificate");
  }
  return value_;
}

const Rat& CsCertificate::gap() const {
  if (kind_ != Kind::Strict) {
    throw LogicFault("gap() on a non-strict certificate");
  }
  return value_;
}

std::string CsCertificate::kind_name() const {
  switch (kind_) {
    case Kind::ZeroU: return "zero_u";
    case Kind::ZeroV: return "zero_v";
    case Kind::Dependent: return "dependent";
    case Kind::Strict: return "strict";
  }
  throw LogicFault("unreachable certificate kind");
}

bool cs2_holds(const RatVec& u, const RatVec& v) {
  detail::require_same_dim(u.dim(), v.dim(), "cs2_holds");
  Rat uv = dot(u, v);
  Rat rhs_sq = dot(u, u) * dot(v, v);
  // |<u,v>| <= sqrt(rhs_sq) iff not(sqrt(rhs_sq) < |<u,v>|); both sides
  // compared through their squares, no root ever materialized.
  bool ok = !sqrt_leq(rhs_sq, abs(uv)) || uv * uv == rhs_sq;
  if (!ok) {
    throw LogicFault("squared-domain comparison failed on valid input");
  }
  return ok;
}

CsCertificate classify(const RatVec& u, const RatVec& v) {
  detail::require_same_dim(u.dim(), v.dim(), "classify");
  if (zvecp(u)) return CsCertificate::zero_u();
  if (zvecp(v)) return CsCertificate::zero_v();
  Rat gap = cs1_gap(u, v);
  if (gap.is_zero()) {
    Rat a = dot(u, v) / dot(v, v);
    if (u != scalar_mul(a, v)) {
      throw LogicFault("zero gap but witness fails the componentwise check");
    }
    return CsCertificate::dependent(std::move(a));
  }
  if (gap.sign() < 0) {
    throw LogicFault("negative gap computed for " + u.str() + ", " + v.str());
  }
  return CsCertificate::strict(std::move(gap));
}

bool verify_certificate(const RatVec& u, const RatVec& v, const CsCertificate& cert) {
  detail::require_same_dim(u.dim(), v.dim(), "verify_certificate");
  switch (cert.kind()) {
    case CsCertificate::Kind::ZeroU:
      return zvecp(u);
    case CsCertificate::Kind::ZeroV:
      return zvecp(v);
    case CsCertificate::Kind::Dependent:
      return u == scalar_mul(cert.witness(), v);
    case CsCertificate::Kind::Strict:
      return cert.gap().sign() > 0 && cert.gap() == cs1_gap(u, v);
  }
  throw LogicFault("unreachable certificate kind");
}

Rat first_ratio_witness(const RatVec& u, const RatVec& v) {
  detail::require_same_dim(u.dim(), v.dim(), "first_ratio_witness");
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (!v[i].is_zero()) return u[i] / v[i];
  }
  throw DomainError("first_ratio_witness needs a nonzero v");
}

bool ReplayReport::all_hold() const {
  for (const ReplayStep& step : steps) {
    if (!step.holds) return false;
  }
  return true;
}

namespace {

bool relation_evaluates(const std::variant<Rat, RatVec>& lhs,
                        const std::variant<Rat, RatVec>& rhs, StepRelation rel) {
  if (rel == StepRelation::Equal) return lhs == rhs;
  return std::get<Rat>(lhs) <= std::get<Rat>(rhs);
}

void push_step(ReplayReport& report, std::string name, std::variant<Rat, RatVec> lhs,
               std::variant<Rat, RatVec> rhs, StepRelation rel) {
  bool holds = relation_evaluates(lhs, rhs, rel);
  report.steps.push_back({std::move(name), std::move(lhs), std::move(rhs), rel, holds});
}

}  // namespace

ReplayReport replay_proof(const RatVec& u, const RatVec& v) {
  detail::require_same_dim(u.dim(), v.dim(), "replay_proof");
  ReplayReport report;

  Rat uu = dot(u, u);
  Rat uv = dot(u, v);
  Rat vv = dot(v, v);

  push_step(report, "difference_norm_sq_expansion", norm_sq(vec_sub(u, v)),
            uu - Rat(2) * uv + vv, StepRelation::Equal);

  if (zvecp(v)) {
    report.zero_v_branch = true;
    push_step(report, "zero_v_inner_product", uv, Rat(0), StepRelation::Equal);
    push_step(report, "squared_inequality_trivial", uv * uv, uu * vv, StepRelation::LessEq);
    return report;
  }

  Rat a = uv / vv;
  report.witness = a;
  Rat residual = norm_sq(vec_sub(u, scalar_mul(a, v)));

  push_step(report, "residual_norm_sq_nonnegative", Rat(0), residual, StepRelation::LessEq);
  push_step(report, "residual_norm_sq_value", residual, uu - uv * uv / vv, StepRelation::Equal);
  push_step(report, "squared_inequality", uv * uv, uu * vv, StepRelation::LessEq);
  if (uv * uv == uu * vv) {
    push_step(report, "equality_gives_dependence", u, scalar_mul(a, v), StepRelation::Equal);
  }
  return report;
}

bool triangle_holds(const RatVec& x, const RatVec& y, const RatVec& z) {
  detail::require_same_dim(x.dim(), y.dim(), "triangle_holds");
  detail::require_same_dim(x.dim(), z.dim(), "triangle_holds");
  bool ok = sqrt_sum_leq(metric_sq(x, y), metric_sq(x, z), metric_sq(z, y));
  if (!ok) {
    throw LogicFault("triangle inequality failed on valid input");
  }
  return ok;
}

bool triangle_equality(const RatVec& x, const RatVec& y, const RatVec& z) {
  detail::require_same_dim(x.dim(), y.dim(), "triangle_equality");
  detail::require_same_dim(x.dim(), z.dim(), "triangle_equality");
  return sqrt_sum_eq(metric_sq(x, y), metric_sq(x, z), metric_sq(z, y));
}

MetricAxiomsReport metric_axioms_report(const RatVec& x, const RatVec& y, const RatVec& z) {
  detail::require_same_dim(x.dim(), y.dim(), "metric_axioms_report");
  detail::require_same_dim(x.dim(), z.dim(), "metric_axioms_report");
  MetricAxiomsReport report;
  Rat dxy = metric_sq(x, y);
  report.commutative = dxy == metric_sq(y, x);
  report.positive_definite = dxy.sign() >= 0 && (dxy.is_zero() == (x == y));
  report.triangle = triangle_holds(x, y, z);
  report.triangle_is_equality = triangle_equality(x, y, z);
  return report;
}

std::string relation_symbol(StepRelation rel) {
  return rel == StepRelation::Equal ? "=" : "<=";
}

std::string replay_value_str(const std::variant<Rat, RatVec>& value) {
  if (std::holds_alternative<Rat>(value)) return std::get<Rat>(value).str();
  return std::get<RatVec>(value).str();
}

}  // namespace exactrn
