#include "exactrn/continuity.hpp"

#include <string>

#include "exactrn/errors.hpp"

namespace exactrn {

HyperVec lift(const Vec<Rat>& v) {
  std::vector<Hyper> entries;
  entries.reserve(v.dim());
  for (const Rat& r : v.entries()) entries.emplace_back(r);
  return HyperVec(std::move(entries));
}

ProbeResult probe(const Expression& e, const Vec<Rat>& x, const Vec<Rat>& h,
                  int order) {
  if (order < 1) {
    throw DomainError("probe: order must be >= 1, got " +
                      std::to_string(order));
  }
  if (x.dim() != e.arity || h.dim() != e.arity) {
    throw DimensionError("probe: point/direction dimension must equal arity " +
                         std::to_string(e.arity));
  }
  if (zvecp(h)) throw DomainError("probe: zero direction");

  HyperVec hx = lift(x);
  HyperVec hy = vec_add(hx, scalar_mul(Hyper::eps(order), lift(h)));

  ProbeResult result;
  result.point = x;
  result.direction = h;
  result.order = order;

  Hyper fx = eval_expr(e, hx);
  Hyper fy = eval_expr(e, hy);
  result.diff = fx - fy;
  result.metric_sq_small = metric_sq(hx, hy).is_i_small();
  result.diff_small = result.diff.is_i_small();

  bool limited = fx.is_i_limited() && fy.is_i_limited();
  for (const Hyper& entry : hy.entries()) {
    limited = limited && entry.is_i_limited();
  }
  result.inputs_limited = limited;
  return result;
}

EntriesSmallReport entries_small_check(const HyperVec& u, const HyperVec& v) {
  EntriesSmallReport report;
  report.metric_small = metric_sq(u, v).is_i_small();
  report.entry_small.reserve(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    report.entry_small.push_back((u[i] - v[i]).is_i_small());
  }
  if (report.metric_small && !report.all_entries_small()) {
    throw LogicFault(
        "entries_small_check: infinitesimal metric with a non-small entry");
  }
  return report;
}

}  // namespace exactrn
