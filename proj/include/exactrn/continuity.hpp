#pragma once

#include <vector>

#include "exactrn/expr.hpp"
#include "exactrn/hyper.hpp"
#include "exactrn/rat.hpp"
#include "exactrn/vec.hpp"

namespace exactrn {

/// Embeds a rational point into the hyperreal plane, entrywise.
HyperVec lift(const Vec<Rat>& v);

/// One infinitesimal-displacement continuity check of f at x along h: the
/// probe point is y = x + e^order * h and diff = f(x) - f(y). The squared
/// displacement metric_sq(x, y) has valuation 2*order, so metric_sq_small
/// holds for every order >= 1; a violation then means f moved two
/// infinitely close points apart by a non-infinitesimal amount. Finding a
/// violation refutes continuity at x; finding none does not prove it.
struct ProbeResult {
  Vec<Rat> point;
  Vec<Rat> direction;
  int order{};
  Hyper diff;
  bool metric_sq_small{};
  bool diff_small{};
  bool inputs_limited{};

  bool violation() const { return metric_sq_small && !diff_small; }
};

/// Runs one probe. The direction must be nonzero and order >= 1; both point
/// and direction must match the expression arity.
ProbeResult probe(const Expression& e, const Vec<Rat>& x, const Vec<Rat>& h,
                  int order);

/// Per-entry view of the smallness bridge between metric_sq and entries.
struct EntriesSmallReport {
  bool metric_small{};
  std::vector<bool> entry_small;

  bool all_entries_small() const {
    for (bool b : entry_small)
      if (!b) return false;
    return true;
  }
};

/// Checks that an infinitesimal squared distance forces every entry
/// difference to be infinitesimal. The implication holds for all inputs
/// (squares cannot cancel), so a counterexample is a fault, not a result.
EntriesSmallReport entries_small_check(const HyperVec& u, const HyperVec& v);

}  // namespace exactrn
