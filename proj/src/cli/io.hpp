#pragma once

#include <string>
#include <vector>

#include "exactrn/expr.hpp"
#include "exactrn/rat.hpp"
#include "exactrn/vec.hpp"

namespace exactrn::cli {

struct VecPair {
  Vec<Rat> u, v;
};

struct VecTriple {
  Vec<Rat> x, y, z;
};

struct ProbeSpec {
  Vec<Rat> x, h;
  int order{};
};

struct ContinuityInput {
  Expression expr;
  std::string expr_text;
  std::vector<ProbeSpec> probes;
};

/// Input loaders. Each accepts two formats, sniffed by the first
/// non-whitespace byte: '{' means a JSON document, anything else the
/// line-oriented text form ('#' starts a comment).
///
/// Text:  cs/metric files hold one pair/triple of bracketed vectors per
/// line, e.g. "[1, 2] [2, 1]". Continuity files open with one header line,
/// "expr ARITY: TEXT" or "builtin sum N | prod2 | dot_fixed [..]", followed
/// by "probe [x..] [h..] K" lines.
///
/// JSON:  {"pairs":[{"u":[..],"v":[..]}]}, {"triples":[{"x":..,"y":..,
/// "z":..}]}, and {"expr":"..","arity":n,"probes":[{"x":..,"h":..,"k":1}]}
/// (or "builtin":{"name":..,..} in place of expr/arity). Scalars are
/// integers or strings like "-3/4"; non-integer JSON numbers are rejected
/// so no value ever passes through floating point.
///
/// Loaders throw ParseError for malformed content and std::runtime_error
/// for unreadable files. Dimension agreement inside a pair/triple/probe is
/// not checked here; commands validate it per entry and keep going.
std::vector<VecPair> load_pairs(const std::string& path);
std::vector<VecTriple> load_triples(const std::string& path);
ContinuityInput load_continuity(const std::string& path);

}  // namespace exactrn::cli
