#include "cli/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "json.hpp"

#include "exactrn/errors.hpp"

namespace exactrn::cli {
namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

[[noreturn]] void fail_line(std::size_t line_no, const std::string& what,
                            std::size_t column = 0) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what, column);
}

void skip_ws(const std::string& s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
    ++pos;
  }
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Rat parse_rat_token(const std::string& token, std::size_t line_no,
                    std::size_t column) {
  try {
    return Rat::parse(token);
  } catch (const ParseError&) {
    fail_line(line_no, "bad rational '" + token + "'", column);
  } catch (const DomainError&) {
    fail_line(line_no, "zero denominator in '" + token + "'", column);
  }
}

Vec<Rat> parse_bracket_vec(const std::string& s, std::size_t& pos,
                           std::size_t line_no) {
  skip_ws(s, pos);
  if (pos >= s.size() || s[pos] != '[') {
    fail_line(line_no, "expected '['", pos);
  }
  ++pos;
  std::vector<Rat> entries;
  skip_ws(s, pos);
  if (pos < s.size() && s[pos] == ']') {
    ++pos;
    return Vec<Rat>(std::move(entries));
  }
  for (;;) {
    skip_ws(s, pos);
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != ',' && s[pos] != ']') ++pos;
    if (pos >= s.size()) fail_line(line_no, "unterminated vector", start);
    std::string token = trim(std::string_view(s).substr(start, pos - start));
    if (token.empty()) fail_line(line_no, "empty vector entry", start);
    entries.push_back(parse_rat_token(token, line_no, start));
    if (s[pos] == ']') {
      ++pos;
      break;
    }
    ++pos;
  }
  return Vec<Rat>(std::move(entries));
}

long long parse_int_token(const std::string& s, std::size_t& pos,
                          std::size_t line_no, const char* what) {
  skip_ws(s, pos);
  std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    ++pos;
  }
  if (pos == start ||
      (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start])))) {
    fail_line(line_no, std::string("expected ") + what, start);
  }
  return std::stoll(s.substr(start, pos - start));
}

void expect_line_end(const std::string& s, std::size_t pos,
                     std::size_t line_no) {
  skip_ws(s, pos);
  if (pos != s.size()) fail_line(line_no, "trailing content", pos);
}

// Strips '#' comments; returns false for lines with nothing left.
bool significant_line(std::string& line) {
  if (auto hash = line.find('#'); hash != std::string::npos) {
    line.erase(hash);
  }
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) return true;
  }
  return false;
}

template <typename Fn>
void for_each_line(const std::string& text, Fn&& fn) {
  std::istringstream stream(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!significant_line(line)) continue;
    fn(line, line_no);
  }
}

json parse_json_doc(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what(), 0);
  }
}

// Type errors raised inside nlohmann getters are input problems, so they
// must leave here as ParseError.
template <typename Fn>
auto json_guard(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw ParseError(e.what(), 0);
  }
}

Rat rat_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      return Rat::parse(s);
    } catch (const ParseError&) {
      throw ParseError("bad rational \"" + s + "\"", 0);
    } catch (const DomainError&) {
      throw ParseError("zero denominator in \"" + s + "\"", 0);
    }
  }
  if (j.is_number_integer()) return Rat::parse(j.dump());
  if (j.is_number_float()) {
    throw ParseError(
        "non-integer number " + j.dump() +
            "; write rationals as strings like \"3/4\" to stay exact",
        0);
  }
  throw ParseError("expected a rational, got " + j.dump(), 0);
}

Vec<Rat> vec_from_json(const json& j, const char* what) {
  if (!j.is_array()) {
    throw ParseError(std::string("expected an array for ") + what, 0);
  }
  std::vector<Rat> entries;
  entries.reserve(j.size());
  for (const json& item : j) entries.push_back(rat_from_json(item));
  return Vec<Rat>(std::move(entries));
}

const json& require_field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !j.is_object()) {
    throw ParseError(std::string("missing field \"") + key + "\"", 0);
  }
  return *it;
}

int order_from_json(const json& j) {
  if (!j.is_number_integer()) {
    throw ParseError("probe order k must be an integer", 0);
  }
  long long k = j.get<long long>();
  if (k < 1) throw ParseError("probe order k must be >= 1", 0);
  return static_cast<int>(k);
}

Expression builtin_from_json(const json& spec) {
  const std::string name = require_field(spec, "name").get<std::string>();
  if (name == "sum") {
    long long n = require_field(spec, "n").get<long long>();
    if (n < 0) throw ParseError("builtin sum requires n >= 0", 0);
    return sum_expr(static_cast<std::size_t>(n));
  }
  if (name == "prod2") return prod2_expr();
  if (name == "dot_fixed") {
    return dot_fixed_expr(vec_from_json(require_field(spec, "coeffs"), "coeffs"));
  }
  throw ParseError("unknown builtin \"" + name + "\"", 0);
}

Expression builtin_from_text(const std::string& line, std::size_t& pos,
                             std::size_t line_no) {
  skip_ws(line, pos);
  std::size_t start = pos;
  while (pos < line.size() &&
         !std::isspace(static_cast<unsigned char>(line[pos]))) {
    ++pos;
  }
  std::string name = line.substr(start, pos - start);
  if (name == "sum") {
    long long n = parse_int_token(line, pos, line_no, "builtin arity");
    if (n < 0) fail_line(line_no, "builtin sum requires n >= 0", start);
    return sum_expr(static_cast<std::size_t>(n));
  }
  if (name == "prod2") return prod2_expr();
  if (name == "dot_fixed") {
    return dot_fixed_expr(parse_bracket_vec(line, pos, line_no));
  }
  fail_line(line_no, "unknown builtin '" + name + "'", start);
}

}  // namespace

std::vector<VecPair> load_pairs(const std::string& path) {
  const std::string text = read_file(path);
  std::vector<VecPair> pairs;

  if (looks_like_json(text)) {
    return json_guard([&] {
      const json doc = parse_json_doc(text);
      const json& arr = require_field(doc, "pairs");
      if (!arr.is_array()) throw ParseError("\"pairs\" must be an array", 0);
      for (const json& item : arr) {
        pairs.push_back(VecPair{vec_from_json(require_field(item, "u"), "u"),
                                vec_from_json(require_field(item, "v"), "v")});
      }
      return std::move(pairs);
    });
  }

  for_each_line(text, [&](const std::string& line, std::size_t line_no) {
    std::size_t pos = 0;
    Vec<Rat> u = parse_bracket_vec(line, pos, line_no);
    Vec<Rat> v = parse_bracket_vec(line, pos, line_no);
    expect_line_end(line, pos, line_no);
    pairs.push_back(VecPair{std::move(u), std::move(v)});
  });
  return pairs;
}

std::vector<VecTriple> load_triples(const std::string& path) {
  const std::string text = read_file(path);
  std::vector<VecTriple> triples;

  if (looks_like_json(text)) {
    return json_guard([&] {
      const json doc = parse_json_doc(text);
      const json& arr = require_field(doc, "triples");
      if (!arr.is_array()) throw ParseError("\"triples\" must be an array", 0);
      for (const json& item : arr) {
        triples.push_back(
            VecTriple{vec_from_json(require_field(item, "x"), "x"),
                      vec_from_json(require_field(item, "y"), "y"),
                      vec_from_json(require_field(item, "z"), "z")});
      }
      return std::move(triples);
    });
  }

  for_each_line(text, [&](const std::string& line, std::size_t line_no) {
    std::size_t pos = 0;
    Vec<Rat> x = parse_bracket_vec(line, pos, line_no);
    Vec<Rat> y = parse_bracket_vec(line, pos, line_no);
    Vec<Rat> z = parse_bracket_vec(line, pos, line_no);
    expect_line_end(line, pos, line_no);
    triples.push_back(VecTriple{std::move(x), std::move(y), std::move(z)});
  });
  return triples;
}

ContinuityInput load_continuity(const std::string& path) {
  const std::string text = read_file(path);
  ContinuityInput input;
  bool have_expr = false;

  if (looks_like_json(text)) {
    return json_guard([&] {
      const json doc = parse_json_doc(text);
      if (doc.contains("builtin")) {
        input.expr = builtin_from_json(doc.at("builtin"));
      } else {
        const std::string src = require_field(doc, "expr").get<std::string>();
        long long arity = require_field(doc, "arity").get<long long>();
        if (arity < 0) throw ParseError("arity must be >= 0", 0);
        input.expr = parse_expr(src, static_cast<std::size_t>(arity));
      }
      input.expr_text = to_string(input.expr);
      if (doc.contains("probes")) {
        const json& probes = doc.at("probes");
        if (!probes.is_array()) {
          throw ParseError("\"probes\" must be an array", 0);
        }
        for (const json& item : probes) {
          input.probes.push_back(
              ProbeSpec{vec_from_json(require_field(item, "x"), "x"),
                        vec_from_json(require_field(item, "h"), "h"),
                        order_from_json(require_field(item, "k"))});
        }
      }
      return std::move(input);
    });
  }

  for_each_line(text, [&](const std::string& line, std::size_t line_no) {
    std::size_t pos = 0;
    skip_ws(line, pos);
    std::size_t start = pos;
    while (pos < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[pos]))) {
      ++pos;
    }
    const std::string keyword = line.substr(start, pos - start);

    if (keyword == "expr" || keyword == "builtin") {
      if (have_expr) fail_line(line_no, "second expression header", start);
      if (!input.probes.empty()) {
        fail_line(line_no, "expression header must precede probes", start);
      }
      if (keyword == "builtin") {
        input.expr = builtin_from_text(line, pos, line_no);
      } else {
        long long arity = parse_int_token(line, pos, line_no, "arity");
        if (arity < 0) fail_line(line_no, "arity must be >= 0", start);
        skip_ws(line, pos);
        if (pos >= line.size() || line[pos] != ':') {
          fail_line(line_no, "expected ':' after arity", pos);
        }
        ++pos;
        const std::string src = line.substr(pos);
        try {
          input.expr = parse_expr(src, static_cast<std::size_t>(arity));
        } catch (const ParseError& e) {
          fail_line(line_no, std::string("in expression: ") + e.what(),
                    pos + e.position());
        }
      }
      input.expr_text = to_string(input.expr);
      have_expr = true;
      return;
    }

    if (keyword == "probe") {
      if (!have_expr) fail_line(line_no, "probe before expression header", start);
      ProbeSpec spec;
      spec.x = parse_bracket_vec(line, pos, line_no);
      spec.h = parse_bracket_vec(line, pos, line_no);
      long long k = parse_int_token(line, pos, line_no, "probe order");
      if (k < 1) fail_line(line_no, "probe order k must be >= 1", start);
      spec.order = static_cast<int>(k);
      expect_line_end(line, pos, line_no);
      input.probes.push_back(std::move(spec));
      return;
    }

    fail_line(line_no, "expected 'expr', 'builtin', or 'probe'", start);
  });

  if (!have_expr) throw ParseError("no expression header in input", 0);
  return input;
}

}  // namespace exactrn::cli
