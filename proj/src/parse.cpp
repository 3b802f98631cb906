#include "algdyn/parse.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "json.hpp"

namespace algdyn {

namespace {

using json = nlohmann::json;

/// Recursive descent over + - * / ^, parentheses, rational literals and
/// implicit multiplication. `Value` needs the field operations.
template <class Value>
class ExprParser {
 public:
  using Lookup = std::function<std::optional<Value>(const std::string&, std::size_t pos)>;
  using Constant = std::function<Value(const Rational&)>;

  ExprParser(std::string_view text, Lookup lookup, Constant constant)
      : text_(text), lookup_(std::move(lookup)), constant_(std::move(constant)) {}

  Value parse() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
    Value v = expr();
    skip();
    if (pos_ < text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_primary() {
    skip();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Value d = unary();
        try {
          v = v / d;
        } catch (const DomainError&) {
          throw ParseError("division by zero", at);
        }
      } else if (starts_primary()) {
        v = v * power();
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept('-')) return constant_(Rational(0)) - unary();
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = primary();
    if (!accept('^')) return base;
    skip();
    const std::size_t at = pos_;
    bool negative = accept('-');
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer exponent", at);
    const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (e > 4096) throw ParseError("exponent too large", at);
    Value out = constant_(Rational(1));
    for (unsigned long i = 0; i < e; ++i) out = out * base;
    if (negative) {
      try {
        out = constant_(Rational(1)) / out;
      } catch (const DomainError&) {
        throw ParseError("negative power of zero", at);
      }
    }
    return out;
  }

  Value primary() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return constant_(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (auto v = lookup_(name, start)) return *v;
      throw ParseError("unknown variable '" + name + "'", start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  Lookup lookup_;
  Constant constant_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

/// Splits on top-level product separators: a standalone 'x' or '×'.
std::vector<std::pair<std::string, std::size_t>> split_product(std::string_view text) {
  std::vector<std::pair<std::string, std::size_t>> parts;
  int depth = 0;
  std::size_t start = 0;
  auto is_space = [&](std::size_t i) { return i >= text.size() || std::isspace(static_cast<unsigned char>(text[i])); };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (depth != 0) continue;
    std::size_t sep = 0;
    if (c == 'x' && i > 0 && is_space(i - 1) && is_space(i + 1)) sep = 1;
    if (text.substr(i, 2) == "\xC3\x97") sep = 2;
    if (sep == 0) continue;
    parts.emplace_back(std::string(text.substr(start, i - start)), start);
    start = i + sep;
    i += sep - 1;
  }
  parts.emplace_back(std::string(text.substr(start)), start);
  return parts;
}

Rational json_rational(const json& v, std::size_t pos) {
  try {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
  } catch (const ParseError&) {
  }
  throw ParseError("structure constant must be an integer or a \"a/b\" string", pos);
}

Algebra algebra_from_json(std::string_view text, std::size_t offset) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), offset + e.byte);
  }
  if (!doc.is_object() || !doc.contains("dim")) throw ParseError("algebra document needs a \"dim\" field", offset);
  const json& dim_v = doc["dim"];
  if (!dim_v.is_number_integer() || dim_v.get<long long>() < 1) throw ParseError("\"dim\" must be a positive integer", offset);
  const auto dim = static_cast<std::size_t>(dim_v.get<long long>());
  std::vector<std::string> names;
  if (doc.contains("names")) {
    if (!doc["names"].is_array()) throw ParseError("\"names\" must be a list of strings", offset);
    for (const auto& n : doc["names"]) {
      if (!n.is_string()) throw ParseError("\"names\" must be a list of strings", offset);
      names.push_back(n.get<std::string>());
    }
  } else {
    for (std::size_t i = 1; i <= dim; ++i) names.push_back("e" + std::to_string(i));
  }
  if (names.size() != dim) throw ParseError("\"names\" length differs from \"dim\"", offset);
  std::vector<RatMatrix> table(dim, RatMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)));
  if (doc.contains("constants")) {
    if (!doc["constants"].is_array()) throw ParseError("\"constants\" must be a list", offset);
    for (const auto& entry : doc["constants"]) {
      if (!entry.is_array() || entry.size() != 4) throw ParseError("each constant is [i, j, k, value]", offset);
      std::size_t idx[3];
      for (int r = 0; r < 3; ++r) {
        if (!entry[r].is_number_integer() || entry[r].get<long long>() < 0 ||
            static_cast<std::size_t>(entry[r].get<long long>()) >= dim)
          throw ParseError("constant index out of range", offset);
        idx[r] = static_cast<std::size_t>(entry[r].get<long long>());
      }
      table[idx[2]](static_cast<Eigen::Index>(idx[0]), static_cast<Eigen::Index>(idx[1])) = json_rational(entry[3], offset);
    }
  }
  try {
    Algebra v(std::move(names), std::move(table));
    if (doc.contains("blocks")) {
      std::vector<std::size_t> blocks;
      for (const auto& b : doc["blocks"]) blocks.push_back(b.get<std::size_t>());
      v.set_blocks(std::move(blocks));
    }
    return v;
  } catch (const DomainError& e) {
    throw ParseError(e.what(), offset);
  }
}

std::optional<std::size_t> parse_count(const std::string& s) {
  if (s.empty() || s.size() > 3) return std::nullopt;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  return std::stoul(s);
}

Algebra parse_factor(const std::string& raw, std::size_t offset) {
  std::size_t lead = 0;
  while (lead < raw.size() && std::isspace(static_cast<unsigned char>(raw[lead]))) ++lead;
  const std::string s = trim(raw);
  offset += lead;
  if (s.empty()) throw ParseError("empty algebra", offset);
  if (s.front() == '{') return algebra_from_json(s, offset);
  if (s.rfind("Mat(", 0) == 0 && s.back() == ')') {
    const auto n = parse_count(trim(s.substr(4, s.size() - 5)));
    if (!n || *n == 0) throw ParseError("Mat(n) needs a positive integer", offset + 4);
    return Algebra::matrices(*n);
  }
  if ((s.rfind("C^", 0) == 0 || s.rfind("Q^", 0) == 0)) {
    const auto n = parse_count(trim(s.substr(2)));
    if (!n || *n == 0) throw ParseError("C^n needs a positive integer", offset + 2);
    return Algebra::split(*n);
  }
  if ((s.rfind("Q[", 0) == 0 || s.rfind("C[", 0) == 0)) {
    const std::size_t close = s.find(']');
    if (close == std::string::npos) throw ParseError("expected ']'", offset + s.size());
    const std::string var = trim(s.substr(2, close - 2));
    if (var.empty() || !std::isalpha(static_cast<unsigned char>(var[0])))
      throw ParseError("expected a variable name", offset + 2);
    std::size_t i = close + 1;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size() || s[i] != '/') throw ParseError("expected '/' after the polynomial ring", offset + i);
    ++i;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size() || s[i] != '(' || s.back() != ')') throw ParseError("expected '(relation)'", offset + i);
    const std::string rel = s.substr(i + 1, s.size() - i - 2);
    UniRationalFunction r;
    try {
      r = ExprParser<UniRationalFunction>(
              rel,
              [&](const std::string& name, std::size_t) -> std::optional<UniRationalFunction> {
                if (name == var) return UniRationalFunction(UniPoly::identity());
                return std::nullopt;
              },
              [](const Rational& c) { return UniRationalFunction(UniPoly{c}); })
              .parse();
    } catch (const ParseError& e) {
      throw ParseError(e.message, offset + i + 1 + e.position);
    }
    if (!r.is_polynomial()) throw ParseError("relation must be a polynomial", offset + i + 1);
    if (r.num().degree() < 1) throw ParseError("modulus must have positive degree", offset + i + 1);
    return Algebra::quotient(r.num(), var);
  }
  throw ParseError("unrecognized algebra '" + s + "'", offset);
}

}  // namespace

Algebra parse_algebra(std::string_view text) {
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '{') return algebra_from_json(t, 0);
  const auto parts = split_product(text);
  Algebra out = parse_factor(parts.front().first, parts.front().second);
  for (std::size_t i = 1; i < parts.size(); ++i) out = Algebra::product(out, parse_factor(parts[i].first, parts[i].second));
  return out;
}

std::string algebra_to_json(const Algebra& v) {
  nlohmann::ordered_json doc;
  doc["dim"] = v.dim();
  doc["names"] = v.names();
  json constants = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j)
      for (std::size_t k = 0; k < v.dim(); ++k)
        if (v.constant(i, j, k) != 0) constants.push_back({i, j, k, to_string(v.constant(i, j, k))});
  doc["constants"] = constants;
  doc["blocks"] = v.blocks();
  return doc.dump();
}

UniRationalFunction parse_ratfunc(std::string_view text) {
  std::optional<std::string> var;
  return ExprParser<UniRationalFunction>(
             text,
             [&](const std::string& name, std::size_t pos) -> std::optional<UniRationalFunction> {
               if (!var) var = name;
               if (*var != name) throw ParseError("more than one variable ('" + *var + "', '" + name + "')", pos);
               return UniRationalFunction(UniPoly::identity());
             },
             [](const Rational& c) { return UniRationalFunction(UniPoly{c}); })
      .parse();
}

UniPoly parse_unipoly(std::string_view text, const std::string& var) {
  const UniRationalFunction r = ExprParser<UniRationalFunction>(
                                    text,
                                    [&](const std::string& name, std::size_t) -> std::optional<UniRationalFunction> {
                                      if (name == var) return UniRationalFunction(UniPoly::identity());
                                      return std::nullopt;
                                    },
                                    [](const Rational& c) { return UniRationalFunction(UniPoly{c}); })
                                    .parse();
  if (!r.is_polynomial()) throw ParseError("expected a polynomial", 0);
  return r.num();
}

RatFunc parse_rational_function(std::string_view text, const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  return ExprParser<RatFunc>(
             text,
             [&](const std::string& name, std::size_t) -> std::optional<RatFunc> {
               for (std::size_t i = 0; i < n; ++i)
                 if (names[i] == name) return RatFunc(MultiPoly::variable(n, i));
               return std::nullopt;
             },
             [&](const Rational& c) { return RatFunc(MultiPoly(n, c)); })
      .parse();
}

MultiPoly parse_multipoly(std::string_view text, const std::vector<std::string>& names) {
  const RatFunc r = parse_rational_function(text, names);
  if (!r.is_polynomial()) throw ParseError("expected a polynomial", 0);
  return r.num() * Rational(1 / r.den().constant_term());
}

IntMatrix parse_matrix(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid matrix literal: ") + e.what(), e.byte);
  }
  if (!doc.is_array() || doc.empty()) throw ParseError("matrix must be a non-empty list of rows", 0);
  const std::size_t cols = doc[0].is_array() ? doc[0].size() : 0;
  if (cols == 0) throw ParseError("matrix rows must be non-empty lists", 0);
  IntMatrix m(static_cast<Eigen::Index>(doc.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < doc.size(); ++r) {
    if (!doc[r].is_array() || doc[r].size() != cols) throw ParseError("matrix rows differ in length", 0);
    for (std::size_t c = 0; c < cols; ++c) {
      const json& e = doc[r][c];
      if (e.is_number_integer()) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = Integer(e.get<long long>());
      } else if (e.is_string()) {
        try {
          m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = Integer(e.get<std::string>());
        } catch (const std::exception&) {
          throw ParseError("matrix entries must be integers", 0);
        }
      } else {
        throw ParseError("matrix entries must be integers", 0);
      }
    }
  }
  return m;
}

std::string matrix_to_string(const IntMatrix& m) {
  std::string out = "[";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (r) out += ",";
    out += "[";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out += ",";
      out += m(r, c).str();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace algdyn
