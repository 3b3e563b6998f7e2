#include "fueter/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>
#include <sstream>

#include "fueter/errors.hpp"

namespace fueter {

namespace {

// ---------------------------------------------------------------- lexing

enum class Tok { Number, Ident, Blade, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::vector<int> blade;  // Tok::Blade from the e{...} form
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t line = 1;
  std::size_t col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::Number;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        ++j;
      }
      t.kind = Tok::Ident;
      t.text = std::string(src.substr(i, j - i));
      if (t.text == "e" && j < src.size() && src[j] == '{') {
        std::size_t close = src.find('}', j);
        if (close == std::string_view::npos) throw ParseError("unterminated blade", line, col);
        t.kind = Tok::Blade;
        std::string body(src.substr(j + 1, close - j - 1));
        std::stringstream ss(body);
        std::string part;
        while (std::getline(ss, part, ',')) {
          part.erase(std::remove_if(part.begin(), part.end(),
                                    [](unsigned char ch) { return std::isspace(ch); }),
                     part.end());
          if (part.empty() || !std::all_of(part.begin(), part.end(),
                                           [](unsigned char ch) { return std::isdigit(ch); })) {
            throw ParseError("malformed blade index list", line, col);
          }
          t.blade.push_back(std::stoi(part));
        }
        j = close + 1;
      }
      advance(j - i);
    } else if (std::string_view("+-*/^(),").find(c) != std::string_view::npos) {
      t.kind = Tok::Symbol;
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

// ---------------------------------------------------------------- parsing
//
// One recursive-descent core shared by the three grammars. `Domain` supplies
// the value type and the atoms.

template <typename Domain>
class Parser {
 public:
  using Value = typename Domain::Value;

  Parser(std::string_view text, Domain& domain) : tokens_(tokenize(text)), domain_(domain) {}

  Value parse_all() {
    Value v = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return v;
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, peek()); }
  [[noreturn]] static void fail_at(const std::string& msg, const Token& t) {
    throw ParseError(msg, t.line, t.column);
  }
  bool accept(const char* sym) {
    if (peek().kind == Tok::Symbol && peek().text == sym) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(const char* sym) {
    if (!accept(sym)) fail(std::string("expected '") + sym + "'");
  }
  std::string expect_ident() {
    if (peek().kind != Tok::Ident) fail("expected a name");
    return next().text;
  }

  Value expr() {
    bool negate = false;
    if (accept("-")) {
      negate = true;
    } else {
      accept("+");
    }
    Value v = term();
    if (negate) v = domain_.negate(v);
    for (;;) {
      if (accept("+")) {
        v = domain_.add(v, term());
      } else if (accept("-")) {
        v = domain_.add(v, domain_.negate(term()));
      } else {
        return v;
      }
    }
  }

 private:
  Value term() {
    Value v = factor();
    for (;;) {
      if (accept("*")) {
        v = domain_.multiply(v, factor());
      } else if (peek().kind == Tok::Symbol && peek().text == "/") {
        const Token at = next();
        const auto divisor = domain_.as_rational(factor());
        if (!divisor || sgn(*divisor) == 0) fail_at("divisor must be a nonzero rational", at);
        v = domain_.scale(v, Rational(1 / *divisor));
      } else {
        return v;
      }
    }
  }

  Value factor() {
    if (accept("-")) return domain_.negate(factor());
    const Token start = peek();
    auto [v, radial] = primary();
    if (accept("^")) {
      const bool neg = accept("-");
      if (!neg) accept("+");
      if (peek().kind != Tok::Number) fail("expected an integer exponent");
      const Token& num = next();
      if (num.text.size() > 4) fail_at("exponent too large", num);
      const int e = std::stoi(num.text) * (neg ? -1 : 1);
      if (radial) return domain_.radial_power(*radial, e);
      if (e < 0) fail_at("negative exponents are only allowed on r and rho", start);
      Value out = domain_.one();
      for (int k = 0; k < e; ++k) out = domain_.multiply(out, v);
      return out;
    }
    return v;
  }

  std::pair<Value, std::optional<Group>> primary() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      ++pos_;
      return {domain_.constant(Rational(Integer(t.text))), std::nullopt};
    }
    if (accept("(")) {
      Value v = expr();
      expect(")");
      return {v, std::nullopt};
    }
    if (t.kind == Tok::Blade || t.kind == Tok::Ident) {
      const Token tok = next();
      return domain_.atom(tok, *this);
    }
    fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Domain& domain_;
};

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// ---- RadialExpr grammar

struct ExprDomain {
  using Value = RadialExpr;
  const AxisFrame& frame;
  const VectorBindings& vectors;

  Value one() const { return RadialExpr::scalar(frame, 1); }
  Value constant(const Rational& c) const { return RadialExpr::scalar(frame, c); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value negate(const Value& a) const { return -a; }
  Value multiply(const Value& a, const Value& b) const { return a * b; }
  Value scale(const Value& a, const Rational& c) const { return a * c; }
  Value radial_power(Group g, int e) const { return RadialExpr::radius(frame, g, e); }

  std::optional<Rational> as_rational(const Value& v) const {
    if (v.is_zero()) return Rational(0);
    if (v.size() != 1) return std::nullopt;
    const auto& [key, c] = *v.flat_terms().begin();
    if (key.mono != Monomial{} || key.a != 0 || key.b != 0 || key.blade != Blade::scalar()) {
      return std::nullopt;
    }
    return c;
  }

  Value blade_value(const std::vector<int>& idx, const Token& tok) const {
    std::vector<int> sorted = idx;
    if (sorted.empty()) Parser<ExprDomain>::fail_at("empty blade", tok);
    for (int j : sorted) {
      if (j < 1 || j > frame.m()) {
        Parser<ExprDomain>::fail_at("blade index " + std::to_string(j) + " outside R_" +
                                        std::to_string(frame.m()), tok);
      }
    }
    // Product of the listed generators in the written order.
    Multivector mv = Multivector::scalar(frame.m(), 1);
    for (int j : sorted) mv = mv * Multivector(frame.m(), Blade::generator(j));
    return RadialExpr::constant(frame, mv);
  }

  const BoundVector& bound(const std::string& name, const Token& tok) const {
    auto it = vectors.find(name);
    if (it == vectors.end()) Parser<ExprDomain>::fail_at("unbound vector '" + name + "'", tok);
    return it->second;
  }

  std::pair<Value, std::optional<Group>> atom(const Token& tok, Parser<ExprDomain>& ps) const {
    if (tok.kind == Tok::Blade) return {blade_value(tok.blade, tok), std::nullopt};
    const std::string& s = tok.text;
    if (s == "r") return {RadialExpr::radius(frame, Group::X, 1), Group::X};
    if (s == "rho") {
      if (frame.q() == 0) Parser<ExprDomain>::fail_at("rho is undefined when q = 0", tok);
      return {RadialExpr::radius(frame, Group::Y, 1), Group::Y};
    }
    if (s == "X0") {
      if (!frame.has_scalar_axis()) Parser<ExprDomain>::fail_at("frame has no X0", tok);
      return {RadialExpr::coordinate(frame, Coord::scalar_axis()), std::nullopt};
    }
    if ((s[0] == 'x' || s[0] == 'y') && all_digits(s.substr(1))) {
      const Group g = s[0] == 'x' ? Group::X : Group::Y;
      const int j = s.size() > 6 ? -1 : std::stoi(s.substr(1));
      const Coord c{g, j};
      if (!frame.contains(c)) Parser<ExprDomain>::fail_at("coordinate " + s + " outside the frame", tok);
      return {RadialExpr::coordinate(frame, c), std::nullopt};
    }
    if (s[0] == 'e' && all_digits(s.substr(1))) {
      std::vector<int> idx;
      if (frame.m() <= 9) {
        for (char ch : s.substr(1)) idx.push_back(ch - '0');
      } else {
        idx.push_back(s.size() > 4 ? -1 : std::stoi(s.substr(1)));
      }
      return {blade_value(idx, tok), std::nullopt};
    }
    if (s == "ip") {
      ps.expect("(");
      const Token a_tok = ps.peek();
      const std::string a = ps.expect_ident();
      ps.expect(",");
      const Token b_tok = ps.peek();
      const std::string b = ps.expect_ident();
      ps.expect(")");
      return {inner(a, a_tok, b, b_tok), std::nullopt};
    }
    if (s == "vec") {
      ps.expect("(");
      const Token a_tok = ps.peek();
      const std::string a = ps.expect_ident();
      ps.expect(")");
      if (a == "x") return {RadialExpr::vector_variable(frame, Group::X), std::nullopt};
      if (a == "y") return {RadialExpr::vector_variable(frame, Group::Y), std::nullopt};
      const BoundVector& v = bound(a, a_tok);
      return {checked_vector(v, a_tok, false), std::nullopt};
    }
    Parser<ExprDomain>::fail_at("unknown symbol '" + s + "'", tok);
  }

  Value checked_vector(const BoundVector& v, const Token& tok, bool inner_product) const {
    const int n = v.group == Group::X ? frame.p() : frame.q();
    if (static_cast<int>(v.values.size()) != n) {
      Parser<ExprDomain>::fail_at("vector length " + std::to_string(v.values.size()) +
                                      " does not match its group dimension " + std::to_string(n),
                                  tok);
    }
    return inner_product ? RadialExpr::inner_product(frame, v.group, v.values)
                         : RadialExpr::constant_vector(frame, v.group, v.values);
  }

  Value inner(const std::string& a, const Token& a_tok, const std::string& b,
              const Token& b_tok) const {
    auto is_var = [](const std::string& n) { return n == "x" || n == "y"; };
    auto var_group = [](const std::string& n) { return n == "x" ? Group::X : Group::Y; };
    if (is_var(a) && is_var(b)) {
      if (a != b) return RadialExpr(frame);
      return RadialExpr::radius(frame, var_group(a), 2);
    }
    if (is_var(a) || is_var(b)) {
      const std::string& var = is_var(a) ? a : b;
      const std::string& name = is_var(a) ? b : a;
      const Token& name_tok = is_var(a) ? b_tok : a_tok;
      const BoundVector& v = bound(name, name_tok);
      if (v.group != var_group(var)) {
        Parser<ExprDomain>::fail_at("vector '" + name + "' does not live in the " + var + " group",
                                    name_tok);
      }
      return checked_vector(v, name_tok, true);
    }
    const BoundVector& va = bound(a, a_tok);
    const BoundVector& vb = bound(b, b_tok);
    checked_vector(va, a_tok, false);
    checked_vector(vb, b_tok, false);
    Rational sum = 0;
    if (va.group == vb.group) {
      for (std::size_t j = 0; j < va.values.size(); ++j) sum += va.values[j] * vb.values[j];
    }
    return RadialExpr::scalar(frame, sum);
  }
};

// ---- seed grammar

struct SeedDomain {
  using Value = ComplexBivarPoly;

  Value one() const { return ComplexBivarPoly::constant({1, 0}); }
  Value constant(const Rational& c) const { return ComplexBivarPoly::constant({c, 0}); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value negate(const Value& a) const { return a * ComplexRational{-1, 0}; }
  Value multiply(const Value& a, const Value& b) const { return a * b; }
  Value scale(const Value& a, const Rational& c) const { return a * ComplexRational{c, 0}; }
  Value radial_power(Group, int) const { return one(); }

  std::optional<Rational> as_rational(const Value& v) const {
    if (v.is_zero()) return Rational(0);
    if (v.terms().size() != 1) return std::nullopt;
    const auto& [k, c] = *v.terms().begin();
    if (k != ComplexBivarPoly::Key{0, 0} || sgn(c.im) != 0) return std::nullopt;
    return c.re;
  }

  std::pair<Value, std::optional<Group>> atom(const Token& tok, Parser<SeedDomain>&) const {
    const std::string& s = tok.text;
    if (s == "z") return {ComplexBivarPoly::z(), std::nullopt};
    if (s == "zbar") return {ComplexBivarPoly::zbar(), std::nullopt};
    if (s == "x") return {ComplexBivarPoly::x(), std::nullopt};
    if (s == "y") return {ComplexBivarPoly::y(), std::nullopt};
    if (s == "i") return {ComplexBivarPoly::imaginary_unit(), std::nullopt};
    Parser<SeedDomain>::fail_at("unknown seed symbol '" + s + "'", tok);
  }
};

// ---- scalar (r, rho) grammar

struct BivariateDomain {
  using Value = BivariateRadial;

  Value one() const { return BivariateRadial::constant(1); }
  Value constant(const Rational& c) const { return BivariateRadial::constant(c); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value negate(const Value& a) const { return -a; }
  Value multiply(const Value& a, const Value& b) const { return a * b; }
  Value scale(const Value& a, const Rational& c) const { return a * c; }
  Value radial_power(Group g, int e) const {
    return g == Group::X ? BivariateRadial::monomial(e, 0) : BivariateRadial::monomial(0, e);
  }

  std::optional<Rational> as_rational(const Value& v) const {
    if (v.is_zero()) return Rational(0);
    if (v.terms().size() != 1 || v.terms().begin()->first != BivariateRadial::Key{0, 0}) {
      return std::nullopt;
    }
    return v.terms().begin()->second;
  }

  std::pair<Value, std::optional<Group>> atom(const Token& tok, Parser<BivariateDomain>&) const {
    if (tok.text == "r") return {radial_power(Group::X, 1), Group::X};
    if (tok.text == "rho") return {radial_power(Group::Y, 1), Group::Y};
    Parser<BivariateDomain>::fail_at("unknown symbol '" + tok.text + "' (expected r or rho)", tok);
  }
};

// ---------------------------------------------------------------- formatting

std::string format_rational_plain(const Rational& q) { return q.get_str(); }

std::string format_rational_latex(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

struct DisplayOrder {
  bool operator()(const std::pair<TermKey, Rational>& lhs,
                  const std::pair<TermKey, Rational>& rhs) const {
    const TermKey& a = lhs.first;
    const TermKey& b = rhs.first;
    if (a.sector() != b.sector()) return a.sector() < b.sector();
    if (a.mono.degree() != b.mono.degree()) return a.mono.degree() > b.mono.degree();
    if (a.mono != b.mono) return a.mono > b.mono;
    if (a.a != b.a) return a.a > b.a;
    if (a.b != b.b) return a.b > b.b;
    return a.blade < b.blade;
  }
};

std::vector<std::pair<TermKey, Rational>> display_terms(const RadialExpr& f) {
  std::vector<std::pair<TermKey, Rational>> terms(f.flat_terms().begin(), f.flat_terms().end());
  std::sort(terms.begin(), terms.end(), DisplayOrder{});
  return terms;
}

std::string latex_coord(const AxisFrame& frame, int slot) {
  const Coord c = frame.coord_at(slot);
  switch (c.group) {
    case Group::X:
      return "x_{" + std::to_string(c.index) + "}";
    case Group::Y:
      return "y_{" + std::to_string(c.index) + "}";
    case Group::Scalar:
      break;
  }
  return "X_{0}";
}

nlohmann::json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw PreconditionError("expected an integer in JSON");
}

}  // namespace

RadialExpr parse_expression(std::string_view text, const AxisFrame& frame,
                            const VectorBindings& vectors) {
  ExprDomain domain{frame, vectors};
  Parser<ExprDomain> parser(text, domain);
  return parser.parse_all();
}

ComplexBivarPoly parse_seed(std::string_view text) {
  SeedDomain domain;
  Parser<SeedDomain> parser(text, domain);
  return parser.parse_all();
}

BivariateRadial parse_bivariate(std::string_view text) {
  BivariateDomain domain;
  Parser<BivariateDomain> parser(text, domain);
  return parser.parse_all();
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  std::size_t column = 1;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string item(text.substr(start, end - start));
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    Rational q;
    try {
      if (item.empty()) throw std::invalid_argument("empty");
      std::size_t digits_from = (item[0] == '-' || item[0] == '+') ? 1 : 0;
      const auto slash = item.find('/');
      const std::string num = item.substr(digits_from, slash == std::string::npos ? std::string::npos
                                                                                  : slash - digits_from);
      const std::string den = slash == std::string::npos ? "1" : item.substr(slash + 1);
      if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("digits");
      q = Rational(Integer(num), Integer(den));
      if (Integer(den) == 0) throw std::invalid_argument("zero denominator");
      q.canonicalize();
      if (item[0] == '-') q = -q;
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed rational '" + item + "'", 1, column);
    }
    out.push_back(q);
    column += end - start + 1;
    start = end + 1;
  }
  return out;
}

std::string format_expression(const RadialExpr& f, TextStyle style) {
  if (style == TextStyle::Json) return to_json(f).dump();
  const AxisFrame& frame = f.frame();
  if (f.is_zero()) return "0";
  const bool latex = style == TextStyle::Latex;
  const bool bracketed = frame.m() >= 10;
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : display_terms(f)) {
    std::vector<std::string> factors;
    for (int s = 0; s < frame.num_slots(); ++s) {
      const int e = key.mono.exps[s];
      if (e == 0) continue;
      if (latex) {
        factors.push_back(latex_coord(frame, s) + (e > 1 ? "^{" + std::to_string(e) + "}" : ""));
      } else {
        factors.push_back(frame.coord_name(s) + (e > 1 ? "^" + std::to_string(e) : ""));
      }
    }
    if (key.blade != Blade::scalar()) {
      if (latex) {
        std::string idx;
        for (int j : key.blade.indices()) idx += (idx.empty() ? "" : ",") + std::to_string(j);
        if (!bracketed) idx.erase(std::remove(idx.begin(), idx.end(), ','), idx.end());
        factors.push_back("e_{" + idx + "}");
      } else {
        factors.push_back(key.blade.to_string(bracketed));
      }
    }
    if (key.a != 0) factors.push_back(latex ? "r^{" + std::to_string(key.a) + "}" : "r^" + std::to_string(key.a));
    if (key.b != 0) {
      factors.push_back(latex ? "\\rho^{" + std::to_string(key.b) + "}" : "rho^" + std::to_string(key.b));
    }
    const Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const std::string sep = latex ? " " : "*";
    bool need_sep = false;
    if (mag != 1 || factors.empty()) {
      os << (latex ? format_rational_latex(mag) : format_rational_plain(mag));
      need_sep = true;
    }
    for (const auto& fac : factors) {
      if (need_sep) os << sep;
      os << fac;
      need_sep = true;
    }
  }
  return os.str();
}

nlohmann::json to_json(const RadialExpr& f) {
  const AxisFrame& frame = f.frame();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : display_terms(f)) {
    nlohmann::json mono = nlohmann::json::object();
    for (int s = 0; s < frame.num_slots(); ++s) {
      if (key.mono.exps[s] != 0) mono[frame.coord_name(s)] = key.mono.exps[s];
    }
    terms.push_back({{"mono", mono},
                     {"blade", key.blade.indices()},
                     {"coeff", {{"num", integer_json(c.get_num())}, {"den", integer_json(c.get_den())}}},
                     {"r", key.a},
                     {"rho", key.b}});
  }
  return {{"frame", {{"p", frame.p()}, {"q", frame.q()}, {"scalar_axis", frame.has_scalar_axis()}}},
          {"terms", terms}};
}

RadialExpr from_json(const nlohmann::json& j) {
  try {
    const auto& fr = j.at("frame");
    const AxisFrame frame(fr.at("p").get<int>(), fr.at("q").get<int>(),
                          fr.value("scalar_axis", false));
    std::map<std::string, int> slot_of;
    for (int s = 0; s < frame.num_slots(); ++s) slot_of[frame.coord_name(s)] = s;
    TermAccumulator acc(frame);
    for (const auto& t : j.at("terms")) {
      TermKey key;
      for (const auto& [name, e] : t.at("mono").items()) {
        auto it = slot_of.find(name);
        if (it == slot_of.end()) throw PreconditionError("unknown coordinate '" + name + "' in JSON");
        const int exp = e.get<int>();
        if (exp < 0 || exp > std::numeric_limits<std::uint8_t>::max()) {
          throw PreconditionError("monomial exponent out of range in JSON");
        }
        key.mono.exps[it->second] = static_cast<std::uint8_t>(exp);
      }
      const auto idx = t.at("blade").get<std::vector<int>>();
      key.blade = Blade::from_indices(idx);
      key.a = t.value("r", 0);
      key.b = t.value("rho", 0);
      Rational c(integer_from_json(t.at("coeff").at("num")), integer_from_json(t.at("coeff").at("den")));
      if (c.get_den() == 0) throw PreconditionError("zero denominator in JSON");
      c.canonicalize();
      acc.add(key, c);
    }
    return std::move(acc).finish();
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed expression JSON: ") + e.what());
  }
}

std::string format_bivariate(const BivariateRadial& f, TextStyle style) {
  if (style == TextStyle::Json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [k, c] : f.terms()) {
      out.push_back({{"coeff", {{"num", integer_json(c.get_num())}, {"den", integer_json(c.get_den())}}},
                     {"r", k.first},
                     {"rho", k.second}});
    }
    return out.dump();
  }
  if (f.is_zero()) return "0";
  const bool latex = style == TextStyle::Latex;
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : f.terms()) {
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    if (latex) {
      os << format_rational_latex(mag) << " r^{" << k.first << "} \\rho^{" << k.second << "}";
    } else {
      os << mag.get_str() << " * r^" << k.first << " * rho^" << k.second;
    }
  }
  return os.str();
}

}  // namespace fueter
