#include "cuntz/parser.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <sstream>

#include "cuntz/errors.hpp"

namespace cuntz {

namespace {

const std::vector<std::string> kAtomStart{"number", "i", "zeta(", "e(", "I", "("};

class Parser {
 public:
  Parser(const SystemSpec& spec, std::string_view text) : spec_(spec), s_(text) {}

  AlgebraElement parse_all() {
    AlgebraElement a = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'", {"+", "-", "*", "end of input"});
    return a;
  }

  BasisMonomial monomial_only() {
    skip_ws();
    BasisMonomial x = gen();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input after monomial", {"end of input"});
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected = {}) const {
    throw ParseError(what, pos_, std::move(expected));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (!at(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end of input",
                         {std::string(1, c)});
  }

  bool alnum_at(std::size_t p) const {
    return p < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p])) || s_[p] == '_');
  }

  long integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer", {"integer"});
    }
    const std::string tok(s_.substr(start, pos_ - start));
    errno = 0;
    const long v = std::strtol(tok.c_str(), nullptr, 10);
    if (errno == ERANGE) {
      pos_ = start;
      fail("integer out of range");
    }
    return v;
  }

  AlgebraElement scalar_element(const Scalar& c) const { return AlgebraElement::scalar(spec_.rank(), c); }

  static bool is_scalar(const AlgebraElement& a) {
    if (a.size() != 1) return a.empty();
    const auto& key = a.storage().begin()->first;
    return key.left.fiber.is_zero() && key.right.fiber.is_zero();
  }

  static Scalar scalar_value(const AlgebraElement& a) {
    return a.empty() ? Scalar::zero() : a.storage().begin()->second;
  }

  AlgebraElement expr() {
    AlgebraElement acc;
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    AlgebraElement t = term();
    acc.add(t, negative ? Scalar::integer(-1) : Scalar::one());
    while (true) {
      if (accept('+')) {
        acc.add(term());
      } else if (accept('-')) {
        acc.add(term(), Scalar::integer(-1));
      } else {
        break;
      }
    }
    return acc;
  }

  AlgebraElement term() {
    AlgebraElement acc = atom();
    while (accept('*')) {
      AlgebraElement next = atom();
      if (is_scalar(next)) {
        acc = acc.scaled(scalar_value(next));
      } else if (is_scalar(acc)) {
        acc = next.scaled(scalar_value(acc));
      } else {
        acc = multiply(spec_, acc, next);
      }
    }
    return acc;
  }

  AlgebraElement postfix(AlgebraElement a) {
    while (accept('\'')) a = adjoint(a);
    return a;
  }

  AlgebraElement atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input", kAtomStart);
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return scalar_element(number());
    if (c == 'i' && !alnum_at(pos_ + 1)) {
      ++pos_;
      return scalar_element(Scalar::imaginary_unit());
    }
    if (s_.substr(pos_, 5) == "zeta(") return scalar_element(zeta());
    if (c == 'I' && !alnum_at(pos_ + 1)) {
      ++pos_;
      return postfix(AlgebraElement::identity(spec_.rank()));
    }
    if (c == 'e' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '(') {
      const BasisMonomial x = gen();
      return postfix(AlgebraElement::generator(x));
    }
    if (c == '(') {
      ++pos_;
      AlgebraElement inner = expr();
      expect(')');
      return postfix(std::move(inner));
    }
    fail("unexpected '" + std::string(1, c) + "'", kAtomStart);
  }

  Scalar number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    bool is_float = false;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      is_float = true;
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    // An exponent needs a digit after `e`/`e-`, so `2e(` is not a number.
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < s_.size() && (s_[p] == '-' || s_[p] == '+')) ++p;
      if (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
        is_float = true;
        pos_ = p;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
    }
    Scalar value;
    if (is_float) {
      const std::string tok(s_.substr(start, pos_ - start));
      if (tok == ".") {
        pos_ = start;
        fail("malformed number", {"number"});
      }
      value = Scalar(std::complex<double>(std::strtod(tok.c_str(), nullptr), 0.0));
    } else {
      std::string tok(s_.substr(start, pos_ - start));
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        const std::size_t d0 = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string den(s_.substr(d0, pos_ - d0));
        if (Integer(den) == 0) {
          pos_ = d0;
          fail("zero denominator");
        }
        Rational q{Integer(tok), Integer(den)};
        q.canonicalize();
        value = Scalar::rational(q);
      } else {
        value = Scalar::rational(Rational(Integer(tok)));
      }
    }
    if (pos_ < s_.size() && s_[pos_] == 'i' && !alnum_at(pos_ + 1)) {
      ++pos_;
      value = value * Scalar::imaginary_unit();
    }
    return value;
  }

  Scalar zeta() {
    pos_ += 5;
    const std::size_t at_order = pos_;
    const long order = integer();
    if (order < 1) {
      pos_ = at_order;
      fail("root of unity order must be positive");
    }
    expect(')');
    long e = 1;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      e = integer();
    }
    return Scalar(Cyclotomic::root_of_unity(static_cast<unsigned>(order), e));
  }

  BasisMonomial gen() {
    const std::size_t start = pos_;
    if (s_.substr(pos_, 2) != "e(") fail("expected a generator", {"e("});
    pos_ += 2;
    std::vector<int> coords;
    while (true) {
      const std::size_t at_coord = pos_;
      const long v = integer();
      if (v < 0) {
        pos_ = at_coord;
        fail("fiber coordinates must be nonnegative");
      }
      coords.push_back(static_cast<int>(v));
      if (accept(',')) continue;
      if (accept(';')) break;
      fail(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end of input",
           {",", ";"});
    }
    const std::size_t at_index = pos_;
    const long idx = integer();
    expect(')');
    if (static_cast<int>(coords.size()) != spec_.rank()) {
      pos_ = start;
      fail("fiber has " + std::to_string(coords.size()) + " coordinates but the system has k = " +
           std::to_string(spec_.rank()));
    }
    BasisMonomial x{SemigroupElement(coords), 0};
    const Index d = spec_.dim(x.fiber);
    if (idx < 0 || static_cast<Index>(idx) >= d) {
      pos_ = at_index;
      std::ostringstream os;
      os << "index " << idx << " out of range for fiber " << x.fiber << " of dimension " << d;
      fail(os.str());
    }
    x.index = static_cast<Index>(idx);
    return x;
  }

  const SystemSpec& spec_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on commas outside parentheses.
std::vector<std::string_view> split_top_level(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

}  // namespace

AlgebraElement parse_expression(const SystemSpec& spec, std::string_view text) {
  return Parser(spec, text).parse_all();
}

BasisMonomial parse_monomial(const SystemSpec& spec, std::string_view text) {
  return Parser(spec, text).monomial_only();
}

SemigroupElement parse_semigroup(const SystemSpec& spec, std::string_view text) {
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw ParseError("unbalanced parenthesis", s.size(), {")"});
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> coords;
  std::size_t pos = 0;
  for (std::string_view item : split_top_level(s)) {
    const std::string tok(item);
    char* end = nullptr;
    const long v = std::strtol(tok.c_str(), &end, 10);
    if (tok.empty() || *end != '\0') throw ParseError("expected a nonnegative integer", pos, {"integer"});
    if (v < 0) throw ParseError("semigroup coordinates must be nonnegative", pos);
    coords.push_back(static_cast<int>(v));
    pos += item.size() + 1;
  }
  if (static_cast<int>(coords.size()) != spec.rank())
    throw ParseError("expected " + std::to_string(spec.rank()) + " coordinates, got " +
                         std::to_string(coords.size()),
                     0);
  return SemigroupElement(coords);
}

std::vector<Scalar> parse_scalar_list(std::string_view text) {
  const SystemSpec scalars = SystemSpec::lexicographic({1});
  std::vector<Scalar> out;
  std::size_t offset = 0;
  for (std::string_view item : split_top_level(text)) {
    AlgebraElement a;
    try {
      a = parse_expression(scalars, item);
    } catch (const ParseError& e) {
      throw ParseError("in scalar list: " + std::string(e.what()), offset + e.position());
    }
    for (const auto& [key, c] : a.storage())
      if (!key.left.fiber.is_zero() || !key.right.fiber.is_zero())
        throw ParseError("expected a scalar", offset);
    out.push_back(a.empty() ? Scalar::zero() : a.storage().begin()->second);
    offset += item.size() + 1;
  }
  return out;
}

std::map<GeneratorKey, AlgebraElement> parse_assignment(const SystemSpec& target, std::string_view text) {
  std::map<GeneratorKey, AlgebraElement> images;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected `(a,i) = <expression>`", line_no);
    std::string_view lhs = trim(line.substr(0, eq));
    if (lhs.size() < 2 || lhs.front() != '(' || lhs.back() != ')')
      throw ConfigError("generator slot must look like (a,i)", line_no);
    const auto parts = split_top_level(lhs.substr(1, lhs.size() - 2));
    if (parts.size() != 2) throw ConfigError("generator slot must look like (a,i)", line_no);
    char* e1 = nullptr;
    char* e2 = nullptr;
    const std::string sa(parts[0]);
    const std::string si(parts[1]);
    const long a = std::strtol(sa.c_str(), &e1, 10);
    const long i = std::strtol(si.c_str(), &e2, 10);
    if (sa.empty() || si.empty() || *e1 || *e2 || a < 1 || i < 0)
      throw ConfigError("generator slot needs a >= 1 and i >= 0", line_no);
    const GeneratorKey key{static_cast<int>(a - 1), static_cast<Index>(i)};
    if (images.count(key)) throw ConfigError("generator slot assigned twice", line_no);
    try {
      images[key] = parse_expression(target, line.substr(eq + 1));
    } catch (const ParseError& err) {
      throw ConfigError(err.what(), line_no);
    }
  }
  return images;
}

std::string format_assignment(const std::map<GeneratorKey, AlgebraElement>& images) {
  std::ostringstream os;
  for (const auto& [key, img] : images) os << "(" << key.first + 1 << "," << key.second << ") = " << img << "\n";
  return os.str();
}

}  // namespace cuntz
