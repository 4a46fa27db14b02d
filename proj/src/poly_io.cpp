#include "brf/poly_io.hpp"

#include <cctype>
#include <sstream>

#include "brf/errors.hpp"

namespace brf {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error("empty rational");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  auto slash = s.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  bool ok = slash == std::string::npos ? digits(start, s.size())
                                       : digits(start, slash) && digits(slash + 1, s.size());
  if (!ok) throw Error("malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (slash != std::string::npos) {
    mpz_class den(s.substr(s.find('/') + 1));
    if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  }
  q.set_str(s, 10);
  q.canonicalize();
  return q;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars, bool allow_y)
      : text_(text), nvars_(nvars), allow_y_(allow_y), total_vars_(allow_y ? 2 * nvars : nvars) {}

  Poly parse() {
    Poly result(total_vars_);
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      Poly term = parse_term();
      if (negative) term = -term;
      result += term;
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
      negative = c == '-';
      ++pos_;
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string read_digits() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned read_small(const char* what) {
    std::size_t start = pos_;
    std::string digits = read_digits();
    if (digits.size() > 6) throw ParseError(std::string(what) + " too large", start);
    return static_cast<unsigned>(std::stoul(digits));
  }

  Poly parse_term() {
    Rational coeff = 1;
    Exponent exp(total_vars_);
    for (;;) {
      parse_factor(coeff, exp);
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return Poly::monomial(exp, coeff);
  }

  void parse_factor(Rational& coeff, Exponent& exp) {
    skip_ws();
    if (at_end()) throw ParseError("expected a coefficient or variable", pos_);
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(read_digits());
      mpz_class den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        std::size_t den_pos = pos_;
        den = mpz_class(read_digits());
        if (den == 0) throw ParseError("zero denominator", den_pos);
      }
      Rational q(num, den);
      q.canonicalize();
      coeff *= q;
      return;
    }
    if (c == 'x' || (c == 'y' && allow_y_)) {
      std::size_t start = pos_;
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError("expected variable index", pos_);
      }
      unsigned k = read_small("variable index");
      if (k < 1 || k > nvars_) {
        throw ParseError("variable " + std::string(1, c) + std::to_string(k) +
                             " out of range 1.." + std::to_string(nvars_),
                         start);
      }
      unsigned power = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        std::size_t power_pos = pos_;
        power = read_small("exponent");
        if (power < 1) throw ParseError("exponent must be >= 1", power_pos);
      }
      std::size_t slot = (c == 'x' ? 0 : nvars_) + (k - 1);
      exp.set(slot, exp[slot] + power);
      return;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t nvars_;
  bool allow_y_;
  std::size_t total_vars_;
  std::size_t pos_ = 0;
};

std::string render(const Poly& p, std::size_t block) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    bool negative = c < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (e.is_zero() || mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      char name = i < block ? 'x' : 'y';
      os << name << (i % block + 1);
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace

Poly parse_poly(std::string_view text, std::size_t nvars) {
  if (nvars < 1) throw DimensionMismatch("need at least one variable");
  return Parser(text, nvars, false).parse();
}

PolyXY parse_poly_xy(std::string_view text, std::size_t nvars) {
  if (nvars < 1) throw DimensionMismatch("need at least one variable");
  return PolyXY(nvars, Parser(text, nvars, true).parse());
}

std::vector<Poly> parse_poly_lines(std::istream& in, std::size_t nvars) {
  std::vector<Poly> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_poly(line, nvars));
  }
  return out;
}

std::size_t infer_nvars(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (text[i] != 'x') continue;
    std::size_t j = i + 1;
    std::size_t k = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && k < 100000) {
      k = k * 10 + static_cast<std::size_t>(text[j] - '0');
      ++j;
    }
    best = std::max(best, k);
  }
  return best;
}

std::string to_string(const Poly& p) { return render(p, p.nvars() == 0 ? 1 : p.nvars()); }

std::string to_string(const PolyXY& p) { return render(p.joint(), p.nvars()); }

}  // namespace brf
