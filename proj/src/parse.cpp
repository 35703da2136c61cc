#include "quospec/parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace quospec {

namespace {

class Scanner {
 public:
  Scanner(std::string_view text, const Group& group)
      : text_(text), group_(group) {}

  RingElement parse_element() {
    skip_ws();
    RingElement e = parse_expression();
    expect_end();
    return e;
  }

  RingMatrix parse_matrix() {
    skip_ws();
    if (peek() != '[') {
      // a bare expression is accepted as a 1x1 matrix
      RingElement e = parse_expression();
      expect_end();
      return RingMatrix::scalar(e);
    }
    consume('[');
    std::vector<std::vector<RingElement>> rows;
    while (true) {
      rows.push_back(parse_row());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    consume(']');
    expect_end();
    std::size_t n = rows.size();
    for (const auto& row : rows) {
      if (row.size() != n) {
        error("matrix must be square, row of length " +
              std::to_string(row.size()) + " in a " + std::to_string(n) +
              "-row matrix");
      }
    }
    return RingMatrix::from_entries(group_, std::move(rows));
  }

 private:
  std::vector<RingElement> parse_row() {
    skip_ws();
    consume('[');
    std::vector<RingElement> row;
    while (true) {
      row.push_back(parse_expression());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    consume(']');
    return row;
  }

  RingElement parse_expression() {
    RingElement acc = RingElement::zero(group_);
    bool first = true;
    while (true) {
      skip_ws();
      double sign = 1.0;
      char c = peek();
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1.0 : 1.0;
        ++pos_;
      } else if (!first) {
        break;
      }
      acc = add(acc, scale(parse_term(), sign));
      first = false;
      skip_ws();
      c = peek();
      if (c != '+' && c != '-') break;
    }
    return acc;
  }

  RingElement parse_term() {
    skip_ws();
    Complex coeff = 1.0;
    bool have_coeff = false;
    char c = peek();
    if (c == '(') {
      coeff = parse_complex_literal();
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      coeff = parse_number();
      have_coeff = true;
    }
    skip_ws();
    bool star_after_coeff = false;
    if (have_coeff && peek() == '*') {
      ++pos_;
      star_after_coeff = true;
    }
    skip_ws();
    GroupElement elem = identity(group_);
    bool have_monomial = false;
    while (is_generator_start(peek())) {
      elem = multiply(elem, parse_generator_power());
      have_monomial = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (!is_generator_start(peek())) {
          error("expected generator after '*'");
        }
      }
    }
    if (!have_coeff && !have_monomial) {
      error("expected number, '(', or generator");
    }
    if (star_after_coeff && !have_monomial) {
      error("expected generator after '*'");
    }
    return RingElement::monomial(elem, coeff);
  }

  GroupElement parse_generator_power() {
    GroupElement g = parse_generator();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      return power(g, parse_signed_integer());
    }
    return g;
  }

  GroupElement parse_generator() {
    char c = peek();
    if (group_.family == Family::Heisenberg) {
      int coord = c == 'a' ? 0 : c == 'b' ? 1 : c == 'c' ? 2 : -1;
      if (coord < 0) error("expected generator a, b, or c");
      ++pos_;
      Coords coords = identity_coords(group_);
      coords[static_cast<std::size_t>(coord)] = 1;
      return {group_, normalize_coords(group_, coords)};
    }
    if (c != 'g') error("expected generator g or g<index>");
    ++pos_;
    std::int64_t index = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      index = parse_signed_integer();
    }
    if (index < 1 || index > group_.coordinates()) {
      error("generator index " + std::to_string(index) +
            " out of range 1.." + std::to_string(group_.coordinates()));
    }
    Coords coords = identity_coords(group_);
    coords[static_cast<std::size_t>(index - 1)] = 1;
    return {group_, coords};
  }

  bool is_generator_start(char c) const {
    if (group_.family == Family::Heisenberg) {
      return c == 'a' || c == 'b' || c == 'c';
    }
    return c == 'g';
  }

  Complex parse_complex_literal() {
    consume('(');
    skip_ws();
    double re = parse_signed_number();
    skip_ws();
    consume(',');
    skip_ws();
    double im = parse_signed_number();
    skip_ws();
    consume(')');
    return {re, im};
  }

  double parse_signed_number() {
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') {
      if (peek() == '-') sign = -1.0;
      ++pos_;
      skip_ws();
    }
    return sign * parse_number();
  }

  double parse_number() {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) error("expected number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  std::int64_t parse_signed_integer() {
    std::int64_t sign = 1;
    if (peek() == '+' || peek() == '-') {
      if (peek() == '-') sign = -1;
      ++pos_;
    }
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) error("expected integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return sign * value;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  void consume(char c) {
    skip_ws();
    if (peek() != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_end() {
    skip_ws();
    if (pos_ != text_.size()) error("unexpected trailing input");
  }

  [[noreturn]] void error(const std::string& what) const {
    std::ostringstream out;
    out << "parse error at position " << pos_ << ": " << what;
    if (pos_ < text_.size()) out << ", found '" << text_[pos_] << "'";
    fail(ErrorCode::Parse, out.str());
  }

  std::string_view text_;
  const Group& group_;
  std::size_t pos_ = 0;
};

std::string format_double(double v) {
  if (v == std::nearbyint(v) && std::abs(v) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return buf;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_coefficient(Complex c) {
  if (c.imag() == 0.0) return format_double(c.real());
  return "(" + format_double(c.real()) + "," + format_double(c.imag()) + ")";
}

void append_factor(std::string& out, const char* name, std::int64_t e) {
  if (e == 0) return;
  if (!out.empty()) out += "*";
  out += name;
  if (e != 1) out += "^" + std::to_string(e);
}

std::string format_monomial(const Group& g, const Coords& coords) {
  std::string out;
  if (g.family == Family::Heisenberg) {
    // coords (x,y,z) = a^x * b^y * c^(z - x*y)
    std::int64_t w = coords[2] - coords[0] * coords[1];
    if (g.moduli[0] != 0) w = ((w % g.moduli[0]) + g.moduli[0]) % g.moduli[0];
    append_factor(out, "a", coords[0]);
    append_factor(out, "b", coords[1]);
    append_factor(out, "c", w);
  } else {
    for (std::size_t j = 0; j < coords.size(); ++j) {
      std::string name = coords.size() == 1 && j == 0
                             ? "g"
                             : "g" + std::to_string(j + 1);
      append_factor(out, name.c_str(), coords[j]);
    }
  }
  return out;
}

}  // namespace

RingElement parse_element(std::string_view text, const Group& group) {
  return Scanner(text, group).parse_element();
}

RingMatrix parse_matrix(std::string_view text, const Group& group) {
  return Scanner(text, group).parse_matrix();
}

std::string format_element(const RingElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [coords, coeff] : e.terms()) {
    std::string mono = format_monomial(e.group(), coords);
    Complex c = coeff;
    if (out.empty()) {
      if (c.imag() == 0.0 && c.real() < 0) {
        out += "-";
        c = -c;
      }
    } else {
      if (c.imag() == 0.0 && c.real() < 0) {
        out += " - ";
        c = -c;
      } else {
        out += " + ";
      }
    }
    if (mono.empty()) {
      out += format_coefficient(c);
    } else if (c == Complex(1.0)) {
      out += mono;
    } else {
      out += format_coefficient(c) + "*" + mono;
    }
  }
  return out;
}

std::string format_matrix(const RingMatrix& m) {
  std::string out = "[";
  for (int i = 0; i < m.size(); ++i) {
    out += i == 0 ? "[" : ",[";
    for (int j = 0; j < m.size(); ++j) {
      if (j > 0) out += ", ";
      out += format_element(m.at(i, j));
    }
    out += "]";
  }
  out += "]";
  return out;
}

}  // namespace quospec
