#include "quospec/group_ring.hpp"

#include <cmath>
#include <utility>

namespace quospec {

namespace {

bool is_integer_coeff(Complex c) {
  return c.imag() == 0.0 && c.real() == std::nearbyint(c.real()) &&
         std::isfinite(c.real());
}

void check_same_group(const Group& a, const Group& b) {
  if (!(a == b)) {
    fail(ErrorCode::MismatchedGroup, "operands over different groups");
  }
}

}  // namespace

RingElement::RingElement(Group group, TermMap terms)
    : group_(std::move(group)) {
  for (auto& [coords, coeff] : terms) {
    if (coeff == 0.0) continue;
    Coords canon = normalize_coords(group_, coords);
    auto [it, inserted] = terms_.try_emplace(std::move(canon), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0.0) terms_.erase(it);
    }
  }
  for (const auto& [coords, coeff] : terms_) {
    if (!is_integer_coeff(coeff)) {
      integral_ = false;
      break;
    }
  }
}

RingElement RingElement::one(const Group& g) {
  return monomial(identity(g), 1.0);
}

RingElement RingElement::monomial(const GroupElement& g, Complex c) {
  TermMap t;
  t.emplace(g.coords, c);
  return RingElement(g.group, std::move(t));
}

Complex RingElement::coefficient(const Coords& c) const {
  auto it = terms_.find(normalize_coords(group_, c));
  return it == terms_.end() ? Complex(0.0) : it->second;
}

bool RingElement::operator==(const RingElement& other) const {
  return group_ == other.group_ && terms_ == other.terms_;
}

RingElement add(const RingElement& u, const RingElement& v) {
  check_same_group(u.group(), v.group());
  RingElement::TermMap t = u.terms();
  for (const auto& [coords, coeff] : v.terms()) t[coords] += coeff;
  return RingElement(u.group(), std::move(t));
}

RingElement subtract(const RingElement& u, const RingElement& v) {
  return add(u, scale(v, -1.0));
}

RingElement scale(const RingElement& u, Complex c) {
  RingElement::TermMap t;
  for (const auto& [coords, coeff] : u.terms()) t.emplace(coords, coeff * c);
  return RingElement(u.group(), std::move(t));
}

RingElement ring_multiply(const RingElement& u, const RingElement& v) {
  check_same_group(u.group(), v.group());
  const Group& g = u.group();
  RingElement::TermMap t;
  for (const auto& [cu, au] : u.terms()) {
    for (const auto& [cv, av] : v.terms()) {
      t[multiply_coords(g, cu, cv)] += au * av;
    }
  }
  return RingElement(g, std::move(t));
}

RingElement star(const RingElement& u) {
  RingElement::TermMap t;
  for (const auto& [coords, coeff] : u.terms()) {
    t.emplace(inverse_coords(u.group(), coords), std::conj(coeff));
  }
  return RingElement(u.group(), std::move(t));
}

Complex trace_G(const RingElement& u) {
  return u.coefficient(identity_coords(u.group()));
}

Complex star_moment(const RingElement& u, const std::vector<StarWord>& word) {
  if (word.empty()) {
    fail(ErrorCode::InvalidParams, "star moment word must be nonempty");
  }
  const RingElement us = star(u);
  RingElement acc = word.front() == StarWord::Plain ? u : us;
  for (std::size_t i = 1; i < word.size(); ++i) {
    acc = ring_multiply(acc, word[i] == StarWord::Plain ? u : us);
  }
  return trace_G(acc);
}

RingMatrix::RingMatrix(Group group, int n) : group_(std::move(group)), n_(n) {
  if (n < 1) fail(ErrorCode::InvalidParams, "matrix size must be positive");
  entries_.assign(static_cast<std::size_t>(n) * n, RingElement::zero(group_));
}

RingMatrix RingMatrix::from_entries(Group group,
                                    std::vector<std::vector<RingElement>> rows) {
  int n = static_cast<int>(rows.size());
  RingMatrix m(std::move(group), n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      fail(ErrorCode::NonSquare, "matrix rows have unequal lengths");
    }
    for (int j = 0; j < n; ++j) m.set(i, j, std::move(rows[i][j]));
  }
  return m;
}

const RingElement& RingMatrix::at(int row, int col) const {
  return entries_[static_cast<std::size_t>(row) * n_ + col];
}

void RingMatrix::set(int row, int col, RingElement e) {
  check_same_group(group_, e.group());
  entries_[static_cast<std::size_t>(row) * n_ + col] = std::move(e);
}

bool RingMatrix::integral() const {
  for (const auto& e : entries_) {
    if (!e.integral()) return false;
  }
  return true;
}

RingMatrix add(const RingMatrix& a, const RingMatrix& b) {
  check_same_group(a.group(), b.group());
  if (a.size() != b.size()) {
    fail(ErrorCode::NonSquare, "matrix sizes differ");
  }
  RingMatrix r(a.group(), a.size());
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) r.set(i, j, add(a.at(i, j), b.at(i, j)));
  }
  return r;
}

RingMatrix multiply(const RingMatrix& a, const RingMatrix& b) {
  check_same_group(a.group(), b.group());
  if (a.size() != b.size()) {
    fail(ErrorCode::NonSquare, "matrix sizes differ");
  }
  RingMatrix r(a.group(), a.size());
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      RingElement s = RingElement::zero(a.group());
      for (int k = 0; k < a.size(); ++k) {
        s = add(s, ring_multiply(a.at(i, k), b.at(k, j)));
      }
      r.set(i, j, std::move(s));
    }
  }
  return r;
}

RingMatrix star(const RingMatrix& a) {
  RingMatrix r(a.group(), a.size());
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) r.set(i, j, star(a.at(j, i)));
  }
  return r;
}

RingMatrix matrix_power(const RingMatrix& a, int e) {
  if (e < 0) fail(ErrorCode::InvalidParams, "matrix power must be >= 0");
  RingMatrix acc(a.group(), a.size());
  for (int i = 0; i < a.size(); ++i) acc.set(i, i, RingElement::one(a.group()));
  RingMatrix base = a;
  while (e > 0) {
    if (e & 1) acc = multiply(acc, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return acc;
}

Complex trace_G(const RingMatrix& a) {
  Complex t = 0.0;
  for (int i = 0; i < a.size(); ++i) t += trace_G(a.at(i, i));
  return t;
}

Complex star_moment(const RingMatrix& a, const std::vector<StarWord>& word) {
  if (word.empty()) {
    fail(ErrorCode::InvalidParams, "star moment word must be nonempty");
  }
  const RingMatrix as = star(a);
  RingMatrix acc = word.front() == StarWord::Plain ? a : as;
  for (std::size_t i = 1; i < word.size(); ++i) {
    acc = multiply(acc, word[i] == StarWord::Plain ? a : as);
  }
  return trace_G(acc);
}

double coefficient_row_norm(const RingMatrix& a) {
  double best = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    double row = 0.0;
    for (int j = 0; j < a.size(); ++j) {
      for (const auto& [coords, coeff] : a.at(i, j).terms()) {
        row += std::abs(coeff);
      }
    }
    best = std::max(best, row);
  }
  return best;
}

}  // namespace quospec
