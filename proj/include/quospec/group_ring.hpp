#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "quospec/group.hpp"

namespace quospec {

using Complex = std::complex<double>;

enum class StarWord { Plain, Star };

/// A finitely supported formal sum sum_g c_g * g with complex coefficients.
/// Exact zeros are pruned on construction; no tolerance pruning ever happens,
/// so supports are reproducible. `integral()` is true when every stored
/// coefficient is a (real) integer, which is what the integrality
/// diagnostics in the spectra module require.
class RingElement {
 public:
  using TermMap = std::map<Coords, Complex>;

  explicit RingElement(Group group) : group_(std::move(group)) {}
  RingElement(Group group, TermMap terms);

  static RingElement zero(const Group& g) { return RingElement(g); }
  static RingElement one(const Group& g);
  /// c * g as a one-term sum.
  static RingElement monomial(const GroupElement& g, Complex c = 1.0);

  const Group& group() const { return group_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool integral() const { return integral_; }
  std::size_t support_size() const { return terms_.size(); }
  Complex coefficient(const Coords& c) const;

  bool operator==(const RingElement& other) const;

 private:
  Group group_;
  TermMap terms_;
  bool integral_ = true;
};

RingElement add(const RingElement& u, const RingElement& v);
RingElement subtract(const RingElement& u, const RingElement& v);
RingElement scale(const RingElement& u, Complex c);
/// Convolution product: (uv)_g = sum_h u_h v_{h^-1 g}.
RingElement ring_multiply(const RingElement& u, const RingElement& v);
/// (u*)_g = conj(u_{g^-1}); involutive antihomomorphism.
RingElement star(const RingElement& u);
/// Coefficient of the identity element.
Complex trace_G(const RingElement& u);
/// trace_G of the word product u^{s_1} ... u^{s_l}, s in {Plain, Star}.
Complex star_moment(const RingElement& u, const std::vector<StarWord>& word);

/// An n x n matrix over the group ring, all entries over one group.
class RingMatrix {
 public:
  RingMatrix(Group group, int n);
  static RingMatrix from_entries(Group group,
                                 std::vector<std::vector<RingElement>> rows);
  static RingMatrix scalar(const RingElement& e) {
    return from_entries(e.group(), {{e}});
  }

  const Group& group() const { return group_; }
  int size() const { return n_; }
  const RingElement& at(int row, int col) const;
  void set(int row, int col, RingElement e);
  bool integral() const;

  bool operator==(const RingMatrix& other) const = default;

 private:
  Group group_;
  int n_;
  std::vector<RingElement> entries_;  // row-major
};

RingMatrix add(const RingMatrix& a, const RingMatrix& b);
RingMatrix multiply(const RingMatrix& a, const RingMatrix& b);
RingMatrix star(const RingMatrix& a);  // entrywise star of the transpose
RingMatrix matrix_power(const RingMatrix& a, int e);
/// Unnormalized block trace: sum_u trace_G(a_{uu}).
Complex trace_G(const RingMatrix& a);
Complex star_moment(const RingMatrix& a, const std::vector<StarWord>& word);

/// Largest coefficient-sum row norm, an upper bound for the operator norm
/// of every evaluation/representation of the matrix.
double coefficient_row_norm(const RingMatrix& a);

}  // namespace quospec
