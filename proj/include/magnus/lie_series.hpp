#pragma once

#include "magnus/lyndon.hpp"
#include "magnus/poly.hpp"

#include <map>

namespace magnus {

struct not_lie_error : domain_error {
  not_lie_error(const std::string& what, int degree) : domain_error(what), witness_degree(degree) {}
  int witness_degree;
};

/// Element of the truncated completion of the free Lie algebra, stored in
/// Lyndon-bracket coordinates per degree. No degree-0 component exists.
class LieSeries {
public:
  LieSeries() = default;
  explicit LieSeries(int trunc, std::string alphabet = "")
      : trunc_(trunc), alphabet_(std::move(alphabet)) {}

  static LieSeries generator(int32_t id, int trunc, std::string alphabet = "");

  int trunc() const { return trunc_; }
  const std::string& alphabet() const { return alphabet_; }
  bool is_zero() const { return coords_.empty(); }

  const std::map<int, std::map<Word, Rational>>& degrees() const { return coords_; }
  Rational coeff(const Word& lyndon) const;
  void set_coeff(const Word& lyndon, const Rational& c);
  void add_coeff(const Word& lyndon, const Rational& c);

  LieSeries operator-() const;
  LieSeries& operator+=(const LieSeries& o);
  friend LieSeries operator+(LieSeries a, const LieSeries& b) { return a += b; }
  LieSeries scaled(const Rational& c) const;
  LieSeries truncated(int m) const;

  friend bool operator==(const LieSeries& a, const LieSeries& b) {
    return a.trunc_ == b.trunc_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const LieSeries& a, const LieSeries& b) { return !(a == b); }

private:
  std::map<int, std::map<Word, Rational>> coords_;  // degree -> lyndon word -> coeff
  int trunc_ = 0;
  std::string alphabet_;
};

/// Expansion into the free associative algebra via standard bracketings.
NcPoly lie_to_poly(const LieSeries& l, int n);

/// Lyndon coordinates of a Lie polynomial without constant term. Uses the
/// triangularity of bracketing expansions; throws not_lie_error (with the
/// first bad degree) when a homogeneous component is not a Lie element.
LieSeries lie_from_poly(const NcPoly& p);

/// Lie bracket in Lyndon coordinates.
LieSeries lie_bracket(const LieSeries& a, const LieSeries& b, int n);

/// exp as a truncated power series with constant term 1.
NcPoly lie_exp(const LieSeries& l, int n);

/// log of a series with constant term 1; errors when the logarithm is not a
/// Lie element (the input lies outside the Magnus group).
LieSeries poly_log(const NcPoly& u, int n);

/// Baker-Campbell-Hausdorff: log(exp(a) exp(b)) truncated at degree n.
LieSeries bch(const LieSeries& a, const LieSeries& b, int n);

} // namespace magnus
