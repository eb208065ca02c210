#pragma once

#include "magnus/rational.hpp"
#include "magnus/root_vector.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace magnus {

/// A word in generator ids; empty = the unit word.
using Word = std::vector<int32_t>;

/// Degree-graded order: by length first, then lexicographically. Keeps term
/// maps bucketed by grade, which the truncated product relies on.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct GeneratorSymbol {
  int32_t id = 0;
  std::string label;
  RootVector degree;
  std::map<std::string, Rational> weights;  // Cartan label -> eigenvalue
};

class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::string id) : id_(std::move(id)) {}

  int32_t add(std::string label, RootVector degree,
              std::map<std::string, Rational> weights = {});
  size_t size() const { return gens_.size(); }
  const GeneratorSymbol& gen(int32_t id) const;
  const std::vector<GeneratorSymbol>& gens() const { return gens_; }
  const std::string& id() const { return id_; }
  int32_t find_label(const std::string& label) const;  // -1 when absent

private:
  std::string id_;
  std::vector<GeneratorSymbol> gens_;
};

RootVector word_degree(const Word& w, const Alphabet& a);

/// Sparse exact polynomial in non-commuting generator symbols, truncated by
/// word length. Zero coefficients are never stored.
class NcPoly {
public:
  NcPoly() = default;
  explicit NcPoly(int trunc, std::string alphabet = "")
      : trunc_(trunc), alphabet_(std::move(alphabet)) {}

  static NcPoly constant(const Rational& c, int trunc, std::string alphabet = "");
  static NcPoly generator(int32_t id, int trunc, std::string alphabet = "");
  static NcPoly monomial(Word w, const Rational& c, int trunc, std::string alphabet = "");

  int trunc() const { return trunc_; }
  const std::string& alphabet() const { return alphabet_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Word, Rational, WordOrder>& terms() const { return terms_; }

  Rational coeff(const Word& w) const;
  Rational constant_term() const { return coeff(Word{}); }
  void set_coeff(const Word& w, const Rational& c);
  void add_term(const Word& w, const Rational& c);

  /// Homogeneous component of word length n.
  NcPoly component(int n) const;
  int max_len() const { return terms_.empty() ? 0 : static_cast<int>(terms_.rbegin()->first.size()); }
  int min_len() const { return terms_.empty() ? 0 : static_cast<int>(terms_.begin()->first.size()); }

  /// Re-truncates to M <= N, dropping longer words.
  NcPoly truncated(int m) const;

  NcPoly operator-() const;
  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  NcPoly scaled(const Rational& c) const;

  friend bool operator==(const NcPoly& a, const NcPoly& b) {
    return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
  }

  std::string str(const Alphabet& a) const;

private:
  void check_compatible(const NcPoly& o) const;
  std::map<Word, Rational, WordOrder> terms_;
  int trunc_ = 0;
  std::string alphabet_;
};

NcPoly poly_mul(const NcPoly& p, const NcPoly& q, int n);
NcPoly poly_mul(const NcPoly& p, const NcPoly& q);
NcPoly commutator(const NcPoly& p, const NcPoly& q);
NcPoly commutator(const NcPoly& p, const NcPoly& q, int n);

} // namespace magnus
