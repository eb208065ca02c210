#include "magnus/poly.hpp"

#include <algorithm>

namespace magnus {

std::string RootVector::str() const {
  if (c_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [i, v] : c_) {
    if (v == 0) continue;
    if (!first) s += v > 0 ? " + " : " - ";
    else if (v < 0) s += "-";
    long long av = v < 0 ? -v : v;
    if (av != 1) s += std::to_string(av) + "*";
    s += "a(" + std::to_string(i) + ")";
    first = false;
  }
  return s;
}

int32_t Alphabet::add(std::string label, RootVector degree,
                      std::map<std::string, Rational> weights) {
  GeneratorSymbol g;
  g.id = static_cast<int32_t>(gens_.size());
  g.label = std::move(label);
  g.degree = std::move(degree);
  g.weights = std::move(weights);
  gens_.push_back(std::move(g));
  return gens_.back().id;
}

const GeneratorSymbol& Alphabet::gen(int32_t id) const {
  if (id < 0 || static_cast<size_t>(id) >= gens_.size())
    throw domain_error("Alphabet: unknown generator id " + std::to_string(id));
  return gens_[id];
}

int32_t Alphabet::find_label(const std::string& label) const {
  for (const auto& g : gens_)
    if (g.label == label) return g.id;
  return -1;
}

RootVector word_degree(const Word& w, const Alphabet& a) {
  RootVector d;
  for (int32_t id : w) d += a.gen(id).degree;
  return d;
}

NcPoly NcPoly::constant(const Rational& c, int trunc, std::string alphabet) {
  NcPoly p(trunc, std::move(alphabet));
  p.add_term(Word{}, c);
  return p;
}

NcPoly NcPoly::generator(int32_t id, int trunc, std::string alphabet) {
  NcPoly p(trunc, std::move(alphabet));
  p.add_term(Word{id}, Rational(1));
  return p;
}

NcPoly NcPoly::monomial(Word w, const Rational& c, int trunc, std::string alphabet) {
  NcPoly p(trunc, std::move(alphabet));
  p.add_term(std::move(w), c);
  return p;
}

Rational NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NcPoly::set_coeff(const Word& w, const Rational& c) {
  if (static_cast<int>(w.size()) > trunc_) return;
  if (c.is_zero()) terms_.erase(w);
  else terms_[w] = c;
}

void NcPoly::add_term(const Word& w, const Rational& c) {
  if (c.is_zero() || static_cast<int>(w.size()) > trunc_) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NcPoly NcPoly::component(int n) const {
  NcPoly r(trunc_, alphabet_);
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) == n) r.terms_.emplace(w, c);
  return r;
}

NcPoly NcPoly::truncated(int m) const {
  NcPoly r(std::min(m, trunc_), alphabet_);
  for (const auto& [w, c] : terms_) {
    if (static_cast<int>(w.size()) > r.trunc_) break;
    r.terms_.emplace(w, c);
  }
  return r;
}

void NcPoly::check_compatible(const NcPoly& o) const {
  if (!alphabet_.empty() && !o.alphabet_.empty() && alphabet_ != o.alphabet_)
    throw domain_error("NcPoly: alphabet mismatch ('" + alphabet_ + "' vs '" + o.alphabet_ + "')");
}

NcPoly NcPoly::operator-() const {
  NcPoly r(trunc_, alphabet_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  check_compatible(o);
  trunc_ = std::min(trunc_, o.trunc_);
  if (alphabet_.empty()) alphabet_ = o.alphabet_;
  // Drop our own terms beyond the (possibly lowered) bound.
  while (!terms_.empty() && static_cast<int>(terms_.rbegin()->first.size()) > trunc_)
    terms_.erase(std::prev(terms_.end()));
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  check_compatible(o);
  trunc_ = std::min(trunc_, o.trunc_);
  if (alphabet_.empty()) alphabet_ = o.alphabet_;
  while (!terms_.empty() && static_cast<int>(terms_.rbegin()->first.size()) > trunc_)
    terms_.erase(std::prev(terms_.end()));
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPoly NcPoly::scaled(const Rational& c) const {
  NcPoly r(trunc_, alphabet_);
  if (c.is_zero()) return r;
  for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
  return r;
}

std::string NcPoly::str(const Alphabet& a) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational ac = c.abs();
    if (first) {
      if (c.sign() < 0) s += "-";
      first = false;
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    bool unit_coeff = ac.is_one() && !w.empty();
    if (!unit_coeff) s += ac.str();
    for (size_t i = 0; i < w.size(); ++i) {
      if (i > 0 || !unit_coeff) s += "*";
      s += a.gen(w[i]).label;
    }
  }
  return s;
}

NcPoly poly_mul(const NcPoly& p, const NcPoly& q, int n) {
  if (!p.alphabet().empty() && !q.alphabet().empty() && p.alphabet() != q.alphabet())
    throw domain_error("poly_mul: alphabet mismatch");
  int bound = std::min(p.trunc(), q.trunc());
  if (n > bound)
    throw domain_error("poly_mul: requested precision " + std::to_string(n) +
                       " exceeds operand truncation " + std::to_string(bound));
  NcPoly r(n, p.alphabet().empty() ? q.alphabet() : p.alphabet());
  for (const auto& [wp, cp] : p.terms()) {
    int room = n - static_cast<int>(wp.size());
    if (room < 0) break;  // terms are length-sorted
    for (const auto& [wq, cq] : q.terms()) {
      if (static_cast<int>(wq.size()) > room) break;
      Word w = wp;
      w.insert(w.end(), wq.begin(), wq.end());
      r.add_term(w, cp * cq);
    }
  }
  return r;
}

NcPoly poly_mul(const NcPoly& p, const NcPoly& q) {
  return poly_mul(p, q, std::min(p.trunc(), q.trunc()));
}

NcPoly commutator(const NcPoly& p, const NcPoly& q, int n) {
  return poly_mul(p, q, n) - poly_mul(q, p, n);
}

NcPoly commutator(const NcPoly& p, const NcPoly& q) {
  return commutator(p, q, std::min(p.trunc(), q.trunc()));
}

} // namespace magnus
