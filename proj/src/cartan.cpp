#include "magnus/cartan.hpp"

#include <algorithm>

namespace magnus {

BorcherdsCartanMatrix::BorcherdsCartanMatrix(std::vector<long long> labels,
                                             std::vector<std::vector<Rational>> entries)
    : labels_(std::move(labels)), a_(std::move(entries)) {
  if (a_.size() != labels_.size())
    throw domain_error("BorcherdsCartanMatrix: entry rows do not match labels");
  for (const auto& row : a_)
    if (row.size() != labels_.size())
      throw domain_error("BorcherdsCartanMatrix: ragged entry matrix");
}

size_t BorcherdsCartanMatrix::pos(long long label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    throw domain_error("BorcherdsCartanMatrix: index " + std::to_string(label) +
                       " outside materialized window");
  return static_cast<size_t>(it - labels_.begin());
}

bool BorcherdsCartanMatrix::has_label(long long l) const {
  return std::find(labels_.begin(), labels_.end(), l) != labels_.end();
}

Rational BorcherdsCartanMatrix::entry_by_label(long long i, long long j) const {
  return a_[pos(i)][pos(j)];
}

bool BorcherdsCartanMatrix::is_real(long long label) const {
  size_t p = pos(label);
  return a_[p][p] > Rational(0);
}

std::vector<long long> BorcherdsCartanMatrix::real_labels() const {
  std::vector<long long> r;
  for (size_t i = 0; i < labels_.size(); ++i)
    if (a_[i][i] > Rational(0)) r.push_back(labels_[i]);
  return r;
}

Rational BorcherdsCartanMatrix::pairing(const RootVector& a, const RootVector& b) const {
  Rational s(0);
  for (const auto& [i, vi] : a.coords())
    for (const auto& [j, vj] : b.coords())
      s += Rational(vi) * Rational(vj) * entry_by_label(i, j);
  return s;
}

BcmReport validate_bcm(const BorcherdsCartanMatrix& m) {
  BcmReport rep;
  const size_t n = m.size();
  auto fail = [&](const char* cond, size_t i, size_t j, std::string detail) {
    rep.passed = false;
    rep.violations.push_back({cond, m.labels()[i], m.labels()[j], std::move(detail)});
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (m.entry(i, j) != m.entry(j, i))
        fail("B1", i, j, "a_ij=" + m.entry(i, j).str() + " a_ji=" + m.entry(j, i).str());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j && m.entry(i, j) > Rational(0))
        fail("B2", i, j, "positive off-diagonal " + m.entry(i, j).str());
  for (size_t i = 0; i < n; ++i) {
    if (!(m.entry(i, i) > Rational(0))) continue;
    for (size_t j = 0; j < n; ++j) {
      Rational q = Rational(2) * m.entry(i, j) / m.entry(i, i);
      if (!q.is_integer())
        fail("B3", i, j, "2a_ij/a_ii = " + q.str() + " not an integer");
    }
  }
  // Distinct imaginary simple roots must not be orthogonal.
  for (size_t i = 0; i < n; ++i) {
    if (m.entry(i, i) > Rational(0)) continue;
    for (size_t j = i + 1; j < n; ++j) {
      if (m.entry(j, j) > Rational(0)) continue;
      if (!(m.entry(i, j) < Rational(0)))
        fail("T2.7", i, j, "imaginary pair with a_ij = " + m.entry(i, j).str());
    }
  }
  return rep;
}

} // namespace magnus
