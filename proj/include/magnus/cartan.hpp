#pragma once

#include "magnus/rational.hpp"
#include "magnus/root_vector.hpp"

#include <string>
#include <vector>

namespace magnus {

/// Materialized window of a (possibly infinite) Borcherds Cartan matrix.
/// Rows/columns are indexed by simple-root labels; realIndices J is derived
/// from the diagonal.
class BorcherdsCartanMatrix {
public:
  BorcherdsCartanMatrix() = default;
  BorcherdsCartanMatrix(std::vector<long long> labels, std::vector<std::vector<Rational>> entries);

  size_t size() const { return labels_.size(); }
  const std::vector<long long>& labels() const { return labels_; }
  const Rational& entry(size_t i, size_t j) const { return a_[i][j]; }
  Rational entry_by_label(long long i, long long j) const;
  bool has_label(long long l) const;
  bool is_real(long long label) const;  // a_ii > 0
  std::vector<long long> real_labels() const;

  /// Bilinear extension of a_ij to the root lattice window.
  Rational pairing(const RootVector& a, const RootVector& b) const;

private:
  size_t pos(long long label) const;
  std::vector<long long> labels_;
  std::vector<std::vector<Rational>> a_;
};

struct BcmViolation {
  std::string condition;  // "B1", "B2", "B3", "T2.7"
  long long i = 0, j = 0;
  std::string detail;
};

struct BcmReport {
  bool passed = true;
  std::vector<BcmViolation> violations;
};

/// Checks B1 (symmetry), B2 (off-diagonal <= 0), B3 (integrality for real
/// rows) and the free-decomposition hypothesis: distinct imaginary simple
/// roots must pair strictly negatively.
BcmReport validate_bcm(const BorcherdsCartanMatrix& m);

} // namespace magnus
