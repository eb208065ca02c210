#pragma once

#include "magnus/rational.hpp"

#include <optional>
#include <vector>

namespace magnus {

using Vec = std::vector<Rational>;
using Mat = std::vector<std::vector<Rational>>;

/// In-place reduced row echelon form. Returns the pivot column indices.
std::vector<int> rref(Mat& m);

int rank(Mat m);

/// Solves A x = b exactly. Empty optional when inconsistent; free variables
/// are set to zero.
std::optional<Vec> solve(const Mat& a, const Vec& b);

std::optional<Mat> inverse(const Mat& a);

Vec mat_vec(const Mat& a, const Vec& x);

} // namespace magnus
