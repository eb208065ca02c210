#pragma once

#include "magnus/poly.hpp"

#include <vector>

namespace magnus {

bool is_lyndon(const Word& w);

/// All Lyndon words of length exactly n over {0,..,k-1}, in lexicographic
/// order (Duval's generation).
std::vector<Word> lyndon_words(int k, int n);

/// All Lyndon words of length 1..n.
std::vector<Word> lyndon_words_upto(int k, int n);

/// Right standard factorization w = u*v, v the longest proper Lyndon suffix.
std::pair<Word, Word> std_factorization(const Word& w);

/// Expansion of the standard bracketing of a Lyndon word into the free
/// associative algebra. Leading (lex-least) word is w with coefficient 1.
NcPoly bracketing(const Word& w, int trunc, const std::string& alphabet = "");

/// Dynkin-Specht-Wever projector: x1..xn -> [..[[x1,x2],x3],..,xn].
/// Requires no constant term. On a homogeneous Lie element of degree n this
/// returns n times the element.
NcPoly dsw_project(const NcPoly& p);

/// True iff every homogeneous component p_n satisfies dsw(p_n) = n*p_n.
bool is_lie(const NcPoly& p);

/// Witt dimension (1/n) sum_{d|n} mu(d) k^{n/d}; test oracle companion to
/// lyndon_words.
long long witt_dimension(int k, int n);

} // namespace magnus
