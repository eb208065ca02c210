#include "magnus/lyndon.hpp"

#include <algorithm>
#include <map>

namespace magnus {

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  // Lyndon iff strictly smaller than every proper suffix.
  for (size_t i = 1; i < w.size(); ++i)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end()))
      return false;
  return true;
}

std::vector<Word> lyndon_words(int k, int n) {
  std::vector<Word> out;
  if (n <= 0 || k <= 0) return out;
  // Duval's algorithm over {0..k-1}, keeping words of length exactly n.
  Word w{0};
  while (true) {
    if (static_cast<int>(w.size()) == n) out.push_back(w);
    // extend periodically to length n
    Word t = w;
    while (static_cast<int>(t.size()) < n) t.push_back(t[t.size() % w.size()]);
    // increment
    while (!t.empty() && t.back() == k - 1) t.pop_back();
    if (t.empty()) break;
    ++t.back();
    w = t;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> lyndon_words_upto(int k, int n) {
  std::vector<Word> out;
  for (int m = 1; m <= n; ++m) {
    auto v = lyndon_words(k, m);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

std::pair<Word, Word> std_factorization(const Word& w) {
  if (w.size() < 2) throw domain_error("std_factorization: word too short");
  // The longest proper Lyndon suffix is the lex-least proper suffix.
  size_t best = 1;
  for (size_t i = 2; i < w.size(); ++i)
    if (std::lexicographical_compare(w.begin() + i, w.end(), w.begin() + best, w.end()))
      best = i;
  Word u(w.begin(), w.begin() + best), v(w.begin() + best, w.end());
  return {u, v};
}

NcPoly bracketing(const Word& w, int trunc, const std::string& alphabet) {
  if (w.empty()) throw domain_error("bracketing: empty word");
  if (w.size() == 1) return NcPoly::generator(w[0], trunc, alphabet);
  auto [u, v] = std_factorization(w);
  NcPoly bu = bracketing(u, trunc, alphabet);
  NcPoly bv = bracketing(v, trunc, alphabet);
  return commutator(bu, bv);
}

NcPoly dsw_project(const NcPoly& p) {
  if (!p.constant_term().is_zero())
    throw domain_error("dsw_project: polynomial has a constant term");
  NcPoly r(p.trunc(), p.alphabet());
  for (const auto& [w, c] : p.terms()) {
    // left-normed bracket of the letters of w
    NcPoly b = NcPoly::generator(w[0], p.trunc(), p.alphabet());
    for (size_t i = 1; i < w.size(); ++i)
      b = commutator(b, NcPoly::generator(w[i], p.trunc(), p.alphabet()));
    r += b.scaled(c);
  }
  return r;
}

bool is_lie(const NcPoly& p) {
  if (!p.constant_term().is_zero()) return false;
  for (int n = std::max(1, p.min_len()); n <= p.max_len(); ++n) {
    NcPoly pn = p.component(n);
    if (pn.is_zero()) continue;
    if (dsw_project(pn) != pn.scaled(Rational(n))) return false;
  }
  return true;
}

namespace {
int moebius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  if (n > 1) m = -m;
  return m;
}
} // namespace

long long witt_dimension(int k, int n) {
  long long s = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    long long pw = 1;
    for (int i = 0; i < n / d; ++i) pw *= k;
    s += moebius(d) * pw;
  }
  return s / n;
}

} // namespace magnus
