#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace magnus {

/// Element of the root lattice Q: a finitely supported integer vector over
/// simple-root indices. Index values are model-chosen labels (e.g. -1 for
/// the real simple root of the Monster model, 100*j+k for alpha_{jk}).
class RootVector {
public:
  RootVector() = default;

  long long coeff(long long idx) const {
    auto it = c_.find(idx);
    return it == c_.end() ? 0 : it->second;
  }
  void set(long long idx, long long v) {
    if (v == 0) c_.erase(idx); else c_[idx] = v;
  }
  void add(long long idx, long long v) { set(idx, coeff(idx) + v); }

  bool is_zero() const { return c_.empty(); }
  const std::map<long long, long long>& coords() const { return c_; }

  RootVector& operator+=(const RootVector& o) {
    for (const auto& [i, v] : o.c_) add(i, v);
    return *this;
  }
  RootVector& operator-=(const RootVector& o) {
    for (const auto& [i, v] : o.c_) add(i, -v);
    return *this;
  }
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  RootVector operator-() const {
    RootVector r;
    for (const auto& [i, v] : c_) r.c_[i] = -v;
    return r;
  }
  RootVector scaled(long long k) const {
    RootVector r;
    if (k != 0)
      for (const auto& [i, v] : c_) r.c_[i] = k * v;
    return r;
  }

  friend bool operator==(const RootVector& a, const RootVector& b) { return a.c_ == b.c_; }
  friend bool operator!=(const RootVector& a, const RootVector& b) { return a.c_ != b.c_; }
  friend bool operator<(const RootVector& a, const RootVector& b) { return a.c_ < b.c_; }

  static RootVector unit(long long idx) {
    RootVector r;
    r.c_[idx] = 1;
    return r;
  }

  std::string str() const;

private:
  std::map<long long, long long> c_;
};

} // namespace magnus
