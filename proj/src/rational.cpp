#include "magnus/rational.hpp"

namespace magnus {

mpq_class Rational::from_ll(long long n) {
  if constexpr (sizeof(long long) == sizeof(long)) {
    return mpq_class(mpz_class(static_cast<long>(n)));
  } else {
    return mpq_class(mpz_class(std::to_string(n)));
  }
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw domain_error("Rational: zero denominator");
  v_ = mpq_class(from_ll(num)) / mpq_class(from_ll(den));
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw domain_error("Rational::parse: empty string");
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw domain_error("Rational::parse: bad literal '" + s + "'");
  if (v.get_den() == 0) throw domain_error("Rational::parse: zero denominator in '" + s + "'");
  v.canonicalize();
  return Rational(v);
}

long long Rational::num_ll() const {
  if (!v_.get_num().fits_slong_p()) throw domain_error("Rational: numerator out of range");
  return v_.get_num().get_si();
}

long long Rational::den_ll() const {
  if (!v_.get_den().fits_slong_p()) throw domain_error("Rational: denominator out of range");
  return v_.get_den().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw domain_error("Rational: 0 to a negative power");
    return Rational(0);
  }
  mpq_class base = e < 0 ? mpq_class(1) / v_ : v_;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                               : static_cast<unsigned long long>(e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(k));
  mpq_class r(num);
  r /= mpq_class(den);
  r.canonicalize();
  return Rational(r);
}

Rational Rational::inv() const {
  if (is_zero()) throw domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1 / v_));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational factorial(unsigned n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return Rational(z);
}

} // namespace magnus
