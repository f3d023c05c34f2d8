#include "pqx/rational.hpp"

#include <stdexcept>

#include <json.hpp>

namespace pqx {

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: '" + s + "'");
  if (v.get_den() == 0) throw std::invalid_argument("zero denominator");
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.sign() == 0) throw std::domain_error("division by zero");
  return Rational(mpq_class(v_ / o.v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator();
  return numerator() + "/" + denominator();
}

namespace {

nlohmann::json int_or_string(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
  return z.get_str();
}

}  // namespace

nlohmann::json Rational::to_json() const {
  return nlohmann::json{{"num", int_or_string(v_.get_num())}, {"den", int_or_string(v_.get_den())}};
}

}  // namespace pqx
