#include "dst/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace dst {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long long num, long long den) : v_(static_cast<long>(num)) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ /= mpq_class(static_cast<long>(den));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  mpq_class neg(-v_);
  return Rational(std::move(neg));
}

std::optional<Rational> Rational::try_parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) return std::nullopt;

  mpq_class value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    value = mpq_class(mpz_class(std::string(num), 10), d);
    value.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view ip = body.substr(0, dot);
    const std::string_view fp = body.substr(dot + 1);
    if (!all_digits(ip) || !all_digits(fp)) return std::nullopt;
    mpz_class scaled(std::string(ip) + std::string(fp), 10);
    mpz_class den(1);
    for (size_t i = 0; i < fp.size(); ++i) den *= 10;
    value = mpq_class(scaled, den);
    value.canonicalize();
  } else {
    if (!all_digits(body)) return std::nullopt;
    value = mpq_class(mpz_class(std::string(body), 10));
  }
  if (negative) value = -value;
  return Rational(std::move(value));
}

Rational Rational::parse(std::string_view text) {
  auto r = try_parse(text);
  if (!r) throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  return *r;
}

std::string Rational::str() const {
  if (is_integer()) return num_str();
  return num_str() + "/" + den_str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace dst
