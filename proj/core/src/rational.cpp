#include "majorlab/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstddef>

#include "majorlab/errors.hpp"

namespace majorlab {

namespace {

bool is_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Rational parse_decimal(const std::string& text) {
  // [sign] digits [. digits] [ (e|E) [sign] digits ]
  std::string mantissa = text;
  long exponent10 = 0;
  const std::size_t epos = text.find_first_of("eE");
  if (epos != std::string::npos) {
    const std::string exp_text = text.substr(epos + 1);
    if (!is_integer_text(exp_text)) throw ParseError("bad exponent in '" + text + "'");
    exponent10 = std::stol(exp_text);
    mantissa = text.substr(0, epos);
  }
  std::string digits = mantissa;
  const std::size_t dot = mantissa.find('.');
  if (dot != std::string::npos) {
    digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    exponent10 -= static_cast<long>(mantissa.size() - dot - 1);
  }
  if (!is_integer_text(digits)) throw ParseError("cannot parse rational '" + text + "'");

  mpz_class num(digits, 10);
  mpz_class den(1);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10u,
                static_cast<unsigned long>(exponent10 < 0 ? -exponent10 : exponent10));
  if (exponent10 < 0) {
    den = scale;
  } else {
    num *= scale;
  }
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  const std::size_t slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den)) {
      throw ParseError("cannot parse rational '" + text + "'");
    }
    Rational out(mpz_class(num, 10), mpz_class(den, 10));
    if (out.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    out.canonicalize();
    return out;
  }
  if (is_integer_text(text)) {
    return Rational(mpz_class(text, 10));
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  if (canonical.get_den() == 1) return canonical.get_num().get_str();
  return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

double to_double(const Rational& value) {
  if (sgn(value) == 0) return 0.0;
  // mpq_get_d truncates toward zero; recompose from 2^k-scaled mantissas for a
  // correctly-rounded-to-within-1ulp result at any magnitude.
  long nexp = 0, dexp = 0;
  const double nman = mpz_get_d_2exp(&nexp, value.get_num().get_mpz_t());
  const double dman = mpz_get_d_2exp(&dexp, value.get_den().get_mpz_t());
  return std::ldexp(nman / dman, static_cast<int>(nexp - dexp));
}

double log2_rational(const Rational& value) {
  if (sgn(value) <= 0) throw DomainViolation("log2 of a non-positive rational");
  long nexp = 0, dexp = 0;
  const double nman = mpz_get_d_2exp(&nexp, value.get_num().get_mpz_t());
  const double dman = mpz_get_d_2exp(&dexp, value.get_den().get_mpz_t());
  return std::log2(nman) - std::log2(dman) + static_cast<double>(nexp - dexp);
}

mpz_class lcm_of_denominators(const std::vector<Rational>& values) {
  mpz_class acc(1);
  for (const Rational& v : values) {
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), v.get_den().get_mpz_t());
  }
  return acc;
}

}  // namespace majorlab
