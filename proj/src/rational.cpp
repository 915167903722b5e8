#include "rgsched/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace rgsched {

const char* err_name(Err e) {
  switch (e) {
    case Err::Ok: return "Ok";
    case Err::InvalidParams: return "InvalidParams";
    case Err::ParseError: return "ParseError";
    case Err::InvalidDistribution: return "InvalidDistribution";
    case Err::InvalidAlpha: return "InvalidAlpha";
    case Err::ConditionOnZeroEvent: return "ConditionOnZeroEvent";
    case Err::NotCloseForAnyAlpha: return "NotCloseForAnyAlpha";
    case Err::UnsupportedPair: return "UnsupportedPair";
    case Err::ShiftOutOfRange: return "ShiftOutOfRange";
    case Err::MassNotNormalized: return "MassNotNormalized";
    case Err::GenerationFailed: return "GenerationFailed";
    case Err::OrderInversion: return "OrderInversion";
    case Err::IncompleteSchedule: return "IncompleteSchedule";
    case Err::ScheduleDoesNotCover: return "ScheduleDoesNotCover";
    case Err::StateSpaceTooLarge: return "StateSpaceTooLarge";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_mpz(const std::string& s) {
  std::string body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  if (!all_digits(body)) fail(Err::ParseError, "bad integer: '" + s + "'");
  mpz_class z(body, 10);
  return neg ? mpz_class(-z) : z;
}

mpz_class pow10z(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rat Rat::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) fail(Err::ParseError, "empty number");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    mpz_class num = parse_mpz(s.substr(0, slash));
    mpz_class den = parse_mpz(s.substr(slash + 1));
    if (den == 0) fail(Err::ParseError, "zero denominator: '" + text + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return Rat(q);
  }

  // Decimal form: [sign] digits [. digits] [e|E [sign] digits]
  bool neg = false;
  size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  std::string mantissa;
  long frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  long exp10 = 0;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa += c;
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if ((c == 'e' || c == 'E') && seen_digit) {
      mpz_class e = parse_mpz(s.substr(i + 1));
      if (!e.fits_slong_p()) fail(Err::ParseError, "exponent out of range");
      exp10 = e.get_si();
      break;
    } else {
      fail(Err::ParseError, "bad number: '" + text + "'");
    }
  }
  if (!seen_digit) fail(Err::ParseError, "bad number: '" + text + "'");
  if (mantissa.empty()) mantissa = "0";

  mpz_class num(mantissa, 10);
  mpz_class den = 1;
  long shift = exp10 - frac_digits;
  if (shift >= 0) {
    num *= pow10z(static_cast<unsigned long>(shift));
  } else {
    den = pow10z(static_cast<unsigned long>(-shift));
  }
  if (neg) num = -num;
  mpq_class q(num, den);
  q.canonicalize();
  return Rat(q);
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rat::decimal(int digits) const {
  if (digits < 0) fail(Err::InvalidParams, "negative digit count");
  mpz_class num = v_.get_num();
  mpz_class den = v_.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  mpz_class scaled = num * pow10z(static_cast<unsigned long>(digits));
  // Round to nearest, ties away from zero.
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  if (2 * r >= den) q += 1;

  std::string s = q.get_str();
  std::string out;
  if (digits == 0) {
    out = s;
  } else {
    if (static_cast<long>(s.size()) <= digits) {
      s.insert(0, static_cast<size_t>(digits) - s.size() + 1, '0');
    }
    out = s.substr(0, s.size() - static_cast<size_t>(digits)) + "." +
          s.substr(s.size() - static_cast<size_t>(digits));
  }
  if (neg && q != 0) out.insert(0, 1, '-');
  return out;
}

}  // namespace rgsched
