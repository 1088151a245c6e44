#include "bridgeworks/numeric.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <system_error>

namespace bridgeworks {

std::string_view to_string(Backend backend) {
  return backend == Backend::kRational ? "rational" : "double";
}

std::optional<Backend> parse_backend(std::string_view text) {
  if (text == "rational") return Backend::kRational;
  if (text == "double") return Backend::kDouble;
  return std::nullopt;
}

std::optional<Rational> exact_sqrt(const Rational& value) {
  if (sgn(value) < 0) return std::nullopt;
  const mpz_class& num = value.get_num();
  const mpz_class& den = value.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
      mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class root_num;
  mpz_class root_den;
  mpz_sqrt(root_num.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(root_den.get_mpz_t(), den.get_mpz_t());
  Rational root(root_num, root_den);
  root.canonicalize();
  return root;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

BigInt pow10(unsigned long exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw InputError("empty numeral");
  std::string_view body = text;
  bool negative = false;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw InputError("malformed rational '" + std::string(text) + "'");
    }
    BigInt d(std::string(den), 10);
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    result = Rational(BigInt(std::string(num), 10), d);
    result.canonicalize();
  } else {
    std::string_view mantissa = body;
    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = body.substr(0, e);
      std::string_view exp_text = body.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) {
        throw InputError("malformed exponent in '" + std::string(text) + "'");
      }
      std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
      if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    long fraction_digits = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      std::string_view whole = mantissa.substr(0, dot);
      std::string_view frac = mantissa.substr(dot + 1);
      if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
          (whole.empty() && frac.empty())) {
        throw InputError("malformed decimal '" + std::string(text) + "'");
      }
      digits = std::string(whole) + std::string(frac);
      fraction_digits = static_cast<long>(frac.size());
    } else {
      if (!all_digits(mantissa)) {
        throw InputError("malformed numeral '" + std::string(text) + "'");
      }
      digits = std::string(mantissa);
    }
    BigInt value(digits, 10);
    long scale = exponent - fraction_digits;
    if (scale >= 0) {
      result = Rational(value * pow10(static_cast<unsigned long>(scale)));
    } else {
      result = Rational(value, pow10(static_cast<unsigned long>(-scale)));
      result.canonicalize();
    }
  }
  if (negative) result = -result;
  return result;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

std::string format_double(double value) {
  std::array<char, 64> buffer{};
  auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc()) return std::to_string(value);
  return std::string(buffer.data(), end);
}

Length Length::exact(Rational value) {
  if (sgn(value) < 0) throw InputError("negative length " + format_rational(value));
  Length length;
  length.approx_ = value.get_d();
  length.exact_ = std::move(value);
  return length;
}

Length Length::approximate(double value) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw InputError("invalid length " + format_double(value));
  }
  Length length;
  length.exact_.reset();
  length.approx_ = value;
  return length;
}

const Rational& Length::rational() const {
  if (!exact_) {
    throw InexactLength("length " + format_double(approx_) +
                        " is not rational; use the double backend");
  }
  return *exact_;
}

bool operator==(const Length& a, const Length& b) {
  if (a.exact_ && b.exact_) return *a.exact_ == *b.exact_;
  return !a.exact_ && !b.exact_ && a.approx_ == b.approx_;
}

}  // namespace bridgeworks
