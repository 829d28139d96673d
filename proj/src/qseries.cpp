#include "hookbias/qseries.hpp"

#include <algorithm>
#include <array>

#include "hookbias/errors.hpp"

namespace hookbias {

namespace {

coeff_t checked_add(coeff_t a, coeff_t b) {
  coeff_t r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("series coefficient overflow in addition");
  return r;
}

coeff_t checked_sub(coeff_t a, coeff_t b) {
  coeff_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("series coefficient overflow in subtraction");
  return r;
}

coeff_t checked_mul(coeff_t a, coeff_t b) {
  coeff_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("series coefficient overflow in product");
  return r;
}

// Polynomial with the given exponents (each coefficient +1 unless listed).
TruncatedSeries poly(std::uint32_t degree,
                     std::initializer_list<std::pair<std::uint64_t, coeff_t>> terms) {
  TruncatedSeries s(degree);
  for (auto [e, c] : terms) {
    if (e <= degree) s[e] = checked_add(s[e], c);
  }
  return s;
}

// sum_{n=1}^{upto} q^{2n}
TruncatedSeries even_powers(std::uint32_t degree, std::uint64_t upto) {
  TruncatedSeries s(degree);
  for (std::uint64_t n = 1; n <= upto && 2 * n <= degree; ++n) s[2 * n] = 1;
  return s;
}

// (q^s;q^s)_inf / (q;q)_inf: partitions with no part divisible by s.
TruncatedSeries regular_partitions(std::uint32_t s, std::uint32_t degree) {
  TruncatedSeries r = TruncatedSeries::one(degree);
  for (std::uint32_t j = 1; j <= degree; ++j) {
    if (j % s != 0) r = r.divided_by_one_minus(j);
  }
  return r;
}

}  // namespace

std::string to_decimal(coeff_t v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // Work with negative values so the minimum is representable.
  std::string digits;
  coeff_t x = neg ? v : -v;
  while (x != 0) {
    int d = static_cast<int>(-(x % 10));
    digits.push_back(static_cast<char>('0' + d));
    x /= 10;
  }
  if (neg) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

coeff_t from_decimal(const std::string& text) {
  std::size_t i = 0;
  bool neg = !text.empty() && text[0] == '-';
  if (neg) i = 1;
  if (i == text.size()) throw parse_error("empty integer '" + text + "'");
  coeff_t v = 0;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw parse_error("invalid integer '" + text + "'");
    coeff_t digit = text[i] - '0';
    // Accumulate negatively so the minimum value parses.
    if (__builtin_mul_overflow(v, 10, &v) || __builtin_sub_overflow(v, digit, &v)) {
      throw parse_error("integer out of range '" + text + "'");
    }
  }
  if (!neg) {
    if (__builtin_mul_overflow(v, -1, &v)) throw parse_error("integer out of range '" + text + "'");
  }
  return v;
}

TruncatedSeries::TruncatedSeries(std::uint32_t degree, std::vector<coeff_t> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(std::size_t{degree} + 1, 0);
}

TruncatedSeries TruncatedSeries::monomial(std::uint32_t degree, std::uint64_t exponent, coeff_t coeff) {
  TruncatedSeries s(degree);
  if (exponent <= degree) s.coeffs_[exponent] = coeff;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::uint32_t degree) const {
  std::vector<coeff_t> c(coeffs_.begin(),
                         coeffs_.begin() + std::min<std::size_t>(coeffs_.size(), std::size_t{degree} + 1));
  return TruncatedSeries(degree, std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::uint32_t n = std::min(a.degree(), b.degree());
  TruncatedSeries r(n);
  for (std::uint32_t i = 0; i <= n; ++i) r.coeffs_[i] = checked_add(a.coeffs_[i], b.coeffs_[i]);
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::uint32_t n = std::min(a.degree(), b.degree());
  TruncatedSeries r(n);
  for (std::uint32_t i = 0; i <= n; ++i) r.coeffs_[i] = checked_sub(a.coeffs_[i], b.coeffs_[i]);
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::uint32_t n = std::min(a.degree(), b.degree());
  TruncatedSeries r(n);
  for (std::uint32_t i = 0; i <= n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::uint32_t j = 0; i + j <= n; ++j) {
      if (b.coeffs_[j] == 0) continue;
      r.coeffs_[i + j] = checked_add(r.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::scaled(coeff_t factor) const {
  TruncatedSeries r(degree());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = checked_mul(coeffs_[i], factor);
  return r;
}

TruncatedSeries TruncatedSeries::shifted(std::uint64_t m) const {
  TruncatedSeries r(degree());
  for (std::size_t i = 0; i + m < coeffs_.size(); ++i) r.coeffs_[i + m] = coeffs_[i];
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
  const coeff_t c0 = coeffs_[0];
  if (c0 != 1 && c0 != -1) {
    throw domain_error("series inverse needs constant term +1 or -1, got " + to_decimal(c0));
  }
  // r_0 = 1/c0; r_n = -(1/c0) * sum_{i=1}^{n} s_i r_{n-i}; 1/c0 == c0 for units.
  TruncatedSeries r(degree());
  r.coeffs_[0] = c0;
  for (std::size_t n = 1; n < coeffs_.size(); ++n) {
    coeff_t acc = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (coeffs_[i] == 0) continue;
      acc = checked_add(acc, checked_mul(coeffs_[i], r.coeffs_[n - i]));
    }
    r.coeffs_[n] = checked_mul(-acc, c0);
  }
  return r;
}

TruncatedSeries TruncatedSeries::divided_by_one_minus(std::uint64_t m) const {
  if (m == 0) throw domain_error("1/(1 - q^0) is undefined");
  TruncatedSeries r = *this;
  for (std::size_t i = m; i < r.coeffs_.size(); ++i) {
    r.coeffs_[i] = checked_add(r.coeffs_[i], r.coeffs_[i - m]);
  }
  return r;
}

TruncatedSeries pochhammer(std::uint64_t a, std::uint64_t step, std::uint32_t degree) {
  if (a < 1 || step < 1) throw domain_error("pochhammer needs a >= 1 and step >= 1");
  TruncatedSeries r = TruncatedSeries::one(degree);
  for (std::uint64_t e = a; e <= degree; e += step) r = r - r.shifted(e);
  return r;
}

TruncatedSeries kim_bt2_series(std::uint32_t t, std::uint32_t degree) {
  if (t < 2) throw domain_error("b_{t,2} series needs t >= 2");
  const std::uint64_t T = t;
  TruncatedSeries inner =
      poly(degree, {{2, 2}}).divided_by_one_minus(2) -
      TruncatedSeries::monomial(degree, T).divided_by_one_minus(T) +
      poly(degree, {{2 * T - 1, 1}, {2 * T, -1}, {2 * T + 1, 1}}).divided_by_one_minus(2 * T);
  return regular_partitions(t, degree) * inner;
}

const char* term_name(Term term) {
  static constexpr std::array<const char*, 6> names{"a", "b", "c", "d", "e", "f"};
  return names[static_cast<std::size_t>(term)];
}

Term parse_term(const std::string& text) {
  if (text.size() == 1 && text[0] >= 'a' && text[0] <= 'f') return static_cast<Term>(text[0] - 'a');
  throw parse_error("unknown decomposition term '" + text + "' (expected a..f)");
}

TruncatedSeries decomposition_term(Term term, std::uint32_t t, std::uint32_t degree) {
  if (t < 3) throw domain_error("decomposition terms need t >= 3, got t=" + std::to_string(t));
  const std::uint64_t T = t;
  const bool odd = t % 2 == 1;
  switch (term) {
    case Term::a: {
      auto num = even_powers(degree, T);
      if (odd) num = num - TruncatedSeries::monomial(degree, T + 1);
      return (regular_partitions(t + 1, degree) * num).divided_by_one_minus(2 * T + 2);
    }
    case Term::b:
      if (odd) {
        return (regular_partitions(t, degree) * even_powers(degree, T - 1)).divided_by_one_minus(2 * T);
      }
      return regular_partitions(t + 1, degree).shifted(T + 1).divided_by_one_minus(2 * T + 2);
    case Term::c:
      if (odd) return regular_partitions(t, degree).shifted(T).divided_by_one_minus(2 * T);
      return (regular_partitions(t, degree) *
              (even_powers(degree, T - 1) - TruncatedSeries::monomial(degree, T)))
          .divided_by_one_minus(2 * T);
    case Term::d:
      if (odd) {
        return (regular_partitions(t + 1, degree) * even_powers(degree, T)).divided_by_one_minus(2 * T + 2);
      }
      return (regular_partitions(t, degree) * even_powers(degree, T - 1)).divided_by_one_minus(2 * T);
    case Term::e:
    case Term::f: {
      // (1 - q^s)(q^{3s};q^s)_inf/(q;q)_inf: parts not divisible by s, plus
      // parts equal to 2s.
      const std::uint64_t s = term == Term::e ? T + 1 : T;
      const std::uint64_t lo = term == Term::e ? 2 * T + 1 : 2 * T - 1;
      TruncatedSeries base = TruncatedSeries::one(degree);
      for (std::uint64_t j = 1; j <= degree; ++j) {
        if (j % s != 0 || j == 2 * s) base = base.divided_by_one_minus(j);
      }
      return base * poly(degree, {{lo, 1}, {lo + 2, 1}});
    }
  }
  throw domain_error("unknown decomposition term");
}

int decomposition_sign(Term term, std::uint32_t t) {
  const bool odd = t % 2 == 1;
  switch (term) {
    case Term::a: return odd ? 1 : 2;
    case Term::b: return odd ? -2 : -1;
    case Term::c: return odd ? 1 : -1;
    case Term::d: return odd ? 1 : -1;
    case Term::e: return 1;
    case Term::f: return -1;
  }
  return 0;
}

TruncatedSeries decomposition_sum(std::uint32_t t, std::uint32_t degree) {
  TruncatedSeries sum(degree);
  for (Term term : {Term::a, Term::b, Term::c, Term::d, Term::e, Term::f}) {
    sum = sum + decomposition_term(term, t, degree).scaled(decomposition_sign(term, t));
  }
  return sum;
}

}  // namespace hookbias
