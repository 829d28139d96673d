#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hookbias {

__extension__ typedef __int128 coeff_t;

/// Decimal rendering of a 128-bit coefficient.
std::string to_decimal(coeff_t v);
/// Inverse of to_decimal; throws parse_error on malformed or out-of-range text.
coeff_t from_decimal(const std::string& text);

/// Integer power series truncated after q^N. Every operation is exact; any
/// intermediate that leaves the signed 128-bit range throws overflow_error.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::uint32_t degree) : coeffs_(std::size_t{degree} + 1, 0) {}
  TruncatedSeries(std::uint32_t degree, std::vector<coeff_t> coeffs);

  static TruncatedSeries zero(std::uint32_t degree) { return TruncatedSeries(degree); }
  static TruncatedSeries one(std::uint32_t degree) { return monomial(degree, 0); }
  /// coeff * q^exponent, or zero when the exponent is past the truncation.
  static TruncatedSeries monomial(std::uint32_t degree, std::uint64_t exponent, coeff_t coeff = 1);

  std::uint32_t degree() const noexcept { return static_cast<std::uint32_t>(coeffs_.size() - 1); }
  coeff_t operator[](std::size_t i) const { return coeffs_.at(i); }
  coeff_t& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<coeff_t>& coeffs() const noexcept { return coeffs_; }

  /// Copy cut down to a lower degree.
  TruncatedSeries truncated(std::uint32_t degree) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  TruncatedSeries scaled(coeff_t factor) const;
  /// Multiplication by q^m.
  TruncatedSeries shifted(std::uint64_t m) const;
  /// Multiplicative inverse; requires a constant term of +1 or -1.
  TruncatedSeries inverse() const;

  /// Multiplication by 1/(1 - q^m) without materializing the inverse:
  /// a running sum along residue classes mod m.
  TruncatedSeries divided_by_one_minus(std::uint64_t m) const;

 private:
  std::vector<coeff_t> coeffs_;
};

/// Product over j >= 0 of (1 - q^(a + j*step)), truncated at `degree`.
TruncatedSeries pochhammer(std::uint64_t a, std::uint64_t step, std::uint32_t degree);

/// Generating function of b_{t,2}(n): total 2-hooks over t-regular partitions.
TruncatedSeries kim_bt2_series(std::uint32_t t, std::uint32_t degree);

enum class Term { a, b, c, d, e, f };

const char* term_name(Term term);
/// Accepts "a".."f"; throws parse_error otherwise.
Term parse_term(const std::string& text);

/// One of the six series in the decomposition of b_{t+1,2} - b_{t,2}.
/// The definitions differ between odd and even t; t >= 3.
TruncatedSeries decomposition_term(Term term, std::uint32_t t, std::uint32_t degree);

/// Signed combination of the six terms for the parity of t:
/// odd  a - 2b + c + d + e - f, even 2a - b - c - d + e - f.
TruncatedSeries decomposition_sum(std::uint32_t t, std::uint32_t degree);

/// Coefficient of each term in decomposition_sum for this parity.
int decomposition_sign(Term term, std::uint32_t t);

}  // namespace hookbias
