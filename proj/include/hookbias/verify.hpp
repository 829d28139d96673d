#pragma once

#include <cstdint>
#include <vector>

#include "hookbias/cache.hpp"
#include "hookbias/injections.hpp"
#include "hookbias/opo.hpp"
#include "hookbias/qseries.hpp"
#include "hookbias/report.hpp"

namespace hookbias {

struct RunOptions {
  unsigned workers = 1;
  /// Optional; results are identical with or without it.
  const ResultCache* cache = nullptr;
};

/// Cache-aware accessors.
TruncatedSeries kim_series_cached(std::uint32_t t, std::uint32_t degree, const RunOptions& opts);
TruncatedSeries decomposition_term_cached(Term term, std::uint32_t t, std::uint32_t degree,
                                          const RunOptions& opts);
std::vector<std::uint64_t> set_cardinalities_cached(SetId id, std::uint32_t t, std::uint32_t n_max,
                                                    const RunOptions& opts);

/// The series term whose coefficients count `id` (A1, A2 and the tagged
/// sets are halves of the A family and share its term).
Term term_for_set(SetId id);

/// Coefficients of the b_{t,2} series against exhaustive hook counting,
/// for every t in [t_from, t_to] and n <= n_max.
VerificationReport verify_series_oracle(std::uint32_t t_from, std::uint32_t t_to, std::uint32_t n_max,
                                        const RunOptions& opts);

/// b_{t+1,2} - b_{t,2} against the signed sum of the six terms for n <= degree,
/// and against exhaustive counting for n <= oracle_n_max.
VerificationReport verify_decomposition(std::uint32_t t, std::uint32_t degree, std::uint32_t oracle_n_max,
                                        const RunOptions& opts);

/// Set sizes against series coefficients for n <= n_max. The halves of the
/// A family are checked through the sum of both halves.
VerificationReport check_set_against_series(SetId id, std::uint32_t t, std::uint32_t n_max,
                                            const RunOptions& opts);

/// Exhaustive check of one map over its domain for every n <= n_max: weight,
/// codomain and case subset, injectivity, round trip, case signature, and
/// disjointness from the images of the maps sharing a counting summand.
/// zeta2 is additionally checked as a bijection onto A1.
VerificationReport verify_map(MapId id, std::uint32_t t, std::uint32_t n_max, const RunOptions& opts);

struct ExpectedViolation {
  std::uint32_t t = 0;
  std::uint32_t n = 0;
};

struct ConjectureOptions {
  std::uint32_t t_from = 2;
  std::uint32_t t_to = 8;
  std::uint32_t n_max = 100;
  /// Exhaustive counting cross-check, n <= min(n_max, oracle_n_max).
  std::uint32_t oracle_n_max = 60;
  /// Set-cardinality ledger, t >= 3 and n <= min(n_max, ledger_n_max).
  std::uint32_t ledger_n_max = 30;
  std::vector<ExpectedViolation> expected;
};

/// b_{t+1,2}(n) >= b_{t,2}(n) for t in [t_from, t_to], n <= n_max. Declared
/// violations are listed under exceptions; a declared violation that does not
/// occur inside the range is a failure.
VerificationReport verify_conjecture(const ConjectureOptions& conj, const RunOptions& opts);

}  // namespace hookbias
