#include "hookbias/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

#include "hookbias/errors.hpp"
#include "parallel.hpp"

namespace hookbias {

using nlohmann::json;

namespace {

std::vector<std::string> to_strings(const TruncatedSeries& s) {
  std::vector<std::string> out;
  out.reserve(s.coeffs().size());
  for (coeff_t c : s.coeffs()) out.push_back(to_decimal(c));
  return out;
}

std::optional<TruncatedSeries> series_from_cache(const CacheKey& key, const RunOptions& opts) {
  if (!opts.cache) return std::nullopt;
  auto values = opts.cache->load(key);
  if (!values) return std::nullopt;
  try {
    std::vector<coeff_t> coeffs;
    coeffs.reserve(values->size());
    for (const auto& v : *values) coeffs.push_back(from_decimal(v));
    return TruncatedSeries(key.degree, std::move(coeffs));
  } catch (const parse_error&) {
    return std::nullopt;
  }
}

template <class Compute>
TruncatedSeries cached_series(const CacheKey& key, const RunOptions& opts, Compute compute) {
  if (auto hit = series_from_cache(key, opts)) return *hit;
  TruncatedSeries s = compute();
  if (opts.cache) opts.cache->store(key, to_strings(s));
  return s;
}

json coeff_json(coeff_t v) {
  // Exact values: small ones as numbers, anything beyond 64 bits as text.
  if (v >= INT64_MIN && v <= INT64_MAX) return static_cast<std::int64_t>(v);
  return to_decimal(v);
}

json cardinality_vector_json(const std::vector<std::uint64_t>& v) { return json(v); }

}  // namespace

TruncatedSeries kim_series_cached(std::uint32_t t, std::uint32_t degree, const RunOptions& opts) {
  return cached_series({"series", t, "kim", degree}, opts, [&] { return kim_bt2_series(t, degree); });
}

TruncatedSeries decomposition_term_cached(Term term, std::uint32_t t, std::uint32_t degree,
                                          const RunOptions& opts) {
  return cached_series({"series", t, std::string("term-") + term_name(term), degree}, opts,
                       [&] { return decomposition_term(term, t, degree); });
}

std::vector<std::uint64_t> set_cardinalities_cached(SetId id, std::uint32_t t, std::uint32_t n_max,
                                                    const RunOptions& opts) {
  const std::string kind = "cardinality";
  std::vector<std::uint64_t> known;
  if (opts.cache) {
    if (auto values = opts.cache->load_longest(kind, t, set_name(id))) {
      try {
        for (const auto& v : *values) {
          if (known.size() > n_max) break;
          known.push_back(std::stoull(v));
        }
      } catch (const std::exception&) {
        known.clear();
      }
    }
  }
  const std::size_t have = known.size();
  if (have > n_max) return known;
  known.resize(std::size_t{n_max} + 1);
  // Sets are enumerated per n, so a shorter entry still saves its prefix.
  detail::parallel_for(n_max + 1 - have, opts.workers, [&](std::size_t i) {
    std::uint32_t n = static_cast<std::uint32_t>(have + i);
    known[n] = enumerate_set(id, t, n).size();
  });
  if (opts.cache) {
    std::vector<std::string> text;
    for (auto v : known) text.push_back(std::to_string(v));
    opts.cache->store({kind, t, set_name(id), n_max}, text);
  }
  return known;
}

Term term_for_set(SetId id) {
  switch (id) {
    case SetId::A:
    case SetId::A1:
    case SetId::A2:
    case SetId::Ahat3:
    case SetId::Ahat4: return Term::a;
    case SetId::B: return Term::b;
    case SetId::C: return Term::c;
    case SetId::D: return Term::d;
    case SetId::E: return Term::e;
    case SetId::F: return Term::f;
  }
  throw domain_error("unknown set id");
}

VerificationReport verify_series_oracle(std::uint32_t t_from, std::uint32_t t_to, std::uint32_t n_max,
                                        const RunOptions& opts) {
  if (t_from < 2 || t_to < t_from) throw domain_error("series oracle needs 2 <= t_from <= t_to");
  VerificationReport report;
  report.kind = "series_oracle";
  report.params = {{"t_from", t_from}, {"t_to", t_to}, {"n_max", n_max}};
  const std::size_t count = t_to - t_from + 1;
  std::vector<std::vector<std::uint64_t>> oracle(count);
  std::vector<TruncatedSeries> series(count, TruncatedSeries(0));
  detail::parallel_for(count, opts.workers, [&](std::size_t i) {
    const auto t = static_cast<std::uint32_t>(t_from + i);
    oracle[i] = b_t_k_table(t, 2, n_max);
    series[i] = kim_series_cached(t, n_max, opts);
  });
  for (std::size_t i = 0; i < count; ++i) {
    const auto t = static_cast<std::uint32_t>(t_from + i);
    for (std::uint32_t n = 0; n <= n_max; ++n) {
      ++report.checked;
      if (series[i][n] != static_cast<coeff_t>(oracle[i][n])) {
        report.fail({{"t", t}, {"n", n}, {"series", coeff_json(series[i][n])}, {"enumeration", oracle[i][n]}});
      }
    }
    report.observations["b_t2_at_n_max"][std::to_string(t)] = oracle[i][n_max];
  }
  return report;
}

VerificationReport verify_decomposition(std::uint32_t t, std::uint32_t degree, std::uint32_t oracle_n_max,
                                        const RunOptions& opts) {
  if (t < 3) throw domain_error("decomposition needs t >= 3, got t=" + std::to_string(t));
  VerificationReport report;
  report.kind = "decomposition";
  report.params = {{"t", t}, {"degree", degree}, {"oracle_n_max", oracle_n_max},
                   {"parity", t % 2 == 1 ? "odd" : "even"}};

  const TruncatedSeries lhs = kim_series_cached(t + 1, degree, opts) - kim_series_cached(t, degree, opts);
  TruncatedSeries rhs(degree);
  json terms = json::object();
  for (Term term : {Term::a, Term::b, Term::c, Term::d, Term::e, Term::f}) {
    TruncatedSeries s = decomposition_term_cached(term, t, degree, opts);
    for (std::uint32_t n = 0; n <= degree; ++n) {
      if (s[n] < 0) {
        report.fail({{"t", t}, {"n", n}, {"term", term_name(term)}, {"negative_coefficient", coeff_json(s[n])}});
      }
    }
    terms[term_name(term)] = decomposition_sign(term, t);
    rhs = rhs + s.scaled(decomposition_sign(term, t));
  }
  report.observations["signs"] = terms;
  for (std::uint32_t n = 0; n <= degree; ++n) {
    ++report.checked;
    if (lhs[n] != rhs[n]) {
      report.fail({{"t", t}, {"n", n}, {"lhs", coeff_json(lhs[n])}, {"rhs", coeff_json(rhs[n])}});
    }
  }
  const std::uint32_t m = std::min(degree, oracle_n_max);
  auto upper = b_t_k_table(t + 1, 2, m);
  auto lower = b_t_k_table(t, 2, m);
  for (std::uint32_t n = 0; n <= m; ++n) {
    ++report.checked;
    coeff_t direct = static_cast<coeff_t>(upper[n]) - static_cast<coeff_t>(lower[n]);
    if (direct != lhs[n]) {
      report.fail({{"t", t}, {"n", n}, {"lhs", coeff_json(lhs[n])}, {"enumeration", coeff_json(direct)}});
    }
  }
  return report;
}

VerificationReport check_set_against_series(SetId id, std::uint32_t t, std::uint32_t n_max,
                                            const RunOptions& opts) {
  if (!set_defined_for(id, t) || t < 3) {
    throw domain_error(std::string("set ") + set_name(id) + " is not defined for t=" + std::to_string(t));
  }
  VerificationReport report;
  report.kind = "set_cardinality_vs_series";
  report.params = {{"set", set_name(id)}, {"t", t}, {"n_max", n_max}};

  std::vector<SetId> family{id};
  if (id == SetId::A1 || id == SetId::A2) family = {SetId::A1, SetId::A2};
  if (id == SetId::Ahat3 || id == SetId::Ahat4) family = {SetId::Ahat3, SetId::Ahat4};
  const Term term = term_for_set(id);
  report.observations["term"] = term_name(term);
  json names = json::array();
  for (SetId s : family) names.push_back(set_name(s));
  report.observations["compared_sum_of"] = names;

  const TruncatedSeries series = decomposition_term_cached(term, t, n_max, opts);
  std::vector<std::uint64_t> total(std::size_t{n_max} + 1, 0);
  for (SetId s : family) {
    auto sizes = set_cardinalities_cached(s, t, n_max, opts);
    for (std::uint32_t n = 0; n <= n_max; ++n) total[n] += sizes[n];
    report.observations["cardinalities"][set_name(s)] = cardinality_vector_json(sizes);
  }
  for (std::uint32_t n = 0; n <= n_max; ++n) {
    ++report.checked;
    if (static_cast<coeff_t>(total[n]) == series[n]) continue;
    json members = json::array();
    for (SetId s : family) {
      for (const auto& x : enumerate_set(s, t, n)) {
        if (members.size() >= 200) break;
        members.push_back(x.to_string());
      }
    }
    report.fail({{"t", t}, {"n", n}, {"cardinality", total[n]}, {"coefficient", coeff_json(series[n])},
                 {"members", members}});
  }
  return report;
}

namespace {

// Label of the counting summand an image is charged to. Images with the same
// label must never coincide, even across different maps.
std::string summand_label(SetId hit) {
  switch (hit) {
    case SetId::A1:
    case SetId::A2:
    case SetId::A: return "A";
    case SetId::Ahat3:
    case SetId::Ahat4: return "Ahat";
    default: return set_name(hit);
  }
}

std::vector<MapId> partner_maps(MapId id) {
  switch (id) {
    case MapId::phi1: return {MapId::phi3};
    case MapId::phi2: return {};
    case MapId::phi3: return {MapId::phi1};
    case MapId::zeta1: return {MapId::zeta3};
    case MapId::zeta2: return {MapId::zeta3};
    case MapId::zeta3: return {MapId::zeta1, MapId::zeta2};
  }
  return {};
}

// Whether the image of a phi3/zeta3 case has the signature its case claims.
bool signature_matches(int case_number, std::uint32_t t, const OpoOverpartition& mu) {
  const std::int64_t s = case_signature(mu, t);
  const part_t o = mu.overlined;
  const bool even = t % 2 == 0;
  switch (case_number) {
    case 1: return !mu.tagged && o == 2 * t + 1 && s >= 0;
    case 2: return !mu.tagged && o == 2 * t + 3 && s >= 0;
    case 3: return !mu.tagged && o == 2 * t + 3 && s < 0;
    case 4:
      if (even && t == 4) return mu.tagged && ((o == 8 && s == -1) || (o == 4 && mu.base.contains(3)));
      return !mu.tagged && o == (even ? 2 : t - 1) && s == -1;
    case 5: return !mu.tagged && o == 2 * t && (s == 0 || s == 1);
    case 6: return !mu.tagged && o == 2 && s == -2;
    case 7: return !mu.tagged && o == 2 * t && s == -1;
    case 8: return !mu.tagged && o == 2 && s >= 0 && s <= 2;
  }
  return false;
}

json trace_json(const MapTrace& tr) {
  return {{"input", tr.input.to_string()},
          {"case", tr.case_label},
          {"output", tr.output.to_string()},
          {"codomain", set_name(tr.codomain_hit)}};
}

struct MapRun {
  VerificationReport report;
  std::map<std::string, std::uint64_t> case_counts;
  std::map<std::string, std::set<std::pair<std::int64_t, std::int64_t>>> signatures;
  json zeta2_sizes;
};

MapRun check_map_at(MapId id, std::uint32_t t, std::uint32_t n) {
  MapRun run;
  auto& report = run.report;
  const bool signed_cases = id == MapId::phi3 || id == MapId::zeta3;
  const auto codomain = map_codomain(id, t);

  // Image object -> input, for injectivity and for cross-map disjointness.
  std::unordered_map<std::string, std::string> images;
  std::unordered_map<std::string, std::string> labelled;
  std::uint64_t domain_size = 0;

  for (SetId dom : map_domain(id)) {
    for (const auto& x : enumerate_set(dom, t, n)) {
      ++domain_size;
      ++report.checked;
      MapTrace tr = apply_map(id, t, x);
      ++run.case_counts[tr.case_label];
      const std::string key = tr.output.to_string();
      auto failure = [&](const std::string& what) {
        json j = trace_json(tr);
        j["n"] = n;
        j["check"] = what;
        report.fail(std::move(j));
      };
      if (tr.output.weight() != n) failure("weight");
      bool declared = std::find(codomain.begin(), codomain.end(), tr.codomain_hit) != codomain.end();
      if (!declared || !set_membership(tr.codomain_hit, t, tr.output)) failure("codomain");
      if (auto [it, fresh] = images.emplace(key, x.to_string()); !fresh) {
        json j = trace_json(tr);
        j["n"] = n;
        j["check"] = "injectivity";
        j["other_input"] = it->second;
        report.fail(std::move(j));
      }
      labelled.emplace(summand_label(tr.codomain_hit) + "|" + key, x.to_string());
      try {
        OpoOverpartition back = invert_map(id, t, tr.output);
        if (!(back == x)) {
          json j = trace_json(tr);
          j["n"] = n;
          j["check"] = "round_trip";
          j["inverse"] = back.to_string();
          report.fail(std::move(j));
        }
      } catch (const not_in_image_error& e) {
        json j = trace_json(tr);
        j["n"] = n;
        j["check"] = "round_trip";
        j["error"] = e.what();
        report.fail(std::move(j));
      }
      if (signed_cases) {
        run.signatures[tr.case_label].insert({tr.output.overlined, case_signature(tr.output, t)});
        if (!signature_matches(tr.case_number, t, tr.output)) failure("case_signature");
      }
    }
  }

  for (MapId partner : partner_maps(id)) {
    for (SetId dom : map_domain(partner)) {
      for (const auto& x : enumerate_set(dom, t, n)) {
        MapTrace tr = apply_map(partner, t, x);
        const std::string label = summand_label(tr.codomain_hit) + "|" + tr.output.to_string();
        if (auto it = labelled.find(label); it != labelled.end()) {
          report.fail({{"n", n},
                        {"check", "cross_image_disjointness"},
                        {"output", tr.output.to_string()},
                        {"input", it->second},
                        {"partner_map", map_name(partner)},
                        {"partner_input", x.to_string()}});
        }
      }
    }
  }

  if (id == MapId::zeta2) {
    const auto targets = enumerate_set(SetId::A1, t, n);
    run.zeta2_sizes = json::array({domain_size, targets.size()});
    if (targets.size() != domain_size) {
      report.fail({{"n", n}, {"check", "bijection_cardinality"}, {"domain", domain_size}, {"A1", targets.size()}});
    }
    for (const auto& mu : targets) {
      ++report.checked;
      try {
        OpoOverpartition pre = invert_map(id, t, mu);
        MapTrace tr = apply_map(id, t, pre);
        if (!(tr.output == mu)) {
          report.fail({{"n", n}, {"check", "bijection_surjectivity"}, {"target", mu.to_string()},
                       {"preimage", pre.to_string()}, {"image", tr.output.to_string()}});
        }
      } catch (const std::exception& e) {
        report.fail({{"n", n}, {"check", "bijection_surjectivity"}, {"target", mu.to_string()},
                     {"error", e.what()}});
      }
    }
  }
  return run;
}

}  // namespace

VerificationReport verify_map(MapId id, std::uint32_t t, std::uint32_t n_max, const RunOptions& opts) {
  if (!map_defined_for(id, t)) {
    throw domain_error(std::string(map_name(id)) + " is not defined for t=" + std::to_string(t));
  }
  std::vector<MapRun> runs(std::size_t{n_max} + 1);
  detail::parallel_for(runs.size(), opts.workers,
                       [&](std::size_t n) { runs[n] = check_map_at(id, t, static_cast<std::uint32_t>(n)); });

  VerificationReport report;
  report.kind = "verify_map";
  json codomain = json::array();
  for (SetId s : map_codomain(id, t)) codomain.push_back(set_name(s));
  json domain = json::array();
  for (SetId s : map_domain(id)) domain.push_back(set_name(s));
  report.params = {{"map", map_name(id)}, {"t", t}, {"n_max", n_max}, {"domain", domain}, {"codomain", codomain}};

  std::map<std::string, std::uint64_t> cases;
  std::map<std::string, std::set<std::pair<std::int64_t, std::int64_t>>> signatures;
  json sizes = json::array();
  for (auto& run : runs) {
    report.absorb(run.report);
    for (const auto& [k, v] : run.case_counts) cases[k] += v;
    for (const auto& [k, v] : run.signatures) signatures[k].insert(v.begin(), v.end());
    if (id == MapId::zeta2) sizes.push_back(run.zeta2_sizes);
  }
  report.observations["case_counts"] = cases;
  if (!signatures.empty()) {
    json sig = json::object();
    for (const auto& [k, v] : signatures) {
      // Summarize as overlined value -> sorted list of signature values.
      std::map<std::int64_t, std::vector<std::int64_t>> by_overlined;
      for (auto [o, s] : v) by_overlined[o].push_back(s);
      json entry = json::object();
      for (const auto& [o, list] : by_overlined) entry[std::to_string(o)] = list;
      sig[k] = entry;
    }
    report.observations["signatures"] = sig;
  }
  if (id == MapId::zeta2) report.observations["domain_and_A1_sizes"] = sizes;
  return report;
}

VerificationReport verify_conjecture(const ConjectureOptions& conj, const RunOptions& opts) {
  if (conj.t_from < 2 || conj.t_to < conj.t_from) throw domain_error("conjecture range needs 2 <= t_from <= t_to");
  VerificationReport report;
  report.kind = "verify_conjecture";
  json expected = json::array();
  for (const auto& e : conj.expected) expected.push_back({{"t", e.t}, {"n", e.n}});
  report.params = {{"t_from", conj.t_from},           {"t_to", conj.t_to},
                   {"n_max", conj.n_max},             {"oracle_n_max", std::min(conj.n_max, conj.oracle_n_max)},
                   {"ledger_n_max", std::min(conj.n_max, conj.ledger_n_max)}, {"expected_exceptions", expected}};

  const std::size_t count = conj.t_to - conj.t_from + 2;
  std::vector<TruncatedSeries> series(count, TruncatedSeries(0));
  detail::parallel_for(count, opts.workers, [&](std::size_t i) {
    series[i] = kim_series_cached(static_cast<std::uint32_t>(conj.t_from + i), conj.n_max, opts);
  });

  auto is_expected = [&](std::uint32_t t, std::uint32_t n) {
    return std::any_of(conj.expected.begin(), conj.expected.end(),
                       [&](const ExpectedViolation& e) { return e.t == t && e.n == n; });
  };

  // Series route.
  for (std::uint32_t t = conj.t_from; t <= conj.t_to; ++t) {
    const auto& lo = series[t - conj.t_from];
    const auto& hi = series[t - conj.t_from + 1];
    for (std::uint32_t n = 0; n <= conj.n_max; ++n) {
      ++report.checked;
      coeff_t diff = hi[n] - lo[n];
      if (diff >= 0) continue;
      json row = {{"t", t}, {"n", n}, {"b_t", coeff_json(lo[n])}, {"b_t_plus_1", coeff_json(hi[n])}};
      if (is_expected(t, n)) {
        report.exceptions.push_back(row);
      } else {
        row["check"] = "inequality";
        report.fail(row);
      }
    }
  }
  for (const auto& e : conj.expected) {
    if (e.t < conj.t_from || e.t > conj.t_to || e.n > conj.n_max) continue;
    coeff_t diff = series[e.t - conj.t_from + 1][e.n] - series[e.t - conj.t_from][e.n];
    if (diff >= 0) {
      report.fail({{"t", e.t}, {"n", e.n}, {"check", "declared_violation_absent"}, {"difference", coeff_json(diff)}});
    }
  }

  // Exhaustive counting for the low range.
  const std::uint32_t m = std::min(conj.n_max, conj.oracle_n_max);
  std::vector<std::vector<std::uint64_t>> oracle(count);
  detail::parallel_for(count, opts.workers, [&](std::size_t i) {
    oracle[i] = b_t_k_table(static_cast<std::uint32_t>(conj.t_from + i), 2, m);
  });
  for (std::size_t i = 0; i < count; ++i) {
    for (std::uint32_t n = 0; n <= m; ++n) {
      ++report.checked;
      if (static_cast<coeff_t>(oracle[i][n]) != series[i][n]) {
        report.fail({{"t", conj.t_from + i}, {"n", n}, {"check", "enumeration"},
                     {"series", coeff_json(series[i][n])}, {"enumeration", oracle[i][n]}});
      }
    }
  }

  // Counting ledger from the set cardinalities.
  const std::uint32_t l = std::min(conj.n_max, conj.ledger_n_max);
  for (std::uint32_t t = std::max<std::uint32_t>(conj.t_from, 3); t <= conj.t_to; ++t) {
    auto size = [&](SetId s) { return set_cardinalities_cached(s, t, l, opts); };
    const bool odd = t % 2 == 1;
    std::vector<std::pair<SetId, int>> weights =
        odd ? std::vector<std::pair<SetId, int>>{{SetId::A1, 1}, {SetId::C, 1}, {SetId::B, -2}, {SetId::D, 1},
                                                 {SetId::A2, 1}, {SetId::E, 1}, {SetId::F, -1}}
            : std::vector<std::pair<SetId, int>>{{SetId::Ahat3, 1}, {SetId::B, -1}, {SetId::C, -1},
                                                 {SetId::A1, 1},    {SetId::D, -1}, {SetId::A2, 1},
                                                 {SetId::Ahat4, 1}, {SetId::E, 1},  {SetId::F, -1}};
    std::vector<std::int64_t> ledger(std::size_t{l} + 1, 0);
    for (auto [s, w] : weights) {
      auto sizes = size(s);
      for (std::uint32_t n = 0; n <= l; ++n) ledger[n] += w * static_cast<std::int64_t>(sizes[n]);
    }
    const auto& lo = series[t - conj.t_from];
    const auto& hi = series[t - conj.t_from + 1];
    for (std::uint32_t n = 0; n <= l; ++n) {
      ++report.checked;
      if (static_cast<coeff_t>(ledger[n]) != hi[n] - lo[n]) {
        report.fail({{"t", t}, {"n", n}, {"check", "ledger"}, {"ledger", ledger[n]},
                     {"difference", coeff_json(hi[n] - lo[n])}});
      }
    }
  }
  report.observations["violations_found"] = report.exceptions.size();
  return report;
}

}  // namespace hookbias
