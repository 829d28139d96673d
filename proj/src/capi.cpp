#include "hookbias/hookbias.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <thread>

#include "hookbias/errors.hpp"
#include "hookbias/verify.hpp"

using namespace hookbias;

struct hb_context {
  unsigned workers = 1;
  std::optional<ResultCache> cache;
  std::string last_error;

  RunOptions options() const { return RunOptions{workers, cache ? &*cache : nullptr}; }
};

struct hb_series {
  TruncatedSeries series;
};

namespace {

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs body, translating exceptions into status codes and the context's
// last error message.
template <class Body>
hb_status guarded(hb_context* ctx, Body&& body) {
  if (!ctx) return HB_ERR_INVALID_ARGUMENT;
  ctx->last_error.clear();
  auto fail = [&](hb_status status, const char* what) {
    ctx->last_error = what;
    return status;
  };
  try {
    body();
    return HB_OK;
  } catch (const parse_error& e) {
    return fail(HB_ERR_PARSE, e.what());
  } catch (const domain_error& e) {
    return fail(HB_ERR_DOMAIN, e.what());
  } catch (const not_in_image_error& e) {
    return fail(HB_ERR_NOT_IN_IMAGE, e.what());
  } catch (const overflow_error& e) {
    return fail(HB_ERR_OVERFLOW, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(HB_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(HB_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(HB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HB_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

Partition parse_plain(const char* text) {
  auto parsed = parse_partition(text);
  if (auto* p = std::get_if<Partition>(&parsed)) return *p;
  return std::get<OpoOverpartition>(parsed).base;
}

void emit_report(const VerificationReport& r, char** report, int* passed) {
  *report = copy_string(r.dump() + "\n");
  *passed = r.pass ? 1 : 0;
}

}  // namespace

extern "C" {

const char* hb_version(void) { return "1.0.0"; }

const char* hb_status_name(hb_status status) {
  switch (status) {
    case HB_OK: return "ok";
    case HB_ERR_PARSE: return "parse error";
    case HB_ERR_DOMAIN: return "domain error";
    case HB_ERR_NOT_IN_IMAGE: return "not in image";
    case HB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HB_ERR_OVERFLOW: return "overflow";
    case HB_ERR_IO: return "i/o error";
    case HB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

hb_status hb_context_create(hb_context** out) {
  if (!out) return HB_ERR_INVALID_ARGUMENT;
  try {
    *out = new hb_context();
    return HB_OK;
  } catch (...) {
    *out = nullptr;
    return HB_ERR_INTERNAL;
  }
}

void hb_context_destroy(hb_context* ctx) { delete ctx; }

hb_status hb_context_set_workers(hb_context* ctx, unsigned workers) {
  return guarded(ctx, [&] {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    ctx->workers = workers;
  });
}

hb_status hb_context_set_cache_dir(hb_context* ctx, const char* dir) {
  return guarded(ctx, [&] {
    if (!dir || !*dir) {
      ctx->cache.reset();
    } else {
      ctx->cache.emplace(dir);
    }
  });
}

const char* hb_last_error(const hb_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

void hb_string_free(char* s) { std::free(s); }

hb_status hb_series_kim(hb_context* ctx, uint32_t t, uint32_t degree, hb_series** out) {
  return guarded(ctx, [&] {
    require(out, "null output");
    *out = new hb_series{kim_series_cached(t, degree, ctx->options())};
  });
}

hb_status hb_series_term(hb_context* ctx, char term, uint32_t t, uint32_t degree, hb_series** out) {
  return guarded(ctx, [&] {
    require(out, "null output");
    *out = new hb_series{decomposition_term_cached(parse_term(std::string(1, term)), t, degree, ctx->options())};
  });
}

uint32_t hb_series_degree(const hb_series* s) { return s ? s->series.degree() : 0; }

hb_status hb_series_coeff_string(hb_context* ctx, const hb_series* s, uint32_t n, char** out) {
  return guarded(ctx, [&] {
    require(s && out, "null argument");
    if (n > s->series.degree()) throw domain_error("coefficient index past truncation degree");
    *out = copy_string(to_decimal(s->series[n]));
  });
}

hb_status hb_series_coeff_i64(hb_context* ctx, const hb_series* s, uint32_t n, int64_t* out) {
  return guarded(ctx, [&] {
    require(s && out, "null argument");
    if (n > s->series.degree()) throw domain_error("coefficient index past truncation degree");
    coeff_t v = s->series[n];
    if (v < INT64_MIN || v > INT64_MAX) throw overflow_error("coefficient does not fit in 64 bits");
    *out = static_cast<int64_t>(v);
  });
}

void hb_series_destroy(hb_series* s) { delete s; }

hb_status hb_count_hooks(hb_context* ctx, const char* partition, uint64_t k, uint64_t* out) {
  return guarded(ctx, [&] {
    require(partition && out, "null argument");
    if (k == 0) throw domain_error("hook length k must be >= 1");
    *out = count_hooks(parse_plain(partition), k);
  });
}

hb_status hb_hook_profile_json(hb_context* ctx, const char* partition, char** out) {
  return guarded(ctx, [&] {
    require(partition && out, "null argument");
    nlohmann::json j = nlohmann::json::object();
    for (auto [h, c] : hook_profile(parse_plain(partition)).counts) j[std::to_string(h)] = c;
    *out = copy_string(j.dump());
  });
}

hb_status hb_canonicalize(hb_context* ctx, const char* text, char** out) {
  return guarded(ctx, [&] {
    require(text && out, "null argument");
    auto parsed = parse_partition(text);
    *out = copy_string(std::visit([](const auto& x) { return x.to_string(); }, parsed));
  });
}

hb_status hb_b_tk(hb_context* ctx, uint32_t t, uint32_t k, uint32_t n, uint64_t* out) {
  return guarded(ctx, [&] {
    require(out, "null output");
    *out = b_t_k(t, k, n);
  });
}

hb_status hb_table_csv(hb_context* ctx, uint32_t t_from, uint32_t t_to, uint32_t k_from, uint32_t k_to,
                       uint32_t n_max, char** out) {
  return guarded(ctx, [&] {
    require(out, "null output");
    require(t_from <= t_to && k_from <= k_to, "empty t or k range");
    std::string csv = "t,k,n,count\n";
    for (uint32_t t = t_from; t <= t_to; ++t) {
      for (uint32_t k = k_from; k <= k_to; ++k) {
        auto row = b_t_k_table(t, k, n_max);
        for (uint32_t n = 0; n <= n_max; ++n) {
          csv += std::to_string(t) + "," + std::to_string(k) + "," + std::to_string(n) + "," +
                 std::to_string(row[n]) + "\n";
        }
      }
    }
    *out = copy_string(csv);
  });
}

hb_status hb_set_enumerate(hb_context* ctx, const char* set, uint32_t t, uint32_t n, char** out) {
  return guarded(ctx, [&] {
    require(set && out, "null argument");
    std::string lines;
    for (const auto& x : enumerate_set(parse_set_id(set), t, n)) lines += x.to_string() + "\n";
    *out = copy_string(lines);
  });
}

hb_status hb_set_contains(hb_context* ctx, const char* set, uint32_t t, const char* object, int* out) {
  return guarded(ctx, [&] {
    require(set && object && out, "null argument");
    *out = set_membership(parse_set_id(set), t, parse_opo(object)) ? 1 : 0;
  });
}

hb_status hb_inject(hb_context* ctx, const char* map, uint32_t t, const char* input, char** out) {
  return guarded(ctx, [&] {
    require(map && input && out, "null argument");
    MapTrace tr = apply_map(parse_map_id(map), t, parse_opo(input));
    nlohmann::json j = {{"input", tr.input.to_string()},
                        {"case", tr.case_label},
                        {"output", tr.output.to_string()},
                        {"codomain", set_name(tr.codomain_hit)}};
    *out = copy_string(j.dump());
  });
}

hb_status hb_invert(hb_context* ctx, const char* map, uint32_t t, const char* image, char** out) {
  return guarded(ctx, [&] {
    require(map && image && out, "null argument");
    *out = copy_string(invert_map(parse_map_id(map), t, parse_opo(image)).to_string());
  });
}

hb_status hb_check_set(hb_context* ctx, const char* set, uint32_t t, uint32_t n_max, char** report, int* passed) {
  return guarded(ctx, [&] {
    require(set && report && passed, "null argument");
    emit_report(check_set_against_series(parse_set_id(set), t, n_max, ctx->options()), report, passed);
  });
}

hb_status hb_verify_map(hb_context* ctx, const char* map, uint32_t t, uint32_t n_max, char** report, int* passed) {
  return guarded(ctx, [&] {
    require(map && report && passed, "null argument");
    emit_report(verify_map(parse_map_id(map), t, n_max, ctx->options()), report, passed);
  });
}

hb_status hb_verify_decomposition(hb_context* ctx, uint32_t t, uint32_t degree, uint32_t oracle_n_max,
                                  char** report, int* passed) {
  return guarded(ctx, [&] {
    require(report && passed, "null argument");
    emit_report(verify_decomposition(t, degree, oracle_n_max, ctx->options()), report, passed);
  });
}

hb_status hb_verify_series_oracle(hb_context* ctx, uint32_t t_from, uint32_t t_to, uint32_t n_max, char** report,
                                  int* passed) {
  return guarded(ctx, [&] {
    require(report && passed, "null argument");
    require(t_from <= t_to, "empty t range");
    emit_report(verify_series_oracle(t_from, t_to, n_max, ctx->options()), report, passed);
  });
}

hb_status hb_verify_conjecture(hb_context* ctx, uint32_t t_from, uint32_t t_to, uint32_t n_max,
                               uint32_t oracle_n_max, uint32_t ledger_n_max, const hb_violation* expected,
                               size_t expected_count, char** report, int* passed) {
  return guarded(ctx, [&] {
    require(report && passed, "null argument");
    require(expected || expected_count == 0, "null expected list");
    require(t_from <= t_to, "empty t range");
    ConjectureOptions conj;
    conj.t_from = t_from;
    conj.t_to = t_to;
    conj.n_max = n_max;
    conj.oracle_n_max = oracle_n_max;
    conj.ledger_n_max = ledger_n_max;
    for (size_t i = 0; i < expected_count; ++i) conj.expected.push_back({expected[i].t, expected[i].n});
    emit_report(verify_conjecture(conj, ctx->options()), report, passed);
  });
}

}  // extern "C"
