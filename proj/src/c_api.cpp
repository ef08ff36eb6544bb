#include "gcg.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "gcg/bench.hpp"
#include "gcg/cluster.hpp"
#include "gcg/error.hpp"
#include "gcg/greedy.hpp"
#include "gcg/serialize.hpp"
#include "gcg/verify.hpp"

struct gcg_context {
  explicit gcg_context(gcg::CoefficientMode mode) : algebra(std::move(mode)) {}
  gcg::AlgebraContext algebra;
  int threads = 1;
};

struct gcg_laurent {
  gcg::LaurentPoly value;
};

namespace {

thread_local std::string last_error;

gcg_status status_of(gcg::ErrorCode code) {
  switch (code) {
    case gcg::ErrorCode::InvalidArgument: return GCG_ERR_INVALID_ARGUMENT;
    case gcg::ErrorCode::NotDivisible: return GCG_ERR_NOT_DIVISIBLE;
    case gcg::ErrorCode::NotLaurent: return GCG_ERR_NOT_LAURENT;
    case gcg::ErrorCode::NotPointed: return GCG_ERR_NOT_POINTED;
    case gcg::ErrorCode::MissingGenerator: return GCG_ERR_MISSING_GENERATOR;
    case gcg::ErrorCode::InconsistentArguments: return GCG_ERR_INCONSISTENT_ARGUMENTS;
    case gcg::ErrorCode::IndexOutOfRange: return GCG_ERR_INDEX_OUT_OF_RANGE;
    case gcg::ErrorCode::CriterionFails: return GCG_ERR_CRITERION_FAILS;
    case gcg::ErrorCode::RTooSmall: return GCG_ERR_R_TOO_SMALL;
    case gcg::ErrorCode::NotInRemoteSupport: return GCG_ERR_NOT_IN_REMOTE_SUPPORT;
    case gcg::ErrorCode::SymbolicModeUnsupported: return GCG_ERR_SYMBOLIC_MODE_UNSUPPORTED;
    case gcg::ErrorCode::NotInAlgebra: return GCG_ERR_NOT_IN_ALGEBRA;
    case gcg::ErrorCode::ParseError: return GCG_ERR_PARSE;
    case gcg::ErrorCode::Internal: return GCG_ERR_INTERNAL;
  }
  return GCG_ERR_INTERNAL;
}

gcg_status fail(gcg_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename Fn>
gcg_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return GCG_OK;
  } catch (const gcg::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(GCG_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(GCG_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool condition, const char* message) {
  if (!condition) gcg::raise(gcg::ErrorCode::InvalidArgument, message);
}

gcg_laurent* wrap(gcg::LaurentPoly f) { return new gcg_laurent{std::move(f)}; }

std::string render_expansion(const gcg::GreedyExpansion& e, const gcg::CoefficientMode& mode, gcg_format format) {
  if (format == GCG_FORMAT_JSON) {
    gcg::Json terms = gcg::Json::array();
    for (const auto& [point, c] : e) {
      gcg::Json t = gcg::Json::object();
      t["point"] = {point.first, point.second};
      t["c"] = gcg::coeff_to_json(c, mode.d1(), mode.d2());
      terms.push_back(std::move(t));
    }
    gcg::Json out = gcg::Json::object();
    out["terms"] = std::move(terms);
    return out.dump() + "\n";
  }
  if (e.empty()) return "0\n";
  std::string out;
  for (const auto& [point, c] : e) {
    out += "x[" + std::to_string(point.first) + "," + std::to_string(point.second) + "]: " + gcg::to_string(c) + "\n";
  }
  return out;
}

}  // namespace

extern "C" {

const char* gcg_status_name(gcg_status status) {
  switch (status) {
    case GCG_OK: return "Ok";
    case GCG_ERR_OUT_OF_MEMORY: return "OutOfMemory";
    case GCG_ERR_INVALID_ARGUMENT: return gcg::error_code_name(gcg::ErrorCode::InvalidArgument);
    case GCG_ERR_NOT_DIVISIBLE: return gcg::error_code_name(gcg::ErrorCode::NotDivisible);
    case GCG_ERR_NOT_LAURENT: return gcg::error_code_name(gcg::ErrorCode::NotLaurent);
    case GCG_ERR_NOT_POINTED: return gcg::error_code_name(gcg::ErrorCode::NotPointed);
    case GCG_ERR_MISSING_GENERATOR: return gcg::error_code_name(gcg::ErrorCode::MissingGenerator);
    case GCG_ERR_INCONSISTENT_ARGUMENTS: return gcg::error_code_name(gcg::ErrorCode::InconsistentArguments);
    case GCG_ERR_INDEX_OUT_OF_RANGE: return gcg::error_code_name(gcg::ErrorCode::IndexOutOfRange);
    case GCG_ERR_CRITERION_FAILS: return gcg::error_code_name(gcg::ErrorCode::CriterionFails);
    case GCG_ERR_R_TOO_SMALL: return gcg::error_code_name(gcg::ErrorCode::RTooSmall);
    case GCG_ERR_NOT_IN_REMOTE_SUPPORT: return gcg::error_code_name(gcg::ErrorCode::NotInRemoteSupport);
    case GCG_ERR_SYMBOLIC_MODE_UNSUPPORTED: return gcg::error_code_name(gcg::ErrorCode::SymbolicModeUnsupported);
    case GCG_ERR_NOT_IN_ALGEBRA: return gcg::error_code_name(gcg::ErrorCode::NotInAlgebra);
    case GCG_ERR_PARSE: return gcg::error_code_name(gcg::ErrorCode::ParseError);
    case GCG_ERR_INTERNAL: return gcg::error_code_name(gcg::ErrorCode::Internal);
  }
  return "Unknown";
}

const char* gcg_last_error(void) { return last_error.c_str(); }

void gcg_string_free(char* s) { std::free(s); }

gcg_status gcg_context_new_numeric(const int64_t* p1, size_t n1, const int64_t* p2, size_t n2, gcg_context** out) {
  return guarded([&] {
    require(out != nullptr && p1 != nullptr && p2 != nullptr, "null argument");
    std::vector<mpz_class> c1, c2;
    for (size_t i = 0; i < n1; ++i) c1.emplace_back(static_cast<long>(p1[i]));
    for (size_t i = 0; i < n2; ++i) c2.emplace_back(static_cast<long>(p2[i]));
    for (const auto* list : {&c1, &c2}) {
      for (const auto& c : *list) require(sgn(c) >= 0, "coefficients must be nonnegative");
    }
    *out = new gcg_context(gcg::CoefficientMode::numeric(std::move(c1), std::move(c2)));
  });
}

gcg_status gcg_context_new_symbolic(int d1, int d2, gcg_context** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require(d1 >= 0 && d2 >= 0, "degrees must be nonnegative");
    *out = new gcg_context(gcg::CoefficientMode::symbolic(d1, d2));
  });
}

void gcg_context_free(gcg_context* ctx) { delete ctx; }

gcg_status gcg_context_set_threads(gcg_context* ctx, int threads) {
  return guarded([&] {
    require(ctx != nullptr, "null context");
    require(threads >= 1, "thread count must be positive");
    ctx->threads = threads;
  });
}

gcg_status gcg_context_set_cluster_range(gcg_context* ctx, int64_t lo, int64_t hi) {
  return guarded([&] {
    require(ctx != nullptr, "null context");
    ctx->algebra.set_cluster_range(lo, hi);
  });
}

gcg_status gcg_context_degrees(const gcg_context* ctx, int* d1, int* d2) {
  return guarded([&] {
    require(ctx != nullptr && d1 != nullptr && d2 != nullptr, "null argument");
    *d1 = ctx->algebra.d1();
    *d2 = ctx->algebra.d2();
  });
}

gcg_status gcg_cluster_variable(gcg_context* ctx, int64_t k, gcg_laurent** out) {
  return guarded([&] {
    require(ctx != nullptr && out != nullptr, "null argument");
    *out = wrap(ctx->algebra.cluster_variable(k));
  });
}

gcg_status gcg_greedy(gcg_context* ctx, int64_t a1, int64_t a2, gcg_method method, gcg_laurent** out) {
  return guarded([&] {
    require(ctx != nullptr && out != nullptr, "null argument");
    switch (method) {
      case GCG_METHOD_COMBINATORIAL:
        *out = wrap(gcg::greedy_combinatorial(ctx->algebra.mode(), a1, a2, ctx->threads));
        return;
      case GCG_METHOD_RECURSIVE:
        *out = wrap(gcg::greedy_recursive(ctx->algebra.mode(), a1, a2).to_laurent());
        return;
    }
    gcg::raise(gcg::ErrorCode::InvalidArgument, "unknown method");
  });
}

gcg_status gcg_expand_in_cluster(gcg_context* ctx, const gcg_laurent* f, int64_t k, gcg_laurent** out) {
  return guarded([&] {
    require(ctx != nullptr && f != nullptr && out != nullptr, "null argument");
    *out = wrap(ctx->algebra.expand_in_cluster(f->value, k));
  });
}

gcg_status gcg_apply_reflection(gcg_context* ctx, const gcg_laurent* f, int p, gcg_laurent** out) {
  return guarded([&] {
    require(ctx != nullptr && f != nullptr && out != nullptr, "null argument");
    *out = wrap(ctx->algebra.apply_reflection(f->value, p));
  });
}

gcg_status gcg_laurent_parse(const gcg_context* ctx, const char* json, gcg_laurent** out) {
  return guarded([&] {
    require(ctx != nullptr && json != nullptr && out != nullptr, "null argument");
    *out = wrap(gcg::laurent_parse(json, ctx->algebra.d1(), ctx->algebra.d2()));
  });
}

gcg_status gcg_laurent_render(const gcg_context* ctx, const gcg_laurent* f, gcg_format format, char** out) {
  return guarded([&] {
    require(ctx != nullptr && f != nullptr && out != nullptr, "null argument");
    const std::string text = format == GCG_FORMAT_JSON
                                 ? gcg::laurent_to_json(f->value, ctx->algebra.d1(), ctx->algebra.d2()).dump() + "\n"
                                 : gcg::render_laurent_text(f->value);
    *out = copy_string(text);
  });
}

gcg_status gcg_laurent_mul(const gcg_laurent* f, const gcg_laurent* g, gcg_laurent** out) {
  return guarded([&] {
    require(f != nullptr && g != nullptr && out != nullptr, "null argument");
    *out = wrap(gcg::lp_mul(f->value, g->value));
  });
}

int gcg_laurent_equal(const gcg_laurent* f, const gcg_laurent* g) {
  return f != nullptr && g != nullptr && f->value == g->value ? 1 : 0;
}

int gcg_laurent_is_positive(const gcg_laurent* f) { return f != nullptr && gcg::lp_is_positive(f->value) ? 1 : 0; }

void gcg_laurent_free(gcg_laurent* f) { delete f; }

gcg_status gcg_greedy_expand(gcg_context* ctx, const gcg_laurent* f, gcg_format format, char** out) {
  return guarded([&] {
    require(ctx != nullptr && f != nullptr && out != nullptr, "null argument");
    const auto expansion = gcg::greedy_expand(ctx->algebra.mode(), f->value, ctx->threads);
    *out = copy_string(render_expansion(expansion, ctx->algebra.mode(), format));
  });
}

gcg_status gcg_enumerate_pairs(gcg_context* ctx, int a1, int a2, gcg_pair_callback callback, void* user) {
  return guarded([&] {
    require(ctx != nullptr && callback != nullptr, "null argument");
    require(a1 >= 0 && a2 >= 0, "path dimensions must be nonnegative");
    for (const auto& pair : gcg::enumerate_fast(a1, a2, ctx->algebra.d1(), ctx->algebra.d2(), ctx->threads)) {
      if (callback(pair.s1.data(), pair.s1.size(), pair.s2.data(), pair.s2.size(), user) != 0) break;
    }
  });
}

gcg_status gcg_verify(const char* suite, int threads, int exhaustive, char** report, int* passed) {
  return guarded([&] {
    require(suite != nullptr && report != nullptr && passed != nullptr, "null argument");
    require(threads >= 1, "thread count must be positive");
    gcg::VerifyOptions options;
    options.threads = threads;
    options.exhaustive = exhaustive != 0;
    const auto results = gcg::run_verify(suite, options);
    gcg::Json checks = gcg::Json::array();
    bool ok = true;
    for (const auto& r : results) {
      gcg::Json c = gcg::Json::object();
      c["suite"] = r.suite;
      c["name"] = r.name;
      c["cases"] = r.cases;
      c["failures"] = r.failures;
      if (!r.passed()) c["first_failure"] = r.first_failure;
      checks.push_back(std::move(c));
      ok = ok && r.passed();
    }
    gcg::Json out = gcg::Json::object();
    out["passed"] = ok;
    out["checks"] = std::move(checks);
    *report = copy_string(out.dump());
    *passed = ok ? 1 : 0;
  });
}

gcg_status gcg_bench(int threads, int repeats, char** report) {
  return guarded([&] {
    require(report != nullptr, "null argument");
    require(threads >= 1, "thread count must be positive");
    gcg::Json rows = gcg::Json::array();
    for (const auto& row : gcg::run_bench(gcg::default_bench_grid(), threads, repeats)) {
      gcg::Json r = gcg::Json::object();
      r["a"] = {row.point.a1, row.point.a2};
      r["d"] = {row.point.d1, row.point.d2};
      r["pairs"] = row.pairs;
      r["agree"] = row.agree;
      r["brute_seconds"] = row.brute_seconds;
      r["fast_seconds"] = row.fast_seconds;
      r["speedup"] = row.speedup();
      rows.push_back(std::move(r));
    }
    *report = copy_string(rows.dump());
  });
}

}  // extern "C"
