#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gcg.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(gcg_status status) {
  if (status == GCG_OK) return;
  const std::string message = std::string(gcg_status_name(status)) + ": " + gcg_last_error();
  if (status == GCG_ERR_INVALID_ARGUMENT || status == GCG_ERR_PARSE) throw UsageError(message);
  throw ApiError(message);
}

struct ContextDeleter {
  void operator()(gcg_context* c) const { gcg_context_free(c); }
};
struct LaurentDeleter {
  void operator()(gcg_laurent* f) const { gcg_laurent_free(f); }
};
struct StringDeleter {
  void operator()(char* s) const { gcg_string_free(s); }
};
using Context = std::unique_ptr<gcg_context, ContextDeleter>;
using Laurent = std::unique_ptr<gcg_laurent, LaurentDeleter>;
using String = std::unique_ptr<char, StringDeleter>;

struct Options {
  std::string p1, p2;
  std::optional<int> d1, d2;
  std::string format = "text";
  std::string clusters;
  int threads = 1;
};

std::vector<std::int64_t> parse_list(const std::string& flag, const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(flag + " expects comma-separated integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError(flag + " must not be empty");
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--clusters expects LO..HI");
  try {
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("--clusters expects LO..HI, got '" + text + "'");
  }
}

gcg_format format_of(const Options& o) { return o.format == "json" ? GCG_FORMAT_JSON : GCG_FORMAT_TEXT; }

Context make_context(const Options& o) {
  gcg_context* raw = nullptr;
  const bool symbolic = o.d1 || o.d2;
  const bool numeric = !o.p1.empty() || !o.p2.empty();
  if (symbolic && numeric) throw UsageError("use either --p1/--p2 or --d1/--d2, not both");
  if (symbolic) {
    if (!o.d1 || !o.d2) throw UsageError("symbolic mode needs both --d1 and --d2");
    check(gcg_context_new_symbolic(*o.d1, *o.d2, &raw));
  } else {
    if (o.p1.empty() || o.p2.empty()) throw UsageError("give --p1 and --p2, or --d1 and --d2");
    const auto p1 = parse_list("--p1", o.p1), p2 = parse_list("--p2", o.p2);
    check(gcg_context_new_numeric(p1.data(), p1.size(), p2.data(), p2.size(), &raw));
  }
  Context ctx(raw);
  check(gcg_context_set_threads(ctx.get(), o.threads));
  if (!o.clusters.empty()) {
    const auto [lo, hi] = parse_range(o.clusters);
    check(gcg_context_set_cluster_range(ctx.get(), lo, hi));
  }
  return ctx;
}

std::string render(const gcg_context* ctx, const gcg_laurent* f, gcg_format format) {
  char* raw = nullptr;
  check(gcg_laurent_render(ctx, f, format, &raw));
  return String(raw).get();
}

int cmd_var(const Options& o, std::int64_t k) {
  Context ctx = make_context(o);
  gcg_laurent* raw = nullptr;
  check(gcg_cluster_variable(ctx.get(), k, &raw));
  Laurent f(raw);
  std::cout << render(ctx.get(), f.get(), format_of(o));
  return 0;
}

int cmd_greedy(const Options& o, std::int64_t a1, std::int64_t a2, const std::string& method) {
  Context ctx = make_context(o);
  gcg_laurent* raw = nullptr;
  check(gcg_greedy(ctx.get(), a1, a2, method == "recursive" ? GCG_METHOD_RECURSIVE : GCG_METHOD_COMBINATORIAL, &raw));
  Laurent f(raw);
  const std::string body = render(ctx.get(), f.get(), format_of(o));
  if (format_of(o) == GCG_FORMAT_JSON) {
    Json j = Json::parse(body);
    j["point"] = {a1, a2};
    j["method"] = method;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << body;
  }
  return 0;
}

int cmd_pairs(const Options& o, int a1, int a2) {
  Context ctx = make_context(o);
  struct Sink {
    std::string out;
    bool json;
  } sink{std::string(), format_of(o) == GCG_FORMAT_JSON};
  auto emit = [](const int* s1, size_t n1, const int* s2, size_t n2, void* user) -> int {
    auto* sink = static_cast<Sink*>(user);
    const std::vector<int> v1(s1, s1 + n1), v2(s2, s2 + n2);
    int m1 = 0, m2 = 0;
    for (int x : v1) m1 += x;
    for (int x : v2) m2 += x;
    if (sink->json) {
      Json j = Json::object();
      j["s1"] = v1;
      j["s2"] = v2;
      j["m1"] = m1;
      j["m2"] = m2;
      sink->out += j.dump();
    } else {
      auto list = [](const std::vector<int>& s) {
        std::string r;
        for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
        return r;
      };
      sink->out += "s1=" + list(v1) + " s2=" + list(v2) + " m1=" + std::to_string(m1) + " m2=" + std::to_string(m2);
    }
    sink->out += '\n';
    return 0;
  };
  check(gcg_enumerate_pairs(ctx.get(), a1, a2, emit, &sink));
  std::cout << sink.out;
  return 0;
}

int cmd_expand(const Options& o, const std::string& path) {
  Context ctx = make_context(o);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream text;
  text << in.rdbuf();
  gcg_laurent* raw = nullptr;
  check(gcg_laurent_parse(ctx.get(), text.str().c_str(), &raw));
  Laurent f(raw);
  char* out = nullptr;
  check(gcg_greedy_expand(ctx.get(), f.get(), format_of(o), &out));
  std::cout << String(out).get();
  return 0;
}

int cmd_positivity(const Options& o, std::int64_t a1, std::int64_t a2) {
  if (o.d1 || o.d2) throw UsageError("positivity probes need numeric coefficients");
  Context ctx = make_context(o);
  const auto [lo, hi] = o.clusters.empty() ? std::pair<std::int64_t, std::int64_t>{-2, 4} : parse_range(o.clusters);
  if (o.clusters.empty()) check(gcg_context_set_cluster_range(ctx.get(), lo, hi));
  gcg_laurent* raw = nullptr;
  check(gcg_greedy(ctx.get(), a1, a2, GCG_METHOD_COMBINATORIAL, &raw));
  Laurent f(raw);
  bool all = true;
  Json rows = Json::array();
  for (std::int64_t k = lo; k <= hi; ++k) {
    gcg_laurent* expanded = nullptr;
    check(gcg_expand_in_cluster(ctx.get(), f.get(), k, &expanded));
    const bool positive = gcg_laurent_is_positive(Laurent(expanded).get()) != 0;
    all = all && positive;
    if (format_of(o) == GCG_FORMAT_JSON) {
      rows.push_back({{"cluster", k}, {"positive", positive}});
    } else {
      std::cout << "cluster " << k << ": " << (positive ? "positive" : "NOT positive") << '\n';
    }
  }
  if (format_of(o) == GCG_FORMAT_JSON) std::cout << rows.dump() << '\n';
  return all ? 0 : kExitFailure;
}

int cmd_verify(const Options& o, const std::string& suite, bool exhaustive) {
  char* raw = nullptr;
  int passed = 0;
  check(gcg_verify(suite.c_str(), o.threads, exhaustive ? 1 : 0, &raw, &passed));
  const Json report = Json::parse(String(raw).get());
  if (format_of(o) == GCG_FORMAT_JSON) {
    std::cout << report.dump() << '\n';
  } else {
    for (const auto& c : report["checks"]) {
      const bool ok = c["failures"].get<std::uint64_t>() == 0;
      std::cout << (ok ? "PASS " : "FAIL ") << c["suite"].get<std::string>() << '.' << c["name"].get<std::string>()
                << " cases=" << c["cases"].get<std::uint64_t>();
      if (!ok) {
        std::cout << " failures=" << c["failures"].get<std::uint64_t>()
                  << " first: " << c["first_failure"].get<std::string>();
      }
      std::cout << '\n';
    }
  }
  return passed ? 0 : kExitFailure;
}

int cmd_bench(const Options& o, int repeats) {
  char* raw = nullptr;
  check(gcg_bench(o.threads, repeats, &raw));
  const Json rows = Json::parse(String(raw).get());
  if (format_of(o) == GCG_FORMAT_JSON) {
    std::cout << rows.dump() << '\n';
    return 0;
  }
  for (const auto& r : rows) {
    char line[256];
    std::snprintf(line, sizeof line, "a=(%d,%d) d=(%d,%d) pairs=%llu agree=%s brute=%.4fs fast=%.4fs speedup=%.1fx",
                  r["a"][0].get<int>(), r["a"][1].get<int>(), r["d"][0].get<int>(), r["d"][1].get<int>(),
                  static_cast<unsigned long long>(r["pairs"].get<std::uint64_t>()),
                  r["agree"].get<bool>() ? "yes" : "no", r["brute_seconds"].get<double>(),
                  r["fast_seconds"].get<double>(), r["speedup"].get<double>());
    std::cout << line << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy elements and cluster variables of rank-2 generalized cluster algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--p1", o.p1, "Coefficients of P1, low to high, comma-separated");
  app.add_option("--p2", o.p2, "Coefficients of P2, low to high, comma-separated");
  app.add_option("--d1", o.d1, "Degree of P1 with formal coefficients")->check(CLI::NonNegativeNumber);
  app.add_option("--d2", o.d2, "Degree of P2 with formal coefficients")->check(CLI::NonNegativeNumber);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--clusters", o.clusters, "Cluster range LO..HI for expansions");
  app.add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);

  std::int64_t k = 0, a1 = 0, a2 = 0;
  std::string method = "combinatorial", file, suite = "all";
  bool exhaustive = false;
  int repeats = 1;

  auto* var = app.add_subcommand("var", "Cluster variable x_k");
  var->add_option("k", k)->required();
  auto* greedy = app.add_subcommand("greedy", "Greedy element x[a1,a2]");
  greedy->add_option("a1", a1)->required();
  greedy->add_option("a2", a2)->required();
  greedy->add_option("--method", method)->check(CLI::IsMember({"combinatorial", "recursive"}));
  auto* pairs = app.add_subcommand("pairs", "Compatible grading pairs on D_{a1,a2}, one per line");
  pairs->add_option("a1", a1)->required()->check(CLI::NonNegativeNumber);
  pairs->add_option("a2", a2)->required()->check(CLI::NonNegativeNumber);
  auto* expand = app.add_subcommand("expand", "Greedy basis coefficients of a Laurent polynomial JSON file");
  expand->add_option("file", file)->required();
  auto* positivity = app.add_subcommand("positivity", "Sign check of x[a1,a2] in each cluster of --clusters");
  positivity->add_option("a1", a1)->required();
  positivity->add_option("a2", a2)->required();
  auto* verify = app.add_subcommand("verify", "Run property suites");
  verify->add_option("suite", suite)
      ->check(CLI::IsMember({"all", "coeffring", "laurent", "multinom", "dyckpath", "compat", "greedy", "cluster"}));
  verify->add_flag("--exhaustive", exhaustive, "Full k range for the slow symbolic cluster checks");
  auto* bench = app.add_subcommand("bench", "Brute-force against fast pair enumeration");
  bench->add_option("--repeats", repeats)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*var) return cmd_var(o, k);
    if (*greedy) return cmd_greedy(o, a1, a2, method);
    if (*pairs) return cmd_pairs(o, static_cast<int>(a1), static_cast<int>(a2));
    if (*expand) return cmd_expand(o, file);
    if (*positivity) return cmd_positivity(o, a1, a2);
    if (*verify) return cmd_verify(o, suite, exhaustive);
    if (*bench) return cmd_bench(o, repeats);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
