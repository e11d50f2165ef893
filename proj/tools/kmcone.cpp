// Command-line front end over the C API.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kummer/kummer.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Range {
  std::int64_t first = 0;
  std::int64_t last = 0;
};

// "A..B" or a single integer "A".
std::optional<Range> parse_range(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      const std::int64_t v = std::stoll(text, &used);
      if (used != text.size()) return std::nullopt;
      return Range{v, v};
    }
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const std::int64_t first = std::stoll(a, &used);
    if (used != a.size()) return std::nullopt;
    const std::int64_t last = std::stoll(b, &used);
    if (used != b.size()) return std::nullopt;
    return Range{first, last};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

km_format parse_format(const std::string& name) {
  if (name == "json") return KM_FORMAT_JSON;
  if (name == "csv") return KM_FORMAT_CSV;
  return KM_FORMAT_TEXT;
}

km_cone_selection parse_selection(const std::string& name) {
  if (name == "nef") return KM_CONE_NEF;
  if (name == "movable") return KM_CONE_MOVABLE;
  if (name == "both") return KM_CONE_BOTH;
  return KM_CONE_AUTO;
}

int report_error(km_status status) {
  std::cerr << "error: " << km_status_name(status) << ": " << km_last_error()
            << '\n';
  switch (status) {
    case KM_ERR_INTEGRITY:
    case KM_ERR_INTERNAL:
    case KM_ERR_INCOMPLETE: return kExitVerifyFailed;
    default: return kExitUsage;
  }
}

struct SurfaceDeleter {
  void operator()(km_surface* s) const { km_surface_destroy(s); }
};
struct DocumentDeleter {
  void operator()(km_document* d) const { km_document_destroy(d); }
};
using SurfacePtr = std::unique_ptr<km_surface, SurfaceDeleter>;
using DocumentPtr = std::unique_ptr<km_document, DocumentDeleter>;

// Prints the document and returns the process exit code.
template <typename Query>
int run_query(Query&& query) {
  km_document* raw = nullptr;
  const km_status status = query(&raw);
  DocumentPtr doc(raw);
  if (status != KM_OK) return report_error(status);
  std::fwrite(km_document_text(doc.get()), 1, km_document_size(doc.get()),
              stdout);
  return km_document_passed(doc.get()) ? kExitOk : kExitVerifyFailed;
}

template <typename Query>
int with_surface(std::int64_t n, std::int64_t l, Query&& query) {
  km_surface* raw = nullptr;
  const km_status status = km_surface_create(n, l, &raw);
  SurfacePtr surface(raw);
  if (status != KM_OK) return report_error(status);
  return run_query([&](km_document** out) { return query(surface.get(), out); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nef and movable cones of generalized Kummer manifolds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(km_version()));

  std::string n_text;
  std::string n_range_text;
  std::int64_t l = 3;
  std::string format = "text";
  std::string selection = "auto";
  std::uint32_t count = 5;
  std::int64_t bound = 2048;
  std::uint32_t jobs = 1;
  bool end_a_z = false;
  std::vector<std::int64_t> l_values;

  const auto formats = CLI::IsMember({"text", "json", "csv"});
  auto add_common = [&](CLI::App* sub, bool ranged) {
    sub->add_option("--n", n_text, ranged ? "n or range A..B" : "n = H^2 / 2")
        ->required(!ranged);
    if (ranged) sub->add_option("--n-range", n_range_text, "range A..B");
    sub->add_option("--format", format, "text, json or csv")
        ->check(formats)
        ->capture_default_str();
  };

  auto* cone = app.add_subcommand("cone", "nef and movable cone boundaries");
  add_common(cone, false);
  cone->add_option("--l", l, "Km^{l-1}(A), l >= 3")->capture_default_str();
  cone->add_option("--cone", selection, "auto, nef, movable or both")
      ->check(CLI::IsMember({"auto", "nef", "movable", "both"}))
      ->capture_default_str();

  auto* chambers = app.add_subcommand("chambers", "chamber decomposition of Mov(Km^2(A))");
  add_common(chambers, false);
  chambers->add_option("--l", l, "must be 3")->capture_default_str();
  chambers->add_flag("--end-a-z", end_a_z, "assume End(A) = Z");

  auto* walls = app.add_subcommand("walls", "wall sequence from the Pell solutions");
  add_common(walls, false);
  walls->add_option("--l", l)->capture_default_str();
  walls->add_option("--count", count, "last index K")->capture_default_str();

  auto* pell = app.add_subcommand("pell", "solutions of l Y^2 - n X^2 = l");
  add_common(pell, false);
  pell->add_option("--l", l)->capture_default_str();
  pell->add_option("--count", count, "last index K")->capture_default_str();

  auto* table = app.add_subcommand("table", "classification table over a range of n");
  add_common(table, true);

  auto* verify = app.add_subcommand("verify", "cross-check against the brute-force oracle");
  add_common(verify, true);
  verify->add_option("--l", l_values, "one or more l values")->delimiter(',');
  verify->add_option("--bound", bound, "oracle enumeration box")->capture_default_str();
  verify->add_option("--jobs", jobs, "worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const km_format fmt = parse_format(format);

  auto single_n = [&]() -> std::optional<std::int64_t> {
    const auto r = parse_range(n_text);
    if (!r || r->first != r->last) return std::nullopt;
    return r->first;
  };
  auto n_range = [&]() -> std::optional<Range> {
    const std::string& text = n_range_text.empty() ? n_text : n_range_text;
    if (text.empty()) return std::nullopt;
    return parse_range(text);
  };
  auto usage = [](const std::string& message) {
    std::cerr << "error: " << message << '\n';
    return kExitUsage;
  };

  if (cone->parsed() || chambers->parsed() || walls->parsed() || pell->parsed()) {
    const auto n = single_n();
    if (!n) return usage("--n must be a single integer");
    if (cone->parsed()) {
      return with_surface(*n, l, [&](km_surface* s, km_document** out) {
        return km_cone(s, parse_selection(selection), fmt, out);
      });
    }
    if (chambers->parsed()) {
      return with_surface(*n, l, [&](km_surface* s, km_document** out) {
        return km_chambers(s, end_a_z ? 1 : 0, fmt, out);
      });
    }
    if (walls->parsed()) {
      return with_surface(*n, l, [&](km_surface* s, km_document** out) {
        return km_walls(s, count, fmt, out);
      });
    }
    return with_surface(*n, l, [&](km_surface* s, km_document** out) {
      return km_pell(s, count, fmt, out);
    });
  }

  const auto range = n_range();
  if (!range) return usage("give --n A..B or --n-range A..B");
  if (table->parsed()) {
    return run_query([&](km_document** out) {
      return km_table(range->first, range->last, fmt, out);
    });
  }

  if (l_values.empty()) l_values.push_back(3);
  km_verify_options options{};
  options.n_first = range->first;
  options.n_last = range->last;
  options.l_values = l_values.data();
  options.l_count = l_values.size();
  options.bound = bound;
  options.jobs = jobs;
  if (bound < 1) return usage("--bound must be positive");
  return run_query([&](km_document** out) { return km_verify(&options, fmt, out); });
}
