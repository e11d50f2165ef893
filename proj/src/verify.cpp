#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "kummer/error.hpp"
#include "kummer/report.hpp"

namespace kummer {

using json = nlohmann::ordered_json;

namespace {

enum class Verdict { Pass, Fail, Incomplete };

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Incomplete: return "incomplete";
  }
  return "?";
}

struct Check {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::string detail;
};

class CheckList {
 public:
  // body returns an empty string on success, a failure detail otherwise.
  void run(const std::string& name, const std::function<std::string()>& body) {
    Check c{name, Verdict::Pass, {}};
    try {
      c.detail = body();
      if (!c.detail.empty()) c.verdict = Verdict::Fail;
    } catch (const Error& e) {
      c.verdict = e.code() == ErrorCode::Incomplete ? Verdict::Incomplete
                                                    : Verdict::Fail;
      c.detail = std::string(kummer::to_string(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
      c.verdict = Verdict::Fail;
      c.detail = e.what();
    }
    checks_.push_back(std::move(c));
  }

  Verdict verdict() const {
    Verdict v = Verdict::Pass;
    for (const auto& c : checks_) {
      if (c.verdict == Verdict::Fail) return Verdict::Fail;
      if (c.verdict == Verdict::Incomplete) v = Verdict::Incomplete;
    }
    return v;
  }

  json to_json() const {
    json out = json::array();
    for (const auto& c : checks_) {
      out.push_back(json{{"name", c.name},
                         {"verdict", verdict_name(c.verdict)},
                         {"detail", c.detail}});
    }
    return out;
  }

 private:
  std::vector<Check> checks_;
};

template <typename T>
std::string show(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

std::string mismatch(const char* what, const Rational& a, const Rational& b) {
  if (a == b) return {};
  return std::string(what) + ": " + to_string(a) + " != " + to_string(b);
}

std::string check_pell(const SurfaceParams& p) {
  const PellEquation eq(p);
  const auto seq = eq.sequence(15);
  const Integer n = p.n_int(), l = p.l_int();
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const auto& s = seq[k];
    if (l * s.y * s.y - n * s.x * s.x != l) return "identity fails at k = " + show(k);
    if (!(n * s.x * s.x < l * s.y * s.y)) return "n X^2 < l Y^2 fails at k = " + show(k);
    if (k + 1 < seq.size() && !(s.x * seq[k + 1].y < seq[k + 1].x * s.y)) {
      return "slopes not increasing at k = " + show(k);
    }
  }
  return {};
}

std::string check_brute_pell(const SurfaceParams& p) {
  const auto seq = PellEquation(p).sequence(6);
  const Integer x_max = std::min<Integer>(seq.back().x, Integer(20000));
  const auto brute = brute_pell(p, x_max);
  std::size_t expected = 0;
  for (const auto& s : seq) {
    if (s.x <= x_max) ++expected;
  }
  if (brute.size() != expected) {
    return "brute force found " + show(brute.size()) + " solutions, sequence has " +
           show(expected);
  }
  for (std::size_t i = 0; i < brute.size(); ++i) {
    if (brute[i].x != seq[i].x || brute[i].y != seq[i].y) {
      return "solution " + show(i) + " differs";
    }
  }
  return {};
}

std::string check_wall(const BoundaryReport& b, const SurfaceParams& p,
                       std::int64_t max_d) {
  if (!b.wall) return "missing wall vector";
  const auto& w = *b.wall;
  if (mukai_square(w.u, p) != 0) return "u not isotropic";
  if (!w.u.is_primitive()) return "u not primitive";
  if (mukai_pairing(w.u, distinguished_vector(p), p) != w.d) return "<u,v> != d";
  if (w.d < 1 || w.d > max_d) return "d = " + show(w.d) + " out of range";
  if (w.d * w.g != 2 * p.l()) return "d*g != 2l";
  return mismatch("wall slope", wall_slope(w.u, p), b.boundary_slope);
}

std::string check_bb_positive(const BoundaryReport& b, const SurfaceParams& p) {
  const NSVector ray{b.cone.right.p, b.cone.right.q};
  if (bb_pairing(ray, ray, p) <= 0) return "boundary ray has BB square <= 0";
  return {};
}

json verify_one(std::int64_t n, std::int64_t l, const EnumerationBounds& bounds) {
  const SurfaceParams p(n, l);
  const bool km2 = l == 3;
  const bool trivial = is_trivial_pell(p);
  CheckList checks;
  std::optional<GammaScan> scan;
  checks.run("gamma_scan", [&] {
    scan = scan_gamma(p, bounds);
    return std::string{};
  });

  if (trivial) {
    checks.run("trivial_boundary", [&] {
      const Rational root = rational_sqrt_ratio(n, l);
      const auto mov = km2 ? movable_boundary_km2(n) : movable_boundary_general(n, l);
      std::string out = mismatch("movable", mov.boundary_slope, root);
      if (km2 && out.empty()) out = mismatch("nef", nef_boundary_km2(n).boundary_slope, root);
      const NSVector ray{mov.cone.right.p, mov.cone.right.q};
      if (out.empty() && bb_pairing(ray, ray, p) != 0) out = "BB square of boundary != 0";
      return out;
    });
    checks.run("no_interior_wall", [&] {
      if (!scan) return std::string("scan unavailable");
      if (scan->movable) return "Gamma_m wall at slope " + to_string(scan->movable->slope);
      if (km2 && scan->nef) return "Gamma wall at slope " + to_string(scan->nef->slope);
      return std::string{};
    });
  } else {
    checks.run("pell_identity", [&] { return check_pell(p); });
    checks.run("brute_pell", [&] { return check_brute_pell(p); });
    std::optional<BoundaryReport> mov_general_opt, nef_opt, mov_opt;
    checks.run("closed_forms", [&] {
      mov_general_opt = movable_boundary_general(n, l);
      if (km2) {
        nef_opt = nef_boundary_table(n);
        mov_opt = movable_boundary_table(n);
      }
      return std::string{};
    });
    if (!mov_general_opt || (km2 && (!nef_opt || !mov_opt))) {
      return json{{"n", std::to_string(n)},
                  {"l", std::to_string(l)},
                  {"verdict", verdict_name(checks.verdict())},
                  {"checks", checks.to_json()}};
    }
    const BoundaryReport& mov_general = *mov_general_opt;
    if (km2) {
      const BoundaryReport& nef_t = *nef_opt;
      const BoundaryReport& mov_t = *mov_opt;
      checks.run("nef_table_vs_walk", [&] {
        return mismatch("nef", nef_boundary_iterative(n).boundary_slope, nef_t.boundary_slope);
      });
      checks.run("movable_table_vs_walk", [&] {
        return mismatch("movable", movable_boundary_iterative(n).boundary_slope,
                        mov_t.boundary_slope);
      });
      checks.run("movable_general_vs_km2", [&] {
        return mismatch("movable", mov_general.boundary_slope, mov_t.boundary_slope);
      });
      checks.run("nef_oracle", [&] {
        if (!scan) return std::string("scan unavailable");
        const Rational s = resolve_oracle_boundary(scan->nef, nef_t.wall->u, p, bounds);
        return mismatch("oracle nef", s, nef_t.boundary_slope);
      });
      checks.run("nesting", [&] {
        if (nef_t.boundary_slope > mov_t.boundary_slope) return std::string("nef > movable");
        const Rational& s = mov_t.boundary_slope;
        if (!(3 * s * s < Rational(p.n_int()))) return std::string("movable outside P+");
        return std::string{};
      });
      checks.run("corollary", [&] {
        if (nef_equals_movable_criterion(n) && nef_t.boundary_slope != mov_t.boundary_slope) {
          return std::string("criterion holds but nef != movable");
        }
        return std::string{};
      });
      checks.run("hilbert_chow", [&] {
        const bool hc = hilbert_chow_movable_boundary_test(n);
        if (hc != (mov_t.wall->d == 1)) {
          return "test says " + show(hc) + " but movable d = " + show(mov_t.wall->d);
        }
        return std::string{};
      });
      checks.run("chambers", [&] {
        const auto chambers = chamber_decomposition_km2(n, false);
        if (chambers.front().cone != nef_t.cone) return std::string("chamber 1 != nef cone");
        if (chambers.back().cone.right != mov_t.cone.right) {
          return std::string("last chamber does not end at the movable boundary");
        }
        for (std::size_t i = 0; i + 1 < chambers.size(); ++i) {
          if (chambers[i].cone.right != chambers[i + 1].cone.left) {
            return "chambers " + show(i + 1) + " and " + show(i + 2) + " do not meet";
          }
        }
        return std::string{};
      });
      checks.run("bb_sign", [&] {
        auto out = check_bb_positive(nef_t, p);
        return out.empty() ? check_bb_positive(mov_t, p) : out;
      });
      checks.run("wall_vectors", [&] {
        auto out = check_wall(nef_t, p, kNefMaxPairing);
        if (out.empty()) out = check_wall(mov_t, p, kMovableMaxPairing);
        if (out.empty()) out = check_wall(mov_general, p, kMovableMaxPairing);
        return out;
      });
    } else {
      checks.run("nesting", [&] {
        const Rational& s = mov_general.boundary_slope;
        if (!(Rational(p.l_int()) * s * s < Rational(p.n_int()))) {
          return std::string("movable outside P+");
        }
        return std::string{};
      });
      checks.run("bb_sign", [&] { return check_bb_positive(mov_general, p); });
      checks.run("wall_vectors", [&] {
        return check_wall(mov_general, p, kMovableMaxPairing);
      });
    }
    checks.run("movable_oracle", [&] {
      if (!scan) return std::string("scan unavailable");
      const Rational s =
          resolve_oracle_boundary(scan->movable, mov_general.wall->u, p, bounds);
      return mismatch("oracle movable", s, mov_general.boundary_slope);
    });
  }

  if (l <= 4) {
    checks.run("lemma_isotropic", [&] {
      if (!scan) return std::string("scan unavailable");
      if (scan->isotropic_counterexample) {
        return "counterexample " + show(*scan->isotropic_counterexample);
      }
      return std::string{};
    });
  }
  checks.run("zero_slope_wall", [&] {
    if (!scan) return std::string("scan unavailable");
    return scan->has_zero_slope_wall ? std::string{} : std::string("no wall through h");
  });
  checks.run("complement_walls", [&] {
    if (!scan) return std::string("scan unavailable");
    if (scan->complement_mismatch) return "mismatch at " + show(*scan->complement_mismatch);
    return std::string{};
  });

  return json{{"n", std::to_string(n)},
              {"l", std::to_string(l)},
              {"verdict", verdict_name(checks.verdict())},
              {"checks", checks.to_json()}};
}

}  // namespace

Document verify_document(const VerifyOptions& options) {
  if (options.n_first < 1 || options.n_last < options.n_first) {
    throw Error(ErrorCode::InvalidArgument, "empty or invalid n range");
  }
  if (options.l_values.empty()) {
    throw Error(ErrorCode::InvalidArgument, "no l values given");
  }
  for (const auto l : options.l_values) SurfaceParams(options.n_first, l);
  if (options.bounds.max_component < 1) {
    throw Error(ErrorCode::InvalidArgument, "bound must be >= 1");
  }

  struct Task {
    std::int64_t n;
    std::int64_t l;
  };
  std::vector<Task> tasks;
  for (std::int64_t n = options.n_first; n <= options.n_last; ++n) {
    for (const auto l : options.l_values) tasks.push_back({n, l});
  }
  std::vector<json> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      rows[i] = verify_one(tasks[i].n, tasks[i].l, options.bounds);
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  std::size_t passed = 0, failed = 0, incomplete = 0;
  json out_rows = json::array();
  for (auto& row : rows) {
    const auto v = row["verdict"].get<std::string>();
    if (v == "pass") ++passed;
    else if (v == "fail") ++failed;
    else ++incomplete;
    out_rows.push_back(std::move(row));
  }
  std::string l_list;
  for (const auto l : options.l_values) {
    if (!l_list.empty()) l_list += ",";
    l_list += std::to_string(l);
  }
  Document doc;
  doc.kind = "verify";
  doc.params = json{{"n", std::to_string(options.n_first) + ".." +
                              std::to_string(options.n_last)},
                    {"l", l_list}};
  const bool ok = failed == 0 && incomplete == 0;
  doc.payload = json{{"bound", std::to_string(options.bounds.max_component)},
                     {"rows", std::move(out_rows)},
                     {"summary", {{"passed", std::to_string(passed)},
                                  {"failed", std::to_string(failed)},
                                  {"incomplete", std::to_string(incomplete)}}},
                     {"verdict", ok ? "pass" : "fail"}};
  doc.passed = ok;
  return doc;
}

}  // namespace kummer
