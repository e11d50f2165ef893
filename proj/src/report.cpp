#include "kummer/report.hpp"

#include <sstream>

#include "kummer/error.hpp"

namespace kummer {

using json = nlohmann::ordered_json;

namespace {

json str(const Integer& z) { return to_string(z); }
json str(std::int64_t v) { return std::to_string(v); }
json frac(const Rational& q) { return to_fraction_string(q); }

json base_params(const SurfaceParams& p) {
  return json{{"n", str(p.n())}, {"l", str(p.l())}};
}

Document make_document(std::string kind, json params, json payload) {
  Document doc;
  doc.kind = std::move(kind);
  doc.params = std::move(params);
  doc.payload = std::move(payload);
  return doc;
}

std::string text_of(const json& j) {
  if (j.is_null()) return "-";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "yes" : "no";
  if (j.is_array()) {
    std::string out = "(";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ", ";
      out += text_of(j[i]);
    }
    return out + ")";
  }
  return j.dump();
}

std::string wall_text(const json& wall) {
  if (wall.is_null()) return "none";
  return "u = " + text_of(wall["u"]) + ", <u,v> = " + text_of(wall["d"]);
}

void boundary_text(std::ostream& os, const char* name, const json& b) {
  if (b.is_null()) return;
  os << name << " cone: R>=0 h + R>=0 " << text_of(b["cone"]["right"])
     << "   slope " << text_of(b["slope"]) << '\n';
  os << "  boundary wall: " << wall_text(b["wall"]);
  if (!b["pell_index"].is_null()) os << " (k = " << text_of(b["pell_index"]) << ')';
  os << '\n';
}

std::string render_text(const Document& doc) {
  std::ostringstream os;
  const json& pl = doc.payload;
  os << doc.kind << "  n = " << text_of(doc.params["n"])
     << "  l = " << text_of(doc.params["l"]) << '\n';
  if (doc.kind == "cone") {
    if (!pl["table_row"].is_null()) os << "table row: " << text_of(pl["table_row"]) << '\n';
    boundary_text(os, "nef", pl["nef"]);
    boundary_text(os, "movable", pl["movable"]);
    if (!pl["nef_equals_movable"].is_null()) {
      os << "nef = movable: " << text_of(pl["nef_equals_movable"]) << '\n';
    }
  } else if (doc.kind == "chambers") {
    os << "table row: " << text_of(pl["table_row"]) << '\n';
    for (const auto& ch : pl["chambers"]) {
      os << "C" << text_of(ch["index"]) << ": " << text_of(ch["cone"]["left"])
         << " .. " << text_of(ch["cone"]["right"]) << "  slopes "
         << text_of(ch["slopes"][0]) << " .. " << text_of(ch["slopes"][1])
         << "  " << text_of(ch["model"]);
      if (!ch["u"].is_null()) os << " u = " << text_of(ch["u"]);
      os << "  iso to Km^2(A): " << text_of(ch["iso_to_original"]) << '\n';
    }
  } else if (doc.kind == "walls") {
    for (const auto& w : pl["walls"]) {
      os << "k = " << text_of(w["k"]) << "  (X, Y) = " << text_of(w["solution"])
         << "  slope " << text_of(w["slope"]) << "  " << wall_text(w["wall"])
         << '\n';
    }
  } else if (doc.kind == "pell") {
    os << "equation: " << text_of(pl["equation"]) << '\n';
    os << "trivial: " << text_of(pl["trivial"]) << '\n';
    for (const auto& s : pl["solutions"]) {
      os << "k = " << text_of(s["k"]) << "  X = " << text_of(s["X"])
         << "  Y = " << text_of(s["Y"]);
      if (!s["Z"].is_null()) os << "  Z = " << text_of(s["Z"]);
      os << '\n';
    }
  } else if (doc.kind == "table") {
    os << "n\trow\tX1\tY1\tnef\tmovable\n";
    for (const auto& r : pl["rows"]) {
      os << text_of(r["n"]) << '\t' << text_of(r["table_row"]) << '\t'
         << text_of(r["X1"]) << '\t' << text_of(r["Y1"]) << '\t'
         << text_of(r["nef_slope"]) << '\t' << text_of(r["movable_slope"])
         << '\n';
    }
  } else if (doc.kind == "verify") {
    for (const auto& row : pl["rows"]) {
      os << "n = " << text_of(row["n"]) << " l = " << text_of(row["l"])
         << ": " << text_of(row["verdict"]) << '\n';
      for (const auto& c : row["checks"]) {
        if (c["verdict"] == "pass") continue;
        os << "  " << text_of(c["name"]) << ": " << text_of(c["verdict"])
           << "  " << text_of(c["detail"]) << '\n';
      }
    }
    os << "summary: " << text_of(pl["summary"]["passed"]) << " passed, "
       << text_of(pl["summary"]["failed"]) << " failed, "
       << text_of(pl["summary"]["incomplete"]) << " incomplete\n";
    os << "verdict: " << text_of(pl["verdict"]) << '\n';
  }
  return os.str();
}

std::string csv_field(const json& j) {
  if (j.is_null()) return "";
  return text_of(j);
}

std::string render_csv(const Document& doc) {
  std::ostringstream os;
  const json& pl = doc.payload;
  if (doc.kind == "table") {
    os << "n,table_row,X1,Y1,nef_slope,movable_slope,nef_equals_movable\n";
    for (const auto& r : pl["rows"]) {
      os << csv_field(r["n"]) << ',' << csv_field(r["table_row"]) << ','
         << csv_field(r["X1"]) << ',' << csv_field(r["Y1"]) << ','
         << csv_field(r["nef_slope"]) << ',' << csv_field(r["movable_slope"])
         << ',' << (r["nef_equals_movable"].get<bool>() ? "true" : "false")
         << '\n';
    }
  } else if (doc.kind == "walls") {
    os << "k,X,Y,slope,u_r,u_c,u_a,d\n";
    for (const auto& w : pl["walls"]) {
      os << csv_field(w["k"]) << ',' << csv_field(w["solution"][0]) << ','
         << csv_field(w["solution"][1]) << ',' << csv_field(w["slope"]);
      if (w["wall"].is_null()) {
        os << ",,,,";
      } else {
        for (const auto& c : w["wall"]["u"]) os << ',' << csv_field(c);
        os << ',' << csv_field(w["wall"]["d"]);
      }
      os << '\n';
    }
  } else if (doc.kind == "pell") {
    os << "k,X,Y,Z\n";
    for (const auto& s : pl["solutions"]) {
      os << csv_field(s["k"]) << ',' << csv_field(s["X"]) << ','
         << csv_field(s["Y"]) << ',' << csv_field(s["Z"]) << '\n';
    }
  } else {
    throw Error(ErrorCode::InvalidArgument,
                "csv output is not available for '" + doc.kind + "'");
  }
  return os.str();
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw Error(ErrorCode::InvalidArgument,
              "unknown format '" + std::string(name) + "'");
}

ConeSelection parse_cone_selection(std::string_view name) {
  if (name == "auto") return ConeSelection::Auto;
  if (name == "nef") return ConeSelection::Nef;
  if (name == "movable") return ConeSelection::Movable;
  if (name == "both") return ConeSelection::Both;
  throw Error(ErrorCode::InvalidArgument,
              "unknown cone selection '" + std::string(name) + "'");
}

std::string render(const Document& doc, Format format) {
  switch (format) {
    case Format::Json: {
      json top = {{"schema_version", kSchemaVersion},
                  {"params", doc.params},
                  {"kind", doc.kind},
                  {"payload", doc.payload}};
      return top.dump(2) + "\n";
    }
    case Format::Csv: return render_csv(doc);
    case Format::Text: return render_text(doc);
  }
  return {};
}

json to_json(const MukaiVector& u) { return json::array({str(u.r), str(u.c), str(u.a)}); }

json to_json(const Ray& ray) { return json::array({str(ray.p), str(ray.q)}); }

json to_json(const Cone& cone) {
  return json{{"left", to_json(cone.left)}, {"right", to_json(cone.right)}};
}

json to_json(const WallVectorReport& wall) {
  return json{{"u", to_json(wall.u)},
              {"d", str(wall.d)},
              {"g", str(wall.g)},
              {"source", json::array({str(wall.source_x), str(wall.source_y)})}};
}

json to_json(const BoundaryReport& report) {
  return json{
      {"cone", to_json(report.cone)},
      {"slope", frac(report.boundary_slope)},
      {"wall", report.wall ? to_json(*report.wall) : json(nullptr)},
      {"pell_index", report.pell_index
                         ? str(static_cast<std::int64_t>(*report.pell_index))
                         : json(nullptr)}};
}

Document cone_document(const SurfaceParams& p, ConeSelection which) {
  const bool km2 = p.l() == 3;
  if (!km2 && (which == ConeSelection::Nef || which == ConeSelection::Both)) {
    throw Error(ErrorCode::UnsupportedNef,
                "nef cones are only available for l = 3");
  }
  const bool want_nef = km2 && which != ConeSelection::Movable;
  const bool want_mov = which != ConeSelection::Nef;
  json payload = {{"trivial_pell", is_trivial_pell(p)},
                  {"table_row", nullptr},
                  {"nef", nullptr},
                  {"movable", nullptr},
                  {"nef_equals_movable", nullptr},
                  {"corollary_criterion", nullptr}};
  if (km2) {
    payload["table_row"] = to_string(classify_km2(p.n()));
    payload["corollary_criterion"] = nef_equals_movable_criterion(p.n());
  }
  std::optional<BoundaryReport> nef, mov;
  if (want_nef) nef = nef_boundary_km2(p.n());
  if (want_mov) {
    mov = km2 ? movable_boundary_km2(p.n()) : movable_boundary_general(p.n(), p.l());
  }
  if (nef) payload["nef"] = to_json(*nef);
  if (mov) payload["movable"] = to_json(*mov);
  if (nef && mov) {
    payload["nef_equals_movable"] = nef->boundary_slope == mov->boundary_slope;
  }
  return make_document("cone", base_params(p), std::move(payload));
}

Document chambers_document(const SurfaceParams& p, bool end_a_is_z) {
  if (p.l() != 3) {
    throw Error(ErrorCode::UnsupportedNef,
                "chamber decompositions are only available for l = 3");
  }
  json chambers = json::array();
  for (const auto& ch : chamber_decomposition_km2(p.n(), end_a_is_z)) {
    auto slope_of = [](const Ray& r) {
      return frac(make_rational(-r.q, r.p));
    };
    json factorizations = json::array();
    if (ch.u) {
      for (const auto& f : mukai_factorizations(*ch.u, p.n())) {
        factorizations.push_back(json{{"s", str(f.s)}, {"t", str(f.t)},
                                      {"a", str(f.a)}, {"b", str(f.b)}});
      }
    }
    chambers.push_back(json{
        {"index", str(static_cast<std::int64_t>(ch.index))},
        {"cone", to_json(ch.cone)},
        {"slopes", json::array({slope_of(ch.cone.left), slope_of(ch.cone.right)})},
        {"model", to_string(ch.model)},
        {"u", ch.u ? to_json(*ch.u) : json(nullptr)},
        {"factorizations", std::move(factorizations)},
        {"iso_to_original", to_string(ch.iso_to_original)}});
  }
  json payload = {{"table_row", to_string(classify_km2(p.n()))},
                  {"end_a_is_z", end_a_is_z},
                  {"chambers", std::move(chambers)}};
  json params = base_params(p);
  return make_document("chambers", std::move(params), std::move(payload));
}

Document walls_document(const SurfaceParams& p, std::size_t count) {
  const PellEquation eq(p);  // TrivialPell
  json walls = json::array();
  for (const auto& s : eq.sequence(count)) {
    const Rational slope = make_rational(p.n_int() * s.x, p.l_int() * s.y);
    const auto wall = admissible_wall_vector(s.x, s.y, p, p.l());
    walls.push_back(json{
        {"k", str(static_cast<std::int64_t>(s.k))},
        {"solution", json::array({str(s.x), str(s.y)})},
        {"slope", frac(slope)},
        {"ray", to_json(ray_for_slope(slope))},
        {"wall", wall ? to_json(*wall) : json(nullptr)},
        {"movable_type", wall.has_value() && wall->d <= 2}});
  }
  return make_document("walls", base_params(p), json{{"walls", std::move(walls)}});
}

Document pell_document(const SurfaceParams& p, std::size_t count) {
  std::ostringstream eq_text;
  eq_text << p.l() << "Y^2 - " << p.n() << "X^2 = " << p.l();
  json payload = {{"equation", eq_text.str()},
                  {"trivial", is_trivial_pell(p)},
                  {"fundamental", nullptr},
                  {"divisible_fundamental", nullptr},
                  {"solutions", json::array()}};
  auto row = [&](const PellSolution& s) {
    json z = divides(p.l_int(), s.x) ? str(exact_div(s.x, p.l_int())) : json(nullptr);
    return json{{"k", str(static_cast<std::int64_t>(s.k))},
                {"X", str(s.x)}, {"Y", str(s.y)}, {"Z", z}};
  };
  if (is_trivial_pell(p)) {
    payload["solutions"].push_back(row(PellSolution{0, 1, 0}));
  } else {
    const PellEquation eq(p);
    payload["fundamental"] = json::array({str(eq.fundamental().x), str(eq.fundamental().y)});
    const PellUnit div = fundamental_divisible_solution(p);
    payload["divisible_fundamental"] = json{{"Z", str(div.w)}, {"Y", str(div.y)}};
    for (const auto& s : eq.sequence(count)) payload["solutions"].push_back(row(s));
  }
  return make_document("pell", base_params(p), std::move(payload));
}

Document table_document(std::int64_t n_first, std::int64_t n_last) {
  if (n_first < 1 || n_last < n_first) {
    throw Error(ErrorCode::InvalidArgument, "empty or invalid n range");
  }
  json rows = json::array();
  for (std::int64_t n = n_first; n <= n_last; ++n) {
    const SurfaceParams p(n, 3);
    const TableRow row = classify_km2(n);
    const auto nef = nef_boundary_km2(n);
    const auto mov = movable_boundary_km2(n);
    json x1 = nullptr, y1 = nullptr;
    if (row != TableRow::MSquare) {
      const auto s = fundamental_solution(p);
      x1 = str(s.x);
      y1 = str(s.y);
    }
    rows.push_back(json{{"n", str(n)},
                        {"table_row", to_string(row)},
                        {"X1", x1},
                        {"Y1", y1},
                        {"nef_slope", frac(nef.boundary_slope)},
                        {"movable_slope", frac(mov.boundary_slope)},
                        {"nef_equals_movable",
                         nef.boundary_slope == mov.boundary_slope}});
  }
  json params = {{"n", std::to_string(n_first) + ".." + std::to_string(n_last)},
                 {"l", "3"}};
  return make_document("table", std::move(params), json{{"rows", std::move(rows)}});
}

}  // namespace kummer
