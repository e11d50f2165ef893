#include "kummer/kummer.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "kummer/cones.hpp"
#include "kummer/error.hpp"
#include "kummer/pell.hpp"
#include "kummer/report.hpp"

struct km_surface {
  kummer::SurfaceParams params;
};

struct km_document {
  std::string text;
  bool passed = true;
};

namespace {

thread_local std::string last_error;

km_status to_status(kummer::ErrorCode code) {
  using kummer::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return KM_ERR_INVALID_ARGUMENT;
    case ErrorCode::TrivialPell: return KM_ERR_TRIVIAL_PELL;
    case ErrorCode::IntegrityError: return KM_ERR_INTEGRITY;
    case ErrorCode::NotOrthogonal: return KM_ERR_NOT_ORTHOGONAL;
    case ErrorCode::DegenerateWall: return KM_ERR_DEGENERATE_WALL;
    case ErrorCode::VerticalWall: return KM_ERR_VERTICAL_WALL;
    case ErrorCode::UnsupportedNef: return KM_ERR_UNSUPPORTED_NEF;
    case ErrorCode::Incomplete: return KM_ERR_INCOMPLETE;
    case ErrorCode::InternalError: return KM_ERR_INTERNAL;
  }
  return KM_ERR_INTERNAL;
}

km_status fail(km_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
km_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const kummer::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(KM_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(KM_ERR_INTERNAL, e.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

kummer::Format to_format(km_format format) {
  switch (format) {
    case KM_FORMAT_TEXT: return kummer::Format::Text;
    case KM_FORMAT_JSON: return kummer::Format::Json;
    case KM_FORMAT_CSV: return kummer::Format::Csv;
  }
  throw kummer::Error(kummer::ErrorCode::InvalidArgument, "unknown format");
}

kummer::ConeSelection to_selection(km_cone_selection which) {
  switch (which) {
    case KM_CONE_AUTO: return kummer::ConeSelection::Auto;
    case KM_CONE_NEF: return kummer::ConeSelection::Nef;
    case KM_CONE_MOVABLE: return kummer::ConeSelection::Movable;
    case KM_CONE_BOTH: return kummer::ConeSelection::Both;
  }
  throw kummer::Error(kummer::ErrorCode::InvalidArgument,
                      "unknown cone selection");
}

km_status emit(const kummer::Document& doc, km_format format,
               km_document** out) {
  auto rendered = kummer::render(doc, to_format(format));
  *out = new km_document{std::move(rendered), doc.passed};
  return KM_OK;
}

#define KM_REQUIRE(cond, message)                                  \
  do {                                                             \
    if (!(cond)) return fail(KM_ERR_INVALID_ARGUMENT, (message));  \
  } while (0)

}  // namespace

extern "C" {

const char* km_version(void) { return "1.0.0"; }

const char* km_status_name(km_status status) {
  switch (status) {
    case KM_OK: return "OK";
    case KM_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case KM_ERR_TRIVIAL_PELL: return "TrivialPell";
    case KM_ERR_INTEGRITY: return "IntegrityError";
    case KM_ERR_NOT_ORTHOGONAL: return "NotOrthogonal";
    case KM_ERR_DEGENERATE_WALL: return "DegenerateWall";
    case KM_ERR_VERTICAL_WALL: return "VerticalWall";
    case KM_ERR_UNSUPPORTED_NEF: return "UnsupportedNef";
    case KM_ERR_INCOMPLETE: return "Incomplete";
    case KM_ERR_INTERNAL: return "InternalError";
    case KM_ERR_OUT_OF_MEMORY: return "OutOfMemory";
  }
  return "Unknown";
}

const char* km_last_error(void) { return last_error.c_str(); }

km_status km_surface_create(int64_t n, int64_t l, km_surface** out) {
  KM_REQUIRE(out, "out is null");
  *out = nullptr;
  return guarded([&] {
    *out = new km_surface{kummer::SurfaceParams(n, l)};
    return KM_OK;
  });
}

void km_surface_destroy(km_surface* surface) { delete surface; }

int64_t km_surface_n(const km_surface* surface) {
  return surface ? surface->params.n() : 0;
}

int64_t km_surface_l(const km_surface* surface) {
  return surface ? surface->params.l() : 0;
}

km_status km_surface_is_trivial_pell(const km_surface* surface, int* out) {
  KM_REQUIRE(surface && out, "null argument");
  return guarded([&] {
    *out = kummer::is_trivial_pell(surface->params) ? 1 : 0;
    return KM_OK;
  });
}

km_status km_surface_pell_solution(const km_surface* surface, uint32_t k,
                                   char** x, char** y) {
  KM_REQUIRE(surface && x && y, "null argument");
  *x = *y = nullptr;
  return guarded([&] {
    const auto s = kummer::PellEquation(surface->params).at(k);
    char* xs = duplicate(s.x.get_str());
    try {
      *y = duplicate(s.y.get_str());
    } catch (...) {
      std::free(xs);
      throw;
    }
    *x = xs;
    return KM_OK;
  });
}

km_status km_surface_nef_slope(const km_surface* surface, char** slope) {
  KM_REQUIRE(surface && slope, "null argument");
  *slope = nullptr;
  return guarded([&] {
    if (surface->params.l() != 3) {
      return fail(KM_ERR_UNSUPPORTED_NEF, "nef cones are only available for l = 3");
    }
    const auto b = kummer::nef_boundary_km2(surface->params.n());
    *slope = duplicate(kummer::to_fraction_string(b.boundary_slope));
    return KM_OK;
  });
}

km_status km_surface_movable_slope(const km_surface* surface, char** slope) {
  KM_REQUIRE(surface && slope, "null argument");
  *slope = nullptr;
  return guarded([&] {
    const auto& p = surface->params;
    const auto b = p.l() == 3 ? kummer::movable_boundary_km2(p.n())
                              : kummer::movable_boundary_general(p.n(), p.l());
    *slope = duplicate(kummer::to_fraction_string(b.boundary_slope));
    return KM_OK;
  });
}

void km_string_free(char* s) { std::free(s); }

km_status km_cone(const km_surface* surface, km_cone_selection which,
                  km_format format, km_document** out) {
  KM_REQUIRE(surface && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    return emit(kummer::cone_document(surface->params, to_selection(which)),
                format, out);
  });
}

km_status km_chambers(const km_surface* surface, int end_a_is_z,
                      km_format format, km_document** out) {
  KM_REQUIRE(surface && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    return emit(kummer::chambers_document(surface->params, end_a_is_z != 0),
                format, out);
  });
}

km_status km_walls(const km_surface* surface, uint32_t count,
                   km_format format, km_document** out) {
  KM_REQUIRE(surface && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    return emit(kummer::walls_document(surface->params, count), format, out);
  });
}

km_status km_pell(const km_surface* surface, uint32_t count, km_format format,
                  km_document** out) {
  KM_REQUIRE(surface && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    return emit(kummer::pell_document(surface->params, count), format, out);
  });
}

km_status km_table(int64_t n_first, int64_t n_last, km_format format,
                   km_document** out) {
  KM_REQUIRE(out, "null argument");
  *out = nullptr;
  return guarded([&] {
    return emit(kummer::table_document(n_first, n_last), format, out);
  });
}

km_status km_verify(const km_verify_options* options, km_format format,
                    km_document** out) {
  KM_REQUIRE(options && out, "null argument");
  KM_REQUIRE(options->l_count == 0 || options->l_values, "l_values is null");
  *out = nullptr;
  return guarded([&] {
    kummer::VerifyOptions opts;
    opts.n_first = options->n_first;
    opts.n_last = options->n_last;
    if (options->l_count > 0) {
      opts.l_values.assign(options->l_values,
                           options->l_values + options->l_count);
    }
    if (options->bound > 0) opts.bounds.max_component = options->bound;
    else if (options->bound < 0) {
      return fail(KM_ERR_INVALID_ARGUMENT, "bound must be positive");
    }
    opts.jobs = options->jobs == 0 ? 1 : options->jobs;
    return emit(kummer::verify_document(opts), format, out);
  });
}

const char* km_document_text(const km_document* doc) {
  return doc ? doc->text.c_str() : "";
}

size_t km_document_size(const km_document* doc) {
  return doc ? doc->text.size() : 0;
}

int km_document_passed(const km_document* doc) {
  return doc && doc->passed ? 1 : 0;
}

void km_document_destroy(km_document* doc) { delete doc; }

}  // extern "C"
