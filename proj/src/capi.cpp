#include "hesscoh/hesscoh.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "hesscoh/errors.hpp"
#include "hesscoh/render.hpp"
#include "hesscoh/verify.hpp"

using namespace hesscoh;

struct hc_session {
  RenderOptions render;
  SuiteOptions suite;
  std::string output;
  std::string error;
};

namespace {

hc_status statusOf(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::Parse: return HC_INVALID_ARGUMENT;
    case ErrorKind::DimensionMismatch: return HC_DIMENSION_MISMATCH;
    case ErrorKind::ResourceLimit: return HC_RESOURCE_LIMIT;
    case ErrorKind::NotZeroDimensional: return HC_NOT_ZERO_DIMENSIONAL;
    case ErrorKind::Io: return HC_IO_ERROR;
  }
  return HC_INTERNAL;
}

template <class F>
hc_status guarded(hc_session* s, F&& body) {
  if (!s) return HC_INVALID_ARGUMENT;
  s->output.clear();
  s->error.clear();
  try {
    return body();
  } catch (const Error& e) {
    s->error = e.what();
    return statusOf(e.kind());
  } catch (const std::bad_alloc&) {
    s->error = "out of memory";
    return HC_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    s->error = e.what();
    return HC_INTERNAL;
  }
}

HessenbergFunction hessenberg(const int* h, size_t n) {
  if (!h && n > 0) fail(ErrorKind::InvalidArgument, "null Hessenberg values");
  std::vector<int> values(h, h + n);
  return HessenbergFunction::parse(values);
}

void syncGroebner(hc_session* s) { s->suite.groebner = s->render.groebner; }

}  // namespace

extern "C" {

hc_session* hc_session_new(void) { return new (std::nothrow) hc_session(); }

void hc_session_free(hc_session* session) { delete session; }

hc_status hc_session_set_format(hc_session* session, hc_format format) {
  return guarded(session, [&] {
    switch (format) {
      case HC_FORMAT_TEXT: session->render.format = Format::Text; break;
      case HC_FORMAT_JSON: session->render.format = Format::Json; break;
      case HC_FORMAT_LATEX: session->render.format = Format::Latex; break;
      default: fail(ErrorKind::InvalidArgument, "unknown format");
    }
    return HC_OK;
  });
}

hc_status hc_session_set_mode(hc_session* session, hc_mode mode) {
  return guarded(session, [&] {
    if (mode != HC_MODE_EQUIVARIANT && mode != HC_MODE_ORDINARY) fail(ErrorKind::InvalidArgument, "unknown mode");
    session->render.mode = mode == HC_MODE_EQUIVARIANT ? Mode::Equivariant : Mode::Ordinary;
    return HC_OK;
  });
}

hc_status hc_session_set_caps(hc_session* session, int fixed_point_cap, int enumeration_cap) {
  return guarded(session, [&] {
    if (fixed_point_cap < 1 || enumeration_cap < 1) fail(ErrorKind::InvalidArgument, "caps must be positive");
    session->render.fixedPointCap = fixed_point_cap;
    session->render.enumerationCap = enumeration_cap;
    return HC_OK;
  });
}

hc_status hc_session_set_pair_budget(hc_session* session, size_t budget) {
  return guarded(session, [&] {
    if (budget == 0) fail(ErrorKind::InvalidArgument, "pair budget must be positive");
    session->render.groebner.options.pairBudget = budget;
    syncGroebner(session);
    return HC_OK;
  });
}

hc_status hc_session_set_jobs(hc_session* session, int jobs) {
  return guarded(session, [&] {
    if (jobs < 1) fail(ErrorKind::InvalidArgument, "jobs must be positive");
    session->suite.jobs = jobs;
    return HC_OK;
  });
}

hc_status hc_session_set_n_max(hc_session* session, int symbolic, int groebner) {
  return guarded(session, [&] {
    if (symbolic < 1 || groebner < 1) fail(ErrorKind::InvalidArgument, "n-max must be positive");
    session->suite.symbolicNMax = symbolic;
    session->suite.groebnerNMax = groebner;
    return HC_OK;
  });
}

hc_status hc_session_set_cache_dir(hc_session* session, const char* dir) {
  return guarded(session, [&] {
    if (dir && *dir) {
      session->render.groebner.cacheDir = std::filesystem::path(dir);
    } else {
      session->render.groebner.cacheDir.reset();
    }
    syncGroebner(session);
    return HC_OK;
  });
}

hc_status hc_session_set_timing(hc_session* session, int enabled) {
  return guarded(session, [&] {
    session->render.timing = enabled != 0;
    return HC_OK;
  });
}

const char* hc_output(const hc_session* session) { return session ? session->output.c_str() : ""; }

const char* hc_last_error(const hc_session* session) {
  if (!session) return "null session";
  return session->error.c_str();
}

hc_status hc_present(hc_session* session, const int* h, size_t n) {
  return guarded(session, [&] {
    session->output = renderPresent(hessenberg(h, n), session->render);
    return HC_OK;
  });
}

hc_status hc_generators(hc_session* session, int n) {
  return guarded(session, [&] {
    session->output = renderGenerators(n, session->render);
    return HC_OK;
  });
}

hc_status hc_fixed_points(hc_session* session, const int* h, size_t n) {
  return guarded(session, [&] {
    session->output = renderFixedPoints(hessenberg(h, n), session->render);
    return HC_OK;
  });
}

hc_status hc_enumerate(hc_session* session, int n) {
  return guarded(session, [&] {
    session->output = renderEnumerate(n, session->render);
    return HC_OK;
  });
}

hc_status hc_hilbert(hc_session* session, const int* h, size_t n) {
  return guarded(session, [&] {
    session->output = renderHilbert(hessenberg(h, n), session->render);
    return HC_OK;
  });
}

hc_status hc_verify(hc_session* session, const char* const* suites, size_t count) {
  return guarded(session, [&] {
    std::vector<std::string> names;
    for (size_t k = 0; k < count; ++k) {
      if (!suites || !suites[k]) fail(ErrorKind::InvalidArgument, "null suite name");
      names.emplace_back(suites[k]);
    }
    VerificationReport report = runSuite(names, session->suite);
    session->output = renderReport(report, session->render);
    if (!report.passed()) {
      session->error = std::to_string(report.failedCount()) + " check(s) failed";
      return HC_CHECK_FAILED;
    }
    return HC_OK;
  });
}

hc_status hc_quotient_dimension(hc_session* session, const int* h, size_t n, int64_t* out) {
  return guarded(session, [&] {
    if (!out) fail(ErrorKind::InvalidArgument, "null output pointer");
    HessenbergFunction hf = hessenberg(h, n);
    auto gens = idealGenerators(hf, Mode::Ordinary).generators;
    auto gb = computeGroebnerBasis(gens, MonomialOrder::degrevlex(hf.n()), session->render.groebner);
    auto dim = hilbertSeries(gb).quotientDimension();
    if (!dim) fail(ErrorKind::NotZeroDimensional, "quotient is not finite dimensional");
    *out = *dim;
    return HC_OK;
  });
}

int hc_status_exit_code(hc_status status) {
  switch (status) {
    case HC_OK: return 0;
    case HC_CHECK_FAILED: return 1;
    case HC_RESOURCE_LIMIT: return 2;
    case HC_INVALID_ARGUMENT:
    case HC_DIMENSION_MISMATCH:
    case HC_NOT_ZERO_DIMENSIONAL:
    case HC_IO_ERROR: return 64;
    case HC_INTERNAL: return 70;
  }
  return 70;
}

const char* hc_status_name(hc_status status) {
  switch (status) {
    case HC_OK: return "ok";
    case HC_CHECK_FAILED: return "check-failed";
    case HC_RESOURCE_LIMIT: return "resource-limit";
    case HC_INVALID_ARGUMENT: return "invalid-argument";
    case HC_DIMENSION_MISMATCH: return "dimension-mismatch";
    case HC_NOT_ZERO_DIMENSIONAL: return "not-zero-dimensional";
    case HC_IO_ERROR: return "io-error";
    case HC_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* hc_version(void) { return "1.0.0"; }

}  // extern "C"
