#include "tlcat.h"

#include <exception>
#include <string>
#include <utility>

#include "tlcat/errors.hpp"
#include "tlcat/group_model.hpp"
#include "tlcat/reports.hpp"

struct tlc_report {
  std::string text;
  bool passed = true;
};

namespace {

thread_local std::string g_last_error = "no error";

tlc_status fail(tlc_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

tlc_status deliver(tlcat::Report rep, tlc_report** out) {
  if (!out) return fail(TLC_ERR_INVALID_ARGUMENT, "output pointer is null");
  *out = new tlc_report{std::move(rep.text), rep.passed};
  return TLC_OK;
}

// Runs `body` (which returns a Report) under the exception-to-status mapping.
template <typename Body>
tlc_status guarded(tlc_report** out, Body&& body) {
  try {
    return deliver(body(), out);
  } catch (const tlcat::WordMismatch& e) {
    return fail(TLC_ERR_WORD_MISMATCH, e.what());
  } catch (const tlcat::CapExceeded& e) {
    return fail(TLC_ERR_CAP_EXCEEDED, e.what());
  } catch (const tlcat::ParseError& e) {
    return fail(TLC_ERR_PARSE, e.what());
  } catch (const tlcat::InvalidArgument& e) {
    return fail(TLC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const tlcat::Internal& e) {
    return fail(TLC_ERR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(TLC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TLC_ERR_INTERNAL, "unknown error");
  }
}

std::string require(const char* value, const char* what) {
  if (!value)
    throw tlcat::InvalidArgument(std::string(what) + " must not be null");
  return value;
}

tlcat::CategoryId category_of(const char* text) {
  const std::string name = require(text, "category");
  const auto id = tlcat::parse_category(name);
  if (!id) throw tlcat::InvalidArgument("unknown category id: " + name);
  return *id;
}

tlcat::ClosureProgress wrap_progress(tlc_progress_fn fn, void* user) {
  if (!fn) return {};
  return [fn, user](const tlcat::ClosureStats& s) {
    fn(s.round, static_cast<unsigned long long>(s.frontier),
       static_cast<unsigned long long>(s.discovered), user);
  };
}

}  // namespace

extern "C" {

tlc_status tlc_enumerate(const char* category, const char* upper,
                         const char* lower, unsigned max_points,
                         const char* format, tlc_report** out) {
  return guarded(out, [&] {
    return tlcat::report_enumerate(
        category_of(category),
        tlcat::Word(require(upper, "upper")),
        tlcat::Word(require(lower, "lower")), max_points,
        tlcat::parse_report_format(require(format, "format")));
  });
}

tlc_status tlc_closure_check(const char* category, unsigned max_points,
                             unsigned slack, const char* format,
                             tlc_progress_fn progress, void* user,
                             tlc_report** out) {
  return guarded(out, [&] {
    return tlcat::report_closure_check(
        category_of(category), max_points,
        slack, tlcat::parse_report_format(require(format, "format")), nullptr,
        wrap_progress(progress, user));
  });
}

tlc_status tlc_roundtrip(const char* category, unsigned max_points,
                         unsigned slack, const char* format,
                         tlc_progress_fn progress, void* user,
                         tlc_report** out) {
  return guarded(out, [&] {
    return tlcat::report_roundtrip(
        category_of(category), max_points,
        slack, tlcat::parse_report_format(require(format, "format")),
        wrap_progress(progress, user));
  });
}

tlc_status tlc_moments(const char* category, size_t max_k, const char* format,
                       tlc_report** out) {
  return guarded(out, [&] {
    return tlcat::report_moments(
        category_of(category), max_k,
        tlcat::parse_report_format(require(format, "format")));
  });
}

tlc_status tlc_level(const char* category, unsigned cap, const char* format,
                     tlc_report** out) {
  return guarded(out, [&] {
    return tlcat::report_level(
        category_of(category), cap,
        tlcat::parse_report_format(require(format, "format")));
  });
}

tlc_status tlc_gram(const char* category, const char* upper, const char* lower,
                    unsigned n, const char* format, tlc_report** out) {
  return guarded(out, [&] {
    return tlcat::report_gram(
        category_of(category),
        tlcat::Word(require(upper, "upper")),
        tlcat::Word(require(lower, "lower")), n,
        tlcat::parse_report_format(require(format, "format")));
  });
}

tlc_status tlc_group_check(const char* builtin, const char* cayley_json,
                           const char* label, unsigned radius,
                           const char* format, tlc_report** out) {
  return guarded(out, [&] {
    if (static_cast<bool>(builtin) == static_cast<bool>(cayley_json))
      throw tlcat::InvalidArgument(
          "exactly one of builtin and cayley_json must be given");
    const tlcat::FiniteGroup g = builtin
                                     ? tlcat::builtin_group(builtin)
                                     : tlcat::parse_cayley_json(cayley_json);
    const std::string name =
        label ? label : (builtin ? builtin : "cayley-table");
    return tlcat::report_group_check(
        g, name, radius,
        tlcat::parse_report_format(require(format, "format")));
  });
}

const char* tlc_report_text(const tlc_report* report) {
  return report ? report->text.c_str() : "";
}

int tlc_report_passed(const tlc_report* report) {
  return report && report->passed ? 1 : 0;
}

void tlc_report_free(tlc_report* report) { delete report; }

const char* tlc_last_error(void) { return g_last_error.c_str(); }

const char* tlc_status_name(tlc_status status) {
  switch (status) {
    case TLC_OK: return "ok";
    case TLC_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case TLC_ERR_WORD_MISMATCH: return "word-mismatch";
    case TLC_ERR_CAP_EXCEEDED: return "cap-exceeded";
    case TLC_ERR_PARSE: return "parse-error";
    case TLC_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

}  // extern "C"
