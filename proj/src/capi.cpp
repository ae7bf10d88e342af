#include "hilb.h"

#include <algorithm>
#include <cstring>
#include <string>

#include <json.hpp>

#include "errors.hpp"
#include "ingest.hpp"
#include "json_io.hpp"
#include "oracle.hpp"

struct hilb_series {
  hilb::HilbertSeries value;
};
struct hilb_presentation {
  hilb::BoundaryPresentation value;
};
struct hilb_representation {
  hilb::PositiveRepresentation value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
hilb_status guard(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return HILB_OK;
  } catch (const hilb::SyntaxError& e) {
    g_last_error = e.what();
    return HILB_ERR_SYNTAX;
  } catch (const hilb::NotNonnegative& e) {
    g_last_error = e.what();
    return HILB_ERR_NOT_NONNEGATIVE;
  } catch (const hilb::InfiniteDelta& e) {
    g_last_error = e.what();
    return HILB_ERR_NOT_NONNEGATIVE;
  } catch (const hilb::NoPresentation& e) {
    g_last_error = e.what();
    return HILB_ERR_NO_PRESENTATION;
  } catch (const hilb::InvalidMove& e) {
    g_last_error = e.what();
    return HILB_ERR_INVALID_MOVE;
  } catch (const hilb::BudgetExceeded& e) {
    g_last_error = e.what();
    return HILB_ERR_BUDGET_EXCEEDED;
  } catch (const hilb::PreconditionError& e) {
    g_last_error = e.what();
    return HILB_ERR_PRECONDITION;
  } catch (const hilb::TooManyGenerators& e) {
    g_last_error = e.what();
    return HILB_ERR_BAD_ARGUMENT;
  } catch (const hilb::IoError& e) {
    g_last_error = e.what();
    return HILB_ERR_IO;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HILB_ERR_PRECONDITION;
  }
}

hilb_status require(bool ok, const char* msg) {
  if (ok) return HILB_OK;
  g_last_error = msg;
  return HILB_ERR_BAD_ARGUMENT;
}

}  // namespace

extern "C" {

const char* hilb_last_error(void) { return g_last_error.c_str(); }

void hilb_string_free(char* s) { delete[] s; }

hilb_status hilb_series_parse(const char* numerator, unsigned dim,
                              hilb_series** out) {
  if (auto st = require(numerator && out, "null argument")) return st;
  return guard([&] {
    hilb::HilbertSeries h =
        hilb::canonicalize({hilb::parse_poly(numerator), dim});
    *out = new hilb_series{std::move(h)};
  });
}

hilb_status hilb_series_from_ideal(const char* ideal, unsigned nvars,
                                   hilb_series** out) {
  if (auto st = require(ideal && out, "null argument")) return st;
  return guard([&] {
    hilb::MonomialIdeal I = hilb::parse_ideal(ideal, nvars);
    *out = new hilb_series{hilb::hilbert_numerator(I)};
  });
}

void hilb_series_free(hilb_series* s) { delete s; }

hilb_status hilb_series_numerator(const hilb_series* s, char** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guard([&] { *out = dup_string(s->value.numerator.to_string()); });
}

hilb_status hilb_series_dim(const hilb_series* s, unsigned* out) {
  if (auto st = require(s && out, "null argument")) return st;
  *out = s->value.dim;
  g_last_error.clear();
  return HILB_OK;
}

hilb_status hilb_series_is_nonnegative(const hilb_series* s, int* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guard([&] { *out = hilb::is_nonnegative_series(s->value) ? 1 : 0; });
}

hilb_status hilb_series_report_json(const hilb_series* s, char** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guard([&] {
    *out = dup_string(hilb::report_to_json(hilb::invariant_report(s->value)));
  });
}

hilb_status hilb_series_default_budget(const hilb_series* s, unsigned* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guard([&] {
    const auto& h = s->value;
    long dq = h.numerator.is_zero() ? 0 : *h.numerator.degree();
    unsigned dd = hilb::delta_d(hilb::shift_substitute(h.numerator), h.dim);
    *out = static_cast<unsigned>(std::max<long>(dq, dd)) + 8;
  });
}

hilb_status hilb_series_oracle_json(const hilb_series* s, unsigned budget,
                                    char** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guard([&] {
    hilb::require_nonnegative(s->value);
    nlohmann::json j;
    j["brute_hreg"] = hilb::oracle::brute_hreg(s->value, budget);
    j["brute_hdepth"] = hilb::oracle::brute_hdepth(s->value);
    *out = dup_string(j.dump());
  });
}

hilb_status hilb_presentation_compute(const hilb_series* s, unsigned n,
                                      unsigned k, hilb_presentation** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guard([&] {
    *out = new hilb_presentation{hilb::compute_presentation(s->value, n, k)};
  });
}

hilb_status hilb_presentation_min_width(const hilb_series* s,
                                        hilb_presentation** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guard([&] {
    *out = new hilb_presentation{hilb::min_width_presentation(s->value)};
  });
}

hilb_status hilb_presentation_min_height(const hilb_series* s,
                                         hilb_presentation** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guard([&] {
    *out = new hilb_presentation{hilb::min_height_presentation(s->value)};
  });
}

void hilb_presentation_free(hilb_presentation* p) { delete p; }

hilb_status hilb_presentation_json(const hilb_presentation* p, char** out) {
  if (auto st = require(p && out, "null argument")) return st;
  return guard([&] { *out = dup_string(hilb::presentation_to_json(p->value)); });
}

hilb_status hilb_presentation_parse_json(const char* text,
                                         hilb_presentation** out) {
  if (auto st = require(text && out, "null argument")) return st;
  return guard([&] {
    *out = new hilb_presentation{hilb::presentation_from_json(text)};
  });
}

hilb_status hilb_presentation_grid(const hilb_presentation* p, char** out) {
  if (auto st = require(p && out, "null argument")) return st;
  return guard([&] { *out = dup_string(hilb::render_grid(p->value)); });
}

hilb_status hilb_presentation_verify(const hilb_presentation* p,
                                     const hilb_series* s, int* match) {
  if (auto st = require(p && s && match, "null argument")) return st;
  return guard([&] {
    *match =
        hilb::reconstruct(p->value) == hilb::canonicalize(s->value) ? 1 : 0;
  });
}

hilb_status hilb_representation_from_presentation(const hilb_presentation* p,
                                                  hilb_representation** out) {
  if (auto st = require(p && out, "null argument")) return st;
  return guard([&] {
    *out =
        new hilb_representation{hilb::to_positive_representation(p->value)};
  });
}

void hilb_representation_free(hilb_representation* r) { delete r; }

hilb_status hilb_representation_json(const hilb_representation* r,
                                     char** out) {
  if (auto st = require(r && out, "null argument")) return st;
  return guard(
      [&] { *out = dup_string(hilb::representation_to_json(r->value)); });
}

hilb_status hilb_representation_parse_json(const char* text,
                                           hilb_representation** out) {
  if (auto st = require(text && out, "null argument")) return st;
  return guard([&] {
    *out = new hilb_representation{hilb::representation_from_json(text)};
  });
}

hilb_status hilb_representation_verify(const hilb_representation* r,
                                       const hilb_series* s, int* match) {
  if (auto st = require(r && s && match, "null argument")) return st;
  return guard([&] {
    *match = hilb::verify_representation(r->value, s->value) ? 1 : 0;
  });
}

hilb_status hilb_batch_json(const char* path, int run_invariants, char** out) {
  if (auto st = require(path && out, "null argument")) return st;
  return guard([&] {
    std::string result;
    for (const auto& entry : hilb::read_batch(path)) {
      nlohmann::json j;
      j["line"] = entry.line;
      if (!entry.ok) {
        j["error"] = entry.error;
      } else if (run_invariants) {
        j = nlohmann::json::parse(
            hilb::report_to_json(hilb::invariant_report(entry.series)));
        j["line"] = entry.line;
      } else {
        j["numerator"] = entry.series.numerator.to_string();
        j["dim"] = entry.series.dim;
      }
      result += j.dump();
      result += '\n';
    }
    *out = dup_string(result);
  });
}

}  // extern "C"
