// hilb: Hilbert series invariants, boundary presentations, and positive
// representations from the command line. Talks to the core library
// exclusively through the C interface in hilb.h.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilb.h"

namespace {

using nlohmann::json;

int exit_code_for(hilb_status st) {
  switch (st) {
    case HILB_OK:
      return 0;
    case HILB_ERR_NOT_NONNEGATIVE:
      return 2;
    case HILB_ERR_NO_PRESENTATION:
    case HILB_ERR_INVALID_MOVE:
      return 3;
    case HILB_ERR_BUDGET_EXCEEDED:
      return 4;
    default:
      return 1;  // syntax, bad flags, precondition, io
  }
}

// Exception used to unwind to main with the proper exit code.
struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void fail(hilb_status st) {
  throw CliError{exit_code_for(st), hilb_last_error()};
}

void check(hilb_status st) {
  if (st != HILB_OK) fail(st);
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  hilb_string_free(s);
  return out;
}

using SeriesPtr = std::unique_ptr<hilb_series, decltype(&hilb_series_free)>;
using PresPtr =
    std::unique_ptr<hilb_presentation, decltype(&hilb_presentation_free)>;
using RepPtr =
    std::unique_ptr<hilb_representation, decltype(&hilb_representation_free)>;

SeriesPtr make_series(std::string num, unsigned dim) {
  if (num.empty()) {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    num = buf.str();
  }
  hilb_series* s = nullptr;
  check(hilb_series_parse(num.c_str(), dim, &s));
  return {s, hilb_series_free};
}

// Render one summand a*t^j/(1-t)^i in the display style used throughout.
std::string term_text(const json& a, unsigned j, unsigned i) {
  std::string coeff = a.is_string() ? a.get<std::string>() : a.dump();
  std::string out;
  if (j == 0) {
    out = coeff;
  } else {
    if (coeff != "1") out = coeff + "*";
    out += j == 1 ? "t" : "t^" + std::to_string(j);
  }
  if (i == 1) out += "/(1-t)";
  else if (i > 1) out += "/(1-t)^" + std::to_string(i);
  return out;
}

// Terms of a presentation as (i desc, j asc) triples, zeros skipped.
json presentation_terms(const json& p) {
  unsigned d = p["d"], n = p["n"], k = p["k"];
  json terms = json::array();
  auto nonzero = [](const json& v) {
    return v.is_string() ? v.get<std::string>() != "0" : v.get<long long>() != 0;
  };
  for (unsigned j = 0; j < p["g"].size(); ++j)
    if (nonzero(p["g"][j]))
      terms.push_back({{"i", d - j}, {"j", k}, {"a", p["g"][j]}});
  std::sort(terms.begin(), terms.end(), [](const json& x, const json& y) {
    return x["i"].get<unsigned>() > y["i"].get<unsigned>();
  });
  json row = json::array();
  for (unsigned j = 0; j < k; ++j)
    if (nonzero(p["f"][j])) row.push_back({{"i", n}, {"j", j}, {"a", p["f"][j]}});
  if (nonzero(p["c"])) row.push_back({{"i", n}, {"j", k}, {"a", p["c"]}});
  for (auto& t : row) terms.push_back(std::move(t));
  return terms;
}

std::string terms_text(const json& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    out += term_text(t["a"], t["j"].get<unsigned>(), t["i"].get<unsigned>());
  }
  return out;
}

std::string report_text(const json& r) {
  std::ostringstream os;
  os << "numerator:     " << r["numerator"].get<std::string>() << "\n"
     << "dim:           " << r["dim"] << "\n"
     << "hdepth:        " << r["hdepth"] << "\n"
     << "hprojdim:      " << r["hprojdim"] << "\n"
     << "hreg:          " << r["hreg"] << "\n"
     << "delta_d_tilde: " << r["delta_d_tilde"] << "\n"
     << "deg_series:    "
     << (r["deg_series"].is_null() ? std::string("-") : r["deg_series"].dump())
     << "\n"
     << "width_k:       "
     << (r["width_k"].is_null() ? std::string("-") : r["width_k"].dump())
     << "\n";
  return os.str();
}

struct PresentSelection {
  int n = -1, k = -1;
  bool min_width = false, min_height = false;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--n", n, "row index of the presentation");
    cmd->add_option("--k", k, "column index of the presentation");
    cmd->add_flag("--min-width", min_width, "(0, Hreg) presentation");
    cmd->add_flag("--min-height", min_height, "(Hdepth, e) presentation");
  }

  PresPtr select(const hilb_series* s, bool allow_default) const {
    int picked = (n >= 0 || k >= 0) + min_width + min_height;
    hilb_presentation* p = nullptr;
    if (picked == 0 && allow_default) {
      check(hilb_presentation_min_width(s, &p));
      return {p, hilb_presentation_free};
    }
    if (picked != 1)
      throw CliError{1, "pick exactly one of --n/--k, --min-width, --min-height"};
    if (min_width) {
      check(hilb_presentation_min_width(s, &p));
    } else if (min_height) {
      check(hilb_presentation_min_height(s, &p));
    } else {
      if (n < 0 || k < 0) throw CliError{1, "--n and --k must be given together"};
      check(hilb_presentation_compute(s, static_cast<unsigned>(n),
                                      static_cast<unsigned>(k), &p));
    }
    return {p, hilb_presentation_free};
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert series invariants, presentations, and decompositions"};
  app.require_subcommand(1);

  std::string num, format = "text", ideal, input_path;
  std::string pres_json, rep_json;
  int dim = -1, nvars = -1;
  long budget_flag = -1;
  bool oracle = false, run_invariants = false;

  auto add_series_flags = [&](CLI::App* cmd, bool dim_required = true) {
    cmd->add_option("--num", num, "numerator polynomial (stdin when omitted)");
    auto* d = cmd->add_option("--dim", dim, "denominator exponent d");
    if (dim_required) d->required();
    cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* inv = app.add_subcommand("invariants", "hdepth, hprojdim, hreg and friends");
  add_series_flags(inv);
  inv->add_option("--budget", budget_flag, "search budget for the brute oracle");
  inv->add_flag("--oracle", oracle, "also run the slow reference computation")
      ->group("");  // hidden

  auto* pres = app.add_subcommand("present", "boundary presentation of the series");
  add_series_flags(pres);
  PresentSelection pres_sel;
  pres_sel.add_flags(pres);

  auto* grid = app.add_subcommand("grid", "ASCII grid of a boundary presentation");
  add_series_flags(grid);
  PresentSelection grid_sel;
  grid_sel.add_flags(grid);

  auto* dec = app.add_subcommand("decompose", "positive representation of the series");
  add_series_flags(dec);
  PresentSelection dec_sel;
  dec_sel.add_flags(dec);

  auto* ing = app.add_subcommand("ingest", "monomial ideals and batch files");
  ing->add_option("--ideal", ideal, "monomial generators, e.g. \"x1^2, x1*x2\"");
  ing->add_option("--nvars", nvars, "number of variables");
  ing->add_option("--input", input_path, "JSON-lines batch file");
  ing->add_flag("--run-invariants", run_invariants, "emit a report per line");
  ing->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* ver = app.add_subcommand("verify", "check a serialized artifact against a series");
  add_series_flags(ver);
  ver->add_option("--presentation", pres_json, "presentation JSON to check");
  ver->add_option("--representation", rep_json, "representation JSON to check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*inv) {
      SeriesPtr s = make_series(num, static_cast<unsigned>(dim));
      char* rep = nullptr;
      check(hilb_series_report_json(s.get(), &rep));
      json j = json::parse(take_string(rep));
      if (oracle) {
        unsigned budget = 0;
        if (budget_flag >= 0) {
          budget = static_cast<unsigned>(budget_flag);
        } else if (const char* env = std::getenv("HILB_BUDGET")) {
          budget = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
        } else {
          check(hilb_series_default_budget(s.get(), &budget));
        }
        char* os = nullptr;
        check(hilb_series_oracle_json(s.get(), budget, &os));
        json oj = json::parse(take_string(os));
        j.update(oj);
      }
      if (format == "json") std::cout << j.dump() << "\n";
      else std::cout << report_text(j);
      return 0;
    }
    if (*pres || *grid) {
      SeriesPtr s = make_series(num, static_cast<unsigned>(dim));
      const PresentSelection& sel = *pres ? pres_sel : grid_sel;
      PresPtr p = sel.select(s.get(), false);
      char* out = nullptr;
      if (*grid) {
        check(hilb_presentation_grid(p.get(), &out));
        std::cout << take_string(out);
      } else {
        check(hilb_presentation_json(p.get(), &out));
        std::string pj = take_string(out);
        if (format == "json") std::cout << pj << "\n";
        else std::cout << terms_text(presentation_terms(json::parse(pj))) << "\n";
      }
      return 0;
    }
    if (*dec) {
      SeriesPtr s = make_series(num, static_cast<unsigned>(dim));
      PresPtr p = dec_sel.select(s.get(), true);
      hilb_representation* r = nullptr;
      check(hilb_representation_from_presentation(p.get(), &r));
      RepPtr rep(r, hilb_representation_free);
      char* out = nullptr;
      check(hilb_representation_json(rep.get(), &out));
      std::string rj = take_string(out);
      if (format == "json") std::cout << rj << "\n";
      else std::cout << terms_text(json::parse(rj)["terms"]) << "\n";
      return 0;
    }
    if (*ing) {
      if (!input_path.empty()) {
        char* out = nullptr;
        check(hilb_batch_json(input_path.c_str(), run_invariants ? 1 : 0, &out));
        std::cout << take_string(out);
        return 0;
      }
      if (ideal.empty() || nvars < 0)
        throw CliError{1, "ingest needs --ideal with --nvars, or --input"};
      hilb_series* raw = nullptr;
      check(hilb_series_from_ideal(ideal.c_str(), static_cast<unsigned>(nvars), &raw));
      SeriesPtr s(raw, hilb_series_free);
      if (run_invariants) {
        char* rep = nullptr;
        check(hilb_series_report_json(s.get(), &rep));
        json j = json::parse(take_string(rep));
        if (format == "json") std::cout << j.dump() << "\n";
        else std::cout << report_text(j);
      } else {
        char* ntext = nullptr;
        unsigned d = 0;
        check(hilb_series_numerator(s.get(), &ntext));
        check(hilb_series_dim(s.get(), &d));
        std::string numerator = take_string(ntext);
        if (format == "json") {
          json j{{"numerator", numerator}, {"dim", d}};
          std::cout << j.dump() << "\n";
        } else {
          std::cout << "(" << numerator << ") / (1-t)^" << d << "\n";
        }
      }
      return 0;
    }
    if (*ver) {
      if (pres_json.empty() == rep_json.empty())
        throw CliError{1, "verify needs exactly one of --presentation, --representation"};
      SeriesPtr s = make_series(num, static_cast<unsigned>(dim));
      int match = 0;
      if (!pres_json.empty()) {
        hilb_presentation* p = nullptr;
        check(hilb_presentation_parse_json(pres_json.c_str(), &p));
        PresPtr pp(p, hilb_presentation_free);
        check(hilb_presentation_verify(pp.get(), s.get(), &match));
      } else {
        hilb_representation* r = nullptr;
        check(hilb_representation_parse_json(rep_json.c_str(), &r));
        RepPtr rr(r, hilb_representation_free);
        check(hilb_representation_verify(rr.get(), s.get(), &match));
      }
      std::cout << json{{"valid", match == 1}}.dump() << "\n";
      return match == 1 ? 0 : 1;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  }
  return 1;
}
