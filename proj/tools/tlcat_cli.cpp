// Command-line front end. Links only the shared C interface (tlcat.h); all
// library work happens behind it. Report text goes to --out or stdout and is
// byte-deterministic; progress lines go to stderr only.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tlcat.h"

namespace {

constexpr unsigned kDefaultMaxPoints = 12;
constexpr unsigned kDefaultSlack = 4;
constexpr unsigned kDefaultN = 2;
constexpr unsigned kDefaultRadius = 6;
constexpr unsigned kDefaultMomentsK = 8;
constexpr unsigned kDefaultLevelCap = 6;

void print_progress(unsigned round, unsigned long long frontier,
                    unsigned long long discovered, void*) {
  std::fprintf(stderr, "closure round %u: frontier %llu, discovered %llu\n",
               round, frontier, discovered);
}

// 0 = verdict passed, 1 = verdict failed, 2 = usage or guard error
int emit(tlc_status status, tlc_report* report, const std::string& out_path) {
  if (status != TLC_OK) {
    std::fprintf(stderr, "error (%s): %s\n", tlc_status_name(status),
                 tlc_last_error());
    return 2;
  }
  const int passed = tlc_report_passed(report);
  if (out_path.empty()) {
    std::fputs(tlc_report_text(report), stdout);
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
      tlc_report_free(report);
      return 2;
    }
    file << tlc_report_text(report);
  }
  tlc_report_free(report);
  return passed ? 0 : 1;
}

bool is_unitary_id(const std::string& id) {
  return id == "u" || id == "k" || id == "p";
}

std::string canonical_word(const std::string& id, unsigned k) {
  std::string w;
  for (unsigned i = 0; i < k; ++i)
    w.push_back(is_unitary_id(id) && i % 2 ? 'b' : 'a');
  return w;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"colored diagram-category toolkit"};
  app.require_subcommand(1);

  std::string category = "s", upper, lower, format = "json", out_path;
  std::string group;
  unsigned max_points = kDefaultMaxPoints, slack = kDefaultSlack;
  unsigned n = kDefaultN, radius = kDefaultRadius;
  unsigned k_moments = kDefaultMomentsK, k_level = kDefaultLevelCap;
  int k_gram = -1;

  auto add_common = [&](CLI::App* cmd, bool with_words) {
    cmd->add_option("--category", category,
                    "category id: o, h, s, s-prime, u, k, p");
    if (with_words) {
      cmd->add_option("--upper", upper, "upper word over {a,b}");
      cmd->add_option("--lower", lower, "lower word over {a,b}");
    }
    cmd->add_option("--format", format, "output format: json or csv");
    cmd->add_option("--out", out_path, "write the artifact to this file");
  };

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list the diagrams of one cell in canonical order");
  add_common(enumerate, true);
  enumerate->add_option("--max-points", max_points, "total point cap");

  CLI::App* closure = app.add_subcommand(
      "closure-check",
      "closure of the presentation generators vs the predicate cells");
  add_common(closure, false);
  closure->add_option("--max-points", max_points, "total point cap");
  closure->add_option("--slack", slack, "working headroom above the cap");

  CLI::App* roundtrip = app.add_subcommand(
      "roundtrip", "complexification round trip for one category");
  add_common(roundtrip, false);
  roundtrip->add_option("--max-points", max_points, "total point cap");
  roundtrip->add_option("--slack", slack, "working headroom above the cap");

  CLI::App* moments = app.add_subcommand(
      "moments", "fixed-cell counts for k up to the given bound");
  add_common(moments, false);
  moments->add_option("--k", k_moments, "largest k");

  CLI::App* level_cmd =
      app.add_subcommand("level", "smallest l with a nonempty odd cell");
  add_common(level_cmd, false);
  level_cmd->add_option("--k", k_level, "scan cap for l");

  CLI::App* gram = app.add_subcommand(
      "gram", "gram-matrix rank of one cell at dimension n");
  add_common(gram, true);
  gram->add_option("--n", n, "dimension parameter");
  gram->add_option(
      "--k", k_gram,
      "shorthand for the fixed cell: lower word of length k, empty upper");

  CLI::App* group_check = app.add_subcommand(
      "group-check", "free-product embedding check on metric balls");
  group_check->add_option("group", group,
                          "builtin name (z2, z4, z2xz2, s3) or a path to a "
                          "cayley-table json file")
      ->required();
  group_check->add_option("--radius", radius, "ball radius (at most 8)");
  group_check->add_option("--format", format, "output format: json or csv");
  group_check->add_option("--out", out_path, "write the artifact to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  tlc_report* report = nullptr;
  tlc_status status = TLC_ERR_INTERNAL;
  if (enumerate->parsed()) {
    status = tlc_enumerate(category.c_str(), upper.c_str(), lower.c_str(),
                           max_points, format.c_str(), &report);
  } else if (closure->parsed()) {
    status = tlc_closure_check(category.c_str(), max_points, slack,
                               format.c_str(), print_progress, nullptr,
                               &report);
  } else if (roundtrip->parsed()) {
    status = tlc_roundtrip(category.c_str(), max_points, slack, format.c_str(),
                           print_progress, nullptr, &report);
  } else if (moments->parsed()) {
    status = tlc_moments(category.c_str(), k_moments, format.c_str(), &report);
  } else if (level_cmd->parsed()) {
    status = tlc_level(category.c_str(), k_level, format.c_str(), &report);
  } else if (gram->parsed()) {
    if (k_gram >= 0 && upper.empty() && lower.empty())
      lower = canonical_word(category, static_cast<unsigned>(k_gram));
    status = tlc_gram(category.c_str(), upper.c_str(), lower.c_str(), n,
                      format.c_str(), &report);
  } else if (group_check->parsed()) {
    const bool builtin = group == "z2" || group == "z4" || group == "z2xz2" ||
                         group == "s3";
    std::string cayley;
    if (!builtin) {
      std::ifstream file(group, std::ios::binary);
      if (!file) {
        std::fprintf(stderr, "error: cannot read %s\n", group.c_str());
        return 2;
      }
      std::ostringstream buf;
      buf << file.rdbuf();
      cayley = buf.str();
    }
    status = tlc_group_check(builtin ? group.c_str() : nullptr,
                             builtin ? nullptr : cayley.c_str(), group.c_str(),
                             radius, format.c_str(), &report);
  } else {
    return 2;
  }
  return emit(status, report, out_path);
}
