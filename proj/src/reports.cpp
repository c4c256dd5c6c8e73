#include "tlcat/reports.hpp"

#include <json.hpp>

#include "tlcat/errors.hpp"
#include "tlcat/functors.hpp"
#include "tlcat/linear.hpp"

namespace tlcat {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_escape(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

void kv(std::string& csv, std::string_view key, const std::string& value) {
  csv.append(key);
  csv.push_back(',');
  csv.append(csv_escape(value));
  csv.push_back('\n');
}

void kv(std::string& csv, std::string_view key, std::size_t value) {
  kv(csv, key, std::to_string(value));
}

void kv(std::string& csv, std::string_view key, bool value) {
  kv(csv, key, std::string(value ? "true" : "false"));
}

std::string cat(CategoryId id) { return std::string(id_string(id)); }

Json mismatch_json(const CellMismatch& mm, std::string_view left_name,
                   std::string_view right_name) {
  Json w;
  w["upper"] = mm.upper.str();
  w["lower"] = mm.lower.str();
  Json a = Json::array(), b = Json::array();
  for (const Diagram& d : mm.only_left) a.push_back(to_text(d));
  for (const Diagram& d : mm.only_right) b.push_back(to_text(d));
  w[std::string("only_") + std::string(left_name)] = std::move(a);
  w[std::string("only_") + std::string(right_name)] = std::move(b);
  return w;
}

void mismatch_csv(std::string& csv, const CellMismatch& mm,
                  std::string_view left_name, std::string_view right_name) {
  kv(csv, "witness_upper", mm.upper.str());
  kv(csv, "witness_lower", mm.lower.str());
  kv(csv, std::string("witness_only_") + std::string(left_name),
     std::to_string(mm.only_left.size()));
  kv(csv, std::string("witness_only_") + std::string(right_name),
     std::to_string(mm.only_right.size()));
}

CategoryId partner_of(CategoryId id) {
  switch (id) {
    case CategoryId::O: return CategoryId::U;
    case CategoryId::H: return CategoryId::K;
    case CategoryId::S: return CategoryId::P;
    case CategoryId::SPrime: return CategoryId::P;
    case CategoryId::U: return CategoryId::O;
    case CategoryId::K: return CategoryId::H;
    case CategoryId::P: return CategoryId::SPrime;
  }
  throw InvalidArgument("unknown category id");
}

}  // namespace

ReportFormat parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  throw InvalidArgument("unknown report format: " + std::string(text) +
                        " (expected json or csv)");
}

Report report_enumerate(CategoryId id, const Word& upper, const Word& lower,
                        unsigned max_points, ReportFormat format) {
  if (2 * (upper.size() + lower.size()) > max_points)
    throw CapExceeded("enumerate: cell has " +
                      std::to_string(2 * (upper.size() + lower.size())) +
                      " points, cap is " + std::to_string(max_points));
  const std::vector<Diagram> cell = predicate_cell(id, upper, lower);

  Report rep;
  if (format == ReportFormat::Json) {
    Json j;
    j["command"] = "enumerate";
    j["category"] = cat(id);
    j["upper"] = upper.str();
    j["lower"] = lower.str();
    j["count"] = cell.size();
    Json list = Json::array();
    for (const Diagram& d : cell) list.push_back(to_text(d));
    j["diagrams"] = std::move(list);
    rep.text = dump(j);
  } else {
    std::string csv = "index,diagram\n";
    for (std::size_t i = 0; i < cell.size(); ++i)
      kv(csv, std::to_string(i), to_text(cell[i]));
    rep.text = csv;
  }
  return rep;
}

Report report_closure_check(CategoryId id, unsigned max_points, unsigned slack,
                            ReportFormat format,
                            const std::vector<Diagram>* generators_override,
                            ClosureProgress progress) {
  const std::vector<Diagram> gens =
      generators_override ? *generators_override : standard_generators(id);
  const CategorySpec generated =
      closure(gens, max_points, slack, std::move(progress));
  const CategorySpec named = CategorySpec::named(id);
  const auto mm = first_cell_mismatch(generated, named, max_points);

  Report rep;
  rep.passed = !mm.has_value();
  if (format == ReportFormat::Json) {
    Json j;
    j["command"] = "closure-check";
    j["category"] = cat(id);
    j["max_points"] = max_points;
    j["slack"] = slack;
    j["generators"] = gens.size();
    j["equal"] = rep.passed;
    j["witness"] =
        mm ? mismatch_json(*mm, "generated", "predicate") : Json(nullptr);
    rep.text = dump(j);
  } else {
    std::string csv = "key,value\n";
    kv(csv, "command", std::string("closure-check"));
    kv(csv, "category", cat(id));
    kv(csv, "max_points", static_cast<std::size_t>(max_points));
    kv(csv, "slack", static_cast<std::size_t>(slack));
    kv(csv, "generators", gens.size());
    kv(csv, "equal", rep.passed);
    if (mm) mismatch_csv(csv, *mm, "generated", "predicate");
    rep.text = csv;
  }
  return rep;
}

Report report_roundtrip(CategoryId id, unsigned max_points, unsigned slack,
                        ReportFormat format, ClosureProgress progress) {
  const CategoryId partner = partner_of(id);
  Json j;
  j["command"] = "roundtrip";
  j["category"] = cat(id);
  j["max_points"] = max_points;
  j["slack"] = slack;
  bool passed = true;

  if (is_orthogonal_id(id)) {
    const CategorySpec lifted =
        complexify(CategorySpec::named(id), max_points, slack, progress);
    const bool fwd =
        !first_cell_mismatch(lifted, CategorySpec::named(partner), max_points)
             .has_value();
    const CategoryId back_target =
        id == CategoryId::S ? CategoryId::SPrime : id;
    const CategorySpec back = decomplexify(lifted, max_points);
    const bool bwd = !first_cell_mismatch(back, CategorySpec::named(back_target),
                                          max_points)
                          .has_value();
    j["complexify_target"] = cat(partner);
    j["complexify_equal"] = fwd;
    j["return_cell_family"] = cat(back_target);
    j["return_equal"] = bwd;
    passed = fwd && bwd;
  } else {
    const CategorySpec dropped =
        decomplexify(CategorySpec::named(id), max_points);
    const bool down =
        !first_cell_mismatch(dropped, CategorySpec::named(partner), max_points)
             .has_value();
    const CategorySpec lifted =
        complexify(dropped, max_points, slack, progress);
    const bool up =
        !first_cell_mismatch(lifted, CategorySpec::named(id), max_points)
             .has_value();
    j["decomplexify_target"] = cat(partner);
    j["decomplexify_equal"] = down;
    j["return_equal"] = up;
    passed = down && up;
  }

  if (id == CategoryId::H || id == CategoryId::K) {
    // the mixed pair: which unitary family the hyperoctahedral one lifts to
    const CategorySpec lifted_h = complexify(
        CategorySpec::named(CategoryId::H), max_points, slack, progress);
    const bool h_to_k =
        !first_cell_mismatch(lifted_h, CategorySpec::named(CategoryId::K),
                             max_points)
             .has_value();
    const CategorySpec dropped_k =
        decomplexify(CategorySpec::named(CategoryId::K), max_points);
    const bool k_to_h =
        !first_cell_mismatch(dropped_k, CategorySpec::named(CategoryId::H),
                             max_points)
             .has_value();
    Json dir;
    dir["complexify_h_equals_k"] = h_to_k;
    dir["decomplexify_k_equals_h"] = k_to_h;
    j["mixed_pair_direction"] = std::move(dir);
    passed = passed && h_to_k && k_to_h;
  }

  Report rep;
  rep.passed = passed;
  if (format == ReportFormat::Json) {
    rep.text = dump(j);
  } else {
    std::string csv = "key,value\n";
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        for (const auto& [k2, v2] : value.items())
          kv(csv, key + "." + k2, v2.dump());
      } else {
        kv(csv, key, value.is_string() ? value.get<std::string>()
                                       : value.dump());
      }
    }
    rep.text = csv;
  }
  return rep;
}

Report report_moments(CategoryId id, std::size_t max_k, ReportFormat format) {
  const std::vector<std::size_t> counts =
      moments(CategorySpec::named(id), max_k);

  Report rep;
  if (format == ReportFormat::Json) {
    Json j;
    j["command"] = "moments";
    j["category"] = cat(id);
    j["max_k"] = max_k;
    j["moments"] = counts;
    rep.text = dump(j);
  } else {
    std::string csv = "k,count\n";
    for (std::size_t k = 0; k < counts.size(); ++k)
      kv(csv, std::to_string(k), counts[k]);
    rep.text = csv;
  }
  return rep;
}

Report report_level(CategoryId id, unsigned cap, ReportFormat format) {
  const LevelResult r = level(CategorySpec::named(id), cap);

  Report rep;
  if (format == ReportFormat::Json) {
    Json j;
    j["command"] = "level";
    j["category"] = cat(id);
    j["cap"] = cap;
    j["level"] = r.value ? Json(*r.value) : Json(nullptr);
    j["above_cap"] = r.above_cap();
    j["scanned_max_length"] = r.scanned_max_length;
    rep.text = dump(j);
  } else {
    std::string csv = "key,value\n";
    kv(csv, "command", std::string("level"));
    kv(csv, "category", cat(id));
    kv(csv, "cap", static_cast<std::size_t>(cap));
    kv(csv, "level",
       r.value ? std::to_string(*r.value) : std::string("above-cap"));
    kv(csv, "scanned_max_length", r.scanned_max_length);
    rep.text = csv;
  }
  return rep;
}

Report report_gram(CategoryId id, const Word& upper, const Word& lower,
                   unsigned n, ReportFormat format) {
  if (n < 1) throw InvalidArgument("gram: n must be at least 1");
  if (2 * (upper.size() + lower.size()) > dense_guard_points)
    throw CapExceeded("gram: cell has " +
                      std::to_string(2 * (upper.size() + lower.size())) +
                      " points, cap is " + std::to_string(dense_guard_points));
  const std::vector<Diagram> cell = predicate_cell(id, upper, lower);
  const GramMatrix g = gram(cell, n);
  const std::size_t rank = rank_exact(g.entries);

  Report rep;
  if (format == ReportFormat::Json) {
    Json j;
    j["command"] = "gram";
    j["category"] = cat(id);
    j["upper"] = upper.str();
    j["lower"] = lower.str();
    j["n"] = n;
    j["diagrams"] = cell.size();
    j["rank"] = rank;
    rep.text = dump(j);
  } else {
    std::string csv = "key,value\n";
    kv(csv, "command", std::string("gram"));
    kv(csv, "category", cat(id));
    kv(csv, "upper", upper.str());
    kv(csv, "lower", lower.str());
    kv(csv, "n", static_cast<std::size_t>(n));
    kv(csv, "diagrams", cell.size());
    kv(csv, "rank", rank);
    rep.text = csv;
  }
  return rep;
}

Report report_group_check(const FiniteGroup& g, std::string_view group_name,
                          unsigned radius, ReportFormat format) {
  const EmbeddingReport er = verify_free_product_embedding(g, radius);

  Report rep;
  rep.passed = er.all_passed();
  if (format == ReportFormat::Json) {
    Json j;
    j["command"] = "group-check";
    j["group"] = std::string(group_name);
    j["order"] = g.size();
    j["radius"] = radius;
    j["length_convention"] =
        "every generator and every inverse counts as length 1";
    j["lambda"] = er.lambda_names;
    j["ball_source"] = er.ball_source;
    j["ball_image"] = er.ball_image;
    j["ball_subgroup"] = er.ball_subgroup;
    j["injective"] = er.injective;
    j["image_in_subgroup"] = er.image_in_subgroup;
    j["subgroup_covered"] = er.subgroup_covered;
    j["passed"] = rep.passed;
    j["witness"] = er.witness;
    rep.text = dump(j);
  } else {
    std::string csv = "key,value\n";
    kv(csv, "command", std::string("group-check"));
    kv(csv, "group", std::string(group_name));
    kv(csv, "order", g.size());
    kv(csv, "radius", static_cast<std::size_t>(radius));
    for (std::size_t i = 0; i < er.lambda_names.size(); ++i)
      kv(csv, "lambda_" + std::to_string(i), er.lambda_names[i]);
    for (std::size_t r = 0; r < er.ball_source.size(); ++r) {
      kv(csv, "ball_source_" + std::to_string(r), er.ball_source[r]);
      kv(csv, "ball_image_" + std::to_string(r), er.ball_image[r]);
      kv(csv, "ball_subgroup_" + std::to_string(r), er.ball_subgroup[r]);
    }
    kv(csv, "injective", er.injective);
    kv(csv, "image_in_subgroup", er.image_in_subgroup);
    kv(csv, "subgroup_covered", er.subgroup_covered);
    kv(csv, "passed", rep.passed);
    kv(csv, "witness", er.witness);
    rep.text = csv;
  }
  return rep;
}

}  // namespace tlcat
