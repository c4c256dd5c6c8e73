#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tlcat/category.hpp"
#include "tlcat/group_model.hpp"

namespace tlcat {

// Machine-readable artifacts for the command-line surface. Every function is
// deterministic: the same inputs produce byte-identical text. JSON objects
// keep insertion order; CSV uses "key,value" rows except where a tabular
// layout is documented.
enum class ReportFormat { Json, Csv };

ReportFormat parse_report_format(std::string_view text);  // "json" | "csv"

struct Report {
  std::string text;    // complete artifact, newline-terminated
  bool passed = true;  // verdict for checking commands, true for listings
};

// Cell listing in canonical order. Guard: cell size capped by max_points.
Report report_enumerate(CategoryId id, const Word& upper, const Word& lower,
                        unsigned max_points, ReportFormat format);

// Closure of the category's presentation generators (or an explicit override,
// used as the negative control) against the predicate cells, cellwise.
Report report_closure_check(CategoryId id, unsigned max_points, unsigned slack,
                            ReportFormat format,
                            const std::vector<Diagram>* generators_override =
                                nullptr,
                            ClosureProgress progress = {});

// Complexification/decomplexification round trip for the given category, plus
// the h/k directional verdicts when the category is h or k.
Report report_roundtrip(CategoryId id, unsigned max_points, unsigned slack,
                        ReportFormat format, ClosureProgress progress = {});

// Fixed-cell counts (CSV layout: header "k,count", one row per k <= max_k).
Report report_moments(CategoryId id, std::size_t max_k, ReportFormat format);

Report report_level(CategoryId id, unsigned cap, ReportFormat format);

// Gram-matrix rank of the cell at dimension n.
Report report_gram(CategoryId id, const Word& upper, const Word& lower,
                   unsigned n, ReportFormat format);

Report report_group_check(const FiniteGroup& g, std::string_view group_name,
                          unsigned radius, ReportFormat format);

}  // namespace tlcat
