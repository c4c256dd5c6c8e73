#include "tlcat/functors.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>

#include "tlcat/errors.hpp"

namespace tlcat {

namespace {

std::string diagram_text(const Diagram& d) { return to_text(d); }

std::string cell_text(const Word& u, const Word& l) {
  std::string s = "cell (";
  s += u.size() ? u.str() : "-";
  s += ", ";
  s += l.size() ? l.str() : "-";
  s += ")";
  return s;
}

// effective point cap: the requested one, tightened by the spec's own cap
unsigned effective_cap(const CategorySpec& spec, unsigned cap) {
  return spec.max_points() ? std::min(cap, spec.max_points()) : cap;
}

// all words of the row alphabet up to `letters` letters, shortest first,
// lexicographic within a length; all-a only for orthogonal specs
std::vector<Word> row_words(bool orthogonal, std::size_t letters) {
  std::vector<Word> out;
  for (std::size_t k = 0; k <= letters; ++k) {
    if (orthogonal) {
      out.push_back(Word::all_a(k));
      continue;
    }
    for (std::size_t bits = 0; bits < (std::size_t{1} << k); ++bits) {
      std::string s(k, 'a');
      for (std::size_t i = 0; i < k; ++i)
        if (bits >> i & 1) s[i] = 'b';
      out.push_back(Word(std::move(s)));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Word& x, const Word& y) {
    return x.size() != y.size() ? x.size() < y.size() : x.str() < y.str();
  });
  return out;
}

// the all-a nested rainbow on 2k legs, the duality element of the
// orthogonal world
Diagram rainbow_all_a(std::size_t k) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < 2 * k; ++i)
    pairs.push_back({static_cast<int>(i), static_cast<int>(4 * k - 1 - i)});
  return Diagram::from_pairs(Word(), Word::all_a(2 * k), pairs);
}

}  // namespace

CategorySpec complexify(const CategorySpec& spec, unsigned max_points,
                        unsigned slack, const ClosureProgress& progress) {
  if (!spec.orthogonal())
    throw InvalidArgument("complexify expects an orthogonal spec");
  const unsigned ecap = effective_cap(spec, max_points);
  std::vector<Diagram> generators;
  for (std::size_t k = 0; 2 * k <= ecap; ++k) {
    for (std::size_t l = 0; 2 * (k + l) <= ecap; ++l) {
      if ((k + l) % 2 != 0) continue;  // only even length differences embed
      for (const Diagram& d : spec.cell(Word::all_a(k), Word::all_a(l))) {
        const bool needs_full_coloring =
            d.is_doubled() || d.is_xyyx_colorable();
        Diagram embedded = d.reworded(alt_a(k), alt_a(l));
        if (!embedded.is_half_colored())
          throw Internal("embedded generator is not half-colored");
        if (needs_full_coloring && !embedded.is_colored())
          throw Internal("doubled/patterned generator lost its coloring");
        generators.push_back(std::move(embedded));
      }
    }
  }
  return closure(generators, max_points, slack, progress);
}

CategorySpec decomplexify(const CategorySpec& spec, unsigned max_points) {
  if (spec.orthogonal())
    throw InvalidArgument("decomplexify expects a unitary spec");
  return CategorySpec::decomplexified(spec, max_points);
}

CategorySpec double_category(const CategorySpec& spec) {
  if (!spec.orthogonal())
    throw InvalidArgument("double_category expects an orthogonal spec");
  return CategorySpec::parity_masked(spec);
}

LevelResult level(const CategorySpec& spec, std::size_t cap) {
  if (!spec.orthogonal())
    throw InvalidArgument("level expects an orthogonal spec");
  LevelResult res;
  for (std::size_t l = 0; l <= cap; ++l) {
    const std::size_t length = 2 * l + 1;
    if (spec.max_points() && 2 * length > spec.max_points()) break;
    res.scanned_max_length = length;
    if (!spec.cell(Word(), Word::all_a(length)).empty()) {
      res.value = l;
      return res;
    }
  }
  return res;
}

std::vector<std::size_t> moments(const CategorySpec& spec, std::size_t max_k) {
  std::vector<std::size_t> out;
  out.reserve(max_k + 1);
  for (std::size_t k = 0; k <= max_k; ++k) {
    const Word w = spec.orthogonal() ? Word::all_a(k) : alt_a(k);
    out.push_back(spec.cell(Word(), w).size());
  }
  return out;
}

namespace {

void check_identities(const CategorySpec& spec, unsigned ecap,
                      AxiomReport& report) {
  AxiomCheck c{"identity diagrams present", true, true, {}};
  for (const Word& w : row_words(spec.orthogonal(), ecap / 4)) {
    if (4 * w.size() > ecap || w.size() == 0) continue;
    if (!spec.member(identity(w))) {
      c.passed = false;
      c.witness = diagram_text(identity(w));
      break;
    }
  }
  report.checks.push_back(std::move(c));
}

void check_duality(const CategorySpec& spec, unsigned ecap,
                   AxiomReport& report) {
  AxiomCheck c{"duality caps present", true, true, {}};
  if (spec.orthogonal()) {
    for (std::size_t k = 1; 4 * k <= ecap; ++k) {
      if (!spec.member(rainbow_all_a(k))) {
        c.passed = false;
        c.witness = diagram_text(rainbow_all_a(k));
        break;
      }
    }
  } else {
    for (const Word& w : row_words(false, ecap / 4)) {
      if (w.size() == 0 || 4 * w.size() > ecap) continue;
      if (!spec.member(duality_cap(w))) {
        c.passed = false;
        c.witness = diagram_text(duality_cap(w));
        break;
      }
    }
  }
  report.checks.push_back(std::move(c));
}

void check_involution(const CategorySpec& spec, unsigned ecap,
                      AxiomReport& report) {
  AxiomCheck c{"closed under involution", true, true, {}};
  const auto words = row_words(spec.orthogonal(), ecap / 2);
  for (const Word& u : words) {
    for (const Word& l : words) {
      if (2 * (u.size() + l.size()) > ecap) continue;
      for (const Diagram& d : spec.cell(u, l)) {
        if (!spec.member(involute(d))) {
          c.passed = false;
          c.witness = diagram_text(d);
          break;
        }
      }
      if (!c.passed) break;
    }
    if (!c.passed) break;
  }
  report.checks.push_back(std::move(c));
}

void check_composition(const CategorySpec& spec, unsigned ecap,
                       AxiomReport& report) {
  AxiomCheck c{"closed under composition", true, true, {}};
  const auto words = row_words(spec.orthogonal(), ecap / 2);
  for (const Word& u : words) {
    for (const Word& m : words) {
      if (2 * (u.size() + m.size()) > ecap) continue;
      const auto upper_cell = spec.cell(u, m);
      if (upper_cell.empty()) continue;
      for (const Word& l : words) {
        if (2 * (m.size() + l.size()) > ecap ||
            2 * (u.size() + l.size()) > ecap)
          continue;
        const auto lower_cell = spec.cell(m, l);
        for (const Diagram& d : upper_cell) {
          for (const Diagram& e : lower_cell) {
            const Diagram composed = compose(d, e).diagram;
            if (!spec.member(composed)) {
              c.passed = false;
              c.witness = diagram_text(d) + " over " + diagram_text(e);
              break;
            }
          }
          if (!c.passed) break;
        }
        if (!c.passed) break;
      }
      if (!c.passed) break;
    }
    if (!c.passed) break;
  }
  report.checks.push_back(std::move(c));
}

void check_tensor(const CategorySpec& spec, unsigned ecap,
                  AxiomReport& report) {
  AxiomCheck c{"closed under tensor", true, true, {}};
  const auto words = row_words(spec.orthogonal(), ecap / 2);
  for (const Word& u1 : words) {
    for (const Word& l1 : words) {
      if (2 * (u1.size() + l1.size()) > ecap) continue;
      const auto left = spec.cell(u1, l1);
      if (left.empty()) continue;
      for (const Word& u2 : words) {
        for (const Word& l2 : words) {
          const std::size_t total =
              2 * (u1.size() + l1.size() + u2.size() + l2.size());
          if (total > ecap) continue;
          const auto right = spec.cell(u2, l2);
          for (const Diagram& d : left) {
            for (const Diagram& e : right) {
              if (!spec.member(tensor(d, e))) {
                c.passed = false;
                c.witness = diagram_text(d) + " beside " + diagram_text(e);
                break;
              }
            }
            if (!c.passed) break;
          }
          if (!c.passed) break;
        }
        if (!c.passed) break;
      }
      if (!c.passed) break;
    }
    if (!c.passed) break;
  }
  report.checks.push_back(std::move(c));
}

// the three alternating-word tensor routes on the unitary parent, plus the
// conjugated-cell equality they rely on
void check_routed_tensor(const CategorySpec& parent, unsigned ecap,
                         AxiomReport& report) {
  AxiomCheck words_ok{"alternating word algebra", true, true, {}};
  AxiomCheck conj_ok{"conjugation swaps the alternating cells", true, true, {}};
  AxiomCheck even_ok{"tensor route, even left length", true, true, {}};
  AxiomCheck odd_ok{"tensor route, odd left length", true, true, {}};
  AxiomCheck oddodd_ok{"tensor route, both lengths odd", true, true, {}};

  const std::size_t max_letters = ecap / 2;
  for (std::size_t k = 0; k <= max_letters; ++k) {
    for (std::size_t p = 0; k + p <= max_letters && words_ok.passed; ++p) {
      if (k % 2 == 0) {
        if (alt_a(k).str() + alt_a(p).str() != alt_a(k + p).str()) {
          words_ok.passed = false;
          words_ok.witness = "even " + std::to_string(k) + "+" +
                             std::to_string(p);
        }
      } else {
        if (alt_b(k).str() + alt_a(p).str() != alt_b(k + p).str()) {
          words_ok.passed = false;
          words_ok.witness = "odd " + std::to_string(k) + "+" +
                             std::to_string(p);
        }
        if (p % 2 == 1 &&
            alt_a(k).str() + alt_b(p).str() != alt_a(k + p).str()) {
          words_ok.passed = false;
          words_ok.witness = "odd/odd " + std::to_string(k) + "+" +
                             std::to_string(p);
        }
      }
    }
  }

  for (std::size_t k = 0; 2 * k <= ecap && conj_ok.passed; ++k) {
    for (std::size_t l = 0; 2 * (k + l) <= ecap; ++l) {
      if ((k + l) % 2 != 0) continue;
      auto gamma = parent.cell(alt_a(k), alt_a(l));
      std::vector<Diagram> conj;
      conj.reserve(gamma.size());
      for (const Diagram& d : gamma) conj.push_back(conjugate(d));
      std::sort(conj.begin(), conj.end());
      if (conj != parent.cell(alt_b(k), alt_b(l))) {
        conj_ok.passed = false;
        conj_ok.witness = cell_text(alt_a(k), alt_a(l));
        break;
      }
    }
  }

  const auto run_route = [&](AxiomCheck& check, bool conj_left,
                             bool conj_right, auto parity_wanted) {
    for (std::size_t k = 0; 2 * k <= ecap && check.passed; ++k) {
      for (std::size_t l = 0; 2 * (k + l) <= ecap && check.passed; ++l) {
        if ((k + l) % 2 != 0 || !parity_wanted(k, 0)) continue;
        const auto left = parent.cell(alt_a(k), alt_a(l));
        if (left.empty()) continue;
        for (std::size_t p = 0; 2 * (k + l + p) <= ecap && check.passed; ++p) {
          for (std::size_t q = 0; 2 * (k + l + p + q) <= ecap; ++q) {
            if ((p + q) % 2 != 0 || !parity_wanted(k, p)) continue;
            const auto right = parent.cell(alt_a(p), alt_a(q));
            for (const Diagram& d : left) {
              for (const Diagram& e : right) {
                const Diagram t = tensor(conj_left ? conjugate(d) : d,
                                         conj_right ? conjugate(e) : e);
                if (!parent.member(t)) {
                  check.passed = false;
                  check.witness = diagram_text(d) + " beside " +
                                  diagram_text(e);
                  break;
                }
              }
              if (!check.passed) break;
            }
            if (!check.passed) break;
          }
        }
      }
    }
  };

  run_route(even_ok, false, false,
            [](std::size_t k, std::size_t) { return k % 2 == 0; });
  run_route(odd_ok, true, false,
            [](std::size_t k, std::size_t) { return k % 2 == 1; });
  run_route(oddodd_ok, false, true, [](std::size_t k, std::size_t p) {
    return k % 2 == 1 && (p == 0 || p % 2 == 1);
  });

  report.checks.push_back(std::move(words_ok));
  report.checks.push_back(std::move(conj_ok));
  report.checks.push_back(std::move(even_ok));
  report.checks.push_back(std::move(odd_ok));
  report.checks.push_back(std::move(oddodd_ok));
}

}  // namespace

AxiomReport verify_category_axioms(const CategorySpec& spec, unsigned cap) {
  AxiomReport report;
  const unsigned ecap = effective_cap(spec, cap);
  check_identities(spec, ecap, report);
  check_duality(spec, ecap, report);
  check_involution(spec, ecap, report);
  check_composition(spec, ecap, report);
  check_tensor(spec, ecap, report);
  if (const CategorySpec* parent = spec.unitary_parent()) {
    check_routed_tensor(*parent, ecap, report);
  } else {
    report.checks.push_back(
        {"alternating tensor routes (needs a unitary parent)", false, false,
         {}});
  }
  return report;
}

EquivalenceReport infinite_level_equivalences(const CategorySpec& spec,
                                              unsigned cap) {
  if (!spec.orthogonal())
    throw InvalidArgument("infinite_level_equivalences expects an orthogonal spec");
  EquivalenceReport rep;
  const unsigned ecap = effective_cap(spec, cap);

  rep.odd_cells_empty = true;
  for (std::size_t m = 1; 2 * m <= ecap; m += 2) {
    const auto cell = spec.cell(Word(), Word::all_a(m));
    if (!cell.empty()) {
      rep.odd_cells_empty = false;
      rep.witness_odd = diagram_text(cell.front());
      break;
    }
  }

  const CategorySpec doubled = double_category(spec);
  if (auto mismatch = first_cell_mismatch(spec, doubled, ecap)) {
    rep.doubling_fixed = false;
    const Diagram& w = mismatch->only_left.empty() ? mismatch->only_right.front()
                                                   : mismatch->only_left.front();
    rep.witness_doubling = diagram_text(w);
  } else {
    rep.doubling_fixed = true;
  }

  rep.within_parity = true;
  for (std::size_t k = 0; 2 * k <= ecap && rep.within_parity; ++k) {
    for (std::size_t l = 0; 2 * (k + l) <= ecap; ++l) {
      if ((k + l) % 2 == 0) continue;  // even difference = allowed
      const auto cell = spec.cell(Word::all_a(k), Word::all_a(l));
      if (!cell.empty()) {
        rep.within_parity = false;
        rep.witness_parity = diagram_text(cell.front());
        break;
      }
    }
  }
  return rep;
}

std::optional<CellMismatch> first_cell_mismatch(const CategorySpec& left,
                                                const CategorySpec& right,
                                                unsigned cap) {
  unsigned ecap = effective_cap(left, cap);
  ecap = effective_cap(right, ecap);
  const bool all_a_only = left.orthogonal() && right.orthogonal();
  const auto words = row_words(all_a_only, ecap / 2);
  for (const Word& u : words) {
    for (const Word& l : words) {
      if (2 * (u.size() + l.size()) > ecap) continue;
      const auto a = left.cell(u, l);
      const auto b = right.cell(u, l);
      if (a == b) continue;
      CellMismatch mm;
      mm.upper = u;
      mm.lower = l;
      std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(mm.only_left));
      std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                          std::back_inserter(mm.only_right));
      return mm;
    }
  }
  return std::nullopt;
}

}  // namespace tlcat
