// Acceptance gate: ten end-to-end checks over the whole library plus the
// command-line tool, one verdict line each on stdout. Expected values and
// caps are pinned inline; failures print a first witness to stderr.
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "oracle.hpp"
#include "tlcat/category.hpp"
#include "tlcat/enumerate.hpp"
#include "tlcat/functors.hpp"
#include "tlcat/group_model.hpp"
#include "tlcat/linear.hpp"

using namespace tlcat;

namespace {

int g_failures = 0;

void verdict(int number, const std::string& label, bool ok,
             const std::string& witness) {
  std::printf("criterion %2d: %s: %s\n", number, label.c_str(),
              ok ? "PASS" : "FAIL");
  std::fflush(stdout);
  if (!ok) {
    ++g_failures;
    if (!witness.empty())
      std::fprintf(stderr, "  criterion %d witness: %s\n", number,
                   witness.c_str());
  }
}

std::string cell_name(const Word& upper, const Word& lower) {
  const auto row = [](const Word& w) {
    return w.size() ? w.str() : std::string("-");
  };
  return "(" + row(upper) + "," + row(lower) + ")";
}

std::string id_name(CategoryId id) { return std::string(id_string(id)); }

// --- 1: closures of the published generators equal the predicates ----------

bool generators_match_predicates(std::string& witness) {
  constexpr unsigned cap = 12, slack = 4;
  for (CategoryId id : all_category_ids) {
    const CategorySpec generated = closure(standard_generators(id), cap, slack);
    const auto mm =
        first_cell_mismatch(generated, CategorySpec::named(id), cap);
    if (mm) {
      witness = id_name(id) + ": cells differ at " +
                cell_name(mm->upper, mm->lower);
      return false;
    }
  }
  return true;
}

// --- 2: complexification lands on the named unitary categories -------------

bool complexification_targets(std::string& label, std::string& witness) {
  constexpr unsigned cap = 12;
  const std::pair<CategoryId, CategoryId> expected[] = {
      {CategoryId::O, CategoryId::U},
      {CategoryId::S, CategoryId::P},
      {CategoryId::SPrime, CategoryId::P}};
  for (const auto& [source, target] : expected) {
    const CategorySpec image = complexify(CategorySpec::named(source), cap);
    const auto mm =
        first_cell_mismatch(image, CategorySpec::named(target), cap);
    if (mm) {
      witness = "complexified " + id_name(source) + " differs from " +
                id_name(target) + " at " + cell_name(mm->upper, mm->lower);
      return false;
    }
  }
  const CategorySpec image_h = complexify(CategorySpec::named(CategoryId::H), cap);
  const bool h_gives_k =
      !first_cell_mismatch(image_h, CategorySpec::named(CategoryId::K), cap)
           .has_value();
  label = "complexification: o->u, s->p, s'->p exact (12 pts); h->k: " +
          std::string(h_gives_k ? "yes" : "no");
  return true;
}

// --- 3: decomplexification round trip ---------------------------------------

bool decomplexification_roundtrip(std::string& witness) {
  constexpr unsigned cap = 12, axiom_cap = 10;
  constexpr std::size_t level_cap = 6;
  const std::pair<CategoryId, CategoryId> expected[] = {
      {CategoryId::U, CategoryId::O},
      {CategoryId::K, CategoryId::H},
      {CategoryId::P, CategoryId::SPrime}};
  for (const auto& [source, target] : expected) {
    const CategorySpec real_part =
        decomplexify(CategorySpec::named(source), cap);

    const AxiomReport axioms = verify_category_axioms(real_part, axiom_cap);
    for (const AxiomCheck& check : axioms.checks) {
      if (!check.checked) {
        witness = id_name(source) + ": axiom check skipped: " + check.name;
        return false;
      }
      if (!check.passed) {
        witness = id_name(source) + ": axiom check failed: " + check.name +
                  " (" + check.witness + ")";
        return false;
      }
    }

    const LevelResult lv = level(real_part, level_cap);
    if (!lv.above_cap()) {
      witness = id_name(source) + ": odd fixed cell found at length " +
                std::to_string(2 * *lv.value + 1);
      return false;
    }

    if (const auto mm =
            first_cell_mismatch(real_part, CategorySpec::named(target), cap)) {
      witness = "decomplexified " + id_name(source) + " differs from " +
                id_name(target) + " at " + cell_name(mm->upper, mm->lower);
      return false;
    }

    const CategorySpec back = complexify(real_part, cap);
    if (const auto mm =
            first_cell_mismatch(back, CategorySpec::named(source), cap)) {
      witness = "round trip of " + id_name(source) + " differs at " +
                cell_name(mm->upper, mm->lower);
      return false;
    }
  }
  return true;
}

// --- 4: level values ---------------------------------------------------------

bool level_values(std::string& witness) {
  constexpr std::size_t cap = 6;
  const LevelResult s = level(CategorySpec::named(CategoryId::S), cap);
  if (!s.value || *s.value != 0) {
    witness = "level of s is not 0";
    return false;
  }
  for (CategoryId id :
       {CategoryId::O, CategoryId::H, CategoryId::SPrime}) {
    const LevelResult r = level(CategorySpec::named(id), cap);
    if (!r.above_cap()) {
      witness = "level of " + id_name(id) + " resolved to " +
                std::to_string(*r.value) + " below the cap";
      return false;
    }
  }
  return true;
}

// --- 5: the three faces of infinite level agree ------------------------------

bool infinite_level_faces(std::string& witness) {
  constexpr unsigned cap = 10, slack = 4;
  struct Case {
    std::string name;
    CategorySpec spec;
    bool expect_infinite;
  };
  std::vector<Case> cases;
  cases.push_back({"o", CategorySpec::named(CategoryId::O), true});
  cases.push_back({"h", CategorySpec::named(CategoryId::H), true});
  cases.push_back({"s", CategorySpec::named(CategoryId::S), false});
  cases.push_back({"s-prime", CategorySpec::named(CategoryId::SPrime), true});
  cases.push_back(
      {"closure of the doubled cap", closure({cap_plain()}, cap, slack), true});
  cases.push_back({"closure of doubled cap + unit cap",
                   closure({cap_plain(), unit_cap()}, cap, slack), false});
  cases.push_back({"closure of doubled cap + 4-point block",
                   closure({cap_plain(), block4(Word("aa"), Word("aa"))}, cap,
                           slack),
                   true});
  for (const Case& c : cases) {
    const EquivalenceReport rep = infinite_level_equivalences(c.spec, cap);
    if (!rep.verdicts_agree()) {
      witness = c.name + ": verdicts disagree (odd-empty " +
                std::to_string(rep.odd_cells_empty) + ", doubling-fixed " +
                std::to_string(rep.doubling_fixed) + ", parity " +
                std::to_string(rep.within_parity) + ")";
      return false;
    }
    if (rep.all_true() != c.expect_infinite) {
      witness = c.name + ": expected infinite = " +
                std::to_string(c.expect_infinite);
      return false;
    }
  }
  return true;
}

// --- 6: moment tables and the brute-force cross-check -----------------------

bool brute_member(CategoryId id, const Diagram& d) {
  switch (id) {
    case CategoryId::O: return oracle::in_o(d);
    case CategoryId::H: return oracle::in_h(d);
    case CategoryId::S: return oracle::in_s(d);
    case CategoryId::SPrime: return oracle::in_s_prime(d);
    case CategoryId::U: return oracle::in_u(d);
    case CategoryId::K: return oracle::in_k(d);
    case CategoryId::P: return oracle::in_p(d);
  }
  return false;
}

std::size_t brute_moment(CategoryId id, std::size_t k) {
  const Word w = is_orthogonal_id(id) ? Word::all_a(k)
                                      : Word::alternating(k, 'a');
  std::size_t count = 0;
  for (const auto& pairs :
       oracle::noncrossing_matchings(0, static_cast<int>(2 * k)))
    if (brute_member(id, Diagram::from_pairs(Word(), w, pairs))) ++count;
  return count;
}

bool moment_tables(std::string& witness) {
  constexpr std::size_t table_k = 8, brute_k = 6;
  const std::map<CategoryId, std::vector<std::size_t>> fixed = {
      {CategoryId::O, {1, 0, 1, 0, 2, 0, 5, 0, 14}},
      {CategoryId::S, {1, 1, 2, 5, 14, 42, 132, 429, 1430}},
      {CategoryId::SPrime, {1, 0, 2, 0, 14}}};
  std::map<CategoryId, std::vector<std::size_t>> table;
  for (CategoryId id : all_category_ids)
    table[id] = moments(CategorySpec::named(id), table_k);

  for (const auto& [id, want] : fixed) {
    for (std::size_t k = 0; k < want.size(); ++k) {
      if (table[id][k] != want[k]) {
        witness = "moments(" + id_name(id) + ")[" + std::to_string(k) +
                  "] = " + std::to_string(table[id][k]) + ", expected " +
                  std::to_string(want[k]);
        return false;
      }
    }
  }

  const std::pair<CategoryId, CategoryId> partners[] = {
      {CategoryId::U, CategoryId::O},
      {CategoryId::K, CategoryId::H},
      {CategoryId::P, CategoryId::SPrime}};
  for (const auto& [unitary, orthogonal] : partners) {
    for (std::size_t k = 0; k <= table_k; k += 2) {
      if (table[unitary][k] != table[orthogonal][k]) {
        witness = "even moment mismatch " + id_name(unitary) + " vs " +
                  id_name(orthogonal) + " at k = " + std::to_string(k);
        return false;
      }
    }
  }

  for (CategoryId id : all_category_ids) {
    for (std::size_t k = 0; k <= brute_k; ++k) {
      const std::size_t brute = brute_moment(id, k);
      if (table[id][k] != brute) {
        witness = "brute-force count for " + id_name(id) + " at k = " +
                  std::to_string(k) + " is " + std::to_string(brute) +
                  ", library says " + std::to_string(table[id][k]);
        return false;
      }
    }
  }
  return true;
}

// --- 7: composition is functorial under the tensor realization ---------------

bool functoriality(std::string& label, std::string& witness) {
  constexpr std::size_t max_letters = 4;  // 8 boundary points per diagram
  std::size_t checked = 0;
  for (std::size_t mid_len = 0; mid_len <= max_letters; ++mid_len) {
    for (const Word& mid : all_words(mid_len)) {
      std::vector<Diagram> upper_side, lower_side;
      for (std::size_t len = 0; len + mid_len <= max_letters; ++len) {
        for (const Word& w : all_words(len)) {
          for (const Diagram& d : enumerate_cell(w, mid))
            upper_side.push_back(d);
          for (const Diagram& e : enumerate_cell(mid, w))
            lower_side.push_back(e);
        }
      }
      for (const Diagram& d : upper_side) {
        for (const Diagram& e : lower_side) {
          for (unsigned n : {2u, 3u}) {
            const FunctorialCheck c = check_functorial(d, e, n);
            ++checked;
            if (!c.ok) {
              witness = "pair " + to_text(d) + " over " + to_text(e) +
                        " at n = " + std::to_string(n);
              return false;
            }
          }
        }
      }
    }
  }
  label = "tensor realization functorial on all " + std::to_string(checked) +
          " composable pairs (8 pts, n in {2,3})";
  return true;
}

// --- 8: exact gram ranks match the span oracle --------------------------------

bool gram_ranks(std::string& witness) {
  constexpr std::size_t max_letters = 4;  // 8 boundary points per cell
  constexpr unsigned stabilization_limit = 3;
  for (std::size_t ul = 0; ul <= max_letters; ++ul) {
    for (std::size_t ll = 0; ul + ll <= max_letters; ++ll) {
      for (const Word& upper : all_words(ul)) {
        for (const Word& lower : all_words(ll)) {
          const std::vector<Diagram> cell = enumerate_cell(upper, lower);
          if (cell.empty()) continue;
          for (unsigned n = 1; n <= 3; ++n) {
            const std::size_t rank = rank_exact(gram(cell, n).entries);
            const std::size_t span = span_dim_oracle(cell, n);
            if (rank != span) {
              witness = "cell " + cell_name(upper, lower) + " at n = " +
                        std::to_string(n) + ": gram rank " +
                        std::to_string(rank) + ", span dimension " +
                        std::to_string(span);
              return false;
            }
          }
          const unsigned threshold =
              gram_rank_stabilization(cell, stabilization_limit);
          if (threshold == 0) {
            witness = "cell " + cell_name(upper, lower) +
                      ": rank never stabilizes to the diagram count " +
                      std::to_string(cell.size()) + " up to n = " +
                      std::to_string(stabilization_limit);
            return false;
          }
        }
      }
    }
  }
  return true;
}

// --- 9: free-product embedding on metric balls --------------------------------

bool group_embeddings(std::string& witness) {
  constexpr unsigned radius = 6;
  for (const std::string name : {"z2", "z4", "z2xz2", "s3"}) {
    const EmbeddingReport rep =
        verify_free_product_embedding(builtin_group(name), radius);
    if (!rep.all_passed()) {
      witness = name + ": " + rep.witness;
      return false;
    }
  }
  const EmbeddingReport negative = verify_free_product_embedding(
      builtin_group("s3"), 3, /*lambda_to_identity=*/true);
  if (negative.all_passed() || negative.injective) {
    witness = "collapsed map on s3 was not rejected";
    return false;
  }
  return true;
}

// --- 10: the command-line tool is byte-deterministic --------------------------

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

bool cli_determinism(std::string& witness) {
  const std::string cli = TLCAT_CLI_PATH;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "tlcat-acceptance";
  fs::create_directories(dir);

  const fs::path cayley = dir / "z2.json";
  {
    std::ofstream f(cayley, std::ios::binary);
    f << "{\"elements\": [\"e\", \"g\"], \"table\": [[0, 1], [1, 0]], "
         "\"generators\": [\"g\"]}\n";
  }

  const std::vector<std::string> commands = {
      "enumerate --category s --lower aaaa",
      "enumerate --category u --upper ab --lower ab --format csv",
      "closure-check --category o --max-points 8",
      "roundtrip --category k --max-points 8",
      "moments --category h --k 6 --format csv",
      "level --category s --k 4",
      "gram --category s --k 2 --n 2",
      "group-check z2 --radius 4",
      "group-check " + cayley.string() + " --radius 3 --format csv"};

  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::string artifacts[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path stdout_file =
          dir / ("cmd" + std::to_string(i) + "_run" + std::to_string(run));
      const fs::path out_file = fs::path(stdout_file.string() + ".out");
      const std::string cmd = "\"" + cli + "\" " + commands[i] + " --out \"" +
                              out_file.string() + "\" > \"" +
                              stdout_file.string() + "\" 2>/dev/null";
      const int status = std::system(cmd.c_str());
      if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
        witness = "command '" + commands[i] + "' exited with " +
                  std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1);
        return false;
      }
      const std::string artifact = slurp(out_file);
      if (artifact.empty()) {
        witness = "command '" + commands[i] + "' wrote an empty artifact";
        return false;
      }
      if (!slurp(stdout_file).empty()) {
        witness = "command '" + commands[i] +
                  "' wrote to stdout despite --out";
        return false;
      }
      artifacts[run] = artifact;
    }
    if (artifacts[0] != artifacts[1]) {
      witness = "command '" + commands[i] + "' artifacts differ between runs";
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::string witness;

  witness.clear();
  verdict(1, "closures of the published generators equal the predicates (12 pts)",
          generators_match_predicates(witness), witness);

  witness.clear();
  std::string label2 = "complexification: o->u, s->p, s'->p exact (12 pts)";
  const bool ok2 = complexification_targets(label2, witness);
  verdict(2, label2, ok2, witness);

  witness.clear();
  verdict(3, "decomplexify: axioms, infinite level, named target, round trip",
          decomplexification_roundtrip(witness), witness);

  witness.clear();
  verdict(4, "level: s = 0; o, h, s' above every cap up to 6",
          level_values(witness), witness);

  witness.clear();
  verdict(5, "three infinite-level verdicts agree on 7 specs (10 pts)",
          infinite_level_faces(witness), witness);

  witness.clear();
  verdict(6, "moment tables, unitary partners, brute-force cross-check",
          moment_tables(witness), witness);

  witness.clear();
  std::string label7 = "tensor realization functorial (8 pts, n in {2,3})";
  const bool ok7 = functoriality(label7, witness);
  verdict(7, label7, ok7, witness);

  witness.clear();
  verdict(8, "gram ranks equal span dimensions and stabilize (8 pts)",
          gram_ranks(witness), witness);

  witness.clear();
  verdict(9, "free-product embedding verified for z2, z4, z2xz2, s3 (radius 6)",
          group_embeddings(witness), witness);

  witness.clear();
  verdict(10, "command-line artifacts byte-identical across runs",
          cli_determinism(witness), witness);

  std::printf("acceptance: %d/10 criteria passed\n", 10 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
