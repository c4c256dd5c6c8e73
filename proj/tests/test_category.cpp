#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "oracle.hpp"
#include "tlcat/category.hpp"
#include "tlcat/enumerate.hpp"
#include "tlcat/errors.hpp"

using namespace tlcat;

namespace {

std::vector<Word> words_up_to(std::size_t letters) {
  std::vector<Word> out;
  for (std::size_t k = 0; k <= letters; ++k)
    for (const Word& w : all_words(k)) out.push_back(w);
  return out;
}

std::vector<Word> all_a_up_to(std::size_t letters) {
  std::vector<Word> out;
  for (std::size_t k = 0; k <= letters; ++k) out.push_back(Word::all_a(k));
  return out;
}

bool oracle_member(CategoryId id, const Diagram& d) {
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

}  // namespace

TEST_CASE("category ids round trip through their strings") {
  for (CategoryId id : all_category_ids) {
    auto back = parse_category(id_string(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK(!parse_category("q").has_value());
  CHECK(!parse_category("sprime").has_value());
  CHECK(!parse_category("").has_value());
  CHECK(id_string(CategoryId::SPrime) == "s-prime");

  CHECK(is_orthogonal_id(CategoryId::O));
  CHECK(is_orthogonal_id(CategoryId::H));
  CHECK(is_orthogonal_id(CategoryId::S));
  CHECK(is_orthogonal_id(CategoryId::SPrime));
  CHECK(!is_orthogonal_id(CategoryId::U));
  CHECK(!is_orthogonal_id(CategoryId::K));
  CHECK(!is_orthogonal_id(CategoryId::P));
}

TEST_CASE("word balance agrees with the surplus oracle") {
  CHECK(words_balanced(Word(), Word()));
  CHECK(words_balanced(Word("ab"), Word()));
  CHECK(!words_balanced(Word(), Word("aa")));
  CHECK(words_balanced(Word("aab"), Word("a")));
  for (const Word& u : words_up_to(3))
    for (const Word& l : words_up_to(3))
      CHECK(words_balanced(u, l) ==
            (oracle::letter_surplus(u) == oracle::letter_surplus(l)));
}

TEST_CASE("named membership matches the first-principles oracle") {
  for (const Word& u : words_up_to(3)) {
    for (const Word& l : words_up_to(3)) {
      for (const Diagram& d : enumerate_cell(u, l)) {
        for (CategoryId id : all_category_ids) {
          CAPTURE(u.str());
          CAPTURE(l.str());
          CHECK(member_named(id, d) == oracle_member(id, d));
        }
      }
    }
  }
}

TEST_CASE("predicate cells respect balance and pin small counts") {
  // unbalanced unitary cells are empty even though matchings exist there
  CHECK(enumerate_cell(Word(), Word("aa")).size() == 2);
  CHECK(predicate_cell(CategoryId::U, Word(), Word("aa")).empty());
  CHECK(predicate_cell(CategoryId::K, Word(), Word("aa")).empty());
  CHECK(predicate_cell(CategoryId::P, Word(), Word("aa")).empty());
  CHECK(predicate_cell(CategoryId::P, Word(), Word("a")).empty());

  CHECK(predicate_cell(CategoryId::U, Word(), Word("ab")).size() == 1);
  CHECK(predicate_cell(CategoryId::K, Word(), Word("ab")).size() == 1);
  CHECK(predicate_cell(CategoryId::P, Word(), Word("ab")).size() == 2);

  // balanced cells with adjacent equal letters: the letter-partition collapse
  // keeps strictly fewer matchings than mismatch parity alone would; counts
  // cross-checked against character-moment computations in the model
  CHECK(predicate_cell(CategoryId::P, Word(), Word("aabb")).size() == 4);
  CHECK(predicate_cell(CategoryId::P, Word(), Word("abab")).size() == 14);
  CHECK(predicate_cell(CategoryId::K, Word(), Word("aabb")).size() == 1);
  CHECK(predicate_cell(CategoryId::U, Word(), Word("aabb")).size() == 1);
  CHECK(predicate_cell(CategoryId::P, Word(), Word("aabbab")).size() == 28);
  CHECK(predicate_cell(CategoryId::K, Word(), Word("aabbab")).size() == 3);
  CHECK(predicate_cell(CategoryId::U, Word(), Word("aabbab")).size() == 2);

  // orthogonal counterpart: the s cell keeps both matchings, o keeps the
  // doubled one, h also exactly one, s-prime both
  CHECK(predicate_cell(CategoryId::S, Word(), Word("aa")).size() == 2);
  CHECK(predicate_cell(CategoryId::SPrime, Word(), Word("aa")).size() == 2);
  CHECK(predicate_cell(CategoryId::O, Word(), Word("aa")).size() == 1);
  CHECK(predicate_cell(CategoryId::H, Word(), Word("aa")).size() == 1);

  // odd orthogonal cells: s keeps them, the others do not
  CHECK(predicate_cell(CategoryId::S, Word(), Word("a")).size() == 1);
  CHECK(predicate_cell(CategoryId::SPrime, Word(), Word("a")).empty());
  CHECK(predicate_cell(CategoryId::H, Word(), Word("a")).empty());
  CHECK(predicate_cell(CategoryId::O, Word(), Word("a")).empty());

  // cells come back canonically sorted
  auto cell = predicate_cell(CategoryId::P, Word("ab"), Word("ab"));
  CHECK(std::is_sorted(cell.begin(), cell.end()));
}

TEST_CASE("standard generators belong to their own categories") {
  const std::size_t expected_counts[] = {1, 2, 3, 3, 2, 4, 6};
  std::size_t i = 0;
  for (CategoryId id : all_category_ids) {
    auto gens = standard_generators(id);
    CHECK(gens.size() == expected_counts[i++]);
    for (const Diagram& g : gens) {
      CAPTURE(id_string(id));
      CHECK(member_named(id, g));
    }
  }

  CHECK(cap_plain() ==
        Diagram::from_pairs(Word(), Word("aa"), {{0, 3}, {1, 2}}));
  CHECK(unit_cap() == Diagram::from_pairs(Word(), Word("a"), {{0, 1}}));
  CHECK(block4(Word("ab"), Word("ab")) ==
        Diagram::from_pairs(Word("ab"), Word("ab"),
                            {{0, 4}, {3, 7}, {1, 2}, {5, 6}}));
  CHECK(jdiag(Word("b"), Word("b")) ==
        Diagram::from_pairs(Word("b"), Word("b"), {{0, 1}, {2, 3}}));

  // the caps that define the unitary categories
  auto u_gens = standard_generators(CategoryId::U);
  CHECK(u_gens[0] == duality_cap(Word("a")));
  CHECK(u_gens[1] == duality_cap(Word("b")));
}

TEST_CASE("membership nests along the category lattice") {
  for (const Word& u : words_up_to(3)) {
    for (const Word& l : words_up_to(3)) {
      for (const Diagram& d : enumerate_cell(u, l)) {
        if (member_named(CategoryId::O, d)) {
          CHECK(member_named(CategoryId::H, d));
          CHECK(member_named(CategoryId::SPrime, d));
        }
        if (member_named(CategoryId::H, d)) {
          CHECK(member_named(CategoryId::SPrime, d));
          CHECK(member_named(CategoryId::S, d));
        }
        if (member_named(CategoryId::SPrime, d))
          CHECK(member_named(CategoryId::S, d));
        if (member_named(CategoryId::U, d))
          CHECK(member_named(CategoryId::K, d));
        if (member_named(CategoryId::K, d))
          CHECK(member_named(CategoryId::P, d));
      }
    }
  }
}

TEST_CASE("closure of the standard generators reproduces each predicate") {
  for (CategoryId id : all_category_ids) {
    CAPTURE(id_string(id));
    CategorySpec spec = closure(standard_generators(id), 8, 4);
    CHECK(spec.kind() == CategorySpec::Kind::Generated);
    CHECK(spec.max_points() == 8);
    const auto words =
        is_orthogonal_id(id) ? all_a_up_to(4) : words_up_to(4);
    for (const Word& u : words) {
      for (const Word& l : words) {
        if (2 * (u.size() + l.size()) > 8) continue;
        CAPTURE(u.str());
        CAPTURE(l.str());
        auto got = spec.cell(u, l);
        auto want = predicate_cell(id, u, l);
        CHECK(got == want);
      }
    }
  }
}

TEST_CASE("closure enforces its caps") {
  CHECK_THROWS_AS(closure({cap_plain()}, 14, 4), InvalidArgument);
  CategorySpec spec = closure({cap_plain()}, 8, 4);
  CHECK_THROWS_AS(spec.member(identity(Word("aaa"))), CapExceeded);
  CHECK_THROWS_AS(spec.cell(Word::all_a(3), Word::all_a(3)), CapExceeded);
  CHECK_NOTHROW(spec.cell(Word::all_a(2), Word::all_a(2)));

  // named specs answer at any size
  CategorySpec named = CategorySpec::named(CategoryId::S);
  CHECK(named.max_points() == 0);
  CHECK(named.member(identity(Word::all_a(4))));
  CHECK(named.cell(Word::all_a(3), Word::all_a(3)).size() == 132);
}

TEST_CASE("closure reports progress") {
  unsigned rounds = 0;
  std::size_t last_seen = 0;
  bool monotone = true;
  closure(standard_generators(CategoryId::O), 8, 4,
          [&](const ClosureStats& st) {
            rounds = std::max(rounds, st.round);
            if (st.discovered < last_seen) monotone = false;
            last_seen = st.discovered;
          });
  CHECK(rounds >= 2);
  CHECK(monotone);
}

TEST_CASE("explicit cell specs behave like lookup tables") {
  std::vector<Diagram> cells;
  cells.push_back(cap_plain());
  cells.push_back(cap_plain());  // duplicates collapse
  cells.push_back(identity(Word("a")));
  CategorySpec spec = CategorySpec::explicit_cells(cells, 8);
  CHECK(spec.kind() == CategorySpec::Kind::Explicit);
  CHECK(spec.cell(Word(), Word("aa")).size() == 1);
  CHECK(spec.cell(Word("a"), Word("a")).size() == 1);
  CHECK(spec.cell(Word(), Word("aaaa")).empty());
  CHECK(spec.member(cap_plain()));
  CHECK(!spec.member(involute(cap_plain())));
  CHECK_THROWS_AS(CategorySpec::explicit_cells({identity(Word::all_a(3))}, 8),
                  InvalidArgument);
}

TEST_CASE("decomplexified and parity-masked views") {
  CHECK_THROWS_AS(
      CategorySpec::decomplexified(CategorySpec::named(CategoryId::O), 12),
      InvalidArgument);

  CategorySpec du =
      CategorySpec::decomplexified(CategorySpec::named(CategoryId::U), 12);
  CHECK(du.orthogonal());
  CHECK(du.kind() == CategorySpec::Kind::Decomplexified);
  REQUIRE(du.unitary_parent() != nullptr);
  CHECK(du.unitary_parent()->id() == CategoryId::U);
  // odd cells vanish, even cells mirror the alternating-word cells
  CHECK(du.cell(Word(), Word("a")).empty());
  CHECK(du.cell(Word(), Word("aa")).size() ==
        predicate_cell(CategoryId::U, Word(), Word("ab")).size());
  for (const Diagram& d : du.cell(Word("aa"), Word("aa"))) {
    CHECK(d.upper().all_a());
    CHECK(du.member(d));
  }
  CHECK(!du.member(duality_cap(Word("a"))));

  CategorySpec masked = CategorySpec::parity_masked(CategorySpec::named(CategoryId::S));
  CHECK(masked.kind() == CategorySpec::Kind::ParityMasked);
  CHECK(masked.cell(Word(), Word("a")).empty());
  CHECK(!masked.member(unit_cap()));
  // masking the simplest category gives exactly its even sub-family
  for (std::size_t k = 0; k <= 3; ++k) {
    for (std::size_t l = 0; l <= 3; ++l) {
      auto got = masked.cell(k, l);
      auto want = predicate_cell(CategoryId::SPrime, Word::all_a(k),
                                 Word::all_a(l));
      CHECK(got == want);
    }
  }
}
