#include "tlcat/group_model.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace tlcat {

namespace {

void check_group_axioms(const std::vector<std::vector<unsigned>>& table,
                        unsigned& identity_out,
                        std::vector<unsigned>& inverse_out) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidArgument("group: empty element list");
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidArgument("group: table is not square");
    for (unsigned v : row)
      if (v >= n) throw InvalidArgument("group: table entry out of range");
  }

  bool found_identity = false;
  for (unsigned e = 0; e < n && !found_identity; ++e) {
    bool ok = true;
    for (unsigned j = 0; j < n && ok; ++j)
      ok = table[e][j] == j && table[j][e] == j;
    if (ok) {
      identity_out = e;
      found_identity = true;
    }
  }
  if (!found_identity) throw InvalidArgument("group: no two-sided identity");

  inverse_out.assign(n, 0);
  for (unsigned i = 0; i < n; ++i) {
    bool found = false;
    for (unsigned x = 0; x < n && !found; ++x) {
      if (table[i][x] == identity_out && table[x][i] == identity_out) {
        inverse_out[i] = x;
        found = true;
      }
    }
    if (!found)
      throw InvalidArgument("group: element without a two-sided inverse");
  }

  auto assoc = [&](unsigned a, unsigned b, unsigned c) {
    return table[table[a][b]][c] == table[a][table[b][c]];
  };
  if (n <= 24) {
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b)
        for (unsigned c = 0; c < n; ++c)
          if (!assoc(a, b, c))
            throw InvalidArgument("group: table is not associative");
  } else {
    std::mt19937 rng(0x5eedu);
    std::uniform_int_distribution<unsigned> pick(0, static_cast<unsigned>(n) - 1);
    for (int trial = 0; trial < 20000; ++trial)
      if (!assoc(pick(rng), pick(rng), pick(rng)))
        throw InvalidArgument("group: table is not associative");
  }
}

// Closure of a seed set under the group product (enough for finite groups).
std::vector<unsigned> subgroup_closure(const FiniteGroup& g,
                                       std::vector<unsigned> seeds) {
  std::set<unsigned> members{g.identity};
  for (unsigned s : seeds) members.insert(s);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<unsigned> snapshot(members.begin(), members.end());
    for (unsigned a : snapshot)
      for (unsigned b : snapshot)
        if (members.insert(g.mul(a, b)).second) grew = true;
  }
  return {members.begin(), members.end()};
}

std::vector<int> permutation_compose(const std::vector<int>& p,
                                     const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    r[x] = p[static_cast<std::size_t>(q[x])];
  return r;
}

}  // namespace

FiniteGroup FiniteGroup::create(std::vector<std::string> elements,
                                std::vector<std::vector<unsigned>> table,
                                std::vector<unsigned> generators) {
  if (elements.size() != table.size())
    throw InvalidArgument("group: element list and table size differ");
  {
    std::set<std::string> names(elements.begin(), elements.end());
    if (names.size() != elements.size())
      throw InvalidArgument("group: duplicate element names");
  }
  if (generators.empty())
    throw InvalidArgument("group: at least one generator is required");
  for (unsigned idx : generators)
    if (idx >= elements.size())
      throw InvalidArgument("group: generator index out of range");

  FiniteGroup g;
  g.elements = std::move(elements);
  g.table = std::move(table);
  g.generators = std::move(generators);
  check_group_axioms(g.table, g.identity, g.inverse);
  return g;
}

FiniteGroup parse_cayley_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("cayley json: ") + e.what());
  }
  try {
    std::vector<std::string> elements =
        j.at("elements").get<std::vector<std::string>>();
    std::vector<std::vector<unsigned>> table =
        j.at("table").get<std::vector<std::vector<unsigned>>>();
    std::vector<unsigned> generators;
    for (const auto& item : j.at("generators")) {
      if (item.is_string()) {
        auto it = std::find(elements.begin(), elements.end(),
                            item.get<std::string>());
        if (it == elements.end())
          throw InvalidArgument("group: unknown generator name " +
                                item.get<std::string>());
        generators.push_back(
            static_cast<unsigned>(std::distance(elements.begin(), it)));
      } else {
        generators.push_back(item.get<unsigned>());
      }
    }
    return FiniteGroup::create(std::move(elements), std::move(table),
                               std::move(generators));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("cayley json: ") + e.what());
  }
}

std::string cayley_json(const FiniteGroup& g) {
  nlohmann::ordered_json j;
  j["elements"] = g.elements;
  j["table"] = g.table;
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (unsigned idx : g.generators) gens.push_back(g.elements[idx]);
  j["generators"] = gens;
  return j.dump(2) + "\n";
}

FiniteGroup builtin_group(std::string_view name) {
  if (name == "z2")
    return FiniteGroup::create({"e", "g"}, {{0, 1}, {1, 0}}, {1});
  if (name == "z4") {
    std::vector<std::vector<unsigned>> table(4, std::vector<unsigned>(4));
    for (unsigned i = 0; i < 4; ++i)
      for (unsigned j = 0; j < 4; ++j) table[i][j] = (i + j) % 4;
    return FiniteGroup::create({"e", "g", "g2", "g3"}, std::move(table),
                               {1, 3});
  }
  if (name == "z2xz2") {
    std::vector<std::vector<unsigned>> table(4, std::vector<unsigned>(4));
    for (unsigned i = 0; i < 4; ++i)
      for (unsigned j = 0; j < 4; ++j) table[i][j] = i ^ j;
    return FiniteGroup::create({"e", "a", "b", "ab"}, std::move(table),
                               {1, 2});
  }
  if (name == "s3") {
    const std::vector<std::vector<int>> perms = {
        {0, 1, 2}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {0, 2, 1}};
    const std::vector<std::string> names = {"e",     "(12)", "(123)",
                                            "(132)", "(13)", "(23)"};
    std::vector<std::vector<unsigned>> table(6, std::vector<unsigned>(6));
    for (unsigned i = 0; i < 6; ++i) {
      for (unsigned j = 0; j < 6; ++j) {
        const std::vector<int> prod = permutation_compose(perms[i], perms[j]);
        const auto it = std::find(perms.begin(), perms.end(), prod);
        table[i][j] = static_cast<unsigned>(std::distance(perms.begin(), it));
      }
    }
    // two transpositions: their quotient is a 3-cycle, so the quotient
    // subgroup is the full alternating subgroup
    return FiniteGroup::create(names, std::move(table), {1, 4});
  }
  throw InvalidArgument("unknown builtin group: " + std::string(name));
}

std::vector<std::string> builtin_group_names() {
  return {"z2", "z4", "z2xz2", "s3"};
}

FPWord reduce(const FiniteGroup& g, const std::vector<Syllable>& raw) {
  std::vector<Syllable> out;
  for (Syllable s : raw) {
    while (true) {
      const bool trivial =
          s.is_z() ? s.z_exp == 0
                   : s.gamma == static_cast<int>(g.identity);
      if (trivial) break;
      if (out.empty() || out.back().is_z() != s.is_z()) {
        out.push_back(s);
        break;
      }
      const Syllable back = out.back();
      out.pop_back();
      if (s.is_z())
        s.z_exp += back.z_exp;
      else
        s.gamma = static_cast<int>(
            g.mul(static_cast<unsigned>(back.gamma),
                  static_cast<unsigned>(s.gamma)));
    }
  }
  return FPWord{std::move(out)};
}

FPWord fp_mul(const FiniteGroup& g, const FPWord& a, const FPWord& b) {
  std::vector<Syllable> raw = a.syllables;
  raw.insert(raw.end(), b.syllables.begin(), b.syllables.end());
  return reduce(g, raw);
}

FPWord fp_inverse(const FiniteGroup& g, const FPWord& a) {
  std::vector<Syllable> raw;
  raw.reserve(a.syllables.size());
  for (auto it = a.syllables.rbegin(); it != a.syllables.rend(); ++it) {
    Syllable s = *it;
    if (s.is_z())
      s.z_exp = -s.z_exp;
    else
      s.gamma = static_cast<int>(g.inv(static_cast<unsigned>(s.gamma)));
    raw.push_back(s);
  }
  return reduce(g, raw);
}

FPWord fp_z(int exp) {
  if (exp == 0) return {};
  return FPWord{{Syllable{exp, -1}}};
}

FPWord fp_gamma(const FiniteGroup& g, unsigned element) {
  if (element == g.identity) return {};
  return FPWord{{Syllable{0, static_cast<int>(element)}}};
}

std::string fp_text(const FiniteGroup& g, const FPWord& w) {
  if (w.empty()) return "e";
  std::ostringstream os;
  bool first = true;
  for (const Syllable& s : w.syllables) {
    if (!first) os << '.';
    first = false;
    if (s.is_z()) {
      os << 'z';
      if (s.z_exp != 1) os << '^' << s.z_exp;
    } else {
      os << g.elements[static_cast<std::size_t>(s.gamma)];
    }
  }
  return os.str();
}

std::string fp_key(const FPWord& w) {
  std::string key;
  key.reserve(3 * w.syllables.size());
  for (const Syllable& s : w.syllables) {
    if (s.is_z()) {
      const auto e = static_cast<std::int16_t>(s.z_exp);
      key.push_back('\x01');
      key.push_back(static_cast<char>(e & 0xff));
      key.push_back(static_cast<char>((e >> 8) & 0xff));
    } else {
      key.push_back('\x02');
      key.push_back(static_cast<char>(s.gamma & 0xff));
    }
  }
  return key;
}

std::vector<unsigned> lambda_subgroup(const FiniteGroup& g) {
  const std::vector<unsigned> whole =
      subgroup_closure(g, g.generators);
  if (whole.size() != g.size())
    throw InvalidArgument(
        "group: the chosen generators do not generate the whole group");
  std::vector<unsigned> seeds;
  for (unsigned gi : g.generators)
    for (unsigned gj : g.generators) seeds.push_back(g.mul(g.inv(gi), gj));
  return subgroup_closure(g, std::move(seeds));
}

FPWord embed_word(const FiniteGroup& g, const FPWord& w,
                  bool lambda_to_identity) {
  const unsigned g1 = g.generators.front();
  std::vector<Syllable> raw;
  for (const Syllable& s : w.syllables) {
    if (s.is_z()) {
      // z^m -> (z g1)^m
      if (s.z_exp > 0) {
        for (int i = 0; i < s.z_exp; ++i) {
          raw.push_back(Syllable{1, -1});
          raw.push_back(Syllable{0, static_cast<int>(g1)});
        }
      } else {
        for (int i = 0; i < -s.z_exp; ++i) {
          raw.push_back(Syllable{0, static_cast<int>(g.inv(g1))});
          raw.push_back(Syllable{-1, -1});
        }
      }
    } else if (!lambda_to_identity) {
      raw.push_back(s);
    }
  }
  return reduce(g, raw);
}

namespace {

// Breadth-first ball of the subgroup generated by `gens` inside Z * G,
// counting every generator and inverse as one step. Returns cumulative sizes
// per radius and calls `visit(word, radius)` for each new element.
template <typename Visit>
std::vector<std::size_t> ball_bfs(const FiniteGroup& g,
                                  const std::vector<FPWord>& gens,
                                  unsigned radius, Visit&& visit) {
  std::vector<FPWord> steps;
  std::unordered_set<std::string> step_keys;
  for (const FPWord& s : gens) {
    for (const FPWord& w : {s, fp_inverse(g, s)}) {
      if (w.empty()) continue;
      if (step_keys.insert(fp_key(w)).second) steps.push_back(w);
    }
  }

  std::unordered_set<std::string> seen;
  std::vector<FPWord> frontier{FPWord{}};
  seen.insert(fp_key(FPWord{}));
  visit(FPWord{}, 0u);
  std::vector<std::size_t> sizes{1};
  for (unsigned r = 1; r <= radius; ++r) {
    std::vector<FPWord> next;
    for (const FPWord& w : frontier) {
      for (const FPWord& s : steps) {
        FPWord candidate = fp_mul(g, w, s);
        if (seen.insert(fp_key(candidate)).second) {
          visit(candidate, r);
          next.push_back(std::move(candidate));
        }
      }
    }
    sizes.push_back(seen.size());
    frontier.swap(next);
  }
  return sizes;
}

}  // namespace

EmbeddingReport verify_free_product_embedding(const FiniteGroup& g,
                                              unsigned radius,
                                              bool lambda_to_identity) {
  if (radius > 8)
    throw CapExceeded("embedding check: radius capped at 8, got " +
                      std::to_string(radius));

  EmbeddingReport rep;
  rep.radius = radius;
  rep.lambda = lambda_subgroup(g);
  for (unsigned idx : rep.lambda) rep.lambda_names.push_back(g.elements[idx]);

  // generator words: z plus one syllable per nonidentity defining quotient
  std::vector<FPWord> source_gens{fp_z(1)};
  {
    std::set<unsigned> quotients;
    for (unsigned gi : g.generators)
      for (unsigned gj : g.generators) quotients.insert(g.mul(g.inv(gi), gj));
    for (unsigned q : quotients)
      if (q != g.identity) source_gens.push_back(fp_gamma(g, q));
  }
  std::vector<FPWord> t_gens;
  for (unsigned gi : g.generators)
    t_gens.push_back(reduce(g, {Syllable{1, -1}, Syllable{0, static_cast<int>(gi)}}));

  // Each source generator maps to a word of t-length at most 2 and each
  // t-generator pulls back to a word of source length at most 2, so images of
  // the radius-r ball live in the 2r t-ball and the r t-ball is covered by
  // images of the 2r source ball.
  const unsigned wide = 2 * radius;

  rep.injective = true;
  std::unordered_map<std::string, std::string> image_owner_near;
  std::unordered_set<std::string> images_near, images_wide;
  std::vector<FPWord> near_sources;
  std::vector<std::size_t> image_sizes(radius + 1, 0);
  const std::vector<std::size_t> source_sizes = ball_bfs(
      g, source_gens, wide, [&](const FPWord& w, unsigned r) {
        const FPWord image = embed_word(g, w, lambda_to_identity);
        const std::string key = fp_key(image);
        images_wide.insert(key);
        if (r <= radius) {
          images_near.insert(key);
          for (unsigned k = r; k <= radius; ++k) image_sizes[k] = images_near.size();
          near_sources.push_back(w);
          auto [it, fresh] = image_owner_near.emplace(key, fp_text(g, w));
          if (!fresh && rep.injective) {
            rep.injective = false;
            rep.witness = "not injective: " + it->second + " and " +
                          fp_text(g, w) + " share the image " +
                          fp_text(g, image);
          }
        }
      });

  std::unordered_set<std::string> t_wide;
  std::vector<FPWord> t_near;
  const std::vector<std::size_t> t_sizes =
      ball_bfs(g, t_gens, wide, [&](const FPWord& w, unsigned r) {
        t_wide.insert(fp_key(w));
        if (r <= radius) t_near.push_back(w);
      });

  rep.ball_source.assign(source_sizes.begin(),
                         source_sizes.begin() + radius + 1);
  rep.ball_image = image_sizes;
  rep.ball_subgroup.assign(t_sizes.begin(), t_sizes.begin() + radius + 1);

  rep.image_in_subgroup = true;
  for (const FPWord& w : near_sources) {
    const FPWord image = embed_word(g, w, lambda_to_identity);
    if (!t_wide.count(fp_key(image))) {
      rep.image_in_subgroup = false;
      if (rep.witness.empty())
        rep.witness = "image escapes the subgroup ball: " + fp_text(g, w) +
                      " maps to " + fp_text(g, image);
      break;
    }
  }

  rep.subgroup_covered = true;
  for (const FPWord& w : t_near) {
    if (!images_wide.count(fp_key(w))) {
      rep.subgroup_covered = false;
      if (rep.witness.empty())
        rep.witness =
            "subgroup element not covered by the image: " + fp_text(g, w);
      break;
    }
  }
  return rep;
}

}  // namespace tlcat
