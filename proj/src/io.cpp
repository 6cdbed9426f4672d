#include "groupoidal/io.hpp"

#include <fstream>
#include <sstream>

#include "groupoidal/error.hpp"

namespace groupoidal::io {

namespace {

int get_int(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
    fail_parse(std::string("expected integer field '") + key + "'");
  return j[key].get<int>();
}

const json& get_array(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_array())
    fail_parse(std::string("expected array field '") + key + "'");
  return j[key];
}

}  // namespace

json pairset_to_json(const BitRel& rel) {
  json pairs = json::array();
  for (auto [i, j] : rel.pairs()) pairs.push_back({i, j});
  return json{{"n", rel.size()}, {"pairs", pairs}};
}

BitRel pairset_from_json(const json& j) {
  int n = get_int(j, "n");
  if (n < 0) fail_parse("negative relation size");
  BitRel rel(n);
  for (const json& p : get_array(j, "pairs")) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer())
      fail_parse("pair entries must be [i, j] integer arrays");
    rel.set(p[0].get<int>(), p[1].get<int>());
  }
  return rel;
}

json relation_to_json(const SupportRelation& P) { return pairset_to_json(P.pair_set()); }

SupportRelation relation_from_json(const json& j, int max_n) {
  return SupportRelation::closure_of(pairset_from_json(j), max_n);
}

json ideal_to_json(const IdealSet& F) {
  return json{{"parent", relation_to_json(F.parent())},
              {"pairs", pairset_to_json(F.pair_set())["pairs"]}};
}

IdealSet ideal_from_json(const json& j, int max_n) {
  if (!j.is_object() || !j.contains("parent")) fail_parse("ideal needs a 'parent' relation");
  SupportRelation parent = relation_from_json(j["parent"], max_n);
  json flat = json{{"n", parent.n()}, {"pairs", get_array(j, "pairs")}};
  return IdealSet::closed(parent, pairset_from_json(flat));
}

json tower_to_json(const Tower& t) {
  json levels = json::array();
  for (const EmbeddingSpec& s : t.steps)
    levels.push_back({{"kind", s.kind == EmbeddingKind::Refinement ? "refinement" : "standard"},
                      {"q", s.multiplicity}});
  return json{{"base", t.base_size}, {"levels", levels}};
}

Tower tower_from_json(const json& j) {
  Tower t;
  t.base_size = get_int(j, "base");
  if (t.base_size < 1) fail_parse("tower base must be positive");
  for (const json& lvl : get_array(j, "levels")) {
    if (!lvl.is_object() || !lvl.contains("kind") || !lvl["kind"].is_string())
      fail_parse("tower level needs a 'kind' string");
    std::string kind = lvl["kind"].get<std::string>();
    EmbeddingSpec s;
    if (kind == "refinement")
      s.kind = EmbeddingKind::Refinement;
    else if (kind == "standard")
      s.kind = EmbeddingKind::Standard;
    else
      fail_parse("tower level kind must be 'refinement' or 'standard'");
    s.multiplicity = get_int(lvl, "q");
    if (s.multiplicity < 1) fail_parse("tower multiplicity must be >= 1");
    t.steps.push_back(s);
  }
  t.size_at(t.num_levels());  // triggers the size guard
  return t;
}

json matrix_to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (int i = 1; i <= m.size(); ++i) {
    json row = json::array();
    for (int j = 1; j <= m.size(); ++j) {
      const RComplex& z = m.at(i, j);
      row.push_back({z.re.num, z.re.den, z.im.num, z.im.den});
    }
    rows.push_back(row);
  }
  return json{{"n", m.size()}, {"entries", rows}};
}

ExactMatrix matrix_from_json(const json& j) {
  int n = get_int(j, "n");
  const json& rows = get_array(j, "entries");
  if (static_cast<int>(rows.size()) != n) fail_parse("matrix row count mismatch");
  ExactMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    const json& row = rows[std::size_t(i - 1)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      fail_parse("matrix column count mismatch");
    for (int jj = 1; jj <= n; ++jj) {
      const json& e = row[std::size_t(jj - 1)];
      if (!e.is_array() || e.size() != 4) fail_parse("matrix entry must be [num,den,num_im,den_im]");
      long long a = e[0].get<long long>(), b = e[1].get<long long>();
      long long c = e[2].get<long long>(), d = e[3].get<long long>();
      if (b == 0 || d == 0) fail_parse("matrix entry with zero denominator");
      m.at(i, jj) = RComplex(Rational(a, b), Rational(c, d));
    }
  }
  return m;
}

json gset_to_json(const GSet& g) {
  json pairs = json::array();
  for (auto [u, v] : g.elems())
    pairs.push_back({g.space().word(u), g.space().word(v)});
  return json{{"depth", g.space().depth()}, {"pairs", pairs}};
}

GSet gset_from_json(const json& j, const WordSpace& space) {
  int depth = get_int(j, "depth");
  if (depth != space.depth()) fail_parse("G-set depth does not match the word space");
  std::vector<std::pair<int, int>> elems;
  for (const json& p : get_array(j, "pairs")) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_array() || !p[1].is_array())
      fail_parse("G-set pairs must be [[...u...],[...v...]] word arrays");
    Word u = p[0].get<Word>(), v = p[1].get<Word>();
    elems.emplace_back(space.index(u), space.index(v));
  }
  return GSet::from_pairs(space, std::move(elems));
}

json wordrel_to_json(const WordSpace& space, const BitRel& pairs) {
  json out = json::array();
  for (auto [u, v] : pairs.pairs()) out.push_back({space.word(u), space.word(v)});
  return json{{"depth", space.depth()}, {"pairs", out}};
}

BitRel wordrel_from_json(const json& j, const WordSpace& space) {
  int depth = get_int(j, "depth");
  if (depth != space.depth()) fail_parse("word-pair set depth does not match the word space");
  BitRel rel(space.points());
  for (const json& p : get_array(j, "pairs")) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_array() || !p[1].is_array())
      fail_parse("word pairs must be [[...u...],[...v...]] arrays");
    Word u = p[0].get<Word>(), v = p[1].get<Word>();
    rel.set(space.index(u), space.index(v));
  }
  return rel;
}

json dyadic_function_to_json(const DyadicFunction& f) {
  json terms = json::array();
  for (const auto& [g, c] : f.terms())
    terms.push_back({{"gset", gset_to_json(g)}, {"num", c.num}, {"log2_den", c.log2_den}});
  return json{{"terms", terms}};
}

DyadicFunction dyadic_function_from_json(const json& j, const WordSpace& space) {
  std::vector<std::pair<GSet, Dyadic>> terms;
  for (const json& t : get_array(j, "terms")) {
    if (!t.is_object() || !t.contains("gset")) fail_parse("dyadic term needs a 'gset'");
    GSet g = gset_from_json(t["gset"], space);
    long long num = t.contains("num") && t["num"].is_number_integer()
                        ? t["num"].get<long long>()
                        : (fail_parse("dyadic term needs integer 'num'"), 0);
    int k = get_int(t, "log2_den");
    if (k < 0) fail_parse("dyadic term with negative log2_den");
    terms.emplace_back(std::move(g), Dyadic(num, k));
  }
  return DyadicFunction::from_terms(space, terms);
}

json projections_to_json(const std::vector<ProjectionSet>& ps) {
  json out = json::array();
  for (const ProjectionSet& p : ps) out.push_back(p.members);
  return out;
}

json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail_parse("malformed JSON");
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_parse("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

std::string dot_export(const SupportRelation& P, const BitRel* ideal) {
  std::ostringstream out;
  out << "digraph support {\n";
  for (int i = 1; i <= P.n(); ++i) {
    out << "  " << i;
    if (ideal && ideal->test(i, i)) out << " [style=filled, fillcolor=lightgray]";
    out << ";\n";
  }
  for (auto [i, j] : P.pair_set().pairs()) {
    if (i == j) continue;
    out << "  " << i << " -> " << j;
    if (ideal && ideal->test(i, j)) out << " [color=red]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string star_pattern(const BitRel& rel) {
  std::ostringstream out;
  for (int i = 1; i <= rel.size(); ++i) {
    for (int j = 1; j <= rel.size(); ++j) {
      if (j > 1) out << ' ';
      out << (rel.test(i, j) ? '*' : '0');
    }
    out << '\n';
  }
  return out.str();
}

std::string star_pattern(const ExactMatrix& m) { return star_pattern(m.support()); }

std::string csv_pi_pairs(const OrderRelation& P, int r) {
  std::ostringstream out;
  for (auto [u, v] : P.pairs.pairs()) {
    Word wu = P.space.word(u), wv = P.space.word(v);
    out << pi_coordinate(wu, r).str() << ',' << pi_coordinate(wv, r).str() << '\n';
  }
  return out.str();
}

}  // namespace groupoidal::io
