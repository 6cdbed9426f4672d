// groupoidal: digraph-algebra ideals, embedding towers and groupoid spectra
// at desk scale.
//
// Exit codes: 0 success / verified, 1 verification failed (or witness not
// found), 2 parse or validation error, 3 bound exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "groupoidal/config.hpp"
#include "groupoidal/error.hpp"
#include "groupoidal/io.hpp"
#include "groupoidal/relation.hpp"
#include "groupoidal/spectrum.hpp"
#include "groupoidal/tower.hpp"

using namespace groupoidal;
using io::json;

namespace {

struct Options {
  std::string relation_file;
  std::string ideal_file;
  std::string generator_file;
  std::string tower_file;
  std::string subcommand;
  std::string order = "lex";
  std::string format = "pretty";
  std::string out;
  int depth = 0;
  int level = 0;
  std::optional<int> bound;
  std::uint64_t seed = 0;
  int tries = 400;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out);
  if (!f) fail_validation("cannot write output file: " + opt.out);
  f << text;
}

std::string pair_list(const std::vector<std::pair<int, int>>& pairs) {
  std::ostringstream s;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k) s << ' ';
    s << '(' << pairs[k].first << ',' << pairs[k].second << ')';
  }
  return s.str();
}

// Accepts either a bare pair-set {"n","pairs"} or an ideal {"parent","pairs"}.
BitRel pairs_against(const json& j, const SupportRelation& P, const char* what) {
  json flat = j;
  if (j.is_object() && j.contains("parent")) {
    SupportRelation parent = io::relation_from_json(j["parent"]);
    if (!(parent == P)) fail_validation(std::string(what) + ": parent relation differs");
    flat = json{{"n", P.n()}, {"pairs", j.contains("pairs") ? j["pairs"] : json::array()}};
  }
  BitRel rel = io::pairset_from_json(flat);
  if (rel.size() != P.n())
    fail_validation(std::string(what) + ": size differs from the relation");
  return rel;
}

int run_ideals(const Options& opt) {
  SupportRelation P = io::relation_from_json(io::load_json_file(opt.relation_file));
  auto ideals = enumerate_ideals(P, opt.bound);
  if (opt.format == "json") {
    json out;
    out["relation"] = io::relation_to_json(P);
    out["count"] = ideals.size();
    json list = json::array();
    for (const IdealSet& f : ideals) {
      json entry;
      entry["pairs"] = io::pairset_to_json(f.pair_set())["pairs"];
      entry["full_sum_generator"] = io::pairset_to_json(full_sum_generator(f))["pairs"];
      entry["corner_generator"] = io::pairset_to_json(corner_generator(P, f))["pairs"];
      list.push_back(std::move(entry));
    }
    out["ideals"] = std::move(list);
    emit(opt, out.dump(2) + "\n");
    return 0;
  }
  std::ostringstream s;
  s << "ideals: " << ideals.size() << "\n";
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    const IdealSet& f = ideals[k];
    s << "ideal " << k << ": size " << f.pair_set().count() << "\n";
    s << "  pairs: " << pair_list(f.pair_set().pairs()) << "\n";
    s << "  full-sum generator: " << pair_list(full_sum_generator(f).pairs()) << "\n";
    s << "  corner generator: " << pair_list(corner_generator(P, f).pairs()) << "\n";
  }
  emit(opt, s.str());
  return 0;
}

int run_verify(const Options& opt) {
  SupportRelation P = io::relation_from_json(io::load_json_file(opt.relation_file));
  BitRel ideal_pairs = pairs_against(io::load_json_file(opt.ideal_file), P, "ideal");
  BitRel gen = pairs_against(io::load_json_file(opt.generator_file), P, "generator");
  if (!gen.subset_of(ideal_pairs))
    fail_validation("generator support is not contained in the ideal");
  IdealSet F = IdealSet::closed(P, ideal_pairs);
  IdealSet generated = generated_support(P, gen);
  if (generated.pair_set() == F.pair_set()) {
    emit(opt, "PRINCIPAL-VERIFIED\n");
    return 0;
  }
  BitRel missing = F.pair_set();
  missing.remove(generated.pair_set());
  std::ostringstream s;
  s << "PRINCIPAL-FAILED\n";
  s << "unreachable: " << pair_list(missing.pairs()) << "\n";
  emit(opt, s.str());
  return 1;
}

int run_tower(const Options& opt) {
  Tower tower = io::tower_from_json(io::load_json_file(opt.tower_file));
  int depth = opt.depth > 0 ? opt.depth : tower.num_levels();
  if (depth > tower.num_levels()) fail_bound("depth exceeds the tower length");

  if (opt.subcommand == "lift") {
    SupportRelation base = SupportRelation::upper_triangular(tower.base_size);
    SupportRelation image = base;
    std::optional<IdealSet> ideal;
    if (!opt.ideal_file.empty())
      ideal = IdealSet::closed(
          base, pairs_against(io::load_json_file(opt.ideal_file), base, "ideal"));
    json levels = json::array();
    std::ostringstream s;
    for (int lvl = 1; lvl <= depth; ++lvl) {
      json entry;
      entry["level"] = lvl;
      entry["size"] = tower.size_at(lvl);
      entry["image_pairs"] = io::pairset_to_json(image.pair_set())["pairs"];
      s << "level " << lvl << ": size " << tower.size_at(lvl) << ", image pairs "
        << image.pair_set().count();
      if (ideal) {
        entry["ideal_pairs"] = io::pairset_to_json(ideal->pair_set())["pairs"];
        s << ", lifted ideal pairs " << ideal->pair_set().count();
      }
      s << "\n";
      levels.push_back(std::move(entry));
      if (lvl < depth) {
        const EmbeddingSpec& step = tower.steps[std::size_t(lvl - 1)];
        SupportRelation here = SupportRelation::upper_triangular(tower.size_at(lvl));
        SupportRelation next = SupportRelation::upper_triangular(tower.size_at(lvl + 1));
        if (ideal) {
          // lift against the full triangular level, then continue
          IdealSet at_level = ideal_closure(here, ideal->pair_set());
          ideal = lift_ideal(step, here, at_level, next);
        }
        image = lift_support(step, image);
        if (!image.pair_set().subset_of(next.pair_set()))
          fail_validation("lifted image escaped the triangular level");
      }
    }
    if (opt.format == "json")
      emit(opt, json{{"levels", levels}}.dump(2) + "\n");
    else
      emit(opt, s.str());
    return 0;
  }

  if (opt.subcommand == "lat") {
    auto lat = persistent_projections(tower, depth);
    if (opt.format == "json") {
      json out = json::array();
      for (std::size_t k = 0; k < lat.size(); ++k)
        out.push_back({{"level", k + 1},
                       {"count", lat[k].size()},
                       {"projections", io::projections_to_json(lat[k])}});
      emit(opt, out.dump(2) + "\n");
    } else {
      std::ostringstream s;
      for (std::size_t k = 0; k < lat.size(); ++k)
        s << "level " << (k + 1) << ": " << lat[k].size() << " persistent projections\n";
      emit(opt, s.str());
    }
    return 0;
  }

  if (opt.subcommand == "inductivity") {
    if (opt.ideal_file.empty()) fail_validation("inductivity needs --ideal");
    int level = opt.level > 0 ? opt.level : depth;
    SupportRelation at_level = SupportRelation::upper_triangular(tower.size_at(level));
    IdealSet ideal = IdealSet::closed(
        at_level, pairs_against(io::load_json_file(opt.ideal_file), at_level, "ideal"));
    IdealSet top = lift_level_ideal(tower, level, depth, ideal);
    bool inductive = inductivity_check(tower, top, depth);
    IdealSet back = pullback_level_ideal(tower, depth, level, top);
    bool recovered = back.pair_set() == ideal.pair_set();
    std::ostringstream s;
    s << (inductive ? "INDUCTIVE" : "NOT-INDUCTIVE") << "\n";
    s << "lift-then-intersect at level " << level << ": "
      << (recovered ? "recovered exactly" : "ENLARGED") << "\n";
    if (!recovered) {
      BitRel extra = back.pair_set();
      extra.remove(ideal.pair_set());
      s << "added pairs: " << pair_list(extra.pairs()) << "\n";
    }
    emit(opt, s.str());
    return 0;
  }

  if (opt.subcommand == "witness") {
    auto witness = find_standard_enlargement(opt.seed, opt.tries);
    if (!witness) {
      emit(opt, "NONE\n");
      return 1;
    }
    json out;
    out["base"] = witness->base_n;
    out["q"] = witness->multiplicity;
    out["next_support"] = io::relation_to_json(witness->next_support);
    out["level_ideal"] = io::pairset_to_json(witness->level_ideal.pair_set())["pairs"];
    out["pulled_back"] = io::pairset_to_json(witness->pulled_back)["pairs"];
    emit(opt, out.dump(2) + "\n");
    return 0;
  }

  fail_validation("unknown tower subcommand: " + opt.subcommand);
}

int run_spectrum(const Options& opt) {
  Tower tower = io::tower_from_json(io::load_json_file(opt.tower_file));
  int depth = opt.depth > 0 ? opt.depth : tower.num_levels();
  WordSpace space = WordSpace::from_tower(tower, depth);

  OrderKind kind;
  if (opt.order == "lex")
    kind = OrderKind::Lex;
  else if (opt.order == "revlex")
    kind = OrderKind::Revlex;
  else if (opt.order == "alternation")
    kind = OrderKind::TowerOrder;
  else
    fail_validation("order must be lex, revlex or alternation");
  OrderRelation P = order_from_comparator(space, kind, &tower);

  if (opt.subcommand == "check") {
    OrderReport r = check_partial_order(WordRel{space, P.pairs});
    std::ostringstream s;
    s << "partial: " << (r.is_partial ? "yes" : "no") << "\n";
    s << "total: " << (r.is_total ? "yes" : "no") << "\n";
    s << "equivalence: " << (r.is_equivalence ? "yes" : "no") << "\n";
    if (r.is_partial && r.is_total) s << "TOTAL-ORDER-CONFIRMED\n";
    emit(opt, s.str());
    return 0;
  }

  if (opt.subcommand == "emit") {
    int r = space.alphabets.front();
    for (int a : space.alphabets)
      if (a != r) fail_validation("pi emission needs a uniform alphabet");
    emit(opt, io::csv_pi_pairs(P, r));
    return 0;
  }

  if (opt.subcommand == "generator") {
    if (opt.ideal_file.empty()) fail_validation("generator needs --ideal");
    BitRel F = io::wordrel_from_json(io::load_json_file(opt.ideal_file), space);
    if (!ideal_set_check(P, F))
      fail_validation("input is not an ideal set of the order (P∘F∘P ⊄ F)");
    auto cover = disjointify(point_cover(space, F));
    if (cover.empty()) {
      emit(opt, "terms: 0 (zero ideal)\n");
      return 0;
    }
    DyadicFunction g = dyadic_generator(cover);
    bool compression_ok = true;
    for (std::size_t j = 0; j < cover.size(); ++j) {
      if (cover[j].empty_set()) continue;
      if (!(compress_by(cover[j], g) ==
            DyadicFunction::indicator(cover[j]).scaled(Dyadic(1, int(j) + 1))))
        compression_ok = false;
    }
    bool support_ok = convolution_ideal_support(P, g) == F;
    if (opt.format == "json") {
      json out;
      out["generator"] = io::dyadic_function_to_json(g);
      out["compression_identity"] = compression_ok;
      out["ideal_support_matches"] = support_ok;
      emit(opt, out.dump(2) + "\n");
    } else {
      std::ostringstream s;
      s << "terms: " << g.values().size() << "\n";
      std::size_t index = 1;
      for (const GSet& e : cover) {
        if (e.empty_set()) {
          ++index;
          continue;
        }
        auto [u, v] = e.elems().front();
        s << "E_" << index << " coeff " << Dyadic(1, int(index)).str() << ": ((";
        Word wu = space.word(u), wv = space.word(v);
        for (std::size_t m = 0; m < wu.size(); ++m) s << (m ? "," : "") << wu[m];
        s << "),(";
        for (std::size_t m = 0; m < wv.size(); ++m) s << (m ? "," : "") << wv[m];
        s << "))\n";
        ++index;
      }
      s << "compression identity: " << (compression_ok ? "verified" : "FAILED") << "\n";
      s << "ideal support: " << (support_ok ? "verified" : "FAILED") << "\n";
      emit(opt, s.str());
    }
    return compression_ok && support_ok ? 0 : 1;
  }

  fail_validation("unknown spectrum subcommand: " + opt.subcommand);
}

int run_export(const Options& opt) {
  SupportRelation P = io::relation_from_json(io::load_json_file(opt.relation_file));
  std::optional<BitRel> ideal;
  if (!opt.ideal_file.empty())
    ideal = pairs_against(io::load_json_file(opt.ideal_file), P, "ideal");
  if (opt.format == "dot") {
    emit(opt, io::dot_export(P, ideal ? &*ideal : nullptr));
  } else if (opt.format == "json") {
    json out = io::relation_to_json(P);
    if (ideal) out["ideal"] = io::pairset_to_json(*ideal)["pairs"];
    emit(opt, out.dump(2) + "\n");
  } else {
    emit(opt, io::star_pattern(ideal ? *ideal : P.pair_set()));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"digraph-algebra ideals, embedding towers and groupoid spectra"};
  app.require_subcommand(1);

  int bound_flag = 0;

  CLI::App* ideals = app.add_subcommand("ideals", "enumerate the ideals of a support relation");
  ideals->add_option("relation", opt.relation_file, "relation JSON file")->required();
  ideals->add_option("--bound", bound_flag, "enumeration size guard override");
  ideals->add_option("--format", opt.format, "pretty|json");
  ideals->add_option("--out", opt.out, "write output to a file");

  CLI::App* verify = app.add_subcommand("verify", "check that a generator generates an ideal");
  verify->add_option("relation", opt.relation_file)->required();
  verify->add_option("ideal", opt.ideal_file)->required();
  verify->add_option("generator", opt.generator_file)->required();
  verify->add_option("--out", opt.out);

  CLI::App* tower = app.add_subcommand("tower", "embedding tower computations");
  tower->add_option("tower", opt.tower_file, "tower JSON file")->required();
  tower->add_option("subcommand", opt.subcommand, "lift|lat|inductivity|witness")->required();
  tower->add_option("--depth", opt.depth);
  tower->add_option("--level", opt.level, "level an ideal lives at (inductivity)");
  tower->add_option("--ideal", opt.ideal_file, "ideal pair-set JSON");
  tower->add_option("--seed", opt.seed, "seed for the witness hunt");
  tower->add_option("--tries", opt.tries);
  tower->add_option("--format", opt.format, "pretty|json");
  tower->add_option("--out", opt.out);

  CLI::App* spectrum = app.add_subcommand("spectrum", "finite-depth spectrum computations");
  spectrum->add_option("tower", opt.tower_file, "tower JSON file")->required();
  spectrum->add_option("subcommand", opt.subcommand, "check|emit|generator")->required();
  spectrum->add_option("--depth", opt.depth);
  spectrum->add_option("--order", opt.order, "lex|revlex|alternation");
  spectrum->add_option("--ideal", opt.ideal_file, "ideal set as word pairs JSON");
  spectrum->add_option("--format", opt.format, "pretty|json");
  spectrum->add_option("--out", opt.out);

  CLI::App* exporter = app.add_subcommand("export", "render a relation as dot/pretty/json");
  exporter->add_option("relation", opt.relation_file)->required();
  exporter->add_option("--ideal", opt.ideal_file);
  exporter->add_option("--format", opt.format, "dot|pretty|json");
  exporter->add_option("--out", opt.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (bound_flag > 0) opt.bound = bound_flag;

  try {
    if (app.got_subcommand(ideals)) return run_ideals(opt);
    if (app.got_subcommand(verify)) return run_verify(opt);
    if (app.got_subcommand(tower)) return run_tower(opt);
    if (app.got_subcommand(spectrum)) return run_spectrum(opt);
    if (app.got_subcommand(exporter)) return run_export(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Bound ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
