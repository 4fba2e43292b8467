// Copyright 2026 The artinstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// artinstab: command-line front end.
//
// Exit codes: 0 decision rendered (any verdict), 1 oracle mismatch,
// 2 invalid input, 3 hypotheses unknown without --mode force,
// 4 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "artinstab/artinstab.hpp"

namespace {

using namespace artinstab;
using nlohmann::json;

enum Exit { kOk = 0, kMismatch = 1, kInvalid = 2, kInapplicable = 3, kResource = 4 };

struct Options {
  std::string graph_file;
  std::string subset;
  std::string target;
  std::string mode = "auto";
  std::string format = "json";
  bool expand_words = false;
  int max_subset_size = 16;
};

CoxeterGraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json word_json(const CoxeterGraph& g, const ConjugatorWord& w, bool expand) {
  json out = to_json(g, w);
  if (!expand) return out;
  for (std::size_t i = 0; i < w.factors.size(); ++i) {
    try {
      out[i]["expanded"] = oracle::expand_delta(g, w.factors[i].subset);
    } catch (const UnsupportedType&) {
      out[i]["expanded"] = nullptr;
    }
  }
  return out;
}

std::string expanded_text(const CoxeterGraph& g, const ConjugatorWord& w) {
  std::string out;
  for (const auto& f : w.factors) {
    out += "  Delta" + format_set(g, f.subset) + (f.sign < 0 ? "^-1" : "") + " = ";
    try {
      for (const auto& s : oracle::expand_delta(g, f.subset)) out += s + " ";
    } catch (const UnsupportedType&) {
      out += "(not expanded)";
    }
    out += "\n";
  }
  return out;
}

int run_validate(const Options& o) {
  const CoxeterGraph g = load_graph(o.graph_file);
  if (o.format == "json") {
    emit(to_json(g));
  } else {
    std::cout << g.size() << " generators: " << format_set(g, g.all()) << "\n";
    for (int s = 0; s < g.size(); ++s)
      for (int t = s + 1; t < g.size(); ++t)
        if (g.label(s, t) != Label::finite(2))
          std::cout << "  m(" << g.name(s) << "," << g.name(t)
                    << ") = " << g.label(s, t).to_string() << "\n";
  }
  return kOk;
}

int run_classify(const Options& o) {
  const CoxeterGraph g = load_graph(o.graph_file);
  const GroupFamilyReport r = classify_group(g);
  if (o.format == "json") {
    emit(to_json(g, r));
    return kOk;
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "spherical:             " << yn(r.spherical) << "\n"
            << "FC-type:               " << yn(r.fc_type) << "\n"
            << "free product:          " << yn(r.free_product_of_spherical) << "\n"
            << "large:                 " << yn(r.large) << "\n"
            << "two-dimensional:       " << yn(r.two_dimensional) << "\n"
            << "2-dim, m=2 at most 1:  " << yn(r.martin_2dim_condition) << "\n"
            << "affine family:         " << r.affine_family.value_or("none") << "\n"
            << "applicability:         " << to_string(r.applicability) << " ("
            << r.justification << ")\n";
  return kOk;
}

int run_type(const Options& o) {
  const CoxeterGraph g = load_graph(o.graph_file);
  const VertexSet x = parse_subset(g, o.subset);
  json comps = json::array();
  bool spherical = true;
  std::ostringstream text;
  for (VertexSet c : components(g, x)) {
    auto t = recognize_component(g, c);
    spherical = spherical && t.has_value();
    json cj = {{"generators", names_of(g, c)}};
    if (t) {
      cj["type"] = t->type.to_string();
      cj["positions"] = to_json(g, *t)["positions"];
      cj["twistable"] = is_twistable(*t);
      text << format_set(g, c) << ": " << t->type.to_string()
           << (is_twistable(*t) ? " (twistable)" : "") << "\n";
    } else {
      cj["type"] = "non_spherical";
      text << format_set(g, c) << ": not spherical\n";
    }
    comps.push_back(std::move(cj));
  }
  if (o.format == "json") {
    emit({{"subset", names_of(g, x)}, {"spherical", spherical}, {"components", comps}});
  } else {
    std::cout << text.str() << (spherical ? "spherical" : "not spherical") << "\n";
  }
  return kOk;
}

int run_orbit(const Options& o) {
  const CoxeterGraph g = load_graph(o.graph_file);
  const VertexSet x = parse_subset(g, o.subset);
  const OrbitTable table = orbit(g, x);
  if (o.format == "json") {
    json out = json::array();
    for (const auto& e : table.entries())
      out.push_back({{"subset", names_of(g, e.subset)},
                     {"word", word_json(g, e.word, o.expand_words)}});
    emit(out);
  } else {
    for (const auto& e : table.entries()) {
      std::cout << format_set(g, e.subset) << "  <-  " << format_word(g, e.word) << "\n";
      if (o.expand_words) std::cout << expanded_text(g, e.word);
    }
  }
  return kOk;
}

int run_conjugate(const Options& o) {
  const CoxeterGraph g = load_graph(o.graph_file);
  const VertexSet x = parse_subset(g, o.subset);
  const VertexSet target = parse_subset(g, o.target);
  const auto w = conjugator(g, x, target);
  if (o.format == "json") {
    json out = {{"conjugate", w.has_value()}};
    if (w) out["word"] = word_json(g, *w, o.expand_words);
    emit(out);
  } else if (w) {
    std::cout << format_word(g, *w) << "\n";
    if (o.expand_words) std::cout << expanded_text(g, *w);
  } else {
    std::cout << "not conjugate\n";
  }
  return kOk;
}

int run_stability(const Options& o) {
  const CoxeterGraph g = load_graph(o.graph_file);
  const VertexSet x = parse_subset(g, o.subset);
  StabilityOptions options;
  options.max_subset_size = o.max_subset_size;
  const Mode mode = o.mode == "force" ? Mode::Force : Mode::Auto;
  const StabilityReport r = decide_with_applicability(g, x, mode, options);
  if (o.format == "json") {
    json out = to_json(g, r);
    if (o.expand_words && r.verdict.witness &&
        r.verdict.witness->kind == WitnessKind::Permutation)
      out["witness"]["word"] = word_json(g, r.verdict.witness->word, true);
    emit(out);
  } else {
    std::cout << "A" << format_set(g, x) << ": " << to_string(r.verdict.kind) << " ("
              << r.semantics << (r.hypotheses_verified ? "" : ", hypotheses unverified")
              << ")\n";
    if (r.verdict.kind == StabilityVerdict::Kind::Inapplicable)
      std::cout << "  " << r.verdict.reason << "\n";
    if (const auto& w = r.verdict.witness) {
      std::cout << "  witness: " << to_string(w->kind) << " on " << format_set(g, w->subset)
                << "\n";
      if (w->kind == WitnessKind::Permutation) {
        std::cout << "  components reach " << to_json(g, w->tuple).dump() << " via "
                  << format_word(g, w->word) << "\n";
        if (o.expand_words) std::cout << expanded_text(g, w->word);
      } else if (w->site) {
        std::cout << "  " << w->site->component.type.to_string() << " component "
                  << format_set(g, w->site->component.vertices()) << " extends at "
                  << g.name(w->site->site) << " by " << g.name(w->site->external) << "\n";
      }
    }
  }
  return r.verdict.kind == StabilityVerdict::Kind::Inapplicable ? kInapplicable : kOk;
}

int run_export_dot(const Options& o) {
  std::cout << to_dot(load_graph(o.graph_file));
  return kOk;
}

struct OracleRow {
  std::string type;
  std::vector<int> delta;  // 1-based images
  std::vector<int> w0;
  int length = -1;
  int positive_roots = -1;
  bool pass = false;
  std::string note;
};

OracleRow check_component(const CoxeterGraph& g, const TypedComponent& c) {
  OracleRow row;
  row.type = c.type.to_string();
  for (int p : delta_positions(c)) row.delta.push_back(p + 1);
  try {
    row.w0 = oracle::w0_conjugation_permutation(g, c);
    row.length = static_cast<int>(oracle::longest_word(g, c).size());
    if (c.type.is(Series::I2)) {
      row.positive_roots = c.type.label;
    } else {
      row.positive_roots = static_cast<int>(oracle::positive_roots(g, c).size());
    }
    row.pass = row.w0 == row.delta && row.length == row.positive_roots;
  } catch (const UnsupportedType& e) {
    row.note = e.what();
    row.pass = true;  // nothing to compare
  }
  return row;
}

int run_oracle_check(const Options& o) {
  std::vector<OracleRow> rows;
  std::vector<IrreducibleType> types;
  for (int n = 1; n <= 6; ++n) types.push_back(IrreducibleType::A(n));
  for (int n = 2; n <= 4; ++n) types.push_back(IrreducibleType::B(n));
  for (int n = 4; n <= 7; ++n) types.push_back(IrreducibleType::D(n));
  for (int n = 6; n <= 8; ++n) types.push_back(IrreducibleType::E(n));
  types.push_back(IrreducibleType::F4());
  for (int m = 5; m <= 10; ++m) types.push_back(IrreducibleType::I2(m));
  for (const auto& t : types) {
    const CoxeterGraph g = catalog::graph_of(t);
    rows.push_back(check_component(g, *recognize_component(g, g.all())));
  }
  if (!o.graph_file.empty()) {
    const CoxeterGraph g = load_graph(o.graph_file);
    const VertexSet x = o.subset.empty() ? g.all() : parse_subset(g, o.subset);
    for (VertexSet c : components(g, x)) {
      if (auto t = recognize_component(g, c)) {
        OracleRow row = check_component(g, *t);
        row.type += " on " + format_set(g, c);
        rows.push_back(std::move(row));
      }
    }
  }
  bool all = true;
  for (const auto& r : rows) all = all && r.pass;
  if (o.format == "json") {
    json checks = json::array();
    for (const auto& r : rows) {
      json j = {{"type", r.type}, {"delta", r.delta}, {"pass", r.pass}};
      if (r.note.empty()) {
        j["w0"] = r.w0;
        j["length"] = r.length;
        j["positive_roots"] = r.positive_roots;
      } else {
        j["skipped"] = r.note;
      }
      checks.push_back(std::move(j));
    }
    emit({{"checks", checks}, {"all_pass", all}});
  } else {
    for (const auto& r : rows) {
      std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.type;
      if (!r.note.empty()) {
        std::cout << "  (skipped: " << r.note << ")";
      } else {
        std::cout << "  delta=";
        for (int p : r.delta) std::cout << p;
        std::cout << " w0=";
        for (int p : r.w0) std::cout << p;
        std::cout << " l(w0)=" << r.length << " |roots+|=" << r.positive_roots;
      }
      std::cout << "\n";
    }
  }
  return all ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugacy stability of parabolic subgroups of Artin groups", "artinstab"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_graph) {
    auto* opt = sub->add_option("--graph", o.graph_file, "Coxeter graph (JSON)")
                    ->check(CLI::ExistingFile);
    if (needs_graph) opt->required();
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
  };
  auto subset = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--subset", o.subset, "Comma-separated generators");
    if (required) opt->required();
  };

  auto* validate = app.add_subcommand("validate", "Echo the normalized graph");
  common(validate, true);
  auto* classify = app.add_subcommand("classify", "Group family and applicability report");
  common(classify, true);
  auto* type = app.add_subcommand("type", "Spherical decomposition of a subset");
  common(type, true);
  subset(type, true);
  auto* orbit_cmd = app.add_subcommand("orbit", "Standard parabolics conjugate to A_X");
  common(orbit_cmd, true);
  subset(orbit_cmd, true);
  orbit_cmd->add_flag("--expand-words", o.expand_words, "Expand Delta factors");
  auto* conj = app.add_subcommand("conjugate", "Conjugating word between A_X and A_X'");
  common(conj, true);
  subset(conj, true);
  conj->add_option("--target", o.target, "Comma-separated generators")->required();
  conj->add_flag("--expand-words", o.expand_words, "Expand Delta factors");
  auto* stab = app.add_subcommand("stability", "Decide conjugacy stability of A_X");
  common(stab, true);
  subset(stab, true);
  stab->add_option("--mode", o.mode, "auto: refuse unknown families; force: run anyway")
      ->check(CLI::IsMember({"auto", "force"}));
  stab->add_option("--max-subset-size", o.max_subset_size, "Largest |X| accepted")
      ->check(CLI::PositiveNumber);
  stab->add_flag("--expand-words", o.expand_words, "Expand Delta factors");
  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering");
  common(dot, true);
  auto* oracle_cmd =
      app.add_subcommand("oracle-check", "Cross-check Delta tables against w0 conjugation");
  common(oracle_cmd, false);
  subset(oracle_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "artinstab: " << e.what() << "\n";
    return kInvalid;
  }

  try {
    if (validate->parsed()) return run_validate(o);
    if (classify->parsed()) return run_classify(o);
    if (type->parsed()) return run_type(o);
    if (orbit_cmd->parsed()) return run_orbit(o);
    if (conj->parsed()) return run_conjugate(o);
    if (stab->parsed()) return run_stability(o);
    if (dot->parsed()) return run_export_dot(o);
    if (oracle_cmd->parsed()) return run_oracle_check(o);
  } catch (const InvalidInput& e) {
    std::cerr << "artinstab: invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const PreconditionError& e) {
    std::cerr << "artinstab: invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const ResourceLimitExceeded& e) {
    std::cerr << "artinstab: " << e.what() << "\n";
    return kResource;
  } catch (const Error& e) {
    std::cerr << "artinstab: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
