#include "zcat/cli.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zcat/braid.hpp"
#include "zcat/catalog.hpp"
#include "zcat/colimits.hpp"
#include "zcat/comonoids.hpp"
#include "zcat/constructions.hpp"
#include "zcat/io.hpp"

namespace zcat::cli {

using nlohmann::json;

namespace {

// Carries a finished report out of a command together with a non-zero exit.
struct Outcome {
  json report;
  int exit = kExitOk;
};

CatPtr load_input(const std::string& input) {
  if (input.empty()) {
    throw MalformedInput("a category file is required");
  }
  constexpr std::string_view prefix = "catalog:";
  if (input.starts_with(prefix)) {
    return catalog::by_name(input.substr(prefix.size()));
  }
  return load_category(input);
}

json names(const FinMonCat& c, const std::vector<Obj>& xs) {
  json out = json::array();
  for (Obj x : xs) {
    out.push_back(c.name(x));
  }
  return out;
}

json names(const FinMonCat& c, const std::vector<Mor>& fs) {
  json out = json::array();
  for (Mor f : fs) {
    out.push_back(c.name(f));
  }
  return out;
}

json violations_json(const ValidationReport& r) {
  json out = json::array();
  for (const auto& v : r.violations) {
    out.push_back({{"law", v.law}, {"detail", v.detail}});
  }
  return out;
}

Construction build(const std::string& kind, const CatPtr& c, const std::string& param,
                   const Limits& limits) {
  if (kind == "center") {
    return center(c, limits);
  }
  if (kind == "weak") {
    return weak_center(c, limits);
  }
  if (kind == "zx") {
    return centralizer_of_object(c, c->object(param), limits);
  }
  if (kind == "zh") {
    return centralizer_of_morphism(c, c->arrow(param), limits);
  }
  throw MalformedInput("--in must be one of center, zx, zh, weak (got '" + kind + "')");
}

Outcome validate_cmd(const RunConfig& cfg) {
  CatPtr c = load_input(cfg.input);
  auto r = validate_category(*c, cfg.limits);
  json out = {{"command", "validate"},
              {"ok", r.ok()},
              {"objects", c->num_objects()},
              {"morphisms", c->num_morphisms()},
              {"monoidal", c->is_monoidal()},
              {"braided", c->has_braiding()},
              {"partial", c->is_partial()},
              {"violations", violations_json(r)},
              {"notes", r.notes}};
  return {out, r.ok() ? kExitOk : kExitUsage};
}

Outcome construction_cmd(const RunConfig& cfg, const std::string& kind) {
  CatPtr c = load_input(cfg.input);
  std::string param;
  std::string which = kind;
  if (kind == "centralizer") {
    if (cfg.object.empty() == cfg.morphism.empty()) {
      throw MalformedInput("centralizer needs exactly one of --object or --morphism");
    }
    which = cfg.object.empty() ? "zh" : "zx";
    param = cfg.object.empty() ? cfg.morphism : cfg.object;
  }
  const Construction k = build(which, c, param, cfg.limits);
  const FinMonCat& z = *k.category;
  json objects = json::array();
  for (Obj p : z.objects()) {
    objects.push_back({{"name", z.name(p)},
                       {"carrier", c->name(k.carrier(p))},
                       {"components", names(*c, k.data(p))}});
  }
  json morphisms = json::array();
  for (Mor f : z.morphisms()) {
    morphisms.push_back({{"name", z.name(f)},
                         {"dom", z.name(z.dom(f))},
                         {"cod", z.name(z.cod(f))},
                         {"base", c->name(k.forget(f))}});
  }
  auto r = validate_category(z, cfg.limits);
  json out = {{"command", cfg.command},
              {"construction", to_string(k.kind)},
              {"objects", objects},
              {"morphisms", morphisms},
              {"braided", z.has_braiding()},
              {"valid", r.ok()},
              {"violations", violations_json(r)}};
  if (!param.empty()) {
    out["parameter"] = param;
  }
  return {out, r.ok() ? kExitOk : kExitViolation};
}

// Diagram names may be constructed identifiers or base identifiers with a
// unique lift.
Diagram diagram_in(const json& doc, const Construction& k) {
  try {
    return diagram_from_json(doc, k.category);
  } catch (const UnknownId&) {
  }
  const Diagram base = diagram_from_json(doc, k.base);
  const FinMonCat& b = *k.base;
  const FinMonCat& z = *k.category;
  Functor f{base.shape, k.category, std::vector<Obj>(base.shape->num_objects()),
            std::vector<Mor>(base.shape->num_morphisms())};
  for (Obj s : base.shape->objects()) {
    std::vector<Obj> lifts;
    for (Obj p : z.objects()) {
      if (k.carrier(p) == base.assignment(s)) {
        lifts.push_back(p);
      }
    }
    if (lifts.size() != 1) {
      throw MalformedInput("diagram object '" + b.name(base.assignment(s)) + "' has " +
                           std::to_string(lifts.size()) +
                           " lifts in the construction; name the constructed object instead");
    }
    f.object_map[s.index] = lifts[0];
  }
  for (Mor a : base.shape->morphisms()) {
    auto m = k.lift(f(base.shape->dom(a)), f(base.shape->cod(a)), base.assignment(a));
    if (!m) {
      throw MalformedInput("diagram arrow '" + b.name(base.assignment(a)) +
                           "' does not lift to the construction");
    }
    f.morphism_map[a.index] = *m;
  }
  return make_diagram(std::move(f));
}

json cocone_json(const Diagram& d, const Cocone& c) {
  const FinMonCat& t = *d.target();
  json legs = json::object();
  for (Obj s : d.shape->objects()) {
    legs[d.shape->name(s)] = t.name(c.legs[s.index]);
  }
  return {{"apex", t.name(c.apex)}, {"legs", legs}};
}

Outcome colimit_cmd(const RunConfig& cfg) {
  CatPtr c = load_input(cfg.input);
  if (cfg.diagram.empty()) {
    throw MalformedInput("colimit needs --diagram FILE");
  }
  const json doc = read_json_file(cfg.diagram);
  json out = {{"command", "colimit"}};
  if (cfg.in.empty()) {
    const Diagram d = diagram_from_json(doc, c);
    auto col = colimit(d, cfg.limits);
    out["found"] = col.has_value();
    out["cocones"] = enumerate_cocones(d, cfg.limits).size();
    if (col) {
      out["colimit"] = cocone_json(d, col->cocone);
    }
    return {out};
  }
  if ((cfg.in == "zx" || cfg.in == "zh") && cfg.param.empty()) {
    throw MalformedInput("--in " + cfg.in + " needs --param");
  }
  const Construction k = build(cfg.in, c, cfg.param, cfg.limits);
  const Diagram d = diagram_in(doc, k);
  out["construction"] = to_string(k.kind);
  try {
    auto ind = colimit_in_construction(k, d, cfg.limits);
    out["found"] = true;
    out["base"] = cocone_json(ind.base.diagram, ind.base.cocone);
    out["colimit"] = cocone_json(ind.lifted.diagram, ind.lifted.cocone);
    out["induced"] = names(*c, ind.induced);
    out["inverses"] = names(*c, ind.inverses);
    out["checks"] = ind.checks;
  } catch (const PreconditionRefused& e) {
    out["found"] = false;
    out["refused"] = e.what();
    return {out, kExitUsage};
  }
  return {out};
}

json comonoid_json(const FinMonCat& c, const Comonoid& m) {
  return {{"carrier", c.name(m.carrier)}, {"comult", c.name(m.comult)}, {"counit", c.name(m.counit)}};
}

Outcome comonoids_cmd(const RunConfig& cfg) {
  CatPtr c = load_input(cfg.input);
  auto k = comonoid_category(c, cfg.limits);
  json list = json::array();
  for (Obj p : k.category->objects()) {
    list.push_back(comonoid_json(*c, k.comonoids[p.index]));
  }
  auto r = validate_category(*k.category, cfg.limits);
  json out = {{"command", "comonoids"},
              {"comonoids", list},
              {"skipped", names(*c, k.skipped)},
              {"morphisms", k.category->num_morphisms()},
              {"monoidal", k.category->is_monoidal()},
              {"valid", r.ok()},
              {"violations", violations_json(r)}};
  return {out, r.ok() ? kExitOk : kExitViolation};
}

bool is_braid_window(const FinMonCat& c) {
  const json& p = c.provenance();
  return p.is_object() && p.value("construction", "") == "braid_truncation";
}

Outcome cofree_over(const CatPtr& c, const std::string& over, const Limits& limits) {
  if (over.empty()) {
    throw MalformedInput("cofree needs --over V");
  }
  const Obj v = c->object(over);
  auto k = comonoid_category(c, limits);
  auto r = cofree_comonoid(k, v);
  json trace = json::array();
  for (const auto& t : r.trace) {
    trace.push_back({{"candidate", t.candidate}, {"competitor", t.competitor}, {"reason", t.reason}});
  }
  json out = {{"command", "cofree"},
              {"over", over},
              {"found", r.cofree.has_value()},
              {"comma_objects", r.comma_objects},
              {"trace", trace},
              {"notes", r.notes}};
  if (r.cofree) {
    out["cofree"] = comonoid_json(*c, k.comonoids[r.cofree->index]);
    out["arrow"] = c->name(*r.arrow);
  }
  if (!r.cofree && is_braid_window(*c) && v != c->unit()) {
    out["discrepancy"] = {
        {"claim", "the forgetful functor from comonoids over the braid category has a right adjoint, "
                  "so every object has a cofree comonoid"},
        {"finding", "hom(0, " + over + ") is empty, the only comonoid is carried by 0, so the comma "
                    "category over " + over + " is empty and no couniversal arrow exists"},
        {"open_question", "right adjoint of the comonoid forgetful functor for the braid category: the "
                          "argument assumes the forgetful functor is cocontinuous, but it does not "
                          "preserve the initial object"}};
    return {out, kExitViolation};
  }
  return {out};
}

Outcome cofree_cmd(const RunConfig& cfg) {
  return cofree_over(load_input(cfg.input), cfg.object, cfg.limits);
}

json witness_json(const FinMonCat& c, const GeneratorCheck& g) {
  if (!g.witness) {
    return nullptr;
  }
  return json::array({c.name(g.witness->first), c.name(g.witness->second)});
}

Outcome generators_cmd(const RunConfig& cfg) {
  CatPtr c = load_input(cfg.input);
  std::vector<Obj> g;
  for (const auto& name : cfg.members) {
    g.push_back(c->object(name));
  }
  if (!cfg.lift) {
    auto r = is_generating_set(*c, g, cfg.limits);
    return {{{"command", "generators"},
             {"set", names(*c, g)},
             {"generates", r.generates},
             {"witness", witness_json(*c, r)}}};
  }
  if (cfg.members.empty()) {
    g = c->objects();
  }
  auto base = is_generating_set(*c, g, cfg.limits);
  if (!base.generates) {
    throw PreconditionRefused("the set does not generate the base category (witness " +
                              c->name(base.witness->first) + ", " + c->name(base.witness->second) + ")");
  }
  if (!c->has_braiding()) {
    throw MissingStructure("--lift needs a braided category");
  }
  std::vector<std::pair<std::string, Construction>> targets;
  targets.emplace_back("center", center(c, cfg.limits));
  targets.emplace_back("weak_center", weak_center(c, cfg.limits));
  for (Obj x : c->objects()) {
    targets.emplace_back("centralizer_object:" + c->name(x), centralizer_of_object(c, x, cfg.limits));
  }
  for (Mor h : c->morphisms()) {
    targets.emplace_back("centralizer_morphism:" + c->name(h), centralizer_of_morphism(c, h, cfg.limits));
  }
  json results = json::array();
  bool all = true;
  for (const auto& [label, k] : targets) {
    const Functor phi = braided_embedding(k);
    std::vector<Obj> lifted;
    for (Obj x : g) {
      lifted.push_back(phi(x));
    }
    auto r = is_generating_set(*k.category, lifted, cfg.limits);
    all = all && r.generates;
    results.push_back({{"target", label},
                       {"lifted", names(*k.category, lifted)},
                       {"generates", r.generates},
                       {"witness", witness_json(*k.category, r)}});
  }
  json out = {{"command", "generators"}, {"set", names(*c, g)}, {"lift", results}, {"all_generate", all}};
  return {out, all ? kExitOk : kExitViolation};
}

Outcome quotients_cmd(const RunConfig& cfg) {
  CatPtr c = load_input(cfg.input);
  if (cfg.object.empty()) {
    throw MalformedInput("quotients needs --of A");
  }
  json classes = json::array();
  for (const auto& q : quotients_of(*c, c->object(cfg.object), cfg.limits)) {
    classes.push_back({{"representative", c->name(q.representative)}, {"members", names(*c, q.members)}});
  }
  return {{{"command", "quotients"}, {"of", cfg.object}, {"classes", classes}}};
}

json permutation_json(const braid::Permutation& p) {
  json out = json::array();
  for (int x : p) {
    out.push_back(x + 1);
  }
  return out;
}

json nf_json(const braid::BraidWord& w) {
  auto nf = braid::normal_form(w);
  json factors = json::array();
  for (const auto& f : nf.factors) {
    factors.push_back(permutation_json(f));
  }
  return {{"word", braid::to_string(w)},
          {"normal_form", braid::to_string(nf)},
          {"infimum", nf.infimum},
          {"factors", factors},
          {"permutation", permutation_json(braid::permutation_of(w))}};
}

Outcome braid_cmd(const RunConfig& cfg) {
  const std::string& sub = cfg.subcommand;
  json out = {{"command", "braid " + sub}};
  auto need_words = [&](std::size_t n) {
    if (cfg.words.size() != n) {
      throw MalformedInput("braid " + sub + " takes " + std::to_string(n) + " word(s)");
    }
    if (cfg.strands < 1) {
      throw MalformedInput("--strands must be at least 1");
    }
  };
  if (sub == "nf") {
    need_words(1);
    out["strands"] = cfg.strands;
    out.update(nf_json(braid::parse_word(cfg.words[0], cfg.strands)));
    return {out};
  }
  if (sub == "equal") {
    need_words(2);
    auto a = braid::parse_word(cfg.words[0], cfg.strands);
    auto b = braid::parse_word(cfg.words[1], cfg.strands);
    out["strands"] = cfg.strands;
    out["equal"] = braid::braids_equal(a, b);
    out["left"] = nf_json(a);
    out["right"] = nf_json(b);
    return {out};
  }
  if (sub == "braiding") {
    if (cfg.m < 0 || cfg.n < 0) {
      throw MalformedInput("--m and --n must be non-negative");
    }
    auto w = braid::braiding_word(cfg.m, cfg.n);
    out["m"] = cfg.m;
    out["n"] = cfg.n;
    out["strands"] = w.strands;
    out.update(nf_json(w));
    return {out};
  }
  if (sub == "theorems") {
    json checks = json::array();
    bool all = true;
    for (const auto& t : braid::braid_theorem_checks(cfg.seed)) {
      all = all && t.passed;
      checks.push_back({{"id", t.id}, {"claim", t.claim}, {"passed", t.passed}, {"detail", t.detail}});
    }
    out["seed"] = cfg.seed;
    out["checks"] = checks;
    out["passed"] = all;
    return {out, all ? kExitOk : kExitViolation};
  }
  if (sub == "export") {
    return {category_to_json(*braid::braid_as_finmoncat(cfg.max_n, cfg.max_letters))};
  }
  if (sub == "cofree") {
    auto o = cofree_over(braid::braid_as_finmoncat(cfg.max_n, cfg.max_letters), cfg.object, cfg.limits);
    o.report["command"] = "braid cofree";
    return o;
  }
  throw MalformedInput("unknown braid subcommand '" + sub + "'");
}

Outcome catalog_cmd(const RunConfig& cfg) {
  if (cfg.input.empty()) {
    return {{{"command", "catalog"}, {"entries", catalog::names()}}};
  }
  return {category_to_json(*catalog::by_name(cfg.input))};
}

void render_text(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [](const json& v) {
    if (!v.is_array()) {
      return false;
    }
    for (const auto& x : v) {
      if (x.is_structured()) {
        return false;
      }
    }
    return true;
  };
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) {
      if (v.is_structured() && !flat(v) && !v.empty()) {
        out << pad << key << ":\n";
        render_text(v, out, indent + 1);
      } else if (flat(v) && v.empty()) {
        out << pad << key << ": (none)\n";
      } else if (flat(v)) {
        out << pad << key << ": ";
        for (std::size_t i = 0; i < v.size(); ++i) {
          out << (i ? ", " : "") << scalar(v[i]);
        }
        out << "\n";
      } else {
        out << pad << key << ": " << scalar(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        out << pad << "-\n";
        render_text(v, out, indent + 1);
      } else {
        out << pad << "- " << scalar(v) << "\n";
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

void emit(const json& report, Format format, std::ostream& out) {
  if (format == Format::Json) {
    out << report.dump(2) << "\n";
  } else {
    render_text(report, out, 0);
  }
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const UnknownId*>(&e)) return "unknown_id";
  if (dynamic_cast<const MalformedInput*>(&e)) return "malformed_input";
  if (dynamic_cast<const NotComposable*>(&e)) return "not_composable";
  if (dynamic_cast<const GuardrailExceeded*>(&e)) return "guardrail";
  if (dynamic_cast<const PartialTable*>(&e)) return "partial_table";
  if (dynamic_cast<const MissingStructure*>(&e)) return "missing_structure";
  if (dynamic_cast<const PreconditionRefused*>(&e)) return "precondition_refused";
  if (dynamic_cast<const ColimitInconsistency*>(&e)) return "colimit_inconsistency";
  if (dynamic_cast<const TheoremViolation*>(&e)) return "theorem_violation";
  return "error";
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, std::function<Outcome(const RunConfig&)>> commands = {
      {"validate", validate_cmd},
      {"center", [](const RunConfig& c) { return construction_cmd(c, "center"); }},
      {"weak-center", [](const RunConfig& c) { return construction_cmd(c, "weak"); }},
      {"centralizer", [](const RunConfig& c) { return construction_cmd(c, "centralizer"); }},
      {"colimit", colimit_cmd},
      {"comonoids", comonoids_cmd},
      {"cofree", cofree_cmd},
      {"generators", generators_cmd},
      {"quotients", quotients_cmd},
      {"braid", braid_cmd},
      {"catalog", catalog_cmd},
  };
  auto it = commands.find(cfg.command);
  if (it == commands.end()) {
    err << "error: unknown command '" << cfg.command << "'\n";
    return kExitUsage;
  }
  try {
    Outcome o = it->second(cfg);
    emit(o.report, cfg.format, out);
    return o.exit;
  } catch (const std::exception& e) {
    const std::string kind = error_kind(e);
    const bool violation = kind == "theorem_violation" || kind == "colimit_inconsistency";
    err << "error (" << kind << "): " << e.what() << "\n";
    json report = {{"command", cfg.command}, {"error", {{"kind", kind}, {"message", e.what()}}}};
    if (!cfg.subcommand.empty()) {
      report["command"] = cfg.command + " " + cfg.subcommand;
    }
    emit(report, cfg.format, out);
    return violation ? kExitViolation : kExitUsage;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"zcat: centers, centralizers, colimits, comonoids and braids on finite monoidal categories"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");
  app.add_option("--max-objects", cfg.limits.max_objects, "Object bound for enumerations");
  app.add_option("--max-morphisms", cfg.limits.max_morphisms, "Morphism bound for enumerations");

  auto file_cmd = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", cfg.input, "Category file or catalog:NAME")->required();
    return sub;
  };
  file_cmd("validate", "Check every category, monoidal and braiding axiom");
  file_cmd("center", "Build the center Z(C)");
  file_cmd("weak-center", "Build the weak center");
  auto* cz = file_cmd("centralizer", "Build Z_X(C) or Z_h(C)");
  auto* cz_obj = cz->add_option("--object", cfg.object, "Fixed object X");
  auto* cz_mor = cz->add_option("--morphism", cfg.morphism, "Fixed morphism h");
  cz_obj->excludes(cz_mor);
  auto* col = file_cmd("colimit", "Colimit of a diagram, optionally inside a construction");
  col->add_option("--diagram", cfg.diagram, "Diagram file")->required();
  col->add_option("--in", cfg.in, "Construction")->check(CLI::IsMember({"center", "zx", "zh", "weak"}));
  col->add_option("--param", cfg.param, "Object (zx) or morphism (zh)");
  file_cmd("comonoids", "Enumerate comonoids and their category");
  file_cmd("cofree", "Search for the cofree comonoid over an object")
      ->add_option("--over", cfg.object, "Object V")
      ->required();
  auto* gen = file_cmd("generators", "Check or lift a generating set");
  gen->add_option("--check", cfg.members, "Members of the set");
  gen->add_flag("--lift", cfg.lift, "Lift along the braided embeddings and re-check");
  file_cmd("quotients", "Epis out of an object up to isomorphism")
      ->add_option("--of", cfg.object, "Object A")
      ->required();

  auto* br = app.add_subcommand("braid", "Braid words, normal forms and theorem checks");
  br->require_subcommand(1);
  br->fallthrough();
  auto* nf = br->add_subcommand("nf", "Garside normal form");
  nf->add_option("word", cfg.words, "Word such as \"s1 S2 s1\"")->required();
  nf->add_option("--strands", cfg.strands, "Strand count")->required();
  auto* eq = br->add_subcommand("equal", "Decide equality of two words");
  eq->add_option("words", cfg.words, "Two words")->required()->expected(2);
  eq->add_option("--strands", cfg.strands, "Strand count")->required();
  auto* bb = br->add_subcommand("braiding", "The braiding c_{m,n}");
  bb->add_option("--m", cfg.m)->required();
  bb->add_option("--n", cfg.n)->required();
  br->add_subcommand("theorems", "Run the braid category checks");
  auto* ex = br->add_subcommand("export", "Write a finite window of B as a category file");
  ex->add_option("--max-n", cfg.max_n, "Largest object");
  ex->add_option("--max-letters", cfg.max_letters, "Longest word");
  auto* bc = br->add_subcommand("cofree", "Cofree search in a finite window of B");
  bc->add_option("--over", cfg.object, "Object n")->required();
  bc->add_option("--max-n", cfg.max_n, "Largest object");
  bc->add_option("--max-letters", cfg.max_letters, "Longest word");

  app.add_subcommand("catalog", "List built-in categories or print one")
      ->add_option("name", cfg.input, "Entry name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  cfg.format = format == "text" ? Format::Text : Format::Json;
  for (auto* sub : app.get_subcommands()) {
    cfg.command = sub->get_name();
    for (auto* s2 : sub->get_subcommands()) {
      cfg.subcommand = s2->get_name();
    }
  }
  return run(cfg, out, err);
}

}  // namespace zcat::cli
