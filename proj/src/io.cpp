#include "zcat/io.hpp"

#include <fstream>
#include <set>

namespace zcat {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& doc, const std::set<std::string>& allowed,
                         const std::string& where) {
  if (!doc.is_object()) {
    throw MalformedInput(where + " must be a JSON object");
  }
  for (const auto& item : doc.items()) {
    if (allowed.count(item.key()) == 0) {
      throw MalformedInput("unknown key '" + item.key() + "' in " + where);
    }
  }
}

std::string str(const json& v, const std::string& where) {
  if (!v.is_string()) {
    throw MalformedInput(where + " must be a string");
  }
  return v.get<std::string>();
}

const json& array(const json& doc, const char* key) {
  const json& v = doc.at(key);
  if (!v.is_array()) {
    throw MalformedInput(std::string("'") + key + "' must be an array");
  }
  return v;
}

// [a, b, r] triples.
template <class Fn>
void triples(const json& doc, const char* key, Fn&& fn) {
  if (!doc.contains(key)) {
    return;
  }
  for (const auto& row : array(doc, key)) {
    if (!row.is_array() || row.size() != 3) {
      throw MalformedInput(std::string("entries of '") + key + "' must be [x, y, result]");
    }
    fn(str(row[0], key), str(row[1], key), str(row[2], key));
  }
}

void read_arrows(const json& list, CategoryBuilder& builder, const char* key) {
  for (const auto& m : list) {
    reject_unknown_keys(m, {"name", "dom", "cod"}, std::string("an entry of '") + key + "'");
    if (!m.contains("name") || !m.contains("dom") || !m.contains("cod")) {
      throw MalformedInput(std::string("entries of '") + key + "' need name, dom and cod");
    }
    builder.morphism(str(m["name"], "name"), str(m["dom"], "dom"), str(m["cod"], "cod"));
  }
}

}  // namespace

CatPtr category_from_json(const json& doc) {
  reject_unknown_keys(doc,
                      {"objects", "morphisms", "identities", "composition", "unit",
                       "tensor_objects", "tensor_morphisms", "braiding", "partial", "provenance"},
                      "category file");
  if (!doc.contains("objects")) {
    throw MalformedInput("category file lacks 'objects'");
  }
  CategoryBuilder builder;
  for (const auto& o : array(doc, "objects")) {
    builder.object(str(o, "object identifier"));
  }
  if (doc.contains("morphisms")) {
    read_arrows(array(doc, "morphisms"), builder, "morphisms");
  }
  if (doc.contains("identities")) {
    const json& ids = doc["identities"];
    if (!ids.is_object()) {
      throw MalformedInput("'identities' must map objects to morphisms");
    }
    for (const auto& item : ids.items()) {
      builder.identity(item.key(), str(item.value(), "identity"));
    }
  }
  triples(doc, "composition", [&](auto g, auto f, auto r) { builder.compose(g, f, r); });
  if (doc.contains("unit")) {
    builder.unit(str(doc["unit"], "unit"));
  }
  triples(doc, "tensor_objects", [&](auto a, auto b, auto r) { builder.tensor(a, b, r); });
  triples(doc, "tensor_morphisms",
          [&](auto f, auto g, auto r) { builder.tensor_morphisms(f, g, r); });
  triples(doc, "braiding", [&](auto a, auto b, auto m) { builder.braiding(a, b, m); });
  if (doc.contains("partial")) {
    if (!doc["partial"].is_boolean()) {
      throw MalformedInput("'partial' must be a boolean");
    }
    builder.partial(doc["partial"].get<bool>());
  }
  if (doc.contains("provenance")) {
    builder.provenance(doc["provenance"]);
  }
  return builder.build();
}

json category_to_json(const FinMonCat& cat) {
  json doc;
  doc["objects"] = json::array();
  json identities = json::object();
  for (Obj a : cat.objects()) {
    doc["objects"].push_back(cat.name(a));
    identities[cat.name(a)] = cat.name(cat.identity(a));
  }
  doc["identities"] = identities;
  doc["morphisms"] = json::array();
  for (Mor f : cat.morphisms()) {
    doc["morphisms"].push_back(
        {{"name", cat.name(f)}, {"dom", cat.name(cat.dom(f))}, {"cod", cat.name(cat.cod(f))}});
  }
  json composition = json::array();
  for (Mor f : cat.morphisms()) {
    for (Obj c : cat.objects()) {
      for (Mor g : cat.hom(cat.cod(f), c)) {
        if (auto gf = cat.try_compose(g, f)) {
          composition.push_back({cat.name(g), cat.name(f), cat.name(*gf)});
        }
      }
    }
  }
  doc["composition"] = composition;
  if (cat.is_monoidal()) {
    doc["unit"] = cat.name(cat.unit());
    json tobj = json::array();
    for (Obj a : cat.objects()) {
      for (Obj b : cat.objects()) {
        if (auto ab = cat.try_tensor(a, b)) {
          tobj.push_back({cat.name(a), cat.name(b), cat.name(*ab)});
        }
      }
    }
    doc["tensor_objects"] = tobj;
    json tmor = json::array();
    for (Mor f : cat.morphisms()) {
      for (Mor g : cat.morphisms()) {
        if (auto fg = cat.try_tensor(f, g)) {
          tmor.push_back({cat.name(f), cat.name(g), cat.name(*fg)});
        }
      }
    }
    doc["tensor_morphisms"] = tmor;
    if (cat.has_braiding()) {
      json br = json::array();
      for (Obj a : cat.objects()) {
        for (Obj b : cat.objects()) {
          if (auto psi = cat.try_braiding(a, b)) {
            br.push_back({cat.name(a), cat.name(b), cat.name(*psi)});
          }
        }
      }
      doc["braiding"] = br;
    }
  }
  if (cat.is_partial()) {
    doc["partial"] = true;
  }
  if (!cat.provenance().is_null()) {
    doc["provenance"] = cat.provenance();
  }
  return doc;
}

Diagram diagram_from_json(const json& doc, const CatPtr& target) {
  reject_unknown_keys(doc, {"shape", "assignment"}, "diagram file");
  if (!doc.contains("shape") || !doc.contains("assignment")) {
    throw MalformedInput("diagram file needs 'shape' and 'assignment'");
  }
  const json& shape_doc = doc["shape"];
  reject_unknown_keys(shape_doc, {"objects", "arrows", "composition"}, "diagram shape");
  if (!shape_doc.contains("objects")) {
    throw MalformedInput("diagram shape lacks 'objects'");
  }
  CategoryBuilder builder;
  for (const auto& o : array(shape_doc, "objects")) {
    builder.object(str(o, "shape object"));
  }
  if (shape_doc.contains("arrows")) {
    read_arrows(array(shape_doc, "arrows"), builder, "arrows");
  }
  triples(shape_doc, "composition", [&](auto g, auto f, auto r) { builder.compose(g, f, r); });
  CatPtr shape = builder.build();

  const json& assign = doc["assignment"];
  reject_unknown_keys(assign, {"objects", "arrows"}, "diagram assignment");
  Functor f{shape, target, std::vector<Obj>(shape->num_objects()),
            std::vector<Mor>(shape->num_morphisms())};
  if (!assign.contains("objects") || !assign["objects"].is_object()) {
    throw MalformedInput("diagram assignment needs an 'objects' map");
  }
  for (const auto& item : assign["objects"].items()) {
    f.object_map[shape->object(item.key()).index] = target->object(str(item.value(), "object"));
  }
  for (Obj a : shape->objects()) {
    if (!f.object_map[a.index].valid()) {
      throw MalformedInput("shape object '" + shape->name(a) + "' is not assigned");
    }
    f.morphism_map[shape->identity(a).index] = target->identity(f.object_map[a.index]);
  }
  if (assign.contains("arrows")) {
    if (!assign["arrows"].is_object()) {
      throw MalformedInput("'arrows' of a diagram assignment must be a map");
    }
    for (const auto& item : assign["arrows"].items()) {
      f.morphism_map[shape->arrow(item.key()).index] = target->arrow(str(item.value(), "arrow"));
    }
  }
  for (Mor m : shape->morphisms()) {
    if (!f.morphism_map[m.index].valid()) {
      throw MalformedInput("shape arrow '" + shape->name(m) + "' is not assigned");
    }
  }
  if (shape->num_objects() > Limits{}.max_shape_objects) {
    throw GuardrailExceeded("diagram shape has " + std::to_string(shape->num_objects()) +
                            " objects, above the bound of " +
                            std::to_string(Limits{}.max_shape_objects));
  }
  return make_diagram(std::move(f));
}

json diagram_to_json(const Diagram& diagram) {
  const FinMonCat& shape = *diagram.shape;
  const FinMonCat& target = *diagram.target();
  json shape_doc;
  shape_doc["objects"] = json::array();
  for (Obj a : shape.objects()) {
    shape_doc["objects"].push_back(shape.name(a));
  }
  shape_doc["arrows"] = json::array();
  shape_doc["composition"] = json::array();
  json objs = json::object();
  json arrows = json::object();
  for (Obj a : shape.objects()) {
    objs[shape.name(a)] = target.name(diagram.assignment(a));
  }
  for (Mor m : shape.morphisms()) {
    if (shape.is_identity(m)) {
      continue;
    }
    shape_doc["arrows"].push_back(
        {{"name", shape.name(m)}, {"dom", shape.name(shape.dom(m))}, {"cod", shape.name(shape.cod(m))}});
    arrows[shape.name(m)] = target.name(diagram.assignment(m));
  }
  for (Mor f : shape.morphisms()) {
    for (Obj c : shape.objects()) {
      for (Mor g : shape.hom(shape.cod(f), c)) {
        if (shape.is_identity(f) || shape.is_identity(g)) {
          continue;
        }
        shape_doc["composition"].push_back(
            {shape.name(g), shape.name(f), shape.name(shape.compose(g, f))});
      }
    }
  }
  return {{"shape", shape_doc}, {"assignment", {{"objects", objs}, {"arrows", arrows}}}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw MalformedInput("cannot open '" + path.string() + "'");
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw MalformedInput("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

CatPtr load_category(const std::filesystem::path& path) {
  return category_from_json(read_json_file(path));
}

}  // namespace zcat
