#include "zcat/fincat.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace zcat {

namespace {

std::size_t env_size(const char* var, std::size_t fallback) {
  const char* raw = std::getenv(var);
  if (raw == nullptr || *raw == '\0') {
    return fallback;
  }
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') {
    throw MalformedInput(std::string(var) + " is not a non-negative integer: " + raw);
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

Limits Limits::from_env() {
  Limits limits;
  limits.max_objects = env_size("ZCAT_MAX_OBJECTS", limits.max_objects);
  limits.max_morphisms = env_size("ZCAT_MAX_MORPHISMS", limits.max_morphisms);
  return limits;
}

void require_within(const FinMonCat& cat, const Limits& limits, std::string_view operation) {
  if (cat.num_objects() > limits.max_objects || cat.num_morphisms() > limits.max_morphisms) {
    std::ostringstream msg;
    msg << operation << ": category has " << cat.num_objects() << " objects and "
        << cat.num_morphisms() << " morphisms, above the bound of " << limits.max_objects
        << " objects / " << limits.max_morphisms
        << " morphisms (raise with --max-objects/--max-morphisms)";
    throw GuardrailExceeded(msg.str());
  }
}

// ---------------------------------------------------------------------------
// FinMonCat

std::optional<Obj> FinMonCat::find_object(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) {
    return std::nullopt;
  }
  return Obj(it->second);
}

std::optional<Mor> FinMonCat::find_morphism(std::string_view name) const {
  auto it = morphism_index_.find(std::string(name));
  if (it == morphism_index_.end()) {
    return std::nullopt;
  }
  return Mor(it->second);
}

Obj FinMonCat::object(std::string_view name) const {
  if (auto a = find_object(name)) {
    return *a;
  }
  throw UnknownId("object '" + std::string(name) + "'");
}

Mor FinMonCat::arrow(std::string_view name) const {
  if (auto f = find_morphism(name)) {
    return *f;
  }
  throw UnknownId("morphism '" + std::string(name) + "'");
}

std::span<const Mor> FinMonCat::hom(Obj a, Obj b) const {
  return homs_.at(static_cast<std::size_t>(a.index) * objects_.size() + b.index);
}

std::optional<Mor> FinMonCat::try_compose(Mor g, Mor f) const {
  if (cod(f) != dom(g)) {
    throw NotComposable("cannot compose " + name(g) + " after " + name(f) + ": cod(" + name(f) +
                        ") = " + name(cod(f)) + " but dom(" + name(g) + ") = " + name(dom(g)));
  }
  auto it = composition_.find(key(g.index, f.index));
  if (it == composition_.end()) {
    return std::nullopt;
  }
  return it->second;
}

Mor FinMonCat::compose(Mor g, Mor f) const {
  if (auto r = try_compose(g, f)) {
    return *r;
  }
  throw PartialTable("composite " + name(g) + " . " + name(f) + " is undefined in this table");
}

Obj FinMonCat::unit() const {
  if (!unit_.valid()) {
    throw MissingStructure("category has no monoidal structure");
  }
  return unit_;
}

std::optional<Obj> FinMonCat::try_tensor(Obj a, Obj b) const {
  if (!is_monoidal()) {
    throw MissingStructure("category has no monoidal structure");
  }
  Obj r = tensor_obj_.at(static_cast<std::size_t>(a.index) * objects_.size() + b.index);
  if (!r.valid()) {
    return std::nullopt;
  }
  return r;
}

Obj FinMonCat::tensor(Obj a, Obj b) const {
  if (auto r = try_tensor(a, b)) {
    return *r;
  }
  throw PartialTable("tensor " + name(a) + " (x) " + name(b) + " is undefined in this table");
}

std::optional<Mor> FinMonCat::try_tensor(Mor f, Mor g) const {
  if (!is_monoidal()) {
    throw MissingStructure("category has no monoidal structure");
  }
  auto it = tensor_mor_.find(key(f.index, g.index));
  if (it == tensor_mor_.end()) {
    return std::nullopt;
  }
  return it->second;
}

Mor FinMonCat::tensor(Mor f, Mor g) const {
  if (auto r = try_tensor(f, g)) {
    return *r;
  }
  throw PartialTable("tensor " + name(f) + " (x) " + name(g) + " is undefined in this table");
}

std::optional<Mor> FinMonCat::try_braiding(Obj a, Obj b) const {
  if (!has_braiding()) {
    throw MissingStructure("category carries no braiding");
  }
  Mor m = braiding_.at(static_cast<std::size_t>(a.index) * objects_.size() + b.index);
  if (!m.valid()) {
    return std::nullopt;
  }
  return m;
}

Mor FinMonCat::braiding(Obj a, Obj b) const {
  if (auto m = try_braiding(a, b)) {
    return *m;
  }
  throw PartialTable("braiding at (" + name(a) + ", " + name(b) + ") is undefined in this table");
}

std::vector<Obj> FinMonCat::objects() const {
  std::vector<Obj> out;
  out.reserve(objects_.size());
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    out.emplace_back(i);
  }
  return out;
}

std::vector<Mor> FinMonCat::morphisms() const {
  std::vector<Mor> out;
  out.reserve(morphisms_.size());
  for (std::size_t i = 0; i < morphisms_.size(); ++i) {
    out.emplace_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// CategoryBuilder

CategoryBuilder& CategoryBuilder::object(std::string name) {
  objects_.push_back(std::move(name));
  return *this;
}

CategoryBuilder& CategoryBuilder::morphism(std::string name, std::string dom, std::string cod) {
  morphisms_.push_back({std::move(name), std::move(dom), std::move(cod)});
  return *this;
}

CategoryBuilder& CategoryBuilder::identity(std::string obj, std::string mor) {
  identities_.emplace_back(std::move(obj), std::move(mor));
  return *this;
}

CategoryBuilder& CategoryBuilder::compose(std::string g, std::string f, std::string result) {
  composition_.push_back({std::move(g), std::move(f), std::move(result)});
  return *this;
}

CategoryBuilder& CategoryBuilder::unit(std::string obj) {
  unit_ = std::move(obj);
  return *this;
}

CategoryBuilder& CategoryBuilder::tensor(std::string a, std::string b, std::string result) {
  tensor_obj_.push_back({std::move(a), std::move(b), std::move(result)});
  return *this;
}

CategoryBuilder& CategoryBuilder::tensor_morphisms(std::string f, std::string g,
                                                   std::string result) {
  tensor_mor_.push_back({std::move(f), std::move(g), std::move(result)});
  return *this;
}

CategoryBuilder& CategoryBuilder::braiding(std::string a, std::string b, std::string mor) {
  braiding_.push_back({std::move(a), std::move(b), std::move(mor)});
  return *this;
}

CategoryBuilder& CategoryBuilder::partial(bool value) {
  partial_ = value;
  return *this;
}

CategoryBuilder& CategoryBuilder::provenance(nlohmann::json value) {
  provenance_ = std::move(value);
  return *this;
}

CatPtr CategoryBuilder::build() const {
  auto cat = std::make_shared<FinMonCat>();

  std::vector<std::string> objects = objects_;
  std::sort(objects.begin(), objects.end());
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (objects[i].empty()) {
      throw MalformedInput("object identifiers must be nonempty");
    }
    if (i > 0 && objects[i] == objects[i - 1]) {
      throw MalformedInput("duplicate object identifier '" + objects[i] + "'");
    }
    cat->object_index_.emplace(objects[i], static_cast<std::uint32_t>(i));
  }
  cat->objects_ = std::move(objects);
  const std::size_t n = cat->objects_.size();

  auto obj_of = [&](const std::string& name) -> Obj {
    auto it = cat->object_index_.find(name);
    if (it == cat->object_index_.end()) {
      throw UnknownId("object '" + name + "'");
    }
    return Obj(it->second);
  };

  // Morphisms, with generated identities where none is declared.
  std::map<std::string, std::pair<Obj, Obj>> arrows;
  for (const auto& m : morphisms_) {
    if (m.a.empty()) {
      throw MalformedInput("morphism identifiers must be nonempty");
    }
    if (!arrows.emplace(m.a, std::make_pair(obj_of(m.b), obj_of(m.r))).second) {
      throw MalformedInput("duplicate morphism identifier '" + m.a + "'");
    }
  }
  std::vector<std::string> identity_names(n);
  for (const auto& [obj, mor] : identities_) {
    Obj a = obj_of(obj);
    if (!identity_names[a.index].empty() && identity_names[a.index] != mor) {
      throw MalformedInput("object '" + obj + "' has two identities");
    }
    identity_names[a.index] = mor;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (identity_names[i].empty()) {
      identity_names[i] = "id_" + cat->objects_[i];
    }
    auto it = arrows.find(identity_names[i]);
    if (it == arrows.end()) {
      arrows.emplace(identity_names[i], std::make_pair(Obj(i), Obj(i)));
    } else if (it->second.first != Obj(i) || it->second.second != Obj(i)) {
      throw MalformedInput("identity '" + identity_names[i] + "' is not an endomorphism of '" +
                           cat->objects_[i] + "'");
    }
  }
  cat->morphisms_.reserve(arrows.size());
  for (const auto& [name, ends] : arrows) {
    cat->morphism_index_.emplace(name, static_cast<std::uint32_t>(cat->morphisms_.size()));
    cat->morphisms_.push_back({name, ends.first, ends.second});
  }
  auto mor_of = [&](const std::string& name) -> Mor {
    auto it = cat->morphism_index_.find(name);
    if (it == cat->morphism_index_.end()) {
      throw UnknownId("morphism '" + name + "'");
    }
    return Mor(it->second);
  };
  cat->identities_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    cat->identities_[i] = mor_of(identity_names[i]);
  }
  cat->homs_.assign(n * n, {});
  for (std::size_t i = 0; i < cat->morphisms_.size(); ++i) {
    const auto& m = cat->morphisms_[i];
    cat->homs_[static_cast<std::size_t>(m.dom.index) * n + m.cod.index].emplace_back(i);
  }

  auto insert = [](auto& table, std::uint64_t k, auto value, const std::string& what) {
    auto [it, fresh] = table.emplace(k, value);
    if (!fresh && it->second != value) {
      throw MalformedInput("conflicting entries for " + what);
    }
  };

  for (const auto& e : composition_) {
    Mor g = mor_of(e.a);
    Mor f = mor_of(e.b);
    insert(cat->composition_, FinMonCat::key(g.index, f.index), mor_of(e.r),
           "composition(" + e.a + ", " + e.b + ")");
  }
  for (std::size_t i = 0; i < cat->morphisms_.size(); ++i) {
    const auto& m = cat->morphisms_[i];
    const Mor f(i);
    cat->composition_.emplace(FinMonCat::key(cat->identities_[m.cod.index].index, f.index), f);
    cat->composition_.emplace(FinMonCat::key(f.index, cat->identities_[m.dom.index].index), f);
  }

  if (unit_) {
    cat->unit_ = obj_of(*unit_);
    cat->tensor_obj_.assign(n * n, Obj());
    for (const auto& e : tensor_obj_) {
      Obj a = obj_of(e.a);
      Obj b = obj_of(e.b);
      Obj r = obj_of(e.r);
      Obj& slot = cat->tensor_obj_[static_cast<std::size_t>(a.index) * n + b.index];
      if (slot.valid() && slot != r) {
        throw MalformedInput("conflicting entries for tensor(" + e.a + ", " + e.b + ")");
      }
      slot = r;
    }
    for (const auto& e : tensor_mor_) {
      Mor f = mor_of(e.a);
      Mor g = mor_of(e.b);
      insert(cat->tensor_mor_, FinMonCat::key(f.index, g.index), mor_of(e.r),
             "tensor_morphisms(" + e.a + ", " + e.b + ")");
    }
    // id_A (x) id_B = id_{A (x) B}, and strict-unit whiskering by id_I.
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Obj ab = cat->tensor_obj_[a * n + b];
        if (ab.valid()) {
          cat->tensor_mor_.emplace(
              FinMonCat::key(cat->identities_[a].index, cat->identities_[b].index),
              cat->identities_[ab.index]);
        }
      }
    }
    const std::size_t u = cat->unit_.index;
    const Mor id_unit = cat->identities_[u];
    for (std::size_t i = 0; i < cat->morphisms_.size(); ++i) {
      const auto& m = cat->morphisms_[i];
      const Mor f(i);
      auto left = [&](Obj x) { return cat->tensor_obj_[u * n + x.index]; };
      auto right = [&](Obj x) { return cat->tensor_obj_[static_cast<std::size_t>(x.index) * n + u]; };
      if (left(m.dom) == m.dom && left(m.cod) == m.cod) {
        cat->tensor_mor_.emplace(FinMonCat::key(id_unit.index, f.index), f);
      }
      if (right(m.dom) == m.dom && right(m.cod) == m.cod) {
        cat->tensor_mor_.emplace(FinMonCat::key(f.index, id_unit.index), f);
      }
    }
  } else if (!tensor_obj_.empty() || !tensor_mor_.empty()) {
    throw MalformedInput("tensor tables given without a unit object");
  }

  if (!braiding_.empty()) {
    if (!unit_) {
      throw MalformedInput("braiding given without monoidal structure");
    }
    cat->braiding_.assign(n * n, Mor());
    for (const auto& e : braiding_) {
      Obj a = obj_of(e.a);
      Obj b = obj_of(e.b);
      Mor& slot = cat->braiding_[static_cast<std::size_t>(a.index) * n + b.index];
      Mor m = mor_of(e.r);
      if (slot.valid() && slot != m) {
        throw MalformedInput("conflicting entries for braiding(" + e.a + ", " + e.b + ")");
      }
      slot = m;
    }
  }

  cat->partial_ = partial_;
  cat->provenance_ = provenance_;
  return cat;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

struct Composable {
  Mor g, f, gf;
};

}  // namespace

ValidationReport validate_category(const FinMonCat& cat, const Limits& limits) {
  require_within(cat, limits, "validate");
  ValidationReport report;
  const std::size_t n = cat.num_objects();
  const auto& nm = [&](auto x) -> const std::string& { return cat.name(x); };
  std::size_t undefined = 0;

  // Entries for pairs that are not composable, and wrongly typed results.
  std::vector<std::pair<std::uint64_t, Mor>> entries(cat.composition_.begin(),
                                                     cat.composition_.end());
  std::sort(entries.begin(), entries.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [k, r] : entries) {
    const Mor g(static_cast<std::uint32_t>(k >> 32));
    const Mor f(static_cast<std::uint32_t>(k & 0xffffffffu));
    if (cat.cod(f) != cat.dom(g)) {
      report.add("composition-typing", "composition(" + nm(g) + ", " + nm(f) +
                                           ") listed for a non-composable pair");
    } else if (cat.dom(r) != cat.dom(f) || cat.cod(r) != cat.cod(g)) {
      report.add("composition-typing",
                 "composition(" + nm(g) + ", " + nm(f) + ") = " + nm(r) + " : " +
                     nm(cat.dom(r)) + " -> " + nm(cat.cod(r)) + ", expected " +
                     nm(cat.dom(f)) + " -> " + nm(cat.cod(g)));
    }
  }

  std::vector<Composable> pairs;
  for (Mor f : cat.morphisms()) {
    for (std::size_t c = 0; c < n; ++c) {
      for (Mor g : cat.hom(cat.cod(f), Obj(c))) {
        auto gf = cat.try_compose(g, f);
        if (!gf) {
          if (cat.is_partial()) {
            ++undefined;
          } else {
            report.add("totality", "composition(" + nm(g) + ", " + nm(f) + ") is missing");
          }
          continue;
        }
        pairs.push_back({g, f, *gf});
      }
    }
  }

  for (Obj a : cat.objects()) {
    const Mor id = cat.identity(a);
    for (std::size_t c = 0; c < n; ++c) {
      for (Mor f : cat.hom(a, Obj(c))) {
        if (auto r = cat.try_compose(f, id); r && *r != f) {
          report.add("identity-law", nm(f) + " . " + nm(id) + " = " + nm(*r));
        }
      }
      for (Mor f : cat.hom(Obj(c), a)) {
        if (auto r = cat.try_compose(id, f); r && *r != f) {
          report.add("identity-law", nm(id) + " . " + nm(f) + " = " + nm(*r));
        }
      }
    }
  }

  // Associativity: h(gf) = (hg)f over all composable triples.
  for (const auto& p : pairs) {
    if (cat.dom(p.gf) != cat.dom(p.f) || cat.cod(p.gf) != cat.cod(p.g)) {
      continue;  // already reported as a typing violation
    }
    for (std::size_t c = 0; c < n; ++c) {
      for (Mor h : cat.hom(cat.cod(p.g), Obj(c))) {
        auto hg = cat.try_compose(h, p.g);
        if (!hg || cat.dom(*hg) != cat.dom(p.g)) {
          continue;
        }
        auto lhs = cat.try_compose(h, p.gf);
        auto rhs = cat.try_compose(*hg, p.f);
        if (lhs && rhs && *lhs != *rhs) {
          report.add("associativity", "(" + nm(h) + ", " + nm(p.g) + ", " + nm(p.f) + "): " +
                                          nm(*lhs) + " != " + nm(*rhs));
        }
      }
    }
  }

  if (cat.is_monoidal()) {
    const Obj unit = cat.unit();
    for (Obj a : cat.objects()) {
      for (Obj b : cat.objects()) {
        if (!cat.try_tensor(a, b)) {
          if (cat.is_partial()) {
            ++undefined;
          } else {
            report.add("totality", "tensor(" + nm(a) + ", " + nm(b) + ") is missing");
          }
        }
      }
      auto left = cat.try_tensor(unit, a);
      auto right = cat.try_tensor(a, unit);
      if ((left && *left != a) || (right && *right != a)) {
        report.add("tensor-unit", "I (x) " + nm(a) + " or " + nm(a) + " (x) I differs from " +
                                      nm(a));
      }
    }
    for (Obj a : cat.objects()) {
      for (Obj b : cat.objects()) {
        auto ab = cat.try_tensor(a, b);
        if (!ab) {
          continue;
        }
        for (Obj c : cat.objects()) {
          auto bc = cat.try_tensor(b, c);
          if (!bc) {
            continue;
          }
          auto lhs = cat.try_tensor(*ab, c);
          auto rhs = cat.try_tensor(a, *bc);
          if (lhs && rhs && *lhs != *rhs) {
            report.add("tensor-associativity",
                       "(" + nm(a) + ", " + nm(b) + ", " + nm(c) + ") on objects");
          }
        }
      }
    }

    const Mor id_unit = cat.identity(unit);
    for (Mor f : cat.morphisms()) {
      for (Mor g : cat.morphisms()) {
        auto fg = cat.try_tensor(f, g);
        if (!fg) {
          if (cat.is_partial()) {
            ++undefined;
          } else {
            report.add("totality", "tensor_morphisms(" + nm(f) + ", " + nm(g) + ") is missing");
          }
          continue;
        }
        auto d = cat.try_tensor(cat.dom(f), cat.dom(g));
        auto c = cat.try_tensor(cat.cod(f), cat.cod(g));
        if (!d || !c || cat.dom(*fg) != *d || cat.cod(*fg) != *c) {
          report.add("tensor-typing", "tensor_morphisms(" + nm(f) + ", " + nm(g) + ") = " +
                                          nm(*fg) + " has the wrong domain or codomain");
        }
      }
      if (auto l = cat.try_tensor(id_unit, f); l && *l != f) {
        report.add("tensor-unit", "id_I (x) " + nm(f) + " = " + nm(*l));
      }
      if (auto r = cat.try_tensor(f, id_unit); r && *r != f) {
        report.add("tensor-unit", nm(f) + " (x) id_I = " + nm(*r));
      }
    }
    for (Obj a : cat.objects()) {
      for (Obj b : cat.objects()) {
        auto ab = cat.try_tensor(a, b);
        auto ids = cat.try_tensor(cat.identity(a), cat.identity(b));
        if (ab && ids && *ids != cat.identity(*ab)) {
          report.add("bifunctor-identity",
                     "id_" + nm(a) + " (x) id_" + nm(b) + " = " + nm(*ids));
        }
      }
    }
    for (Mor f : cat.morphisms()) {
      for (Mor g : cat.morphisms()) {
        auto fg = cat.try_tensor(f, g);
        if (!fg) {
          continue;
        }
        for (Mor h : cat.morphisms()) {
          auto gh = cat.try_tensor(g, h);
          if (!gh) {
            continue;
          }
          auto lhs = cat.try_tensor(*fg, h);
          auto rhs = cat.try_tensor(f, *gh);
          if (lhs && rhs && *lhs != *rhs) {
            report.add("tensor-associativity",
                       "(" + nm(f) + ", " + nm(g) + ", " + nm(h) + ") on morphisms");
          }
        }
      }
    }
    // Interchange: (g (x) g')(f (x) f') = (gf) (x) (g'f').
    for (const auto& p : pairs) {
      for (const auto& q : pairs) {
        auto top = cat.try_tensor(p.f, q.f);
        auto bottom = cat.try_tensor(p.g, q.g);
        auto rhs = cat.try_tensor(p.gf, q.gf);
        if (!top || !bottom || !rhs) {
          continue;
        }
        if (cat.cod(*top) != cat.dom(*bottom)) {
          continue;  // typing already reported
        }
        auto lhs = cat.try_compose(*bottom, *top);
        if (lhs && *lhs != *rhs) {
          report.add("interchange", "(" + nm(p.g) + " (x) " + nm(q.g) + ")(" + nm(p.f) +
                                        " (x) " + nm(q.f) + ") = " + nm(*lhs) + " but (" +
                                        nm(p.gf) + " (x) " + nm(q.gf) + ") = " + nm(*rhs));
        }
      }
    }

    if (cat.has_braiding()) {
      bool typed = true;
      for (Obj a : cat.objects()) {
        for (Obj b : cat.objects()) {
          auto psi = cat.try_braiding(a, b);
          if (!psi) {
            if (cat.is_partial()) {
              ++undefined;
            } else {
              report.add("totality", "braiding(" + nm(a) + ", " + nm(b) + ") is missing");
              typed = false;
            }
            continue;
          }
          auto ab = cat.try_tensor(a, b);
          auto ba = cat.try_tensor(b, a);
          if (!ab || !ba || cat.dom(*psi) != *ab || cat.cod(*psi) != *ba) {
            report.add("braiding-typing", "braiding(" + nm(a) + ", " + nm(b) + ") = " +
                                              nm(*psi) + " is not A(x)B -> B(x)A");
            typed = false;
            continue;
          }
          if (!is_iso(cat, *psi)) {
            report.add("braiding-iso", "braiding(" + nm(a) + ", " + nm(b) + ") = " + nm(*psi) +
                                           " is not invertible");
          }
          if ((a == unit || b == unit) && !cat.is_identity(*psi)) {
            report.add("braiding-unit", "braiding(" + nm(a) + ", " + nm(b) +
                                            ") is not the identity");
          }
        }
      }
      if (typed) {
        // Naturality: Psi_{A',B'} (f (x) g) = (g (x) f) Psi_{A,B}.
        for (Mor f : cat.morphisms()) {
          for (Mor g : cat.morphisms()) {
            auto fg = cat.try_tensor(f, g);
            auto gf = cat.try_tensor(g, f);
            auto before = cat.try_braiding(cat.dom(f), cat.dom(g));
            auto after = cat.try_braiding(cat.cod(f), cat.cod(g));
            if (!fg || !gf || !before || !after) {
              continue;
            }
            auto lhs = cat.try_compose(*after, *fg);
            auto rhs = cat.try_compose(*gf, *before);
            if (lhs && rhs && *lhs != *rhs) {
              report.add("braiding-naturality", "at (" + nm(f) + ", " + nm(g) + ")");
            }
          }
        }
        // Hexagons (strict form).
        for (Obj a : cat.objects()) {
          for (Obj b : cat.objects()) {
            for (Obj c : cat.objects()) {
              auto ab = cat.try_tensor(a, b);
              auto bc = cat.try_tensor(b, c);
              if (ab) {
                auto lhs = cat.try_braiding(*ab, c);
                auto inner = cat.try_braiding(b, c);
                auto outer = cat.try_braiding(a, c);
                if (lhs && inner && outer) {
                  auto first = cat.try_tensor(cat.identity(a), *inner);
                  auto second = cat.try_tensor(*outer, cat.identity(b));
                  if (first && second) {
                    auto rhs = cat.try_compose(*second, *first);
                    if (rhs && *lhs != *rhs) {
                      report.add("hexagon", "Psi_{" + nm(a) + "(x)" + nm(b) + ", " + nm(c) + "}");
                    }
                  }
                }
              }
              if (bc) {
                auto lhs = cat.try_braiding(a, *bc);
                auto first_psi = cat.try_braiding(a, b);
                auto second_psi = cat.try_braiding(a, c);
                if (lhs && first_psi && second_psi) {
                  auto first = cat.try_tensor(*first_psi, cat.identity(c));
                  auto second = cat.try_tensor(cat.identity(b), *second_psi);
                  if (first && second) {
                    auto rhs = cat.try_compose(*second, *first);
                    if (rhs && *lhs != *rhs) {
                      report.add("hexagon", "Psi_{" + nm(a) + ", " + nm(b) + "(x)" + nm(c) + "}");
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
  }

  if (undefined > 0) {
    report.notes.push_back("partial table: " + std::to_string(undefined) +
                           " entries undefined and skipped");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Isomorphisms and epimorphisms

std::optional<Mor> inverse(const FinMonCat& cat, Mor f) {
  const Obj a = cat.dom(f);
  const Obj b = cat.cod(f);
  for (Mor g : cat.hom(b, a)) {
    auto gf = cat.try_compose(g, f);
    auto fg = cat.try_compose(f, g);
    if (gf && fg && *gf == cat.identity(a) && *fg == cat.identity(b)) {
      return g;
    }
  }
  return std::nullopt;
}

bool is_iso(const FinMonCat& cat, Mor f) { return inverse(cat, f).has_value(); }

bool is_epi(const FinMonCat& cat, Mor f, const Limits& limits) {
  require_within(cat, limits, "is_epi");
  const Obj b = cat.cod(f);
  for (Obj z : cat.objects()) {
    auto parallel = cat.hom(b, z);
    for (std::size_t i = 0; i < parallel.size(); ++i) {
      const Mor ui = cat.compose(parallel[i], f);
      for (std::size_t j = i + 1; j < parallel.size(); ++j) {
        if (cat.compose(parallel[j], f) == ui) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<Mor> isomorphisms(const FinMonCat& cat, Obj a, Obj b) {
  std::vector<Mor> out;
  for (Mor f : cat.hom(a, b)) {
    if (is_iso(cat, f)) {
      out.push_back(f);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Functors

ValidationReport validate_functor(const Functor& functor) {
  ValidationReport report;
  const FinMonCat& src = *functor.source;
  const FinMonCat& dst = *functor.target;
  if (functor.object_map.size() != src.num_objects() ||
      functor.morphism_map.size() != src.num_morphisms()) {
    report.add("functor-shape", "object or morphism map has the wrong size");
    return report;
  }
  for (Obj a : src.objects()) {
    if (!functor(a).valid() || functor(a).index >= dst.num_objects()) {
      report.add("functor-shape", "object " + src.name(a) + " is unmapped");
      return report;
    }
  }
  for (Mor f : src.morphisms()) {
    const Mor image = functor(f);
    if (!image.valid() || image.index >= dst.num_morphisms()) {
      report.add("functor-shape", "morphism " + src.name(f) + " is unmapped");
      return report;
    }
    if (dst.dom(image) != functor(src.dom(f)) || dst.cod(image) != functor(src.cod(f))) {
      report.add("functor-typing", src.name(f) + " maps to " + dst.name(image) +
                                       " with mismatched domain or codomain");
    }
  }
  if (!report.ok()) {
    return report;
  }
  for (Obj a : src.objects()) {
    if (functor(src.identity(a)) != dst.identity(functor(a))) {
      report.add("functor-identity", "identity of " + src.name(a) + " is not preserved");
    }
  }
  for (Mor f : src.morphisms()) {
    for (Obj c : src.objects()) {
      for (Mor g : src.hom(src.cod(f), c)) {
        auto gf = src.try_compose(g, f);
        if (!gf) {
          continue;
        }
        auto image = dst.try_compose(functor(g), functor(f));
        if (!image) {
          report.notes.push_back("image composite of " + src.name(g) + " . " + src.name(f) +
                                 " undefined in target");
          continue;
        }
        if (*image != functor(*gf)) {
          report.add("functor-composition",
                     "F(" + src.name(g) + " . " + src.name(f) + ") != F(g) . F(f)");
        }
      }
    }
  }
  return report;
}

Functor identity_functor(const CatPtr& cat) {
  Functor id{cat, cat, cat->objects(), cat->morphisms()};
  return id;
}

Functor compose_functors(const Functor& outer, const Functor& inner) {
  if (outer.source != inner.target) {
    throw NotComposable("functor composition: target of the inner functor is not the source "
                        "of the outer one");
  }
  Functor out{inner.source, outer.target, {}, {}};
  out.object_map.reserve(inner.object_map.size());
  for (Obj a : inner.object_map) {
    out.object_map.push_back(outer(a));
  }
  out.morphism_map.reserve(inner.morphism_map.size());
  for (Mor f : inner.morphism_map) {
    out.morphism_map.push_back(outer(f));
  }
  return out;
}

bool is_injective(const Functor& functor) {
  std::set<Obj> objs(functor.object_map.begin(), functor.object_map.end());
  std::set<Mor> mors(functor.morphism_map.begin(), functor.morphism_map.end());
  return objs.size() == functor.object_map.size() && mors.size() == functor.morphism_map.size();
}

Obj apply_tensor_functor(const FinMonCat& cat, const TensorFunctor& tf, Obj a) {
  return tf.side == TensorFunctor::Side::Left ? cat.tensor(tf.fixed, a) : cat.tensor(a, tf.fixed);
}

Mor apply_tensor_functor(const FinMonCat& cat, const TensorFunctor& tf, Mor f) {
  const Mor id = cat.identity(tf.fixed);
  return tf.side == TensorFunctor::Side::Left ? cat.tensor(id, f) : cat.tensor(f, id);
}

Functor as_functor(const CatPtr& cat, const TensorFunctor& tf) {
  Functor out{cat, cat, {}, {}};
  for (Obj a : cat->objects()) {
    out.object_map.push_back(apply_tensor_functor(*cat, tf, a));
  }
  for (Mor f : cat->morphisms()) {
    out.morphism_map.push_back(apply_tensor_functor(*cat, tf, f));
  }
  return out;
}

std::string describe(const FinMonCat& cat, const TensorFunctor& tf) {
  return (tf.side == TensorFunctor::Side::Left ? "P_" : "Q_") + cat.name(tf.fixed);
}

// ---------------------------------------------------------------------------
// Diagrams

Diagram make_diagram(Functor assignment) {
  auto report = validate_functor(assignment);
  if (!report.ok()) {
    throw MalformedInput("diagram assignment is not a functor: " + report.violations.front().law +
                         ": " + report.violations.front().detail);
  }
  Diagram d{assignment.source, std::move(assignment)};
  return d;
}

namespace {

std::string shape_name(std::size_t i, std::size_t count) {
  std::string digits = std::to_string(i);
  const std::size_t width = std::to_string(count == 0 ? 0 : count - 1).size();
  return "d" + std::string(width - digits.size(), '0') + digits;
}

}  // namespace

Diagram discrete_diagram(const CatPtr& target, const std::vector<Obj>& objects) {
  CategoryBuilder shape;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    shape.object(shape_name(i, objects.size()));
  }
  CatPtr s = shape.build();
  Functor f{s, target, {}, {}};
  f.object_map = objects;  // shape names sort in index order
  f.morphism_map.resize(s->num_morphisms());
  for (Obj a : s->objects()) {
    f.morphism_map[s->identity(a).index] = target->identity(objects[a.index]);
  }
  return make_diagram(std::move(f));
}

Diagram arrow_diagram(const CatPtr& target, Mor arrow) {
  CategoryBuilder shape;
  shape.object("d0").object("d1").morphism("u", "d0", "d1");
  CatPtr s = shape.build();
  Functor f{s, target, {target->dom(arrow), target->cod(arrow)}, {}};
  f.morphism_map.resize(s->num_morphisms());
  for (Obj a : s->objects()) {
    f.morphism_map[s->identity(a).index] = target->identity(f.object_map[a.index]);
  }
  f.morphism_map[s->arrow("u").index] = arrow;
  return make_diagram(std::move(f));
}

Diagram push_forward(const Functor& functor, const Diagram& diagram) {
  return make_diagram(compose_functors(functor, diagram.assignment));
}

}  // namespace zcat
