#include "zcat/constructions.hpp"

#include <functional>

namespace zcat {

std::string to_string(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::Center:
      return "center";
    case ConstructionKind::WeakCenter:
      return "weak_center";
    case ConstructionKind::CentralizerObject:
      return "centralizer_object";
    case ConstructionKind::CentralizerMorphism:
      return "centralizer_morphism";
  }
  return "unknown";
}

namespace {

// (f (x) id_A) . sigma_Y == sigma_Z . (id_A (x) f) for f : Y -> Z.
bool natural_at(const FinMonCat& c, Obj a, const std::vector<Mor>& sigma, Mor f) {
  const Mor id_a = c.identity(a);
  return c.compose(c.tensor(f, id_a), sigma[c.dom(f).index]) ==
         c.compose(sigma[c.cod(f).index], c.tensor(id_a, f));
}

// sigma_{Y (x) Z} == (id_Y (x) sigma_Z) . (sigma_Y (x) id_Z)
bool multiplicative_at(const FinMonCat& c, const std::vector<Mor>& sigma, Obj y, Obj z) {
  return sigma[c.tensor(y, z).index] ==
         c.compose(c.tensor(c.identity(y), sigma[z.index]), c.tensor(sigma[y.index], c.identity(z)));
}

bool typed(const FinMonCat& c, Mor f, Obj dom, Obj cod) {
  return f.valid() && f.index < c.num_morphisms() && c.dom(f) == dom && c.cod(f) == cod;
}

bool half_braiding_ok(const FinMonCat& c, Obj a, const std::vector<Mor>& sigma, bool weak) {
  if (sigma.size() != c.num_objects()) {
    return false;
  }
  for (Obj y : c.objects()) {
    if (!typed(c, sigma[y.index], c.tensor(a, y), c.tensor(y, a))) {
      return false;
    }
    if (!weak && !is_iso(c, sigma[y.index])) {
      return false;
    }
  }
  if (weak && sigma[c.unit().index] != c.identity(a)) {
    return false;
  }
  for (Mor f : c.morphisms()) {
    if (!natural_at(c, a, sigma, f)) {
      return false;
    }
  }
  for (Obj y : c.objects()) {
    for (Obj z : c.objects()) {
      if (!multiplicative_at(c, sigma, y, z)) {
        return false;
      }
    }
  }
  return true;
}

bool object_data_ok(const Construction& k, Obj carrier, const std::vector<Mor>& comps) {
  const FinMonCat& c = *k.base;
  switch (k.kind) {
    case ConstructionKind::Center:
      return half_braiding_ok(c, carrier, comps, false);
    case ConstructionKind::WeakCenter:
      return half_braiding_ok(c, carrier, comps, true);
    case ConstructionKind::CentralizerObject: {
      const Obj x = k.fixed_object;
      return comps.size() == 1 && typed(c, comps[0], c.tensor(carrier, x), c.tensor(x, carrier)) &&
             is_iso(c, comps[0]);
    }
    case ConstructionKind::CentralizerMorphism: {
      const Mor h = k.fixed_morphism;
      const Obj a = c.dom(h);
      const Obj b = c.cod(h);
      if (comps.size() != 2 || !typed(c, comps[0], c.tensor(a, carrier), c.tensor(carrier, a)) ||
          !typed(c, comps[1], c.tensor(b, carrier), c.tensor(carrier, b)) ||
          !is_iso(c, comps[0]) || !is_iso(c, comps[1])) {
        return false;
      }
      // (id_X (x) h) . alpha == beta . (h (x) id_X)
      const Mor id_x = c.identity(carrier);
      return c.compose(c.tensor(id_x, h), comps[0]) == c.compose(comps[1], c.tensor(h, id_x));
    }
  }
  return false;
}

bool morphism_data_ok(const Construction& k, Obj src_carrier, const std::vector<Mor>& src,
                      Obj dst_carrier, const std::vector<Mor>& dst, Mor f) {
  const FinMonCat& c = *k.base;
  if (c.dom(f) != src_carrier || c.cod(f) != dst_carrier) {
    return false;
  }
  switch (k.kind) {
    case ConstructionKind::Center:
    case ConstructionKind::WeakCenter:
      // tau_X . (f (x) id_X) == (id_X (x) f) . sigma_X for every X
      for (Obj x : c.objects()) {
        const Mor id_x = c.identity(x);
        if (c.compose(dst[x.index], c.tensor(f, id_x)) != c.compose(c.tensor(id_x, f), src[x.index])) {
          return false;
        }
      }
      return true;
    case ConstructionKind::CentralizerObject: {
      const Mor id_x = c.identity(k.fixed_object);
      return c.compose(dst[0], c.tensor(f, id_x)) == c.compose(c.tensor(id_x, f), src[0]);
    }
    case ConstructionKind::CentralizerMorphism: {
      // alpha' . (id_A (x) f) == (f (x) id_A) . alpha, and the same for beta
      const Mor h = k.fixed_morphism;
      const Mor id_a = c.identity(c.dom(h));
      const Mor id_b = c.identity(c.cod(h));
      return c.compose(dst[0], c.tensor(id_a, f)) == c.compose(c.tensor(f, id_a), src[0]) &&
             c.compose(dst[1], c.tensor(id_b, f)) == c.compose(c.tensor(f, id_b), src[1]);
    }
  }
  return false;
}

std::vector<Mor> tensor_components(const Construction& k, Obj a, const std::vector<Mor>& p, Obj b,
                                   const std::vector<Mor>& q) {
  const FinMonCat& c = *k.base;
  std::vector<Mor> out;
  switch (k.kind) {
    case ConstructionKind::Center:
    case ConstructionKind::WeakCenter:
      // delta_X = (sigma_X (x) id_B) . (id_A (x) tau_X)
      for (Obj x : c.objects()) {
        out.push_back(c.compose(c.tensor(p[x.index], c.identity(b)), c.tensor(c.identity(a), q[x.index])));
      }
      break;
    case ConstructionKind::CentralizerObject:
      // gamma = (alpha (x) id_B) . (id_A (x) beta)
      out.push_back(c.compose(c.tensor(p[0], c.identity(b)), c.tensor(c.identity(a), q[0])));
      break;
    case ConstructionKind::CentralizerMorphism:
      // alpha-bar = (id_X (x) alpha') . (alpha (x) id_Y), beta-bar likewise
      for (int i = 0; i < 2; ++i) {
        out.push_back(c.compose(c.tensor(c.identity(a), q[i]), c.tensor(p[i], c.identity(b))));
      }
      break;
  }
  return out;
}

std::vector<Mor> unit_components(const Construction& k) {
  const FinMonCat& c = *k.base;
  switch (k.kind) {
    case ConstructionKind::Center:
    case ConstructionKind::WeakCenter: {
      std::vector<Mor> out;
      for (Obj y : c.objects()) {
        out.push_back(c.identity(y));
      }
      return out;
    }
    case ConstructionKind::CentralizerObject:
      return {c.identity(k.fixed_object)};
    case ConstructionKind::CentralizerMorphism:
      return {c.identity(c.dom(k.fixed_morphism)), c.identity(c.cod(k.fixed_morphism))};
  }
  return {};
}

std::string object_name(const Construction& k, Obj carrier, const std::vector<Mor>& comps) {
  const FinMonCat& c = *k.base;
  std::string s = "(" + c.name(carrier) + ";";
  switch (k.kind) {
    case ConstructionKind::Center:
    case ConstructionKind::WeakCenter:
      for (Obj y : c.objects()) {
        s += (y.index ? "," : "") + std::string("σ@") + c.name(y) + "=" + c.name(comps[y.index]);
      }
      break;
    case ConstructionKind::CentralizerObject:
      s += "α=" + c.name(comps[0]);
      break;
    case ConstructionKind::CentralizerMorphism:
      s += "α=" + c.name(comps[0]) + ",β=" + c.name(comps[1]);
      break;
  }
  return s + ")";
}

void check_base(const FinMonCat& c, const Limits& limits, const std::string& what) {
  require_within(c, limits, what);
  if (!c.is_monoidal()) {
    throw MissingStructure(what + " needs a monoidal category");
  }
  if (c.is_partial()) {
    throw PartialTable(what + " needs total tensor and composition tables");
  }
}

struct RawObject {
  Obj carrier;
  std::vector<Mor> comps;
};

// Builds the constructed category from its objects: morphisms are the base
// arrows satisfying the squares, composites and tensors are inherited, and
// every inherited value must land back in the construction.
void assemble(Construction& k, const std::vector<RawObject>& raw, const Limits& limits) {
  const FinMonCat& c = *k.base;
  const std::string what = to_string(k.kind);
  if (raw.size() > limits.max_objects) {
    throw GuardrailExceeded(what + ": " + std::to_string(raw.size()) +
                            " objects exceed the bound of " + std::to_string(limits.max_objects));
  }
  std::vector<std::string> names;
  std::map<std::pair<Obj, std::vector<Mor>>, std::size_t> index;
  CategoryBuilder b;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    names.push_back(object_name(k, raw[i].carrier, raw[i].comps));
    index.emplace(std::make_pair(raw[i].carrier, raw[i].comps), i);
    b.object(names.back());
  }
  auto object_of = [&](Obj carrier, const std::vector<Mor>& comps, const std::string& why) {
    auto it = index.find({carrier, comps});
    if (it == index.end()) {
      throw TheoremViolation(what + ": " + why + " has carrier " + c.name(carrier) +
                             " and components outside the construction");
    }
    return it->second;
  };

  struct Arrow {
    Mor f;
    std::size_t src, dst;
  };
  std::vector<Arrow> arrows;
  std::vector<std::vector<std::vector<std::size_t>>> homs(raw.size(),
                                                          std::vector<std::vector<std::size_t>>(raw.size()));
  std::map<std::tuple<Mor, std::size_t, std::size_t>, std::string> arrow_names;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (std::size_t j = 0; j < raw.size(); ++j) {
      for (Mor f : c.hom(raw[i].carrier, raw[j].carrier)) {
        if (!morphism_data_ok(k, raw[i].carrier, raw[i].comps, raw[j].carrier, raw[j].comps, f)) {
          continue;
        }
        const bool identity = i == j && c.is_identity(f);
        std::string name = identity ? "id_" + names[i] : c.name(f) + "@" + names[i] + "->" + names[j];
        homs[i][j].push_back(arrows.size());
        arrows.push_back({f, i, j});
        arrow_names.emplace(std::make_tuple(f, i, j), name);
        if (identity) {
          b.identity(names[i], name);
        }
        b.morphism(std::move(name), names[i], names[j]);
      }
    }
    if (arrows.size() > limits.max_morphisms) {
      throw GuardrailExceeded(what + ": more than " + std::to_string(limits.max_morphisms) +
                              " morphisms");
    }
  }
  auto arrow_of = [&](Mor f, std::size_t i, std::size_t j, const std::string& why) -> const std::string& {
    auto it = arrow_names.find({f, i, j});
    if (it == arrow_names.end()) {
      throw TheoremViolation(what + ": " + why + " (" + c.name(f) + ") is not a morphism of the construction");
    }
    return it->second;
  };
  for (const auto& f : arrows) {
    for (std::size_t l = 0; l < raw.size(); ++l) {
      for (std::size_t gi : homs[f.dst][l]) {
        const auto& g = arrows[gi];
        b.compose(arrow_names.at({g.f, g.src, g.dst}), arrow_names.at({f.f, f.src, f.dst}),
                  arrow_of(c.compose(g.f, f.f), f.src, l, "a composite"));
      }
    }
  }

  b.unit(names[object_of(c.unit(), unit_components(k), "the unit")]);
  std::vector<std::vector<std::size_t>> tensor(raw.size(), std::vector<std::size_t>(raw.size()));
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (std::size_t j = 0; j < raw.size(); ++j) {
      const Obj carrier = c.tensor(raw[i].carrier, raw[j].carrier);
      tensor[i][j] = object_of(carrier,
                               tensor_components(k, raw[i].carrier, raw[i].comps, raw[j].carrier, raw[j].comps),
                               "the tensor of " + names[i] + " and " + names[j]);
      b.tensor(names[i], names[j], names[tensor[i][j]]);
    }
  }
  for (const auto& f : arrows) {
    for (const auto& g : arrows) {
      b.tensor_morphisms(arrow_names.at({f.f, f.src, f.dst}), arrow_names.at({g.f, g.src, g.dst}),
                         arrow_of(c.tensor(f.f, g.f), tensor[f.src][g.src], tensor[f.dst][g.dst],
                                  "a tensor of morphisms"));
    }
  }
  if (k.kind == ConstructionKind::Center) {
    // Psi_{(A,sigma),(B,tau)} = sigma_B
    for (std::size_t i = 0; i < raw.size(); ++i) {
      for (std::size_t j = 0; j < raw.size(); ++j) {
        b.braiding(names[i], names[j],
                   arrow_of(raw[i].comps[raw[j].carrier.index], tensor[i][j], tensor[j][i],
                            "a braiding component"));
      }
    }
  }

  nlohmann::json prov = {{"construction", what}};
  if (!c.provenance().is_null()) {
    prov["base"] = c.provenance();
  }
  if (k.fixed_object.valid()) {
    prov["object"] = c.name(k.fixed_object);
  }
  if (k.fixed_morphism.valid()) {
    prov["morphism"] = c.name(k.fixed_morphism);
  }
  b.provenance(prov);
  k.category = b.build();

  const FinMonCat& z = *k.category;
  k.forget = Functor{k.category, k.base, std::vector<Obj>(z.num_objects()),
                     std::vector<Mor>(z.num_morphisms())};
  k.components.assign(z.num_objects(), {});
  std::vector<Obj> handle(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    handle[i] = z.object(names[i]);
    k.forget.object_map[handle[i].index] = raw[i].carrier;
    k.components[handle[i].index] = raw[i].comps;
    k.object_lookup.emplace(std::make_pair(raw[i].carrier, raw[i].comps), handle[i]);
  }
  for (const auto& f : arrows) {
    const Mor m = z.arrow(arrow_names.at({f.f, f.src, f.dst}));
    k.forget.morphism_map[m.index] = f.f;
    k.morphism_lookup.emplace(std::make_tuple(f.f, handle[f.src], handle[f.dst]), m);
  }
}

std::vector<RawObject> enumerate_half_braidings(const FinMonCat& c, bool weak) {
  const std::size_t n = c.num_objects();
  const Obj unit = c.unit();
  std::vector<RawObject> out;
  for (Obj a : c.objects()) {
    std::vector<std::vector<Mor>> candidates(n);
    for (Obj y : c.objects()) {
      if (weak && y == unit) {
        candidates[y.index] = {c.identity(a)};
        continue;
      }
      for (Mor f : c.hom(c.tensor(a, y), c.tensor(y, a))) {
        if (weak || is_iso(c, f)) {
          candidates[y.index].push_back(f);
        }
      }
    }
    std::vector<Mor> sigma(n);
    // Checks that become decidable once index k is chosen.
    auto consistent = [&](std::size_t k) {
      const Obj yk(k);
      for (std::size_t j = 0; j <= k; ++j) {
        for (Mor f : c.hom(Obj(j), yk)) {
          if (!natural_at(c, a, sigma, f)) {
            return false;
          }
        }
        for (Mor f : c.hom(yk, Obj(j))) {
          if (j != k && !natural_at(c, a, sigma, f)) {
            return false;
          }
        }
      }
      for (std::size_t y = 0; y <= k; ++y) {
        for (std::size_t z = 0; z <= k; ++z) {
          const std::size_t yz = c.tensor(Obj(y), Obj(z)).index;
          if (yz <= k && std::max({y, z, yz}) == k && !multiplicative_at(c, sigma, Obj(y), Obj(z))) {
            return false;
          }
        }
      }
      return true;
    };
    std::function<void(std::size_t)> search = [&](std::size_t k) {
      if (k == n) {
        out.push_back({a, sigma});
        return;
      }
      for (Mor f : candidates[k]) {
        sigma[k] = f;
        if (consistent(k)) {
          search(k + 1);
        }
      }
    };
    search(0);
  }
  return out;
}

Construction start(ConstructionKind kind, const CatPtr& base, const Limits& limits) {
  check_base(*base, limits, to_string(kind));
  Construction k;
  k.kind = kind;
  k.base = base;
  return k;
}

}  // namespace

bool Construction::is_object_data(Obj c, const std::vector<Mor>& comps) const {
  return object_data_ok(*this, c, comps);
}

bool Construction::is_morphism_data(Obj p, Obj q, Mor f) const {
  return morphism_data_ok(*this, carrier(p), data(p), carrier(q), data(q), f);
}

std::vector<Mor> Construction::tensor_data(Obj p, Obj q) const {
  return tensor_components(*this, carrier(p), data(p), carrier(q), data(q));
}

std::optional<Obj> Construction::find(Obj c, const std::vector<Mor>& comps) const {
  auto it = object_lookup.find({c, comps});
  if (it == object_lookup.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<Mor> Construction::lift(Obj p, Obj q, Mor f) const {
  auto it = morphism_lookup.find({f, p, q});
  if (it == morphism_lookup.end()) {
    return std::nullopt;
  }
  return it->second;
}

Construction center(const CatPtr& base, const Limits& limits) {
  Construction k = start(ConstructionKind::Center, base, limits);
  assemble(k, enumerate_half_braidings(*base, false), limits);
  return k;
}

Construction weak_center(const CatPtr& base, const Limits& limits) {
  Construction k = start(ConstructionKind::WeakCenter, base, limits);
  assemble(k, enumerate_half_braidings(*base, true), limits);
  return k;
}

Construction centralizer_of_object(const CatPtr& base, Obj x, const Limits& limits) {
  Construction k = start(ConstructionKind::CentralizerObject, base, limits);
  const FinMonCat& c = *base;
  (void)c.name(x);  // range check
  k.fixed_object = x;
  std::vector<RawObject> raw;
  for (Obj a : c.objects()) {
    for (Mor alpha : isomorphisms(c, c.tensor(a, x), c.tensor(x, a))) {
      raw.push_back({a, {alpha}});
    }
  }
  assemble(k, raw, limits);
  return k;
}

Construction centralizer_of_morphism(const CatPtr& base, Mor h, const Limits& limits) {
  Construction k = start(ConstructionKind::CentralizerMorphism, base, limits);
  const FinMonCat& c = *base;
  (void)c.name(h);
  k.fixed_morphism = h;
  std::vector<RawObject> raw;
  for (Obj x : c.objects()) {
    for (Mor alpha : isomorphisms(c, c.tensor(c.dom(h), x), c.tensor(x, c.dom(h)))) {
      for (Mor beta : isomorphisms(c, c.tensor(c.cod(h), x), c.tensor(x, c.cod(h)))) {
        if (object_data_ok(k, x, {alpha, beta})) {
          raw.push_back({x, {alpha, beta}});
        }
      }
    }
  }
  assemble(k, raw, limits);
  return k;
}

namespace {

// Functor between constructions over the same base that keeps underlying
// arrows; `image` gives the target components of a source object.
Functor over_base(const Construction& src, const Construction& dst,
                  const std::function<std::vector<Mor>(Obj)>& image, const std::string& what) {
  if (src.base != dst.base) {
    throw MalformedInput(what + ": constructions over different base categories");
  }
  const FinMonCat& z = *src.category;
  Functor f{src.category, dst.category, {}, {}};
  for (Obj p : z.objects()) {
    auto q = dst.find(src.carrier(p), image(p));
    if (!q) {
      throw TheoremViolation(what + ": the image of " + z.name(p) + " is not an object of the target");
    }
    f.object_map.push_back(*q);
  }
  for (Mor m : z.morphisms()) {
    auto lifted = dst.lift(f(z.dom(m)), f(z.cod(m)), src.forget(m));
    if (!lifted) {
      throw TheoremViolation(what + ": the image of " + z.name(m) + " is not a morphism of the target");
    }
    f.morphism_map.push_back(*lifted);
  }
  auto report = validate_functor(f);
  if (!report.ok()) {
    throw TheoremViolation(what + " is not a functor: " + report.violations.front().detail);
  }
  return f;
}

Mor inverse_or_throw(const FinMonCat& c, Mor f) {
  auto g = inverse(c, f);
  if (!g) {
    throw TheoremViolation("component " + c.name(f) + " is not invertible");
  }
  return *g;
}

}  // namespace

Functor evaluation_functor(const Construction& center_k, const Construction& zx) {
  if (center_k.kind != ConstructionKind::Center || zx.kind != ConstructionKind::CentralizerObject) {
    throw MalformedInput("evaluation functor goes from a center to an object centralizer");
  }
  const Obj x = zx.fixed_object;
  return over_base(center_k, zx, [&](Obj p) { return std::vector<Mor>{center_k.data(p)[x.index]}; },
                   "evaluation functor");
}

CentralizerIso centralizer_identity_iso(const Construction& zx, const Construction& zh) {
  if (zx.kind != ConstructionKind::CentralizerObject ||
      zh.kind != ConstructionKind::CentralizerMorphism ||
      zh.fixed_morphism != zx.base->identity(zx.fixed_object)) {
    throw MalformedInput("centralizer_identity_iso needs Z_A and Z_{id_A} for the same A");
  }
  const FinMonCat& c = *zx.base;
  CentralizerIso iso;
  iso.s = over_base(zh, zx, [&](Obj p) { return std::vector<Mor>{inverse_or_throw(c, zh.data(p)[0])}; },
                    "S_A");
  iso.t = over_base(zx, zh,
                    [&](Obj p) {
                      const Mor inv = inverse_or_throw(c, zx.data(p)[0]);
                      return std::vector<Mor>{inv, inv};
                    },
                    "T_A");
  return iso;
}

Functor center_to_weak(const Construction& center_k, const Construction& weak) {
  if (center_k.kind != ConstructionKind::Center || weak.kind != ConstructionKind::WeakCenter) {
    throw MalformedInput("center_to_weak goes from a center to a weak center");
  }
  return over_base(center_k, weak, [&](Obj p) { return center_k.data(p); }, "center embedding");
}

Functor braided_embedding(const Construction& target) {
  const FinMonCat& c = *target.base;
  if (!c.has_braiding()) {
    throw MissingStructure("braided embedding needs a braiding on the base category");
  }
  auto components = [&](Obj w) -> std::vector<Mor> {
    switch (target.kind) {
      case ConstructionKind::Center:
      case ConstructionKind::WeakCenter: {
        std::vector<Mor> sigma;
        for (Obj y : c.objects()) {
          sigma.push_back(c.braiding(w, y));
        }
        return sigma;
      }
      case ConstructionKind::CentralizerObject:
        return {c.braiding(w, target.fixed_object)};
      case ConstructionKind::CentralizerMorphism:
        return {c.braiding(c.dom(target.fixed_morphism), w), c.braiding(c.cod(target.fixed_morphism), w)};
    }
    return {};
  };
  const std::string what = "Phi into " + to_string(target.kind);
  Functor f{target.base, target.category, {}, {}};
  for (Obj w : c.objects()) {
    const auto comps = components(w);
    if (!target.is_object_data(w, comps)) {
      throw TheoremViolation(what + ": " + c.name(w) + " does not satisfy the defining conditions");
    }
    auto p = target.find(w, comps);
    if (!p) {
      throw TheoremViolation(what + ": image of " + c.name(w) + " missing from the construction");
    }
    f.object_map.push_back(*p);
  }
  for (Mor m : c.morphisms()) {
    const Obj p = f(c.dom(m));
    const Obj q = f(c.cod(m));
    if (!target.is_morphism_data(p, q, m)) {
      throw TheoremViolation(what + ": " + c.name(m) + " does not satisfy the morphism squares");
    }
    f.morphism_map.push_back(*target.lift(p, q, m));
  }
  auto report = validate_functor(f);
  if (!report.ok()) {
    throw TheoremViolation(what + " is not a functor: " + report.violations.front().detail);
  }
  return f;
}

}  // namespace zcat
