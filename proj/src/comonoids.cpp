#include "zcat/comonoids.hpp"

#include <algorithm>

namespace zcat {

namespace {

// Comonoid laws with partial lookups; nullopt when undecidable.
std::optional<bool> laws(const FinMonCat& c, Obj x, Mor d, Mor e) {
  const Mor id = c.identity(x);
  auto id_d = c.try_tensor(id, d);
  auto d_id = c.try_tensor(d, id);
  auto e_id = c.try_tensor(e, id);
  auto id_e = c.try_tensor(id, e);
  if (!id_d || !d_id || !e_id || !id_e) {
    return std::nullopt;
  }
  auto left = c.try_compose(*id_d, d);
  auto right = c.try_compose(*d_id, d);
  auto cl = c.try_compose(*e_id, d);
  auto cr = c.try_compose(*id_e, d);
  if (!left || !right || !cl || !cr) {
    return std::nullopt;
  }
  return *left == *right && *cl == id && *cr == id;
}

}  // namespace

bool is_comonoid(const FinMonCat& c, const Comonoid& m) {
  auto cc = c.try_tensor(m.carrier, m.carrier);
  if (!cc || c.dom(m.comult) != m.carrier || c.cod(m.comult) != *cc ||
      c.dom(m.counit) != m.carrier || c.cod(m.counit) != c.unit()) {
    return false;
  }
  auto r = laws(c, m.carrier, m.comult, m.counit);
  return r.value_or(false);
}

ComonoidEnumeration enumerate_comonoids(const CatPtr& cat, const Limits& limits) {
  const FinMonCat& c = *cat;
  require_within(c, limits, "comonoids");
  if (!c.is_monoidal()) {
    throw MissingStructure("comonoids need a monoidal category");
  }
  ComonoidEnumeration out;
  for (Obj x : c.objects()) {
    auto xx = c.try_tensor(x, x);
    if (!xx) {
      out.skipped.push_back(x);
      continue;
    }
    bool undecided = false;
    for (Mor d : c.hom(x, *xx)) {
      for (Mor e : c.hom(x, c.unit())) {
        auto r = laws(c, x, d, e);
        if (!r) {
          undecided = true;
        } else if (*r) {
          out.comonoids.push_back({x, d, e});
        }
      }
    }
    if (undecided) {
      out.skipped.push_back(x);
    }
  }
  return out;
}

namespace {

std::string comonoid_name(const FinMonCat& c, const Comonoid& m) {
  return "(" + c.name(m.carrier) + ";Δ=" + c.name(m.comult) + ",ε=" + c.name(m.counit) + ")";
}

bool comonoid_morphism(const FinMonCat& c, const Comonoid& s, const Comonoid& t, Mor f) {
  auto ff = c.try_tensor(f, f);
  if (!ff) {
    return false;
  }
  auto lhs = c.try_compose(t.comult, f);
  auto rhs = c.try_compose(*ff, s.comult);
  auto e = c.try_compose(t.counit, f);
  return lhs && rhs && e && *lhs == *rhs && *e == s.counit;
}

}  // namespace

ComonoidCategory comonoid_category(const CatPtr& cat, const Limits& limits) {
  const FinMonCat& c = *cat;
  auto found = enumerate_comonoids(cat, limits);
  const auto& ms = found.comonoids;
  if (ms.size() > limits.max_objects) {
    throw GuardrailExceeded("comonoid category would have " + std::to_string(ms.size()) +
                            " objects, above the bound of " + std::to_string(limits.max_objects));
  }
  CategoryBuilder b;
  std::vector<std::string> names;
  for (const auto& m : ms) {
    names.push_back(comonoid_name(c, m));
    b.object(names.back());
  }
  struct Arrow {
    Mor f;
    std::size_t s, t;
    std::string name;
  };
  std::vector<Arrow> arrows;
  std::map<std::tuple<Mor, std::size_t, std::size_t>, std::string> lookup;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = 0; j < ms.size(); ++j) {
      for (Mor f : c.hom(ms[i].carrier, ms[j].carrier)) {
        if (!comonoid_morphism(c, ms[i], ms[j], f)) {
          continue;
        }
        const bool identity = i == j && c.is_identity(f);
        std::string name = identity ? "id_" + names[i] : c.name(f) + "@" + names[i] + "->" + names[j];
        if (identity) {
          b.identity(names[i], name);
        }
        b.morphism(name, names[i], names[j]);
        lookup.emplace(std::make_tuple(f, i, j), name);
        arrows.push_back({f, i, j, std::move(name)});
      }
    }
  }
  if (arrows.size() > limits.max_morphisms) {
    throw GuardrailExceeded("comonoid category exceeds the morphism bound");
  }
  bool partial = c.is_partial();
  for (const auto& f : arrows) {
    for (const auto& g : arrows) {
      if (g.s != f.t) {
        continue;
      }
      auto gf = c.try_compose(g.f, f.f);
      if (!gf) {
        partial = true;
        continue;
      }
      auto it = lookup.find({*gf, f.s, g.t});
      if (it == lookup.end()) {
        throw TheoremViolation("composite of comonoid morphisms is not a comonoid morphism");
      }
      b.compose(g.name, f.name, it->second);
    }
  }
  auto index_of = [&](const Comonoid& m) -> std::optional<std::size_t> {
    auto it = std::find(ms.begin(), ms.end(), m);
    if (it == ms.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - ms.begin());
  };
  // Monoidal structure via the braiding.
  if (c.has_braiding() && !ms.empty()) {
    const Obj unit = c.unit();
    auto u = index_of({unit, c.identity(unit), c.identity(unit)});
    if (u) {
      b.unit(names[*u]);
      std::vector<std::vector<std::optional<std::size_t>>> tensor(ms.size(),
                                                                  std::vector<std::optional<std::size_t>>(ms.size()));
      for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = 0; j < ms.size(); ++j) {
          const auto& x = ms[i];
          const auto& y = ms[j];
          auto xy = c.try_tensor(x.carrier, y.carrier);
          auto psi = c.try_braiding(x.carrier, y.carrier);
          auto dd = c.try_tensor(x.comult, y.comult);
          auto ee = c.try_tensor(x.counit, y.counit);
          std::optional<Mor> mid;
          if (psi) {
            auto left = c.try_tensor(c.identity(x.carrier), *psi);
            if (left) {
              mid = c.try_tensor(*left, c.identity(y.carrier));
            }
          }
          std::optional<Mor> comult;
          if (mid && dd) {
            comult = c.try_compose(*mid, *dd);
          }
          if (!xy || !comult || !ee) {
            partial = true;
            continue;
          }
          auto k = index_of({*xy, *comult, *ee});
          if (!k) {
            throw TheoremViolation("tensor of comonoids " + names[i] + " and " + names[j] +
                                   " is not a comonoid");
          }
          tensor[i][j] = k;
          b.tensor(names[i], names[j], names[*k]);
        }
      }
      for (const auto& f : arrows) {
        for (const auto& g : arrows) {
          auto s = tensor[f.s][g.s];
          auto t = tensor[f.t][g.t];
          auto fg = c.try_tensor(f.f, g.f);
          if (!s || !t || !fg) {
            partial = true;
            continue;
          }
          auto it = lookup.find({*fg, *s, *t});
          if (it == lookup.end()) {
            throw TheoremViolation("tensor of comonoid morphisms is not a comonoid morphism");
          }
          b.tensor_morphisms(f.name, g.name, it->second);
        }
      }
    }
  }
  b.partial(partial);
  nlohmann::json prov = {{"construction", "comonoids"}};
  if (!c.provenance().is_null()) {
    prov["base"] = c.provenance();
  }
  b.provenance(prov);

  ComonoidCategory out;
  out.base = cat;
  out.category = b.build();
  out.skipped = found.skipped;
  const FinMonCat& z = *out.category;
  out.forget = Functor{out.category, cat, std::vector<Obj>(z.num_objects()),
                       std::vector<Mor>(z.num_morphisms())};
  out.comonoids.resize(z.num_objects());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const Obj p = z.object(names[i]);
    out.comonoids[p.index] = ms[i];
    out.forget.object_map[p.index] = ms[i].carrier;
  }
  for (const auto& f : arrows) {
    out.forget.morphism_map[z.arrow(f.name).index] = f.f;
  }
  return out;
}

CofreeResult cofree_comonoid(const ComonoidCategory& comon, Obj v) {
  const FinMonCat& c = *comon.base;
  const FinMonCat& z = *comon.category;
  (void)c.name(v);
  CofreeResult out;
  struct Pair {
    Obj d;
    Mor u;
  };
  std::vector<Pair> comma;
  for (Obj d : z.objects()) {
    for (Mor u : c.hom(comon.forget(d), v)) {
      comma.push_back({d, u});
    }
  }
  out.comma_objects = comma.size();
  auto show = [&](const Pair& p) { return "(" + z.name(p.d) + ", " + c.name(p.u) + ")"; };
  if (!comon.skipped.empty()) {
    out.notes.push_back(std::to_string(comon.skipped.size()) +
                        " carriers were skipped because the table leaves C (x) C undefined");
  }
  if (comma.empty()) {
    out.notes.push_back("the comma category (U | " + c.name(v) +
                        ") is empty: no comonoid has an arrow to " + c.name(v));
    return out;
  }
  for (const auto& cand : comma) {
    bool terminal = true;
    for (const auto& other : comma) {
      std::size_t count = 0;
      for (Mor f : z.hom(other.d, cand.d)) {
        auto r = c.try_compose(cand.u, comon.forget(f));
        if (r && *r == other.u) {
          ++count;
        }
      }
      if (count != 1) {
        out.trace.push_back({show(cand), show(other),
                             count == 0 ? "no comonoid morphism factors the arrow"
                                        : std::to_string(count) + " comonoid morphisms factor the arrow"});
        terminal = false;
        break;
      }
    }
    if (terminal) {
      out.cofree = cand.d;
      out.arrow = cand.u;
      return out;
    }
  }
  return out;
}

GeneratorCheck is_generating_set(const FinMonCat& c, const std::vector<Obj>& g, const Limits& limits) {
  require_within(c, limits, "generators");
  for (Obj x : g) {
    (void)c.name(x);
  }
  GeneratorCheck out;
  for (Obj x : c.objects()) {
    for (Obj y : c.objects()) {
      auto hs = c.hom(x, y);
      for (std::size_t i = 0; i < hs.size(); ++i) {
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
          bool separated = false;
          for (Obj gen : g) {
            for (Mor a : c.hom(gen, x)) {
              auto fa = c.try_compose(hs[i], a);
              auto ga = c.try_compose(hs[j], a);
              if (fa && ga && *fa != *ga) {
                separated = true;
                break;
              }
            }
            if (separated) {
              break;
            }
          }
          if (!separated) {
            out.generates = false;
            out.witness = std::make_pair(hs[i], hs[j]);
            return out;
          }
        }
      }
    }
  }
  return out;
}

std::vector<Obj> lift_generating_set(const Construction& target, const std::vector<Obj>& g,
                                     const Limits& limits) {
  const FinMonCat& c = *target.base;
  auto base = is_generating_set(c, g, limits);
  if (!base.generates) {
    throw PreconditionRefused("the given set does not generate the base category: " +
                              c.name(base.witness->first) + " and " + c.name(base.witness->second) +
                              " are not separated");
  }
  const Functor phi = braided_embedding(target);
  std::vector<Obj> lifted;
  for (Obj x : g) {
    lifted.push_back(phi(x));
  }
  auto check = is_generating_set(*target.category, lifted, limits);
  if (!check.generates) {
    const FinMonCat& z = *target.category;
    throw TheoremViolation("lifted set does not generate " + to_string(target.kind) + ": " +
                           z.name(check.witness->first) + " and " + z.name(check.witness->second) +
                           " are not separated");
  }
  return lifted;
}

std::vector<QuotientClass> quotients_of(const FinMonCat& c, Obj a, const Limits& limits) {
  require_within(c, limits, "quotients");
  std::vector<Mor> epis;
  for (Obj b : c.objects()) {
    for (Mor f : c.hom(a, b)) {
      if (is_epi(c, f, limits)) {
        epis.push_back(f);
      }
    }
  }
  // Objects then morphisms are in identifier order, so the first member of
  // each class is its smallest (codomain, morphism) pair.
  std::vector<QuotientClass> classes;
  for (Mor q : epis) {
    bool placed = false;
    for (auto& cls : classes) {
      const Mor p = cls.representative;
      for (Mor theta : isomorphisms(c, c.cod(p), c.cod(q))) {
        if (c.compose(theta, p) == q) {
          cls.members.push_back(q);
          placed = true;
          break;
        }
      }
      if (placed) {
        break;
      }
    }
    if (!placed) {
      classes.push_back({q, {q}});
    }
  }
  return classes;
}

EpiTransfer epi_transfer_check(const Construction& k, Mor p, Mor q, const Limits& limits) {
  const FinMonCat& z = *k.category;
  const FinMonCat& c = *k.base;
  if (z.dom(p) != z.dom(q)) {
    throw MalformedInput("epi_transfer_check: p and q need a common domain");
  }
  if (!is_epi(z, p, limits) || !is_epi(z, q, limits)) {
    throw MalformedInput("epi_transfer_check: p and q must be epimorphisms of the construction");
  }
  EpiTransfer out;
  const Mor up = k.forget(p);
  const Mor uq = k.forget(q);
  for (Mor theta : isomorphisms(c, c.cod(up), c.cod(uq))) {
    if (c.compose(theta, up) == uq) {
      out.thetas.push_back(theta);
    }
  }
  if (out.thetas.empty()) {
    throw MalformedInput("epi_transfer_check: U(p) and U(q) are not equivalent in the base");
  }
  out.holds = true;
  for (Mor theta : out.thetas) {
    const Mor inv = *inverse(c, theta);
    const bool forward = k.is_morphism_data(z.cod(p), z.cod(q), theta);
    const bool backward = k.is_morphism_data(z.cod(q), z.cod(p), inv);
    if (!forward || !backward) {
      out.holds = false;
      out.detail = "theta = " + c.name(theta) + (forward ? "" : " fails the squares") +
                   (backward ? "" : "; its inverse fails the squares");
      break;
    }
  }
  return out;
}

}  // namespace zcat
