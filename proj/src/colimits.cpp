#include "zcat/colimits.hpp"

#include <functional>

namespace zcat {

namespace {

Mor compose_or_throw(const FinMonCat& c, Mor g, Mor f) {
  if (auto r = c.try_compose(g, f)) {
    return *r;
  }
  throw PartialTable("colimit search needs the composite " + c.name(g) + " . " + c.name(f) +
                     ", which this truncated table leaves undefined");
}

void check_shape(const Diagram& d, const Limits& limits) {
  if (d.shape->num_objects() > limits.max_shape_objects) {
    throw GuardrailExceeded("diagram shape has " + std::to_string(d.shape->num_objects()) +
                            " objects, above the bound of " +
                            std::to_string(limits.max_shape_objects));
  }
  require_within(*d.target(), limits, "colimit");
}

}  // namespace

bool is_cocone(const Diagram& d, const Cocone& k) {
  const FinMonCat& s = *d.shape;
  const FinMonCat& c = *d.target();
  if (k.legs.size() != s.num_objects()) {
    return false;
  }
  for (Obj x : s.objects()) {
    const Mor leg = k.legs[x.index];
    if (c.dom(leg) != d.assignment(x) || c.cod(leg) != k.apex) {
      return false;
    }
  }
  for (Mor u : s.morphisms()) {
    if (compose_or_throw(c, k.legs[s.cod(u).index], d.assignment(u)) != k.legs[s.dom(u).index]) {
      return false;
    }
  }
  return true;
}

std::vector<Cocone> enumerate_cocones(const Diagram& d, const Limits& limits) {
  check_shape(d, limits);
  const FinMonCat& s = *d.shape;
  const FinMonCat& c = *d.target();
  const std::size_t n = s.num_objects();
  std::vector<Cocone> out;
  for (Obj apex : c.objects()) {
    Cocone k{apex, std::vector<Mor>(n)};
    // Shape arrows between already chosen objects are checked as soon as
    // both ends have legs.
    std::function<void(std::size_t)> search = [&](std::size_t i) {
      if (i == n) {
        out.push_back(k);
        return;
      }
      for (Mor leg : c.hom(d.assignment(Obj(i)), apex)) {
        k.legs[i] = leg;
        bool ok = true;
        for (std::size_t j = 0; j <= i && ok; ++j) {
          for (Mor u : s.hom(Obj(j), Obj(i))) {
            ok = ok && compose_or_throw(c, leg, d.assignment(u)) == k.legs[j];
          }
          for (Mor u : s.hom(Obj(i), Obj(j))) {
            ok = ok && compose_or_throw(c, k.legs[j], d.assignment(u)) == leg;
          }
        }
        if (ok) {
          search(i + 1);
        }
      }
    };
    search(0);
  }
  return out;
}

std::vector<Mor> factorizations(const Diagram& d, const Cocone& from, const Cocone& to) {
  const FinMonCat& c = *d.target();
  std::vector<Mor> out;
  for (Mor g : c.hom(from.apex, to.apex)) {
    bool ok = true;
    for (std::size_t i = 0; i < from.legs.size() && ok; ++i) {
      ok = compose_or_throw(c, g, from.legs[i]) == to.legs[i];
    }
    if (ok) {
      out.push_back(g);
    }
  }
  return out;
}

namespace {

bool universal_among(const Diagram& d, const Cocone& k, const std::vector<Cocone>& all) {
  for (const auto& other : all) {
    if (factorizations(d, k, other).size() != 1) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_universal(const Diagram& d, const Cocone& k, const Limits& limits) {
  return is_cocone(d, k) && universal_among(d, k, enumerate_cocones(d, limits));
}

std::optional<Colimit> colimit(const Diagram& d, const Limits& limits) {
  const auto all = enumerate_cocones(d, limits);
  for (const auto& k : all) {
    if (universal_among(d, k, all)) {
      return Colimit{d, k};
    }
  }
  return std::nullopt;
}

Mor mediating_morphism(const Colimit& colim, const Cocone& competing) {
  if (!is_cocone(colim.diagram, competing)) {
    throw MalformedInput("competing cocone is not a cocone over the colimit's diagram");
  }
  const auto gs = factorizations(colim.diagram, colim.cocone, competing);
  if (gs.size() != 1) {
    throw ColimitInconsistency("stored colimit has " + std::to_string(gs.size()) +
                               " factorizations of a competing cocone (exactly one expected)");
  }
  return gs.front();
}

namespace {

Cocone image_cocone(const FinMonCat& c, const TensorFunctor& tf, const Cocone& k) {
  Cocone out{apply_tensor_functor(c, tf, k.apex), {}};
  for (Mor leg : k.legs) {
    out.legs.push_back(apply_tensor_functor(c, tf, leg));
  }
  return out;
}

}  // namespace

CocontinuityResult is_cocontinuous(const CatPtr& cat, const TensorFunctor& tf,
                                   const std::vector<Diagram>& diagrams, const Limits& limits) {
  CocontinuityResult result;
  const Functor f = as_functor(cat, tf);
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    if (diagrams[i].target() != cat) {
      throw MalformedInput("diagram " + std::to_string(i) + " lives in a different category");
    }
    auto colim = colimit(diagrams[i], limits);
    if (!colim) {
      result.skipped.push_back(i);
      continue;
    }
    const Diagram image = push_forward(f, diagrams[i]);
    if (!is_universal(image, image_cocone(*cat, tf, colim->cocone), limits)) {
      result.cocontinuous = false;
      result.witness = i;
      return result;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Induced colimits

namespace {

struct Inducer {
  const Construction& k;
  const FinMonCat& c;
  const Diagram& under;  // U.D in the base
  const Colimit& colim;  // its colimit (C, phi)
  std::vector<std::string>& checks;

  void require(bool ok, const std::string& what) const {
    if (!ok) {
      throw TheoremViolation(to_string(k.kind) + " colimit: " + what + " fails");
    }
    checks.push_back(what);
  }

  // The unique g with g . (tf phi_D) = target_D for every D, where
  // target_D comes from `leg`. The image of the colimit under tf is itself a
  // colimit (checked beforehand), so uniqueness is asserted.
  Mor induce(const TensorFunctor& tf, const std::function<Mor(Obj)>& leg, Obj apex,
             const std::string& what) const {
    const Diagram image = push_forward(as_functor(k.base, tf), under);
    Cocone from{apply_tensor_functor(c, tf, colim.cocone.apex), {}};
    Cocone to{apex, {}};
    for (Obj x : under.shape->objects()) {
      from.legs.push_back(apply_tensor_functor(c, tf, colim.cocone.legs[x.index]));
      to.legs.push_back(leg(x));
    }
    require(is_cocone(image, to), what + ": target family is a cocone on " + describe(c, tf) + " D");
    const auto gs = factorizations(image, from, to);
    require(gs.size() == 1, what + ": unique mediator");
    return gs.front();
  }
};

Mor inverse_of(const FinMonCat& c, Mor f, const std::string& what) {
  auto g = inverse(c, f);
  if (!g) {
    throw TheoremViolation(what + " is not invertible");
  }
  return *g;
}

}  // namespace

InducedColimit colimit_in_construction(const Construction& k, const Diagram& diagram,
                                       const Limits& limits) {
  if (diagram.target() != k.category) {
    throw MalformedInput("diagram does not live in the constructed category");
  }
  const FinMonCat& c = *k.base;
  const std::string what = to_string(k.kind);
  InducedColimit out{};
  const Diagram under = push_forward(k.forget, diagram);
  auto base = colimit(under, limits);
  if (!base) {
    throw PreconditionRefused(what + " colimit: the underlying diagram has no colimit in the base");
  }

  // Tensor functors whose cocontinuity the construction relies on.
  std::vector<TensorFunctor> needed;
  auto both_sides = [&](Obj x) {
    needed.push_back({TensorFunctor::Side::Left, x});
    needed.push_back({TensorFunctor::Side::Right, x});
  };
  switch (k.kind) {
    case ConstructionKind::CentralizerMorphism:
      both_sides(c.dom(k.fixed_morphism));
      both_sides(c.cod(k.fixed_morphism));
      break;
    case ConstructionKind::CentralizerObject:
      both_sides(k.fixed_object);
      break;
    case ConstructionKind::Center:
    case ConstructionKind::WeakCenter:
      for (Obj x : c.objects()) {
        both_sides(x);
      }
      break;
  }
  for (const auto& tf : needed) {
    auto r = is_cocontinuous(k.base, tf, {under}, limits);
    if (!r.cocontinuous) {
      throw PreconditionRefused(what + " colimit refused: " + describe(c, tf) +
                                " does not preserve the colimit of the underlying diagram");
    }
  }
  out.checks.push_back("cocontinuity of the tensor functors on the underlying diagram");

  Inducer ind{k, c, under, *base, out.checks};
  const Obj apex = base->cocone.apex;
  const auto& phi = base->cocone.legs;
  auto comp = [&](Obj x, std::size_t i) { return k.data(diagram.assignment(x))[i]; };
  auto id = [&](Obj x) { return c.identity(x); };

  std::vector<Mor> comps;
  switch (k.kind) {
    case ConstructionKind::CentralizerMorphism: {
      const Obj a = c.dom(k.fixed_morphism);
      const Obj b = c.cod(k.fixed_morphism);
      const Obj sides[2] = {a, b};
      const char* names[2] = {"alpha-bar", "beta-bar"};
      for (int i = 0; i < 2; ++i) {
        const Obj s = sides[i];
        // g . (id_S (x) phi_D) = (phi_D (x) id_S) . alpha_D
        const Mor bar = ind.induce(
            {TensorFunctor::Side::Left, s},
            [&](Obj x) { return c.compose(c.tensor(phi[x.index], id(s)), comp(x, i)); },
            c.tensor(apex, s), names[i]);
        // g' . (phi_D (x) id_S) = (id_S (x) phi_D) . alpha_D^-1
        const Mor bar_inv = ind.induce(
            {TensorFunctor::Side::Right, s},
            [&](Obj x) {
              return c.compose(c.tensor(id(s), phi[x.index]), inverse_of(c, comp(x, i), "a diagram component"));
            },
            c.tensor(s, apex), std::string(names[i]) + "'");
        ind.require(c.compose(bar, bar_inv) == id(c.tensor(apex, s)) &&
                        c.compose(bar_inv, bar) == id(c.tensor(s, apex)),
                    std::string(names[i]) + " and its inverse compose to identities");
        comps.push_back(bar);
        out.induced.push_back(bar);
        out.inverses.push_back(bar_inv);
      }
      const Mor h = k.fixed_morphism;
      ind.require(c.compose(c.tensor(id(apex), h), comps[0]) == c.compose(comps[1], c.tensor(h, id(apex))),
                  "membership square (id_C (x) h) alpha-bar = beta-bar (h (x) id_C)");
      break;
    }
    case ConstructionKind::CentralizerObject: {
      const Obj x0 = k.fixed_object;
      // mu . (phi_D (x) id_X) = (id_X (x) phi_D) . alpha_D
      const Mor mu = ind.induce(
          {TensorFunctor::Side::Right, x0},
          [&](Obj x) { return c.compose(c.tensor(id(x0), phi[x.index]), comp(x, 0)); },
          c.tensor(x0, apex), "mu");
      // nu . (id_X (x) phi_D) = (phi_D (x) id_X) . alpha_D^-1
      const Mor nu = ind.induce(
          {TensorFunctor::Side::Left, x0},
          [&](Obj x) {
            return c.compose(c.tensor(phi[x.index], id(x0)), inverse_of(c, comp(x, 0), "a diagram component"));
          },
          c.tensor(apex, x0), "nu");
      ind.require(c.compose(mu, nu) == id(c.tensor(x0, apex)) && c.compose(nu, mu) == id(c.tensor(apex, x0)),
                  "mu and nu are mutually inverse");
      comps.push_back(mu);
      out.induced.push_back(mu);
      out.inverses.push_back(nu);
      break;
    }
    case ConstructionKind::Center:
    case ConstructionKind::WeakCenter: {
      const bool weak = k.kind == ConstructionKind::WeakCenter;
      for (Obj x0 : c.objects()) {
        const std::string tag = "mu_" + c.name(x0);
        const std::size_t xi = x0.index;
        const Mor mu = ind.induce(
            {TensorFunctor::Side::Right, x0},
            [&](Obj x) { return c.compose(c.tensor(id(x0), phi[x.index]), comp(x, xi)); },
            c.tensor(x0, apex), tag);
        comps.push_back(mu);
        out.induced.push_back(mu);
        if (!weak) {
          const Mor nu = ind.induce(
              {TensorFunctor::Side::Left, x0},
              [&](Obj x) {
                return c.compose(c.tensor(phi[x.index], id(x0)), inverse_of(c, comp(x, xi), "a diagram component"));
              },
              c.tensor(apex, x0), "nu_" + c.name(x0));
          ind.require(c.compose(mu, nu) == id(c.tensor(x0, apex)) &&
                          c.compose(nu, mu) == id(c.tensor(apex, x0)),
                      tag + " is invertible");
          out.inverses.push_back(nu);
        }
      }
      bool natural = true;
      for (Mor z : c.morphisms()) {
        // (zeta (x) id_C) mu_A = mu_B (id_C (x) zeta)
        natural = natural && c.compose(c.tensor(z, id(apex)), comps[c.dom(z).index]) ==
                                 c.compose(comps[c.cod(z).index], c.tensor(id(apex), z));
      }
      ind.require(natural, "naturality of mu");
      bool multiplicative = true;
      for (Obj x : c.objects()) {
        for (Obj y : c.objects()) {
          multiplicative = multiplicative &&
                           comps[c.tensor(x, y).index] ==
                               c.compose(c.tensor(id(x), comps[y.index]), c.tensor(comps[x.index], id(y)));
        }
      }
      ind.require(multiplicative, "multiplicativity mu_{X (x) Y} = (id_X (x) mu_Y)(mu_X (x) id_Y)");
      if (weak) {
        ind.require(comps[c.unit().index] == id(apex), "mu_I = id");
      }
      break;
    }
  }

  ind.require(k.is_object_data(apex, comps), "the induced data defines an object of the construction");
  const auto lifted_apex = k.find(apex, comps);
  ind.require(lifted_apex.has_value(), "the induced object is enumerated in the construction");
  Cocone lifted{*lifted_apex, {}};
  bool legs_lift = true;
  for (Obj x : diagram.shape->objects()) {
    auto leg = k.lift(diagram.assignment(x), *lifted_apex, phi[x.index]);
    legs_lift = legs_lift && leg.has_value();
    lifted.legs.push_back(leg ? *leg : Mor());
  }
  ind.require(legs_lift, "the colimit legs are morphisms of the construction");
  ind.require(is_cocone(diagram, lifted), "the lifted legs form a cocone");

  // Universality in the constructed category, and every base mediator out
  // of (C, phi) towards a lifted competitor is itself a constructed morphism.
  const auto competitors = enumerate_cocones(diagram, limits);
  bool universal = true;
  bool mediators_lift = true;
  for (const auto& other : competitors) {
    const auto gs = factorizations(diagram, lifted, other);
    universal = universal && gs.size() == 1;
    Cocone under_other{k.carrier(other.apex), {}};
    for (Mor leg : other.legs) {
      under_other.legs.push_back(k.forget(leg));
    }
    const auto base_g = factorizations(under, base->cocone, under_other);
    mediators_lift = mediators_lift && base_g.size() == 1 &&
                     k.lift(*lifted_apex, other.apex, base_g.front()).has_value();
  }
  ind.require(universal, "universality in the constructed category");
  ind.require(mediators_lift, "base mediators are morphisms of the construction");

  bool same = k.carrier(lifted.apex) == base->cocone.apex;
  for (std::size_t i = 0; i < lifted.legs.size(); ++i) {
    same = same && k.forget(lifted.legs[i]) == phi[i];
  }
  ind.require(same, "the underlying cocone is the base colimit");

  out.base = *base;
  out.lifted = Colimit{diagram, lifted};
  return out;
}

}  // namespace zcat
