#pragma once

// Finite colimits by exhaustive universal-property search, cocontinuity of
// tensor functors on given diagrams, and colimits in the centralizers and
// centers induced from colimits in the base category.

#include <optional>
#include <string>
#include <vector>

#include "zcat/constructions.hpp"
#include "zcat/fincat.hpp"

namespace zcat {

struct Cocone {
  Obj apex;
  std::vector<Mor> legs;  // indexed by shape object

  bool operator==(const Cocone&) const = default;
};

struct Colimit {
  Diagram diagram;
  Cocone cocone;
};

[[nodiscard]] bool is_cocone(const Diagram& diagram, const Cocone& cocone);
// All cocones, apexes in identifier order, legs in hom order.
[[nodiscard]] std::vector<Cocone> enumerate_cocones(const Diagram& diagram,
                                                    const Limits& limits = {});
// Every g : apex -> competing.apex with g . leg_D = competing.leg_D.
[[nodiscard]] std::vector<Mor> factorizations(const Diagram& diagram, const Cocone& from,
                                              const Cocone& to);
[[nodiscard]] bool is_universal(const Diagram& diagram, const Cocone& cocone,
                                const Limits& limits = {});

// The universal cocone with the smallest apex (then legs), or nullopt when
// the diagram has no colimit. Composites missing from a partial table raise
// PartialTable.
[[nodiscard]] std::optional<Colimit> colimit(const Diagram& diagram, const Limits& limits = {});

// The unique factorization of `competing` through the colimit; none or
// several raise ColimitInconsistency.
[[nodiscard]] Mor mediating_morphism(const Colimit& colimit, const Cocone& competing);

struct CocontinuityResult {
  bool cocontinuous = true;
  std::optional<std::size_t> witness;  // index of the first failing diagram
  std::vector<std::size_t> skipped;    // diagrams without a colimit
};

// Whether tf sends the colimit of each diagram to a colimit of its image.
[[nodiscard]] CocontinuityResult is_cocontinuous(const CatPtr& cat, const TensorFunctor& tf,
                                                 const std::vector<Diagram>& diagrams,
                                                 const Limits& limits = {});

// A colimit in a construction obtained from the base colimit of U.D.
struct InducedColimit {
  Colimit base;     // colimit of the underlying diagram
  Colimit lifted;   // the same cocone in the constructed category
  // Z_h: {alpha-bar, beta-bar}; Z_X: {mu}; centers: mu_X for every X.
  std::vector<Mor> induced;
  // The matching inverses (alpha-bar', beta-bar', nu); empty for the weak center.
  std::vector<Mor> inverses;
  std::vector<std::string> checks;  // conditions verified, in order
};

// Refuses (PreconditionRefused naming the functor) unless the tensor
// functors the construction relies on are cocontinuous on the underlying
// diagram. Every verified condition is listed in `checks`; a failing one
// throws TheoremViolation.
[[nodiscard]] InducedColimit colimit_in_construction(const Construction& k,
                                                     const Diagram& diagram,
                                                     const Limits& limits = {});

}  // namespace zcat
