#pragma once

// Comonoids and their category, cofree comonoids found as terminal objects
// of comma categories, generating sets and their lifting along the braided
// embeddings, quotients, and the transfer of epi-equivalence to the
// constructions.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zcat/constructions.hpp"
#include "zcat/fincat.hpp"

namespace zcat {

struct Comonoid {
  Obj carrier;
  Mor comult;  // C -> C (x) C
  Mor counit;  // C -> I

  bool operator==(const Comonoid&) const = default;
};

// Coassociativity and both counit laws as table equalities.
[[nodiscard]] bool is_comonoid(const FinMonCat& cat, const Comonoid& c);

struct ComonoidEnumeration {
  std::vector<Comonoid> comonoids;  // by carrier, then comult, then counit
  // Carriers whose laws could not be decided because a partial table leaves
  // C (x) C, C (x) C (x) C or a needed composite undefined.
  std::vector<Obj> skipped;
};

[[nodiscard]] ComonoidEnumeration enumerate_comonoids(const CatPtr& cat,
                                                      const Limits& limits = {});

struct ComonoidCategory {
  CatPtr base;
  CatPtr category;
  Functor forget;
  std::vector<Comonoid> comonoids;  // indexed by Obj of `category`
  std::vector<Obj> skipped;
};

// Morphisms are base arrows f with D' f = (f (x) f) D and e' f = e. The
// result is monoidal only when the base carries a braiding; the tensor of
// comonoids interleaves the comultiplications with Psi.
[[nodiscard]] ComonoidCategory comonoid_category(const CatPtr& cat, const Limits& limits = {});

struct CofreeRejection {
  std::string candidate;   // "(comonoid, u)"
  std::string competitor;  // "(comonoid, f)"
  std::string reason;
};

struct CofreeResult {
  std::optional<Obj> cofree;  // object of the comonoid category
  std::optional<Mor> arrow;   // u : U(cofree) -> V
  std::size_t comma_objects = 0;
  std::vector<CofreeRejection> trace;
  std::vector<std::string> notes;
};

// Direct search for a terminal object of (U | V).
[[nodiscard]] CofreeResult cofree_comonoid(const ComonoidCategory& comon, Obj v);

struct GeneratorCheck {
  bool generates = true;
  std::optional<std::pair<Mor, Mor>> witness;  // an unseparated pair
};

[[nodiscard]] GeneratorCheck is_generating_set(const FinMonCat& cat, const std::vector<Obj>& g,
                                               const Limits& limits = {});

// Phi-image of a generating set of the braided base, re-verified in the
// target. PreconditionRefused when g does not generate the base;
// TheoremViolation when the image fails to generate the target.
[[nodiscard]] std::vector<Obj> lift_generating_set(const Construction& target,
                                                   const std::vector<Obj>& g,
                                                   const Limits& limits = {});

struct QuotientClass {
  Mor representative;
  std::vector<Mor> members;
};

// Epis out of a, grouped by p ~ q iff theta p = q for an iso theta.
[[nodiscard]] std::vector<QuotientClass> quotients_of(const FinMonCat& cat, Obj a,
                                                      const Limits& limits = {});

struct EpiTransfer {
  bool holds = false;
  std::vector<Mor> thetas;  // base isos with theta U(p) = U(q)
  std::string detail;
};

// p, q : epis of the construction out of the same object whose images are
// equivalent in the base. Holds iff every base iso theta with
// theta U(p) = U(q), and its inverse, satisfy the constructed squares.
// MalformedInput when the inputs do not meet these hypotheses.
[[nodiscard]] EpiTransfer epi_transfer_check(const Construction& k, Mor p, Mor q,
                                             const Limits& limits = {});

}  // namespace zcat
