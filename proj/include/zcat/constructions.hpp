#pragma once

// The center Z(C), the weak center Z_w(C), the centralizers Z_X(C) of an
// object and Z_h(C) of a morphism, built as explicit FinMonCat tables, plus
// the evaluation, comparison and embedding functors between them.
//
// Component directions follow the definitions:
//   center / weak center  sigma_Y : A (x) Y -> Y (x) A     (carrier A)
//   Z_X                   alpha   : A (x) X -> X (x) A     (carrier A)
//   Z_h, h : A -> B       alpha   : A (x) X -> X (x) A,
//                         beta    : B (x) X -> X (x) B     (carrier X)

#include <map>
#include <optional>
#include <tuple>
#include <string>
#include <vector>

#include "zcat/fincat.hpp"

namespace zcat {

enum class ConstructionKind { Center, WeakCenter, CentralizerObject, CentralizerMorphism };

[[nodiscard]] std::string to_string(ConstructionKind kind);

struct Construction {
  ConstructionKind kind = ConstructionKind::Center;
  CatPtr base;
  CatPtr category;
  Functor forget;  // category -> base
  // Per constructed object (indexed by Obj): sigma_Y for every base Y
  // (centers), {alpha} (Z_X) or {alpha, beta} (Z_h).
  std::vector<std::vector<Mor>> components;
  Obj fixed_object;    // X for Z_X
  Mor fixed_morphism;  // h for Z_h

  [[nodiscard]] Obj carrier(Obj p) const { return forget(p); }
  [[nodiscard]] const std::vector<Mor>& data(Obj p) const { return components.at(p.index); }

  // Whether (carrier, comps) satisfies the defining conditions.
  [[nodiscard]] bool is_object_data(Obj carrier, const std::vector<Mor>& comps) const;
  // Whether the base arrow f : carrier(p) -> carrier(q) satisfies the
  // morphism squares.
  [[nodiscard]] bool is_morphism_data(Obj p, Obj q, Mor f) const;
  // Components of the tensor product of two constructed objects.
  [[nodiscard]] std::vector<Mor> tensor_data(Obj p, Obj q) const;

  [[nodiscard]] std::optional<Obj> find(Obj carrier, const std::vector<Mor>& comps) const;
  // The constructed morphism p -> q over f, if f satisfies the squares.
  [[nodiscard]] std::optional<Mor> lift(Obj p, Obj q, Mor f) const;

  std::map<std::pair<Obj, std::vector<Mor>>, Obj> object_lookup;
  std::map<std::tuple<Mor, Obj, Obj>, Mor> morphism_lookup;
};

// All constructions refuse partial or non-monoidal bases (MissingStructure /
// PartialTable) and apply the size guardrail to the base and the result.
[[nodiscard]] Construction center(const CatPtr& base, const Limits& limits = {});
[[nodiscard]] Construction weak_center(const CatPtr& base, const Limits& limits = {});
[[nodiscard]] Construction centralizer_of_object(const CatPtr& base, Obj x,
                                                 const Limits& limits = {});
[[nodiscard]] Construction centralizer_of_morphism(const CatPtr& base, Mor h,
                                                   const Limits& limits = {});

// H_X : Z(C) -> Z_X(C), (A, sigma) |-> (A, sigma_X).
[[nodiscard]] Functor evaluation_functor(const Construction& center, const Construction& zx);

// S_A : Z_{id_A}(C) -> Z_A(C), (X, a, a) |-> (X, a^-1), and
// T_A : Z_A(C) -> Z_{id_A}(C), (X, a) |-> (X, a^-1, a^-1).
struct CentralizerIso {
  Functor s;
  Functor t;
};
[[nodiscard]] CentralizerIso centralizer_identity_iso(const Construction& zx,
                                                      const Construction& zh);

// Inclusion of the center into the weak center.
[[nodiscard]] Functor center_to_weak(const Construction& center, const Construction& weak);

// Phi_1..Phi_4 from a braided base into the given construction over it:
// W |-> (W, Psi_{W,-}), (W, Psi_{W,X}), (W, Psi_{A,W}, Psi_{B,W}), and
// (W, Psi_{W,-}) into the weak center. Membership of every image is
// re-verified; a failure throws TheoremViolation.
[[nodiscard]] Functor braided_embedding(const Construction& target);

}  // namespace zcat
