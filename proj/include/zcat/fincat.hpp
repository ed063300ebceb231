#pragma once

// Finite strict monoidal categories stored as explicit tables, together with
// functors, diagrams and the law checks every other module relies on.
//
// Objects and morphisms are addressed by dense handles (`Obj`, `Mor`) whose
// order is the lexicographic order of their identifiers, so every enumeration
// in the library is reproducible.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "zcat/errors.hpp"

namespace zcat {

inline constexpr std::uint32_t kNoIndex = std::numeric_limits<std::uint32_t>::max();

template <class Tag>
struct Handle {
  std::uint32_t index = kNoIndex;

  constexpr Handle() = default;
  constexpr explicit Handle(std::uint32_t i) : index(i) {}
  constexpr explicit Handle(std::size_t i) : index(static_cast<std::uint32_t>(i)) {}
  constexpr explicit Handle(int i) : index(static_cast<std::uint32_t>(i)) {}

  [[nodiscard]] constexpr bool valid() const { return index != kNoIndex; }
  constexpr auto operator<=>(const Handle&) const = default;
};

using Obj = Handle<struct ObjTag>;
using Mor = Handle<struct MorTag>;

struct Morphism {
  std::string name;
  Obj dom;
  Obj cod;
};

// Size bounds for enumerating operations. Everything downstream of a
// category is exponential in its size.
struct Limits {
  std::size_t max_objects = 64;
  std::size_t max_morphisms = 4096;
  std::size_t max_shape_objects = 8;

  // Defaults overridden by ZCAT_MAX_OBJECTS / ZCAT_MAX_MORPHISMS when set.
  static Limits from_env();
};

class FinMonCat;
struct ValidationReport;

// Throws GuardrailExceeded naming `operation` when `cat` is too large.
void require_within(const FinMonCat& cat, const Limits& limits, std::string_view operation);

class FinMonCat {
 public:
  [[nodiscard]] std::size_t num_objects() const { return objects_.size(); }
  [[nodiscard]] std::size_t num_morphisms() const { return morphisms_.size(); }

  [[nodiscard]] const std::string& name(Obj a) const { return objects_.at(a.index); }
  [[nodiscard]] const std::string& name(Mor f) const { return morphisms_.at(f.index).name; }
  [[nodiscard]] const Morphism& morphism(Mor f) const { return morphisms_.at(f.index); }
  [[nodiscard]] Obj dom(Mor f) const { return morphisms_.at(f.index).dom; }
  [[nodiscard]] Obj cod(Mor f) const { return morphisms_.at(f.index).cod; }

  [[nodiscard]] std::optional<Obj> find_object(std::string_view name) const;
  [[nodiscard]] std::optional<Mor> find_morphism(std::string_view name) const;
  // Throwing lookups (UnknownId).
  [[nodiscard]] Obj object(std::string_view name) const;
  [[nodiscard]] Mor arrow(std::string_view name) const;

  [[nodiscard]] Mor identity(Obj a) const { return identities_.at(a.index); }
  [[nodiscard]] bool is_identity(Mor f) const { return identity(dom(f)) == f; }
  [[nodiscard]] std::span<const Mor> hom(Obj a, Obj b) const;

  // g after f. Throws NotComposable when cod(f) != dom(g); nullopt only when a
  // partial table leaves the composite undefined.
  [[nodiscard]] std::optional<Mor> try_compose(Mor g, Mor f) const;
  [[nodiscard]] Mor compose(Mor g, Mor f) const;

  [[nodiscard]] bool is_monoidal() const { return unit_.valid(); }
  [[nodiscard]] Obj unit() const;
  [[nodiscard]] std::optional<Obj> try_tensor(Obj a, Obj b) const;
  [[nodiscard]] Obj tensor(Obj a, Obj b) const;
  [[nodiscard]] std::optional<Mor> try_tensor(Mor f, Mor g) const;
  [[nodiscard]] Mor tensor(Mor f, Mor g) const;

  [[nodiscard]] bool has_braiding() const { return !braiding_.empty(); }
  [[nodiscard]] std::optional<Mor> try_braiding(Obj a, Obj b) const;
  [[nodiscard]] Mor braiding(Obj a, Obj b) const;

  // Truncated categories (e.g. finite windows of the braid category) leave
  // some composites and tensors undefined; lookups of those throw PartialTable.
  [[nodiscard]] bool is_partial() const { return partial_; }
  [[nodiscard]] const nlohmann::json& provenance() const { return provenance_; }

  [[nodiscard]] std::vector<Obj> objects() const;
  [[nodiscard]] std::vector<Mor> morphisms() const;

 private:
  friend class CategoryBuilder;
  friend ValidationReport validate_category(const FinMonCat& cat, const Limits& limits);

  static std::uint64_t key(std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::unordered_map<std::string, std::uint32_t> object_index_;
  std::unordered_map<std::string, std::uint32_t> morphism_index_;
  std::vector<Mor> identities_;
  std::vector<std::vector<Mor>> homs_;  // objects_.size()^2 buckets
  std::unordered_map<std::uint64_t, Mor> composition_;
  Obj unit_;
  std::vector<Obj> tensor_obj_;  // dense, kNoIndex where undefined
  std::unordered_map<std::uint64_t, Mor> tensor_mor_;
  std::vector<Mor> braiding_;  // dense when present
  bool partial_ = false;
  nlohmann::json provenance_;
};

using CatPtr = std::shared_ptr<const FinMonCat>;

// Assembles a FinMonCat from named entries. Identities that are not given are
// generated as "id_<obj>"; composites with identities and tensors of
// identities are filled in when absent. build() rejects structural problems
// (unknown or duplicate names); semantic law violations are left for
// validate_category to report.
class CategoryBuilder {
 public:
  CategoryBuilder& object(std::string name);
  CategoryBuilder& morphism(std::string name, std::string dom, std::string cod);
  CategoryBuilder& identity(std::string obj, std::string mor);
  CategoryBuilder& compose(std::string g, std::string f, std::string result);
  CategoryBuilder& unit(std::string obj);
  CategoryBuilder& tensor(std::string a, std::string b, std::string result);
  CategoryBuilder& tensor_morphisms(std::string f, std::string g, std::string result);
  CategoryBuilder& braiding(std::string a, std::string b, std::string mor);
  CategoryBuilder& partial(bool value);
  CategoryBuilder& provenance(nlohmann::json value);

  [[nodiscard]] CatPtr build() const;

 private:
  struct Entry3 {
    std::string a, b, r;
  };
  std::vector<std::string> objects_;
  std::vector<Entry3> morphisms_;  // name, dom, cod
  std::vector<std::pair<std::string, std::string>> identities_;
  std::vector<Entry3> composition_;
  std::optional<std::string> unit_;
  std::vector<Entry3> tensor_obj_;
  std::vector<Entry3> tensor_mor_;
  std::vector<Entry3> braiding_;
  bool partial_ = false;
  nlohmann::json provenance_;
};

struct Violation {
  std::string law;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  [[nodiscard]] bool ok() const { return violations.empty(); }
  void add(std::string law, std::string detail) {
    violations.push_back({std::move(law), std::move(detail)});
  }
};

// Checks every category, monoidal and braiding axiom by full enumeration.
// Violations are report entries; only the guardrail throws.
ValidationReport validate_category(const FinMonCat& cat, const Limits& limits = {});

[[nodiscard]] std::optional<Mor> inverse(const FinMonCat& cat, Mor f);
[[nodiscard]] bool is_iso(const FinMonCat& cat, Mor f);
// Right-cancellability by full enumeration of parallel pairs out of cod(f).
[[nodiscard]] bool is_epi(const FinMonCat& cat, Mor f, const Limits& limits = {});
[[nodiscard]] std::vector<Mor> isomorphisms(const FinMonCat& cat, Obj a, Obj b);

struct Functor {
  CatPtr source;
  CatPtr target;
  std::vector<Obj> object_map;
  std::vector<Mor> morphism_map;

  [[nodiscard]] Obj operator()(Obj a) const { return object_map.at(a.index); }
  [[nodiscard]] Mor operator()(Mor f) const { return morphism_map.at(f.index); }
};

ValidationReport validate_functor(const Functor& functor);
[[nodiscard]] Functor identity_functor(const CatPtr& cat);
// outer after inner.
[[nodiscard]] Functor compose_functors(const Functor& outer, const Functor& inner);
[[nodiscard]] bool is_injective(const Functor& functor);

// P_X = X (x) - (Left) or Q_X = - (x) X (Right).
struct TensorFunctor {
  enum class Side { Left, Right };
  Side side = Side::Left;
  Obj fixed;
};

[[nodiscard]] Obj apply_tensor_functor(const FinMonCat& cat, const TensorFunctor& tf, Obj a);
[[nodiscard]] Mor apply_tensor_functor(const FinMonCat& cat, const TensorFunctor& tf, Mor f);
[[nodiscard]] Functor as_functor(const CatPtr& cat, const TensorFunctor& tf);
[[nodiscard]] std::string describe(const FinMonCat& cat, const TensorFunctor& tf);

// A finite shape (tensor tables absent) with a functor into a target category.
struct Diagram {
  CatPtr shape;
  Functor assignment;

  [[nodiscard]] const CatPtr& target() const { return assignment.target; }
};

// Throws MalformedInput when the assignment is not a functor.
[[nodiscard]] Diagram make_diagram(Functor assignment);
// Discrete shape with objects d0, d1, ... sent to `objects`.
[[nodiscard]] Diagram discrete_diagram(const CatPtr& target, const std::vector<Obj>& objects);
// Shape d0 -> d1 sent to `f`.
[[nodiscard]] Diagram arrow_diagram(const CatPtr& target, Mor f);
// Post-composition of a diagram with a functor out of its target.
[[nodiscard]] Diagram push_forward(const Functor& functor, const Diagram& diagram);

}  // namespace zcat
