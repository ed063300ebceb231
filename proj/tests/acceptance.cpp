// Acceptance suite: one PASS/FAIL line per criterion, with timing. Exit
// status is 0 only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "braid_oracle.hpp"
#include "instances.hpp"
#include "oracles.hpp"
#include "zcat/braid.hpp"
#include "zcat/catalog.hpp"
#include "zcat/cli.hpp"
#include "zcat/colimits.hpp"
#include "zcat/comonoids.hpp"
#include "zcat/constructions.hpp"

using namespace zcat;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::vector<Construction> all_constructions(const CatPtr& c) {
  std::vector<Construction> out = {center(c), weak_center(c)};
  for (Obj x : c->objects()) {
    out.push_back(centralizer_of_object(c, x));
  }
  for (Mor h : c->morphisms()) {
    out.push_back(centralizer_of_morphism(c, h));
  }
  return out;
}

std::string label(const Construction& k) {
  const FinMonCat& b = *k.base;
  switch (k.kind) {
    case ConstructionKind::CentralizerObject:
      return "Z_" + b.name(k.fixed_object);
    case ConstructionKind::CentralizerMorphism:
      return "Z_{" + b.name(k.fixed_morphism) + "}";
    case ConstructionKind::Center:
      return "Z";
    case ConstructionKind::WeakCenter:
      return "Z_w";
  }
  return "?";
}

// 1. Center object counts against the group-center oracle.
Verdict center_oracle() {
  struct Case {
    std::string name;
    std::vector<oracle::Perm> group;
    std::size_t expected;
  };
  const std::vector<Case> cases = {{"z2", oracle::cyclic(2), 2},
                                   {"z4", oracle::cyclic(4), 4},
                                   {"s3", oracle::all_perms(3), 1},
                                   {"d4", oracle::dihedral4(), 2}};
  Verdict v{true, ""};
  for (const auto& c : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t got = center(catalog::by_name(c.name)).category->num_objects();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::size_t oracle = oracle::group_center_size(oracle::cayley(c.group));
    v.pass = v.pass && got == oracle && got == c.expected && secs < 5.0;
    v.detail += c.name + " " + std::to_string(got) + "/" + std::to_string(oracle) + " ";
  }
  return v;
}

// 2. Every construction over every monoidal catalog entry passes all laws.
Verdict constructed_validity() {
  std::size_t built = 0;
  std::size_t violations = 0;
  std::size_t braided_centers = 0;
  for (const auto& [name, c] : catalog::monoidal_entries()) {
    for (const auto& k : all_constructions(c)) {
      ++built;
      auto r = validate_category(*k.category);
      violations += r.violations.size();
      if (k.kind == ConstructionKind::Center) {
        braided_centers += k.category->has_braiding() ? 1 : 0;
      }
    }
  }
  const std::size_t entries = catalog::monoidal_entries().size();
  return {violations == 0 && braided_centers == entries,
          std::to_string(built) + " categories over " + std::to_string(entries) + " bases, " +
              std::to_string(violations) + " violations, " + std::to_string(braided_centers) +
              " braided centers"};
}

// 3. Colimit inheritance on D30.
Verdict colimit_inheritance() {
  auto d30 = catalog::divisor_lattice(30);
  std::vector<Diagram> ds;
  const auto objs = d30->objects();
  for (std::size_t i = 0; i < objs.size(); ++i) {
    for (std::size_t j = i; j < objs.size(); ++j) {
      ds.push_back(discrete_diagram(d30, {objs[i], objs[j]}));
    }
  }
  for (Mor f : d30->morphisms()) {
    ds.push_back(arrow_diagram(d30, f));
  }
  ds.push_back(discrete_diagram(d30, {}));
  for (Obj x : objs) {
    for (auto side : {TensorFunctor::Side::Left, TensorFunctor::Side::Right}) {
      if (!is_cocontinuous(d30, {side, x}, ds).cocontinuous) {
        return {false, "tensor functor of " + d30->name(x) + " is not cocontinuous"};
      }
    }
  }
  std::size_t runs = 0;
  for (const auto& k : all_constructions(d30)) {
    for (const auto& d : ds) {
      const Diagram lifted = push_forward(braided_embedding(k), d);
      auto ind = colimit_in_construction(k, lifted);
      auto base = colimit(d);
      bool same = base && k.forget(ind.lifted.cocone.apex) == base->cocone.apex;
      for (std::size_t i = 0; same && i < base->cocone.legs.size(); ++i) {
        same = k.forget(ind.lifted.cocone.legs[i]) == base->cocone.legs[i];
      }
      bool isos = true;
      for (Mor m : ind.induced) {
        isos = isos && is_iso(*d30, m);
      }
      if (!same || !isos || ind.checks.empty()) {
        return {false, label(k) + ": mismatch on diagram " + std::to_string(runs)};
      }
      ++runs;
    }
  }
  return {true, std::to_string(runs) + " induced colimits over " + std::to_string(ds.size()) +
                    " diagrams, cocones identical, induced maps invertible"};
}

// 4. M3: P_a is not cocontinuous, witness {b, c}; the constructions refuse.
Verdict negative_control() {
  auto m3 = catalog::diamond_m3();
  std::vector<Diagram> ds;
  const auto objs = m3->objects();
  for (std::size_t i = 0; i < objs.size(); ++i) {
    for (std::size_t j = i + 1; j < objs.size(); ++j) {
      ds.push_back(discrete_diagram(m3, {objs[i], objs[j]}));
    }
  }
  const Obj a = m3->object("a");
  auto r = is_cocontinuous(m3, {TensorFunctor::Side::Left, a}, ds);
  if (r.cocontinuous || !r.witness) {
    return {false, "P_a reported cocontinuous"};
  }
  const Diagram& w = ds[*r.witness];
  std::set<std::string> witness;
  for (Obj s : w.shape->objects()) {
    witness.insert(m3->name(w.assignment(s)));
  }
  std::size_t refused = 0;
  const std::vector<Construction> ks = {centralizer_of_object(m3, a),
                                        centralizer_of_morphism(m3, m3->identity(a)), center(m3),
                                        weak_center(m3)};
  for (const auto& k : ks) {
    try {
      (void)colimit_in_construction(k, push_forward(braided_embedding(k), w));
    } catch (const PreconditionRefused&) {
      ++refused;
    }
  }
  const bool ok = witness == std::set<std::string>{"b", "c"} && refused == ks.size();
  return {ok, "witness {" + *witness.begin() + ", " + *witness.rbegin() + "}, " + std::to_string(refused) +
                  "/" + std::to_string(ks.size()) + " constructions refused"};
}

// 5. Epi transfer on seeded random instances.
Verdict epi_transfer() {
  instances::TransferGenerator gen(20240601);
  std::size_t passed = 0;
  std::size_t nontrivial = 0;
  std::string first;
  for (int i = 0; i < 200; ++i) {
    auto inst = gen.next();
    auto r = epi_transfer_check(*inst.construction, inst.p, inst.q);
    if (r.holds) {
      ++passed;
    } else if (first.empty()) {
      first = inst.label + ": " + r.detail;
    }
    nontrivial += inst.p != inst.q ? 1 : 0;
  }
  return {passed == 200, std::to_string(passed) + "/200 hold (" + std::to_string(nontrivial) +
                             " with p != q)" + (first.empty() ? "" : "; first failure " + first)};
}

// 6. Lifting generating sets along the braided embeddings.
Verdict lifting() {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::map<std::string, std::set<std::string>> failures;
  std::string example;
  for (const auto& [name, c] : catalog::braided_entries()) {
    std::vector<std::vector<Obj>> sets;
    for (unsigned mask = 0; mask < (1u << c->num_objects()); ++mask) {
      std::vector<Obj> g;
      for (Obj x : c->objects()) {
        if (mask & (1u << x.index)) {
          g.push_back(x);
        }
      }
      if (is_generating_set(*c, g).generates) {
        sets.push_back(g);
      }
    }
    for (const auto& k : all_constructions(c)) {
      for (const auto& g : sets) {
        ++checked;
        try {
          (void)lift_generating_set(k, g);
        } catch (const TheoremViolation& e) {
          ++failed;
          failures[name].insert(label(k));
          if (example.empty()) {
            example = name + " " + label(k) + ": " + e.what();
          }
        }
      }
    }
  }
  std::string detail = std::to_string(checked - failed) + "/" + std::to_string(checked) + " lifts generate";
  for (const auto& [name, ks] : failures) {
    detail += "; " + name + " fails in";
    for (const auto& k : ks) {
      detail += " " + k;
    }
  }
  if (!example.empty()) {
    detail += "; e.g. " + example;
  }
  return {failed == 0, detail};
}

// 7. Cofree comonoids on D30 and discrete S3.
Verdict cofree() {
  auto d30 = catalog::divisor_lattice(30);
  auto k = comonoid_category(d30);
  std::size_t found = 0;
  for (Obj v : d30->objects()) {
    auto r = cofree_comonoid(k, v);
    found += r.cofree && k.forget(*r.cofree) == v && d30->is_identity(*r.arrow) ? 1 : 0;
  }
  auto s3 = catalog::symmetric_group_s3();
  auto ks = comonoid_category(s3);
  bool e_found = false;
  std::size_t not_found = 0;
  for (Obj v : s3->objects()) {
    auto r = cofree_comonoid(ks, v);
    if (s3->name(v) == "e") {
      e_found = r.cofree.has_value() && s3->is_identity(*r.arrow);
    } else {
      not_found += r.cofree ? 0 : 1;
    }
  }
  return {found == d30->num_objects() && e_found && not_found == 5,
          "D30 " + std::to_string(found) + "/" + std::to_string(d30->num_objects()) +
              " with arrow id; S3 over e " + (e_found ? "found" : "missing") + ", " +
              std::to_string(not_found) + "/5 NotFound"};
}

// 8. Braid word problem.
Verdict word_problem() {
  using namespace braid;
  std::size_t relations = 0;
  std::size_t bad = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        if (std::abs(i - j) >= 2) {
          ++relations;
          bad += braids_equal(BraidWord{n, {i, j}}, BraidWord{n, {j, i}}) ? 0 : 1;
        }
      }
      if (i + 1 < n) {
        ++relations;
        bad += braids_equal(BraidWord{n, {i, i + 1, i}}, BraidWord{n, {i + 1, i, i + 1}}) ? 0 : 1;
      }
    }
  }
  std::mt19937 rng(1000);
  std::size_t rewrites_bad = 0;
  std::size_t perm_bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 5;
    auto w = oracle::random_word(rng, n, 10);
    auto v = w;
    for (int step = 0; step < 8; ++step) {
      oracle::random_rewrite(rng, v);
    }
    rewrites_bad += normal_form(v) == normal_form(w) ? 0 : 1;
    perm_bad += permutation_of(v) == permutation_of(w) ? 0 : 1;
    // Unrelated pairs: equality must imply equal permutations.
    auto u = oracle::random_word(rng, n, 4);
    if (braids_equal(u, w) && permutation_of(u) != permutation_of(w)) {
      ++perm_bad;
    }
  }
  return {bad == 0 && rewrites_bad == 0 && perm_bad == 0,
          std::to_string(relations - bad) + "/" + std::to_string(relations) + " relations, " +
              std::to_string(1000 - rewrites_bad) + "/1000 rewrites keep the normal form, " +
              std::to_string(perm_bad) + " permutation contradictions"};
}

// 9. The braid category checks.
Verdict braid_theorems() {
  auto checks = braid::braid_theorem_checks(cli::kDefaultSeed);
  bool all = true;
  std::string detail;
  for (const auto& c : checks) {
    all = all && c.passed;
    detail += "(" + c.id + ") " + (c.passed ? "ok" : "FAILED") + ": " + c.detail + "; ";
  }
  detail.resize(detail.size() - 2);
  return {all && checks.size() == 3, detail};
}

// 10. Ribbon relations in the framed model.
Verdict ribbon() {
  using namespace braid;
  std::mt19937 rng(10);
  std::size_t checked = 0;
  std::size_t bad = 0;
  auto random_framed = [&](int n) {
    FramedBraid x = framed(identity_word(n));
    std::uniform_int_distribution<int> gen(1, n);
    std::bernoulli_distribution sign(0.5);
    for (int k = 0; k < 6; ++k) {
      const int g = gen(rng);
      x = framed_compose(x, ribbon_generator(n, sign(rng) ? g : -g));
    }
    return x;
  };
  auto expect = [&](int n, const FramedBraid& l, const FramedBraid& r) {
    for (int sample = 0; sample < 10; ++sample) {
      const FramedBraid x = random_framed(n);
      const FramedBraid y = random_framed(n);
      ++checked;
      bad += framed_equal(framed_compose(framed_compose(x, l), y), framed_compose(framed_compose(x, r), y)) ? 0 : 1;
    }
  };
  for (int n = 1; n <= 5; ++n) {
    auto s = [n](int k) { return ribbon_generator(n, k); };
    auto c = [](const FramedBraid& a, const FramedBraid& b) { return framed_compose(a, b); };
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (std::abs(i - j) >= 2) {
          expect(n, c(s(i), s(j)), c(s(j), s(i)));
        }
      }
      if (i + 1 <= n - 1) {
        expect(n, c(c(s(i), s(i + 1)), s(i)), c(c(s(i + 1), s(i)), s(i + 1)));
      }
    }
    if (n >= 2) {
      expect(n, c(c(s(n - 1), s(n)), c(s(n - 1), s(n))), c(c(s(n), s(n - 1)), c(s(n), s(n - 1))));
    }
  }
  return {bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) +
                        " relation instances hold, n <= 5, including the extra relation"};
}

// 11. The cofree discrepancy surfaces with exit code 2.
Verdict discrepancy() {
  std::size_t ok = 0;
  for (const char* n : {"1", "2", "3", "4"}) {
    const char* argv[] = {"zcat", "braid", "cofree", "--over", n, "--max-n", "6", "--max-letters", "1"};
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::main_entry(9, argv, out, err);
    auto j = nlohmann::json::parse(out.str());
    const bool good = code == cli::kExitViolation && j["found"] == false && j["comma_objects"] == 0 &&
                      j["trace"].empty() && j.contains("discrepancy") &&
                      j["discrepancy"].contains("open_question");
    ok += good ? 1 : 0;
  }
  return {ok == 4, std::to_string(ok) + "/4 objects n > 0: NotFound, empty comma category, exit 2, "
                                        "open question cross-referenced"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"center oracle", center_oracle},
      {"constructed-category validity", constructed_validity},
      {"colimit inheritance", colimit_inheritance},
      {"negative cocontinuity control", negative_control},
      {"epi transfer", epi_transfer},
      {"generating-set lifting", lifting},
      {"cofree search", cofree},
      {"braid word problem", word_problem},
      {"braid theorems", braid_theorems},
      {"ribbon model", ribbon},
      {"cofree discrepancy reported", discrepancy},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += v.pass ? 0 : 1;
    std::printf("[%s] %2d. %s (%.2f s): %s\n", v.pass ? "PASS" : "FAIL", index, name.c_str(), secs,
                v.detail.c_str());
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
