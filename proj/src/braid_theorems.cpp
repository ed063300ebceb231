#include <random>
#include <sstream>

#include "zcat/braid.hpp"
#include "zcat/colimits.hpp"
#include "zcat/comonoids.hpp"

namespace zcat::braid {

namespace {

BraidWord random_word(std::mt19937_64& rng, int strands, int length) {
  BraidWord w{strands, {}};
  if (strands < 2) {
    return w;
  }
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution sign(0.5);
  for (int k = 0; k < length; ++k) {
    const int i = gen(rng);
    w.letters.push_back(sign(rng) ? i : -i);
  }
  return w;
}

TheoremCheck not_cocomplete() {
  TheoremCheck out{"a", "the discrete diagram {1, 2} has no colimit in B", false, ""};
  auto b = braid_as_finmoncat(6, 2);
  auto d = discrete_diagram(b, {b->object("1"), b->object("2")});
  auto cocones = enumerate_cocones(d);
  auto c = colimit(d);
  out.passed = !c.has_value() && cocones.empty();
  std::ostringstream s;
  s << "window 0..6, words of length <= 2: " << cocones.size() << " cocones, colimit "
    << (c ? "found at " + b->name(c->cocone.apex) : std::string("NotFound"));
  out.detail = s.str();
  return out;
}

TheoremCheck trivial_comonoids() {
  TheoremCheck out{"b", "CoMon(B) restricted to objects 0..6 is the trivial comonoid at 0", false, ""};
  // Objects up to 12 so that C (x) C is inside the window for every C <= 6.
  auto b = braid_as_finmoncat(12, 1);
  auto found = enumerate_comonoids(b);
  std::size_t in_range = 0;
  bool at_zero = false;
  for (const auto& m : found.comonoids) {
    if (std::stoi(b->name(m.carrier)) <= 6) {
      ++in_range;
      at_zero = b->name(m.carrier) == "0" && b->is_identity(m.comult) && b->is_identity(m.counit);
    }
  }
  bool decided = true;
  for (Obj x : found.skipped) {
    decided = decided && std::stoi(b->name(x)) > 6;
  }
  out.passed = in_range == 1 && at_zero && decided;
  std::ostringstream s;
  s << in_range << " comonoid(s) with carrier <= 6" << (at_zero ? ", (0, id_0, id_0)" : "") << "; "
    << found.skipped.size() << " larger carriers skipped (C (x) C outside the window)";
  out.detail = s.str();
  return out;
}

TheoremCheck hexagons(std::uint64_t seed) {
  TheoremCheck out{"c", "c_{m,n} satisfies both hexagons and naturality for m, n, p <= 4", true, ""};
  std::mt19937_64 rng(seed);
  std::size_t checked = 0;
  std::string first_failure;
  auto expect = [&](bool ok, const std::string& what) {
    ++checked;
    if (!ok && out.passed) {
      out.passed = false;
      first_failure = what;
    }
  };
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      for (int p = 0; p <= 4; ++p) {
        const std::string at = std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(p);
        expect(braids_equal(braiding_word(m + n, p),
                            compose_braids(tensor_braids(identity_word(m), braiding_word(n, p)),
                                           tensor_braids(braiding_word(m, p), identity_word(n)))),
               "first hexagon at " + at);
        expect(braids_equal(braiding_word(m, n + p),
                            compose_braids(tensor_braids(braiding_word(m, n), identity_word(p)),
                                           tensor_braids(identity_word(n), braiding_word(m, p)))),
               "second hexagon at " + at);
      }
      for (int k = 0; k < 8; ++k) {
        std::uniform_int_distribution<int> len(0, 6);
        const BraidWord a = random_word(rng, m, len(rng));
        const BraidWord b = random_word(rng, n, len(rng));
        expect(braids_equal(compose_braids(braiding_word(m, n), tensor_braids(b, a)),
                            compose_braids(tensor_braids(a, b), braiding_word(m, n))),
               "naturality at " + std::to_string(m) + "," + std::to_string(n) + " for " + to_string(a) +
                   " / " + to_string(b));
      }
    }
  }
  out.detail = std::to_string(checked) + " identities checked" +
               (out.passed ? "" : "; first failure: " + first_failure);
  return out;
}

}  // namespace

std::vector<TheoremCheck> braid_theorem_checks(std::uint64_t seed) {
  return {not_cocomplete(), trivial_comonoids(), hexagons(seed)};
}

}  // namespace zcat::braid
