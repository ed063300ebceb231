#include "zcat/catalog.hpp"

#include <array>
#include <numeric>

namespace zcat::catalog {

CatPtr discrete_group(const std::vector<std::string>& elements,
                      const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                      bool braided) {
  CategoryBuilder b;
  for (const auto& g : elements) {
    b.object(g);
  }
  b.unit(elements.at(0));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      const auto& r = elements.at(mul(i, j));
      b.tensor(elements[i], elements[j], r);
      b.tensor_morphisms("id_" + elements[i], "id_" + elements[j], "id_" + r);
      if (braided) {
        b.braiding(elements[i], elements[j], "id_" + r);
      }
    }
  }
  b.provenance({{"catalog", "discrete_group"}, {"order", elements.size()}});
  return b.build();
}

CatPtr cyclic_group(std::size_t n) {
  std::vector<std::string> elements;
  for (std::size_t i = 0; i < n; ++i) {
    elements.push_back(std::to_string(i));
  }
  return discrete_group(elements, [n](std::size_t i, std::size_t j) { return (i + j) % n; }, true);
}

namespace {

// Permutations of {0,1,2} in one-line notation; product (p*q)(x) = p(q(x)).
using Perm3 = std::array<int, 3>;

}  // namespace

CatPtr symmetric_group_s3() {
  const std::vector<std::string> names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  const std::vector<Perm3> perms = {
      Perm3{0, 1, 2}, Perm3{1, 0, 2}, Perm3{2, 1, 0}, Perm3{0, 2, 1}, Perm3{1, 2, 0}, Perm3{2, 0, 1}};
  auto mul = [perms](std::size_t i, std::size_t j) {
    Perm3 r{};
    for (int x = 0; x < 3; ++x) {
      r[x] = perms[i][perms[j][x]];
    }
    for (std::size_t k = 0; k < perms.size(); ++k) {
      if (perms[k] == r) {
        return k;
      }
    }
    return std::size_t{0};
  };
  return discrete_group(names, mul, false);
}

CatPtr dihedral_group_d4() {
  // s^a r^k encoded as index 4a + k; r s = s r^-1.
  const std::vector<std::string> names = {"e", "r", "r2", "r3", "s", "sr", "sr2", "sr3"};
  auto mul = [](std::size_t i, std::size_t j) {
    const std::size_t a = i / 4, k = i % 4, b = j / 4, l = j % 4;
    // s^a r^k s^b r^l = s^(a+b) r^((-1)^b k + l)
    const std::size_t rot = (b == 0 ? k + l : 4 - k + l) % 4;
    return ((a + b) % 2) * 4 + rot;
  };
  return discrete_group(names, mul, false);
}

namespace {

std::string arrow_name(const std::string& a, const std::string& b) { return a + "->" + b; }

// Finite poset category with a commutative idempotent tensor `meet` (a
// meet-semilattice with top as unit), identity braiding. `leq` must be a
// partial order and `meet` its meet.
CatPtr semilattice(const std::vector<std::string>& elems,
                   const std::function<bool(std::size_t, std::size_t)>& leq,
                   const std::function<std::size_t(std::size_t, std::size_t)>& meet,
                   std::size_t top, nlohmann::json provenance) {
  CategoryBuilder b;
  const std::size_t n = elems.size();
  for (const auto& e : elems) {
    b.object(e);
  }
  auto mor = [&](std::size_t x, std::size_t y) {
    return x == y ? "id_" + elems[x] : arrow_name(elems[x], elems[y]);
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && leq(x, y)) {
        b.morphism(mor(x, y), elems[x], elems[y]);
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (leq(x, y) && leq(y, z)) {
          b.compose(mor(y, z), mor(x, y), mor(x, z));
        }
      }
    }
  }
  b.unit(elems[top]);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t m = meet(x, y);
      b.tensor(elems[x], elems[y], elems[m]);
      b.braiding(elems[x], elems[y], mor(m, m));
      if (!leq(x, y)) {
        continue;
      }
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
          if (leq(u, v)) {
            b.tensor_morphisms(mor(x, y), mor(u, v), mor(meet(x, u), meet(y, v)));
          }
        }
      }
    }
  }
  b.provenance(std::move(provenance));
  return b.build();
}

}  // namespace

CatPtr divisor_lattice(unsigned n) {
  std::vector<unsigned> divisors;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d == 0) {
      divisors.push_back(d);
    }
  }
  std::vector<std::string> elems;
  for (unsigned d : divisors) {
    elems.push_back(std::to_string(d));
  }
  auto index_of = [divisors](unsigned v) {
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (divisors[i] == v) {
        return i;
      }
    }
    return std::size_t{0};
  };
  return semilattice(
      elems, [divisors](std::size_t x, std::size_t y) { return divisors[y] % divisors[x] == 0; },
      [divisors, index_of](std::size_t x, std::size_t y) {
        return index_of(std::gcd(divisors[x], divisors[y]));
      },
      divisors.size() - 1, {{"catalog", "divisor_lattice"}, {"n", n}});
}

CatPtr diamond_m3() {
  const std::vector<std::string> elems = {"0", "a", "b", "c", "1"};
  auto leq = [](std::size_t x, std::size_t y) { return x == y || x == 0 || y == 4; };
  auto meet = [leq](std::size_t x, std::size_t y) {
    if (leq(x, y)) {
      return x;
    }
    if (leq(y, x)) {
      return y;
    }
    return std::size_t{0};
  };
  return semilattice(elems, leq, meet, 4, {{"catalog", "diamond_m3"}});
}

CatPtr z2_delooping() {
  CategoryBuilder b;
  b.object("*").morphism("e", "*", "*").morphism("t", "*", "*").identity("*", "e");
  b.compose("t", "t", "e");
  b.unit("*").tensor("*", "*", "*");
  b.tensor_morphisms("t", "t", "e").tensor_morphisms("e", "t", "t").tensor_morphisms("t", "e", "t");
  b.braiding("*", "*", "e");
  b.provenance({{"catalog", "z2_delooping"}});
  return b.build();
}

CatPtr super_z2() {
  CategoryBuilder b;
  const std::array<std::string, 2> obj = {"0", "1"};
  const std::array<std::array<std::string, 2>, 2> mor = {
      std::array<std::string, 2>{"id_0", "z0"}, std::array<std::string, 2>{"id_1", "z1"}};
  for (int g = 0; g < 2; ++g) {
    b.object(obj[g]);
    b.morphism(mor[g][1], obj[g], obj[g]);
    b.compose(mor[g][1], mor[g][1], mor[g][0]);
  }
  b.unit("0");
  for (int g = 0; g < 2; ++g) {
    for (int h = 0; h < 2; ++h) {
      const int s = (g + h) % 2;
      b.tensor(obj[g], obj[h], obj[s]);
      b.braiding(obj[g], obj[h], mor[s][g * h]);
      for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
          b.tensor_morphisms(mor[g][x], mor[h][y], mor[s][(x + y) % 2]);
        }
      }
    }
  }
  b.provenance({{"catalog", "super_z2"}});
  return b.build();
}

CatPtr crossed_z3_z2() {
  CategoryBuilder b;
  auto mor = [](int g, int x) {
    return x == 0 ? "id_" + std::to_string(g) : std::to_string(g) + "+" + std::to_string(x);
  };
  auto act = [](int g, int y) { return g == 0 ? y : (3 - y) % 3; };
  for (int g = 0; g < 2; ++g) {
    b.object(std::to_string(g));
    for (int x = 1; x < 3; ++x) {
      b.morphism(mor(g, x), std::to_string(g), std::to_string(g));
    }
    for (int x = 0; x < 3; ++x) {
      for (int y = 0; y < 3; ++y) {
        b.compose(mor(g, y), mor(g, x), mor(g, (x + y) % 3));
      }
    }
  }
  b.unit("0");
  for (int g = 0; g < 2; ++g) {
    for (int h = 0; h < 2; ++h) {
      b.tensor(std::to_string(g), std::to_string(h), std::to_string((g + h) % 2));
      for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 3; ++y) {
          b.tensor_morphisms(mor(g, x), mor(h, y), mor((g + h) % 2, (x + act(g, y)) % 3));
        }
      }
    }
  }
  b.provenance({{"catalog", "crossed_z3_z2"}});
  return b.build();
}

CatPtr parallel_epi_counterexample() {
  CategoryBuilder b;
  b.object("X").object("Y").object("Z");
  b.morphism("p", "X", "Y").morphism("u", "Y", "Z").morphism("v", "Y", "Z").morphism("w", "X", "Z");
  b.compose("u", "p", "w").compose("v", "p", "w");
  b.provenance({{"catalog", "parallel_epi_counterexample"}});
  return b.build();
}

CatPtr parallel_pair() {
  CategoryBuilder b;
  b.object("Y").object("Z").morphism("u", "Y", "Z").morphism("v", "Y", "Z");
  b.provenance({{"catalog", "parallel_pair"}});
  return b.build();
}

CatPtr span_poset() {
  CategoryBuilder b;
  b.object("o").object("a").object("b").morphism("o->a", "o", "a").morphism("o->b", "o", "b");
  b.provenance({{"catalog", "span_poset"}});
  return b.build();
}

std::vector<std::string> names() {
  return {"d12", "d30", "d4",           "d60",           "m3",  "parallel-epi",
          "parallel-pair", "s3", "span", "super-z2", "z2", "z2-delooping", "z3-by-z2", "z4"};
}

CatPtr by_name(const std::string& name) {
  if (name == "z2") return cyclic_group(2);
  if (name == "z4") return cyclic_group(4);
  if (name == "s3") return symmetric_group_s3();
  if (name == "d4") return dihedral_group_d4();
  if (name == "d12") return divisor_lattice(12);
  if (name == "d30") return divisor_lattice(30);
  if (name == "d60") return divisor_lattice(60);
  if (name == "m3") return diamond_m3();
  if (name == "z2-delooping") return z2_delooping();
  if (name == "super-z2") return super_z2();
  if (name == "z3-by-z2") return crossed_z3_z2();
  if (name == "parallel-pair") return parallel_pair();
  if (name == "parallel-epi") return parallel_epi_counterexample();
  if (name == "span") return span_poset();
  throw UnknownId("catalog entry '" + name + "'");
}

std::vector<std::pair<std::string, CatPtr>> monoidal_entries() {
  std::vector<std::pair<std::string, CatPtr>> out;
  for (const auto& n : names()) {
    CatPtr c = by_name(n);
    if (c->is_monoidal()) {
      out.emplace_back(n, c);
    }
  }
  return out;
}

std::vector<std::pair<std::string, CatPtr>> braided_entries() {
  std::vector<std::pair<std::string, CatPtr>> out;
  for (auto& [n, c] : monoidal_entries()) {
    if (c->has_braiding()) {
      out.emplace_back(n, c);
    }
  }
  return out;
}

}  // namespace zcat::catalog
