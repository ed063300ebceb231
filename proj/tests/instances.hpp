#pragma once

// Seeded epi-transfer instances: pairs of epis out of one constructed object
// whose images agree in the base up to an iso. Base categories are those
// whose tensor functors P_X, Q_X are cocontinuous (groups, groupoid-like
// deloopings and distributive lattices); tests confirm that on pair
// diagrams before drawing.

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "zcat/catalog.hpp"
#include "zcat/comonoids.hpp"
#include "zcat/constructions.hpp"

namespace instances {

inline const std::vector<std::string>& transfer_bases() {
  static const std::vector<std::string> names = {"z2", "z4", "s3", "d4", "d12", "d30",
                                                 "z2-delooping", "super-z2", "z3-by-z2"};
  return names;
}

struct TransferInstance {
  std::shared_ptr<const zcat::Construction> construction;
  std::string label;
  zcat::Mor p;
  zcat::Mor q;
};

class TransferGenerator {
 public:
  explicit TransferGenerator(unsigned seed) : rng_(seed) {}

  TransferInstance next() {
    for (;;) {
      const auto& bases = transfer_bases();
      const std::string& name = bases[pick(bases.size())];
      zcat::CatPtr c = zcat::catalog::by_name(name);
      const int kind = static_cast<int>(pick(4));
      std::string label = name;
      std::shared_ptr<const zcat::Construction> k;
      if (kind == 0) {
        auto objs = c->objects();
        zcat::Obj x = objs[pick(objs.size())];
        label += " Z_" + c->name(x);
        k = cached(label, [&] { return zcat::centralizer_of_object(c, x); });
      } else if (kind == 1) {
        auto mors = c->morphisms();
        zcat::Mor h = mors[pick(mors.size())];
        label += " Z_" + c->name(h);
        k = cached(label, [&] { return zcat::centralizer_of_morphism(c, h); });
      } else if (kind == 2) {
        label += " Z";
        k = cached(label, [&] { return zcat::center(c); });
      } else {
        label += " Z_w";
        k = cached(label, [&] { return zcat::weak_center(c); });
      }
      const zcat::FinMonCat& z = *k->category;
      if (z.num_objects() == 0) {
        continue;
      }
      auto objs = z.objects();
      zcat::Obj a = objs[pick(objs.size())];
      std::vector<std::pair<zcat::Mor, zcat::Mor>> pairs;
      std::vector<zcat::Mor> epis;
      for (zcat::Obj b : objs) {
        for (zcat::Mor f : z.hom(a, b)) {
          if (zcat::is_epi(z, f)) {
            epis.push_back(f);
          }
        }
      }
      const zcat::FinMonCat& base = *k->base;
      for (zcat::Mor p : epis) {
        for (zcat::Mor q : epis) {
          const zcat::Mor up = k->forget(p);
          const zcat::Mor uq = k->forget(q);
          for (zcat::Mor t : zcat::isomorphisms(base, base.cod(up), base.cod(uq))) {
            if (base.compose(t, up) == uq) {
              pairs.emplace_back(p, q);
              break;
            }
          }
        }
      }
      if (pairs.empty()) {
        continue;
      }
      auto [p, q] = pairs[pick(pairs.size())];
      return {k, label, p, q};
    }
  }

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  template <class F>
  std::shared_ptr<const zcat::Construction> cached(const std::string& key, F make) {
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, std::make_shared<const zcat::Construction>(make())).first;
    }
    return it->second;
  }

  std::mt19937 rng_;
  std::map<std::string, std::shared_ptr<const zcat::Construction>> cache_;
};

}  // namespace instances
