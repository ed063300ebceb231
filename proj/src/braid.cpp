#include "zcat/braid.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace zcat::braid {

void check_word(const BraidWord& w) {
  if (w.strands < 0) {
    throw MalformedInput("strand count must be non-negative");
  }
  for (int letter : w.letters) {
    const int i = letter < 0 ? -letter : letter;
    if (i < 1 || i > w.strands - 1) {
      throw MalformedInput("generator index " + std::to_string(i) + " out of range for " +
                           std::to_string(w.strands) + " strands");
    }
  }
}

BraidWord parse_word(std::string_view text, int strands) {
  BraidWord w{strands, {}};
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || (token[0] != 's' && token[0] != 'S') ||
        !std::all_of(token.begin() + 1, token.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; })) {
      throw MalformedInput("bad braid token '" + token + "' (expected sK or SK)");
    }
    const int i = std::stoi(token.substr(1));
    w.letters.push_back(token[0] == 's' ? i : -i);
  }
  check_word(w);
  return w;
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (int letter : w.letters) {
    if (!out.empty()) {
      out += ' ';
    }
    out += (letter > 0 ? "s" : "S") + std::to_string(letter > 0 ? letter : -letter);
  }
  return out;
}

BraidWord identity_word(int strands) { return {strands, {}}; }

BraidWord inverse(const BraidWord& w) {
  BraidWord out{w.strands, {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(-*it);
  }
  return out;
}

BraidWord compose_braids(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) {
    throw MalformedInput("cannot compose braids on " + std::to_string(a.strands) + " and " +
                         std::to_string(b.strands) + " strands");
  }
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord tensor_braids(const BraidWord& a, const BraidWord& b) {
  BraidWord out{a.strands + b.strands, a.letters};
  for (int letter : b.letters) {
    out.letters.push_back(letter > 0 ? letter + a.strands : letter - a.strands);
  }
  return out;
}

Permutation permutation_of(const BraidWord& w) {
  check_word(w);
  // pos[strand] = current position; strands are labelled by start position.
  Permutation where(w.strands);
  std::iota(where.begin(), where.end(), 0);
  Permutation at(where);  // at[position] = strand
  for (int letter : w.letters) {
    const int i = (letter > 0 ? letter : -letter) - 1;
    std::swap(at[i], at[i + 1]);
    where[at[i]] = i;
    where[at[i + 1]] = i + 1;
  }
  return where;
}

namespace {

Permutation identity_perm(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation half_twist(int n) {
  Permutation p(n);
  for (int j = 0; j < n; ++j) {
    p[j] = n - 1 - j;
  }
  return p;
}

// Delta x Delta^-1: conjugation by the reversal.
Permutation flip(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  Permutation out(n);
  for (int j = 0; j < n; ++j) {
    out[j] = n - 1 - p[n - 1 - j];
  }
  return out;
}

Permutation inverse_perm(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    q[p[j]] = static_cast<int>(j);
  }
  return q;
}

// Generators s_{i+1} a simple braid can start with.
bool starts_with(const Permutation& p, int i) { return p[i] > p[i + 1]; }
bool finishes_with(const Permutation& q_inverse, int i) { return q_inverse[i] > q_inverse[i + 1]; }

// Moves letters from b into a until the pair is left-weighted. Returns true
// if anything moved.
bool left_weight(Permutation& a, Permutation& b) {
  bool moved = false;
  const int n = static_cast<int>(a.size());
  bool again = true;
  while (again) {
    again = false;
    const Permutation a_inv = inverse_perm(a);
    for (int i = 0; i + 1 < n; ++i) {
      if (starts_with(b, i) && !finishes_with(a_inv, i)) {
        // a := a s_i ; b := s_i^-1 b
        for (int& v : a) {
          if (v == i) {
            v = i + 1;
          } else if (v == i + 1) {
            v = i;
          }
        }
        std::swap(b[i], b[i + 1]);
        moved = again = true;
        break;
      }
    }
  }
  return moved;
}

}  // namespace

NormalForm normal_form(const BraidWord& w) {
  check_word(w);
  const int n = w.strands;
  NormalForm nf{n, 0, {}};
  if (n <= 1) {
    return nf;
  }
  const Permutation delta = half_twist(n);
  std::vector<Permutation> factors;
  int power = 0;
  for (int letter : w.letters) {
    const int i = (letter > 0 ? letter : -letter) - 1;
    Permutation simple = identity_perm(n);
    if (letter > 0) {
      std::swap(simple[i], simple[i + 1]);
    } else {
      // s_i^-1 = Delta^-1 (Delta s_i^-1); push Delta^-1 to the front.
      for (auto& f : factors) {
        f = flip(f);
      }
      --power;
      for (int j = 0; j < n; ++j) {
        const int d = delta[j];
        simple[j] = d == i ? i + 1 : d == i + 1 ? i : d;
      }
    }
    factors.push_back(std::move(simple));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < factors.size(); ++k) {
      changed = left_weight(factors[k], factors[k + 1]) || changed;
    }
  }
  std::size_t first = 0;
  while (first < factors.size() && factors[first] == delta) {
    ++first;
    ++power;
  }
  const Permutation id = identity_perm(n);
  std::size_t last = factors.size();
  while (last > first && factors[last - 1] == id) {
    --last;
  }
  nf.infimum = power;
  nf.factors.assign(factors.begin() + static_cast<std::ptrdiff_t>(first),
                    factors.begin() + static_cast<std::ptrdiff_t>(last));
  return nf;
}

std::string to_string(const NormalForm& nf) {
  std::string out = "D^" + std::to_string(nf.infimum) + " |";
  for (std::size_t k = 0; k < nf.factors.size(); ++k) {
    out += k == 0 ? " [" : " . [";
    for (std::size_t j = 0; j < nf.factors[k].size(); ++j) {
      out += (j ? " " : "") + std::to_string(nf.factors[k][j] + 1);
    }
    out += "]";
  }
  return out;
}

BraidWord permutation_braid(const Permutation& p) {
  BraidWord w{static_cast<int>(p.size()), {}};
  Permutation dest = p;  // dest[position] = final position of the strand there
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < dest.size(); ++i) {
      if (dest[i] > dest[i + 1]) {
        std::swap(dest[i], dest[i + 1]);
        w.letters.push_back(static_cast<int>(i) + 1);
        swapped = true;
      }
    }
  }
  return w;
}

BraidWord to_word(const NormalForm& nf) {
  BraidWord w = identity_word(nf.strands);
  if (nf.strands <= 1) {
    return w;
  }
  const BraidWord delta = permutation_braid(half_twist(nf.strands));
  const BraidWord step = nf.infimum >= 0 ? delta : inverse(delta);
  for (int k = 0; k < std::abs(nf.infimum); ++k) {
    w = compose_braids(w, step);
  }
  for (const auto& f : nf.factors) {
    w = compose_braids(w, permutation_braid(f));
  }
  return w;
}

bool braids_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) {
    throw MalformedInput("cannot compare braids on " + std::to_string(a.strands) + " and " +
                         std::to_string(b.strands) + " strands");
  }
  return normal_form(a) == normal_form(b);
}

namespace {

BraidWord hexagon_left_first(int m, int n) {
  // Split the over-strands one at a time, then the under-strands.
  if (m == 0 || n == 0) {
    return identity_word(m + n);
  }
  if (m == 1 && n == 1) {
    return BraidWord{2, {1}};
  }
  if (m > 1) {
    // c_{1+(m-1), n} = (id_1 (x) c_{m-1,n}) then (c_{1,n} (x) id_{m-1})
    return compose_braids(tensor_braids(identity_word(1), hexagon_left_first(m - 1, n)),
                          tensor_braids(hexagon_left_first(1, n), identity_word(m - 1)));
  }
  // c_{1, 1+(n-1)} = (c_{1,1} (x) id_{n-1}) then (id_1 (x) c_{1,n-1})
  return compose_braids(tensor_braids(hexagon_left_first(1, 1), identity_word(n - 1)),
                        tensor_braids(identity_word(1), hexagon_left_first(1, n - 1)));
}

BraidWord hexagon_right_first(int m, int n) {
  if (m == 0 || n == 0) {
    return identity_word(m + n);
  }
  if (m == 1 && n == 1) {
    return BraidWord{2, {1}};
  }
  if (n > 1) {
    // c_{m, 1+(n-1)} = (c_{m,1} (x) id_{n-1}) then (id_1 (x) c_{m,n-1})
    return compose_braids(tensor_braids(hexagon_right_first(m, 1), identity_word(n - 1)),
                          tensor_braids(identity_word(1), hexagon_right_first(m, n - 1)));
  }
  // c_{1+(m-1), 1} = (id_1 (x) c_{m-1,1}) then (c_{1,1} (x) id_{m-1})
  return compose_braids(tensor_braids(identity_word(1), hexagon_right_first(m - 1, 1)),
                        tensor_braids(hexagon_right_first(1, 1), identity_word(m - 1)));
}

}  // namespace

BraidWord braiding_word(int m, int n) {
  if (m < 0 || n < 0) {
    throw MalformedInput("strand counts must be non-negative");
  }
  BraidWord a = hexagon_left_first(m, n);
  BraidWord b = hexagon_right_first(m, n);
  if (!braids_equal(a, b)) {
    throw TheoremViolation("the two hexagon expansions of c_{" + std::to_string(m) + "," +
                           std::to_string(n) + "} differ");
  }
  return a;
}

// ---------------------------------------------------------------------------
// Framed braids

FramedBraid framed(const BraidWord& w) {
  check_word(w);
  return {w, std::vector<std::int64_t>(static_cast<std::size_t>(w.strands), 0)};
}

FramedBraid twist(int strands, int k) {
  if (k < 1 || k > strands) {
    throw MalformedInput("twist index " + std::to_string(k) + " out of range for " +
                         std::to_string(strands) + " ribbons");
  }
  FramedBraid out = framed(identity_word(strands));
  out.framings[static_cast<std::size_t>(k - 1)] = 1;
  return out;
}

FramedBraid ribbon_generator(int strands, int k) {
  const int i = k < 0 ? -k : k;
  if (i == strands) {
    FramedBraid t = twist(strands, strands);
    t.framings.back() = k < 0 ? -1 : 1;
    return t;
  }
  return framed(BraidWord{strands, {k}});
}

FramedBraid framed_compose(const FramedBraid& a, const FramedBraid& b) {
  FramedBraid out{compose_braids(a.word, b.word), b.framings};
  const Permutation pb = permutation_of(b.word);
  // The ribbon ending at position pb[j] of b ended at position j of a.
  for (std::size_t j = 0; j < pb.size(); ++j) {
    out.framings[static_cast<std::size_t>(pb[j])] += a.framings[j];
  }
  return out;
}

FramedBraid framed_tensor(const FramedBraid& a, const FramedBraid& b) {
  FramedBraid out{tensor_braids(a.word, b.word), a.framings};
  out.framings.insert(out.framings.end(), b.framings.begin(), b.framings.end());
  return out;
}

bool framed_equal(const FramedBraid& a, const FramedBraid& b) {
  return braids_equal(a.word, b.word) && a.framings == b.framings;
}

// ---------------------------------------------------------------------------
// Truncated braid category

CatPtr braid_as_finmoncat(int max_n, int max_letters) {
  if (max_n < 0 || max_letters < 0) {
    throw MalformedInput("braid window bounds must be non-negative");
  }
  if (max_n >= 2 && max_letters < 1) {
    throw MalformedInput("a window with " + std::to_string(max_n) +
                         " strands needs max_letters >= 1 to hold s1; it would leave c_{1,1} "
                         "undefined");
  }
  const Limits limits = Limits::from_env();
  CategoryBuilder b;
  // Per strand count: normal form -> morphism name.
  std::vector<std::map<std::string, std::string>> by_nf(static_cast<std::size_t>(max_n) + 1);
  std::vector<std::vector<std::pair<std::string, BraidWord>>> elems(static_cast<std::size_t>(max_n) + 1);
  std::size_t total = 0;
  auto obj = [](int n) { return std::to_string(n); };
  for (int n = 0; n <= max_n; ++n) {
    b.object(obj(n));
    const std::string id = "id_" + obj(n);
    by_nf[n][to_string(normal_form(identity_word(n)))] = id;
    elems[n].emplace_back(id, identity_word(n));
    std::vector<BraidWord> frontier = {identity_word(n)};
    for (int depth = 1; depth <= max_letters && !frontier.empty(); ++depth) {
      std::vector<BraidWord> next;
      for (const auto& w : frontier) {
        for (int i = 1; i < n; ++i) {
          for (int sign : {1, -1}) {
            BraidWord v = w;
            v.letters.push_back(sign * i);
            const std::string key = to_string(normal_form(v));
            if (by_nf[n].count(key) != 0) {
              continue;
            }
            const std::string name = obj(n) + ":" + to_string(v);
            by_nf[n][key] = name;
            elems[n].emplace_back(name, v);
            b.morphism(name, obj(n), obj(n));
            next.push_back(v);
          }
        }
      }
      frontier = std::move(next);
    }
    total += elems[n].size();
    if (total > limits.max_morphisms) {
      throw GuardrailExceeded("braid window exceeds " + std::to_string(limits.max_morphisms) +
                              " morphisms");
    }
  }
  auto lookup = [&](int n, const BraidWord& w) -> const std::string* {
    auto it = by_nf[n].find(to_string(normal_form(w)));
    return it == by_nf[n].end() ? nullptr : &it->second;
  };
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& [fname, fw] : elems[n]) {
      for (const auto& [gname, gw] : elems[n]) {
        if (const auto* r = lookup(n, compose_braids(fw, gw))) {
          b.compose(gname, fname, *r);
        }
      }
    }
  }
  b.unit(obj(0));
  for (int m = 0; m <= max_n; ++m) {
    for (int n = 0; m + n <= max_n; ++n) {
      b.tensor(obj(m), obj(n), obj(m + n));
      for (const auto& [fname, fw] : elems[m]) {
        for (const auto& [gname, gw] : elems[n]) {
          if (const auto* r = lookup(m + n, tensor_braids(fw, gw))) {
            b.tensor_morphisms(fname, gname, *r);
          }
        }
      }
      if (const auto* c = lookup(m + n, braiding_word(m, n))) {
        b.braiding(obj(m), obj(n), *c);
      }
    }
  }
  b.partial(true);
  b.provenance({{"construction", "braid_truncation"},
                {"max_n", max_n},
                {"max_letters", max_letters}});
  return b.build();
}

}  // namespace zcat::braid
