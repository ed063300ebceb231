#pragma once

// Reference tools for braid tests: the Artin action on the free group
// (a faithful representation, so it decides equality independently of the
// normal form) and random rewriting by the defining relations.

#include <random>
#include <vector>

#include "zcat/braid.hpp"

namespace oracle {

// Free group words over x_1..x_n, letters +k / -k, freely reduced.
using FreeWord = std::vector<int>;

inline void push_reduced(FreeWord& w, int letter) {
  if (!w.empty() && w.back() == -letter) {
    w.pop_back();
  } else {
    w.push_back(letter);
  }
}

inline FreeWord invert(const FreeWord& w) {
  FreeWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(-*it);
  }
  return out;
}

// Images of x_1..x_n under the automorphism induced by `w`.
inline std::vector<FreeWord> artin_action(const zcat::braid::BraidWord& w) {
  const int n = w.strands;
  std::vector<FreeWord> images(n);
  for (int k = 0; k < n; ++k) {
    images[k] = {k + 1};
  }
  auto concat = [](std::initializer_list<FreeWord> parts) {
    FreeWord out;
    for (const auto& p : parts) {
      for (int letter : p) {
        push_reduced(out, letter);
      }
    }
    return out;
  };
  for (int letter : w.letters) {
    const int i = (letter > 0 ? letter : -letter) - 1;
    const FreeWord a = images[i];
    const FreeWord b = images[i + 1];
    if (letter > 0) {
      images[i] = concat({a, b, invert(a)});
      images[i + 1] = a;
    } else {
      images[i] = b;
      images[i + 1] = concat({invert(b), a, b});
    }
  }
  return images;
}

inline bool artin_equal(const zcat::braid::BraidWord& a, const zcat::braid::BraidWord& b) {
  return a.strands == b.strands && artin_action(a) == artin_action(b);
}

// Position tracking by simulating strands, one crossing at a time.
inline std::vector<int> track_strands(const zcat::braid::BraidWord& w) {
  std::vector<int> strand_at(w.strands);
  for (int k = 0; k < w.strands; ++k) {
    strand_at[k] = k;
  }
  for (int letter : w.letters) {
    const int i = (letter > 0 ? letter : -letter) - 1;
    std::swap(strand_at[i], strand_at[i + 1]);
  }
  std::vector<int> end(w.strands);
  for (int pos = 0; pos < w.strands; ++pos) {
    end[strand_at[pos]] = pos;
  }
  return end;
}

inline zcat::braid::BraidWord random_word(std::mt19937& rng, int strands, int length) {
  zcat::braid::BraidWord w{strands, {}};
  if (strands < 2) {
    return w;
  }
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution sign(0.5);
  for (int k = 0; k < length; ++k) {
    w.letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
  }
  return w;
}

// Applies one randomly chosen defining relation somewhere in the word (or
// inserts a cancelling pair when no relation applies).
inline void random_rewrite(std::mt19937& rng, zcat::braid::BraidWord& w) {
  auto& L = w.letters;
  const int n = w.strands;
  if (n < 2) {
    return;
  }
  std::uniform_int_distribution<int> kind(0, 3);
  std::vector<std::size_t> spots;
  switch (kind(rng)) {
    case 0: {  // s_i s_j -> s_j s_i for |i - j| >= 2, any signs
      for (std::size_t p = 0; p + 1 < L.size(); ++p) {
        if (std::abs(std::abs(L[p]) - std::abs(L[p + 1])) >= 2) {
          spots.push_back(p);
        }
      }
      if (!spots.empty()) {
        std::size_t p = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
        std::swap(L[p], L[p + 1]);
        return;
      }
      break;
    }
    case 1: {  // s_i s_j s_i -> s_j s_i s_j for |i - j| = 1 (positive or all-negative)
      for (std::size_t p = 0; p + 2 < L.size(); ++p) {
        if (L[p] == L[p + 2] && std::abs(std::abs(L[p]) - std::abs(L[p + 1])) == 1 &&
            (L[p] > 0) == (L[p + 1] > 0)) {
          spots.push_back(p);
        }
      }
      if (!spots.empty()) {
        std::size_t p = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
        const int a = L[p];
        const int b = L[p + 1];
        L[p] = b;
        L[p + 1] = a;
        L[p + 2] = b;
        return;
      }
      break;
    }
    case 2: {  // delete a cancelling pair
      for (std::size_t p = 0; p + 1 < L.size(); ++p) {
        if (L[p] == -L[p + 1]) {
          spots.push_back(p);
        }
      }
      if (!spots.empty()) {
        std::size_t p = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
        L.erase(L.begin() + static_cast<std::ptrdiff_t>(p), L.begin() + static_cast<std::ptrdiff_t>(p) + 2);
        return;
      }
      break;
    }
    default:
      break;
  }
  // insert s_i^e s_i^-e at a random position
  const int i = std::uniform_int_distribution<int>(1, n - 1)(rng);
  const int e = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
  const std::size_t p = std::uniform_int_distribution<std::size_t>(0, L.size())(rng);
  L.insert(L.begin() + static_cast<std::ptrdiff_t>(p), {e * i, -e * i});
}

}  // namespace oracle
