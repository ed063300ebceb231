#pragma once

// Braid groups B_n with a decidable word problem (Garside left normal form),
// the framed model of ribbon braids, and a finite window of the braid
// category B as a partial FinMonCat.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zcat/fincat.hpp"

namespace zcat::braid {

// One-line notation, 0-based: p[start] = end.
using Permutation = std::vector<int>;

// Letter +i is s_i, -i is its inverse, 1 <= i <= strands - 1.
struct BraidWord {
  int strands = 0;
  std::vector<int> letters;

  bool operator==(const BraidWord&) const = default;
};

// Throws MalformedInput on bad tokens or out-of-range indices.
void check_word(const BraidWord& w);
// Tokens "sK" / "SK" separated by whitespace.
[[nodiscard]] BraidWord parse_word(std::string_view text, int strands);
[[nodiscard]] std::string to_string(const BraidWord& w);

[[nodiscard]] BraidWord identity_word(int strands);
[[nodiscard]] BraidWord inverse(const BraidWord& w);
// Vertical stacking, a on top: the letters of a followed by those of b.
// Throws MalformedInput on a strand mismatch.
[[nodiscard]] BraidWord compose_braids(const BraidWord& a, const BraidWord& b);
// Side by side, b to the right of a.
[[nodiscard]] BraidWord tensor_braids(const BraidWord& a, const BraidWord& b);

[[nodiscard]] Permutation permutation_of(const BraidWord& w);

struct NormalForm {
  int strands = 0;
  int infimum = 0;                   // power of the half twist
  std::vector<Permutation> factors;  // permutation braids, left-greedy

  bool operator==(const NormalForm&) const = default;
};

[[nodiscard]] NormalForm normal_form(const BraidWord& w);
// "D^k | [2 1 3] . [1 3 2]" with 1-based one-line notation.
[[nodiscard]] std::string to_string(const NormalForm& nf);
// A word representing the normal form (half twists first, then factors).
[[nodiscard]] BraidWord to_word(const NormalForm& nf);
// Positive word for a permutation braid.
[[nodiscard]] BraidWord permutation_braid(const Permutation& p);
[[nodiscard]] bool braids_equal(const BraidWord& a, const BraidWord& b);

// c_{m,n}: the first m strands cross over the remaining n. Built by the
// hexagon recursion; both expansion orders are compared and TheoremViolation
// is thrown if they differ.
[[nodiscard]] BraidWord braiding_word(int m, int n);

// Ribbon braids: a braid plus a twist count per ribbon, indexed by the
// ribbon's end position.
struct FramedBraid {
  BraidWord word;
  std::vector<std::int64_t> framings;
};

[[nodiscard]] FramedBraid framed(const BraidWord& w);
// Unit twist on ribbon k (1-based) of n.
[[nodiscard]] FramedBraid twist(int strands, int k);
// Generator s_k of the ribbon presentation: the crossing s_k for k < n and
// the twist t_n for k = n (negative k for inverses).
[[nodiscard]] FramedBraid ribbon_generator(int strands, int k);
[[nodiscard]] FramedBraid framed_compose(const FramedBraid& a, const FramedBraid& b);
[[nodiscard]] FramedBraid framed_tensor(const FramedBraid& a, const FramedBraid& b);
[[nodiscard]] bool framed_equal(const FramedBraid& a, const FramedBraid& b);

// Objects "0".."max_n"; hom(n, n) holds the braids of geodesic length at
// most max_letters, named "<n>:<word>" (identities "id_<n>"). Composites and
// tensors that leave the window are undefined, so the result is partial.
// Throws MalformedInput when the window cannot contain s_1 although it has
// objects with two or more strands.
[[nodiscard]] CatPtr braid_as_finmoncat(int max_n, int max_letters);

struct TheoremCheck {
  std::string id;
  std::string claim;
  bool passed = false;
  std::string detail;
};

// (a) no colimit for the discrete diagram {1, 2}; (b) exactly one comonoid
// over the objects 0..6; (c) hexagons and naturality of c_{m,n} for
// m, n, p <= 4 on seeded random words.
[[nodiscard]] std::vector<TheoremCheck> braid_theorem_checks(std::uint64_t seed);

}  // namespace zcat::braid
