#pragma once

// Small categories used by tests, the acceptance suite and the CLI `catalog`
// command.

#include <functional>
#include <string>
#include <vector>

#include "zcat/fincat.hpp"

namespace zcat::catalog {

// Discrete category on a finite group, tensor = group product. `mul` works on
// element indices; element 0 must be the neutral element. Abelian groups get
// the identity braiding.
[[nodiscard]] CatPtr discrete_group(const std::vector<std::string>& elements,
                                    const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                                    bool braided);

[[nodiscard]] CatPtr cyclic_group(std::size_t n);  // objects "0".."n-1"
[[nodiscard]] CatPtr symmetric_group_s3();          // e, (12), (13), (23), (123), (132)
[[nodiscard]] CatPtr dihedral_group_d4();           // e, r, r2, r3, s, sr, sr2, sr3

// Divisors of n ordered by divisibility (arrows "a->b"), tensor = gcd,
// unit = n, identity braiding.
[[nodiscard]] CatPtr divisor_lattice(unsigned n);

// The diamond lattice 0 < a, b, c < 1 with tensor = meet and unit 1.
[[nodiscard]] CatPtr diamond_m3();

// One object, hom = {e, t} with t.t = e, tensor = composition, identity braiding.
[[nodiscard]] CatPtr z2_delooping();

// Objects Z/2, each hom(g, g) = {id_g, z_g}, tensor adds both components and
// the braiding is the bicharacter with Psi_{1,1} = z_0.
[[nodiscard]] CatPtr super_z2();

// Objects Z/2, each hom(g, g) = Z/3; (g, x) (x) (h, y) = (g + h, x + g.y)
// where 1 acts on Z/3 by negation. Monoidal, not braided, and its
// automorphism groups interact with the tensor non-trivially.
[[nodiscard]] CatPtr crossed_z3_z2();

// X --p--> Y with u, v : Y -> Z, u.p = v.p = w. No tensor.
[[nodiscard]] CatPtr parallel_epi_counterexample();

// u, v : Y -> Z distinct, identities otherwise. No tensor.
[[nodiscard]] CatPtr parallel_pair();

// o -> a, o -> b (a poset with an initial object and two incomparable targets).
[[nodiscard]] CatPtr span_poset();

// Named entries: z2 z4 s3 d4 d12 d30 d60 m3 z2-delooping super-z2
// z3-by-z2 parallel-pair parallel-epi span.
[[nodiscard]] std::vector<std::string> names();
[[nodiscard]] CatPtr by_name(const std::string& name);

// All monoidal entries, and the braided ones among them.
[[nodiscard]] std::vector<std::pair<std::string, CatPtr>> monoidal_entries();
[[nodiscard]] std::vector<std::pair<std::string, CatPtr>> braided_entries();

}  // namespace zcat::catalog
