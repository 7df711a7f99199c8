#pragma once

#include <cstdint>
#include <vector>

#include "ordcalc/abgroup.hpp"

namespace ordcalc {

// Groups of the form Z/o_1 + ... + Z/o_n (o_i = 0 means Z), elements as
// coordinate vectors.  Maps are given by the images of the unit vectors.
using Orders = std::vector<std::int64_t>;
using Vectors = std::vector<std::vector<std::int64_t>>;

// (Z/o) / <gens>
AbGroupExpr quotient_by(const Orders& orders, const Vectors& gens);
// <gens> inside Z/o, or inside (Z/o)/<relations>
AbGroupExpr subgroup_generated(const Orders& orders, const Vectors& gens, const Vectors& relations = {});
// Generators (as coefficient vectors on the source generators) of the kernel
// of the map sending e_i to images[i] in (Z/target)/<relations>.
Vectors kernel_generators(const Orders& source, const Vectors& images, const Orders& target,
                          const Vectors& relations = {});
AbGroupExpr kernel_group(const Orders& source, const Vectors& images, const Orders& target);
bool is_zero_element(const Orders& orders, const std::vector<std::int64_t>& v);

}  // namespace ordcalc
