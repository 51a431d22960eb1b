#pragma once

#include <string>
#include <vector>

#include "pentagon/group.hpp"

namespace pentagon {

/// Built-in test groups. Every builder returns a table certified by
/// group_from_magma with the identity at index 0 and the name field set.

Group trivial_group();        // z1
Group cyclic(int n);          // z<n>, addition mod n
Group klein_four();           // v4, xor on two bits
Group symmetric(int degree);  // s3 / s4, lex-ranked permutation words
Group dihedral_8();           // d4, the square's symmetries as corner words
Group quaternion_8();         // q8, signed unit quaternions
Group z2_times_z4();          // z2xz4, index = 4a + b
Group elementary_8();         // z2cube, xor on three bits

/// The thirteen groups of order 2..8 that the exhaustive suites cover:
/// z2..z8, v4, s3, d4, q8, z2xz4, z2cube, in that order.
std::vector<Group> corpus_order_le_8();

/// Lookup by the names above (plus z1 and s4); unknown names are rejected.
Group group_by_name(const std::string& name);

}  // namespace pentagon
