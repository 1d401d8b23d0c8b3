#pragma once

#include <string>
#include <vector>

#include "topoplan/geom.hpp"
#include "topoplan/presentation.hpp"
#include "topoplan/word.hpp"

namespace topo {

// Coordination space of N labelled robots moving in the plane; the deleted
// cylindrical sets are indexed by a robot pair m < p (1-based) plus one sign
// per robot strictly between them.
using JointConfig = std::vector<Vec2>;

// "u:m,p" for adjacent indices, "u:m,p/+-..." with the signs of robots
// m+1..p-1 otherwise.
std::string coord_letter_id(int m, int p, const std::string& sigma);

std::vector<std::string> enumerate_letters(int robots);

// Letters plus the relation words: for every m<n<p the hexagon loop around
// the triple intersection, the two partial-intersection loops, and
// commutators for fully disjoint index pairs.
Presentation coordination_presentation(int robots);

// True if some robot pair meets, swaps, or passes through each other during
// the simultaneous linear move a -> b (exact rational test on the relative
// displacement).
bool joint_move_collides(const JointConfig& a, const JointConfig& b);

// Crossing word of the joint move, letters ordered by crossing time. Ties
// are broken by a symbolic perturbation that shifts robot i by (i*eps,
// i*eps^2). Throws CollisionError on a colliding move.
Word edge_signature_coord(const JointConfig& a, const JointConfig& b);

Word path_signature_coord(const std::vector<JointConfig>& path);

}  // namespace topo
