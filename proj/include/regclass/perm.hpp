#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace regclass {

using Point = std::uint16_t;
// Image list: p[i] is the image of point i.
using Perm = std::vector<Point>;

constexpr std::size_t kMaxDegree = 65536;

Perm identity_perm(std::size_t n);
bool is_identity(const Perm& p);
bool is_permutation(const Perm& p);
// Apply a first, then b.
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
// c^-1 x c
Perm conjugate(const Perm& x, const Perm& c);
Perm power(const Perm& p, std::int64_t k);
std::uint64_t perm_order(const Perm& p);
Point smallest_moved_point(const Perm& p);

Perm perm_from_cycles(std::size_t n, const std::vector<std::vector<unsigned>>& cycles);
std::string perm_to_string(const Perm& p);

}  // namespace regclass
