// SPDX-License-Identifier: Apache-2.0
#ifndef OPSLICER_PERM_HPP
#define OPSLICER_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace opslicer {

// A permutation of {1,...,n}, stored 0-based. Printed in cycle notation with
// 1-based points; the identity of any degree prints as 0.
//
// Products are read left to right: (a * b)(i) = b(a(i)). With this convention
// the left action on operad elements satisfies act(a, act(b, e)) = act(a * b, e).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);

  // images[i] is the 0-based image of i.
  static Perm from_images(std::vector<std::uint32_t> images);
  // images[i] is the 1-based image of i + 1.
  static Perm from_one_line(const std::vector<std::size_t>& images);
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles);
  // Accepts "0" or a product of disjoint cycles such as "(1 2)(3 4)".
  static Perm parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }
  std::vector<std::size_t> one_line() const;
  bool is_identity() const;
  Perm inverse() const;
  std::string to_string() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm& a, const Perm& b) { return a.images_ == b.images_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.images_ < b.images_; }

 private:
  std::vector<std::uint32_t> images_;
};

// All permutations of the given degree in lexicographic one-line order.
std::vector<Perm> all_perms(std::size_t degree);

// t1 + ... + tm acting on consecutive blocks.
Perm direct_sum(const std::vector<Perm>& parts);

// Moves source block i (of size sizes[i]) to target block position s(i),
// preserving the order inside each block.
Perm block_perm(const Perm& s, const std::vector<std::size_t>& sizes);

}  // namespace opslicer

#endif  // OPSLICER_PERM_HPP
